"""Affine plane AG(2, q) viewed inside the quadratic extension field.

Points are canonical field indices.  A line is the set of q points
base + c*slope with c running over the subfield.  The q+1 direction
classes are the cosets slope * F_q^*; each class is represented by its
smallest member index so that two lines with the same point set always
compare equal.
"""

from .errors import DegeneratePair, ZeroHasNoClass
from .field import FieldCtx


class Line:
    """A line of AG(2, q), canonicalized."""

    __slots__ = ("base", "slope", "points", "slope_class_id")

    def __init__(self, ctx: FieldCtx, base: int, slope: int):
        if slope == 0:
            raise DegeneratePair("slope must be nonzero")
        pts = frozenset(ctx.add(base, ctx.mul(c, slope)) for c in ctx.subfield)
        self.points = pts
        self.base = min(pts)
        self.slope_class_id = direction_class(ctx, slope)
        self.slope = self.slope_class_id

    def __eq__(self, other):
        return isinstance(other, Line) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, v):
        return v in self.points

    def __repr__(self):
        return "Line(base=%d, slope=%d)" % (self.base, self.slope)

    def sorted_points(self):
        return sorted(self.points)


def direction_class(ctx: FieldCtx, slope: int) -> int:
    """Smallest index in the coset slope * F_q^*."""
    if slope == 0:
        raise ZeroHasNoClass("zero has no direction")
    return min(ctx.mul(slope, c) for c in ctx.subfield_star)


def direction_class_reps(ctx: FieldCtx) -> list:
    """The q+1 direction class representatives, sorted."""
    reps = set()
    for e in range(1, ctx.n):
        reps.add(direction_class(ctx, e))
        if len(reps) == ctx.q + 1:
            break
    return sorted(reps)


def line_through(ctx: FieldCtx, a: int, b: int) -> Line:
    """The unique line of AG(2, q) through two distinct points."""
    if a == b:
        raise DegeneratePair("need two distinct points")
    return Line(ctx, a, ctx.sub(b, a))


def is_quadratic(ctx: FieldCtx, line: Line) -> bool:
    """True iff the line's slope is a square of the extension field.

    Well defined on the direction class: every subfield unit is a square,
    so all representatives of slope * F_q^* share one square class.
    """
    return ctx.is_square(line.slope)


def lines_through_point(ctx: FieldCtx, p: int):
    """All lines through p with (total, quadratic, nonquadratic) counts."""
    lines = [Line(ctx, p, rep) for rep in direction_class_reps(ctx)]
    nquad = sum(1 for l in lines if is_quadratic(ctx, l))
    counts = {
        "total": len(lines),
        "quadratic": nquad,
        "non_quadratic": len(lines) - nquad,
    }
    return lines, counts


def all_lines(ctx: FieldCtx) -> set:
    """Every line of AG(2, q); there are q(q+1) of them."""
    lines = set()
    for rep in direction_class_reps(ctx):
        covered = set()
        for p in range(ctx.n):
            if p in covered:
                continue
            line = Line(ctx, p, rep)
            covered |= line.points
            lines.add(line)
    return lines


def collinear_triples(ctx: FieldCtx, vertices) -> list:
    """Lines meeting the vertex set in at least three points.

    Returns (line, sorted intersection) pairs in a deterministic order.
    """
    verts = sorted(set(vertices))
    if len(verts) < 3:
        raise DegeneratePair("need at least three vertices")
    seen = {}
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            line = line_through(ctx, a, b)
            key = line.points
            if key not in seen:
                seen[key] = line
    out = []
    vset = set(verts)
    for line in seen.values():
        hit = sorted(line.points & vset)
        if len(hit) >= 3:
            out.append((line, hit))
    out.sort(key=lambda pair: pair[1])
    return out
