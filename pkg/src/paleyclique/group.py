"""The automorphism group of P(q^2) and its action on cliques.

An automorphism is a triple (a, b, v) acting as gamma -> a * gamma^(p^v) + b
with a a nonzero square.  v counts applications of the p-power Frobenius,
so the map gamma -> gamma^q corresponds to v = m.
"""

import hashlib
from typing import NamedTuple

import numpy as np

from .cliques import CliqueSet
from .errors import NotAGroup, NotClosed, NotPrimitive
from .field import FieldCtx


class Automorphism(NamedTuple):
    a: int
    b: int
    v: int


def identity(ctx: FieldCtx) -> Automorphism:
    return Automorphism(ctx.one, 0, 0)


def make_automorphism(ctx: FieldCtx, a: int, b: int, v: int) -> Automorphism:
    if a == 0 or not ctx.is_square(a):
        raise NotPrimitive("multiplier must be a nonzero square")
    return Automorphism(a, b, v % (2 * ctx.m))


def group_order(ctx: FieldCtx) -> int:
    return (ctx.n - 1) // 2 * ctx.n * 2 * ctx.m


def apply(ctx: FieldCtx, aut: Automorphism, gamma: int) -> int:
    return ctx.add(ctx.mul(aut.a, ctx.frobenius(gamma, aut.v)), aut.b)


def apply_to_clique(ctx: FieldCtx, aut: Automorphism, c: CliqueSet) -> CliqueSet:
    return CliqueSet(apply(ctx, aut, g) for g in c)


def vertex_perm(ctx: FieldCtx, aut: Automorphism) -> np.ndarray:
    """The automorphism as a permutation array over all vertices."""
    frob = ctx.frob_table[aut.v % (2 * ctx.m)]
    la = aut.a - 1  # discrete log of the multiplier
    scaled = np.where(frob == 0, 0, ((frob - 1 + la) % (ctx.n - 1)) + 1)
    return ctx.add_table[scaled, aut.b]


def compose(ctx: FieldCtx, f: Automorphism, g: Automorphism) -> Automorphism:
    """compose(f, g) acts as f after g."""
    tm = 2 * ctx.m
    a = ctx.mul(f.a, ctx.frobenius(g.a, f.v))
    b = ctx.add(ctx.mul(f.a, ctx.frobenius(g.b, f.v)), f.b)
    return Automorphism(a, b, (f.v + g.v) % tm)


def invert(ctx: FieldCtx, f: Automorphism) -> Automorphism:
    tm = 2 * ctx.m
    v = (-f.v) % tm
    ai = ctx.frobenius(ctx.inv(f.a), v)
    b = ctx.neg(ctx.mul(ai, ctx.frobenius(f.b, v)))
    return Automorphism(ai, b, v)


def element_order(ctx: FieldCtx, f: Automorphism) -> int:
    e = identity(ctx)
    g = f
    k = 1
    while g != e:
        g = compose(ctx, g, f)
        k += 1
        if k > group_order(ctx):
            raise NotAGroup("element order exceeds group order")
    return k


def stabilizer(ctx: FieldCtx, c: CliqueSet) -> list:
    """All automorphisms fixing the clique setwise, by full group scan.

    Organized by (a, v) fibers: for fixed a and v the translation part
    must send the image of the first clique point onto some clique point,
    which leaves |c| candidates for b instead of q^2.
    """
    verts = list(c.vertices)
    vset = set(verts)
    first = verts[0]
    out = []
    for v in range(2 * ctx.m):
        frovs = [ctx.frobenius(g, v) for g in verts]
        for a in range(1, ctx.n, 2):  # odd indices are the squares
            imgs = [ctx.mul(a, fg) for fg in frovs]
            base = imgs[0]
            seen_b = set()
            for target in verts:
                b = ctx.sub(target, base)
                if b in seen_b:
                    continue
                seen_b.add(b)
                if all(ctx.add(img, b) in vset for img in imgs):
                    out.append(Automorphism(a, b, v))
    out.sort()
    return out


def _closure_check(ctx: FieldCtx, elements) -> None:
    elems = set(elements)
    if identity(ctx) not in elems:
        raise NotAGroup("missing identity")
    for f in elems:
        if invert(ctx, f) not in elems:
            raise NotAGroup("not closed under inversion")
        for g in elems:
            if compose(ctx, f, g) not in elems:
                raise NotAGroup("not closed under composition")


def identify_group(ctx: FieldCtx, elements) -> str:
    """Isomorphism label from the element-order profile.

    Handles exactly the group shapes arising as clique stabilizers here:
    Trivial, cyclic Z_n, Z2xZ2, and dihedral D_n with n the group ORDER.
    """
    elems = list(dict.fromkeys(elements))
    _closure_check(ctx, elems)
    n = len(elems)
    if n == 1:
        return "Trivial"
    orders = sorted(element_order(ctx, f) for f in elems)
    if orders[-1] == n:
        return "Z%d" % n
    involutions = orders.count(2)
    if n == 4 and involutions == 3:
        return "Z2xZ2"
    if n in (6, 8, 10) and involutions >= n // 2:
        # nonabelian with many involutions; Q8 has a unique involution
        return "D%d" % n
    return "Unknown(order=%d, orders=%r)" % (n, orders)


class OrbitRecord(NamedTuple):
    representative: CliqueSet
    orbit_size: int
    stabilizer_order: int
    stabilizer_type: str
    members_digest: str


def _digest(members) -> str:
    h = hashlib.sha256()
    for vs in sorted(members):
        h.update(repr(vs).encode())
    return h.hexdigest()


def orbit_generators(ctx: FieldCtx) -> list:
    """A generating set of Aut(P(q^2)): square multiplier, two
    translations, and the Frobenius."""
    beta_sq = ctx.mul(ctx.beta, ctx.beta)
    return [
        Automorphism(beta_sq, 0, 0),
        Automorphism(ctx.one, ctx.one, 0),
        Automorphism(ctx.one, ctx.alpha, 0),
        Automorphism(ctx.one, 0, 1),
    ]


def orbit_partition(ctx: FieldCtx, cliques) -> list:
    """Partition a clique census into automorphism orbits via union-find."""
    cl = [tuple(c.vertices) for c in cliques]
    index = {vs: i for i, vs in enumerate(cl)}
    if len(index) != len(cl):
        raise NotClosed("duplicate cliques in census")
    m = len(cl)
    if m == 0:
        return []
    arr = np.array(cl, dtype=np.int64)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for gen in orbit_generators(ctx):
        perm = vertex_perm(ctx, gen)
        images = np.sort(perm[arr], axis=1)
        for i in range(m):
            key = tuple(int(x) for x in images[i])
            j = index.get(key)
            if j is None:
                raise NotClosed("generator image missing from census")
            union(i, j)

    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    order = group_order(ctx)
    records = []
    for members in groups.values():
        rep_idx = min(members, key=lambda i: cl[i])
        rep = CliqueSet(cl[rep_idx])
        stab = stabilizer(ctx, rep)
        label = identify_group(ctx, stab)
        rec = OrbitRecord(rep, len(members), len(stab), label,
                          _digest(cl[i] for i in members))
        if rec.orbit_size * rec.stabilizer_order != order:
            raise NotAGroup("orbit-stabilizer identity failed")
        records.append(rec)
    records.sort(key=lambda r: r.representative.vertices)
    return records


def expand_orbit(ctx: FieldCtx, c: CliqueSet) -> set:
    """Full orbit of one clique by breadth-first closure under generators."""
    gens = [vertex_perm(ctx, g) for g in orbit_generators(ctx)]
    start = tuple(c.vertices)
    seen = {start}
    frontier = [np.array(start, dtype=np.int64)]
    while frontier:
        nxt = []
        for vs in frontier:
            for perm in gens:
                img = np.sort(perm[vs])
                key = tuple(int(x) for x in img)
                if key not in seen:
                    seen.add(key)
                    nxt.append(img)
        frontier = nxt
    return seen
