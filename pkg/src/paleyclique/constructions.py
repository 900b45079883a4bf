"""The 15 named second-largest maximal cliques and their verification.

Each catalog entry carries the explicit recipe, the named stabilizer
generators, the printed point-image tables for those generators, the
expected numeric data (size, stabilizer order and type, orbit size), the
extra collinear point sets, and a parameterized family that must coincide
with the full orbit of the representative.

Element expressions are either plain integers n (the subfield element n),
pairs (c, s) meaning c * (alpha + s), or callables taking the field
context (used for q = 9 where everything is written in powers of delta).
"""

from typing import NamedTuple

import numpy as np

from .cliques import CliqueSet, is_maximal_clique
from .errors import RecipeCollision, UnsupportedSize
from .field import FieldCtx, published_field, squares_and_s0
from .geometry import collinear_triples
from . import group

LABELS = ("C9", "C13A", "C13B", "C17A", "C17B", "C17C", "C17D", "C17E",
          "C17F", "C17G", "C11", "C19A", "C19B", "C23A", "C23B")


def _ev(ctx: FieldCtx, expr) -> int:
    if callable(expr):
        return expr(ctx)
    if isinstance(expr, tuple):
        c, s = expr
        return ctx.mul(ctx.embed(c), ctx.alpha_plus(s))
    return ctx.embed(expr)


class ConstructionSpec(NamedTuple):
    q: int
    label: str
    H: tuple          # expressions, or None when the recipe has no H
    pieces: tuple     # tuple of expression lists whose union is the clique
    generators: dict  # name -> (a_expr, b_expr, v)
    action_table: tuple  # rows (gamma_expr, {name: image_expr})
    remarks: tuple    # extra collinear point sets (expression tuples)
    expected: dict
    family: object    # callable(ctx) -> dict(count=..., multipliers=...,
                      #                       frob_exps=...)


def _squares(ctx):
    return list(range(1, ctx.n, 2))


def _s0_members(ctx):
    return sorted(squares_and_s0(ctx).S0)


def _d(k):
    # delta^k, for the q = 9 entry
    return lambda ctx: ctx.delta_pow(k)


def _ad(k):
    # alpha + delta^k
    return lambda ctx: ctx.add(ctx.alpha, ctx.delta_pow(k))


def _dad(j, k):
    # delta^j * (alpha + delta^k)
    return lambda ctx: ctx.mul(ctx.delta_pow(j), ctx.add(ctx.alpha,
                                                         ctx.delta_pow(k)))


def _ca(c):
    # c * alpha
    return lambda ctx: ctx.mul(ctx.embed(c), ctx.alpha)


def _fam_scaled(mult_fn, frob_exps=(0,)):
    def fam(ctx):
        return {"multipliers": mult_fn(ctx), "frob_exps": frob_exps}
    return fam


def _mults_s0_powers(power_range):
    def fn(ctx):
        s0 = _s0_members(ctx)
        return [ctx.mul(s, ctx.delta_pow(i)) for s in s0
                for i in power_range]
    return fn


def _mults_s0_ints(int_range):
    def fn(ctx):
        s0 = _s0_members(ctx)
        return [ctx.mul(s, ctx.embed(i)) for s in s0 for i in int_range]
    return fn


def _mults_units_eta(eta_exprs):
    def fn(ctx):
        etas = [_ev(ctx, e) for e in eta_exprs]
        return [ctx.mul(ctx.embed(s), eta) for s in range(1, ctx.q)
                for eta in etas]
    return fn


def _mults_half_units_eta(eta_exprs):
    def fn(ctx):
        etas = [_ev(ctx, e) for e in eta_exprs]
        return [ctx.mul(ctx.embed(s), eta)
                for s in range(1, (ctx.q - 1) // 2 + 1) for eta in etas]
    return fn


_CATALOG = {}


def _register(spec: ConstructionSpec):
    _CATALOG[spec.label] = spec


_register(ConstructionSpec(
    q=9, label="C9",
    H=(1, _d(1)),
    pieces=([0], [1, _d(1)], [_ad(5), _dad(1, 5)]),
    generators={"phi'": (_ad(5), 0, 2)},
    action_table=(
        (0, {"phi'": 0}),
        (1, {"phi'": _ad(5)}),
        (_d(1), {"phi'": _dad(1, 5)}),
        (_ad(5), {"phi'": 1}),
        (_dad(1, 5), {"phi'": _d(1)}),
    ),
    remarks=(),
    expected={"size": 5, "stabilizer_order": 2, "stabilizer_type": "Z2",
              "orbit_size": 6480},
    family=_fam_scaled(lambda ctx: _squares(ctx), frob_exps=(0, 1)),
))

_register(ConstructionSpec(
    q=13, label="C13A",
    H=(9, 3, 1),
    pieces=([0], [9, 3, 1], [(9, 8), (3, 8), (1, 8)]),
    generators={"sigma": (3, 0, 0), "tau": ((1, 8), 0, 1)},
    action_table=(
        (0, {"sigma": 0, "tau": 0}),
        (1, {"sigma": 3, "tau": (1, 8)}),
        (3, {"sigma": 9, "tau": (3, 8)}),
        (9, {"sigma": 1, "tau": (9, 8)}),
        ((1, 8), {"sigma": (3, 8), "tau": 1}),
        ((3, 8), {"sigma": (9, 8), "tau": 3}),
        ((9, 8), {"sigma": (1, 8), "tau": 9}),
    ),
    remarks=(),
    expected={"size": 7, "stabilizer_order": 6, "stabilizer_type": "Z6",
              "orbit_size": 4732},
    family=_fam_scaled(_mults_s0_powers(range(4))),
))

_register(ConstructionSpec(
    q=13, label="C13B",
    H=(1, 3, 4),
    pieces=([0], [1, 3, 4], [(7, 1), (2, 1), (7, 7)]),
    generators={"phi'": (12, 4, 1)},
    action_table=(
        (0, {"phi'": 4}),
        (1, {"phi'": 3}),
        (3, {"phi'": 1}),
        (4, {"phi'": 0}),
        ((7, 1), {"phi'": (7, 7)}),
        ((2, 1), {"phi'": (2, 1)}),
        ((7, 7), {"phi'": (7, 1)}),
    ),
    remarks=(),
    expected={"size": 7, "stabilizer_order": 2, "stabilizer_type": "Z2",
              "orbit_size": 14196},
    family=_fam_scaled(_squares),
))

_register(ConstructionSpec(
    q=17, label="C17A",
    H=(4, 16, 13, 1),
    pieces=([0], [4, 16, 13, 1],
            [(4, 7), (16, 7), (13, 7), (1, 7)]),
    generators={"sigma": ((1, 7), 0, 1)},
    action_table=(
        (0, {"sigma": 0}),
        (1, {"sigma": (1, 7)}),
        (4, {"sigma": (4, 7)}),
        (16, {"sigma": (16, 7)}),
        (13, {"sigma": (13, 7)}),
        ((1, 7), {"sigma": 4}),
        ((4, 7), {"sigma": 16}),
        ((16, 7), {"sigma": 13}),
        ((13, 7), {"sigma": 1}),
    ),
    remarks=(),
    expected={"size": 9, "stabilizer_order": 8, "stabilizer_type": "Z8",
              "orbit_size": 10404},
    family=_fam_scaled(_mults_s0_powers(range(4))),
))

_register(ConstructionSpec(
    q=17, label="C17B",
    H=(1, 4, 5),
    pieces=([0], [1, 4, 5], [(10, 6), (6, 6), (16, 6)],
            [(10, 3)], [(6, 9)]),
    generators={"sigma": ((10, 11), 5, 0), "tau": ((10, 6), 0, 1)},
    action_table=(
        (0, {"sigma": 5, "tau": 0}),
        (1, {"sigma": (10, 3), "tau": (10, 6)}),
        (4, {"sigma": (6, 9), "tau": (6, 6)}),
        (5, {"sigma": (16, 6), "tau": (16, 6)}),
        ((10, 6), {"sigma": 4, "tau": 1}),
        ((6, 6), {"sigma": 1, "tau": 4}),
        ((16, 6), {"sigma": 0, "tau": 5}),
        ((10, 3), {"sigma": (6, 6), "tau": (6, 9)}),
        ((6, 9), {"sigma": (10, 6), "tau": (10, 3)}),
    ),
    remarks=(),
    expected={"size": 9, "stabilizer_order": 6, "stabilizer_type": "D6",
              "orbit_size": 13872},
    family=_fam_scaled(_squares),
))

_register(ConstructionSpec(
    q=17, label="C17C",
    H=(4, 16, 13, 1),
    pieces=([0], [4, 16, 13, 1], [(1, 7), (4, 7)], [(1, 10), (4, 10)]),
    generators={"phi'": (16, 0, 1)},
    action_table=(
        (0, {"phi'": 0}),
        (1, {"phi'": 16}),
        (4, {"phi'": 13}),
        (16, {"phi'": 1}),
        (13, {"phi'": 4}),
        ((1, 7), {"phi'": (1, 10)}),
        ((4, 7), {"phi'": (4, 10)}),
        ((1, 10), {"phi'": (1, 7)}),
        ((4, 10), {"phi'": (4, 7)}),
    ),
    remarks=(),
    expected={"size": 9, "stabilizer_order": 2, "stabilizer_type": "Z2",
              "orbit_size": 41616},
    family=_fam_scaled(_squares),
))

_register(ConstructionSpec(
    q=17, label="C17D",
    H=(4, 16, 13, 1),
    pieces=([0], [4, 16, 13, 1], [(1, 7), (16, 7)], [(4, 10), (13, 10)]),
    generators={"sigma": (4, 0, 1)},
    action_table=(
        (0, {"sigma": 0}),
        (1, {"sigma": 4}),
        (4, {"sigma": 16}),
        (16, {"sigma": 13}),
        (13, {"sigma": 1}),
        ((1, 7), {"sigma": (13, 10)}),
        ((16, 7), {"sigma": (4, 10)}),
        ((4, 10), {"sigma": (1, 7)}),
        ((13, 10), {"sigma": (16, 7)}),
    ),
    remarks=(
        (1, (1, 7), (13, 10)),
        (16, (4, 10), (16, 7)),
    ),
    expected={"size": 9, "stabilizer_order": 4, "stabilizer_type": "Z4",
              "orbit_size": 20808},
    family=_fam_scaled(_mults_s0_powers(range(1, 9))),
))

_register(ConstructionSpec(
    q=17, label="C17E",
    H=(4, 16, 13, 1),
    pieces=([0], [4, 16, 13, 1], [(1, 7), (4, 7), (16, 7)], [(4, 10)]),
    generators={},
    action_table=(),
    remarks=(),
    expected={"size": 9, "stabilizer_order": 1, "stabilizer_type": "Trivial",
              "orbit_size": 83232},
    family=_fam_scaled(_squares, frob_exps=(0, 1)),
))

_register(ConstructionSpec(
    q=17, label="C17F",
    H=(1, 4, 16),
    pieces=([0], [1, 4, 16], [(1, 7), (4, 7)], [(1, 10), (4, 10)],
            [(11, 11)]),
    generators={"phi'": ((10, 6), (11, 11), 1)},
    action_table=(
        (0, {"phi'": (11, 11)}),
        (1, {"phi'": (4, 7)}),
        (4, {"phi'": 4}),
        (16, {"phi'": (1, 10)}),
        ((1, 7), {"phi'": (4, 10)}),
        ((4, 7), {"phi'": 1}),
        ((1, 10), {"phi'": 16}),
        ((4, 10), {"phi'": (1, 7)}),
        ((11, 11), {"phi'": 0}),
    ),
    remarks=(),
    expected={"size": 9, "stabilizer_order": 2, "stabilizer_type": "Z2",
              "orbit_size": 41616},
    family=_fam_scaled(_squares),
))

_register(ConstructionSpec(
    q=17, label="C17G",
    H=None,
    pieces=([0], [1, 16], [(1, 7), (4, 7)], [(1, 10), (4, 10)],
            [(11, 11)], [(11, 6)]),
    generators={"sigma": ((7, 6), (11, 11), 0),
                "tau": ((7, 11), (11, 6), 1)},
    action_table=(
        (0, {"sigma": (11, 11), "tau": (11, 6)}),
        (1, {"sigma": (1, 10), "tau": (1, 7)}),
        (16, {"sigma": (4, 7), "tau": (4, 10)}),
        ((1, 7), {"sigma": 16, "tau": 1}),
        ((4, 7), {"sigma": (1, 7), "tau": (1, 10)}),
        ((1, 10), {"sigma": (4, 10), "tau": (4, 7)}),
        ((4, 10), {"sigma": 1, "tau": 16}),
        ((11, 6), {"sigma": 0, "tau": 0}),
        ((11, 11), {"sigma": (11, 6), "tau": (11, 11)}),
    ),
    remarks=(
        (0, (1, 10), (4, 10)),
        (0, (1, 7), (4, 7)),
    ),
    expected={"size": 9, "stabilizer_order": 6, "stabilizer_type": "D6",
              "orbit_size": 13872},
    family=_fam_scaled(_squares),
))

_register(ConstructionSpec(
    q=11, label="C11",
    H=(1, 9),
    pieces=([0], [1, 9], [(1, 5), (9, 5)], [(10, 6), (2, 6)]),
    generators={"sigma": ((1, 5), 0, 0), "tau": ((1, 5), 0, 1)},
    action_table=(
        (0, {"sigma": 0, "tau": 0}),
        (1, {"sigma": (1, 5), "tau": (1, 5)}),
        (9, {"sigma": (9, 5), "tau": (9, 5)}),
        ((1, 5), {"sigma": (10, 6), "tau": 1}),
        ((9, 5), {"sigma": (2, 6), "tau": 9}),
        ((2, 6), {"sigma": 9, "tau": (2, 6)}),
        ((10, 6), {"sigma": 1, "tau": (10, 6)}),
    ),
    remarks=(),
    expected={"size": 7, "stabilizer_order": 6, "stabilizer_type": "D6",
              "orbit_size": 2420},
    family=_fam_scaled(_mults_units_eta([1, _ca(1)])),
))

_register(ConstructionSpec(
    q=19, label="C19A",
    H=(1, 18),
    pieces=([0], [1, 18], [3, 16], [_ca(9), _ca(10)],
            [(1, 3), (18, 3)], [(1, 16), (18, 16)]),
    generators={"sigma": (18, 0, 0), "tau": (1, 0, 1)},
    action_table=(
        (0, {"sigma": 0, "tau": 0}),
        (1, {"sigma": 18, "tau": 1}),
        (18, {"sigma": 1, "tau": 18}),
        (3, {"sigma": 16, "tau": 3}),
        (16, {"sigma": 3, "tau": 16}),
        (_ca(9), {"sigma": _ca(10), "tau": _ca(10)}),
        (_ca(10), {"sigma": _ca(9), "tau": _ca(9)}),
        ((1, 3), {"sigma": (18, 3), "tau": (18, 16)}),
        ((18, 3), {"sigma": (1, 3), "tau": (1, 16)}),
        ((1, 16), {"sigma": (18, 16), "tau": (18, 3)}),
        ((18, 16), {"sigma": (1, 16), "tau": (1, 3)}),
    ),
    remarks=(
        (3, _ca(10), (1, 16)),
        (3, _ca(9), (18, 3)),
        (16, _ca(10), (1, 3)),
        (16, _ca(9), (18, 16)),
    ),
    expected={"size": 11, "stabilizer_order": 4, "stabilizer_type": "Z2xZ2",
              "orbit_size": 32490},
    family=_fam_scaled(_mults_s0_ints(range(1, 10))),
))

_register(ConstructionSpec(
    q=19, label="C19B",
    H=(1, 3),
    pieces=([0], [1, 3], [(2, 13), (6, 13)], [(17, 6), (13, 6)],
            [(9, 15), (8, 15)], [(10, 4), (11, 4)]),
    generators={"sigma": ((10, 4), 0, 0), "tau": ((10, 4), 0, 1)},
    action_table=(
        (0, {"sigma": 0, "tau": 0}),
        (1, {"sigma": (10, 4), "tau": (10, 4)}),
        (3, {"sigma": (11, 4), "tau": (11, 4)}),
        ((6, 13), {"sigma": (13, 6), "tau": (8, 15)}),
        ((2, 13), {"sigma": (17, 6), "tau": (9, 15)}),
        ((13, 6), {"sigma": (8, 15), "tau": (13, 6)}),
        ((17, 6), {"sigma": (9, 15), "tau": (17, 6)}),
        ((10, 4), {"sigma": (2, 13), "tau": 1}),
        ((11, 4), {"sigma": (6, 13), "tau": 3}),
        ((9, 15), {"sigma": 1, "tau": (2, 13)}),
        ((8, 15), {"sigma": 3, "tau": (6, 13)}),
    ),
    remarks=(
        (1, (13, 6), (2, 13), (8, 15)),
        (1, (6, 13), (17, 6), (11, 4)),
        (3, (11, 4), (9, 15), (2, 13)),
        (3, (8, 15), (10, 4), (17, 6)),
    ),
    expected={"size": 11, "stabilizer_order": 10, "stabilizer_type": "D10",
              "orbit_size": 12996},
    family=_fam_scaled(_mults_units_eta([1, _ca(1)])),
))

_register(ConstructionSpec(
    q=23, label="C23A",
    H=(1, 3, 5, 17),
    pieces=([0], [1, 3, 5, 17],
            [(17, 2), (5, 2), (16, 2), (13, 2)],
            [(6, 21), (18, 21), (7, 21), (10, 21)]),
    generators={"sigma": ((6, 21), 0, 0), "tau": ((6, 21), 0, 1)},
    action_table=(
        (0, {"sigma": 0, "tau": 0}),
        (1, {"sigma": (6, 21), "tau": (6, 21)}),
        (3, {"sigma": (18, 21), "tau": (18, 21)}),
        (5, {"sigma": (7, 21), "tau": (7, 21)}),
        (17, {"sigma": (10, 21), "tau": (10, 21)}),
        ((17, 2), {"sigma": 1, "tau": (17, 2)}),
        ((5, 2), {"sigma": 3, "tau": (5, 2)}),
        ((16, 2), {"sigma": 5, "tau": (16, 2)}),
        ((13, 2), {"sigma": 17, "tau": (13, 2)}),
        ((6, 21), {"sigma": (17, 2), "tau": 1}),
        ((18, 21), {"sigma": (5, 2), "tau": 3}),
        ((7, 21), {"sigma": (16, 2), "tau": 5}),
        ((10, 21), {"sigma": (13, 2), "tau": 17}),
    ),
    remarks=(
        (1, (18, 21), (16, 2)),
        (1, (7, 21), (5, 2)),
        (3, (6, 21), (16, 2)),
        (3, (7, 21), (17, 2)),
        (3, (10, 21), (13, 2)),
        (5, (6, 21), (5, 2)),
        (5, (18, 21), (17, 2)),
        (17, (18, 21), (13, 2)),
        (17, (10, 21), (5, 2)),
    ),
    expected={"size": 13, "stabilizer_order": 6, "stabilizer_type": "D6",
              "orbit_size": 46552},
    family=_fam_scaled(_mults_units_eta([1, _ca(1), (1, 1), (1, 22)])),
))

_register(ConstructionSpec(
    q=23, label="C23B",
    H=(1, 22),
    pieces=([0], [9, 14], [_ca(1), _ca(22)],
            [(3, 9), (20, 9), (4, 9), (19, 9)],
            [(3, 14), (20, 14), (4, 14), (19, 14)]),
    generators={"sigma": (_ca(18), 0, 0), "tau": (1, 0, 1)},
    action_table=(
        (0, {"sigma": 0, "tau": 0}),
        (9, {"sigma": _ca(1), "tau": 9}),
        (14, {"sigma": _ca(22), "tau": 14}),
        (_ca(1), {"sigma": 14, "tau": _ca(22)}),
        (_ca(22), {"sigma": 9, "tau": _ca(1)}),
        ((3, 9), {"sigma": (3, 14), "tau": (20, 14)}),
        ((20, 9), {"sigma": (20, 14), "tau": (3, 14)}),
        ((4, 9), {"sigma": (4, 14), "tau": (19, 14)}),
        ((19, 9), {"sigma": (19, 14), "tau": (4, 14)}),
        ((3, 14), {"sigma": (20, 9), "tau": (20, 9)}),
        ((20, 14), {"sigma": (3, 9), "tau": (3, 9)}),
        ((4, 14), {"sigma": (19, 9), "tau": (19, 9)}),
        ((19, 14), {"sigma": (4, 9), "tau": (4, 9)}),
    ),
    remarks=(
        (9, (3, 9), (4, 14)),
        (9, (19, 9), (20, 14)),
        (14, (20, 9), (19, 14)),
        (14, (4, 9), (3, 14)),
        (_ca(1), (3, 9), (19, 14)),
        (_ca(1), (19, 9), (3, 14)),
        (_ca(22), (20, 9), (4, 14)),
        (_ca(22), (4, 9), (20, 14)),
    ),
    expected={"size": 13, "stabilizer_order": 8, "stabilizer_type": "D8",
              "orbit_size": 34914},
    family=_fam_scaled(_mults_half_units_eta(
        [1, (1, 1), (1, 22), (1, 2), (1, 21), (1, 9)])),
))


def labels_for_q(q: int):
    return [lb for lb in LABELS if _CATALOG[lb].q == q]


def get_spec(label: str) -> ConstructionSpec:
    if label not in _CATALOG:
        raise UnsupportedSize("unknown construction %r" % (label,))
    return _CATALOG[label]


def construct(ctx: FieldCtx, label: str) -> CliqueSet:
    """Evaluate the recipe; the pieces must be pairwise disjoint."""
    spec = get_spec(label)
    if ctx.q != spec.q:
        raise UnsupportedSize("construction %s needs q=%d" % (label, spec.q))
    verts = []
    for piece in spec.pieces:
        verts.extend(_ev(ctx, e) for e in piece)
    if len(set(verts)) != len(verts):
        raise RecipeCollision("recipe pieces of %s overlap" % (label,))
    c = CliqueSet(verts)
    assert c.size == spec.expected["size"]
    return c


def named_generators(ctx: FieldCtx, label: str) -> dict:
    spec = get_spec(label)
    return {
        name: group.make_automorphism(ctx, _ev(ctx, a), _ev(ctx, b), v)
        for name, (a, b, v) in spec.generators.items()
    }


def replay_action_tables(ctx: FieldCtx, label: str) -> bool:
    """Check each printed point-image row under the named generators."""
    spec = get_spec(label)
    gens = named_generators(ctx, label)
    for gamma_expr, images in spec.action_table:
        gamma = _ev(ctx, gamma_expr)
        for name, img_expr in images.items():
            if group.apply(ctx, gens[name], gamma) != _ev(ctx, img_expr):
                return False
    return True


def remark_sets(ctx: FieldCtx, label: str) -> list:
    spec = get_spec(label)
    return [frozenset(_ev(ctx, e) for e in trip) for trip in spec.remarks]


def clique_family(ctx: FieldCtx, label: str) -> set:
    """The parameterized orbit family as a set of sorted vertex tuples."""
    spec = get_spec(label)
    base = np.array(sorted(construct(ctx, label).vertices), dtype=np.int64)
    params = spec.family(ctx)
    out = set()
    n = ctx.n
    for v in params["frob_exps"]:
        fx = ctx.frob_table[v][base]
        for s in params["multipliers"]:
            ls = s - 1
            sx = np.where(fx == 0, 0, ((fx - 1 + ls) % (n - 1)) + 1)
            shifted = ctx.add_table[sx].astype(np.int64)  # cols: one per gamma
            for col in np.sort(shifted, axis=0).T:
                out.add(col.tobytes())
    return out


def verify_construction(ctx: FieldCtx, graph, label: str,
                        check_family: bool = True) -> dict:
    """Recompute every claim attached to one named construction."""
    spec = get_spec(label)
    c = construct(ctx, label)
    stab = group.stabilizer(ctx, c)
    stab_type = group.identify_group(ctx, stab)
    order = group.group_order(ctx)
    orbit_size = order // len(stab)
    gens = named_generators(ctx, label)
    gens_in_stab = all(g in stab for g in gens.values())
    collinear = [frozenset(hit) for _, hit in collinear_triples(ctx, c)]
    remarks_ok = all(r in collinear for r in remark_sets(ctx, label))
    report = {
        "q": spec.q,
        "label": label,
        "size": c.size,
        "is_maximal_clique": is_maximal_clique(graph, c.vertices),
        "stabilizer_order": len(stab),
        "stabilizer_type": stab_type,
        "orbit_size_via_orbit_stabilizer": orbit_size,
        "named_generators_fix_clique": gens_in_stab,
        "action_tables_replay": replay_action_tables(ctx, label),
        "collinear_remarks_match": remarks_ok,
        "collinear_structure": sorted(sorted(s) for s in collinear),
    }
    if check_family:
        fam = clique_family(ctx, label)
        orbit = {np.array(vs, dtype=np.int64).tobytes()
                 for vs in group.expand_orbit(ctx, c)}
        report["family_matches_orbit"] = (
            len(fam) == orbit_size and fam == orbit)
    exp = spec.expected
    report["all_match_expected"] = (
        report["is_maximal_clique"]
        and report["size"] == exp["size"]
        and report["stabilizer_order"] == exp["stabilizer_order"]
        and report["stabilizer_type"] == exp["stabilizer_type"]
        and report["orbit_size_via_orbit_stabilizer"] == exp["orbit_size"]
        and report["named_generators_fix_clique"]
        and report["action_tables_replay"]
        and report["collinear_remarks_match"]
        and report.get("family_matches_orbit", True)
    )
    return report


def verify_all_for_q(q: int, check_family: bool = True):
    from .graph import build_graph

    ctx = published_field(q)
    graph = build_graph(ctx)
    return [verify_construction(ctx, graph, lb, check_family=check_family)
            for lb in labels_for_q(q)]
