"""Automorphism group: algebra, stabilizers, orbit classification."""

import random

import pytest

from paleyclique import (
    CliqueSet, NotClosed, NotPrimitive, apply, apply_to_clique, compose,
    construct, element_order, expand_orbit, group_order, identify_group,
    identity, invert, make_automorphism, stabilizer,
)
from paleyclique.group import orbit_generators, orbit_partition, vertex_perm

GROUP_ORDERS = {9: 12960, 11: 14520, 13: 28392, 17: 83232, 19: 129960,
                23: 279312}


@pytest.mark.parametrize("q", sorted(GROUP_ORDERS))
def test_group_orders(ctx_for, q):
    assert group_order(ctx_for(q)) == GROUP_ORDERS[q]


def _random_automorphism(ctx, rng):
    a = rng.randrange(1, ctx.n, 2)  # odd canonical index = square
    b = rng.randrange(ctx.n)
    v = rng.randrange(2 * ctx.m)
    return make_automorphism(ctx, a, b, v)


@pytest.mark.parametrize("q", (9, 13))
def test_compose_invert_apply_consistency(ctx_for, q):
    ctx = ctx_for(q)
    rng = random.Random(7)
    for _ in range(100):
        f = _random_automorphism(ctx, rng)
        g = _random_automorphism(ctx, rng)
        x = rng.randrange(ctx.n)
        assert apply(ctx, compose(ctx, f, g), x) == apply(ctx, f,
                                                          apply(ctx, g, x))
        assert compose(ctx, f, invert(ctx, f)) == identity(ctx)
        assert compose(ctx, invert(ctx, f), f) == identity(ctx)
        perm = vertex_perm(ctx, f)
        assert perm[x] == apply(ctx, f, x)


def test_nonsquare_multiplier_rejected(ctx_for):
    with pytest.raises(NotPrimitive):
        make_automorphism(ctx_for(13), 2, 0, 0)  # index 2 is a nonsquare


def test_full_group_closure_q9(ctx_for):
    # breadth-first closure from the generators recovers the whole group
    ctx = ctx_for(9)
    gens = orbit_generators(ctx)
    seen = {identity(ctx)}
    frontier = [identity(ctx)]
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(ctx, g, f)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    assert len(seen) == group_order(ctx)


def test_element_orders(ctx_for):
    ctx = ctx_for(13)
    assert element_order(ctx, identity(ctx)) == 1
    sigma = make_automorphism(ctx, ctx.embed(3), 0, 0)
    assert element_order(ctx, sigma) == 3
    shift = make_automorphism(ctx, ctx.one, ctx.one, 0)
    assert element_order(ctx, shift) == 13
    frob = make_automorphism(ctx, ctx.one, 0, 1)
    assert element_order(ctx, frob) == 2


def test_identify_group_labels(ctx_for):
    ctx = ctx_for(13)
    s3 = make_automorphism(ctx, ctx.embed(3), 0, 0)
    trans = make_automorphism(ctx, ctx.one, ctx.one, 0)
    ident = identity(ctx)

    assert identify_group(ctx, [ident]) == "Trivial"
    z3 = [ident, s3, compose(ctx, s3, s3)]
    assert identify_group(ctx, z3) == "Z3"
    z13 = [ident]
    for _ in range(12):
        z13.append(compose(ctx, trans, z13[-1]))
    assert identify_group(ctx, z13) == "Z13"


def test_stabilizer_of_subfield(ctx_for):
    # subfield stabilizer: orbit-stabilizer gives the q(q+1)/2 count of
    # maximum cliques
    ctx = ctx_for(9)
    sub = CliqueSet(ctx.subfield)
    stab = stabilizer(ctx, sub)
    assert group_order(ctx) // len(stab) == 9 * 10 // 2
    for f in stab:
        assert apply_to_clique(ctx, f, sub) == sub


def test_stabilizer_type_first_q13_clique(ctx_for):
    # the twisted generator's multiplier lies in the subfield-normed
    # kernel, every rotation multiplier is a subfield element fixed by
    # Frobenius, so the order-6 stabilizer is abelian: cyclic, not
    # dihedral
    ctx = ctx_for(13)
    c = construct(ctx, "C13A")
    stab = stabilizer(ctx, c)
    assert sorted(element_order(ctx, f) for f in stab) == [1, 2, 3, 3, 6, 6]
    for f in stab:
        for g in stab:
            assert compose(ctx, f, g) == compose(ctx, g, f)
    assert identify_group(ctx, stab) == "Z6"


def test_orbit_partition_q9(ctx_for, census_for, orbits_for):
    ctx = ctx_for(9)
    cen = census_for(9)
    recs = orbits_for(9)
    assert len(recs) == 3
    assert sum(r.orbit_size for r in recs) == cen["count"]
    for r in recs:
        assert r.orbit_size * r.stabilizer_order == group_order(ctx)


def test_orbit_partition_rejects_incomplete_census(ctx_for, census_for):
    ctx = ctx_for(9)
    partial = census_for(9)["cliques"][:100]
    with pytest.raises(NotClosed):
        orbit_partition(ctx, partial)


def test_expand_orbit_matches_orbit_stabilizer(ctx_for):
    ctx = ctx_for(11)
    c = construct(ctx, "C11")
    orbit = expand_orbit(ctx, c)
    assert len(orbit) == group_order(ctx) // len(stabilizer(ctx, c))
    assert tuple(c.vertices) in orbit
