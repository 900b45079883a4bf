"""Named constructions: recipes, printed tables, stabilizers, families."""

import pytest

from paleyclique import (
    LABELS, UnsupportedSize, clique_family, construct, expand_orbit,
    get_spec, is_maximal_clique, labels_for_q, named_generators,
    replay_action_tables, stabilizer, verify_construction,
)
from paleyclique.constructions import remark_sets
from paleyclique.geometry import collinear_triples


def test_catalog_covers_all_qs():
    assert len(LABELS) == 15
    assert {get_spec(lb).q for lb in LABELS} == {9, 11, 13, 17, 19, 23}
    assert labels_for_q(17) == ["C17A", "C17B", "C17C", "C17D", "C17E",
                                "C17F", "C17G"]


@pytest.mark.parametrize("label", LABELS)
def test_recipe_is_maximal_clique_of_stated_size(ctx_for, graph_for, label):
    spec = get_spec(label)
    ctx = ctx_for(spec.q)
    c = construct(ctx, label)
    assert c.size == spec.expected["size"] == (spec.q + ctx.epsilon) // 2
    assert is_maximal_clique(graph_for(spec.q), c.vertices)


@pytest.mark.parametrize("label", LABELS)
def test_printed_action_tables_replay(ctx_for, label):
    assert replay_action_tables(ctx_for(get_spec(label).q), label)


@pytest.mark.parametrize("label", LABELS)
def test_named_generators_stabilize(ctx_for, label):
    spec = get_spec(label)
    ctx = ctx_for(spec.q)
    stab = stabilizer(ctx, construct(ctx, label))
    assert len(stab) == spec.expected["stabilizer_order"]
    for g in named_generators(ctx, label).values():
        assert g in stab


@pytest.mark.parametrize("label",
                         ("C17D", "C17G", "C19A", "C19B", "C23A", "C23B"))
def test_remark_collinear_sets(ctx_for, label):
    spec = get_spec(label)
    ctx = ctx_for(spec.q)
    c = construct(ctx, label)
    computed = {frozenset(hit) for _, hit in collinear_triples(ctx, c)}
    for want in remark_sets(ctx, label):
        assert want in computed


@pytest.mark.parametrize("label", ("C9", "C11", "C13A", "C13B"))
def test_family_equals_orbit_small_q(ctx_for, label):
    import numpy as np

    spec = get_spec(label)
    ctx = ctx_for(spec.q)
    fam = clique_family(ctx, label)
    orbit = {np.array(vs, dtype=np.int64).tobytes()
             for vs in expand_orbit(ctx, construct(ctx, label))}
    assert len(fam) == spec.expected["orbit_size"]
    assert fam == orbit


@pytest.mark.parametrize("q", (9, 11, 13))
def test_full_verification_small_q(ctx_for, graph_for, q):
    for label in labels_for_q(q):
        rep = verify_construction(ctx_for(q), graph_for(q), label)
        assert rep["all_match_expected"], rep


def test_wrong_q_and_unknown_label(ctx_for):
    with pytest.raises(UnsupportedSize):
        construct(ctx_for(13), "C9")
    with pytest.raises(UnsupportedSize):
        get_spec("C7A")


def test_distinct_orbits_per_q(ctx_for):
    # the named representatives for one q never share an orbit: their
    # stabilizer data plus a direct membership check separate them
    import numpy as np

    ctx = ctx_for(17)
    orbits = []
    for label in labels_for_q(17):
        c = construct(ctx, label)
        orbits.append((label, expand_orbit(ctx, c)))
    for i, (la, oa) in enumerate(orbits):
        for lb, ob in orbits[i + 1:]:
            assert not (oa & ob), (la, lb)
