"""Affine geometry over F_{q^2}: lines, slopes, collinearity."""

import pytest

from paleyclique import (
    DegeneratePair, ZeroHasNoClass, all_lines, collinear_triples,
    direction_class, direction_class_reps, is_quadratic, line_through,
    lines_through_point,
)


@pytest.mark.parametrize("q", (9, 13))
def test_line_counts(ctx_for, q):
    ctx = ctx_for(q)
    lines = all_lines(ctx)
    assert len(lines) == q * (q + 1)
    assert all(len(ln.points) == q for ln in lines)
    # each pair of distinct points lies on exactly one line
    total_pairs = sum(q * (q - 1) // 2 for _ in lines)
    assert total_pairs == ctx.n * (ctx.n - 1) // 2


@pytest.mark.parametrize("q", (9, 11, 13))
def test_lines_through_point(ctx_for, q):
    ctx = ctx_for(q)
    for p in (0, 1, ctx.alpha):
        lines, counts = lines_through_point(ctx, p)
        assert counts["total"] == q + 1
        assert counts["quadratic"] == (q + 1) // 2
        assert counts["non_quadratic"] == q + 1 - (q + 1) // 2
        assert len(lines) == q + 1
        assert all(p in ln.points for ln in lines)


def test_direction_classes(ctx_for):
    ctx = ctx_for(13)
    reps = direction_class_reps(ctx)
    assert len(reps) == ctx.q + 1
    # a slope and any F_q^* multiple of it share a class
    s = ctx.alpha
    for u in ctx.subfield_star:
        assert direction_class(ctx, ctx.mul(u, s)) == direction_class(ctx, s)
    with pytest.raises(ZeroHasNoClass):
        direction_class(ctx, 0)


def test_line_through_and_degenerate(ctx_for):
    ctx = ctx_for(13)
    ln = line_through(ctx, 0, ctx.one)
    assert ln.points == frozenset(ctx.subfield)
    with pytest.raises(DegeneratePair):
        line_through(ctx, 5, 5)


@pytest.mark.parametrize("q", (9, 13))
def test_adjacency_iff_quadratic_line(ctx_for, graph_for, q):
    ctx = ctx_for(q)
    graph = graph_for(q)
    for a in range(0, ctx.n, 5):
        for b in range(a + 1, ctx.n, 7):
            ln = line_through(ctx, a, b)
            assert graph.adjacent(a, b) == is_quadratic(ctx, ln)


def test_collinear_triples_on_subfield(ctx_for):
    ctx = ctx_for(13)
    hits = collinear_triples(ctx, ctx.subfield)
    assert len(hits) == 1
    line, pts = hits[0]
    assert frozenset(pts) == frozenset(ctx.subfield) == line.points


def test_collinear_triples_generic(ctx_for):
    # 3 collinear points plus one off the line: exactly one hit of size 3
    ctx = ctx_for(13)
    pts = [0, ctx.embed(1), ctx.embed(2)]
    hits = collinear_triples(ctx, pts + [ctx.alpha])
    assert len(hits) == 1
    assert frozenset(hits[0][1]) == frozenset(pts)
