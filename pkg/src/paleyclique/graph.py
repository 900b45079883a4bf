"""Dense Paley graph P(q^2) over canonical vertex indices."""

import numpy as np

from .errors import NotStronglyRegular
from .field import FieldCtx


class PaleyGraph:
    """P(q^2): vertices are field indices, edges are square differences.

    adj_bool is an n x n numpy boolean matrix; rows is a list of Python
    int bitmasks (bit j of rows[i] set iff i ~ j) used by the clique
    enumerator.
    """

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        n = ctx.n
        self.n = n
        self.second_size = (ctx.q + ctx.epsilon) // 2
        # difference table diff[i, j] = i - j; i ~ j iff log(diff) is even,
        # i.e. the canonical index of the difference is odd (idx = log + 1)
        neg = ctx.neg_table
        diff = ctx.add_table[:, neg]
        adj = (diff % 2).astype(bool) & (diff != 0)
        self.adj_bool = adj
        self.rows = []
        for i in range(n):
            mask = 0
            for j in np.flatnonzero(adj[i]):
                mask |= 1 << int(j)
            self.rows.append(mask)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj_bool[i, j])

    def degree(self, i: int) -> int:
        return int(self.adj_bool[i].sum())


def build_graph(ctx: FieldCtx) -> PaleyGraph:
    g = PaleyGraph(ctx)
    # structural self-checks: symmetry, irreflexivity, regularity
    a = g.adj_bool
    assert not a.diagonal().any()
    assert (a == a.T).all()
    degs = a.sum(axis=1)
    assert (degs == (ctx.n - 1) // 2).all()
    return g


def srg_parameters(graph: PaleyGraph):
    """(v, k, lambda, mu) by brute-force common-neighbor counts."""
    a = graph.adj_bool.astype(np.int64)
    n = graph.n
    common = a @ a
    degs = a.sum(axis=1)
    k = int(degs[0])
    if not (degs == k).all():
        raise NotStronglyRegular("graph is not regular")
    iu = np.triu_indices(n, k=1)
    adj_pairs = graph.adj_bool[iu]
    lam_vals = common[iu][adj_pairs]
    mu_vals = common[iu][~adj_pairs]
    if lam_vals.size == 0 or mu_vals.size == 0:
        raise NotStronglyRegular("degenerate graph")
    lam = int(lam_vals[0])
    mu = int(mu_vals[0])
    if not (lam_vals == lam).all():
        raise NotStronglyRegular("lambda varies across adjacent pairs")
    if not (mu_vals == mu).all():
        raise NotStronglyRegular("mu varies across non-adjacent pairs")
    return (n, k, lam, mu)


def subfield_clique(graph: PaleyGraph):
    """The subfield F_q as a clique of the maximum size q."""
    from .cliques import CliqueSet, is_clique

    verts = sorted(graph.ctx.subfield)
    assert len(verts) == graph.ctx.q
    assert is_clique(graph, verts)
    return CliqueSet(verts)
