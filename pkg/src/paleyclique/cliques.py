"""Maximal clique enumeration and the second-largest-size census.

The enumerator is Bron-Kerbosch with greedy pivoting over Python int
bitmasks.  A sound size prune (|R| + |P| < min_size) is applied when only
cliques of size >= min_size are wanted: every pruned subtree can only
emit maximal cliques smaller than min_size, and maximality is never
affected because X is kept exact.
"""

import multiprocessing as mp

from .errors import GapViolation, OutOfRangeVertex
from .graph import PaleyGraph


class CliqueSet:
    """A canonical (sorted) vertex set with lazy clique/maximality flags."""

    __slots__ = ("vertices", "size")

    def __init__(self, vertices):
        vs = sorted(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertices")
        self.vertices = tuple(vs)
        self.size = len(vs)

    def __eq__(self, other):
        return isinstance(other, CliqueSet) and self.vertices == other.vertices

    def __lt__(self, other):
        return self.vertices < other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return self.size

    def __repr__(self):
        return "CliqueSet(%r)" % (list(self.vertices),)


def _check_range(graph: PaleyGraph, vertices):
    for v in vertices:
        if not isinstance(v, (int,)) or v < 0 or v >= graph.n:
            raise OutOfRangeVertex("vertex %r out of range" % (v,))


def is_clique(graph: PaleyGraph, vertices) -> bool:
    vs = list(vertices)
    _check_range(graph, vs)
    if len(set(vs)) != len(vs):
        return False
    rows = graph.rows
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if not (rows[a] >> b) & 1:
                return False
    return True


def is_maximal_clique(graph: PaleyGraph, vertices) -> bool:
    vs = list(vertices)
    if not is_clique(graph, vs):
        return False
    if not vs:
        return graph.n == 0
    common = graph.rows[vs[0]]
    for v in vs[1:]:
        common &= graph.rows[v]
    return common == 0


def _bk_pivot(rows, R, P, X, min_size, out):
    if P == 0:
        if X == 0 and len(R) >= min_size:
            out.append(tuple(R))
        return
    if len(R) + P.bit_count() < min_size:
        # subtree can only hold maximal cliques below the requested size
        return
    # pivot u maximizing |P & N(u)| over P | X
    best_u = -1
    best = -1
    cand = P | X
    while cand:
        u = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        c = (P & rows[u]).bit_count()
        if c > best:
            best = c
            best_u = u
    ext = P & ~rows[best_u]
    while ext:
        v = (ext & -ext).bit_length() - 1
        bit = 1 << v
        ext &= ext - 1
        R.append(v)
        _bk_pivot(rows, R, P & rows[v], X & rows[v], min_size, out)
        R.pop()
        P &= ~bit
        X |= bit


def _top_level_tasks(graph: PaleyGraph, min_size):
    """The outermost Bron-Kerbosch branches, for optional parallelism."""
    rows = graph.rows
    n = graph.n
    full = (1 << n) - 1
    best_u = -1
    best = -1
    for u in range(n):
        c = rows[u].bit_count()
        if c > best:
            best = c
            best_u = u
    P = full
    X = 0
    tasks = []
    ext = P & ~rows[best_u]
    while ext:
        v = (ext & -ext).bit_length() - 1
        bit = 1 << v
        ext &= ext - 1
        tasks.append((v, P & rows[v], X & rows[v]))
        P &= ~bit
        X |= bit
    return tasks


_WORKER_STATE = {}


def _worker_init(rows, min_size):
    _WORKER_STATE["rows"] = rows
    _WORKER_STATE["min_size"] = min_size


def _worker_run(task):
    v, P, X = task
    out = []
    _bk_pivot(_WORKER_STATE["rows"], [v], P, X, _WORKER_STATE["min_size"], out)
    return out


def enumerate_maximal_cliques(graph: PaleyGraph, size_filter=None,
                              min_size=0, workers=1):
    """All maximal cliques, deterministically ordered.

    size_filter keeps only cliques of exactly that size; min_size prunes
    the search soundly when smaller maximal cliques are not of interest.
    """
    if size_filter is not None:
        min_size = max(min_size, size_filter)
    found = []
    if workers > 1:
        tasks = _top_level_tasks(graph, min_size)
        with mp.Pool(workers, _worker_init, (graph.rows, min_size)) as pool:
            for chunk in pool.imap_unordered(_worker_run, tasks):
                found.extend(chunk)
    else:
        tasks = _top_level_tasks(graph, min_size)
        for v, P, X in tasks:
            _bk_pivot(graph.rows, [v], P, X, min_size, found)
    found.sort()
    for vs in found:
        if size_filter is None or len(vs) == size_filter:
            yield CliqueSet(vs)


def second_largest_census(graph: PaleyGraph, workers=1):
    """All maximal cliques of the second-largest size (q + epsilon) / 2.

    Also verifies there is no maximal clique of intermediate size between
    the second-largest size and the maximum size q, and reports the count
    of maximum cliques.
    """
    target = graph.second_size
    q = graph.ctx.q
    cliques = []
    max_count = 0
    for c in enumerate_maximal_cliques(graph, min_size=target,
                                       workers=workers):
        if c.size == target:
            cliques.append(c)
        elif c.size == q:
            max_count += 1
        else:
            raise GapViolation(
                "maximal clique of size %d found (expected only %d or %d)"
                % (c.size, target, q))
    return {
        "count": len(cliques),
        "cliques": cliques,
        "clique_size": target,
        "max_clique_size": q,
        "max_clique_count": max_count,
    }
