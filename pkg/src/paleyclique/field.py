"""Exact arithmetic for the tower F_p < F_q < F_{q^2} with discrete-log tables.

Elements of F_{q^2} are referred to by a canonical vertex index:
index 0 is the zero element and the nonzero element beta^k has index k+1,
where beta is the chosen primitive element of F_{q^2}.  With this indexing
the discrete log of a nonzero index i is simply i-1, so multiplication is
index addition mod q^2-1; only the addition table is materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZero,
    NotADivisor,
    NotPrime,
    NotPrimitive,
    S0Mismatch,
    UnsupportedSize,
    ZeroHasNoClass,
)

# Bound on q^2: the dense addition table is q^2 x q^2 entries.
DEFAULT_TABLE_BOUND = 2500

# the published primitive-root choices for the prime q values
PUBLISHED_DELTA = {11: 2, 13: 6, 17: 10, 19: 13, 23: 14}

SUPPORTED_Q = (9, 11, 13, 17, 19, 23)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class _BaseField:
    """F_q = F_p[t]/(f), elements indexed 0..q-1 by base-p digit vectors."""

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.q = p**m
        self.poly = self._find_poly() if m > 1 else (0, 1)
        q = self.q
        self.add_table = np.empty((q, q), dtype=np.int32)
        self.mul_table = np.empty((q, q), dtype=np.int32)
        for a in range(q):
            for b in range(q):
                self.add_table[a, b] = self._add(a, b)
                self.mul_table[a, b] = self._mul(a, b)
        self.neg_table = np.array([self._neg(a) for a in range(q)], dtype=np.int32)

    def digits(self, e: int) -> tuple[int, ...]:
        p = self.p
        return tuple((e // p**i) % p for i in range(self.m))

    def from_digits(self, digits) -> int:
        return sum(int(c) % self.p * self.p**i for i, c in enumerate(digits))

    def _add(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.digits(a), self.digits(b)
        return self.from_digits((x + y) % p for x, y in zip(da, db))

    def _neg(self, a: int) -> int:
        return self.from_digits((-x) % self.p for x in self.digits(a))

    def _mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        prod = self._polymul(self.digits(a), self.digits(b))
        return self.from_digits(self._polymod(prod))

    def _polymul(self, da, db):
        p = self.p
        out = [0] * (len(da) + len(db) - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                out[i + j] = (out[i + j] + x * y) % p
        return out

    def _polymod(self, coeffs):
        # reduce mod the monic defining polynomial
        p, m = self.p, self.m
        c = list(coeffs)
        for deg in range(len(c) - 1, m - 1, -1):
            lead = c[deg]
            if lead:
                for i in range(m + 1):
                    c[deg - m + i] = (c[deg - m + i] - lead * self.poly[i]) % p
        return c[:m]

    def _find_poly(self) -> tuple[int, ...]:
        # smallest monic irreducible of degree m, lexicographic in the
        # coefficient vector (c_0, ..., c_{m-1})
        p, m = self.p, self.m
        for tail in range(p**m):
            coeffs = tuple((tail // p**i) % p for i in range(m)) + (1,)
            if self._poly_irreducible(coeffs):
                return coeffs
        raise AssertionError("no irreducible polynomial found")

    def _poly_irreducible(self, coeffs) -> bool:
        p, m = self.p, self.m
        save = getattr(self, "poly", None)
        self.poly = coeffs
        try:
            # f is irreducible iff t^(p^m) == t (mod f) and
            # gcd(f, t^(p^d) - t) = 1 for every proper divisor d of m
            t = [0, 1] + [0] * (m - 2) if m >= 2 else [1]
            x = list(t)
            for d in range(1, m + 1):
                x = self._polypow_p(x)
                if d == m:
                    if x != t[:m]:
                        return False
                elif m % d == 0:
                    diff = [(a - b) % p for a, b in zip(x, t[:m])]
                    if not self._poly_coprime(diff, coeffs):
                        return False
            return True
        finally:
            self.poly = save

    def _polypow_p(self, px):
        # px^p mod f by square-and-multiply
        p = self.p
        result = [1]
        base = list(px)
        e = p
        while e:
            if e & 1:
                result = self._polymod(self._polymul(result, base))
            base = self._polymod(self._polymul(base, base))
            e >>= 1
        result = result + [0] * (self.m - len(result))
        return result[: self.m]

    def _poly_coprime(self, a, f) -> bool:
        # gcd(a, f) over F_p, f monic of degree m
        p = self.p

        def deg(c):
            for i in range(len(c) - 1, -1, -1):
                if c[i]:
                    return i
            return -1

        u = [c % p for c in f]
        v = [c % p for c in a]
        while deg(v) >= 0:
            dv, du = deg(v), deg(u)
            if du < dv:
                u, v = v, u
                continue
            inv = pow(v[deg(v)], -1, p)
            shift = du - dv
            factor = (u[du] * inv) % p
            for i in range(dv + 1):
                u[i + shift] = (u[i + shift] - factor * v[i]) % p
            if deg(u) < deg(v):
                u, v = v, u
        return deg(u) == 0

    def element_order(self, a: int) -> int:
        if a == 0:
            return 0
        order = 1
        x = a
        one = self.from_digits([1] + [0] * (self.m - 1))
        while x != one:
            x = int(self.mul_table[x, a])
            order += 1
        return order


@dataclass(frozen=True)
class SquareSets:
    """Nonzero squares S of F_{q^2} and the slope set S0 (with 1 adjoined)."""

    S: frozenset
    S0: frozenset


class FieldCtx:
    """Immutable tower F_p < F_q < F_{q^2} = F_q(alpha), alpha^2 = alpha_sq.

    delta is a primitive element of F_q; alpha_sq is the non-square of F_q
    whose square root is adjoined (defaults to delta).  The two coincide in
    the default construction but can be decoupled, which is needed to land
    in the coordinate system the published clique data is written in.
    """

    def __init__(self, p: int, m: int, delta_hint: int | None = None,
                 alpha_sq: int | None = None,
                 table_bound: int = DEFAULT_TABLE_BOUND):
        if not _is_prime(p) or p == 2:
            raise NotPrime(f"p={p} is not an odd prime")
        q = p**m
        n = q * q
        if n > table_bound:
            raise UnsupportedSize(f"q^2={n} exceeds table bound {table_bound}")
        self.p = p
        self.m = m
        self.q = q
        self.n = n
        self.epsilon = 1 if q % 4 == 1 else 3
        self.base = _BaseField(p, m)

        if delta_hint is not None:
            d = delta_hint % q if m == 1 else delta_hint
            if self.base.element_order(d) != q - 1:
                raise NotPrimitive(f"delta_hint={delta_hint} does not generate F_{q}^*")
            self.delta_fq = d
        else:
            self.delta_fq = next(
                a for a in range(q) if self.base.element_order(a) == q - 1
            )

        if alpha_sq is None:
            self.alpha_sq_fq = self.delta_fq
        else:
            a = alpha_sq % q if m == 1 else alpha_sq
            # x^2 - a is irreducible over F_q iff a is a non-square
            if a == 0 or (q - 1) % (2 * self.base.element_order(a)) == 0:
                raise NotPrimitive(f"alpha_sq={alpha_sq} is a square in F_{q}")
            self.alpha_sq_fq = a

        self._build_extension()
        self._build_tables()

    # -- construction -------------------------------------------------

    def _build_extension(self):
        # pairs (x, y) meaning x + y*alpha, indexed x*q + y
        base, q = self.base, self.q
        d = self.alpha_sq_fq

        def pmul(a, b):
            x1, y1 = divmod(a, q)
            x2, y2 = divmod(b, q)
            mt, at = base.mul_table, base.add_table
            x = int(at[mt[x1, x2], mt[mt[y1, y2], d]])
            y = int(at[mt[x1, y2], mt[y1, x2]])
            return x * q + y

        self._pair_mul = pmul
        n1 = self.n - 1
        factors = _prime_factors(n1)

        def pair_pow(a, e):
            r = 1 * q + 0  # (1, 0)
            b = a
            while e:
                if e & 1:
                    r = pmul(r, b)
                b = pmul(b, b)
                e >>= 1
            return r

        one_pair = 1 * q + 0
        beta = None
        for cand in range(1, self.n):
            if cand == one_pair:
                continue
            if all(pair_pow(cand, n1 // f) != one_pair for f in factors):
                if pair_pow(cand, n1) == one_pair:
                    beta = cand
                    break
        assert beta is not None
        self.beta_pair = beta

        exp_pairs = np.empty(n1, dtype=np.int64)
        acc = one_pair
        for k in range(n1):
            exp_pairs[k] = acc
            acc = pmul(acc, beta)
        assert acc == one_pair

        # canonical index: 0 -> 0, beta^k -> k+1
        canon = np.empty(self.n, dtype=np.int64)
        canon[0] = 0
        canon[exp_pairs] = np.arange(1, self.n, dtype=np.int64)
        self._canon_of_pair = canon
        pair_of = np.empty(self.n, dtype=np.int64)
        pair_of[0] = 0
        pair_of[np.arange(1, self.n)] = exp_pairs
        self._pair_of_canon = pair_of

    def _build_tables(self):
        base, q, n = self.base, self.q, self.n
        xs, ys = divmod(self._pair_of_canon, q)
        # pairwise addition through the base-field table, then back to canon
        px = base.add_table[np.ix_(xs, xs)].astype(np.int64)
        py = base.add_table[np.ix_(ys, ys)].astype(np.int64)
        self.add_table = self._canon_of_pair[px * q + py].astype(np.int32)
        negp = base.neg_table[xs].astype(np.int64) * q + base.neg_table[ys]
        self.neg_table = self._canon_of_pair[negp].astype(np.int32)

        # exp/log in canonical indexing
        self.exp_table = np.arange(1, n, dtype=np.int64)
        self.log_table = np.concatenate(([-1], np.arange(n - 1, dtype=np.int64)))

        # Frobenius powers gamma -> gamma^(p^v) as vertex permutations
        two_m = 2 * self.m
        idx = np.arange(n, dtype=np.int64)
        frob = np.empty((two_m, n), dtype=np.int64)
        for v in range(two_m):
            e = pow(self.p, v, n - 1)
            frob[v, 0] = 0
            frob[v, 1:] = ((idx[1:] - 1) * e) % (n - 1) + 1
        self.frob_table = frob

        # subfield embedding: base-field element x -> canonical index of (x, 0)
        self.subfield = tuple(
            int(self._canon_of_pair[x * q + 0]) for x in range(q)
        )
        self.subfield_star = tuple(e for e in self.subfield if e != 0)
        self.zero = 0
        self.one = self.subfield[base.from_digits([1] + [0] * (self.m - 1))]
        assert self.one == 1  # beta^0
        self.delta = self.subfield[self.delta_fq]
        self.alpha_sq = self.subfield[self.alpha_sq_fq]
        self.alpha = int(self._canon_of_pair[0 * q + base.from_digits(
            [1] + [0] * (self.m - 1))])
        self.beta = 2  # beta^1
        assert self.mul(self.alpha, self.alpha) == self.alpha_sq

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return (a - 1 + b - 1) % (self.n - 1) + 1

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inv(0)")
        return (-(a - 1)) % (self.n - 1) + 1

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return ((a - 1) * e) % (self.n - 1) + 1

    def frobenius(self, a: int, v: int) -> int:
        return int(self.frob_table[v % (2 * self.m), a])

    def is_square(self, a: int) -> bool:
        if a == 0:
            raise ZeroHasNoClass("zero is neither square nor non-square")
        return (a - 1) % 2 == 0

    def embed(self, value: int) -> int:
        """Canonical index of an integer residue (multiple of 1 in F_p)."""
        v = value % self.p
        acc = 0
        for _ in range(v):
            acc = self.add(acc, self.one)
        return acc

    def delta_pow(self, k: int) -> int:
        return self.pow(self.delta, k % (self.q - 1))

    def alpha_plus(self, value: int) -> int:
        return self.add(self.alpha, self.embed(value))

    # -- structure -----------------------------------------------------

    def coeffs(self, a: int):
        """Coefficient matrix [[x_0..x_{m-1}], [y_0..y_{m-1}]] for a = x + y*alpha."""
        x, y = divmod(int(self._pair_of_canon[a]), self.q)
        return [list(self.base.digits(x)), list(self.base.digits(y))]

    def from_coeffs(self, matrix) -> int:
        x = self.base.from_digits(matrix[0])
        y = self.base.from_digits(matrix[1])
        return int(self._canon_of_pair[x * self.q + y])

    def format_elem(self, a: int) -> str:
        x, y = divmod(int(self._pair_of_canon[a]), self.q)
        if self.m == 1:
            if y == 0:
                return str(x)
            if x == 0:
                return f"{y}a" if y != 1 else "a"
            ys = "a" if y == 1 else f"{y}a"
            return f"{ys}+{x}"
        return f"({list(self.base.digits(x))},{list(self.base.digits(y))})"

    def meta(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "q": self.q,
            "delta_coeffs": list(self.base.digits(self.delta_fq)),
            "alpha_sq_coeffs": list(self.base.digits(self.alpha_sq_fq)),
            "base_poly_coeffs": list(self.base.poly),
            "epsilon": self.epsilon,
        }


def build_field(p: int, m: int, delta_hint: int | None = None,
                alpha_sq: int | None = None,
                table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """Build the field tower context; see FieldCtx."""
    return FieldCtx(p, m, delta_hint=delta_hint, alpha_sq=alpha_sq,
                    table_bound=table_bound)


def squares_and_s0(ctx: FieldCtx) -> SquareSets:
    """Nonzero squares S and S0 = ({x+alpha : x in F_q} ^ S) with 1 adjoined.

    Raises S0Mismatch if S != F_q^* * S0, which would signal a delta/alpha
    choice inconsistent with the slope-set convention.
    """
    S = frozenset(range(1, ctx.n, 2))
    s0 = {1}
    for x in ctx.subfield:
        e = ctx.add(x, ctx.alpha)
        if ctx.is_square(e):
            s0.add(e)
    S0 = frozenset(s0)
    generated = {ctx.mul(u, s) for u in ctx.subfield_star for s in S0}
    if generated != S:
        raise S0Mismatch("S != F_q^* * (S0 u {1})")
    return SquareSets(S=S, S0=S0)


def subgroup_negation_check(ctx: FieldCtx, k: int) -> str:
    """Compare -H with H for the order-k subgroup H of F_q^*.

    Returns "equal" if -H == H and "disjoint" if they do not meet.
    """
    if k <= 0 or (ctx.q - 1) % k != 0:
        raise NotADivisor(f"k={k} does not divide q-1={ctx.q - 1}")
    g = ctx.pow(ctx.delta, (ctx.q - 1) // k)
    H = set()
    x = ctx.one
    for _ in range(k):
        H.add(x)
        x = ctx.mul(x, g)
    negH = {ctx.neg(h) for h in H}
    if negH == H:
        return "equal"
    if not negH & H:
        return "disjoint"
    raise AssertionError("subgroup negation is neither equal nor disjoint")


# The x with x+alpha a square, as printed in the per-q slope sets S0.
PUBLISHED_S0_SHIFTS = {
    11: (0, 4, -4, 5, -5),
    13: (8, 5, 7, 6, 1, 12),
    17: (7, 10, 14, 3, 6, 11, 8, 9),
    19: (0, 2, 3, 4, 6, -2, -3, -4, -6),
    23: (0, 1, 2, 6, 9, 11, -1, -2, -6, -9, -11),
}


def _c9_checks(ctx: FieldCtx) -> bool:
    # the q=9 clique {0} u H u (alpha+delta^5)H with H = {1, delta} must be
    # a maximal clique; used to pin down the searched (delta, alpha_sq) pair
    H = (ctx.one, ctx.delta)
    c = ctx.add(ctx.alpha, ctx.delta_pow(5))
    clique = {0, *H, *(ctx.mul(c, h) for h in H)}
    if len(clique) != 5:
        return False

    def adj(a, b):
        return a != b and ctx.is_square(ctx.sub(a, b))

    if not all(adj(a, b) for a in clique for b in clique if a < b):
        return False
    return not any(
        all(adj(v, c) for c in clique)
        for v in range(ctx.n) if v not in clique
    )


@lru_cache(maxsize=None)
def published_field(q: int, table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """Field context in the coordinate system of the published clique data.

    The printed primitive element delta is taken as-is, but the defining
    constant alpha_sq (with alpha^2 = alpha_sq) is searched over the
    non-squares of F_q until the printed slope set S0 is reproduced; the
    published tables are not consistent with alpha^2 = delta.  For q = 9
    neither delta nor the defining polynomial is printed, so both are
    searched, anchored on the printed S0 shape and the q = 9 clique.
    """
    if q == 9:
        target_exps = (1, 2, 5, 6)
        probe = FieldCtx(3, 2, table_bound=table_bound)
        order = probe.base.element_order
        prims = [a for a in range(9) if order(a) == 8]
        nonsquares = [a for a in range(1, 9) if 8 % (2 * order(a)) != 0]
        for dlt in prims:
            for asq in nonsquares:
                ctx = FieldCtx(3, 2, delta_hint=dlt, alpha_sq=asq,
                               table_bound=table_bound)
                want = {ctx.one} | {
                    ctx.add(ctx.alpha, ctx.delta_pow(e)) for e in target_exps
                }
                if squares_and_s0(ctx).S0 == want and _c9_checks(ctx):
                    return ctx
        raise S0Mismatch("no (delta, alpha_sq) for q=9 reproduces the printed S0")
    if q not in PUBLISHED_DELTA:
        raise UnsupportedSize(f"no published delta for q={q}")
    shifts = PUBLISHED_S0_SHIFTS[q]
    for asq in range(1, q):
        if pow(asq, (q - 1) // 2, q) != q - 1:
            continue
        ctx = FieldCtx(q, 1, delta_hint=PUBLISHED_DELTA[q], alpha_sq=asq,
                       table_bound=table_bound)
        want = {ctx.one} | {ctx.alpha_plus(x) for x in shifts}
        if squares_and_s0(ctx).S0 == want:
            return ctx
    raise S0Mismatch(f"no alpha_sq for q={q} reproduces the printed S0")
