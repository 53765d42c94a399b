"""Factorial Schur functions s_lam(x|a) by four methods, vanishing, Cauchy."""

from __future__ import annotations

from itertools import permutations

from .grbasis import BoxShape, complement, conjugate, partitions, word_from_partition
from .lattice import IdentityReport
from .polyring import Poly, PolyError, VarSpace, divide_by_difference


class ASequence:
    """a_i for i in [1, N] from a window, zero elsewhere; tau shifts by one."""

    __slots__ = ("window", "offset", "zero")

    def __init__(self, window, offset=0, zero=0):
        self.window = tuple(window)
        self.offset = offset
        self.zero = zero

    def __getitem__(self, i):
        j = i + self.offset
        if 1 <= j <= len(self.window):
            return self.window[j - 1]
        return self.zero

    def shift(self, j=1):
        return ASequence(self.window, self.offset + j, self.zero)

    def key(self):
        return (self.window, self.offset)


def a_t(vs: VarSpace):
    return ASequence([vs.t(i) for i in range(1, vs.N + 1)], zero=vs.zero())


def a_T(vs: VarSpace):
    return ASequence([vs.T(i) for i in range(1, vs.N + 1)], zero=vs.zero())


def a_minus_t(vs: VarSpace):
    return ASequence([-vs.t(i) for i in range(1, vs.N + 1)], zero=vs.zero())


def a_zero(vs: VarSpace | None = None):
    return ASequence([], zero=vs.zero() if vs else 0)


def _parts(lam):
    p = tuple(lam.parts) if hasattr(lam, "parts") else tuple(lam)
    return p


def _zero_one(xs, a):
    for v in list(xs) + list(a.window):
        if isinstance(v, Poly):
            return v.vs.zero(), v.vs.one()
    return 0, 1


def det(mat, zero=0):
    n = len(mat)
    if n == 0:
        return 1
    total = zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = None
        for i, j in enumerate(perm):
            e = mat[i][j]
            if not e if isinstance(e, Poly) else e == 0:
                term = None
                break
            term = e if term is None else term * e
        if term is None:
            continue
        total = total - term if inv % 2 else total + term
    return total


def fac_power(x, a: ASequence, r, one=1):
    out = one
    for i in range(1, r + 1):
        out = out * (x - a[i])
    return out


def _pad(lam, n):
    lam = _parts(lam)
    if len(lam) > n and any(lam[n:]):
        return None
    return tuple(lam[:n]) + (0,) * max(0, n - len(lam))


# methods

def _ssyt(lam, n):
    """Semi-standard fillings with entries <= n, row by row."""
    lam = [p for p in lam if p]
    rows = len(lam)

    def fill(i, prev):
        if i == rows:
            yield ()
            return
        L = lam[i]

        def row(j, lo, acc):
            if j == L:
                yield tuple(acc)
                return
            above = prev[j] + 1 if prev is not None else 1
            for v in range(max(lo, above), n + 1):
                acc.append(v)
                yield from row(j + 1, v, acc)
                acc.pop()

        for r in row(0, 1, []):
            for rest in fill(i + 1, r):
                yield (r,) + rest

    yield from fill(0, None)


def _tableau(lam, xs, a):
    zero, one = _zero_one(xs, a)
    n = len(xs)
    total = zero
    for T in _ssyt(lam, n):
        term = one
        for i, row in enumerate(T, start=1):
            for j, v in enumerate(row, start=1):
                term = term * (xs[v - 1] - a[v + j - i])
        total = total + term
    return total


def _det_ratio(lam, xs, a):
    zero, one = _zero_one(xs, a)
    n = len(xs)
    num = det([[fac_power(xs[j], a, lam[i] + n - 1 - i, one) for j in range(n)] for i in range(n)], zero)
    if all(isinstance(x, Poly) for x in xs):
        # Vandermonde denominator; only exact for distinct variables
        idx = []
        for x in xs:
            if len(x.terms) != 1 or x.total_degree() != 1 or list(x.terms.values()) != [1]:
                raise PolyError("det-ratio needs distinct variables as arguments")
            idx.append(x.free_vars()[0])
        for i in range(n):
            for j in range(i + 1, n):
                num = divide_by_difference(num, idx[i], idx[j])
        return num
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            den = den * (xs[i] - xs[j])
    if den == 0:
        raise ZeroDivisionError("colliding arguments in det-ratio")
    return num / den


def h_fac(r, xs, a):
    """h_r(x|a) = s_(r)(x|a) from its one-row tableau sum."""
    zero, one = _zero_one(xs, a)
    if r < 0:
        return zero
    if r == 0:
        return one
    n = len(xs)
    # prev[v]: weakly increasing rows of length m with entries <= v
    prev = [one] * (n + 1)
    for m in range(1, r + 1):
        cur = [zero] * (n + 1)
        acc = zero
        for v in range(1, n + 1):
            acc = acc + prev[v] * (xs[v - 1] - a[v + m - 1])
            cur[v] = acc
        prev = cur
    return prev[n]


def _jacobi_trudi(lam, xs, a):
    zero, _ = _zero_one(xs, a)
    n = len(xs)
    mat = [[h_fac(lam[i] - i + j, xs, a.shift(-j)) for j in range(n)] for i in range(n)]
    return det(mat, zero)


def ordinary_schur(lam, xs):
    """Dual Jacobi-Trudi det(e_{lam'_i - i + j}(x)) (a = 0 case of the e-form)."""
    lam = [p for p in _parts(lam) if p]
    if not lam:
        zero, one = _zero_one(xs, ASequence([]))
        return one
    zero, one = _zero_one(xs, ASequence([]))
    conj = [sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1)]
    m = len(conj)
    mat = [[_e(conj[i] - i + j, xs, zero, one) for j in range(m)] for i in range(m)]
    return det(mat, zero)


def _e(r, xs, zero, one):
    if r < 0 or r > len(xs):
        return zero
    row = [one] + [zero] * r
    for x in xs:
        for i in range(r, 0, -1):
            row[i] = row[i] + row[i - 1] * x
    return row[r]


def _sub_partitions(lam):
    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for v in range(min(bound, lam[i]), -1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest
    yield from rec(0, lam[0] if lam else 0)


def facs2s_coeff(lam, mu, a, n, zero=0, one=1):
    """(-1)^{|lam/mu|} det(e_{lam_i - mu_j - i + j}(a_1..a_{n+lam_i-i}))."""
    mat = [[_e(lam[i] - mu[j] - i + j, [a[s] for s in range(1, n + lam[i] - i)], zero, one)
            for j in range(n)] for i in range(n)]
    d = det(mat, zero)
    return -d if (sum(lam) - sum(mu)) % 2 else d


def _ordinary_expansion(lam, xs, a):
    zero, one = _zero_one(xs, a)
    n = len(xs)
    total = zero
    for mu in _sub_partitions(lam):
        c = facs2s_coeff(lam, mu, a, n, zero, one)
        if isinstance(c, Poly) and not c:
            continue
        if not isinstance(c, Poly) and c == 0:
            continue
        total = total + c * ordinary_schur(mu, xs)
    return total


METHODS = {"tableau": _tableau, "det-ratio": _det_ratio, "jacobi-trudi": _jacobi_trudi,
           "ordinary-expansion": _ordinary_expansion}


def facschur(lam, xs, a: ASequence, method: str = "tableau"):
    xs = list(xs)
    lp = _pad(lam, len(xs))
    if lp is None:
        zero, _ = _zero_one(xs, a)
        return zero
    if method == "det-ratio":
        try:
            return _det_ratio(lp, xs, a)
        except ZeroDivisionError:
            return _tableau(lp, xs, a)
    return METHODS[method](lp, xs, a)


def a_point(mu, a: ASequence, n):
    """a_mu = (a_{mu_1+n}, ..., a_{mu_n+1})."""
    mu = _pad(mu, n)
    return [a[mu[i] + n - i] for i in range(n)]


def vanishing_value(lam, mu, n, a: ASequence, method="tableau"):
    return facschur(lam, a_point(mu, a, n), a, method)


def vanishing_product(lam, n, a: ASequence):
    """prod over cells (i,j) of lam of (a_{lam_i+n+1-i} - a_{n-lam'_j+j})."""
    lam = _pad(lam, n)
    zero, one = _zero_one([], a)
    out = one
    conj = [sum(1 for p in lam if p >= c) for c in range(1, (lam[0] if lam else 0) + 1)]
    for i in range(1, n + 1):
        for j in range(1, lam[i - 1] + 1):
            out = out * (a[lam[i - 1] + n + 1 - i] - a[n - conj[j - 1] + j])
    return out


def contained(lam, mu):
    return all(x <= y for x, y in zip(lam, mu))


# identities

def cauchy_check(n, k) -> IdentityReport:
    """prod(x_i + y_j) = sum_lam s_lam(x|t) s_{(lam^vee)'}(y|-t)."""
    N = n + k
    vs = VarSpace(N, N)
    xs = [vs.x(i) for i in range(1, n + 1)]
    ys = [vs.x(n + j) for j in range(1, k + 1)]
    lhs = vs.one()
    for x in xs:
        for y in ys:
            lhs = lhs * (x + y)
    shape = BoxShape(n, k)
    at, amt = a_t(vs), a_minus_t(vs)
    rhs = vs.zero()
    for lam in partitions(shape):
        dual = conjugate(complement(lam))
        rhs = rhs + facschur(lam.parts, xs, at) * facschur(dual.parts, ys, amt)
    if lhs == rhs:
        return IdentityReport("cauchy", {"n": n, "k": k}, True)
    return IdentityReport("cauchy", {"n": n, "k": k}, False,
                          {"difference": str(lhs - rhs)})


def braid_fac_schur_check(N, n, printed=False) -> IdentityReport:
    """s_lam(x|T) = s_lam(x|T with T_{N-j}, T_{N+1-j} swapped) + c_j s_{mu}(x|T).

    The passing form has mu = dv_{N-j} lam and c_j = T_{N+1-j} - T_{N-j};
    printed=True tests mu = dv_j lam with c_j = T_{N-j} - T_{N+1-j}.
    """
    from .grbasis import partition_from_word
    shape = BoxShape(n, N - n)
    vs = VarSpace(N, n)
    xs = [vs.x(i) for i in range(1, n + 1)]
    aT = a_T(vs)
    for j in range(1, N):
        win = list(aT.window)
        win[N - j - 1], win[N - j] = win[N - j], win[N - j - 1]
        swapped = ASequence(win, zero=vs.zero())
        pos = j if printed else N - j
        c = vs.T(N - j) - vs.T(N + 1 - j)
        if not printed:
            c = -c
        for lam in partitions(shape):
            w = list(word_from_partition(lam))
            extra = vs.zero()
            if w[pos - 1] == 0 and w[pos] == 1:
                w[pos - 1], w[pos] = 1, 0
                mu = partition_from_word(tuple(w), shape)
                extra = c * facschur(mu.parts, xs, aT)
            lhs = facschur(lam.parts, xs, aT)
            rhs = facschur(lam.parts, xs, swapped) + extra
            if lhs != rhs:
                return IdentityReport("braid-fac-schur", {"N": N, "n": n, "printed": printed}, False,
                                      {"j": j, "lambda": lam.label(), "difference": str(lhs - rhs)})
    return IdentityReport("braid-fac-schur", {"N": N, "n": n, "printed": printed}, True)


def identity_checks(id: str, **kw) -> IdentityReport:
    if id == "cauchy":
        return cauchy_check(kw.get("n", 2), kw.get("k", 2))
    if id == "braid-fac-schur":
        return braid_fac_schur_check(kw.get("N", 3), kw.get("n", 1), kw.get("printed", False))
    raise ValueError(f"unknown identity {id!r}")
