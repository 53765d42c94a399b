"""Combinatorial transfer matrices, factorial-power coefficients and the Pieri rule.

The reversed series Ht(x) = x^k H(1/x) and Et(x) = x^n E(1/x) on V_n are
built directly from cylindric horizontal strips.  Plain coefficients H_r,
E_r are read off the x-powers; factorial coefficients Ht_{r,n} (and their
tau-shifted versions) come from Newton division by the factorial powers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .grbasis import (BoxPartition, BoxShape, conjugate, horizontal_strips, make,
                      partitions, word_from_partition)
from .lattice import OperatorVn, sector
from .polyring import Poly, VarSpace, elementary


@lru_cache(maxsize=None)
def _vs(N, m=0):
    return VarSpace(N, m)


def _acc(out, key, p):
    v = out.get(key)
    v = p if v is None else v + p
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def apply_H_comb(mu: BoxPartition, vs: VarSpace | None = None):
    """{(lam, d): prod_{j in J}(x - t_j)} for Ht(x)|mu>, x = x_1."""
    N = mu.shape.N
    vs = vs or _vs(N, 1)
    x = vs.x(1)
    out = {}
    for d in (0, 1):
        for lam, J in horizontal_strips(mu, d):
            p = vs.one()
            for j in J:
                p = p * (x - vs.t(j))
            _acc(out, (lam, d), p)
    return out


def apply_E_comb(mu: BoxPartition, vs: VarSpace | None = None):
    """{(lam, d): prod_{j in J'}(x + T_j)} for Et(x)|mu>, strips taken on conjugates."""
    N = mu.shape.N
    vs = vs or _vs(N, 1)
    x = vs.x(1)
    out = {}
    for d in (0, 1):
        for lc, J in horizontal_strips(conjugate(mu), d):
            p = vs.one()
            for j in J:
                p = p * (x + vs.T(j))
            _acc(out, (conjugate(lc), d), p)
    return out


def reversed_transfer(kind: str, shape: BoxShape) -> OperatorVn:
    """Ht(x) (kind 'H') or Et(x) (kind 'E') on V_n, with q."""
    vs = _vs(shape.N, 1)
    q = vs.q()
    act = apply_H_comb if kind == "H" else apply_E_comb
    ent = {}
    for mu in partitions(shape):
        wm = word_from_partition(mu)
        for (lam, d), p in act(mu, vs).items():
            _acc(ent, (word_from_partition(lam), wm), p * q if d else p)
    return OperatorVn(shape.N, vs, ent)


def _drop_x(op: OperatorVn, vs0):
    return OperatorVn(op.N, vs0, {k: Poly(vs0, v.terms) for k, v in op.entries.items()})


@lru_cache(maxsize=None)
def plain_coeffs(kind: str, shape: BoxShape):
    """{r: H_r|V_n} or {r: E_r|V_n} from the combinatorial series."""
    kind = {"vicious": "H", "osculating": "E"}.get(kind, kind)
    op = reversed_transfer(kind, shape)
    bound = shape.k if kind == "H" else shape.n
    cx = op.x_coefficients(op.vs.x_index(1))
    vs0 = _vs(shape.N)
    zero = OperatorVn(shape.N, vs0, {})
    return {r: (_drop_x(cx[bound - r], vs0) if (bound - r) in cx else zero) for r in range(bound + 1)}


# factorial powers

def _nodes(kind, shape, shift):
    vs = _vs(shape.N)
    if kind == "H":
        return [vs.T(shift + i) for i in range(1, shape.k + 1)]
    return [-vs.t(shift + i) for i in range(1, shape.n + 1)]


def newton_coeffs(coeffs, nodes, zero):
    """Rewrite sum_p c_p u^p in the basis (u - a_1)...(u - a_p).

    coeffs[p] may be operators or polys; returns d with d[p] the coefficient
    of the p-th factorial power.
    """
    f = list(coeffs)
    out = []
    for a in nodes:
        # f = d + (u - a) g by synthetic division
        m = len(f) - 1
        if m < 0:
            out.append(zero)
            continue
        g = [None] * m
        acc = f[m]
        for p in range(m - 1, -1, -1):
            g[p] = acc
            acc = f[p] + acc * a
        out.append(acc)
        f = g
    out.append(f[0] if f else zero)
    return out


@lru_cache(maxsize=None)
def factorial_coeffs(kind: str, shape: BoxShape, shift: int = 0):
    """{r: tau^shift Ht_{r,n}} (kind 'H') or {r: tau^shift Et_{r,n}} (kind 'E')."""
    plain = plain_coeffs(kind, shape)
    bound = shape.k if kind == "H" else shape.n
    # u^bound X(1/u) = sum_r u^{bound-r} X_r
    by_power = [plain[bound - p] for p in range(bound + 1)]
    nodes = _nodes(kind, shape, shift)
    zero = OperatorVn(shape.N, _vs(shape.N), {})
    d = newton_coeffs(by_power, nodes, zero)
    return {r: d[bound - r] for r in range(bound + 1)}


def _det(mat):
    """Leibniz expansion; entries commute."""
    n = len(mat)
    total = None
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = None
        for i, j in enumerate(perm):
            e = mat[i][j]
            term = e if term is None else term * e
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def _e_det(j, r, args_of_b, vs, sign_pattern=1):
    if j == 0:
        return vs.one()
    mat = [[elementary(1 - a + b, args_of_b(b), vs) for b in range(1, j + 1)] for a in range(1, j + 1)]
    return _det(mat)


def factorial_via_det(kind: str, shape: BoxShape, r: int) -> OperatorVn:
    """Ht_{r,n} (resp. Et_{r,n}) from the determinant transforms of the plain coefficients."""
    vs = _vs(shape.N)
    plain = plain_coeffs(kind, shape)
    total = OperatorVn(shape.N, vs, {})
    if kind == "H":
        k = shape.k
        for j in range(r + 1):
            c = _e_det(j, r, lambda b: [vs.T(i) for i in range(1, k - r + b + 1)], vs)
            total = total + plain[r - j].scale(c)
    else:
        n = shape.n
        for j in range(r + 1):
            c = _e_det(j, r, lambda b: [vs.t(i) for i in range(1, n - r + b + 1)], vs)
            total = total + plain[r - j].scale(c if j % 2 == 0 else -c)
    return total


def plain_via_factorial(kind: str, shape: BoxShape, r: int) -> OperatorVn:
    """Inverse transforms: H_r from Ht, E_r from Et."""
    vs = _vs(shape.N)
    fac = factorial_coeffs(kind, shape)
    total = OperatorVn(shape.N, vs, {})
    for j in range(r + 1):
        if kind == "H":
            c = elementary(j, [vs.T(i) for i in range(1, shape.k - r + j + 1)], vs)
            c = c if j % 2 == 0 else -c
        else:
            c = elementary(j, [vs.t(i) for i in range(1, shape.n - r + j + 1)], vs)
        total = total + fac[r - j].scale(c)
    return total


def pieri_chevalley(lam: BoxPartition):
    """{(mu, d): coefficient} of Ht_1|lam>."""
    shape = lam.shape
    n, k, N = shape.n, shape.k, shape.N
    vs = _vs(N)
    out = {}
    for i in range(n):
        parts = list(lam.parts)
        parts[i] += 1
        if parts[i] <= k and (i == 0 or parts[i] <= parts[i - 1]):
            out[(make(parts, shape), 0)] = vs.one()
    diag = vs.zero()
    for i in range(1, n + 1):
        diag = diag + vs.T(k + i - lam[i - 1])
    for j in range(k + 1, N + 1):
        diag = diag - vs.T(j)
    if diag:
        out[(lam, 0)] = diag
    minus = rim_hook_removal(lam)
    if minus is not None:
        out[(minus, 1)] = vs.one()
    return out


def rim_hook_removal(lam: BoxPartition):
    """lam^- : remove a boundary rim hook of length N-1, or None."""
    shape = lam.shape
    n, k = shape.n, shape.k
    if n == 0 or k == 0:
        return None
    # a rim hook of length N-1 = n+k-1 spans all n rows and all k columns
    if lam[0] != k or lam[n - 1] < 1:
        return None
    parts = [lam[i + 1] - 1 for i in range(n - 1)] + [0]
    mu = make(parts, shape)
    if lam.size - mu.size != shape.N - 1:
        return None
    return mu


def pieri_operator(shape: BoxShape) -> OperatorVn:
    vs = _vs(shape.N)
    q = vs.q()
    ent = {}
    for lam in partitions(shape):
        wl = word_from_partition(lam)
        for (mu, d), c in pieri_chevalley(lam).items():
            ent[(word_from_partition(mu), wl)] = c * q if d else c
    return OperatorVn(shape.N, vs, ent)


def jacobi_trudi(lam: BoxPartition, kind: str = "H") -> OperatorVn:
    """det(tau^{j-1} Ht_{lam_i-i+j}) (n x n) or det(tau^{j-1} Et_{lam'_i-i+j}) (k x k)."""
    shape = lam.shape
    vs = _vs(shape.N)
    dom = sector(shape)
    one = OperatorVn.identity(shape.N, vs, dom)
    zero = OperatorVn(shape.N, vs, {})
    if kind == "H":
        parts, size, bound = lam.parts, shape.n, shape.k
    else:
        parts, size, bound = conjugate(lam).parts, shape.k, shape.n
    if size == 0:
        return one

    def entry(i, j):
        r = parts[i] - i + j
        if r < 0 or r > bound:
            return zero
        if r == 0:
            return one
        return factorial_coeffs(kind, shape, j)[r]

    return _det([[entry(i, j) for j in range(size)] for i in range(size)])


def route_identity(shape: BoxShape):
    """combH/combE strips == traced rows == cyclic nil-Hecke words, coefficientwise."""
    from .lattice import IdentityReport, transfer_via_trace
    from .nilhecke import transfer_from_cyclic_words
    params = {"n": shape.n, "N": shape.N}
    for kind in ("H", "E"):
        comb = plain_coeffs(kind, shape)
        trace = transfer_via_trace(kind, shape)
        for r, op in comb.items():
            if op != trace[r]:
                return IdentityReport("transfer-routes", params, False,
                                      {"kind": kind, "r": r, "routes": "comb/trace"})
            if r < shape.N and op != transfer_from_cyclic_words(r, kind, shape):
                return IdentityReport("transfer-routes", params, False,
                                      {"kind": kind, "r": r, "routes": "comb/words"})
    return IdentityReport("transfer-routes", params, True)
