"""Vicious and osculating walkers on the cylinder.

Top boundary is mu, bottom boundary is lam; rows are processed top to
bottom, row i carrying the spectral variable x_i.  A row is swept column by
column with the horizontal edge (aux) value as frontier; the seam between
column N and column 1 contributes q per crossing path.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import kernels
from .facschur import a_T, facschur
from .grbasis import (BoxPartition, BoxShape, conjugate, loop_value, partitions,
                      toric_tableaux, word_from_partition)
from .lattice import CapExceeded, guard, vertex_weights
from .polyring import BITS, Poly, VarSpace, substitute

MODELS = ("vicious", "osculating")


def n_rows(model, shape: BoxShape):
    return shape.n if model == "vicious" else shape.k


def _row_exact(vec, kind, N, vs, x, q):
    """Apply one traced row to {word: Poly}."""
    tables = [vertex_weights(kind, x, vs.t(j)) for j in range(1, N + 1)]
    out = {}
    for w, c0 in vec.items():
        for b in (0, 1):
            front = {(b, ()): c0 * q if b else c0}
            for j in range(N):
                nxt = {}
                tab = tables[j]
                for (a, pre), c in front.items():
                    for ao, eo, wt in tab[(a, w[j])]:
                        key = (ao, pre + (eo,))
                        v = nxt.get(key)
                        p = c * wt
                        nxt[key] = p if v is None else v + p
                front = nxt
            for (a, pre), c in front.items():
                if a != b or not c:
                    continue
                v = out.get(pre)
                v = c if v is None else v + c
                if v:
                    out[pre] = v
                else:
                    out.pop(pre, None)
    return out


def _reverse_x(p: Poly, xidx, bound):
    """x^bound p(1/x) for a polynomial of x-degree <= bound."""
    parts = p.by_degree(xidx)
    out = p.vs.zero()
    for d, c in parts.items():
        if d > bound:
            raise AssertionError("x-degree exceeds the row bound")
        out = out + _shift_x(c, xidx, bound - d)
    return out


def _shift_x(c: Poly, xidx, e):
    if e == 0:
        return c
    add = e << (BITS * xidx)
    return Poly(c.vs, {k + add: v for k, v in c.terms.items()})


def partition_function(lam: BoxPartition, mu: BoxPartition, model="vicious", xs=None,
                       reversed_=True, q=True):
    """Z~_{lam,mu}(x|t) (reversed_=True) or Z_{lam,mu}(x|t), exact.

    xs: None for symbolic x_1..x_rows, else numeric values (returns complex).
    """
    shape = lam.shape
    guard(shape.N)
    rows = n_rows(model, shape)
    if xs is not None and not isinstance(xs[0], Poly):
        raise TypeError("numeric xs: use partition_function_numeric")
    N = shape.N
    vs = VarSpace(N, max(rows, 1))
    qv = vs.q() if q else vs.one()
    bound = shape.k if model == "vicious" else shape.n
    vec = {word_from_partition(mu): vs.one()}
    for i in range(1, rows + 1):
        vec = _row_exact(vec, model, N, vs, vs.x(i), qv)
        if reversed_:
            xi = vs.x_index(i)
            vec = {w: _reverse_x(c, xi, bound) for w, c in vec.items()}
    out = vec.get(word_from_partition(lam), vs.zero())
    if xs is not None:
        out = substitute(out, {vs.x_index(i + 1): xs[i] for i in range(rows)})
    return out


# toric tableaux

def _t_index(l, N):
    return ((l - 1) % N) + 1


def tableau_weight(seq, vs):
    """prod over lattice rows j and partition rows i of prod_l (x_j - t_l)."""
    lam0 = seq[0][0]
    n = lam0.shape.n
    N = lam0.shape.N
    out = vs.one()
    for j in range(1, len(seq)):
        prev, dprev = seq[j - 1]
        cur, dcur = seq[j]
        for i in range(1, n + 1):
            lo = loop_value(cur, dcur, i + 1) + (n + 1 - (i + 1)) + 1
            hi = loop_value(prev, dprev, i) + (n + 1 - i) - 1
            for l in range(lo, hi + 1):
                out = out * (vs.x(j) - vs.t(_t_index(l, N)))
    return out


def tableau_ell_values(seq):
    """Per lattice row j the list of l values (for inspection and tests)."""
    lam0 = seq[0][0]
    n = lam0.shape.n
    rows = []
    for j in range(1, len(seq)):
        prev, dprev = seq[j - 1]
        cur, dcur = seq[j]
        ls = []
        for i in range(1, n + 1):
            lo = loop_value(cur, dcur, i + 1) + (n - i) + 1
            hi = loop_value(prev, dprev, i) + (n + 1 - i) - 1
            ls.extend(range(lo, hi + 1))
        rows.append(ls)
    return rows


def partition_function_toric(lam: BoxPartition, mu: BoxPartition):
    """Z~_{lam,mu}(x|t) as a sum over toric tableaux (vicious model)."""
    shape = lam.shape
    n, N = shape.n, shape.N
    vs = VarSpace(N, max(n, 1))
    total = vs.zero()
    if n == 0:
        return vs.one() if lam == mu else vs.zero()
    for d in range(0, n + 1):
        for seq in toric_tableaux(lam, d, mu, n):
            total = total + vs.q() ** d * tableau_weight(seq, vs)
    return total


def partition_function_osculating_dual(lam: BoxPartition, mu: BoxPartition):
    """Z~'_{lam,mu}(x|t) via level-rank: Z~_{lam',mu'}(x|-T)."""
    lc, mc = conjugate(lam), conjugate(mu)
    z = partition_function(lc, mc, "vicious")
    vs = z.vs
    N = vs.N
    # t_j -> -T_j  i.e.  T_{N+1-j} -> -T_j
    return substitute(z, {N - j: -vs.T(j) for j in range(1, N + 1)})


# specialisation x = T_nu

def t_point(nu: BoxPartition, vs: VarSpace):
    """T_nu = (T_{nu_1+n}, ..., T_{nu_n+1})."""
    n = nu.shape.n
    return [vs.T(nu[i] + n - i) for i in range(n)]


def specialize_at_T(lam: BoxPartition, mu: BoxPartition, nu: BoxPartition):
    z = partition_function(lam, mu, "vicious")
    vs = z.vs
    n = lam.shape.n
    pt = t_point(nu, VarSpace(vs.N))
    return substitute(z, {vs.x_index(i + 1): pt[i] for i in range(n)}) if n else z


# numeric route

def apply_rows_numeric(vec, model, xs, tvals, q, bound):
    """Apply reversed rows x^bound X(1/x) for each numeric x (complex arrays)."""
    N = len(tvals)
    tv = np.asarray(tvals, dtype=np.complex128)
    out = np.asarray(vec, dtype=np.complex128)
    for x in xs:
        W = kernels.weights_array(model, 1.0 / x, tv)
        out = kernels.row_apply(out, W, complex(q), N) * (x ** bound)
    return out


def mask_of(word):
    m = 0
    for j, b in enumerate(word):
        if b:
            m |= 1 << j
    return m


def partition_function_numeric(lam, mu, xs, tvals, q, model="vicious"):
    shape = lam.shape
    N = shape.N
    if N > 20:
        raise CapExceeded("numeric walker DP limited to N <= 20")
    bound = shape.k if model == "vicious" else shape.n
    vec = np.zeros(1 << N, dtype=np.complex128)
    vec[mask_of(word_from_partition(mu))] = 1.0
    out = apply_rows_numeric(vec, model, xs, tvals, q, bound)
    return out[mask_of(word_from_partition(lam))]


def numeric_fac_schur_T(nu_parts, xs, tvals):
    """s_nu(x|T) with T_i = t_{N+1-i} at numeric points (tableau route)."""
    from .facschur import ASequence
    N = len(tvals)
    a = ASequence([tvals[N - i] for i in range(1, N + 1)])
    return facschur(nu_parts, list(xs), a, "det-ratio")


def walker_expansion(lam: BoxPartition, mu: BoxPartition, tvals, q, rng):
    """Solve Z~_{lam,mu}(x|t) = sum_nu c_nu s_{nu^vee}(x|T) at random x points.

    Returns ({nu: c_nu}, condition number).  c_nu = q^d C^{lam,d}_{mu nu}(T).
    """
    from .grbasis import complement
    shape = lam.shape
    n = shape.n
    basis = list(partitions(shape))
    m = len(basis)
    pts = [rng.normal(size=n) + 1j * rng.normal(size=n) for _ in range(m)]
    A = np.empty((m, m), dtype=np.complex128)
    b = np.empty(m, dtype=np.complex128)
    for r, x in enumerate(pts):
        b[r] = partition_function_numeric(lam, mu, x, tvals, q) if n else (1.0 if lam == mu else 0.0)
        for c, nu in enumerate(basis):
            A[r, c] = numeric_fac_schur_T(complement(nu).parts, x, tvals) if n else 1.0
    sol = np.linalg.solve(A, b)
    return {nu: sol[i] for i, nu in enumerate(basis)}, float(np.linalg.cond(A))


@lru_cache(maxsize=None)
def walker_table(shape: BoxShape, tvals: tuple, q, seed=0, oversample=3):
    """Numeric expansion of every Z~_{nu,mu} in the basis s_{sigma^vee}(x|T).

    Returns ({(nu, mu): {sigma: c}}, condition number) with
    c = q^d C^{nu,d}_{mu sigma}(T) at t_j = tvals[j-1].  One least-squares
    system is shared by all pairs; each row-sweep from mu yields every nu.
    """
    from .grbasis import complement
    n, N = shape.n, shape.N
    basis = list(partitions(shape))
    m = len(basis)
    if n == 0:
        return {(nu, mu): {s: (1.0 + 0j if nu == mu else 0j) for s in basis}
                for nu in basis for mu in basis}, 1.0
    rng = np.random.default_rng(seed)
    npts = oversample * m
    pts = [rng.normal(size=n) + 1j * rng.normal(size=n) for _ in range(npts)]
    A = np.array([[numeric_fac_schur_T(complement(s).parts, x, tvals) for s in basis] for x in pts])
    masks = [mask_of(word_from_partition(nu)) for nu in basis]
    B = np.empty((npts, m, m), dtype=np.complex128)
    for c, mu in enumerate(basis):
        vec = np.zeros(1 << N, dtype=np.complex128)
        vec[mask_of(word_from_partition(mu))] = 1.0
        for r, x in enumerate(pts):
            out = apply_rows_numeric(vec, "vicious", x, tvals, q, shape.k)
            B[r, :, c] = out[masks]
    sol, *_ = np.linalg.lstsq(A, B.reshape(npts, m * m), rcond=None)
    sol = sol.reshape(m, m, m)
    table = {}
    for a, nu in enumerate(basis):
        for c, mu in enumerate(basis):
            table[(nu, mu)] = {s: sol[i, a, c] for i, s in enumerate(basis)}
    return table, float(np.linalg.cond(A))
