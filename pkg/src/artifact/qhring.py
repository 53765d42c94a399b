"""Equivariant quantum cohomology of Gr(n,N) on V_n.

Schubert operators S~_lam act on the partition basis; the product is
lam (*) mu = S~_lam |mu>, and <nu|S~_lam|mu> = q^d C^{nu,d}_{lam mu}(T).
The same coefficients are recovered from walker partition functions by
specialising x at the points T_rho and solving a triangular system.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

import numpy as np

from .facschur import (_e, _sub_partitions, a_T, a_t, contained, facs2s_coeff,
                       facschur, vanishing_product)
from .grbasis import (BoxPartition, BoxShape, complement, conjugate, make, partitions,
                      word_from_partition, partition_from_word)
from .lattice import IdentityReport, OperatorVn, guard, sector
from .polyring import (Poly, PolyError, VarSpace, divide_by_difference, permute_vars, substitute,
                       swap_indices, family_indices, to_string)
from .transfer import _det, factorial_coeffs, jacobi_trudi, plain_coeffs

ROUTES = ("facs-expansion", "jacobi-trudi", "naegelsbach-kostka")
GW_ROUTES = ("operator", "det-cramer", "walker-expansion")


@lru_cache(maxsize=None)
def _vs(N):
    return VarSpace(N)


def _lower(p: Poly, vs0: VarSpace) -> Poly:
    """Move an x-free Poly into VarSpace(N) (x sits after T and q)."""
    return Poly(vs0, p.terms)


# Schubert operators

@lru_cache(maxsize=None)
def plain_schubert(lam: BoxPartition) -> OperatorVn:
    """S_lam = det(E_{lam'_i - i + j}), k x k."""
    shape = lam.shape
    vs = _vs(shape.N)
    one = OperatorVn.identity(shape.N, vs, sector(shape))
    zero = OperatorVn(shape.N, vs, {})
    if shape.k == 0 or shape.n == 0:
        return one
    E = plain_coeffs("E", shape)
    lc = conjugate(lam).parts

    def entry(i, j):
        r = lc[i] - i + j
        if r < 0 or r > shape.n:
            return zero
        return one if r == 0 else E[r]

    return _det([[entry(i, j) for j in range(shape.k)] for i in range(shape.k)])


def facs_coefficients(lam: BoxPartition):
    """{mu: c_mu} with S~_lam = sum_mu c_mu S_mu."""
    shape = lam.shape
    vs = _vs(shape.N)
    at = a_t(vs)
    out = {}
    for mu in _sub_partitions(lam.parts):
        c = facs2s_coeff(lam.parts, mu, at, shape.n, vs.zero(), vs.one())
        if isinstance(c, int):
            c = vs.const(c)
        if c:
            out[make(mu, shape)] = c
    return out


@lru_cache(maxsize=None)
def schubert_operator(lam: BoxPartition, route: str = "jacobi-trudi") -> OperatorVn:
    shape = lam.shape
    guard(shape.N)
    if route == "jacobi-trudi":
        return jacobi_trudi(lam, "H")
    if route == "naegelsbach-kostka":
        return jacobi_trudi(lam, "E")
    if route == "facs-expansion":
        vs = _vs(shape.N)
        total = OperatorVn(shape.N, vs, {})
        for mu, c in facs_coefficients(lam).items():
            total = total + plain_schubert(mu).scale(c)
        return total
    raise ValueError(f"unknown route {route!r}")


# product and GW invariants

def split_q(p: Poly):
    """{d: coefficient of q^d} with q removed."""
    vs = p.vs
    return {d: c for d, c in p.by_degree(vs.q_index).items() if c}


@lru_cache(maxsize=None)
def product(lam: BoxPartition, mu: BoxPartition, route: str = "jacobi-trudi"):
    """{(nu, d): C^{nu,d}_{lam mu}(T)} from S~_lam|mu>."""
    if lam.shape != mu.shape:
        raise ValueError("product of partitions from different boxes")
    shape = lam.shape
    vec = schubert_operator(lam, route).apply({word_from_partition(mu): _vs(shape.N).one()})
    out = {}
    for w, c in vec.items():
        nu = partition_from_word(w, shape)
        for d, cd in split_q(c).items():
            out[(nu, d)] = cd
    return out


def degree_range(lam, mu, nu):
    """Admissible d: C^{nu,d}_{lam mu} has T-degree |lam|+|mu|-|nu|-dN >= 0."""
    diff = lam.size + mu.size - nu.size
    if diff < 0:
        return range(0)
    return range(diff // lam.shape.N + 1)


# det-cramer route

def _order(parts_list):
    return sorted(parts_list, key=lambda p: (p.size, p.parts))


def vanishing_factors(rho: BoxPartition):
    """Index pairs (a, b) with s_rho(T_rho|T) = prod (T_a - T_b)."""
    n = rho.shape.n
    lam = rho.parts
    conj = conjugate(rho).parts
    out = []
    for i in range(1, n + 1):
        for j in range(1, lam[i - 1] + 1):
            out.append((lam[i - 1] + n - i, n - conj[j - 1] + j - 1))
    return out


@lru_cache(maxsize=None)
def _gamma(shape: BoxShape):
    """{(sigma, rho): s_rho(T_sigma|T)} for rho contained in sigma."""
    vs = _vs(shape.N)
    aT = a_T(vs)
    n = shape.n
    out = {}
    for sigma in partitions(shape):
        pt = [vs.T(sigma[i] + n - i) for i in range(n)]
        for rho in partitions(shape):
            if contained(rho.parts, sigma.parts):
                out[(sigma, rho)] = facschur(rho.parts, pt, aT) if n else vs.one()
    return out


def _divide_vanishing(p: Poly, rho: BoxPartition) -> Poly:
    for a, b in vanishing_factors(rho):
        p = divide_by_difference(p, a, b)
    return p


@lru_cache(maxsize=None)
def specialized_values(nu: BoxPartition, mu: BoxPartition):
    """{sigma: Z~_{nu,mu}(T_sigma|t)} over the whole box, in VarSpace(N)."""
    from .walkers import partition_function
    shape = nu.shape
    vs0 = _vs(shape.N)
    z = partition_function(nu, mu, "vicious")
    n = shape.n
    out = {}
    for sigma in partitions(shape):
        if n:
            # x_i -> T_{sigma_i+n+1-i} is a pure relabelling of exponents
            val = permute_vars(z, {z.vs.x_index(i + 1): sigma[i] + n - 1 - i for i in range(n)})
        else:
            val = z
        out[sigma] = _lower(val, vs0)
    return out


@lru_cache(maxsize=None)
def cramer_column(nu: BoxPartition, mu: BoxPartition):
    """{sigma: sum_d q^d C^{nu,d}_{mu sigma^vee}(T)} by triangular elimination."""
    shape = nu.shape
    gamma = _gamma(shape)
    vals = specialized_values(nu, mu)
    X = {}
    for sigma in _order(list(partitions(shape))):
        rhs = vals[sigma]
        for rho, x in X.items():
            if x and rho != sigma and contained(rho.parts, sigma.parts):
                rhs = rhs - x * gamma[(sigma, rho)]
        X[sigma] = _divide_vanishing(rhs, sigma)
    return X


def cramer_literal(nu: BoxPartition, mu: BoxPartition, sigma: BoxPartition, max_size=7):
    """Cramer's rule on the system indexed by {rho contained in sigma}."""
    from .facschur import det
    from .lattice import CapExceeded
    shape = nu.shape
    gamma = _gamma(shape)
    vals = specialized_values(nu, mu)
    idx = _order([r for r in partitions(shape) if contained(r.parts, sigma.parts)])
    if len(idx) > max_size:
        raise CapExceeded(f"literal Cramer limited to {max_size} unknowns")
    vs = _vs(shape.N)
    mat = [[(vals[a] if b == sigma else gamma.get((a, b), vs.zero())) for b in idx] for a in idx]
    num = det(mat, vs.zero())
    if isinstance(num, int):
        num = vs.const(num)
    for rho in idx:
        if rho != sigma:
            num = _divide_vanishing(num, rho)
    return _divide_vanishing(num, sigma)


def gw(lam, mu, nu, d=0, route="operator", tvals=None, q=1.0, seed=0):
    """C^{nu,d}_{lam mu}(T).

    Exact routes return a Poly.  walker-expansion returns a complex number at
    t_j = tvals[j-1]; the q^d part is isolated by sampling q on a circle.
    """
    vs = _vs(lam.shape.N)
    if route == "operator":
        return product(lam, mu).get((nu, d), vs.zero())
    if route == "det-cramer":
        x = cramer_column(nu, mu)[complement(lam)]
        return split_q(x).get(d, vs.zero()) if x else vs.zero()
    if route == "walker-expansion":
        if tvals is None:
            raise ValueError("walker-expansion needs numeric tvals")
        return walker_coefficient(lam, mu, nu, d, tuple(tvals), q, seed)
    raise ValueError(f"unknown route {route!r}")


def walker_coefficient(lam, mu, nu, d, tvals, q=1.0, seed=0):
    from .walkers import walker_table
    D = len(degree_range(lam, mu, nu))
    if d >= D:
        return 0j
    total = 0j
    for s in range(D):
        qs = complex(q) * np.exp(2j * np.pi * s / D)
        table, _ = walker_table(lam.shape, tvals, qs, seed)
        total += table[(nu, mu)][lam] * qs ** (-d)
    return total / D


def evaluate(p: Poly, tvals, q=None):
    """Numeric value of a Poly in T (and q) at t_j = tvals[j-1]."""
    vs = p.vs
    N = vs.N
    sub = {N - j: complex(tvals[j - 1]) for j in range(1, N + 1)}
    sub[vs.q_index] = complex(q if q is not None else 0)
    for i in range(1, vs.m + 1):
        sub[vs.x_index(i)] = 0j
    v = substitute(p, sub)
    return complex(v)


# tables

class GWTable:
    """All C^{nu,d}_{lam mu}(T) for one shape, with provenance per entry."""

    def __init__(self, shape: BoxShape, entries=None, provenance=None):
        self.shape = shape
        self.entries = dict(entries or {})
        self.provenance = dict(provenance or {})

    @classmethod
    def build(cls, shape: BoxShape, routes=("operator",)):
        guard(shape.N)
        entries, prov = {}, {}
        parts = list(partitions(shape))
        for lam in parts:
            for mu in parts:
                for (nu, d), c in product(lam, mu).items():
                    entries[(lam, mu, nu, d)] = c
                    prov[(lam, mu, nu, d)] = ["operator"]
        table = cls(shape, entries, prov)
        if "det-cramer" in routes:
            bad = table.cross_check_cramer()
            if bad:
                raise AssertionError(f"det-cramer disagrees at {bad[0]}")
        return table

    def get(self, lam, mu, nu, d):
        return self.entries.get((lam, mu, nu, d), _vs(self.shape.N).zero())

    def cross_check_cramer(self):
        bad = []
        parts = list(partitions(self.shape))
        degs = {}
        for (l, m, n_, dd) in self.entries:
            degs.setdefault((l, m, n_), set()).add(dd)
        for nu in parts:
            for mu in parts:
                col = cramer_column(nu, mu)
                for sigma, x in col.items():
                    lam = complement(sigma)
                    by_d = split_q(x) if x else {}
                    for d in set(by_d) | degs.get((lam, mu, nu), set()):
                        if by_d.get(d, _vs(self.shape.N).zero()) != self.get(lam, mu, nu, d):
                            bad.append((lam.label(), mu.label(), nu.label(), d))
                        else:
                            key = (lam, mu, nu, d)
                            if key in self.provenance and "det-cramer" not in self.provenance[key]:
                                self.provenance[key].append("det-cramer")
        return bad

    def to_json(self):
        out = {}
        for (lam, mu, nu, d), c in sorted(self.entries.items(),
                                          key=lambda kv: (kv[0][0].parts, kv[0][1].parts,
                                                          kv[0][2].parts, kv[0][3])):
            key = f"{lam.label()}*{mu.label()}->({nu.label()},{d})"
            out[key] = {"value": to_string(c), "routes": self.provenance.get((lam, mu, nu, d), [])}
        return {"shape": [self.shape.n, self.shape.N], "entries": out}

    @classmethod
    def from_json(cls, obj):
        from .grbasis import parse_partition
        from .polyring import parse
        n, N = obj["shape"]
        shape = BoxShape.from_nN(n, N)
        vs = _vs(N)
        entries, prov = {}, {}
        for key, v in obj["entries"].items():
            left, right = key.split("->")
            a, b = left.split("*")
            nu_s, d_s = right[1:-1].rsplit(",", 1)
            k = (parse_partition(a, shape), parse_partition(b, shape),
                 parse_partition(nu_s, shape), int(d_s))
            entries[k] = parse(v["value"], vs)
            prov[k] = list(v["routes"])
        return cls(shape, entries, prov)


# dualities

def _minus_t(p: Poly):
    """T_i -> -t_i = -T_{N+1-i}."""
    vs = p.vs
    N = vs.N
    return substitute(p, {i - 1: -vs.T(N + 1 - i) for i in range(1, N + 1)})


def dualities(table: GWTable, dual: GWTable | None = None) -> IdentityReport:
    shape = table.shape
    params = {"n": shape.n, "N": shape.N}
    if dual is None:
        dual = table if shape.dual() == shape else GWTable.build(shape.dual())
    N = shape.N
    for (lam, mu, nu, d), c in table.entries.items():
        deg = lam.size + mu.size - nu.size - d * N
        if c.total_degree() != deg or not c.homogeneous_in(range(N)):
            return IdentityReport("dualities", params, False,
                                  {"check": "homogeneity", "key": [lam.label(), mu.label(), nu.label(), d]})
        if table.get(mu, lam, nu, d) != c:
            return IdentityReport("dualities", params, False,
                                  {"check": "symmetry", "key": [lam.label(), mu.label(), nu.label(), d]})
        other = dual.get(conjugate(lam), conjugate(mu), conjugate(nu), d)
        if _minus_t(other) != c:
            return IdentityReport("dualities", params, False,
                                  {"check": "level-rank", "key": [lam.label(), mu.label(), nu.label(), d],
                                   "difference": to_string(c - _minus_t(other))})
    empty = make((), shape)
    for lam in partitions(shape):
        for (nu, d), c in product(lam, empty).items():
            if nu != lam or d != 0 or c != _vs(N).one():
                return IdentityReport("dualities", params, False, {"check": "unit", "key": lam.label()})
    return IdentityReport("dualities", params, True)


# Kostka numbers and toric Schur functions

def kostka(alpha, mu: BoxPartition, route: str = "H"):
    """{(lam, d): K} from <lam|H~_alpha|mu> (route 'H') or <lam'|E~_alpha|mu'> (route 'E').

    The E route lives on the conjugate box and is read back through T -> -t.
    """
    shape = mu.shape
    N = shape.N
    vs = _vs(N)
    if route == "H":
        fac, start, sh = factorial_coeffs("H", shape), mu, shape
    else:
        sh = shape.dual()
        fac, start = factorial_coeffs("E", sh), conjugate(mu)
    vec = {word_from_partition(start): vs.one()}
    for a in alpha:
        if a not in fac:
            return {}
        vec = fac[a].apply(vec)
    out = {}
    for w, c in vec.items():
        lam = partition_from_word(w, sh)
        if route == "E":
            lam = conjugate(lam)
            c = _minus_t(c)
        for d, cd in split_q(c).items():
            out[(lam, d)] = cd
    return out


def _T_to_t(p: Poly):
    """C(T) -> C(t): T_i -> t_i = T_{N+1-i}."""
    vs = p.vs
    N = vs.N
    return substitute(p, {i - 1: vs.T(N + 1 - i) for i in range(1, N + 1)})


def toric_schur(lam: BoxPartition, d: int, mu: BoxPartition):
    """s_{lam/d/mu}(x|t) = sum_nu C^{lam^vee,d}_{mu^vee nu^vee}(t) s_nu(x|t), x = x_1..x_n."""
    shape = lam.shape
    N, n = shape.N, shape.n
    vs = VarSpace(N, max(n, 1))
    xs = [vs.x(i) for i in range(1, n + 1)]
    at = a_t(vs)
    total = vs.zero()
    lv, mv = complement(lam), complement(mu)
    for nu in partitions(shape):
        c = product(mv, complement(nu)).get((lv, d))
        if c is None:
            continue
        c = Poly(vs, _T_to_t(c).terms)
        total = total + c * (facschur(nu.parts, xs, at) if n else vs.one())
    return total


# Leibniz rule

def _apply_delta_vee(vec, j, N, vs):
    from .nilhecke import _move, _site
    a, b = _site(N, j), _site(N, j + 1)
    out = {}
    for w, c in vec.items():
        if w[a - 1] == 0 and w[b - 1] == 1:
            w2 = _move(w, b, a)
            v = out.get(w2)
            out[w2] = c if v is None else v + c
    return {w: c for w, c in out.items() if c}


def _twist(vec, j, N, vs):
    """delta_N^vee carries q^{-1}; the identities are cleared by q, so terms
    without a delta^vee pick up q when j = N."""
    if j % N:
        return vec
    q = vs.q()
    return {w: c * q for w, c in vec.items()}


def _swap_vec(vec, j):
    out = {}
    for w, c in vec.items():
        a, b = family_indices(c.vs, j, "t")
        out[w] = swap_indices(c, a, b)
    return out


def _vec_sub(a, b):
    out = dict(a)
    for w, c in b.items():
        v = out.get(w)
        out[w] = -c if v is None else v - c
    return {w: c for w, c in out.items() if c}


def leibniz_check(lam: BoxPartition, mu: BoxPartition, j: int) -> IdentityReport:
    """delta_j^vee(lam (*) mu) = s_j(lam (*) delta_j^vee mu) + d_j(lam (*) mu)."""
    from .nilhecke import divided_difference_vec
    shape = lam.shape
    N = shape.N
    params = {"lambda": lam.label(), "mu": mu.label(), "j": j, "N": N}
    for c in facs_coefficients(lam).values():
        a, b = family_indices(c.vs, j, "t")
        if swap_indices(c, a, b) != c:
            return IdentityReport("quantumLeibniz", params, False, {"precondition": "not met"})
    vs = _vs(N)
    S = schubert_operator(lam)
    start = {word_from_partition(mu): vs.one()}
    prod_vec = S.apply(start)
    lhs = _apply_delta_vee(prod_vec, j, N, vs)
    rhs1 = _swap_vec(S.apply(_apply_delta_vee(start, j, N, vs)), j)
    rhs2 = _twist(divided_difference_vec(prod_vec, j, N), j, N, vs)
    rhs = dict(rhs1)
    for w, c in rhs2.items():
        v = rhs.get(w)
        rhs[w] = c if v is None else v + c
    diff = _vec_sub(lhs, rhs)
    if diff:
        w, c = min(diff.items())
        return IdentityReport("quantumLeibniz", params, False,
                              {"word": "".join(map(str, w)), "difference": to_string(c)})
    return IdentityReport("quantumLeibniz", params, True)


def chern_leibniz_check(mu: BoxPartition, j: int) -> IdentityReport:
    """First Chern class: extra term (delta_{jn} - delta_{jN}) r^_j mu."""
    from .nilhecke import divided_difference_vec
    shape = mu.shape
    N, n = shape.N, shape.n
    params = {"mu": mu.label(), "j": j, "N": N}
    if n == 0 or shape.k == 0:
        # no single box in a degenerate box
        return IdentityReport("chernLeibniz", params, False, {"precondition": "not met"})
    vs = _vs(N)
    box = make((1,), shape)
    S = schubert_operator(box)
    start = {word_from_partition(mu): vs.one()}
    prod_vec = S.apply(start)
    lhs = _apply_delta_vee(prod_vec, j, N, vs)
    rhs = _swap_vec(S.apply(_apply_delta_vee(start, j, N, vs)), j)
    for w, c in _twist(divided_difference_vec(prod_vec, j, N), j, N, vs).items():
        v = rhs.get(w)
        rhs[w] = c if v is None else v + c
    sign = (1 if j == n else 0) - (1 if j == N else 0)
    if sign:
        # r^_j mu = mu - (t_j - t_{j+1}) delta_j^vee mu
        a, b = family_indices(vs, j, "t")
        tj = vs.var(a) - vs.var(b)
        rvec = _vec_sub(_twist(start, j, N, vs),
                        {w: c * tj for w, c in _apply_delta_vee(start, j, N, vs).items()})
        for w, c in rvec.items():
            v = rhs.get(w)
            rhs[w] = c * sign if v is None else v + c * sign
    diff = _vec_sub(lhs, rhs)
    if diff:
        w, c = min(diff.items())
        return IdentityReport("chernLeibniz", params, False,
                              {"word": "".join(map(str, w)), "difference": to_string(c)})
    return IdentityReport("chernLeibniz", params, True)


# classical oracles

def _lr_brute(lam, mu, nu):
    """Littlewood-Richardson number c^nu_{lam mu} by counting LR fillings of nu/lam."""
    lam = list(lam) + [0] * (len(nu) - len(lam))
    if any(l > v for l, v in zip(lam, nu)):
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    rows = [(lam[i], nu[i]) for i in range(len(nu))]
    cells = [(i, j) for i, (a, b) in enumerate(rows) for j in range(a, b)]
    weight = [m for m in mu if m]
    m = len(weight)
    count = 0

    def ok_word(fill):
        # reading word: rows top to bottom, right to left; lattice condition
        cnt = [0] * (m + 1)
        for i, (a, b) in enumerate(rows):
            for j in range(b - 1, a - 1, -1):
                v = fill[(i, j)]
                cnt[v] += 1
                if v > 1 and cnt[v] > cnt[v - 1]:
                    return False
        return all(cnt[v] == weight[v - 1] for v in range(1, m + 1))

    def rec(idx, fill):
        nonlocal count
        if idx == len(cells):
            if ok_word(fill):
                count += 1
            return
        i, j = cells[idx]
        lo = 1
        if j - 1 >= lam[i] and (i, j - 1) in fill:
            lo = fill[(i, j - 1)]
        for v in range(lo, m + 1):
            if i > 0 and j < nu[i - 1] and j >= lam[i - 1]:
                if v <= fill[(i - 1, j)]:
                    continue
            fill[(i, j)] = v
            rec(idx + 1, fill)
            del fill[(i, j)]

    if m == 0:
        return 1 if list(lam) == list(nu) else 0
    rec(0, {})
    return count


def classical_table_check(shape: BoxShape) -> IdentityReport:
    """q = 0, t = 0 structure constants equal brute-force LR numbers."""
    params = {"n": shape.n, "N": shape.N}
    parts = list(partitions(shape))
    for lam in parts:
        for mu in parts:
            prod_ = product(lam, mu)
            for nu in parts:
                c = prod_.get((nu, 0))
                val = c.terms.get(0, 0) if c is not None and c.total_degree() == 0 else 0
                if c is not None and c.total_degree() > 0:
                    val = 0
                lr = _lr_brute(lam.parts, mu.parts, nu.parts)
                if val != lr:
                    return IdentityReport("classical-LR", params, False,
                                          {"key": [lam.label(), mu.label(), nu.label()], "got": val, "lr": lr})
    return IdentityReport("classical-LR", params, True)


def localization_values(lam: BoxPartition):
    """{subset: s_lam(t_subset|t)} over n-subsets of {1..N}."""
    from itertools import combinations
    shape = lam.shape
    vs = _vs(shape.N)
    at = a_t(vs)
    out = {}
    for S in combinations(range(1, shape.N + 1), shape.n):
        out[S] = facschur(lam.parts, [vs.t(i) for i in S], at) if shape.n else vs.one()
    return out


def gkm_table_check(shape: BoxShape) -> IdentityReport:
    """At q = 0: localisation of products and GKM divisibility of each class."""
    from itertools import combinations
    params = {"n": shape.n, "N": shape.N}
    N = shape.N
    vs = _vs(N)
    parts = list(partitions(shape))
    loc = {lam: localization_values(lam) for lam in parts}
    subsets = list(combinations(range(1, N + 1), shape.n))
    for lam in parts:
        for S in subsets:
            for i in S:
                for j in range(1, N + 1):
                    if j in S:
                        continue
                    S2 = tuple(sorted([x for x in S if x != i] + [j]))
                    diff = loc[lam][S] - loc[lam][S2]
                    try:
                        divide_by_difference(diff, N - i, N - j)
                    except PolyError:
                        return IdentityReport("gkm", params, False,
                                              {"check": "divisibility", "lambda": lam.label(),
                                               "points": [list(S), list(S2)]})
    for lam in parts:
        for mu in parts:
            prod_ = product(lam, mu)
            for S in subsets:
                rhs = vs.zero()
                for (nu, d), c in prod_.items():
                    if d == 0:
                        rhs = rhs + c * loc[nu][S]
                if rhs != loc[lam][S] * loc[mu][S]:
                    return IdentityReport("gkm", params, False,
                                          {"check": "localisation", "key": [lam.label(), mu.label()],
                                           "point": list(S)})
    return IdentityReport("gkm", params, True)


def associativity_check(shape: BoxShape, triples=None) -> IdentityReport:
    vs = _vs(shape.N)
    parts = list(partitions(shape))
    if triples is None:
        triples = list(iproduct(parts, parts, parts))

    def mul_vec(lam, vec):
        S = schubert_operator(lam)
        return S.apply(vec)

    for a, b, c in triples:
        left = {}
        vc = {word_from_partition(c): vs.one()}
        # (a*b)*c = sum coeff * S_nu |c>
        ab = schubert_operator(a).apply({word_from_partition(b): vs.one()})
        for w, coeff in ab.items():
            nu = partition_from_word(w, shape)
            for w2, c2 in mul_vec(nu, vc).items():
                v = left.get(w2)
                left[w2] = coeff * c2 if v is None else v + coeff * c2
        left = {w: x for w, x in left.items() if x}
        right = mul_vec(a, mul_vec(b, vc))
        if left != right:
            return IdentityReport("associativity", {"n": shape.n, "N": shape.N}, False,
                                  {"triple": [a.label(), b.label(), c.label()]})
    return IdentityReport("associativity", {"n": shape.n, "N": shape.N}, True)


# worked Gr(2,4) expansions

def golden_products():
    """{(lam, mu): {(nu, d): C}} for (2,1)*(2,2) and (2,1)*(2,1) in Gr(2,4)."""
    shape = BoxShape(2, 2)
    vs = _vs(4)
    P = lambda *p: make(p, shape)

    def T(i, j):
        return vs.T(i) - vs.T(j)

    one = vs.one()
    return {
        (P(2, 1), P(2, 2)): {(P(2, 2), 0): T(1, 4) * T(1, 3) * T(2, 4), (P(2, 1), 1): one,
                             (P(2), 1): T(1, 3), (P(1, 1), 1): T(2, 4),
                             (P(1), 1): T(1, 3) * T(2, 4)},
        (P(2, 1), P(2, 1)): {(P(2, 2), 0): T(1, 4) ** 2, (P(2, 1), 0): T(1, 4) * T(1, 2) * T(3, 4),
                             (P(2), 1): one, (P(1, 1), 1): one, (P(1), 1): T(1, 4),
                             (P(), 1): T(1, 2) * T(3, 4)},
    }


def golden_check(route: str = "jacobi-trudi") -> IdentityReport:
    for (lam, mu), want in golden_products().items():
        got = product(lam, mu, route)
        if got != want:
            diff = {f"({nu.label()},{d})": to_string(got.get((nu, d), _vs(4).zero()))
                    for (nu, d) in set(got) | set(want) if got.get((nu, d)) != want.get((nu, d))}
            return IdentityReport("golden-products", {"route": route}, False,
                                  {"lambda": lam.label(), "mu": mu.label(), "got": diff})
    return IdentityReport("golden-products", {"route": route}, True)


def three_route_check(shape: BoxShape, seed=0, q=1.0, tol=1e-9) -> IdentityReport:
    """operator == det-cramer exactly; walker expansion agrees numerically for every d.

    The walker route is sampled at q on a circle of D points, D one more than
    the largest admissible degree, which separates all q^d parts at once.
    """
    from .walkers import walker_table
    params = {"n": shape.n, "N": shape.N, "seed": seed}
    table = GWTable.build(shape)
    bad = table.cross_check_cramer()
    if bad:
        return IdentityReport("three-route", params, False, {"det-cramer": bad[0]})
    parts = list(partitions(shape))
    D = max(len(degree_range(l, m, n_)) for l in parts for m in parts for n_ in parts)
    D = max(D, 1)
    rng = np.random.default_rng(seed)
    tv = tuple(complex(v) for v in rng.normal(size=shape.N) + 1j * rng.normal(size=shape.N))
    samples = []
    cond = 0.0
    for s in range(D):
        qs = complex(q) * np.exp(2j * np.pi * s / D)
        tab, c = walker_table(shape, tv, qs, seed)
        samples.append((qs, tab))
        cond = max(cond, c)
    worst = 0.0
    for lam in parts:
        for mu in parts:
            for nu in parts:
                for d in range(D):
                    num = sum(tab[(nu, mu)][lam] * qs ** (-d) for qs, tab in samples) / D
                    ex = evaluate(table.get(lam, mu, nu, d), tv) * complex(q) ** d
                    err = abs(num - ex) / max(1.0, abs(ex))
                    if err > worst:
                        worst = err
                        where = (lam.label(), mu.label(), nu.label(), d)
    params.update({"walker_max_rel_err": worst, "cond": cond})
    if worst > tol:
        return IdentityReport("three-route", params, False, {"walker": where, "err": worst})
    return IdentityReport("three-route", params, True)
