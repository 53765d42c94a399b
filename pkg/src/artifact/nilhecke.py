"""Nil-Coxeter and nil-Hecke actions on the quantum space.

delta_j moves a particle right (10 -> 01 at sites j, j+1), delta_j^vee moves
it left.  Sites are taken mod N; the affine generator j = N couples site N to
site 1 and carries the quantum twist q (delta_N) or q^{-1} (delta_N^vee).
Generators with t^{-1} are LaurentOp values: an integral numerator operator
over a central monomial denominator.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .grbasis import BoxShape
from .lattice import (IdentityReport, OperatorVn, all_words, omega_op, proj0,
                      proj1, sector, sigma_minus, sigma_plus)
from .polyring import BITS, MASK, Poly, VarSpace, permute_vars, swap_vars


def _site(N, j):
    return ((j - 1) % N) + 1


def _move(w, a, b):
    """Move the particle at site a to the empty site b."""
    w = list(w)
    w[a - 1], w[b - 1] = 0, 1
    return tuple(w)


def delta(N, vs, j, domain, q=None):
    a, b = _site(N, j), _site(N, j + 1)
    coeff = q if (q is not None and j % N == 0) else 1
    return OperatorVn.from_local(
        N, vs, lambda w: [(_move(w, a, b), coeff)] if w[a - 1] == 1 and w[b - 1] == 0 else [], domain)


def delta_vee_num(N, vs, j, domain):
    a, b = _site(N, j), _site(N, j + 1)
    return OperatorVn.from_local(
        N, vs, lambda w: [(_move(w, b, a), 1)] if w[a - 1] == 0 and w[b - 1] == 1 else [], domain)


class LaurentOp:
    """num / den with den a monomial Poly; monomials are central."""

    __slots__ = ("num", "den")

    def __init__(self, num: OperatorVn, den: Poly | None = None):
        self.num = num
        self.den = den if den is not None else num.vs.one()

    def __mul__(self, other):
        if isinstance(other, LaurentOp):
            return LaurentOp(self.num * other.num, self.den * other.den)
        if isinstance(other, OperatorVn):
            return LaurentOp(self.num * other, self.den)
        if isinstance(other, (int, Poly)):
            return LaurentOp(self.num * other, self.den)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, OperatorVn):
            return LaurentOp(other * self.num, self.den)
        if isinstance(other, (int, Poly)):
            return LaurentOp(self.num * other, self.den)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, OperatorVn):
            other = LaurentOp(other)
        if self.den == other.den:
            return LaurentOp(self.num + other.num, self.den)
        return LaurentOp(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return LaurentOp(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentOp) else LaurentOp(-other))

    def __eq__(self, other):
        if isinstance(other, OperatorVn):
            other = LaurentOp(other)
        if not isinstance(other, LaurentOp):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def to_operator(self):
        """Exact numerator/denominator division; raises if not polynomial."""
        if self.den.is_const() and self.den.const_value() == 1:
            return self.num
        (dk, dc), = self.den.terms.items()
        if dc not in (1, -1):
            raise ValueError("denominator must be a unit monomial")
        nv = self.num.vs.nvars
        ent = {}
        for key, p in self.num.entries.items():
            t = {}
            for k, c in p.terms.items():
                for i in range(nv):
                    if ((k >> (BITS * i)) & MASK) < ((dk >> (BITS * i)) & MASK):
                        raise ValueError("operator is not polynomial")
                t[k - dk] = c * dc
            ent[key] = Poly(p.vs, t)
        return OperatorVn(self.num.N, self.num.vs, ent)


def delta_ops(shape_or_N, j, variant="delta", q=None, vs=None, domain=None):
    """delta_j or delta_j^vee; affine j = N carries q resp. q^{-1}."""
    N = shape_or_N.N if isinstance(shape_or_N, BoxShape) else shape_or_N
    vs = vs or VarSpace(N)
    if domain is None:
        domain = sector(shape_or_N) if isinstance(shape_or_N, BoxShape) else all_words(N)
    if variant == "delta":
        return delta(N, vs, j, domain, q)
    if variant in ("delta_vee", "vee"):
        op = delta_vee_num(N, vs, j, domain)
        if q is not None and j % N == 0:
            return LaurentOp(op, q)
        return op
    raise ValueError(f"unknown variant {variant!r}")


# t-hat, t-check, upsilon and the three nil-Hecke representations

def t_hat(N, vs, j, domain):
    return proj0(N, vs, _site(N, j), domain, vs.t(_site(N, j)))


def t_check(N, vs, j, domain):
    return proj1(N, vs, _site(N, j), domain, vs.t(_site(N, j)))


def upsilon(N, vs, j, domain, q=None):
    """t_j rho_t(pi_j) = delta_j - t_j P0_j."""
    return delta(N, vs, j, domain, q) - t_hat(N, vs, j, domain)


def upsilon_bar(N, vs, j, domain, q=None):
    """t_j rho_t(pi_j + 1) = delta_j + t_j P1_j."""
    return delta(N, vs, j, domain, q) + t_check(N, vs, j, domain)


def rho_t(N, vs, j, domain, q=None):
    return LaurentOp(upsilon(N, vs, j, domain, q), vs.t(_site(N, j)))


def rho_T_vee(N, vs, j, domain):
    """T_{j+1}^{-1} sigma^+_j sigma^-_{j+1} - P0_{j+1}."""
    b = _site(N, j + 1)
    Tb = vs.T(b)
    return LaurentOp(delta_vee_num(N, vs, j, domain) - proj0(N, vs, b, domain, Tb), Tb)


def rho_t_prime(N, vs, j, domain, q=None):
    """t_{j+1}^{-1} sigma^-_j sigma^+_{j+1} - P0_{j+1}."""
    b = _site(N, j + 1)
    tb = vs.t(b)
    return LaurentOp(delta(N, vs, j, domain, q) - proj0(N, vs, b, domain, tb), tb)


VARIANTS = {"rho_t": rho_t, "rho_T_vee": rho_T_vee, "rho_t_prime": rho_t_prime}


# braid matrices and the affine symmetric group action

def r_hat(N, vs, j, domain, a=None, b=None):
    """1 - (a - b) delta_j^vee with (a, b) = (t_j, t_{j+1}) by default."""
    a = vs.t(_site(N, j)) if a is None else a
    b = vs.t(_site(N, j + 1)) if b is None else b
    return OperatorVn.identity(N, vs, domain) - delta_vee_num(N, vs, j, domain).scale(a - b)


def braid_rhat(shape_or_N, j, vs=None, domain=None):
    N = shape_or_N.N if isinstance(shape_or_N, BoxShape) else shape_or_N
    vs = vs or VarSpace(N)
    if domain is None:
        domain = sector(shape_or_N) if isinstance(shape_or_N, BoxShape) else all_words(N)
    return r_hat(N, vs, j, domain)


def t_perm_swap(N, j):
    """Transposition of t-indices j, j+1 (mod N) as a tuple image map."""
    img = list(range(1, N + 1))
    a, b = _site(N, j), _site(N, j + 1)
    img[a - 1], img[b - 1] = b, a
    return tuple(img)


def apply_t_perm(p: Poly, perm):
    """Substitute t_i -> t_{perm(i)}."""
    N = p.vs.N
    # t_i is variable index N - i
    mapping = {N - i: N - perm[i - 1] for i in range(1, N + 1) if perm[i - 1] != i}
    return permute_vars(p, mapping) if mapping else p


def compose_perm(s, t):
    return tuple(s[t[i] - 1] for i in range(len(t)))


def invert_perm(s):
    inv = [0] * len(s)
    for i, v in enumerate(s, start=1):
        inv[v - 1] = i
    return tuple(inv)


class SemilinearOp:
    """Psi -> w(M Psi) with w a permutation of the t-variables."""

    def __init__(self, perm, mat: OperatorVn):
        self.perm = tuple(perm)
        self.mat = mat

    def __mul__(self, other):
        if isinstance(other, SemilinearOp):
            winv = invert_perm(other.perm)
            moved = self.mat.map_entries(lambda p: apply_t_perm(p, winv))
            return SemilinearOp(compose_perm(self.perm, other.perm), moved * other.mat)
        if isinstance(other, OperatorVn):
            return SemilinearOp(self.perm, self.mat * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, OperatorVn):
            winv = invert_perm(self.perm)
            return SemilinearOp(self.perm, other.map_entries(lambda p: apply_t_perm(p, winv)) * self.mat)
        return NotImplemented

    def __add__(self, other):
        if self.perm != other.perm:
            raise ValueError("adding semilinear maps with different twists")
        return SemilinearOp(self.perm, self.mat + other.mat)

    def __eq__(self, other):
        return self.perm == other.perm and self.mat == other.mat

    __hash__ = None

    def apply(self, vec):
        out = self.mat.apply(vec)
        return {w: apply_t_perm(c, self.perm) for w, c in out.items()}


def s_op(N, vs, j, domain):
    return SemilinearOp(t_perm_swap(N, j), OperatorVn.identity(N, vs, domain))


def bold_s(shape_or_N, j, vs=None, domain=None):
    """bold s_j = s_j o r_hat_j."""
    N = shape_or_N.N if isinstance(shape_or_N, BoxShape) else shape_or_N
    vs = vs or VarSpace(N)
    if domain is None:
        domain = sector(shape_or_N) if isinstance(shape_or_N, BoxShape) else all_words(N)
    return SemilinearOp(t_perm_swap(N, j), r_hat(N, vs, j, domain))


def qkz_residual(psi: dict, j: int, N: int, vs: VarSpace | None = None):
    """(r_hat_j - s_j) Psi as a vector over Poly."""
    vs = vs or next(iter(psi.values())).vs if psi else VarSpace(N)
    dom = list(psi)
    rh = r_hat(N, vs, j, dom)
    a = rh.apply(psi)
    perm = t_perm_swap(N, j)
    b = {w: apply_t_perm(c, perm) for w, c in psi.items()}
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, vs.zero()) - c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def divided_difference_vec(psi, j, N):
    from .polyring import divided_difference
    out = {}
    for w, c in psi.items():
        d = divided_difference(c, j if j < N else N, "t")
        if d:
            out[w] = d
    return out


# cyclic words

def cyclic_words(N, r, orientation):
    """Letter sequences (left to right) of all (anti)clockwise words of length r < N."""
    out = []
    if r >= N:
        return out
    for S in combinations(range(1, N + 1), r):
        Sset = set(S)
        missing = next(m for m in range(1, N + 1) if m not in Sset)
        # offsets along the circle starting after the missing letter
        order = sorted(S, key=lambda j: (j - missing) % N)
        if orientation == "anticlockwise":
            order = order[::-1]   # j+1 precedes j
        out.append(tuple(order))
    return out


@lru_cache(maxsize=None)
def _gens(shape, kind, q):
    N = shape.N
    vs = VarSpace(N)
    dom = sector(shape)
    qv = vs.q() if q else None
    mk = upsilon if kind == "H" else upsilon_bar
    return vs, dom, {j: mk(N, vs, j, dom, qv) for j in range(1, N + 1)}


@lru_cache(maxsize=None)
def transfer_from_cyclic_words(r: int, kind: str, shape: BoxShape, q: bool = True):
    """H_r (anticlockwise words, delta - t-hat) or E_r (clockwise, delta + t-check)."""
    kind = {"vicious": "H", "osculating": "E"}.get(kind, kind)
    vs, dom, gens = _gens(shape, kind, q)
    N = shape.N
    total = OperatorVn(N, vs, {})
    if r == 0:
        return OperatorVn.identity(N, vs, dom)
    orient = "anticlockwise" if kind == "H" else "clockwise"
    for word in cyclic_words(N, r, orient):
        op = gens[word[-1]]
        for j in reversed(word[:-1]):
            op = gens[j] * op
        total = total + op
    return total


def word_product(word, gens):
    op = gens[word[-1]]
    for j in reversed(word[:-1]):
        op = gens[j] * op
    return op


# monodromy blocks as nil-Hecke sums

def sigma_sums(N, vs, domain, r, kind):
    """Sigma^{N,>}_r (kind 'H') or Sigma^{N,<}_r (kind 'E') over letters 1..N-1."""
    if r == 0:
        return OperatorVn.identity(N, vs, domain)
    total = OperatorVn(N, vs, {})
    for S in combinations(range(1, N), r):
        if kind == "H":
            gens = [upsilon(N, vs, j, domain) for j in S]
            op = gens[0]
            for g in gens[1:]:
                op = g * op           # (u_{j_r}) ... (u_{j_1})
        else:
            gens = [upsilon_bar(N, vs, j, domain) for j in S]
            op = gens[-1]
            for g in reversed(gens[:-1]):
                op = g * op           # (ub_{j_1}) ... (ub_{j_r})
        total = total + op
    return total


def monodromy_from_hecke(N, vs, domain, r, kind):
    """{(a, b): block_r} following the nil-Hecke block formulae."""
    sp1 = sigma_plus(N, vs, 1, domain)
    smN = sigma_minus(N, vs, N, domain)
    zero = OperatorVn(N, vs, {})
    if kind == "H":
        def A(s):
            if s < 0:
                return zero
            out = sigma_sums(N, vs, domain, s, "H")
            if s >= 1:
                out = out - t_hat(N, vs, N, domain) * sigma_sums(N, vs, domain, s - 1, "H")
            return out
        return {(0, 0): A(r), (0, 1): A(r - 1) * sp1, (1, 0): smN * A(r),
                (1, 1): smN * A(r - 1) * sp1}

    def Ap(s):
        if s < 0:
            return zero
        out = sigma_sums(N, vs, domain, s, "E")
        if s >= 1:
            out = out + sigma_sums(N, vs, domain, s - 1, "E") * t_check(N, vs, N, domain)
        return out
    return {(0, 0): Ap(r), (0, 1): sp1 * Ap(r - 1), (1, 0): Ap(r) * smN,
            (1, 1): sp1 * Ap(r - 1) * smN}


# relation checks

def _report(id, params, failures):
    if failures:
        return IdentityReport(id, params, False, failures[0])
    return IdentityReport(id, params, True)


def verify_hecke_relations(variant: str, N: int = 5, q: bool = False) -> IdentityReport:
    """Defining relations of a representation, checked with cleared denominators.

    variant: rho_t, rho_T_vee, rho_t_prime, pi_bar, upsilon, nil_coxeter,
    nil_coxeter_vee, bold_s, r_hat.
    """
    vs = VarSpace(N)
    dom = all_words(N)
    qv = vs.q() if q else None
    fails = []
    idx = range(1, N + 1)

    def check(label, lhs, rhs):
        if not (lhs == rhs):
            fails.append({"relation": label})

    def commuting_pairs():
        for i in idx:
            for j in idx:
                if i < j and (j - i) % N not in (1, N - 1):
                    yield i, j

    if variant in VARIANTS:
        gen = VARIANTS[variant]
        P = {j: (gen(N, vs, j, dom, qv) if variant != "rho_T_vee" else gen(N, vs, j, dom)) for j in idx}
        for j in idx:
            check(f"pi_{j}^2 = -pi_{j}", P[j] * P[j], -P[j])
            jn = _site(N, j + 1)
            if N > 2:
                check(f"braid {j},{jn}", P[j] * P[jn] * P[j], P[jn] * P[j] * P[jn])
        for i, j in commuting_pairs():
            check(f"commute {i},{j}", P[i] * P[j], P[j] * P[i])
    elif variant == "pi_bar":
        one = OperatorVn.identity(N, vs, dom)
        for j in idx:
            pb = rho_t(N, vs, j, dom, qv) + one
            check(f"pibar_{j}^2 = pibar_{j}", pb * pb, pb)
    elif variant == "upsilon":
        U = {j: upsilon(N, vs, j, dom, qv) for j in idx}
        for j in idx:
            tj = vs.t(j)
            check(f"u_{j}^2 = -t_{j} u_{j}", U[j] * U[j], U[j].scale(-tj))
            jn = _site(N, j + 1)
            if N > 2:
                # t_{j+1} u_j u_{j+1} u_j = t_j u_{j+1} u_j u_{j+1}
                check(f"deformed braid {j}", (U[j] * U[jn] * U[j]).scale(vs.t(jn)),
                      (U[jn] * U[j] * U[jn]).scale(tj))
    elif variant in ("nil_coxeter", "nil_coxeter_vee"):
        if variant == "nil_coxeter":
            D = {j: delta(N, vs, j, dom, qv) for j in idx}
        else:
            D = {j: delta_vee_num(N, vs, j, dom) for j in idx}
        for j in idx:
            check(f"d_{j}^2 = 0", D[j] * D[j], OperatorVn(N, vs, {}))
            jn = _site(N, j + 1)
            if N > 2:
                check(f"nil-TL {j}", D[j] * D[jn] * D[j], OperatorVn(N, vs, {}))
                check(f"nil-TL' {j}", D[jn] * D[j] * D[jn], OperatorVn(N, vs, {}))
        for i, j in commuting_pairs():
            check(f"commute {i},{j}", D[i] * D[j], D[j] * D[i])
    elif variant == "bold_s":
        S = {j: bold_s(N, j, vs, dom) for j in idx}
        ident = SemilinearOp(tuple(range(1, N + 1)), OperatorVn.identity(N, vs, dom))
        for j in idx:
            check(f"s_{j}^2 = 1", S[j] * S[j], ident)
            jn = _site(N, j + 1)
            if N > 2:
                check(f"braid {j}", S[j] * S[jn] * S[j], S[jn] * S[j] * S[jn])
        for i, j in commuting_pairs():
            check(f"commute {i},{j}", S[i] * S[j], S[j] * S[i])
    elif variant == "r_hat":
        one = OperatorVn.identity(N, vs, dom)
        for j in idx:
            R = r_hat(N, vs, j, dom)
            check(f"(i) r_{j}", R * R - R.scale(2) + one, OperatorVn(N, vs, {}))
            jn, jnn = _site(N, j + 1), _site(N, j + 2)
            if N > 2:
                t = lambda i: vs.t(_site(N, i))
                lhs = (r_hat(N, vs, j, dom, t(j + 1), t(j + 2)) * r_hat(N, vs, jn, dom, t(j), t(j + 2))
                       * r_hat(N, vs, j, dom, t(j), t(j + 1)))
                rhs = (r_hat(N, vs, jn, dom, t(j), t(j + 1)) * r_hat(N, vs, j, dom, t(j), t(j + 2))
                       * r_hat(N, vs, jn, dom, t(j + 1), t(j + 2)))
                check(f"(ii) {j}", lhs, rhs)
        # (iii)
        Om = omega_op(N, vs, dom)
        Omi = omega_op(N, vs, dom, inverse=True)
        for j in idx:
            R = r_hat(N, vs, j, dom)
            sj = s_op(N, vs, j, dom)
            Rinv = one.scale(2) - R
            check(f"(iii) s_{j} r_{j}", sj * R, Rinv * sj)
            for i in idx:
                if N <= 2:
                    continue
                sep = (i - j) % N
                si = s_op(N, vs, i, dom)
                if sep not in (1, N - 1):
                    if i != j:
                        check(f"(iii) s_{i} r_{j}", si * R, R * si)
                    continue
                if sep == 1:   # i = j + 1: Omega^{-1} (r_{j+1} - 1) Omega
                    X = Omi * (r_hat(N, vs, i, dom) - one) * Om
                else:          # i = j - 1: Omega (r_{j-1} - 1) Omega^{-1}
                    X = Om * (r_hat(N, vs, i, dom) - one) * Omi
                check(f"(iii) s_{i} r_{j}", si * R, (R * si) + (X * si))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _report(f"hecke:{variant}", {"N": N, "q": q}, fails)
