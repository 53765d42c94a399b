"""Operator identities for the transfer matrices, checked exactly.

Every check builds both sides as OperatorVn over Poly and compares entries.
Denominators (1 - x t_j), q^{-1} are cleared by multiplying through.
"""

from __future__ import annotations

from itertools import product as iproduct

from .grbasis import BoxShape, complement, partitions
from .lattice import (IdentityReport, OperatorVn, all_words, monodromy_blocks, omega_op,
                      proj0, proj1, sector, substitute_op, t_to_minus_T, theta_op,
                      transfer_matrix, transfer_via_trace)
from .polyring import Poly, VarSpace, divided_difference, elementary, permute_vars, substitute

KINDS = {"H": "vicious", "E": "osculating"}


def _report(id, shape, ok, detail=None, **extra):
    params = {"n": shape.n, "N": shape.N} if shape is not None else {}
    params.update(extra)
    return IdentityReport(id, params, ok, None if ok else detail)


def _cmp(lhs: OperatorVn, rhs: OperatorVn):
    return lhs.first_difference(rhs)


def _row(kind, shape, xidx, m, q=True, tvals=None):
    return transfer_matrix(KINDS.get(kind, kind), shape, xidx, q, m, tvals)


def _neg_x(op: OperatorVn, xidx):
    vs = op.vs
    return substitute_op(op, {vs.x_index(xidx): -vs.x(xidx)})


def _scalar(shape, vs, p):
    return OperatorVn.identity(shape.N, vs, sector(shape)).scale(p)


# functional relations

def qq(shape: BoxShape) -> IdentityReport:
    """H(x)E(-x) = prod(1 - x t_j) + q x^N prod sigma^z on V_n."""
    H = _row("H", shape, 1, 1)
    E = _neg_x(_row("E", shape, 1, 1), 1)
    vs = H.vs
    x = vs.x(1)
    prod_ = vs.one()
    for j in range(1, shape.N + 1):
        prod_ = prod_ * (1 - x * vs.t(j))
    sz = -1 if shape.n % 2 else 1          # sigma^z = diag(1, -1) on (empty, occupied)
    rhs = _scalar(shape, vs, prod_ + vs.q() * x ** shape.N * sz)
    diff = _cmp(H * E, rhs)
    return _report("QQ", shape, diff is None, diff)


def givental_kim(shape: BoxShape) -> IdentityReport:
    """sum_{i+j=r} (-1)^j H_i E_j = (-1)^r e_r(t) for r < N; top relation carries q."""
    Hs = transfer_via_trace("H", shape)
    Es = transfer_via_trace("E", shape)
    vs = VarSpace(shape.N)
    ts = [vs.t(j) for j in range(1, shape.N + 1)]
    sz = -1 if shape.n % 2 else 1
    for r in range(shape.N + 1):
        lhs = OperatorVn(shape.N, vs, {})
        for i in range(r + 1):
            j = r - i
            if i in Hs and j in Es:
                term = Hs[i] * Es[j]
                lhs = lhs + (term if j % 2 == 0 else -term)
        c = elementary(r, ts, vs)
        c = c if r % 2 == 0 else -c
        if r == shape.N:
            c = c + vs.q() * sz
        diff = _cmp(lhs, _scalar(shape, vs, c))
        if diff is not None:
            diff["r"] = r
            return _report("givental-kim", shape, False, diff)
    return _report("givental-kim", shape, True)


def degree_bounds(shape: BoxShape) -> IdentityReport:
    """H_r = 0 for r > k and E_r = 0 for r > n on V_n (coefficients beyond the bounds)."""
    for kind, bound in (("H", shape.k), ("E", shape.n)):
        op = _row(kind, shape, 1, 1)
        cx = op.x_coefficients(op.vs.x_index(1))
        extra = [d for d, c in cx.items() if d > bound and not c.is_zero()]
        if extra:
            return _report("degree-bounds", shape, False, {"kind": kind, "degree": extra[0]})
    return _report("degree-bounds", shape, True)


# commutation

def commute(shape: BoxShape, a="H", b="H") -> IdentityReport:
    A = _row(a, shape, 1, 2)
    B = _row(b, shape, 2, 2)
    diff = _cmp(A * B, B * A)
    return _report(f"{a}{b}-commute", shape, diff is None, diff)


# symmetric group action

def _bold_s_cleared(N, vs, j, domain, q):
    """(perm, q r_hat_j) at j = N with the q^{-1}-twisted delta_N^vee, else (perm, r_hat_j)."""
    from .nilhecke import delta_vee_num, t_perm_swap, _site
    a, b = vs.t(_site(N, j)), vs.t(_site(N, j + 1))
    one = OperatorVn.identity(N, vs, domain)
    dv = delta_vee_num(N, vs, j, domain).scale(a - b)
    if j % N == 0 and q:
        return t_perm_swap(N, j), one.scale(vs.q()) - dv, True
    return t_perm_swap(N, j), one - dv, False


def _twisted_commutes(op: OperatorVn, N, vs, j, domain, q):
    """bold s_j op = op bold s_j  <=>  r_hat op = (s_j op) r_hat."""
    from .nilhecke import apply_t_perm
    perm, R, _ = _bold_s_cleared(N, vs, j, domain, q)
    sop = op.map_entries(lambda p: apply_t_perm(p, perm))
    return _cmp(R * op, sop * R)


def s_action_he(shape: BoxShape, q=True) -> IdentityReport:
    vs = VarSpace(shape.N)
    dom = sector(shape)
    for kind in ("H", "E"):
        fam = transfer_via_trace(kind, shape, q)
        for j in range(1, shape.N + 1):
            for r, op in fam.items():
                diff = _twisted_commutes(op, shape.N, vs, j, dom, q)
                if diff is not None:
                    diff.update({"kind": kind, "r": r, "j": j})
                    return _report("S-action-HE", shape, False, diff)
    return _report("S-action-HE", shape, True)


def s_action_m(N: int) -> IdentityReport:
    vs = VarSpace(N, 1)
    dom = all_words(N)
    shape = BoxShape(0, N)
    for kind in ("vicious", "osculating"):
        blocks = monodromy_blocks(kind, N, vs, vs.x(1), dom)
        for j in range(1, N):
            for ab, M in blocks.items():
                diff = _twisted_commutes(M, N, vs, j, dom, False)
                if diff is not None:
                    diff.update({"kind": kind, "block": list(ab), "j": j})
                    return IdentityReport("S-action-M", {"N": N}, False, diff)
    return IdentityReport("S-action-M", {"N": N}, True)


def _cyclic_t(op: OperatorVn, step):
    """t_j -> t_{j+step} (indices mod N)."""
    N = op.vs.N
    mapping = {N - j: N - (((j - 1 + step) % N) + 1) for j in range(1, N + 1)}
    return op.map_entries(lambda p: permute_vars(p, mapping))


ROT_STEP = -1   # Omega moves the content of site j to site j+1


def rot_he(shape: BoxShape, q=1) -> IdentityReport:
    """Omega H(t) Omega^{-1} = H(varpi t), varpi t_j = t_{j-1} for our Omega; only at q = 1."""
    N = shape.N
    vs = VarSpace(N)
    dom = sector(shape)
    Om = omega_op(N, vs, dom)
    Omi = omega_op(N, vs, dom, inverse=True)
    for kind in ("H", "E"):
        fam = transfer_via_trace(kind, shape, True)
        for r, op in fam.items():
            if q != "symbolic":
                op = op.map_entries(lambda p: Poly.coerce(vs, substitute(p, {vs.q_index: q})))
            diff = _cmp(Om * op * Omi, _cyclic_t(op, ROT_STEP))
            if diff is not None:
                diff.update({"kind": kind, "r": r})
                return _report("rot-HE", shape, False, diff, q=str(q))
    return _report("rot-HE", shape, True, q=str(q))


# level-rank

def level_rank_he(shape: BoxShape) -> IdentityReport:
    """Theta H_r(t) Theta = E_r(-T) and Theta E_r(t) Theta = H_r(-T) from V_k."""
    N = shape.N
    vs = VarSpace(N)
    dual = shape.dual()
    th_in = theta_op(N, vs, sector(dual))     # V_k -> V_n
    th_out = theta_op(N, vs, sector(shape))   # V_n -> V_k
    sub = t_to_minus_T(vs)
    for a, b in (("H", "E"), ("E", "H")):
        src = transfer_via_trace(a, shape)
        tgt = transfer_via_trace(b, dual)
        for r in set(src) | set(tgt):
            lhs = th_out * src.get(r, OperatorVn(N, vs, {})) * th_in
            rhs = substitute_op(tgt.get(r, OperatorVn(N, vs, {})), sub)
            diff = _cmp(lhs, rhs)
            if diff is not None:
                diff.update({"pair": a + b, "r": r})
                return _report("level-rank-HE", shape, False, diff)
    return _report("level-rank-HE", shape, True)


# Leibniz rules and explicit divided differences

def _partial(op: OperatorVn, j):
    return op.map_entries(lambda p: divided_difference(p, j, "t"))


def leibniz_dell_he(shape: BoxShape, printed=False) -> IdentityReport:
    """Explicit d_j H(x), d_j E(x) (projector sandwiches times x) with
    denominators cleared, plus
    delta_j^vee X = (s_j X) delta_j^vee + d_j X for X = H(x), E(x), j = 1..N.

    printed=True drops the overall factor x, which makes the first part fail."""
    from .nilhecke import apply_t_perm, delta_vee_num, t_perm_swap, _site
    N = shape.N
    dom = sector(shape)
    for kind in ("H", "E"):
        X = _row(kind, shape, 1, 1)
        vs = X.vs
        x = vs.x(1)
        for j in range(1, N):
            jn = _site(N, j + 1)
            P1j, P0j = proj1(N, vs, j, dom), proj0(N, vs, j, dom)
            P1n, P0n = proj1(N, vs, jn, dom), proj0(N, vs, jn, dom)
            tj, tn = vs.t(j), vs.t(jn)
            if kind == "H":
                da, db = 1 - x * tn, 1 - x * tj
                lhs = _partial(X, j).scale(da * db)
                rhs = (P1j * X * P0n).scale(db) - (P0j * X * P1n).scale(da)
            else:
                da, db = 1 + x * tj, 1 + x * tn
                lhs = _partial(X, j).scale(da * db)
                rhs = (P0n * X * P1j).scale(db) - (P1n * X * P0j).scale(da)
            if not printed:
                rhs = rhs.scale(x)
            diff = _cmp(lhs, rhs)
            if diff is not None:
                diff.update({"formula": "dell" + kind, "j": j})
                return _report("leibniz-dellHE", shape, False, diff)
        for j in range(1, N + 1):
            dv = delta_vee_num(N, vs, j, dom)
            perm = t_perm_swap(N, j)
            sX = X.map_entries(lambda p: apply_t_perm(p, perm))
            dX = _partial(X, j)
            if j == N:
                # delta_N^vee carries q^{-1}: multiply through by q
                dX = dX.scale(vs.q())
            diff = _cmp(dv * X, sX * dv + dX)
            if diff is not None:
                diff.update({"formula": "Leibniz " + kind, "j": j})
                return _report("leibniz-dellHE", shape, False, diff)
    return _report("leibniz-dellHE", shape, True)


# Cauchy identities and Grothendieck coefficients

def _move_x(op: OperatorVn, vs_big: VarSpace, i):
    """Relabel x1 as x_i inside a larger VarSpace."""
    src = op.vs.x_index(1)
    dst = vs_big.x_index(i)
    return OperatorVn(op.N, vs_big, {k: permute_vars(Poly(vs_big, v.terms), {src: dst})
                                     for k, v in op.entries.items()})


def nc_cauchy(shape: BoxShape) -> IdentityReport:
    """Z~_n = sum_alpha (x|T)^alpha H~_{alpha^vee} = sum_lam s_{lam^vee}(x|T) S~_lam."""
    from .facschur import a_T, facschur, fac_power
    from .qhring import schubert_operator
    from .transfer import factorial_coeffs, reversed_transfer
    n, k, N = shape.n, shape.k, shape.N
    if n == 0:
        return _report("ncCauchy", shape, True)
    vs = VarSpace(N, n)
    dom = sector(shape)
    Ht = reversed_transfer("H", shape)
    Z = OperatorVn.identity(N, vs, dom)
    for i in range(1, n + 1):
        Z = _move_x(Ht, vs, i) * Z
    xs = [vs.x(i) for i in range(1, n + 1)]
    aT = a_T(vs)
    fac = factorial_coeffs("H", shape)
    first = OperatorVn(N, vs, {})
    for alpha in iproduct(range(k + 1), repeat=n):
        c = vs.one()
        op = OperatorVn.identity(N, vs, dom)
        for i, a in enumerate(alpha):
            c = c * fac_power(xs[i], aT, a, vs.one())
            op = fac[k - a] * op
        first = first + op.scale(c)
    diff = _cmp(Z, first)
    if diff is not None:
        diff["form"] = "compositions"
        return _report("ncCauchy", shape, False, diff)
    second = OperatorVn(N, vs, {})
    for lam in partitions(shape):
        second = second + schubert_operator(lam).scale(facschur(complement(lam).parts, xs, aT))
    diff = _cmp(Z, second)
    if diff is not None:
        diff["form"] = "Schur"
        return _report("ncCauchy", shape, False, diff)
    return _report("ncCauchy", shape, True)


def grothendieck_coeff(shape: BoxShape) -> IdentityReport:
    """x^alpha coefficient of Z_n(x|t) = products of cyclic-word sums t_w rho_t(pi_w)."""
    from .lattice import z_operator
    from .nilhecke import transfer_from_cyclic_words
    n, k, N = shape.n, shape.k, shape.N
    if n == 0:
        return _report("grothendieck-coeff", shape, True)
    Z = z_operator(shape)
    vs = Z.vs
    vs0 = VarSpace(N)
    words = {r: transfer_from_cyclic_words(r, "H", shape) for r in range(k + 1)}
    coeffs = {}
    for key, p in Z.entries.items():
        for mono, c in p.terms.items():
            alpha = tuple((mono >> (16 * vs.x_index(i))) & 0xFFFF for i in range(1, n + 1))
            rest = mono
            for i in range(1, n + 1):
                rest -= alpha[i - 1] << (16 * vs.x_index(i))
            coeffs.setdefault(alpha, {}).setdefault(key, {})[rest] = c
    for alpha in iproduct(range(k + 1), repeat=n):
        lhs = OperatorVn(N, vs0, {key: Poly(vs0, t) for key, t in coeffs.get(alpha, {}).items()})
        rhs = OperatorVn.identity(N, vs0, sector(shape))
        for a in alpha:
            rhs = words[a] * rhs
        diff = _cmp(lhs, rhs)
        if diff is not None:
            diff["alpha"] = list(alpha)
            return _report("grothendieck-coeff", shape, False, diff)
    return _report("grothendieck-coeff", shape, True)


CATALOG = {
    "QQ": qq,
    "givental-kim": givental_kim,
    "degree-bounds": degree_bounds,
    "HH-commute": lambda s, **kw: commute(s, "H", "H"),
    "EE-commute": lambda s, **kw: commute(s, "E", "E"),
    "HE-commute": lambda s, **kw: commute(s, "H", "E"),
    "S-action-HE": s_action_he,
    "rot-HE": rot_he,
    "level-rank-HE": level_rank_he,
    "leibniz-dellHE": leibniz_dell_he,
    "ncCauchy": nc_cauchy,
    "grothendieck-coeff": grothendieck_coeff,
}


def run(id: str, shape: BoxShape | None = None, **kw) -> IdentityReport:
    if id == "S-action-M":
        return s_action_m(kw.get("N", shape.N if shape is not None else 4))
    if shape is None:
        shape = BoxShape(2, 2)
    if id not in CATALOG:
        raise ValueError(f"unknown identity {id!r}")
    fn = CATALOG[id]
    return fn(shape, **kw) if kw else fn(shape)


def all_ids():
    return sorted(CATALOG) + ["S-action-M"]
