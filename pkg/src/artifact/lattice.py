"""Ground-truth lattice layer.

L-operators are built from the spin matrices, Yang-Baxter equations are
checked as exact 8x8 identities, and transfer matrices are computed as
literal traced row products on the quantum space.  Operators on the quantum
space are sparse maps (out_word, in_word) -> Poly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from .grbasis import BoxShape, partition_from_word, word_from_partition, words
from .polyring import Poly, VarSpace, substitute, swap_vars, to_string


class CapExceeded(RuntimeError):
    pass


def max_N():
    import os
    return int(os.environ.get("SW_MAX_N", "8"))


def guard(N):
    if N > max_N():
        raise CapExceeded(f"N={N} exceeds cap {max_N()} (set SW_MAX_N to raise it)")


# identity reports

@dataclass
class IdentityReport:
    id: str
    params: dict
    status: bool
    counterexample: dict | None = None
    detail: str = ""

    def __post_init__(self):
        if not self.status and self.counterexample is None:
            self.counterexample = {"note": self.detail or "no witness recorded"}

    @property
    def passed(self):
        return self.status

    def to_json(self):
        return json.dumps({"id": self.id, "params": self.params,
                           "status": "pass" if self.status else "fail",
                           "counterexample": self.counterexample,
                           "detail": self.detail}, sort_keys=True)


# sparse operators on the quantum space

class OperatorVn:
    __slots__ = ("N", "vs", "entries", "_rows")

    def __init__(self, N, vs, entries=None):
        self.N = N
        self.vs = vs
        self.entries = entries if entries is not None else {}
        self._rows = None

    @classmethod
    def identity(cls, N, vs, domain):
        one = vs.one()
        return cls(N, vs, {(w, w): one for w in domain})

    @classmethod
    def from_local(cls, N, vs, fn, domain):
        """fn(word) -> iterable of (new_word, Poly or int)."""
        ent = {}
        for w in domain:
            for w2, c in fn(w):
                c = Poly.coerce(vs, c)
                if c:
                    key = (w2, w)
                    v = ent.get(key)
                    v = c if v is None else v + c
                    if v:
                        ent[key] = v
                    else:
                        ent.pop(key, None)
        return cls(N, vs, ent)

    def _by_row(self):
        if self._rows is None:
            rows = {}
            for (o, i), c in self.entries.items():
                rows.setdefault(o, []).append((i, c))
            self._rows = rows
        return self._rows

    def _by_col(self):
        cols = {}
        for (o, i), c in self.entries.items():
            cols.setdefault(i, []).append((o, c))
        return cols

    def _space(self, other):
        if self.vs.N != other.vs.N:
            raise ValueError("VarSpace mismatch")
        return self.vs if self.vs.m >= other.vs.m else other.vs

    def __add__(self, other):
        if not isinstance(other, OperatorVn):
            return NotImplemented
        ent = dict(self.entries)
        for key, c in other.entries.items():
            v = ent.get(key)
            v = c if v is None else v + c
            if v:
                ent[key] = v
            else:
                ent.pop(key, None)
        return OperatorVn(self.N, self._space(other), ent)

    def __neg__(self):
        return OperatorVn(self.N, self.vs, {k: -c for k, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int) and c == 0:
            return OperatorVn(self.N, self.vs, {})
        ent = {}
        for k, v in self.entries.items():
            p = v * c
            if p:
                ent[k] = p
        vs = self.vs
        if isinstance(c, Poly) and c.vs.m > vs.m:
            vs = c.vs
        return OperatorVn(self.N, vs, ent)

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        if not isinstance(other, OperatorVn):
            return NotImplemented
        rows = other._by_row()
        acc = {}
        for (o, m), a in self.entries.items():
            for i, b in rows.get(m, ()):
                key = (o, i)
                v = acc.get(key)
                acc[key] = a * b if v is None else v + a * b
        return OperatorVn(self.N, self._space(other), {k: v for k, v in acc.items() if v})

    def __rmul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, vec):
        return self.apply(vec)

    def apply(self, vec):
        cols = None
        acc = {}
        if len(vec) * 4 < len(self.entries):
            cols = self._by_col()
            for w, c in vec.items():
                for o, a in cols.get(w, ()):
                    v = acc.get(o)
                    acc[o] = a * c if v is None else v + a * c
        else:
            for (o, i), a in self.entries.items():
                c = vec.get(i)
                if c is not None:
                    v = acc.get(o)
                    acc[o] = a * c if v is None else v + a * c
        return {k: v for k, v in acc.items() if v}

    def map_entries(self, fn):
        ent = {}
        for k, v in self.entries.items():
            p = fn(v)
            if p:
                ent[k] = p
        vs = self.vs
        for p in ent.values():
            if p.vs.m > vs.m:
                vs = p.vs
        return OperatorVn(self.N, vs, ent)

    def restrict(self, domain, codomain=None):
        dom = set(domain)
        cod = dom if codomain is None else set(codomain)
        return OperatorVn(self.N, self.vs,
                          {k: v for k, v in self.entries.items() if k[1] in dom and k[0] in cod})

    def entry(self, out_word, in_word):
        return self.entries.get((tuple(out_word), tuple(in_word)), self.vs.zero())

    def matrix_element(self, lam, mu):
        return self.entry(word_from_partition(lam), word_from_partition(mu))

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, OperatorVn):
            return NotImplemented
        return self.N == other.N and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def first_difference(self, other):
        diff = self - other
        if diff.is_zero():
            return None
        (o, i), v = min(diff.entries.items(), key=lambda kv: kv[0])
        return {"out": "".join(map(str, o)), "in": "".join(map(str, i)),
                "difference": to_string(v)}

    def x_coefficients(self, xidx):
        out = {}
        for key, v in self.entries.items():
            for d, c in v.by_degree(xidx).items():
                out.setdefault(d, {})[key] = c
        return {d: OperatorVn(self.N, self.vs, e) for d, e in out.items()}

    def __repr__(self):
        return f"OperatorVn(N={self.N}, nnz={len(self.entries)})"


def vec_add(a, b):
    out = dict(a)
    for w, c in b.items():
        v = out.get(w)
        v = c if v is None else v + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def vec_scale(a, c):
    out = {}
    for w, v in a.items():
        p = v * c
        if p:
            out[w] = p
    return out


def vec_sub(a, b):
    return vec_add(a, vec_scale(b, -1))


def all_words(N):
    return tuple(w for n in range(N + 1) for w in words(N, n))


def sector(shape: BoxShape):
    return words(shape.N, shape.n)


# local spin operators (positions are 1-based, indices mod N)

def _set(w, j, b):
    w = list(w)
    w[j - 1] = b
    return tuple(w)


def sigma_plus(N, vs, j, domain):
    return OperatorVn.from_local(N, vs, lambda w: [(_set(w, j, 1), 1)] if w[j - 1] == 0 else [], domain)


def sigma_minus(N, vs, j, domain):
    return OperatorVn.from_local(N, vs, lambda w: [(_set(w, j, 0), 1)] if w[j - 1] == 1 else [], domain)


def proj0(N, vs, j, domain, coeff=1):
    return OperatorVn.from_local(N, vs, lambda w: [(w, coeff)] if w[j - 1] == 0 else [], domain)


def proj1(N, vs, j, domain, coeff=1):
    return OperatorVn.from_local(N, vs, lambda w: [(w, coeff)] if w[j - 1] == 1 else [], domain)


def theta_op(N, vs, domain):
    return OperatorVn.from_local(N, vs, lambda w: [(tuple(1 - b for b in reversed(w)), 1)], domain)


def omega_op(N, vs, domain, inverse=False):
    if inverse:
        return OperatorVn.from_local(N, vs, lambda w: [(w[1:] + w[:1], 1)], domain)
    return OperatorVn.from_local(N, vs, lambda w: [(w[-1:] + w[:-1], 1)], domain)


# L-operators

def build_L(kind, x: Poly, t: Poly):
    """4x4 matrix M[out][in] on aux (x) tensor quantum (t); index 2*aux + quantum."""
    vs = x.vs if x.vs.m >= t.vs.m else t.vs
    zero, one = vs.zero(), vs.one()
    M = [[zero] * 4 for _ in range(4)]
    # aux block (a, b) = e^{ab}: aux input b -> output a
    if kind == "vicious":
        blocks = {
            (0, 0): {(0, 0): one - x * t, (1, 1): one},   # 1 - x t sigma^- sigma^+
            (0, 1): {(1, 0): x},                           # x sigma^+
            (1, 0): {(0, 1): one},                         # sigma^-
            (1, 1): {(0, 0): x},                           # x sigma^- sigma^+
        }
    elif kind == "osculating":
        blocks = {
            (0, 0): {(0, 0): one, (1, 1): one + x * t},   # 1 + x t sigma^+ sigma^-
            (0, 1): {(1, 0): x},
            (1, 0): {(0, 1): one},
            (1, 1): {(1, 1): x},                           # x sigma^+ sigma^-
        }
    else:
        raise ValueError(f"unknown L kind {kind!r}")
    for (a, b), blk in blocks.items():
        for (eo, ei), w in blk.items():
            M[2 * a + eo][2 * b + ei] = w
    return M


def vertex_weights(kind, x, t):
    """{(aux_in, q_in): [(aux_out, q_out, weight)]} from build_L."""
    M = build_L(kind, x, t)
    table = {}
    for ai, ei in iproduct((0, 1), (0, 1)):
        lst = []
        for ao, eo in iproduct((0, 1), (0, 1)):
            w = M[2 * ao + eo][2 * ai + ei]
            if w:
                lst.append((ao, eo, w))
        table[(ai, ei)] = lst
    return table


def _rmatrix(a, b, c, d, e, f, vs):
    z = vs.zero()
    return [[a, z, z, z], [z, b, c, z], [z, d, e, z], [z, z, z, f]]


def r_matrices(vs: VarSpace, xi, xi2, tj, tj2, q):
    """Denominator-cleared R, R', r, R'', R''' and r(q)."""
    one, zero = vs.one(), vs.zero()
    return {
        # entries with x_{i'}/x_i, multiplied through by x_i
        "R": _rmatrix(xi, zero, xi, xi2, xi - xi2, xi2, vs),
        # entries with x_i/x_{i'}, multiplied through by x_{i'}
        "R'": _rmatrix(xi2, xi2 - xi, xi, xi2, zero, xi, vs),
        "r": _rmatrix(one, zero, one, one, tj - tj2, one, vs),
        "R''": _rmatrix(xi2 + xi, xi2, xi, xi2, xi, zero, vs),
        # ratio inverted relative to the printed table: x_i/x_{i'} fails on
        # the (01,10) entry while x_{i'}/x_i satisfies the equation
        "R'''": _rmatrix(zero, -xi, xi, xi2, -xi2, zero, vs),
        "R'''-printed": _rmatrix(zero, -xi2, xi2, xi, -xi, zero, vs),
        # q^{-1}(t_j - t_j'), multiplied through by q
        "r(q)": _rmatrix(q, zero, q, q, tj - tj2, q, vs),
    }


def _embed(M4, p1, p2, nf=3):
    """Embed a two-site 4x4 matrix acting on factors (p1, p2) of nf qubits."""
    dim = 1 << nf
    zero = M4[0][0] * 0
    out = [[zero] * dim for _ in range(dim)]

    def bit(idx, p):
        return (idx >> (nf - 1 - p)) & 1

    for i in range(dim):
        for o in range(dim):
            if any(bit(i, p) != bit(o, p) for p in range(nf) if p not in (p1, p2)):
                continue
            a = 2 * bit(o, p1) + bit(o, p2)
            b = 2 * bit(i, p1) + bit(i, p2)
            out[o][i] = M4[a][b]
    return out


def _matmul(A, B):
    n = len(A)
    zero = A[0][0] * 0
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for k in range(n):
            a = Ai[k]
            if not a:
                continue
            Bk = B[k]
            row = out[i]
            for j in range(n):
                b = Bk[j]
                if b:
                    row[j] = row[j] + a * b
    return out


def _chain(*Ms):
    out = Ms[0]
    for M in Ms[1:]:
        out = _matmul(out, M)
    return out


def _diag_q(q, vs):
    one, z = vs.one(), vs.zero()
    # diag(1, q) on the aux factor, identity on the quantum factor
    return [[one, z, z, z], [z, one, z, z], [z, z, q, z], [z, z, z, q]]


YBE_IDS = ("RLL", "rLL", "qYBE", "RLL-mixed''", "RLL-mixed'''")


def _compare(lhs, rhs):
    for i in range(len(lhs)):
        for j in range(len(lhs)):
            d = lhs[i][j] - rhs[i][j]
            if d:
                return {"row": i, "col": j, "difference": to_string(d)}
    return None


def verify_yang_baxter(id: str, mutate: bool = False, printed: bool = False) -> IdentityReport:
    vs = VarSpace(2, 2)
    xi, xi2 = vs.x(1), vs.x(2)
    tj, tj2 = vs.T(1), vs.T(2)
    q = vs.q()
    Rs = r_matrices(vs, xi, xi2, tj, tj2, q)

    def L(kind, x, t):
        M = build_L(kind, x, t)
        if mutate:
            M = [row[:] for row in M]
            M[3][3] = M[3][3] + vs.one()
        return M

    checks = []
    if id == "RLL":
        # spaces: 0 = aux i, 1 = aux i', 2 = quantum j
        for kind, Rk in (("vicious", "R"), ("osculating", "R'")):
            R = _embed(Rs[Rk], 0, 1)
            Li = _embed(L(kind, xi, tj), 0, 2)
            Li2 = _embed(L(kind, xi2, tj), 1, 2)
            checks.append((kind, _chain(R, Li, Li2), _chain(Li2, Li, R)))
    elif id == "rLL":
        # spaces: 0 = aux i, 1 = quantum j, 2 = quantum j'
        for kind in ("vicious", "osculating"):
            r = _embed(Rs["r"], 1, 2)
            Lj = _embed(L(kind, xi, tj), 0, 1)
            Lj2 = _embed(L(kind, xi, tj2), 0, 2)
            checks.append((kind, _chain(r, Lj, Lj2), _chain(Lj2, Lj, r)))
    elif id == "qYBE":
        for kind in ("vicious", "osculating"):
            r = _embed(Rs["r(q)"], 1, 2)
            Dq = _embed(_diag_q(q, vs), 0, 1)
            Lj = _embed(L(kind, xi, tj), 0, 1)
            Lj2 = _embed(L(kind, xi, tj2), 0, 2)
            checks.append((kind, _chain(r, Lj, Dq, Lj2), _chain(Lj2, Dq, Lj, r)))
    elif id == "RLL-mixed''":
        R = _embed(Rs["R''"], 0, 1)
        Li = _embed(L("vicious", xi, tj), 0, 2)
        Lp = _embed(L("osculating", xi2, tj), 1, 2)
        checks.append(("vicious x osculating", _chain(R, Li, Lp), _chain(Lp, Li, R)))
    elif id == "RLL-mixed'''":
        R = _embed(Rs["R'''-printed" if printed else "R'''"], 0, 1)
        Lp = _embed(L("osculating", xi, tj), 0, 2)
        Li = _embed(L("vicious", xi2, tj), 1, 2)
        checks.append(("osculating x vicious", _chain(R, Lp, Li), _chain(Li, Lp, R)))
    else:
        raise ValueError(f"unknown Yang-Baxter id {id!r}")
    for label, lhs, rhs in checks:
        bad = _compare(lhs, rhs)
        if bad:
            bad["case"] = label
            return IdentityReport(id, {"mutated": mutate, "printed": printed}, False, bad)
    return IdentityReport(id, {"mutated": mutate, "printed": printed}, True)


# traced row transfer matrices

def _tvals(vs, N, tvals):
    return tvals if tvals is not None else [vs.t(j) for j in range(1, N + 1)]


def row_operator(kind, N, vs, x, domain, aux_in=None, aux_out=None, qvar=None, tvals=None):
    """Row of N vertices.  With aux_in=aux_out=None the aux line is traced,
    picking up qvar**(seam value) from the column-1 twist."""
    tv = _tvals(vs, N, tvals)
    tables = [vertex_weights(kind, x, tv[j]) for j in range(N)]
    one = vs.one()
    ent = {}
    seams = (0, 1) if aux_in is None else (aux_in,)
    for w in domain:
        for b in seams:
            start = one
            if aux_in is None and b == 1:
                start = qvar if qvar is not None else one
            states = {(b, ()): start}
            for j in range(N):
                nxt = {}
                eps = w[j]
                tab = tables[j]
                for (a, out), c in states.items():
                    for ao, eo, wt in tab[(a, eps)]:
                        key = (ao, out + (eo,))
                        v = nxt.get(key)
                        p = c * wt
                        nxt[key] = p if v is None else v + p
                states = nxt
            target = b if aux_out is None and aux_in is None else aux_out
            for (a, out), c in states.items():
                if a != target or not c:
                    continue
                key = (out, w)
                v = ent.get(key)
                v = c if v is None else v + c
                if v:
                    ent[key] = v
                else:
                    ent.pop(key, None)
    return OperatorVn(N, vs, ent)


@lru_cache(maxsize=None)
def _vs_x(N, m):
    return VarSpace(N, m)


def transfer_matrix(kind, shape: BoxShape, xidx=1, q=True, m=None, tvals=None):
    """H(x) (vicious) or E(x) (osculating) on V_n as an x-polynomial operator."""
    guard(shape.N)
    vs = _vs_x(shape.N, max(xidx, m or 0))
    qvar = vs.q() if q is True else (vs.const(q) if isinstance(q, int) else q)
    return row_operator(kind, shape.N, vs, vs.x(xidx), sector(shape), qvar=qvar, tvals=tvals)


@lru_cache(maxsize=None)
def transfer_via_trace(kind, shape: BoxShape, q=True):
    """Coefficients {r: H_r} (kind='vicious'/'H') or {r: E_r} ('osculating'/'E')."""
    kind = {"H": "vicious", "E": "osculating"}.get(kind, kind)
    op = transfer_matrix(kind, shape, 1, q)
    coeffs = op.x_coefficients(op.vs.x_index(1))
    bound = shape.k if kind == "vicious" else shape.n
    vs = VarSpace(shape.N, 0)
    out = {}
    for r in range(0, shape.N + 1):
        c = coeffs.get(r)
        if c is None:
            out[r] = OperatorVn(shape.N, vs, {})
        else:
            out[r] = OperatorVn(shape.N, vs, {k: Poly(vs, v.terms) for k, v in c.entries.items()})
        if r > bound and not out[r].is_zero():
            raise AssertionError(f"{kind} coefficient {r} nonzero beyond degree bound {bound}")
    return {r: out[r] for r in range(bound + 1)}


def monodromy_blocks(kind, N, vs, x, domain, tvals=None):
    """{(a, b): M_ab} with aux input b at column 1 and output a after column N."""
    return {(a, b): row_operator(kind, N, vs, x, domain, aux_in=b, aux_out=a, tvals=tvals)
            for a in (0, 1) for b in (0, 1)}


def z_operator(shape: BoxShape, n_rows=None, kind="vicious", q=True):
    """Z = H(x_m) ... H(x_1) with one spectral variable per row."""
    rows = shape.n if n_rows is None else n_rows
    vs = VarSpace(shape.N, max(rows, 1))
    dom = sector(shape)
    out = OperatorVn.identity(shape.N, vs, dom)
    qvar = vs.q() if q else vs.one()
    for i in range(1, rows + 1):
        out = row_operator(kind, shape.N, vs, vs.x(i), dom, qvar=qvar) * out
    return out


def substitute_op(op: OperatorVn, assignment):
    return op.map_entries(lambda p: substitute(p, assignment))


def t_to_minus_T(vs: VarSpace):
    """Assignment t_j -> -T_j, i.e. T_{N+1-j} -> -T_j."""
    N = vs.N
    return {N - j: -vs.T(j) for j in range(1, N + 1)}


def verify_operator_identity(id: str, shape: BoxShape | None = None, **kw) -> IdentityReport:
    from . import identities
    return identities.run(id, shape, **kw)
