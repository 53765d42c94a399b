"""Sparse multivariate polynomials with exact integer coefficients.

Variables are positional: T1..TN, then q, then x1..xm.  Monomials are packed
into a single Python int (16 bits per variable), so monomial multiplication
is integer addition and dictionary hashing stays cheap.  The packing depends
only on N, so polynomials over the same N but different m mix freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Number

BITS = 16
MASK = (1 << BITS) - 1
MAX_EXP = MASK // 2


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class VarSpace:
    N: int
    m: int = 0

    def __post_init__(self):
        if self.N < 1 or self.m < 0:
            raise PolyError(f"bad VarSpace N={self.N} m={self.m}")

    @property
    def nvars(self):
        return self.N + 1 + self.m

    @property
    def q_index(self):
        return self.N

    def x_index(self, i):
        return self.N + i

    def names(self):
        return ([f"T{i}" for i in range(1, self.N + 1)] + ["q"]
                + [f"x{i}" for i in range(1, self.m + 1)])

    def index_of(self, name):
        if name == "q":
            return self.N
        kind, num = name[0], name[1:]
        if not num.isdigit():
            raise PolyError(f"unknown variable {name!r}")
        i = int(num)
        if kind == "T" and 1 <= i <= self.N:
            return i - 1
        if kind == "x" and 1 <= i <= self.m:
            return self.N + i
        if kind == "t" and 1 <= i <= self.N:
            return self.N - i
        raise PolyError(f"variable {name!r} outside {self}")

    def with_m(self, m):
        return self if m == self.m else VarSpace(self.N, m)

    def var(self, idx):
        if not 0 <= idx < self.nvars:
            raise PolyError(f"variable index {idx} outside {self}")
        return Poly(self, {1 << (BITS * idx): 1})

    def T(self, i):
        return self.var(i - 1)

    def t(self, j):
        # t_j = T_{N+1-j}
        return self.var(self.N - j)

    def q(self):
        return self.var(self.N)

    def x(self, i):
        return self.var(self.N + i)

    def const(self, c):
        return Poly(self, {0: c} if c else {})

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {0: 1})


def decode(key, nvars):
    return tuple((key >> (BITS * i)) & MASK for i in range(nvars))


def encode(exps):
    key = 0
    for i, e in enumerate(exps):
        if e:
            if e > MAX_EXP:
                raise PolyError("exponent overflow")
            key |= e << (BITS * i)
    return key


def _exp_at(key, idx):
    return (key >> (BITS * idx)) & MASK


class Poly:
    __slots__ = ("vs", "terms", "_hash")

    def __init__(self, vs: VarSpace, terms=None):
        self.vs = vs
        self.terms = terms if terms is not None else {}
        self._hash = None

    # construction helpers

    @staticmethod
    def coerce(vs, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return vs.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    def _space(self, other):
        if self.vs.N != other.vs.N:
            raise PolyError(f"mixing N={self.vs.N} with N={other.vs.N}")
        return self.vs if self.vs.m >= other.vs.m else other.vs

    def lift(self, vs):
        if vs.N != self.vs.N or vs.m < self.vs.m:
            raise PolyError(f"cannot lift {self.vs} into {vs}")
        return Poly(vs, self.terms)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            if not other:
                return self
            other = self.vs.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        vs = self._space(other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return Poly(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly(self.vs, {})
            return Poly(self.vs, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        vs = self._space(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly(vs, {})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (k2, c2), = b.items()
            return Poly(vs, {k + k2: c * c2 for k, c in a.items()})
        out = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return Poly(vs, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise PolyError("only non-negative integer powers")
        out = self.vs.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vs.N == other.vs.N and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def const_value(self):
        return self.terms.get(0, 0)

    # structure

    def exponents(self):
        n = self.vs.nvars
        return {decode(k, n): c for k, c in self.terms.items()}

    def total_degree(self):
        if not self.terms:
            return -1
        n = self.vs.nvars
        return max(sum(decode(k, n)) for k in self.terms)

    def degree_in(self, idx):
        if not self.terms:
            return -1
        return max(_exp_at(k, idx) for k in self.terms)

    def free_vars(self):
        acc = 0
        for k in self.terms:
            acc |= k
        return [i for i in range(self.vs.nvars) if (acc >> (BITS * i)) & MASK]

    def by_degree(self, idx):
        """Split into {d: coefficient Poly free of variable idx}."""
        shift = BITS * idx
        out = {}
        for k, c in self.terms.items():
            d = (k >> shift) & MASK
            out.setdefault(d, {})[k - (d << shift)] = c
        return {d: Poly(self.vs, t) for d, t in out.items()}

    def coeff(self, idx, d):
        shift = BITS * idx
        t = {}
        for k, c in self.terms.items():
            if ((k >> shift) & MASK) == d:
                t[k - (d << shift)] = c
        return Poly(self.vs, t)

    def homogeneous_in(self, idxs):
        degs = {sum(_exp_at(k, i) for i in idxs) for k in self.terms}
        return len(degs) <= 1

    def map_keys(self, fn):
        out = {}
        for k, c in self.terms.items():
            nk = fn(k)
            v = out.get(nk, 0) + c
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return Poly(self.vs, out)

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"Poly({to_string(self)!r})"


def canonicalize(vs: VarSpace, raw_terms):
    """Merge a raw list of (exponent tuple or packed key, coefficient) pairs."""
    out = {}
    for mono, c in raw_terms:
        k = mono if isinstance(mono, int) else encode(mono)
        v = out.get(k, 0) + int(c)
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return Poly(vs, out)


# string form

def _sort_key(item, nvars):
    exps = decode(item[0], nvars)
    return (-sum(exps), tuple(-e for e in exps))


def to_string(p: Poly):
    if not p.terms:
        return "0"
    n = p.vs.nvars
    names = p.vs.names()
    parts = []
    for k, c in sorted(p.terms.items(), key=lambda it: _sort_key(it, n)):
        exps = decode(k, n)
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([Tx]\d+|q)|(\^)|(\*)|(\+)|(-))")


def _tokenize(s):
    pos, out = 0, []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise PolyError(f"cannot parse {s!r} at {pos}")
        num, name, caret, star, plus, minus = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("var", name))
        elif caret:
            out.append(("^", None))
        elif star:
            out.append(("*", None))
        elif plus:
            out.append(("+", None))
        else:
            out.append(("-", None))
        pos = m.end()
    return out


def parse(s: str, vs: VarSpace | None = None) -> Poly:
    toks = _tokenize(s)
    if vs is None:
        nmax, mmax = 1, 0
        for kind, val in toks:
            if kind == "var" and val[0] == "T":
                nmax = max(nmax, int(val[1:]))
            elif kind == "var" and val[0] == "x":
                mmax = max(mmax, int(val[1:]))
        vs = VarSpace(nmax, mmax)
    raw = []
    i = 0
    if not toks:
        raise PolyError("empty polynomial string")
    sign = 1
    if toks[0][0] == "-":
        sign, i = -1, 1
    elif toks[0][0] == "+":
        i = 1
    while True:
        coef = 1
        exps = [0] * vs.nvars
        seen = False
        while True:
            if i >= len(toks):
                raise PolyError(f"truncated term in {s!r}")
            kind, val = toks[i]
            if kind == "num":
                coef *= val
                i += 1
            elif kind == "var":
                e = 1
                i += 1
                if i < len(toks) and toks[i][0] == "^":
                    if i + 1 >= len(toks) or toks[i + 1][0] != "num":
                        raise PolyError(f"bad exponent in {s!r}")
                    e = toks[i + 1][1]
                    i += 2
                exps[vs.index_of(val)] += e
            else:
                raise PolyError(f"unexpected {kind!r} in {s!r}")
            seen = True
            if i < len(toks) and toks[i][0] == "*":
                i += 1
                continue
            break
        if not seen:
            raise PolyError(f"empty term in {s!r}")
        raw.append((tuple(exps), sign * coef))
        if i >= len(toks):
            break
        kind = toks[i][0]
        if kind not in "+-":
            raise PolyError(f"expected + or - in {s!r}")
        sign = 1 if kind == "+" else -1
        i += 1
    return canonicalize(vs, raw)


# symmetric group and divided differences

def family_indices(vs: VarSpace, j: int, family: str):
    """Variable indices (a, b) exchanged by s_j in the given family."""
    N = vs.N
    if family == "T":
        if not 1 <= j <= N:
            raise PolyError(f"s_{j} out of range for N={N}")
        return j - 1, j % N
    if family == "t":
        if not 1 <= j <= N:
            raise PolyError(f"s_{j} out of range for N={N}")
        # t_j = T_{N+1-j}; t_{N+1} wraps to t_1
        return N - j, N - (j % N) - 1
    if family == "x":
        if not 1 <= j <= vs.m - 1:
            raise PolyError(f"x-swap {j} out of range for m={vs.m}")
        return N + j, N + j + 1
    raise PolyError(f"unknown family {family!r}")


def swap_indices(p: Poly, a: int, b: int) -> Poly:
    if a == b:
        return p
    sa, sb = BITS * a, BITS * b

    def fn(k):
        ea = (k >> sa) & MASK
        eb = (k >> sb) & MASK
        return k - (ea << sa) - (eb << sb) + (eb << sa) + (ea << sb)

    return p.map_keys(fn)


def swap_vars(p: Poly, j: int, family: str = "t") -> Poly:
    a, b = family_indices(p.vs, j, family)
    return swap_indices(p, a, b)


def permute_vars(p: Poly, perm: dict) -> Poly:
    """Relabel variables: index i becomes perm.get(i, i)."""
    moves = [(BITS * i, BITS * j) for i, j in perm.items() if i != j]

    def fn(k):
        es = [((k >> si) & MASK, si, sj) for si, sj in moves]
        for e, si, sj in es:
            if e:
                k += (e << sj) - (e << si)
        return k

    return p.map_keys(fn)


def divide_by_difference(p: Poly, a: int, b: int) -> Poly:
    """Exact quotient p / (v_a - v_b); raises on a nonzero remainder."""
    if a == b:
        raise PolyError("division by zero linear form")
    if not p.terms:
        return p
    vs = p.vs
    parts = p.by_degree(a)
    top = max(parts)
    vb = vs.var(b)
    quot = {}
    carry = vs.zero()
    for d in range(top, 0, -1):
        carry = parts.get(d, vs.zero()) + carry
        quot[d - 1] = carry
        carry = carry * vb
    rem = parts.get(0, vs.zero()) + carry
    if rem.terms:
        raise PolyError(f"inexact division by ({vs.names()[a]} - {vs.names()[b]}): "
                        f"remainder {rem}")
    sa = BITS * a
    out = {}
    for d, c in quot.items():
        for k, v in c.terms.items():
            out[k + (d << sa)] = v
    return Poly(vs, out)


def divided_difference(p: Poly, j: int, family: str = "t") -> Poly:
    a, b = family_indices(p.vs, j, family)
    diff = p - swap_indices(p, a, b)
    return divide_by_difference(diff, a, b)


# substitution

def _is_numeric(v):
    return isinstance(v, Number) and not isinstance(v, bool)


def substitute(p: Poly, assignment: dict):
    """Simultaneous substitution; keys are variable names or indices."""
    vs = p.vs
    amap = {}
    for key, val in assignment.items():
        idx = vs.index_of(key) if isinstance(key, str) else key
        if not 0 <= idx < vs.nvars:
            raise PolyError(f"variable index {idx} outside {vs}")
        amap[idx] = val
    if not amap:
        return p
    live = set(p.free_vars())
    numeric = all(_is_numeric(v) for v in amap.values())
    if numeric and live <= set(amap):
        total = 0
        n = vs.nvars
        for k, c in p.terms.items():
            term = c
            for i, e in enumerate(decode(k, n)):
                if e:
                    term = term * amap[i] ** e
            total += term
        return total
    if any(_is_numeric(v) and not isinstance(v, int) for v in amap.values()):
        raise PolyError("mixed numeric/symbolic substitution cannot yield a Poly")
    out_vs = vs
    for v in amap.values():
        if isinstance(v, Poly):
            if v.vs.N != vs.N:
                raise PolyError("substituted value has different N")
            if v.vs.m > out_vs.m:
                out_vs = v.vs
    n = vs.nvars
    powcache = {}
    acc = out_vs.zero()
    for k, c in p.terms.items():
        exps = decode(k, n)
        rest = list(exps)
        term = out_vs.const(c)
        for i in amap:
            e = exps[i]
            rest[i] = 0
            if e:
                ck = (i, e)
                if ck not in powcache:
                    val = amap[i]
                    val = val if isinstance(val, Poly) else out_vs.const(val)
                    powcache[ck] = val ** e
                term = term * powcache[ck]
        term = term * Poly(out_vs, {encode(rest): 1})
        acc = acc + term
    return acc


def evaluate(p: Poly, values):
    """Numeric evaluation with values indexed by variable position."""
    n = p.vs.nvars
    total = 0
    for k, c in p.terms.items():
        term = c
        idx = 0
        while k:
            e = k & MASK
            if e:
                term = term * values[idx] ** e
            k >>= BITS
            idx += 1
        total += term
    if idx > n:
        raise PolyError("evaluation vector too short")
    return total


# small constructors used across the package

def linear_product(factors, vs: VarSpace) -> Poly:
    out = vs.one()
    for f in factors:
        out = out * f
    return out


def elementary(k: int, xs, vs: VarSpace) -> Poly:
    """e_k of a list of Polys."""
    if k < 0 or k > len(xs):
        return vs.zero()
    row = [vs.one()] + [vs.zero()] * k
    for x in xs:
        for i in range(k, 0, -1):
            row[i] = row[i] + row[i - 1] * x
    return row[k]


def complete(k: int, xs, vs: VarSpace) -> Poly:
    """h_k of a list of Polys."""
    if k < 0:
        return vs.zero()
    row = [vs.one()] + [vs.zero()] * k
    for x in xs:
        for i in range(1, k + 1):
            row[i] = row[i] + row[i - 1] * x
    return row[k]
