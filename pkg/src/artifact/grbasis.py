"""Partitions in the n x k box, 01-words, dualities and cylindric skew shapes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations


class ShapeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BoxShape:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.n + self.k < 1:
            raise ShapeError(f"bad box ({self.n},{self.k})")

    @property
    def N(self):
        return self.n + self.k

    def dual(self):
        return BoxShape(self.k, self.n)

    @classmethod
    def from_nN(cls, n, N):
        return cls(n, N - n)


@dataclass(frozen=True, order=True)
class BoxPartition:
    parts: tuple
    shape: BoxShape

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        n, k = self.shape.n, self.shape.k
        if len(p) < n:
            p = p + (0,) * (n - len(p))
        if len(p) > n:
            if any(p[n:]):
                raise ShapeError(f"{p} has more than {n} rows")
            p = p[:n]
        if any(a < b for a, b in zip(p, p[1:])) or (p and (p[0] > k or p[-1] < 0)):
            raise ShapeError(f"{p} is not a partition in the {n}x{k} box")
        object.__setattr__(self, "parts", p)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self):
        return sum(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def label(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self):
        return {"shape": [self.shape.n, self.shape.k], "parts": list(self.parts)}

    def contains(self, other):
        return all(a >= b for a, b in zip(self.parts, other.parts))


def make(parts, shape):
    return BoxPartition(tuple(parts), shape)


def parse_partition(text, shape):
    text = text.strip()
    if text in ("", "0", "()", "empty"):
        return BoxPartition((), shape)
    return BoxPartition(tuple(int(s) for s in text.strip("()").split(",") if s.strip()), shape)


def from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    n, k = obj["shape"]
    return BoxPartition(tuple(obj["parts"]), BoxShape(n, k))


@lru_cache(maxsize=None)
def partitions(shape: BoxShape):
    """All partitions in the box, ordered by (size, lex)."""
    out = []

    def rec(prefix, bound, left):
        if left == 0:
            out.append(BoxPartition(tuple(prefix), shape))
            return
        for a in range(bound, -1, -1):
            rec(prefix + [a], a, left - 1)

    rec([], shape.k, shape.n)
    out.sort(key=lambda p: (p.size, p.parts))
    return tuple(out)


# words

def word_from_partition(lam: BoxPartition):
    n, N = lam.shape.n, lam.shape.N
    bits = [0] * N
    for i in range(1, n + 1):
        bits[lam[n - i] + i - 1] = 1
    return tuple(bits)


def partition_from_word(word, shape: BoxShape | None = None):
    word = tuple(int(b) for b in word)
    N = len(word)
    n = sum(word)
    if shape is None:
        shape = BoxShape(n, N - n)
    elif shape.N != N or shape.n != n:
        raise ShapeError(f"word {word} does not fit {shape}")
    pos = [j + 1 for j, b in enumerate(word) if b]
    # l_i = lambda_{n+1-i} + i
    parts = [0] * n
    for i, l in enumerate(pos, start=1):
        parts[n - i] = l - i
    return BoxPartition(tuple(parts), shape)


def word_str(word):
    return "".join(map(str, word))


def parse_word(text):
    if set(text) - {"0", "1"}:
        raise ShapeError(f"not a 01-word: {text!r}")
    return tuple(int(c) for c in text)


@lru_cache(maxsize=None)
def words(N, n):
    out = []
    for pos in combinations(range(N), n):
        w = [0] * N
        for p in pos:
            w[p] = 1
        out.append(tuple(w))
    return tuple(out)


# dualities

def conjugate(lam: BoxPartition):
    n, k = lam.shape.n, lam.shape.k
    parts = tuple(sum(1 for a in lam.parts if a >= j) for j in range(1, k + 1))
    return BoxPartition(parts, lam.shape.dual())


def complement(lam: BoxPartition):
    k = lam.shape.k
    return BoxPartition(tuple(k - a for a in reversed(lam.parts)), lam.shape)


def star(lam: BoxPartition):
    return conjugate(complement(lam))


def reverse_word(word):
    return tuple(reversed(word))


def invert_word(word):
    return tuple(1 - b for b in word)


def theta_word(word):
    return invert_word(reverse_word(word))


def dualities(lam: BoxPartition):
    w = word_from_partition(lam)
    return {
        "conjugate": conjugate(lam),
        "complement": complement(lam),
        "star": star(lam),
        "P": reverse_word(w),
        "C": invert_word(w),
        "Theta": theta_word(w),
    }


def conj_column(lam: BoxPartition, c):
    return sum(1 for a in lam.parts if a >= c)


def zero_position(mu: BoxPartition, c):
    """Position (1..N) of the 0-letter belonging to column c of mu."""
    return c - conj_column(mu, c) + mu.shape.n


# cylindric loops

def loop_value(lam: BoxPartition, r, i):
    n, k = lam.shape.n, lam.shape.k
    if n == 0:
        raise ShapeError("cylindric loops need n >= 1")
    a, b = divmod(i - r - 1, n)
    return lam[b] + r - a * k


NONEXISTENT = None


@dataclass(frozen=True)
class CylindricSkew:
    outer: BoxPartition
    d: int
    inner: BoxPartition
    cells: frozenset
    toric: bool

    @property
    def size(self):
        return len(self.cells)

    def column_classes(self):
        k = self.outer.shape.k
        return [((j - 1) % k) + 1 for (_, j) in self.cells]

    def is_horizontal_strip(self):
        cols = self.column_classes()
        return len(cols) == len(set(cols))

    def is_vertical_strip(self):
        rows = [i for (i, _) in self.cells]
        return len(rows) == len(set(rows))


def cylindric_skew(lam: BoxPartition, d: int, mu: BoxPartition):
    """lam/d/mu with cells in the fundamental window of rows 1..n."""
    if lam.shape != mu.shape:
        raise ShapeError("shape mismatch")
    n, k = lam.shape.n, lam.shape.k
    if n == 0:
        if d == 0 and lam == mu:
            return CylindricSkew(lam, d, mu, frozenset(), True)
        return NONEXISTENT
    cells = set()
    for i in range(1, n + 1):
        hi = loop_value(lam, d, i)
        lo = loop_value(mu, 0, i)
        if hi < lo:
            return NONEXISTENT
        for j in range(lo + 1, hi + 1):
            cells.add((i, j))
    toric = all(loop_value(lam, d, i) - loop_value(mu, 0, i) <= k for i in range(1, n + 1))
    return CylindricSkew(lam, d, mu, frozenset(cells), toric)


def strip_J(skew: CylindricSkew):
    """Zero positions of the inner word left untouched by a horizontal strip.

    A column class c (mod k) missing from the strip contributes the diagonal
    of the bottom square of that column of mu, shifted by n (c + n when the
    column is empty), which is the position of its 0-letter.
    """
    mu = skew.inner
    used = set(skew.column_classes())
    return [zero_position(mu, c) for c in range(1, mu.shape.k + 1) if c not in used]


@lru_cache(maxsize=None)
def horizontal_strips(mu: BoxPartition, d: int):
    """All (lam, J) with lam/d/mu a cylindric horizontal strip."""
    out = []
    shape = mu.shape
    if shape.n == 0:
        # no rows: the only strip of degree 1 is the full rim of N boxes
        J = tuple(zero_position(mu, c) for c in range(1, shape.k + 1)) if d == 0 else ()
        return ((mu, J),)
    if shape.k == 0:
        return ((mu, ()),) if d == 0 else ()
    for lam in partitions(shape):
        sk = cylindric_skew(lam, d, mu)
        if sk is NONEXISTENT or not sk.is_horizontal_strip():
            continue
        out.append((lam, tuple(strip_J(sk))))
    return tuple(out)


def toric_tableaux(lam: BoxPartition, d: int, mu: BoxPartition, ell: int):
    """Loop sequences (mu,0), (lam1,d1), ..., (lam,d) built from horizontal strips."""
    if ell < 1:
        raise ShapeError("need ell >= 1")
    out = []

    def rec(seq):
        cur, deg = seq[-1]
        steps = len(seq) - 1
        if steps == ell:
            if cur == lam and deg == d:
                out.append(tuple(seq))
            return
        for dd in (0, 1):
            if deg + dd > d:
                continue
            for nxt, _ in horizontal_strips(cur, dd):
                rec(seq + [(nxt, deg + dd)])

    rec([(mu, 0)])
    return out
