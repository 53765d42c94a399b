"""Numerical Bethe ansatz for the vicious walker transfer matrices.

The Bethe equations decouple: every root is a zero of the single polynomial
p(y) = prod_j (y - t_j) + (-1)^n q.  Roots are found as companion-matrix
eigenvalues and labelled by continuation in q from q = 0, where y_j = t_j.
Numeric instances stand in for the Puiseux field; every claim checked here
is an identity already certified exactly elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .grbasis import BoxPartition, BoxShape, complement, conjugate, partitions, word_from_partition
from .lattice import sector
from .polyring import evaluate as poly_evaluate

RESIDUAL_TOL = 1e-10
ORTHO_TOL = 1e-9
GW_TOL = 1e-8


class BetheCollision(RuntimeError):
    """Two roots met (or labels became ambiguous) along the q-homotopy."""

    def __init__(self, msg, s=None):
        super().__init__(msg)
        self.s = s


@dataclass
class BetheContext:
    shape: BoxShape
    tvals: np.ndarray
    q: complex
    roots: np.ndarray
    steps: int = 64
    min_gap: float = 0.0

    @property
    def N(self):
        return self.shape.N

    @property
    def T(self):
        return self.tvals[::-1]

    def index_set(self, alpha: BoxPartition):
        """I(alpha) = {alpha_i + n + 1 - i}, 0-based root positions."""
        n = self.shape.n
        return tuple(alpha[i] + n - i - 1 for i in range(n))

    def y(self, alpha: BoxPartition):
        return self.roots[list(self.index_set(alpha))]

    def y_star(self, alpha: BoxPartition):
        I = set(self.index_set(alpha))
        return self.roots[[j for j in range(self.N) if j not in I]]

    def euler(self, alpha: BoxPartition):
        """e(y_alpha) = prod_{i in I(alpha), j not in I(alpha)} (y_i - y_j)."""
        out = 1.0 + 0j
        for yi in self.y(alpha):
            for yj in self.y_star(alpha):
                out *= yi - yj
        return out

    def residuals(self):
        sign = (-1) ** self.shape.n * self.q
        return kernels.bae_residuals(self.roots, self.tvals, complex(sign))

    def scale(self):
        return max(1.0, float(np.max(np.abs(self.tvals))) ** self.N, abs(self.q))


# root finding

def _poly_coeffs(tvals, n, q):
    c = np.poly(tvals).astype(np.complex128)
    c[-1] += (-1) ** n * q
    return c


def _newton(y, tvals, n, q, iters=3):
    c = _poly_coeffs(tvals, n, q)
    dc = np.polyder(c)
    for _ in range(iters):
        d = np.polyval(dc, y)
        ok = d != 0
        y = np.where(ok, y - np.polyval(c, y) / np.where(ok, d, 1), y)
    return y


def _match(prev, cand, s):
    """Assign each previous root its nearest candidate; ambiguity is an error."""
    dist = np.abs(prev[:, None] - cand[None, :])
    pick = np.argmin(dist, axis=1)
    if len(set(pick.tolist())) != len(pick):
        raise BetheCollision(f"root labels collide at homotopy parameter s={s:.4f}", s)
    srt = np.sort(dist, axis=1)
    if srt.shape[1] > 1:
        own, other = srt[:, 0], srt[:, 1]
        if np.any(own > 0.5 * other):
            raise BetheCollision(f"ambiguous root continuation at s={s:.4f}; perturb t", s)
    return cand[pick]


def continue_roots(tvals, n, q, steps=64, path=None, refine=4):
    """Roots y_j(q) with y_j(0) = t_j, continued along q(s) = path(s), s in [0, 1].

    A step whose nearest-neighbour matching is ambiguous is bisected, at most
    `refine` times, before a collision is reported.
    """
    tvals = np.asarray(tvals, dtype=np.complex128)
    N = len(tvals)
    y = tvals.copy()
    if N == 0:
        return y
    path = path or (lambda s: s * q)

    def roots_at(qs):
        if N == 1:
            return np.array([tvals[0] - (-1) ** n * qs], dtype=np.complex128)
        return np.roots(_poly_coeffs(tvals, n, qs))

    def step(y, s0, s1, depth):
        qs = path(s1)
        try:
            return _newton(_match(y, roots_at(qs), s1), tvals, n, qs)
        except BetheCollision:
            if depth == 0:
                raise
            mid = 0.5 * (s0 + s1)
            return step(step(y, s0, mid, depth - 1), mid, s1, depth - 1)

    for i in range(1, steps + 1):
        y = step(y, (i - 1) / steps, i / steps, refine)
    return y


def solve_bae(shape: BoxShape, tvals, q=1.0, steps=64) -> BetheContext:
    """Labelled Bethe roots for Gr(n, N) at numeric t and q."""
    tvals = np.asarray(tvals, dtype=np.complex128)
    if len(tvals) != shape.N:
        raise ValueError("need one t-value per site")
    if len(set(np.round(tvals, 12).tolist())) != len(tvals):
        raise ValueError("t-values must be distinct")
    roots = continue_roots(tvals, shape.n, complex(q), steps)
    gaps = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(gaps, np.inf)
    gap = float(np.min(gaps)) if len(roots) > 1 else np.inf
    if gap < 1e-8:
        raise BetheCollision(f"roots coincide (gap {gap:.2e}); perturb t")
    return BetheContext(shape, tvals, complex(q), roots, steps, gap)


def random_t(N, seed=0):
    rng = np.random.default_rng(seed)
    return rng.normal(size=N) + 1j * rng.normal(size=N)


# factorial Schur functions at numeric points

def _a(vals, length):
    a = np.zeros(length, dtype=np.complex128)
    a[:len(vals)] = vals
    return a


def fs(parts, xs, avals):
    """s_parts(xs | a) with a_i = avals[i-1] and a_i = 0 beyond."""
    xs = np.asarray(xs, dtype=np.complex128)
    n = len(xs)
    parts = tuple(parts) + (0,) * max(0, n - len(parts))
    if any(parts[n:]):
        return 0j
    if n == 0:
        return 1.0 + 0j
    parts = np.array(parts[:n], dtype=np.int64)
    a = _a(avals, int(parts[0]) + n + len(avals) + 1)
    return complex(kernels.fac_schur_numeric(parts, xs, a))


def s_t(lam, xs, ctx):
    return fs(lam.parts if hasattr(lam, "parts") else lam, xs, ctx.tvals)


def s_T(lam, xs, ctx):
    return fs(lam.parts if hasattr(lam, "parts") else lam, xs, ctx.T)


def bethe_vector(ctx: BetheContext, alpha: BoxPartition):
    """|y_alpha> = sum_lam s_{lam^vee}(y_alpha|T) |lam>, basis order of partitions()."""
    y = ctx.y(alpha)
    return np.array([s_T(complement(lam), y, ctx) for lam in partitions(ctx.shape)])


def left_bethe_vector(ctx: BetheContext, alpha: BoxPartition):
    """<y_alpha| = sum_lam s_lam(y_alpha|t)/e(y_alpha) <lam|."""
    y = ctx.y(alpha)
    e = ctx.euler(alpha)
    return np.array([s_t(lam, y, ctx) for lam in partitions(ctx.shape)]) / e


def dual_bethe_vector(ctx: BetheContext, z):
    """|z_1..z_k> = sum_lam s_{(lam^vee)'}(z|-t) |lam>."""
    return np.array([fs(conjugate(complement(lam)).parts, z, -ctx.tvals)
                     for lam in partitions(ctx.shape)])


# numeric operators on V_n

def _basis_index(shape):
    basis = list(partitions(shape))
    return basis, {word_from_partition(p): i for i, p in enumerate(basis)}


def _values(vs, tvals, q, x=0j):
    N = vs.N
    vals = [0j] * vs.nvars
    for j in range(1, N + 1):
        vals[N - j] = complex(tvals[j - 1])
    vals[vs.q_index] = complex(q)
    for i in range(1, vs.m + 1):
        vals[vs.x_index(i)] = complex(x)
    return vals


def numeric_operator(op, shape, tvals, q, x=0j):
    """Dense matrix of an OperatorVn in the partitions() basis."""
    basis, idx = _basis_index(shape)
    M = np.zeros((len(basis), len(basis)), dtype=np.complex128)
    vals = _values(op.vs, tvals, q, x)
    for (o, i), c in op.entries.items():
        if o in idx and i in idx:
            M[idx[o], idx[i]] += poly_evaluate(c, vals)
    return M


def transfer_numeric(kind, shape, tvals, q, x):
    """H(x) ('vicious') or E(x) ('osculating') at numeric x from the row kernel."""
    basis, idx = _basis_index(shape)
    N = shape.N
    W = kernels.weights_array(kind, complex(x), np.asarray(tvals, dtype=np.complex128))
    M = np.zeros((len(basis), len(basis)), dtype=np.complex128)
    masks = [sum(1 << j for j, b in enumerate(word_from_partition(p)) if b) for p in basis]
    for c, m in enumerate(masks):
        vec = np.zeros(1 << N, dtype=np.complex128)
        vec[m] = 1.0
        out = kernels.row_apply(vec, W, complex(q), N)
        M[:, c] = out[masks]
    return M


def _rel(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(b)))))


def _sample_x(rng, m=3):
    return [complex(v) for v in 0.3 * (rng.normal(size=m) + 1j * rng.normal(size=m))]


# spectral checks

def spectral_checks(ctx: BetheContext, seed=0):
    """Max residuals of the eigenvalue, factorial-spectrum, duality and orthogonality laws."""
    from .transfer import factorial_coeffs
    shape = ctx.shape
    n, k = shape.n, shape.k
    basis = list(partitions(shape))
    rng = np.random.default_rng(seed)
    xs = _sample_x(rng)
    H = {x: transfer_numeric("vicious", shape, ctx.tvals, ctx.q, x) for x in xs}
    E = {x: transfer_numeric("osculating", shape, ctx.tvals, ctx.q, x) for x in xs}
    Ht = {r: numeric_operator(o, shape, ctx.tvals, ctx.q) for r, o in factorial_coeffs("H", shape).items()}
    Et = {r: numeric_operator(o, shape, ctx.tvals, ctx.q) for r, o in factorial_coeffs("E", shape).items()}
    res = {k_: 0.0 for k_ in ("bae", "specH", "specH-dual-form", "specE", "dualspecH", "dualspecE",
                              "facHspec", "facEspec", "dual-parallel", "left-eigen",
                              "biorthogonal", "res-of-1", "M2'", "baeid2", "LRdualityFacSchur")}
    res["bae"] = float(np.max(np.abs(ctx.residuals()))) / ctx.scale()
    sign = (-1) ** n
    for alpha in basis:
        y = ctx.y(alpha)
        z = -ctx.y_star(alpha)
        v = bethe_vector(ctx, alpha)
        w = left_bethe_vector(ctx, alpha)
        vz = dual_bethe_vector(ctx, z)
        for x in xs:
            lamH = (np.prod(1 - x * ctx.tvals) + sign * ctx.q * x ** shape.N) / np.prod(1 - x * y)
            res["specH"] = max(res["specH"], _rel(H[x] @ v, lamH * v))
            res["specH-dual-form"] = max(res["specH-dual-form"], abs(lamH - np.prod(1 + x * z)))
            res["specE"] = max(res["specE"], _rel(E[x] @ v, np.prod(1 + x * y) * v))
            res["dualspecH"] = max(res["dualspecH"], _rel(H[x] @ vz, np.prod(1 + x * z) * vz))
            lamE = (np.prod(1 + x * ctx.T) + (-1) ** k * ctx.q * x ** shape.N) / np.prod(1 - x * z)
            res["dualspecE"] = max(res["dualspecE"], _rel(E[x] @ vz, lamE * vz))
            res["left-eigen"] = max(res["left-eigen"], _rel(w @ H[x], lamH * w))
        for r, M in Ht.items():
            if n == 0 and r == shape.N:
                continue        # no roots: Ht_N = q on V_0 while h_N(empty) = 0
            res["facHspec"] = max(res["facHspec"], _rel(M @ v, s_t((r,), y, ctx) * v))
        for r, M in Et.items():
            res["facEspec"] = max(res["facEspec"], _rel(M @ v, s_t((1,) * r, y, ctx) * v))
            if r and k:         # k = 0 has no dual roots
                hz = fs((r,), z, -ctx.T)
                res["baeid2"] = max(res["baeid2"], abs(s_t((1,) * r, y, ctx) - hz) / max(1, abs(hz)))
        # |z> must be parallel to |y>
        c = np.vdot(v, vz) / np.vdot(v, v)
        res["dual-parallel"] = max(res["dual-parallel"], _rel(vz, c * v))
        for lam in basis:
            a = s_t(conjugate(lam).parts, y, ctx)
            b = fs(lam.parts, z, -ctx.T)
            res["LRdualityFacSchur"] = max(res["LRdualityFacSchur"], abs(a - b) / max(1, abs(b)))
        # M2': sum_r (-1)^r e_r(t) h_{j-r}(y) vanishes for k < j < N and is (-1)^{n-1} q at j = N
        et = np.poly(ctx.tvals) * (-1) ** np.arange(shape.N + 1)
        hy = [fs((j,), y, []) for j in range(shape.N + 1)]
        for j in range(k + 1, shape.N + 1):
            s = sum((-1) ** r * et[r] * hy[j - r] for r in range(j + 1))
            target = (-1) ** (n - 1) * ctx.q if j == shape.N else 0
            res["M2'"] = max(res["M2'"], abs(s - target) / ctx.scale())
    V = np.array([bethe_vector(ctx, a) for a in basis]).T
    Wl = np.array([left_bethe_vector(ctx, a) for a in basis])
    res["biorthogonal"] = _rel(Wl @ V, np.eye(len(basis)))
    R = resolution_of_identity(ctx)
    res["res-of-1"] = _rel(R, np.eye(len(basis)))
    eul = [abs(ctx.euler(a)) for a in basis]
    diag = {"min_gap": ctx.min_gap, "min_abs_euler": float(min(eul)),
            "cond_bethe_basis": float(np.linalg.cond(V))}
    return report(ctx, res, diag, {"bae": RESIDUAL_TOL})


def resolution_of_identity(ctx: BetheContext):
    """[sum_alpha s_{lam^vee}(y_alpha|T) s_mu(y_alpha|t) / e(y_alpha)]_{lam, mu}."""
    basis = list(partitions(ctx.shape))
    m = len(basis)
    R = np.zeros((m, m), dtype=np.complex128)
    for alpha in basis:
        y = ctx.y(alpha)
        e = ctx.euler(alpha)
        col = np.array([s_T(complement(l), y, ctx) for l in basis])
        row = np.array([s_t(mu, y, ctx) for mu in basis])
        R += np.outer(col, row) / e
    return R


def report(ctx, res, diag, tols=None):
    tols = dict(tols or {})
    ok = {name: v < tols.get(name, ORTHO_TOL) for name, v in res.items()}
    return {"shape": [ctx.shape.n, ctx.shape.N], "q": [ctx.q.real, ctx.q.imag],
            "residuals": res, "diagnostics": diag, "passed": all(ok.values()),
            "failed": sorted(k_ for k_, v in ok.items() if not v)}


# residue formula

def residue_value(ctx: BetheContext, lam, mu, nu):
    """sum_alpha s_lam(y|t) s_mu(y|t) s_{nu^vee}(y|T) / e(y)  =  <nu|S~_lam|mu>."""
    total = 0j
    nuv = complement(nu)
    for alpha in partitions(ctx.shape):
        y = ctx.y(alpha)
        total += s_t(lam, y, ctx) * s_t(mu, y, ctx) * s_T(nuv, y, ctx) / ctx.euler(alpha)
    return total


def residue_gw(lam, mu, nu, d=None, tvals=None, q=1.0, steps=64):
    """C^{nu,d}_{lam mu} at numeric t from Bethe roots.

    d=None returns the full matrix element sum_d q^d C^{nu,d}; otherwise the
    q^d part is isolated by solving at q on a circle of D points.
    """
    from .qhring import degree_range
    shape = lam.shape
    if tvals is None:
        tvals = random_t(shape.N)
    if d is None:
        return residue_value(solve_bae(shape, tvals, q, steps), lam, mu, nu)
    D = len(degree_range(lam, mu, nu))
    if d >= D:
        return 0j
    total = 0j
    for s in range(D):
        qs = complex(q) * np.exp(2j * np.pi * s / D)
        ctx = solve_bae(shape, tvals, qs, steps)
        total += residue_value(ctx, lam, mu, nu) * qs ** (-d)
    return total / D


def residue_table_check(ctx: BetheContext):
    """Max relative deviation of the residue formula from the exact product."""
    from .qhring import evaluate, product
    basis = list(partitions(ctx.shape))
    worst = 0.0
    for lam in basis:
        for mu in basis:
            exact = {}
            for (nu, d), c in product(lam, mu).items():
                exact[nu] = exact.get(nu, 0j) + evaluate(c, ctx.tvals, 0) * ctx.q ** d
            for nu in basis:
                ex = exact.get(nu, 0j)
                got = residue_value(ctx, lam, mu, nu)
                worst = max(worst, abs(got - ex) / max(1.0, abs(ex)))
    return worst


# GKM and idempotents

def _swap_t(tvals, j):
    t = np.array(tvals, dtype=np.complex128)
    t[j - 1], t[j] = t[j], t[j - 1]
    return t


def _p_j(alpha: BoxPartition, j):
    """Swap letters j, j+1 of the 01-word of alpha."""
    from .grbasis import partition_from_word
    w = list(word_from_partition(alpha))
    w[j - 1], w[j] = w[j], w[j - 1]
    return partition_from_word(tuple(w), alpha.shape)


def _hop(lam: BoxPartition, a, b):
    """Move the particle at site a to the empty site b; None if blocked."""
    from .grbasis import partition_from_word
    w = list(word_from_partition(lam))
    if not (w[a - 1] == 1 and w[b - 1] == 0):
        return None
    w[a - 1], w[b - 1] = 0, 1
    return partition_from_word(tuple(w), lam.shape)


def gkm_check(ctx: BetheContext, seed=0, printed=False):
    """GKM relations, bold s_j permutation of Bethe vectors, idempotent law.

    The GKM difference holds with the hop j+1 -> j and factor t_{j+1} - t_j.
    printed=True uses the hop j -> j+1 with factor t_j - t_{j+1}, which fails.
    """
    from .nilhecke import r_hat
    from .qhring import _vs
    shape = ctx.shape
    N = shape.N
    basis = list(partitions(shape))
    res = {"GKM": 0.0, "bold-s-permutes": 0.0, "idempotent": 0.0, "labels-path-independent": 0.0}
    vs = _vs(N)
    for j in range(1, N):
        ts = _swap_t(ctx.tvals, j)
        sw = solve_bae(shape, ts, ctx.q, ctx.steps)
        R = numeric_operator(r_hat(N, vs, j, sector(shape)), shape, ts, ctx.q)
        dt = ctx.tvals[j - 1] - ctx.tvals[j]
        hop = (j, j + 1) if printed else (j + 1, j)
        if not printed:
            dt = -dt
        for alpha in basis:
            y = ctx.y(alpha)
            ys = sw.y(_p_j(alpha, j))
            for lam in basis:
                lhs = s_t(lam, y, ctx) - fs(lam.parts, ys, ts)
                dl = _hop(lam, *hop)
                rhs = dt * s_t(dl, y, ctx) if dl is not None else 0j
                res["GKM"] = max(res["GKM"], abs(lhs - rhs) / max(1.0, abs(rhs)))
            # bold s_j |y_alpha> = |y_{p_j alpha}>, coefficients evaluated at s_j t
            v = bethe_vector(sw, alpha)
            res["bold-s-permutes"] = max(res["bold-s-permutes"],
                                         _rel(R @ v, bethe_vector(ctx, _p_j(alpha, j))))
    # idempotents: |y_a> (*) |y_b> = delta_ab e(y_a) |y_a>
    from .qhring import evaluate, product
    m = len(basis)
    idx = {p: i for i, p in enumerate(basis)}
    C = np.zeros((m, m, m), dtype=np.complex128)   # C[nu, lam, mu]
    for lam in basis:
        for mu in basis:
            for (nu, d), c in product(lam, mu).items():
                C[idx[nu], idx[lam], idx[mu]] += evaluate(c, ctx.tvals, 0) * ctx.q ** d
    V = {a: bethe_vector(ctx, a) for a in basis}
    for a in basis:
        for b in basis:
            prod_ab = np.einsum("nlm,l,m->n", C, V[a], V[b])
            target = ctx.euler(a) * V[a] if a == b else np.zeros(m)
            scale = max(1.0, float(np.max(np.abs(ctx.euler(a) * V[a]))))
            res["idempotent"] = max(res["idempotent"], float(np.max(np.abs(prod_ab - target))) / scale)
    alt = continue_roots(ctx.tvals, shape.n, ctx.q, 41)
    res["labels-path-independent"] = float(np.max(np.abs(alt - ctx.roots)))
    return report(ctx, res, {"steps": ctx.steps})


def full_report(shape: BoxShape, q=1.0, seed=0, steps=64):
    tv = random_t(shape.N, seed)
    ctx = solve_bae(shape, tv, q, steps)
    spec = spectral_checks(ctx, seed)
    gk = gkm_check(ctx, seed)
    res = dict(spec["residuals"])
    res.update(gk["residuals"])
    res["residue-gw"] = residue_table_check(ctx)
    rep = report(ctx, res, dict(spec["diagnostics"]), {"bae": RESIDUAL_TOL, "residue-gw": GW_TOL})
    rep["seed"] = seed
    return rep
