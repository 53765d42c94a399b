import numpy as np

from artifact import kernels


def test_row_apply_backends_agree(rng):
    N = 6
    vec = rng.normal(size=1 << N) + 1j * rng.normal(size=1 << N)
    tv = rng.normal(size=N) + 1j * rng.normal(size=N)
    for kind in ("vicious", "osculating"):
        W = kernels.weights_array(kind, 0.4 + 0.3j, tv)
        a = kernels._row_apply_py(vec, W, 0.9 + 0.2j, N)
        b = kernels.row_apply(vec, W, 0.9 + 0.2j, N)
        assert np.allclose(a, b, atol=1e-12)


def test_bae_residuals_backends_agree(rng):
    y = rng.normal(size=5) + 1j * rng.normal(size=5)
    t = rng.normal(size=5) + 1j * rng.normal(size=5)
    assert np.allclose(kernels._bae_residuals_py(y, t, -1.0 + 0j), kernels.bae_residuals(y, t, -1.0 + 0j))


def test_backend_flag():
    assert kernels.BACKEND in ("numba", "numpy")
