import numpy as np
import pytest

from artifact.grbasis import BoxShape, make


@pytest.fixture
def gr24():
    return BoxShape(2, 2)


@pytest.fixture
def P24(gr24):
    return lambda *parts: make(parts, gr24)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def all_shapes(Nmax, Nmin=1):
    return [BoxShape.from_nN(n, N) for N in range(Nmin, Nmax + 1) for n in range(N + 1)]


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets ok/detail."""
    rec = {"ok": False, "detail": ""}
    yield rec
    num, title = request.node.function.criterion
    ACCEPTANCE[num] = (rec["ok"], title, rec["detail"])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[num]
        line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
