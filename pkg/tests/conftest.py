import pytest

from ternarith import kernels

# filled in by test_acceptance; printed at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(params=[b.NAME for b in kernels.available()])
def backend(request):
    return {b.NAME: b for b in kernels.available()}[request.param]


@pytest.fixture
def use_backend(backend, monkeypatch):
    """Route library calls through ``backend`` for the duration of a test."""
    monkeypatch.setattr(kernels, "active", backend)
    return backend


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def trial_division_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        name, ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {name}  {detail}")
