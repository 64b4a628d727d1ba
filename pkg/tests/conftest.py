import numpy as np
import pytest

from snccc import GapPartition, build_snc_ccc, mos_generate, seed_ccc


def pm(*rows):
    """Matrix from rows written with '+', '-' and '0' (spaces ignored)."""
    table = {"+": 1, "-": -1, "0": 0}
    return np.array([[table[c] for c in r.replace(" ", "")] for r in rows], dtype=np.int64)


# The four 4 x 9 codes of the worked example, transcribed symbol by symbol.
GOLDEN_B = np.array([
    pm("+++ 000 +-+", "++- 000 ++-", "++- 000 --+", "-+- 000 +++"),
    pm("+++ 000 -+-", "++- 000 --+", "++- 000 ++-", "-+- 000 ---"),
    pm("+-- 000 +--", "+++ 000 +-+", "-+- 000 +++", "+-- 000 -++"),
    pm("+-- 000 -++", "+++ 000 -+-", "-+- 000 ---", "+-- 000 +--"),
])


def aperiodic_oracle(a, b, tau):
    """Definition written out with 1-based indices and plain Python loops."""
    L = len(a)
    total = 0
    if 0 <= tau < L:
        for i in range(1, L - tau + 1):
            total += a[i + tau - 1] * np.conj(b[i - 1])
    elif -L < tau < 0:
        for i in range(1, L + tau + 1):
            total += a[i - 1] * np.conj(b[i - tau - 1])
    return total


def code_oracle(c1, c2, tau, periodic=False):
    L = len(c1[0])
    total = 0
    for r1, r2 in zip(c1, c2):
        total += aperiodic_oracle(r1, r2, tau)
        if periodic:
            total += aperiodic_oracle(r1, r2, tau - L)
    return total


def random_partition(rng, n, P):
    """Uniform composition of n into P + 1 non-negative parts (stars and bars)."""
    cuts = np.sort(rng.choice(n + P, size=P, replace=False))
    bounds = np.concatenate([[-1], cuts, [n + P]])
    return GapPartition(tuple(int(x) for x in np.diff(bounds) - 1))


@pytest.fixture(scope="session")
def example_seed():
    return seed_ccc("example1")


@pytest.fixture(scope="session")
def example_b(example_seed):
    return build_snc_ccc(example_seed, mos_generate(2, "hadamard"), GapPartition((0, 3, 0)))


# Acceptance summary: one PASS/FAIL line per criterion, aggregated over its test items.
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "failed": [], "ran": 0})
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        entry["ran"] += 1
        if report.outcome != "passed":
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        verdict = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number}: {verdict}  {entry['title']}"
        if entry["failed"]:
            line += f"  (failing: {', '.join(entry['failed'])})"
        terminalreporter.write_line(line)
