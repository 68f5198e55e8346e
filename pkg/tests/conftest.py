import itertools

import pytest

from stringiso.perm import compose


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(n))]


def closure(gens, n):
    """Naive BFS closure, independent of the stabilizer-chain code."""
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def brute_iso(elements, x, y):
    return {g for g in elements if all(y[g[r]] == x[r] for r in range(len(x)))}


@pytest.fixture
def perms():
    return all_perms


# acceptance criteria report: test_acceptance records (number -> (ok, text))
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
