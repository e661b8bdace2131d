from functools import lru_cache
from itertools import combinations

from hesspave.rootsys import build_root_system

SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("B", 3), ("C", 3), ("G", 2)]
RANK4_TYPES = [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4)]


@lru_cache(maxsize=None)
def system(type_label, rank):
    return build_root_system(type_label, rank)


def subsets(rank):
    idx = range(1, rank + 1)
    for r in range(rank + 1):
        for c in combinations(idx, r):
            yield frozenset(c)


def r(rs, *coeffs):
    """Root index of the root with the given simple-root coefficients."""
    return rs.root_index(coeffs)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
