"""Acceptance gate: nine criteria, each timed against its runtime limit.

Every criterion builds its own root systems and clears the Weyl
enumeration cache first, so timings include all setup.  Run with pytest
(a summary line per criterion is printed at the end) or directly as a
script.
"""

import time
from collections import Counter
from itertools import combinations
from math import comb

from hesspave.hess import borel, enumerate_all, full, peterson
from hesspave.nilp import normalize
from hesspave.oracle import verify_report
from hesspave.paving import ElementSpec, paving_report
from hesspave.rootsys import build_root_system, subsystem
from hesspave.weyl import _enumerate, enumerate_elements, parabolic_decompose

RESULTS = {}

RANK3 = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("B", 3), ("C", 3), ("G", 2)]
UP_TO_RANK4 = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 2), ("C", 3),
               ("C", 4), ("D", 4), ("F", 4), ("G", 2)]


def subsets(n):
    for r in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(1, n + 1), r))


def all_specs(n):
    specs = [ElementSpec.regular_nilpotent()]
    for D in subsets(n):
        specs += [ElementSpec.nilpotent_levi(D), ElementSpec.semisimple(D), ElementSpec.regular(D)]
        specs += [ElementSpec.general(D, Dm) for Dm in subsets(n) if Dm and Dm <= D]
    return specs


def criterion(number, title, limit):
    def wrap(check):
        def test():
            _enumerate.cache_clear()
            t0 = time.perf_counter()
            failures = check()
            elapsed = time.perf_counter() - t0
            ok = not failures and elapsed < limit
            note = f"{elapsed:.2f}s (limit {limit:g}s)"
            if failures:
                note += f"; {len(failures)} failures, first: {failures[0]}"
            RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {note}"
            assert not failures, failures[:5]
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        test.__name__ = check.__name__
        test.__doc__ = title
        return test
    return wrap


@criterion(1, "flag-variety identity for every kind on A2, B2, A3", 1.0)
def test_1_flag_variety():
    bad = []
    for t, n in [("A", 2), ("B", 2), ("A", 3)]:
        rs = build_root_system(t, n)
        lengths = Counter(w.length for w in enumerate_elements(rs))
        flag = [lengths[k] for k in range(max(lengths) + 1)]
        if (t, n) == ("A", 2) and flag != [1, 2, 2, 1]:
            bad.append(("A2 flag", flag))
        G = full(rs)
        for spec in all_specs(n):
            betti = paving_report(rs, spec, G).betti
            if betti != flag:
                bad.append((rs.name, spec.describe(), betti))
    return bad


@criterion(2, "Springer degenerations on every supported type of rank <= 4", 1.0)
def test_2_springer():
    bad = []
    for t, n in UP_TO_RANK4:
        rs = build_root_system(t, n)
        B = borel(rs)
        rn = paving_report(rs, ElementSpec.regular_nilpotent(), B)
        if rn.betti != [1] or [c.w.length for c in rn.nonempty_cells] != [0]:
            bad.append((rs.name, "regular nilpotent", rn.betti))
        rss = paving_report(rs, ElementSpec.semisimple(()), B)
        if rss.betti != [rs.weyl_order()]:
            bad.append((rs.name, "regular semisimple", rss.betti))
    return bad


@criterion(3, "A2 fixture suite", 1.0)
def test_3_a2_fixtures():
    rs = build_root_system("A", 2)
    P, B = peterson(rs), borel(rs)
    cases = [
        (ElementSpec.regular_nilpotent(), P, [1, 2, 1], None),
        (ElementSpec.semisimple(()), P, [1, 4, 1], None),
        (ElementSpec.semisimple({1}), P, [1, 3, 2], None),
        (ElementSpec.regular({1}), P, [1, 3, 1], 5),
        (ElementSpec.nilpotent_levi({1}), B, [1, 2], None),
    ]
    bad = []
    for spec, H, betti, cells in cases:
        rep = paving_report(rs, spec, H)
        if rep.betti != betti or (cells is not None and len(rep.nonempty_cells) != cells):
            bad.append((spec.describe(), rep.betti))
        bad += verify_report(rs, spec, H, rep)
    return bad


@criterion(4, "Peterson pattern (1+q)^rank on A2, B2, G2, A3, B3", 5.0)
def test_4_peterson():
    bad = []
    for t, n in [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3)]:
        rs = build_root_system(t, n)
        spec, H = ElementSpec.regular_nilpotent(), peterson(rs)
        rep = paving_report(rs, spec, H)
        if rep.betti != [comb(n, k) for k in range(n + 1)]:
            bad.append((rs.name, rep.betti))
        bad += verify_report(rs, spec, H, rep)
    return bad


@criterion(5, "regular semisimple palindromicity over every H at rank <= 3", 30.0)
def test_5_palindromic():
    bad = []
    for t, n in RANK3:
        rs = build_root_system(t, n)
        for H in enumerate_all(rs):
            rep = paving_report(rs, ElementSpec.semisimple(()), H)
            b = rep.betti
            if b != b[::-1] or len(b) - 1 != len(H.negatives) or rep.euler != rs.weyl_order():
                bad.append((rs.name, H.describe(), b))
    return bad


@criterion(6, "oracle equivalence over every kind, Levi pair and H at rank <= 3", 300.0)
def test_6_oracle_sweep():
    bad = []
    for t, n in RANK3:
        rs = build_root_system(t, n)
        specs = all_specs(n)
        for H in enumerate_all(rs):
            for spec in specs:
                found = verify_report(rs, spec, H, paving_report(rs, spec, H))
                bad += [(rs.name, spec.describe(), H.describe(), str(d)) for d in found]
    return bad


@criterion(7, "specialization square at rank <= 3", 60.0)
def test_7_specialization_square():
    bad = []
    for t, n in RANK3:
        rs = build_root_system(t, n)
        every = rs.simple_indices

        def data(spec, H):
            return [(c.nonempty, c.dimension) for c in paving_report(rs, spec, H).cells]

        for H in enumerate_all(rs):
            pairs = [(ElementSpec.regular(every), ElementSpec.regular_nilpotent()),
                     (ElementSpec.regular(()), ElementSpec.semisimple(()))]
            for D in subsets(n):
                if D:
                    pairs.append((ElementSpec.general(D, D), ElementSpec.regular(D)))
                    pairs.append((ElementSpec.general(every, D), ElementSpec.nilpotent_levi(D)))
            for a, b in pairs:
                if data(a, H) != data(b, H):
                    bad.append((rs.name, H.describe(), a.describe(), b.describe()))
    return bad


@criterion(8, "root partition and weight-2 partition at rank <= 4", 60.0)
def test_8_structural():
    bad = []
    for t, n in UP_TO_RANK4:
        rs = build_root_system(t, n)
        elements = enumerate_elements(rs)
        for D in subsets(n):
            sub = subsystem(rs, D)
            for w in elements:
                y, v = parabolic_decompose(rs, w, D)
                a, b = y.image(v.inversion_set()), y.inversion_set()
                if not (a.isdisjoint(b) and a | b == w.inversion_set() and b <= sub.phi_M):
                    bad.append((rs.name, sorted(D), w.word))
            cd = normalize(rs, D)
            two = {k for k in rs.positive if cd.weights[k] == 2}
            parts = [set(cd.phi_V_minus), set(cd.phi_N), set(cd.phi_V_plus)]
            if sum(map(len, parts)) != len(two) or set().union(*parts) != two:
                bad.append((rs.name, sorted(D), "weight-2 partition"))
    return bad


@criterion(9, "performance floor: F4 report < 5 s, E6 enumeration < 60 s", 65.0)
def test_9_performance():
    bad = []
    t0 = time.perf_counter()
    f4 = build_root_system("F", 4)
    rep = paving_report(f4, ElementSpec.regular_nilpotent(), peterson(f4))
    f4_time = time.perf_counter() - t0
    if f4_time >= 5 or rep.betti != [1, 4, 6, 4, 1] or len(rep.cells) != 1152:
        bad.append(("F4", f"{f4_time:.2f}s", rep.betti))
    t0 = time.perf_counter()
    e6 = build_root_system("E", 6)
    n = len(enumerate_elements(e6))
    e6_time = time.perf_counter() - t0
    if e6_time >= 60 or n != 51840:
        bad.append(("E6", f"{e6_time:.2f}s", n))
    return bad


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    for k in sorted(RESULTS):
        print(RESULTS[k])
    sys.exit(1 if failed else 0)
