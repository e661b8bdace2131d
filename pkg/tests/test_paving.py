import pytest

from hesspave.hess import borel, enumerate_all, full, peterson
from hesspave.paving import (CellReport, ElementSpec, ElementSpecError, _LeviContext, betti_numbers,
                             cell_general, cell_nilpotent_levi, cell_regular, cell_regular_nilpotent,
                             cell_semisimple, format_poincare, paving_report)
from hesspave.weyl import enumerate_elements, from_word, identity

from conftest import SMALL_TYPES, subsets, system


def dims(rs, cells, words):
    by_word = {c.w: c for c in cells}
    return [by_word[from_word(rs, w)].dimension for w in words]


A2_WORDS = [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]


@pytest.fixture
def a2():
    return system("A", 2)


def test_regular_nilpotent_examples(a2):
    rs = a2
    for w in enumerate_elements(rs):
        c = cell_regular_nilpotent(rs, full(rs), w)
        assert c.nonempty and c.dimension == w.length
        c = cell_regular_nilpotent(rs, borel(rs), w)
        assert c.nonempty == w.is_identity()
    rep = paving_report(rs, ElementSpec.regular_nilpotent(), peterson(rs))
    assert dims(rs, rep.cells, A2_WORDS) == [0, 1, 1, None, None, 2]
    assert rep.poincare_string() == "1 + 2*q + q^2"


def test_nilpotent_levi_examples(a2):
    rs = a2
    rep = paving_report(rs, ElementSpec.nilpotent_levi({1}), borel(rs))
    assert dims(rs, rep.cells, A2_WORDS) == [0, 1, 1, None, None, None]
    assert rep.poincare_string() == "1 + 2*q"
    rep = paving_report(rs, ElementSpec.nilpotent_levi({1}), full(rs))
    assert all(c.dimension == c.w.length for c in rep.cells)


def test_semisimple_examples(a2):
    rs = a2
    rep = paving_report(rs, ElementSpec.semisimple(()), borel(rs))
    assert all(c.dimension == 0 for c in rep.cells) and rep.euler == 6
    rep = paving_report(rs, ElementSpec.semisimple(()), peterson(rs))
    assert dims(rs, rep.cells, A2_WORDS) == [0, 1, 1, 1, 1, 2]
    assert rep.betti == [1, 4, 1] and rep.euler == 6
    rep = paving_report(rs, ElementSpec.semisimple({1}), peterson(rs))
    assert dims(rs, rep.cells, A2_WORDS) == [0, 1, 1, 2, 1, 2]
    assert rep.poincare_string() == "1 + 3*q + 2*q^2"
    cells = {c.w: c for c in rep.cells}
    for word, y, v in [((1, 2), (1,), (2,)), ((2, 1), (), (2, 1)), ((1, 2, 1), (1,), (2, 1))]:
        c = cells[from_word(rs, word)]
        assert c.y == from_word(rs, y) and c.v == from_word(rs, v)


def test_regular_example(a2):
    rs = a2
    rep = paving_report(rs, ElementSpec.regular({1}), peterson(rs))
    assert dims(rs, rep.cells, A2_WORDS) == [0, 1, 1, None, 1, 2]
    assert rep.poincare_string() == "1 + 3*q + q^2" and rep.euler == 5
    assert len(rep.nonempty_cells) == 5


def test_general_example(a2):
    rs = a2
    rep = paving_report(rs, ElementSpec.general({1}, {1}), peterson(rs))
    assert rep.betti == [1, 3, 1]


def test_general_requires_containment(a2):
    with pytest.raises(ElementSpecError, match="not contained"):
        ElementSpec.general({1}, {2})
    with pytest.raises(ElementSpecError, match="not contained"):
        cell_general(a2, {1}, {2}, peterson(a2), identity(a2))


def test_spec_validation(a2):
    with pytest.raises(ElementSpecError):
        ElementSpec("bogus")
    with pytest.raises(ElementSpecError):
        ElementSpec.semisimple({4}).validate(a2)
    with pytest.raises(ElementSpecError):
        ElementSpec("regular", {1}, {1})


def test_cell_report_consistency(a2):
    with pytest.raises(ValueError):
        CellReport(identity(a2), identity(a2), identity(a2), False, 0)


def test_format_poincare():
    assert format_poincare([1, 2, 1]) == "1 + 2*q + q^2"
    assert format_poincare([0, 1]) == "q"
    assert format_poincare([]) == "0"


def all_specs(n):
    specs = [ElementSpec.regular_nilpotent()]
    for D in subsets(n):
        specs += [ElementSpec.nilpotent_levi(D), ElementSpec.semisimple(D), ElementSpec.regular(D)]
        specs += [ElementSpec.general(D, Dm) for Dm in subsets(n) if Dm and Dm <= D]
    return specs


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_flag_variety_every_spec(t, n):
    rs = system(t, n)
    lengths = [w.length for w in enumerate_elements(rs)]
    flag = [lengths.count(k) for k in range(max(lengths) + 1)]
    for spec in all_specs(n):
        rep = paving_report(rs, spec, full(rs))
        assert rep.betti == flag


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_report_invariants(t, n):
    rs = system(t, n)
    order = rs.weyl_order()
    for H in enumerate_all(rs):
        for D in subsets(n):
            ss = paving_report(rs, ElementSpec.semisimple(D), H)
            reg = paving_report(rs, ElementSpec.regular(D), H)
            assert ss.euler == order
            assert reg.euler <= ss.euler
            for rep in (ss, reg):
                assert sum(rep.betti) == rep.euler
                assert all(c.dimension <= c.w.length for c in rep.nonempty_cells)
        rss = paving_report(rs, ElementSpec.semisimple(()), H).betti
        assert rss == rss[::-1] and len(rss) - 1 == len(H.negatives)


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_borel_specializations(t, n):
    rs = system(t, n)
    rep = paving_report(rs, ElementSpec.regular_nilpotent(), borel(rs))
    assert [c.w for c in rep.nonempty_cells] == [identity(rs)] and rep.betti == [1]
    rep = paving_report(rs, ElementSpec.semisimple(()), borel(rs))
    assert rep.betti == [rs.weyl_order()]


def same(a, b):
    return a.nonempty == b.nonempty and a.dimension == b.dimension


def cell_data(rs, spec, H):
    return [(c.nonempty, c.dimension) for c in paving_report(rs, spec, H).cells]


def square_violations(rs):
    """Count disagreements among the four dispatch identities over every H."""
    every = rs.simple_indices
    bad = 0
    for H in enumerate_all(rs):
        bad += cell_data(rs, ElementSpec.regular(every), H) != cell_data(rs, ElementSpec.regular_nilpotent(), H)
        bad += cell_data(rs, ElementSpec.regular(()), H) != cell_data(rs, ElementSpec.semisimple(()), H)
        for D in subsets(rs.rank):
            if D:
                bad += cell_data(rs, ElementSpec.general(D, D), H) != cell_data(rs, ElementSpec.regular(D), H)
                bad += cell_data(rs, ElementSpec.general(every, D), H) != cell_data(rs, ElementSpec.nilpotent_levi(D), H)
    return bad


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_specialization_square(t, n):
    assert square_violations(system(t, n)) == 0


def test_specialization_square_cellwise_a2(a2):
    rs = a2
    for H in enumerate_all(rs):
        for w in enumerate_elements(rs):
            assert same(cell_regular(rs, (1, 2), H, w), cell_regular_nilpotent(rs, H, w))
            assert same(cell_regular(rs, (), H, w), cell_semisimple(rs, (), H, w))
            for D in ({1}, {2}, {1, 2}):
                assert same(cell_general(rs, D, D, H, w), cell_regular(rs, D, H, w))
                assert same(cell_general(rs, (1, 2), D, H, w), cell_nilpotent_levi(rs, D, H, w))


@pytest.mark.parametrize("t,n", SMALL_TYPES)
def test_general_nonempty_matches_direct_criterion(t, n):
    # inner-cell nonemptiness vs. the conjugated Phi_N sitting inside w(Phi_H)
    rs = system(t, n)
    elements = enumerate_elements(rs)
    for D in subsets(n):
        for Dm in subsets(n):
            if not Dm or not Dm <= D:
                continue
            ctx = _LeviContext(rs, D, Dm)
            phi_N = ctx.sub.lift(ctx.cd.phi_N)
            for H in enumerate_all(rs):
                for w in elements:
                    cell = cell_general(rs, D, Dm, H, w, ctx)
                    assert cell.nonempty == (phi_N <= w.image(H.phi_H))


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("G", 2)])
def test_tie_break_does_not_change_reports(t, n):
    rs = system(t, n)
    for H in enumerate_all(rs)[::3]:
        for spec in all_specs(n):
            a = paving_report(rs, spec, H, tie_break="lowest")
            b = paving_report(rs, spec, H, tie_break="highest")
            assert [(c.nonempty, c.dimension) for c in a.cells] == [(c.nonempty, c.dimension) for c in b.cells]


def test_betti_numbers_empty():
    assert betti_numbers([]) == []
