import pytest

from alcove_hecke.errors import BoundsTooLarge
from alcove_hecke.laurent import LaurentPolynomial
from alcove_hecke.suite import bar_invariance_solver, run_suite, spherical_window


def test_report_structure():
    report = run_suite("A1_adj", kl_maxlen=4, samples=60, names=["res-complement", "m-triangle"])
    assert report.passed
    assert [c.name for c in report.checks] == ["res-complement", "m-triangle"]
    data = report.to_dict()
    assert data["preset"] == "A1_adj"
    assert all(c["status"] == "pass" for c in data["checks"])
    tsv = report.to_tsv()
    assert tsv.endswith("overall\tpass\t\n")


def test_fault_injection_counterexample():
    report = run_suite(
        "A2_adj", kl_maxlen=4, samples=60, fault="length-sign-flip", names=["res-complement"]
    )
    assert not report.passed
    ce = report.checks[0].counterexample
    assert ce is not None
    assert ce["command"].startswith("alcove-hecke ")
    assert "x" in ce and "y" in ce


def test_bounds_guards():
    with pytest.raises(BoundsTooLarge):
        run_suite("A1_adj", kl_maxlen=20)
    with pytest.raises(BoundsTooLarge):
        run_suite("A1_adj", window=40)
    with pytest.raises(BoundsTooLarge):
        run_suite("A1_adj", samples=10**6)


def test_unknown_preset():
    from alcove_hecke.errors import UnknownPreset

    with pytest.raises(UnknownPreset):
        run_suite("nope")


def test_spherical_window_lengths(a2):
    window = spherical_window(a2, 5)
    assert all(a2.ext.length(w) <= 5 for w in window)
    assert all(a2.alc.in_wexts(w) for w in window)
    # windows are nested
    assert set(spherical_window(a2, 3)) <= set(window)


def test_dihedral_solver_matches_engine(a1):
    ext = a1.ext
    for lit in ["e : -2", "s1 : -4", "e : 4", "s1 : 2"]:
        x = ext.parse_element(lit)
        solved = bar_invariance_solver(a1, x)
        table = a1.hecke.kl_basis(x)
        assert solved == dict(table.items())
        for y, p in solved.items():
            assert p == LaurentPolynomial.monomial(ext.length(x) - ext.length(y))


def test_full_suite_a1_defaults_fast():
    # preset A1_adj at full default bounds: everything passes well inside 60s
    import time

    start = time.monotonic()
    report = run_suite("A1_adj")
    elapsed = time.monotonic() - start
    assert report.passed, [c.name for c in report.checks if c.status != "pass"]
    assert elapsed < 60
