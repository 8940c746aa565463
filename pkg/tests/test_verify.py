import pytest

from glpq.errors import SuiteInapplicable
from glpq.verify import SUITES, check_bialgebra_maps, get_preset, run_suite

ALL_PRESETS = [("mat",), ("gl",), ("slq",), ("slqxi", 2), ("slqxi", 3), ("slqxi", 4, 2),
               ("upq",), ("uq",), ("uqxi", 2), ("uqxi", 3), ("uqxi", 4, 2)]
ids = lambda a: "-".join(map(str, a))  # noqa: E731


@pytest.mark.parametrize("args", ALL_PRESETS, ids=ids)
def test_all_suite_passes(args):
    rep = run_suite(args[0], "all", *args[1:])
    assert rep.ok, rep.render_text()
    assert rep.checks


def test_gl_determinant_suite():
    rep = run_suite("gl", "determinant")
    names = [c.name for c in rep.checks]
    assert names[:4] == ["D = da - p*cb", "D = da - q*bc", "D = ad - p^-1*bc", "D = ad - q^-1*cb"]
    assert "ΔD = D⊗D" in names
    assert "Db = (p^-1*q)*bD" in names
    assert rep.ok


def test_centrality_mat_vs_slq():
    mat = run_suite("mat", "centrality")
    first = mat.checks[0]
    assert first.status == "xfail"
    assert first.detail == "witness [D,b] = (p^-1*q - 1)*b*D"
    slq = run_suite("slq", "centrality")
    assert slq.ok and all(c.status == "pass" for c in slq.checks)


def test_uqxi3_uea_suite():
    rep = run_suite("uqxi", "uea", 3)
    assert rep.ok
    names = [c.name for c in rep.checks]
    assert "Δ[E,F] = Q1⊗X + X⊗Q2^-1" in names
    assert "X(1,0) = 1" in names
    assert "Q1 = W*qhat" in names


@pytest.mark.parametrize("preset,suite", [("mat", "hopf"), ("gl", "uea"), ("upq", "matrix"),
                                          ("uq", "determinant"), ("upq", "plane")])
def test_inapplicable(preset, suite):
    with pytest.raises(SuiteInapplicable):
        run_suite(preset, suite)


def test_unknown_suite_and_preset():
    with pytest.raises(ValueError):
        run_suite("gl", "nonsense")
    with pytest.raises(ValueError):
        get_preset("sl3")
    with pytest.raises(ValueError):
        get_preset("slqxi")
    with pytest.raises(ValueError):
        get_preset("gl", 3)
    with pytest.raises(ValueError):
        get_preset("slqxi", 4, 3)


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_deterministic(suite):
    for pre in ("gl", "upq"):
        try:
            a = run_suite(pre, suite)
        except SuiteInapplicable:
            continue
        b = run_suite(pre, suite)
        assert a.render_text() == b.render_text()
        assert a.to_json() == b.to_json()


def test_report_shapes():
    rep = run_suite("mat", "centrality")
    js = rep.to_json()
    assert set(js) == {"suite", "preset", "ok", "checks"}
    assert js["checks"][0]["status"] == "xfail"
    assert rep.render_text().endswith("checks as expected: OK")


def test_bialgebra_delta_Y():
    rep = check_bialgebra_maps(get_preset("gl"))
    assert rep.ok
    assert rep.checks[0].name == "Δ(Y)[1,1] = (i'(Y) i''(Y))[1,1]"


def test_failure_renders_operands():
    from glpq.report import IdentityReport

    rep = IdentityReport("demo", "none")
    rep.equal("one equals two", 1, 2)
    rep.equal("one equals one", 1, 1)
    text = rep.render_text()
    assert "FAIL  one equals two" in text and "lhs: 1" in text
    assert not rep.ok and len(rep.failures()) == 1
    assert rep.to_json()["checks"][1]["detail"] == {}
