import itertools

import pytest

from glpq import fun_preset, u_preset
from glpq.errors import AlgebraMismatch, NegativeExponentOnNonInvertible, Unbounded
from glpq.rewrite import (
    AlgebraPresentation,
    Generator,
    NCPoly,
    StraighteningRule,
    _accumulate,
    _alphabet,
    _merge,
    check_confluence,
    enumerate_basis,
    normalize,
)
from glpq.scalars import scalar_ring

FUN = [("mat",), ("gl",), ("slq",), ("slqxi", 2), ("slqxi", 3), ("slqxi", 4, 2)]
UEA = [("upq",), ("uq",), ("uqxi", 2), ("uqxi", 3)]


def _fun(args):
    return fun_preset(*args)


def test_ba(mat):
    assert normalize(["b", "a"], mat.alg) == mat.a * mat.b * mat.ring.p


def test_da_reduces_to_D_plus_qbc(mat):
    r = mat.ring
    assert normalize(["d", "a"], mat.alg) == mat.D + mat.b * mat.c * r.q
    direct = mat.a * mat.d - mat.b * mat.c * (r.p ** -1 - r.q)
    assert normalize(["d", "a"], mat.alg) == direct


def test_cb(mat):
    r = mat.ring
    assert normalize(["c", "b"], mat.alg) == mat.b * mat.c * (r.p ** -1 * r.q)


def test_empty_word(mat):
    assert normalize([], mat.alg) == mat.alg.one
    assert str(normalize([], mat.alg)) == "1"


def test_unit_and_powers(mat):
    assert mat.a * mat.alg.one == mat.a
    assert str(mat.b * mat.b) == "b^2"


def test_ad_minus_da(mat):
    r = mat.ring
    assert mat.a * mat.d - mat.d * mat.a == mat.b * mat.c * (r.p ** -1 - r.q)


def test_algebra_mismatch(mat, gl):
    with pytest.raises(AlgebraMismatch):
        mat.a * gl.a


def test_negative_exponent_rejected(mat):
    with pytest.raises(NegativeExponentOnNonInvertible):
        mat.alg.gen("a", -1)
    with pytest.raises(NegativeExponentOnNonInvertible):
        mat.alg.gen("D", -1)


def test_normal_text(gl):
    x = gl.a ** 2 * gl.b * gl.D_inv() + gl.c * (gl.ring.p ** -1 * gl.ring.q - 1)
    assert str(x) == "a^2*b*D^-1 + (p^-1*q - 1)*c"


# -- independent oracle: every reduction order ------------------------------------

def _all_outcomes(alg, word, memo):
    """Every normal form reachable from ``word`` by any order of single steps."""
    if word in memo:
        return memo[word]
    steps = alg.steps(word)
    if not steps:
        reduced = alg._apply_moduli(word)
        if reduced != word:
            out = _all_outcomes(alg, reduced, memo)
        else:
            out = {frozenset({word: alg.ring.one}.items())}
        memo[word] = out
        return out
    out = set()
    for step in steps:
        choices = [[(c, o) for o in _all_outcomes(alg, w, memo)] for c, w in step.result]
        for combo in itertools.product(*choices):
            acc = {}
            for c, o in combo:
                for w2, c2 in o:
                    _accumulate(acc, w2, c * c2)
            out.add(frozenset(acc.items()))
    memo[word] = out
    return out


def _words(alg, max_len):
    letters = _alphabet(alg)
    seen = set()
    for n in range(1, max_len + 1):
        for raw in itertools.product(letters, repeat=n):
            w = _merge(raw, alg.generators)
            if w not in seen:
                seen.add(w)
                yield w


@pytest.mark.parametrize("args", FUN + UEA, ids=lambda a: "-".join(map(str, a)))
def test_every_reduction_order_agrees(args):
    pre = fun_preset(*args) if args[0] in ("mat", "gl", "slq", "slqxi") else u_preset(*args)
    alg = pre.alg
    memo = {}
    for w in _words(alg, 3):
        outcomes = _all_outcomes(alg, w, memo)
        assert len(outcomes) == 1, alg.word_text(w)
        (only,) = outcomes
        assert dict(only) == alg.nf(w)


@pytest.mark.parametrize("args", FUN, ids=lambda a: "-".join(map(str, a)))
def test_idempotent_and_bounded(args):
    alg = _fun(args).alg
    for w in _words(alg, 4):
        nf = alg.nf(w)
        for w2 in nf:
            assert alg.is_normal(w2)
            assert alg.nf(w2) == {w2: alg.ring.one}
        assert alg.reduction_steps(w) <= 200


@pytest.mark.parametrize("args", FUN, ids=lambda a: "-".join(map(str, a)))
def test_b_minus_c_grading_preserved(args):
    alg = _fun(args).alg

    def grade(word):
        return sum(e for i, e in word if i == 1) - sum(e for i, e in word if i == 2)

    for w in _words(alg, 4):
        for w2 in alg.nf(w):
            assert grade(w2) == grade(w)


def test_leading_monomial_never_increases(mat):
    alg = mat.alg
    for w in _words(alg, 4):
        for step in alg.steps(w):
            for _, w2 in step.result:
                deg = sum(e for _, e in w2)
                assert deg <= sum(e for _, e in w)


@pytest.mark.parametrize("args", FUN, ids=lambda a: "-".join(map(str, a)))
def test_fun_confluence_len4(args):
    rep = check_confluence(_fun(args).alg, 4)
    assert rep.confluent, str(rep)


@pytest.mark.parametrize("args", UEA, ids=lambda a: "-".join(map(str, a)))
def test_uea_confluence_len3(args):
    rep = check_confluence(u_preset(*args).alg, 3)
    assert rep.confluent, str(rep)


def _corrupted(mat):
    rules = [r for r in mat.alg.rules.values()]
    bad = []
    for r in rules:
        if r.left == (1, 0):
            r = StraighteningRule((1, 0), ((mat.ring.q, ((0, 1), (1, 1))),))
        bad.append(r)
    return AlgebraPresentation("corrupted", mat.ring, mat.alg.generators, bad)


def test_corrupted_rule_diverges(mat):
    rep = check_confluence(_corrupted(mat), 3)
    assert not rep.confluent
    assert any(w == "d*b*a" for w, _, _ in rep.divergences)


def test_single_generator_confluent():
    ring = scalar_ring()
    alg = AlgebraPresentation("x", ring, [Generator("x", 0)], [])
    rep = check_confluence(alg, 3)
    assert rep.confluent and rep.words_checked == 3


def test_confluence_needs_positive_length(mat):
    with pytest.raises(ValueError):
        check_confluence(mat.alg, 0)


def test_basis_degrees(mat):
    assert [mat.alg.word_text(w) for w in enumerate_basis(mat.alg, 1)] == ["a", "b", "c", "D", "d"]
    assert enumerate_basis(mat.alg, 0) == [()]
    deg2 = enumerate_basis(mat.alg, 2)
    assert len(deg2) == 14
    assert ((0, 1), (4, 1)) not in deg2


def test_basis_matches_word_filter(mat):
    # oracle: all exponent vectors of degree 3 that normalize to themselves
    alg = mat.alg
    expected = []
    for exps in itertools.product(range(4), repeat=5):
        if sum(exps) == 3:
            w = tuple((i, e) for i, e in enumerate(exps) if e)
            if alg.nf(w) == {w: alg.ring.one}:
                expected.append(w)
    assert sorted(expected) == sorted(enumerate_basis(alg, 3))


def test_basis_unbounded(gl, slq):
    with pytest.raises(Unbounded):
        enumerate_basis(gl.alg, 1)
    assert len(enumerate_basis(gl.alg, 0, exponent_bound=1)) > 1
    assert [slq.alg.word_text(w) for w in enumerate_basis(slq.alg, 1)] == ["a", "b", "c", "d"]
    with pytest.raises(Unbounded):
        enumerate_basis(u_preset("upq").alg, 1)


def test_duplicate_rule_rejected(mat):
    r = next(iter(mat.alg.rules.values()))
    with pytest.raises(ValueError):
        AlgebraPresentation("dup", mat.ring, mat.alg.generators, [r, r])


def test_dump_format(gl):
    lines = gl.alg.dump()
    assert "b a -> p*a*b" in lines
    assert "D b -> p^-1*q*b*D" in lines
    assert all(" -> " in line for line in lines)
    assert fun_preset("slqxi", 3).alg.dump()[-1] == "D^3 -> 1"


def test_ncpoly_zero_coefficients_dropped(mat):
    x = mat.a - mat.a
    assert x.is_zero() and str(x) == "0"
    assert isinstance(x, NCPoly)
