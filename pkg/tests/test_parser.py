import json
import random
from fractions import Fraction

import pytest

from glpq.errors import ExpressionSyntaxError, InvalidExponent, TorusPointOutsideSubgroup, UnknownSymbol
from glpq.parser import Node, from_json, parse, parse_element
from glpq.verify import get_preset

PRESETS = [("mat",), ("gl",), ("slq",), ("slqxi", 2), ("slqxi", 3), ("slqxi", 4, 2),
           ("upq",), ("uq",), ("uqxi", 2), ("uqxi", 3)]
ids = lambda a: "-".join(map(str, a))  # noqa: E731


def _pre(args):
    return get_preset(args[0], *args[1:])


def test_ast_shape():
    node = parse("d*a - p*c*b")
    assert node.kind == "sub"
    assert [c.kind for c in node.children] == ["mul", "mul"]
    assert isinstance(node, Node)


def test_examples():
    mat = get_preset("mat")
    assert str(parse_element("d*a - p*c*b", mat)) == "D"
    upq = get_preset("upq")
    assert parse_element("T(q, p^-1)", upq) == upq.t("Q1")
    assert parse_element("Q1", upq) == upq.t("Q1")


def test_juxtaposition_is_unknown():
    with pytest.raises(UnknownSymbol) as exc:
        parse_element("da", get_preset("mat"))
    assert exc.value.name == "da" and exc.value.offset == 0


@pytest.mark.parametrize("text,offset", [("a +", 3), ("a * (b", 6), ("2a", 1), ("a^x", 2), ("", 0),
                                         ("a $ b", 2), ("a^1/2", 2), ("T(q p)", 4)])
def test_syntax_errors(text, offset):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse(text)
    assert exc.value.offset == offset


def test_offset_is_in_bytes():
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse("ζ + a")
    assert exc.value.offset == 0
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse("a + ζ")
    assert exc.value.offset == 4


def test_invalid_exponent():
    with pytest.raises(InvalidExponent) as exc:
        parse_element("a^-1", get_preset("mat"))
    assert exc.value.offset == 1
    with pytest.raises(InvalidExponent):
        parse_element("(a + b)^-1", get_preset("gl"))
    assert parse_element("D^-1", get_preset("gl")) == get_preset("gl").D_inv()


def test_scalar_inverse_power():
    gl = get_preset("gl")
    x = parse_element("(p*q - 1)^-1*b", gl)
    assert x == gl.b * (gl.ring.p * gl.ring.q - 1) ** -1


def test_symbols_resolved_per_preset():
    with pytest.raises(UnknownSymbol):
        parse("E", get_preset("gl"))
    with pytest.raises(UnknownSymbol):
        parse("a", get_preset("upq"))
    with pytest.raises(UnknownSymbol):
        parse("zeta", get_preset("gl"))
    with pytest.raises(UnknownSymbol):
        parse("W", get_preset("upq"))
    with pytest.raises(UnknownSymbol):
        parse("T(q, q)", get_preset("gl"))
    assert parse_element("zeta", get_preset("slqxi", 3)) == get_preset("slqxi", 3).ring.zeta


def test_torus_subgroup_error():
    with pytest.raises(TorusPointOutsideSubgroup):
        parse_element("T(q, 1)", get_preset("uq"))


def test_leading_minus_and_rationals():
    gl = get_preset("gl")
    assert parse_element("-1/2*a + 3", gl) == gl.a * Fraction(-1, 2) + 3


# -- random round trip ---------------------------------------------------------------

def _coefficient_pool(pre):
    r = pre.ring
    pool = [r.one, -r.one, r.const(2), r.const(Fraction(-3, 2)), r.p, r.q ** -1 * r.h,
            (r.p * r.q - 1) ** -1 * r.p, r.q - r.p ** -1, (r.h + r.q) / (r.h - 2)]
    if "zeta" in r.symbol_names():
        pool += [r.zeta, r.zeta + 1, (r.q - r.zeta) ** -1]
    return pool


def _letters(pre):
    alg = pre.alg
    out = []
    for g in alg.generators:
        if g.torus:
            out += [(g.index, pt) for pt in alg.confluence_points]
            out += [(g.index, pt.inverse()) for pt in alg.confluence_points]
        else:
            out.append((g.index, 1))
            if g.invertible:
                out.append((g.index, -1))
    return out


def random_element(pre, rng):
    alg = pre.alg
    pool = _coefficient_pool(pre)
    letters = _letters(pre)
    x = alg.zero
    for _ in range(rng.randint(1, 3)):
        word = [rng.choice(letters) for _ in range(rng.randint(0, 4))]
        x = x + alg.element(word, rng.choice(pool))
    return x


@pytest.mark.parametrize("args", PRESETS, ids=ids)
def test_round_trip_1000(args):
    pre = _pre(args)
    rng = random.Random(2024)
    for _ in range(1000):
        x = random_element(pre, rng)
        text = str(x)
        assert parse_element(text, pre) == x, text
        assert from_json(json.loads(json.dumps(x.to_json())), pre) == x, text
