import pytest

from glpq.errors import AlgebraMismatch
from glpq.tensor import TensorPoly, i_double_prime, i_prime, tensor


def test_commuting_copies(gl):
    x, y = i_prime(gl.b), i_double_prime(gl.a)
    assert x * y == y * x
    assert i_prime(gl.b) * i_prime(gl.a) == i_prime(gl.b * gl.a)


def test_text_and_json(gl):
    t = TensorPoly.pure(gl.a, gl.b) * gl.ring.p - TensorPoly.pure(gl.c, gl.alg.one)
    assert str(t) == "p*(a ⊗ b) - c ⊗ 1"
    js = t.to_json()
    assert js["terms"][0] == {"monos": [{"a": 1}, {"b": 1}], "coeff": "p"}


def test_triple_and_contract(gl):
    t = tensor(gl.a, gl.b, gl.c)
    assert len(t.algebras) == 3
    assert TensorPoly.pure(gl.b, gl.a).contract() == gl.b * gl.a


def test_map_factor_splices(gl):
    d = gl.coproduct(gl.a)
    left = d.map_factor(0, gl.delta_word)
    assert len(left.algebras) == 3
    assert left == d.map_factor(1, gl.delta_word)


def test_mismatch(gl, mat):
    with pytest.raises(AlgebraMismatch):
        TensorPoly.pure(gl.a, gl.a) + TensorPoly.pure(mat.a, mat.a)


def test_zero(gl):
    z = TensorPoly.pure(gl.a, gl.b) - TensorPoly.pure(gl.a, gl.b)
    assert z.is_zero() and str(z) == "0"
