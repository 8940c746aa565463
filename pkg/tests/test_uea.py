import pytest

from glpq import u_preset
from glpq.errors import NonToralElement, TorusPointOutsideSubgroup
from glpq.hopf import antipode_sides
from glpq.tensor import TensorPoly
from glpq.torus import TorusPoint
from glpq.uea import (
    Weight,
    embedding_consistency,
    u_antipode,
    u_coproduct,
    u_counit,
    u_normalize,
    uea_checks,
    uq_specialization_checks,
    weight_eval,
)

PRESETS = [("upq",), ("uq",), ("uqxi", 2), ("uqxi", 3), ("uqxi", 4, 2)]
ids = lambda a: "-".join(map(str, a))  # noqa: E731


def test_EF_straightening(upq):
    r = upq.ring
    X = (upq.t("Q1") - upq.t(upq.point("Q2").inverse())) * (r.q - r.p ** -1) ** -1
    assert u_normalize(["E", "F"], upq) == upq.F * upq.E + X
    assert str(u_normalize(["E", "F"], upq)) == (
        "F*E + (p*(p*q - 1)^-1)*T(q, p^-1) + (-p*(p*q - 1)^-1)*T(p^-1, q)")


def test_E_past_h_in_uq():
    U = u_preset("uq")
    h = U.point("h")
    assert u_normalize(["E", h], U) == U.t(h) * U.E * U.ring.h ** -2


def test_E_past_W():
    U = u_preset("uqxi", 3)
    assert u_normalize(["E", "W"], U) == U.t("W") * U.E * U.ring.zeta


def test_subgroup_enforced():
    U = u_preset("uq")
    with pytest.raises(TorusPointOutsideSubgroup):
        U.t(TorusPoint.make(U.ring, (0, 1), (0, 0)))
    Ux = u_preset("uqxi", 3)
    with pytest.raises(TorusPointOutsideSubgroup):
        Ux.t(TorusPoint.make(Ux.ring, (0, 1), (0, 1)))


def test_coproduct_values(upq):
    t = TensorPoly.pure
    one = upq.alg.one
    assert u_coproduct(upq.E) == t(upq.E, one) + t(upq.t("Q1"), upq.E)
    assert u_coproduct(upq.F) == t(upq.F, upq.t(upq.point("Q2").inverse())) + t(one, upq.F)
    h = upq.t("h")
    assert u_coproduct(h) == t(h, h)


def test_delta_of_X(upq):
    X = upq.X()
    comm = upq.E * upq.F - upq.F * upq.E
    q2i = upq.t(upq.point("Q2").inverse())
    assert u_coproduct(comm) == TensorPoly.pure(upq.t("Q1"), X) + TensorPoly.pure(X, q2i)


def test_counit_values(upq):
    assert u_counit(upq.E).is_zero()
    assert u_counit(upq.F).is_zero()
    assert u_counit(upq.t("Q1")).is_one()


def test_antipode_values(upq):
    assert u_antipode(upq.E) == -(upq.t(upq.point("Q1").inverse()) * upq.E)
    t = upq.t("h")
    assert u_antipode(t) * t == upq.alg.one
    r = upq.ring
    assert u_antipode(upq.F) == -(upq.F * upq.t("Q2"))
    assert u_antipode(upq.F) == -(upq.t("Q2") * upq.F) * (r.p * r.q)


def test_antipode_E_axiom_by_hand(upq):
    q1i = upq.t(upq.point("Q1").inverse())
    assert -(q1i * upq.E) + q1i * upq.E == upq.alg.zero
    left, right = antipode_sides(upq, upq.E)
    assert left.is_zero() and right.is_zero()


def test_F_antipode_without_reordering_fails_axiom(upq):
    # S(F) = -Q2*F (Q2 written on the left) violates m(S⊗id)ΔF = 0
    wrong = -(upq.t("Q2") * upq.F)
    lhs = wrong * upq.t(upq.point("Q2").inverse()) + upq.F
    assert not lhs.is_zero()
    right = upq.F * upq.t("Q2") + wrong
    assert not right.is_zero()


@pytest.mark.parametrize("args", PRESETS, ids=ids)
def test_uea_suite(args):
    rep = uea_checks(u_preset(*args))
    assert rep.ok, rep.render_text()


def test_S_squared_E(upq):
    r = upq.ring
    assert u_antipode(u_antipode(upq.E)) == upq.E * (r.p * r.q) ** -1


def test_weight_eval(upq):
    X = upq.X()
    assert weight_eval(X, Weight(1, 0)).is_one()
    assert weight_eval(X, (0, 1)) == -1
    assert weight_eval(upq.t("h"), (0, 0)).is_one()
    assert weight_eval(upq.alg.one, (3, -2)).is_one()
    with pytest.raises(NonToralElement):
        weight_eval(upq.E, (1, 0))


def test_weight_multiplicative(upq):
    a, b = upq.point("Q1"), upq.point("h")
    for mu in [(1, 0), (0, 1), (2, -1)]:
        assert weight_eval(upq.t(a) * upq.t(b), mu) == weight_eval(upq.t(a), mu) * weight_eval(upq.t(b), mu)


@pytest.mark.parametrize("n,d", [(2, None), (3, None), (4, 2)])
def test_embedding_consistency(n, d):
    rep = embedding_consistency(n, d)
    assert rep.ok, rep.render_text()
    for name in ("Q1 = W*qhat", "Q2^-1 = W*xihat*qhat^-1", f"W^{n} = 1"):
        assert rep[name].passed


def test_W_point_arithmetic():
    U = u_preset("uqxi", 3)
    assert str(U.point("Q1")) == "T(q, q^-1*zeta)"
    assert U.point("W") ** 3 == U.point("W").identity()
    assert str(U.point("W")) == "T(1, zeta)"


def test_uq_specialization():
    rep = uq_specialization_checks()
    assert rep.ok, rep.render_text()
