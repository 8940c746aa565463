"""Enveloping algebras U_{p,q}(2), U_q(2) and U_{q,xi}(2).

Generators are a torus family ``T(x1, x2)`` (group-like, one per point of the
represented torus) followed by ``F`` and ``E``; normal monomials read
``T(t) F^j E^i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonToralElement
from .hopf import HopfPreset, antipode_sides, coassociativity, counit_sides, relation_images
from .report import IdentityReport
from .rewrite import AlgebraPresentation, Generator, StraighteningRule
from .scalars import RingMode, scalar_ring
from .tensor import TensorPoly
from .torus import TorusPoint

T, F, E = 0, 1, 2


@dataclass(frozen=True)
class Weight:
    m1: int
    m2: int

    def __call__(self, point):
        return point.character(self.m1, self.m2)


def _antidiagonal(pt):
    return all(u == -v for u, v in zip(pt.x1, pt.x2))


def _antidiagonal_up_to_zeta(pt):
    return all(u == -v for u, v in zip(pt.x1[:3], pt.x2[:3]))


class UPreset(HopfPreset):
    """One of ``upq``, ``uq``, ``uqxi`` with its Hopf structure."""

    def __init__(self, variant, mode, n=None):
        self.variant = variant
        self.mode = mode
        self.n = n
        ring = scalar_ring(mode)
        self.ring = ring
        pts = self.points
        X = self._x_template(pts)
        gens = [Generator("T", T, invertible=True, torus=True), Generator("F", F), Generator("E", E)]
        rules = [StraighteningRule((E, F), ((ring.one, ((F, 1), (E, 1))),) + X)]
        subgroup = {"upq": None, "uq": _antidiagonal, "uqxi": _antidiagonal_up_to_zeta}[variant]
        probe = {"upq": ("Q1", "Q2", "h"), "uq": ("K", "h"), "uqxi": ("W", "qhat", "xihat", "h")}[variant]
        self.alg = AlgebraPresentation(self.label, ring, gens, rules,
                                       torus_weights={E: (-1, 1), F: (1, -1)},
                                       torus_subgroup=subgroup,
                                       confluence_points=[pts[k] for k in probe])
        self.alg.preset = self

    @property
    def label(self):
        return {"upq": "Upq", "uq": "Uq", "uqxi": f"UqXi(n={self.n},d={self.mode.d})"}[self.variant]

    def __repr__(self):
        return f"UPreset({self.label})"

    @property
    def points(self):
        """Distinguished torus points by alias."""
        cache = self.__dict__.get("_points")
        if cache is None:
            r = self.ring
            mk = lambda x1, x2: TorusPoint.make(r, x1, x2)  # noqa: E731
            cache = {
                "Q1": mk((0, 1), (-1, 0)),
                "Q2": mk((1, 0), (0, -1)),
                "K": mk((0, 1), (0, -1)),
                "qhat": mk((0, 1), (0, -1)),
                "h": mk((0, 0, 1), (0, 0, -1)),
            }
            if self.mode.kind == "root_of_unity":
                cache["W"] = mk((0, 0, 0, 0), (0, 0, 0, 1))
                cache["xihat"] = mk((0, 0, 0, 1), (0, 0, 0, -1))
            self._points = cache
        return cache

    def point(self, alias):
        return self.points[alias]

    def _x_template(self, pts):
        r = self.ring
        c = (r.q - r.p ** -1) ** -1
        return ((c, ((T, pts["Q1"]),)), (-c, ((T, pts["Q2"].inverse()),)))

    # -- elements ------------------------------------------------------------------
    @property
    def E(self):
        return self.alg.gen("E")

    @property
    def F(self):
        return self.alg.gen("F")

    def t(self, point):
        if isinstance(point, str):
            point = self.points[point]
        return self.alg.torus(point)

    def X(self):
        """``(T(Q1) - T(Q2^-1)) / (q - p^-1)``."""
        r = self.ring
        return (self.t("Q1") - self.t(self.points["Q2"].inverse())) * (r.q - r.p ** -1) ** -1

    # -- Hopf data -----------------------------------------------------------------
    def delta_gen(self, idx, sign):
        cache = self.__dict__.setdefault("_dgen", {})
        if idx not in cache:
            one = self.alg.one
            pure = TensorPoly.pure
            if idx == E:
                cache[idx] = pure(self.E, one) + pure(self.t("Q1"), self.E)
            else:
                cache[idx] = pure(self.F, self.t(self.points["Q2"].inverse())) + pure(one, self.F)
        return cache[idx]

    def eps_gen(self, idx, sign):
        return self.ring.zero

    def antipode_gen(self, idx, sign):
        cache = self.__dict__.setdefault("_sgen", {})
        if idx not in cache:
            if idx == E:
                cache[idx] = -(self.t(self.points["Q1"].inverse()) * self.E)
            else:
                # -F*Q2, equivalently -(pq)*Q2*F; the ordering Q2*F alone fails the axiom
                cache[idx] = -(self.F * self.t("Q2"))
        return cache[idx]

    def relations(self, points=None):
        """``(name, lhs, rhs)`` free-word relations: torus action, group law, [E,F]."""
        r = self.ring
        one = r.one
        pts = points or [self.alg.confluence_points[0], self.alg.confluence_points[-1]]
        out = []
        for pt in pts:
            tw, ti = (T, pt), (T, pt.inverse())
            out.append((f"{pt}*E*{pt}^-1 = alpha*E", [(one, [tw, E, ti])], [(pt.alpha(), [E])]))
            out.append((f"{pt}*F*{pt}^-1 = alpha^-1*F", [(one, [tw, F, ti])], [(pt.alpha() ** -1, [F])]))
        s, u = pts[0], pts[-1]
        out.append((f"{s}*{u} = {s * u}", [(one, [(T, s), (T, u)])], [(one, [(T, s * u)])]))
        c = (r.q - r.p ** -1) ** -1
        q1, q2i = self.points["Q1"], self.points["Q2"].inverse()
        out.append(("E*F - F*E = X", [(one, [E, F]), (-one, [F, E])],
                    [(c, [(T, q1)]), (-c, [(T, q2i)])]))
        return out


def u_preset(variant, n=None, d=None):
    """Cached preset: ``upq`` (generic), ``uq`` (p = q) or ``uqxi`` (p = zeta^-1 q)."""
    if variant == "upq":
        return _u_preset("upq", RingMode.generic(), None)
    if variant == "uq":
        return _u_preset("uq", RingMode.equal_pq(), None)
    if variant == "uqxi":
        if n is None:
            raise ValueError("uqxi needs n")
        return _u_preset("uqxi", RingMode.root_of_unity(n, d), n)
    raise ValueError(f"unknown enveloping-algebra preset {variant!r}")


@lru_cache(maxsize=None)
def _u_preset(variant, mode, n):
    return UPreset(variant, mode, n)


def u_normalize(word, preset):
    """Normal form of a word of ``"E"``, ``"F"``, aliases or TorusPoints."""
    items = []
    for w in word:
        if isinstance(w, TorusPoint):
            items.append((T, w))
        elif isinstance(w, str) and w in preset.points:
            items.append((T, preset.points[w]))
        else:
            items.append(w)
    return preset.alg.element(items)


def u_coproduct(x, preset=None):
    return (preset or x.alg.preset).coproduct(x)


def u_counit(x, preset=None):
    return (preset or x.alg.preset).counit(x)


def u_antipode(x, preset=None):
    return (preset or x.alg.preset).antipode(x)


def weight_eval(x, mu):
    """Evaluate a torus-only element on the weight ``mu = (m1, m2)``."""
    m1, m2 = (mu.m1, mu.m2) if isinstance(mu, Weight) else mu
    ring = x.alg.ring
    out = ring.zero
    for w, c in x.terms.items():
        if any(idx != T for idx, _ in w):
            raise NonToralElement("weight evaluation needs an element of the torus group algebra")
        out = out + (c * w[0][1].character(m1, m2) if w else c)
    return out


def specialize(x, target):
    """Image of a U_{p,q} element (or tensor) under the mode substitution of ``target``."""
    ring = target.ring
    alg = target.alg

    def word(w):
        return tuple((i, TorusPoint.make(ring, pl.x1, pl.x2) if i == T else pl) for i, pl in w)

    if isinstance(x, TensorPoly):
        out = TensorPoly.zero((alg, alg))
        for (w1, w2), c in x.terms.items():
            out = out + TensorPoly.pure(alg.element(word(w1)), alg.element(word(w2))) * ring.specialize(c)
        return out
    out = alg.zero
    for w, c in x.terms.items():
        out = out + alg.element(word(w), ring.specialize(c))
    return out


# -- suites --------------------------------------------------------------------------

def uea_checks(preset):
    """Relations, Hopf axioms, the ΔX identity and weight evaluations."""
    rep = IdentityReport("uea", preset.label)
    r = preset.ring
    E_, F_ = preset.E, preset.F
    X = preset.X()
    pts = preset.points
    for alias in ("h",) + (("W", "qhat", "xihat") if preset.variant == "uqxi" else ()):
        pt = pts[alias]
        if preset.alg.torus_subgroup and not preset.alg.torus_subgroup(pt):
            continue
        t = preset.t(pt)
        rep.equal(f"E*{alias} = alpha({alias})^-1*{alias}*E", E_ * t, (t * E_) * pt.alpha() ** -1)
        rep.equal(f"F*{alias} = alpha({alias})*{alias}*F", F_ * t, (t * F_) * pt.alpha())
    rep.equal("E*F - F*E = X", E_ * F_ - F_ * E_, X)
    for name, lhs, rhs in preset.relations():
        rep.equal(f"{name} holds", preset.free(lhs), preset.free(rhs))
        for kind, (l, rr) in relation_images(preset, lhs, rhs).items():
            rep.equal(f"{kind} respects {name}", l, rr)
    q1, q2i = preset.t("Q1"), preset.t(pts["Q2"].inverse())
    rep.equal("Δ[E,F] = Q1⊗X + X⊗Q2^-1", preset.coproduct(E_ * F_ - F_ * E_),
              TensorPoly.pure(q1, X) + TensorPoly.pure(X, q2i))
    rep.equal("X(1,0) = 1", weight_eval(X, (1, 0)), r.one)
    rep.equal("X(0,1) = -1", weight_eval(X, (0, 1)), -r.one)
    gens = [("E", E_), ("F", F_)] + [(str(pt), preset.t(pt)) for pt in preset.alg.confluence_points]
    for name, g in gens:
        l, rr = coassociativity(preset, g)
        rep.equal(f"coassociativity on {name}", l, rr)
        l, rr = counit_sides(preset, g)
        rep.equal(f"(ε⊗id)Δ{name} = {name}", l, g)
        rep.equal(f"(id⊗ε)Δ{name} = {name}", rr, g)
        unit = preset.alg.one * preset.counit(g)
        l, rr = antipode_sides(preset, g)
        rep.equal(f"m(S⊗id)Δ{name} = ε({name})1", l, unit)
        rep.equal(f"m(id⊗S)Δ{name} = ε({name})1", rr, unit)
    rep.equal("S^2(E) = alpha(Q1)^-1*E", preset.antipode(preset.antipode(E_)), E_ * pts["Q1"].alpha() ** -1)
    rep.equal("alpha(Q1) = p*q", pts["Q1"].alpha(), r.p * r.q)
    for pt in preset.alg.confluence_points:
        t = preset.t(pt)
        rep.equal(f"S^2({pt}) = {pt}", preset.antipode(preset.antipode(t)), t)
    cps = preset.alg.confluence_points
    comm = all(preset.t(s) * preset.t(u) == preset.t(u) * preset.t(s) for s in cps for u in cps)
    rep.truth("torus group algebra is commutative on distinguished points", comm)
    return rep


def embedding_consistency(n, d=None):
    """U_{q,xi}(2) inside U_{p,q}(2) under p = zeta^-1 q."""
    U = u_preset("uqxi", n, d)
    G = u_preset("upq")
    pts = U.points
    W, qh, xh = pts["W"], pts["qhat"], pts["xihat"]
    rep = IdentityReport("embedding", U.label)
    r = U.ring
    rep.equal("Q1 = W*qhat", pts["Q1"], W * qh)
    rep.equal("Q2^-1 = W*xihat*qhat^-1", pts["Q2"].inverse(), W * xh / qh)
    rep.equal(f"W^{n} = 1", W ** n, W.identity())
    if U.mode.d > 1:
        rep.truth("W^k != 1 for 0 < k < ord(zeta)", all(not (W ** k).is_identity() for k in range(1, U.mode.d)))
    tW, tq, tx = U.t(W), U.t(qh), U.t(xh / qh)
    rhs3 = (tq - tx) * tW * (r.q - r.zeta * r.q ** -1) ** -1
    rep.equal("[E,F] = (qhat - xihat*qhat^-1)/(q - zeta*q^-1)*W", U.E * U.F - U.F * U.E, rhs3)
    rep.equal("specialized generic [E,F] = (qhat - xihat*qhat^-1)/(q - zeta*q^-1)*W",
              specialize(G.E * G.F - G.F * G.E, U), rhs3)
    one = U.alg.one
    dE = TensorPoly.pure(U.E, one) + TensorPoly.pure(U.t(W * qh), U.E)
    dF = TensorPoly.pure(U.F, U.t(W * xh / qh)) + TensorPoly.pure(one, U.F)
    rep.equal("ΔE = E⊗1 + W*qhat⊗E", U.coproduct(U.E), dE)
    rep.equal("ΔF = F⊗W*xihat*qhat^-1 + 1⊗F", U.coproduct(U.F), dF)
    rep.equal("specialized generic ΔE", specialize(G.coproduct(G.E), U), dE)
    rep.equal("specialized generic ΔF", specialize(G.coproduct(G.F), U), dF)
    rep.equal("specialized generic S(F)", specialize(G.antipode(G.F), U), U.antipode(U.F))
    rep.truth("Q1, Q2 lie in the UqXi torus subgroup",
              U.alg.torus_subgroup(pts["Q1"]) and U.alg.torus_subgroup(pts["Q2"]))
    return rep


def uq_specialization_checks():
    """U_q(2) as the p = q image of U_{p,q}(2)."""
    U = u_preset("uq")
    G = u_preset("upq")
    r = U.ring
    rep = IdentityReport("specialization", U.label)
    rep.equal("Q1 = K", U.points["Q1"], U.points["K"])
    rep.equal("Q2 = K", U.points["Q2"], U.points["K"])
    K, Ki = U.t("K"), U.t(U.points["K"].inverse())
    rep.equal("[E,F] = (K - K^-1)/(q - q^-1)", U.E * U.F - U.F * U.E, (K - Ki) * (r.q - r.q ** -1) ** -1)
    rep.equal("specialized generic [E,F]", specialize(G.E * G.F - G.F * G.E, U), U.E * U.F - U.F * U.E)
    h = U.t("h")
    rep.equal("h*E*h^-1 = h^2*E", h * U.E * U.t(U.points["h"].inverse()), U.E * r.h ** 2)
    return rep
