"""Word-level extension of coproduct, counit and antipode, plus axiom checks.

A concrete Hopf preset only says what happens on single generators (and on
torus points); :class:`HopfPreset` extends that multiplicatively (Δ, ε) or
anti-multiplicatively (S) to arbitrary words, normal or not.  Working on
free words lets the checks feed the *unreduced* sides of a defining
relation through Δ and S, which is what well-definedness means.
"""
from __future__ import annotations

from .errors import AntipodeUnavailable
from .tensor import TensorPoly


class HopfPreset:
    alg = None
    has_antipode = True

    # -- generator data, supplied by subclasses ---------------------------------
    def delta_gen(self, idx, sign):
        raise NotImplementedError

    def eps_gen(self, idx, sign):
        raise NotImplementedError

    def antipode_gen(self, idx, sign):
        raise NotImplementedError

    def delta_torus(self, point):
        a = self.alg
        t = a.torus(point)
        return TensorPoly.pure(t, t)

    def antipode_torus(self, point):
        return self.alg.torus(point.inverse())

    # -- word level ----------------------------------------------------------------
    def _is_torus(self, idx):
        return self.alg.generators[idx].torus

    def delta_word(self, word):
        cache = self.__dict__.setdefault("_delta_cache", {})
        hit = cache.get(word)
        if hit is not None:
            return hit
        a = self.alg
        out = TensorPoly.pure(a.one, a.one)
        for idx, pl in word:
            if self._is_torus(idx):
                out = out * self.delta_torus(pl)
            else:
                out = out * self.delta_gen(idx, 1 if pl > 0 else -1) ** abs(pl)
        cache[word] = out
        return out

    def eps_word(self, word):
        ring = self.alg.ring
        out = ring.one
        for idx, pl in word:
            if self._is_torus(idx):
                continue
            out = out * self.eps_gen(idx, 1 if pl > 0 else -1) ** abs(pl)
        return out

    def antipode_word(self, word):
        if not self.has_antipode:
            raise AntipodeUnavailable(f"{self.alg.name} is a bialgebra without antipode")
        cache = self.__dict__.setdefault("_s_cache", {})
        hit = cache.get(word)
        if hit is not None:
            return hit
        out = self.alg.one
        for idx, pl in reversed(word):
            if self._is_torus(idx):
                out = out * self.antipode_torus(pl)
            else:
                out = out * self.antipode_gen(idx, 1 if pl > 0 else -1) ** abs(pl)
        cache[word] = out
        return out

    # -- element level -----------------------------------------------------------
    def coproduct(self, x):
        a = self.alg
        out = TensorPoly.zero((a, a))
        for w, c in x.terms.items():
            out = out + self.delta_word(w) * c
        return out

    def counit(self, x):
        out = self.alg.ring.zero
        for w, c in x.terms.items():
            out = out + c * self.eps_word(w)
        return out

    def antipode(self, x):
        out = self.alg.zero
        for w, c in x.terms.items():
            out = out + self.antipode_word(w) * c
        return out

    def free(self, terms):
        """Normal form of a formal sum ``[(coeff, word_items), ...]``."""
        out = self.alg.zero
        for c, items in terms:
            out = out + self.alg.element(items, c)
        return out

    def delta_free(self, terms):
        a = self.alg
        out = TensorPoly.zero((a, a))
        for c, items in terms:
            out = out + self.delta_word(a.word(items)) * a.ring.const(c)
        return out

    def eps_free(self, terms):
        a = self.alg
        out = a.ring.zero
        for c, items in terms:
            out = out + a.ring.const(c) * self.eps_word(a.word(items))
        return out

    def antipode_free(self, terms):
        a = self.alg
        out = a.zero
        for c, items in terms:
            out = out + self.antipode_word(a.word(items)) * a.ring.const(c)
        return out


# -- axioms -----------------------------------------------------------------------

def coassociativity(H, x):
    """``((Δ⊗id)Δx, (id⊗Δ)Δx)``."""
    dx = H.coproduct(x)
    return dx.map_factor(0, H.delta_word), dx.map_factor(1, H.delta_word)


def counit_sides(H, x):
    """``((ε⊗id)Δx, (id⊗ε)Δx)`` as elements of the algebra."""
    a = H.alg
    dx = H.coproduct(x)
    left = a.zero
    right = a.zero
    for (w1, w2), c in dx.terms.items():
        left = left + a.element(w2) * (c * H.eps_word(w1))
        right = right + a.element(w1) * (c * H.eps_word(w2))
    return left, right


def antipode_sides(H, x):
    """``(m(S⊗id)Δx, m(id⊗S)Δx)``; both should equal ``ε(x)·1``."""
    a = H.alg
    dx = H.coproduct(x)
    left = a.zero
    right = a.zero
    for (w1, w2), c in dx.terms.items():
        left = left + H.antipode_word(w1) * a.element(w2) * c
        right = right + a.element(w1) * H.antipode_word(w2) * c
    return left, right


def relation_images(H, lhs, rhs):
    """Δ, ε and S applied to the unreduced sides of ``lhs = rhs``.

    Returns a dict name -> (image of lhs, image of rhs); S reverses products,
    so equal S-images mean S respects the relation as an anti-homomorphism.
    """
    out = {
        "delta": (H.delta_free(lhs), H.delta_free(rhs)),
        "counit": (H.eps_free(lhs), H.eps_free(rhs)),
    }
    if H.has_antipode:
        out["antipode"] = (H.antipode_free(lhs), H.antipode_free(rhs))
    return out
