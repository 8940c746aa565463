"""Tensor products of presented algebras (coproducts, commuting copies)."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import AlgebraMismatch
from .rewrite import NCPoly, _accumulate, _merge, term_text
from .scalars import Scalar


class TensorPoly:
    """Scalar-weighted sum of tuples of normal words, one word per factor."""

    __slots__ = ("algebras", "terms")

    def __init__(self, algebras, terms):
        self.algebras = tuple(algebras)
        self.terms = terms

    @classmethod
    def pure(cls, *factors):
        """``factors[0] ⊗ factors[1] ⊗ ...``."""
        if not factors:
            return cls((), {(): None})
        algebras = tuple(f.alg for f in factors)
        terms = {}
        for combo in itertools.product(*(f.terms.items() for f in factors)):
            c = algebras[0].ring.one
            for _, ci in combo:
                c = c * ci
            _accumulate(terms, tuple(w for w, _ in combo), c)
        return cls(algebras, terms)

    @classmethod
    def zero(cls, algebras):
        return cls(algebras, {})

    @property
    def ring(self):
        return self.algebras[0].ring

    def _coerce(self, other):
        if isinstance(other, TensorPoly):
            if other.algebras != self.algebras:
                raise AlgebraMismatch("tensor factors differ")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return TensorPoly(self.algebras, out)

    def __neg__(self):
        return TensorPoly(self.algebras, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            c = self.ring.const(other)
            if c.is_zero():
                return TensorPoly(self.algebras, {})
            return TensorPoly(self.algebras, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        algs = self.algebras
        for ws, c1 in self.terms.items():
            for vs, c2 in other.terms.items():
                parts = [alg.nf(_merge(w + v, alg.generators)).items()
                         for alg, w, v in zip(algs, ws, vs)]
                base = c1 * c2
                for combo in itertools.product(*parts):
                    c = base
                    for _, ci in combo:
                        c = c * ci
                    _accumulate(out, tuple(w for w, _ in combo), c)
        return TensorPoly(algs, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        out = TensorPoly.pure(*(alg.one for alg in self.algebras))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.algebras == other.algebras and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def map_factor(self, i, fn):
        """Apply a linear map, given on words, to factor ``i``.

        ``fn(word)`` returns an NCPoly or a TensorPoly; a TensorPoly result
        splices its factors in place of factor ``i``.
        """
        out = None
        for ws, c in self.terms.items():
            image = fn(ws[i])
            if isinstance(image, NCPoly):
                image = TensorPoly.pure(image)
            left = TensorPoly.pure(*(alg.element(w) for alg, w in zip(self.algebras[:i], ws[:i])))
            right = TensorPoly.pure(*(alg.element(w) for alg, w in zip(self.algebras[i + 1:], ws[i + 1:])))
            piece = _concat(_concat(left, image), right) * c
            out = piece if out is None else out + piece
        if out is None:
            probe = fn(())
            algs = (probe.alg,) if isinstance(probe, NCPoly) else probe.algebras
            return TensorPoly(self.algebras[:i] + algs + self.algebras[i + 1:], {})
        return out

    def contract(self):
        """Multiply the factors together (all factors must share one algebra)."""
        alg = self.algebras[0]
        if any(a is not alg for a in self.algebras):
            raise AlgebraMismatch("contract needs a single algebra")
        out = alg.zero
        for ws, c in self.terms.items():
            prod = alg.one
            for w in ws:
                prod = prod * alg.element(w)
            out = out + prod * c
        return out

    def sorted_terms(self):
        def key(item):
            return tuple(alg.word_key(w) for alg, w in zip(self.algebras, item[0]))
        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for ws, c in self.sorted_terms():
            body = " ⊗ ".join(alg.word_text(w) for alg, w in zip(self.algebras, ws))
            text = term_text(c, f"({body})" if not c.is_one() and not (-c).is_one() else body)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(" - " + text[1:])
            else:
                parts.append(" + " + text)
        return "".join(parts)

    def __repr__(self):
        return f"TensorPoly({self})"

    def to_json(self):
        terms = []
        for ws, c in self.sorted_terms():
            factors = [NCPoly(alg, {w: alg.ring.one}).to_json()["terms"][0]["mono"]
                       for alg, w in zip(self.algebras, ws)]
            terms.append({"monos": factors, "coeff": str(c)})
        return {"terms": terms}


def _concat(x, y):
    """Tensor product of two TensorPolys (factor lists concatenate)."""
    if not x.algebras:
        return y
    if not y.algebras:
        return x
    terms = {}
    for ws, c1 in x.terms.items():
        for vs, c2 in y.terms.items():
            _accumulate(terms, ws + vs, c1 * c2)
    return TensorPoly(x.algebras + y.algebras, terms)


def tensor(*parts):
    """Tensor product of NCPolys and/or TensorPolys."""
    if not parts:
        raise ValueError("tensor() needs at least one factor")
    result = None
    for part in parts:
        if isinstance(part, NCPoly):
            part = TensorPoly.pure(part)
        result = part if result is None else _concat(result, part)
    return result


def i_prime(x):
    """x -> x ⊗ 1."""
    return TensorPoly.pure(x, x.alg.one)


def i_double_prime(x):
    """x -> 1 ⊗ x."""
    return TensorPoly.pure(x.alg.one, x)
