"""Exact coefficient field Q(zeta_d)(p, q, h).

Elements are fractions of sparse Laurent polynomials in ``p, q, h`` whose
coefficients live in the cyclotomic field Q[x]/Phi_d(x).  A polynomial is a
plain ``dict`` mapping an exponent key ``(ep, eq, eh, ez)`` to a
:class:`~fractions.Fraction`, with ``0 <= ez < phi(d)``.

The ring mode decides which substitutions happen at construction time:

* ``generic``        -- p, q, h independent;
* ``equal_pq``       -- p := q;
* ``root_of_unity``  -- p := zeta^-1 q with zeta a primitive d-th root of unity.

Because every leaf (symbol or constant) is built through a :class:`ScalarRing`,
the substitutions are applied eagerly and a Scalar never contains a symbol
that its mode has eliminated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .errors import DivisionByZero, RingMismatch, ZeroDenominator

__all__ = [
    "RingMode",
    "ScalarRing",
    "Scalar",
    "scalar_ring",
    "scalar_normalize",
    "scalar_arith",
    "cyclotomic_poly",
]

ZERO_KEY = (0, 0, 0, 0)
_SYMBOLS = ("p", "q", "h")


@dataclass(frozen=True)
class RingMode:
    """Specialization regime for the parameters p, q."""

    kind: str = "generic"
    n: int = 1
    d: int = 1

    def __post_init__(self):
        if self.kind not in ("generic", "equal_pq", "root_of_unity"):
            raise ValueError(f"unknown ring mode {self.kind!r}")
        if self.kind != "root_of_unity" and (self.n, self.d) != (1, 1):
            raise ValueError("n and d only apply to root_of_unity mode")
        if self.n < 1 or self.d < 1 or self.n % self.d:
            raise ValueError(f"need 1 <= d, d | n; got n={self.n}, d={self.d}")

    @classmethod
    def generic(cls):
        return cls("generic")

    @classmethod
    def equal_pq(cls):
        return cls("equal_pq")

    @classmethod
    def root_of_unity(cls, n, d=None):
        return cls("root_of_unity", n, n if d is None else d)

    @property
    def zeta_order(self):
        return self.d if self.kind == "root_of_unity" else 1

    def __str__(self):
        if self.kind == "generic":
            return "generic"
        if self.kind == "equal_pq":
            return "p=q"
        return f"p^-1*q=zeta, zeta^{self.n}=1, ord(zeta)={self.d}"


# -- cyclotomic helpers ------------------------------------------------------
# Univariate polynomials in zeta are lists of Fractions, lowest degree first.

_X = sympy.Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_poly(d):
    """Integer coefficients of Phi_d, lowest degree first."""
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(d, _X), _X).all_coeffs()))


def _to_poly(coeffs):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])) or [0],
                      _X, domain="QQ")


def _from_poly(poly):
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def _zeta_table(d):
    """zeta^k reduced mod Phi_d for 0 <= k < d, as {power: Fraction}."""
    phi = sympy.Poly(sympy.cyclotomic_poly(d, _X), _X, domain="QQ")
    table = []
    for k in range(d):
        r = sympy.Poly(_X ** k, _X, domain="QQ").rem(phi)
        table.append({i: c for i, c in enumerate(_from_poly(r)) if c})
    return table


def _inverse_mod_phi(coeffs, d):
    phi = sympy.Poly(sympy.cyclotomic_poly(d, _X), _X, domain="QQ")
    f = _to_poly(coeffs)
    if f.is_zero:
        raise DivisionByZero("element is not invertible in Q(zeta)")
    return _from_poly(f.invert(phi))


# -- raw polynomial dict helpers ---------------------------------------------

def _padd(f, g, sign=1):
    out = dict(f)
    for k, c in g.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _pscale(f, c):
    if c == 1:
        return dict(f)
    return {k: v * c for k, v in f.items()} if c else {}


def _pshift(f, e):
    ep, eq, eh = e
    return {(k[0] + ep, k[1] + eq, k[2] + eh, k[3]): c for k, c in f.items()}


def _pqh_groups(f):
    groups = {}
    for k, c in f.items():
        groups.setdefault(k[:3], {})[k[3]] = c
    return groups


def _term_key(k):
    return (k[0] + k[1] + k[2] + k[3], k[2], k[1], k[0], k[3])


def _freeze(f):
    return frozenset(f.items())


class ScalarRing:
    """Factory and arithmetic context for Scalars of one :class:`RingMode`.

    Obtain instances through :func:`scalar_ring` so that equal modes share
    one ring object.
    """

    def __init__(self, mode):
        self.mode = mode
        self.d = mode.zeta_order
        self.phi = len(cyclotomic_poly(self.d)) - 1
        # zeta^k for 0 <= k < d, in the power basis 1, zeta, ..., zeta^(phi-1)
        self._zeta_table = _zeta_table(self.d)
        self._sympy = None
        self._canon_cache = {}
        self.zero = Scalar._raw(self, {}, None)
        self.one = Scalar._raw(self, {ZERO_KEY: Fraction(1)}, None)

    def __repr__(self):
        return f"ScalarRing({self.mode})"

    def __reduce__(self):
        return scalar_ring, (self.mode,)

    # -- leaves ---------------------------------------------------------------
    def const(self, c):
        if isinstance(c, Scalar):
            self._check(c)
            return c
        c = Fraction(c)
        return Scalar._raw(self, {ZERO_KEY: c} if c else {}, None)

    def zeta_power(self, k):
        if self.mode.kind != "root_of_unity":
            raise ValueError("zeta only exists in root_of_unity mode")
        return Scalar._raw(self, {(0, 0, 0, i): c for i, c in self._zeta_table[k % self.d].items()}, None)

    def monomial(self, ep=0, eq=0, eh=0, ez=0, coeff=1):
        """coeff * p^ep q^eq h^eh zeta^ez with the mode's substitution applied."""
        if self.mode.kind == "equal_pq":
            eq, ep = eq + ep, 0
        elif self.mode.kind == "root_of_unity":
            eq, ez, ep = eq + ep, ez - ep, 0
        elif ez % self.d:
            raise ValueError("zeta only exists in root_of_unity mode")
        coeff = Fraction(coeff)
        if not coeff:
            return self.zero
        poly = {(ep, eq, eh, i): coeff * c for i, c in self._zeta_table[ez % self.d].items()}
        return Scalar._raw(self, poly, None)

    @property
    def p(self):
        return self.monomial(ep=1)

    @property
    def q(self):
        return self.monomial(eq=1)

    @property
    def h(self):
        return self.monomial(eh=1)

    @property
    def zeta(self):
        return self.zeta_power(1)

    def symbol(self, name):
        if name == "zeta":
            return self.zeta
        if name in _SYMBOLS:
            return getattr(self, name)
        raise KeyError(name)

    def symbol_names(self):
        names = ["p", "q", "h"]
        if self.mode.kind == "root_of_unity":
            names.append("zeta")
        return names

    def fraction(self, num_terms, den_terms=None):
        """Build num/den from generic ``{(ep, eq, eh, ez): coeff}`` term maps.

        The mode's substitution is applied to both parts before reduction.
        """
        num = self._from_generic_terms(num_terms)
        if den_terms is None:
            return num
        den = self._from_generic_terms(den_terms)
        if den.is_zero():
            raise ZeroDenominator(f"denominator vanishes under mode {self.mode}")
        return num / den

    def _from_generic_terms(self, terms):
        out = self.zero
        for (ep, eq, eh, ez), c in terms.items():
            out = out + self.monomial(ep, eq, eh, ez, c)
        return out

    def specialize(self, s):
        """Image of a generic-mode Scalar under this ring's substitution."""
        if s.ring.mode.kind != "generic":
            raise RingMismatch("only generic scalars can be specialized")
        den = {ZERO_KEY: 1} if s.den is None else s.den
        return self.fraction(s.num, den)

    def _check(self, s):
        if s.ring is not self:
            raise RingMismatch(f"scalar from {s.ring!r} used in {self!r}")

    # -- polynomial arithmetic -------------------------------------------------
    def _pmul(self, f, g):
        out = {}
        phi, table, d = self.phi, self._zeta_table, self.d
        for (a0, a1, a2, a3), c1 in f.items():
            for (b0, b1, b2, b3), c2 in g.items():
                c = c1 * c2
                ez = a3 + b3
                base = (a0 + b0, a1 + b1, a2 + b2)
                if ez < phi:
                    k = base + (ez,)
                    out[k] = out.get(k, 0) + c
                else:
                    for j, cj in table[ez % d].items():
                        k = base + (j,)
                        out[k] = out.get(k, 0) + c * cj
        return {k: v for k, v in out.items() if v}

    def _qz_inverse(self, coeffs):
        """Inverse of a Q(zeta) element given as {power: Fraction}."""
        dense = [Fraction(0)] * self.phi
        for i, c in coeffs.items():
            dense[i] = c
        inv = _inverse_mod_phi(dense, self.d)
        return {(0, 0, 0, i): c for i, c in enumerate(inv) if c}

    # -- canonical form --------------------------------------------------------
    def _canonical(self, num, den):
        if not num:
            return {}, None
        if den is None:
            return num, None
        groups = _pqh_groups(den)
        if len(groups) == 1:
            (e, coeffs), = groups.items()
            inv = self._qz_inverse(coeffs)
            return self._pmul(_pshift(num, tuple(-x for x in e)), inv), None
        key = (_freeze(num), _freeze(den))
        hit = self._canon_cache.get(key)
        if hit is not None:
            return hit
        mn = tuple(min(k[i] for k in den) for i in range(3))
        den1 = _pshift(den, tuple(-x for x in mn))
        num1 = _pshift(num, tuple(-x for x in mn))
        nmin = tuple(min(k[i] for k in num1) for i in range(3))
        num_poly = _pshift(num1, tuple(-x for x in nmin))
        num_red, den_red = self._cancel(num_poly, den1)
        num_red = _pshift(num_red, nmin)
        groups = _pqh_groups(den_red)
        if len(groups) == 1:
            result = self._canonical(num_red, den_red)
        else:
            lead = max(groups, key=lambda e: _term_key(e + (0,)))
            inv = self._qz_inverse(groups[lead])
            result = self._pmul(num_red, inv), self._pmul(den_red, inv)
        self._canon_cache[key] = result
        return result

    def _sympy_ring(self):
        if self._sympy is None:
            from sympy import QQ

            if self.phi == 1:
                dom = QQ
            else:
                dom = QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / self.d))
            R, *_ = sympy.ring("p,q,h", dom)
            self._sympy = (R, dom)
        return self._sympy

    def _to_sympy(self, f):
        R, dom = self._sympy_ring()
        terms = {}
        for e, coeffs in _pqh_groups(f).items():
            if self.phi == 1:
                terms[e] = dom(coeffs[0].numerator, coeffs[0].denominator)
            else:
                dense = [coeffs.get(i, Fraction(0)) for i in range(self.phi)]
                terms[e] = dom([dom.dom(c.numerator, c.denominator) for c in reversed(dense)])
        return R(terms)

    def _from_sympy(self, g):
        out = {}
        for e, c in g.items():
            if self.phi == 1:
                out[tuple(e) + (0,)] = Fraction(int(c.numerator), int(c.denominator))
            else:
                coeffs = list(reversed(c.to_list()))
                for i, ci in enumerate(coeffs):
                    if ci:
                        out[tuple(e) + (i,)] = Fraction(int(ci.numerator), int(ci.denominator))
        return out

    def _cancel(self, num, den):
        _, n2, d2 = self._to_sympy(num).cofactors(self._to_sympy(den))
        return self._from_sympy(n2), self._from_sympy(d2)


@lru_cache(maxsize=None)
def scalar_ring(mode=None):
    """The shared :class:`ScalarRing` for ``mode`` (generic when omitted)."""
    return ScalarRing(mode or RingMode.generic())


class Scalar:
    """Immutable element of Q(zeta_d)(p, q, h) in canonical reduced form."""

    __slots__ = ("ring", "num", "den", "_hash")

    @classmethod
    def _raw(cls, ring, num, den):
        self = object.__new__(cls)
        self.ring = ring
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, ring, num, den):
        num, den = ring._canonical(num, den)
        return cls._raw(ring, num, den)

    # -- predicates -------------------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.den is None and self.num == {ZERO_KEY: 1}

    def is_monomial(self):
        """True when this is c * p^i q^j h^k zeta^l for rational c."""
        return self.den is None and len(self.num) == 1

    def is_constant(self):
        return self.den is None and all(k[:3] == (0, 0, 0) for k in self.num)

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ring is not self.ring:
                raise RingMismatch(f"cannot combine {self.ring!r} and {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den is None and other.den is None:
            return Scalar._raw(self.ring, _padd(self.num, other.num), None)
        if self.den == other.den:
            return Scalar._make(self.ring, _padd(self.num, other.num), self.den)
        r = self.ring
        one = {ZERO_KEY: Fraction(1)}
        sd, od = self.den or one, other.den or one
        num = _padd(r._pmul(self.num, od), r._pmul(other.num, sd))
        return Scalar._make(r, num, r._pmul(sd, od))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.ring, _pscale(self.num, -1), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = self.ring
        if self.is_one():
            return other
        if other.is_one():
            return self
        if self.den is None and other.den is None:
            return Scalar._raw(r, r._pmul(self.num, other.num), None)
        if self.den is None or other.den is None:
            den = self.den or other.den
        else:
            den = r._pmul(self.den, other.den)
        return Scalar._make(r, r._pmul(self.num, other.num), den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        den = self.den if self.den is not None else {ZERO_KEY: Fraction(1)}
        return Scalar._make(self.ring, den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        out = self.ring.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ring is other.ring and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            den = None if self.den is None else _freeze(self.den)
            self._hash = hash((_freeze(self.num), den))
        return self._hash

    # -- text -------------------------------------------------------------------
    def term_count(self):
        return len(self.num)

    def is_compound(self):
        """Whether the text form needs parentheses inside a product."""
        return self.den is not None or len(self.num) > 1

    def __str__(self):
        num = _poly_text(self.num)
        if self.den is None:
            return num
        if num == "1":
            return f"({_poly_text(self.den)})^-1"
        if len(self.num) > 1:
            num = f"({num})"
        return f"{num}*({_poly_text(self.den)})^-1"

    def __repr__(self):
        return f"Scalar({self})"


def _power_text(name, e):
    return name if e == 1 else f"{name}^{e}"


def _poly_text(f):
    if not f:
        return "0"
    out = []
    for k in sorted(f, key=_term_key, reverse=True):
        c = f[k]
        factors = [_power_text(n, e) for n, e in zip(("p", "q", "h", "zeta"), (k[0], k[1], k[2], k[3])) if e]
        mag = abs(c)
        if factors and mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def scalar_normalize(s):
    """Canonical form of ``s``; a no-op on already canonical Scalars."""
    return Scalar._make(s.ring, dict(s.num), None if s.den is None else dict(s.den))


def scalar_arith(a, b, op):
    """Apply ``op`` (add, sub, mul, div, pow) to two Scalars (``b`` an int for pow)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown scalar op {op!r}")

