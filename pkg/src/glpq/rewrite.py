"""q-straightening engine for algebras given by ordered generators and pair rules.

Words are tuples of letters ``(index, payload)``.  For an ordinary generator
the payload is an integer exponent; for the torus family of an enveloping
algebra it is a :class:`~glpq.torus.TorusPoint`.  A word is *normal* when no
rewrite step applies to it; normal words are the PBW monomials.

Three kinds of step exist:

swap
    adjacent letters out of generator order.  Pairs without a rule commute
    with coefficient 1, pairs whose rule is a single rescaled swap are
    "pure" and move whole powers at once, anything else peels off one
    letter from each side and substitutes the rule's replacement.
contraction
    a rule whose left side is an in-order pair ``x_i x_j`` (i < j), such as
    ``a d -> D + p^-1 b c``.  It fires on ``x_i w x_j`` whenever every letter
    of ``w`` commutes purely with ``x_j``; the normal monomials therefore
    never contain both ``x_i`` and ``x_j``.
torus action
    ``g t^ -> t^(w_g) t^ g`` for generators carrying a torus weight.

Exponent moduli (``g^m = 1``) are applied after straightening.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    AlgebraMismatch,
    NegativeExponentOnNonInvertible,
    NonTermination,
    TorusPointOutsideSubgroup,
    Unbounded,
)
from .scalars import Scalar
from .torus import TorusPoint, monomial_text

_MAX_DEPTH = 4000


@dataclass(frozen=True)
class Generator:
    name: str
    index: int
    invertible: bool = False
    torus: bool = False


@dataclass(frozen=True)
class StraighteningRule:
    """``x_left[0] x_left[1] -> sum(c * word for c, word in replacement)``."""

    left: tuple
    replacement: tuple

    def pure_scalar(self):
        """Coefficient ``c`` if the rule reads ``x y -> c y x``, else None."""
        if len(self.replacement) != 1:
            return None
        c, word = self.replacement[0]
        if word == ((self.left[1], 1), (self.left[0], 1)):
            return c
        return None


@dataclass
class ReductionStep:
    kind: str
    position: tuple
    result: list


def _merge(word, gens):
    """Collect adjacent powers of the same generator; drop trivial letters."""
    out = []
    for idx, pl in word:
        if gens[idx].torus:
            if pl.is_identity():
                continue
        elif pl == 0:
            continue
        if out and out[-1][0] == idx:
            prev = out[-1][1]
            merged = prev * pl if gens[idx].torus else prev + pl
            out.pop()
            if (gens[idx].torus and not merged.is_identity()) or (not gens[idx].torus and merged != 0):
                out.append((idx, merged))
        else:
            out.append((idx, pl))
    return tuple(out)


class AlgebraPresentation:
    """Ordered generators, straightening rules, ring mode and exponent moduli.

    ``torus_weights`` maps a generator index to ``(m1, m2)`` meaning
    ``g t^ = x1^m1 x2^m2 t^ g`` for every torus point ``t = (x1, x2)``.
    ``torus_subgroup`` is a predicate on points, or None for all of T^2.
    """

    def __init__(self, name, ring, generators, rules, exponent_moduli=None,
                 torus_weights=None, torus_subgroup=None, confluence_points=()):
        self.name = name
        self.ring = ring
        self.generators = tuple(generators)
        if [g.index for g in self.generators] != list(range(len(self.generators))):
            raise ValueError("generator indices must be 0..n-1 in order")
        self._by_name = {g.name: g for g in self.generators}
        self.rules = {}
        for rule in rules:
            if tuple(rule.left) in self.rules:
                raise ValueError(f"two rules for generator pair {rule.left}")
            self.rules[tuple(rule.left)] = rule
        self.exponent_moduli = dict(exponent_moduli or {})
        for idx, m in self.exponent_moduli.items():
            if not self.generators[idx].invertible or m < 1:
                raise ValueError("exponent modulus requires an invertible generator and m >= 1")
        self.torus_weights = dict(torus_weights or {})
        self.torus_subgroup = torus_subgroup
        self.confluence_points = tuple(confluence_points)
        self._pure = {}
        for (u, v), rule in self.rules.items():
            if u > v:
                self._pure[(u, v)] = rule.pure_scalar()
        self._contractions = [r for (u, v), r in self.rules.items() if u < v]
        self._cache = {}
        self.one = NCPoly(self, {(): ring.one})
        self.zero = NCPoly(self, {})

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, {self.ring.mode})"

    @property
    def has_torus(self):
        return any(g.torus for g in self.generators)

    # -- construction helpers ----------------------------------------------------
    def generator(self, key):
        if isinstance(key, Generator):
            return self.generators[key.index]
        if isinstance(key, int):
            return self.generators[key]
        return self._by_name[key]

    def gen(self, name, exponent=1):
        return self.element([(name, exponent)])

    def torus(self, point):
        tg = next(g for g in self.generators if g.torus)
        return self.element([(tg, point)])

    def scalar(self, c):
        return NCPoly(self, {(): self.ring.const(c)} if c != 0 else {})

    def _letter(self, item):
        if isinstance(item, (str, Generator, int)) and not isinstance(item, bool):
            item = (item, 1)
        key, pl = item
        g = self.generator(key)
        if g.torus:
            if not isinstance(pl, TorusPoint):
                raise TypeError("torus letters need a TorusPoint payload")
            if self.torus_subgroup is not None and not self.torus_subgroup(pl):
                raise TorusPointOutsideSubgroup(f"{pl} is not in the torus subgroup of {self.name}")
        elif pl < 0 and not g.invertible:
            raise NegativeExponentOnNonInvertible(f"{g.name}^{pl}: {g.name} is not invertible")
        return (g.index, pl)

    def word(self, items):
        return _merge([self._letter(it) for it in items], self.generators)

    def element(self, items, coeff=1):
        """Normal form of ``coeff * word``."""
        c = self.ring.const(coeff) if not isinstance(coeff, Scalar) else coeff
        return NCPoly._from_dict(self, _scale(self.nf(self.word(items)), c))

    # -- step enumeration --------------------------------------------------------
    def commutation(self, z, x):
        """Scalar k with ``z x = k x z`` when the pair commutes purely, else None."""
        iz, pz = z
        ix, px = x
        gens = self.generators
        if iz == ix:
            return self.ring.one
        if gens[iz].torus:
            m1, m2 = self.torus_weights.get(ix, (0, 0))
            return pz.character(m1, m2) ** (-px)
        if gens[ix].torus:
            m1, m2 = self.torus_weights.get(iz, (0, 0))
            return px.character(m1, m2) ** pz
        if iz > ix:
            lam = self._pure.get((iz, ix), self.ring.one)
            return None if lam is None else lam ** (pz * px)
        lam = self._pure.get((ix, iz), self.ring.one)
        return None if lam is None else lam ** (-pz * px)

    def _swap(self, word, k):
        x, y = word[k], word[k + 1]
        head, tail = word[:k], word[k + 2:]
        kappa = self.commutation(x, y)
        if kappa is not None:
            return [(kappa, _merge(head + (y, x) + tail, self.generators))]
        (ix, e), (iy, f) = x, y
        if e < 1 or f < 1:
            raise NegativeExponentOnNonInvertible("non-commuting rule applied to a negative power")
        rule = self.rules[(ix, iy)]
        out = []
        for c, rw in rule.replacement:
            w = head + ((ix, e - 1),) + tuple(rw) + ((iy, f - 1),) + tail
            out.append((c, _merge(w, self.generators)))
        return out

    def _contraction_sites(self, word):
        for rule in self._contractions:
            i, j = rule.left
            for s, (ls, es) in enumerate(word):
                if ls != i or es < 1:
                    continue
                lam = self.ring.one
                for t in range(s + 1, len(word)):
                    lt, et = word[t]
                    if lt == j and et >= 1:
                        yield rule, s, t, lam
                        break
                    kappa = self.commutation(word[t], (j, 1))
                    if kappa is None:
                        break
                    lam = lam * kappa

    def _contract(self, word, rule, s, t, lam):
        i, j = rule.left
        es, et = word[s][1], word[t][1]
        head = word[:s] + ((i, es - 1),)
        middle = word[s + 1:t]
        tail = ((j, et - 1),) + word[t + 1:]
        out = []
        for c, rw in rule.replacement:
            out.append((lam * c, _merge(head + tuple(rw) + middle + tail, self.generators)))
        return out

    def steps(self, word):
        """Every single reduction step applicable to ``word``."""
        out = []
        for k in range(len(word) - 1):
            if word[k][0] > word[k + 1][0]:
                out.append(ReductionStep("swap", (k, k + 1), self._swap(word, k)))
        for rule, s, t, lam in self._contraction_sites(word):
            out.append(ReductionStep("contract", (s, t), self._contract(word, rule, s, t, lam)))
        return out

    def _first_step(self, word):
        for k in range(len(word) - 1):
            if word[k][0] > word[k + 1][0]:
                return self._swap(word, k)
        for rule, s, t, lam in self._contraction_sites(word):
            return self._contract(word, rule, s, t, lam)
        return None

    def is_normal(self, word):
        return self._first_step(word) is None and self._apply_moduli(word) == word

    def _apply_moduli(self, word):
        if not self.exponent_moduli:
            return word
        out = []
        for idx, pl in word:
            m = self.exponent_moduli.get(idx)
            if m is not None:
                pl = pl % m
            out.append((idx, pl))
        return _merge(out, self.generators)

    # -- normal forms ------------------------------------------------------------
    def nf(self, word, _depth=0):
        """Normal form of a word as ``{normal word: Scalar}`` (cached)."""
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        if _depth > _MAX_DEPTH:
            raise NonTermination(f"rewriting did not terminate in {self.name}")
        step = self._first_step(word)
        if step is None:
            reduced = self._apply_moduli(word)
            result = {word: self.ring.one} if reduced == word else self.nf(reduced, _depth + 1)
        else:
            result = {}
            for c, w in step:
                for w2, c2 in self.nf(w, _depth + 1).items():
                    _accumulate(result, w2, c * c2)
        self._cache[word] = result
        return result

    def reduction_steps(self, word, _depth=0):
        """Number of rule applications used by the default strategy (uncached)."""
        if _depth > _MAX_DEPTH:
            raise NonTermination(f"rewriting did not terminate in {self.name}")
        step = self._first_step(word)
        if step is None:
            reduced = self._apply_moduli(word)
            return 0 if reduced == word else 1 + self.reduction_steps(reduced, _depth + 1)
        return 1 + sum(self.reduction_steps(w, _depth + 1) for _, w in step)

    # -- text --------------------------------------------------------------------
    def letter_text(self, letter):
        idx, pl = letter
        g = self.generators[idx]
        if g.torus:
            return str(pl)
        return g.name if pl == 1 else f"{g.name}^{pl}"

    def word_text(self, word):
        return "*".join(self.letter_text(x) for x in word) if word else "1"

    def word_key(self, word):
        exps = [0] * len(self.generators)
        tor = ((), ())
        for idx, pl in word:
            if self.generators[idx].torus:
                tor = pl.sort_key()
            else:
                exps[idx] = pl
        return (sum(exps), tuple(exps), tor)

    def dump(self):
        """Presentation dump: one rule per line, ``x_j x_i -> <poly>``."""
        lines = []
        for (u, v), rule in sorted(self.rules.items(), key=lambda kv: (-max(kv[0]), -min(kv[0]))):
            rhs = NCPoly(self, {})
            for c, w in rule.replacement:
                rhs = rhs + self.element(w, c)
            lines.append(f"{self.generators[u].name} {self.generators[v].name} -> {rhs}")
        for idx, (m1, m2) in sorted(self.torus_weights.items(), reverse=True):
            tg = next(g for g in self.generators if g.torus)
            coeff = "*".join(f"x{k}" if m == 1 else f"x{k}^{m}" for k, m in ((1, m1), (2, m2)) if m)
            lines.append(f"{self.generators[idx].name} {tg.name}(x1, x2) -> "
                         f"{coeff}*{tg.name}(x1, x2)*{self.generators[idx].name}")
        for idx, m in sorted(self.exponent_moduli.items()):
            lines.append(f"{self.generators[idx].name}^{m} -> 1")
        return lines


def _accumulate(terms, word, c):
    v = terms.get(word)
    v = c if v is None else v + c
    if v.is_zero():
        terms.pop(word, None)
    else:
        terms[word] = v


def _scale(terms, c):
    if c.is_one():
        return dict(terms)
    if c.is_zero():
        return {}
    return {w: v * c for w, v in terms.items()}


class NCPoly:
    """Element of an :class:`AlgebraPresentation`: normal word -> nonzero Scalar."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    @classmethod
    def _from_dict(cls, alg, terms):
        return cls(alg, {w: c for w, c in terms.items() if not c.is_zero()})

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.alg is not self.alg:
                raise AlgebraMismatch(f"{self.alg.name} vs {other.alg.name}")
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return self.alg.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out, w, c)
        return NCPoly(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

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
        if isinstance(other, (Scalar, int, Fraction)):
            c = self.alg.ring.const(other)
            return NCPoly(self.alg, _scale(self.terms, c))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        alg = self.alg
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, cw in alg.nf(_merge(w1 + w2, alg.generators)).items():
                    _accumulate(out, w, c * cw)
        return NCPoly(alg, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        out = self.alg.one
        for _ in range(k):
            out = out * base
        return out

    def inverse(self):
        """Inverse of ``c * w`` where every letter of ``w`` is invertible."""
        if len(self.terms) != 1:
            raise NegativeExponentOnNonInvertible("only monomials in invertible generators can be inverted")
        (w, c), = self.terms.items()
        gens = self.alg.generators
        inv = []
        for idx, pl in reversed(w):
            if gens[idx].torus:
                inv.append((idx, pl.inverse()))
            elif gens[idx].invertible:
                inv.append((idx, -pl))
            else:
                raise NegativeExponentOnNonInvertible(f"{gens[idx].name} is not invertible")
        return self.alg.element([(gens[i], pl) for i, pl in inv], c.inverse())

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = self.alg.scalar(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def is_scalar(self):
        return all(w == () for w in self.terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get((), self.alg.ring.zero)

    def coefficient(self, word):
        return self.terms.get(word, self.alg.ring.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.alg.word_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            text = term_text(c, self.alg.word_text(w) if w else None)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(" - " + text[1:])
            else:
                parts.append(" + " + text)
        return "".join(parts)

    def __repr__(self):
        return f"NCPoly({self.alg.name}: {self})"

    def to_json(self):
        terms = []
        for w, c in self.sorted_terms():
            mono = {}
            for idx, pl in w:
                g = self.alg.generators[idx]
                if g.torus:
                    mono[g.name] = [monomial_text(pl.x1), monomial_text(pl.x2)]
                else:
                    mono[g.name] = pl
            terms.append({"mono": mono, "coeff": str(c)})
        return {"terms": terms}


def term_text(c, mono):
    """Text of ``c * mono``; ``mono`` None for the empty word."""
    if mono is None:
        return f"({c})" if c.is_compound() else str(c)
    if c.is_one():
        return mono
    if (-c).is_one():
        return "-" + mono
    if c.is_compound():
        return f"({c})*{mono}"
    return f"{c}*{mono}"


def normalize(word, alg, coeff=1):
    """PBW normal form of ``coeff * word`` in ``alg``.

    ``word`` is a sequence of generator names (or ``(name, exponent)`` pairs,
    or ``(torus_generator, TorusPoint)`` pairs).
    """
    return alg.element(word, coeff)


def mul(x, y):
    return x * y


def add(x, y):
    return x + y


def sub(x, y):
    return x - y


def scalar_mul(c, x):
    return x * c


@dataclass
class ConfluenceReport:
    algebra: str
    max_len: int
    words_checked: int = 0
    divergences: list = field(default_factory=list)

    @property
    def confluent(self):
        return not self.divergences

    def __str__(self):
        status = "confluent" if self.confluent else "NOT confluent"
        lines = [f"{self.algebra}: {status}, {len(self.divergences)} divergences, "
                 f"{self.words_checked} words up to length {self.max_len}"]
        for word, r1, r2 in self.divergences:
            lines.append(f"  {word}: {r1}  !=  {r2}")
        return "\n".join(lines)


def _alphabet(alg):
    letters = []
    for g in alg.generators:
        if g.torus:
            for pt in alg.confluence_points:
                letters.append((g.index, pt))
                letters.append((g.index, pt.inverse()))
        else:
            letters.append((g.index, 1))
            if g.invertible:
                letters.append((g.index, -1))
    return letters


def check_confluence(alg, max_len=3):
    """Local-confluence check on every word of length <= max_len.

    Each applicable first step is taken, its result is brought to normal form,
    and all results are compared.  Rule applications never lengthen a word,
    so together with termination this covers every reduction order of the
    words in range.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    report = ConfluenceReport(alg.name, max_len)
    seen = set()
    letters = _alphabet(alg)
    for length in range(1, max_len + 1):
        for raw in itertools.product(letters, repeat=length):
            word = _merge(raw, alg.generators)
            if word in seen:
                continue
            seen.add(word)
            report.words_checked += 1
            steps = alg.steps(word)
            if len(steps) < 2:
                continue
            reducts = []
            for step in steps:
                acc = {}
                for c, w in step.result:
                    for w2, c2 in alg.nf(w).items():
                        _accumulate(acc, w2, c * c2)
                reducts.append(NCPoly(alg, acc))
            first = reducts[0]
            for other in reducts[1:]:
                if other != first:
                    report.divergences.append((alg.word_text(word), str(first), str(other)))
                    break
    return report


def enumerate_basis(alg, total_degree, exponent_bound=None):
    """Normal monomials of the given signed total degree, in descending order."""
    if total_degree < 0:
        raise ValueError("total_degree must be >= 0")
    if alg.has_torus:
        raise Unbounded(f"{alg.name} has a torus family; its degree classes are infinite")
    ranges = []
    for g in alg.generators:
        if g.invertible:
            m = alg.exponent_moduli.get(g.index)
            if m is not None:
                ranges.append(range(0, m))
            elif exponent_bound is None:
                raise Unbounded(f"{g.name} is invertible; supply exponent_bound")
            else:
                ranges.append(range(-exponent_bound, exponent_bound + 1))
    neg = sum(-r.start for r in ranges if r.start < 0)
    top = total_degree + neg
    out = []

    def rec(i, acc, remaining_inv):
        if i == len(alg.generators):
            if sum(acc) == total_degree:
                word = tuple((k, e) for k, e in enumerate(acc) if e)
                if alg.is_normal(word):
                    out.append(word)
            return
        g = alg.generators[i]
        rng = remaining_inv[0] if g.invertible else range(0, top + 1)
        rest = remaining_inv[1:] if g.invertible else remaining_inv
        for e in rng:
            rec(i + 1, acc + [e], rest)

    rec(0, [], ranges)
    out.sort(key=lambda w: alg.word_key(w), reverse=True)
    return out
