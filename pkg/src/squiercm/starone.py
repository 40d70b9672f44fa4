"""The group star_1 of paths from the vertex 1, in lambda-generator form.

Every path from 1 is a ``*``-product of edges starting at 1; the edge
``(q^-1 l^-1, rel, q)`` is written ``lam(rel, q)``.  Products are stored as
freely reduced words in these generators.  Equality of classes is decided
by the pair (boundary in F(X), image in the free module over the relations).
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Callable, ClassVar, Hashable, Iterable, Mapping, Optional, Sequence, Tuple

from .freegroup import IDENTITY, Word, format_word, invert, multiply, parse_word
from .presentation import CosetLabeler, GroupOracle, Presentation
from .squier import Edge, EdgePath, PathError, SignedEdge


class ExchangeError(ValueError):
    """The factors at the requested position do not fit the exchange pattern."""


class NotAnIdentity(ValueError):
    """A lambda word with nontrivial boundary was given where an identity is required."""


class Verdict(enum.Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


# ---------------------------------------------------------------------------
# words in generators (rel, w)


@dataclass(frozen=True)
class LambdaGenerator:
    rel: str
    q: Word

    @property
    def word(self) -> Word:
        return self.q


class FactorWord:
    """A freely reduced word in generators carrying a relation id and a word.

    Subclasses fix the generator type and the textual prefix.
    """

    prefix: ClassVar[str] = "lam"
    generator: ClassVar[type] = LambdaGenerator

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[Tuple[object, int]] = ()):
        out: list = []
        for g, s in factors:
            if s not in (1, -1):
                raise ValueError(f"factor sign must be +1 or -1, got {s}")
            if out and out[-1][0] == g and out[-1][1] == -s:
                out.pop()
            else:
                out.append((g, s))
        object.__setattr__(self, "factors", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("factor words are immutable")

    @classmethod
    def gen(cls, rel: str, w: Word, sign: int = 1):
        return cls(((cls.generator(rel, multiply(w)), sign),))

    def __eq__(self, other):
        return type(other) is type(self) and other.factors == self.factors

    def __hash__(self):
        return hash((type(self).__name__, self.factors))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.factors + other.factors)

    def inverse(self):
        return type(self)((g, -s) for g, s in reversed(self.factors))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        return type(self)(self.factors * k)

    def __str__(self):
        return format_factor_word(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_factor_word(self)!r})"


class LambdaWord(FactorWord):
    __slots__ = ()
    prefix = "lam"
    generator = LambdaGenerator


def format_factor_word(a: FactorWord) -> str:
    if not a.factors:
        return "1"
    parts = []
    for g, s in a.factors:
        t = f"{a.prefix}({g.rel}, {format_word(g.word)})"
        parts.append(t if s > 0 else t + "^-1")
    return "; ".join(parts)


_FACTOR_RE = re.compile(r"(\w+)\(\s*([A-Za-z0-9_]+)\s*,([^)]*)\)\s*(\^\s*(-?\d+))?\Z")


def parse_factor_word(text: str, cls, presentation: Presentation):
    """Parse ``lam(r1, x^2); lam(r1, x)^-1`` style text (``1`` is empty)."""
    text = text.strip()
    if text == "1":
        return cls()
    factors = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        m = _FACTOR_RE.match(chunk)
        if not m or m.group(1) != cls.prefix:
            raise ValueError(f"malformed factor {chunk!r} (expected {cls.prefix}(<rel>, <word>)[^k])")
        rel = m.group(2)
        presentation.relation(rel)
        w = multiply(parse_word(m.group(3).strip(), presentation.alphabet))
        k = 1 if m.group(5) is None else int(m.group(5))
        if k == 0:
            raise ValueError(f"zero exponent in {chunk!r}")
        sign = 1 if k > 0 else -1
        factors.extend([(cls.generator(rel, w), sign)] * abs(k))
    return cls(factors)


def parse_lambda_word(text: str, presentation: Presentation) -> LambdaWord:
    return parse_factor_word(text, LambdaWord, presentation)


# ---------------------------------------------------------------------------
# free module over the relations


class GroupRingVector(Mapping):
    """Finitely supported integer function on pairs ``(relation id, coefficient)``.

    Coefficients are reduced words (free group ring), oracle normal forms
    (group ring of G) or coset labels.  Zero entries are never stored.
    """

    __slots__ = ("_data",)

    def __init__(self, data: Mapping | Iterable = ()):
        counts: Counter = Counter()
        items = data.items() if isinstance(data, Mapping) else data
        for key, n in items:
            counts[key] += n
        self._data = {k: n for k, n in counts.items() if n}

    @classmethod
    def unit(cls, rel: str, coeff: Hashable, n: int = 1) -> "GroupRingVector":
        return cls({(rel, coeff): n})

    def __getitem__(self, key):
        return self._data.get(key, 0)

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if isinstance(other, GroupRingVector):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __add__(self, other: "GroupRingVector") -> "GroupRingVector":
        return GroupRingVector(list(self._data.items()) + list(other._data.items()))

    def __neg__(self) -> "GroupRingVector":
        return GroupRingVector({k: -n for k, n in self._data.items()})

    def __sub__(self, other: "GroupRingVector") -> "GroupRingVector":
        return self + (-other)

    def __rmul__(self, n: int) -> "GroupRingVector":
        return GroupRingVector({k: n * v for k, v in self._data.items()})

    def is_zero(self) -> bool:
        return not self._data

    def map_coefficients(self, f: Callable[[Hashable], Hashable]) -> "GroupRingVector":
        return GroupRingVector([((rel, f(c)), n) for (rel, c), n in self._data.items()])

    def sorted_items(self):
        return sorted(self._data.items(), key=lambda kv: (kv[0][0], _coeff_key(kv[0][1])))

    def __str__(self):
        if not self._data:
            return "0"
        out = []
        for (rel, c), n in self.sorted_items():
            term = f"{rel}[{_coeff_text(c)}]"
            if n == 1:
                out.append(f"+ {term}")
            elif n == -1:
                out.append(f"- {term}")
            else:
                out.append(f"{'+' if n > 0 else '-'} {abs(n)}*{term}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"GroupRingVector({str(self)!r})"

    def to_json(self):
        return [{"rel": rel, "coeff": _coeff_text(c), "n": n} for (rel, c), n in self.sorted_items()]


def _coeff_text(c) -> str:
    return format_word(c) if isinstance(c, Word) else str(c)


def _coeff_key(c):
    if isinstance(c, Word):
        return (0, len(c), format_word(c))
    return (1, 0, str(c))


# ---------------------------------------------------------------------------
# operations


class StarOne:
    """The crossed module ``star_1 -> F(X)`` of a presentation."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation

    def parse(self, text: str) -> LambdaWord:
        return parse_lambda_word(text, self.presentation)

    def generator(self, rel: str, q: Word, sign: int = 1) -> LambdaWord:
        self.presentation.relation(rel)
        return LambdaWord.gen(rel, q, sign)

    def generator_edge(self, rel: str, q: Word):
        """The edge ``(q^-1 l^-1, rel, q)`` denoted by ``lam(rel, q)``."""
        left = self.presentation.relation(rel).left
        q = multiply(q)
        return Edge(multiply(invert(q), invert(left)), rel, q)

    # -- from paths ------------------------------------------------------------

    def lambda_of_edge(self, e: SignedEdge) -> LambdaWord:
        return LambdaWord.gen(e.edge.rel, e.edge.q, e.sign)

    def lambda_normal_form(self, alpha: EdgePath) -> LambdaWord:
        if not alpha.source.is_identity:
            raise PathError(f"path starts at {format_word(alpha.source)}, not at 1")
        return LambdaWord((LambdaGenerator(s.edge.rel, s.edge.q), s.sign) for s in alpha.steps)

    # -- group structure ---------------------------------------------------------

    @staticmethod
    def star_multiply(a: LambdaWord, b: LambdaWord) -> LambdaWord:
        return a * b

    @staticmethod
    def star_inverse(a: LambdaWord) -> LambdaWord:
        return a.inverse()

    def generator_boundary(self, rel: str, q: Word) -> Word:
        return multiply(invert(q), self.presentation.rhat(rel), q)

    def boundary(self, a: FactorWord) -> Word:
        out = IDENTITY
        for g, s in a.factors:
            b = self.generator_boundary(g.rel, g.word)
            out = multiply(out, b if s > 0 else invert(b))
        return out

    @staticmethod
    def act(a: LambdaWord, w: Word) -> LambdaWord:
        return LambdaWord((LambdaGenerator(g.rel, multiply(g.q, w)), s) for g, s in a.factors)

    def is_identity(self, a: FactorWord) -> bool:
        return self.boundary(a).is_identity

    # -- exchange relations -----------------------------------------------------

    def exchange_witness(self, a: LambdaWord, i: int, direction: str = "LR", strict: bool = False) -> Word:
        """The word ``v`` for which factors ``i, i+1`` match the exchange pattern.

        ``LR`` matches ``lam(A, v s u) lam(B, u)`` and ``RL`` matches
        ``lam(B, u) lam(A, v d u)`` where ``B = (s, d)``.  In F(X) such a ``v``
        always exists and is unique; ``strict`` additionally requires the
        factorization to be a reduced concatenation (no cancellation between
        ``v`` and ``s u`` resp. ``d u``).
        """
        if direction not in ("LR", "RL"):
            raise ValueError(f"direction must be 'LR' or 'RL', not {direction!r}")
        if not 0 <= i < len(a.factors) - 1:
            raise ExchangeError(f"no factor pair at position {i}")
        (g1, s1), (g2, s2) = a.factors[i], a.factors[i + 1]
        if s1 < 0 or s2 < 0:
            raise ExchangeError(f"factors {i},{i + 1} must both be positive")
        if direction == "LR":
            moving, fixed = g1, g2
            middle = self.presentation.relation(fixed.rel).left
        else:
            fixed, moving = g1, g2
            middle = self.presentation.relation(fixed.rel).right
        tail = multiply(middle, fixed.q)
        v = multiply(moving.q, invert(tail))
        if strict and (len(v) + len(tail) != len(moving.q)):
            raise ExchangeError(
                f"factor {i if direction == 'LR' else i + 1}: {format_word(moving.q)} has no reduced "
                f"factorization v . {format_word(tail)}"
            )
        return v

    def exchange_apply(self, a: LambdaWord, i: int, direction: str = "LR", strict: bool = False) -> LambdaWord:
        """Rewrite factors ``i, i+1`` by one exchange relation.

        ``LR``: ``lam(A, v s u) lam(B, u) -> lam(B, u) lam(A, v d u)``;
        ``RL`` is the reverse move.
        """
        v = self.exchange_witness(a, i, direction, strict)
        (g1, _), (g2, _) = a.factors[i], a.factors[i + 1]
        if direction == "LR":
            moving, fixed = g1, g2
            other = self.presentation.relation(fixed.rel).right
            new = [(fixed, 1), (LambdaGenerator(moving.rel, multiply(v, other, fixed.q)), 1)]
        else:
            fixed, moving = g1, g2
            other = self.presentation.relation(fixed.rel).left
            new = [(LambdaGenerator(moving.rel, multiply(v, other, fixed.q)), 1), (fixed, 1)]
        return LambdaWord(a.factors[:i] + tuple(new) + a.factors[i + 2:])

    # -- abelianization and equality -------------------------------------------

    @staticmethod
    def _canon(oracle: Optional[GroupOracle]):
        return (lambda w: w) if oracle is None else oracle.normal_form

    def abelianize(self, a: FactorWord, oracle: Optional[GroupOracle] = None) -> GroupRingVector:
        canon = self._canon(oracle)
        return GroupRingVector([((g.rel, canon(g.word)), s) for g, s in a.factors])

    def translate(self, v: GroupRingVector, w: Word, oracle: Optional[GroupOracle] = None) -> GroupRingVector:
        """Right-translate every coefficient of ``v`` by ``w``."""
        canon = self._canon(oracle)
        return v.map_coefficients(lambda c: canon(multiply(c, w)))

    def equal(self, a: FactorWord, b: FactorWord, oracle: Optional[GroupOracle] = None) -> Verdict:
        if self.boundary(a) != self.boundary(b):
            return Verdict.UNEQUAL
        diff = self.abelianize(a, oracle) - self.abelianize(b, oracle)
        if diff.is_zero():
            return Verdict.EQUAL
        return Verdict.UNEQUAL if oracle is not None else Verdict.UNKNOWN

    def from_vector(self, v: GroupRingVector) -> LambdaWord:
        """A lambda word whose free-group-ring abelianization is ``v``."""
        factors = []
        for (rel, q), n in v.sorted_items():
            factors.extend([(LambdaGenerator(rel, q), 1 if n > 0 else -1)] * abs(n))
        return LambdaWord(factors)

    def cockcroft_image(self, a: FactorWord, labeler: CosetLabeler) -> GroupRingVector:
        if not self.is_identity(a):
            raise NotAnIdentity(f"{a} has boundary {format_word(self.boundary(a))}")
        return GroupRingVector([((g.rel, labeler(g.word)), s) for g, s in a.factors])

    def is_cockcroft_on(self, identities: Sequence[FactorWord], labeler: CosetLabeler) -> bool:
        return all(self.cockcroft_image(a, labeler).is_zero() for a in identities)
