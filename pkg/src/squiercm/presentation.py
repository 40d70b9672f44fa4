"""Group presentations, relator maps and word-problem oracles."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .freegroup import IDENTITY, FreeGroup, Word, WordError, format_word, invert, multiply, reduce

DEFAULT_BUDGET = 100_000


class PresentationError(ValueError):
    """Malformed presentation text or inconsistent presentation data."""


class OracleError(RuntimeError):
    """The oracle cannot (soundly) answer."""


@dataclass(frozen=True)
class Relation:
    id: str
    left: Word
    right: Word

    def __str__(self):
        return f"{self.id}: {format_word(self.left)} -> {format_word(self.right)}"


@dataclass(frozen=True)
class Presentation:
    alphabet: Tuple[str, ...]
    relations: Tuple[Relation, ...]
    oracle_rules: Tuple[Tuple[Word, Word], ...] = ()
    _index: Dict[str, Relation] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "oracle_rules", tuple(self.oracle_rules))
        free = FreeGroup(self.alphabet)
        index = {}
        for rel in self.relations:
            if rel.id in index:
                raise PresentationError(f"duplicate relation id {rel.id!r}")
            try:
                free.check(rel.left)
                free.check(rel.right)
            except WordError as exc:
                raise PresentationError(f"relation {rel.id}: {exc}") from None
            index[rel.id] = rel
        for lhs, rhs in self.oracle_rules:
            try:
                free.check(lhs)
                free.check(rhs)
            except WordError as exc:
                raise PresentationError(f"oracle rule: {exc}") from None
        object.__setattr__(self, "_index", index)

    @property
    def free_group(self) -> FreeGroup:
        return FreeGroup(self.alphabet)

    @property
    def relation_ids(self) -> Tuple[str, ...]:
        return tuple(r.id for r in self.relations)

    def relation(self, rel_id: str) -> Relation:
        try:
            return self._index[rel_id]
        except KeyError:
            raise PresentationError(f"unknown relation {rel_id!r}") from None

    def parse_word(self, text: str) -> Word:
        return self.free_group.parse(text)

    def rhat(self, rel_id: str) -> Word:
        return rhat(self.relation(rel_id))

    def rewriting_oracle(self) -> "GroupOracle":
        if not self.oracle_rules:
            raise PresentationError("presentation declares no 'oracle rewriting:' block")
        return GroupOracle.rewriting(self.alphabet, self.oracle_rules)

    def __str__(self):
        return format_presentation(self)


def rhat(rel: Relation) -> Word:
    """The relator of ``rel``: the free reduction of ``left^-1 right``."""
    return multiply(invert(rel.left), rel.right)


_GEN_RE = re.compile(r"generators\s*:(.*)\Z")
_REL_RE = re.compile(r"relation\s+([A-Za-z0-9_]+)\s*:(.*)\Z")
_RULE_RE = re.compile(r"rule\s*:(.*)\Z")


def _split_arrow(body: str, lineno: int) -> Tuple[str, str]:
    parts = body.split("->")
    if len(parts) != 2:
        raise PresentationError(f"line {lineno}: expected '<word> -> <word>'")
    return parts[0].strip(), parts[1].strip()


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation format.

    ::

        generators: a b
        relation c: a b -> b a
        oracle rewriting:
        rule: b a -> a b
    """
    alphabet: Optional[Tuple[str, ...]] = None
    relations: List[Relation] = []
    seen = set()
    rules: List[Tuple[Word, Word]] = []
    in_oracle = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            m = _GEN_RE.match(line)
            if m:
                if alphabet is not None:
                    raise PresentationError(f"line {lineno}: second 'generators:' line")
                names = tuple(m.group(1).split())
                try:
                    FreeGroup(names)
                except WordError as exc:
                    raise PresentationError(f"line {lineno}: {exc}") from None
                alphabet = names
                continue
            if alphabet is None:
                raise PresentationError(f"line {lineno}: 'generators:' must come first")
            if line == "oracle rewriting:":
                in_oracle = True
                continue
            m = _REL_RE.match(line)
            if m and not in_oracle:
                rel_id = m.group(1)
                if rel_id in seen:
                    raise PresentationError(f"line {lineno}: duplicate relation id {rel_id!r}")
                lhs, rhs = _split_arrow(m.group(2), lineno)
                relations.append(Relation(rel_id, _parse(lhs, alphabet, lineno), _parse(rhs, alphabet, lineno)))
                seen.add(rel_id)
                continue
            m = _RULE_RE.match(line)
            if m and in_oracle:
                lhs, rhs = _split_arrow(m.group(1), lineno)
                rules.append((_parse(lhs, alphabet, lineno), _parse(rhs, alphabet, lineno)))
                continue
        except WordError as exc:
            raise PresentationError(f"line {lineno}: {exc}") from None
        raise PresentationError(f"line {lineno}: syntax error: {line!r}")
    if alphabet is None:
        raise PresentationError("missing 'generators:' line")
    return Presentation(alphabet, tuple(relations), tuple(rules))


def _parse(text: str, alphabet, lineno: int) -> Word:
    from .freegroup import parse_word

    try:
        return parse_word(text, alphabet)
    except WordError as exc:
        raise PresentationError(f"line {lineno}: {exc}") from None


def format_presentation(P: Presentation) -> str:
    lines = ["generators: " + " ".join(P.alphabet)]
    lines += [f"relation {r}" for r in P.relations]
    if P.oracle_rules:
        lines.append("oracle rewriting:")
        lines += [f"rule: {format_word(l)} -> {format_word(r)}" for l, r in P.oracle_rules]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# oracles


class OracleKind(enum.Enum):
    FREE_REDUCTION = "free"
    REWRITING_SYSTEM = "rewriting"
    EXTERNAL_TABLE = "external"


NO_INVERSE_RULES = "no inverse rules: oracle sound only on positive words"


@dataclass(frozen=True)
class GroupOracle:
    """Canonical representatives for the presented group G.

    Rewriting oracles must pass :func:`validate_oracle` before use; build
    them with :meth:`rewriting` and call :meth:`validated`.
    """

    kind: OracleKind
    alphabet: Tuple[str, ...] = ()
    rules: Tuple[Tuple[Word, Word], ...] = ()
    table: Optional[Callable[[Word], Word]] = field(default=None, compare=False)
    validated_ok: bool = False
    budget: int = DEFAULT_BUDGET

    @classmethod
    def free_reduction(cls) -> "GroupOracle":
        return cls(OracleKind.FREE_REDUCTION, validated_ok=True)

    @classmethod
    def rewriting(cls, alphabet: Sequence[str], rules) -> "GroupOracle":
        return cls(OracleKind.REWRITING_SYSTEM, tuple(alphabet), tuple((Word(l.letters), Word(r.letters)) for l, r in rules))

    @classmethod
    def external(cls, normal_form: Callable[[Word], Word]) -> "GroupOracle":
        # trusted as supplied
        return cls(OracleKind.EXTERNAL_TABLE, table=normal_form, validated_ok=True)

    def validated(self, budget: int = 1000) -> "GroupOracle":
        if self.kind is not OracleKind.REWRITING_SYSTEM:
            return self
        report = validate_oracle(self, budget)
        if not report.valid:
            raise OracleError("rewriting system failed validation:\n" + report.summary())
        return report.oracle

    def normal_form(self, w: Word) -> Word:
        return oracle_normal_form(self, w)

    def equal(self, u: Word, v: Word) -> bool:
        return oracle_equal(self, u, v)


def _rewrite(rules, w: Word, budget: int) -> Tuple[Word, int]:
    """Leftmost-first rewriting to an irreducible word; returns (word, steps)."""
    letters = list(w.letters)
    if not rules:
        return Word(tuple(letters)), 0
    maxlen = max(len(l) for l, _ in rules)
    steps = 0
    i = 0
    while i <= len(letters):
        hit = None
        for lhs, rhs in rules:
            n = len(lhs)
            if n and letters[i:i + n] == list(lhs.letters):
                hit = (n, rhs)
                break
        if hit is None:
            i += 1
            continue
        steps += 1
        if steps > budget:
            raise OracleError(f"rewriting did not terminate within {budget} steps")
        n, rhs = hit
        letters[i:i + n] = rhs.letters
        i = max(0, i - maxlen + 1)
    return Word(tuple(letters)), steps


def oracle_normal_form(o: GroupOracle, w: Word) -> Word:
    if o.kind is OracleKind.FREE_REDUCTION:
        return reduce(w)
    if not o.validated_ok:
        raise OracleError("rewriting oracle has not been validated")
    if o.kind is OracleKind.EXTERNAL_TABLE:
        return o.table(reduce(w))
    return _rewrite(o.rules, w, o.budget)[0]


def oracle_equal(o: GroupOracle, u: Word, v: Word) -> bool:
    return oracle_normal_form(o, u) == oracle_normal_form(o, v)


@dataclass(frozen=True)
class CriticalPair:
    rules: Tuple[int, int]
    overlap: Word
    first: Word
    second: Word
    first_nf: Optional[Word]
    second_nf: Optional[Word]
    joined: bool
    exhausted: bool = False

    def __str__(self):
        i, j = self.rules
        status = "budget exhausted" if self.exhausted else ("joins" if self.joined else "does not join")
        return (
            f"rules {i},{j} on {format_word(self.overlap)}: "
            f"({format_word(self.first)}, {format_word(self.second)}) {status}"
        )


@dataclass(frozen=True)
class ValidationReport:
    oracle: GroupOracle
    pairs: Tuple[CriticalPair, ...]
    order_violations: Tuple[int, ...]
    warnings: Tuple[str, ...]
    valid: bool

    def summary(self) -> str:
        lines = [f"valid: {'yes' if self.valid else 'no'}", f"critical pairs: {len(self.pairs)}"]
        lines += ["  " + str(cp) for cp in self.pairs]
        for k in self.order_violations:
            l, r = self.oracle.rules[k]
            lines.append(f"rule {k} ({format_word(l)} -> {format_word(r)}) is not shortlex decreasing")
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def _overlaps(rules):
    """Yield (i, j, word, rewrite_i, rewrite_j) for every overlap of left-hand sides."""
    for i, (li, ri) in enumerate(rules):
        a = li.letters
        for j, (lj, rj) in enumerate(rules):
            b = lj.letters
            # proper overlap: suffix of a equals prefix of b
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    w = a + b[k:]
                    yield i, j, Word(w), Word(ri.letters + b[k:]), Word(a[:-k] + rj.letters)
            # containment of b inside a
            if i != j and len(b) <= len(a) and (len(b) < len(a) or i < j):
                for pos in range(len(a) - len(b) + 1):
                    if a[pos:pos + len(b)] == b:
                        yield i, j, Word(a), Word(ri.letters), Word(a[:pos] + rj.letters + a[pos + len(b):])


def validate_oracle(o: GroupOracle, budget: int) -> ValidationReport:
    """Check local confluence (critical pairs) and shortlex compatibility.

    Together these certify a terminating, confluent system.
    """
    if o.kind is not OracleKind.REWRITING_SYSTEM:
        raise OracleError("only rewriting-system oracles are validated")
    if budget < 1:
        raise ValueError("budget must be positive")
    free = FreeGroup(o.alphabet)
    violations = tuple(
        k for k, (l, r) in enumerate(o.rules)
        if not l or free.shortlex_key(r) >= free.shortlex_key(l)
    )
    pairs = []
    for i, j, w, x, y in _overlaps(o.rules):
        try:
            nx, _ = _rewrite(o.rules, x, budget)
            ny, _ = _rewrite(o.rules, y, budget)
        except OracleError:
            pairs.append(CriticalPair((i, j), w, x, y, None, None, False, True))
            continue
        pairs.append(CriticalPair((i, j), w, x, y, nx, ny, nx == ny))
    warnings = []
    lhs = {l for l, _ in o.rules}
    for name in o.alphabet:
        a, A = (name, 1), (name, -1)
        if Word((a, A)) not in lhs or Word((A, a)) not in lhs:
            warnings.append(NO_INVERSE_RULES)
            break
    valid = not violations and all(cp.joined for cp in pairs)
    checked = replace(o, validated_ok=valid)
    return ValidationReport(checked, tuple(pairs), violations, tuple(warnings), valid)


# ---------------------------------------------------------------------------
# coset labelers


@dataclass(frozen=True)
class CosetLabeler:
    """Assigns to each word a label of its coset ``gL`` for a subgroup L of G."""

    name: str
    label: Callable[[Word], Hashable] = field(compare=False)

    def __call__(self, w: Word) -> Hashable:
        return self.label(w)

    @classmethod
    def trivial_subgroup(cls, oracle: GroupOracle) -> "CosetLabeler":
        return cls("trivial", oracle.normal_form)

    @classmethod
    def whole_group(cls) -> "CosetLabeler":
        return cls("whole", lambda w: "G")

    @classmethod
    def from_table(cls, table: Dict[Word, Hashable], oracle: GroupOracle, name: str = "table") -> "CosetLabeler":
        def label(w: Word):
            nf = oracle.normal_form(w)
            try:
                return table[nf]
            except KeyError:
                raise OracleError(f"labeler has no entry for {format_word(nf)}") from None

        return cls(name, label)


__all__ = [
    "IDENTITY",
    "CosetLabeler",
    "CriticalPair",
    "GroupOracle",
    "NO_INVERSE_RULES",
    "OracleError",
    "OracleKind",
    "Presentation",
    "PresentationError",
    "Relation",
    "ValidationReport",
    "format_presentation",
    "oracle_equal",
    "oracle_normal_form",
    "parse_presentation",
    "rhat",
    "validate_oracle",
]
