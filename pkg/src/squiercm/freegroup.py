"""Words over a generator alphabet and the free group F(X).

A letter is a pair ``(name, sign)`` with ``sign`` in ``{+1, -1}``.  A
:class:`Word` is an immutable sequence of letters; it need not be freely
reduced.  Reduced words double as elements of F(X).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Letter = Tuple[str, int]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?[0-9]+))?\Z")


class WordError(ValueError):
    """Raised for malformed word text or alphabet violations."""


def is_generator_name(name: str) -> bool:
    return bool(_NAME_RE.match(name))


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        # concatenation, no reduction
        return Word(self.letters + other.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def is_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(self.letters, self.letters[1:])
        )

    def generators(self) -> set:
        return {name for name, _ in self.letters}


IDENTITY = Word()


def letter(name: str, sign: int = 1) -> Word:
    return Word(((name, sign),))


def word_power(w: Word, k: int) -> Word:
    if k < 0:
        return reduce(invert(w).letters * -k)
    return reduce(w.letters * k)


def parse_word(text: str, alphabet: Iterable[str] | None = None) -> Word:
    """Parse whitespace separated tokens ``g``, ``g^-1`` or ``g^k``.

    The literal ``1`` on its own is the empty word.  With ``alphabet=None``
    any well-formed generator name is accepted.

    >>> parse_word("a^2 b^-1", {"a", "b"})
    Word('a^2 b^-1')
    """
    tokens = text.split()
    if not tokens:
        raise WordError("empty word text (use '1' for the identity)")
    if "1" in tokens:
        if len(tokens) > 1:
            raise WordError(f"'1' mixed with other tokens in {text!r}")
        return IDENTITY
    known = None if alphabet is None else set(alphabet)
    letters = []
    for tok in tokens:
        m = _TOKEN_RE.match(tok)
        if not m:
            raise WordError(f"malformed token {tok!r}")
        name, exp = m.group(1), m.group(2)
        if known is not None and name not in known:
            raise WordError(f"unknown generator {name!r}")
        k = 1 if exp is None else int(exp)
        if k == 0:
            raise WordError(f"zero exponent in token {tok!r}")
        letters.extend([(name, 1 if k > 0 else -1)] * abs(k))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    """Render ``w`` with runs of equal letters collapsed into powers."""
    if not w.letters:
        return "1"
    parts = []
    i = 0
    n = len(w.letters)
    while i < n:
        j = i
        while j < n and w.letters[j] == w.letters[i]:
            j += 1
        name, sign = w.letters[i]
        k = (j - i) * sign
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)


def reduce(w: Word | Sequence[Letter]) -> Word:
    """Free reduction by cancelling adjacent inverse pairs.

    A single left-to-right stack pass cancels the leftmost available pair at
    each step, so the trace matches leftmost-innermost cancellation.
    """
    letters = w.letters if isinstance(w, Word) else tuple(w)
    out: list = []
    for name, sign in letters:
        if out and out[-1][0] == name and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((name, sign))
    return Word(tuple(out))


def multiply(*words: Word) -> Word:
    letters: list = []
    for w in words:
        for name, sign in w.letters:
            if letters and letters[-1][0] == name and letters[-1][1] == -sign:
                letters.pop()
            else:
                letters.append((name, sign))
    return Word(tuple(letters))


def invert(w: Word) -> Word:
    return Word(tuple((name, -sign) for name, sign in reversed(w.letters)))


def conjugate(w: Word, by: Word) -> Word:
    """``by^-1 w by`` reduced."""
    return multiply(invert(by), w, by)


class FreeGroup:
    """The free group on an ordered alphabet.

    Wraps the module level functions with alphabet checks and provides the
    shortlex letter order used for enumeration and rewriting orders:
    ``x1 < x1^-1 < x2 < x2^-1 < ...``.
    """

    def __init__(self, alphabet: Sequence[str]):
        alphabet = tuple(alphabet)
        for name in alphabet:
            if not is_generator_name(name):
                raise WordError(f"invalid generator name {name!r}")
        if len(set(alphabet)) != len(alphabet):
            raise WordError("duplicate generator names")
        self.alphabet = alphabet
        self._names = frozenset(alphabet)
        self.letters: Tuple[Letter, ...] = tuple(
            (name, s) for name in alphabet for s in (1, -1)
        )
        self._rank = {a: i for i, a in enumerate(self.letters)}

    def __repr__(self):
        return f"FreeGroup({' '.join(self.alphabet)})"

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and other.alphabet == self.alphabet

    def __hash__(self):
        return hash(self.alphabet)

    def check(self, w: Word) -> Word:
        extra = w.generators() - self._names
        if extra:
            raise WordError(f"generators {sorted(extra)} not in alphabet {self.alphabet}")
        return w

    def parse(self, text: str) -> Word:
        return parse_word(text, self.alphabet)

    def multiply(self, a: Word, b: Word) -> Word:
        return multiply(self.check(a), self.check(b))

    def invert(self, a: Word) -> Word:
        return invert(self.check(a))

    def shortlex_key(self, w: Word):
        return (len(w), tuple(self._rank[a] for a in w.letters))

    def reduced_words(self, max_length: int):
        """All reduced words of length ``<= max_length`` in shortlex order."""
        layer = [IDENTITY]
        yield IDENTITY
        for _ in range(max_length):
            nxt = []
            for w in layer:
                last = w.letters[-1] if w.letters else None
                for a in self.letters:
                    if last is not None and a[0] == last[0] and a[1] == -last[1]:
                        continue
                    nxt.append(Word(w.letters + (a,)))
            yield from nxt
            layer = nxt
