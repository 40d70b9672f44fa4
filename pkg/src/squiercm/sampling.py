"""Seeded random words, factor words, edges and paths for property checks."""

from __future__ import annotations

import random
from typing import Optional

from .freegroup import IDENTITY, Word, invert, multiply
from .presentation import Presentation
from .squier import Edge, EdgePath, SignedEdge, SquierComplex, TwoCell


class Sampler:
    """Random objects over ``presentation``.

    Reduced words have length uniform on ``0..max_length`` (a uniformly
    chosen letter is redrawn if it would cancel), factor words have a
    uniform number of factors on the same range.
    """

    def __init__(self, presentation: Presentation, rng: Optional[random.Random] = None, max_length: int = 4):
        self.presentation = presentation
        self.rng = rng if rng is not None else random.Random(0)
        self.max_length = max_length
        self.letters = presentation.free_group.letters
        self.complex = SquierComplex(presentation)

    def word(self, max_length: Optional[int] = None) -> Word:
        n = self.rng.randint(0, self.max_length if max_length is None else max_length)
        out = []
        while len(out) < n:
            a = self.rng.choice(self.letters)
            if out and out[-1][0] == a[0] and out[-1][1] == -a[1]:
                continue
            out.append(a)
        return Word(tuple(out))

    def relation(self) -> str:
        return self.rng.choice(self.presentation.relation_ids)

    def _factors(self, gen_cls, max_factors):
        n = self.rng.randint(0, self.max_length if max_factors is None else max_factors)
        return [(gen_cls(self.relation(), self.word()), self.rng.choice((1, -1))) for _ in range(n)]

    def crossed_word(self, max_factors: Optional[int] = None):
        from .crossedmod import CrossedGenerator, CrossedWord

        return CrossedWord(self._factors(CrossedGenerator, max_factors))

    def lambda_word(self, max_factors: Optional[int] = None):
        from .starone import LambdaGenerator, LambdaWord

        return LambdaWord(self._factors(LambdaGenerator, max_factors))

    def edge(self) -> Edge:
        return Edge(self.word(), self.relation(), self.word())

    def signed_edge_at(self, v: Word) -> SignedEdge:
        """A random signed edge whose traversal starts at ``v``."""
        rel = self.presentation.relation(self.relation())
        q = self.word()
        sign = self.rng.choice((1, -1))
        start = rel.left if sign > 0 else rel.right
        p = multiply(v, invert(q), invert(start))
        return SignedEdge(Edge(p, rel.id, q), sign)

    def path(self, source: Word = IDENTITY, max_steps: int = 3) -> EdgePath:
        n = self.rng.randint(0, max_steps)
        steps = []
        v = source
        for _ in range(n):
            s = self.signed_edge_at(v)
            steps.append(s)
            v = self.complex.step_endpoints(s)[1]
        return self.complex.path(steps, source=source)

    def two_cell_at(self, v: Word) -> TwoCell:
        """A random 2-cell whose common start vertex is ``v``."""
        P = self.presentation
        rel, rel2 = self.relation(), self.relation()
        q, p2, q2 = self.word(), self.word(), self.word()
        l, l2 = P.relation(rel).left, P.relation(rel2).left
        p = multiply(v, invert(multiply(l, q, p2, l2, q2)))
        return TwoCell(p, rel, q, p2, rel2, q2)
