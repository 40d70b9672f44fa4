"""Small presentations used in tests, examples and the acceptance suite."""

from __future__ import annotations

from .presentation import GroupOracle, Presentation, parse_presentation

INFINITE_CYCLIC = """\
# <x : x x^-1 = 1>, the infinite cyclic group with a trivial relator
generators: x
relation r1: x x^-1 -> 1
"""

Z2 = """\
# <a, b : ab = ba>, free abelian of rank 2, with a complete rewriting system
generators: a b
relation c: a b -> b a
oracle rewriting:
rule: a a^-1 -> 1
rule: a^-1 a -> 1
rule: b b^-1 -> 1
rule: b^-1 b -> 1
rule: b a -> a b
rule: b a^-1 -> a^-1 b
rule: b^-1 a -> a b^-1
rule: b^-1 a^-1 -> a^-1 b^-1
"""


def infinite_cyclic() -> Presentation:
    return parse_presentation(INFINITE_CYCLIC)


def infinite_cyclic_oracle() -> GroupOracle:
    # the relator is freely trivial, so G = F(x) and free reduction decides it
    return GroupOracle.free_reduction()


def z2() -> Presentation:
    return parse_presentation(Z2)


def z2_oracle() -> GroupOracle:
    return z2().rewriting_oracle().validated()
