"""The free crossed F(X)-module on the relators of a presentation.

Elements are stored as freely reduced words in generators ``gen(rel, u)``;
the quotient by Peiffer elements is never formed explicitly.  Equality is
decided through the same invariant pair used for star_1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .freegroup import Word, format_word, invert, multiply
from .presentation import GroupOracle, OracleKind, Presentation
from .starone import (
    FactorWord,
    GroupRingVector,
    LambdaGenerator,
    LambdaWord,
    StarOne,
    Verdict,
    parse_factor_word,
)


@dataclass(frozen=True)
class CrossedGenerator:
    rel: str
    u: Word

    @property
    def word(self) -> Word:
        return self.u


class CrossedWord(FactorWord):
    __slots__ = ()
    prefix = "gen"
    generator = CrossedGenerator


def cm_action(c: CrossedWord, v: Word) -> CrossedWord:
    """``(rel, u)^v = (rel, uv)`` on every factor."""
    return CrossedWord((CrossedGenerator(g.rel, multiply(g.u, v)), s) for g, s in c.factors)


def phi(c: CrossedWord) -> LambdaWord:
    return LambdaWord((LambdaGenerator(g.rel, g.u), s) for g, s in c.factors)


def phi_inverse(a: LambdaWord) -> CrossedWord:
    return CrossedWord((CrossedGenerator(g.rel, g.q), s) for g, s in a.factors)


class FreeCrossedModule:
    """``C(P) -> F(X)`` for a presentation ``P``."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self._star = StarOne(presentation)

    def parse(self, text: str) -> CrossedWord:
        return parse_factor_word(text, CrossedWord, self.presentation)

    def generator(self, rel: str, u: Word, sign: int = 1) -> CrossedWord:
        self.presentation.relation(rel)
        return CrossedWord.gen(rel, u, sign)

    def d_boundary(self, c: CrossedWord) -> Word:
        return self._star.boundary(c)

    act = staticmethod(cm_action)

    def peiffer_element(self, r: str, u: Word, s: str, v: Word) -> CrossedWord:
        """``(r,u)^-1 (s,v)^-1 (r,u) (s, v u^-1 rhat(r) u)``, freely reduced."""
        u, v = multiply(u), multiply(v)
        ru = CrossedGenerator(r, u)
        sv = CrossedGenerator(s, v)
        last = CrossedGenerator(s, multiply(v, invert(u), self.presentation.rhat(r), u))
        return CrossedWord([(ru, -1), (sv, -1), (ru, 1), (last, 1)])

    def cm_abelianize(self, c: CrossedWord, oracle: Optional[GroupOracle] = None) -> GroupRingVector:
        return self._star.abelianize(c, oracle)

    def cm_equal(self, c1: CrossedWord, c2: CrossedWord, oracle: Optional[GroupOracle] = None) -> Verdict:
        return self._star.equal(c1, c2, oracle)

    def check_axioms(self, oracle: GroupOracle, trials: int = 200, seed: int = 0, action=None, max_length: int = 4):
        return check_axioms(self.presentation, oracle, trials, seed, action=action, max_length=max_length)


# ---------------------------------------------------------------------------
# randomized axiom checks


@dataclass
class AxiomResult:
    name: str
    trials: int = 0
    failures: int = 0
    witnesses: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.trials > 0 and self.failures == 0

    def record(self, ok: bool, witness: Callable[[], str]):
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < 3:
                self.witnesses.append(witness())


@dataclass
class AxiomReport:
    results: Dict[str, AxiomResult]
    seed: int
    trials: int

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def __getitem__(self, name: str) -> AxiomResult:
        return self.results[name]

    def summary(self) -> str:
        lines = []
        for r in self.results.values():
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{r.name}: {status} ({r.trials - r.failures}/{r.trials})")
            lines += [f"  witness: {w}" for w in r.witnesses]
        return "\n".join(lines)


AXIOMS = ("CM1", "CM2", "homomorphism", "equivariance", "phi-intertwining")


def trial_rng(seed: int, k: int) -> random.Random:
    """Independent generator for trial ``k`` derived from the master seed."""
    return random.Random(f"{seed}:{k}")


def check_axioms(
    presentation: Presentation,
    oracle: GroupOracle,
    trials: int = 200,
    seed: int = 0,
    *,
    action: Optional[Callable[[CrossedWord, Word], CrossedWord]] = None,
    max_length: int = 4,
) -> AxiomReport:
    """Run crossed-module axiom trials on seeded random inputs.

    Words have length uniform on ``0..max_length`` with uniform letters;
    crossed words have a uniform number of factors on the same range.
    ``action`` replaces :func:`cm_action` (used for negative controls).
    """
    from .sampling import Sampler

    if oracle.kind is OracleKind.REWRITING_SYSTEM and not oracle.validated_ok:
        raise ValueError("check_axioms needs a validated oracle")
    act = cm_action if action is None else action
    C = FreeCrossedModule(presentation)
    S = StarOne(presentation)
    results = {name: AxiomResult(name) for name in AXIOMS}
    for k in range(trials):
        smp = Sampler(presentation, trial_rng(seed, k), max_length=max_length)
        c, b = smp.crossed_word(), smp.crossed_word()
        w = smp.word()

        lhs = C.d_boundary(act(c, w))
        rhs = multiply(invert(w), C.d_boundary(c), w)
        results["CM1"].record(lhs == rhs, lambda: f"c={c}, w={format_word(w)}: {format_word(lhs)} != {format_word(rhs)}")

        acted = act(c, C.d_boundary(b))
        conj = b.inverse() * c * b
        verdict = C.cm_equal(acted, conj, oracle)
        results["CM2"].record(verdict is Verdict.EQUAL, lambda: f"c={c}, b={b}: {verdict}")

        hom = C.d_boundary(c * b) == multiply(C.d_boundary(c), C.d_boundary(b))
        results["homomorphism"].record(hom, lambda: f"c={c}, b={b}")

        ab_acted = C.cm_abelianize(act(c, w), oracle)
        ab_moved = S.translate(C.cm_abelianize(c, oracle), w, oracle)
        results["equivariance"].record(ab_acted == ab_moved, lambda: f"c={c}, w={format_word(w)}")

        a = phi(c)
        ok = (
            phi_inverse(a) == c
            and S.boundary(a) == C.d_boundary(c)
            and phi(act(c, w)) == S.act(a, w)
        )
        results["phi-intertwining"].record(ok, lambda: f"c={c}, w={format_word(w)}")
    return AxiomReport(results, seed, trials)
