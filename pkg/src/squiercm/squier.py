"""The reduced Squier complex of a group presentation.

Vertices are reduced words.  An edge ``(p, rel, q)`` applies relation
``rel = (l, r)`` inside a word, running from ``plq`` to ``prq`` (both freely
reduced).  Paths are syntactic sequences of signed edges; homotopy is only
ever applied through explicit moves.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .freegroup import IDENTITY, Word, format_word, invert, multiply, parse_word
from .presentation import Presentation


class PathError(ValueError):
    """Endpoint mismatch or violated move precondition."""


@dataclass(frozen=True)
class Edge:
    p: Word
    rel: str
    q: Word

    def __str__(self):
        return f"{self.rel}[{format_word(self.p)}|{format_word(self.q)}]"


@dataclass(frozen=True)
class SignedEdge:
    edge: Edge
    sign: int = 1

    def inverse(self) -> "SignedEdge":
        return SignedEdge(self.edge, -self.sign)

    def __str__(self):
        e = self.edge
        s = f"edge({e.rel}, {format_word(e.p)}, {format_word(e.q)})"
        return s if self.sign > 0 else s + "^-1"


@dataclass(frozen=True)
class EdgePath:
    """A path starting at ``source``; ``steps`` empty means the identity ``1_source``."""

    source: Word
    steps: Tuple[SignedEdge, ...]
    target: Word

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        if not self.steps:
            return f"1_{{{format_word(self.source)}}}"
        return "; ".join(str(s) for s in self.steps)


@dataclass(frozen=True)
class TwoCell:
    """The square for the disjoint application of ``rel`` and ``rel2``."""

    p: Word
    rel: str
    q: Word
    p2: Word
    rel2: str
    q2: Word


@dataclass(frozen=True)
class ComplexFragment:
    vertices: Tuple[Word, ...]
    edges: Tuple[Edge, ...]
    cells: Tuple[TwoCell, ...]
    vertex_radius: int
    context_radius: int


class SquierComplex:
    """Operations on the reduced Squier complex of ``presentation``."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.free = presentation.free_group

    # -- edges ---------------------------------------------------------------

    def edge(self, p: Word, rel: str, q: Word) -> Edge:
        self.presentation.relation(rel)
        self.free.check(p)
        self.free.check(q)
        return Edge(multiply(p), rel, multiply(q))

    def endpoints(self, e: Edge) -> Tuple[Word, Word]:
        r = self.presentation.relation(e.rel)
        return multiply(e.p, r.left, e.q), multiply(e.p, r.right, e.q)

    def step_endpoints(self, s: SignedEdge) -> Tuple[Word, Word]:
        d, r = self.endpoints(s.edge)
        return (d, r) if s.sign > 0 else (r, d)

    # -- paths ---------------------------------------------------------------

    def identity(self, v: Word) -> EdgePath:
        return EdgePath(multiply(v), (), multiply(v))

    def path(self, steps: Iterable[SignedEdge | Edge], source: Optional[Word] = None) -> EdgePath:
        """Build a path, checking that consecutive steps are composable."""
        steps = tuple(s if isinstance(s, SignedEdge) else SignedEdge(s, 1) for s in steps)
        if not steps:
            if source is None:
                raise PathError("an empty path needs an explicit source")
            return self.identity(source)
        start, cur = self.step_endpoints(steps[0])
        if source is not None and multiply(source) != start:
            raise PathError(f"source {format_word(source)} is not the start {format_word(start)} of the first step")
        for k, s in enumerate(steps[1:], start=1):
            d, r = self.step_endpoints(s)
            if d != cur:
                raise PathError(f"step {k} starts at {format_word(d)}, expected {format_word(cur)}")
            cur = r
        return EdgePath(start, steps, cur)

    def vertices(self, alpha: EdgePath) -> List[Word]:
        """The vertex sequence visited by ``alpha`` (length ``len(alpha) + 1``)."""
        out = [alpha.source]
        for s in alpha.steps:
            out.append(self.step_endpoints(s)[1])
        return out

    def compose(self, alpha: EdgePath, beta: EdgePath) -> EdgePath:
        if alpha.target != beta.source:
            raise PathError(
                f"cannot compose: range {format_word(alpha.target)} != source {format_word(beta.source)}"
            )
        return EdgePath(alpha.source, alpha.steps + beta.steps, beta.target)

    def inverse(self, alpha: EdgePath) -> EdgePath:
        steps = tuple(s.inverse() for s in reversed(alpha.steps))
        return EdgePath(alpha.target, steps, alpha.source)

    def act_left(self, u: Word, alpha: EdgePath) -> EdgePath:
        steps = tuple(SignedEdge(Edge(multiply(u, s.edge.p), s.edge.rel, s.edge.q), s.sign) for s in alpha.steps)
        return EdgePath(multiply(u, alpha.source), steps, multiply(u, alpha.target))

    def act_right(self, alpha: EdgePath, v: Word) -> EdgePath:
        steps = tuple(SignedEdge(Edge(s.edge.p, s.edge.rel, multiply(s.edge.q, v)), s.sign) for s in alpha.steps)
        return EdgePath(multiply(alpha.source, v), steps, multiply(alpha.target, v))

    def translate_to_one(self, alpha: EdgePath) -> EdgePath:
        return self.act_left(invert(alpha.source), alpha)

    def star(self, alpha: EdgePath, beta: EdgePath) -> EdgePath:
        """``(alpha <| beta.d) o (alpha.r |> beta)``."""
        return self.compose(self.act_right(alpha, beta.source), self.act_left(alpha.target, beta))

    def circstar(self, alpha: EdgePath, beta: EdgePath) -> EdgePath:
        """``(alpha.d |> beta) o (alpha <| beta.r)``."""
        return self.compose(self.act_left(alpha.source, beta), self.act_right(alpha, beta.target))

    def star_inverse(self, alpha: EdgePath) -> EdgePath:
        """Inverse for ``*``: ``alpha.r^-1 |> alpha° <| alpha.d^-1``."""
        return self.act_left(invert(alpha.target), self.act_right(self.inverse(alpha), invert(alpha.source)))

    # -- 2-cells and homotopy moves ------------------------------------------

    def cell_boundary(self, c: TwoCell) -> Tuple[EdgePath, EdgePath]:
        """The two sides of ``c``: top-then-right and left-then-bottom."""
        P = self.presentation
        l, r = P.relation(c.rel).left, P.relation(c.rel).right
        l2, r2 = P.relation(c.rel2).left, P.relation(c.rel2).right
        top = Edge(c.p, c.rel, multiply(c.q, c.p2, l2, c.q2))
        right = Edge(multiply(c.p, r, c.q, c.p2), c.rel2, c.q2)
        left = Edge(multiply(c.p, l, c.q, c.p2), c.rel2, c.q2)
        bottom = Edge(c.p, c.rel, multiply(c.q, c.p2, r2, c.q2))
        return self.path([top, right]), self.path([left, bottom])

    def cell_edges(self, c: TwoCell) -> Tuple[Edge, Edge, Edge, Edge]:
        a, b = self.cell_boundary(c)
        return a.steps[0].edge, a.steps[1].edge, b.steps[0].edge, b.steps[1].edge

    def replace_cell(self, alpha: EdgePath, i: int, c: TwoCell) -> EdgePath:
        """Swap one side of ``c`` occupying steps ``i, i+1`` of ``alpha`` for the other."""
        one, other = self.cell_boundary(c)
        seg = alpha.steps[i:i + 2]
        if seg == one.steps:
            new = other.steps
        elif seg == other.steps:
            new = one.steps
        else:
            raise PathError(f"steps {i},{i + 1} are not a side of the 2-cell")
        return EdgePath(alpha.source, alpha.steps[:i] + new + alpha.steps[i + 2:], alpha.target)

    def one_homotopy_insert(self, alpha: EdgePath, i: int, e: SignedEdge) -> EdgePath:
        if not 0 <= i <= len(alpha.steps):
            raise PathError(f"position {i} out of range")
        v = self.vertices(alpha)[i]
        if self.step_endpoints(e)[0] != v:
            raise PathError(f"edge does not start at vertex {format_word(v)}")
        steps = alpha.steps[:i] + (e, e.inverse()) + alpha.steps[i:]
        return EdgePath(alpha.source, steps, alpha.target)

    def one_homotopy_delete(self, alpha: EdgePath, i: int) -> EdgePath:
        if not 0 <= i < len(alpha.steps) - 1:
            raise PathError(f"position {i} out of range")
        if alpha.steps[i + 1] != alpha.steps[i].inverse():
            raise PathError(f"steps {i},{i + 1} are not mutually inverse")
        return EdgePath(alpha.source, alpha.steps[:i] + alpha.steps[i + 2:], alpha.target)

    # -- finite fragments -----------------------------------------------------

    def enumerate_fragment(self, vertex_radius: int, context_radius: int) -> ComplexFragment:
        """Truncate the complex to a finite fragment.

        Vertices are the reduced words of length ``<= vertex_radius``; edges
        and cells have all context words of length ``<= context_radius``.
        Every vertex carries infinitely many edges, hence the second bound.
        Cost grows like ``(2|X|-1)^(4*context_radius) * |R|^2`` in the cells.
        """
        if vertex_radius < 0 or context_radius < 0:
            raise ValueError("radii must be non-negative")
        free = self.free
        vertices = tuple(free.reduced_words(vertex_radius))
        vset = frozenset(vertices)
        contexts = tuple(free.reduced_words(context_radius))
        edges = []
        for rel in self.presentation.relation_ids:
            for p in contexts:
                for q in contexts:
                    e = Edge(p, rel, q)
                    d, r = self.endpoints(e)
                    if d in vset and r in vset:
                        edges.append(e)
        eset = frozenset(edges)
        cells = []
        rels = self.presentation.relation_ids
        for rel, rel2 in itertools.product(rels, rels):
            for p, q, p2, q2 in itertools.product(contexts, repeat=4):
                c = TwoCell(p, rel, q, p2, rel2, q2)
                if all(e in eset for e in self.cell_edges(c)):
                    cells.append(c)
        key = free.shortlex_key
        edges.sort(key=lambda e: (rels.index(e.rel), key(e.p), key(e.q)))
        cells.sort(key=lambda c: (rels.index(c.rel), rels.index(c.rel2), key(c.p), key(c.q), key(c.p2), key(c.q2)))
        return ComplexFragment(vertices, tuple(edges), tuple(cells), vertex_radius, context_radius)

    def component_of(self, fragment: ComplexFragment, v: Word) -> FrozenSet[Word]:
        if v not in fragment.vertices:
            raise KeyError(f"vertex {format_word(v)} not in fragment")
        adj = {w: set() for w in fragment.vertices}
        for e in fragment.edges:
            d, r = self.endpoints(e)
            adj[d].add(r)
            adj[r].add(d)
        seen = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for x in adj[w]:
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return frozenset(seen)

    # -- export ----------------------------------------------------------------

    def export_fragment(self, f: ComplexFragment, format: str = "json") -> bytes:
        if format == "json":
            return fragment_to_json(f)
        if format == "dot":
            return self._to_dot(f)
        raise ValueError(f"unknown export format {format!r}")

    def _to_dot(self, f: ComplexFragment) -> bytes:
        lines = ["digraph squier {"]
        for v in f.vertices:
            lines.append(f"  {json.dumps(format_word(v))};")
        for e in f.edges:
            d, r = self.endpoints(e)
            lines.append(f"  {json.dumps(format_word(d))} -> {json.dumps(format_word(r))} [label={json.dumps(str(e))}];")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")

    def fragment_from_json(self, data: bytes | str) -> ComplexFragment:
        obj = json.loads(data)
        alphabet = self.presentation.alphabet

        def w(text):
            return parse_word(text, alphabet)

        return ComplexFragment(
            tuple(w(v) for v in obj["vertices"]),
            tuple(Edge(w(e["p"]), e["rel"], w(e["q"])) for e in obj["edges"]),
            tuple(TwoCell(w(c["p"]), c["rel"], w(c["q"]), w(c["p2"]), c["rel2"], w(c["q2"])) for c in obj["cells"]),
            int(obj["radii"]["vertex"]),
            int(obj["radii"]["context"]),
        )


def fragment_to_json(f: ComplexFragment) -> bytes:
    obj = {
        "vertices": [format_word(v) for v in f.vertices],
        "edges": [{"p": format_word(e.p), "rel": e.rel, "q": format_word(e.q)} for e in f.edges],
        "cells": [
            {
                "p": format_word(c.p),
                "rel": c.rel,
                "q": format_word(c.q),
                "p2": format_word(c.p2),
                "rel2": c.rel2,
                "q2": format_word(c.q2),
            }
            for c in f.cells
        ],
        "radii": {"vertex": f.vertex_radius, "context": f.context_radius},
    }
    return (json.dumps(obj, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
