"""Long-refinement strings for graphs with degrees {2, 3}.

A string has one letter per pair of the pair phase, in splitting order:

    S    the first pair P_1
    X    P_a or P_b, the two pairs P_1 is attached to
    0    a pair of degree-2 vertices
    1    a pair of degree-3 vertices

and a letter carries the subscript 2 (written ``_2``) when its pair is adjacent
to a singleton class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from longref.analyze import pair_phase, verify_structure
from longref.errors import (
    ConstructionError,
    LrStringError,
    NotLongRefinementError,
    UnknownFamilyError,
)
from longref.graph import Graph, build_graph, degree_set
from longref.refine import run_colour_refinement
from longref.utils import get_logger

logger = get_logger(__name__)

LETTERS = ("S", "X", "0", "1")
ALPHABET = ("S", "X", "X_2", "0", "0_2", "1", "1_2")


@dataclass(frozen=True, slots=True)
class LrString:
    tokens: tuple[str, ...]

    def __str__(self) -> str:
        return render(self)

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def x_positions(self) -> tuple[int, int]:
        """1-based positions a < b of the X letters."""
        a, b = (i + 1 for i, t in enumerate(self.tokens) if t[0] == "X")
        return a, b

    @property
    def subscripts(self) -> tuple[int, ...]:
        """0-based token indices carrying a singleton."""
        return tuple(i for i, t in enumerate(self.tokens) if t.endswith("_2"))

    @property
    def order(self) -> int:
        return order(self)


@dataclass(slots=True)
class RealizedGraph:
    graph: Graph
    string: LrString
    pair_of: tuple[tuple[int, int], ...]
    singleton_of: dict[int, int] = field(default_factory=dict)


def render(s: LrString) -> str:
    return "".join(s.tokens)


def order(s: LrString) -> int:
    return 2 * len(s.tokens) + len(s.subscripts)


def parse(text: str) -> LrString:
    """Parse surface syntax: S, X, 0, 1 with an optional subscript written _2, ₂ or 2.

    Unknown characters report their character offset; grammar violations report
    the token index.
    """
    src = "".join(text.split()).replace("₂", "_2")
    tokens: list[str] = []
    i = 0
    while i < len(src):
        start, ch = i, src[i]
        if ch not in LETTERS:
            raise LrStringError(f"unknown token {ch!r} in {text!r}", rule="unknown-token", position=i)
        i += 1
        sub = ""
        if src.startswith("_2", i):
            sub, i = "_2", i + 2
        elif src.startswith("2", i):
            sub, i = "_2", i + 1
        elif src.startswith("_", i):
            raise LrStringError(f"dangling '_' in {text!r}", rule="unknown-token", position=i)
        if ch == "S" and sub:
            raise LrStringError("S has no subscript form", rule="unknown-token", position=start)
        tokens.append(ch + sub)
    return validate(tokens)


def validate(tokens) -> LrString:
    tokens = tuple(tokens)
    for i, t in enumerate(tokens):
        if t not in ALPHABET:
            raise LrStringError(f"unknown token {t!r}", rule="unknown-token", position=i)
    if not tokens or tokens[0] != "S":
        raise LrStringError("S must be first", rule="s-first", position=0)
    for i, t in enumerate(tokens[1:], start=1):
        if t == "S":
            raise LrStringError("S occurs more than once", rule="s-unique", position=i)
    xs = [i for i, t in enumerate(tokens) if t[0] == "X"]
    if len(xs) != 2:
        raise LrStringError(
            f"expected exactly two X letters, found {len(xs)}",
            rule="x-count",
            position=xs[2] if len(xs) > 2 else None,
        )
    subs = [i for i, t in enumerate(tokens) if t.endswith("_2")]
    if len(subs) > 1:
        raise LrStringError("at most one subscript letter", rule="subscript-count", position=subs[1])
    if len(tokens) < 4:
        raise LrStringError(
            f"at least four letters required, got {len(tokens)}", rule="min-length"
        )
    return LrString(tokens=tokens)


# families


@dataclass(frozen=True, slots=True)
class StringFamily:
    """A pattern in k; ``^k`` repeats the preceding letter or parenthesised group."""

    family_id: str
    pattern: str
    parity: str
    extras: tuple[str, ...] = ()

    def expand(self, k: int) -> LrString:
        if k < 0:
            raise ValueError(f"family parameter must be non-negative, got {k}")
        return parse(_expand_pattern(self.pattern, k))

    @property
    def parametric(self) -> bool:
        return "^k" in self.pattern

    def members(self, max_order: int) -> Iterator[tuple[Optional[int], LrString]]:
        """(k, string) pairs up to ``max_order``; extras carry k = None."""
        for extra in self.extras:
            s = parse(extra)
            if s.order <= max_order:
                yield None, s
        k = 0
        while True:
            s = self.expand(k)
            if s.order > max_order:
                return
            yield k, s
            if not self.parametric:
                return
            k += 1


def _expand_pattern(pattern: str, k: int) -> str:
    out = []
    i = 0
    while i < len(pattern):
        if pattern[i] == "(":
            j = pattern.index(")", i)
            unit, i = pattern[i + 1:j], j + 1
        else:
            unit, i = pattern[i], i + 1
            if pattern.startswith("_2", i):
                unit, i = unit + "_2", i + 2
        if pattern.startswith("^k", i):
            unit, i = unit * k, i + 2
        out.append(unit)
    return "".join(out)


FAMILIES: dict[str, StringFamily] = {
    f.family_id: f
    for f in [
        StringFamily("even-family-1", "S011XX", "even"),
        StringFamily("even-family-2", "S1^k001^kX1X1^k0", "even"),
        StringFamily("even-family-3", "S1^k11001^kXX1^k0", "even"),
        StringFamily("even-family-4", "S1^k0011^kXX1^k10", "even"),
        StringFamily("even-family-5", "S011(011)^k00(110)^kXX(011)^k0", "even"),
        StringFamily("even-family-6", "S(011)^k00(110)^k1X0X1(011)^k0", "even"),
        StringFamily("odd-family-1", "S1_211XX", "odd"),
        StringFamily("odd-family-2", "S1^k1011^kX1X1^k1_2", "odd", extras=("S0X1X_2",)),
        StringFamily("odd-family-3", "S111^k1011^kXX1^k1_2", "odd", extras=("S110XX_2",)),
        StringFamily("odd-family-4", "S1^k01^k1XX1^k1_2", "odd"),
        StringFamily("odd-family-5", "S(011)^k00(110)^kX1_2X(011)^k0", "odd"),
    ]
}


def get_family(family_id: str) -> StringFamily:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise UnknownFamilyError(
            f"unknown string family {family_id!r}, expected one of {sorted(FAMILIES)}"
        )


def expand_family(family_id: str, k: int) -> LrString:
    return get_family(family_id).expand(k)


# realization


def build_realization(s: LrString) -> RealizedGraph:
    """Apply the edge rules without checking the result."""
    tokens = s.tokens
    count = len(tokens)
    pairs = tuple((2 * i, 2 * i + 1) for i in range(count))
    edges: list[tuple[int, int]] = []
    for i in range(count - 1):
        edges.append((pairs[i][0], pairs[i + 1][0]))
        edges.append((pairs[i][1], pairs[i + 1][1]))

    a, b = s.x_positions
    u0, v0 = pairs[0]
    edges.extend((u0, x) for x in pairs[a - 1])
    edges.extend((v0, x) for x in pairs[b - 1])

    n = 2 * count
    singleton_of = {}
    for i in s.subscripts:
        singleton_of[i] = n
        edges.extend((n, x) for x in pairs[i])
        n += 1

    degree = [0] * n
    for x, y in edges:
        degree[x] += 1
        degree[y] += 1
    for i, t in enumerate(tokens):
        if t == "S":
            continue
        target = 2 if t[0] == "0" else 3
        deficits = {target - degree[x] for x in pairs[i]}
        if deficits == {1}:
            edges.append(pairs[i])
        elif deficits != {0}:
            raise ConstructionError(
                f"letter {t} at position {i + 1} of {render(s)} leaves degree deficit {sorted(deficits)}"
            )

    try:
        graph = build_graph(n, edges)
    except ValueError as e:
        raise ConstructionError(f"{render(s)} does not give a simple graph: {e}") from e
    return RealizedGraph(graph=graph, string=s, pair_of=pairs, singleton_of=singleton_of)


def realize(s: LrString | str) -> RealizedGraph:
    """Realize ``s`` and accept it only if the result is a long-refinement graph
    with degrees {2, 3}, passing every structure check, with P_a, P_b at the X letters."""
    if isinstance(s, str):
        s = parse(s)
    realized = build_realization(s)
    g = realized.graph
    trace = run_colour_refinement(g)
    if trace.iteration_number != g.n - 1:
        raise ConstructionError(
            f"string does not realize a long-refinement graph: {render(s)} gives "
            f"{trace.iteration_number} iterations on {g.n} vertices"
        )
    if degree_set(g) != (2, 3):
        raise ConstructionError(f"{render(s)} realizes degrees {degree_set(g)}, expected (2, 3)")
    report = verify_structure(g, trace)
    if not report.passed:
        raise ConstructionError(f"{render(s)} fails structure checks {report.failed}")
    if (report.phase.a, report.phase.b) != s.x_positions:
        raise ConstructionError(
            f"{render(s)}: pair phase puts P_a, P_b at {(report.phase.a, report.phase.b)}, "
            f"letters put them at {s.x_positions}"
        )
    return realized


def extract_string(g: Graph) -> LrString:
    trace = run_colour_refinement(g)
    if g.n < 2 or trace.iteration_number != g.n - 1:
        raise NotLongRefinementError(
            f"not long-refinement: {trace.iteration_number} iterations on {g.n} vertices"
        )
    if degree_set(g) != (2, 3):
        raise LrStringError(f"degrees {degree_set(g)} are not (2, 3)", rule="degree-set")
    phase = pair_phase(trace, g)
    if len(phase.singletons) > 1:
        raise LrStringError(
            f"{len(phase.singletons)} singletons in the pair phase, at most one allowed",
            rule="subscript-count",
        )

    tokens = []
    for i, pair in enumerate(phase.pair_order, start=1):
        sub = _subscript(g, pair, phase.singletons)
        if i == 1:
            tokens.append("S")
        elif i in (phase.a, phase.b):
            tokens.append("X" + sub)
        else:
            tokens.append(("0" if g.degree(pair[0]) == 2 else "1") + sub)
    return validate(tokens)


def _subscript(g: Graph, pair: Sequence[int], singletons: Sequence[int]) -> str:
    """"_2" when the singleton is joined to both vertices of ``pair``, "" when to neither."""
    for s in singletons:
        d = sum(1 for v in pair if s in g.adjacency[v])
        if d == 2:
            return "_2"
        if d:
            raise NotLongRefinementError(
                f"singleton {s} has degree {d} into pair {tuple(pair)}, expected 0 or 2"
            )
    return ""
