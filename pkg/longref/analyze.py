"""Pair-phase extraction and executable structure checks for long-refinement traces.

Indexing follows the refinement: C_{i-1} is the class of pi^{i-1} that splits at
iteration i into A_i and B_i; p is the first iteration whose classes all have at
most two vertices, and the pairs P_1 < ... < P_{n_P} are listed in the order in
which they split into singletons.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Optional, Sequence

from longref.errors import NotLongRefinementError
from longref.graph import Graph
from longref.refine import run_colour_refinement
from longref.structs import (
    CheckResult,
    Colouring,
    PairPhase,
    RefinementTrace,
    StructureReport,
)
from longref.utils import get_logger

logger = get_logger(__name__)

CHECK_NAMES = {
    1: "one split, one unbalanced class",
    2: "A_p and B_p are pairs",
    3: "consecutive pairs matched",
    4: "P_1 attached to P_a and P_b",
    5: "trivial attachment elsewhere",
    6: "b in {a+1, a+2}",
    7: "4->2 cascade partitions",
    8: "consecutive quadruples in {1,3}",
    9: "shape of C_{p-ell-2}",
    10: "range of d",
}


def unbalanced_classes(g: Graph, c: Colouring) -> list[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """Classes C with some class C' (possibly C) into which members of C have differing degree."""
    c.check_covers(g.n)
    classes = c.classes()
    counts = [Counter(c.colour[u] for u in nbrs) for nbrs in g.adjacency]
    out = []
    for members in classes:
        targets = set()
        for v in members:
            targets.update(counts[v])
        witnesses = [
            classes[t]
            for t in sorted(targets)
            if len({counts[v].get(t, 0) for v in members}) > 1
        ]
        if witnesses:
            out.append((members, witnesses))
    return out


def _degree(g: Graph, into: Sequence[int], of: Sequence[int]) -> Optional[int]:
    """deg_into(of): common number of neighbours in ``into``, None if not uniform."""
    target = set(into)
    values = {sum(1 for u in g.adjacency[v] if u in target) for v in of}
    return values.pop() if len(values) == 1 else None


def _key(vertices) -> frozenset[int]:
    return frozenset(vertices)


def pair_phase(trace: RefinementTrace, g: Graph) -> PairPhase:
    if g.n < 2 or trace.iteration_number != g.n - 1:
        raise NotLongRefinementError(
            f"trace has {trace.iteration_number} iterations on {g.n} vertices, "
            f"a long-refinement trace needs {g.n - 1}"
        )
    for i, records in enumerate(trace.splits, start=1):
        if len(records) != 1 or not records[0].is_binary:
            raise NotLongRefinementError(f"iteration {i} is not a single binary split")

    p = next(
        i for i, part in enumerate(trace.partitions)
        if all(len(cls) <= 2 for cls in part.classes())
    )
    n_pairs = g.n - 1 - p
    pairs = [list(trace.split_at(p + i).parent) for i in range(1, n_pairs + 1)]
    position = {_key(pair): i for i, pair in enumerate(pairs, start=1)}
    singletons = [cls[0] for cls in trace.partitions[p].classes() if len(cls) == 1]

    split = trace.split_at(p)
    if not all(_key(child) in position for child in split.children):
        raise ValueError(f"A_p and B_p are not pairs: {[list(c) for c in split.children]}")
    a, b = sorted(position[_key(child)] for child in split.children)
    ell = min(n_pairs - b, a - 1)
    c = a - ell

    t = None
    if p - ell - 2 >= 0 and c - 1 >= 1:
        parent = _key(trace.split_at(p - ell - 1).parent)
        if parent == _key(pairs[c - 2] + pairs[c - 1] + pairs[n_pairs - 1]):
            t = 0
        elif any(parent == _key(pairs[c - 2] + [s]) for s in singletons):
            t = 1

    phase = PairPhase(
        p=p,
        pair_order=pairs,
        singletons=singletons,
        n_pairs=n_pairs,
        a=a,
        b=b,
        ell=ell,
        c=c,
    )
    if t is not None:
        phase.t = t
        phase.q = p - ell - 1 - t
        phase.d = c - t - 1
        phase.ell_prime = min(ell, phase.d - 1)
    return phase


def _result(index: int, ok: bool, detail: str = "", witness=()) -> CheckResult:
    return CheckResult(
        index=index,
        name=CHECK_NAMES[index],
        status="pass" if ok else "fail",
        detail="" if ok else detail,
        witness=[] if ok else [sorted(w) for w in witness],
    )


def _vacuous(index: int, detail: str) -> CheckResult:
    return CheckResult(index=index, name=CHECK_NAMES[index], status="vacuous", detail=detail)


def _skipped(indices, detail: str) -> list[CheckResult]:
    return [
        CheckResult(index=i, name=CHECK_NAMES[i], status="skipped", detail=detail)
        for i in indices
    ]


def _check_one(g: Graph, trace: RefinementTrace) -> CheckResult:
    if trace.iteration_number != g.n - 1:
        return _result(
            1, False,
            f"iteration number {trace.iteration_number}, expected {g.n - 1}",
        )
    for i, colouring in enumerate(trace.partitions[:-1]):
        unbalanced = unbalanced_classes(g, colouring)
        if len(unbalanced) != 1:
            return _result(
                1, False,
                f"pi^{i} has {len(unbalanced)} unbalanced classes",
                [cls for cls, _ in unbalanced],
            )
        members, witnesses = unbalanced[0]
        if i > 0:
            created = {_key(child) for child in trace.split_at(i).children}
            if {_key(w) for w in witnesses} != created:
                return _result(
                    1, False,
                    f"pi^{i}: unbalanced class is not witnessed by exactly A_{i}, B_{i}",
                    [members, *witnesses],
                )
    return _result(1, True)


def _structure_checks(g: Graph, trace: RefinementTrace, ph: PairPhase) -> list[CheckResult]:
    P: Callable[[int], list[int]] = ph.pair
    a, b, ell, n_pairs = ph.a, ph.b, ph.ell, ph.n_pairs
    checks = [_result(2, True)]

    bad = [
        (P(i), P(i + 1)) for i in range(1, n_pairs)
        if _degree(g, P(i), P(i + 1)) != 1 or _degree(g, P(i + 1), P(i)) != 1
    ]
    checks.append(_result(3, not bad, "pair matching broken", bad[0] if bad else ()))

    u, w = P(1)
    pa, pb = set(P(a)), set(P(b))

    def attached(x, y):
        nbr_x, nbr_y = set(g.adjacency[x]), set(g.adjacency[y])
        return pa <= nbr_x and not (pb & nbr_x) and pb <= nbr_y and not (pa & nbr_y)

    ok = attached(u, w) or attached(w, u)
    checks.append(_result(4, ok, "P_1 is not split between P_a and P_b", [P(1), P(a), P(b)]))

    witness = None
    for i in range(1, n_pairs + 1):
        for s in ph.singletons:
            if _degree(g, [s], P(i)) not in (0, 1):
                witness = ([s], P(i))
                break
        if witness:
            break
        for j in range(i + 2, n_pairs + 1):
            if i == 1 and j in (a, b):
                continue
            if _degree(g, P(j), P(i)) not in (0, 2) or _degree(g, P(i), P(j)) not in (0, 2):
                witness = (P(i), P(j))
                break
        if witness:
            break
    checks.append(_result(5, witness is None, "non-trivial attachment", witness or ()))

    checks.append(_result(6, b - a in (1, 2), f"a={a}, b={b}", [P(a), P(b)]))

    if ell == 0:
        checks.append(_vacuous(7, "ell = 0"))
        checks.append(_vacuous(8, "ell = 0"))
    else:
        singles = {_key([s]) for s in ph.singletons}
        failure = None
        for h in range(ell + 1):
            expected = set(singles)
            expected.update(_key(P(a - i) + P(b + i)) for i in range(h + 1))
            expected.update(
                _key(P(i)) for i in range(1, n_pairs + 1)
                if i <= a - h - 1 or a < i < b or i >= b + h + 1
            )
            if ph.p - h - 1 < 0:
                failure = (h, [])
                break
            got = set(trace.partitions[ph.p - h - 1].partition())
            if got != expected:
                failure = (h, sorted(got ^ expected, key=sorted))
                break
        checks.append(
            _result(
                7, failure is None,
                f"pi^(p-{failure[0]}-1) differs" if failure else "",
                failure[1] if failure else (),
            )
        )

        bad = None
        for h in range(ell):
            x = P(a - h) + P(b + h)
            y = P(a - h - 1) + P(b + h + 1)
            d1, d2 = _degree(g, x, y), _degree(g, y, x)
            if d1 != d2 or d1 not in (1, 3):
                bad = (x, y)
                break
        checks.append(_result(8, bad is None, "quadruple degrees outside {1,3}", bad or ()))

    if ph.t is None:
        parent = ()
        if ph.p - ell - 1 >= 1:
            parent = (trace.split_at(ph.p - ell - 1).parent,)
        checks.append(_result(9, False, f"C_(p-ell-2) matches neither shape (c={ph.c})", parent))
        checks.append(_result(10, False, "d undefined without t"))
    else:
        checks.append(_result(9, True))
        d = ph.d
        upper = ell + 4 if b == a + 1 else ell + 2
        checks.append(_result(10, ell <= d <= upper, f"d={d} outside [{ell}, {upper}]"))
    return checks


def verify_structure(g: Graph, trace: Optional[RefinementTrace] = None) -> StructureReport:
    if trace is None:
        trace = run_colour_refinement(g)

    first = _check_one(g, trace)
    if not first.ok:
        return StructureReport(
            checks=[first, *_skipped(range(2, 11), "not a long-refinement trace")]
        )
    try:
        phase = pair_phase(trace, g)
    except NotLongRefinementError as e:
        return StructureReport(checks=[_result(1, False, str(e)), *_skipped(range(2, 11), str(e))])
    except ValueError as e:
        split = trace.split_at(next(
            i for i, part in enumerate(trace.partitions)
            if all(len(cls) <= 2 for cls in part.classes())
        ))
        return StructureReport(
            checks=[first, _result(2, False, str(e), split.children), *_skipped(range(3, 11), str(e))]
        )

    report = StructureReport(checks=[first, *_structure_checks(g, trace, phase)], phase=phase)
    if not report.passed:
        logger.info(f"structure checks failed on n={g.n}: {report.failed}")
    return report
