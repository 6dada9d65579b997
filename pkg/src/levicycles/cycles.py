"""Exact induced-cycle search over arrangement incidence data.

An induced cycle of length 2i in the Levi graph alternates i lines and i
points, so the search runs over *line sequences*: extend a partial sequence
(j1, p1, j2, ..., jt) by a point on jt lying on no earlier chosen line, then
by a new line through that point avoiding every chosen point.  Closing
requires the meet of the last and first lines to avoid all interior lines.
Inducedness is maintained incrementally with incidence bitsets, so accepted
sequences never need a post-hoc filter.

Symmetry is broken by canonical form: the first line is the smallest chosen
line and the second is smaller than the last, which kills the dihedral
symmetry of the cycle.  `Absent` is only reported after the canonical
enumeration has been exhausted; hitting the node budget yields `Unknown`,
never a silent under-search.

The budget is applied per root prefix (first line, first point, second
line), which makes serial runs and runs parallelized over root prefixes
explore identical node sets and hence return identical answers.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass

from .arrangement import Arrangement, ArrangementError, ValidationReport
from .levi import build_levi

__all__ = [
    "FOUND",
    "ABSENT",
    "UNKNOWN",
    "NO_INDUCED_CYCLE",
    "BadLength",
    "InducedCycleWitness",
    "validate_witness",
    "SearchResult",
    "LongestResult",
    "CycleSpectrum",
    "exists_cycle",
    "longest_cycle",
    "spectrum",
]

FOUND = "found"
ABSENT = "absent"
UNKNOWN = "unknown"
NO_INDUCED_CYCLE = "no-induced-cycle"


class BadLength(ArrangementError):
    """Requested cycle length is impossible for a Levi graph (i < 3)."""


@dataclass(frozen=True)
class InducedCycleWitness:
    """
    Alternating certificate for an induced cycle of length 2 * len(lines).

    ``points[t]`` is the meet of ``lines[t]`` and ``lines[t+1]`` (cyclically),
    matching the traversal line, point, line, ..., point, back to the first
    line.  Validity is checked by validate_witness, not the constructor, so
    deliberately broken witnesses can be expressed in tests.
    """

    lines: tuple[int, ...]
    points: tuple[int, ...]

    @property
    def length(self) -> int:
        return 2 * len(self.lines)

    def canonical(self) -> InducedCycleWitness:
        """
        Rotation/reflection representative: smallest line first, second
        line smaller than the last.
        """
        i = len(self.lines)
        best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        for lines, points in (
            (self.lines, self.points),
            # reversed traversal: same first line, lines backwards, and
            # points shifted so points[t] still meets lines[t], lines[t+1]
            (self.lines[:1] + self.lines[:0:-1], self.points[::-1]),
        ):
            for r in range(i):
                cand = (lines[r:] + lines[:r], points[r:] + points[:r])
                if cand[0][0] == min(lines) and (best is None or cand < best):
                    best = cand
        assert best is not None
        return InducedCycleWitness(*best)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(
            {"lines": list(self.lines), "points": list(self.points)}, indent=indent
        )

    @classmethod
    def from_json(cls, text: str) -> InducedCycleWitness:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArrangementError(f"not valid JSON: {exc}") from None
        if not isinstance(doc, dict) or not {"lines", "points"} <= set(doc):
            raise ArrangementError("witness JSON needs 'lines' and 'points'")
        return cls(tuple(doc["lines"]), tuple(doc["points"]))


def validate_witness(arr: Arrangement, w: InducedCycleWitness) -> ValidationReport:
    """
    Check a witness against an arrangement, reporting every violated
    condition: shape, index range, distinctness, adjacency (each point on
    exactly its two cyclic neighbor lines), inducedness (no other incidence
    among chosen vertices), and agreement with the Levi-graph reading.

    Rotated or reflected witnesses are accepted; canonical form is a solver
    output convention, not a validity requirement.
    """
    checks: dict[str, bool] = {}
    failures: list[str] = []

    def fail(check: str, message: str) -> None:
        checks[check] = False
        failures.append(f"{check}: {message}")

    i = len(w.lines)
    checks["shape"] = True
    if len(w.points) != i:
        fail("shape", f"{i} lines but {len(w.points)} points")
    if i < 3:
        fail("shape", f"needs at least 3 lines, got {i}")
    if failures:
        return ValidationReport(checks, tuple(failures))

    checks["range"] = True
    for j in w.lines:
        if not (isinstance(j, int) and 0 <= j < arr.k):
            fail("range", f"unknown line {j!r}")
    for p in w.points:
        if not (isinstance(p, int) and 0 <= p < arr.s):
            fail("range", f"unknown point {p!r}")
    if failures:
        return ValidationReport(checks, tuple(failures))

    checks["distinctness"] = True
    if len(set(w.lines)) != i:
        fail("distinctness", "repeated line")
    if len(set(w.points)) != i:
        fail("distinctness", "repeated point")

    checks["adjacency"] = True
    for t in range(i):
        p, here, after = w.points[t], w.lines[t], w.lines[(t + 1) % i]
        on = arr.point_lines[p]
        if here not in on or after not in on:
            fail("adjacency", f"point {p} is not the meet of lines {here} and {after}")

    checks["inducedness"] = True
    chosen = set(w.lines)
    for t in range(i):
        p = w.points[t]
        extra = (arr.point_lines[p] & chosen) - {w.lines[t], w.lines[(t + 1) % i]}
        if extra:
            fail("inducedness", f"point {p} also lies on chosen line {min(extra)}")

    if not failures:
        # Independent reading: the alternating vertex set must induce
        # exactly the 2i cycle edges in the Levi graph.
        checks["levi-agreement"] = True
        g = build_levi(arr)
        pts, lns = set(w.points), set(w.lines)
        induced = [(p, j) for p, j in g.edges if p in pts and j in lns]
        if len(induced) != 2 * i:
            fail(
                "levi-agreement",
                f"vertex set induces {len(induced)} edges, not {2 * i}",
            )
    return ValidationReport(checks, tuple(failures))


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one existence query.  nodes counts visited search states."""

    status: str
    witness: InducedCycleWitness | None
    nodes: int


@dataclass(frozen=True)
class LongestResult:
    status: str  # found | no-induced-cycle | unknown
    i: int | None
    witness: InducedCycleWitness | None
    nodes: int

    @property
    def length(self) -> int | None:
        return None if self.i is None else 2 * self.i


@dataclass(frozen=True)
class CycleSpectrum:
    """Per-length results for i = 3 .. i_max."""

    results: dict[int, SearchResult]

    @property
    def found(self) -> tuple[int, ...]:
        return tuple(i for i, r in sorted(self.results.items()) if r.status == FOUND)

    @property
    def longest(self) -> int | None:
        return max(self.found, default=None)

    def to_json(self, indent: int | None = None) -> str:
        doc = {}
        for i, r in sorted(self.results.items()):
            entry: dict[str, object] = {"status": r.status}
            if r.witness is not None:
                entry["witness"] = {
                    "lines": list(r.witness.lines),
                    "points": list(r.witness.points),
                }
            doc[str(i)] = entry
        return json.dumps(doc, indent=indent)


class _BudgetHit(Exception):
    pass


class _Search:
    """
    Canonical line-sequence DFS over one arrangement.

    All incidence tests are bitmask operations: lmask[j] is the point set of
    line j, pmask[p] the line set through p, pair[a][b] the unique meet of
    lines a and b.
    """

    def __init__(self, point_lines: tuple) -> None:
        k = max((max(fs) for fs in point_lines if fs), default=-1) + 1
        s = len(point_lines)
        self.k, self.s = k, s
        self.lmask = [0] * k
        self.pmask = [0] * s
        pair = [[-1] * k for _ in range(k)]
        for p, fs in enumerate(point_lines):
            for j in fs:
                self.lmask[j] |= 1 << p
                self.pmask[p] |= 1 << j
            for a in fs:
                for b in fs:
                    if a != b:
                        pair[a][b] = p
        self.pair = pair
        self.line_points = [
            [p for p in range(s) if self.lmask[j] >> p & 1] for j in range(k)
        ]

    @classmethod
    def for_arrangement(cls, arr: Arrangement) -> _Search:
        return cls(arr.point_lines)

    def prefixes(self, i: int):
        """Root states (j1, p1, j2) in lexicographic order; j1 is the cycle
        minimum, so only j2 > j1 can follow."""
        if i > min(self.k, self.s):
            return
        for j1 in range(self.k):
            for p1 in self.line_points[j1]:
                rest = self.pmask[p1] >> (j1 + 1) << (j1 + 1)
                while rest:
                    low = rest & -rest
                    yield j1, p1, low.bit_length() - 1
                    rest ^= low

    def run_prefix(
        self, i: int, prefix: tuple[int, int, int], budget: int | None
    ) -> tuple[InducedCycleWitness | None, int, bool]:
        """
        Exhaust one root prefix.  Returns (first witness or None, nodes
        visited, budget_hit).
        """
        j1, p1, j2 = prefix
        self._i = i
        self._budget = budget
        self._nodes = 0
        self._j1 = j1
        if i == min(self.k, self.s) == 2:  # pragma: no cover - guarded upstream
            return None, 0, False
        try:
            w = self._rec(
                [j1, j2],
                [p1],
                (1 << j1) | (1 << j2),
                1 << p1,
                self.lmask[j1],
                self.lmask[j1] | self.lmask[j2],
            )
        except _BudgetHit:
            return None, self._nodes, True
        return w, self._nodes, False

    def _rec(
        self,
        seq: list[int],
        pts: list[int],
        chosen_lines: int,
        chosen_points: int,
        cover_prev: int,
        cover_all: int,
    ) -> InducedCycleWitness | None:
        self._nodes += 1
        if self._budget is not None and self._nodes > self._budget:
            raise _BudgetHit
        i, tip, j1 = self._i, seq[-1], self._j1
        if len(seq) == i:
            # close: the meet of the last and first lines must avoid every
            # interior line (which also forces it off all chosen points)
            if tip <= seq[1]:
                return None
            pc = self.pair[tip][j1]
            if pc >= 0 and self.pmask[pc] & chosen_lines == (1 << j1) | (1 << tip):
                return InducedCycleWitness(tuple(seq), tuple(pts + [pc]))
            return None

        final = len(seq) == i - 1
        remaining = i - len(seq) - 1  # lines still needed after the next one
        lmask, pmask = self.lmask, self.pmask
        avail = lmask[tip] & ~cover_prev
        while avail:
            pb = avail & -avail
            avail ^= pb
            p = pb.bit_length() - 1
            cands = pmask[p] >> (j1 + 1) << (j1 + 1)
            cands &= ~chosen_lines
            while cands:
                cb = cands & -cands
                cands ^= cb
                cand = cb.bit_length() - 1
                if lmask[cand] & chosen_points:
                    continue
                if not final:
                    if not lmask[cand] & ~cover_all & ~pb:
                        continue  # no exit point: cand would dead-end
                    if remaining > 1:
                        # lines placed after cand enter through points not
                        # yet chosen, so they must miss every point chosen
                        # so far including p
                        blocked = chosen_points | pb
                        pool = 0
                        for j in range(j1 + 1, self.k):
                            if (
                                not chosen_lines >> j & 1
                                and j != cand
                                and not lmask[j] & blocked
                            ):
                                pool += 1
                        if pool < remaining:
                            continue
                w = self._rec(
                    seq + [cand],
                    pts + [p],
                    chosen_lines | cb,
                    chosen_points | pb,
                    cover_all,
                    cover_all | lmask[cand],
                )
                if w is not None:
                    return w
        return None


_WORKER: _Search | None = None


def _init_worker(point_lines: tuple) -> None:
    global _WORKER
    _WORKER = _Search(point_lines)


def _prefix_task(args: tuple) -> tuple:
    i, prefix, budget = args
    assert _WORKER is not None
    w, nodes, hit = _WORKER.run_prefix(i, prefix, budget)
    return (None if w is None else (w.lines, w.points)), nodes, hit


def _check_i(i: int) -> None:
    if not isinstance(i, int) or i < 3:
        raise BadLength(
            f"induced cycles in a Levi graph have length 2i with i >= 3, got i={i}"
        )


def exists_cycle(
    arr: Arrangement,
    i: int,
    budget: int | None = None,
    threads: int = 1,
) -> SearchResult:
    """
    Decide whether the Levi graph of arr has an induced cycle of length 2i.

    Returns Found with a canonical witness, Absent after exhausting the
    canonical enumeration, or Unknown when some root prefix hit the node
    budget first.  With threads > 1 the root prefixes are distributed over a
    process pool; statuses and witnesses are identical to the serial run.
    """
    _check_i(i)
    if i > min(arr.k, arr.s):
        return SearchResult(ABSENT, None, 0)
    search = _Search.for_arrangement(arr)
    prefixes = list(search.prefixes(i))
    if threads <= 1:
        nodes = 0
        hit_any = False
        for prefix in prefixes:
            w, n, hit = search.run_prefix(i, prefix, budget)
            nodes += n
            hit_any |= hit
            if w is not None:
                return SearchResult(FOUND, w, nodes)
        return SearchResult(UNKNOWN if hit_any else ABSENT, None, nodes)

    tasks = [(i, prefix, budget) for prefix in prefixes]
    with multiprocessing.Pool(
        threads, initializer=_init_worker, initargs=(arr.point_lines,)
    ) as pool:
        outcomes = pool.map(_prefix_task, tasks)
    nodes = sum(n for _, n, _ in outcomes)
    for packed, _, _ in outcomes:  # prefix order = lexicographic = serial order
        if packed is not None:
            lines, points = packed
            return SearchResult(FOUND, InducedCycleWitness(lines, points), nodes)
    hit_any = any(hit for _, _, hit in outcomes)
    return SearchResult(UNKNOWN if hit_any else ABSENT, None, nodes)


def longest_cycle(
    arr: Arrangement,
    budget: int | None = None,
    threads: int = 1,
) -> LongestResult:
    """
    Longest induced cycle via a descending scan from i = min(k, s).

    The first Found wins.  An Unknown at any length aborts the scan (a
    longer cycle might exist beyond the budget); all-Absent means the Levi
    graph is an induced-cycle-free forest-like graph, reported as
    no-induced-cycle.
    """
    nodes = 0
    for i in range(min(arr.k, arr.s), 2, -1):
        r = exists_cycle(arr, i, budget=budget, threads=threads)
        nodes += r.nodes
        if r.status == FOUND:
            return LongestResult(FOUND, i, r.witness, nodes)
        if r.status == UNKNOWN:
            return LongestResult(UNKNOWN, None, None, nodes)
    return LongestResult(NO_INDUCED_CYCLE, None, None, nodes)


def spectrum(
    arr: Arrangement,
    i_max: int | None = None,
    budget: int | None = None,
    threads: int = 1,
) -> CycleSpectrum:
    """Existence per length for i = 3 .. i_max (default min(k, s))."""
    if i_max is None:
        i_max = min(arr.k, arr.s)
    results = {
        i: exists_cycle(arr, i, budget=budget, threads=threads)
        for i in range(3, i_max + 1)
    }
    return CycleSpectrum(results)
