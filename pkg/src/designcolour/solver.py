"""Exact decision procedures for c-colourability and chromatic numbers.

The solver is a backtracking search over point (or group) colour
assignments with constraint propagation and colour-symmetry breaking.  A
"not-colourable" verdict is only produced after the symmetry-reduced space
has been exhausted, so it is a certificate, not a heuristic answer.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .colouring import (
    Colouring,
    check_block_equitable,
    check_group_colouring,
    check_weak,
)
from .core import Design, DesignError, Grouping

MODES = ("weak", "block-equitable", "group-monochromatic", "group-equitable")

COLOURABLE = "colourable"
NOT_COLOURABLE = "not-colourable"
BUDGET_EXCEEDED = "budget-exceeded"


class BudgetExceededError(RuntimeError):
    def __init__(self, msg: str, nodes: int = 0):
        super().__init__(msg)
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    """Limits on the exhaustive search; node_limit counts assignments tried."""

    node_limit: Optional[int] = 100_000_000
    time_limit: Optional[float] = None

    def __post_init__(self) -> None:
        if self.node_limit is not None and self.node_limit <= 0:
            raise DesignError("node limit must be positive or None")
        if self.time_limit is not None and self.time_limit <= 0:
            raise DesignError("time limit must be positive or None")


@dataclass(frozen=True)
class SolveResult:
    status: str
    c: int
    mode: str
    witness: Optional[Colouring]
    nodes: int

    @property
    def colourable(self) -> bool:
        return self.status == COLOURABLE


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    witness: Colouring
    refutation: Optional[SolveResult]
    mode: str


class _Budget:
    __slots__ = ("node_limit", "deadline", "nodes")

    def __init__(self, budget: SearchBudget):
        self.node_limit = budget.node_limit
        self.deadline = (
            time.monotonic() + budget.time_limit if budget.time_limit else None
        )
        self.nodes = 0

    def spend(self) -> bool:
        """Account one node; False when the budget is exhausted."""
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            return False
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                return False
        return True


class _Exhausted(Exception):
    pass


class _Engine:
    """Backtracking colourer over 'not all equal' and counted constraints.

    weak constraints forbid a member set from being single-coloured;
    counted constraints bound every colour's count within a member set by
    [floor, cap].  Domains are bitmasks; forced assignments cascade.
    """

    def __init__(
        self,
        n: int,
        c: int,
        weak: list[tuple[int, ...]],
        counted: list[tuple[tuple[int, ...], int, int]],
        order: list[int],
        budget: _Budget,
    ):
        self.n = n
        self.c = c
        self.weak = weak
        self.counted = [m for m, _, _ in counted]
        self.caps = [cap for _, cap, _ in counted]
        self.floors = [fl for _, _, fl in counted]
        self.order = order
        self.budget = budget
        self.var_weak: list[list[int]] = [[] for _ in range(n)]
        for ci, members in enumerate(weak):
            for x in members:
                self.var_weak[x].append(ci)
        self.var_ctr: list[list[int]] = [[] for _ in range(n)]
        for ci, (members, _, _) in enumerate(counted):
            for x in members:
                self.var_ctr[x].append(ci)
        full = (1 << c) - 1
        self.colour = [-1] * n
        self.dom = [full] * n
        self.w_cnt = [[0] * c for _ in weak]
        self.w_ass = [0] * len(weak)
        self.t_cnt = [[0] * c for _ in counted]
        self.t_ass = [0] * len(counted)
        self.deficit = [c * fl for fl in self.floors]
        self.max_used = -1

    # trail entries: ("col", x), ("dom", x, old), ("w", ci, col), ("t", ci, col)

    def _strip(self, y: int, colr: int, trail: list, forced: list) -> bool:
        old = self.dom[y]
        new = old & ~(1 << colr)
        if new == old:
            return True
        if new == 0:
            return False
        trail.append(("dom", y, old))
        self.dom[y] = new
        if new & (new - 1) == 0:
            forced.append((y, new.bit_length() - 1))
        return True

    def _restrict(self, y: int, mask: int, trail: list, forced: list) -> bool:
        old = self.dom[y]
        new = old & mask
        if new == old:
            return True
        if new == 0:
            return False
        trail.append(("dom", y, old))
        self.dom[y] = new
        if new & (new - 1) == 0:
            forced.append((y, new.bit_length() - 1))
        return True

    def _assign(self, x0: int, colr0: int, trail: list) -> bool:
        forced = [(x0, colr0)]
        while forced:
            x, colr = forced.pop()
            if self.colour[x] != -1:
                if self.colour[x] != colr:
                    return False
                continue
            if not (self.dom[x] >> colr) & 1:
                return False
            self.colour[x] = colr
            trail.append(("col", x))
            if colr > self.max_used:
                trail.append(("max", self.max_used))
                self.max_used = colr
            for ci in self.var_weak[x]:
                cnt = self.w_cnt[ci]
                cnt[colr] += 1
                self.w_ass[ci] += 1
                trail.append(("w", ci, colr))
                members = self.weak[ci]
                size = len(members)
                if cnt[colr] == size:
                    return False
                if self.w_ass[ci] == size - 1 and cnt[colr] == size - 1:
                    for y in members:
                        if self.colour[y] == -1:
                            if not self._strip(y, colr, trail, forced):
                                return False
                            break
            for ci in self.var_ctr[x]:
                cnt = self.t_cnt[ci]
                fl = self.floors[ci]
                if cnt[colr] < fl:
                    self.deficit[ci] -= 1
                cnt[colr] += 1
                self.t_ass[ci] += 1
                trail.append(("t", ci, colr))
                if cnt[colr] > self.caps[ci]:
                    return False
                members = self.counted[ci]
                remaining = len(members) - self.t_ass[ci]
                if self.deficit[ci] > remaining:
                    return False
                if cnt[colr] == self.caps[ci]:
                    for y in members:
                        if self.colour[y] == -1:
                            if not self._strip(y, colr, trail, forced):
                                return False
                if self.deficit[ci] == remaining and remaining > 0:
                    need = 0
                    for cc in range(self.c):
                        if cnt[cc] < fl:
                            need |= 1 << cc
                    for y in members:
                        if self.colour[y] == -1:
                            if not self._restrict(y, need, trail, forced):
                                return False
        return True

    def _undo(self, trail: list, mark: int) -> None:
        while len(trail) > mark:
            entry = trail.pop()
            tag = entry[0]
            if tag == "col":
                self.colour[entry[1]] = -1
            elif tag == "dom":
                self.dom[entry[1]] = entry[2]
            elif tag == "w":
                ci, colr = entry[1], entry[2]
                self.w_cnt[ci][colr] -= 1
                self.w_ass[ci] -= 1
            elif tag == "t":
                ci, colr = entry[1], entry[2]
                cnt = self.t_cnt[ci]
                cnt[colr] -= 1
                self.t_ass[ci] -= 1
                if cnt[colr] < self.floors[ci]:
                    self.deficit[ci] += 1
            else:  # "max"
                self.max_used = entry[1]

    def search(self) -> Optional[list[int]]:
        """First solution in the engine's branching order, or None.

        Raises _Exhausted via the budget when limits run out.
        """
        trail: list = []
        if not self._dfs(0, trail):
            return None
        return list(self.colour)

    def _next_var(self, idx: int) -> int:
        order = self.order
        while idx < len(order) and self.colour[order[idx]] != -1:
            idx += 1
        return idx

    def _dfs(self, idx: int, trail: list) -> bool:
        idx = self._next_var(idx)
        if idx == len(self.order):
            return True
        x = self.order[idx]
        cap = min(self.max_used + 2, self.c)
        allowed = self.dom[x] & ((1 << cap) - 1)
        colr = 0
        while allowed:
            if allowed & 1:
                if not self.budget.spend():
                    raise _Exhausted
                mark = len(trail)
                if self._assign(x, colr, trail):
                    if self._dfs(idx + 1, trail):
                        return True
                self._undo(trail, mark)
            allowed >>= 1
            colr += 1
        return False


def _dedupe(seqs) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for s in seqs:
        t = tuple(sorted(s))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def _build_problem(
    d: Design, g: Optional[Grouping], c: int, mode: str
) -> tuple[int, list, list, list[int]]:
    """Translate a design and mode into engine constraints and an order.

    Returns (n_vars, weak, counted, decision_order).  For the
    group-monochromatic mode the variables are groups, not points.
    """
    if mode not in MODES:
        raise DesignError(f"unknown colouring mode {mode!r}")
    if mode in ("group-monochromatic", "group-equitable") and g is None:
        raise DesignError(f"mode {mode!r} requires a grouping")
    if mode == "group-monochromatic":
        assert g is not None
        gi = g.group_index
        weak = _dedupe({gi[p] for p in blk} for blk in d.blocks)
        degree = [0] * g.u
        for members in weak:
            for x in members:
                degree[x] += 1
        order = sorted(range(g.u), key=lambda x: (-degree[x], x))
        return g.u, weak, [], order
    n = d.v
    degree = d.point_degrees()
    order = sorted(range(n), key=lambda x: (-degree[x], x))
    if mode == "weak":
        return n, _dedupe(d.blocks), [], order
    if mode == "block-equitable":
        counted = [
            (blk, -(-len(blk) // c), len(blk) // c) for blk in _dedupe(d.blocks)
        ]
        return n, [], counted, order
    assert g is not None
    counted = [(grp, -(-len(grp) // c), len(grp) // c) for grp in g.groups]
    return n, _dedupe(d.blocks), counted, order


def _expand_group_witness(g: Grouping, group_colours: list[int], c: int) -> Colouring:
    assignment = [0] * g.v
    for gi, grp in enumerate(g.groups):
        for p in grp:
            assignment[p] = group_colours[gi]
    return Colouring(c, tuple(assignment))


def _checker(d: Design, g: Optional[Grouping], mode: str):
    if mode == "weak":
        return lambda col: check_weak(d, col)
    if mode == "block-equitable":
        return lambda col: check_block_equitable(d, col)
    kind = "monochromatic" if mode == "group-monochromatic" else "group-equitable"
    return lambda col: check_group_colouring(d, g, col, kind)


def decide_colourable(
    d: Design,
    g: Optional[Grouping],
    c: int,
    mode: str,
    budget: Optional[SearchBudget] = None,
) -> SolveResult:
    """Exact decision of c-colourability under the given mode.

    A colourable verdict carries the lexicographically least witness (in
    point-major order), so results are reproducible run to run.
    """
    if c < 1:
        raise DesignError("colour count must be at least 1")
    budget = budget or SearchBudget()
    tracker = _Budget(budget)
    n, weak, counted, order = _build_problem(d, g, c, mode)
    try:
        engine = _Engine(n, c, weak, counted, order, tracker)
        solution = engine.search()
        if solution is None:
            return SolveResult(NOT_COLOURABLE, c, mode, None, tracker.nodes)
        # Second pass in natural variable order yields the lexicographically
        # least witness; it exists, so this search is cheap.
        engine = _Engine(n, c, weak, counted, list(range(n)), tracker)
        solution = engine.search()
        assert solution is not None
    except _Exhausted:
        return SolveResult(BUDGET_EXCEEDED, c, mode, None, tracker.nodes)
    if mode == "group-monochromatic":
        assert g is not None
        witness = _expand_group_witness(g, solution, c)
    else:
        witness = Colouring(c, tuple(solution))
    report = _checker(d, g, mode)(witness)
    if not report.passed:
        raise AssertionError(f"solver produced an invalid witness: {report.violations[:3]}")
    return SolveResult(COLOURABLE, c, mode, witness, tracker.nodes)


def chromatic_number(
    d: Design,
    g: Optional[Grouping] = None,
    mode: str = "weak",
    budget: Optional[SearchBudget] = None,
) -> ChromaticResult:
    """Least c admitting a colouring in the given mode, with certificates.

    Only the weak and group-monochromatic notions have a well-defined
    minimum (equitable colourability is not monotone in c), so other modes
    are rejected.
    """
    if mode not in ("weak", "group-monochromatic"):
        raise DesignError(f"chromatic number is defined only for weak and group-monochromatic modes, not {mode!r}")
    budget = budget or SearchBudget()
    c = 1 if not d.blocks else 2
    refutation: Optional[SolveResult] = None
    if d.blocks and c == 2:
        # Trivial exhaustion certificate at one colour: any block is
        # monochromatic.
        refutation = decide_colourable(d, g, 1, mode, budget)
        if refutation.status == COLOURABLE:
            raise AssertionError("a design with blocks cannot be 1-colourable")
    limit = max(d.v, 1) if mode == "weak" else (g.u if g is not None else 1)
    while True:
        result = decide_colourable(d, g, c, mode, budget)
        if result.status == COLOURABLE:
            assert result.witness is not None
            return ChromaticResult(c, result.witness, refutation, mode)
        if result.status == BUDGET_EXCEEDED:
            raise BudgetExceededError(
                f"budget exhausted while deciding {c}-colourability", result.nodes
            )
        refutation = result
        c += 1
        if c > limit + 1:
            raise AssertionError("search exceeded the rainbow colouring bound")


def upper_bound_colouring(d: Design, g: Grouping) -> Colouring:
    """Constructive colouring certifying chi_M <= ceil(u / (k_min - 1)).

    Groups are split into sets of at most k_min - 1 groups and each set is
    coloured with one colour; every block then meets two sets because it
    meets at least k_min groups.
    """
    k_min = d.k
    if k_min < 2:
        if d.blocks:
            raise DesignError("blocks of size below 2 are not supported")
        return Colouring(1, tuple(0 for _ in range(d.v)))
    chunk = k_min - 1
    n_colours = -(-g.u // chunk)
    if d.blocks and n_colours < 2:
        # A valid GDD with u <= k_min - 1 groups cannot have blocks; kept
        # only so malformed inputs fail loudly downstream.
        n_colours = 2
    assignment = [0] * d.v
    for gi, grp in enumerate(g.groups):
        for p in grp:
            assignment[p] = gi // chunk
    return Colouring(max(n_colours, 1), tuple(assignment))
