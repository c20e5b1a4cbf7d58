"""Block designs, groupings and packings, with exact structural validation.

Points are always the integers 0..v-1.  A design together with a grouping
(a partition of the points) forms a group divisible design; a design alone
is validated either as a balanced incomplete block design (every pair
covered exactly lambda times) or as a packing (every pair covered at most
lambda times).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

Block = tuple[int, ...]
Pair = tuple[int, int]


class DesignError(ValueError):
    """A design, grouping or colouring is structurally malformed."""


class UnsupportedParameterError(DesignError):
    """The requested parameters are outside the supported range."""


@dataclass(frozen=True)
class Design:
    """A block design on points 0..v-1.

    Blocks are stored sorted internally and in lexicographic order overall,
    so equal designs compare equal and serialize identically.  ``k`` is the
    common block size; mixed block sizes are tolerated (``uniform`` is then
    False and ``k`` reports the minimum size).
    """

    v: int
    blocks: tuple[Block, ...]
    lambda_: int = 1

    def __post_init__(self) -> None:
        if self.v < 0:
            raise DesignError("point count must be non-negative")
        if self.lambda_ < 1:
            raise DesignError("pair multiplicity index must be a positive integer")
        canon = []
        for raw in self.blocks:
            blk = tuple(sorted(raw))
            if len(blk) < 2:
                raise DesignError(f"block {tuple(raw)!r} has fewer than two points")
            if len(set(blk)) != len(blk):
                raise DesignError(f"block {tuple(raw)!r} has a repeated point")
            if blk[0] < 0 or blk[-1] >= self.v:
                raise DesignError(f"block {tuple(raw)!r} out of range for v={self.v}")
            canon.append(blk)
        canon.sort()
        object.__setattr__(self, "blocks", tuple(canon))

    @property
    def k(self) -> int:
        """Common (minimum, if mixed) block size; 0 for an empty block list."""
        return min((len(b) for b in self.blocks), default=0)

    @property
    def uniform(self) -> bool:
        sizes = {len(b) for b in self.blocks}
        return len(sizes) <= 1

    @property
    def b(self) -> int:
        return len(self.blocks)

    def pair_multiplicities(self) -> dict[Pair, int]:
        """Coverage count for every pair that occurs in at least one block."""
        counts: dict[Pair, int] = {}
        for blk in self.blocks:
            for pair in combinations(blk, 2):
                counts[pair] = counts.get(pair, 0) + 1
        return counts

    def point_degrees(self) -> list[int]:
        deg = [0] * self.v
        for blk in self.blocks:
            for p in blk:
                deg[p] += 1
        return deg


@dataclass(frozen=True)
class Grouping:
    """A partition of the points 0..v-1 into groups.

    Groups are stored sorted internally and ordered by their least point.
    """

    v: int
    groups: tuple[tuple[int, ...], ...]
    group_index: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        canon = sorted(tuple(sorted(g)) for g in self.groups)
        seen: list[int] = [-1] * self.v
        total = 0
        for gi, grp in enumerate(canon):
            if not grp:
                raise DesignError("empty group")
            for p in grp:
                if p < 0 or p >= self.v:
                    raise DesignError(f"group point {p} out of range for v={self.v}")
                if seen[p] != -1:
                    raise DesignError(f"point {p} occurs in two groups")
                seen[p] = gi
                total += 1
        if total != self.v:
            missing = [p for p in range(self.v) if seen[p] == -1]
            raise DesignError(f"groups do not cover points {missing[:5]}")
        object.__setattr__(self, "groups", tuple(canon))
        object.__setattr__(self, "group_index", tuple(seen))

    @property
    def u(self) -> int:
        return len(self.groups)

    @property
    def group_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    @property
    def uniform_size(self) -> Optional[int]:
        """The common group size, or None if groups have mixed sizes."""
        sizes = set(self.group_sizes)
        return sizes.pop() if len(sizes) == 1 else None

    @classmethod
    def singletons(cls, v: int) -> "Grouping":
        """The trivial grouping with one point per group."""
        return cls(v, tuple((p,) for p in range(v)))


@dataclass(frozen=True)
class LeaveGraph:
    """The graph of pairs left uncovered by a packing with lambda = 1."""

    v: int
    edges: frozenset[Pair]

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.kind}: {self.witness}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    details: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self) -> bool:
        return self.passed


def admissible(v_or_u: int, g: int, k: int, lambda_: int) -> bool:
    """Divisibility conditions necessary for a design to exist.

    With g=1 this checks the two classical conditions for a
    BIBD(v, k, lambda); otherwise it checks the two conditions for a
    uniform k-GDD with u groups of size g.
    """
    if v_or_u <= 0 or g <= 0 or k < 2 or lambda_ < 1:
        raise DesignError("arguments must be positive and k >= 2")
    if g == 1:
        v = v_or_u
        return (lambda_ * (v - 1)) % (k - 1) == 0 and (
            lambda_ * v * (v - 1)
        ) % (k * (k - 1)) == 0
    u = v_or_u
    return (lambda_ * g * (u - 1)) % (k - 1) == 0 and (
        lambda_ * u * (u - 1) * g * g
    ) % (k * (k - 1)) == 0


def validate_bibd(d: Design) -> ValidationReport:
    """Check that every unordered pair of points occurs in exactly lambda_ blocks."""
    violations: list[Violation] = []
    if not d.uniform:
        violations.append(Violation("nonuniform-blocks", tuple(sorted({len(b) for b in d.blocks}))))
    counts = d.pair_multiplicities()
    for pair in combinations(range(d.v), 2):
        got = counts.get(pair, 0)
        if got != d.lambda_:
            violations.append(Violation("pair-multiplicity", (pair, got)))
    details = {
        "v": d.v,
        "k": d.k,
        "lambda": d.lambda_,
        "blocks": d.b,
        "admissible": admissible(d.v, 1, d.k, d.lambda_) if d.v >= 2 and d.k >= 2 else False,
    }
    return ValidationReport(tuple(violations), details)


def validate_gdd(d: Design, g: Grouping) -> ValidationReport:
    """Check the group divisible design axioms.

    Every pair of points from distinct groups must occur in exactly lambda_
    blocks, and no block may contain two points of one group.
    """
    if g.v != d.v:
        raise DesignError("grouping is over a different point count")
    violations: list[Violation] = []
    gi = g.group_index
    for bi, blk in enumerate(d.blocks):
        used = {}
        for p in blk:
            grp = gi[p]
            if grp in used:
                violations.append(Violation("within-group-pair-in-block", (bi, blk, (used[grp], p))))
            else:
                used[grp] = p
    counts = d.pair_multiplicities()
    for pair in combinations(range(d.v), 2):
        cross = gi[pair[0]] != gi[pair[1]]
        got = counts.get(pair, 0)
        if cross and got != d.lambda_:
            violations.append(Violation("cross-pair-multiplicity", (pair, got)))
    uniform = g.uniform_size is not None
    details = {
        "v": d.v,
        "k": d.k,
        "lambda": d.lambda_,
        "blocks": d.b,
        "u": g.u,
        "uniform-groups": uniform,
    }
    if uniform and d.k >= 2:
        details["admissible"] = admissible(g.u, g.uniform_size, d.k, d.lambda_)
    return ValidationReport(tuple(violations), details)


def validate_packing(d: Design) -> tuple[ValidationReport, Optional[LeaveGraph]]:
    """Check that no pair exceeds multiplicity lambda_; return the leave for lambda_=1."""
    violations: list[Violation] = []
    if not d.uniform:
        violations.append(Violation("nonuniform-blocks", tuple(sorted({len(b) for b in d.blocks}))))
    counts = d.pair_multiplicities()
    for pair, got in sorted(counts.items()):
        if got > d.lambda_:
            violations.append(Violation("pair-multiplicity", (pair, got)))
    leave = None
    if d.lambda_ == 1:
        edges = frozenset(
            pair for pair in combinations(range(d.v), 2) if pair not in counts
        )
        leave = LeaveGraph(d.v, edges)
    details = {"v": d.v, "k": d.k, "lambda": d.lambda_, "blocks": d.b, "size": d.b}
    return ValidationReport(tuple(violations), details), leave


def is_transversal(d: Design, g: Grouping) -> bool:
    """True when the GDD has k groups and every block meets every group once."""
    k = d.k
    if not d.uniform or g.u != k or k == 0:
        return False
    gi = g.group_index
    for blk in d.blocks:
        if len({gi[p] for p in blk}) != k:
            return False
    return True
