"""Point colourings of designs and exact monochrome-pair counting.

All proportions are exact rationals: several downstream arguments hinge on
exact equalities between proportions, so floating point is never used.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, log2
from typing import Optional

from .core import Design, DesignError, Grouping, ValidationReport, Violation


class InstanceTooLargeError(DesignError):
    """An exhaustive enumeration would exceed the configured guard."""


@dataclass(frozen=True)
class Colouring:
    """A total assignment of one of c colours to every point.

    Colour indices lie in [0, c); the palette may be larger than the set of
    colours actually used.
    """

    c: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.c < 1:
            raise DesignError("colour count must be at least 1")
        for p, col in enumerate(self.assignment):
            if not 0 <= col < self.c:
                raise DesignError(f"point {p} has colour {col} outside [0, {self.c})")
        object.__setattr__(self, "assignment", tuple(self.assignment))

    @property
    def v(self) -> int:
        return len(self.assignment)

    def colour_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.c)]
        for p, col in enumerate(self.assignment):
            classes[col].append(p)
        return classes

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.c
        for col in self.assignment:
            sizes[col] += 1
        return sizes

    @classmethod
    def from_classes(cls, c: int, classes, v: Optional[int] = None) -> "Colouring":
        """Build a colouring from per-colour point lists."""
        if v is None:
            v = sum(len(cl) for cl in classes)
        assignment = [-1] * v
        for col, cl in enumerate(classes):
            for p in cl:
                if assignment[p] != -1:
                    raise DesignError(f"point {p} coloured twice")
                assignment[p] = col
        if any(a == -1 for a in assignment):
            raise DesignError("colour classes do not cover all points")
        return cls(c, tuple(assignment))


@dataclass(frozen=True)
class PairStats:
    """Monochrome / non-monochrome pair counts with the exact proportion."""

    nm: int
    m: int
    pm: Fraction

    @property
    def total(self) -> int:
        return self.nm + self.m


def pair_stats_equitable(mu: int, c: int) -> PairStats:
    """Pair statistics of a point-equitable c-colouring of a mu-element set.

    With mu = alpha*c + beta (0 <= beta < c), beta colour classes have
    alpha+1 elements and the rest have alpha.  The monochrome count is the
    minimum over all c-colourings of the set.
    """
    if mu < 2:
        raise DesignError("set size must be at least 2")
    if c < 2:
        raise DesignError("colour count must be at least 2")
    alpha, beta = divmod(mu, c)
    nm2 = alpha * (alpha * c + 2 * beta) * (c - 1) + beta * (beta - 1)
    m2 = alpha * (alpha - 1) * c + 2 * alpha * beta
    if nm2 % 2 or m2 % 2:
        raise AssertionError("pair counts must be integers")
    nm, m = nm2 // 2, m2 // 2
    assert nm + m == comb(mu, 2)
    return PairStats(nm, m, Fraction(2 * m, mu * (mu - 1)))


def _check_cover(d: Design, col: Colouring) -> None:
    if col.v != d.v:
        raise DesignError("colouring is over a different point count")


def check_weak(d: Design, col: Colouring) -> ValidationReport:
    """Pass iff no block is contained in a single colour class."""
    _check_cover(d, col)
    a = col.assignment
    violations = [
        Violation("monochromatic-block", (bi, blk))
        for bi, blk in enumerate(d.blocks)
        if len({a[p] for p in blk}) == 1
    ]
    return ValidationReport(tuple(violations), {"mode": "weak", "c": col.c})


def check_block_equitable(d: Design, col: Colouring) -> ValidationReport:
    """Pass iff every block has floor(k/c) or ceil(k/c) points of every colour.

    The bound is quantified over the whole palette, so a colour that never
    appears still fails a block when floor(k/c) >= 1.
    """
    _check_cover(d, col)
    a = col.assignment
    c = col.c
    violations = []
    for bi, blk in enumerate(d.blocks):
        k = len(blk)
        lo, hi = k // c, -(-k // c)
        counts = [0] * c
        for p in blk:
            counts[a[p]] += 1
        for colr, n in enumerate(counts):
            if not lo <= n <= hi:
                violations.append(Violation("block-colour-count", (bi, blk, colr, n)))
    return ValidationReport(tuple(violations), {"mode": "block-equitable", "c": c})


def check_group_colouring(
    d: Design, g: Grouping, col: Colouring, mode: str
) -> ValidationReport:
    """Weak colouring check plus a per-group condition.

    mode "monochromatic": every group single-coloured.
    mode "group-equitable": every group of size s has floor(s/c) or
    ceil(s/c) points of each colour.
    """
    if mode not in ("monochromatic", "group-equitable"):
        raise DesignError(f"unknown group colouring mode {mode!r}")
    _check_cover(d, col)
    if g.v != d.v:
        raise DesignError("grouping is over a different point count")
    a = col.assignment
    violations = list(check_weak(d, col).violations)
    for gi, grp in enumerate(g.groups):
        if mode == "monochromatic":
            cols = {a[p] for p in grp}
            if len(cols) > 1:
                violations.append(Violation("group-not-monochromatic", (gi, grp)))
        else:
            s = len(grp)
            lo, hi = s // col.c, -(-s // col.c)
            counts = [0] * col.c
            for p in grp:
                counts[a[p]] += 1
            for colr, n in enumerate(counts):
                if not lo <= n <= hi:
                    violations.append(Violation("group-colour-count", (gi, grp, colr, n)))
    return ValidationReport(tuple(violations), {"mode": f"group-{mode}", "c": col.c})


def count_monochrome_cross_pairs(
    d_or_v, col: Colouring, g: Optional[Grouping] = None
) -> PairStats:
    """Exact monochrome-pair counts over a point set.

    With a grouping, only pairs of points from distinct groups are counted;
    otherwise all pairs.  The design argument is only used for its point
    count, so a bare integer is accepted.
    """
    v = d_or_v.v if isinstance(d_or_v, Design) else int(d_or_v)
    if col.v != v:
        raise DesignError("colouring is over a different point count")
    a = col.assignment
    mono = total = 0
    if g is None:
        for p, q in combinations(range(v), 2):
            total += 1
            mono += a[p] == a[q]
    else:
        if g.v != v:
            raise DesignError("grouping is over a different point count")
        gi = g.group_index
        for p, q in combinations(range(v), 2):
            if gi[p] != gi[q]:
                total += 1
                mono += a[p] == a[q]
    pm = Fraction(mono, total) if total else Fraction(0)
    return PairStats(total - mono, mono, pm)


def brute_min_monochrome(
    d: Design, g: Grouping, c: int, limit_bits: float = 24.0
) -> tuple[int, Colouring]:
    """Exact minimum of cross-group monochrome pairs over all c-colourings.

    Exhaustive, with colour symmetry broken by forcing the first occurrence
    of each colour into ascending order.  Returns the minimum together with
    the lexicographically least colouring attaining it.  Guarded so that
    v*log2(c) stays within limit_bits.
    """
    if c < 1:
        raise DesignError("colour count must be at least 1")
    v = d.v
    if g.v != v:
        raise DesignError("grouping is over a different point count")
    if c > 1 and v * log2(c) > limit_bits:
        raise InstanceTooLargeError(
            f"enumerating {c}^{v} colourings exceeds the {limit_bits}-bit guard"
        )
    gi = g.group_index
    u = g.u
    # colour_totals[colr] and per-group counts give the monochrome delta of
    # an assignment in O(1).
    colour_totals = [0] * c
    group_counts = [[0] * c for _ in range(u)]
    assignment = [0] * v
    best = comb(v, 2) + 1
    best_assignment: Optional[tuple[int, ...]] = None

    def rec(p: int, used: int, mono: int) -> None:
        nonlocal best, best_assignment
        # Counts only grow, so a partial count at the current best can no
        # longer improve on it; the first colouring reaching each new best
        # in enumeration order is the lexicographically least one.
        if mono >= best:
            return
        if p == v:
            best = mono
            best_assignment = tuple(assignment)
            return
        grp = gi[p]
        for colr in range(min(used + 1, c)):
            delta = colour_totals[colr] - group_counts[grp][colr]
            if mono + delta >= best:
                continue
            assignment[p] = colr
            colour_totals[colr] += 1
            group_counts[grp][colr] += 1
            rec(p + 1, max(used, colr + 1), mono + delta)
            colour_totals[colr] -= 1
            group_counts[grp][colr] -= 1
        assignment[p] = 0

    rec(0, 0, 0)
    assert best_assignment is not None
    return best, Colouring(c, best_assignment)
