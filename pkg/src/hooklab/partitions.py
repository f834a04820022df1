"""Integer partitions with hook, arm, leg and content statistics.

Conventions (all 1-based):
  * cell (i, j) means row i, column j of the Young diagram;
  * hook(i, j) = parts[i] + conj[j] - i - j + 1, arm + leg + 1;
  * content(i, j) = j - i;
  * the symplectic and orthogonal contents follow the two-case row/column
    formulas, reading any index beyond the diagram as 0.

Partitions of n are enumerated in reverse-lexicographic order, (n) first and
(1, ..., 1) last.  That order is part of the contract: checks report the
first counterexample they meet, so witnesses are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import BoundOverflow


class Partition:
    """Immutable weakly-decreasing positive parts."""

    __slots__ = ("parts", "_conj")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts
        self._conj = None

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def render(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def conjugate(self) -> Partition:
        if self._conj is None:
            if not self.parts:
                self._conj = self
            else:
                width = self.parts[0]
                conj = [0] * width
                for p in self.parts:
                    for j in range(p):
                        conj[j] += 1
                self._conj = Partition(conj)
        return self._conj

    # -- per-cell statistics ------------------------------------------------

    def cells(self):
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def hook(self, i: int, j: int) -> int:
        conj = self.conjugate().parts
        return self.parts[i - 1] + conj[j - 1] - i - j + 1

    def hook_lengths(self) -> list[int]:
        """All hook lengths, row by row."""
        conj = self.conjugate().parts
        out = []
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                out.append(p + conj[j - 1] - i - j + 1)
        return out

    def first_column_hooks(self) -> tuple[int, ...]:
        """Strictly decreasing hook lengths of column 1: parts[i] + len - i."""
        L = len(self.parts)
        return tuple(p + L - i for i, p in enumerate(self.parts, start=1))

    def contains_hook(self, t: int) -> bool:
        """Whether some cell has hook length exactly t.

        Uses the first-column characterization: t occurs as a hook length
        iff some first-column hook b >= t has b - t absent from the
        first-column hook set.  Equivalent to scanning every cell.
        """
        if t <= 0:
            return False
        fch = self.first_column_hooks()
        fset = set(fch)
        for b in fch:
            if b >= t and (b - t) not in fset:
                return True
        return False

    def symplectic_content(self, i: int, j: int) -> int:
        parts = self.parts
        conj = self.conjugate().parts
        if i > j:
            pi = parts[i - 1] if i <= len(parts) else 0
            pj = parts[j - 1] if j <= len(parts) else 0
            return pi + pj - i - j + 2
        ci = conj[i - 1] if i <= len(conj) else 0
        cj = conj[j - 1] if j <= len(conj) else 0
        return i + j - ci - cj

    def orthogonal_content(self, i: int, j: int) -> int:
        parts = self.parts
        conj = self.conjugate().parts
        if i >= j:
            pi = parts[i - 1] if i <= len(parts) else 0
            pj = parts[j - 1] if j <= len(parts) else 0
            return pi + pj - i - j
        ci = conj[i - 1] if i <= len(conj) else 0
        cj = conj[j - 1] if j <= len(conj) else 0
        return i + j - ci - cj - 2

    # -- aggregates -----------------------------------------------------------

    def dim_sytx(self) -> int:
        """Number of standard fillings, n! / prod(hooks); always exact."""
        num = math.factorial(self.n)
        for h in self.hook_lengths():
            num //= h
        return num

    def diagonal_hooks(self) -> tuple[int, ...]:
        """Hook lengths h(1,1), h(2,2), ... down the main diagonal."""
        conj = self.conjugate().parts
        out = []
        i = 1
        while i <= len(self.parts) and self.parts[i - 1] >= i:
            out.append(self.parts[i - 1] + conj[i - 1] - 2 * i + 1)
            i += 1
        return tuple(out)

    def squares_count(self) -> int:
        """Sum of min(i, j) over cells == dot(<1,2,...>, diagonal hooks)."""
        return sum(min(i, j) for i, j in self.cells())

    def squares_count_by_diagonal(self) -> int:
        return sum(i * h for i, h in enumerate(self.diagonal_hooks(), start=1))

    def squares_count_geometric(self) -> int:
        """Number of k-by-k cell blocks contained in the diagram, all k >= 1."""
        total = 0
        k = 1
        while True:
            found = 0
            for i, p in enumerate(self.parts, start=1):
                if i >= k and p >= k:
                    found += p - k + 1
            if not found:
                break
            total += found
            k += 1
        return total

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def part_statistics(self) -> "PartStatistics":
        f1 = sum(1 for p in self.parts if p == 1)
        g1 = len(set(self.parts))
        d1 = sum(1 for h in self.hook_lengths() if h == 1)
        return PartStatistics(
            f1=f1,
            g1=g1,
            d1=d1,
            multiplicities=self.multiplicities(),
            odd=sum(1 for p in self.parts if p % 2),
            even=sum(1 for p in self.parts if p % 2 == 0),
            length=len(self.parts),
        )


@dataclass(frozen=True)
class PartStatistics:
    """f1 = multiplicity of part 1, g1 = distinct part values, d1 = cells of
    hook length 1 (always equal to g1), plus the multiplicity map k_j, counts
    of odd and even parts, and the length."""

    f1: int
    g1: int
    d1: int
    multiplicities: dict[int, int]
    odd: int
    even: int
    length: int


@dataclass(frozen=True)
class CellStats:
    i: int
    j: int
    arm: int
    leg: int
    hook: int
    content: int
    c_sp: int
    c_orth: int


def cell_stats(part: Partition) -> list[CellStats]:
    parts = part.parts
    conj = part.conjugate().parts
    out = []
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            arm = p - j
            leg = conj[j - 1] - i
            out.append(
                CellStats(
                    i=i,
                    j=j,
                    arm=arm,
                    leg=leg,
                    hook=arm + leg + 1,
                    content=j - i,
                    c_sp=part.symplectic_content(i, j),
                    c_orth=part.orthogonal_content(i, j),
                )
            )
    return out


EMPTY = Partition(())


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order, largest first."""
    if n < 0:
        raise ValueError("partitions of a negative integer")
    if n == 0:
        yield EMPTY
        return
    parts = [n]
    while True:
        yield Partition(parts)
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        parts[k] -= 1
        val = parts[k]
        rem = n - sum(parts[: k + 1])
        parts = parts[: k + 1]
        while rem:
            chunk = min(val, rem)
            parts.append(chunk)
            rem -= chunk


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[Partition, ...]:
    """Cached tuple of partitions of n (reverse-lexicographic)."""
    return tuple(partitions_of(n))


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via the pentagonal-number recurrence (independent of enumeration)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def is_t_core(part: Partition, t: int) -> bool:
    """True iff no cell of the diagram has hook length exactly t."""
    if t <= 0:
        raise ValueError("core parameter must be positive")
    return not part.contains_hook(t)


def hook_part_census(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """Over all partitions of n: (count of parts equal to i, count of hooks equal to i)."""
    parts_count: dict[int, int] = {}
    hooks_count: dict[int, int] = {}
    for lam in partition_list(n):
        for p in lam.parts:
            parts_count[p] = parts_count.get(p, 0) + 1
        for h in lam.hook_lengths():
            hooks_count[h] = hooks_count.get(h, 0) + 1
    return parts_count, hooks_count


def rr_sets(n: int) -> tuple[list[Partition], list[Partition]]:
    """(A_n, B_n): parts pairwise differing by >= 2, and parts congruent to
    1 or 4 mod 5.  The two lists are equinumerous for every n."""
    a_set = []
    b_set = []
    for lam in partition_list(n):
        ps = lam.parts
        if all(ps[i] - ps[i + 1] >= 2 for i in range(len(ps) - 1)):
            a_set.append(lam)
        if all(p % 5 in (1, 4) for p in ps):
            b_set.append(lam)
    return a_set, b_set


# ----- simultaneous cores ------------------------------------------------------


@dataclass(frozen=True)
class CoreFamily:
    s: int
    members: tuple[Partition, ...]

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(m.n for m in self.members)

    @property
    def max_size(self) -> int:
        return max(self.sizes) if self.members else 0

    @property
    def total_size(self) -> int:
        return sum(self.sizes)


def sss_core_size_bound(s: int) -> int:
    """Exact maximum size of an (s, s+1)-core: (s^2-1)((s+1)^2-1)/24."""
    return (s * s - 1) * ((s + 1) * (s + 1) - 1) // 24


def _semigroup_gaps(s: int) -> list[int]:
    """Positive integers not representable as x*s + y*(s+1), x, y >= 0."""
    frob = s * (s + 1) - s - (s + 1)
    if frob < 1:
        return []
    reachable = [False] * (frob + 1)
    reachable[0] = True
    for v in range(1, frob + 1):
        if (v >= s and reachable[v - s]) or (v >= s + 1 and reachable[v - s - 1]):
            reachable[v] = True
    return [v for v in range(1, frob + 1) if not reachable[v]]


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    """Partition whose first-column hook set is the given set of positive ints."""
    desc = sorted(beta, reverse=True)
    L = len(desc)
    return Partition([b - (L - idx) for idx, b in enumerate(desc, start=1)])


def enumerate_sss_cores(s: int, method: str = "beta", budget: int = 5_000_000) -> CoreFamily:
    """All partitions that are simultaneously s-, (s+1)- and (s+2)-cores.

    method="beta" walks first-column hook sets directly: such sets are the
    subsets of the numerical-semigroup gaps of <s, s+1> that stay closed
    under subtracting s, s+1 and s+2.  Complete by construction and fast.

    method="filter" brute-forces every partition of every n up to the exact
    (s, s+1)-core size bound and keeps the triple cores; transparently
    correct, used to cross-validate the beta walk at small s.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if method == "beta":
        gaps = _semigroup_gaps(s)
        if 2 ** len(gaps) > budget:
            raise BoundOverflow(
                f"beta enumeration needs 2^{len(gaps)} subset tests, over budget {budget}"
            )
        steps = (s, s + 1, s + 2)
        members = []
        m = len(gaps)
        for mask in range(1 << m):
            chosen = [gaps[i] for i in range(m) if mask >> i & 1]
            cset = set(chosen)
            ok = True
            for bval in chosen:
                for st in steps:
                    if bval >= st and (bval - st) not in cset:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                members.append(_partition_from_beta(tuple(chosen)))
        members.sort(key=lambda p: (p.n, tuple(-x for x in p.parts)))
        return CoreFamily(s, tuple(members))
    if method == "filter":
        bound = sss_core_size_bound(s)
        total = sum(partition_count(k) for k in range(bound + 1))
        if total > budget:
            raise BoundOverflow(
                f"filter enumeration would scan {total} partitions, over budget {budget}"
            )
        members = []
        for size in range(bound + 1):
            for lam in partitions_of(size):
                if (
                    is_t_core(lam, s)
                    and is_t_core(lam, s + 1)
                    and is_t_core(lam, s + 2)
                ):
                    members.append(lam)
        members.sort(key=lambda p: (p.n, tuple(-x for x in p.parts)))
        return CoreFamily(s, tuple(members))
    raise ValueError(f"unknown enumeration method {method!r}")
