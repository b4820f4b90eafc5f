"""Fillings of partition diagrams and their statistics.

A filling lists its rows bottom to top (French convention).  The
semistandard condition: rows weakly increase rightward, columns strictly
increase upward.  A semistandard filling is quasi-Yamanouchi when, for
every value i >= 2 that appears, some instance of i sits in a strictly
higher row than some instance of i - 1.

Quasi-Yamanouchi fillings are enumerated through the standard fillings:
relabelling the i-th run of a standard filling to i (destandardization)
is a bijection onto the quasi-Yamanouchi fillings of the same shape, and
a filling with k runs lands on one with largest entry k.
"""

from __future__ import annotations

from typing import Iterable

from .partition import Partition


def _as_partition(shape) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(shape)


class Tableau:
    """A filling of a partition diagram, rows stored bottom to top."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows: Iterable[Iterable[int]] = ()) -> None:
        rws = [tuple(int(v) for v in row) for row in rows]
        while rws and not rws[-1]:
            rws.pop()
        self.shape = Partition(len(r) for r in rws)  # validates the profile
        for row in rws:
            for v in row:
                if v < 1:
                    raise ValueError("entries must be positive integers")
        self.rows = tuple(rws)

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Rows bottom to top separated by "/", entries comma-separated."""
        text = text.strip()
        if not text:
            return cls()
        return cls(
            tuple(int(v) for v in chunk.split(",")) if chunk else ()
            for chunk in text.split("/")
        )

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def max_entry(self) -> int:
        return max((max(row) for row in self.rows), default=0)

    def weight(self, upto: int | None = None) -> tuple[int, ...]:
        """Multiplicity vector of the entries 1..upto."""
        k = upto if upto is not None else self.max_entry
        out = [0] * k
        for row in self.rows:
            for v in row:
                if v <= k:
                    out[v - 1] += 1
        return tuple(out)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for lower, upper in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(lower, upper)):
                return False
        return True

    def is_standard(self) -> bool:
        if not self.is_semistandard():
            return False
        entries = sorted(v for row in self.rows for v in row)
        return entries == list(range(1, self.size + 1))

    def is_quasi_yamanouchi(self) -> bool:
        if not self.is_semistandard():
            return False
        lowest: dict[int, int] = {}
        highest: dict[int, int] = {}
        for j, row in enumerate(self.rows, 1):
            for v in row:
                lowest.setdefault(v, j)
                highest[v] = j
        for v in highest:
            if v > 1 and (v - 1 not in lowest or highest[v] <= lowest[v - 1]):
                return False
        return True

    def descent_set(self) -> set[int]:
        """Positions i with i + 1 strictly above i; a non-standard filling
        is measured through its standardization."""
        t = self if self.is_standard() else self.standardize()
        row_of = {}
        for j, row in enumerate(t.rows):
            for v in row:
                row_of[v] = j
        return {i for i in range(1, t.size) if row_of[i + 1] > row_of[i]}

    def des(self) -> int:
        return len(self.descent_set())

    def maj(self) -> int:
        return sum(self.descent_set())

    def charge(self) -> int:
        """Sum over entries of ch(i), where ch(1) = 0 and ch(i+1) is ch(i),
        incremented exactly when i is a descent."""
        dset = self.descent_set()
        total = level = 0
        for i in range(1, self.size + 1):
            total += level
            if i in dset:
                level += 1
        return total

    def runs(self) -> list[list[int]]:
        """Maximal blocks of consecutive entries between descents."""
        if not self.is_standard():
            raise ValueError("runs are defined for standard fillings")
        if self.size == 0:
            return []
        dset = self.descent_set()
        out: list[list[int]] = [[]]
        for v in range(1, self.size + 1):
            out[-1].append(v)
            if v in dset:
                out.append([])
        return out

    def destandardize(self) -> "Tableau":
        """Send every entry of the i-th run to i.

        The result is quasi-Yamanouchi with largest entry equal to the
        number of runs, and standardize() inverts the map.
        """
        if not self.is_standard():
            raise ValueError("destandardization applies to standard fillings")
        dset = self.descent_set()
        run_of = [0] * (self.size + 1)
        run = 1
        for v in range(1, self.size + 1):
            run_of[v] = run
            if v in dset:
                run += 1
        return Tableau(tuple(run_of[v] for v in row) for row in self.rows)

    def standardize(self) -> "Tableau":
        """Relabel the entries 1..n, ordering equal values by column."""
        order = []
        for j, row in enumerate(self.rows):
            for i, v in enumerate(row):
                order.append((v, i, j))
        order.sort()
        label = {}
        for k, (_, i, j) in enumerate(order, 1):
            label[(i, j)] = k
        return Tableau(
            tuple(label[(i, j)] for i in range(len(row)))
            for j, row in enumerate(self.rows)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({list(self.rows)!r})"

    def __str__(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


def enumerate_ssyt(shape, m: int) -> list[Tableau]:
    """All semistandard fillings of `shape` with entries at most m,
    ordered lexicographically by bottom-to-top reading word."""
    shape = _as_partition(shape)
    if m < 0:
        raise ValueError("m must be nonnegative")
    parts = shape.parts
    order = [(i, j) for j, p in enumerate(parts) for i in range(p)]
    rows: list[list[int]] = [[] for _ in parts]
    out: list[Tableau] = []

    def fill(idx: int) -> None:
        if idx == len(order):
            out.append(Tableau(tuple(r) for r in rows))
            return
        i, j = order[idx]
        lo = 1
        if i > 0:
            lo = max(lo, rows[j][i - 1])
        if j > 0:
            lo = max(lo, rows[j - 1][i] + 1)
        for v in range(lo, m + 1):
            rows[j].append(v)
            fill(idx + 1)
            rows[j].pop()

    fill(0)
    return out


def enumerate_syt(shape) -> list[Tableau]:
    """All standard fillings of `shape`, by backtracking on the values."""
    shape = _as_partition(shape)
    parts = shape.parts
    n = shape.size
    rows: list[list[int]] = [[] for _ in parts]
    out: list[Tableau] = []

    def place(v: int) -> None:
        if v > n:
            out.append(Tableau(tuple(r) for r in rows))
            return
        for j in range(len(parts)):
            if len(rows[j]) < parts[j] and (j == 0 or len(rows[j - 1]) > len(rows[j])):
                rows[j].append(v)
                place(v + 1)
                rows[j].pop()

    place(1)
    return out


def enumerate_qyt_exact(shape, m: int) -> list[Tableau]:
    """Quasi-Yamanouchi fillings with largest entry exactly m."""
    return [
        q
        for q in (t.destandardize() for t in enumerate_syt(shape))
        if q.max_entry == m
    ]


def enumerate_qyt_at_most(shape, m: int) -> list[Tableau]:
    """Quasi-Yamanouchi fillings with largest entry at most m."""
    return [
        q
        for q in (t.destandardize() for t in enumerate_syt(shape))
        if q.max_entry <= m
    ]


def qyt_count_exact(shape, m: int) -> int:
    """|QYT with largest entry exactly m| = |{standard fillings with m runs}|."""
    shape = _as_partition(shape)
    if m == 0:
        return 1 if shape.size == 0 else 0
    return sum(1 for t in enumerate_syt(shape) if t.des() + 1 == m)


def kostka(shape, weight) -> int:
    """Number of semistandard fillings of `shape` with the given weight."""
    shape = _as_partition(shape)
    target = tuple(weight.parts) if isinstance(weight, Partition) else tuple(weight)
    if shape.size != sum(target):
        return 0
    parts = shape.parts
    order = [(i, j) for j, p in enumerate(parts) for i in range(p)]
    rows: list[list[int]] = [[] for _ in parts]
    remaining = list(target)
    count = 0

    def fill(idx: int) -> None:
        nonlocal count
        if idx == len(order):
            count += 1
            return
        i, j = order[idx]
        lo = 1
        if i > 0:
            lo = max(lo, rows[j][i - 1])
        if j > 0:
            lo = max(lo, rows[j - 1][i] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                rows[j].append(v)
                fill(idx + 1)
                rows[j].pop()
                remaining[v - 1] += 1

    fill(0)
    return count
