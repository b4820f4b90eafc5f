"""Weighted lattice paths and the symmetric polynomials they sum to.

A path takes n unit steps from (0, 0) to (k, n - k) over the alphabet
{N, E}.  Writing E_i for the number of east steps among the first i
(counting step i itself) and N_i = i - E_i, step i weighs x_i + E_i + 1
going north and N_i - x_i going east; a path weighs the product of its
step weights.  The path sums turn out to be symmetric in the x's, so
each one is stored as its coefficient vector against the elementary
symmetric basis; the explicit path sum is kept only as the reference
evaluation route.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .partition import Partition
from .perm import eulerian

#: Seed for the deterministic pseudo-random evaluation points used by
#: the identity suites; recorded in their reports.
DEFAULT_SEED = 8675309

NORTH = "N"
EAST = "E"


def paths(n: int, k: int) -> Iterator[tuple[str, ...]]:
    """All step words with n steps, k of them east."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    for east_at in combinations(range(n), k):
        word = [NORTH] * n
        for i in east_at:
            word[i] = EAST
        yield tuple(word)


def path_weight(steps: Sequence[str], xs: Sequence[int]) -> int:
    """Product of the step weights of one path."""
    if len(steps) != len(xs):
        raise ValueError("need one x per step")
    east = 0
    w = 1
    for i, step in enumerate(steps, 1):
        if step == EAST:
            east += 1
            w *= (i - east) - xs[i - 1]
        elif step == NORTH:
            w *= xs[i - 1] + east + 1
        else:
            raise ValueError(f"steps must be 'N' or 'E', got {step!r}")
    return w


def pnk_eval_paths(n: int, k: int, xs: Sequence[int]) -> int:
    """Evaluate P_{n,k} as the explicit sum over all C(n, k) paths."""
    xs = tuple(xs)
    if len(xs) != n:
        raise ValueError(f"need {n} values, got {len(xs)}")
    return sum(path_weight(p, xs) for p in paths(n, k))


def elementary_values(xs: Sequence[int], upto: int) -> list[int]:
    """e_0(xs)..e_upto(xs), by expanding prod_i (1 + x_i y)."""
    es = [1] + [0] * upto
    for x in xs:
        for m in range(upto, 0, -1):
            es[m] += x * es[m - 1]
    return es


class PnkPoly:
    """P_{n,k} by its elementary-basis coefficients a(n, k, 0..n)."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs: Sequence[int]) -> None:
        self.n = n
        self.k = k
        self.coeffs = tuple(int(c) for c in coeffs)
        if len(self.coeffs) != n + 1:
            raise ValueError("need one coefficient per degree 0..n")

    def eval(self, xs: Sequence[int]) -> int:
        xs = tuple(xs)
        if len(xs) != self.n:
            raise ValueError(f"need {self.n} values, got {len(xs)}")
        es = elementary_values(xs, self.n)
        return sum(c * e for c, e in zip(self.coeffs, es))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PnkPoly)
            and (self.n, self.k, self.coeffs) == (other.n, other.k, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.coeffs))

    def __repr__(self) -> str:
        return f"PnkPoly({self.n}, {self.k}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        chunks = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            body = str(abs(c)) if m == 0 else (
                f"e{m}" if abs(c) == 1 else f"{abs(c)}*e{m}"
            )
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks) if chunks else "0"


@lru_cache(maxsize=None)
def _coeff_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """rows[k][m] = a(n, k, m) for k, m in 0..n."""
    if n < 1:
        raise ValueError("coefficients are defined for n >= 1")
    if n == 1:
        # P_{1,0} = e_1 + 1.  P_{1,1} is the single east step, whose
        # weight N_1 - x_1 = -x_1 forces a(1,1,1) = -1 (and in general
        # the all-east path makes P_{n,n} = (-1)^n e_n).
        return ((1, 1), (0, -1))
    prev = _coeff_rows(n - 1)

    def at(k: int, m: int) -> int:
        if k < 0 or k >= len(prev) or m < 0 or m >= n:
            return 0
        return prev[k][m]

    rows = []
    for k in range(n + 1):
        row = [eulerian(n, k)]
        for m in range(1, n + 1):
            row.append(at(k, m - 1) - at(k - 1, m - 1))
        rows.append(tuple(row))
    return tuple(rows)


def a_coeffs(n: int, k: int) -> PnkPoly:
    """Coefficient vector of P_{n,k}.

    The constant term is the Eulerian number A(n, k); the higher terms
    follow a(n, k, m) = a(n-1, k, m-1) - a(n-1, k-1, m-1).
    """
    if n < 1:
        raise ValueError("defined for n >= 1")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return PnkPoly(n, k, _coeff_rows(n)[k])


def a_table(n: int) -> list[list[int]]:
    """a(n, k, m) as a matrix: rows k = 0..n, columns m = 0..n."""
    return [list(row) for row in _coeff_rows(n)]


def pnk_eval_ebasis(n: int, k: int, xs: Sequence[int]) -> int:
    """Evaluate P_{n,k} through its elementary-basis coefficients."""
    return a_coeffs(n, k).eval(xs)


def qyt_count_via_pnk(shape, k: int) -> int:
    """Count quasi-Yamanouchi fillings with largest entry k + 1 as
    P_{n,k}(contents) / hook product; the division is exact, and a
    remainder raises."""
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    n = shape.size
    if n == 0:
        raise ValueError("defined for nonempty shapes")
    if k < 0 or k > n:
        return 0
    value = pnk_eval_ebasis(n, k, shape.contents())
    count, rem = divmod(value, shape.hook_product())
    if rem:
        raise ArithmeticError(
            f"hook product does not divide the path sum for {shape!r}, k={k}"
        )
    return count


def seeded_points(
    n: int,
    count: int,
    lo: int = -5,
    hi: int = 5,
    seed: int = DEFAULT_SEED,
) -> list[tuple[int, ...]]:
    """Deterministic pseudo-random integer vectors for identity testing."""
    rng = random.Random(seed)
    return [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(count)]
