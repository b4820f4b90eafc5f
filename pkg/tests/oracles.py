"""Independent brute-force oracles.

Everything here deliberately avoids the library's enumeration and
census code paths: row fillings come from itertools products, boards
are tested square by square, and statistics are recomputed from
definitions.  Expected values frozen into the tests were produced by
these oracles.
"""

from itertools import combinations_with_replacement, permutations


def ssyt_brute(parts, m):
    """All semistandard fillings (tuples of rows, bottom to top) of the
    given shape with entries at most m, by filtering products of weakly
    increasing rows."""
    parts = tuple(parts)
    if not parts:
        return [()]
    row_choices = [
        list(combinations_with_replacement(range(1, m + 1), width))
        for width in parts
    ]
    out = []

    def build(j, acc):
        if j == len(parts):
            out.append(tuple(acc))
            return
        for row in row_choices[j]:
            if j > 0 and any(row[i] <= acc[-1][i] for i in range(len(row))):
                continue
            acc.append(row)
            build(j + 1, acc)
            acc.pop()

    build(0, [])
    return out


def syt_brute(parts):
    """All standard fillings, filtered from the semistandard oracle."""
    parts = tuple(parts)
    n = sum(parts)
    out = []
    for rows in ssyt_brute(parts, n):
        entries = sorted(v for row in rows for v in row)
        if entries == list(range(1, n + 1)):
            out.append(rows)
    return out


def is_qyt_rows(rows):
    """Quasi-Yamanouchi test on a semistandard filling."""
    lowest, highest = {}, {}
    for j, row in enumerate(rows, 1):
        for v in row:
            lowest.setdefault(v, j)
            highest[v] = j
    for v in highest:
        if v > 1 and (v - 1 not in lowest or highest[v] <= lowest[v - 1]):
            return False
    return True


def qyt_exact_brute(parts, m):
    """Quasi-Yamanouchi fillings with largest entry exactly m."""
    return [
        rows
        for rows in ssyt_brute(parts, m)
        if is_qyt_rows(rows) and any(m in row for row in rows)
    ]


def descents_of_standard(rows):
    row_of = {}
    for j, row in enumerate(rows):
        for v in row:
            row_of[v] = j
    n = len(row_of)
    return {i for i in range(1, n) if row_of[i + 1] > row_of[i]}


def hit_numbers_brute(heights):
    """Hit census by direct membership tests, square by square."""
    n = len(heights)
    counts = [0] * (n + 1)
    for perm in permutations(range(1, n + 1)):
        hits = sum(1 for i in range(n) if perm[i] <= heights[i])
        counts[hits] += 1
    return counts


def q_weight_brute(perm, heights):
    """Circle statistic recomputed literally: explicit bullet set, an
    explicit cyclic walk per column with its own stopping test."""
    n = len(perm)
    bullets = set()
    for i in range(n):
        for i2 in range(i + 1, n):
            bullets.add((i2, perm[i]))  # right of the cross in its row
    total = 0
    for j in range(n):
        top = heights[j]
        p = perm[j]
        if top == 0:
            # no wrap: climb from the cross to the grid's top row
            for r in range(p + 1, n + 1):
                if (j, r) not in bullets:
                    total += 1
            continue
        if top == p:
            continue  # the cross sits on the stopping square
        r = p
        while True:
            r = r + 1 if r < n else 1
            if (j, r) not in bullets:
                total += 1
            if r == top:
                break
    return total


def eulerian_brute(n, k):
    return sum(
        1
        for perm in permutations(range(1, n + 1))
        if sum(perm[i] > perm[i + 1] for i in range(n - 1)) == k
    )


def kostka_brute(parts, weight, m=None):
    """Kostka number by filtering the semistandard oracle on weight."""
    weight = tuple(weight)
    m = m if m is not None else len(weight)
    hit = 0
    for rows in ssyt_brute(parts, m):
        counts = [0] * m
        for row in rows:
            for v in row:
                counts[v - 1] += 1
        if tuple(counts) == weight + (0,) * (m - len(weight)):
            hit += 1
    return hit
