"""
Seidel triangle, Genocchi numbers, Entringer and Euler numbers.

All values are Python ints, so there is no overflow at any size.
"""
from __future__ import annotations

import functools


@functools.lru_cache(maxsize=None)
def seidel_row(i: int) -> tuple[int, ...]:
    """Row i of the Seidel triangle, entries s[i][1..ceil(i/2)]."""
    if i < 1:
        raise ValueError("rows start at 1")
    if i <= 2:
        return (1,)
    width = (i + 1) // 2
    prev = seidel_row(i - 1) + (0,) * (width - len(seidel_row(i - 1)))
    row = [0] * (width + 2)  # row[j] for j = 0..width+1, zero padding at both ends
    if i % 2:
        # s[i][j] = s[i][j-1] + s[i-1][j], filled left to right
        for j in range(1, width + 1):
            row[j] = row[j - 1] + prev[j - 1]
    else:
        # s[i][j] = s[i][j+1] + s[i-1][j], filled right to left
        for j in range(width, 0, -1):
            row[j] = row[j + 1] + prev[j - 1]
    return tuple(row[1:width + 1])


def seidel(i: int, j: int) -> int:
    """
    >>> seidel(9, 5), seidel(8, 1), seidel(7, 3)
    (155, 56, 17)
    """
    if i < 1 or j < 1 or j > (i + 1) // 2:
        return 0
    return seidel_row(i)[j - 1]


def genocchi_first(n: int) -> int:
    """g_{2n-1}, the diagonal entry s[2n-1][n]."""
    if n < 1:
        raise ValueError("n >= 1")
    return seidel(2 * n - 1, n)


def genocchi_median(n: int) -> int:
    """g_{2n}, the first-column entry s[2n][1]."""
    if n < 1:
        raise ValueError("n >= 1")
    return seidel(2 * n, 1)


@functools.lru_cache(maxsize=None)
def entringer_row(n: int) -> tuple[int, ...]:
    """E(n, 0..n) by the boustrophedon rule E(n,k) = E(n,k-1) + E(n-1,n-k)."""
    if n < 0:
        raise ValueError("n >= 0")
    if n == 0:
        return (1,)
    prev = entringer_row(n - 1)
    row = [0]
    for k in range(1, n + 1):
        row.append(row[k - 1] + prev[n - k])
    return tuple(row)


def entringer(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return entringer_row(n)[k]


def euler_number(n: int) -> int:
    """
    Number of up-down permutations of [n].

    >>> [euler_number(n) for n in range(8)]
    [1, 1, 1, 2, 5, 16, 61, 272]
    """
    if n < 0:
        raise ValueError("n >= 0")
    if n == 0:
        return 1
    return sum(entringer_row(n - 1))
