"""Exact binomial coefficients and the interleaver-average combining weight.

Everything here runs on Python's arbitrary-precision integers and
`fractions.Fraction`; no floating point, no modular shortcuts.
"""

from __future__ import annotations

from fractions import Fraction


class BinomialTable:
    """Triangular table of C(a, b) for 0 <= b <= a <= max_n, via Pascal's rule.

    Rows are built once and never mutated afterwards, so a table can be shared
    freely between threads.  Out-of-support queries (b < 0 or b > a) return 0,
    which lets summations written with loose index bounds drop their
    impossible terms automatically.
    """

    __slots__ = ("max_n", "rows")

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError(f"max_n must be >= 0, got {max_n}")
        self.max_n = max_n
        self.rows = _extend_rows([[1]], max_n)

    @classmethod
    def _grown(cls, base: "BinomialTable", max_n: int) -> "BinomialTable":
        # Shares the existing row objects; rows are read-only by convention.
        table = cls.__new__(cls)
        table.max_n = max_n
        table.rows = _extend_rows(list(base.rows), max_n)
        return table

    def binomial(self, a: int, b: int) -> int:
        if a < 0 or a > self.max_n:
            raise ValueError(f"row {a} outside table (max_n={self.max_n})")
        if b < 0 or b > a:
            return 0
        return self.rows[a][b]


def _extend_rows(rows: list[list[int]], max_n: int) -> list[list[int]]:
    for a in range(len(rows), max_n + 1):
        prev = rows[a - 1]
        row = [1] * (a + 1)
        for b in range(1, a):
            row[b] = prev[b - 1] + prev[b]
        rows.append(row)
    return rows


_shared = BinomialTable(64)


def shared_table(min_n: int) -> BinomialTable:
    """Session-wide table covering rows up to at least ``min_n``.

    Grows on demand and is never shrunk; every row is built at most once per
    session because growth extends the existing rows.  The returned table is
    immutable; concurrent readers may hold different generations, all of which
    agree on shared rows.
    """
    global _shared
    table = _shared
    if table.max_n < min_n:
        table = BinomialTable._grown(table, min_n)
        _shared = table
    return table


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; returns 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return shared_table(n).binomial(n, k)


def plotkin_coefficient(n: int, w: int, v_weight: int, v_only: int) -> Fraction:
    """Weight of one component-coefficient pair in the interleaver average.

    For the length-2n construction (u + permuted v, v), fix a combined word of
    weight ``w`` whose second half (the v-word) has weight ``v_weight`` and
    whose first half has exactly ``v_only`` coordinates where the permuted
    v-word is 1 but the u-word is 0; the u-word then has weight
    ``w - 2*v_only``.  The returned rational is

        C(n, w-v_weight) * C(w-v_weight, v_only) * C(n-w+v_weight, v_weight-v_only)
        ---------------------------------------------------------------------------
                         C(n, v_weight) * C(n, w-2*v_only)

    which is nonnegative and finite everywhere on the argument box validated
    below (the denominator binomials cannot vanish there).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= w <= 2 * n:
        raise ValueError(f"w={w} outside 0..{2 * n}")
    lo = max(0, w - n)
    if not lo <= v_weight <= min(w, n):
        raise ValueError(
            f"v_weight={v_weight} outside {lo}..{min(w, n)} for n={n}, w={w}"
        )
    if not lo <= v_only <= min(v_weight, w - v_weight):
        raise ValueError(
            f"v_only={v_only} outside {lo}..{min(v_weight, w - v_weight)}"
            f" for n={n}, w={w}, v_weight={v_weight}"
        )
    table = shared_table(n)
    a = w - v_weight
    numerator = (
        table.binomial(n, a)
        * table.binomial(a, v_only)
        * table.binomial(n - a, v_weight - v_only)
    )
    denominator = table.binomial(n, v_weight) * table.binomial(n, w - 2 * v_only)
    return Fraction(numerator, denominator)
