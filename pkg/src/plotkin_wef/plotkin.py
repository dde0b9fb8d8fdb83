"""Combining two component spectra under a uniform random interleaver.

For component codes C_u and C_v of equal length n, the length-2n construction
{(u + v*perm, v) : u in C_u, v in C_v} with a uniformly random coordinate
permutation ``perm`` has an ensemble-average spectrum that depends only on the
two component spectra; this module evaluates it exactly.  The semantics is the
ensemble average over the shared random permutation: no concentration claim is
made for any specific draw.

The evaluation pre-scales both coefficient vectors by a common integer
multiple of the row-n binomials, which folds every division of the per-cell
weight (combinatorics.plotkin_coefficient) into the inputs; the kernel then
works purely on big integers and one exact division per output weight closes
the computation.  The per-weight sums are independent of each other, so
results never depend on evaluation order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from . import kernel
from .combinatorics import shared_table
from .enumerator import WeightEnumerator


def _scaled_setup(u_spectrum: WeightEnumerator, v_spectrum: WeightEnumerator):
    n = u_spectrum.length
    if v_spectrum.length != n:
        raise ValueError(
            f"component lengths differ: {n} vs {v_spectrum.length}"
        )
    if n < 1:
        raise ValueError("component length must be >= 1")
    rows = shared_table(n).rows
    row_n = rows[n]
    scale = reduce(math.lcm, row_n)
    u_den, u_nums = u_spectrum.common_denominator_form()
    v_den, v_nums = v_spectrum.common_denominator_form()
    u_hat = [num * (scale // row_n[j]) for j, num in enumerate(u_nums)]
    v_hat = [num * (scale // row_n[j]) for j, num in enumerate(v_nums)]
    return n, rows, u_hat, v_hat, u_den * v_den * scale * scale


def combine(u_spectrum: WeightEnumerator, v_spectrum: WeightEnumerator) -> WeightEnumerator:
    """Exact ensemble spectrum of {(u + v*perm, v)} from component spectra.

    ``u_spectrum`` belongs to the code supplying u (first half only),
    ``v_spectrum`` to the code supplying v (second half, plus its permuted
    copy in the first half).  The output has length 2n.
    """
    n, rows, u_hat, v_hat, den = _scaled_setup(u_spectrum, v_spectrum)
    nums = kernel.combine_numerators(n, u_hat, v_hat, rows)
    return WeightEnumerator(2 * n, tuple(Fraction(s, den) for s in nums))


def combine_single_weight(
    u_spectrum: WeightEnumerator, v_spectrum: WeightEnumerator, w: int
) -> Fraction:
    """Coefficient of x^w of combine(...), without computing the other weights.

    Costs O(n^2) scalar operations for the one weight.
    """
    if v_spectrum.length != u_spectrum.length:
        raise ValueError(
            f"component lengths differ: {u_spectrum.length} vs {v_spectrum.length}"
        )
    if not 0 <= w <= 2 * u_spectrum.length:
        raise ValueError(f"weight {w} outside 0..{2 * u_spectrum.length}")
    n, rows, u_hat, v_hat, den = _scaled_setup(u_spectrum, v_spectrum)
    return Fraction(kernel.single_weight_numerator(n, u_hat, v_hat, rows, w), den)


def min_distance_combine(d_u: int, d_v: int) -> int:
    """Minimum distance of the (u + v, v) construction from component distances."""
    if d_u < 1 or d_v < 1:
        raise ValueError(f"minimum distances must be >= 1, got {d_u}, {d_v}")
    return min(d_u, 2 * d_v)
