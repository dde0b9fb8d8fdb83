"""Truncated union bound over the binary-input AWGN channel.

The one floating-point corner of the package: spectra arrive exact and are
converted to floats term by term.  BPSK signalling is assumed, so a weight-w
pairwise error event has argument sqrt(2 * w * rate * 10^(ebn0_db/10)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enumerator import WeightEnumerator


@dataclass(frozen=True)
class ChannelPoint:
    """Operating point: code rate (info bits per channel bit) and Eb/N0 in dB."""

    rate: float
    ebn0_db: float

    def __post_init__(self):
        if not 0 < self.rate <= 1:
            raise ValueError(f"rate must be in (0, 1], got {self.rate}")
        if not math.isfinite(self.ebn0_db):
            raise ValueError(f"ebn0_db must be finite, got {self.ebn0_db}")


def q_function(x: float) -> float:
    """Standard Gaussian tail probability via the complementary error function."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def truncated_union_bound(
    spectrum: WeightEnumerator, truncate: int, channel: ChannelPoint
) -> float:
    """Union bound on block error probability using weights 1..truncate.

    Returns sum over w of A_w * Q(sqrt(2 * w * rate * gamma)) with
    gamma = 10^(ebn0_db / 10); nondecreasing in ``truncate``.
    """
    if not 1 <= truncate <= spectrum.length:
        raise ValueError(f"truncate {truncate} outside 1..{spectrum.length}")
    gamma = 10.0 ** (channel.ebn0_db / 10.0)
    total = 0.0
    for w in range(1, truncate + 1):
        coeff = spectrum.coeffs[w]
        if coeff:
            total += float(coeff) * q_function(math.sqrt(2.0 * w * channel.rate * gamma))
    return total
