# src/transforms.py
"""Exact transforms between f-vectors and the c-, b- and h-sequences."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from src.complex_core import FVector, HVector
from src.errors import InvalidInput
from src.polynomial import IntPolynomial

__all__ = [
    "BSequence",
    "CSequence",
    "IntPolynomial",
    "b_from_c",
    "b_from_h",
    "b_sequence",
    "binomial_difference",
    "c_from_h",
    "c_sequence",
    "facet_signature_polynomial",
]


@dataclass(frozen=True)
class CSequence:
    """(c_0, c_1, ..., c_d), the coefficients of sum_i f_{i-1} (x - 1)^i."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 2:
            raise InvalidInput("a c-sequence has length d + 1 >= 2")

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def suffix_sum(self, k: int) -> int:
        return sum(self.entries[k:])

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class BSequence:
    """(b_1, ..., b_d); b_0 = 1 is implicit for sequences coming from an f-vector."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise InvalidInput("a b-sequence has length d >= 1")

    @property
    def d(self) -> int:
        return len(self.entries)

    def b(self, k: int) -> int:
        """1-based access matching b_1..b_d."""
        if not 1 <= k <= self.d:
            raise IndexError(f"b_{k} is outside b_1..b_{self.d}")
        return self.entries[k - 1]

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)


def c_sequence(f: FVector) -> CSequence:
    total = IntPolynomial.zero()
    for i, fi in enumerate(f.with_empty_face()):
        total = total + fi * IntPolynomial.binomial_power(-1, i)
    return CSequence(total.padded(f.d + 1))


def b_sequence(f: FVector) -> BSequence:
    total = IntPolynomial.zero()
    for i, fi in enumerate(f.entries, start=1):
        total = total + fi * IntPolynomial.binomial_power(-1, i - 1)
    return BSequence(total.padded(f.d))


def b_from_c(c: CSequence) -> BSequence:
    return BSequence(tuple(c.suffix_sum(k) for k in range(1, c.d + 1)))


def c_from_h(h: HVector) -> CSequence:
    d = h.d
    return CSequence(
        tuple(
            (-1) ** (d - i) * sum(comb(j, d - i) * hj for j, hj in enumerate(h.entries))
            for i in range(d + 1)
        )
    )


def b_from_h(h: HVector) -> BSequence:
    if h[0] != 1:
        raise InvalidInput(f"the closed form for b needs h_0 = 1, got {h[0]}")
    d = h.d
    return BSequence(
        tuple(
            1
            + (-1) ** (d - k)
            * sum(comb(j - 1, d - k) * h[j] for j in range(1, d + 1))
            for k in range(1, d + 1)
        )
    )


def facet_signature_polynomial(deltas: Iterable[int], es: Iterable[int]) -> IntPolynomial:
    """sum_j (1 + x)^{delta_j} - sum_j (1 + x)^{e_j}."""
    deltas, es = list(deltas), list(es)
    if any(dl <= 0 for dl in deltas):
        raise InvalidInput(f"every delta must be positive: {deltas}")
    if any(e < 0 for e in es):
        raise InvalidInput(f"every e must be non-negative: {es}")
    total = IntPolynomial.zero()
    for dl in deltas:
        total = total + IntPolynomial.binomial_power(1, dl)
    for e in es:
        total = total - IntPolynomial.binomial_power(1, e)
    return total


def binomial_difference(d: int, e: int) -> IntPolynomial:
    """(1 + x)^d - (1 + x)^e."""
    if not 0 <= e < d:
        raise InvalidInput(f"need 0 <= e < d, got d = {d}, e = {e}")
    return IntPolynomial.binomial_power(1, d) - IntPolynomial.binomial_power(1, e)
