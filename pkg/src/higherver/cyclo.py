"""Evaluation of characters at prime-power roots of unity.

Reduction happens modulo the (monic, 0/1-coefficient) cyclotomic polynomial
over the integers, so no field arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charring import LaurentPoly, check_prime


@dataclass(frozen=True)
class CyclotomicIndex:
    p: int
    n: int

    def __post_init__(self):
        check_prime(self.p)
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def order(self) -> int:
        # p = 2 uses a primitive 2^(n+1)-th root of unity
        return 2 ** (self.n + 1) if self.p == 2 else self.p**self.n

    def cyclotomic(self) -> list[int]:
        """Coefficients of Phi_m, constant term first."""
        if self.p == 2:
            deg = 2**self.n
            return [1] + [0] * (deg - 1) + [1]
        step = self.p ** (self.n - 1)
        coeffs = [0] * ((self.p - 1) * step + 1)
        for k in range(self.p):
            coeffs[k * step] = 1
        return coeffs


def reduce_mod_cyclotomic(f: LaurentPoly, idx: CyclotomicIndex) -> list[int]:
    """Remainder of ``x^N f`` modulo Phi_m, as a coefficient list (constant first)."""
    if f.is_zero():
        return []
    shift = -min(f.bottom(), 0)
    dense = [0] * (f.top() + shift + 1)
    for e, c in f.items():
        dense[e + shift] = c
    phi = idx.cyclotomic()
    deg = len(phi) - 1
    for top in range(len(dense) - 1, deg - 1, -1):
        c = dense[top]
        if c:
            base = top - deg
            for j, d in enumerate(phi):
                if d:
                    dense[base + j] -= c * d
    rem = dense[:deg]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def vanishes_at_root(f: LaurentPoly, idx: CyclotomicIndex) -> bool:
    return not reduce_mod_cyclotomic(f, idx)
