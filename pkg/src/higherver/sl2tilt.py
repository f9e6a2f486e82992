"""Tilting modules of SL2: ideal levels, tensor products and Hom dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .charring import ONE, LaurentPoly, check_index, check_prime, decompose, tilting_char
from .errors import ConsistencyError


@dataclass(frozen=True)
class IdealLevel:
    """Position of T_a in the chain I_1 > I_2 > ...; level 0 is the unit class."""

    level: int

    @property
    def is_unit(self) -> bool:
        return self.level == 0

    def in_I(self, n: int) -> bool:
        return n >= 1 and self.level >= n

    def in_J(self, n: int) -> bool:
        # I_n(SL2) = J_{n+1}(SL2)
        return n <= 1 or self.level >= n - 1

    def __str__(self) -> str:
        return "Unit" if self.is_unit else str(self.level)


def ideal_level(a: int, p: int) -> IdealLevel:
    check_index(a)
    check_prime(p)
    n = 0
    while a >= p ** (n + 1) - 1:
        n += 1
    return IdealLevel(n)


@dataclass(frozen=True)
class TiltingSum:
    terms: dict[int, int]
    p: int

    def character(self) -> LaurentPoly:
        total = LaurentPoly()
        for a, m in self.terms.items():
            total = total + tilting_char(a, self.p) * m
        return total

    def __getitem__(self, a: int) -> int:
        return self.terms.get(a, 0)

    def min_level(self) -> IdealLevel | None:
        if not self.terms:
            return None
        return min((ideal_level(a, self.p) for a in self.terms), key=lambda lv: lv.level)

    def to_json(self) -> dict:
        return {"p": self.p, "terms": {str(a): m for a, m in sorted(self.terms.items(), reverse=True)}}

    @classmethod
    def from_json(cls, data: dict) -> TiltingSum:
        return cls({int(a): int(m) for a, m in data["terms"].items()}, int(data["p"]))


def _normalize(s) -> list[tuple[int, int]]:
    out = []
    for item in s:
        if isinstance(item, int):
            out.append((item, 1))
        else:
            a, m = item
            out.append((int(a), int(m)))
    return out


def tensor_decompose(s: Iterable, p: int) -> TiltingSum:
    """Decompose a tensor product of tilting modules into indecomposables.

    ``s`` lists factors as ``(index, multiplicity)`` pairs, or bare indices.
    A pair ``(a, m)`` contributes ``m`` tensor factors ``T_a``.
    """
    check_prime(p)
    product = ONE
    for a, m in _normalize(s):
        product = product * tilting_char(a, p) ** m
    result = TiltingSum(decompose(product, "tilting", p).terms, p)
    if result.character() != product:
        raise ConsistencyError("tilting decomposition does not reproduce the product character")
    return result


def weyl_factors(a: int, p: int) -> dict[int, int]:
    """Weyl filtration multiplicities (T_a : Delta_k)."""
    return decompose(tilting_char(a, p), "weyl", p).terms


def hom_dim(a: int, b: int, p: int) -> int:
    """dim Hom(T_a, T_b) = sum over k of (T_a:Delta_k)(T_b:Delta_k)."""
    check_prime(p)
    fa, fb = weyl_factors(a, p), weyl_factors(b, p)
    return sum(m * fb.get(k, 0) for k, m in fa.items())


def socle_unit_test(p: int, n: int) -> list[int]:
    """Indices b in [p^(n-1) - 1, p^n - 2] whose T_b has Delta_0 as a Weyl factor."""
    check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    lo, hi = p ** (n - 1) - 1, p**n - 2
    return [b for b in range(lo, hi + 1) if weyl_factors(b, p).get(0, 0)]
