"""Laurent polynomials with integer coefficients and the SL2 character bases.

A character of an SL2-module is stored as ``{weight: multiplicity}``.  Three
unitriangular bases are available: Weyl modules, simple modules and
indecomposable tilting modules, all indexed by their highest weight.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import InvalidPrime, NotACharacter, NotInNonnegativeSpan, DivisionNotExact


class LaurentPoly:
    """Immutable sparse Laurent polynomial in one variable over the integers."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    # -- access -----------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __getitem__(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def items(self):
        return self._coeffs.items()

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def top(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no top exponent")
        return max(self._coeffs)

    def bottom(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no bottom exponent")
        return min(self._coeffs)

    def is_symmetric(self) -> bool:
        return all(self._coeffs.get(-e) == c for e, c in self._coeffs.items())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def evaluate(self, x: int = 1):
        """Value at ``x``; for ``x = 1`` this is the dimension."""
        if x == 1:
            return sum(self._coeffs.values())
        from fractions import Fraction

        return sum(c * Fraction(x) ** e for e, c in self._coeffs.items())

    def dim(self) -> int:
        return sum(self._coeffs.values())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative power")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``x**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """Substitute ``x -> x**k``."""
        return LaurentPoly({e * k: c for e, c in self._coeffs.items()})

    def divexact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact quotient; raises DivisionNotExact if a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lo, dlo, dtop = self.bottom(), divisor.bottom(), divisor.top()
        num = [self[e] for e in range(lo, self.top() + 1)]
        den = [divisor[e] for e in range(dlo, dtop + 1)]
        lead = den[-1]
        dlen = len(den)
        quot = [0] * max(len(num) - dlen + 1, 0)
        for i in range(len(num) - dlen, -1, -1):
            c = num[i + dlen - 1]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise DivisionNotExact(f"leading coefficient {c} not divisible by {lead}")
            quot[i] = q
            for j, d in enumerate(den):
                num[i + j] -= q * d
        if any(num):
            raise DivisionNotExact("nonzero remainder in Laurent division")
        return LaurentPoly({lo - dlo + i: q for i, q in enumerate(quot)})

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in sorted(self._coeffs.items())]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        if isinstance(data, dict):
            return cls({int(e): int(c) for e, c in data.items()})
        return cls((int(e), int(c)) for e, c in data)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidPrime(f"{p!r} is not a prime")


def check_index(a: int) -> None:
    if not isinstance(a, int) or a < 0:
        raise ValueError(f"highest weight must be a nonnegative integer, got {a!r}")


def base_p_digits(a: int, p: int) -> list[int]:
    """Digits of ``a`` in base ``p``, least significant first (``[]`` for 0)."""
    digits = []
    while a:
        a, d = divmod(a, p)
        digits.append(d)
    return digits


# -- the three bases ------------------------------------------------------


@lru_cache(maxsize=None)
def weyl_char(a: int) -> LaurentPoly:
    check_index(a)
    return LaurentPoly({a - 2 * k: 1 for k in range(a + 1)})


@lru_cache(maxsize=None)
def simple_char(a: int, p: int) -> LaurentPoly:
    """Steinberg tensor product: product of twisted restricted Weyl characters."""
    check_index(a)
    check_prime(p)
    result = ONE
    for k, d in enumerate(base_p_digits(a, p)):
        if d:
            result = result * weyl_char(d).substitute_power(p**k)
    return result


@lru_cache(maxsize=None)
def tilting_char(a: int, p: int) -> LaurentPoly:
    """Character of T_a via Donkin's tensor product theorem.

    The split always uses the largest ``r`` with ``p**r - 1 <= a``.
    """
    check_index(a)
    check_prime(p)
    if a <= p - 1:
        return weyl_char(a)
    if a <= 2 * p - 2:
        return weyl_char(a) + weyl_char(2 * p - 2 - a)
    r = 1
    while p ** (r + 1) - 1 <= a:
        r += 1
    pr = p**r
    if a >= 2 * pr - 1:
        b = (a - pr + 1) // pr
        c = a - pr * b
        return tilting_char(c, p) * tilting_char(b, p).substitute_power(pr)
    # a in [p^r - 1, 2p^r - 2] with r >= 2: peel one digit off below
    q = p ** (r - 1)
    t = a - (q - 1)
    b, rem = divmod(t, q)
    c = q - 1 + rem
    return tilting_char(c, p) * tilting_char(b, p).substitute_power(q)


def frobenius_twist(f: LaurentPoly, r: int, p: int) -> LaurentPoly:
    return f.substitute_power(p**r)


class Basis(str, enum.Enum):
    WEYL = "weyl"
    SIMPLE = "simple"
    TILTING = "tilting"

    @classmethod
    def parse(cls, value) -> Basis:
        if isinstance(value, Basis):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown basis {value!r}; expected weyl, simple or tilting") from None


def basis_char(basis: Basis | str, a: int, p: int) -> LaurentPoly:
    basis = Basis.parse(basis)
    if basis is Basis.WEYL:
        return weyl_char(a)
    if basis is Basis.SIMPLE:
        return simple_char(a, p)
    return tilting_char(a, p)


@dataclass(frozen=True)
class BasisDecomp:
    basis: Basis
    terms: dict[int, int]
    p: int

    def character(self) -> LaurentPoly:
        total = ZERO
        for a, m in self.terms.items():
            total = total + basis_char(self.basis, a, self.p) * m
        return total

    def __getitem__(self, a: int) -> int:
        return self.terms.get(a, 0)

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "p": self.p,
            "terms": {str(a): m for a, m in sorted(self.terms.items(), reverse=True)},
        }

    @classmethod
    def from_json(cls, data: dict) -> BasisDecomp:
        return cls(Basis.parse(data["basis"]), {int(a): int(m) for a, m in data["terms"].items()}, int(data["p"]))


def decompose(f: LaurentPoly, basis: Basis | str, p: int) -> BasisDecomp:
    """Greedy highest-weight decomposition of ``f`` in the requested basis."""
    basis = Basis.parse(basis)
    check_prime(p)
    terms: dict[int, int] = {}
    rest = f.coeffs
    while rest:
        e = max(rest)
        m = rest[e]
        if e < 0 or m < 0:
            raise NotInNonnegativeSpan(
                f"not a nonnegative combination of {basis.value} characters "
                f"(remainder top x^{e} with coefficient {m})"
            )
        terms[e] = m
        for k, c in basis_char(basis, e, p).items():
            v = rest.get(k, 0) - m * c
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    return BasisDecomp(basis, terms, p)


# -- symmetric and exterior powers ----------------------------------------


def _power_char(f: LaurentPoly, r: int, exterior: bool) -> LaurentPoly:
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if any(c < 0 for _, c in f.items()):
        raise NotACharacter("character has a negative coefficient")
    # dp[k] = degree-k symmetric function of the monomials seen so far
    dp = [ONE] + [ZERO] * r
    for e, mult in f.items():
        mono = LaurentPoly.monomial(e)
        for _ in range(mult):
            ks = range(r, 0, -1) if exterior else range(1, r + 1)
            for k in ks:
                if dp[k - 1]:
                    dp[k] = dp[k] + dp[k - 1] * mono
    return dp[r]


def sym_power_char(f: LaurentPoly, r: int) -> LaurentPoly:
    return _power_char(f, r, exterior=False)


def ext_power_char(f: LaurentPoly, r: int) -> LaurentPoly:
    return _power_char(f, r, exterior=True)
