"""Restriction of G-modules along a principal SL2.

Characters of G-modules are only ever handled after principal
specialization, i.e. as one-variable Laurent polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .charring import ONE, LaurentPoly, check_prime, decompose
from .errors import ConsistencyError, NotInClosedAlcove, NotInNonnegativeSpan, PromiseViolated
from .rootdatum import RootDatum, alcove_values, check_dominant, check_regime, pair


def _sinh(k: int) -> LaurentPoly:
    """x^k - x^(-k)"""
    return LaurentPoly({k: 1, -k: -1})


@dataclass(frozen=True)
class PrincipalMap:
    datum: RootDatum
    phi_star_roots: tuple[int, ...]

    @classmethod
    def of(cls, datum: RootDatum) -> PrincipalMap:
        coroots = datum.positive_coroots
        values = tuple(sum(pair(alpha, c) for c in coroots) for alpha in datum.positive_roots)
        heights = datum.positive_root_heights
        # phi*(alpha) = 2 <alpha, rho^vee> = 2 ht(alpha)
        if values != tuple(2 * h for h in heights):
            raise ConsistencyError("principal weights of roots disagree with twice their heights")
        bound = 2 * datum.coxeter_number - 2
        if not all(0 < v <= bound and v % 2 == 0 for v in values):
            raise ConsistencyError("principal weights of roots out of range")
        return cls(datum, values)


def phi_star(lam: Sequence[int], pm: PrincipalMap) -> int:
    lam = pm.datum.weight(lam)
    return sum(pair(lam, c) for c in pm.datum.positive_coroots)


def weyl_restriction_char(lam: Sequence[int], pm: PrincipalMap) -> LaurentPoly:
    """Principal specialization of the Weyl character of highest weight lambda."""
    lam = pm.datum.weight(lam)
    check_dominant(lam)
    shifted = tuple(c + 1 for c in lam)
    num, den = ONE, ONE
    for c in pm.datum.positive_coroots:
        num = num * _sinh(pair(shifted, c))
        den = den * _sinh(sum(c))
    return num.divexact(den)


def denominator(pm: PrincipalMap) -> LaurentPoly:
    """g(x) = prod over positive roots of x^(phi*(a)/2) - x^(-phi*(a)/2)."""
    g = ONE
    for v in pm.phi_star_roots:
        g = g * _sinh(v // 2)
    return g


def steinberg_restriction(pm: PrincipalMap, p: int, n: int) -> LaurentPoly:
    """Character of St_n restricted to SL2, as g(x^(p^n)) / g(x)."""
    check_regime(pm.datum, p)
    if n == 0:
        return ONE
    g = denominator(pm)
    return g.substitute_power(p**n).divexact(g)


def restriction_ideal_level(f: LaurentPoly, p: int, n_query: int) -> tuple[bool, bool]:
    """(all summands in I_n, some summand outside I_(n+1)) for a tilting SL2 character."""
    check_prime(p)
    try:
        terms = decompose(f, "tilting", p).terms
    except NotInNonnegativeSpan as exc:
        raise PromiseViolated(f"character is not that of a tilting module: {exc}") from exc
    lo, hi = p**n_query - 1, p ** (n_query + 1) - 1
    return all(a >= lo for a in terms), any(a < hi for a in terms)


def alcove_criterion_check(lam: Sequence[int], pm: PrincipalMap, p: int) -> bool:
    """Check that F(T(lambda)) lies in I_1(SL2) exactly when lambda is outside A.

    Only meaningful on the closed alcove, where T(lambda) is the Weyl module.
    """
    datum = pm.datum
    lam = datum.weight(lam)
    check_dominant(lam)
    check_regime(datum, p)
    vals = alcove_values(lam, datum)
    if not all(0 < v <= p for v in vals):
        raise NotInClosedAlcove(f"weight {lam} is outside the closed fundamental alcove for p={p}")
    in_alcove = all(v < p for v in vals)
    all_high, _ = restriction_ideal_level(weyl_restriction_char(lam, pm), p, 1)
    return all_high == (not in_alcove)
