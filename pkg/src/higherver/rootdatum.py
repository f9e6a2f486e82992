"""Root systems of semisimple simply connected groups.

Weights are integer vectors in fundamental-weight coordinates, concatenated
over the irreducible components.  Coroots are vectors in simple-coroot
coordinates, so the pairing <lambda, alpha^vee> is a plain dot product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .charring import check_prime
from .errors import ConsistencyError, NotDominant, PrimeTooSmall, UnsupportedType

Vector = tuple[int, ...]

# |Phi^+| and Coxeter number, by family, as independent reference values.
_EXPECTED = {
    "A": lambda r: (r * (r + 1) // 2, r + 1),
    "B": lambda r: (r * r, 2 * r),
    "C": lambda r: (r * r, 2 * r),
    "D": lambda r: (r * (r - 1), 2 * r - 2),
    "E": lambda r: {6: (36, 12), 7: (63, 18), 8: (120, 30)}[r],
    "F": lambda r: (24, 12),
    "G": lambda r: (6, 6),
}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Bourbaki-numbered Cartan matrix with a[i][j] = <alpha_i^vee, alpha_j>."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if family in "ABCD":
        for i in range(rank - 1):
            link(i, i + 1)
        if family == "B":
            link(rank - 2, rank - 1, -1, -2)
        elif family == "C":
            link(rank - 2, rank - 1, -2, -1)
        elif family == "D":
            a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
            link(rank - 3, rank - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        link(0, 1, -3, -1)
    return a


def parse_type(label: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?(\d+)\s*", label)
    if not m:
        raise UnsupportedType(f"cannot parse root system type {label!r}")
    family, rank = m.group(1).upper(), int(m.group(2))
    ok = {
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, rank >= _MIN_RANK.get(family, 1))
    if not ok:
        raise UnsupportedType(f"unsupported type {family}{rank}")
    return family, rank


def _closure(cartan: Sequence[Sequence[int]]) -> list[Vector]:
    """Positive roots (simple-root coordinates) by closing the simple roots under reflections."""
    rank = len(cartan)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                # <beta, alpha_i^vee>
                c = sum(cartan[i][j] * beta[j] for j in range(rank))
                if c == 0:
                    continue
                img = tuple(b - c * int(j == i) for j, b in enumerate(beta))
                if all(x >= 0 for x in img) and any(img) and img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(seen, key=lambda v: (sum(v), v))


def _symmetrizer(cartan) -> list[Fraction]:
    """Half squared lengths d_i with d_i a_ij = d_j a_ji, longest roots normalized to 1."""
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    top = max(d)
    return [x / top for x in d]


@dataclass(frozen=True)
class Component:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Vector, ...]  # simple-root coordinates
    positive_coroots: tuple[Vector, ...]  # simple-coroot coordinates, coroot of positive_roots[k]
    highest_short_root: Vector
    theta_coroot: Vector
    coxeter_number: int

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def root_in_weights(self, beta: Vector) -> Vector:
        """Fundamental-weight coordinates of a root."""
        return tuple(sum(self.cartan[i][j] * beta[j] for j in range(self.rank)) for i in range(self.rank))


@lru_cache(maxsize=None)
def build_component(label: str) -> Component:
    family, rank = parse_type(label)
    cartan = cartan_matrix(family, rank)
    roots = _closure(cartan)
    d = _symmetrizer(cartan)

    def norm(beta):
        # (beta, beta)/2 in units where the longest root has norm 1
        return sum(
            Fraction(beta[i] * beta[j]) * d[i] * cartan[i][j] for i in range(rank) for j in range(rank)
        ) / 2

    def coroot(beta):
        nb = norm(beta)
        out = [beta[j] * d[j] / nb for j in range(rank)]
        if any(x.denominator != 1 for x in out):
            raise ConsistencyError(f"non-integral coroot for {beta}")
        return tuple(int(x) for x in out)

    coroots = tuple(coroot(b) for b in roots)
    short = min(norm(b) for b in roots)
    theta = max((b for b in roots if norm(b) == short), key=sum)
    theta_vee = coroot(theta)

    # independent routes to the same data
    transpose = [[cartan[j][i] for j in range(rank)] for i in range(rank)]
    dual_roots = _closure(transpose)
    if sorted(dual_roots) != sorted(coroots):
        raise ConsistencyError(f"{label}: coroot map disagrees with dual closure")
    if max(dual_roots, key=sum) != theta_vee:
        raise ConsistencyError(f"{label}: highest coroot is not the coroot of the highest short root")
    h = 1 + sum(theta_vee)  # 1 + <rho, theta^vee>, rho = (1,...,1)
    n_pos, h_ref = _EXPECTED[family](rank)
    if len(roots) != n_pos or h != h_ref or 2 * len(roots) != h * rank:
        raise ConsistencyError(f"{label}: got |Phi+|={len(roots)}, h={h}; expected {n_pos}, {h_ref}")
    return Component(family, rank, tuple(map(tuple, cartan)), tuple(roots), coroots, theta, theta_vee, h)


@dataclass(frozen=True)
class RootDatum:
    components: tuple[Component, ...]

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def label(self) -> str:
        return "x".join(c.label for c in self.components)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, k = [], 0
        for c in self.components:
            out.append(k)
            k += c.rank
        return tuple(out)

    @property
    def rho(self) -> Vector:
        return (1,) * self.rank

    @property
    def coxeter_numbers(self) -> tuple[int, ...]:
        return tuple(c.coxeter_number for c in self.components)

    @property
    def coxeter_number(self) -> int:
        return max(self.coxeter_numbers)

    def _embed(self, k: int, v: Vector) -> Vector:
        off = self.offsets[k]
        return (0,) * off + tuple(v) + (0,) * (self.rank - off - len(v))

    @property
    def positive_roots(self) -> tuple[Vector, ...]:
        """All positive roots in fundamental-weight coordinates."""
        return tuple(
            self._embed(k, c.root_in_weights(b)) for k, c in enumerate(self.components) for b in c.positive_roots
        )

    @property
    def positive_root_heights(self) -> tuple[int, ...]:
        return tuple(sum(b) for c in self.components for b in c.positive_roots)

    @property
    def positive_coroots(self) -> tuple[Vector, ...]:
        return tuple(self._embed(k, b) for k, c in enumerate(self.components) for b in c.positive_coroots)

    @property
    def theta_coroots(self) -> tuple[Vector, ...]:
        return tuple(self._embed(k, c.theta_coroot) for k, c in enumerate(self.components))

    def simple_root(self, i: int) -> Vector:
        """alpha_i in fundamental-weight coordinates."""
        for k, c in enumerate(self.components):
            off = self.offsets[k]
            if off <= i < off + c.rank:
                col = tuple(c.cartan[r][i - off] for r in range(c.rank))
                return self._embed(k, col)
        raise IndexError(i)

    def weight(self, coords: Sequence[int]) -> Vector:
        w = tuple(int(x) for x in coords)
        if len(w) != self.rank:
            raise ValueError(f"weight {w} has {len(w)} coordinates, {self.label} needs {self.rank}")
        return w

    def to_json(self) -> dict:
        return {
            "type": self.label,
            "components": [
                {
                    "type": c.label,
                    "positive_roots": len(c.positive_roots),
                    "theta_coroot": list(c.theta_coroot),
                    "coxeter_number": c.coxeter_number,
                }
                for c in self.components
            ],
        }


def build(types: str | Sequence[str]) -> RootDatum:
    if isinstance(types, str):
        types = [t for t in re.split(r"[x×*]", types) if t.strip()]
    if not types:
        raise UnsupportedType("empty root datum")
    return RootDatum(tuple(build_component(t.strip()) for t in types))


def parse_weight(text: str) -> Vector:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected comma-separated integers") from None


# -- pairings and alcoves -------------------------------------------------


def pair(lam: Sequence[int], coroot: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(lam, coroot, strict=True))


def in_restricted(lam: Sequence[int], p: int, n: int) -> bool:
    return all(0 <= c < p**n for c in lam)


def check_dominant(lam: Sequence[int]) -> None:
    if any(c < 0 for c in lam):
        raise NotDominant(f"weight {tuple(lam)} is not dominant")


def check_regime(datum: RootDatum, p: int) -> list[str]:
    """Validate p against the Coxeter numbers; return any warnings."""
    check_prime(p)
    h = datum.coxeter_number
    if p < h:
        raise PrimeTooSmall(f"p={p} is smaller than the Coxeter number h={h} of {datum.label}")
    bound = max(2 * hj - 4 for hj in datum.coxeter_numbers)
    if p < bound:
        return [f"p={p} < 2h-4={bound} for {datum.label}: Donkin's tensor product theorem is conjectural here"]
    return []


def alcove_values(lam: Sequence[int], datum: RootDatum) -> tuple[int, ...]:
    """<lambda + rho, theta_j^vee> for every component j."""
    shifted = tuple(c + 1 for c in lam)
    return tuple(pair(shifted, t) for t in datum.theta_coroots)


def alcove_test(lam: Sequence[int], datum: RootDatum, p: int, closed: bool = False) -> bool:
    lam = datum.weight(lam)
    check_dominant(lam)
    check_regime(datum, p)
    vals = alcove_values(lam, datum)
    return all(0 < v <= p if closed else 0 < v < p for v in vals)


def donkin_split(lam: Sequence[int], datum: RootDatum, p: int, n: int) -> tuple[Vector, Vector] | None:
    """Split lambda = lambda' + p^(n-1) mu with lambda' in (p^(n-1)-1)rho + Lambda_(n-1)."""
    lam = datum.weight(lam)
    check_dominant(lam)
    check_prime(p)
    q = p ** (n - 1)
    if any(c < q - 1 for c in lam):
        return None
    low, mu = [], []
    for c in lam:
        m, r = divmod(c - (q - 1), q)
        low.append(q - 1 + r)
        mu.append(m)
    return tuple(low), tuple(mu)


@dataclass(frozen=True)
class RegionLabel:
    """Membership of T(lambda) for a queried level n.

    ``kind`` is one of ``FundamentalAlcove``, ``Tn_outside_Jn``,
    ``Jn_minus_In`` or ``In``; ``chain`` is the figure-style label of the
    finest region in the chain J_1 > I_1 > J_2 > ... > I_n containing lambda.
    """

    kind: str
    n: int
    chain: str
    in_Tn: bool

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n, "chain": self.chain, "in_T_n": self.in_Tn}


def in_J(lam: Vector, datum: RootDatum, p: int, n: int) -> bool:
    return donkin_split(lam, datum, p, n) is not None


def in_I(lam: Vector, datum: RootDatum, p: int, n: int) -> bool:
    split = donkin_split(lam, datum, p, n)
    if split is None:
        return False
    mu = split[1]
    vals = alcove_values(mu, datum)
    return not all(0 < v < p for v in vals)


def classify_region(lam: Sequence[int], datum: RootDatum, p: int, n: int) -> RegionLabel:
    lam = datum.weight(lam)
    check_dominant(lam)
    check_regime(datum, p)
    if n < 1:
        raise ValueError("n must be positive")
    if in_I(lam, datum, p, n):
        chain = f"I{n}"
    else:
        m = max(k for k in range(1, n + 1) if in_J(lam, datum, p, k))
        if in_I(lam, datum, p, m):
            chain = f"I{m}\\J{m + 1}"
        elif m == 1:
            chain = "A"
        else:
            chain = f"J{m}\\I{m}"
    if in_I(lam, datum, p, n):
        kind = "In"
    elif in_J(lam, datum, p, n):
        kind = "FundamentalAlcove" if n == 1 else "Jn_minus_In"
    else:
        kind = "Tn_outside_Jn"
    in_tn = not any(lam) or in_J(lam, datum, p, n)
    return RegionLabel(kind, n, chain, in_tn)


def minus_w0(lam: Sequence[int], datum: RootDatum) -> Vector:
    """Dominant representative of the Weyl orbit of -lambda."""
    lam = datum.weight(lam)
    check_dominant(lam)
    w = [-c for c in lam]
    simple = [datum.simple_root(i) for i in range(datum.rank)]
    while True:
        i = next((k for k, c in enumerate(w) if c < 0), None)
        if i is None:
            return tuple(w)
        c = w[i]
        w = [x - c * a for x, a in zip(w, simple[i])]
