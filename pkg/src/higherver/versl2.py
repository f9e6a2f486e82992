"""Grothendieck-level model of Ver_{p^n} = Ver_{p^n}(SL2).

Simples are labelled by their SL2 highest weight i, 0 <= i < (p-1)p^(n-1).
Objects of the subcategory A_n are tracked through their SL2 composition
factors; the Serre quotient deletes L_i for (p-1)p^(n-1) <= i < p^n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .charring import LaurentPoly, check_prime, decompose, simple_char, tilting_char
from .errors import BadSimpleIndex, CartanSingular, FusionConsistency, NotInAn, NotInNonnegativeSpan, PromiseViolated
from .sl2tilt import tensor_decompose


@dataclass(frozen=True)
class VerCtx:
    p: int
    n: int

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def num_simples(self) -> int:
        return (self.p - 1) * self.p ** (self.n - 1)

    @property
    def window(self) -> range:
        """Highest weights of the indecomposable projectives."""
        return range(self.p ** (self.n - 1) - 1, self.p**self.n - 1)

    @property
    def cutoff(self) -> int:
        """Tilting modules with index >= p^n - 1 lie in I_n."""
        return self.p**self.n - 1

    def check_simple(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < self.num_simples:
            raise BadSimpleIndex(f"simple index {i!r} outside 0..{self.num_simples - 1} for Ver_{self.p}^{self.n}")

    def next(self) -> VerCtx:
        return VerCtx(self.p, self.n + 1)


@dataclass(frozen=True)
class VerClass:
    """Grothendieck class sum_i c_i [L_i]."""

    ctx: VerCtx
    coeffs: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def to_json(self) -> dict:
        return {"p": self.ctx.p, "n": self.ctx.n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> VerClass:
        return cls(VerCtx(int(data["p"]), int(data["n"])), tuple(int(c) for c in data["coeffs"]))


def image_comp_factors(f: LaurentPoly, ctx: VerCtx) -> VerClass:
    """Class in Ver_{p^n} of an object of A_n with character ``f``."""
    factors = decompose(f, "simple", ctx.p).terms
    bad = sorted(i for i in factors if i >= ctx.cutoff)
    if bad:
        raise NotInAn(f"composition factors {bad} have highest weight >= {ctx.cutoff}")
    return VerClass(ctx, tuple(factors.get(i, 0) for i in range(ctx.num_simples)))


def projective_of(i: int, ctx: VerCtx) -> int:
    """Index of the tilting module whose image is the projective cover of L_i."""
    ctx.check_simple(i)
    q = ctx.p ** (ctx.n - 1)
    d, c = divmod(i, q)
    return 2 * (q - 1) - c + q * d


@lru_cache(maxsize=None)
def _projective_table(ctx: VerCtx) -> tuple[int, ...]:
    return tuple(projective_of(i, ctx) for i in range(ctx.num_simples))


def top_of_projective(a: int, ctx: VerCtx) -> int:
    """Inverse of projective_of on the projective window."""
    try:
        return _projective_table(ctx).index(a)
    except ValueError:
        raise BadSimpleIndex(f"T_{a} is not in the projective window {ctx.window}") from None


@lru_cache(maxsize=None)
def cartan_matrix(ctx: VerCtx) -> tuple[tuple[int, ...], ...]:
    """C[i][j] = [P(L_i) : L_j]."""
    return tuple(image_comp_factors(tilting_char(a, ctx.p), ctx).coeffs for a in _projective_table(ctx))


def is_symmetric(matrix) -> bool:
    return all(matrix[i][j] == matrix[j][i] for i in range(len(matrix)) for j in range(i))


def rational_inverse(matrix) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises CartanSingular if not invertible."""
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise CartanSingular(f"matrix is singular (no pivot in column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def simple_dim(i: int, ctx: VerCtx) -> tuple[int, int]:
    ctx.check_simple(i)
    d = simple_char(i, ctx.p).dim()
    return d, d % ctx.p


@dataclass(frozen=True)
class FusionTable:
    """Structure constants N[i][j][k] of the Grothendieck ring in the simple basis."""

    p: int
    n: int
    N: tuple[tuple[tuple[int, ...], ...], ...]
    dims: tuple[int, ...] = field(default=())

    @property
    def ctx(self) -> VerCtx:
        return VerCtx(self.p, self.n)

    @property
    def size(self) -> int:
        return len(self.N)

    def product(self, x, y) -> tuple[int, ...]:
        """Product of two classes given as coefficient vectors."""
        out = [0] * self.size
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in enumerate(self.N[i][j]):
                    if c:
                        out[k] += a * b * c
        return tuple(out)

    def unit_vector(self, i: int) -> tuple[int, ...]:
        return tuple(int(k == i) for k in range(self.size))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "simples": [str(d) for d in self.dims],
            "N": [[list(row) for row in plane] for plane in self.N],
        }

    @classmethod
    def from_json(cls, data: dict) -> FusionTable:
        N = tuple(tuple(tuple(int(c) for c in row) for row in plane) for plane in data["N"])
        return cls(int(data["p"]), int(data["n"]), N, tuple(int(d) for d in data["simples"]))

    def tsv_rows(self) -> list[str]:
        rows = ["i\tj\t" + "\t".join(f"L{k}" for k in range(self.size))]
        for i in range(self.size):
            for j in range(self.size):
                rows.append(f"{i}\t{j}\t" + "\t".join(str(c) for c in self.N[i][j]))
        return rows


def projective_product(a: int, b: int, ctx: VerCtx) -> tuple[int, ...]:
    """[F(T_a)][F(T_b)] in simple classes, for a, b in the projective window."""
    summands = tensor_decompose([a, b], ctx.p)
    cartan = cartan_matrix(ctx)
    out = [0] * ctx.num_simples
    for c, m in summands.terms.items():
        if c >= ctx.cutoff:
            continue
        row = cartan[top_of_projective(c, ctx)]
        for k, v in enumerate(row):
            out[k] += m * v
    return tuple(out)


def check_fusion(table: FusionTable) -> None:
    """Raise FusionConsistency unless the table is a unital, commutative, associative N-ring."""
    N, size = table.N, table.size
    for i in range(size):
        for j in range(size):
            for k in range(size):
                v = N[i][j][k]
                if not isinstance(v, int) or v < 0:
                    raise FusionConsistency(f"N[{i}][{j}][{k}] = {v!r} is not a nonnegative integer")
                if v != N[j][i][k]:
                    raise FusionConsistency(f"not commutative at ({i},{j},{k})")
            if N[0][j][i] != int(i == j):
                raise FusionConsistency(f"L_0 is not a unit at ({j},{i})")
    for i in range(size):
        for j in range(size):
            nij = N[i][j]
            for k in range(size):
                left = [0] * size
                right = [0] * size
                for m, c in enumerate(nij):
                    if c:
                        for l, v in enumerate(N[m][k]):
                            left[l] += c * v
                for m, c in enumerate(N[j][k]):
                    if c:
                        for l, v in enumerate(N[i][m]):
                            right[l] += c * v
                if left != right:
                    raise FusionConsistency(f"not associative at ({i},{j},{k})")


@lru_cache(maxsize=None)
def fusion(ctx: VerCtx) -> FusionTable:
    """Fusion rules of Ver_{p^n}, solved from the projective products.

    The projective classes are the rows of the Cartan matrix, so the simple
    classes are recovered with its rational inverse.  Every entry is then
    required to be a nonnegative integer and the ring axioms are checked.
    """
    size = ctx.num_simples
    window = list(_projective_table(ctx))
    inv = rational_inverse(cartan_matrix(ctx))  # [L_i] = sum_a inv[i][a] [P(L_a)]
    prod = {}
    for x in range(size):
        for y in range(x, size):
            prod[x, y] = prod[y, x] = projective_product(window[x], window[y], ctx)
    N = []
    for i in range(size):
        plane = []
        for j in range(size):
            acc = [Fraction(0)] * size
            for x, sx in enumerate(inv[i]):
                if not sx:
                    continue
                for y, sy in enumerate(inv[j]):
                    if not sy:
                        continue
                    w = sx * sy
                    for k, v in enumerate(prod[x, y]):
                        if v:
                            acc[k] += w * v
            for k, v in enumerate(acc):
                if v.denominator != 1:
                    raise FusionConsistency(f"N[{i}][{j}][{k}] = {v} is not integral")
            plane.append(tuple(int(v) for v in acc))
        N.append(tuple(plane))
    table = FusionTable(ctx.p, ctx.n, tuple(N), tuple(simple_dim(i, ctx)[0] for i in range(size)))
    check_fusion(table)
    return table


def frobenius_embed(i: int, ctx: VerCtx) -> int:
    ctx.check_simple(i)
    j = ctx.p * i
    ctx.next().check_simple(j)
    return j


def embed_check(ctx: VerCtx) -> list[str]:
    """Compare fusion of Ver_{p^n} with that of Ver_{p^(n+1)} on twisted labels.

    Returns a list of discrepancies (empty on success).
    """
    small, big = fusion(ctx), fusion(ctx.next())
    p = ctx.p
    problems = []
    for i in range(small.size):
        for j in range(small.size):
            row = big.N[p * i][p * j]
            for k in range(small.size):
                if small.N[i][j][k] != row[p * k]:
                    problems.append(f"N[{i}][{j}][{k}]={small.N[i][j][k]} but big N[{p*i}][{p*j}][{p*k}]={row[p*k]}")
            stray = sum(c for k, c in enumerate(row) if k % p)
            if stray:
                problems.append(f"L_{p*i} * L_{p*j} has {stray} factors outside the twisted image")
    return problems


def in_Ibar_given_Tbar(f: LaurentPoly, ctx: VerCtx) -> bool:
    """Whether X lies in the closure of I_n, given that X (x) St_{n-1} is tilting."""
    st = tilting_char(ctx.p ** (ctx.n - 1) - 1, ctx.p)
    try:
        terms = decompose(f * st, "tilting", ctx.p).terms
    except NotInNonnegativeSpan as exc:
        raise PromiseViolated(f"X (x) St_{ctx.n - 1} is not tilting: {exc}") from exc
    return all(a >= ctx.cutoff for a in terms)
