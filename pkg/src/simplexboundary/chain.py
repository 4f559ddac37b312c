"""Formal chains, the weighted boundary operator, and its certificates.

Chains are finite linear combinations of singular terms over the
integers or the integers mod m.  A singular term is a base map (the
identity of a standard simplex, or the unique map to a one-point space)
together with an ordered list of precomposed primitive maps; the
boundary operator appends a face insertion and a Θ map per summand.

Two checks make the defining identities executable:

* ``check_equation`` evaluates both sides of the commutation identity
  between doubled face/Θ composites on a grid and demands exact
  agreement;
* ``check_boundary_squared`` expands the double boundary, pairs the
  summands through the explicit index bijection (j,p) ↦ (p+1,j) with the
  layer indices swapped, and certifies that each pair carries opposite
  coefficients and equal composite maps on the grid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .geometry import DEFAULT_SEED, BaryPoint, canonical_grid, format_point
from .theta import (
    FaceMap,
    ThetaKey,
    UnsupportedL,
    face_delete,
    face_insert,
    theta,
)


# ---------------------------------------------------------------------------
# Rings and coefficient tuples


@dataclass(frozen=True)
class RingSpec:
    """The integers (modulus None) or the integers modulo m."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    def norm(self, a: int) -> int:
        return a if self.modulus is None else a % self.modulus

    def add(self, a: int, b: int) -> int:
        return self.norm(a + b)

    def mul(self, a: int, b: int) -> int:
        return self.norm(a * b)

    def neg(self, a: int) -> int:
        return self.norm(-a)

    def is_zero(self, a: int) -> bool:
        return self.norm(a) == 0

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


INTEGERS = RingSpec()


def integers_mod(m: int) -> RingSpec:
    return RingSpec(m)


class CoefficientTuple(tuple):
    """Weights (m_0, ..., m_L) attached to the L+1 parallel faces."""

    def __new__(cls, entries):
        vals = tuple(int(e) for e in entries)
        if not vals:
            raise ValueError("a coefficient tuple needs at least one entry")
        return super().__new__(cls, vals)

    @property
    def L(self) -> int:
        return len(self) - 1


# ---------------------------------------------------------------------------
# Singular terms


@dataclass(frozen=True)
class PointTarget:
    def __str__(self) -> str:
        return "pt"


@dataclass(frozen=True)
class SimplexTarget:
    dim: int

    def __str__(self) -> str:
        return f"simplex{self.dim}"


POINT_TARGET = PointTarget()

#: Returned by evaluation of point-target terms.
POINT_VALUE = object()


@dataclass(frozen=True)
class FaceInsertStep:
    fm: FaceMap

    @property
    def dom_dim(self) -> int:
        return self.fm.n - 1

    @property
    def cod_dim(self) -> int:
        return self.fm.n

    def apply(self, x: BaryPoint) -> BaryPoint:
        return face_insert(self.fm, x)

    def __str__(self) -> str:
        return f"ins({self.fm.L},{self.fm.n},{self.fm.i},{self.fm.j})"


@dataclass(frozen=True)
class FaceDeleteStep:
    fm: FaceMap

    @property
    def dom_dim(self) -> int:
        return self.fm.n

    @property
    def cod_dim(self) -> int:
        return self.fm.n - 1

    def apply(self, x: BaryPoint) -> BaryPoint:
        return face_delete(self.fm, x)

    def __str__(self) -> str:
        return f"del({self.fm.L},{self.fm.n},{self.fm.i},{self.fm.j})"


@dataclass(frozen=True)
class ThetaStep:
    key: ThetaKey

    @property
    def dom_dim(self) -> int:
        return self.key.n

    @property
    def cod_dim(self) -> int:
        return self.key.n

    def apply(self, x: BaryPoint) -> BaryPoint:
        return theta(self.key)(x)

    def __str__(self) -> str:
        return f"th({self.key.L},{self.key.n},{self.key.i})"


@dataclass(frozen=True)
class ThetaInverseStep:
    key: ThetaKey

    def __post_init__(self):
        if self.key.i != 0:
            raise ValueError("only the i=0 maps carry exact inverses")

    @property
    def dom_dim(self) -> int:
        return self.key.n

    @property
    def cod_dim(self) -> int:
        return self.key.n

    def apply(self, x: BaryPoint) -> BaryPoint:
        return theta(self.key).inverse_at(x)

    def __str__(self) -> str:
        return f"thinv({self.key.L},{self.key.n},{self.key.i})"


Primitive = Union[FaceInsertStep, FaceDeleteStep, ThetaStep, ThetaInverseStep]


@dataclass(frozen=True)
class SingularTerm:
    """A basis element: a target with an ordered precomposition list.

    ``precomps[0]`` is outermost; evaluation applies the list from the
    right.  Consecutive domain/codomain dimensions must match, and for a
    simplex target the outermost codomain must equal the target
    dimension.  Point-target terms are canonicalized to empty lists, so
    all maps into the point of equal domain dimension coincide.
    """

    target: Union[PointTarget, SimplexTarget]
    precomps: Tuple[Primitive, ...]
    domain_dim: int

    def __post_init__(self):
        d = self.domain_dim
        for step in reversed(self.precomps):
            if step.dom_dim != d:
                raise ValueError(
                    f"precomposition mismatch: step {step} expects domain {step.dom_dim}, got {d}"
                )
            d = step.cod_dim
        if isinstance(self.target, SimplexTarget) and d != self.target.dim:
            raise ValueError(
                f"outermost codomain {d} does not match target dimension {self.target.dim}"
            )

    def canonical(self) -> "SingularTerm":
        if isinstance(self.target, PointTarget) and self.precomps:
            return SingularTerm(POINT_TARGET, (), self.domain_dim)
        return self

    def evaluate(self, x: BaryPoint):
        if x.dim != self.domain_dim:
            raise ValueError(f"term expects dimension {self.domain_dim}, got {x.dim}")
        if isinstance(self.target, PointTarget):
            return POINT_VALUE
        for step in reversed(self.precomps):
            x = step.apply(x)
        return x

    def describe(self) -> str:
        inner = "∘".join(str(s) for s in self.precomps) or "id"
        return f"{self.target}←{inner}"


def identity_term(n: int) -> SingularTerm:
    return SingularTerm(SimplexTarget(n), (), n)


def point_term(n: int) -> SingularTerm:
    return SingularTerm(POINT_TARGET, (), n)


# ---------------------------------------------------------------------------
# Chains


@dataclass(frozen=True)
class Chain:
    """Finite formal sum of equal-dimension terms with ring coefficients."""

    ring: RingSpec
    dim: int
    terms: Tuple[Tuple[SingularTerm, int], ...]

    @staticmethod
    def make(ring: RingSpec, dim: int, entries: Dict[SingularTerm, int]) -> "Chain":
        merged: Dict[SingularTerm, int] = {}
        for term, coeff in entries.items():
            if term.domain_dim != dim:
                raise ValueError(f"term of dimension {term.domain_dim} in a chain of dimension {dim}")
            key = term.canonical()
            merged[key] = ring.add(merged.get(key, 0), ring.norm(coeff))
        kept = tuple(
            sorted(
                ((t, c) for t, c in merged.items() if not ring.is_zero(c)),
                key=lambda tc: tc[0].describe(),
            )
        )
        return Chain(ring, dim, kept)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, term: SingularTerm) -> int:
        want = term.canonical()
        for t, c in self.terms:
            if t == want:
                return c
        return 0


def zero_chain(ring: RingSpec, dim: int) -> Chain:
    return Chain(ring, dim, ())


def chain_of_term(term: SingularTerm, ring: RingSpec = INTEGERS, coeff: int = 1) -> Chain:
    return Chain.make(ring, term.domain_dim, {term: coeff})


def chain_add(c1: Chain, c2: Chain) -> Chain:
    if c1.ring != c2.ring or c1.dim != c2.dim:
        raise ValueError("chains live over different rings or dimensions")
    entries: Dict[SingularTerm, int] = dict(c1.terms)
    for term, coeff in c2.terms:
        entries[term] = c1.ring.add(entries.get(term, 0), coeff)
    return Chain.make(c1.ring, c1.dim, entries)


def chain_scale(c: Chain, r: int) -> Chain:
    return Chain.make(c.ring, c.dim, {t: c.ring.mul(coeff, r) for t, coeff in c.terms})


def boundary(c: Chain, m: CoefficientTuple) -> Chain:
    """The weighted boundary of ``c``.

    Every dimension-n term spawns (n+1)(L+1) terms: slot j with sign
    (-1)^j and layer i with weight m_i, each precomposing the face
    insertion and the matching Θ map.  Dimension-0 chains bound to the
    zero chain by definition.
    """
    L = m.L
    if L > 1:
        raise UnsupportedL(f"no Θ family for L={L}")
    n = c.dim
    if n == 0:
        return zero_chain(c.ring, -1)
    entries: Dict[SingularTerm, int] = {}
    for term, coeff in c.terms:
        for j in range(n + 1):
            sign = -1 if j % 2 else 1
            for i in range(L + 1):
                new_term = SingularTerm(
                    term.target,
                    term.precomps
                    + (
                        FaceInsertStep(FaceMap(L, n, i, j)),
                        ThetaStep(ThetaKey(L, n - 1, i)),
                    ),
                    n - 1,
                ).canonical()
                weight = c.ring.mul(coeff, c.ring.norm(sign * m[i]))
                entries[new_term] = c.ring.add(entries.get(new_term, 0), weight)
    return Chain.make(c.ring, n - 1, entries)


# ---------------------------------------------------------------------------
# The commutation identity


@dataclass
class Witness:
    point: str
    left: str
    right: str
    detail: str = ""

    def to_json(self) -> dict:
        out = {"point": self.point, "left": self.left, "right": self.right}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class EquationCheck:
    """Result of evaluating one commutation instance on a grid."""

    n: int
    L: int
    j: int
    p: int
    i: int
    k: int
    points_checked: int
    witnesses: List[Witness] = field(default_factory=list)
    grid_meta: Optional[dict] = None

    @property
    def verdict(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        return {
            "check": "equation",
            "parameters": {"n": self.n, "L": self.L, "j": self.j, "p": self.p, "i": self.i, "k": self.k},
            "grid": self.grid_meta or {"size": self.points_checked},
            "verdict": "pass" if self.verdict else "fail",
            "points_checked": self.points_checked,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def equation_sides(n: int, j: int, p: int, i: int, k: int, L: int = 1):
    """The two composite maps Δ_{n-1} → Δ_{n+1} of the identity."""
    th_n_i = theta(ThetaKey(L, n, i))
    th_n_k = theta(ThetaKey(L, n, k))
    th_low_i = theta(ThetaKey(L, n - 1, i))
    th_low_k = theta(ThetaKey(L, n - 1, k))
    fm_out_left = FaceMap(L, n + 1, i, j)
    fm_in_left = FaceMap(L, n, k, p)
    fm_out_right = FaceMap(L, n + 1, k, p + 1)
    fm_in_right = FaceMap(L, n, i, j)

    def left(x: BaryPoint) -> BaryPoint:
        return face_insert(fm_out_left, th_n_i(face_insert(fm_in_left, th_low_k(x))))

    def right(x: BaryPoint) -> BaryPoint:
        return face_insert(fm_out_right, th_n_k(face_insert(fm_in_right, th_low_i(x))))

    return left, right


def check_equation(
    n: int,
    j: int,
    p: int,
    i: int,
    k: int,
    grid: Optional[Sequence[BaryPoint]] = None,
    L: int = 1,
    grid_meta: Optional[dict] = None,
) -> EquationCheck:
    """Exact grid agreement of the two doubled face/Θ composites."""
    if n < 1:
        raise ValueError("the identity needs n >= 1")
    if not 0 <= j <= p <= n:
        raise ValueError(f"slot indices must satisfy 0 <= j <= p <= n, got j={j}, p={p}")
    if not (0 <= i <= L and 0 <= k <= L):
        raise ValueError(f"layer indices ({i},{k}) outside 0..{L}")
    if grid is None:
        grid = canonical_grid(n - 1)
        grid_meta = grid_meta or {"denominator": 60, "size": len(grid), "seed": DEFAULT_SEED}
    left, right = equation_sides(n, j, p, i, k, L)
    result = EquationCheck(n=n, L=L, j=j, p=p, i=i, k=k, points_checked=0, grid_meta=grid_meta)
    for x in grid:
        lhs = left(x)
        rhs = right(x)
        result.points_checked += 1
        if lhs != rhs:
            result.witnesses.append(Witness(format_point(x), format_point(lhs), format_point(rhs)))
    return result


def equation_instances(n: int, L: int = 1):
    """All index tuples (j, p, i, k) of the identity at level n."""
    for j in range(n + 1):
        for p in range(j, n + 1):
            for i in range(L + 1):
                for k in range(L + 1):
                    yield (j, p, i, k)


# ---------------------------------------------------------------------------
# The cancellation certificate


@dataclass
class PairRecord:
    small: Tuple[int, int, int, int]
    big: Tuple[int, int, int, int]
    coefficients: Tuple[int, int]
    map_agreement: bool


@dataclass
class CancellationCheck:
    """Certificate that the double boundary cancels pairwise."""

    dim: int
    L: int
    m: Tuple[int, ...]
    summands_total: int
    pairs_checked: int
    consumed: int
    points_checked: int
    trivial: bool
    witnesses: List[Witness] = field(default_factory=list)
    grid_meta: Optional[dict] = None

    @property
    def verdict(self) -> bool:
        return not self.witnesses and (self.trivial or self.consumed == self.summands_total)

    def to_json(self) -> dict:
        return {
            "check": "boundary-squared",
            "parameters": {"n": self.dim - 1, "L": self.L, "m": list(self.m)},
            "grid": self.grid_meta or {"size": self.points_checked},
            "verdict": "pass" if self.verdict else "fail",
            "summands": self.summands_total,
            "pairs_checked": self.pairs_checked,
            "consumed": self.consumed,
            "trivial": self.trivial,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def check_boundary_squared(
    c: Chain,
    m: CoefficientTuple,
    grid: Optional[Sequence[BaryPoint]] = None,
    grid_meta: Optional[dict] = None,
) -> CancellationCheck:
    """Pair the summands of the double boundary and certify cancellation.

    Each summand of the expansion is indexed by (j, p, i, k); the summand
    with j <= p is paired with the one at (p+1, j) and swapped layer
    indices.  The certificate checks that paired coefficients are exact
    negatives and that the paired composite maps agree on every grid
    point, and that the pairing consumes every summand exactly once.
    For dimension-1 chains the second boundary is the zero map by
    definition and the certificate is trivial.
    """
    L = m.L
    if L > 1:
        raise UnsupportedL(f"no Θ family for L={L}")
    d = c.dim
    if d < 1:
        raise ValueError("the double boundary needs chains of dimension >= 1")
    ring = c.ring
    if d == 1:
        return CancellationCheck(
            dim=d, L=L, m=tuple(m), summands_total=0, pairs_checked=0,
            consumed=0, points_checked=0, trivial=True, grid_meta=grid_meta,
        )
    if grid is None:
        grid = canonical_grid(d - 2)
        grid_meta = grid_meta or {"denominator": 60, "size": len(grid), "seed": DEFAULT_SEED}

    check = CancellationCheck(
        dim=d, L=L, m=tuple(m), summands_total=0, pairs_checked=0,
        consumed=0, points_checked=0, trivial=False, grid_meta=grid_meta,
    )

    for term, coeff in c.terms:
        summands: Dict[Tuple[int, int, int, int], Tuple[int, SingularTerm]] = {}
        for j in range(d + 1):
            for i in range(L + 1):
                inner = (
                    FaceInsertStep(FaceMap(L, d, i, j)),
                    ThetaStep(ThetaKey(L, d - 1, i)),
                )
                coeff1 = ring.mul(coeff, ring.norm((-1 if j % 2 else 1) * m[i]))
                for p in range(d):
                    for k in range(L + 1):
                        steps = term.precomps + inner + (
                            FaceInsertStep(FaceMap(L, d - 1, k, p)),
                            ThetaStep(ThetaKey(L, d - 2, k)),
                        )
                        coeff2 = ring.mul(coeff1, ring.norm((-1 if p % 2 else 1) * m[k]))
                        summands[(j, p, i, k)] = (
                            coeff2,
                            SingularTerm(term.target, steps, d - 2),
                        )
        check.summands_total += len(summands)

        consumed = set()
        for (j, p, i, k), (coeff_small, term_small) in summands.items():
            if j > p:
                continue
            partner = (p + 1, j, k, i)
            coeff_big, term_big = summands[partner]
            check.pairs_checked += 1
            consumed.add((j, p, i, k))
            consumed.add(partner)
            if ring.add(coeff_small, coeff_big) != 0:
                check.witnesses.append(
                    Witness(
                        point="-",
                        left=str(coeff_small),
                        right=str(coeff_big),
                        detail=f"coefficients of {(j, p, i, k)} and {partner} do not cancel",
                    )
                )
                continue
            if isinstance(term.target, PointTarget):
                continue  # all composites into the point coincide
            for x in grid:
                lhs = term_small.evaluate(x)
                rhs = term_big.evaluate(x)
                check.points_checked += 1
                if lhs != rhs:
                    check.witnesses.append(
                        Witness(
                            point=format_point(x),
                            left=format_point(lhs),
                            right=format_point(rhs),
                            detail=f"maps of {(j, p, i, k)} and {partner} disagree",
                        )
                    )
        check.consumed += len(consumed)
    return check


def report_to_json_text(report) -> str:
    return json.dumps(report.to_json(), sort_keys=True, indent=2)
