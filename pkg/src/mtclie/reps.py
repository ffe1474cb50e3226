"""Dimensions, weight systems, multiplicities, duals and Frobenius-Schur
types of irreducible representations, including tensor products across
product groups.

Three semi-independent routes back each other up: the Weyl formula for
dimensions, breadth-first root-string descent for weight sets, and the
Freudenthal recursion for multiplicities.  The test suite cross-checks
them on every catalog representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .roots import (
    GroupSpec,
    RootSystem,
    SimpleLieType,
    Weight,
    build_root_system,
)

FS_REAL = "real"
FS_COMPLEX = "complex"
FS_QUATERNIONIC = "quaternionic"


def _check_dominant(rs: RootSystem, labels: Sequence[int]) -> Weight:
    w = tuple(labels)
    if len(w) != rs.rank:
        raise ValueError(f"expected {rs.rank} labels for {rs.type}, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError(f"weight {w} is not dominant")
    return w


@lru_cache(maxsize=None)
def weyl_dim(lie_type: SimpleLieType, labels: Weight) -> int:
    """Exact dimension of the irreducible module with the given highest weight."""
    rs = build_root_system(lie_type)
    lam = _check_dominant(rs, labels)
    delta = rs.weyl_vector_labels
    lam_delta = tuple(a + 1 for a in lam)
    num = Fraction(1)
    for root in rs.positive_roots:
        num *= rs.root_form(lam_delta, root) / rs.root_form(delta, root)
    if num.denominator != 1:
        raise ArithmeticError(f"Weyl formula gave non-integer {num}")
    return num.numerator


@lru_cache(maxsize=None)
def weight_set(lie_type: SimpleLieType, labels: Weight) -> frozenset[Weight]:
    """The saturated weight system, generated by simple root-string descent."""
    rs = build_root_system(lie_type)
    lam = _check_dominant(rs, labels)
    n = rs.rank
    alpha_labels = rs.cartan  # row i = Dynkin labels of alpha_i
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(n):
                m = mu[i]
                if m <= 0:
                    continue
                step = alpha_labels[i]
                cur = mu
                for _ in range(m):
                    cur = tuple(c - s for c, s in zip(cur, step))
                    if cur not in seen:
                        seen.add(cur)
                        nxt.append(cur)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def freudenthal_multiplicities(
    lie_type: SimpleLieType, labels: Weight
) -> dict[Weight, int]:
    """Weight multiplicities via Freudenthal's recursion.

    The recursion runs over dominant weights ordered by depth below the
    highest weight; all other multiplicities follow by Weyl invariance.
    The domain of the returned map equals ``weight_set``.
    """
    rs = build_root_system(lie_type)
    lam = _check_dominant(rs, labels)
    weights = weight_set(lie_type, labels)

    def depth(mu: Weight) -> int:
        coords = rs.root_coords(tuple(a - b for a, b in zip(lam, mu)))
        total = sum(coords)
        if total.denominator != 1:
            raise ArithmeticError(f"{mu} not in the root lattice shifted by {lam}")
        return total.numerator

    dominant = sorted(
        (mu for mu in weights if all(x >= 0 for x in mu)),
        key=lambda mu: (depth(mu), mu),
    )
    delta = rs.weyl_vector_labels
    mult: dict[Weight, int] = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for root in rs.positive_roots:
            k = 1
            while True:
                up = tuple(m + k * a for m, a in zip(mu, root.labels))
                if up not in weights:
                    break
                acc += rs.root_form(up, root) * mult[rs.dominant_conjugate(up)]
                k += 1
        lam_d = tuple(a + b for a, b in zip(lam, delta))
        mu_d = tuple(a + b for a, b in zip(mu, delta))
        denom = rs.weight_form(lam_d, lam_d) - rs.weight_form(mu_d, mu_d)
        m_mu = 2 * acc / denom
        if m_mu.denominator != 1 or m_mu <= 0:
            raise ArithmeticError(f"bad multiplicity {m_mu} at {mu}")
        mult[mu] = m_mu.numerator
    return {mu: mult[rs.dominant_conjugate(mu)] for mu in weights}


def dual_weight(lie_type: SimpleLieType, labels: Sequence[int]) -> Weight:
    """Highest weight of the dual module, -w0(lambda)."""
    rs = build_root_system(lie_type)
    lam = _check_dominant(rs, labels)
    return rs.dominant_conjugate(tuple(-x for x in lam))


def fs_type(lie_type: SimpleLieType, labels: Sequence[int]) -> str:
    """Frobenius-Schur trichotomy of one irreducible module.

    Complex unless self-dual; a self-dual module is real or quaternionic
    according to the parity of the pairing of the highest weight with the
    sum of all positive coroots.
    """
    rs = build_root_system(lie_type)
    lam = _check_dominant(rs, labels)
    if dual_weight(lie_type, lam) != lam:
        return FS_COMPLEX
    return FS_REAL if rs.sum_pos_coroots_pairing(lam) % 2 == 0 else FS_QUATERNIONIC


def fs_combine(types: Iterable[str]) -> str:
    """Type of an external tensor product of irreducibles of known types."""
    types = list(types)
    if not types:
        raise ValueError("empty type list")
    if FS_COMPLEX in types:
        return FS_COMPLEX
    quat = sum(1 for t in types if t == FS_QUATERNIONIC)
    return FS_QUATERNIONIC if quat % 2 == 1 else FS_REAL


# -- representation expressions -----------------------------------------


@dataclass(frozen=True)
class FactorRep:
    """Highest weight for one group factor, possibly dualized."""

    labels: Weight
    dual: bool = False

    def resolve(self, lie_type: SimpleLieType) -> Weight:
        """Effective highest weight (duals are replaced by -w0 lambda)."""
        return dual_weight(lie_type, self.labels) if self.dual else self.labels

    def render(self) -> str:
        body = "[" + ",".join(str(x) for x in self.labels) + "]"
        return body + ("^d" if self.dual else "")


@dataclass(frozen=True)
class Summand:
    """One tensor-product summand, one FactorRep per group factor."""

    factors: tuple[FactorRep, ...]

    def render(self) -> str:
        return "*".join(f.render() for f in self.factors)


@dataclass(frozen=True)
class RepExpr:
    """A direct sum of tensor products of irreps and duals."""

    group: GroupSpec
    summands: tuple[tuple[int, Summand], ...]  # (multiplicity, summand)

    def __post_init__(self) -> None:
        for mult, s in self.summands:
            if mult <= 0:
                raise ValueError("non-positive multiplicity")
            if len(s.factors) != len(self.group.factors):
                raise ValueError("summand does not cover the group factors")
            for fac, t in zip(s.factors, self.group.factors):
                if len(fac.labels) != t.rank:
                    raise ValueError(
                        f"label vector {fac.labels} has wrong length for {t}"
                    )
                if any(x < 0 for x in fac.labels):
                    raise ValueError(f"non-dominant labels {fac.labels}")

    @property
    def is_irreducible(self) -> bool:
        return len(self.summands) == 1 and self.summands[0][0] == 1

    def summand_dim(self, s: Summand) -> int:
        d = 1
        for fac, t in zip(s.factors, self.group.factors):
            d *= weyl_dim(t, fac.resolve(t))
        return d

    @property
    def dim(self) -> int:
        return sum(m * self.summand_dim(s) for m, s in self.summands)

    def summand_fs(self, s: Summand) -> str:
        return fs_combine(
            fs_type(t, fac.resolve(t))
            for fac, t in zip(s.factors, self.group.factors)
        )

    def summand_highest_weight(self, s: Summand) -> Weight:
        out: list[int] = []
        for fac, t in zip(s.factors, self.group.factors):
            out.extend(fac.resolve(t))
        return tuple(out)

    def render(self) -> str:
        parts = []
        for mult, s in self.summands:
            parts.extend([s.render()] * mult)
        return "+".join(parts)

    @classmethod
    def irreducible(
        cls, group: GroupSpec, factor_labels: Sequence[Sequence[int]]
    ) -> "RepExpr":
        facs = tuple(FactorRep(tuple(l)) for l in factor_labels)
        return cls(group, ((1, Summand(facs)),))


def tensor_weight_set(group: GroupSpec, summand: Summand) -> frozenset[Weight]:
    """All weights of one tensor-product summand, as concatenated labels."""
    if len(summand.factors) != len(group.factors):
        raise ValueError("summand does not cover the group factors")
    combos: list[tuple[int, ...]] = [()]
    for fac, t in zip(summand.factors, group.factors):
        ws = weight_set(t, fac.resolve(t))
        combos = [c + w for c in combos for w in ws]
    return frozenset(combos)


def pad_summand(group: GroupSpec, factors: Sequence[FactorRep]) -> Summand:
    """Extend a partial factor list with trivial representations on the right."""
    if len(factors) > len(group.factors):
        raise ValueError(
            f"{len(factors)} tensor factors but the group has only "
            f"{len(group.factors)}"
        )
    padded = list(factors)
    for t in group.factors[len(factors) :]:
        padded.append(FactorRep((0,) * t.rank))
    return Summand(tuple(padded))
