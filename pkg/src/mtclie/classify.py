"""Classification of homogeneous maximal totally complex submanifolds of
quaternionic projective space: the dimensional and weight-theoretic
necessary conditions, the enumeration searches over simple and product
groups, the reducible-module case analysis, and the orbit-geometry
bookkeeping (complex-orbit dimension, Levi isotropy, normal holonomy).

Everything is exact integer arithmetic; all enumeration output is
canonically ordered so results are deterministic regardless of traversal.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations_with_replacement
from typing import Iterator, Optional, Sequence

from .roots import (
    GroupSpec,
    SimpleLieType,
    Weight,
    automorphism_canonical,
    build_root_system,
    dim_g,
)
from .reps import (
    FS_COMPLEX,
    FS_QUATERNIONIC,
    FS_REAL,
    FactorRep,
    RepExpr,
    Summand,
    dual_weight,
    fs_type,
    tensor_weight_set,
    weyl_dim,
)


class ClassificationError(ValueError):
    """Raised when an input falls outside the classification's hypotheses."""


# -- elementary predicates ----------------------------------------------


def dim_condition_simple(t: SimpleLieType, labels: Sequence[int]) -> bool:
    """dim G - rk G >= dim_C V - 2, the necessary bound for a half-dimension orbit."""
    return dim_g(t) - t.rank >= weyl_dim(t, tuple(labels)) - 2


def su2_factor_condition(t: SimpleLieType, labels: Sequence[int]) -> bool:
    """Dimensional bound on the non-SU(2) factor of a pair acting on V' (x) C^2."""
    return dim_g(t) - t.rank >= 2 * weyl_dim(t, tuple(labels)) - 2


def product_dim_condition(group: GroupSpec, dim_v: int) -> bool:
    return group.dim - group.rank >= dim_v - 2


def weight_condition(group: GroupSpec, summand: Summand) -> bool:
    """Every weight mu outside {lambda, -lambda} must be a root plus or minus
    lambda, compared in concatenated Dynkin-label coordinates."""
    lam = _concat(
        fac.resolve(t) for fac, t in zip(summand.factors, group.factors)
    )
    neg_lam = tuple(-x for x in lam)
    roots = _product_root_labels(group)
    for mu in tensor_weight_set(group, summand):
        if mu == lam or mu == neg_lam:
            continue
        diff = tuple(m - l for m, l in zip(mu, lam))
        if diff in roots:
            continue
        add = tuple(m + l for m, l in zip(mu, lam))
        if add not in roots:
            return False
    return True


def _concat(parts) -> Weight:
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def _product_root_labels(group: GroupSpec) -> frozenset[Weight]:
    total = group.rank
    out = set()
    offset = 0
    for t in group.factors:
        rs = build_root_system(t)
        for lab in rs.root_labels:
            padded = (0,) * offset + lab + (0,) * (total - offset - t.rank)
            out.add(padded)
        offset += t.rank
    return frozenset(out)


def transitive_on_complex_projective(t: SimpleLieType, labels: Sequence[int]) -> bool:
    """Membership in the fixed whitelist of projectively transitive actions:
    the standard representations of SU(m) and Sp(m) (and their duals)."""
    lam = tuple(labels)
    fund_first = tuple(1 if i == 0 else 0 for i in range(t.rank))
    fund_last = tuple(1 if i == t.rank - 1 else 0 for i in range(t.rank))
    if t.series == "A":
        return lam in (fund_first, fund_last)
    if t.series == "C":
        return lam == fund_first
    return False


# -- orbit geometry -----------------------------------------------------


def complex_orbit_dim(t: SimpleLieType, labels: Sequence[int]) -> int:
    """Complex dimension of the projective highest-weight orbit: the number
    of positive roots not orthogonal to the highest weight."""
    rs = build_root_system(t)
    lam = tuple(labels)
    if any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} is not dominant")
    return sum(1 for r in rs.positive_roots if rs.pairing(lam, r) != 0)


@dataclass(frozen=True)
class Levi:
    """Reductive stabilizer data: semisimple factors plus a central torus."""

    factors: tuple[SimpleLieType, ...]
    center_rank: int

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors) + self.center_rank

    @property
    def dim(self) -> int:
        return sum(dim_g(f) for f in self.factors) + self.center_rank

    @property
    def num_positive_roots(self) -> int:
        return sum(
            len(build_root_system(f).positive_roots) for f in self.factors
        )

    def render(self) -> str:
        parts = [str(f) for f in self.factors]
        if self.center_rank:
            parts.append(f"T{self.center_rank}")
        return "+".join(parts) if parts else "trivial"


def _classify_component(
    nodes: list[int],
    cartan: Sequence[Sequence[int]],
    lengths,
) -> SimpleLieType:
    """Recognize the type of one connected Dynkin subdiagram."""
    m = len(nodes)
    if m == 1:
        return SimpleLieType("A", 1)
    edges = []
    for a, b in combinations_with_replacement(nodes, 2):
        if a != b and cartan[a][b] != 0:
            edges.append((a, b, cartan[a][b] * cartan[b][a]))
    if any(mult == 3 for _, _, mult in edges):
        return SimpleLieType("G", 2)
    degree = {v: 0 for v in nodes}
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    if all(mult == 1 for _, _, mult in edges):
        if max(degree.values()) <= 2:
            return SimpleLieType("A", m)
        branch = next(v for v, d in degree.items() if d == 3)
        arms = sorted(_arm_lengths(branch, nodes, cartan))
        if arms[:2] == [1, 1]:
            return SimpleLieType("D", m)
        return SimpleLieType("E", m)  # arms (1,2,k): E6/E7/E8
    # exactly one double edge on a path
    dmax = max(lengths[v] for v in nodes)
    shorts = sum(1 for v in nodes if lengths[v] < dmax)
    longs = m - shorts
    if shorts == 2 and longs == 2:
        return SimpleLieType("F", 4)
    if shorts == 1:
        return SimpleLieType("B", m)
    if longs == 1:
        # rank 2 is ambiguous (B2 = C2); B is the canonical name here
        return SimpleLieType("B", 2) if m == 2 else SimpleLieType("C", m)
    raise AssertionError(f"unrecognized diagram on nodes {nodes}")


def _arm_lengths(branch: int, nodes: list[int], cartan) -> list[int]:
    lengths = []
    for start in nodes:
        if start == branch or cartan[branch][start] == 0:
            continue
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [
                v
                for v in nodes
                if v not in (prev, cur) and cartan[cur][v] != 0
            ]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


def isotropy_levi(t: SimpleLieType, labels: Sequence[int]) -> Levi:
    """Reductive isotropy of the projective highest-weight orbit: the
    subdiagram of simple roots orthogonal to the weight, plus a torus of
    rank equal to the number of crossed nodes."""
    rs = build_root_system(t)
    lam = tuple(labels)
    if any(x < 0 for x in lam):
        raise ValueError(f"weight {lam} is not dominant")
    zero_nodes = [i for i, x in enumerate(lam) if x == 0]
    center = t.rank - len(zero_nodes)
    unvisited = set(zero_nodes)
    factors = []
    while unvisited:
        comp = [unvisited.pop()]
        frontier = list(comp)
        while frontier:
            v = frontier.pop()
            for w in list(unvisited):
                if rs.cartan[v][w] != 0:
                    unvisited.remove(w)
                    comp.append(w)
                    frontier.append(w)
        factors.append(_classify_component(sorted(comp), rs.cartan, rs.lengths))
    factors.sort(key=lambda f: f.sort_key, reverse=True)
    return Levi(tuple(factors), center)


def group_isotropy_levi(group: GroupSpec, factor_weights: Sequence[Weight]) -> Levi:
    factors: list[SimpleLieType] = []
    center = 0
    for t, lam in zip(group.factors, factor_weights):
        levi = isotropy_levi(t, lam)
        factors.extend(levi.factors)
        center += levi.center_rank
    factors.sort(key=lambda f: f.sort_key, reverse=True)
    return Levi(tuple(factors), center)


# -- verdicts -----------------------------------------------------------


@dataclass(frozen=True)
class OrbitReport:
    orbit_dim_c: int
    levi: Levi
    ambient_n: int
    is_mtc: bool

    def to_json_dict(self) -> dict:
        return {
            "orbit_dim_c": self.orbit_dim_c,
            "levi": {
                "factors": [str(f) for f in self.levi.factors],
                "center_rank": self.levi.center_rank,
            },
            "ambient_n": self.ambient_n,
            "is_mtc": self.is_mtc,
        }


@dataclass(frozen=True)
class CandidateVerdict:
    group: GroupSpec
    rep: RepExpr
    fs: str
    dim_ok: bool
    weight_ok: Optional[bool]  # None when not applicable (reducible modules)
    transitive: bool
    degenerate: bool
    same_orbit_as: Optional[str]
    orbit_dim_c: int
    levi: Levi
    ambient_n: int
    is_mtc: bool
    table_row: Optional[str] = None
    notes: tuple[str, ...] = ()

    @property
    def key(self) -> str:
        return f"{self.group} {self.rep.render()}"

    def to_json_dict(self) -> dict:
        return {
            "group": str(self.group),
            "rep": self.rep.render(),
            "fs_type": self.fs,
            "dim_ok": self.dim_ok,
            "weight_ok": self.weight_ok,
            "transitive": self.transitive,
            "degenerate": self.degenerate,
            "same_orbit_as": self.same_orbit_as,
            "orbit_dim_c": self.orbit_dim_c,
            "levi": {
                "factors": [str(f) for f in self.levi.factors],
                "center_rank": self.levi.center_rank,
            },
            "ambient_n": self.ambient_n,
            "is_mtc": self.is_mtc,
            "table_row": self.table_row,
            "notes": list(self.notes),
        }


def _sort_key(v: CandidateVerdict):
    return (
        tuple(f.sort_key for f in v.group.factors),
        v.rep.render(),
    )


# -- reducible modules --------------------------------------------------

REASON_K_BOUND = "k-exceeds-2"
REASON_DIM_ESTIMATE = "dimension-estimate"
REASON_NOT_TRANSITIVE = "base-not-transitive"
REASON_IRREDUCIBLE = "irreducible"


@dataclass(frozen=True)
class ReducibleSpec:
    """Shape k*V1 (+) s*(W (+) W*) of a reducible quaternionic module.

    ``base`` is V1 when k > 0, otherwise W; it lives on a single simple
    factor for every case the classification admits.
    """

    k: int
    s: int
    base_type: SimpleLieType
    base_weight: Weight

    def __post_init__(self) -> None:
        if self.k < 0 or self.s < 0 or (self.k == 0 and self.s == 0):
            raise ValueError("need k >= 0, s >= 0, not both zero")
        if self.k > 0 and fs_type(self.base_type, self.base_weight) != FS_QUATERNIONIC:
            raise ValueError("with k > 0 the base module must be quaternionic")

    @property
    def base_dim(self) -> int:
        return weyl_dim(self.base_type, self.base_weight)

    @property
    def total_dim(self) -> int:
        return (self.k + 2 * self.s) * self.base_dim


@dataclass(frozen=True)
class ReducibleVerdict:
    valid: bool
    identification: Optional[str] = None
    reason: Optional[str] = None


def classify_reducible(spec: ReducibleSpec) -> ReducibleVerdict:
    """Case analysis for reducible quaternionic modules.

    Only two shapes survive the dimension estimate: two copies of the
    standard symplectic module, or one dual pair of a projectively
    transitive standard module; both give complex projective space sitting
    in quaternionic projective space of the same complex dimension.
    """
    k, s = spec.k, spec.s
    if k > 2:
        return ReducibleVerdict(False, reason=REASON_K_BOUND)
    if k >= 1 and s >= 1:
        return ReducibleVerdict(False, reason=REASON_DIM_ESTIMATE)
    if k == 1 and s == 0:
        return ReducibleVerdict(False, reason=REASON_IRREDUCIBLE)
    if k == 0 and s >= 2:
        return ReducibleVerdict(False, reason=REASON_DIM_ESTIMATE)

    t, lam = spec.base_type, spec.base_weight
    transitive = transitive_on_complex_projective(t, lam)
    if k == 2:  # s == 0; base quaternionic, so only Sp(m) standard qualifies
        if not transitive:
            return ReducibleVerdict(False, reason=REASON_NOT_TRANSITIVE)
        m = spec.base_dim - 1
        return ReducibleVerdict(True, identification=f"CP^{m} in HP^{m}")
    # k == 0, s == 1
    if not transitive:
        return ReducibleVerdict(False, reason=REASON_NOT_TRANSITIVE)
    m = spec.base_dim - 1
    return ReducibleVerdict(True, identification=f"CP^{m} in HP^{m}")


def _reducible_shape(rep: RepExpr) -> ReducibleSpec:
    """Match a reducible RepExpr against the k*V1 (+) s*(W (+) W*) shape."""
    group = rep.group
    pieces: list[tuple[Weight, str]] = []  # (concat highest weight, fs)
    for mult, s in rep.summands:
        hw = rep.summand_highest_weight(s)
        pieces.extend([(hw, rep.summand_fs(s))] * mult)

    def product_dual(hw: Weight) -> Weight:
        return _concat(
            dual_weight(t, lam) for t, lam in zip(group.factors, group.split(hw))
        )

    counts: dict[Weight, int] = {}
    fs_of: dict[Weight, str] = {}
    for hw, f in pieces:
        counts[hw] = counts.get(hw, 0) + 1
        fs_of[hw] = f

    k = 0
    s_pairs = 0
    base_quat: Optional[Weight] = None
    base_pair: Optional[Weight] = None
    for hw in sorted(counts):
        f = fs_of[hw]
        c = counts[hw]
        if f == FS_QUATERNIONIC:
            k += c
            if base_quat is not None and base_quat != hw:
                raise ClassificationError(
                    "quaternionic summands are not all isomorphic"
                )
            base_quat = hw
        elif f == FS_REAL:
            if c % 2 != 0:
                raise ClassificationError(
                    "a real summand of odd multiplicity admits no invariant "
                    "quaternionic structure"
                )
            s_pairs += c // 2
            base_pair = hw
        else:
            dual = product_dual(hw)
            if dual < hw:
                if dual in counts:
                    continue  # validated from the partner
                raise ClassificationError(
                    "complex summands do not pair with their duals; no "
                    "invariant quaternionic structure"
                )
            if counts.get(dual, 0) != c:
                raise ClassificationError(
                    "complex summands do not pair with their duals; no "
                    "invariant quaternionic structure"
                )
            s_pairs += c
            base_pair = hw
    pair_bases = {
        hw
        for hw in counts
        if fs_of[hw] != FS_QUATERNIONIC
    }
    if len({min(hw, product_dual(hw)) for hw in pair_bases}) > 1:
        raise ClassificationError("dual-pair summands are not all isomorphic")

    base = base_quat if k > 0 else base_pair
    assert base is not None
    parts = group.split(base)
    live = [
        (t, lam) for t, lam in zip(group.factors, parts) if any(lam)
    ]
    if len(live) != 1:
        raise ClassificationError(
            "the base module must live on a single simple factor"
        )
    return ReducibleSpec(k, s_pairs, live[0][0], live[0][1])


# -- the combined user-facing report ------------------------------------


def mtc_report(
    group: GroupSpec, rep: RepExpr
) -> tuple[OrbitReport, CandidateVerdict]:
    """Run every applicable condition for one (group, representation) pair."""
    if rep.group != group:
        raise ValueError("representation bound to a different group")
    if rep.is_irreducible:
        return _irreducible_report(group, rep)
    return _reducible_report(group, rep)


def _irreducible_report(group: GroupSpec, rep: RepExpr):
    summand = rep.summands[0][1]
    fs = rep.summand_fs(summand)
    if fs != FS_QUATERNIONIC:
        raise ClassificationError(
            f"a representation of quaternionic type is required, got {fs}"
        )
    dim_v = rep.dim
    if dim_v % 2 != 0:
        raise ClassificationError("quaternionic module of odd dimension")
    factor_weights = [
        fac.resolve(t) for fac, t in zip(summand.factors, group.factors)
    ]
    orbit = sum(
        complex_orbit_dim(t, lam) for t, lam in zip(group.factors, factor_weights)
    )
    levi = group_isotropy_levi(group, factor_weights)
    ambient = dim_v // 2 - 1
    is_mtc = 2 * orbit == dim_v - 2
    # the flag marks actions transitive on a positive-dimensional ambient
    # quaternionic projective space; the rank-one standard module lands on
    # a point and stays an (degenerate) table row instead
    transitive = (
        len(group.factors) == 1
        and ambient >= 1
        and transitive_on_complex_projective(group.factors[0], factor_weights[0])
    )
    verdict = CandidateVerdict(
        group=group,
        rep=rep,
        fs=fs,
        dim_ok=product_dim_condition(group, dim_v),
        weight_ok=weight_condition(group, summand),
        transitive=transitive,
        degenerate=ambient < 2,
        same_orbit_as=None,
        orbit_dim_c=orbit,
        levi=levi,
        ambient_n=ambient,
        is_mtc=is_mtc and not transitive,
    )
    report = OrbitReport(orbit, levi, ambient, verdict.is_mtc)
    return report, verdict


def _reducible_report(group: GroupSpec, rep: RepExpr):
    shape = _reducible_shape(rep)
    outcome = classify_reducible(shape)
    dim_v = rep.dim
    ambient = dim_v // 2 - 1
    base_orbit = weyl_dim(shape.base_type, shape.base_weight) - 1
    levi = isotropy_levi(shape.base_type, shape.base_weight)
    is_mtc = outcome.valid and 2 * base_orbit == dim_v - 2
    notes = []
    if outcome.valid:
        notes.append(outcome.identification)
    else:
        notes.append(f"invalid: {outcome.reason}")
    verdict = CandidateVerdict(
        group=group,
        rep=rep,
        fs=FS_QUATERNIONIC,
        dim_ok=product_dim_condition(group, dim_v),
        weight_ok=None,
        transitive=False,
        degenerate=ambient < 2,
        same_orbit_as=None,
        orbit_dim_c=base_orbit,
        levi=levi,
        ambient_n=ambient,
        is_mtc=is_mtc,
        notes=tuple(notes),
    )
    return OrbitReport(base_orbit, levi, ambient, is_mtc), verdict


# -- enumeration searches -----------------------------------------------


def _dominant_sweep(t: SimpleLieType, dim_bound: int) -> Iterator[Weight]:
    """All nonzero dominant weights with dimension at most the bound.

    Relies on strict monotonicity of the Weyl dimension in every Dynkin
    label, so the feasible set is a downset of the label lattice and the
    search can prune on the first violation.
    """

    def grow(lam: tuple[int, ...], start: int) -> Iterator[Weight]:
        for i in range(start, t.rank):
            bumped = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
            if weyl_dim(t, bumped) <= dim_bound:
                yield bumped
                yield from grow(bumped, i)

    yield from grow((0,) * t.rank, 0)


def _simple_types(rank_cap: int, skip: frozenset[str] = frozenset()) -> list[SimpleLieType]:
    out = []
    for r in range(1, rank_cap + 1):
        for s in ("A", "B", "C", "D"):
            try:
                t = SimpleLieType(s, r)
            except ValueError:
                continue
            out.append(t)
    for s, r in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if r <= rank_cap:
            out.append(SimpleLieType(s, r))
    return [t for t in out if str(t) not in skip]


_SPIN11 = (SimpleLieType("B", 5), (0, 0, 0, 0, 1))
_SPIN12 = (SimpleLieType("D", 6), (0, 0, 0, 0, 1, 0))


def enumerate_case1(rank_cap: int) -> list[CandidateVerdict]:
    """Search over simple groups with irreducible quaternionic modules.

    Returns exactly the qualifying candidates: half-dimension orbit rows,
    projectively transitive standard actions (flagged), and the degenerate
    rank-one row.  Rank one is treated separately: the dimensional bound
    there only allows modules on HP^0 and HP^1, both below the ambient
    dimension the classification assumes, and only the standard module is
    carried (flagged degenerate) to mirror the published table.

    B2 is skipped as an alias of C2 (same algebra, reversed labels), so
    the rank-2 rows appear once, in symplectic form.
    """
    if rank_cap < 2:
        raise ValueError("rank_cap must be at least 2")
    a1 = SimpleLieType("A", 1)
    out = [_verdict(GroupSpec((a1,)), [(1,)])]
    for t in _simple_types(rank_cap, skip=frozenset({"B2"})):
        if t.rank < 2:
            continue
        bound = dim_g(t) - t.rank + 2  # the simple dimensional condition
        seen: set[Weight] = set()
        for lam in _dominant_sweep(t, bound):
            canon = automorphism_canonical(t, lam)
            if canon in seen:
                continue
            seen.add(canon)
            if fs_type(t, canon) != FS_QUATERNIONIC:
                continue
            if transitive_on_complex_projective(t, canon):
                out.append(_verdict(GroupSpec((t,)), [canon]))
                continue
            _, verdict = mtc_report(
                GroupSpec((t,)), RepExpr.irreducible(GroupSpec((t,)), [canon])
            )
            if verdict.is_mtc:
                out.append(verdict)
    out.sort(key=_sort_key)
    return _annotate_same_orbit(
        out,
        [
            ((_SPIN11[0], _SPIN11[1]), (_SPIN12[0], _SPIN12[1])),
        ],
    )


def enumerate_case2(rank_cap: int) -> list[CandidateVerdict]:
    """Search over non-simple groups with irreducible modules.

    The structural reduction is enforced: every quaternionic tensor factor
    is the standard SU(2) module, leaving the SU(2)^3 triple and the pairs
    SU(2) x G' with G' simple carrying a real module.  Pairs at rank >= 2
    must pass the factor dimensional bound, the root-translate weight
    condition and the exact half-dimension identity; at rank 1 the product
    dimensional bound forces the adjoint module.  C2 is skipped as an
    alias of B2, and diagram-automorphism copies (D4 triality) are folded
    onto their canonical representative.
    """
    if rank_cap < 2:
        raise ValueError("rank_cap must be at least 2")
    a1 = SimpleLieType("A", 1)
    out = [
        _verdict(GroupSpec((a1, a1, a1)), [(1,), (1,), (1,)]),
        _verdict(GroupSpec((a1, a1)), [(2,), (1,)]),
    ]
    for t in _simple_types(rank_cap, skip=frozenset({"C2"})):
        if t.rank < 2:
            continue
        bound = (dim_g(t) - t.rank + 2) // 2  # the SU(2)-pair bound
        seen: set[Weight] = set()
        for lam in _dominant_sweep(t, bound):
            canon = automorphism_canonical(t, lam)
            if canon in seen:
                continue
            seen.add(canon)
            if fs_type(t, canon) != FS_REAL:
                continue
            if not su2_factor_condition(t, canon):
                continue
            group = GroupSpec((t, a1))
            _, verdict = mtc_report(
                group, RepExpr.irreducible(group, [canon, (1,)])
            )
            if verdict.weight_ok and verdict.is_mtc:
                out.append(verdict)
    out.sort(key=_sort_key)
    b3, d4, g2 = SimpleLieType("B", 3), SimpleLieType("D", 4), SimpleLieType("G", 2)
    return _annotate_same_orbit(
        out,
        [
            (((g2, a1), ((1, 0), (1,))), ((b3, a1), ((1, 0, 0), (1,)))),
            (((b3, a1), ((0, 0, 1), (1,))), ((d4, a1), ((1, 0, 0, 0), (1,)))),
        ],
    )


def _verdict(group: GroupSpec, factor_weights) -> CandidateVerdict:
    _, verdict = mtc_report(group, RepExpr.irreducible(group, factor_weights))
    return verdict


def _annotate_same_orbit(verdicts, pairs):
    """Install mutual same-orbit annotations; the identifications are
    recorded facts, not deduced by the engine."""

    def matches(v: CandidateVerdict, spec) -> bool:
        types, weights = spec
        if isinstance(types, SimpleLieType):
            types, weights = (types,), (weights,)
        if v.group.factors != tuple(types):
            return False
        summand = v.rep.summands[0][1]
        actual = tuple(
            fac.resolve(t) for fac, t in zip(summand.factors, v.group.factors)
        )
        return actual == tuple(weights)

    out = list(verdicts)
    for left, right in pairs:
        li = next((i for i, v in enumerate(out) if matches(v, left)), None)
        ri = next((i for i, v in enumerate(out) if matches(v, right)), None)
        if li is None or ri is None:
            continue
        out[li] = replace(out[li], same_orbit_as=out[ri].key)
        out[ri] = replace(out[ri], same_orbit_as=out[li].key)
    return out


def enumerate_case3(rank_cap: int) -> list[tuple[ReducibleSpec, ReducibleVerdict]]:
    """All valid reducible shapes with base rank up to the cap."""
    if rank_cap < 2:
        raise ValueError("rank_cap must be at least 2")
    out = []
    for r in range(1, rank_cap + 1):
        a = SimpleLieType("A", r)
        lam = tuple(1 if i == 0 else 0 for i in range(r))
        spec = ReducibleSpec(0, 1, a, lam)
        out.append((spec, classify_reducible(spec)))
    for r in range(2, rank_cap + 1):
        c = SimpleLieType("C", r)
        lam = tuple(1 if i == 0 else 0 for i in range(r))
        for spec in (
            ReducibleSpec(2, 0, c, lam),
            ReducibleSpec(0, 1, c, lam),
        ):
            out.append((spec, classify_reducible(spec)))
    return out


# -- brute-force cross-check of the non-simple reduction ----------------


def case2_brute_force(rank_cap: int, max_factors: int = 3) -> list[CandidateVerdict]:
    """Re-derive the non-simple rows without the structural reduction.

    Sweeps every product of up to ``max_factors`` simple factors of rank
    at most ``rank_cap``, every irreducible tensor module within the
    product dimensional bound, and keeps the candidates that are
    quaternionic, satisfy the weight condition and hit the half-dimension
    identity exactly.  Intended for small caps; verifies that the
    structural search in ``enumerate_case2`` misses nothing.
    """
    types = [t for t in _simple_types(rank_cap, skip=frozenset({"B2", "C2"}))]
    types += [SimpleLieType("B", 2)] if rank_cap >= 2 else []
    types = sorted(types, key=lambda t: t.sort_key)
    found = []
    for count in range(2, max_factors + 1):
        for combo in combinations_with_replacement(types, count):
            group = GroupSpec(
                tuple(sorted(combo, key=lambda t: t.sort_key, reverse=True))
            )
            bound = group.dim - group.rank + 2
            if 2**count > bound:
                continue
            per_factor: list[list[Weight]] = []
            for t in group.factors:
                opts = [
                    lam
                    for lam in _dominant_sweep(t, bound // (2 ** (count - 1)))
                ]
                per_factor.append(opts)
            for choice in _product(per_factor):
                dim_v = 1
                for t, lam in zip(group.factors, choice):
                    dim_v *= weyl_dim(t, lam)
                if dim_v > bound or dim_v % 2:
                    continue
                rep = RepExpr.irreducible(group, choice)
                summand = rep.summands[0][1]
                if rep.summand_fs(summand) != FS_QUATERNIONIC:
                    continue
                _, verdict = mtc_report(group, rep)
                if verdict.weight_ok and verdict.is_mtc:
                    found.append(verdict)
    found.sort(key=_sort_key)
    return found


def _product(options: list[list[Weight]]) -> Iterator[tuple[Weight, ...]]:
    if not options:
        yield ()
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield (head,) + tail


# -- normal holonomy ----------------------------------------------------


@dataclass(frozen=True)
class NormalHolonomy:
    group_description: str
    dim: int


_A = SimpleLieType
_PARALLEL_ROWS: dict[str, dict] = {
    # irreducible-lift rows: holonomy is the slice image of the Levi isotropy
    "tsu5": {"type": _A("C", 3), "weight": (0, 0, 1), "desc": "U(3)"},
    "tsu6": {"type": _A("A", 5), "weight": (0, 0, 1, 0, 0), "desc": "S(U(3)xU(3))"},
    "tsu7": {"type": _A("D", 6), "weight": (0, 0, 0, 0, 1, 0), "desc": "U(6)"},
    "tsu8": {"type": _A("E", 7), "weight": (0, 0, 0, 0, 0, 0, 1), "desc": "E6.T1"},
}


def normal_holonomy(entry: str, n: Optional[int] = None) -> NormalHolonomy:
    """Restricted normal holonomy of a maximal totally complex submanifold.

    ``entry`` is a parallel catalog row key (tsu1..tsu8) or the
    ``nonparallel`` marker; rows parametrized by the ambient dimension
    need ``n``.
    """
    if entry == "nonparallel":
        if n is None or n < 2:
            raise ValueError("the non-parallel case needs an ambient n >= 2")
        return NormalHolonomy(f"U({n})", n * n)
    if entry == "tsu1":
        if n is None or n < 1:
            raise ValueError("the complex projective row needs an ambient n >= 1")
        # slice image of the isotropy of a projective line stabilizer
        levi = isotropy_levi(_A("A", n), (1,) + (0,) * (n - 1)) if n > 1 else Levi(
            (), 1
        )
        return NormalHolonomy(f"U({n})", levi.dim)
    if entry == "tsu2":
        if n is None or n < 3:
            raise ValueError("this row needs n >= 3")
        so = _so_type(n + 2)
        levi = isotropy_levi(so[0], so[1])
        return NormalHolonomy(
            f"T1 x ({levi.render()})", 1 + levi.dim
        )
    if entry == "tsu3":
        return NormalHolonomy("T3", 3)
    if entry == "tsu4":
        return NormalHolonomy("T2", 2)
    row = _PARALLEL_ROWS.get(entry)
    if row is None:
        raise ValueError(f"unknown catalog entry {entry!r}")
    levi = isotropy_levi(row["type"], row["weight"])
    return NormalHolonomy(row["desc"], levi.dim)


def _so_type(m: int) -> tuple[SimpleLieType, Weight]:
    """SO(m) with its vector representation, in simple-type coordinates."""
    if m < 5:
        raise ValueError("need m >= 5")
    if m == 6:  # D3 alias
        return SimpleLieType("A", 3), (0, 1, 0)
    if m % 2:
        r = (m - 1) // 2
        return SimpleLieType("B", r), (1,) + (0,) * (r - 1)
    r = m // 2
    return SimpleLieType("D", r), (1,) + (0,) * (r - 1)
