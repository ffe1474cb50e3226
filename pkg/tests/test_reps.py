"""Representation calculus: three routes (Weyl formula, root-string
descent, Freudenthal recursion) cross-checked on frozen oracle values."""

import random

import pytest

from mtclie.reps import (
    FS_COMPLEX,
    FS_QUATERNIONIC,
    FS_REAL,
    FactorRep,
    RepExpr,
    Summand,
    dual_weight,
    freudenthal_multiplicities,
    fs_combine,
    fs_type,
    tensor_weight_set,
    weight_set,
    weyl_dim,
)
from mtclie.roots import GroupSpec, SimpleLieType, build_root_system

A = SimpleLieType

# Frozen dimensions.  The classical entries follow from closed-form
# binomial expressions; the exceptional entries are standard minuscule /
# adjoint dimensions, recomputed by hand from the formula before freezing.
KNOWN_DIMS = [
    (A("A", 1), (1,), 2),
    (A("A", 1), (2,), 3),
    (A("A", 2), (1, 1), 8),          # adjoint
    (A("A", 4), (0, 1, 0, 0), 10),   # C(5,2)
    (A("A", 5), (0, 0, 1, 0, 0), 20),  # C(6,3)
    (A("B", 3), (0, 0, 1), 8),       # spin
    (A("B", 5), (0, 0, 0, 0, 1), 32),  # spin
    (A("B", 6), (0, 0, 0, 0, 0, 1), 64),  # spin
    (A("C", 3), (1, 0, 0), 6),
    (A("C", 3), (0, 0, 1), 14),      # third fundamental: C(6,3) - C(6,1)
    (A("D", 6), (0, 0, 0, 0, 1, 0), 32),  # half-spin
    (A("G", 2), (1, 0), 7),
    (A("G", 2), (0, 1), 14),         # adjoint
    (A("F", 4), (0, 0, 0, 1), 26),
    (A("E", 6), (1, 0, 0, 0, 0, 0), 27),
    (A("E", 7), (0, 0, 0, 0, 0, 0, 1), 56),
    (A("E", 8), (0, 0, 0, 0, 0, 0, 0, 1), 248),  # adjoint
]


@pytest.mark.parametrize("t,lam,dim", KNOWN_DIMS, ids=lambda v: str(v))
def test_weyl_dim_known(t, lam, dim):
    assert weyl_dim(t, lam) == dim


@pytest.mark.parametrize("t,lam,dim", KNOWN_DIMS, ids=lambda v: str(v))
def test_freudenthal_sums_to_weyl_dim(t, lam, dim):
    mults = freudenthal_multiplicities(t, lam)
    assert sum(mults.values()) == dim
    assert set(mults) == set(weight_set(t, lam))
    assert mults[lam] == 1


def test_adjoint_multiplicities():
    # the adjoint module has multiplicity rank at zero, 1 on roots
    for t in (A("A", 2), A("G", 2), A("C", 3)):
        rs = build_root_system(t)
        top = max(rs.positive_roots, key=lambda r: r.height)
        mults = freudenthal_multiplicities(t, top.labels)
        assert mults[(0,) * t.rank] == t.rank
        for r in rs.positive_roots:
            assert mults[r.labels] == 1


def _random_dominant(rng, t):
    while True:
        lam = [0] * t.rank
        for _ in range(rng.randint(1, 4)):
            lam[rng.randrange(t.rank)] += 1
        if sum(lam) <= 4:
            return tuple(lam)


def test_freudenthal_random_cross_check():
    rng = random.Random(1729)
    pool = [A("A", 1), A("A", 2), A("A", 3), A("A", 4), A("B", 2),
            A("B", 3), A("B", 4), A("C", 3), A("C", 4), A("D", 4), A("G", 2),
            A("F", 4)]
    for _ in range(60):
        t = rng.choice(pool)
        lam = _random_dominant(rng, t)
        assert sum(freudenthal_multiplicities(t, lam).values()) == weyl_dim(t, lam)


@pytest.mark.parametrize(
    "t,lam",
    [(A("A", 3), (1, 0, 1)), (A("B", 3), (0, 1, 0)), (A("C", 3), (2, 0, 0)),
     (A("D", 4), (1, 1, 0, 0)), (A("G", 2), (2, 0))],
    ids=str,
)
def test_weight_set_weyl_closed(t, lam):
    rs = build_root_system(t)
    ws = weight_set(t, lam)
    for w in ws:
        for i in range(t.rank):
            assert rs.reflect(w, i) in ws


def test_dual_weight_involutive_and_known():
    rng = random.Random(4)
    for t in (A("A", 4), A("A", 5), A("D", 5), A("E", 6), A("B", 3), A("C", 4)):
        for _ in range(10):
            lam = _random_dominant(rng, t)
            assert dual_weight(t, dual_weight(t, lam)) == lam
    assert dual_weight(A("A", 5), (1, 0, 0, 0, 0)) == (0, 0, 0, 0, 1)
    assert dual_weight(A("A", 5), (0, 0, 1, 0, 0)) == (0, 0, 1, 0, 0)
    assert dual_weight(A("D", 5), (0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)
    assert dual_weight(A("E", 6), (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)


def test_fs_type_classical_families():
    for m in range(2, 13):
        std = (1,) + (0,) * (m - 1)
        assert fs_type(A("C", m), std) == FS_QUATERNIONIC
        assert fs_type(A("A", m), std) == FS_COMPLEX
        if m >= 2:
            assert fs_type(A("B", m), std) == FS_REAL
        if m >= 4:
            assert fs_type(A("D", m), std) == FS_REAL
    assert fs_type(A("A", 1), (1,)) == FS_QUATERNIONIC
    assert fs_type(A("A", 1), (2,)) == FS_REAL


def test_fs_type_spinors():
    # spin modules: B_m quaternionic iff m = 1,2 mod 4; D_m half-spin
    # self-dual iff m even, quaternionic iff m = 2 mod 4
    assert fs_type(A("B", 3), (0, 0, 1)) == FS_REAL
    assert fs_type(A("B", 4), (0, 0, 0, 1)) == FS_REAL
    assert fs_type(A("B", 5), (0, 0, 0, 0, 1)) == FS_QUATERNIONIC
    assert fs_type(A("B", 6), (0, 0, 0, 0, 0, 1)) == FS_QUATERNIONIC
    assert fs_type(A("D", 5), (0, 0, 0, 0, 1)) == FS_COMPLEX
    assert fs_type(A("D", 6), (0, 0, 0, 0, 1, 0)) == FS_QUATERNIONIC
    assert fs_type(A("D", 8), (0, 0, 0, 0, 0, 0, 1, 0)) == FS_REAL
    assert fs_type(A("E", 7), (0, 0, 0, 0, 0, 0, 1)) == FS_QUATERNIONIC


def test_fs_combine_rules():
    q, r, c = FS_QUATERNIONIC, FS_REAL, FS_COMPLEX
    assert fs_combine([q, q]) == r
    assert fs_combine([q, r]) == q
    assert fs_combine([r, r]) == r
    assert fs_combine([q, q, q]) == q
    assert fs_combine([c, q]) == c
    assert fs_combine([q]) == q
    with pytest.raises(ValueError):
        fs_combine([])


def test_fs_combine_matches_invariant_form_parity():
    """Oracle: a tensor product of self-dual modules carries the product of
    the invariant bilinear forms, so its type is the product of signs."""
    sign = {FS_REAL: 1, FS_QUATERNIONIC: -1}
    cases = [
        (A("A", 1), (1,)), (A("A", 1), (2,)), (A("B", 2), (0, 1)),
        (A("C", 3), (0, 0, 1)), (A("B", 3), (0, 0, 1)),
    ]
    for t1, l1 in cases:
        for t2, l2 in cases:
            combined = fs_combine([fs_type(t1, l1), fs_type(t2, l2)])
            assert sign[combined] == sign[fs_type(t1, l1)] * sign[fs_type(t2, l2)]


def test_rep_expr_tensor_and_sum():
    a1 = A("A", 1)
    c3 = A("C", 3)
    g = GroupSpec((c3, a1))
    rep = RepExpr.irreducible(g, [(1, 0, 0), (1,)])
    assert rep.dim == 12
    assert rep.is_irreducible
    assert rep.render() == "[1,0,0]*[1]"
    ws = tensor_weight_set(g, rep.summands[0][1])
    assert len(ws) == 12
    g1 = GroupSpec((A("A", 3),))
    lam = (1, 0, 0)
    two = RepExpr(
        g1,
        (
            (1, Summand((FactorRep(lam),))),
            (1, Summand((FactorRep(lam, dual=True),))),
        ),
    )
    assert two.dim == 8
    assert not two.is_irreducible
    assert two.render() == "[1,0,0]+[1,0,0]^d"


def test_rep_expr_validation():
    g = GroupSpec((A("A", 2),))
    with pytest.raises(ValueError):
        RepExpr.irreducible(g, [(1,)])  # wrong label length
    with pytest.raises(ValueError):
        RepExpr.irreducible(g, [(-1, 0)])  # not dominant
