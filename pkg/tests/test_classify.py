"""Classification conditions, searches and orbit bookkeeping."""

import pytest

from mtclie.classify import (
    REASON_DIM_ESTIMATE,
    REASON_IRREDUCIBLE,
    REASON_K_BOUND,
    REASON_NOT_TRANSITIVE,
    CandidateVerdict,
    ClassificationError,
    ReducibleSpec,
    case2_brute_force,
    classify_reducible,
    complex_orbit_dim,
    dim_condition_simple,
    enumerate_case1,
    enumerate_case2,
    enumerate_case3,
    isotropy_levi,
    mtc_report,
    normal_holonomy,
    su2_factor_condition,
    weight_condition,
)
from mtclie.reps import FS_QUATERNIONIC, FactorRep, RepExpr, Summand, fs_type, weyl_dim
from mtclie.roots import GroupSpec, SimpleLieType

A = SimpleLieType
STD = lambda t: (1,) + (0,) * (t.rank - 1)


# -- elementary conditions ----------------------------------------------


def test_dim_condition_simple():
    # dim G - rk G >= dim V - 2
    assert dim_condition_simple(A("C", 3), (0, 0, 1))      # 18 >= 12
    assert dim_condition_simple(A("B", 6), (0,) * 5 + (1,))  # 72 >= 62
    assert not dim_condition_simple(A("B", 7), (0,) * 6 + (1,))  # 98 < 126
    assert not dim_condition_simple(A("A", 3), (1, 0, 2))


def test_su2_factor_condition():
    assert su2_factor_condition(A("B", 3), (1, 0, 0))   # 18 >= 12
    assert su2_factor_condition(A("G", 2), (1, 0))      # 12 >= 12
    assert not su2_factor_condition(A("G", 2), (0, 1))  # 12 < 26
    assert su2_factor_condition(A("B", 4), (0, 0, 0, 1))  # 32 >= 30
    assert not su2_factor_condition(A("B", 5), (0, 0, 0, 0, 1))  # 50 < 62


def _pair_summand(t, lam):
    return Summand((FactorRep(lam), FactorRep((1,))))


def test_weight_condition_accepts_known_rows():
    a1 = A("A", 1)
    for t, lam in [
        (A("B", 2), (1, 0)),
        (A("B", 3), (0, 0, 1)),
        (A("B", 3), (1, 0, 0)),
        (A("G", 2), (1, 0)),
        (A("D", 4), (1, 0, 0, 0)),
    ]:
        g = GroupSpec((t, a1))
        assert weight_condition(g, _pair_summand(t, lam)), (t, lam)


def test_weight_condition_rejects_b4_spin_pair():
    # Spin(9) x SU(2): passes the dimensional bound, fails on weights.
    g = GroupSpec((A("B", 4), A("A", 1)))
    assert not weight_condition(g, _pair_summand(A("B", 4), (0, 0, 0, 1)))


def test_weight_condition_simple_rows():
    for t, lam in [
        (A("C", 3), (0, 0, 1)),
        (A("A", 5), (0, 0, 1, 0, 0)),
        (A("E", 7), (0, 0, 0, 0, 0, 0, 1)),
    ]:
        g = GroupSpec((t,))
        assert weight_condition(g, Summand((FactorRep(lam),)))


# -- orbit geometry ------------------------------------------------------


HALF_DIM_ROWS = [
    (A("C", 3), (0, 0, 1), 6, 14),
    (A("A", 5), (0, 0, 1, 0, 0), 9, 20),
    (A("D", 6), (0, 0, 0, 0, 1, 0), 15, 32),
    (A("E", 7), (0, 0, 0, 0, 0, 0, 1), 27, 56),
]


@pytest.mark.parametrize("t,lam,orbit,dim", HALF_DIM_ROWS, ids=str)
def test_half_dimension_identity(t, lam, orbit, dim):
    assert complex_orbit_dim(t, lam) == orbit
    assert weyl_dim(t, lam) == dim
    assert 2 * orbit == dim - 2


def test_b6_spin_fails_half_dimension():
    # Spin(13): quaternionic, passes the dimensional bound, but the orbit
    # has dimension 21, well below (64 - 2) / 2 = 31.
    t, lam = A("B", 6), (0, 0, 0, 0, 0, 1)
    assert fs_type(t, lam) == FS_QUATERNIONIC
    assert dim_condition_simple(t, lam)
    assert complex_orbit_dim(t, lam) == 21
    assert 2 * complex_orbit_dim(t, lam) != weyl_dim(t, lam) - 2


LEVI_ROWS = [
    (A("C", 3), (0, 0, 1), "A2+T1"),
    (A("A", 5), (0, 0, 1, 0, 0), "A2+A2+T1"),
    (A("D", 6), (0, 0, 0, 0, 1, 0), "A5+T1"),
    (A("E", 7), (0, 0, 0, 0, 0, 0, 1), "E6+T1"),
    (A("B", 5), (0, 0, 0, 0, 1), "A4+T1"),
    (A("G", 2), (1, 0), "A1+T1"),
    (A("E", 6), (1, 0, 0, 0, 0, 0), "D5+T1"),
]


@pytest.mark.parametrize("t,lam,expect", LEVI_ROWS, ids=str)
def test_isotropy_levi(t, lam, expect):
    assert isotropy_levi(t, lam).render() == expect


def test_isotropy_levi_edge_cases():
    # full flag: torus only
    assert isotropy_levi(A("A", 2), (1, 1)).render() == "T2"
    # zero weight: the whole group, no center
    levi = isotropy_levi(A("C", 3), (0, 0, 0))
    assert levi.center_rank == 0 and levi.factors == (A("C", 3),)
    # D5 node 2 crossed: A1 x A3 (the D3 tail is reported as A3)
    assert isotropy_levi(A("D", 5), (0, 1, 0, 0, 0)).render() == "A3+A1+T1"
    levi = isotropy_levi(A("F", 4), (0, 0, 0, 1))
    assert levi.render() == "B3+T1"


def test_levi_dim_consistency():
    # dim of the Levi equals dim G minus twice the crossed positive roots
    for t, lam, *_ in HALF_DIM_ROWS:
        levi = isotropy_levi(t, lam)
        from mtclie.roots import dim_g

        assert levi.dim == dim_g(t) - 2 * complex_orbit_dim(t, lam)


# -- mtc_report ---------------------------------------------------------


def test_mtc_report_rejects_complex_type():
    g = GroupSpec((A("A", 3),))
    with pytest.raises(ClassificationError):
        mtc_report(g, RepExpr.irreducible(g, [(1, 0, 0)]))


def test_mtc_report_verdict_fields():
    g = GroupSpec((A("C", 3),))
    report, verdict = mtc_report(g, RepExpr.irreducible(g, [(0, 0, 1)]))
    assert report.orbit_dim_c == 6
    assert report.ambient_n == 6
    assert report.is_mtc and verdict.is_mtc
    assert verdict.fs == FS_QUATERNIONIC
    assert verdict.dim_ok and verdict.weight_ok
    assert not verdict.transitive and not verdict.degenerate
    d = verdict.to_json_dict()
    assert list(d) == [
        "group", "rep", "fs_type", "dim_ok", "weight_ok", "transitive",
        "degenerate", "same_orbit_as", "orbit_dim_c", "levi", "ambient_n",
        "is_mtc", "table_row", "notes",
    ]


def test_mtc_report_transitive_row():
    g = GroupSpec((A("C", 4),))
    _, verdict = mtc_report(g, RepExpr.irreducible(g, [(1, 0, 0, 0)]))
    assert verdict.transitive and not verdict.is_mtc


def test_mtc_report_reducible_pair():
    g = GroupSpec((A("A", 3),))
    rep = RepExpr(
        g,
        (
            (1, Summand((FactorRep((1, 0, 0)),))),
            (1, Summand((FactorRep((1, 0, 0), dual=True),))),
        ),
    )
    report, verdict = mtc_report(g, rep)
    assert verdict.is_mtc and report.ambient_n == 3
    assert verdict.weight_ok is None
    assert "CP^3 in HP^3" in verdict.notes


def test_mtc_report_reducible_rejections():
    g = GroupSpec((A("B", 3),))
    # three copies of a real module: odd multiplicities forbidden
    rep = RepExpr(g, ((3, Summand((FactorRep((1, 0, 0)),))),))
    with pytest.raises(ClassificationError):
        mtc_report(g, rep)
    # complex summand without its dual
    g2 = GroupSpec((A("A", 3),))
    rep = RepExpr(g2, ((2, Summand((FactorRep((1, 0, 0)),))),))
    with pytest.raises(ClassificationError):
        mtc_report(g2, rep)


# -- case 1 -------------------------------------------------------------


def _keys(verdicts):
    return {v.key for v in verdicts}


EXPECTED_CASE1_TABLE = {
    "A1 [1]",
    "A5 [0,0,1,0,0]",
    "C3 [0,0,1]",
    "B5 [0,0,0,0,1]",
    "D6 [0,0,0,0,1,0]",
    "E7 [0,0,0,0,0,0,1]",
}


def test_enumerate_case1_exact_set():
    out = enumerate_case1(12)
    table = {v.key for v in out if not v.transitive}
    assert table == EXPECTED_CASE1_TABLE
    transitive = {v.key for v in out if v.transitive}
    expected_transitive = {
        "C%d [%s]" % (m, ",".join(["1"] + ["0"] * (m - 1))) for m in range(2, 13)
    }
    assert transitive == expected_transitive
    by_key = {v.key: v for v in out}
    assert by_key["A1 [1]"].degenerate
    assert by_key["B5 [0,0,0,0,1]"].same_orbit_as == "D6 [0,0,0,0,1,0]"
    assert by_key["D6 [0,0,0,0,1,0]"].same_orbit_as == "B5 [0,0,0,0,1]"
    # output is canonically sorted and deterministic
    assert [v.key for v in out] == [v.key for v in enumerate_case1(12)]


def test_enumerate_case1_small_cap():
    out = enumerate_case1(5)
    table = {v.key for v in out if not v.transitive}
    assert table == {"A1 [1]", "A5 [0,0,1,0,0]", "C3 [0,0,1]", "B5 [0,0,0,0,1]"}
    with pytest.raises(ValueError):
        enumerate_case1(1)


# -- case 2 -------------------------------------------------------------


def _so_keys(cap):
    def vec(series, m):
        labels = ",".join(["1"] + ["0"] * (m - 1))
        return f"{series}{m}xA1 [{labels}]*[1]"

    keys = {vec("B", m) for m in range(2, cap + 1)}  # SO(2m+1)
    keys |= {vec("D", m) for m in range(4, cap + 1)}  # SO(2m)
    keys.add("A3xA1 [0,1,0]*[1]")  # SO(6)
    return keys


def test_enumerate_case2_exact_set():
    out = enumerate_case2(12)
    keys = _keys(out)
    expected = _so_keys(12) | {
        "A1xA1 [2]*[1]",
        "A1xA1xA1 [1]*[1]*[1]",
        "B3xA1 [0,0,1]*[1]",
        "G2xA1 [1,0]*[1]",
    }
    assert keys == expected
    by_key = {v.key: v for v in out}
    assert by_key["G2xA1 [1,0]*[1]"].same_orbit_as == "B3xA1 [1,0,0]*[1]"
    assert by_key["B3xA1 [1,0,0]*[1]"].same_orbit_as == "G2xA1 [1,0]*[1]"
    assert by_key["B3xA1 [0,0,1]*[1]"].same_orbit_as == "D4xA1 [1,0,0,0]*[1]"
    assert by_key["D4xA1 [1,0,0,0]*[1]"].same_orbit_as == "B3xA1 [0,0,1]*[1]"
    for v in out:
        assert v.weight_ok and v.is_mtc and v.fs == FS_QUATERNIONIC


def test_case2_brute_force_agrees_with_reduction():
    """At small rank, dropping the structural reduction and sweeping all
    products finds the same orbits (modulo presentation aliases)."""
    from mtclie.cli import _canonical_key

    bf = {_canonical_key(v) for v in case2_brute_force(3)}
    structural = _keys(enumerate_case2(3))
    assert bf == structural


# -- case 3 -------------------------------------------------------------


def test_classify_reducible_valid_rows():
    for m in range(2, 13):
        c = A("C", m)
        out = classify_reducible(ReducibleSpec(2, 0, c, STD(c)))
        assert out.valid and out.identification == f"CP^{2 * m - 1} in HP^{2 * m - 1}"
        out = classify_reducible(ReducibleSpec(0, 1, c, STD(c)))
        assert out.valid and out.identification == f"CP^{2 * m - 1} in HP^{2 * m - 1}"
    for m in range(1, 13):
        a = A("A", m)
        out = classify_reducible(ReducibleSpec(0, 1, a, STD(a)))
        assert out.valid and out.identification == f"CP^{m} in HP^{m}"


def test_classify_reducible_named_reasons():
    c2, std = A("C", 2), (1, 0)
    assert classify_reducible(ReducibleSpec(1, 1, c2, std)).reason == REASON_DIM_ESTIMATE
    assert classify_reducible(ReducibleSpec(3, 0, c2, std)).reason == REASON_K_BOUND
    assert classify_reducible(ReducibleSpec(0, 2, c2, std)).reason == REASON_DIM_ESTIMATE
    assert classify_reducible(ReducibleSpec(1, 0, c2, std)).reason == REASON_IRREDUCIBLE
    assert (
        classify_reducible(ReducibleSpec(2, 0, A("C", 3), (0, 0, 1))).reason
        == REASON_NOT_TRANSITIVE
    )
    assert (
        classify_reducible(ReducibleSpec(0, 1, A("B", 3), (1, 0, 0))).reason
        == REASON_NOT_TRANSITIVE
    )


def test_reducible_spec_invariants():
    with pytest.raises(ValueError):
        ReducibleSpec(0, 0, A("C", 2), (1, 0))
    with pytest.raises(ValueError):
        ReducibleSpec(2, 0, A("B", 3), (1, 0, 0))  # real base with k > 0


def test_enumerate_case3():
    rows = enumerate_case3(12)
    assert all(v.valid for _, v in rows)
    assert len(rows) == 12 + 2 * 11


# -- normal holonomy ----------------------------------------------------


def test_normal_holonomy_rows():
    assert normal_holonomy("tsu5").dim == 9
    assert normal_holonomy("tsu5").group_description == "U(3)"
    assert normal_holonomy("tsu6").dim == 17
    assert normal_holonomy("tsu7").dim == 36
    assert normal_holonomy("tsu8").dim == 79
    assert normal_holonomy("tsu3").dim == 3
    assert normal_holonomy("tsu4").dim == 2
    for n in (1, 2, 3, 7):
        nh = normal_holonomy("tsu1", n)
        assert nh.dim == n * n and nh.group_description == f"U({n})"
    nh = normal_holonomy("nonparallel", 9)
    assert nh.dim == 81 and nh.group_description == "U(9)"
    with pytest.raises(ValueError):
        normal_holonomy("nonparallel")
    with pytest.raises(ValueError):
        normal_holonomy("no-such-row")
