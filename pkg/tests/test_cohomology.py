import itertools

import pytest

from flagcoh.blowup import all_minus, all_sign_vectors, blowup_poly, blowup_table
from flagcoh.cartan import compact_dual_data
from flagcoh.cohomology import (
    assign_signs,
    cohomology_of_complex,
    complex_for,
    diamond_check,
    integral_cohomology,
    mod2_dims,
    rational_betti,
)
from flagcoh.graph import build_graph
from flagcoh.snf import elementary_divisors, rank, smith_diagonal
from flagcoh.weyl import enumerate_group


def exterior_betti(name):
    degrees = compact_dual_data(name).degrees
    top = sum(2 * d - 1 for d in degrees)
    out = [0] * (top + 1)
    for r in range(len(degrees) + 1):
        for comb in itertools.combinations(degrees, r):
            out[sum(2 * d - 1 for d in comb)] += 1
    return tuple(out)


def test_smith_diagonal_basics():
    assert smith_diagonal([[2, 0], [0, 2]]) == [2, 2]
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    assert smith_diagonal([[0, 0], [0, 0]]) == []
    assert rank([[1, 2], [2, 4]]) == 1
    assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]
    assert elementary_divisors([[2, 0], [0, 3]]) == [6]
    # divisibility chain, determinant preserved
    d = smith_diagonal([[6, 0, 0], [0, 10, 0], [0, 0, 15]])
    assert d == [1, 30, 30] and d[0] * d[1] * d[2] == 900


def test_diamond_check_passes():
    assert diamond_check(build_graph("A2", "--")) == ()
    assert diamond_check(build_graph("A3", "---")) == ()
    assert diamond_check(build_graph("A1", "-")) == ()


def test_a2_minus_complex_is_diagonal_two():
    cc = assign_signs(build_graph("A2", "--"))
    assert cc.dims() == (1, 2, 2, 1)
    # the only nonzero map: both edges carry +2 (no diamond constraints)
    assert cc.diffs[0] == ((0,), (0,))
    assert cc.diffs[1] == ((2, 0), (0, 2))
    assert cc.diffs[2] == ((0, 0),)


def test_a1_complex_has_zero_maps():
    cc = assign_signs(build_graph("A1", "-"))
    assert cc.diffs == (((0,),),)


def test_square_zero_everywhere():
    for name in ["A3", "B3", "C3", "G2", "D4"]:
        g0 = enumerate_group(name)
        for eps in [all_minus(g0.rank)] + all_sign_vectors(g0.rank)[:3]:
            cc = assign_signs(build_graph(g0, eps))  # raises if delta^2 != 0
            assert cc.dims() == tuple(g0.length_distribution())


def test_integral_cohomology_a2():
    groups = integral_cohomology("A2", "--").groups
    assert groups == ((1, ()), (0, ()), (0, (2, 2)), (1, ()))
    twisted = integral_cohomology("A2", "-+").groups
    assert twisted == ((0, ()), (0, (2,)), (0, (2,)), (0, (2,)))


def test_integral_cohomology_a1():
    assert integral_cohomology("A1", "-").groups == ((1, ()), (1, ()))
    assert integral_cohomology("A1", "+").groups == ((0, ()), (0, (2,)))


def test_rational_betti_matches_exterior_algebra():
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "B4", "D4", "G2"]:
        got = rational_betti(name, all_minus(int(name[1])))
        assert tuple(got) == exterior_betti(name), name


def test_twisted_rational_cohomology_vanishes():
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]:
        g = enumerate_group(name)
        for eps in all_sign_vectors(g.rank):
            if eps == all_minus(g.rank):
                continue
            assert not any(rational_betti(g, eps)), (name, eps)


def test_twisted_rank_four_samples():
    # a slice of the rank-4 twisted systems: solvable, all torsion, exponent 2
    for name in ["A4", "B4", "C4", "D4"]:
        for eps in ["-+--", "+---", "++++"]:
            groups = integral_cohomology(name, eps)
            assert not any(groups.free_ranks()), (name, eps)
            assert all(d == 2 for tors in groups.torsion() for d in tors)


def test_total_betti_is_two_to_g():
    for name in ["A2", "A3", "B3", "C3", "B4", "D4", "G2", "F4"]:
        total = sum(rational_betti(name, all_minus(int(name[1]))))
        assert total == 2 ** compact_dual_data(name).g, name


def test_mod2_dims_are_length_counts():
    assert mod2_dims("A2") == (1, 2, 2, 1)
    assert mod2_dims("A1") == (1, 1)
    assert mod2_dims("G2") == (1, 2, 2, 2, 2, 2, 1)
    for name in ["A3", "B3", "D4"]:
        assert mod2_dims(name) == tuple(enumerate_group(name).length_distribution())


def test_universal_coefficients_consistency():
    # n_k = b_k + even-torsion_k + even-torsion_{k+1} once all torsion is 2-primary
    for name, eps in [("A3", "---"), ("B3", "---"), ("G2", "--"), ("A2", "-+")]:
        g = enumerate_group(name)
        groups = integral_cohomology(g, eps).groups
        dims = mod2_dims(g)
        for k, (free, tors) in enumerate(groups):
            t_here = len([d for d in tors if d % 2 == 0])
            t_above = (
                len([d for d in groups[k + 1][1] if d % 2 == 0])
                if k + 1 < len(groups)
                else 0
            )
            assert dims[k] == free + t_here + t_above


def test_euler_characteristic():
    for name, eps in [("A3", "---"), ("B3", "-+-"), ("G2", "--"), ("A2", "++")]:
        g = enumerate_group(name)
        groups = integral_cohomology(g, eps).groups
        chi = sum((-1) ** k * free for k, (free, _) in enumerate(groups))
        p_at_one = blowup_poly(g, eps)(1)
        assert chi == p_at_one == 0


def test_torsion_is_two_primary():
    for name, eps in [("A3", "---"), ("B3", "---"), ("C3", "---"), ("G2", "--"), ("D4", "----")]:
        for _, tors in integral_cohomology(name, eps).groups:
            assert all(d == 2 for d in tors), (name, eps, tors)


def test_gauge_independence():
    for name, eps in [("A2", "--"), ("A3", "---"), ("B3", "---"), ("G2", "--")]:
        fwd = integral_cohomology(name, eps, "forward").groups
        rev = integral_cohomology(name, eps, "reverse").groups
        assert fwd == rev


def test_unknown_gauge_rejected():
    with pytest.raises(ValueError):
        complex_for("A2", "--", gauge="sideways")


def test_degree_zero_and_top_generators_pair_with_counts():
    # the lone degree-0 class sits on the identity (count 0) and the top
    # class on the longest element (count = polynomial degree)
    for name in ["A2", "A3", "G2"]:
        g = enumerate_group(name)
        minus = all_minus(g.rank)
        groups = integral_cohomology(g, minus).groups
        assert groups[0][0] == 1 and groups[-1][0] == 1
        table = blowup_table(g, minus)
        assert table[g.elements[0]] == 0
        assert table[g.longest] == blowup_poly(g, minus).degree


def test_cohomology_of_complex_matches_high_level():
    cc = complex_for("A3", "---")
    assert cohomology_of_complex(cc).groups == integral_cohomology("A3", "---").groups
