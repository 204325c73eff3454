import pytest

from flagcoh.cartan import (
    LieType,
    cartan_matrix,
    compact_dual_data,
    dual_type,
    positive_root_count,
    same_up_to_relabeling,
    weyl_order,
)
from flagcoh.intmat import transpose

ALL_TYPES = [
    "A1", "A2", "A3", "A4", "A5", "A6",
    "B2", "B3", "B4", "B5",
    "C2", "C3", "C4", "C5",
    "D4", "D5", "D6",
    "E6", "E7", "E8", "F4", "G2",
]


def test_parse_and_str():
    t = LieType.parse("D4")
    assert (t.family, t.rank) == ("D", 4)
    assert str(t) == "D4"
    assert LieType.parse(t) is t


@pytest.mark.parametrize("bad", ["H2", "A0", "D3", "E5", "F3", "G4", "B1", "xyz"])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        LieType.parse(bad)


def test_fixed_matrices():
    assert cartan_matrix("A2").entries == ((2, -1), (-1, 2))
    assert cartan_matrix("G2").entries == ((2, -1), (-3, 2))
    assert cartan_matrix("B2").entries == ((2, -1), (-2, 2))


def test_dual_type_swaps_b_and_c():
    assert str(dual_type("B3")) == "C3"
    assert str(dual_type("C5")) == "B5"
    assert str(dual_type("A4")) == "A4"
    assert str(dual_type("G2")) == "G2"


@pytest.mark.parametrize("name", ALL_TYPES)
def test_dual_matrix_is_transpose(name):
    # exact for A-D; G2/F4 transpose reverses the arrow, so allow relabeling
    got = cartan_matrix(dual_type(name)).entries
    want = transpose(cartan_matrix(name).entries)
    if LieType.parse(name).family in "ABCD":
        assert got == want
    assert same_up_to_relabeling(got, want)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_matrix_shape_invariants(name):
    c = cartan_matrix(name)
    l = LieType.parse(name).rank
    assert c.rank == l
    for j in range(l):
        assert c[j][j] == 2
        for i in range(l):
            if i != j:
                assert c[j][i] <= 0
                assert (c[j][i] == 0) == (c[i][j] == 0)


def test_dual_data_examples():
    a2 = compact_dual_data("A2")
    assert (a2.name, a2.degrees, a2.g, a2.r, a2.dim) == ("SO(3)", (2,), 1, 1, 3)
    b3 = compact_dual_data("B3")
    assert (b3.name, b3.degrees, b3.g, b3.r, b3.dim) == ("U(3)", (1, 2, 3), 3, 3, 9)
    g2 = compact_dual_data("G2")
    assert (g2.degrees, g2.g, g2.r, g2.dim) == ((2, 2), 2, 2, 6)
    e8 = compact_dual_data("E8")
    assert e8.degrees == (2, 4, 6, 8, 8, 10, 12, 14)
    assert sum(e8.degrees) == 64


@pytest.mark.parametrize("name", ALL_TYPES)
def test_dual_data_invariants(name):
    d = compact_dual_data(name)
    assert d.g == len(d.degrees)
    assert d.dim == sum(2 * k - 1 for k in d.degrees)
    assert d.r == sum(k - 1 for k in d.degrees) == d.dim - sum(d.degrees)


# sum of invariant degrees = maximal blow-up count, closed forms per family
_ETA_STAR = {
    "A": lambda l: l * (l + 2) // 4 if l % 2 == 0 else (l + 1) ** 2 // 4,
    "B": lambda l: l * (l + 1) // 2,
    "C": lambda l: l * (l + 1) // 2,
    "D": lambda l: l * l // 2 if l % 2 == 0 else (l * l - 1) // 2,
    "E": lambda l: {6: 20, 7: 35, 8: 64}[l],
    "F": lambda l: 14,
    "G": lambda l: 4,
}


@pytest.mark.parametrize("name", ALL_TYPES)
def test_degree_sum_matches_closed_form(name):
    t = LieType.parse(name)
    assert sum(compact_dual_data(t).degrees) == _ETA_STAR[t.family](t.rank)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_order_and_root_count_consistency(name):
    t = LieType.parse(name)
    d = compact_dual_data(t)
    # dim K = (sum d_i) + r, and the longest length is the positive root count
    assert d.dim == sum(d.degrees) + d.r
    assert positive_root_count(t) >= t.rank
    assert weyl_order(t) % 2 == 0
