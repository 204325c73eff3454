import random

import pytest

from flagcoh.cartan import cartan_matrix, positive_root_count, weyl_order
from flagcoh.errors import CapExceeded
from flagcoh.intmat import identity, mat_mul
from flagcoh.weyl import (
    all_reduced_words,
    bruhat_cover,
    enumerate_group,
    longest_element,
    positive_roots,
    random_reduced_word,
    simple_reflection,
    word_matrix,
)


def test_simple_reflection_action():
    c = cartan_matrix("A2")
    s1 = simple_reflection(1, c)
    # alpha_1 -> -alpha_1, alpha_2 -> alpha_1 + alpha_2
    assert [row[0] for row in s1.mat] == [-1, 0]
    assert [row[1] for row in s1.mat] == [1, 1]
    assert s1.length == 1 and s1.word == (1,)


def test_reflection_is_involution():
    for name in ["A3", "B3", "G2", "F4"]:
        c = cartan_matrix(name)
        for i in range(1, c.rank + 1):
            m = simple_reflection(i, c).mat
            assert mat_mul(m, m) == identity(c.rank)


def test_g2_second_reflection():
    c = cartan_matrix("G2")
    s2 = simple_reflection(2, c)
    # alpha_1 -> alpha_1 + alpha_2 (C[0][1] = -1), alpha_2 -> -alpha_2
    assert [row[0] for row in s2.mat] == [1, 1]
    assert [row[1] for row in s2.mat] == [0, -1]


def test_reflection_index_range():
    c = cartan_matrix("A2")
    with pytest.raises(IndexError):
        simple_reflection(3, c)


@pytest.mark.parametrize(
    "name,order",
    [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48),
     ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)],
)
def test_group_orders(name, order):
    g = enumerate_group(name)
    assert g.order == order == weyl_order(name)


def test_a2_length_multiset():
    assert enumerate_group("A2").length_distribution() == [1, 2, 2, 1]


def test_g2_unique_longest():
    g = enumerate_group("G2")
    assert g.length_distribution()[-1] == 1
    assert g.longest.length == 6


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        enumerate_group("E8")
    with pytest.raises(CapExceeded):
        enumerate_group("A4", cap=100)


def test_length_distribution_palindromic():
    for name in ["A3", "B3", "D4", "G2", "F4"]:
        dist = enumerate_group(name).length_distribution()
        assert dist == dist[::-1]
        assert sum(dist) == weyl_order(name)


@pytest.mark.parametrize(
    "name", ["A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]
)
def test_longest_element_length(name):
    w = longest_element(name)
    assert w.length == positive_root_count(name) == len(w.word)
    # the stored matrix is reproduced by the word
    assert word_matrix(w.word, cartan_matrix(name)) == w.mat


def test_longest_element_examples():
    assert longest_element("A1").word == (1,)
    w = longest_element("G2")
    assert w.word in ((1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1))


def test_e8_positive_root_orbit():
    # independent count: orbit generation of the root system itself
    assert len(positive_roots(cartan_matrix("E8"))) == 120


def test_longest_matches_enumeration():
    for name in ["A3", "B3", "G2", "D4"]:
        g = enumerate_group(name)
        assert longest_element(name).mat == g.longest.mat


def _subword_le(uword, wwords):
    """Bruhat order oracle: u <= w iff some reduced word of w has a reduced
    word of u as a subsequence; on tiny groups, check all pairs of words."""

    def contains(big, small):
        it = iter(big)
        return all(ch in it for ch in small)

    return any(contains(big, uword) for big in wwords)


def test_bruhat_cover_against_subword_oracle_a2():
    g = enumerate_group("A2")
    words = {i: all_reduced_words(g, w) for i, w in enumerate(g.elements)}
    for i, u in enumerate(g.elements):
        for j, w in enumerate(g.elements):
            expected = (
                w.length == u.length + 1
                and _subword_le(words[i][0], words[j])
            )
            assert bruhat_cover(g, u, w) == expected


def test_cover_by_right_generator():
    for name in ["A3", "B3", "G2"]:
        g = enumerate_group(name)
        c = g.cartan
        for w in g.elements:
            for i in range(1, g.rank + 1):
                m2 = mat_mul(w.mat, simple_reflection(i, c).mat)
                w2 = g.elements[g.element_index(m2)]
                if w2.length == w.length + 1:
                    assert bruhat_cover(g, w, w2)


def test_cover_pairs_count_a2():
    g = enumerate_group("A2")
    # Hasse diagram of S3: e<s1,e<s2, s1<12,s1<21, s2<12,s2<21, 12<121, 21<121
    assert len(g.cover_pairs()) == 8


def test_length_gap_is_not_cover():
    g = enumerate_group("A2")
    e = g.elements[0]
    w12 = next(w for w in g.elements if w.word == (1, 2))
    assert not bruhat_cover(g, e, w12)


def test_cover_rejects_foreign_elements():
    g = enumerate_group("A2")
    other = enumerate_group("B2")
    with pytest.raises(ValueError):
        bruhat_cover(g, other.elements[1], other.elements[2])


def test_all_reduced_words_a3():
    g = enumerate_group("A3")
    words = all_reduced_words(g, g.longest)
    assert len(words) == 16  # classical count for the S4 longest element
    assert all(len(w) == 6 for w in words)
    assert len(set(words)) == len(words)
    c = g.cartan
    assert all(word_matrix(w, c) == g.longest.mat for w in words)


def test_random_reduced_word_is_reduced():
    g = enumerate_group("F4")
    rng = random.Random(11)
    for _ in range(25):
        w = g.elements[rng.randrange(g.order)]
        word = random_reduced_word(g, w, rng)
        assert len(word) == w.length
        assert word_matrix(word, g.cartan) == w.mat


def test_deterministic_enumeration():
    from flagcoh.weyl import _enumerate

    a = enumerate_group("B3")
    fresh = _enumerate.__wrapped__("B", 3, 3_000_000)
    assert [w.word for w in a.elements] == [w.word for w in fresh.elements]
