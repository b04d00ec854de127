"""Fox coloring groups against the brute-force enumeration oracle."""

import random

import pytest

from foxabf.braid import BraidWord, parse_braid, wheel_braid
from foxabf.coloring import (
    ENUMERATION_CAP_ENV,
    EnumerationLimitError,
    brute_force_coloring_count,
    coloring_count_from_group,
    coloring_group,
    enumeration_cap,
    reduced_relation_matrix_int,
)
from foxabf.ring import AbelianGroup, Matrix, snf
from foxabf.sequences import fib


def corpus(seed=424242):
    """Wheel words 1..5 plus 20 random 3-strand words of length <= 10."""
    rng = random.Random(seed)
    words = [wheel_braid(n) for n in range(1, 6)]
    for _ in range(20):
        length = rng.randint(0, 10)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(length))
        words.append(BraidWord(3, letters))
    return words


def fibonacci_presentation(n):
    return Matrix(
        [[fib(2 * n), fib(2 * n - 1) - 1], [fib(2 * n + 1) - 1, fib(2 * n)]]
    )


# -- reduced relation matrix -----------------------------------------------------


def test_identity_braid_two_strands():
    m = reduced_relation_matrix_int(BraidWord(2))
    assert m == Matrix([[0]])


def test_identity_braid_one_strand():
    m = reduced_relation_matrix_int(BraidWord(1))
    assert m.rows == 0 and m.cols == 0


def test_wheel_two_det_five():
    m = reduced_relation_matrix_int(wheel_braid(2))
    assert m.rows == 2 and abs(m.det()) == 5


def test_drop_middle_matches_fibonacci_presentation():
    for n in range(1, 13):
        reduced = reduced_relation_matrix_int(wheel_braid(n), drop_index=2)
        assert snf(reduced) == snf(fibonacci_presentation(n))


def test_drop_index_out_of_range():
    with pytest.raises(ValueError):
        reduced_relation_matrix_int(wheel_braid(2), drop_index=4)
    with pytest.raises(ValueError):
        reduced_relation_matrix_int(wheel_braid(2), drop_index=0)


# -- coloring groups ----------------------------------------------------------


def test_wheel_three_group():
    result = coloring_group(wheel_braid(3))
    assert result.group == AbelianGroup(torsion=(4, 4))
    assert result.determinant == 16


def test_wheel_one_trivial():
    result = coloring_group(wheel_braid(1))
    assert result.group.is_trivial
    assert result.determinant == 1


def test_unlink_two_components():
    result = coloring_group(parse_braid("1 -1"))
    assert result.group == AbelianGroup(free_rank=1)
    assert result.determinant == 0


def test_drop_index_independence():
    for word in corpus(7)[:12]:
        groups = {coloring_group(word, drop_index=d).group for d in range(1, word.strands + 1)}
        assert len(groups) == 1


def test_markov_conjugation_stability():
    rng = random.Random(99)
    for n in (2, 3, 4):
        base = wheel_braid(n)
        expected = coloring_group(base).group
        for _ in range(5):
            length = rng.randint(1, 6)
            w = BraidWord(3, tuple(rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(length)))
            conjugated = w * base * w.inverse()
            assert coloring_group(conjugated).group == expected


# -- brute force oracle ---------------------------------------------------------


def test_brute_force_wheel_two_mod_five():
    assert brute_force_coloring_count(wheel_braid(2), 5) == 25


def test_brute_force_wheel_three_mod_four():
    assert brute_force_coloring_count(wheel_braid(3), 4) == 64


def test_brute_force_odd_order_mod_two():
    # wheel 2 has reduced group Z_5 of odd order: only trivial 2-colorings
    assert brute_force_coloring_count(wheel_braid(2), 2) == 2
    assert brute_force_coloring_count(wheel_braid(5), 2) == 2


def test_brute_force_modulus_validation():
    with pytest.raises(ValueError):
        brute_force_coloring_count(wheel_braid(1), 1)


def test_count_from_group_examples():
    assert coloring_count_from_group(AbelianGroup(torsion=(5,)), 5) == 25
    assert coloring_count_from_group(AbelianGroup(), 7) == 7
    assert coloring_count_from_group(AbelianGroup(free_rank=1), 3) == 9
    with pytest.raises(ValueError):
        coloring_count_from_group(AbelianGroup(), 1)


def test_oracle_agreement_corpus():
    # the module's central correctness property
    for word in corpus():
        group = coloring_group(word).group
        for modulus in range(2, 14):
            assert brute_force_coloring_count(word, modulus) == coloring_count_from_group(
                group, modulus
            ), (word.letters, modulus)


# -- enumeration cap -------------------------------------------------------------


def test_enumeration_cap_env(monkeypatch):
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "100")
    assert enumeration_cap() == 100
    with pytest.raises(EnumerationLimitError):
        brute_force_coloring_count(wheel_braid(2), 5)  # 5^3 = 125 > 100
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "125")
    assert brute_force_coloring_count(wheel_braid(2), 5) == 25


def test_enumeration_cap_invalid(monkeypatch):
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "many")
    with pytest.raises(ValueError):
        enumeration_cap()
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "0")
    with pytest.raises(ValueError):
        enumeration_cap()
