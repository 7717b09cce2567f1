import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from markovnecklaces.necklace import (
    NecklaceParams,
    canonicalize,
    enumerate_necklaces,
    from_params,
)
from markovnecklaces.phi import phi
from markovnecklaces.slword import (
    L,
    Mat2,
    R,
    matrix_of_word,
    theta_length,
    trace_of_necklace,
    trace_pair_check,
    word_from_necklace,
)

positive_lists = st.lists(st.integers(1, 4), min_size=1, max_size=6)
words = st.text(alphabet="LR", min_size=1, max_size=12)


def _word_of_raw(entries):
    return "".join("L" + "LR" * v + "R" for v in entries)


# --- matrices ----------------------------------------------------------------


def test_generator_matrices():
    assert L == Mat2(1, 1, 0, 1)
    assert R == Mat2(1, 0, 1, 1)
    assert (L * R) == Mat2(2, 1, 1, 1)


def test_matrix_of_word_examples():
    assert matrix_of_word("LR") == Mat2(2, 1, 1, 1)
    assert matrix_of_word("L") == L
    assert matrix_of_word("LLRR") == Mat2(5, 2, 2, 1)


def test_matrix_of_word_rejects_garbage():
    with pytest.raises(ValueError, match="position 2"):
        matrix_of_word("LRXL")
    with pytest.raises(ValueError):
        matrix_of_word("")


@given(words)
def test_word_matrices_are_unimodular_and_nonnegative(word):
    m = matrix_of_word(word)
    assert m.det() == 1
    assert min(m.a, m.b, m.c, m.d) >= 0


@given(st.integers(0, 40))
def test_pow_matches_iterated_product(e):
    base = Mat2(2, 1, 1, 1)
    expected = Mat2.identity()
    for _ in range(e):
        expected = expected * base
    assert base**e == expected


# --- words from necklaces ----------------------------------------------------


def test_word_examples():
    assert word_from_necklace(canonicalize([0])) == "LR"
    assert word_from_necklace(canonicalize([1])) == "LLRR"
    assert word_from_necklace(canonicalize([1, 2])) == "LLRRLLRLRR"
    assert word_from_necklace(canonicalize([1]), "reduced") == "RL"
    assert word_from_necklace(canonicalize([2]), "reduced") == "RRLL"


def test_reduced_needs_positive_entries():
    with pytest.raises(ValueError):
        word_from_necklace(canonicalize([0]), "reduced")
    with pytest.raises(ValueError):
        word_from_necklace(canonicalize([1]), "mystery")


# --- trace oracle ------------------------------------------------------------


def test_trace_examples():
    assert trace_of_necklace(canonicalize([0])) == 3
    assert trace_of_necklace(canonicalize([1])) == 6
    assert trace_of_necklace(canonicalize([1, 2])) == 87


@given(positive_lists)
def test_trace_equals_letterwise_product(entries):
    n = canonicalize(entries)
    assert trace_of_necklace(n) == matrix_of_word(word_from_necklace(n)).trace()


@given(positive_lists, st.integers(0, 10))
def test_trace_is_rotation_invariant(entries, shift):
    j = shift % len(entries)
    rotated = entries[j:] + entries[:j]
    assert (
        matrix_of_word(_word_of_raw(rotated)).trace()
        == matrix_of_word(_word_of_raw(entries)).trace()
    )


def test_trace_never_materializes_words():
    # letter count would be astronomical; the block product stays cheap
    assert trace_of_necklace(canonicalize([500])) % 3 == 0


def test_oracle_identity_on_family():
    for n in enumerate_necklaces(3, 7):
        assert trace_of_necklace(n) == 3 * phi(n)


@given(words)
def test_reverse_swap_is_transpose(word):
    swapped = "".join("L" if c == "R" else "R" for c in reversed(word))
    assert matrix_of_word(swapped) == matrix_of_word(word).transpose()
    assert matrix_of_word(swapped).trace() == matrix_of_word(word).trace()


# --- trace-to-length ---------------------------------------------------------


def test_theta_length_values():
    assert theta_length(2) == 0.0
    assert math.isclose(theta_length(3), 1.9248473002384139, rel_tol=1e-15)
    assert math.isclose(theta_length(6), 3.5254943480781721, rel_tol=1e-15)


def test_theta_length_domain():
    with pytest.raises(ValueError):
        theta_length(1)


def test_theta_length_monotone():
    values = [theta_length(t) for t in range(2, 40)]
    assert values == sorted(values)
    assert len(set(values)) == len(values)


def test_theta_length_huge_trace_branch():
    below = 2**52
    above = 2**52 + 1
    assert math.isclose(theta_length(below), theta_length(above), rel_tol=1e-12)
    t = 3**300
    assert math.isclose(theta_length(t), 2 * 300 * math.log(3), rel_tol=1e-12)


# --- trace identities between word variants -----------------------------------


def test_trace_pair_examples():
    assert trace_pair_check(canonicalize([2, 3]))
    assert trace_pair_check(canonicalize([1]))
    assert trace_pair_check(canonicalize([1, 1, 2]))


def test_trace_pair_requires_positive_entries():
    with pytest.raises(ValueError):
        trace_pair_check(canonicalize([0]))


@given(positive_lists)
def test_trace_pair_holds_for_all_positive_necklaces(entries):
    assert trace_pair_check(canonicalize(entries))


def test_trace_pair_exhaustive_over_family():
    # every family member with k <= 10 and entries <= 5
    for m in range(1, 5):
        assert trace_pair_check(canonicalize([m]))
        for total in range(2, 11):
            for y in range(1, total):
                if math.gcd(total - y, y) == 1:
                    n = from_params(NecklaceParams(total - y, y, m))
                    assert trace_pair_check(n)
