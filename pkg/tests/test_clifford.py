from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from qclifford.clifford import CliffordElement, bar, blade_sign, blade_str, parse_blade, scalar_part


def reorder_sign(a: int, b: int) -> int:
    """Sign from bubble-sorting the concatenated generator lists (independent of bit tricks)."""
    word = [i for i in range(16) if a >> i & 1] + [i for i in range(16) if b >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
    # e_i e_i = -1 in the negative-definite signature
    for i in set(word):
        if word.count(i) == 2:
            sign = -sign
    return sign


@given(st.integers(0, 31), st.integers(0, 31))
def test_blade_sign_matches_sorting(a, b):
    assert blade_sign(a, b) == reorder_sign(a, b)


def test_generators_square_to_minus_one_and_anticommute():
    m = 4
    for i in range(1, m + 1):
        ei = CliffordElement.e(m, i)
        assert ei * ei == CliffordElement.scalar(m, -1)
        for j in range(i + 1, m + 1):
            ej = CliffordElement.e(m, j)
            assert ei * ej + ej * ei == CliffordElement(m)


elements = st.dictionaries(st.integers(0, 7), st.integers(-3, 3), max_size=4).map(lambda d: CliffordElement(3, d))


@settings(max_examples=50, deadline=None)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=50, deadline=None)
@given(elements, elements)
def test_bar_is_an_anti_involution(a, b):
    assert bar(a * b) == bar(b) * bar(a)
    assert bar(bar(a)) == a


def test_bar_of_vectors_and_bivectors():
    e1, e2 = CliffordElement.e(2, 1), CliffordElement.e(2, 2)
    assert bar(e1) == -e1
    assert bar(e1 * e2) == -(e1 * e2)


def test_scalar_part_of_norm():
    a = CliffordElement(3, {0: 1, 1: 2, 6: 3})
    # bar(a) a has scalar part equal to the sum of squares
    assert scalar_part(bar(a) * a) == 14


def test_blade_string_round_trip():
    for mask in range(16):
        assert parse_blade(blade_str(mask)) == mask
