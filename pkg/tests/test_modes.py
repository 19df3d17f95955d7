import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rindler_ferm.modes import (
    FieldFamily,
    FieldKind,
    ModeLabel,
    Spin,
    canonical_order,
    dirac,
    label_at,
    slot_index,
    spinless,
    xi_admissible,
)


def test_canonical_order_examples():
    assert canonical_order(ModeLabel(1, Spin.UP), ModeLabel(1, Spin.DOWN)) == -1
    assert canonical_order(ModeLabel(2, Spin.UP), ModeLabel(1, Spin.DOWN)) == 1
    assert canonical_order(ModeLabel(3, Spin.DOWN), ModeLabel(3, Spin.DOWN)) == 0


@pytest.mark.parametrize("field", [dirac(6), spinless(6)])
def test_canonical_order_is_total(field):
    labels = field.labels()
    for a, b in itertools.product(labels, repeat=2):
        oab, oba = canonical_order(a, b), canonical_order(b, a)
        assert oab == -oba
        assert (oab == 0) == (a == b)
    for a, b, c in itertools.product(labels, repeat=3):
        if canonical_order(a, b) <= 0 and canonical_order(b, c) <= 0:
            assert canonical_order(a, c) <= 0


def test_slot_index_matches_canonical_order():
    for field in (dirac(4), spinless(5)):
        slots = [slot_index(field, lab) for lab in field.labels()]
        assert slots == sorted(slots) == list(range(field.slots))
        for s in range(field.slots):
            assert slot_index(field, label_at(field, s)) == s


def test_xi_admissible_examples():
    assert xi_admissible([ModeLabel(1, Spin.UP), ModeLabel(1, Spin.DOWN)])
    assert not xi_admissible([ModeLabel(1, Spin.UP), ModeLabel(1, Spin.UP)])
    assert xi_admissible([])


@given(
    st.lists(
        st.tuples(st.integers(1, 4), st.sampled_from([Spin.UP, Spin.DOWN])),
        max_size=6,
    ),
    st.randoms(use_true_random=False),
)
def test_xi_admissible_permutation_invariant(pairs, rng):
    labels = [ModeLabel(k, s) for k, s in pairs]
    shuffled = labels[:]
    rng.shuffle(shuffled)
    assert xi_admissible(labels) == xi_admissible(shuffled)


def test_admissible_subset_counts_match_binomial():
    # number of admissible ordered m-subsets of Dirac labels is C(2n, m)
    import math

    for n in range(1, 5):
        labels = dirac(n).labels()
        for m in range(2 * n + 1):
            count = sum(
                1 for combo in itertools.combinations(labels, m) if xi_admissible(combo)
            )
            assert count == math.comb(2 * n, m)


def test_field_validation():
    with pytest.raises(ValueError):
        FieldKind(FieldFamily.DIRAC, 0)
    with pytest.raises(ValueError):
        dirac(2).validate_label(ModeLabel(3, Spin.UP))
    with pytest.raises(ValueError):
        dirac(2).validate_label(ModeLabel(1))
    with pytest.raises(ValueError):
        spinless(2).validate_label(ModeLabel(1, Spin.UP))
    assert dirac(3).slots == 6
    assert spinless(3).slots == 3
