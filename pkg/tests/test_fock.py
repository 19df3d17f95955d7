import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rindler_ferm.fock import (
    LadderOp,
    PRUNE_THRESHOLD,
    Sector,
    StateVector,
    apply_ladder,
    inner_product,
    insertion_sign,
    norm,
    pack_occupation,
    particle_annihilator,
    particle_creator,
    unpack_occupation,
)
from rindler_ferm.modes import ModeLabel, Spin, dirac, label_at, spinless

UP, DOWN = Spin.UP, Spin.DOWN


def amps_of(sv):
    return dict(sv.amps)


# --- occupation packing -----------------------------------------------------


def test_pack_unpack_roundtrip():
    field = dirac(3)
    labels = (ModeLabel(1, DOWN), ModeLabel(3, UP))
    bits = pack_occupation(field, labels)
    assert unpack_occupation(field, bits) == tuple(
        sorted(labels, key=lambda l: (l.momentum, l.spin is DOWN))
    )
    with pytest.raises(ValueError):
        pack_occupation(field, [ModeLabel(1, UP), ModeLabel(1, UP)])


# --- ladder operator action -------------------------------------------------


def test_create_on_empty_vacuum():
    field = dirac(2)
    vac = StateVector.basis_state(field)
    out = apply_ladder(particle_creator(ModeLabel(1, UP)), vac)
    assert amps_of(out) == {(0b01, 0): 1.0}


def test_double_creation_is_zero():
    field = dirac(2)
    single = StateVector.basis_state(field, pack_occupation(field, [ModeLabel(1, UP)]))
    out = apply_ladder(particle_creator(ModeLabel(1, UP)), single)
    assert amps_of(out) == {}


def test_annihilation_sign_past_occupied_slot():
    # c_{1,down} |(1,up),(1,down)> = -|(1,up)>: one occupied slot precedes
    field = dirac(1)
    both = StateVector.basis_state(
        field, pack_occupation(field, [ModeLabel(1, UP), ModeLabel(1, DOWN)])
    )
    out = apply_ladder(particle_annihilator(ModeLabel(1, DOWN)), both)
    assert amps_of(out) == {(0b01, 0): -1.0}


def test_region_iv_operator_counts_region_i_occupation():
    field = spinless(2)
    state = StateVector.basis_state(field, i_bits=0b11, iv_bits=0)
    out = apply_ladder(LadderOp(Sector.ANTIPARTICLE_IV, ModeLabel(1), True), state)
    # two occupied region-I slots precede every region-IV slot
    assert amps_of(out) == {(0b11, 0b01): 1.0}


def test_insertion_sign():
    assert insertion_sign(0b0000, 2) == 1
    assert insertion_sign(0b0011, 2) == 1
    assert insertion_sign(0b0001, 1) == -1
    assert insertion_sign(0b0101, 3) == 1


# --- inner products ---------------------------------------------------------


def test_basis_states_are_orthonormal():
    field = dirac(2)
    up = StateVector.basis_state(field, pack_occupation(field, [ModeLabel(1, UP)]))
    down = StateVector.basis_state(field, pack_occupation(field, [ModeLabel(1, DOWN)]))
    assert inner_product(up, up) == 1
    assert inner_product(up, down) == 0
    assert norm(StateVector.zero(field)) == 0.0
    assert norm(up) == 1.0


def test_inner_product_conjugates_first_argument():
    field = spinless(1)
    a = StateVector(field, {(0, 0): 1j})
    b = StateVector(field, {(0, 0): 2.0})
    assert inner_product(a, b) == -2j
    assert inner_product(b, a) == 2j


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        inner_product(StateVector.zero(dirac(1)), StateVector.zero(dirac(2)))


def test_pruning_drops_tiny_amplitudes():
    field = spinless(1)
    sv = StateVector(field, {(0, 0): 0.5 * PRUNE_THRESHOLD, (1, 0): 1.0})
    assert amps_of(sv) == {(1, 0): 1.0}


# --- anticommutation properties ----------------------------------------------


def slot_ops(field, slot, dagger):
    if slot < field.slots:
        return LadderOp(Sector.PARTICLE_I, label_at(field, slot), dagger)
    return LadderOp(Sector.ANTIPARTICLE_IV, label_at(field, slot - field.slots), dagger)


fields_strategy = st.one_of(
    st.integers(1, 3).map(dirac), st.integers(1, 6).map(spinless)
)


@st.composite
def field_state_slots(draw):
    field = draw(fields_strategy)
    total = 2 * field.slots
    i_bits = draw(st.integers(0, (1 << field.slots) - 1))
    iv_bits = draw(st.integers(0, (1 << field.slots) - 1))
    p = draw(st.integers(0, total - 1))
    q = draw(st.integers(0, total - 1))
    return field, i_bits, iv_bits, p, q


@settings(max_examples=200)
@given(field_state_slots())
def test_canonical_anticommutation_relations(data):
    field, i_bits, iv_bits, p, q = data
    state = StateVector.basis_state(field, i_bits, iv_bits)
    c_p = slot_ops(field, p, False)
    cdag_q = slot_ops(field, q, True)
    # {c_p, c+_q} = delta_pq
    acc = apply_ladder(c_p, apply_ladder(cdag_q, state)) + apply_ladder(
        cdag_q, apply_ladder(c_p, state)
    )
    expected = state if p == q else StateVector.zero(field)
    assert amps_of(acc) == amps_of(expected)
    # {c_p, c_q} = 0 and {c+_p, c+_q} = 0
    c_q = slot_ops(field, q, False)
    cdag_p = slot_ops(field, p, True)
    assert amps_of(
        apply_ladder(c_p, apply_ladder(c_q, state))
        + apply_ladder(c_q, apply_ladder(c_p, state))
    ) == {}
    assert amps_of(
        apply_ladder(cdag_p, apply_ladder(cdag_q, state))
        + apply_ladder(cdag_q, apply_ladder(cdag_p, state))
    ) == {}


@st.composite
def sparse_states(draw, field):
    size = 1 << field.slots
    n_terms = draw(st.integers(1, 4))
    amps = {}
    for _ in range(n_terms):
        key = (draw(st.integers(0, size - 1)), draw(st.integers(0, size - 1)))
        re = draw(st.floats(-2, 2, allow_nan=False))
        im = draw(st.floats(-2, 2, allow_nan=False))
        amps[key] = complex(re, im)
    return StateVector(field, amps)


@st.composite
def adjointness_cases(draw):
    field = draw(fields_strategy)
    a = draw(sparse_states(field))
    b = draw(sparse_states(field))
    slot = draw(st.integers(0, 2 * field.slots - 1))
    dagger = draw(st.booleans())
    return field, a, b, slot_ops(field, slot, dagger)


@settings(max_examples=200)
@given(adjointness_cases())
def test_ladder_adjointness(case):
    # <a|L b> == <L+ a|b> for random sparse vectors
    _, a, b, op = case
    lhs = inner_product(a, apply_ladder(op, b))
    rhs = inner_product(apply_ladder(op.adjoint, a), b)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_adjoint_flips_dagger():
    op = particle_creator(ModeLabel(1, UP))
    assert op.adjoint == particle_annihilator(ModeLabel(1, UP))


# --- norm examples ----------------------------------------------------------


def test_unnormalized_vacuum_norm_matches_enumeration():
    # independent oracle: explicit 4-term enumeration at n=1 Dirac,
    # amplitudes {1, t, t, t^2} -> norm sqrt((1+t^2)^2) = 1/cos^2
    from rindler_ferm.rindler import SqueezeParam, build_vacuum

    r = SqueezeParam(0.3)
    t = math.tan(0.3)
    enumerated = math.sqrt(1 + t * t + t * t + t**4)
    assert enumerated == pytest.approx(1.095688915322547, abs=1e-15)
    raw = build_vacuum(dirac(1), r, c0=1.0)
    assert norm(raw) == pytest.approx(enumerated, abs=1e-13)
    assert norm(raw) == pytest.approx(1.0 / math.cos(0.3) ** 2, abs=1e-13)
