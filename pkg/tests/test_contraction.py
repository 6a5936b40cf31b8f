"""Descriptor model, built-in catalogs, and the evaluation engine."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinorinv.contraction import (InvariantDescriptor, Pair, SlotRef,
                                   builtin_catalog, evaluate,
                                   evaluate_batch, find_descriptor,
                                   parity_class)
from spinorinv.states import random_state, superposition


def test_catalog_sizes():
    assert len(builtin_catalog("ThreeSpinorDeg4").descriptors) == 144
    assert len(builtin_catalog("FourSpinorDeg2").descriptors) == 16
    assert len(builtin_catalog("FourSpinorDeg4_T").descriptors) == 13
    assert len(builtin_catalog("FourSpinorDeg4_Y").descriptors) == 13
    assert len(builtin_catalog("FiveSpinorDeg4Patterns").descriptors) == 40
    assert len(builtin_catalog("EvenNDeg2", 6).descriptors) == 64
    assert len(builtin_catalog("EvenNDeg2(4)").descriptors) == 16
    with pytest.raises(ValueError):
        builtin_catalog("NoSuchFamily")


def test_catalog_lookup():
    cat = builtin_catalog("ThreeSpinorDeg4")
    d = cat["I_3a"]
    assert d.name == "I_3a"
    assert d.n_parties == 3 and d.degree == 4
    assert len(d.pairs) == 6
    assert find_descriptor("H_b").n_parties == 4
    assert find_descriptor("T_m").degree == 4
    with pytest.raises(KeyError):
        find_descriptor("I_999z")


def test_five_spinor_entries_are_patterns():
    cat = builtin_catalog("FiveSpinorDeg4Patterns")
    for d in cat.descriptors:
        assert d.is_pattern
        assert d.n_parties == 5 and d.degree == 4


def test_descriptor_validation():
    # party out of range
    with pytest.raises(ValueError):
        InvariantDescriptor(2, 2, (
            Pair(SlotRef(0, 0), SlotRef(1, 0), "C"),
            Pair(SlotRef(0, 2), SlotRef(1, 2), "C"),
        ))
    # slot used twice at one party
    with pytest.raises(ValueError):
        InvariantDescriptor(1, 4, (
            Pair(SlotRef(0, 0), SlotRef(1, 0), "C"),
            Pair(SlotRef(0, 0), SlotRef(2, 0), "C"),
        ))


def test_with_x_assignment():
    pattern = builtin_catalog("FiveSpinorDeg4Patterns").descriptors[0]
    tags = tuple("C" if i % 2 else "C5" for i in range(len(pattern.pairs)))
    d = pattern.with_x_assignment(tags)
    assert not d.is_pattern
    assert tuple(p.x for p in d.pairs) == tags


def test_round_trip_dict():
    d = find_descriptor("I_23b")
    d2 = InvariantDescriptor.from_dict(d.to_dict())
    assert d2 == d


def test_ghz3_values_exact():
    import math
    r2 = 1 / math.sqrt(2)
    st3 = superposition([(r2, (0, 0, 0)), (r2, (1, 1, 1))], 3)
    for name in ("I_3a", "I_3b", "I_3c"):
        assert abs(abs(evaluate(find_descriptor(name), st3)) - 0.5) < 1e-12


def test_evaluate_party_count_mismatch():
    with pytest.raises(ValueError):
        evaluate(find_descriptor("I_3a"), random_state(4, 0))


def test_evaluate_pattern_rejected():
    pattern = builtin_catalog("FiveSpinorDeg4Patterns").descriptors[0]
    with pytest.raises(ValueError):
        evaluate(pattern, random_state(5, 0))


def test_evaluate_batch_matches_evaluate():
    descs = [find_descriptor(n) for n in ("I_2a", "I_3d", "I_23b", "I_35c")]
    states = [random_state(3, k) for k in range(6)]
    batch = evaluate_batch(descs, states)
    assert batch.shape == (4, 6)
    for i, d in enumerate(descs):
        for j, s in enumerate(states):
            assert np.isclose(batch[i, j], evaluate(d, s))


@given(st.integers(0, 143), st.integers(0, 10_000))
@settings(max_examples=20, deadline=None)
def test_degree_homogeneity(idx, seed):
    """Scaling the state by c scales a degree-d polynomial by c^d."""
    d = builtin_catalog("ThreeSpinorDeg4").descriptors[idx]
    s = random_state(3, seed)
    scaled = superposition([], 3)
    c = 1.25 - 0.5j
    from spinorinv.states import MultiSpinorState
    scaled = MultiSpinorState(3, c * s.tensor)
    assert np.isclose(evaluate(d, scaled), c ** 4 * evaluate(d, s))


def test_duplicate_value_identities():
    """Copy-relabeling automorphisms force equal values across names."""
    states = [random_state(3, 500 + k) for k in range(4)]
    for a, b, sign in (("I_14a", "I_12a", 1), ("I_11a", "I_15a", 1),
                       ("I_12b", "I_11b", 1), ("I_14b", "I_15b", 1),
                       ("I_14c", "I_11c", 1), ("I_12c", "I_15c", 1),
                       ("I_11d", "I_12d", -1), ("I_11d", "I_15d", 1)):
        da, db = find_descriptor(a), find_descriptor(b)
        for s in states:
            va, vb = evaluate(da, s), evaluate(db, s)
            assert abs(va - sign * vb) < 1e-12 * max(1, abs(va))


def test_parity_class_labels():
    assert parity_class("I_2a") == (1, 1, 1)
    assert parity_class("I_11d") == (-1, -1, -1)
    assert parity_class("I_23b") == (-1, 1, 1)
