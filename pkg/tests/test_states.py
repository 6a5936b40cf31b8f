"""State construction, local maps, chiral embedding, serialization."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinorinv.clifford import GAMMA5
from spinorinv.states import (BASIS_SPINORS, MultiSpinorState, P_LEFT,
                              P_RIGHT, apply_local, chiral_spinor,
                              embed_chiral, embed_qubit_state, load_state,
                              product_state, random_qubit_state,
                              random_state, save_state, state_from_dict,
                              state_to_dict, superposition, weyl_project)

amp = st.complex_numbers(min_magnitude=0.1, max_magnitude=2.0,
                         allow_nan=False, allow_infinity=False)
idx3 = st.tuples(*[st.integers(0, 3)] * 3)


def test_superposition_and_product_agree():
    s1 = product_state([BASIS_SPINORS[0], BASIS_SPINORS[2],
                        BASIS_SPINORS[1]])
    s2 = superposition([(1.0, (0, 2, 1))], 3)
    assert np.allclose(s1.tensor, s2.tensor)


def test_superposition_duplicates_add():
    s = superposition([(0.5, (1, 1)), (0.25, (1, 1))], 2)
    assert s.tensor[1, 1] == 0.75


def test_superposition_validation():
    with pytest.raises(ValueError):
        superposition([(1.0, (4, 0))], 2)
    with pytest.raises(ValueError):
        superposition([(1.0, (0, 0, 0))], 2)


def test_norm_and_normalized():
    s = superposition([(3.0, (0, 0)), (4.0, (1, 1))], 2)
    assert np.isclose(s.norm(), 5.0)
    assert np.isclose(s.normalized().norm(), 1.0)
    with pytest.raises(ValueError):
        MultiSpinorState(1, np.zeros(4)).normalized()


@given(st.lists(st.tuples(amp, idx3), min_size=1, max_size=4))
@settings(max_examples=25, deadline=None)
def test_apply_local_is_linear_slotwise(terms):
    state = superposition(terms, 3)
    rng = np.random.default_rng(0)
    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    for party in range(3):
        moved = apply_local(state, party, m)
        expected = np.tensordot(m, state.tensor, axes=([1], [party]))
        expected = np.moveaxis(expected, 0, party)
        assert np.allclose(moved.tensor, expected)


def test_apply_local_party_range():
    s = random_state(2, 0)
    with pytest.raises(ValueError):
        apply_local(s, 2, np.eye(4))


def test_chiral_spinor_is_gamma5_eigenvector():
    for bit in (0, 1):
        for tag, sign in (("R", 1), ("L", -1)):
            v = chiral_spinor(bit, tag)
            assert np.allclose(GAMMA5 @ v, sign * v)
            assert np.isclose(np.linalg.norm(v), np.sqrt(2))
            assert np.isclose(
                np.linalg.norm(chiral_spinor(bit, tag, normalize=True)), 1)


def test_weyl_project_matches_projectors():
    s = random_state(3, 5)
    proj = weyl_project(s, ("L", None, "R"))
    manual = apply_local(apply_local(s, 0, P_LEFT), 2, P_RIGHT)
    assert np.allclose(proj.tensor, manual.tensor)
    # idempotent
    again = weyl_project(proj, ("L", None, "R"))
    assert np.allclose(again.tensor, proj.tensor)


def test_embedded_state_has_definite_chirality():
    q = random_qubit_state(3, 11)
    st3 = embed_qubit_state(q, ("R", "L", "R"))
    for party, tag in enumerate(("R", "L", "R")):
        proj = P_RIGHT if tag == "R" else P_LEFT
        assert np.allclose(apply_local(st3, party, proj).tensor, st3.tensor)


def test_embed_chiral_mixed_slots():
    rng = np.random.default_rng(3)
    q = rng.standard_normal((2, 4, 2)) + 1j * rng.standard_normal((2, 4, 2))
    st3 = embed_chiral(q, ("R", None, "L"))
    assert st3.n_parties == 3
    # untagged slot passes through: project both chiral parties back out
    back = st3.tensor
    assert np.allclose(apply_local(st3, 1, np.eye(4)).tensor, back)
    assert np.allclose(apply_local(st3, 0, P_RIGHT).tensor, back)


def test_embed_qubit_state_requires_tags():
    with pytest.raises(ValueError):
        embed_qubit_state(np.zeros(4), ("R", None))


def test_random_state_deterministic():
    a = random_state(3, 42)
    b = random_state(3, 42)
    c = random_state(3, 43)
    assert np.allclose(a.tensor, b.tensor)
    assert not np.allclose(a.tensor, c.tensor)
    assert np.isclose(a.norm(), 1.0)


def test_serialization_round_trip(tmp_path):
    s = superposition([(0.5 + 0.25j, (0, 3, 1)), (-1.5, (2, 2, 2))], 3)
    d = state_to_dict(s)
    assert state_from_dict(d).tensor.shape == (4, 4, 4)
    assert np.allclose(state_from_dict(d).tensor, s.tensor)
    p = tmp_path / "state.json"
    save_state(s, p)
    assert np.array_equal(load_state(p).tensor, s.tensor)


def test_tensor_is_read_only():
    s = random_state(2, 1)
    with pytest.raises(ValueError):
        s.tensor[0, 0] = 1.0
