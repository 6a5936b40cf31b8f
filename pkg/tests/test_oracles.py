"""Independent oracles: qubit tangles, brute-force and literal evaluators."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinorinv.contraction import builtin_catalog, evaluate, find_descriptor
from spinorinv.oracles import (appendix_expansion, appendix_names,
                               chiral_subtensor, four_qubit_invariants,
                               n_tangle, naive_evaluate, tangle_224,
                               three_tangle, ty_reduction_target)
from spinorinv.states import (embed_qubit_state, random_qubit_state,
                              random_state)

R2 = 1 / np.sqrt(2)


def qubit(*amps):
    return np.array(amps, dtype=complex)


# ---------------------------------------------------------------- tangles

def test_three_tangle_known_states():
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = R2
    assert np.isclose(three_tangle(ghz), 0.25)  # tau = |value| * 4 = 1
    w = np.zeros(8, dtype=complex)
    w[1] = w[2] = w[4] = 1 / np.sqrt(3)
    assert np.isclose(three_tangle(w), 0.0)
    prod = np.zeros(8, dtype=complex)
    prod[0] = 1.0
    assert np.isclose(three_tangle(prod), 0.0)


def test_four_qubit_H_on_ghz():
    ghz = np.zeros(16, dtype=complex)
    ghz[0] = ghz[15] = R2
    H, L, M = four_qubit_invariants(ghz)
    assert np.isclose(H, 1.0)
    assert np.isclose(L, 0.0)
    assert np.isclose(M, 0.0)


def test_n_tangle_matches_H_for_four_qubits():
    for seed in range(5):
        q = random_qubit_state(4, seed)
        H, _, _ = four_qubit_invariants(q.reshape(-1))
        assert np.isclose(n_tangle(q.reshape(-1)), H)


def test_n_tangle_ghz6():
    ghz = np.zeros(64, dtype=complex)
    ghz[0] = ghz[63] = R2
    assert np.isclose(abs(n_tangle(ghz)), 1.0)


def test_n_tangle_product_of_pairs_factorizes():
    """A tensor product of two Bell pairs has |4-tangle| = 1."""
    bell = np.zeros((2, 2), dtype=complex)
    bell[0, 0] = bell[1, 1] = R2
    prod = np.einsum("ab,cd->abcd", bell, bell).reshape(-1)
    assert np.isclose(abs(n_tangle(prod)), 1.0)


def test_n_tangle_rejects_odd():
    with pytest.raises(ValueError):
        n_tangle(np.zeros(8))


@given(st.integers(0, 10_000),
       st.complex_numbers(min_magnitude=0.1, max_magnitude=2.0,
                          allow_nan=False, allow_infinity=False))
@settings(max_examples=20, deadline=None)
def test_tangle_scaling(seed, c):
    """three_tangle is degree 4; n_tangle is degree 2."""
    q3 = random_qubit_state(3, seed).reshape(-1)
    assert np.isclose(three_tangle(c * q3), c ** 4 * three_tangle(q3))
    q4 = random_qubit_state(4, seed).reshape(-1)
    assert np.isclose(n_tangle(c * q4), c ** 2 * n_tangle(q4))


def test_ty_reduction_target_classes():
    H, L, M = 0.3 + 0.1j, -0.2j, 0.7
    h2 = (H / 2) ** 2
    assert np.isclose(ty_reduction_target("a", H, L, M),
                      512 * (h2 - 2 * L - 4 * M))
    assert np.isclose(ty_reduction_target("j", H, L, M), 512 * h2)
    assert np.isclose(ty_reduction_target("b", H, L, M),
                      ty_reduction_target("e", H, L, M))
    with pytest.raises(KeyError):
        ty_reduction_target("z", H, L, M)


# ------------------------------------------------- chiral sector helpers

def test_chiral_subtensor_requires_chirality():
    s = random_state(3, 0)
    with pytest.raises(ValueError):
        chiral_subtensor(s, (0,))
    emb = embed_qubit_state(random_qubit_state(3, 1), ("R", "L", "R"))
    sub = chiral_subtensor(emb, (0, 1, 2))
    assert sub.shape == (2, 2, 2)


def test_tangle_224_zero_on_biseparable():
    """(AB Bell pair) x (C alone), with A and B right-handed, has V = 0."""
    from spinorinv.states import MultiSpinorState, chiral_spinor
    v0, v1 = chiral_spinor(0, "R"), chiral_spinor(1, "R")
    t = (np.einsum("a,b,c->abc", v0, v1, np.eye(4)[0])
         - np.einsum("a,b,c->abc", v1, v0, np.eye(4)[0])) * R2
    s = MultiSpinorState(3, t)
    assert abs(tangle_224(s)) < 1e-12


def test_tangle_224_rejects_wrong_party_count():
    with pytest.raises(ValueError):
        tangle_224(random_state(4, 0))


# --------------------------------------------- brute-force cross checks

def test_naive_matches_engine_sample():
    names = ("I_2a", "I_3b", "I_11d", "I_23c", "I_27d", "I_31a",
             "I_35b", "I_19a", "I_10c", "I_16d")
    states = [random_state(3, 40 + k) for k in range(3)]
    for name in names:
        d = find_descriptor(name)
        for s in states:
            ve = evaluate(d, s)
            vn = naive_evaluate(d, s)
            assert abs(ve - vn) <= 1e-10 * max(1.0, abs(ve)), name


def test_naive_matches_engine_four_spinor_deg2():
    states = [random_state(4, 60 + k) for k in range(3)]
    for d in builtin_catalog("FourSpinorDeg2").descriptors:
        for s in states:
            ve, vn = evaluate(d, s), naive_evaluate(d, s)
            assert abs(ve - vn) <= 1e-10 * max(1.0, abs(ve)), d.name


def test_naive_rejects_patterns_and_caps():
    pat = builtin_catalog("FiveSpinorDeg4Patterns").descriptors[0]
    with pytest.raises(ValueError):
        naive_evaluate(pat, random_state(5, 0))
    t_a = find_descriptor("T_a")  # 4 parties x degree 4 = 16 slots, at cap
    naive_cap_ok = naive_evaluate(t_a, random_state(4, 0))
    assert np.isfinite(naive_cap_ok)


def test_naive_party_mismatch():
    with pytest.raises(ValueError):
        naive_evaluate(find_descriptor("I_2a"), random_state(4, 0))


# ------------------------------------------- literal appendix expansions

def test_appendix_names_cover_expected():
    names = appendix_names()
    assert "H_a" in names and "I_3a" in names and "T_l" in names
    assert len(names) == 15


def test_appendix_expansions_match_engine():
    for name in appendix_names():
        d = find_descriptor(name)
        states = [random_state(d.n_parties, 70 + k) for k in range(3)]
        for s in states:
            ve = evaluate(d, s)
            va = appendix_expansion(name, s)
            assert abs(ve - va) <= 1e-10 * max(1.0, abs(ve)), name


def test_appendix_unknown_name():
    with pytest.raises(KeyError):
        appendix_expansion("I_999x", random_state(3, 0))
