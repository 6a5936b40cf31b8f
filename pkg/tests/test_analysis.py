"""Rank/dependence analysis, invariance battery, evolution, covariance."""
import numpy as np
import pytest

from spinorinv.analysis import (BUILTIN_RELATIONS, U1SL4_COMBOS,
                                U1SL4_FOUR_SPINOR, HamiltonianSpec,
                                check_dependence, check_invariance,
                                classify_parity, evolve_and_check_bilinear,
                                random_hamiltonian, rank_of_span,
                                similarity_covariance_check)
from spinorinv.contraction import builtin_catalog

CAT3 = builtin_catalog("ThreeSpinorDeg4")


# ------------------------------------------------------------------ ranks

def test_rank_duplicate_pair_is_one():
    r = rank_of_span(["I_14a", "I_12a"])
    assert r.rank == 1
    assert r.n_states == 4


def test_rank_independent_pair_is_two():
    assert rank_of_span(["I_2a", "I_3a"]).rank == 2


def test_rank_with_powers():
    names = [d.name for d in builtin_catalog("FourSpinorDeg2").descriptors]
    r = rank_of_span([(n, 2) for n in names], seed=1)
    assert r.rank == 16
    assert all(lbl.endswith("^2") for lbl in r.names)


def test_rank_full_three_spinor_catalog_seed_stable():
    ranks = {rank_of_span(CAT3.descriptors, seed=s).rank for s in range(3)}
    assert ranks == {64}


def test_rank_validation():
    with pytest.raises(ValueError):
        rank_of_span([])
    with pytest.raises(ValueError):
        rank_of_span(["I_2a", "I_3a"], n_states=3)


# ------------------------------------------------------------- dependence

def test_all_builtin_relations_hold():
    assert len(BUILTIN_RELATIONS) == 90
    for label, terms in BUILTIN_RELATIONS:
        assert check_dependence(terms, n_states=20) < 1e-9, label


def test_broken_relation_detected():
    residual = check_dependence([(1, "I_2a"), (1, "I_3a")], n_states=10)
    assert residual > 1e-3


def test_u1sl4_single_lab_combos():
    for party, combos in U1SL4_COMBOS.items():
        assert len(combos) == 17
        for combo in combos:
            rep = check_invariance(combo, "U1SL4", party, n_trials=10)
            assert rep.max_magnitude_deviation < 1e-9, (party, combo)
            if len(combo) > 1:
                assert rep.nonzero


def test_u1sl4_four_spinor_combos():
    for combo in U1SL4_FOUR_SPINOR:
        for party in range(4):
            rep = check_invariance(combo, "U1SL4", party, n_trials=8)
            assert rep.max_magnitude_deviation < 1e-9
            assert rep.nonzero


# ------------------------------------------------------------- invariance

def test_value_invariance_positive():
    for name in ("I_2a", "I_3b", "I_23c", "H_a", "H_b"):
        n = 4 if name.startswith("H") else 3
        for party in range(n):
            rep = check_invariance(name, "LorentzProper", party, n_trials=10)
            assert rep.max_value_deviation < 1e-9, (name, party)


def test_magnitude_invariance_positive():
    for name, gid, party in (("H_a", "GC", 0), ("H_b", "GC5", 3),
                             ("I_2a", "GC5", 0), ("I_3a", "GC", 2),
                             ("I_3a", "GC_U", 1), ("I_2a", "GC5_U", 2),
                             ("I_2a", "Intersection", 0),
                             ("I_3a", "Intersection_U", 1)):
        rep = check_invariance(name, gid, party, n_trials=10)
        assert rep.max_magnitude_deviation < 1e-9, (name, gid)


def test_negative_controls():
    for name, gid in (("I_2a", "GC"), ("I_3a", "GC5"), ("I_2a", "SL4"),
                      ("H_a", "GC5"), ("H_b", "GC")):
        rep = check_invariance(name, gid, 0, n_trials=10)
        assert rep.max_magnitude_deviation > 1e-3, (name, gid)


def test_party_name_aliases():
    a = check_invariance("I_2a", "LorentzProper", "alice", n_trials=3)
    b = check_invariance("I_2a", "LorentzProper", 0, n_trials=3)
    assert a.party == b.party == 0


# ----------------------------------------------------------------- parity

def test_classify_parity_all_eight_classes():
    reps = {"I_2a": (1, 1, 1), "I_10a": (1, -1, 1), "I_19a": (1, 1, -1),
            "I_23a": (-1, 1, 1), "I_27a": (-1, 1, -1),
            "I_31a": (-1, -1, 1), "I_35a": (1, -1, -1),
            "I_11a": (-1, -1, -1)}
    for name, signs in reps.items():
        assert classify_parity(name) == signs, name
    assert len(set(reps.values())) == 8


# -------------------------------------------------------------- evolution

def test_evolution_preserving_degrees():
    for tag, degs in (("C5", (0, 1, 2)), ("C", (0, 2, 3)),
                      ("C5", (1,)), ("C", (3,)), ("C5", (0, 2)),
                      ("C", (0, 2))):
        for k in range(3):
            h = random_hamiltonian(degs, rng_seed=300 + k)
            rep = evolve_and_check_bilinear(h, 0.8, tag)
            assert rep.expected_preserved
            assert rep.scalar_deviation < 1e-10, (tag, degs)
            assert rep.theta_deviation < 1e-8, (tag, degs)


def test_evolution_failing_degrees():
    for tag, degs in (("C5", (3,)), ("C", (1,)), ("C5", (1, 3)),
                      ("C", (1, 3))):
        for k in range(3):
            h = random_hamiltonian(degs, rng_seed=330 + k)
            rep = evolve_and_check_bilinear(h, 0.8, tag)
            assert not rep.expected_preserved
            assert rep.scalar_deviation > 1e-3, (tag, degs)


def test_hamiltonian_spec_degrees_and_hermiticity():
    h = random_hamiltonian((0, 1, 2, 3), rng_seed=1)
    assert h.degrees == frozenset({0, 1, 2, 3})
    m = h.matrix()
    assert np.allclose(m, m.conj().T)
    assert HamiltonianSpec().degrees == frozenset()


# ------------------------------------------------------------- covariance

def test_similarity_covariance_exact_for_general_s():
    rng = np.random.default_rng(5)
    s = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rep = similarity_covariance_check(s)
    assert rep.max_rel_deviation < 1e-9


def test_similarity_covariance_scalar_scale():
    c = 1.3 - 0.4j
    rep = similarity_covariance_check(c * np.eye(4))
    assert rep.max_rel_deviation < 1e-9
    assert np.isclose(rep.observed_scale, rep.predicted_scale)
    assert np.isclose(rep.predicted_scale, c ** 12)  # det^3 = (c^4)^3


def test_similarity_covariance_rejects_singular():
    with pytest.raises(ValueError):
        similarity_covariance_check(np.zeros((4, 4)))
