"""Gamma algebra, bilinear forms, group generators and sampled elements."""
import numpy as np
import pytest

from spinorinv.clifford import (C_GAMMA5, C_MATRIX, EYE4, GAMMA, GAMMA5,
                                GROUP_IDS, METRIC, bilinear, dirac_group,
                                discrete_transform, lie_generators,
                                sample_group_element, sandwich_matrix)

RNG = np.random.default_rng(7)


def test_clifford_algebra():
    for mu in range(4):
        for nu in range(4):
            anti = GAMMA[mu] @ GAMMA[nu] + GAMMA[nu] @ GAMMA[mu]
            assert np.allclose(anti, 2 * METRIC[mu, nu] * EYE4)


def test_gamma5():
    assert np.allclose(GAMMA5 @ GAMMA5, EYE4)
    for mu in range(4):
        assert np.allclose(GAMMA5 @ GAMMA[mu] + GAMMA[mu] @ GAMMA5, 0)
    assert np.allclose(1j * GAMMA[0] @ GAMMA[1] @ GAMMA[2] @ GAMMA[3],
                       GAMMA5)


def test_sandwich_matrices_antisymmetric():
    for tag in ("C", "C5"):
        x = sandwich_matrix(tag)
        assert np.allclose(x, -x.T)
        assert np.count_nonzero(x) == 4
    assert np.allclose(sandwich_matrix("C"), C_MATRIX)
    assert np.allclose(sandwich_matrix("C5"), C_GAMMA5)
    with pytest.raises(ValueError):
        sandwich_matrix("X")


def test_gamma_transpose_identity():
    # (gamma^mu)^T C = C gamma^mu and (gamma^mu)^T C5 = -C5 gamma^mu
    for mu in range(4):
        assert np.allclose(GAMMA[mu].T @ C_MATRIX, C_MATRIX @ GAMMA[mu])
        assert np.allclose(GAMMA[mu].T @ C_GAMMA5,
                           -C_GAMMA5 @ GAMMA[mu])


def test_parity_conjugation_signs():
    # gamma^0 flips the sign of one form and preserves the other
    p = discrete_transform("P")
    assert np.allclose(p, GAMMA[0])
    signs = []
    for x in (C_MATRIX, C_GAMMA5):
        moved = p.T @ x @ p
        s = moved[np.nonzero(x)][0] / x[np.nonzero(x)][0]
        assert np.allclose(moved, s * x)
        signs.append(complex(np.round(s)))
    assert set(signs) == {1 + 0j, -1 + 0j}


def test_cpt_preserves_magnitudes():
    m = discrete_transform("CPT")
    for tag in ("C", "C5"):
        x = sandwich_matrix(tag)
        moved = m.T @ x @ m
        ratio = moved[np.nonzero(x)][0] / x[np.nonzero(x)][0]
        assert abs(abs(ratio) - 1) < 1e-12
        assert np.allclose(moved, ratio * x)


def test_generator_counts():
    expected = {"LorentzProper": 6, "GC_U": 11, "GC5_U": 11, "GC": 21,
                "GC5": 21, "Intersection_U": 7, "Intersection": 13,
                "SL4": 30, "U1SL4": 31}
    for gid, n in expected.items():
        spec = lie_generators(gid)
        assert spec.group_id == gid
        assert len(spec.generators) == n, gid


def test_generators_annihilate_form():
    # every non-phase generator M satisfies M^T X + X M = 0 for its form
    form = {"GC_U": "C", "GC": "C", "GC5_U": "C5", "GC5": "C5"}
    for gid, tag in form.items():
        x = sandwich_matrix(tag)
        ok = 0
        for m in lie_generators(gid).generators:
            if np.allclose(m, 1j * EYE4):  # the U(1) phase generator
                continue
            assert np.allclose(m.T @ x + x @ m, 0, atol=1e-12)
            ok += 1
        assert ok >= 10


def test_sampled_elements_preserve_form():
    for gid, tag in (("GC", "C"), ("GC5", "C5"), ("LorentzProper", "C"),
                     ("LorentzProper", "C5")):
        x = sandwich_matrix(tag)
        for k in range(5):
            s = sample_group_element(gid, rng_seed=100 + k)
            moved = s.T @ x @ s
            ratio = moved[np.nonzero(x)][0] / x[np.nonzero(x)][0]
            assert abs(abs(ratio) - 1) < 1e-10, gid
            assert np.allclose(moved, ratio * x, atol=1e-10)
            if gid == "LorentzProper":
                assert abs(ratio - 1) < 1e-10


def test_sampled_special_groups_have_unit_determinant():
    for gid in ("LorentzProper", "SL4"):
        for k in range(5):
            s = sample_group_element(gid, rng_seed=200 + k)
            assert abs(np.linalg.det(s) - 1) < 1e-10


def test_dirac_group():
    g = dirac_group()
    assert len(g) == 32
    flat = {tuple(np.round(m.reshape(-1), 9)) for m in g}
    assert len(flat) == 32
    # closure under multiplication
    for a in g[:6]:
        for b in g[:6]:
            prod = tuple(np.round((a @ b).reshape(-1), 9))
            assert prod in flat


def test_group_ids_sampleable():
    for gid in GROUP_IDS:
        if gid == "DiracGroup":
            s = discrete_transform("DiracGroupElement", 5)
        else:
            s = sample_group_element(gid, rng_seed=3)
        assert s.shape == (4, 4)
        assert np.isfinite(s).all()


def test_bilinear():
    psi = RNG.standard_normal(4) + 1j * RNG.standard_normal(4)
    phi = RNG.standard_normal(4) + 1j * RNG.standard_normal(4)
    for tag in ("C", "C5"):
        x = sandwich_matrix(tag)
        assert np.isclose(bilinear(tag, psi, phi), psi @ x @ phi)
        # antisymmetry of the form
        assert np.isclose(bilinear(tag, psi, phi),
                          -bilinear(tag, phi, psi))
        assert np.isclose(bilinear(tag, psi, psi), 0)
