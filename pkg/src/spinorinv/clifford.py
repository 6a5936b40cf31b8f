"""Gamma-matrix algebra, sandwich matrices and group samplers.

Everything is built in the Dirac representation with metric signature
(+---).  The two antisymmetric "sandwich" matrices

    C  = i gamma^1 gamma^3,      C5 = C gamma^5,

define the skew bilinear forms psi^T C phi and psi^T C gamma^5 phi that the
contraction polynomials are assembled from.  This module also exposes the
Lie-algebra generator sets of every continuous group used in invariance
testing, a sampler ``exp(sum_i c_i M_i)`` for elements of those groups, the
discrete P/CPT transformations and the 32-element finite group generated by
the gamma matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .rng import make_rng

# Pauli matrices
SIGMA = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]

_ZERO2 = np.zeros((2, 2), dtype=complex)
_EYE2 = np.eye(2, dtype=complex)

GAMMA0 = np.diag([1, 1, -1, -1]).astype(complex)
GAMMA = [GAMMA0] + [
    np.block([[_ZERO2, s], [-s, _ZERO2]]) for s in SIGMA
]
GAMMA5 = np.block([[_ZERO2, _EYE2], [_EYE2, _ZERO2]])
C_MATRIX = 1j * GAMMA[1] @ GAMMA[3]
C_GAMMA5 = C_MATRIX @ GAMMA5
EYE4 = np.eye(4, dtype=complex)

# Minkowski metric, signature (+---)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

GROUP_IDS = (
    "LorentzProper", "GC_U", "GC5_U", "GC", "GC5",
    "Intersection_U", "Intersection", "SL4", "U1SL4", "DiracGroup",
)


@dataclass(frozen=True)
class GammaBasis:
    """The fixed matrices of the Dirac representation."""
    gamma: tuple
    gamma5: np.ndarray
    c_matrix: np.ndarray
    c_gamma5: np.ndarray


@dataclass(frozen=True)
class GroupSpec:
    group_id: str
    generators: tuple = field(default=())


def build_gamma_basis() -> GammaBasis:
    return GammaBasis(
        gamma=tuple(g.copy() for g in GAMMA),
        gamma5=GAMMA5.copy(),
        c_matrix=C_MATRIX.copy(),
        c_gamma5=C_GAMMA5.copy(),
    )


def sandwich_matrix(x_tag: str) -> np.ndarray:
    """Return C or C gamma^5 for tag "C" / "C5"."""
    if x_tag == "C":
        return C_MATRIX
    if x_tag == "C5":
        return C_GAMMA5
    raise ValueError(f"unknown sandwich tag {x_tag!r}")


def gamma_word(indices) -> np.ndarray:
    """Product gamma^{i1} gamma^{i2} ... for indices in 0..3 (5 = gamma^5)."""
    m = EYE4
    for i in indices:
        m = m @ (GAMMA5 if i == 5 else GAMMA[i])
    return m


def _lorentz_generators():
    # S^{rho sigma} = (1/4)[gamma^rho, gamma^sigma]
    gens = []
    for r in range(4):
        for s in range(r + 1, 4):
            gens.append(0.25 * (GAMMA[r] @ GAMMA[s] - GAMMA[s] @ GAMMA[r]))
    return gens


def _second_degree(kind):
    # second-degree gamma products: the skew-Hermitian set i g0 gi, gi gj
    # or the Hermitian set g0 gi, i gi gj
    boost = 1j if kind == "skew" else 1.0
    rot = 1.0 if kind == "skew" else 1j
    out = [boost * GAMMA[0] @ GAMMA[i] for i in (1, 2, 3)]
    out += [rot * GAMMA[i] @ GAMMA[j] for i, j in ((1, 2), (1, 3), (2, 3))]
    return out


def _sl4_generators():
    # real basis of sl(4, C) viewed as a real Lie algebra: 15 traceless
    # complex directions, each taken with factors 1 and i
    basis = []
    for i in range(4):
        for j in range(4):
            if i != j:
                e = np.zeros((4, 4), dtype=complex)
                e[i, j] = 1.0
                basis.append(e)
    for k in range(3):
        d = np.zeros((4, 4), dtype=complex)
        d[k, k] = 1.0
        d[k + 1, k + 1] = -1.0
        basis.append(d)
    return [b for m in basis for b in (m, 1j * m)]


def lie_generators(group_id: str) -> GroupSpec:
    """Generator matrices for each supported group.

    The G^{C gamma^5} and G^C lists are exactly the 11 skew-Hermitian
    (unitary subgroup) plus 10 Hermitian matrices of the invariance-group
    classification; their intersection keeps the shared second-degree
    products and the phase generator iI.
    """
    g = GAMMA
    if group_id == "LorentzProper":
        gens = _lorentz_generators()
    elif group_id == "GC5_U":
        gens = [1j * g[0], g[1], g[2], g[3]] + _second_degree("skew") + [1j * EYE4]
    elif group_id == "GC5":
        gens = lie_generators("GC5_U").generators + tuple(
            [g[0], 1j * g[1], 1j * g[2], 1j * g[3]] + _second_degree("herm"))
    elif group_id == "GC_U":
        gens = [GAMMA5 @ g[0], 1j * GAMMA5 @ g[1], 1j * GAMMA5 @ g[2],
                1j * GAMMA5 @ g[3]] + _second_degree("skew") + [1j * EYE4]
    elif group_id == "GC":
        gens = lie_generators("GC_U").generators + tuple(
            [1j * GAMMA5 @ g[0], GAMMA5 @ g[1], GAMMA5 @ g[2],
             GAMMA5 @ g[3]] + _second_degree("herm"))
    elif group_id == "Intersection_U":
        gens = _second_degree("skew") + [1j * EYE4]
    elif group_id == "Intersection":
        gens = lie_generators("Intersection_U").generators + tuple(
            _second_degree("herm"))
    elif group_id == "SL4":
        gens = _sl4_generators()
    elif group_id == "U1SL4":
        gens = _sl4_generators() + [1j * EYE4]
    elif group_id == "DiracGroup":
        gens = list(g)  # the finite group is generated by the gammas
    else:
        raise ValueError(f"unsupported group_id {group_id!r}")
    return GroupSpec(group_id=group_id, generators=tuple(gens))


def dirac_group() -> list:
    """The 32 elements: +/- products of distinct gamma matrices."""
    products = [EYE4]
    for r in range(1, 5):
        from itertools import combinations
        for idxs in combinations(range(4), r):
            products.append(gamma_word(idxs))
    return [s * p for s in (1.0, -1.0) for p in products]


def sample_group_element(group_id: str, rng_seed, scale: float = 0.5
                         ) -> np.ndarray:
    """exp(sum_i c_i M_i) with c_i ~ U[-scale, scale], seeded.

    For the finite Dirac group this picks one of the 32 elements uniformly.
    """
    rng = make_rng(rng_seed)
    if group_id == "DiracGroup":
        elems = dirac_group()
        return elems[rng.integers(len(elems))]
    gens = lie_generators(group_id).generators
    coeffs = rng.uniform(-scale, scale, size=len(gens))
    m = sum(c * g for c, g in zip(coeffs, gens))
    return expm(m)


def discrete_transform(kind: str, idx: int | None = None) -> np.ndarray:
    """P -> gamma^0; CPT -> -i gamma^5; DiracGroupElement -> element #idx."""
    if kind == "P":
        return GAMMA[0].copy()
    if kind == "CPT":
        return -1j * GAMMA5
    if kind == "DiracGroupElement":
        elems = dirac_group()
        if idx is None or not 0 <= idx < len(elems):
            raise ValueError(f"Dirac group index {idx!r} out of range")
        return elems[idx]
    raise ValueError(f"unknown discrete transform {kind!r}")


def bilinear(x_tag: str, psi, phi) -> complex:
    """psi^T X phi with X = C or C gamma^5."""
    psi = np.asarray(psi, dtype=complex)
    phi = np.asarray(phi, dtype=complex)
    return complex(psi @ sandwich_matrix(x_tag) @ phi)
