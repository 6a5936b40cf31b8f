"""Verification laboratory: ranks, dependence relations, invariance checks.

Everything here is a numerical experiment with an explicit seed: spans are
ranked by SVD of an evaluation matrix at random states, dependence
relations are residual-tested, group invariance is probed with sampled
group elements applied at a single party, and the bilinear-form behaviour
under Hamiltonian evolution is checked against the degree-class rules.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from . import _tables
from .clifford import (EYE4, GAMMA, GAMMA5, discrete_transform,
                       sample_group_element, sandwich_matrix)
from .contraction import (InvariantDescriptor, builtin_catalog,
                          evaluate, evaluate_batch, find_descriptor,
                          _einsum_args)
from .rng import make_rng
from .states import MultiSpinorState, apply_local, random_state

DEFAULT_RANK_THRESHOLD = 1e-8
ZERO_GUARD = 1e-300

PARTY_NAMES = {"alice": 0, "bob": 1, "charlie": 2, "david": 3}


def _party_index(party) -> int:
    if isinstance(party, str):
        return PARTY_NAMES[party.lower()]
    return int(party)


# ---------------------------------------------------------------------------
# polynomial entries: a descriptor, a catalog name, or a (coef, name[, power])
# combination evaluated as sum_i c_i * P_i(psi)^{k_i}
def _normalize_terms(entry):
    if isinstance(entry, InvariantDescriptor):
        return [(1.0, entry, 1)]
    if isinstance(entry, str):
        return [(1.0, find_descriptor(entry), 1)]
    terms = []
    for item in entry:
        coef, name = item[0], item[1]
        power = item[2] if len(item) > 2 else 1
        desc = name if isinstance(name, InvariantDescriptor) \
            else find_descriptor(name)
        terms.append((complex(coef), desc, int(power)))
    return terms


def _eval_terms(terms, state: MultiSpinorState) -> complex:
    return sum(c * evaluate(d, state) ** k for c, d, k in terms)


def _entry_label(entry) -> str:
    if isinstance(entry, InvariantDescriptor):
        return entry.name or "<descriptor>"
    if isinstance(entry, str):
        return entry
    return " + ".join(
        f"{item[0]:+g}*{item[1]}" + (f"^{item[2]}" if len(item) > 2 else "")
        for item in entry)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SpanReport:
    names: tuple
    n_states: int
    shape: tuple
    singular_values: tuple
    rank: int
    threshold: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "check": "rank_of_span", "names": list(self.names),
            "n_states": self.n_states, "shape": list(self.shape),
            "singular_values": list(self.singular_values),
            "rank": self.rank, "threshold": self.threshold,
            "seed": self.seed,
        }


def rank_of_span(entries, n_states: int | None = None, seed: int = 0,
                 threshold: float = DEFAULT_RANK_THRESHOLD) -> SpanReport:
    """Numerical rank of a polynomial family on seeded random states.

    ``entries`` may mix descriptors, catalog names and (name, power) tuples
    (powers cover e.g. the squares of the degree-2 invariants).  Rank =
    number of singular values above ``threshold`` relative to the largest.
    """
    entries = list(entries)
    if not entries:
        raise ValueError("empty descriptor list")
    parsed = []
    for e in entries:
        if isinstance(e, tuple) and len(e) == 2 and isinstance(e[0], str):
            parsed.append((find_descriptor(e[0]), e[1], f"{e[0]}^{e[1]}"))
        elif isinstance(e, str):
            parsed.append((find_descriptor(e), 1, e))
        else:
            parsed.append((e, 1, e.name or "<descriptor>"))
    n_parties = parsed[0][0].n_parties
    if n_states is None:
        n_states = 2 * len(parsed)
    if n_states < 2 * len(parsed):
        raise ValueError("need at least 2x oversampling in states")
    rng = make_rng(seed)
    states = [random_state(n_parties, rng) for _ in range(n_states)]
    matrix = evaluate_batch([d for d, _, _ in parsed], states)
    for i, (_, power, _) in enumerate(parsed):
        if power != 1:
            matrix[i] = matrix[i] ** power
    sv = np.linalg.svd(matrix, compute_uv=False)
    rank = int(np.sum(sv > threshold * sv[0])) if sv[0] > 0 else 0
    return SpanReport(
        names=tuple(lbl for _, _, lbl in parsed), n_states=n_states,
        shape=matrix.shape, singular_values=tuple(float(s) for s in sv),
        rank=rank, threshold=threshold, seed=seed)


# ---------------------------------------------------------------------------
# built-in linear-dependence relations
def _builtin_relations():
    relations = []
    for group in sorted(_tables.RELATIONS):
        for i, rel in enumerate(_tables.RELATIONS[group]):
            terms = tuple((float(c), name, 1) for c, name in rel)
            relations.append((f"{group}[{i}]", terms))
    h_terms = [(1.0, "H_b", 2), (-1.0, "H_a", 2)]
    t_signs = {"a": 1, "b": -1, "c": -1, "d": 1, "e": -1, "f": 1, "g": -1,
               "h": -1, "i": -1, "j": -1, "k": -1, "l": -1, "m": -1}
    for suf, s in t_signs.items():
        h_terms.append((-2.0 * s, f"T_{suf}", 1))
        h_terms.append((2.0 * s, f"Y_{suf}", 1))
    relations.append(("four_spinor_deg4_single", tuple(h_terms)))
    return relations


BUILTIN_RELATIONS = _builtin_relations()


def check_dependence(coeffs, n_states: int = 100, seed: int = 0) -> float:
    """Max relative residual of a claimed linear dependence.

    ``coeffs`` is a list of (coefficient, name) or (coefficient, name,
    power) terms; the residual at each random state is |sum c_i P_i^k_i|
    divided by sum |c_i P_i^k_i|.
    """
    terms = _normalize_terms(coeffs)
    n_parties = terms[0][1].n_parties
    rng = make_rng(seed)
    worst = 0.0
    for _ in range(n_states):
        psi = random_state(n_parties, rng)
        vals = [c * evaluate(d, psi) ** k for c, d, k in terms]
        denom = sum(abs(v) for v in vals)
        if denom < ZERO_GUARD:
            continue
        worst = max(worst, abs(sum(vals)) / denom)
    return worst


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class InvarianceReport:
    name: str
    group_id: str
    party: int
    n_trials: int
    max_value_deviation: float
    max_magnitude_deviation: float
    rms_value: float

    @property
    def nonzero(self) -> bool:
        """Whether the polynomial is non-trivial on random states."""
        return self.rms_value > 1e-10

    def to_dict(self) -> dict:
        return {
            "check": "check_invariance", "name": self.name,
            "group_id": self.group_id, "party": self.party,
            "n_trials": self.n_trials,
            "max_value_deviation": self.max_value_deviation,
            "max_magnitude_deviation": self.max_magnitude_deviation,
            "rms_value": self.rms_value, "nonzero": self.nonzero,
        }


def check_invariance(entry, group_id: str, party, n_trials: int = 50,
                     seed: int = 0) -> InvarianceReport:
    """Deviation of a polynomial under sampled group action at one party.

    Each trial draws a fresh random state and group element.  Both the
    value deviation and the magnitude deviation are reported; which one a
    group is expected to zero out depends on whether it preserves the
    bilinear exactly (det-1 groups) or only up to a U(1) phase.
    """
    terms = _normalize_terms(entry)
    n_parties = terms[0][1].n_parties
    party_ix = _party_index(party)
    rng = make_rng(seed)
    max_val = max_mag = 0.0
    sq_sum = 0.0
    for _ in range(n_trials):
        psi = random_state(n_parties, rng)
        g = sample_group_element(group_id, rng)
        moved = apply_local(psi, party_ix, g)
        v0 = _eval_terms(terms, psi)
        v1 = _eval_terms(terms, moved)
        denom = max(abs(v0), ZERO_GUARD)
        max_val = max(max_val, abs(v1 - v0) / denom)
        max_mag = max(max_mag, abs(abs(v1) - abs(v0)) / denom)
        sq_sum += abs(v0) ** 2
    return InvarianceReport(
        name=_entry_label(entry), group_id=group_id, party=party_ix,
        n_trials=n_trials, max_value_deviation=max_val,
        max_magnitude_deviation=max_mag,
        rms_value=float(np.sqrt(sq_sum / max(n_trials, 1))))


def classify_parity(entry, n_states: int = 5, seed: int = 0,
                    tol: float = 1e-9):
    """Measured per-party sign under S(P) = gamma^0.

    Entries that are not parity eigenpolynomials at some party get None at
    that position instead of a sign.
    """
    terms = _normalize_terms(entry)
    n_parties = terms[0][1].n_parties
    rng = make_rng(seed)
    states = [random_state(n_parties, rng) for _ in range(n_states)]
    p_mat = discrete_transform("P")
    signs = []
    for party in range(n_parties):
        ratios = []
        for psi in states:
            v0 = _eval_terms(terms, psi)
            v1 = _eval_terms(terms, apply_local(psi, party, p_mat))
            if abs(v0) < 1e-12:
                continue
            ratios.append(v1 / v0)
        if ratios and all(abs(r - 1) < tol for r in ratios):
            signs.append(1)
        elif ratios and all(abs(r + 1) < tol for r in ratios):
            signs.append(-1)
        else:
            signs.append(None)
    return tuple(signs)


# ---------------------------------------------------------------------------
# single-lab U(1) x SL(4, C) invariant combinations of the 3-spinor catalog
def _u1sl4_combos():
    combos = {0: [], 1: [], 2: []}
    for k in range(2, 10):  # parity class +++
        combos[0].append([(1, f"I_{k}b"), (-1, f"I_{k}c"), (1, f"I_{k}d")])
        combos[1].append([(1, f"I_{k}a"), (-1, f"I_{k}c"), (-1, f"I_{k}d")])
        combos[2].append([(1, f"I_{k}a"), (-1, f"I_{k}b"), (1, f"I_{k}d")])
    for k in (10, 16, 17, 18):  # parity class +-+
        combos[0].append([(1, f"I_{k}a"), (1, f"I_{k}b"), (-2, f"I_{k}c")])
        combos[2].append([(2, f"I_{k}a"), (-1, f"I_{k}b"), (-1, f"I_{k}c")])
    for k in (19, 20, 21, 22):  # parity class ++-
        combos[0].append([(1, f"I_{k}a"), (-2, f"I_{k}b"), (1, f"I_{k}c")])
        combos[1].append([(2, f"I_{k}a"), (-1, f"I_{k}b"), (-1, f"I_{k}c")])
    for k in (23, 24, 25, 26):  # parity class -++
        combos[1].append([(1, f"I_{k}a"), (1, f"I_{k}b"), (-2, f"I_{k}c")])
        combos[2].append([(1, f"I_{k}a"), (-2, f"I_{k}b"), (1, f"I_{k}c")])
    combos[0].append([(1, "I_35d")])
    combos[1].append([(1, "I_27d")])
    combos[2].append([(1, "I_31d")])
    return combos


#: party index -> combinations invariant under U(1) x SL(4, C) in that lab
U1SL4_COMBOS = _u1sl4_combos()

#: four-spinor combinations invariant under U(1) x SL(4, C) in every lab
U1SL4_FOUR_SPINOR = [
    [(1, "H_a", 2)] + [(2 * s, f"T_{suf}") for suf, s in
                       zip("abcdefghijklm",
                           (1, -1, -1, 1, -1, 1, -1, -1, -1, -1, -1, -1,
                            -1))],
    [(1, "H_b", 2)] + [(2 * s, f"Y_{suf}") for suf, s in
                       zip("abcdefghijklm",
                           (1, -1, -1, 1, -1, 1, -1, -1, -1, -1, -1, -1,
                            -1))],
]


# ---------------------------------------------------------------------------
# Hamiltonian degree classes and bilinear evolution
def _deg1_basis():
    return [GAMMA[0], 1j * GAMMA[1], 1j * GAMMA[2], 1j * GAMMA[3]]


def _deg2_basis():
    out = [GAMMA[0] @ GAMMA[i] for i in (1, 2, 3)]
    out += [1j * GAMMA[i] @ GAMMA[j] for i, j in ((1, 2), (1, 3), (2, 3))]
    return out


def _deg3_basis():
    out = [1j * GAMMA[0] @ GAMMA[i] @ GAMMA[j]
           for i, j in ((1, 2), (1, 3), (2, 3))]
    out.append(GAMMA[1] @ GAMMA[2] @ GAMMA[3])
    return out


@dataclass(frozen=True)
class HamiltonianSpec:
    """Hermitian Hamiltonian by gamma-degree class.

    ``eta`` (4 reals) weights the Hermitian degree-1 basis gamma^0,
    i gamma^1..3; ``lam`` (6 reals) the degree-2 basis gamma^0 gamma^i,
    i gamma^i gamma^j; ``kappa`` (4 reals) the degree-3 basis
    i gamma^0 gamma^i gamma^j, gamma^1 gamma^2 gamma^3; ``f`` the identity
    coefficient.
    """
    f: float = 0.0
    eta: tuple = field(default=(0.0,) * 4)
    lam: tuple = field(default=(0.0,) * 6)
    kappa: tuple = field(default=(0.0,) * 4)

    def matrix(self) -> np.ndarray:
        h = self.f * EYE4.copy()
        for c, m in zip(self.eta, _deg1_basis()):
            h = h + c * m
        for c, m in zip(self.lam, _deg2_basis()):
            h = h + c * m
        for c, m in zip(self.kappa, _deg3_basis()):
            h = h + c * m
        if not np.allclose(h, h.conj().T, atol=1e-12):
            raise ValueError("assembled Hamiltonian is not Hermitian")
        return h

    @property
    def degrees(self) -> frozenset:
        out = {0} if self.f else set()
        if any(self.eta):
            out.add(1)
        if any(self.lam):
            out.add(2)
        if any(self.kappa):
            out.add(3)
        return frozenset(out)


#: gamma-degrees whose Hamiltonian terms preserve each bilinear form
PRESERVED_DEGREES = {"C5": frozenset({0, 1, 2}), "C": frozenset({0, 2, 3})}


@dataclass(frozen=True)
class EvolutionReport:
    x_tag: str
    t: float
    degrees: frozenset
    expected_preserved: bool
    scalar_deviation: float
    theta: float
    theta_predicted: float
    theta_deviation: float

    @property
    def is_scalar_multiple(self) -> bool:
        return self.scalar_deviation < 1e-10

    def to_dict(self) -> dict:
        return {
            "check": "evolve_and_check_bilinear", "x_tag": self.x_tag,
            "t": self.t, "degrees": sorted(self.degrees),
            "expected_preserved": self.expected_preserved,
            "scalar_deviation": self.scalar_deviation,
            "theta": self.theta, "theta_predicted": self.theta_predicted,
            "theta_deviation": self.theta_deviation,
        }


def random_hamiltonian(degrees, rng_seed, scale: float = 0.7
                       ) -> HamiltonianSpec:
    """Random spec with support exactly on the requested degree classes."""
    rng = make_rng(rng_seed)

    def draw(k, on):
        return tuple(rng.uniform(-scale, scale, size=k)) if on \
            else (0.0,) * k

    degrees = set(degrees)
    return HamiltonianSpec(
        f=float(rng.uniform(-scale, scale)) if 0 in degrees else 0.0,
        eta=draw(4, 1 in degrees),
        lam=draw(6, 2 in degrees),
        kappa=draw(4, 3 in degrees))


def evolve_and_check_bilinear(h: HamiltonianSpec, t: float,
                              x_tag: str) -> EvolutionReport:
    """Check U^T X U = e^{i theta} X for U = exp(-iHt).

    The scalar-multiple form holds exactly when H only has gamma-degrees
    preserved by X ({0,1,2} for C gamma^5, {0,2,3} for C); the phase then
    equals -2 f t from the identity component.
    """
    x = sandwich_matrix(x_tag)
    u = expm(-1j * h.matrix() * t)
    moved = u.T @ x @ u
    i, j = np.unravel_index(np.argmax(np.abs(x)), x.shape)
    ratio = moved[i, j] / x[i, j]
    deviation = float(np.max(np.abs(moved - ratio * x))
                      / np.max(np.abs(x)))
    theta = float(np.angle(ratio))
    theta_pred = -2.0 * h.f * t
    theta_dev = float(abs(np.angle(np.exp(1j * (theta - theta_pred)))))
    return EvolutionReport(
        x_tag=x_tag, t=t, degrees=h.degrees,
        expected_preserved=h.degrees <= PRESERVED_DEGREES[x_tag],
        scalar_deviation=deviation, theta=theta,
        theta_predicted=theta_pred, theta_deviation=theta_dev)


# ---------------------------------------------------------------------------
def _evaluate_with_matrices(desc: InvariantDescriptor,
                            state: MultiSpinorState, mats) -> complex:
    spec, _default = _einsum_args(desc, batched=False)
    tensors = [state.tensor] * desc.degree + list(mats)
    return complex(np.einsum(spec, *tensors, optimize=True))


@dataclass(frozen=True)
class CovarianceReport:
    max_rel_deviation: float
    det: complex
    observed_scale: complex
    predicted_scale: complex

    def to_dict(self) -> dict:
        return {
            "check": "similarity_covariance_check",
            "max_rel_deviation": self.max_rel_deviation,
            "det": [self.det.real, self.det.imag],
            "observed_scale": [self.observed_scale.real,
                               self.observed_scale.imag],
            "predicted_scale": [self.predicted_scale.real,
                                self.predicted_scale.imag],
        }


def similarity_covariance_check(s, seed: int = 0,
                                n_states: int = 5) -> CovarianceReport:
    """Covariance of the invariants under a similarity change of basis.

    Transforming every slot by ``s`` while replacing each sandwich matrix
    X by s^{-T} X s^{-1} must reproduce the original values exactly, for
    any invertible ``s``.  Keeping the original X instead rescales every
    value by det(s)^{degree n / 4} whenever s^T X s is proportional to X
    (e.g. scalar ``s``, where each of the degree * n slots contributes one
    factor); both the observed and predicted scale are reported, probing
    the lowest-degree three-party polynomial.
    """
    s = np.asarray(s, dtype=complex)
    det = complex(np.linalg.det(s))
    if abs(det) < 1e-12:
        raise ValueError("singular transformation")
    s_inv = np.linalg.inv(s)
    rng = make_rng(seed)
    cat3 = builtin_catalog("ThreeSpinorDeg4")
    cat4 = builtin_catalog("FourSpinorDeg2")
    probes = [cat3["I_3a"], cat3["I_2a"], cat3["I_23b"], cat4["H_a"],
              cat4["H_b"]]
    worst = 0.0
    observed = 0j
    for desc in probes:
        rebuilt = [s_inv.T @ sandwich_matrix(p.x) @ s_inv
                   for p in desc.pairs]
        for _ in range(n_states):
            psi = random_state(desc.n_parties, rng)
            moved = psi
            for party in range(desc.n_parties):
                moved = apply_local(moved, party, s)
            v0 = evaluate(desc, psi)
            v1 = _evaluate_with_matrices(desc, moved, rebuilt)
            worst = max(worst, abs(v1 - v0) / max(abs(v0), ZERO_GUARD))
            if desc.name == "I_3a" and observed == 0:
                observed = evaluate(desc, moved) / v0
    d0 = probes[0]
    predicted = det ** (d0.degree * d0.n_parties // 4)
    return CovarianceReport(max_rel_deviation=worst, det=det,
                            observed_scale=observed,
                            predicted_scale=predicted)
