"""Independent evaluation paths used to validate the contraction engine.

Two kinds of oracle live here.  The qubit-sector tangles (3-tangle, the
2x2x4 tangle V, the four-qubit invariants H/L/M and the even-N N-tangle)
are the known entanglement polynomials that the spinor invariants reduce
to on chiral states.  ``naive_evaluate`` and ``appendix_expansion`` are
brute-force and literal-transcription evaluators of the contraction
polynomials themselves, sharing no code with the einsum engine.
"""
from __future__ import annotations

import itertools

import numpy as np

from . import _expansions
from .clifford import sandwich_matrix
from .contraction import InvariantDescriptor
from .states import MultiSpinorState


def _as_qubit_tensor(q, n: int) -> np.ndarray:
    arr = np.asarray(q, dtype=complex)
    if arr.size != 2 ** n:
        raise ValueError(f"need 2^{n} coefficients")
    return arr.reshape((2,) * n)


def _qubit_poly(key: str, t: np.ndarray) -> complex:
    """Evaluate one of the transcribed qubit polynomials on tensor ``t``."""
    total = 0.0 + 0.0j
    for sign, idxs in _expansions.QUBIT[key]:
        term = sign + 0.0j
        for s in idxs:
            term *= t[tuple(int(c) for c in s)]
        total += term
    return total


def three_tangle(q) -> complex:
    """Coffman-Kundu-Wootters 3-tangle of a 3-qubit state."""
    t = _as_qubit_tensor(q, 3)
    square = (t[0, 1, 1] * t[1, 0, 0] - t[0, 1, 0] * t[1, 0, 1]
              - t[0, 0, 1] * t[1, 1, 0] + t[0, 0, 0] * t[1, 1, 1])
    prod = ((t[0, 0, 1] * t[0, 1, 0] - t[0, 0, 0] * t[0, 1, 1])
            * (t[1, 0, 1] * t[1, 1, 0] - t[1, 0, 0] * t[1, 1, 1]))
    return square ** 2 - 4 * prod


def four_qubit_invariants(q):
    """The degree-2 invariant H and degree-4 invariants L, M of 4 qubits.

    H carries the epsilon-contraction normalization (H = 1 on the 4-qubit
    GHZ state), which is twice the printed monomial sum; the printed sum is
    what enters the degree-4 reduction combinations, see
    ``ty_reduction_target``.  L and M are the transcribed formulas as
    printed.
    """
    t = _as_qubit_tensor(q, 4)
    return (2 * _qubit_poly("H", t), _qubit_poly("L", t),
            _qubit_poly("M", t))


#: which reduction combination each four-spinor degree-4 suffix hits
TY_REDUCTION_CLASS = {
    "a": "512(H2-2L-4M)", "c": "512(-H2-4L-2M)", "f": "512(H2-2L+2M)",
    "b": "1024(-L-2M)", "e": "1024(-L-2M)",
    "d": "1024(2L+M)", "h": "1024(2L+M)",
    "g": "1024(-L+M)", "i": "1024(-L+M)",
    "j": "512H2", "k": "512H2", "l": "512H2", "m": "512H2",
}


def ty_reduction_target(suffix: str, H: complex, L: complex,
                        M: complex) -> complex:
    """Expected chiral-sector value of T_suffix / Y_suffix.

    The combinations are stated for the printed H normalization, i.e. half
    the H returned by :func:`four_qubit_invariants`.
    """
    h2 = (H / 2) ** 2
    targets = {
        "512(H2-2L-4M)": 512 * (h2 - 2 * L - 4 * M),
        "512(-H2-4L-2M)": 512 * (-h2 - 4 * L - 2 * M),
        "512(H2-2L+2M)": 512 * (h2 - 2 * L + 2 * M),
        "1024(-L-2M)": 1024 * (-L - 2 * M),
        "1024(2L+M)": 1024 * (2 * L + M),
        "1024(-L+M)": 1024 * (-L + M),
        "512H2": 512 * h2,
    }
    return targets[TY_REDUCTION_CLASS[suffix]]


_EPSILON2 = np.array([[0, -1], [1, 0]], dtype=complex)  # eps[1,0] = 1


def n_tangle(q) -> complex:
    """N-tangle of an even number of qubits, epsilon-contraction form.

    tau = sum eps_{nj} eps_{pk} ... psi_{jk...} psi_{np...}.  For n = 4
    this equals the H of :func:`four_qubit_invariants` and twice the
    printed four-qubit sum; the printed 6-qubit polynomial is likewise half
    this value (each unordered psi-psi product appears once in print but
    twice in the ordered epsilon sum).
    """
    arr = np.asarray(q, dtype=complex)
    n = int(round(np.log2(arr.size)))
    if arr.size != 2 ** n or n % 2:
        raise ValueError("need 2^n coefficients for even n")
    t = arr.reshape((2,) * n)
    letters = [chr(97 + i) for i in range(2 * n)]
    first = "".join(letters[:n])
    second = "".join(letters[n:])
    eps_subs = [letters[n + i] + letters[i] for i in range(n)]
    spec = ",".join([first, second] + eps_subs) + "->"
    return complex(np.einsum(spec, t, t, *([_EPSILON2] * n)))


def chiral_subtensor(state: MultiSpinorState, parties, tol: float = 1e-10):
    """Reduce listed parties from 4 levels to 2 using chiral symmetry.

    A party held by a Weyl particle satisfies psi[.., j+2, ..] =
    s * psi[.., j, ..] with s = +1 (right-handed) or s = -1 (left-handed);
    this keeps indices 0 and 1 of those parties after verifying the
    symmetry.  Raises if neither sign fits.
    """
    t = state.tensor
    for party in parties:
        lower = np.take(t, [0, 1], axis=party)
        upper = np.take(t, [2, 3], axis=party)
        if np.allclose(upper, lower, atol=tol):
            pass
        elif np.allclose(upper, -lower, atol=tol):
            pass
        else:
            raise ValueError(f"party {party} is not chirally symmetric")
        t = lower
    return t


def tangle_224(state: MultiSpinorState) -> complex:
    """The 2x2x4 tangle V of a 3-spinor state with parties A, B Weyl.

    Evaluates the printed six-term sum of paired 2x2 minors on the
    sub-tensor psi_{jkl}, j, k in {0, 1}, l in {0..3}.  The fourth term is
    transcribed with the first minor read as psi_000 psi_011 - psi_001
    psi_010, completing the minor structure of the other five terms.
    """
    if state.n_parties != 3:
        raise ValueError("tangle_224 needs a 3-party state")
    p = chiral_subtensor(state, (0, 1))  # shape (2, 2, 4)
    return (
        (p[0, 0, 3] * p[0, 1, 2] - p[0, 0, 2] * p[0, 1, 3])
        * (p[1, 0, 1] * p[1, 1, 0] - p[1, 0, 0] * p[1, 1, 1])
        + (p[0, 0, 3] * p[0, 1, 1] - p[0, 0, 1] * p[0, 1, 3])
        * (p[1, 0, 0] * p[1, 1, 2] - p[1, 0, 2] * p[1, 1, 0])
        + (p[0, 0, 3] * p[0, 1, 0] - p[0, 0, 0] * p[0, 1, 3])
        * (p[1, 0, 2] * p[1, 1, 1] - p[1, 0, 1] * p[1, 1, 2])
        + (p[0, 0, 0] * p[0, 1, 1] - p[0, 0, 1] * p[0, 1, 0])
        * (p[1, 0, 2] * p[1, 1, 3] - p[1, 0, 3] * p[1, 1, 2])
        + (p[0, 0, 0] * p[0, 1, 2] - p[0, 0, 2] * p[0, 1, 0])
        * (p[1, 0, 3] * p[1, 1, 1] - p[1, 0, 1] * p[1, 1, 3])
        + (p[0, 0, 1] * p[0, 1, 2] - p[0, 0, 2] * p[0, 1, 1])
        * (p[1, 0, 0] * p[1, 1, 3] - p[1, 0, 3] * p[1, 1, 0])
    )


NAIVE_SLOT_CAP = 16


def naive_evaluate(desc: InvariantDescriptor,
                   state: MultiSpinorState) -> complex:
    """Brute-force evaluation by sparse sandwich-matrix entry enumeration.

    Each antisymmetric X has exactly four nonzero entries; the value is the
    sum over all 4^{pairs} entry selections of the entry product times the
    corresponding state-coefficient product.  Pure Python, no shared code
    with the einsum engine.
    """
    if desc.is_pattern:
        raise ValueError("pattern has unassigned sandwich matrices")
    if desc.n_parties != state.n_parties:
        raise ValueError("party-count mismatch")
    n, d = desc.n_parties, desc.degree
    if n * d > NAIVE_SLOT_CAP:
        raise ValueError(f"more than {NAIVE_SLOT_CAP} slots; cap exceeded")
    entries = []
    for pair in desc.pairs:
        x = sandwich_matrix(pair.x)
        cells = [(i, j, x[i, j]) for i in range(4) for j in range(4)
                 if x[i, j] != 0]
        assert len(cells) == 4
        entries.append((pair, cells))
    flat = state.flat
    strides = [4 ** (n - 1 - p) for p in range(n)]
    total = 0j
    for choice in itertools.product(range(4), repeat=len(entries)):
        coeff = 1.0 + 0j
        addr = [0] * d
        for (pair, cells), k in zip(entries, choice):
            i, j, v = cells[k]
            coeff *= v
            addr[pair.from_slot.copy] += i * strides[pair.from_slot.party]
            addr[pair.to_slot.copy] += j * strides[pair.to_slot.party]
        for a in addr:
            coeff *= flat[a]
        total += coeff
    return total


def appendix_names():
    return tuple(sorted(_expansions.APPENDIX))


def appendix_expansion(name: str, state: MultiSpinorState) -> complex:
    """Evaluate a literally transcribed explicit polynomial expansion.

    Each transcription is a sum of terms c * F1 * F2, c * F1^2 or c * F1,
    where every factor F is a signed sum of products of two state
    coefficients.
    """
    try:
        terms = _expansions.APPENDIX[name]
    except KeyError:
        raise KeyError(f"no transcribed expansion for {name!r}") from None
    t = state.tensor
    n = state.n_parties

    def factor(spec) -> complex:
        total = 0j
        for sign, s1, s2 in spec:
            if len(s1) != n or len(s2) != n:
                raise ValueError(f"{name}: bad index length")
            total += (sign
                      * t[tuple(int(c) for c in s1)]
                      * t[tuple(int(c) for c in s2)])
        return total

    value = 0j
    for coef, f1, f2 in terms:
        v1 = factor(f1)
        if f2 is None:
            value += coef * v1 * v1
        elif f2 == ():
            value += coef * v1
        else:
            value += coef * v1 * factor(f2)
    return value
