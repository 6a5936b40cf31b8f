"""Invariant descriptors, their evaluation, and the built-in catalogs.

A degree-d contraction polynomial on n spinors takes d copies of the state
tensor and joins their 4-valued slots pairwise with the antisymmetric
sandwich matrices C or C gamma^5, one pair per (party, copy-pair):

    P(psi) = X^{(1)}_{i a} X^{(2)}_{j b} ... psi_{i j ...} psi_{a b ...} ...

Each slot is a (copy, party) position; every slot sits in exactly one pair
and both ends of a pair belong to the same party, which is what makes the
value covariant under independent single-party transformations.  Pair
orientation matters: the X matrices are antisymmetric, so swapping the two
ends of one pair flips the sign of the whole polynomial.

The named catalogs (I_2a..I_38d, H_a..H_p, T_a..T_m, Y_a..Y_m, F_1..F_40
and the even-n degree-2 family) are transcribed slot-exactly, orientation
included, so the linear-dependence identities hold with their printed signs.
"""
from __future__ import annotations

import string
from dataclasses import dataclass

import numpy as np

from . import _tables
from .clifford import sandwich_matrix
from .states import MultiSpinorState

X_TAGS = ("C", "C5")

FAMILY_NAMES = (
    "ThreeSpinorDeg4", "FourSpinorDeg2", "FourSpinorDeg4_T",
    "FourSpinorDeg4_Y", "FiveSpinorDeg4Patterns", "EvenNDeg2",
)


@dataclass(frozen=True, order=True)
class SlotRef:
    copy: int
    party: int


@dataclass(frozen=True)
class Pair:
    from_slot: SlotRef
    to_slot: SlotRef
    x: str | None  # "C", "C5", or None for an unassigned pattern

    def __post_init__(self):
        if self.from_slot.party != self.to_slot.party:
            raise ValueError("pair must join two slots of the same party")
        if self.from_slot.copy == self.to_slot.copy:
            raise ValueError("pair must join two distinct copies")
        if self.x is not None and self.x not in X_TAGS:
            raise ValueError(f"unknown sandwich tag {self.x!r}")

    def flipped(self) -> "Pair":
        return Pair(self.to_slot, self.from_slot, self.x)


@dataclass(frozen=True)
class InvariantDescriptor:
    n_parties: int
    degree: int
    pairs: tuple
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        n, d = self.n_parties, self.degree
        if d % 2:
            raise ValueError("degree must be even")
        if len(self.pairs) != d * n // 2:
            raise ValueError(
                f"need {d * n // 2} pairs for degree {d} on {n} parties")
        seen = set()
        for p in self.pairs:
            for s in (p.from_slot, p.to_slot):
                if not (0 <= s.copy < d and 0 <= s.party < n):
                    raise ValueError(f"slot {s} out of range")
                if s in seen:
                    raise ValueError(f"slot {s} used twice")
                seen.add(s)

    @property
    def is_pattern(self) -> bool:
        return any(p.x is None for p in self.pairs)

    def with_x_assignment(self, tags) -> "InvariantDescriptor":
        """Assign one C/C5 tag per pair, in pair order."""
        tags = tuple(tags)
        if len(tags) != len(self.pairs):
            raise ValueError("one tag per pair required")
        pairs = tuple(Pair(p.from_slot, p.to_slot, t)
                      for p, t in zip(self.pairs, tags))
        return InvariantDescriptor(self.n_parties, self.degree, pairs,
                                   self.name)

    def party_matchings(self) -> dict:
        """party -> frozenset of unordered copy pairs."""
        out: dict = {}
        for p in self.pairs:
            out.setdefault(p.from_slot.party, set()).add(
                frozenset((p.from_slot.copy, p.to_slot.copy)))
        return {k: frozenset(v) for k, v in out.items()}

    def to_dict(self) -> dict:
        return {
            "n_parties": self.n_parties,
            "degree": self.degree,
            "pairs": [
                {"from": [p.from_slot.copy, p.from_slot.party],
                 "to": [p.to_slot.copy, p.to_slot.party],
                 "x": p.x}
                for p in self.pairs
            ],
            "name": self.name,
        }

    @staticmethod
    def from_dict(d: dict) -> "InvariantDescriptor":
        pairs = tuple(
            Pair(SlotRef(*p["from"]), SlotRef(*p["to"]), p.get("x"))
            for p in d["pairs"]
        )
        return InvariantDescriptor(int(d["n_parties"]), int(d["degree"]),
                                   pairs, d.get("name"))


@dataclass(frozen=True)
class Catalog:
    family: str
    descriptors: tuple

    def __post_init__(self):
        object.__setattr__(self, "descriptors", tuple(self.descriptors))
        names = [d.name for d in self.descriptors]
        if len(set(names)) != len(names):
            raise ValueError("catalog names must be unique")

    def __len__(self):
        return len(self.descriptors)

    def __iter__(self):
        return iter(self.descriptors)

    def __getitem__(self, name: str) -> InvariantDescriptor:
        for d in self.descriptors:
            if d.name == name:
                return d
        raise KeyError(name)

    @property
    def names(self):
        return tuple(d.name for d in self.descriptors)


# ---------------------------------------------------------------------------
# letter-table resolution
#
# A catalog entry is stored as (name, xs, psis): ``psis`` gives one string of
# index letters per state copy (letter position = party), ``xs`` gives per
# pair a tag and its two letters, row letter first.
def _resolve_letter_entry(entry, n_parties: int) -> InvariantDescriptor:
    name, xs, psis = entry
    degree = len(psis)
    slot_of = {}
    for copy, letters in enumerate(psis):
        if len(letters) != n_parties:
            raise ValueError(f"{name}: copy {copy} has {len(letters)} letters")
        for party, letter in enumerate(letters):
            if letter in slot_of:
                raise ValueError(f"{name}: letter {letter!r} repeated")
            slot_of[letter] = SlotRef(copy, party)
    pairs = tuple(
        Pair(slot_of[ab[0]], slot_of[ab[1]], None if tag == "X" else tag)
        for tag, ab in xs
    )
    return InvariantDescriptor(n_parties, degree, pairs, name)


def _even_n_deg2(n: int) -> Catalog:
    """All 2^n X-choices of the unique degree-2 full pairing on n parties.

    Orientation follows the four-party H family: the second copy's index is
    the row index of every sandwich matrix.
    """
    if n % 2 or n < 2:
        raise ValueError("EvenNDeg2 needs even n >= 2")
    base = tuple(Pair(SlotRef(1, p), SlotRef(0, p), None) for p in range(n))
    descs = []
    for bits in range(2 ** n):
        tags = tuple(X_TAGS[(bits >> (n - 1 - p)) & 1] for p in range(n))
        name = "E_" + "".join("5" if t == "C5" else "0" for t in tags)
        pairs = tuple(Pair(p.from_slot, p.to_slot, t)
                      for p, t in zip(base, tags))
        descs.append(InvariantDescriptor(n, 2, pairs, name))
    return Catalog(f"EvenNDeg2({n})", descs)


_CATALOG_CACHE: dict = {}


def builtin_catalog(family: str, n: int | None = None) -> Catalog:
    """Return a named built-in catalog.

    ``family`` is one of ThreeSpinorDeg4, FourSpinorDeg2, FourSpinorDeg4_T,
    FourSpinorDeg4_Y, FiveSpinorDeg4Patterns, EvenNDeg2 (the last takes the
    even party count ``n``).  "EvenNDeg2(6)" is accepted as a single string.
    """
    if family.startswith("EvenNDeg2(") and family.endswith(")"):
        n = int(family[len("EvenNDeg2("):-1])
        family = "EvenNDeg2"
    key = (family, n)
    if key in _CATALOG_CACHE:
        return _CATALOG_CACHE[key]
    if family == "ThreeSpinorDeg4":
        cat = Catalog(family, [_resolve_letter_entry(e, 3)
                               for e in _tables.CATALOG3])
    elif family == "FourSpinorDeg2":
        cat = Catalog(family, [_resolve_letter_entry(e, 4)
                               for e in _tables.CATALOG4_DEG2])
    elif family == "FourSpinorDeg4_T":
        cat = Catalog(family, [_resolve_letter_entry(e, 4)
                               for e in _tables.CATALOG4_T])
    elif family == "FourSpinorDeg4_Y":
        cat = Catalog(family, [_resolve_letter_entry(e, 4)
                               for e in _tables.CATALOG4_Y])
    elif family == "FiveSpinorDeg4Patterns":
        cat = Catalog(family, [_resolve_letter_entry(e, 5)
                               for e in _tables.PATTERNS5])
    elif family == "EvenNDeg2":
        if n is None:
            raise ValueError("EvenNDeg2 needs the party count n")
        cat = _even_n_deg2(n)
    else:
        raise ValueError(f"unknown catalog family {family!r}")
    _CATALOG_CACHE[key] = cat
    return cat


def three_spinor_patterns() -> Catalog:
    """The four inequivalent degree-4 pairing patterns on three parties."""
    return Catalog("ThreeSpinorDeg4Patterns",
                   [_resolve_letter_entry(e, 3) for e in _tables.PATTERNS3])


def four_spinor_patterns() -> Catalog:
    """The 13 connected degree-4 pairing patterns on four parties."""
    return Catalog("FourSpinorDeg4Patterns",
                   [_resolve_letter_entry(e, 4) for e in _tables.PATTERNS4])


def find_descriptor(name: str) -> InvariantDescriptor:
    """Look up a named descriptor across all fixed built-in catalogs."""
    for fam in ("ThreeSpinorDeg4", "FourSpinorDeg2", "FourSpinorDeg4_T",
                "FourSpinorDeg4_Y", "FiveSpinorDeg4Patterns"):
        try:
            return builtin_catalog(fam)[name]
        except KeyError:
            pass
    raise KeyError(name)


# ---------------------------------------------------------------------------
# parity classification of the three-spinor catalog
_PARITY_BY_GROUP = {}
for _grp in range(2, 10):
    _PARITY_BY_GROUP[_grp] = (1, 1, 1)
for _grp in (10, 16, 17, 18):
    _PARITY_BY_GROUP[_grp] = (1, -1, 1)
for _grp in (19, 20, 21, 22):
    _PARITY_BY_GROUP[_grp] = (1, 1, -1)
for _grp in (23, 24, 25, 26):
    _PARITY_BY_GROUP[_grp] = (-1, 1, 1)
for _grp in (27, 28, 29, 30):
    _PARITY_BY_GROUP[_grp] = (-1, 1, -1)
for _grp in (31, 32, 33, 34):
    _PARITY_BY_GROUP[_grp] = (-1, -1, 1)
for _grp in (35, 36, 37, 38):
    _PARITY_BY_GROUP[_grp] = (1, -1, -1)
for _grp in (11, 12, 14, 15):
    _PARITY_BY_GROUP[_grp] = (-1, -1, -1)


def parity_class(name: str) -> tuple:
    """Expected per-party parity signs (s_A, s_B, s_C) of a named I_*."""
    if not (name.startswith("I_") and name[-1] in "abcd"):
        raise KeyError(f"not a three-spinor catalog name: {name!r}")
    grp = int(name[2:-1])
    try:
        return _PARITY_BY_GROUP[grp]
    except KeyError:
        raise KeyError(f"unknown catalog group in {name!r}") from None


# ---------------------------------------------------------------------------
# evaluation via einsum: one tensor per state copy, one 4x4 matrix per pair
def _einsum_args(desc: InvariantDescriptor, batched: bool):
    letters = string.ascii_letters
    n, d = desc.n_parties, desc.degree
    if d * n + batched > len(letters):
        raise ValueError("descriptor too large for einsum labelling")

    def slot_letter(s: SlotRef) -> str:
        return letters[s.copy * n + s.party]

    copy_subs = ["".join(letters[c * n + p] for p in range(n))
                 for c in range(d)]
    pair_subs = [slot_letter(p.from_slot) + slot_letter(p.to_slot)
                 for p in desc.pairs]
    if batched:
        batch = letters[d * n]
        copy_subs = [batch + s for s in copy_subs]
        out = batch
    else:
        out = ""
    spec = ",".join(copy_subs + pair_subs) + "->" + out
    mats = [sandwich_matrix(p.x) for p in desc.pairs]
    return spec, mats


def evaluate(desc: InvariantDescriptor, state: MultiSpinorState) -> complex:
    """Contract ``desc`` against ``state`` (all copies are the same state)."""
    if desc.is_pattern:
        raise ValueError("pattern has unassigned sandwich matrices")
    if desc.n_parties != state.n_parties:
        raise ValueError("party-count mismatch")
    spec, mats = _einsum_args(desc, batched=False)
    tensors = [state.tensor] * desc.degree + mats
    return complex(np.einsum(spec, *tensors, optimize=True))


def evaluate_batch(descs, states) -> np.ndarray:
    """Matrix of values: one row per descriptor, one column per state."""
    descs = list(descs)
    states = list(states)
    if not descs or not states:
        return np.zeros((len(descs), len(states)), dtype=complex)
    n = states[0].n_parties
    if any(s.n_parties != n for s in states):
        raise ValueError("states must share a party count")
    stack = np.stack([s.tensor for s in states])
    out = np.empty((len(descs), len(states)), dtype=complex)
    for i, desc in enumerate(descs):
        if desc.n_parties != n:
            raise ValueError("party-count mismatch")
        if desc.is_pattern:
            raise ValueError(f"pattern {desc.name!r} has unassigned matrices")
        spec, mats = _einsum_args(desc, batched=True)
        tensors = [stack] * desc.degree + mats
        out[i] = np.einsum(spec, *tensors, optimize=True)
    return out
