"""Pattern enumeration, canonicalization, and assignment counting."""
import numpy as np
import pytest

from spinorinv.contraction import builtin_catalog
from spinorinv.enumeration import (PairingPattern, assignment_orbits,
                                   automorphism_orbit_count,
                                   enumerate_pairings, enumerate_x_assignments,
                                   total_count)
from spinorinv.states import random_state
from spinorinv.contraction import evaluate


def test_headline_counts():
    assert len(enumerate_pairings(3, 4)) == 4
    assert total_count(3, 4) == 144
    assert len(enumerate_pairings(4, 4)) == 13
    assert total_count(4, 4) == 1768
    assert len(enumerate_pairings(4, 2)) == 1
    assert total_count(4, 2) == 16
    assert len(enumerate_pairings(6, 2)) == 1
    assert total_count(6, 2) == 64


def test_five_party_counts():
    pats = enumerate_pairings(5, 4)
    assert len(pats) == 40
    assert all(len(assignment_orbits(p)) == 528 for p in pats)
    assert total_count(5, 4) == 21120


def test_per_pattern_assignment_counts():
    for n, per in ((3, 36), (4, 136)):
        for p in enumerate_pairings(n, 4):
            assert len(assignment_orbits(p)) == per


def test_odd_degree_rejected():
    with pytest.raises(ValueError):
        enumerate_pairings(3, 3)


def test_connectivity_filter():
    all_pats = enumerate_pairings(3, 4, connected_only=False)
    connected = enumerate_pairings(3, 4, connected_only=True)
    assert len(all_pats) > len(connected)
    assert all(p.connected for p in connected)
    assert any(not p.connected for p in all_pats)


def test_canonical_is_relabeling_invariant():
    import itertools
    for pat in enumerate_pairings(3, 4):
        for perm in itertools.permutations(range(4)):
            assert pat.relabeled(perm).canonical() == pat.canonical()


def test_catalog_patterns_match_enumeration():
    """Every named three-spinor descriptor uses one of the 4 patterns."""
    canon = {p.canonical().matchings for p in enumerate_pairings(3, 4)}
    for d in builtin_catalog("ThreeSpinorDeg4").descriptors:
        matchings = tuple(
            tuple(sorted((min(p.from_slot.copy, p.to_slot.copy),
                          max(p.from_slot.copy, p.to_slot.copy))
                         for p in d.pairs if p.from_slot.party == party))
            for party in range(3))
        pat = PairingPattern(3, 4, matchings)
        assert pat.canonical().matchings in canon


def test_counting_equivalence_is_sound():
    """Orbit members evaluate to +- the representative's polynomial."""
    states = [random_state(3, 900 + k) for k in range(3)]
    pats = enumerate_pairings(3, 4)
    for pat in pats[:2]:
        base = pat.as_descriptor()
        orbits = assignment_orbits(pat)
        assert len(orbits) == 36
        checked = 0
        for rep, members in orbits:
            if len(members) == 1:
                continue
            d_rep = base.with_x_assignment(rep)
            for member in members:
                if member == rep:
                    continue
                d_mem = base.with_x_assignment(member)
                vr = [evaluate(d_rep, s) for s in states]
                vm = [evaluate(d_mem, s) for s in states]
                signs = {round((a / b).real) for a, b in zip(vm, vr)}
                assert signs in ({1}, {-1}), (rep, member)
                checked += 1
        assert checked > 0


def test_automorphism_refinement():
    """The full automorphism group can merge more assignments."""
    per_pattern = [automorphism_orbit_count(p)
                   for p in enumerate_pairings(3, 4)]
    assert sorted(per_pattern) == [28, 30, 30, 30]
    for p in enumerate_pairings(3, 4):
        assert automorphism_orbit_count(p) <= len(assignment_orbits(p))


def test_enumerate_x_assignments_descriptors():
    pat = enumerate_pairings(3, 4)[0]
    descs = enumerate_x_assignments(pat, name_prefix="Q")
    assert len(descs) == 36
    assert descs[0].name == "Q_0"
    assert len({d.name for d in descs}) == 36
    assert all(not d.is_pattern for d in descs)
