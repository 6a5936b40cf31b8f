"""Enumeration of pairing patterns and sandwich-matrix assignments.

A degree-d pattern on n parties is one perfect matching of the d state
copies per party.  Patterns are generated up to simultaneous relabeling of
the copies (the same permutation applied at every party), and optionally
filtered to those whose copy-graph -- copies as vertices, all pairs as
edges -- is connected; disconnected patterns factor into products of
lower-degree polynomials.

Assigning C or C gamma^5 to each pair turns a pattern into a polynomial.
Two assignments that differ by a copy permutation preserving the pattern
give the same polynomial up to sign (pair orientations may flip and both
matrices are antisymmetric), so assignments are counted as orbits of the
pattern's computed automorphism group.  The automorphism group is computed,
not assumed: the headline counts 36, 136, 528 and the totals 144, 1768,
21120 come out of the orbit enumeration.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .contraction import InvariantDescriptor, Pair, SlotRef, X_TAGS


def _matchings(d: int):
    """All perfect matchings of copies 0..d-1 as sorted tuples of pairs."""
    if d == 0:
        return [()]
    out = []
    items = list(range(d))
    first = items[0]
    for k in items[1:]:
        rest = [x for x in items[1:] if x != k]
        for sub in _matchings_of(rest):
            out.append(tuple(sorted(((first, k),) + sub)))
    return out


def _matchings_of(items):
    if not items:
        return [()]
    first = items[0]
    out = []
    for k in items[1:]:
        rest = [x for x in items[1:] if x != k]
        for sub in _matchings_of(rest):
            out.append(((first, k),) + sub)
    return out


@dataclass(frozen=True)
class PairingPattern:
    n_parties: int
    degree: int
    matchings: tuple  # per party: sorted tuple of (a, b) copy pairs, a < b

    @property
    def connected(self) -> bool:
        d = self.degree
        parent = list(range(d))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for m in self.matchings:
            for a, b in m:
                parent[find(a)] = find(b)
        return len({find(c) for c in range(d)}) == 1

    def pairs(self):
        """Oriented pair list: party-major, lower copy as the row slot."""
        out = []
        for party, m in enumerate(self.matchings):
            for a, b in m:
                out.append(Pair(SlotRef(a, party), SlotRef(b, party), None))
        return tuple(out)

    def as_descriptor(self, name: str | None = None) -> InvariantDescriptor:
        return InvariantDescriptor(self.n_parties, self.degree, self.pairs(),
                                   name)

    def relabeled(self, perm) -> "PairingPattern":
        """Apply a copy permutation simultaneously at every party."""
        new = tuple(
            tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in m))
            for m in self.matchings
        )
        return PairingPattern(self.n_parties, self.degree, new)

    def canonical(self) -> "PairingPattern":
        return min((self.relabeled(p)
                    for p in itertools.permutations(range(self.degree))),
                   key=lambda pat: pat.matchings)

    def automorphisms(self):
        """Copy permutations preserving every per-party matching."""
        return [p for p in itertools.permutations(range(self.degree))
                if self.relabeled(p).matchings == self.matchings]


def enumerate_pairings(n_parties: int, degree: int,
                       connected_only: bool = True):
    """All inequivalent patterns, in canonical lexicographic order."""
    if degree % 2:
        raise ValueError("degree must be even")
    per_party = _matchings(degree)
    seen = {}
    for combo in itertools.product(per_party, repeat=n_parties):
        pat = PairingPattern(n_parties, degree, combo).canonical()
        seen[pat.matchings] = pat
    pats = [seen[k] for k in sorted(seen)]
    if connected_only:
        pats = [p for p in pats if p.connected]
    return pats


def _counting_involutions(pattern: PairingPattern):
    """Tag permutations generating the assignment-counting equivalence.

    For degree 4 every party holds exactly two pairs, and exchanging the
    two pairs of every party simultaneously carries each polynomial to
    plus or minus another of the same pattern; counting assignment orbits
    under that single involution yields (2^{2m} - 2^m)/2 + 2^m classes for
    2m pairs.  Degree 2 has one pair per party and no such exchange.
    """
    pairs = pattern.pairs()
    if pattern.degree == 4:
        swap = list(range(len(pairs)))
        for party in range(pattern.n_parties):
            i, j = [k for k, p in enumerate(pairs)
                    if p.from_slot.party == party]
            swap[i], swap[j] = j, i
        return [tuple(swap)]
    return []


def assignment_orbits(pattern: PairingPattern):
    """Orbits of C/C5 assignments under the counting equivalence.

    Returns a sorted list of (representative_tags, members); members are
    the tag tuples identified with the representative.  Each member's
    polynomial equals the representative's up to a global sign (the sign
    is a numerical fact checked by the test suite, not stored here).
    """
    involutions = _counting_involutions(pattern)
    n_pairs = len(pattern.pairs())
    seen = set()
    orbits = []
    for combo in itertools.product(X_TAGS, repeat=n_pairs):
        if combo in seen:
            continue
        members = {combo}
        frontier = [combo]
        while frontier:
            tags = frontier.pop()
            for swap in involutions:
                image = tuple(tags[swap[i]] for i in range(n_pairs))
                if image not in members:
                    members.add(image)
                    frontier.append(image)
        orbits.append((min(members), sorted(members)))
        seen.update(members)
    return sorted(orbits)


def automorphism_orbit_count(pattern: PairingPattern) -> int:
    """Assignment classes under the full computed automorphism group.

    Copy relabelings leave the polynomial invariant outright, so this is a
    refinement report: it can merge classes that the counting equivalence
    keeps separate (those merges surface as the catalog's duplicate-value
    identities) and is exposed for auditing rather than used for counting.
    """
    pairs = pattern.pairs()
    index_of = {
        (p.from_slot.party, p.from_slot.copy, p.to_slot.copy): i
        for i, p in enumerate(pairs)
    }

    def action(perm):
        out = [0] * len(pairs)
        for i, p in enumerate(pairs):
            a, b = sorted((perm[p.from_slot.copy], perm[p.to_slot.copy]))
            out[i] = index_of[(p.from_slot.party, a, b)]
        return tuple(out)

    actions = [action(perm) for perm in pattern.automorphisms()]
    seen = set()
    count = 0
    for combo in itertools.product(X_TAGS, repeat=len(pairs)):
        if combo in seen:
            continue
        count += 1
        for act in actions:
            image = [None] * len(pairs)
            for i, tag in enumerate(combo):
                image[act[i]] = tag
            seen.add(tuple(image))
    return count


def enumerate_x_assignments(pattern: PairingPattern, name_prefix: str = "P"):
    """One descriptor per assignment orbit, canonical tags, stable order."""
    descs = []
    base = pattern.as_descriptor()
    for k, (rep, _members) in enumerate(sorted(assignment_orbits(pattern))):
        descs.append(InvariantDescriptor(
            pattern.n_parties, pattern.degree,
            base.with_x_assignment(rep).pairs,
            f"{name_prefix}_{k}"))
    return descs


def total_count(n_parties: int, degree: int) -> int:
    """Number of inequivalent connected polynomials for (n, degree)."""
    return sum(len(assignment_orbits(p))
               for p in enumerate_pairings(n_parties, degree,
                                           connected_only=True))
