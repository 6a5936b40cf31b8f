"""Lorentz-invariant contraction polynomials for multi-spinor states.

The package constructs, enumerates, evaluates and verifies the polynomial
invariants built by sandwiching the antisymmetric bilinear forms C and
C gamma^5 between copies of an n-spinor state tensor, together with their
chiral-sector reductions to qubit entanglement tangles.
"""
from .clifford import (GAMMA, GAMMA5, C_MATRIX, C_GAMMA5, GROUP_IDS,
                       bilinear, dirac_group, discrete_transform,
                       lie_generators, sample_group_element, sandwich_matrix)
from .contraction import (Catalog, InvariantDescriptor, Pair, SlotRef,
                          X_TAGS, builtin_catalog, evaluate, evaluate_batch,
                          find_descriptor, parity_class)
from .enumeration import (PairingPattern, assignment_orbits,
                          automorphism_orbit_count, enumerate_pairings,
                          enumerate_x_assignments, total_count)
from .examples import (EXAMPLES, ExampleSpec, example_names, get_example,
                       load_example, verify_example)
from .states import (MultiSpinorState, apply_local, chiral_spinor,
                     embed_chiral, embed_qubit_state, load_state,
                     product_state, random_qubit_state, random_state,
                     save_state, superposition, weyl_project)

__version__ = "1.0.0"
