# From unitaries to entangled states, and the axioms a candidate must pass.
#
# The dictionary between d x d unitaries and maximally entangled states on
# C^d (x) C^d is linear and inner-product preserving up to a factor d:
#
#     <phi_A | phi_B> = Tr(A^dag B) / d
#
# so verifying a candidate never needs the d^2-dimensional states at all.
# This script exercises both sides of the dictionary.

import numpy as np

from umeb import (
    bravyi_smolin_3,
    hs_inner,
    to_state,
    umeb_6,
    verify_axioms,
    weyl_family,
)

# --- States and Schmidt coefficients ----------------------------------------

state = to_state(np.eye(3))
print("identity unitary -> state amplitudes:")
print(np.round(state.amplitudes.reshape(3, 3), 4))
print("norm = %.15f" % state.norm())
print("Schmidt coefficients:", np.round(state.schmidt_coefficients, 12))
print("maximally entangled:", state.is_maximally_entangled())
print()

# A non-unitary generator gives a normalized state that is NOT maximally
# entangled: its Schmidt spectrum is lopsided.
lopsided = to_state(np.diag([np.sqrt(2.4), np.sqrt(0.5), np.sqrt(0.1)]))
print("lopsided Schmidt coefficients:", np.round(lopsided.schmidt_coefficients, 4))
print("maximally entangled:", lopsided.is_maximally_entangled())
print()

# --- The bridge identity, spot-checked --------------------------------------

rng = np.random.default_rng(0)
worst = 0.0
for _ in range(200):
    z1 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    z2 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    a, _ = np.linalg.qr(z1)
    b, _ = np.linalg.qr(z2)
    lhs = hs_inner(a, b) / 4
    rhs = to_state(a).overlap(to_state(b))
    worst = max(worst, abs(lhs - rhs))
print("bridge identity worst deviation over 200 random pairs: %.3e" % worst)
print()

# --- verify_axioms -----------------------------------------------------------

# Three conditions: fewer than d^2 elements, all unitary, pairwise
# trace-orthogonal with squared norm d along the diagonal.
for label, cand in [("umeb_6", umeb_6()),
                    ("bravyi_smolin_3", bravyi_smolin_3()),
                    ("weyl_family(3)", weyl_family(3))]:
    rep = verify_axioms(cand)
    print("%-16s unitarity %.2e  Gram-off %.2e  count<d^2 %-5s  passed %s"
          % (label, rep.max_unitarity_residual, rep.max_gram_offdiag,
             rep.condition_i_ok, rep.passed))

# The full Weyl family fails on purpose: with d^2 elements it is a complete
# basis, and a complete basis leaves no room to be unextendible.
