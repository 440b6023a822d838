# Telling two bases apart by eigenvalue orders.
#
# Conjugating every element by one unitary and permuting the list keeps a
# basis "the same" for every operational purpose.  Eigenvalue multisets
# survive both moves, so any function of the spectra alone is an invariant
# of that equivalence.  This library uses the multiset of eigenphase
# buckets together with the ORDER of each eigenvalue: the least n with
# lambda^n = 1, or a proof that no such n exists.
#
# The proof route is a rational-cosine argument: if the phase is a rational
# multiple of pi, its cosine can only be 0, +-1/2, +-1 among rationals.  A
# rational cosine outside that list certifies infinite order.

from fractions import Fraction

import numpy as np

from umeb import (
    bravyi_smolin_3,
    compare_signatures,
    eigenphases,
    lift,
    niven_classify,
    order_up_to,
    sector_summaries,
    sector_table,
    signature,
    weyl_family,
)

# --- Orders of single phases --------------------------------------------------

print("order of phase pi:        ", order_up_to(np.pi, 144))
print("order of phase 2pi/3:     ", order_up_to(2 * np.pi / 3, 144))
theta = np.arccos(-7.0 / 8.0)
print("order of phase arccos(-7/8) up to 144:", order_up_to(theta, 144))
print("niven_classify(-7/8):     ", niven_classify(Fraction(-7, 8)))
print("niven_classify(-1/2):     ", niven_classify(Fraction(-1, 2)))
print()

# --- The six-element set carries provably infinite orders ---------------------

bs3 = bravyi_smolin_3()
print("eigenphases of the first element:", np.round(eigenphases(bs3.elements[0]), 6))
sig = signature(bs3, bound=144)
print("bravyi_smolin_3 signature: %d provably infinite phases, %d unresolved"
      % (sig.summary.provably_infinite_count, sig.summary.no_order_count))
print()

# The scan alone cannot prove infinitude; the exact cosine metadata -7/8
# plus the rational-cosine criterion upgrades "no order up to 144" into a
# proof, including for phases that differ from theta by a root of unity.

# --- Sector tables for a lifted set --------------------------------------------

lifted = lift(bs3, 4)
print("lift(bravyi_smolin_3, 4), orders scanned up to 144:")
print(sector_table(sector_summaries(lifted, bound=144)))
print()

# Weyl-sector elements are built from roots of unity, so every order is
# finite there; the base sector inherits the infinite-order phases.  That
# asymmetry is the fingerprint.

# --- Distinguishing two bases ---------------------------------------------------

finite_only = weyl_family(12)
sub = signature(lifted, bound=144)
ref = signature(finite_only, bound=144)
print("lift(bs3,4) vs weyl_family(12):",
      compare_signatures(sub, ref))
print("lift(bs3,4) vs itself shuffled:",
      compare_signatures(sub, signature(lifted, bound=144)))

# Distinguished is a theorem (no conjugation/permutation can match them);
# NotDistinguished leaves equivalence undecided, because the signature is
# an invariant, not a complete one.
