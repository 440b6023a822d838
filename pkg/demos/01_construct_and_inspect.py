# Constructing the shipped unitary families and checking their geometry.
#
# Every object in this library is a finite set of d x d unitaries U_a.
# The set encodes a basis of maximally entangled states through
# (I (x) U_a) sum_i |ii>/sqrt(d); two states are orthogonal exactly when
# Tr(U_a^dag U_b) = 0, so all the geometry lives in the Gram matrix of
# the unitaries under the Hilbert-Schmidt inner product.

import numpy as np

from umeb import (
    bravyi_smolin_3,
    bravyi_smolin_states,
    gram_matrix,
    provenance_to_str,
    umeb_6,
    unitarity_residual,
    weyl,
    weyl_family,
)

# --- Weyl operators: the complete reference basis --------------------------

# weyl(d, n, m) places d-th roots of unity on a shifted diagonal.  The d^2
# of them are pairwise trace-orthogonal and span everything, which is why
# they keep showing up as the "coordinate system" for matrix space.
w = weyl(3, 1, 1)
print("weyl(3, 1, 1) =")
print(np.round(w, 6))
print()

fam = weyl_family(3)
g = gram_matrix(fam.elements)
print("weyl_family(3): %d elements, Gram == 3*I: %s"
      % (len(fam), np.allclose(g, 3 * np.eye(9), atol=1e-12)))
print()

# --- The six-element set in dimension 3 ------------------------------------

# Six unitaries built from rank-one deflections of the identity.  Each
# moves exactly one eigenvalue away from 1, to a point with cosine -7/8.
# The set is trace-orthogonal but cannot be extended by any unitary.
bs3 = bravyi_smolin_3()
print("bravyi_smolin_3: %d elements in dimension %d" % (len(bs3), bs3.dim))
print("worst unitarity residual: %.3e"
      % max(unitarity_residual(u) for u in bs3.elements))
g = gram_matrix(bs3.elements)
off = np.abs(g - 3 * np.eye(6)).max()
print("Gram deviation from 3*I: %.3e" % off)

# The exact eigenvalue cosine rides along as metadata so that downstream
# spectral classification can reason exactly instead of numerically.
print("exact_cos_theta metadata:", bs3.exact_cos_theta)
print()

# The underlying six states on C^3 have pairwise squared overlap 1/5,
# a rigidity that forces the eigenvalue cosine above.
states = bravyi_smolin_states()
overlaps = [abs(np.vdot(states[i], states[j])) ** 2
            for i in range(6) for j in range(i + 1, 6)]
print("squared state overlaps: min %.15f  max %.15f" % (min(overlaps), max(overlaps)))
print()

# --- The 30-element set in dimension 6 -------------------------------------

u6 = umeb_6()
g = gram_matrix(u6.elements)
print("umeb_6: %d elements in dimension %d" % (len(u6), u6.dim))
print("Gram deviation from 6*I: %.3e" % np.abs(g - 6 * np.eye(30)).max())
print("provenance:", provenance_to_str(u6.provenance))
