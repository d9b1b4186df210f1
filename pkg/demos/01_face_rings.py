# %% [markdown]
# # Face rings and their Hilbert functions
#
# A simplicial complex gives a square-free monomial ideal, one generator per
# minimal non-face.  We compute its Hilbert function two ways and compare.

# %%
import numpy as np

from lefschetz_lab.algebra import sr_hilbert_function_from_f, stanley_reisner_ideal
from lefschetz_lab.complexes import cross_polytope_boundary, cyclic_polytope_boundary
from lefschetz_lab.homology import reduced_homology

# %%
D = cyclic_polytope_boundary(7, 4)
print("facets:", len(D.facets))
print("f-vector:", D.f_vector)
print("h-vector:", D.h_vector)
print("minimal non-faces:", D.minimal_nonfaces())

# %% [markdown]
# Homology over GF(32003): a 3-sphere has a single class in top degree.

# %%
print("reduced betti (from dim -1):", reduced_homology(D, 32003).betti)

# %% [markdown]
# The Macaulay-matrix rank per degree against the face-count formula.

# %%
J = stanley_reisner_ideal(D)
mac = J.hilbert_function(8, "macaulay").window(0, 8)
comb = sr_hilbert_function_from_f(D.f_vector, 8).window(0, 8)
print(np.array([mac, comb]))
assert mac == comb

# %%
O = cross_polytope_boundary(3)
S = O.stellar_subdivision((1, 2), 7)
print("octahedron", O.f_vector, "-> subdivided", S.f_vector, "h =", S.h_vector)
