# %% [markdown]
# # Weak and strong Lefschetz tests over a prime field
#
# A random linear form of maximal rank in every degree certifies the WLP.
# When every trial fails we only report that no witness turned up.

# %%
from lefschetz_lab.algebra import stanley_reisner_ideal
from lefschetz_lab.complexes import cyclic_polytope_boundary
from lefschetz_lab.lefschetz import (
    ArtinianAlgebra,
    artinian_reduction,
    delta_plus_identity,
    has_slp,
    has_wlp,
    has_wlp_gorenstein_shortcut,
)
from lefschetz_lab.stellar import scse_ideal

# %%
D = cyclic_polytope_boundary(10, 6)
F = artinian_reduction(stanley_reisner_ideal(D), 6, rng=1)
print("HF =", F.hf.to_list(), "h =", D.h_vector)

v = has_wlp(F, trials=3, rng=7)
print(v.outcome, "ranks", v.ranks)
print("shortcut:", has_wlp_gorenstein_shortcut(F, rng=7).outcome)
print("HF(F/(w)) = Delta+(HF(F)):", delta_plus_identity(F, v.witness))

# %% [markdown]
# An almost complete intersection in four variables with no WLP witness.

# %%
I, _ = scse_ideal()
A = ArtinianAlgebra(I)
w = has_wlp(A, trials=5, rng=0)
print("HF =", A.hf.to_list())
print(w.outcome, "first failing degree", w.first_failing_degree)
print(w.to_dict()["caveat"])
print("SLP:", has_slp(A, rng=0).outcome)
