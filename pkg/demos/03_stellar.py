# %% [markdown]
# # Stellar subdivision of a face
#
# For a sphere D and a face sigma we build the algebras A, B, C, G and run
# the identity and theorem checks.

# %%
from lefschetz_lab.complexes import cross_polytope_boundary, simplex_boundary
from lefschetz_lab.stellar import CHECKS, build_instance, run_checks

# %%
inst = build_instance(cross_polytope_boundary(3), (1, 2, 3), seed=3)
print("q, d, p1, p2 =", inst.q, inst.d, inst.p1, inst.p2)
print("link:", inst.L.restricted().facets)
print("HF(A) =", inst.A.hf.to_list(), " HF(B) =", inst.B.hf.to_list())
print("HF(C) =", inst.C.hf.to_list(), " HF(G) =", inst.G.hf.to_list())

# %%
report = run_checks(inst, CHECKS, trials=3)
for c in report["checks"]:
    print(f"{c['name']:22s} {c['status']}")

# %% [markdown]
# A triangle of the tetrahedron boundary has 2q > d, so the WLP verdicts
# before and after subdividing must match.

# %%
tri = build_instance(simplex_boundary(4), (1, 2, 3))
rep = run_checks(tri, ["iff", "theorem_down"])
print({c["name"]: c["status"] for c in rep["checks"]})
