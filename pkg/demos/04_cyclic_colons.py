# %% [markdown]
# # Colon ideals for an edge of the cyclic polytope C(10, 6)
#
# P_a and P_b have the same Hilbert function but differ as ideals, and
# P_c sits strictly inside their intersection.

# %%
import numpy as np

from lefschetz_lab.complexes import cyclic_polytope_boundary
from lefschetz_lab.stellar import build_instance, build_section5, compare_Pa_Pb_Pc

# %%
D = cyclic_polytope_boundary(10, 6)
inst = build_instance(D, (1, 2), seed=0)
r = compare_Pa_Pb_Pc(build_section5(inst))
rows = r.data["degrees"]
table = np.array([[x["degree"], x["hf_a"], x["hf_b"], x["hf_c"], x["dim_a_cap_b"], x["dim_c"]] for x in rows])
print("degree  hf_a  hf_b  hf_c  dim(a&b)  dim(c)")
print(table)

# %%
for k in ("hf_a_equals_hf_b", "P_a_equals_P_b", "P_c_strictly_inside_intersection",
          "P_b_equals_P_c_up_to_p1_minus_q"):
    print(f"{k:34s} {r.data[k]}")
