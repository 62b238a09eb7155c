# %% [markdown]
# # Exact fields and parameter arrays
#
# Everything in lpkit is computed exactly. This walk-through builds a small
# array over the rationals, checks it, classifies it, and then repeats the
# exercise over GF(13).

# %%
from lpkit import FiniteField, ParameterArray, Rationals, classify_type, complete_from_seed, validate

Q = Rationals()
print(Q("1/3") + Q("1/6"))

# %% [markdown]
# The running example has diameter 3 with both eigenvalue sequences equal to
# 3, 1, -1, -3.

# %%
k3 = ParameterArray.make(Q, [3, 1, -1, -3], [3, 1, -1, -3], [-6, -8, -6], [6, 8, 6])
report = validate(k3)
print("valid:", report.valid, "vartheta:", [str(x) for x in report.vartheta])
print(classify_type(k3))

# %% [markdown]
# Break one entry and the report names the broken condition.

# %%
broken = k3.replace(varphi=[-6, 0, -6])
for f in validate(broken).failures:
    print(f.kind, f.where)

# %% [markdown]
# Given the eigenvalues, one split parameter determines the rest.

# %%
print(complete_from_seed(Q, 3, k3.theta, k3.theta_star, 6) == k3)

# %% [markdown]
# Over GF(13) the same eigenvalue pattern 1, 5, 12, 8 has beta = 0, so
# q is a square root of -1.

# %%
F = FiniteField(13)
pa = complete_from_seed(F, 3, [1, 5, 12, 8], [1, 5, 12, 8], 1)
info = classify_type(pa)
print("beta", info.beta, "q", [str(q) for q in info.q_candidates], "degenerate", info.degenerate)
