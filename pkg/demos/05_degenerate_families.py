# %% [markdown]
# # Degenerate families
#
# When Delta = 0 the end data no longer determine the array. Over GF(13) with
# q = 5 (so q^2 = -1) a one-parameter family shares beta and all eight
# end-entries.

# %%
from lpkit import FiniteField, complete_from_seed
from lpkit.families import assert_family_properties, base_from_array, sweep

F = FiniteField(13)
base = base_from_array(complete_from_seed(F, 3, [1, 5, 12, 8], [1, 5, 12, 8], 1), F(5))
result = sweep(base)
print(f"{result.n_valid} valid, {result.n_invalid} invalid (at most {result.bound} can fail)")
for inst in result.instances:
    if inst.valid:
        assert_family_properties(base, inst)
        print(inst.zeta, [str(x) for x in inst.candidate.theta])

# %% [markdown]
# In characteristic 2 with d = 3 the type IV family plays the same role.

# %%
G = FiniteField(2, 4)
x = G.element(2)
pa = complete_from_seed(G, 3, [G.element(0), G.element(1), x, x + 1],
                        [G.element(3), G.element(5), G.element(7), G.element(1)], G.element(9))
result = sweep(base_from_array(pa))
print(f"GF(16): {result.n_valid} valid, {result.n_invalid} invalid")
