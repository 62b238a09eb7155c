# %% [markdown]
# # End-entries, closed forms versus matrices
#
# The four diagonal end-entries a_0, a_d, a*_0, a*_d have closed forms in the
# split parameters. The matrix oracle builds the split model, forms the
# primitive idempotents by Lagrange interpolation, and reads the same numbers
# off as traces.

# %%
import random

from lpkit import FiniteField
from lpkit.corpus import random_array
from lpkit.endentry import delta, end_entries, gammas, identity_checks, omega
from lpkit.matrixrep import build_split_model, check_idempotents, primitive_idempotents, principal_sequences

F = FiniteField(101)
pa = random_array(F, 5, "II", random.Random(4))
ee = end_entries(pa)
print("closed form:", [str(x) for x in (ee.a0, ee.ad, ee.as0, ee.asd)])

m = build_split_model(pa)
idem = primitive_idempotents(m)
a, a_star = principal_sequences(m, idem)
print("traces:     ", [str(x) for x in (a[0], a[-1], a_star[0], a_star[-1])])
print("idempotent checks pass:", all(check_idempotents(m, idem).values()))

# %%
print("Omega", omega(pa), "Delta", delta(ee), "Gammas", [str(g) for g in gammas(ee)])
checks = identity_checks(pa, "II")
print(sum(checks.values()), "of", len(checks), "identities hold")
