# %% [markdown]
# # Rebuilding an array from beta and eight numbers
#
# Outside the degenerate regime, beta together with the end-entries pins the
# whole array down.

# %%
import random

from lpkit import Rationals, classify_type
from lpkit.corpus import random_array
from lpkit.endentry import end_entries
from lpkit.reconstruct import ReconstructionInput, reconstruct

Q = Rationals()
rng = random.Random(11)
for tag, d in (("I", 6), ("II", 5), ("IIIplus", 6), ("IIIminus", 7)):
    pa = random_array(Q, d, tag, rng)
    info = classify_type(pa)
    rec = reconstruct(ReconstructionInput(Q, d, end_entries(pa), info.beta))
    print(f"{tag:9} d={d} round trip exact: {rec.array == pa}")

# %% [markdown]
# The trace keeps every intermediate sequence.

# %%
print("K:", [str(k) for k in rec.trace.K])
print("Delta:", rec.trace.delta, "Delta*:", rec.trace.delta_star)
