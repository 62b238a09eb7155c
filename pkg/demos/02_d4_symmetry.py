# %% [markdown]
# # The D4 action
#
# Words over `s`, `d`, `D` act on arrays letter by letter. Every word reduces
# to one of eight normal forms.

# %%
import random

from lpkit import Rationals, d4
from lpkit.corpus import random_array
from lpkit.endentry import end_entries

Q = Rationals()
pa = random_array(Q, 4, "I", random.Random(1))

print(d4.normal_form("sdsdD"))
orbit = d4.orbit(pa)
print("orbit size", len(orbit))

# %% [markdown]
# End-entries move with the array: transforming the array and then reading its
# ends agrees with transforming the ends directly.

# %%
for w in d4.ELEMENTS:
    same = end_entries(d4.apply(pa, w)) == d4.apply_to_ends(end_entries(pa), w)
    print(f"{w or 'id':>4}", same)
