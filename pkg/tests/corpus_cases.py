"""Deterministic corpus of random valid arrays shared by several test modules."""

import functools
import random

from lpkit.corpus import random_array
from lpkit.exactfield import FiniteField, Rationals
from lpkit.parray import TYPE_I, TYPE_II, TYPE_III_MINUS, TYPE_III_PLUS, classify_type

FIELDS = (Rationals(), FiniteField(13), FiniteField(101))
DIAMETERS = range(3, 9)
PER_CELL = 4


@functools.lru_cache(maxsize=None)
def corpus(seed=20261015):
    """Tuples (array, TypeInfo) covering every field, d in 3..8 and types I, II, III+-."""
    rng = random.Random(seed)
    out = []
    for F in FIELDS:
        for d in DIAMETERS:
            tags = (TYPE_I, TYPE_II, TYPE_III_PLUS if d % 2 == 0 else TYPE_III_MINUS)
            for tag in tags:
                for _ in range(PER_CELL):
                    pa = random_array(F, d, tag, rng)
                    out.append((pa, classify_type(pa)))
    return tuple(out)


def nondegenerate():
    return tuple(item for item in corpus() if not item[1].degenerate)
