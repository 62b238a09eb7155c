"""Random valid parameter arrays of a requested type.

Eigenvalue sequences are generated from the three-term recurrence
theta_{i+1} = theta_{i-2} - (beta + 1)(theta_{i-1} - theta_i), which is
exactly the constant-ratio condition; split parameters then come from
:func:`lpkit.parray.complete_from_seed` with a random seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .errors import InvalidArray, ZeroParameter
from .exactfield import Field, QuadraticExtension, Scalar
from .parray import (
    TYPE_I,
    TYPE_II,
    TYPE_III_MINUS,
    TYPE_III_PLUS,
    TYPE_IV,
    ParameterArray,
    complete_from_seed,
)


def random_scalar(F: Field, rng: random.Random, nonzero: bool = False) -> Scalar:
    while True:
        if F.is_finite:
            x = F.element(rng.randrange(F.order))
        else:
            x = F(Fraction(rng.randint(-30, 30), rng.randint(1, 6)))
            if isinstance(F, QuadraticExtension) and rng.random() < 0.5:
                x = x + F(f"{rng.randint(-5, 5)}*r")
        if not (nonzero and x.is_zero()):
            return x


def random_q(F: Field, rng: random.Random, d: int = 2) -> Scalar:
    """A q with q^i != 1 for 1 <= i <= max(d, 2) (so in particular beta != +-2)."""
    for _ in range(10_000):
        if F.is_finite:
            q = random_scalar(F, rng, nonzero=True)
        else:
            q = F(Fraction(rng.choice([-5, -4, -3, -2, 2, 3, 4, 5]), rng.choice([1, 1, 2, 3])))
        if all(q ** i != 1 for i in range(1, max(d, 2) + 1)):
            return q
    raise RuntimeError(f"no q of multiplicative order > {d} in {F}")


def eigenvalue_sequence(F: Field, d: int, beta: Scalar, rng: random.Random) -> tuple:
    theta = [random_scalar(F, rng) for _ in range(min(d + 1, 3))]
    while len(theta) < d + 1:
        i = len(theta) - 1
        theta.append(theta[i - 2] - (beta + 1) * (theta[i - 1] - theta[i]))
    return tuple(theta)


def _beta_for(F, d, type_tag, q):
    if type_tag == TYPE_I:
        return q + q.inverse()
    if type_tag == TYPE_II:
        return F(2)
    if type_tag in (TYPE_III_PLUS, TYPE_III_MINUS):
        want = TYPE_III_PLUS if d % 2 == 0 else TYPE_III_MINUS
        if want != type_tag:
            raise ValueError(f"type {type_tag} needs {'even' if type_tag == TYPE_III_PLUS else 'odd'} d")
        return F(-2)
    if type_tag == TYPE_IV:
        if F.characteristic != 2 or d != 3:
            raise ValueError("type IV needs characteristic 2 and d = 3")
        return F.zero
    raise ValueError(f"unknown type {type_tag!r}")


def random_array(F: Field, d: int, type_tag: str, rng: random.Random,
                 q: Optional[Scalar] = None, tries: int = 2000) -> ParameterArray:
    """A random valid array of the given type (``q`` is drawn when not given)."""
    if type_tag == TYPE_I and q is None:
        q = random_q(F, rng, d)
    beta = _beta_for(F, d, type_tag, q)
    for _ in range(tries):
        theta = eigenvalue_sequence(F, d, beta, rng)
        theta_star = eigenvalue_sequence(F, d, beta, rng)
        if len(set(theta)) < d + 1 or len(set(theta_star)) < d + 1:
            continue
        try:
            return complete_from_seed(F, d, theta, theta_star, random_scalar(F, rng, nonzero=True))
        except (ZeroParameter, InvalidArray):
            continue
    raise RuntimeError(f"no valid type {type_tag} array over {F} with d = {d} after {tries} tries")
