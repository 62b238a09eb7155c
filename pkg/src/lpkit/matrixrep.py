"""Brute-force matrix oracle.

A parameter array is realized by a pair of bidiagonal matrices (the split
form); primitive idempotents are built by Lagrange interpolation, and the
split parameters and principal sequences are recomputed from their trace
definitions.  Matrices are numpy object arrays of :class:`Scalar`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PropertyViolation, ZeroDenominator
from .exactfield import Field
from .parray import ParameterArray, require_valid


@dataclass(frozen=True, eq=False)
class MatrixModel:
    field: Field
    n: int
    A: np.ndarray
    Astar: np.ndarray
    source: ParameterArray


@dataclass(frozen=True, eq=False)
class IdempotentSet:
    E: tuple
    Estar: tuple


def identity(F: Field, n: int) -> np.ndarray:
    M = zeros(F, n)
    for i in range(n):
        M[i, i] = F.one
    return M


def zeros(F: Field, n: int) -> np.ndarray:
    M = np.empty((n, n), dtype=object)
    M[...] = F.zero
    return M


def trace(M: np.ndarray):
    total = M[0, 0]
    for i in range(1, M.shape[0]):
        total = total + M[i, i]
    return total


def mat_equal(M: np.ndarray, N: np.ndarray) -> bool:
    return M.shape == N.shape and all(x == y for x, y in zip(M.flat, N.flat))


def build_split_model(pa: ParameterArray) -> MatrixModel:
    """A: diagonal theta, subdiagonal 1.  A*: diagonal theta*, superdiagonal varphi."""
    require_valid(pa)
    F, n = pa.field, pa.d + 1
    A, As = zeros(F, n), zeros(F, n)
    for i in range(n):
        A[i, i] = pa.theta[i]
        As[i, i] = pa.theta_star[i]
    for i in range(1, n):
        A[i, i - 1] = F.one
        As[i - 1, i] = pa.varphi[i - 1]
    return MatrixModel(F, n, A, As, pa)


def _lagrange(M: np.ndarray, eigs, F: Field) -> tuple:
    n = len(eigs)
    I = identity(F, n)
    out = []
    for i in range(n):
        E = I
        for j in range(n):
            if j != i:
                E = (E @ (M - eigs[j] * I)) * (1 / (eigs[i] - eigs[j]))
        out.append(E)
    return tuple(out)


def primitive_idempotents(m: MatrixModel) -> IdempotentSet:
    pa = m.source
    return IdempotentSet(_lagrange(m.A, pa.theta, m.field),
                         _lagrange(m.Astar, pa.theta_star, m.field))


def check_idempotents(m: MatrixModel, idem: IdempotentSet) -> dict:
    """E_i E_j = delta_ij E_i, sum E_i = I and A = sum theta_i E_i, plus starred versions."""
    F, n = m.field, m.n
    I, Z = identity(F, n), zeros(F, n)
    out = {}
    for label, Es, M, eigs in (("E", idem.E, m.A, m.source.theta),
                               ("Estar", idem.Estar, m.Astar, m.source.theta_star)):
        ok = True
        for i in range(n):
            for j in range(n):
                ok &= mat_equal(Es[i] @ Es[j], Es[i] if i == j else Z)
        out[f"{label}:orthogonal"] = ok
        out[f"{label}:sum"] = mat_equal(sum(Es[1:], Es[0]), I)
        spectral = Es[0] * eigs[0]
        for i in range(1, n):
            spectral = spectral + Es[i] * eigs[i]
        out[f"{label}:spectral"] = mat_equal(spectral, M)
    return out


def principal_sequences(m: MatrixModel, idem: IdempotentSet) -> tuple:
    """(a_0..a_d, a*_0..a*_d) with a_i = tr(A E*_i) and a*_i = tr(A* E_i)."""
    a = tuple(trace(m.A @ Es) for Es in idem.Estar)
    a_star = tuple(trace(m.Astar @ E) for E in idem.E)
    return a, a_star


def _split_from_traces(A, E0s, theta, theta_star, F, reverse):
    d = len(theta) - 1
    I = identity(F, d + 1)
    # prods[i] = prod_{h<i} (A - theta_h I), or with theta_{d-h} when reversed
    prods = [I]
    for h in range(d):
        eig = theta[d - h] if reverse else theta[h]
        prods.append(prods[-1] @ (A - eig * I))
    traces = [trace(E0s @ P) for P in prods]
    out = []
    for i in range(1, d + 1):
        if traces[i - 1].is_zero():
            raise ZeroDenominator(f"trace denominator vanishes at i = {i}")
        out.append((theta_star[0] - theta_star[i]) * traces[i] / traces[i - 1])
    return tuple(out)


def parray_from_traces(m: MatrixModel, idem: IdempotentSet = None,
                       check: bool = True) -> ParameterArray:
    """Recompute varphi and phi from their trace ratios; eigenvalues are read off the diagonals."""
    if idem is None:
        idem = primitive_idempotents(m)
    F = m.field
    theta = tuple(m.A[i, i] for i in range(m.n))
    theta_star = tuple(m.Astar[i, i] for i in range(m.n))
    E0s = idem.Estar[0]
    varphi = _split_from_traces(m.A, E0s, theta, theta_star, F, reverse=False)
    phi = _split_from_traces(m.A, E0s, theta, theta_star, F, reverse=True)
    pa = ParameterArray(F, m.n - 1, theta, theta_star, varphi, phi)
    if check and pa != m.source:
        raise PropertyViolation("trace round trip does not reproduce the source array")
    return pa
