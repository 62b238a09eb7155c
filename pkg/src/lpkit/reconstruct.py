"""Recover a parameter array from its fundamental parameter and end-entries.

Outside the degenerate regime (Delta != 0) the eight end-entries plus beta
(and a root q of q + 1/q = beta for type I) determine the array.  The
eigenvalue offsets K_i = theta_i - theta_0 come from a per-type formula in the
end-entries.  The starred and double-down variants are obtained by evaluating
that same formula on the correspondingly transformed end-entries (see
:func:`lpkit.d4.apply_to_ends`), which gives K*_i = theta*_i - theta*_0 and
K^D_i = theta_{d-i} - theta_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import d4
from .endentry import EndEntries, EndParams, delta, end_entries, gammas, omega_closed_form
from .errors import (
    DegenerateDelta,
    DiameterTooSmall,
    MissingQ,
    UnsupportedType,
    ValidationFailed,
)
from .exactfield import Field, Scalar, solve_unit_quadratic
from .parray import (
    TYPE_I,
    TYPE_II,
    TYPE_III_MINUS,
    TYPE_III_PLUS,
    TYPE_IV,
    ParameterArray,
    fundamental_beta,
    type_from_beta,
    validate,
)


@dataclass(frozen=True)
class ReconstructionInput:
    field: Field
    d: int
    ends: EndEntries
    beta: Scalar
    q: Optional[Scalar] = None


@dataclass(frozen=True)
class ReconstructionTrace:
    type_tag: str
    q: Optional[Scalar]
    delta: Scalar
    delta_star: Scalar
    L: tuple
    K: tuple
    Lstar: tuple
    Kstar: tuple
    Ldown: tuple
    Kdown: tuple
    recovered_end_params: EndParams


class Reconstruction(NamedTuple):
    array: ParameterArray
    trace: ReconstructionTrace


def _type_and_q(inp: ReconstructionInput):
    if inp.d < 3:
        raise DiameterTooSmall(f"reconstruction needs d >= 3, got d = {inp.d}")
    tag = type_from_beta(inp.beta, inp.d)
    q = inp.q
    if tag == TYPE_I:
        if q is None:
            roots = solve_unit_quadratic(inp.beta)
            if not roots:
                raise MissingQ(f"type I: no q with q + 1/q = {inp.beta} in {inp.field}; supply q")
            q = roots[0]
        elif q + q.inverse() != inp.beta:
            raise ValueError(f"q = {q} does not satisfy q + 1/q = {inp.beta}")
    return tag, q


def _check_ends(ends: EndEntries):
    bad = ends.violations()
    if bad:
        raise ValidationFailed("end-entries violate " + ", ".join(bad))


def recover_end_parameters(inp: ReconstructionInput) -> EndParams:
    """(varphi_1, varphi_d, phi_1, phi_d) = -Omega * Gamma_k / Delta."""
    tag, q = _type_and_q(inp)
    _check_ends(inp.ends)
    dl = delta(inp.ends)
    if dl.is_zero():
        raise DegenerateDelta("Delta = 0: end-entries and beta do not determine the array")
    om = omega_closed_form(tag, inp.d, inp.field, q)
    return EndParams(*(-om * g / dl for g in gammas(inp.ends)))


def _delta_star(e: EndEntries) -> Scalar:
    return (e.as0 - e.ths0) * (e.a0 - e.thd) - (e.asd - e.ths0) * (e.a0 - e.th0)


def _offsets(e: EndEntries, tag: str, q: Optional[Scalar]):
    """(L_0..L_d, K_0..K_d) for end-entries ``e``."""
    d, F = e.d, e.field
    ds = _delta_star(e)
    if ds.is_zero():
        raise DegenerateDelta("Delta* = 0")
    x = (e.a0 - e.th0) * (e.asd - e.ths0)
    y = (e.a0 - e.thd) * (e.as0 - e.ths0)
    span = e.th0 - e.thd
    L, K = [], []
    for i in range(d + 1):
        if tag == TYPE_I:
            Li = (q ** (2 * d - i - 1) - 1) * x - q ** (d - i) * (q ** (i - 1) - 1) * y
            Ki = (q ** i - 1) * span / ((q ** (d - 1) - 1) * (q ** d - 1) * ds) * Li
        elif tag == TYPE_II:
            Li = (2 * d - i - 1) * x - (i - 1) * y
            Ki = i * span / (F(d * (d - 1)) * ds) * Li
        elif tag == TYPE_III_PLUS:
            Li = (2 * d - i - 1) * x + (i - 1) * y
            if i % 2 == 0:
                Ki = -i * span / F(d)
            else:
                Ki = span / (F(d) * ds) * Li
        elif tag == TYPE_III_MINUS:
            if i % 2 == 0:
                Li = i * x + i * y
            else:
                Li = (2 * d - i - 1) * x - (i - 1) * y
            Ki = span / (F(d - 1) * ds) * Li
        else:
            raise UnsupportedType(f"no reconstruction formula for type {tag}")
        L.append(Li)
        K.append(Ki)
    return tuple(L), tuple(K)


def _split_weight(tag: str, i: int, d: int, F: Field, q: Optional[Scalar]) -> Scalar:
    """Coefficient c_i in varphi_i = K^D_{d-i+1} K*_i - c_i * Gamma_3 / Delta."""
    if tag == TYPE_I:
        return ((q ** i - 1) * (q ** (d - i + 1) - 1) * (q ** (d - 1) + 1)) / (q ** d - 1) ** 2
    if tag == TYPE_II:
        return F(2 * i * (d - i + 1)) / F(d * d)
    if tag == TYPE_III_PLUS:
        top = 2 * i * (d - 1) if i % 2 == 0 else 2 * (d - i + 1) * (d - 1)
        return F(top) / F(d * d)
    return F.zero if i % 2 == 0 else F(2)


def reconstruct(inp: ReconstructionInput) -> Reconstruction:
    tag, q = _type_and_q(inp)
    if tag == TYPE_IV:
        raise UnsupportedType("type IV always has Delta = 0; use lpkit.families.family_type_IV")
    e = inp.ends
    if e.d != inp.d or e.field != inp.field:
        raise ValueError("end-entries disagree with the stated diameter or field")
    _check_ends(e)
    dl = delta(e)
    if dl.is_zero():
        raise DegenerateDelta("Delta = 0: end-entries and beta do not determine the array")
    F, d = inp.field, inp.d

    L, K = _offsets(e, tag, q)
    Ls, Ks = _offsets(d4.apply_to_ends(e, "s"), tag, q)
    Ld, Kd = _offsets(d4.apply_to_ends(e, "D"), tag, q)

    g1, _, g3, _ = gammas(e)
    theta = tuple(e.th0 + k for k in K)
    theta_star = tuple(e.ths0 + k for k in Ks)
    varphi, phi = [], []
    for i in range(1, d + 1):
        c = _split_weight(tag, i, d, F, q)
        varphi.append(Kd[d - i + 1] * Ks[i] - c * g3 / dl)
        phi.append(K[d - i + 1] * Ks[i] - c * g1 / dl)
    pa = ParameterArray(F, d, theta, theta_star, tuple(varphi), tuple(phi))

    report = validate(pa)
    if not report.valid:
        raise ValidationFailed("end-entries are inconsistent: reconstructed data fails "
                               + ", ".join(f"{f.kind}{f.where}" for f in report.failures))
    if end_entries(pa, check=False) != e or fundamental_beta(pa) != inp.beta:
        raise ValidationFailed("reconstructed array does not reproduce the input end-entries and beta")
    recovered = recover_end_parameters(inp)
    if recovered.as_tuple() != (pa.varphi[0], pa.varphi[-1], pa.phi[0], pa.phi[-1]):
        raise ValidationFailed("end-parameters from Omega/Gamma/Delta disagree with the array")
    trace = ReconstructionTrace(tag, q, dl, _delta_star(e), L, K, Ls, Ks, Ld, Kd, recovered)
    return Reconstruction(pa, trace)
