"""End-entries, end-parameters and the scalars built from them.

The production path computes a_0, a_d, a*_0, a*_d from closed forms in the
split parameters; the trace definitions live in :mod:`lpkit.matrixrep` and are
only used as an oracle.  :func:`identity_checks` evaluates every known identity
between these quantities and reports each one by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CharacteristicDividesD, DegenerateCoefficient, MissingQ
from .exactfield import Field, Scalar
from .parray import (
    TYPE_I,
    TYPE_II,
    TYPE_III_MINUS,
    TYPE_III_PLUS,
    TYPE_IV,
    ParameterArray,
    is_degenerate,
    require_valid,
)

END_KEYS = ("th0", "thd", "ths0", "thsd", "a0", "ad", "as0", "asd")
UNKNOWN_KEYS = ("a0", "ad", "as0", "asd")


@dataclass(frozen=True)
class EndEntries:
    th0: Scalar
    thd: Scalar
    ths0: Scalar
    thsd: Scalar
    a0: Scalar
    ad: Scalar
    as0: Scalar
    asd: Scalar
    d: int
    field: Field

    def as_tuple(self):
        return tuple(getattr(self, k) for k in END_KEYS)

    def violations(self) -> list:
        """Names of violated inequalities (eigenvalue ends distinct, a-ends off the theta-ends)."""
        out = []
        if self.th0 == self.thd:
            out.append("th0 == thd")
        if self.ths0 == self.thsd:
            out.append("ths0 == thsd")
        for a in ("a0", "ad"):
            for t in ("th0", "thd"):
                if getattr(self, a) == getattr(self, t):
                    out.append(f"{a} == {t}")
        for a in ("as0", "asd"):
            for t in ("ths0", "thsd"):
                if getattr(self, a) == getattr(self, t):
                    out.append(f"{a} == {t}")
        return out


@dataclass(frozen=True)
class EndParams:
    vphi1: Scalar
    vphid: Scalar
    phi1: Scalar
    phid: Scalar

    def as_tuple(self):
        return (self.vphi1, self.vphid, self.phi1, self.phid)


@dataclass(frozen=True)
class EndScalars:
    omega: Optional[Scalar]
    delta: Scalar
    gammas: tuple


def end_entries(pa: ParameterArray, check: bool = True) -> EndEntries:
    if check:
        require_valid(pa)
    th0, thd = pa.theta[0], pa.theta[-1]
    ths0, thsd = pa.theta_star[0], pa.theta_star[-1]
    v1, vd, p1, pd = pa.varphi[0], pa.varphi[-1], pa.phi[0], pa.phi[-1]
    return EndEntries(
        th0, thd, ths0, thsd,
        a0=(th0 * p1 - thd * v1) / (p1 - v1),
        ad=(thd * pd - th0 * vd) / (pd - vd),
        as0=(ths0 * pd - thsd * v1) / (pd - v1),
        asd=(thsd * p1 - ths0 * vd) / (p1 - vd),
        d=pa.d,
        field=pa.field,
    )


def end_params(pa: ParameterArray) -> EndParams:
    return EndParams(pa.varphi[0], pa.varphi[-1], pa.phi[0], pa.phi[-1])


def omega(pa: ParameterArray) -> Scalar:
    return ((pa.phi[0] + pa.phi[-1] - pa.varphi[0] - pa.varphi[-1])
            / ((pa.theta[0] - pa.theta[-1]) * (pa.theta_star[0] - pa.theta_star[-1])))


def omega_closed_form(type_tag: str, d: int, F: Field, q: Optional[Scalar] = None) -> Scalar:
    """Value of Omega predicted by the type (and q for type I)."""
    if type_tag == TYPE_I:
        if q is None:
            raise MissingQ("type I needs q")
        return (q - 1) * (q ** (d - 1) + 1) / (q ** d - 1)
    if type_tag == TYPE_IV:
        return F.zero
    if type_tag == TYPE_III_MINUS:
        return F(2)
    dd = F(d)
    if dd.is_zero():
        raise CharacteristicDividesD(f"d = {d} vanishes in {F}")
    if type_tag == TYPE_II:
        return 2 / dd
    if type_tag == TYPE_III_PLUS:
        return 2 * (dd - 1) / dd
    raise ValueError(f"unknown type {type_tag!r}")


def delta(ee: EndEntries) -> Scalar:
    return (ee.a0 - ee.th0) * (ee.as0 - ee.thsd) - (ee.ad - ee.th0) * (ee.as0 - ee.ths0)


def gammas(ee: EndEntries) -> tuple:
    s = ee.ths0 - ee.thsd
    return (
        (ee.a0 - ee.th0) * (ee.ad - ee.th0) * (ee.as0 - ee.ths0) * s,
        (ee.a0 - ee.th0) * (ee.ad - ee.thd) * (ee.as0 - ee.thsd) * s,
        (ee.a0 - ee.thd) * (ee.ad - ee.th0) * (ee.as0 - ee.ths0) * s,
        (ee.a0 - ee.th0) * (ee.ad - ee.th0) * (ee.as0 - ee.thsd) * s,
    )


def delta_and_gammas(ee: EndEntries, omega_value: Optional[Scalar] = None) -> EndScalars:
    return EndScalars(omega=omega_value, delta=delta(ee), gammas=gammas(ee))


def restriction_sides(ee: EndEntries) -> tuple:
    left = ((ee.a0 - ee.th0) * (ee.ad - ee.thd)) / ((ee.a0 - ee.thd) * (ee.ad - ee.th0))
    right = ((ee.as0 - ee.ths0) * (ee.asd - ee.thsd)) / ((ee.as0 - ee.thsd) * (ee.asd - ee.ths0))
    return left, right


def check_restriction(ee: EndEntries) -> bool:
    left, right = restriction_sides(ee)
    return left == right


def _restriction_poly(th0, thd, ths0, thsd, a0, ad, as0, asd):
    return ((a0 - th0) * (ad - thd) * (as0 - thsd) * (asd - ths0)
            - (a0 - thd) * (ad - th0) * (as0 - ths0) * (asd - thsd))


def solve_fourth_end_entry(th0, thd, ths0, thsd, known: dict) -> Scalar:
    """Solve the (linear) cross-ratio relation for the one missing a-entry.

    ``known`` maps three of a0, ad, as0, asd to their values.
    """
    missing = [k for k in UNKNOWN_KEYS if k not in known]
    if len(missing) != 1 or set(known) - set(UNKNOWN_KEYS):
        raise ValueError(f"give exactly three of {UNKNOWN_KEYS}, got {sorted(known)}")
    key = missing[0]
    F = th0.field

    def at(x):
        vals = dict(known, **{key: x})
        return _restriction_poly(th0, thd, ths0, thsd, *(vals[k] for k in UNKNOWN_KEYS))

    const = at(F.zero)
    coeff = at(F.one) - const
    if coeff.is_zero():
        raise DegenerateCoefficient(f"coefficient of {key} vanishes")
    return -const / coeff


def degenerate_ratios(ee: EndEntries) -> bool:
    """All four ratio identities that characterize Delta = 0."""
    a0t0 = ee.a0 - ee.th0
    as0ts0 = ee.as0 - ee.ths0
    checks = (
        (ee.ad - ee.th0) / a0t0 == (ee.as0 - ee.thsd) / as0ts0,
        (ee.a0 - ee.thd) / a0t0 == (ee.asd - ee.ths0) / as0ts0,
        (ee.ad - ee.thd) / a0t0 == (ee.asd - ee.thsd) / as0ts0,
        (ee.a0 - ee.ad) / a0t0 == (ee.thsd - ee.ths0) / as0ts0,
    )
    return all(checks)


def identity_checks(pa: ParameterArray, type_tag: Optional[str] = None,
                    q: Optional[Scalar] = None) -> dict:
    """Evaluate every end-entry identity on ``pa``; maps a name to pass/fail.

    Omega's closed form is included when ``type_tag`` is given (and ``q`` for
    type I).  The four degenerate-regime ratio identities are included when
    varphi_1 + varphi_d == phi_1 + phi_d.
    """
    d = pa.d
    th, ths = pa.theta, pa.theta_star
    v1, vd, p1, pd = pa.varphi[0], pa.varphi[-1], pa.phi[0], pa.phi[-1]
    ee = end_entries(pa)
    t0, td, s0, sd = ee.th0, ee.thd, ee.ths0, ee.thsd
    a0, ad, b0, bd = ee.a0, ee.ad, ee.as0, ee.asd
    T, S = t0 - td, s0 - sd
    out = {}

    rows = [
        (a0 - t0, v1 / (s0 - ths[1])),
        (ad - td, vd / (sd - ths[d - 1])),
        (a0 - td, p1 / (s0 - ths[1])),
        (ad - t0, pd / (sd - ths[d - 1])),
        (b0 - s0, v1 / (t0 - th[1])),
        (bd - sd, vd / (td - th[d - 1])),
        (b0 - sd, pd / (t0 - th[1])),
        (bd - s0, p1 / (td - th[d - 1])),
    ]
    for n, (lhs, rhs) in enumerate(rows, 1):
        out[f"end_gap[{n}]"] = lhs == rhs

    rows = [
        ((a0 - t0) / (a0 - td), v1 / p1),
        ((ad - td) / (ad - t0), vd / pd),
        ((b0 - s0) / (b0 - sd), v1 / pd),
        ((bd - sd) / (bd - s0), vd / p1),
    ]
    for n, (lhs, rhs) in enumerate(rows, 1):
        out[f"end_gap_ratio[{n}]"] = lhs == rhs

    rows = [
        (t0 - th[1], (pd - v1) / S),
        (td - th[d - 1], (vd - p1) / S),
        (s0 - ths[1], (p1 - v1) / T),
        (sd - ths[d - 1], (vd - pd) / T),
    ]
    for n, (lhs, rhs) in enumerate(rows, 1):
        out[f"first_step[{n}]"] = lhs == rhs

    rows = [
        (a0 - t0, v1 * T / (p1 - v1)),
        (ad - td, vd * T / (vd - pd)),
        (a0 - td, p1 * T / (p1 - v1)),
        (ad - t0, pd * T / (vd - pd)),
        (b0 - s0, v1 * S / (pd - v1)),
        (bd - sd, vd * S / (vd - p1)),
        (b0 - sd, pd * S / (pd - v1)),
        (bd - s0, p1 * S / (vd - p1)),
    ]
    for n, (lhs, rhs) in enumerate(rows, 1):
        out[f"end_gap_closed[{n}]"] = lhs == rhs

    # a-ends via the first-order displays, compared with the closed forms used above
    out["end_entry_first_order"] = (a0 == t0 + v1 / (s0 - ths[1]) and ad == td + vd / (sd - ths[d - 1])
                   and b0 == s0 + v1 / (t0 - th[1]) and bd == sd + vd / (td - th[d - 1]))

    out["ends_avoid_eigenvalues"] = not ee.violations()
    out["split_ends_distinct"] = all(p != v for p in (p1, pd) for v in (v1, vd))

    left, right = restriction_sides(ee)
    out["cross_ratio"] = left == right
    out["cross_ratio_value"] = left == v1 * vd / (p1 * pd)
    coeff = ((ad - td) * (b0 - sd) * (bd - s0) - (ad - t0) * (b0 - s0) * (bd - sd))
    out["cross_ratio_coefficient"] = coeff == (
        vd * pd * T * S * S * (p1 - v1) / ((p1 - vd) * (pd - v1) * (pd - vd)))

    den = (p1 - v1) * (pd - v1) * (pd - vd)
    D = delta(ee)
    out["delta_closed"] = D == v1 * pd * T * S * (p1 + pd - v1 - vd) / den
    G = gammas(ee)
    TS2 = T * T * S * S
    closed = (-v1 * v1 * pd, -v1 * vd * pd, -v1 * p1 * pd, -v1 * pd * pd)
    for n, (g, c) in enumerate(zip(G, closed), 1):
        out[f"gamma_closed[{n}]"] = g == c * TS2 / den
    Om = omega(pa)
    for n, (g, e) in enumerate(zip(G, (v1, vd, p1, pd)), 1):
        out[f"omega_gamma[{n}]"] = Om * g / e == -D
    out["delta_zero_iff_degenerate"] = D.is_zero() == is_degenerate(pa)
    out["omega_zero_iff_degenerate"] = Om.is_zero() == is_degenerate(pa)

    if is_degenerate(pa):
        a0t0, b0s0 = a0 - t0, b0 - s0
        rows = [
            ((ad - t0) / a0t0, (b0 - sd) / b0s0),
            ((a0 - td) / a0t0, (bd - s0) / b0s0),
            ((ad - td) / a0t0, (bd - sd) / b0s0),
            ((a0 - ad) / a0t0, (sd - s0) / b0s0),
        ]
        for n, (lhs, rhs) in enumerate(rows, 1):
            out[f"degenerate_ratio[{n}]"] = lhs == rhs

    if type_tag is not None and d >= 3:
        out["omega_table"] = Om == omega_closed_form(type_tag, d, pa.field, q)
    return out
