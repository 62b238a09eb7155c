"""One-parameter families of parameter arrays sharing beta and all end-entries.

In the degenerate regime (varphi_1 + varphi_d == phi_1 + phi_d) the
end-entries and beta do not pin down the array.  For each nonzero zeta the
constructions below produce a candidate array p(zeta) with varphi_1 = zeta;
all but finitely many zeta give genuine parameter arrays, each with the
base's beta and end-entries.

Two cases exist: type I with q^(d-1) = -1, and type IV (characteristic 2,
d = 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .endentry import EndEntries, degenerate_ratios, end_entries
from .errors import PropertyViolation, WrongCase, ZeroZeta
from .exactfield import Field, Scalar
from .parray import (
    TYPE_I,
    TYPE_IV,
    ParameterArray,
    classify_type,
    fundamental_beta,
    validate,
)

CASE_I = "I"
CASE_IV = "IV"


@dataclass(frozen=True)
class FamilyBase:
    field: Field
    d: int
    ends: EndEntries
    case: str
    q: Optional[Scalar] = None

    def __post_init__(self):
        F, d, q = self.field, self.d, self.q
        if self.case == CASE_I:
            if q is None:
                raise WrongCase("type I family needs q")
            if F.characteristic == 2:
                raise WrongCase("type I family needs characteristic != 2")
            if q ** (d - 1) != -1:
                raise WrongCase(f"q^(d-1) = {q ** (d - 1)}, expected -1")
            if any(q ** i == 1 for i in range(1, d + 1)):
                raise WrongCase("q^i == 1 for some 1 <= i <= d")
        elif self.case == CASE_IV:
            if F.characteristic != 2 or d != 3:
                raise WrongCase("type IV family needs characteristic 2 and d = 3")
        else:
            raise WrongCase(f"unknown case {self.case!r}")
        if self.ends.d != d or self.ends.field != F:
            raise WrongCase("end-entries disagree with the base's diameter or field")
        if self.ends.violations() or not degenerate_ratios(self.ends):
            raise WrongCase("end-entries are not in the degenerate regime")

    @property
    def beta(self) -> Scalar:
        return self.field.zero if self.case == CASE_IV else self.q + self.q.inverse()


@dataclass(frozen=True)
class FamilyInstance:
    zeta: Scalar
    candidate: ParameterArray
    valid: bool
    failures: tuple


@dataclass(frozen=True)
class Sweep:
    instances: tuple
    n_valid: int
    n_invalid: int
    bound: int


def base_from_array(pa: ParameterArray, q: Optional[Scalar] = None) -> FamilyBase:
    """Family base (end-entries and q) of a degenerate type I or type IV array."""
    info = classify_type(pa)
    ends = end_entries(pa)
    if info.type_tag == TYPE_IV:
        return FamilyBase(pa.field, pa.d, ends, CASE_IV)
    if info.type_tag != TYPE_I:
        raise WrongCase(f"type {info.type_tag} has no degenerate family")
    if q is None:
        if not info.q_candidates:
            raise WrongCase(f"no q in {pa.field}; supply one from an extension")
        q = info.q_candidates[0]
    return FamilyBase(pa.field, pa.d, ends, CASE_I, q)


def _instance(zeta, F, d, theta, theta_star, varphi, phi) -> FamilyInstance:
    pa = ParameterArray(F, d, tuple(theta), tuple(theta_star), tuple(varphi), tuple(phi))
    report = validate(pa)
    return FamilyInstance(zeta, pa, report.valid, report.failures)


def family_type_I(base: FamilyBase, zeta: Scalar) -> FamilyInstance:
    if base.case != CASE_I:
        raise WrongCase("family_type_I needs a type I base")
    F, d, q, e = base.field, base.d, base.q, base.ends
    zeta = F(zeta)
    if zeta.is_zero():
        raise ZeroZeta("zeta must be nonzero")
    a0t0, a0td = e.a0 - e.th0, e.a0 - e.thd
    b0s0, bds0 = e.as0 - e.ths0, e.asd - e.ths0
    T, S = e.th0 - e.thd, e.ths0 - e.thsd
    q2m1 = q * q - 1

    def scale(i):
        return -(q ** i - 1) / (2 * q ** (i - 1) * q2m1)

    K, Ks, Kd = [], [], []
    for i in range(d + 1):
        up, dn = (q + 1) * (q ** (i - 1) + 1), (q - 1) * (q ** (i - 1) - 1)
        L = up * zeta - dn * b0s0 * T
        Ls = up * zeta - dn * a0t0 * S
        Ld = up * a0td / a0t0 * zeta + dn * bds0 * T
        K.append(scale(i) / b0s0 * L)
        Ks.append(scale(i) / a0t0 * Ls)
        Kd.append(scale(i) / bds0 * Ld)

    theta = [e.th0 + k for k in K]
    theta_star = [e.ths0 + k for k in Ks]
    varphi, phi = [], []
    for i in range(1, d + 1):
        w = (q ** i - 1) * (q ** (i - 2) + 1) / (q ** (i - 2) * q2m1)
        varphi.append(Kd[d - i + 1] * Ks[i] + w * a0td / a0t0 * zeta)
        phi.append(K[d - i + 1] * Ks[i] + w * zeta)
    return _instance(zeta, F, d, theta, theta_star, varphi, phi)


def family_type_IV(base: FamilyBase, zeta: Scalar) -> FamilyInstance:
    if base.case != CASE_IV:
        raise WrongCase("family_type_IV needs a type IV base")
    F, e = base.field, base.ends
    zeta = F(zeta)
    if zeta.is_zero():
        raise ZeroZeta("zeta must be nonzero")
    u = zeta / (e.as0 - e.ths0)
    v = zeta / (e.a0 - e.th0)
    theta = [e.th0, e.th0 + u, e.thd + u, e.thd]
    theta_star = [e.ths0, e.ths0 + v, e.thsd + v, e.thsd]
    middle = (e.ths0 - e.thsd + v) * (e.th0 - e.thd + u)
    varphi = [zeta, middle, (e.ad - e.thd) * v]
    phi = [(e.a0 - e.thd) * v, middle, (e.ad - e.th0) * v]
    return _instance(zeta, F, 3, theta, theta_star, varphi, phi)


def family(base: FamilyBase, zeta: Scalar) -> FamilyInstance:
    return (family_type_I if base.case == CASE_I else family_type_IV)(base, zeta)


def failure_bound(d: int) -> int:
    """Max number of zeta excluded: one per eigenvalue pair, two per split parameter."""
    return 2 * (d * (d + 1) // 2) + 2 * (2 * d)


def sweep(base: FamilyBase, zetas: Optional[Iterable[Scalar]] = None) -> Sweep:
    """Evaluate the family over ``zetas`` (default: every nonzero element of a finite field)."""
    if zetas is None:
        if not base.field.is_finite:
            raise ValueError("give explicit zetas over an infinite field")
        zetas = base.field.nonzero_elements()
    instances = tuple(family(base, z) for z in zetas)
    n_valid = sum(inst.valid for inst in instances)
    return Sweep(instances, n_valid, len(instances) - n_valid, failure_bound(base.d))


def assert_family_properties(base: FamilyBase, inst: FamilyInstance) -> dict:
    """Check that a valid instance shares beta and all end-entries with the base."""
    if not inst.valid:
        raise PropertyViolation(f"zeta = {inst.zeta} does not give a parameter array")
    pa = inst.candidate
    ends = end_entries(pa)
    checks = {
        "beta": fundamental_beta(pa) == base.beta,
        "end_entries": ends == base.ends,
        "varphi_1 == zeta": pa.varphi[0] == inst.zeta,
        "degenerate_ratios": degenerate_ratios(ends),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise PropertyViolation("family property failed: " + ", ".join(failed))
    return checks
