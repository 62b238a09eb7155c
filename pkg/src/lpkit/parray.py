"""Parameter arrays: the data type, the five-condition validator, completion
from a seed, the fundamental parameter and the type table.

Indexing follows the usual conventions: ``theta[i]`` and ``theta_star[i]``
for 0 <= i <= d, while the two families of split parameters are 1-based in
the literature and stored 0-based here, so ``varphi[i - 1]`` is varphi_i and
``phi[i - 1]`` is phi_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DiameterTooSmall,
    InvalidArray,
    NotConstantRatio,
    PropertyViolation,
    SeedInconsistent,
    ZeroParameter,
)
from .exactfield import Field, Scalar, solve_unit_quadratic

TYPE_I = "I"
TYPE_II = "II"
TYPE_III_PLUS = "IIIplus"
TYPE_III_MINUS = "IIIminus"
TYPE_IV = "IV"
TYPES = (TYPE_I, TYPE_II, TYPE_III_PLUS, TYPE_III_MINUS, TYPE_IV)


@dataclass(frozen=True)
class ParameterArray:
    field: Field
    d: int
    theta: tuple
    theta_star: tuple
    varphi: tuple
    phi: tuple

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("diameter must be at least 1")
        lengths = (len(self.theta), len(self.theta_star), len(self.varphi), len(self.phi))
        if lengths != (self.d + 1, self.d + 1, self.d, self.d):
            raise ValueError(f"sequence lengths {lengths} do not fit diameter {self.d}")
        for seq in (self.theta, self.theta_star, self.varphi, self.phi):
            for x in seq:
                if not isinstance(x, Scalar) or x.field != self.field:
                    raise ValueError(f"{x!r} is not an element of {self.field}")

    @classmethod
    def make(cls, F: Field, theta, theta_star, varphi, phi) -> "ParameterArray":
        """Build an array, coercing ints / fractions / strings into ``F``."""
        return cls(F, len(theta) - 1,
                   tuple(F(x) for x in theta), tuple(F(x) for x in theta_star),
                   tuple(F(x) for x in varphi), tuple(F(x) for x in phi))

    def replace(self, **changes) -> "ParameterArray":
        data = dict(theta=self.theta, theta_star=self.theta_star,
                    varphi=self.varphi, phi=self.phi)
        for key, seq in changes.items():
            data[key] = tuple(self.field(x) for x in seq)
        return ParameterArray(self.field, self.d, **data)


@dataclass(frozen=True)
class Failure:
    """One violated condition.

    ``kind`` is one of distinct_theta, distinct_theta_star, nonzero_varphi,
    nonzero_phi, eq_iii, eq_iv, ratio_not_constant; ``where`` holds the
    offending index or index pair.
    """

    kind: str
    where: tuple


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    failures: tuple
    vartheta: Optional[tuple]
    beta_plus_one: Optional[Scalar] = None
    witness_index: Optional[int] = None


@dataclass(frozen=True)
class TypeInfo:
    beta: Scalar
    q_candidates: tuple
    type_tag: str
    degenerate: bool


def vartheta(theta: Sequence[Scalar]) -> tuple:
    """Partial sums sum_{l<i} (theta_l - theta_{d-l}) / (theta_0 - theta_d), i = 1..d."""
    d = len(theta) - 1
    span = theta[0] - theta[d]
    out, acc = [], None
    for ell in range(d):
        term = (theta[ell] - theta[d - ell]) / span
        acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def _ratio_failures(theta, theta_star):
    """Check the three-term ratio condition.

    Returns (common value, witness index, failures).  The common value is taken
    at the first index where both ratios are defined; every other index is
    compared against it.
    """
    d = len(theta) - 1
    if d < 3:
        return None, None, []
    failures, common, witness = [], None, None
    for i in range(2, d):
        den, den_s = theta[i - 1] - theta[i], theta_star[i - 1] - theta_star[i]
        if den.is_zero() or den_s.is_zero():
            failures.append(Failure("ratio_not_constant", (i,)))
            continue
        r = (theta[i - 2] - theta[i + 1]) / den
        r_s = (theta_star[i - 2] - theta_star[i + 1]) / den_s
        if common is None and r == r_s:
            common, witness = r, i
        elif r != r_s or r != common:
            failures.append(Failure("ratio_not_constant", (i,)))
    if failures:
        return None, None, failures
    return common, witness, failures


def validate(pa: ParameterArray) -> ValidationReport:
    d = pa.d
    th, ths, vp, ph = pa.theta, pa.theta_star, pa.varphi, pa.phi
    failures = []
    for kind, seq in (("distinct_theta", th), ("distinct_theta_star", ths)):
        for i in range(d + 1):
            for j in range(i + 1, d + 1):
                if seq[i] == seq[j]:
                    failures.append(Failure(kind, (i, j)))
    for kind, seq in (("nonzero_varphi", vp), ("nonzero_phi", ph)):
        for i in range(1, d + 1):
            if seq[i - 1].is_zero():
                failures.append(Failure(kind, (i,)))

    vth = None
    if th[0] != th[d]:
        vth = vartheta(th)
        for i in range(1, d + 1):
            rhs = ph[0] * vth[i - 1] + (ths[i] - ths[0]) * (th[i - 1] - th[d])
            if vp[i - 1] != rhs:
                failures.append(Failure("eq_iii", (i,)))
            rhs = vp[0] * vth[i - 1] + (ths[i] - ths[0]) * (th[d - i + 1] - th[0])
            if ph[i - 1] != rhs:
                failures.append(Failure("eq_iv", (i,)))

    common, witness, ratio_failures = _ratio_failures(th, ths)
    failures.extend(ratio_failures)
    return ValidationReport(
        valid=not failures,
        failures=tuple(failures),
        vartheta=vth,
        beta_plus_one=common,
        witness_index=witness,
    )


def require_valid(pa: ParameterArray) -> ValidationReport:
    report = validate(pa)
    if not report.valid:
        raise InvalidArray("not a parameter array: "
                           + ", ".join(f"{f.kind}{f.where}" for f in report.failures),
                           report.failures)
    return report


def fundamental_beta(pa: ParameterArray) -> Scalar:
    """One less than the common three-term ratio of the eigenvalue sequences."""
    if pa.d < 3:
        raise DiameterTooSmall(f"beta needs d >= 3, got d = {pa.d}")
    common, _, failures = _ratio_failures(pa.theta, pa.theta_star)
    if failures:
        raise NotConstantRatio("three-term ratios are not equal and constant at "
                               + ", ".join(str(f.where[0]) for f in failures))
    return common - 1


def type_from_beta(beta: Scalar, d: int) -> str:
    if beta.field.characteristic == 2:
        return TYPE_IV if beta.is_zero() else TYPE_I
    if beta == 2:
        return TYPE_II
    if beta == -2:
        return TYPE_III_PLUS if d % 2 == 0 else TYPE_III_MINUS
    return TYPE_I


def is_degenerate(pa: ParameterArray) -> bool:
    """varphi_1 + varphi_d == phi_1 + phi_d."""
    return pa.varphi[0] + pa.varphi[-1] == pa.phi[0] + pa.phi[-1]


def classify_type(pa: ParameterArray) -> TypeInfo:
    if pa.d < 3:
        raise DiameterTooSmall(f"types need d >= 3, got d = {pa.d}")
    require_valid(pa)
    beta = fundamental_beta(pa)
    tag = type_from_beta(beta, pa.d)
    qs = solve_unit_quadratic(beta)
    degenerate = is_degenerate(pa)
    if tag == TYPE_I and qs:
        q_says = qs[0] ** (pa.d - 1) == -1
        if q_says != degenerate:
            raise PropertyViolation(
                f"degenerate={degenerate} but q^(d-1) == -1 is {q_says} (q = {qs[0]})")
    return TypeInfo(beta=beta, q_candidates=qs, type_tag=tag, degenerate=degenerate)


def complete_from_seed(F: Field, d: int, theta, theta_star, phi1_seed) -> ParameterArray:
    """Fill in varphi and phi from the eigenvalue sequences and phi_1.

    varphi_i comes from phi_1 via condition (iii), then phi_i from varphi_1 via
    condition (iv); the i = 1 instance of (iv) must give the seed back.
    """
    th = tuple(F(x) for x in theta)
    ths = tuple(F(x) for x in theta_star)
    seed = F(phi1_seed)
    if len(th) != d + 1 or len(ths) != d + 1:
        raise ValueError(f"need {d + 1} eigenvalues in each sequence")
    if th[0] == th[d]:
        raise InvalidArray("theta_0 == theta_d", [Failure("distinct_theta", (0, d))])
    vth = vartheta(th)
    varphi = tuple(seed * vth[i - 1] + (ths[i] - ths[0]) * (th[i - 1] - th[d])
                   for i in range(1, d + 1))
    phi = tuple(varphi[0] * vth[i - 1] + (ths[i] - ths[0]) * (th[d - i + 1] - th[0])
                for i in range(1, d + 1))
    if phi[0] != seed:
        raise SeedInconsistent(f"phi_1 recomputed as {phi[0]}, seed was {seed}")
    zeros = [("varphi", i) for i in range(1, d + 1) if varphi[i - 1].is_zero()]
    zeros += [("phi", i) for i in range(1, d + 1) if phi[i - 1].is_zero()]
    if zeros:
        raise ZeroParameter("vanishing parameters: "
                            + ", ".join(f"{name}_{i}" for name, i in zeros), zeros)
    pa = ParameterArray(F, d, th, ths, varphi, phi)
    require_valid(pa)
    return pa
