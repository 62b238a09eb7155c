import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus_cases import corpus
from lpkit.endentry import (
    END_KEYS,
    EndEntries,
    check_restriction,
    degenerate_ratios,
    delta,
    delta_and_gammas,
    end_entries,
    end_params,
    gammas,
    identity_checks,
    omega,
    omega_closed_form,
    restriction_sides,
    solve_fourth_end_entry,
)
from lpkit.errors import CharacteristicDividesD, DegenerateCoefficient, MissingQ
from lpkit.exactfield import FiniteField, Rationals
from lpkit.parray import TYPE_I, TYPE_II, TYPE_III_MINUS, TYPE_III_PLUS, TYPE_IV, ParameterArray, complete_from_seed

Q = Rationals()
GF13 = FiniteField(13)
K3 = ParameterArray.make(Q, [3, 1, -1, -3], [3, 1, -1, -3], [-6, -8, -6], [6, 8, 6])
DEG13 = complete_from_seed(GF13, 3, [1, 5, 12, 8], [1, 5, 12, 8], 1)


def with_ends(ee, **changes):
    vals = {k: getattr(ee, k) for k in END_KEYS}
    vals.update({k: ee.field(v) for k, v in changes.items()})
    return EndEntries(**vals, d=ee.d, field=ee.field)


def test_k3_values():
    ee = end_entries(K3)
    assert ee.as_tuple() == tuple(Q(x) for x in (3, -3, 3, -3, 0, 0, 0, 0))
    assert end_params(K3).as_tuple() == (Q(-6), Q(-6), Q(6), Q(6))
    assert omega(K3) == Q("2/3")
    assert delta(ee) == -18
    assert gammas(ee)[0] == -162 and gammas(ee)[2] == 162
    es = delta_and_gammas(ee, omega(K3))
    assert es.omega == Q("2/3") and es.delta == -18


def test_omega_table():
    assert omega_closed_form(TYPE_II, 3, Q) == Q("2/3")
    assert omega_closed_form(TYPE_III_PLUS, 4, Q) == Q("3/2")
    assert omega_closed_form(TYPE_III_MINUS, 5, Q) == 2
    assert omega_closed_form(TYPE_IV, 3, FiniteField(2, 4)).is_zero()
    assert omega_closed_form(TYPE_I, 3, Q, Q(2)) == Q(5) / 7
    with pytest.raises(MissingQ):
        omega_closed_form(TYPE_I, 3, Q)
    with pytest.raises(CharacteristicDividesD):
        omega_closed_form(TYPE_II, 13, GF13)


def test_restriction_k3():
    ee = end_entries(K3)
    left, right = restriction_sides(ee)
    # both sides equal varphi_1 varphi_d / (phi_1 phi_d), which is +1 for K3
    assert left == right == 1
    assert check_restriction(ee)
    perturbed = with_ends(ee, a0=1)
    assert restriction_sides(perturbed)[0] == Q(1) / 2
    assert not check_restriction(perturbed)


def test_solve_fourth_k3():
    ee = end_entries(K3)
    args = (ee.th0, ee.thd, ee.ths0, ee.thsd)
    assert solve_fourth_end_entry(*args, {"ad": Q(0), "as0": Q(0), "asd": Q(0)}) == 0


def test_solve_fourth_degenerate_coefficient():
    ee = end_entries(K3)
    with pytest.raises(DegenerateCoefficient):
        solve_fourth_end_entry(ee.th0, ee.thd, ee.ths0, ee.thsd,
                               {"ad": Q(3), "as0": Q(-3), "asd": Q(0)})


def test_solve_fourth_argument_check():
    ee = end_entries(K3)
    with pytest.raises(ValueError):
        solve_fourth_end_entry(ee.th0, ee.thd, ee.ths0, ee.thsd, {"ad": Q(0)})


def test_degenerate_ratios_examples():
    assert degenerate_ratios(end_entries(DEG13))
    assert not degenerate_ratios(end_entries(K3))


def test_midpoint_ends_are_not_degenerate():
    # at the midpoints each left ratio is 1 and each right ratio is -1
    ee = end_entries(K3)
    mid, mid_s = (ee.th0 + ee.thd) / 2, (ee.ths0 + ee.thsd) / 2
    ee = with_ends(ee, a0=mid, ad=mid, as0=mid_s, asd=mid_s)
    assert not degenerate_ratios(ee)


def test_violations():
    ee = end_entries(K3)
    assert ee.violations() == []
    assert with_ends(ee, a0=3).violations()


ITEMS = corpus()


@pytest.mark.parametrize("pa,info", ITEMS[::4], ids=lambda x: "")
def test_identity_suite(pa, info):
    q = info.q_candidates[0] if info.type_tag == TYPE_I else None
    checks = identity_checks(pa, info.type_tag, q)
    assert "omega_table" in checks
    assert [k for k, ok in checks.items() if not ok] == []


@pytest.mark.parametrize("pa,info", [it for it in ITEMS if it[1].type_tag == TYPE_I][::3], ids=lambda x: "")
def test_omega_type_i(pa, info):
    q, qinv = info.q_candidates[0], info.q_candidates[-1]
    d, F = pa.d, pa.field
    assert omega_closed_form(TYPE_I, d, F, q) == omega_closed_form(TYPE_I, d, F, qinv)
    assert omega(pa).is_zero() == (q ** (d - 1) == -1)


def test_omega_nonzero_for_ii_and_iii():
    for pa, info in ITEMS:
        if info.type_tag in (TYPE_II, TYPE_III_PLUS, TYPE_III_MINUS):
            assert not omega(pa).is_zero()


def test_degenerate_identities_present():
    degenerate = [pa for pa, info in ITEMS if info.degenerate] + [DEG13]
    for pa in degenerate:
        checks = identity_checks(pa)
        assert all(checks[f"degenerate_ratio[{n}]"] for n in range(1, 5))
        assert delta(end_entries(pa)).is_zero()


@given(idx=st.integers(0, len(ITEMS) - 1), key=st.sampled_from(["a0", "ad", "as0", "asd"]))
@settings(max_examples=60, deadline=None)
def test_fourth_entry_recovered(idx, key):
    ee = end_entries(ITEMS[idx][0])
    known = {k: getattr(ee, k) for k in ("a0", "ad", "as0", "asd") if k != key}
    try:
        value = solve_fourth_end_entry(ee.th0, ee.thd, ee.ths0, ee.thsd, known)
    except DegenerateCoefficient:
        return
    assert value == getattr(ee, key)
    assert check_restriction(with_ends(ee, **{key: value}))
