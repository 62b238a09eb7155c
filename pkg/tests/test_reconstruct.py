import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus_cases import corpus, nondegenerate
from lpkit.endentry import EndEntries, END_KEYS, end_entries, end_params
from lpkit.errors import DegenerateDelta, MissingQ, UnsupportedType, ValidationFailed
from lpkit.exactfield import FiniteField, Rationals
from lpkit.parray import TYPE_I, ParameterArray, complete_from_seed
from lpkit.reconstruct import ReconstructionInput, reconstruct, recover_end_parameters

Q = Rationals()
GF13 = FiniteField(13)
K3 = ParameterArray.make(Q, [3, 1, -1, -3], [3, 1, -1, -3], [-6, -8, -6], [6, 8, 6])
K3_INPUT = ReconstructionInput(Q, 3, end_entries(K3), Q(2))


def test_k3_end_parameters():
    ep = recover_end_parameters(K3_INPUT)
    assert ep.as_tuple() == (Q(-6), Q(-6), Q(6), Q(6))


def test_k3_reconstruction_and_trace():
    rec = reconstruct(K3_INPUT)
    assert rec.array == K3
    t = rec.trace
    assert t.delta == -18 and t.delta_star == -18
    assert t.L[1] == 36 and t.K[1] == -2
    assert t.Kdown[3] == 6 and t.Kstar[1] == -2
    assert t.K[0] == 0 and t.Kstar[0] == 0
    assert t.type_tag == "II" and t.q is None


def test_degenerate_ends_rejected():
    pa = complete_from_seed(GF13, 3, [1, 5, 12, 8], [1, 5, 12, 8], 1)
    inp = ReconstructionInput(GF13, 3, end_entries(pa), GF13(0), GF13(5))
    with pytest.raises(DegenerateDelta):
        reconstruct(inp)
    with pytest.raises(DegenerateDelta):
        recover_end_parameters(inp)


def test_type_iv_rejected():
    G = FiniteField(2, 4)
    x = G.element(2)
    pa = complete_from_seed(G, 3, [G.element(0), G.element(1), x, x + 1],
                            [G.element(3), G.element(5), G.element(7), G.element(1)], G.element(9))
    with pytest.raises(UnsupportedType):
        reconstruct(ReconstructionInput(G, 3, end_entries(pa), G.zero))


def test_missing_q():
    # beta = 3 has no unit root in Q
    with pytest.raises(MissingQ):
        reconstruct(ReconstructionInput(Q, 3, end_entries(K3), Q(3)))


def test_wrong_q_rejected():
    with pytest.raises(ValueError):
        reconstruct(ReconstructionInput(Q, 3, end_entries(K3), Q("5/2"), Q(3)))


def test_inconsistent_ends():
    e = end_entries(K3)
    vals = {k: getattr(e, k) for k in END_KEYS}
    vals["a0"] = Q(1)
    with pytest.raises(ValidationFailed):
        reconstruct(ReconstructionInput(Q, 3, EndEntries(**vals, d=3, field=Q), Q(2)))


NONDEG = nondegenerate()


@pytest.mark.parametrize("pa,info", NONDEG[::4], ids=lambda x: "")
def test_round_trip(pa, info):
    rec = reconstruct(ReconstructionInput(pa.field, pa.d, end_entries(pa), info.beta))
    assert rec.array == pa
    assert rec.trace.recovered_end_params == end_params(pa)
    assert rec.trace.K[0].is_zero() and rec.trace.Kstar[0].is_zero()
    assert pa.theta[0] + rec.trace.K[-1] == pa.theta[-1]


@given(idx=st.integers(0, len(NONDEG) - 1))
@settings(max_examples=50, deadline=None)
def test_root_swap_invariance(idx):
    pa, info = NONDEG[idx]
    if info.type_tag != TYPE_I:
        return
    ee = end_entries(pa)
    arrays = {reconstruct(ReconstructionInput(pa.field, pa.d, ee, info.beta, q)).array
              for q in info.q_candidates}
    assert arrays == {pa}


def test_degenerate_corpus_members_rejected():
    for pa, info in corpus():
        if info.degenerate:
            with pytest.raises(DegenerateDelta):
                reconstruct(ReconstructionInput(pa.field, pa.d, end_entries(pa), info.beta))
