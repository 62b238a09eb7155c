import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus_cases import corpus
from lpkit import d4
from lpkit.endentry import end_entries, end_params
from lpkit.errors import InvalidArray
from lpkit.exactfield import Rationals
from lpkit.parray import ParameterArray, fundamental_beta, validate

Q = Rationals()
K3 = ParameterArray.make(Q, [3, 1, -1, -3], [3, 1, -1, -3], [-6, -8, -6], [6, 8, 6])
GENERIC = [pa for pa, _ in corpus() if len(d4.orbit(pa)) == 8]


def test_k3_examples():
    assert d4.apply(K3, "dd") == K3
    assert d4.apply(K3, "↓↓") == K3
    img = d4.apply(K3, "⇓")
    assert img == ParameterArray.make(Q, [-3, -1, 1, 3], [3, 1, -1, -3], [6, 8, 6], [-6, -8, -6])
    assert d4.apply(K3, "∗") == K3
    assert end_params(img).as_tuple() == (Q(6), Q(6), Q(-6), Q(-6))


def test_k3_orbit():
    # K3 is fixed by star only, so its stabilizer has order 2
    orb = d4.orbit(K3)
    assert len(orb) == 4
    assert d4.apply(K3, "D") in orb and d4.apply(K3, "d") in orb


def test_generic_orbit_has_size_eight():
    assert GENERIC


def test_invalid_input_rejected():
    with pytest.raises(InvalidArray):
        d4.apply(K3.replace(phi=[6, 8, 7]), "s")


def test_bad_letter():
    with pytest.raises(ValueError):
        d4.parse_word("sx")


def test_normal_forms_are_the_group():
    words = ["".join(w) for n in range(5) for w in itertools.product("sdD", repeat=n)]
    assert {d4.normal_form(w) for w in words} == set(d4.ELEMENTS)


words = st.text(alphabet="sdD", max_size=10)


@given(w=words, v=words)
@settings(max_examples=80, deadline=None)
def test_word_action_respects_normal_form(w, v):
    pa = GENERIC[len(w) % len(GENERIC)]
    assert d4.apply(pa, w) == d4.apply(pa, d4.normal_form(w))
    # the action is a right action: applying w then v is applying wv
    assert d4.apply(d4.apply(pa, w), v) == d4.apply(pa, w + v)
    assert d4.normal_form(d4.normal_form(w) + v) == d4.normal_form(w + v)


@given(w=words)
@settings(max_examples=60, deadline=None)
def test_invariants_along_orbit(w):
    for pa in GENERIC[:6]:
        img = d4.apply(pa, w)
        assert validate(img).valid
        assert fundamental_beta(img) == fundamental_beta(pa)
        assert end_entries(img) == d4.apply_to_ends(end_entries(pa), w)


def test_faithful_on_generic_arrays():
    pa = GENERIC[0]
    images = [d4.apply(pa, w) for w in d4.ELEMENTS]
    assert len(set(images)) == 8
