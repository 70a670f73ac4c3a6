import pytest
from hypothesis import given

from conftest import zero_t_words
from onerel.oracles import ORACLE_NAMES, BSOracle, FreeOracle, GammaHOracle, GammaOracle, KleinOracle, make_oracle
from onerel.tower import Verdict
from onerel.words import GAMMA, GAMMA_RELATOR, TowerParams, parse_word, reduce

P = parse_word
T, N = Verdict.TRIVIAL, Verdict.NONTRIVIAL


def test_make_oracle():
    for name in ORACLE_NAMES:
        assert make_oracle(name).is_trivial(P("1")) is T
    with pytest.raises(ValueError):
        make_oracle("heisenberg")


@pytest.mark.parametrize("name", ORACLE_NAMES)
def test_relator_is_trivial(name):
    o = make_oracle(name)
    r = o.presentation().relator
    assert o.is_trivial(r) is T
    assert o.is_trivial(P("t")) is N
    assert o.is_trivial(P("a")) is N


def test_klein_normal_form():
    assert KleinOracle.normal_form(P("t a t^-1")) == (0, -1)
    assert KleinOracle().is_trivial(P("a t a t^-1")) is T
    assert KleinOracle().is_trivial(P("a t a^-1 t^-1")) is N


def test_bs():
    o = BSOracle(3)
    assert o.is_trivial(P("t a t^-1 a^-3")) is T
    assert o.is_trivial(P("t a t^-1 a^-2")) is N
    assert o.name == "bs3"


def test_free():
    assert FreeOracle().is_trivial(P("a t a^-1 t^-1")) is N
    assert FreeOracle().is_trivial(P("a[0] a[1] a[1]^-1 a[0]^-1")) is T


def test_gamma_accepts_both_alphabets():
    o = GammaOracle()
    assert o.is_trivial(GAMMA_RELATOR) is T
    assert o.is_trivial(P("a[1] a[0] a[2] a[1]^-1 a[2]^-1 a[0]^-1 a[2]^-1 a[0]^-1")) is T
    assert o.name == "gamma"
    assert GammaOracle(TowerParams(3, 2, P("a[1]"))).params == GAMMA


def test_gamma_h_generators():
    o = GammaHOracle()
    assert o.generators == (0, 1, 2)
    assert o.has_shift
    assert o.shift_word(P("a[0]"), 2) == P("a[2]")


def test_shift_flags():
    assert GammaOracle().has_shift
    for o in (FreeOracle(), BSOracle(), KleinOracle()):
        assert not o.has_shift


@pytest.mark.parametrize("name", ORACLE_NAMES)
@given(w=zero_t_words(max_size=16))
def test_abelian_is_an_invariant(name, w):
    o = make_oracle(name)
    img = o.abelian(w)
    if o.is_trivial(w) is T:
        assert o.abelian_sum_is_zero([img])
    inv = o.abelian(w.inverse())
    assert o.abelian_sum_is_zero([img, inv])


def test_describe():
    assert KleinOracle().describe() == "klein: <t, a | t a t^-1 a>"
    assert reduce(BSOracle().presentation().relator) == P("t a t^-1 a^-2")
