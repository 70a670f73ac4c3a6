import pytest
from hypothesis import given, strategies as st

from conftest import indexed_words, ta_words, tower_params, zero_t_words
from onerel.words import (
    EMPTY,
    GAMMA,
    GAMMA_RELATOR,
    TowerParams,
    Word,
    a_exponent_sum,
    build_gamma_presentation,
    build_relator,
    canonicalize,
    cyclic_reduce,
    format_word,
    is_reduced,
    magnus_rewrite,
    parse_word,
    reduce,
    shift,
    t_exponent_sum,
    unrewrite,
)

P = parse_word
GAMMA_TEXT = "t a t^-1 a t^2 a t^-1 a^-1 t a^-1 t^-2 a^-1 t^2 a^-1 t^-2 a^-1"


class TestParsing:
    def test_identity_spellings(self):
        assert P("1") == EMPTY
        assert P("") == EMPTY
        assert P("  ") == EMPTY

    def test_exponents_expand(self):
        assert P("a^3") == Word([("a", 1)] * 3)
        assert P("a[2]^-2") == Word([(2, -1), (2, -1)])
        assert P("a^0") == EMPTY

    def test_negative_index(self):
        assert P("a[-3]") == Word([(-3, 1)])

    @pytest.mark.parametrize("bad", ["b", "a[", "a[x]", "t^", "a^-", "t a[1]", "a a[0]", "1 a"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            P(bad)

    def test_format_canonical(self):
        assert format_word(P("a a a t t^-1")) == "a^3 t t^-1"
        assert format_word(EMPTY) == "1"
        assert format_word(P("a[0]^-1 a[0]^-1")) == "a[0]^-2"

    @given(st.one_of(indexed_words(), ta_words()))
    def test_format_parse_round_trip(self, w):
        assert P(format_word(w)) == w

    def test_mixed_alphabet_rejected(self):
        with pytest.raises(ValueError):
            Word([("a", 1), (0, 1)])
        with pytest.raises(ValueError):
            P("t") * P("a[0]")

    def test_bad_sign_rejected(self):
        with pytest.raises(ValueError):
            Word([("a", 2)])


class TestReduce:
    def test_examples(self):
        assert reduce(P("a a^-1")) == EMPTY
        assert reduce(P("t a t^-1 t a^-1 t^-1")) == EMPTY
        assert reduce(GAMMA_RELATOR) == GAMMA_RELATOR
        assert is_reduced(GAMMA_RELATOR)

    @given(st.one_of(indexed_words(), ta_words()))
    def test_idempotent_and_shrinking(self, w):
        r = reduce(w)
        assert reduce(r) == r
        assert len(r) <= len(w)
        assert is_reduced(r)

    @given(st.one_of(indexed_words(), ta_words()))
    def test_inverse_cancels(self, w):
        assert reduce(w * w.inverse()) == EMPTY


class TestCyclicReduce:
    def test_examples(self):
        assert cyclic_reduce(P("a[0] a[1] a[0]^-1")) == (P("a[0]"), P("a[1]"))
        w = P("a[0] a[1]")
        assert cyclic_reduce(w) == (EMPTY, w)
        assert cyclic_reduce(P("a[0]^-1 a[1] a[2] a[0]")) == (P("a[0]^-1"), P("a[1] a[2]"))

    @given(indexed_words())
    def test_conjugation_identity(self, w):
        w = reduce(w)
        u, core = cyclic_reduce(w)
        assert reduce(u * core * u.inverse()) == w
        if len(core) > 1:
            assert core.letters[0] != core.letters[-1].inverse()


class TestShift:
    def test_examples(self):
        assert shift(P("a[0] a[2]"), 1) == P("a[1] a[3]")
        w = P("a[4] a[-1]^-1")
        assert shift(w, 0) == w

    @given(indexed_words(), st.integers(-10, 10))
    def test_round_trip(self, w, k):
        assert shift(shift(w, k), -k) == w
        assert len(shift(w, k)) == len(w)

    @given(indexed_words(), indexed_words(), st.integers(-5, 5))
    def test_automorphism(self, u, v, k):
        assert shift(reduce(u * v), k) == reduce(shift(u, k) * shift(v, k))

    def test_rejects_ta_words(self):
        with pytest.raises(ValueError):
            shift(P("t a"), 1)


class TestExponentSums:
    def test_gamma(self):
        assert t_exponent_sum(GAMMA_RELATOR) == 0
        assert a_exponent_sum(GAMMA_RELATOR) == -2
        assert t_exponent_sum(EMPTY) == 0


class TestMagnus:
    def test_examples(self):
        assert magnus_rewrite(P("t a t^-1")) == P("a[1]")
        assert magnus_rewrite(P("a")) == P("a[0]")
        assert magnus_rewrite(GAMMA_RELATOR) == P(
            "a[1] a[0] a[2] a[1]^-1 a[2]^-1 a[0]^-1 a[2]^-1 a[0]^-1"
        )

    def test_nonzero_t_sum_rejected(self):
        with pytest.raises(ValueError):
            magnus_rewrite(P("t a"))

    def test_unrewrite_examples(self):
        assert unrewrite(P("a[1]")) == P("t a t^-1")
        assert unrewrite(P("a[0] a[2]")) == P("a t^2 a t^-2")

    @given(indexed_words(lo=-4))
    def test_round_trip_indexed(self, w):
        assert magnus_rewrite(unrewrite(w)) == reduce(w)

    @given(zero_t_words())
    def test_round_trip_ta(self, w):
        assert unrewrite(magnus_rewrite(w)) == reduce(w)

    @given(zero_t_words(), zero_t_words())
    def test_homomorphism(self, u, v):
        assert magnus_rewrite(u * v) == reduce(magnus_rewrite(u) * magnus_rewrite(v))


class TestTowerParams:
    def test_parse_and_str(self):
        p = TowerParams.parse('2,3,"a[0] a[1]"')
        assert (p.s, p.m, p.W) == (2, 3, P("a[0] a[1]"))
        assert str(p) == "2,3,a[0] a[1]"
        assert TowerParams.parse("1,2,a[0]") == GAMMA

    @pytest.mark.parametrize(
        "s,m,W",
        [(0, 2, "a[0]"), (1, 1, "a[0]"), (1, 2, "1"), (1, 2, "a[0]^-1"), (1, 2, "a"), (2, 2, "a[2]")],
    )
    def test_rejects_bad(self, s, m, W):
        with pytest.raises(ValueError):
            TowerParams(s, m, P(W))

    def test_canonicalize(self):
        assert canonicalize(TowerParams(3, 2, P("a[1]"))) == GAMMA
        assert canonicalize(GAMMA) == GAMMA
        p = TowerParams(2, 2, P("a[0] a[1]"))
        assert canonicalize(p) == p

    @given(tower_params())
    def test_canonical_spans_window(self, p):
        c = canonicalize(p)
        assert c.is_canonical
        assert canonicalize(c) == c


class TestRelators:
    def test_gamma_r0(self):
        assert build_relator(GAMMA, 0) == reduce(P("a[1] a[0] a[2] a[1]^-1") * P("a[0] a[2]") ** -2)

    def test_gamma_r5_is_shift(self):
        assert build_relator(GAMMA, 5) == shift(build_relator(GAMMA, 0), 5)

    def test_s2_m3(self):
        p = TowerParams(2, 3, P("a[0] a[1]"))
        expect = reduce(P("a[2] a[0] a[1] a[3] a[2]^-1") * P("a[0] a[1] a[3]") ** -3)
        assert build_relator(p, 0) == expect

    def test_requires_canonical(self):
        with pytest.raises(ValueError):
            build_relator(TowerParams(3, 2, P("a[1]")))

    @given(tower_params(), st.integers(-4, 4))
    def test_equivariance_and_window(self, p, j):
        p = canonicalize(p)
        r = build_relator(p, j)
        assert r == shift(build_relator(p, 0), j)
        assert {g for g, _ in r} <= set(range(j, j + p.s + 2))
        assert min(g for g, _ in r) == j and max(g for g, _ in r) == j + p.s + 1

    def test_gamma_presentation(self):
        pres = build_gamma_presentation(GAMMA)
        assert reduce(pres.relator) == reduce(P(GAMMA_TEXT))
        assert t_exponent_sum(pres.relator) == 0
        assert str(pres) == f"<t, a | {GAMMA_TEXT}>"

    def test_a_sum_example(self):
        pres = build_gamma_presentation(TowerParams(2, 3, P("a[0] a[1]")))
        assert a_exponent_sum(pres.relator) == -6

    @given(tower_params())
    def test_a_sum_formula(self, p):
        p = canonicalize(p)
        pres = build_gamma_presentation(p)
        assert a_exponent_sum(pres.relator) == (1 - p.m) * (len(p.W) + 1)
        assert magnus_rewrite(pres.relator) == build_relator(p, 0)
