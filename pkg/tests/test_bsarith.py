from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onerel.bsarith import (
    BSElement,
    MAdic,
    bs_in_alpha,
    bs_inverse,
    bs_mul,
    bs_normal_form,
    madic_add,
    madic_scale_by_power,
)
from onerel.words import Word, parse_word

bases = st.sampled_from((2, 3, 5))


@st.composite
def elements(draw, base=None):
    m = base if base is not None else draw(bases)
    i = draw(st.integers(-6, 6))
    return BSElement(i, MAdic.make(draw(st.integers(-50, 50)), draw(st.integers(0, 5)), m))


@st.composite
def triples(draw):
    m = draw(bases)
    return draw(elements(m)), draw(elements(m)), draw(elements(m))


def oracle_mul(g, h):
    """Multiplication through 2x2 rational matrices [[m^i, l], [0, 1]]-style affine maps.

    ``alpha^i beta^l`` acts on Q by ``x -> m^-i x + l`` read right to left; the
    affine group is an independent model of BS(1, m).
    """
    m = g.base
    # affine map x -> A x + B for alpha^i beta^l composed as functions on the right
    def aff(e):
        return Fraction(m) ** (-e.alpha_exp), e.beta_exp.to_fraction()

    a1, b1 = aff(g)
    a2, b2 = aff(h)
    # (g h) acts as x -> a2 (a1 x + b1) + b2
    return a1 * a2, a2 * b1 + b2


class TestMAdic:
    def test_examples(self):
        half = MAdic.make(1, 1, 2)
        assert madic_add(half, half) == MAdic(1, 0, 2)
        assert madic_scale_by_power(MAdic(3, 0, 2), -2) == MAdic(3, 2, 2)
        assert MAdic.make(5, 3, 2) + MAdic.make(3, 2, 2) == MAdic(11, 3, 2)

    def test_canonical(self):
        assert MAdic.make(4, 2, 2) == MAdic(1, 0, 2)
        assert MAdic.make(0, 7, 3) == MAdic(0, 0, 3)
        with pytest.raises(ValueError):
            MAdic(4, 2, 2)
        with pytest.raises(ValueError):
            MAdic(1, -1, 2)

    def test_base_mismatch(self):
        with pytest.raises(ValueError):
            MAdic(1, 0, 2) + MAdic(1, 0, 3)

    def test_from_fraction(self):
        assert MAdic.from_fraction(Fraction(3, 4), 2) == MAdic(3, 2, 2)
        assert MAdic.from_fraction(Fraction(1, 6), 6) == MAdic(1, 1, 6)
        with pytest.raises(ValueError):
            MAdic.from_fraction(Fraction(1, 3), 2)

    @given(bases, st.integers(-100, 100), st.integers(0, 6), st.integers(-100, 100), st.integers(0, 6))
    def test_add_matches_fractions(self, m, n1, e1, n2, e2):
        x, y = MAdic.make(n1, e1, m), MAdic.make(n2, e2, m)
        assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
        assert (x - y).to_fraction() == x.to_fraction() - y.to_fraction()

    @given(bases, st.integers(-100, 100), st.integers(0, 6), st.integers(-6, 6))
    def test_scale(self, m, n, e, k):
        x = MAdic.make(n, e, m)
        assert x.scale_by_power(k).to_fraction() == x.to_fraction() * Fraction(m) ** k


class TestBS:
    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_defining_relation(self, m):
        a, b = BSElement.alpha(m), BSElement.beta(m)
        assert a * b * a.inverse() == BSElement.beta(m, m)
        assert bs_normal_form(parse_word(f"t a t^-1 a^-{m}"), m).is_identity()

    def test_conjugation_by_alpha_inverse(self):
        a, b = BSElement.alpha(2), BSElement.beta(2)
        assert a.inverse() * b * a == BSElement.beta(2, Fraction(1, 2))

    def test_identity_and_inverse(self):
        g = BSElement(3, MAdic.make(5, 2, 3))
        assert g * BSElement.identity(3) == g
        assert bs_inverse(BSElement.alpha(2)) == BSElement(-1, MAdic.zero(2))

    def test_in_alpha(self):
        assert bs_in_alpha(BSElement.alpha(2, 3)) == 3
        assert bs_in_alpha(BSElement.beta(2, Fraction(1, 2))) is None
        for m in (2, 3, 5):
            a, b = BSElement.alpha(m), BSElement.beta(m)
            g = bs_mul(bs_mul(b.inverse(), a), b)
            assert bs_in_alpha(g) is None
            assert g.beta_exp.to_fraction() == 1 - Fraction(1, m)

    def test_json_and_text(self):
        g = BSElement(1, MAdic.make(3, 2, 2))
        assert g.to_json() == {"i": 1, "num": 3, "den_exp": 2, "base": 2}
        assert BSElement.from_json(g.to_json()) == g
        assert str(g) == "a^1 b^(3/2^2)"

    def test_rejects_indexed(self):
        with pytest.raises(ValueError):
            bs_normal_form(parse_word("a[0]"), 2)

    @given(triples())
    def test_associative(self, t):
        g, h, k = t
        assert (g * h) * k == g * (h * k)

    @given(triples())
    def test_matches_affine_model(self, t):
        g, h, _ = t
        prod = g * h
        assert oracle_mul(g, h) == (Fraction(g.base) ** (-prod.alpha_exp), prod.beta_exp.to_fraction())

    @given(bases.flatmap(elements))
    def test_inverse(self, g):
        e = BSElement.identity(g.base)
        assert g * g.inverse() == e == g.inverse() * g

    @given(bases, st.lists(st.tuples(st.sampled_from("ta"), st.sampled_from((1, -1))), max_size=30))
    def test_word_times_inverse(self, m, letters):
        w = Word(letters)
        assert bs_normal_form(w * w.inverse(), m).is_identity()
        assert bs_normal_form(w, m) * bs_normal_form(w.inverse(), m) == BSElement.identity(m)

    @given(bases, st.integers(-5, 5), st.integers(-5, 5))
    def test_alpha_beta_embeddings(self, m, i, j):
        assert BSElement.alpha(m, i) * BSElement.alpha(m, j) == BSElement.alpha(m, i + j)
        assert BSElement.beta(m, i) * BSElement.beta(m, j) == BSElement.beta(m, i + j)
        conj = BSElement.alpha(m) * BSElement.beta(m, i) * BSElement.alpha(m).inverse()
        assert conj == BSElement.beta(m, i * m)

    @given(bases, st.lists(st.tuples(st.sampled_from("ta"), st.sampled_from((1, -1))), max_size=30))
    def test_in_alpha_iff_zero_beta(self, m, letters):
        g = bs_normal_form(Word(letters), m)
        assert (bs_in_alpha(g) is not None) == g.beta_exp.is_zero()
