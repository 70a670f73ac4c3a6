import itertools

import pytest

from onerel.gentorsion import (
    Finding,
    SearchConfig,
    check_finding,
    gt_product,
    reduced_words,
    search,
    tau_representatives,
)
from onerel.oracles import BSOracle, FreeOracle, GammaHOracle, GammaOracle, KleinOracle
from onerel.tower import Verdict
from onerel.words import EMPTY, Word, cyclic_permutations, parse_word

P = parse_word


class TestProduct:
    def test_klein_pair(self):
        assert gt_product(P("a"), [EMPTY, P("t")], [0, 0]) == P("a t a t^-1")

    def test_single_factor(self):
        tau = P("a t a t^-1")
        assert gt_product(tau, [EMPTY], [0]) == tau

    def test_shift_in_h(self):
        assert gt_product(P("a[0]"), [EMPTY, EMPTY], [0, 1], GammaHOracle()) == P("a[0] a[1]")

    def test_shift_on_ta_words(self):
        assert gt_product(P("a"), [EMPTY], [2], GammaOracle()) == P("t^2 a t^-2")

    def test_errors(self):
        with pytest.raises(ValueError):
            gt_product(P("a"), [EMPTY, EMPTY], [0])
        with pytest.raises(ValueError):
            gt_product(P("a"), [], [])
        with pytest.raises(ValueError):
            gt_product(P("a"), [EMPTY], [1], KleinOracle())


class TestConfig:
    @pytest.mark.parametrize(
        "kw", [{"tau_max_length": 0}, {"max_factors": 0}, {"budget": 0}, {"shift_range": -1}, {"max_findings": 0}]
    )
    def test_rejects(self, kw):
        with pytest.raises(ValueError):
            SearchConfig(**kw)


class TestEnumeration:
    def test_reduced_words(self):
        words = list(reduced_words([("t", 1), ("t", -1), ("a", 1), ("a", -1)], 2))
        assert len(words) == 12
        assert words[0] == (("t", 1), ("t", 1))

    def test_representatives_cover_orbits(self):
        o = KleinOracle()
        reps = set(tau_representatives(o, 3))
        alphabet = [(g, s) for g in o.generators for s in (1, -1)]
        for w in reduced_words(alphabet, 3):
            w = Word(w)
            if len(w) > 1 and w.letters[0] == w.letters[-1].inverse():
                continue
            orbit = set(cyclic_permutations(w)) | set(cyclic_permutations(w.inverse()))
            assert len(orbit & reps) == 1


class TestSearch:
    def test_klein_first_finding(self):
        rep = search(KleinOracle(), SearchConfig(max_factors=2, max_findings=1))
        (f,) = rep.findings
        assert f.tau == P("a")
        assert f.conjugators == (EMPTY, P("t"))
        assert f.shifts == (0, 0)
        assert check_finding(f, KleinOracle())

    def test_controls_find_nothing(self):
        cfg = SearchConfig(tau_max_length=3, conjugator_radius=2, max_factors=3)
        for oracle in (BSOracle(2), BSOracle(3), FreeOracle()):
            rep = search(oracle, cfg)
            assert rep.findings == [] and rep.inconclusive == 0
            assert rep.examined > 0

    def test_gamma_h_small(self):
        rep = search(GammaHOracle(), SearchConfig(tau_max_length=2, conjugator_radius=1, max_factors=2, shift_range=1))
        assert rep.findings == [] and rep.inconclusive == 0

    def test_deterministic_and_checked(self):
        cfg = SearchConfig(tau_max_length=2, conjugator_radius=1, max_factors=3)
        a, b = search(KleinOracle(), cfg), search(KleinOracle(), cfg)
        assert a.findings == b.findings and a.examined == b.examined
        assert len(a.findings) > 1
        assert all(check_finding(f, KleinOracle()) for f in a.findings)

    def test_cost_order(self):
        rep = search(KleinOracle(), SearchConfig(tau_max_length=2, conjugator_radius=1, max_factors=3))
        costs = [
            (len(f.tau), len(f.conjugators), sum(map(len, f.conjugators)), sum(map(abs, f.shifts)))
            for f in rep.findings
        ]
        assert costs == sorted(costs)

    def test_budget(self):
        rep = search(GammaOracle(), SearchConfig(tau_max_length=2, conjugator_radius=1, max_factors=2, budget=10))
        assert rep.examined == 10 and rep.exhausted

    def test_report_json(self):
        rep = search(KleinOracle(), SearchConfig(max_findings=1)).to_json()
        assert set(rep) >= {"oracle", "config", "findings", "examined", "inconclusive", "elapsed_ms"}
        assert rep["findings"][0] == {"tau": "a", "conjugators": ["1", "t"], "shifts": [0, 0], "product": "a t a t^-1"}
        assert Finding.from_json(rep["findings"][0]).tau == P("a")

    def test_inconclusive_never_counts_as_trivial(self):
        class Unsure(KleinOracle):
            name = "unsure"

            def _decide(self, w):
                return Verdict.INCONCLUSIVE if len(w) > 1 else super()._decide(w)

        rep = search(Unsure(), SearchConfig(max_factors=2))
        assert rep.findings == []
        assert rep.inconclusive > 0


class TestPruningSoundness:
    """Every tau with a witness inside the bounds has its class representative found too."""

    def brute_force(self, oracle, length, radius, r):
        alphabet = [(g, s) for g in oracle.generators for s in (1, -1)]
        conj = [Word(w) for n in range(radius + 1) for w in reduced_words(alphabet, n)]
        hits = set()
        for w in reduced_words(alphabet, length):
            tau = Word(w)
            if len(tau) > 1 and tau.letters[0] == tau.letters[-1].inverse():
                continue
            if oracle.is_trivial(tau) is not Verdict.NONTRIVIAL:
                continue
            for k in range(1, r + 1):
                if any(
                    oracle.is_trivial(gt_product(tau, gs)) is Verdict.TRIVIAL
                    for gs in itertools.product(conj, repeat=k)
                ):
                    hits.add(tau)
                    break
        return hits

    def test_klein(self):
        o = KleinOracle()
        for length in (1, 2, 3):
            hits = self.brute_force(o, length, 1, 2)
            found = {f.tau for f in search(o, SearchConfig(length, 1, 2)).findings}
            for tau in hits:
                orbit = set(cyclic_permutations(tau)) | set(cyclic_permutations(tau.inverse()))
                assert orbit & found, tau


class TestCheck:
    def test_invalid_findings(self):
        o = KleinOracle()
        assert not check_finding(Finding(EMPTY, (EMPTY,), (0,), EMPTY), o)
        tau = P("a")
        assert not check_finding(Finding(tau, (EMPTY,), (0,), tau), o)
        assert not check_finding(Finding(tau, (EMPTY, P("t")), (0, 0), P("a")), o)
        assert not check_finding(Finding(tau, (EMPTY, P("t")), (0, 1), P("a t a t^-1")), o)
