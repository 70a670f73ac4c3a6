import os

from hypothesis import HealthCheck, settings, strategies as st

from onerel.words import TowerParams, Word

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

#: one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def indexed_words(window=5, max_size=20, lo=0):
    letter = st.tuples(st.integers(lo, window), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_size).map(Word)


def ta_words(max_size=20):
    letter = st.tuples(st.sampled_from(("t", "a")), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_size).map(Word)


def zero_t_words(max_size=20):
    """Words over {t, a} whose t-exponent sum is zero, built as products of a[n] images."""
    from onerel.words import unrewrite

    return indexed_words(window=4, max_size=max_size // 2, lo=-2).map(unrewrite)


@st.composite
def tower_params(draw, max_s=3, max_m=4, max_len=4):
    s = draw(st.integers(1, max_s))
    m = draw(st.integers(2, max_m))
    body = draw(st.lists(st.integers(0, s - 1), min_size=0, max_size=max_len - 2))
    idx = sorted([0, s - 1] + body) if s > 1 else [0] + body
    idx = draw(st.permutations(idx))
    return TowerParams(s, m, Word((i, 1) for i in idx))
