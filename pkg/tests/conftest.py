import itertools
import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from framedcodes.gf2 import Codeword, LinearCode  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def codes(draw, min_n=1, max_n=10, max_k=None, even=False):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(0, n if max_k is None else min(n, max_k)))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    if even:
        rows = [r ^ 1 if r.bit_count() & 1 else r for r in rows]
    return LinearCode(n, rows)


@st.composite
def code_and_word(draw, **kw):
    c = draw(codes(**kw))
    w = draw(st.integers(0, (1 << c.n) - 1))
    return c, Codeword(c.n, w)


def words(n):
    return st.integers(0, (1 << n) - 1).map(lambda b: Codeword(n, b))


def all_codes(n):
    """Every linear code of length n, each once."""
    seen = set()
    for k in range(n + 1):
        for rows in itertools.combinations(range(1, 1 << n), k):
            c = LinearCode(n, rows)
            if c.dim == k and c not in seen:
                seen.add(c)
                yield c


# acceptance criterion number -> PASS/FAIL line, filled by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
    missing = [k for k in range(1, 11) if k not in ACCEPTANCE]
    for k in missing:
        terminalreporter.write_line(f"criterion {k:2d} [FAIL] did not run to completion")
