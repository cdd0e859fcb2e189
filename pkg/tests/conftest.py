import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cliffrank import Gaussian, Multivector, Signature

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: list[str] = []


@st.composite
def signatures(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    p = draw(st.integers(0, n))
    return Signature(p, n - p)


small_ints = st.integers(-3, 3)
gaussians = st.builds(Gaussian, small_ints, small_ints)


@st.composite
def multivectors(draw, sig, max_terms=6):
    terms = draw(st.dictionaries(st.integers(0, (1 << sig.n) - 1), gaussians, max_size=max_terms))
    return Multivector(sig, terms)


@st.composite
def lie_elements(draw, sig, max_terms=6):
    """Elements with x* = -x: a_k times a real coefficient on each grade-k blade."""
    from cliffrank.subalgebras import coefficient

    blades = draw(st.lists(st.integers(0, (1 << sig.n) - 1), max_size=max_terms, unique=True))
    return Multivector(sig, {b: coefficient(b.bit_count()) * draw(small_ints) for b in blades})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
