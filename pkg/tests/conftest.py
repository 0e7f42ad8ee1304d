from fractions import Fraction

from hypothesis import settings, strategies as st

from spehred import InductionProblem

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


def problems(max_value=8):
    return st.builds(
        InductionProblem,
        st.integers(1, max_value),
        st.integers(1, max_value),
        st.integers(1, max_value),
        st.integers(1, max_value),
    )


def frac_range(c, d):
    """|c-d|/2, ..., (c+d-2)/2 as Fractions; written independently of the package."""
    lo = Fraction(abs(c - d), 2)
    return [lo + i for i in range(min(c, d))]


def count(values):
    out = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


def alpha_poles_oracle(a, b, c, d):
    """w-location -> multiplicity of the poles of alpha, by enumeration."""
    return count(j - k for j in frac_range(c, d) for k in frac_range(a, b))


def beta_poles_oracle(a, b, c, d):
    return count(-(j + k + 1) for j in frac_range(c, d) for k in frac_range(a, b))


def as_fracs(multiset):
    return {m.to_fraction(): v for m, v in multiset.items()}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
