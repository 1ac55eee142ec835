import os

from hypothesis import HealthCheck, settings, strategies as st

from sylow_inv.field import field_of_order
from sylow_inv.poly import MultiPoly

settings.register_profile("ci", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

SMALL_ORDERS = (2, 3, 4, 5, 7, 8, 9, 25, 27)


@st.composite
def field_and_elems(draw, k=3, orders=SMALL_ORDERS):
    ctx = field_of_order(draw(st.sampled_from(orders)))
    elems = [draw(st.integers(0, ctx.r - 1)) for _ in range(k)]
    return ctx, elems


@st.composite
def polys(draw, ctx, n, max_terms=5, max_exp=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(n))
        terms[e] = draw(st.integers(1, ctx.r - 1))
    return MultiPoly(ctx, n, terms)


@st.composite
def unitriangular(draw, ctx, n):
    return tuple(tuple(1 if i == j else (draw(st.integers(0, ctx.r - 1)) if j < i else 0)
                       for j in range(n)) for i in range(n))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
