from __future__ import annotations

import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("lcpoly", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("lcpoly")


def rationals(bound: int = 30, nonzero: bool = False):
    s = st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))
    return s.filter(lambda v: v != 0) if nonzero else s


def polys(max_degree: int = 8, bound: int = 20):
    from lcpoly.poly import Poly

    return st.lists(rationals(bound), max_size=max_degree + 1).map(Poly)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.TITLES):
        if num not in mod.RESULTS:
            terminalreporter.write_line(f"criterion {num}: NOT RUN  {mod.TITLES[num]}")
            continue
        ok, detail = mod.RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {mod.TITLES[num]} ({detail})")
