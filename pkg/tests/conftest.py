import random
import sys

import pytest

from herzogfp.core.fields import QQ
from herzogfp.core.polynomial import Polynomial


def random_polynomial(rng: random.Random, nvars: int, max_deg: int, max_terms: int, field=QQ,
                      coeffs=range(-3, 4), homogeneous: int | None = None) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        if homogeneous is not None:
            cuts = sorted(rng.randint(0, homogeneous) for _ in range(nvars - 1))
            m = tuple(b - a for a, b in zip([0] + cuts, cuts + [homogeneous]))
        else:
            m = tuple(rng.randint(0, max_deg) for _ in range(nvars))
            while sum(m) > max_deg:
                m = tuple(max(0, e - 1) for e in m)
        terms[m] = rng.choice([c for c in coeffs if c])
    return Polynomial(nvars, terms, field)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results):
        terminalreporter.write_line(results[criterion])
