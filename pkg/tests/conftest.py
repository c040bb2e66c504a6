import os

import pytest
from hypothesis import HealthCheck, settings

from hullforge.constructions import EUCLIDEAN_THEOREMS, HERMITIAN_THEOREMS, admissible_specs, construct

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_MAX_EXAMPLES", 60)),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

EUCLIDEAN_QS = (3, 4, 5, 7, 8, 9, 11, 13)
HERMITIAN_QS = (3, 4, 5, 7)
MAX_LENGTH = 60


def sweep_specs():
    for theorem in EUCLIDEAN_THEOREMS:
        for q in EUCLIDEAN_QS:
            yield from admissible_specs(theorem, q, MAX_LENGTH)
    for theorem in HERMITIAN_THEOREMS:
        for q in HERMITIAN_QS:
            yield from admissible_specs(theorem, q, MAX_LENGTH)


@pytest.fixture(scope="session")
def sweep():
    """Every in-precondition construction at desk scale, certified."""
    return [construct(spec) for spec in sweep_specs()]


# acceptance results, printed once at the end of the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: (int(s.split("/")[0]), s)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")
