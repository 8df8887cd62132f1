from pathlib import Path

import pytest

from modinv.engine import GroupSpec
from modinv.matgroup import enumerate_group

GROUPS = Path(__file__).resolve().parent.parent / "groups"
ALL_SPECS = sorted(p.stem for p in GROUPS.glob("*.json"))


def load_spec(name):
    return GroupSpec.load(GROUPS / f"{name}.json")


def load_group(name):
    spec = load_spec(name)
    return enumerate_group(spec.generators, spec.cap, field=spec.field, n=spec.n)


@pytest.fixture
def group():
    return load_group


def make_group(field, gens, dim=None):
    """Enumerate a group from a field descriptor and nested-list generators."""
    dim = dim or len(gens[0])
    spec = GroupSpec.from_json({"field": field, "dim": dim, "generators": gens})
    return enumerate_group(spec.generators, spec.cap, field=spec.field, n=spec.n)


QQ = {"kind": "rational"}


# ------------------------------------------------- acceptance result lines

ACCEPTANCE_RESULTS = {}


class _Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        line = f"criterion {self.number} [{self.title}]: {status}"
        ACCEPTANCE_RESULTS[self.number] = line
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[k])
