import csv
from pathlib import Path

import pytest

from moddecomp import dims

GOLDEN = Path(__file__).parent / "golden"


def load_golden(name: str) -> dict[int, list[int]]:
    """Golden rows keyed by level, all remaining cells as ints."""
    with open(GOLDEN / f"{name}.csv", newline="") as fh:
        reader = csv.reader(fh)
        next(reader)
        return {int(r[0]): [int(x) for x in r[1:]] for r in reader}


@pytest.fixture(autouse=True)
def _fresh_s1_table(monkeypatch):
    monkeypatch.delenv(dims.S1_ENV_VAR, raising=False)
    dims.reset_default_table()
    yield
    dims.reset_default_table()
