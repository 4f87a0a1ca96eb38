from pathlib import Path

import pytest
from hypothesis import settings

from g2sca.sca import SCAState

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


def load_rows(name):
    rows = []
    for line in (GOLDEN / name).read_text(encoding="utf-8").splitlines():
        rows.append(SCAState.parse(line.split(":", 1)[1]))
    return rows


@pytest.fixture
def golden():
    return load_rows
