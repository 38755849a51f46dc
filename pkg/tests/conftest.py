import json
import random

import pytest
import structlog

from core.config import settings


@pytest.fixture(autouse=True)
def residue_stability(monkeypatch):
    """Every residue computed under test is re-run with enlarged windows and compared."""
    monkeypatch.setattr(settings, "RESIDUE_STABILITY_CHECK", True)


@pytest.fixture(autouse=True)
def reset_logging():
    """The CLI binds structlog to the stderr of the test that ran it."""
    yield
    structlog.reset_defaults()


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
