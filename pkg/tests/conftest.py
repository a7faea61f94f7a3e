import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("XDELTA_LEVEL_CEILING", raising=False)
    monkeypatch.delenv("XDELTA_FIXTURES_DIR", raising=False)


@pytest.fixture
def forms21():
    from src.formsio import load
    return load(FIXTURES / "21-d1")


@pytest.fixture
def forms30():
    from src.formsio import load
    return load(FIXTURES / "30-d1")


@pytest.fixture
def basis21(forms21):
    return forms21.to_basis("probe")


@pytest.fixture
def basis30(forms30):
    return forms30.to_basis("probe")


@pytest.fixture
def quadrics32():
    from src.formsio import load_quadrics
    return load_quadrics(FIXTURES / "32-d1.quadrics")
