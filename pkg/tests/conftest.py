import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def fixture_jsonl() -> Path:
    return DATA_DIR / "fixture_shares.jsonl"


@pytest.fixture
def fixture_csv() -> Path:
    return DATA_DIR / "fixture_shares.csv"
