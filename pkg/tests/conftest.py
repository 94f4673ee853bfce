import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import config  # noqa: E402
from src.powerset.core import new_ground  # noqa: E402

settings.register_profile("boolring", max_examples=200, deadline=None)
settings.load_profile("boolring")


@pytest.fixture
def g3():
    return new_ground(["a", "b", "c"])


@pytest.fixture
def restore_config():
    """Put back any settings a test overrides."""
    saved = config.as_dict()
    yield config
    for key, value in saved.items():
        setattr(config, key, value)
