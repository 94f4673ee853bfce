import os
from typing import Any, Dict, List

from src.error_handling.exceptions import ConfigurationException
from src.error_handling.validators import validate_setting


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigurationException(f"{name} must be an integer, got '{raw}'", config_key=name) from e


class Config:
    """Configuration management for the Boolean ring kit"""

    # Exhaustive oracles are exponential; ORACLE_MAX may never exceed the hard cap
    ORACLE_HARD_CAP: int = 5

    def __init__(self):
        # Ground sets
        self.GROUND_MAX: int = _env_int("BOOLRING_GROUND_MAX", 64)

        # Exhaustive oracle bounds
        self.ORACLE_MAX: int = _env_int("BOOLRING_ORACLE_MAX", 4)
        self.SUBSET_FILTER_MAX: int = _env_int("BOOLRING_SUBSET_FILTER_MAX", 3)
        self.STONE_MAX: int = _env_int("BOOLRING_STONE_MAX", 16)
        self.STONE_EXHAUSTIVE_MAX: int = _env_int("BOOLRING_STONE_EXHAUSTIVE_MAX", 4)

        # Integer demo
        self.INTDEMO_MAX: int = _env_int("BOOLRING_INTDEMO_MAX", 10 ** 12)
        self.INTDEMO_CHECK_MAX: int = _env_int("BOOLRING_INTDEMO_CHECK_MAX", 10 ** 6)
        self.DIVISIBILITY_WINDOW: int = _env_int("BOOLRING_DIVISIBILITY_WINDOW", 10 ** 4)

        # Randomized verification
        self.RANDOM_SEED: int = _env_int("BOOLRING_RANDOM_SEED", 20241019)
        self.RANDOM_TRIALS: int = _env_int("BOOLRING_RANDOM_TRIALS", 10 ** 4)

        # Logging Configuration
        self.LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
        self.LOG_JSON: bool = os.getenv("LOG_JSON", "false").lower() == "true"
        self.LOG_FILE_PATH: str = os.getenv("LOG_FILE_PATH", "")

    # Bounds checked by validate(): key -> (minimum, maximum or None)
    LIMITS = {
        "GROUND_MAX": (0, None),
        "ORACLE_MAX": (0, ORACLE_HARD_CAP),
        "SUBSET_FILTER_MAX": (0, 3),
        "STONE_MAX": (1, None),
        "STONE_EXHAUSTIVE_MAX": (1, 8),
        "INTDEMO_MAX": (2, None),
        "INTDEMO_CHECK_MAX": (2, None),
        "DIVISIBILITY_WINDOW": (1, None),
        "RANDOM_SEED": (0, None),
        "RANDOM_TRIALS": (1, None),
    }

    def validate(self) -> List[str]:
        """Validate all numeric settings; returns the names checked"""
        for key, (low, high) in self.LIMITS.items():
            validate_setting(getattr(self, key), key, low, high)
        if self.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationException(f"Unknown LOG_LEVEL '{self.LOG_LEVEL}'", config_key="LOG_LEVEL")
        return list(self.LIMITS)

    def override(self, **values: Any) -> "Config":
        """Apply overrides (e.g. from CLI flags) and re-validate"""
        for key, value in values.items():
            if value is None:
                continue
            if not hasattr(self, key):
                raise ConfigurationException(f"Unknown configuration key '{key}'", config_key=key)
            setattr(self, key, value)
        self.validate()
        return self

    def as_dict(self) -> Dict[str, Any]:
        return {key: getattr(self, key) for key in (*self.LIMITS, "LOG_LEVEL", "LOG_JSON", "LOG_FILE_PATH")}

    @classmethod
    def get_env_example(cls) -> str:
        """Get example environment configuration"""
        return """
# Boolean ring kit environment configuration
BOOLRING_GROUND_MAX=64
BOOLRING_ORACLE_MAX=4
BOOLRING_SUBSET_FILTER_MAX=3
BOOLRING_STONE_MAX=16
BOOLRING_STONE_EXHAUSTIVE_MAX=4
BOOLRING_INTDEMO_MAX=1000000000000
BOOLRING_INTDEMO_CHECK_MAX=1000000
BOOLRING_DIVISIBILITY_WINDOW=10000
BOOLRING_RANDOM_SEED=20241019
BOOLRING_RANDOM_TRIALS=10000
LOG_LEVEL=WARNING
LOG_JSON=false
LOG_FILE_PATH=
"""


# Global config instance
config = Config()
