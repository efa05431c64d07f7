import logging
import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from .errors import ConfigError

_DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@dataclass
class Settings:
    # Truncation
    order: int
    # Fixtures
    data_dir: str
    # Property suites
    property_cases: int
    seed: int
    # Output
    log_level: str
    progress: bool


def _int_env(name: str, default: str) -> int:
    raw = os.getenv(name, default)
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} deve ser inteiro, recebido {raw!r}")


def load_settings() -> Settings:
    load_dotenv()
    order = _int_env("RIORDAN_ORDER", "24")
    if order < 1:
        raise ConfigError(f"RIORDAN_ORDER deve ser >= 1, recebido {order}")
    log_level = os.getenv("RIORDAN_LOG_LEVEL", "WARNING").upper()
    if not isinstance(logging.getLevelName(log_level), int):
        raise ConfigError(f"RIORDAN_LOG_LEVEL invalido: {log_level!r}")
    return Settings(
        order=order,
        data_dir=os.getenv("RIORDAN_DATA_DIR", str(_DEFAULT_DATA_DIR)),
        property_cases=_int_env("RIORDAN_PROPERTY_CASES", "200"),
        seed=_int_env("RIORDAN_SEED", "20140101"),
        log_level=log_level,
        progress=os.getenv("RIORDAN_PROGRESS", "true").lower() in ("1", "true", "yes"),
    )
