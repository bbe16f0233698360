"""
Configuration

Settings come from four layers, later ones winning: built-in defaults,
the JSON config file, ``GSEMI_*`` environment variables (a ``.env`` file is
loaded first) and command-line flags.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator
from pydantic import ValidationError as PydanticValidationError

from ..oracle.fp_linalg import is_prime
from ..qalg import BoundQuiverAlgebra
from ..utils.errors import ParseError, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("config") / "gsemi_config.json"
DEFAULT_PRIME = 101
MAX_PRIME = 2 ** 31

# Environment variable -> config field
ENV_VARIABLES = {
    "GSEMI_SEED": "seed",
    "GSEMI_PRIME": "prime",
    "GSEMI_EXT_BOUND": "ext_bound",
    "GSEMI_LOG_LEVEL": "log_level",
}


class Config(BaseModel):
    """Resolved settings for one gsemi invocation."""

    prime: Optional[int] = Field(
        None, ge=2, le=MAX_PRIME,
        description="Oracle field; null falls back to the algebra file, then 101",
    )
    ext_bound: Optional[int] = Field(
        None, ge=1, description="Ext vanishing depth; null means 2·max l(G) + 2"
    )
    seed: int = Field(0, ge=0, description="Seed for every randomized oracle routine")
    output_format: Literal["text", "json", "dot"] = "text"
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    log_dir: Optional[str] = Field("logs", description="Null disables the log files")
    dump_matrices: Optional[str] = Field(None, description="Directory for CSV matrix dumps")
    input_paths: List[str] = Field(default_factory=list)

    @field_validator("prime")
    @classmethod
    def _prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not is_prime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper(cls, value: Any) -> Any:
        return value.upper() if isinstance(value, str) else value

    def prime_for(self, alg: BoundQuiverAlgebra) -> int:
        """Configured prime, else the algebra's ``field:`` line, else 101."""
        return self.prime or alg.field_char or DEFAULT_PRIME


def _read_config_file(path: Path) -> Dict[str, Any]:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise ValidationError(f"Cannot read config {path}: {exc.strerror}") from None
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: config must be a JSON object")
    return data


def _environment() -> Dict[str, Any]:
    values = {}
    for variable, key in ENV_VARIABLES.items():
        raw = os.environ.get(variable)
        if raw is None or raw.strip() == "":
            continue
        values[key] = raw.strip()
    return values


def load_config(
    config_path: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
    use_env: bool = True,
) -> Config:
    """Resolve the configuration.

    Args:
        config_path: Explicit config file; must exist. Without it the default
            ``config/gsemi_config.json`` is read when present.
        overrides: Values from command-line flags; ``None`` entries are ignored
        use_env: Read ``.env`` and the ``GSEMI_*`` variables

    Raises:
        ValidationError: invalid value in any layer
        ParseError: config file is not valid JSON

    Example:
        >>> load_config(overrides={"prime": 2}).prime
        2
    """
    values: Dict[str, Any] = {}
    if config_path is not None:
        values.update(_read_config_file(Path(config_path)))
        logger.debug(f"Loaded config file {config_path}")
    elif DEFAULT_CONFIG_PATH.exists():
        values.update(_read_config_file(DEFAULT_CONFIG_PATH))
        logger.debug(f"Loaded config file {DEFAULT_CONFIG_PATH}")

    if use_env:
        load_dotenv(override=False)
        env = _environment()
        if env:
            logger.debug(f"Environment overrides: {sorted(env)}")
        values.update(env)

    values.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        return Config.model_validate(values)
    except PydanticValidationError as exc:
        raise ValidationError(f"Invalid configuration: {exc}") from None


def default_config_document() -> str:
    """The config file written by ``setup.sh``."""
    data = Config().model_dump(exclude={"input_paths"})
    return json.dumps(data, indent=2) + "\n"
