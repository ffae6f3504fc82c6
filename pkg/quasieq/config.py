"""Centralised settings backed by pydantic-settings.

All environment variables are read here. Callers should import ``get_settings``
and access configuration via the returned ``Settings`` instance rather than
calling ``os.getenv`` directly.  Variables carry the ``QUASIEQ_`` prefix.
"""

from functools import lru_cache
from typing import Any, Literal

from pydantic import ValidationInfo, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from quasieq.domain.constants import (
    AUTOMORPHISM_FILTER_MAX_ORDER,
    AUTOMORPHISM_MAX_ORDER,
    CERTIFICATE_MAX_ORDER,
    EXHAUSTIVE_MAX_ORDER,
    LOG_FORMAT_DEFAULT,
    LOG_LEVEL_DEFAULT,
    MIN_SEARCH_ORDER,
)
from quasieq.logging_config import get_logger

_logger = get_logger(__name__)

_ORDER_DEFAULTS: dict[str, int] = {
    "automorphism_max_order": AUTOMORPHISM_MAX_ORDER,
    "automorphism_filter_max_order": AUTOMORPHISM_FILTER_MAX_ORDER,
    "certificate_max_order": CERTIFICATE_MAX_ORDER,
    "exhaustive_max_order": EXHAUSTIVE_MAX_ORDER,
}


class Settings(BaseSettings):
    """Search bounds and logging options derived from environment variables.

    A ``.env`` file in the working directory is loaded automatically when
    present, but environment variables always take precedence.

    Invalid values are logged as warnings and replaced with their defaults (or
    clamped to the minimum order) rather than raising a validation error.
    """

    model_config = SettingsConfigDict(
        env_prefix="QUASIEQ_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = LOG_LEVEL_DEFAULT
    log_format: Literal["json", "console"] = LOG_FORMAT_DEFAULT

    # Search bounds
    automorphism_max_order: int = AUTOMORPHISM_MAX_ORDER
    automorphism_filter_max_order: int = AUTOMORPHISM_FILTER_MAX_ORDER
    certificate_max_order: int = CERTIFICATE_MAX_ORDER
    exhaustive_max_order: int = EXHAUSTIVE_MAX_ORDER

    @field_validator(
        "automorphism_max_order",
        "automorphism_filter_max_order",
        "certificate_max_order",
        "exhaustive_max_order",
        mode="before",
    )
    @classmethod
    def _coerce_order_bound(cls, v: Any, info: ValidationInfo) -> int:
        name = str(info.field_name)
        default = _ORDER_DEFAULTS[name]
        try:
            parsed = int(v)
        except (ValueError, TypeError):
            _logger.warning(
                "Invalid %s value %r; using default %d", name.upper(), v, default
            )
            return default
        if parsed < MIN_SEARCH_ORDER:
            _logger.warning(
                "%s %d is below minimum %d; clamping to minimum",
                name.upper(),
                parsed,
                MIN_SEARCH_ORDER,
            )
            return MIN_SEARCH_ORDER
        return parsed

    @field_validator("log_level", mode="before")
    @classmethod
    def _coerce_log_level(cls, v: Any) -> str:
        if v is None:
            return LOG_LEVEL_DEFAULT
        level = str(v).strip().upper()
        allowed = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}
        if level not in allowed:
            _logger.warning("Invalid LOG_LEVEL value %r; using default %s", v, LOG_LEVEL_DEFAULT)
            return LOG_LEVEL_DEFAULT
        return level

    @field_validator("log_format", mode="before")
    @classmethod
    def _coerce_log_format(cls, v: Any) -> str:
        if v is None:
            return LOG_FORMAT_DEFAULT
        fmt = str(v).strip().lower()
        if fmt not in {"json", "console"}:
            _logger.warning("Invalid LOG_FORMAT value %r; using default %s", v, LOG_FORMAT_DEFAULT)
            return LOG_FORMAT_DEFAULT
        return fmt


@lru_cache
def get_settings() -> Settings:
    """Return the cached settings singleton."""
    return Settings()
