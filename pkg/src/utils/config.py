"""
Configuration loading utilities for perm-grammar-calc.
"""
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..core.series import MAX_SERIES_ORDER

WORKERS_ENV = 'GRAMMAR_CALC_WORKERS'

OUTPUT_FORMATS = ('text', 'json')


@dataclass
class VerificationConfig:
    max_n: int = 7
    allow_large: bool = False
    workers: int = 1
    series_order: int = 8


@dataclass
class OutputConfig:
    format: str = 'text'
    report_dir: Path = Path('reports')


@dataclass
class AppConfig:
    """Application configuration."""
    verification: VerificationConfig = field(default_factory=VerificationConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


def _int_field(section: str, data: Dict[str, Any], name: str, default: int, minimum: int,
               maximum: Optional[int] = None) -> int:
    value = data.get(name, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"Invalid {section}.{name} in config: {value!r} (integer >= {minimum} required)")
    if maximum is not None and value > maximum:
        raise ValueError(f"Invalid {section}.{name} in config: {value!r} (must be between {minimum} and {maximum})")
    return value


class ConfigLoader:
    """Loads and validates configuration from YAML files."""

    @staticmethod
    def default() -> AppConfig:
        return ConfigLoader.apply_environment(AppConfig())

    @staticmethod
    def load_config(config_path: Path) -> AppConfig:
        """Load configuration from YAML file."""
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        with open(config_path) as f:
            config_data = yaml.safe_load(f) or {}
        if not isinstance(config_data, dict):
            raise ValueError(f"Config file must contain a mapping: {config_path}")

        verification_data = config_data.get('verification') or {}
        output_data = config_data.get('output') or {}
        for section, data in (('verification', verification_data), ('output', output_data)):
            if not isinstance(data, dict):
                raise ValueError(f"Config section {section} must be a mapping")

        defaults = VerificationConfig()
        allow_large = verification_data.get('allow_large', defaults.allow_large)
        if not isinstance(allow_large, bool):
            raise ValueError(f"Invalid verification.allow_large in config: {allow_large!r}")
        verification = VerificationConfig(
            max_n=_int_field('verification', verification_data, 'max_n', defaults.max_n, 0),
            allow_large=allow_large,
            workers=_int_field('verification', verification_data, 'workers', defaults.workers, 1),
            series_order=_int_field('verification', verification_data, 'series_order',
                                    defaults.series_order, 0, MAX_SERIES_ORDER),
        )

        output_format = output_data.get('format', 'text')
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Invalid output.format in config: {output_format!r}")
        output = OutputConfig(
            format=output_format,
            report_dir=Path(output_data.get('report_dir', 'reports')),
        )

        return ConfigLoader.apply_environment(AppConfig(verification=verification, output=output))

    @staticmethod
    def apply_environment(config: AppConfig) -> AppConfig:
        """Override the worker count from GRAMMAR_CALC_WORKERS when set."""
        raw = os.environ.get(WORKERS_ENV)
        if raw is None or raw.strip() == '':
            return config
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
        if workers < 1:
            raise ValueError(f"{WORKERS_ENV} must be at least 1, got {workers}")
        config.verification.workers = workers
        return config
