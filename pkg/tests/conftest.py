"""Test configuration and fixtures for perm-grammar-calc."""

from pathlib import Path

import pytest
from hypothesis import settings

from src.core.perms import Permutation

settings.register_profile('grammar-calc', deadline=None, max_examples=60)
settings.load_profile('grammar-calc')

GOLDEN_DIR = Path(__file__).parent / 'golden'


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text()
    return read


@pytest.fixture
def closing_example():
    return Permutation.parse('1 6 3 2 4 5'), Permutation.parse('1 6 4 2 5 3')


@pytest.fixture
def sample_config_file(tmp_path):
    config_path = tmp_path / 'config.yml'
    config_path.write_text(f"""
verification:
    max_n: 5
    allow_large: false
    workers: 2
    series_order: 6

output:
    format: json
    report_dir: {tmp_path / 'out'}
""")
    return config_path


@pytest.fixture(autouse=True)
def clear_workers_env(monkeypatch):
    monkeypatch.delenv('GRAMMAR_CALC_WORKERS', raising=False)
