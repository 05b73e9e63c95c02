"""Test configuration loading and validation."""

from pathlib import Path

import pytest

from src.utils.config import ConfigLoader


def test_config_loading(sample_config_file, tmp_path):
    config = ConfigLoader.load_config(sample_config_file)

    assert config.verification.max_n == 5
    assert config.verification.allow_large is False
    assert config.verification.workers == 2
    assert config.verification.series_order == 6
    assert config.output.format == 'json'
    assert config.output.report_dir == tmp_path / 'out'


def test_config_defaults(tmp_path):
    config_path = tmp_path / 'empty.yml'
    config_path.write_text('')
    config = ConfigLoader.load_config(config_path)

    assert config.verification.max_n == 7
    assert config.verification.workers == 1
    assert config.output.format == 'text'
    assert config.output.report_dir == Path('reports')


def test_config_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ConfigLoader.load_config(tmp_path / 'missing.yml')


@pytest.mark.parametrize('body', [
    'verification:\n    max_n: -1\n',
    'verification:\n    workers: 0\n',
    'verification:\n    series_order: 11\n',
    'verification:\n    series_order: -1\n',
    'verification:\n    max_n: seven\n',
    'verification:\n    allow_large: maybe\n',
    'output:\n    format: xml\n',
    'verification: [1, 2]\n',
    '- just a list\n',
])
def test_config_invalid_values(tmp_path, body):
    config_path = tmp_path / 'invalid_config.yml'
    config_path.write_text(body)

    with pytest.raises(ValueError):
        ConfigLoader.load_config(config_path)


def test_environment_overrides_workers(sample_config_file, monkeypatch):
    monkeypatch.setenv('GRAMMAR_CALC_WORKERS', '4')
    assert ConfigLoader.load_config(sample_config_file).verification.workers == 4
    assert ConfigLoader.default().verification.workers == 4


@pytest.mark.parametrize('value', ['zero', '0'])
def test_environment_rejects_bad_workers(monkeypatch, value):
    monkeypatch.setenv('GRAMMAR_CALC_WORKERS', value)
    with pytest.raises(ValueError):
        ConfigLoader.default()


def test_series_order_accepts_upper_bound(tmp_path):
    config_path = tmp_path / 'bounded_config.yml'
    config_path.write_text('verification:\n    series_order: 10\n')

    assert ConfigLoader.load_config(config_path).verification.series_order == 10
