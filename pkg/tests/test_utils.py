import logging
import math

import pytest

from src.utils.config import DEFAULT_CONFIG_PATH, DEFAULTS, load_config, resolve_workers
from src.utils.errors import ManifestError
from src.utils.logger import setup_logger, setup_pipeline_logger
from src.utils.manifest import expand_parameters, read_manifest
from src.utils.parallel import parallel_map


def test_repository_config_matches_defaults():
    """Test the shipped config.yaml restates the built-in defaults."""
    assert DEFAULT_CONFIG_PATH.exists()
    assert load_config() == DEFAULTS


def test_config_override_is_merged(tmp_path):
    """Test a partial file overrides only the keys it names."""
    path = tmp_path / 'config.yaml'
    path.write_text('series:\n  max_terms: 50\npaths:\n  output_dir: elsewhere\n')
    config = load_config(path)
    assert config['series']['max_terms'] == 50
    assert config['series']['rel_tol'] == DEFAULTS['series']['rel_tol']
    assert config['paths']['output_dir'] == 'elsewhere'
    assert config['paths']['logs_dir'] == DEFAULTS['paths']['logs_dir']


def test_config_errors(tmp_path):
    """Test missing, malformed and non-mapping files."""
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / 'missing.yaml')
    bad = tmp_path / 'bad.yaml'
    bad.write_text('series: [unclosed\n')
    with pytest.raises(ManifestError):
        load_config(bad)
    scalar = tmp_path / 'scalar.yaml'
    scalar.write_text('42\n')
    with pytest.raises(ManifestError):
        load_config(scalar)


def test_resolve_workers(monkeypatch):
    """Test the environment variable, the configured default and the CPU fallback."""
    monkeypatch.setenv('WRIGHTLAB_WORKERS', '3')
    assert resolve_workers(DEFAULTS) == 3
    monkeypatch.setenv('WRIGHTLAB_WORKERS', '0')
    assert resolve_workers(DEFAULTS) == 1
    monkeypatch.setenv('WRIGHTLAB_WORKERS', 'many')
    with pytest.raises(ManifestError):
        resolve_workers(DEFAULTS)
    monkeypatch.delenv('WRIGHTLAB_WORKERS')
    assert resolve_workers({'parallel': {'default_workers': 2}}) == 2
    assert resolve_workers(DEFAULTS) >= 1


def test_setup_logger_adds_one_handler():
    """Test repeated setup does not duplicate handlers."""
    first = setup_logger('UtilsTestLogger')
    second = setup_logger('UtilsTestLogger')
    assert first is second
    assert len(second.handlers) == 1
    assert second.level == logging.INFO


def test_pipeline_logger():
    """Test the command-line logger has a console handler."""
    logger = setup_pipeline_logger(None)
    assert logger.name == 'WrightLabPipeline'
    assert any(isinstance(h, logging.StreamHandler) for h in logger.handlers)


def test_read_manifest(tmp_path):
    """Test list extraction and rejected documents."""
    path = tmp_path / 'm.yaml'
    path.write_text('items:\n  - {name: a}\n  - {name: b}\n')
    assert [e['name'] for e in read_manifest(path, 'items')] == ['a', 'b']
    assert read_manifest(path, 'other') == []
    with pytest.raises(ManifestError):
        read_manifest(tmp_path / 'missing.yaml', 'items')
    path.write_text('items:\n  - just a string\n')
    with pytest.raises(ManifestError):
        read_manifest(path, 'items')
    path.write_text('- a\n- b\n')
    with pytest.raises(ManifestError):
        read_manifest(path, 'items')


def test_expand_parameters():
    """Test cases combined with vary as a cartesian product."""
    combos = expand_parameters({'cases': [{'a': 1}, {'a': 2}], 'vary': {'b': [3, 4]}})
    assert combos == [{'a': 1, 'b': 3}, {'a': 1, 'b': 4}, {'a': 2, 'b': 3}, {'a': 2, 'b': 4}]
    assert expand_parameters({}) == [{}]
    with pytest.raises(ManifestError):
        expand_parameters({'name': 'x', 'vary': {'b': []}})
    with pytest.raises(ManifestError):
        expand_parameters({'name': 'x', 'cases': ['not a mapping']})


@pytest.mark.parametrize('workers', [1, 2])
def test_parallel_map_preserves_order(workers):
    """Test in-process and pooled evaluation return results in input order."""
    items = [float(i) for i in range(20)]
    assert parallel_map(math.sqrt, items, workers=workers) == [math.sqrt(x) for x in items]
    assert parallel_map(math.sqrt, [], workers=workers) == []


if __name__ == '__main__':
    pytest.main(['-v'])
