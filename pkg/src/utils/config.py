"""Configuration loading for config.yaml."""
import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from src.utils.errors import ManifestError

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / 'config.yaml'

DEFAULTS: Dict[str, Any] = {
    'series': {
        'rel_tol': 1.0e-13,
        'abs_tol': 1.0e-300,
        'max_terms': 2000,
        'consecutive_small_terms': 3,
        'cross_check_tol': 1.0e-10,
        'max_cancellation_digits': 9.0,
    },
    'quadrature': {
        'abs_tol': 1.0e-10,
        'rel_tol': 1.0e-10,
        'max_subdivisions': 200,
        'tail_safety': 10.0,
    },
    'bessel': {
        'order_derivative_abs_tol': 1.0e-9,
    },
    'mainardi': {
        'tail_log_floor': 18.5,
    },
    'lamborn': {
        'tail_cut': 100.0,
        'orders': [101, 201, 401],
    },
    'verification': {
        'pair_rel_tol': 1.0e-6,
        'pair_abs_tol': 1.0e-8,
        'pointwise_rel_tol': 1.0e-8,
        'limit_rel_tol': 1.0e-2,
        'adjudication_tol': 1.0e-6,
        'linearity_seed': 20240611,
    },
    'paths': {
        'manifests_dir': 'manifests',
        'output_dir': 'output',
        'logs_dir': 'logs',
    },
    'parallel': {
        'env_var': 'WRIGHTLAB_WORKERS',
        'default_workers': None,
    },
    'logging': {
        'level': 'INFO',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'file': 'wrightlab.log',
    },
}


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Load configuration from a YAML file, falling back to built-in defaults.

    Args:
        path (Optional[Union[str, Path]]): YAML file, defaults to the repository config.yaml

    Returns:
        Dict[str, Any]: Merged configuration
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        if path is not None:
            raise FileNotFoundError(f"Config file not found: {config_path}")
        return copy.deepcopy(DEFAULTS)

    try:
        with open(config_path, 'r') as f:
            loaded = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ManifestError(f"Malformed config file {config_path}: {str(e)}") from e

    if not isinstance(loaded, dict):
        raise ManifestError(f"Config file {config_path} must contain a mapping")
    return _deep_merge(DEFAULTS, loaded)


def resolve_workers(config: Optional[Dict[str, Any]] = None) -> int:
    """
    Number of worker processes for sweeps and suites.

    The environment variable named in config['parallel']['env_var'] wins,
    then config['parallel']['default_workers'], then the machine's CPU count.
    """
    parallel = (config or DEFAULTS).get('parallel', DEFAULTS['parallel'])
    env_var = parallel.get('env_var') or DEFAULTS['parallel']['env_var']
    raw = os.environ.get(env_var)
    if raw is not None and raw.strip():
        try:
            workers = int(raw)
        except ValueError as e:
            raise ManifestError(f"{env_var} must be an integer, got {raw!r}") from e
        return max(1, workers)

    default = parallel.get('default_workers')
    if default:
        return max(1, int(default))
    return os.cpu_count() or 1
