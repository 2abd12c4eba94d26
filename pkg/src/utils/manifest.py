"""YAML manifest reading shared by the pair, limit and sweep catalogs."""
import itertools
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml

from src.utils.errors import ManifestError


def read_manifest(path: Union[str, Path], key: str) -> List[Dict[str, Any]]:
    """
    Read the list stored under ``key`` in a YAML manifest.

    An empty file or a missing key gives an empty list.

    Args:
        path (Union[str, Path]): Manifest file
        key (str): Top-level key holding the entries

    Returns:
        List[Dict[str, Any]]: Entries as mappings
    """
    try:
        with open(path, 'r') as f:
            document = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ManifestError(f"Malformed manifest {path}: {str(e)}") from e
    except OSError as e:
        raise ManifestError(f"Cannot read manifest {path}: {str(e)}") from e

    if document is None:
        return []
    if not isinstance(document, dict):
        raise ManifestError(f"Manifest {path} must be a mapping with a '{key}' list")
    entries = document.get(key) or []
    if not isinstance(entries, list):
        raise ManifestError(f"Manifest {path}: '{key}' must be a list")
    for entry in entries:
        if not isinstance(entry, dict):
            raise ManifestError(f"Manifest {path} has a non-mapping entry: {entry!r}")
    return entries


def expand_parameters(entry: Dict[str, Any]) -> List[Dict[str, Any]]:
    """
    Parameter sets of one entry.

    ``cases`` lists explicit sets; ``vary`` maps names to value lists that
    are combined with every case as a cartesian product.

    Args:
        entry (Dict[str, Any]): Manifest entry

    Returns:
        List[Dict[str, Any]]: One mapping per combination, in manifest order
    """
    cases = entry.get('cases') or [{}]
    vary = entry.get('vary') or {}
    if not isinstance(cases, list) or not isinstance(vary, dict):
        raise ManifestError(f"Entry {entry.get('name')!r}: 'cases' must be a list and 'vary' a mapping")
    keys = list(vary)
    for key in keys:
        if not isinstance(vary[key], list) or not vary[key]:
            raise ManifestError(f"Entry {entry.get('name')!r}: vary.{key} must be a non-empty list")

    combos = []
    for case in cases:
        if not isinstance(case, dict):
            raise ManifestError(f"Entry {entry.get('name')!r}: every case must be a mapping")
        for values in itertools.product(*(vary[k] for k in keys)):
            params = dict(case)
            params.update(zip(keys, values))
            combos.append(params)
    return combos
