import json
import os
from typing import List, Optional

from dto.cycle_index import CycleIndex
from dto.exceptions import SpeciesError
from util.cycle_index_text import parse_cycle_index

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures')
MANIFEST_FILE = 'manifest.json'


def _read_manifest(fixtures_dir: str) -> dict:
    path = os.path.join(fixtures_dir, MANIFEST_FILE)
    try:
        with open(path, encoding='utf-8') as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise SpeciesError(f"Malformed fixture manifest {path}: {e}") from e


def _require(entries: List[dict], keys: tuple, fixtures_dir: str) -> List[dict]:
    try:
        for entry in entries:
            for key in keys:
                if key not in entry:
                    raise KeyError(key)
    except (KeyError, TypeError) as e:
        raise SpeciesError(f"Malformed fixture manifest in {fixtures_dir}: {e}") from e
    return entries


def load_manifest(fixtures_dir: str = FIXTURES_DIR) -> List[dict]:
    """Load the cycle-index fixtures of the manifest.

    Args:
        fixtures_dir: Directory holding `manifest.json` and the cycle-index files.

    Returns:
        One dict per fixture with keys name, file, degree, source, sequences, flags
        and optionally molecular and molecular_degree.

    Raises:
        SpeciesError: If the manifest is missing a required key or is not valid JSON.
    """
    manifest = _read_manifest(fixtures_dir)
    if not isinstance(manifest, dict) or 'fixtures' not in manifest:
        raise SpeciesError(f"Malformed fixture manifest in {fixtures_dir}: no fixtures list")
    return _require(manifest['fixtures'], ('name', 'file', 'degree'), fixtures_dir)


def load_count_tables(fixtures_dir: str = FIXTURES_DIR) -> List[dict]:
    """Printed count series of the manifest: name, source and `[m, n, count]` rows per kind."""
    manifest = _read_manifest(fixtures_dir)
    tables = manifest.get('counts', []) if isinstance(manifest, dict) else []
    return _require(tables, ('name',), fixtures_dir)


def read_fixture(fixture: dict, sorts: int, fixtures_dir: str = FIXTURES_DIR,
                 maxdeg: Optional[int] = None) -> CycleIndex:
    """Parse a fixture file; lines starting with `#` are comments."""
    path = os.path.join(fixtures_dir, fixture['file'])
    with open(path, encoding='utf-8') as fh:
        text = " ".join(line.strip() for line in fh if line.strip() and not line.lstrip().startswith('#'))
    return parse_cycle_index(text, sorts=sorts, maxdeg=fixture['degree'] if maxdeg is None else maxdeg)
