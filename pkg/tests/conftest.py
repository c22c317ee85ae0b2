import json
from pathlib import Path

import pytest

from sememe_kb import load_dataset, load_taxonomy, read_jsonl

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures" / "mini"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def manifest() -> dict:
    with open(FIXTURE_DIR / "manifest.json", encoding="utf-8") as handle:
        return json.load(handle)


@pytest.fixture(scope="session")
def taxonomy_records() -> list[dict]:
    return list(read_jsonl(FIXTURE_DIR / "taxonomy.jsonl"))


@pytest.fixture(scope="session")
def sense_records() -> list[dict]:
    return list(read_jsonl(FIXTURE_DIR / "senses.jsonl"))


@pytest.fixture(scope="session")
def taxonomy(taxonomy_records):
    return load_taxonomy(taxonomy_records)


@pytest.fixture(scope="session")
def lexicon():
    return load_dataset(FIXTURE_DIR)
