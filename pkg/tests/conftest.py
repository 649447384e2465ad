from functools import lru_cache
from pathlib import Path

import pytest

from omk.cli import build_group, load_group_spec, pair_data_from_dict, _read_json

DATA = Path(__file__).resolve().parents[1] / "src" / "omk" / "data"
GROUP_FILES = sorted((DATA / "groups").glob("*.json"))
PAIR_FILES = sorted((DATA / "pairs").glob("*.json"))


@lru_cache(maxsize=None)
def load_group(name):
    return build_group(load_group_spec(DATA / "groups" / f"{name}.json"))


@lru_cache(maxsize=None)
def load_pair(name):
    return pair_data_from_dict(_read_json(DATA / "pairs" / f"{name}.json"))[0]


@pytest.fixture(scope="session")
def q8():
    return load_group("q8")


@pytest.fixture(scope="session")
def all_groups():
    return {p.stem: load_group(p.stem) for p in GROUP_FILES}
