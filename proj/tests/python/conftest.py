import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture
def corpus_dir():
    return ROOT / "corpus"


@pytest.fixture
def schema_dir():
    return ROOT / "schemas"


@pytest.fixture
def cli_path():
    p = os.environ.get("DELTAFORGE_CLI")
    if not p:
        pytest.skip("DELTAFORGE_CLI not set")
    return p
