from pathlib import Path

import pytest

from curveconfig import catalog

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def t6():
    return catalog.get("t6")


@pytest.fixture
def klein():
    return catalog.get("klein")


@pytest.fixture
def wiman():
    return catalog.get("wiman")
