import sys
from importlib import resources
from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def petersen_path() -> Path:
    with resources.as_file(
            resources.files("cubicmai").joinpath("data/petersen.txt")) as p:
        yield Path(p)


@pytest.fixture(scope="session")
def petersen(petersen_path):
    from cubicmai.graphs import read_edge_list
    return read_edge_list(petersen_path)
