import os
import pathlib

import pytest

CONFIG_DIR = pathlib.Path(
    os.environ.get("TOPSKIT_CONFIG_DIR", pathlib.Path(__file__).resolve().parents[2] / "configs")
)


@pytest.fixture
def config_dir():
    return CONFIG_DIR
