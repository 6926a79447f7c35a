import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "requires_data: needs externally fetched generator files (see docs/data.md)",
    )


def data_dir():
    return os.environ.get("ORBITALG_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def data_file(name):
    """Path of an external generator file, or a skip if it is absent."""
    path = os.path.join(data_dir(), name)
    if not os.path.exists(path):
        pytest.skip(f"external data file {name} not present (see docs/data.md)")
    return path
