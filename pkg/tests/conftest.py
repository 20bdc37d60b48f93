"""
Pytest configuration and shared fixtures.
"""
import os

os.environ.setdefault("ENVIRONMENT", "testing")

import pytest  # noqa: E402

from models.kernel import CaputoKernel, RieszKernel, TemperedCaputoKernel, TemperedRieszKernel  # noqa: E402
from storage.csv_store import close_output_store, open_output_store  # noqa: E402


@pytest.fixture
def caputo_half():
    return CaputoKernel(alpha=0.5)


@pytest.fixture
def tempered_caputo():
    return TemperedCaputoKernel(alpha=0.5, rate=1.0)


@pytest.fixture
def riesz():
    return RieszKernel(beta=0.75)


@pytest.fixture
def tempered_riesz():
    return TemperedRieszKernel(amplitude=1.0, beta=0.5, truncation=1.0)


@pytest.fixture
def output_dir(tmp_path):
    """
    Open the output store on a temporary directory for each test.
    """
    path = open_output_store(tmp_path / "out")
    yield path
    close_output_store()
