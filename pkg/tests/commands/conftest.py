"""
Fixtures for the command-line tests.
"""
import pytest
from click.testing import CliRunner

from main import cli


@pytest.fixture
def run_cli(tmp_path):
    """
    Write a configuration to a temporary file and invoke one subcommand on it.

    Returns (result, output directory).
    """
    def invoke(config_text: str, command: str, *options: str, out: str = "out"):
        config = tmp_path / "run.yaml"
        config.write_text(config_text)
        out_dir = tmp_path / out
        result = CliRunner().invoke(cli, ["--config", str(config), "--out", str(out_dir), *options, command])
        return result, out_dir
    return invoke
