"""
Write the reference run configurations.

Usage:
    python scripts/write_sample_configs.py [DIRECTORY]
"""
import os
import sys
from pathlib import Path

import yaml

# Add parent directory to path to import from project
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))

from models.config import parse_run_config  # noqa: E402

CAPUTO_HALF = {"variant": "caputo", "alpha": 0.5}
RIESZ = {"variant": "riesz", "beta": 0.75}
TEMPERED = {"variant": "tempered_riesz", "amplitude": 1.0, "beta": 0.5, "truncation": 1.0}

SAMPLE_CONFIGS = {
    "cauchy_gaussian.yaml": ("cauchy", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": RIESZ,
        "grid": {"half_width": 40.0, "points": 2048},
        "initial": {"kind": "gaussian", "center": 0.0, "sigma": 1.0},
        "times": [0.1, 0.5, 1.0, 2.0, 5.0, 10.0],
    }),
    "ibvp_tempered.yaml": ("ibvp", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": TEMPERED,
        "ibvp": {"half_width": 1.0, "points": 1024},
        "initial": {"kind": "gaussian", "center": 0.0, "sigma": 0.2},
        "times": [0.01, 0.1, 1.0, 10.0],
    }),
    "ibvp_eigenmode_quick.yaml": ("ibvp", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": TEMPERED,
        "ibvp": {"half_width": 1.0, "points": 64},
        "initial": {"kind": "eigenmode", "j": 1},
        "times": [0.0, 0.1, 1.0, 10.0],
    }),
    "mc_smoke.yaml": ("mc", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": TEMPERED,
        "mc": {"particles": 1000, "seed": 7},
        "times": [0.5, 1.0],
        "checks": False,
    }),
    "mc_finite_msd.yaml": ("mc", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": TEMPERED,
        "mc": {"particles": 100000, "seed": 2024},
        "times": [0.5, 1.0, 2.0, 4.0],
    }),
    "mc_compare_pde.yaml": ("mc", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": RIESZ,
        "grid": {"half_width": 40.0, "points": 2048},
        "mc": {"particles": 100000, "seed": 2024, "scale": 0.01, "compare_pde": True, "xi": [0.5, 1.0]},
        "times": [1.0, 4.0],
    }),
    "msd_tempered.yaml": ("msd", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": TEMPERED,
        "times": [0.5, 1.0, 2.0, 4.0],
    }),
    "msd_riesz.yaml": ("msd", {
        "time_kernel": CAPUTO_HALF,
        "space_kernel": RIESZ,
        "times": [1.0],
    }),
    "kernels.yaml": ("kernels", {
        "time_kernel": {"variant": "tempered_caputo", "alpha": 0.5, "rate": 1.0},
        "space_kernel": TEMPERED,
    }),
}


def write_sample_configs(directory: str | Path = "configs") -> list[Path]:
    """Validate every sample against its target and write it as YAML."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (target, content) in SAMPLE_CONFIGS.items():
        text = yaml.safe_dump(content, sort_keys=False)
        parse_run_config(text, target, source=name)
        path = directory / name
        path.write_text(text)
        written.append(path)
    return written


if __name__ == "__main__":
    for path in write_sample_configs(sys.argv[1] if len(sys.argv) > 1 else "configs"):
        print(f"wrote {path}")
