"""Shared test configuration: deterministic hypothesis runs."""

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

# tests import the oracle module directly (tests/ is not a package)
sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")
