from __future__ import annotations

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from zzk.zeros import CACHED_NAME, bundled_zeros, cache_dir, load_zeros

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"


def large_table_path() -> Path | None:
    env = os.environ.get("ZZK_ZEROS")
    if env and Path(env).exists():
        return Path(env)
    p = cache_dir() / CACHED_NAME
    return p if p.exists() else None


@pytest.fixture(scope="session")
def bundled():
    return bundled_zeros()


@pytest.fixture(scope="session")
def zeros_100k():
    p = large_table_path()
    if p is None:
        pytest.skip("100k zeros table not cached; run `zzk fetch --preset odlyzko-100k`")
    return load_zeros(p)


@pytest.fixture(scope="session")
def best_table(bundled):
    """The 100k table when cached, otherwise the bundled 2k fixture."""
    p = large_table_path()
    return load_zeros(p) if p is not None else bundled
