import pytest

from entdeg.sweep import SweepConfig, run_sweep


@pytest.fixture(scope="session")
def default_sweep():
    """The four built-in scenarios on the default 200-point grid."""
    return run_sweep(SweepConfig(threads=4))
