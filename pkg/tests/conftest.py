import pytest
from scipy.constants import hbar as HBAR

from cavitybell.config import ScenarioConfig
from cavitybell.wavepackets import PhysicalParams

# Coarse enough to keep the oracle fast, fine enough for 1e-8 overlaps at these packet sizes
TEST_GRID_POINTS = 2 ** 12


def random_params(rng, t_rabi=None):
    """
    Draws a scenario with independent packets, nonzero mean momenta and x1 != x2.

    Packets stay at least a tenth of their offset wide so both atoms see some damping.
    """
    wavelength = 10 ** rng.uniform(-6, -4)
    x1, x2 = (float(rng.choice((-1.0, 1.0))) * rng.uniform(0.02, 0.1) * wavelength for _ in range(2))
    sigma1, sigma2 = (rng.uniform(0.01, 0.05) * wavelength for _ in range(2))
    base = PhysicalParams(
        m=10 ** rng.uniform(-27, -24),
        wavelength=wavelength,
        epsilon=10 ** rng.uniform(6, 9),
        x1=x1,
        x2=x2,
        sigma_x1=sigma1,
        sigma_x2=sigma2,
        t1=0.0,
        t2=0.0,
        t3=0.0,
        p1=rng.uniform(-3, 3) * HBAR / (2 * sigma1),
        p2=rng.uniform(-3, 3) * HBAR / (2 * sigma2),
    )
    if t_rabi is None:
        t_rabi = rng.uniform(0.0, 3.0)
    return base.with_schedule(t_rabi * base.rabi_period)


@pytest.fixture
def base_params():
    return PhysicalParams.figure1()


@pytest.fixture
def rabi(base_params):
    return base_params.rabi_period


@pytest.fixture
def params_at(base_params, rabi):
    """
    Parameters for T given in Rabi periods
    """
    return lambda t_rabi: base_params.with_schedule(t_rabi * rabi)


@pytest.fixture
def scenario(tmpdir):
    return lambda **overrides: ScenarioConfig.load(overrides=dict({
        'output': str(tmpdir.join('run.csv')),
        'steps': '11',
        't-end': '1.0',
        'grid-points': str(TEST_GRID_POINTS),
    }, **overrides))
