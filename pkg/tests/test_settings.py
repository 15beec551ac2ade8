from importlib import reload
from unittest.mock import patch

import pytest

import cavitybell.settings


@pytest.fixture
def reload_settings():
    yield
    reload(cavitybell.settings)


@pytest.mark.parametrize('settings_str', [
    "mass = 1e-26",
    "grid_size = 512",
])
def test_unknown_settings_warn(settings_str, tmpdir, reload_settings):
    custom_settings = tmpdir.join("cavitybell_settings.py")
    custom_settings.write(settings_str)

    with patch.dict('os.environ', {'CAVITYBELL_CONFIG': str(custom_settings)}):
        with pytest.warns(UserWarning) as warns:
            reload(cavitybell.settings)
    assert len(warns) == 1
    assert 'Unknown cavitybell settings are ignored' in str(warns[0].message)


def test_override(tmpdir, reload_settings):
    custom_settings = tmpdir.join("cavitybell_settings.py")
    custom_settings.write("epsilon_per_s = 5e7\ngrid_points = 2048\n")

    with patch.dict('os.environ', {'CAVITYBELL_CONFIG': str(custom_settings)}):
        reload(cavitybell.settings)
    assert cavitybell.settings.get_settings_value('epsilon_per_s') == 5e7
    assert cavitybell.settings.get_settings_value('grid_points') == 2048
    assert cavitybell.settings.get_settings_value('mass_kg') == 1e-26


def test_defaults():
    assert cavitybell.settings.get_settings_value('ppt_tolerance') == 1e-10
    assert cavitybell.settings.get_settings_value('no_such_setting') is None
