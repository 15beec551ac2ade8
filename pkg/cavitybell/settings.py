import importlib.util
import logging
import os
import warnings
from os import getenv

from typing import Any

log = logging.getLogger(__name__)

default_settings_dict = {
    'mass_kg': 1e-26,
    'wavelength_m': 1e-5,
    # which-way damping becomes visible within two Rabi periods at this coupling
    'epsilon_per_s': 1e8,
    'packet_center_fraction': 0.1,
    'packet_width_fraction': 0.1,
    'grid_points': 2 ** 14,
    'grid_half_width_sigmas': 12.0,
    'ppt_tolerance': 1e-10,
    'sweep_workers': 1,
}

OVERRIDE_SETTINGS_PATH = getenv('CAVITYBELL_CONFIG', '/etc/cavitybell/global_default_settings.py')


def _load_module(name, path):
    # https://docs.python.org/3/library/importlib.html#importing-a-source-file-directly
    spec = importlib.util.spec_from_file_location(name, path)
    module = importlib.util.module_from_spec(spec)  # type: ignore
    spec.loader.exec_module(module)  # type: ignore
    return module


override_settings = {}
if os.path.isfile(OVERRIDE_SETTINGS_PATH):
    override_settings = _load_module('__cavitybell_override_settings__', OVERRIDE_SETTINGS_PATH)
    unknown = sorted(
        name for name in vars(override_settings)
        if not name.startswith('_') and name not in default_settings_dict
    )
    if unknown:
        warnings.warn("Unknown cavitybell settings are ignored: {}".format(', '.join(unknown)))
    log.info('Override settings for cavitybell available {}'.format(OVERRIDE_SETTINGS_PATH))
else:
    log.info('Override settings for cavitybell not available {}'.format(OVERRIDE_SETTINGS_PATH))
    log.info('Using Default settings value')


def get_settings_value(key: str) -> Any:
    """
    Fetches the value from the override file.
    If the value is not present, then falls back to the built-in defaults
    """
    if hasattr(override_settings, key):
        return getattr(override_settings, key)

    if key in default_settings_dict:
        return default_settings_dict[key]

    return None
