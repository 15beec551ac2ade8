"""
Scenario configuration: a flat ``key = value`` file plus command-line overrides
"""
import logging
from typing import Any, Dict, Optional

import numpy as np

from cavitybell.attributes import (
    AttributeContainer, BooleanAttribute, ChoiceAttribute, FloatAttribute, IntegerAttribute, UnicodeAttribute,
)
from cavitybell.constants import INITIAL_GG1, INITIAL_STATES, MODEL_SG, MODELS
from cavitybell.exceptions import ConfigError
from cavitybell.models import InitialState
from cavitybell.settings import get_settings_value
from cavitybell.wavepackets import PhysicalParams

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

COMMENT_PREFIX = '#'


def _setting(key: str):
    return lambda: get_settings_value(key)


class ScenarioConfig(AttributeContainer):
    """
    Physical parameters, model choice and T grid (in Rabi periods) of one run.

    Packet centres and widths left unset default to the configured fractions of the wavelength.
    """
    mass = FloatAttribute(minimum=0.0, exclusive_minimum=True, default=_setting('mass_kg'), help="atomic mass (kg)")
    wavelength = FloatAttribute(
        minimum=0.0, exclusive_minimum=True, default=_setting('wavelength_m'), attr_name='lambda',
        help="mode wavelength (m)")
    epsilon = FloatAttribute(
        minimum=0.0, exclusive_minimum=True, default=_setting('epsilon_per_s'), help="atom-field coupling (1/s)")
    x1 = FloatAttribute(null=True, help="atom 1 packet centre (m)")
    x2 = FloatAttribute(null=True, help="atom 2 packet centre (m)")
    sigma_x1 = FloatAttribute(
        minimum=0.0, exclusive_minimum=True, null=True, attr_name='sigma-x1', help="atom 1 packet width (m)")
    sigma_x2 = FloatAttribute(
        minimum=0.0, exclusive_minimum=True, null=True, attr_name='sigma-x2', help="atom 2 packet width (m)")
    model = ChoiceAttribute(MODELS, default=MODEL_SG)
    initial_state = ChoiceAttribute(INITIAL_STATES, default=INITIAL_GG1, attr_name='initial-state')
    t_start = FloatAttribute(minimum=0.0, default=0.0, attr_name='t-start', help="first T (Rabi periods)")
    t_end = FloatAttribute(minimum=0.0, exclusive_minimum=True, default=2.0, attr_name='t-end',
                           help="last T (Rabi periods)")
    steps = IntegerAttribute(minimum=2, default=201)
    output = UnicodeAttribute(default='cavitybell.csv')
    verify = BooleanAttribute(default=False)
    svg = BooleanAttribute(default=False)
    workers = IntegerAttribute(minimum=1, default=_setting('sweep_workers'))
    grid_points = IntegerAttribute(minimum=16, default=_setting('grid_points'), attr_name='grid-points')
    ppt_tolerance = FloatAttribute(minimum=0.0, default=_setting('ppt_tolerance'), attr_name='ppt-tolerance')
    verify_tolerance = FloatAttribute(
        minimum=0.0, exclusive_minimum=True, null=True, attr_name='verify-tolerance',
        help="replaces every verification tolerance")

    @classmethod
    def load(cls, path: Optional[str] = None, overrides: Optional[Dict[str, str]] = None) -> 'ScenarioConfig':
        """
        Reads ``path`` (if given), then applies ``overrides``; both are keyed by configuration key
        """
        config = cls()
        if path is not None:
            config.deserialize(load_config_file(path))
        if overrides:
            config.deserialize(overrides)
        config.validate()
        return config

    def validate(self) -> None:
        self.serialize(null_check=True)
        if self.t_end <= self.t_start:
            raise ConfigError("Field 't-end' ({}) must exceed 't-start' ({})".format(self.t_end, self.t_start))

    def copy(self, **changes: Any) -> 'ScenarioConfig':
        values = dict(self.attribute_values)
        values.update(changes)
        return type(self)(**values)

    def _fraction(self, value: Optional[float], key: str) -> float:
        return value if value is not None else get_settings_value(key) * self.wavelength

    @property
    def initial(self) -> InitialState:
        return InitialState(self.initial_state)

    def base_params(self) -> PhysicalParams:
        return PhysicalParams(
            m=self.mass,
            wavelength=self.wavelength,
            epsilon=self.epsilon,
            x1=self._fraction(self.x1, 'packet_center_fraction'),
            x2=self._fraction(self.x2, 'packet_center_fraction'),
            sigma_x1=self._fraction(self.sigma_x1, 'packet_width_fraction'),
            sigma_x2=self._fraction(self.sigma_x2, 'packet_width_fraction'),
            t1=0.0,
            t2=0.0,
            t3=0.0,
        )

    def physical_params(self, interaction_time: float) -> PhysicalParams:
        """
        Parameters with the schedule t1 = T, t2 = 2T, t3 = 3T for T in seconds
        """
        return self.base_params().with_schedule(interaction_time)

    def t_grid(self) -> np.ndarray:
        """
        The T grid in Rabi periods
        """
        return np.linspace(self.t_start, self.t_end, self.steps)

    def require_figure_mode(self) -> None:
        """
        Both atoms share the same effective coupling and start in |g g 1>
        """
        if self.initial != InitialState.GG1:
            raise ConfigError("Field 'initial-state' must be gg1 for figure1, got {}".format(self.initial_state))
        params = self.base_params()
        if params.x1 != params.x2:
            raise ConfigError("Fields 'x1' and 'x2' must be equal for figure1, got {} and {}".format(
                params.x1, params.x2))


def load_config_file(path: str) -> Dict[str, str]:
    """
    Parses ``key = value`` lines; blank lines and lines starting with '#' are skipped
    """
    values: Dict[str, str] = {}
    with open(path) as handle:
        for number, line in enumerate(handle, start=1):
            text = line.strip()
            if not text or text.startswith(COMMENT_PREFIX):
                continue
            key, separator, value = text.partition('=')
            if not separator or not key.strip():
                raise ConfigError("{}:{}: expected 'key = value', got {!r}".format(path, number, text))
            key = key.strip()
            if key in values:
                raise ConfigError("{}:{}: duplicate key '{}'".format(path, number, key))
            values[key] = value.strip()
    log.debug("Read %s configuration keys from %s", len(values), path)
    return values
