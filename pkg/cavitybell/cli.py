"""
Command line entry point: ``cavitybell {sweep,figure1,verify}``
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

from cavitybell import __version__
from cavitybell.config import ScenarioConfig
from cavitybell.constants import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, INITIAL_STATES, MODELS
from cavitybell.exceptions import ConfigError, NumericContractError, VerificationError
from cavitybell.sweep import emit_figure1, emit_sweep
from cavitybell.verification import verify

log = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

# (flag, help); the configuration key is the flag without its dashes
VALUE_OPTIONS = (
    ('--mass', "atomic mass (kg)"),
    ('--lambda', "mode wavelength (m)"),
    ('--epsilon', "atom-field coupling (1/s)"),
    ('--x1', "atom 1 packet centre (m)"),
    ('--x2', "atom 2 packet centre (m)"),
    ('--sigma-x1', "atom 1 packet width (m)"),
    ('--sigma-x2', "atom 2 packet width (m)"),
    ('--t-start', "first T in Rabi periods"),
    ('--t-end', "last T in Rabi periods"),
    ('--steps', "number of T grid points"),
    ('--output', "output CSV path"),
    ('--workers', "threads used for sweep rows"),
    ('--grid-points', "oracle grid size"),
    ('--ppt-tolerance', "negative PPT eigenvalues above -tolerance count as zero"),
    ('--verify-tolerance', "replace every verification tolerance"),
)
CHOICE_OPTIONS = (
    ('--model', MODELS),
    ('--initial-state', INITIAL_STATES),
)
FLAG_OPTIONS = (
    ('--verify', "cross-check every row against the grid oracle"),
    ('--svg', "also write an SVG line plot"),
)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigError(message)


def _key(flag: str) -> str:
    return flag.lstrip('-')


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('--config', help="key = value configuration file")
    for flag, help_text in VALUE_OPTIONS:
        common.add_argument(flag, dest=_key(flag), help=help_text)
    for flag, choices in CHOICE_OPTIONS:
        common.add_argument(flag, dest=_key(flag), choices=choices)
    for flag, help_text in FLAG_OPTIONS:
        common.add_argument(flag, dest=_key(flag), action='store_true', default=None, help=help_text)
    common.add_argument('-v', '--verbose', action='store_true', help="debug logging for cavitybell")

    parser = _ArgumentParser(prog='cavitybell', description="Entanglement of two atoms crossing a cavity")
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(__version__))
    commands = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)
    commands.required = True
    commands.add_parser('sweep', parents=[common], help="sweep T and write one row per grid point")
    commands.add_parser('figure1', parents=[common], help="write both panels of the nu curves")
    commands.add_parser('verify', parents=[common], help="compare closed forms with the grid oracle")
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, str]:
    flags = [flag for flag, _ in VALUE_OPTIONS] + [flag for flag, _ in CHOICE_OPTIONS] + \
        [flag for flag, _ in FLAG_OPTIONS]
    overrides = {}
    for flag in flags:
        value = getattr(args, _key(flag), None)
        if value is not None:
            overrides[_key(flag)] = str(value)
    return overrides


def run(args: argparse.Namespace) -> List[str]:
    config = ScenarioConfig.load(args.config, overrides_from_args(args))
    if args.command == 'sweep':
        return emit_sweep(config)
    if args.command == 'figure1':
        return emit_figure1(config)
    report = verify(config)
    for line in report.lines():
        print(line)
    report.raise_for_failures()
    return []


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(format=LOG_FORMAT, level=logging.WARNING)
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.getLogger('cavitybell').setLevel(logging.DEBUG)
        for path in run(args):
            print(path)
    except VerificationError as e:
        log.error("%s", e.msg)
        return EXIT_VERIFICATION
    except NumericContractError as e:
        log.error("%s", e.msg)
        return EXIT_NUMERIC
    except (ConfigError, OSError) as e:
        log.error("%s", e)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
