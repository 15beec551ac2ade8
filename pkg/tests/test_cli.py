import logging

import pytest

from cavitybell import cli
from cavitybell.constants import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION
from cavitybell.exceptions import EigensolverError, VerificationError
from cavitybell.verification import CheckResult, VerificationReport


def test_sweep(tmpdir, capsys):
    output = str(tmpdir.join('out.csv'))
    assert cli.main(['sweep', '--model', 'jc', '--steps', '3', '--output', output]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [output, output + '.meta']
    assert tmpdir.join('out.csv').read().startswith('T_seconds,T_rabi,')


def test_figure1(tmpdir, capsys):
    output = str(tmpdir.join('fig.csv'))
    assert cli.main(['figure1', '--steps', '3', '--output', output]) == EXIT_OK
    assert tmpdir.join('fig_panel_i.csv').check()
    assert tmpdir.join('fig_panel_ii.csv').check()


def test_overrides():
    args = cli.build_parser().parse_args([
        'sweep', '--lambda', '2e-5', '--sigma-x1', '1e-6', '--initial-state', 'eg0', '--verify'])
    assert cli.overrides_from_args(args) == {
        'lambda': '2e-5',
        'sigma-x1': '1e-6',
        'initial-state': 'eg0',
        'verify': 'True',
    }


def test_config_file(tmpdir, mocker):
    path = tmpdir.join('scenario.cfg')
    path.write('model = jc\nsteps = 3\n')
    emit = mocker.patch('cavitybell.cli.emit_sweep', return_value=[])
    assert cli.main(['sweep', '--config', str(path), '--steps', '4']) == EXIT_OK
    config = emit.call_args[0][0]
    assert config.model == 'jc'
    assert config.steps == 4


@pytest.mark.parametrize('argv', [
    [],
    ['plot'],
    ['sweep', '--model', 'classical'],
    ['sweep', '--steps', 'many'],
    ['sweep', '--mass', '-1'],
    ['sweep', '--config', '/nonexistent/scenario.cfg'],
    ['figure1', '--initial-state', 'eg0'],
])
def test_usage_errors(argv, caplog):
    with caplog.at_level(logging.ERROR):
        assert cli.main(argv) == EXIT_USAGE
    assert caplog.records


def test_verification_failure(mocker, capsys):
    failed = CheckResult('rho_oracle_gg1', False, 0.0, 1e-3, 1e-3, 1e-6)
    mocker.patch('cavitybell.cli.verify', return_value=VerificationReport([failed]))
    assert cli.main(['verify']) == EXIT_VERIFICATION
    assert 'rho_oracle_gg1' in capsys.readouterr().out


def test_sweep_verification_failure(mocker):
    mocker.patch('cavitybell.cli.emit_sweep', side_effect=VerificationError([], 'row 3: mismatch'))
    assert cli.main(['sweep']) == EXIT_VERIFICATION


def test_numeric_failure(mocker):
    mocker.patch('cavitybell.cli.emit_sweep', side_effect=EigensolverError('row 0: no convergence'))
    assert cli.main(['sweep']) == EXIT_NUMERIC


def test_verify_passes(mocker, capsys):
    passed = CheckResult('ppt_closed_form', True, 0.5, 0.5, 0.0, 1e-9)
    mocker.patch('cavitybell.cli.verify', return_value=VerificationReport([passed]))
    assert cli.main(['verify', '--grid-points', '4096']) == EXIT_OK
    assert 'PASS' in capsys.readouterr().out


def test_verbose(mocker):
    mocker.patch('cavitybell.cli.emit_sweep', return_value=[])
    cli.main(['sweep', '-v'])
    assert logging.getLogger('cavitybell').level == logging.DEBUG
    logging.getLogger('cavitybell').setLevel(logging.NOTSET)
