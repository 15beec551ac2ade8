import csv

import pytest

from cavitybell.constants import FIGURE_COLUMNS, SWEEP_COLUMNS
from cavitybell.exceptions import ConfigError, VerificationError
from cavitybell.sweep import (
    SweepRow, emit_figure1, emit_sweep, figure1_rows, run_sweep, separability_onset,
)


def read_csv(path):
    with open(path, newline='') as handle:
        return list(csv.reader(handle))


def row(t_rabi, separable=True, m_value=0.5):
    return SweepRow(0.0, t_rabi, 0.0, 0.0, 0.0, m_value, 0.0, 1.0, 1.0, separable, m_value > 1)


class TestRunSweep:

    def test_jc_initial_row(self, scenario):
        rows = run_sweep(scenario(model='jc', steps='5'))
        assert len(rows) == 5
        assert rows[0].T_rabi == 0.0
        assert rows[0].m_value == pytest.approx(1.0)
        assert rows[0].separable
        assert not rows[0].bell_violated
        assert rows[0].damping1 == rows[0].damping2 == 1.0

    def test_jc_violates_bell_bound(self, scenario):
        rows = run_sweep(scenario(model='jc'))
        assert any(r.bell_violated for r in rows)

    def test_sg_damping_decreases(self, scenario):
        rows = run_sweep(scenario())
        dampings = [r.damping1 for r in rows if r.T_rabi > 0]
        assert all(later < earlier for earlier, later in zip(dampings, dampings[1:]))

    def test_sg_becomes_separable(self, scenario):
        rows = run_sweep(scenario(**{'t-end': '2.0', 'steps': '21'}))
        assert rows[-1].separable
        assert rows[-1].m_value <= 1 + 1e-9
        assert separability_onset(rows) is not None

    def test_workers_keep_order(self, scenario):
        config = scenario(steps='7')
        assert run_sweep(config.copy(workers=3)) == run_sweep(config)

    def test_seconds_column(self, scenario):
        config = scenario(model='jc', steps='3')
        rows = run_sweep(config)
        assert rows[-1].T_seconds == pytest.approx(config.base_params().rabi_period)

    @pytest.mark.oracle
    def test_verified_rows(self, scenario):
        rows = run_sweep(scenario(verify='1', steps='3', **{'t-end': '0.3'}))
        assert len(rows) == 3

    def test_verified_jc_rows(self, scenario):
        assert len(run_sweep(scenario(model='jc', verify='1', steps='4'))) == 4

    @pytest.mark.oracle
    def test_verification_failure_names_row(self, scenario):
        config = scenario(verify='1', steps='2', **{'t-end': '0.3', 'verify-tolerance': '1e-30'})
        with pytest.raises(VerificationError) as e:
            run_sweep(config)
        assert e.value.msg.startswith('row ')
        assert e.value.failures[0].name == 'rho_oracle_gg1'


class TestSeparabilityOnset:

    def test_onset(self):
        rows = [row(0.0, False), row(0.5, True), row(1.0, False, 1.2), row(1.5), row(2.0)]
        assert separability_onset(rows) == 1.5

    def test_never(self):
        assert separability_onset([row(0.0), row(1.0, False)]) is None


class TestEmitSweep:

    def test_csv_layout(self, scenario):
        config = scenario(steps='4')
        written = emit_sweep(config)
        assert written == [config.output, config.output + '.meta']
        lines = read_csv(config.output)
        assert tuple(lines[0]) == SWEEP_COLUMNS
        assert len(lines) == 5
        assert lines[1][SWEEP_COLUMNS.index('separable')] == '1'
        assert lines[1][SWEEP_COLUMNS.index('T_rabi')] == '0.0000000000000000e+00'

    def test_byte_stable(self, scenario):
        config = scenario(steps='4')
        emit_sweep(config)
        with open(config.output, 'rb') as handle:
            first = handle.read()
        with open(config.output + '.meta', 'rb') as handle:
            first_meta = handle.read()
        emit_sweep(config.copy(workers=2))
        with open(config.output, 'rb') as handle:
            assert handle.read() == first
        with open(config.output + '.meta', 'rb') as handle:
            assert handle.read().replace(b'workers = 2', b'workers = 1') == first_meta
        assert b'\r' not in first

    def test_meta(self, scenario):
        config = scenario(steps='4')
        emit_sweep(config)
        with open(config.output + '.meta') as handle:
            meta = handle.read()
        assert meta.startswith('cavitybell_version = ')
        assert 'model = sg\n' in meta
        assert 'rabi_period_seconds = ' in meta
        assert 'separability_onset_t_rabi = ' in meta

    def test_svg_requested(self, scenario, mocker):
        render = mocker.patch('cavitybell.sweep.render_svg', return_value='run.svg')
        written = emit_sweep(scenario(steps='3', svg='1'))
        assert render.call_count == 1
        assert written[-1] == 'run.svg'

    def test_svg(self, scenario):
        pytest.importorskip('matplotlib')
        config = scenario(model='jc', steps='3', svg='1')
        written = emit_sweep(config)
        assert written[-1].endswith('run.svg')
        with open(written[-1]) as handle:
            assert '<svg' in handle.read()


class TestFigure1:

    def test_panels(self, scenario):
        config = scenario(steps='5', **{'t-end': '2.0'})
        written = emit_figure1(config)
        panel_i, panel_ii = written[0], written[2]
        assert panel_i.endswith('run_panel_i.csv')
        assert panel_ii.endswith('run_panel_ii.csv')
        lines = read_csv(panel_i)
        assert tuple(lines[0]) == FIGURE_COLUMNS
        assert [float(v) for v in lines[1]] == pytest.approx([0.0, 1.0, 0.0], abs=1e-12)
        last = [float(v) for v in read_csv(panel_ii)[-1]]
        assert last == pytest.approx([2.0, 0.25, 0.0], abs=1e-9)

    def test_jc_curves(self, scenario):
        jc_rows, sg_rows = figure1_rows(scenario(steps='9'))
        quarter = jc_rows[1]
        assert quarter.T_rabi == pytest.approx(0.125)
        assert quarter.nu1_plus_nu2 == pytest.approx(0.75)
        assert quarter.two_nu2 == pytest.approx(1.0)
        assert sg_rows[1].two_nu2 < quarter.two_nu2

    def test_requires_gg1(self, scenario):
        with pytest.raises(ConfigError):
            emit_figure1(scenario(**{'initial-state': 'eg0'}))
