"""
T sweeps, figure panels and their CSV / sidecar / SVG output
"""
import csv
import logging
import os
from dataclasses import astuple, dataclass
from multiprocessing.pool import ThreadPool
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from cavitybell import __version__
from cavitybell.constants import (
    BELL_BOUND, CSV_LINE_TERMINATOR, FIGURE_COLUMNS, FLOAT_FORMAT, JC_LIMIT_TOLERANCE, META_SUFFIX, MODEL_JC,
    MODEL_SG, ORACLE_RHO_TOLERANCE, PANEL_JC_SUFFIX, PANEL_SG_SUFFIX, SVG_SUFFIX, SWEEP_COLUMNS,
)
from cavitybell.entanglement import degenerate_m, entanglement_report
from cavitybell.exceptions import ConfigError, NumericContractError, VerificationError
from cavitybell.models import (
    InitialState, build_rho_jc, build_rho_sg, compute_overlap_set, jc_limit_overlap_set,
)
from cavitybell.oracle import build_full_state, reduce_to_internal
from cavitybell.quantum import TwoQubitDensityMatrix
from cavitybell.signals import send_safely, sweep_row_computed
from cavitybell.verification import CheckResult

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class SweepRow:
    T_seconds: float
    T_rabi: float
    nu1: float
    nu2: float
    nu3: float
    m_value: float
    ppt_min: float
    damping1: float
    damping2: float
    separable: bool
    bell_violated: bool

    def csv_fields(self) -> List[str]:
        return [_format(value) for value in astuple(self)]


class FigureRow(NamedTuple):
    T_rabi: float
    nu1_plus_nu2: float
    two_nu2: float

    def csv_fields(self) -> List[str]:
        return [_format(value) for value in self]


def _format(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return '1' if value else '0'
    return FLOAT_FORMAT.format(value)


def _with_row_context(index: int, error: Exception) -> Exception:
    if isinstance(error, VerificationError):
        return VerificationError(error.failures, 'row {}: {}'.format(index, error.msg))
    return type(error)('row {}: {}'.format(index, error.msg), cause=error)  # type: ignore


def _oracle_check(config, params, rho: TwoQubitDensityMatrix, index: int) -> None:
    if config.model == MODEL_SG:
        name, default = 'rho_oracle_{}'.format(config.initial_state), ORACLE_RHO_TOLERANCE
        reference = reduce_to_internal(build_full_state(params, config.initial, config.grid_points))
    else:
        name, default = 'jc_limit_{}'.format(config.initial_state), JC_LIMIT_TOLERANCE
        reference = build_rho_sg(params, config.initial, jc_limit_overlap_set(params, keep_kerr_phase=False))
    tolerance = config.verify_tolerance if config.verify_tolerance is not None else default
    difference = np.abs(rho.matrix - reference.matrix)
    residual = float(np.max(difference))
    log.debug("Row %s %s residual %s", index, name, residual)
    if residual > tolerance:
        raise VerificationError([CheckResult(name, False, 0.0, residual, residual, tolerance)])


def compute_row(config, T_rabi: float, index: int = 0) -> SweepRow:
    """
    One sweep row at T = T_rabi Rabi periods with the schedule t1 = T, t2 = 2T, t3 = 3T
    """
    rabi = config.base_params().rabi_period
    params = config.physical_params(T_rabi * rabi)
    if config.model == MODEL_SG:
        overlaps = compute_overlap_set(params)
        rho = build_rho_sg(params, config.initial, overlaps)
        damping = overlaps.damping1, overlaps.damping2
    else:
        rho = build_rho_jc(params.eps_jc, params.t1, config.initial)
        damping = 1.0, 1.0
    if config.verify:
        _oracle_check(config, params, rho, index)
    report = entanglement_report(rho, config.ppt_tolerance)
    nu1, nu2, nu3 = report.nu
    return SweepRow(
        T_seconds=params.t1,
        T_rabi=float(T_rabi),
        nu1=nu1,
        nu2=nu2,
        nu3=nu3,
        m_value=report.m_value,
        ppt_min=report.ppt_eigenvalues[0],
        damping1=damping[0],
        damping2=damping[1],
        separable=report.separable,
        bell_violated=report.bell_violated,
    )


def _row_task(config, T_rabi: float, index: int) -> SweepRow:
    try:
        return compute_row(config, T_rabi, index)
    except (NumericContractError, VerificationError) as e:
        raise _with_row_context(index, e) from e


def run_sweep(config) -> List[SweepRow]:
    """
    Computes one row per grid point; rows come back in grid order whatever ``config.workers`` is
    """
    grid = config.t_grid()
    log.info("Sweeping %s rows of the %s model from %s", len(grid), config.model, config.initial_state)
    if config.workers > 1:
        with ThreadPool(config.workers) as pool:
            workers = [pool.apply_async(_row_task, (config, t, i)) for i, t in enumerate(grid)]
            rows = [worker.get() for worker in workers]
    else:
        rows = [_row_task(config, t, i) for i, t in enumerate(grid)]
    for index, row in enumerate(rows):
        send_safely(sweep_row_computed, config, row_index=index, row=row)
    return rows


def figure_row(rho: TwoQubitDensityMatrix, T_rabi: float) -> FigureRow:
    _, nu1, nu2 = degenerate_m(rho)
    return FigureRow(float(T_rabi), nu1 + nu2, 2.0 * nu2)


def figure1_rows(config) -> Tuple[List[FigureRow], List[FigureRow]]:
    """
    Panel (i) from the Jaynes-Cummings state and panel (ii) from the Stern-Gerlach state, both from |g g 1>
    """
    config.require_figure_mode()
    base = config.base_params()
    rabi = base.rabi_period
    jc_rows, sg_rows = [], []
    for index, T_rabi in enumerate(config.t_grid()):
        params = base.with_schedule(T_rabi * rabi)
        try:
            jc_rows.append(figure_row(build_rho_jc(params.eps_jc, params.t1, InitialState.GG1), T_rabi))
            sg_rows.append(figure_row(build_rho_sg(params, InitialState.GG1), T_rabi))
        except NumericContractError as e:
            raise _with_row_context(index, e) from e
    return jc_rows, sg_rows


def separability_onset(rows: Sequence[SweepRow]) -> Optional[float]:
    """
    First T (Rabi periods) from which every later row is separable with M <= 1, or None
    """
    onset = None
    for row in reversed(rows):
        if not row.separable or row.m_value > BELL_BOUND:
            break
        onset = row.T_rabi
    return onset


def write_csv(rows: Sequence, columns: Sequence[str], path: str) -> None:
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle, lineterminator=CSV_LINE_TERMINATOR)
        writer.writerow(columns)
        for row in rows:
            writer.writerow(row.csv_fields())
    log.info("Wrote %s rows to %s", len(rows), path)


def write_meta(config, path: str, extra: Optional[Dict[str, str]] = None) -> str:
    """
    Writes the configuration echo next to ``path``; no timestamps so output is byte-stable
    """
    meta_path = path + META_SUFFIX
    lines = ['cavitybell_version = {}'.format(__version__)]
    lines += ['{} = {}'.format(key, value) for key, value in config.serialize(null_check=False).items()]
    lines += ['{} = {}'.format(key, value) for key, value in sorted((extra or {}).items())]
    with open(meta_path, 'w', newline='') as handle:
        handle.write(CSV_LINE_TERMINATOR.join(lines) + CSV_LINE_TERMINATOR)
    return meta_path


def render_svg(path: str, x: Sequence[float], series: Sequence[Tuple[str, Sequence[float], str]], title: str) -> str:
    """
    Line plot of ``series`` (label, values, line style) against T in Rabi periods
    """
    try:
        import matplotlib
        matplotlib.use('Agg')
        import matplotlib.pyplot as plt
    except ImportError as e:
        raise ConfigError("SVG output needs matplotlib (install cavitybell[plot])", cause=e) from e
    svg_path = os.path.splitext(path)[0] + SVG_SUFFIX
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, values, style in series:
        ax.plot(x, values, style, label=label)
    ax.axhline(BELL_BOUND, color='grey', linewidth=0.5)
    ax.set_xlabel('T (Rabi periods)')
    ax.set_title(title)
    ax.legend()
    fig.savefig(svg_path, format='svg', metadata={'Date': None})
    plt.close(fig)
    return svg_path


def _panel_path(path: str, suffix: str) -> str:
    stem, extension = os.path.splitext(path)
    return stem + suffix + (extension or '.csv')


def emit_sweep(config) -> List[str]:
    """
    Runs the sweep and writes the CSV, its sidecar and (optionally) the SVG; returns the written paths
    """
    rows = run_sweep(config)
    write_csv(rows, SWEEP_COLUMNS, config.output)
    onset = separability_onset(rows)
    written = [config.output, write_meta(config, config.output, {
        'rabi_period_seconds': FLOAT_FORMAT.format(config.base_params().rabi_period),
        'separability_onset_t_rabi': 'none' if onset is None else FLOAT_FORMAT.format(onset),
    })]
    if config.svg:
        written.append(render_svg(config.output, [r.T_rabi for r in rows], [
            ('M', [r.m_value for r in rows], '-'),
            ('damping 1', [r.damping1 for r in rows], ':'),
        ], '{} model, {}'.format(config.model, config.initial_state)))
    return written


def emit_figure1(config) -> List[str]:
    """
    Writes both panels with columns T_rabi, nu1_plus_nu2, two_nu2; returns the written paths
    """
    written = []
    for suffix, model, rows in zip((PANEL_JC_SUFFIX, PANEL_SG_SUFFIX), (MODEL_JC, MODEL_SG), figure1_rows(config)):
        path = _panel_path(config.output, suffix)
        write_csv(rows, FIGURE_COLUMNS, path)
        written += [path, write_meta(config, path, {'panel_model': model})]
        if config.svg:
            written.append(render_svg(path, [r.T_rabi for r in rows], [
                ('nu1 + nu2', [r.nu1_plus_nu2 for r in rows], '-'),
                ('2 nu2', [r.two_nu2 for r in rows], '--'),
            ], '{} model'.format(model)))
    return written
