"""
CSV and JSON writers for lattices, score dumps and experiment reports.
"""
from __future__ import annotations

import csv
import json
import logging
from pathlib import Path
from typing import Iterable

from django.conf import settings

from concepts.lattice import ConceptLattice, lattice_to_json
from relevance.indices import ConceptScores

from .harness import UNDEFINED, EvalReport

logger = logging.getLogger(__name__)

CONCEPT_SCORE_HEADER = ['concept_id', 'extent_size', 'intent_size', 'alpha', 'beta', 'cr', 'stability', 'n_mingens']
SCORE_HEADER = ['intent', 'x', 'y']
SUMMARY_HEADER = ['index', 'activation', 'n', 'xi', 'tau_seconds']
TIMING_HEADER = ['side', 'concept_id', 'seconds']
INTENT_SEPARATOR = ';'


def format_number(value, digits: int | None = None) -> str:
    """Empty for missing values, otherwise ``digits`` significant digits."""
    if value is None:
        return ''
    if isinstance(value, int):
        return str(value)
    digits = settings.FCA_SCORE_DIGITS if digits is None else digits
    return f'{value:.{digits}g}'


def _write_rows(path, header: list[str], rows: Iterable[list]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow(row)
            count += 1
    logger.info(f'Wrote {count} rows to {path}')
    return path


def write_concept_scores(path, rows: Iterable[ConceptScores]) -> Path:
    return _write_rows(path, CONCEPT_SCORE_HEADER, (
        [row.concept_id, row.extent_size, row.intent_size,
         format_number(row.alpha), format_number(row.beta), format_number(row.cr),
         format_number(row.stability), format_number(row.n_mingens)]
        for row in rows
    ))


def write_score_rows(path, report: EvalReport) -> Path:
    return _write_rows(path, SCORE_HEADER, (
        [INTENT_SEPARATOR.join(row.intent), format_number(row.x), format_number(row.y)]
        for row in report.score_rows
    ))


def write_timings(path, report: EvalReport) -> Path:
    return _write_rows(path, TIMING_HEADER, (
        [row.side, row.concept_id, repr(row.seconds)] for row in report.timing_rows
    ))


def summary_row(report: EvalReport) -> list:
    xi = UNDEFINED if report.xi is None else format_number(report.xi)
    return [report.index_name, report.activation, report.n, xi, repr(report.tau)]


def write_summary(path, reports: Iterable[EvalReport]) -> Path:
    return _write_rows(path, SUMMARY_HEADER, (summary_row(report) for report in reports))


def write_experiment(directory, reports: Iterable[EvalReport]) -> list[Path]:
    """Write ``<index>_scores.csv`` and ``<index>_timings.csv`` per report plus one ``summary.csv``."""
    directory = Path(directory)
    reports = list(reports)
    written = []
    for report in reports:
        written.append(write_score_rows(directory / f'{report.index_name}_scores.csv', report))
        written.append(write_timings(directory / f'{report.index_name}_timings.csv', report))
    written.append(write_summary(directory / 'summary.csv', reports))
    return written


def write_lattice_json(path, lat: ConceptLattice) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(lattice_to_json(lat), handle, indent=2, ensure_ascii=False)
        handle.write('\n')
    logger.info(f'Wrote lattice with {len(lat)} concepts to {path}')
    return path
