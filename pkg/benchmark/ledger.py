"""
Persist experiment reports so past runs can be browsed in the admin.
"""
import logging

from django.db import transaction

from .harness import EvalReport, ExperimentConfig
from .models import ExperimentRun, SharedConceptScore

logger = logging.getLogger(__name__)


def record_report(report: EvalReport, source: str, config: ExperimentConfig) -> ExperimentRun:
    """Store one report and its score rows in a single transaction."""
    with transaction.atomic():
        run = ExperimentRun.objects.create(
            source=source,
            index_name=report.index_name,
            activation=report.activation,
            stability_method=config.stability_method,
            ratio=config.ratio,
            seed=None if config.split == 'mirror' else config.seed,
            split=config.split,
            n=report.n,
            xi=report.xi,
            tau_seconds=report.tau,
            dropped=report.dropped,
        )
        SharedConceptScore.objects.bulk_create(
            SharedConceptScore(
                run=run,
                intent=','.join(row.intent),
                x=row.x,
                y=row.y,
                reference_id=row.reference_id,
                test_id=row.test_id,
            )
            for row in report.score_rows
        )
    logger.info(f'Recorded {report.index_name} run #{run.id} for {source} with {report.n} shared concepts')
    return run
