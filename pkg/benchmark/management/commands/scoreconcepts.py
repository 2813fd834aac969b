from concepts.formats import load_context
from concepts.lattice import build_lattice
from relevance.indices import score_lattice, select_concepts

from ...reports import write_concept_scores
from ..base import FcaCommand


class Command(FcaCommand):
    help = 'Score every concept of a context with CR or stability and write a CSV dump'
    output_required = True

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        self.add_scoring_arguments(parser)
        parser.add_argument('--output', help='Destination CSV file')
        parser.add_argument('--top', help='Keep only the K highest-scoring concepts')
        parser.add_argument('--threshold', help='Keep only concepts scoring at least T')

    def run(self, config):
        ctx = load_context(config.input, config.fmt)
        lat = build_lattice(ctx, max_concepts=config.max_concepts)
        rows = score_lattice(
            lat,
            index=config.index,
            activation=config.activation,
            stability_method=config.stability_method,
            max_extent=config.max_stability_extent,
            threads=config.threads,
        )

        if config.top is not None or config.threshold is not None:
            field = 'cr' if config.index == 'cr' else 'stability'
            scores = {row.concept_id: getattr(row, field) for row in rows if getattr(row, field) is not None}
            keep = set(select_concepts(scores, config.top, config.threshold))
            rows = [row for row in rows if row.concept_id in keep]

        write_concept_scores(config.output, rows)
        self.stdout.write(f'Wrote {len(rows)} {config.index} scores to {config.output}')
