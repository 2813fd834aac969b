from concepts.formats import load_context
from concepts.lattice import build_lattice

from ...reports import write_lattice_json
from ..base import FcaCommand


class Command(FcaCommand):
    help = 'Build the concept lattice of a context and optionally export it as JSON'

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument('--output', help='Write the lattice JSON to this file')

    def run(self, config):
        ctx = load_context(config.input, config.fmt)
        lat = build_lattice(ctx, max_concepts=config.max_concepts)
        if config.output is not None:
            write_lattice_json(config.output, lat)
        self.stdout.write(f'{ctx.n_objects} {ctx.n_attributes} {len(lat)}')
