from django.conf import settings

from concepts.context import gen_cointoss
from concepts.formats import serialize_cxt

from ..base import EXIT_INPUT, MAX_SEED, FcaCommand, OptionError, parse_float, parse_int


class Command(FcaCommand):
    help = 'Generate a coin-toss context and write it in Burmeister format'

    def add_arguments(self, parser):
        parser.add_argument('--objects', help='Number of objects')
        parser.add_argument('--attributes', help='Number of attributes')
        parser.add_argument('--p', help='Probability of each incidence')
        parser.add_argument('--seed', help='Generator seed')
        parser.add_argument('--output', help='Destination .cxt file')

    def handle(self, *args, **options):
        try:
            self.n_objects = parse_int(options, 'objects', returncode=EXIT_INPUT)
            self.n_attributes = parse_int(options, 'attributes', returncode=EXIT_INPUT)
            self.p = parse_float(options, 'p', returncode=EXIT_INPUT)
            self.seed = parse_int(options, 'seed', settings.FCA_SEED, maximum=MAX_SEED, returncode=EXIT_INPUT)
            if self.n_objects is None or self.n_attributes is None or self.p is None:
                raise OptionError('--objects, --attributes and --p are required', EXIT_INPUT)
            if not 0 <= self.p <= 1:
                raise OptionError(f'--p must lie between 0 and 1, got {self.p}', EXIT_INPUT)
            if options.get('output') is None:
                raise OptionError('--output is required', EXIT_INPUT)
        except OptionError as e:
            raise self.fail(e, e.returncode)
        return super().handle(*args, **options)

    def run(self, config):
        ctx = gen_cointoss(self.n_objects, self.n_attributes, self.p, self.seed)
        config.output.parent.mkdir(parents=True, exist_ok=True)
        with open(config.output, 'w', encoding='utf-8', newline='') as handle:
            handle.write(serialize_cxt(ctx))
        self.stdout.write(f'Wrote {ctx.n_objects}x{ctx.n_attributes} context to {config.output}')
