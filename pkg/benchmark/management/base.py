"""
Shared option handling for the FCA management commands.

Numeric and choice flags are read as plain strings and validated here so a
bad value always ends in a ``CommandError`` with a stable return code:

* 1 for input errors (unreadable or malformed files, unsplittable contexts),
* 2 when a resource cap is hit,
* 3 for configuration errors (unknown index, activation or method, bad
  numeric flags).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from concepts.exceptions import (
    ConceptsError,
    ContextFormatError,
    ContextMismatchError,
    OracleTooLarge,
    ResourceCapExceeded,
)
from concepts.formats import PARSERS
from relevance.activations import get_activation
from relevance.exceptions import ExtentTooLargeError, RelevanceError
from relevance.indices import resolve_index, resolve_stability_method

from ..exceptions import BenchmarkError
from ..harness import SPLIT_MODES

logger = logging.getLogger(__name__)

EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_CONFIG = 3

MAX_SEED = 2 ** 63 - 1

RESOURCE_ERRORS = (ResourceCapExceeded, OracleTooLarge, ExtentTooLargeError)
INPUT_ERRORS = (OSError, ContextFormatError, ContextMismatchError, BenchmarkError, ConceptsError)
CONFIG_ERRORS = (RelevanceError,)


class OptionError(Exception):
    def __init__(self, message, returncode=EXIT_CONFIG):
        self.returncode = returncode
        super().__init__(message)


@dataclass(frozen=True)
class CliConfig:
    input: Path | None = None
    output: Path | None = None
    fmt: str | None = None
    index: str | None = None
    activation: str | None = None
    stability_method: str | None = None
    split: str = 'random'
    ratio: float | None = None
    seed: int | None = None
    threads: int | None = None
    max_concepts: int | None = None
    max_stability_extent: int | None = None
    top: int | None = None
    threshold: float | None = None
    compare: bool = False
    record: bool = False


def parse_int(options, name, default=None, minimum=0, maximum=None, returncode=EXIT_CONFIG):
    raw = options.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise OptionError(f'--{name.replace("_", "-")} expects an integer, got {raw!r}', returncode) from None
    if value < minimum or (maximum is not None and value > maximum):
        bound = f'between {minimum} and {maximum}' if maximum is not None else f'at least {minimum}'
        raise OptionError(f'--{name.replace("_", "-")} must be {bound}, got {value}', returncode)
    return value


def parse_float(options, name, default=None, returncode=EXIT_CONFIG):
    raw = options.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise OptionError(f'--{name.replace("_", "-")} expects a number, got {raw!r}', returncode) from None


class FcaCommand(BaseCommand):
    """
    Base class for the FCA commands.

    Subclasses declare their flags with the ``add_*_arguments`` helpers and
    implement ``run(config)``.
    """

    output_required = False

    def add_input_arguments(self, parser):
        parser.add_argument('input', help='Context file in .cxt or .csv format')
        parser.add_argument('--format', dest='fmt', help='Input format: cxt or csv (default: file extension)')
        parser.add_argument('--max-concepts', help='Abort when the lattice grows beyond this many concepts')

    def add_scoring_arguments(self, parser):
        parser.add_argument('--index', help='Index to compute: cr or stability')
        parser.add_argument('--activation', help='Activation combining alpha and beta for cr')
        parser.add_argument('--stability-method', help='Stability computation: brute or dp')
        parser.add_argument('--max-stability-extent', help='Largest extent scored by brute-force stability')
        parser.add_argument('--threads', help='Worker threads for per-concept scoring')

    def build_config(self, options) -> CliConfig:
        values = {}
        if options.get('input') is not None:
            path = Path(options['input'])
            if not path.is_file():
                raise OptionError(f'cannot read input file {path}', EXIT_INPUT)
            values['input'] = path

        output = options.get('output')
        if output is None and self.output_required:
            raise OptionError('--output is required')
        if output is not None:
            values['output'] = Path(output)

        fmt = options.get('fmt')
        if fmt is not None:
            if fmt.lower() not in PARSERS:
                raise OptionError(f'unknown format {fmt!r}; use cxt or csv')
            values['fmt'] = fmt.lower()

        if 'index' in options:
            values['index'] = resolve_index(options.get('index'))
        if 'activation' in options:
            activation = options.get('activation')
            values['activation'] = settings.FCA_DEFAULT_ACTIVATION if activation is None else activation
            get_activation(values['activation'])
        if 'stability_method' in options:
            method = options.get('stability_method')
            if method is None:
                method = settings.FCA_STABILITY_METHOD
            resolve_stability_method(method)
            values['stability_method'] = method
        if options.get('split') is not None:
            if options['split'] not in SPLIT_MODES:
                raise OptionError(f'unknown split mode {options["split"]!r}; use {" or ".join(SPLIT_MODES)}')
            values['split'] = options['split']

        if 'ratio' in options:
            ratio = parse_float(options, 'ratio', settings.FCA_SPLIT_RATIO)
            if not 0 < ratio < 1:
                raise OptionError(f'--ratio must lie strictly between 0 and 1, got {ratio}')
            values['ratio'] = ratio
        if 'seed' in options:
            values['seed'] = parse_int(options, 'seed', settings.FCA_SEED, maximum=MAX_SEED)
        if 'threads' in options:
            values['threads'] = parse_int(options, 'threads', settings.FCA_THREADS, minimum=1)
        if 'max_concepts' in options:
            values['max_concepts'] = parse_int(options, 'max_concepts', settings.FCA_MAX_CONCEPTS, minimum=1)
        if 'max_stability_extent' in options:
            values['max_stability_extent'] = parse_int(
                options, 'max_stability_extent', settings.FCA_MAX_STABILITY_EXTENT
            )
        if 'top' in options:
            values['top'] = parse_int(options, 'top')
        if 'threshold' in options:
            values['threshold'] = parse_float(options, 'threshold')
        values['compare'] = bool(options.get('compare'))
        values['record'] = bool(options.get('record'))
        return CliConfig(**values)

    def handle(self, *args, **options):
        try:
            config = self.build_config(options)
            return self.run(config)
        except OptionError as e:
            raise self.fail(e, e.returncode)
        except RESOURCE_ERRORS as e:
            raise self.fail(e, EXIT_RESOURCE)
        except CONFIG_ERRORS as e:
            raise self.fail(e, EXIT_CONFIG)
        except INPUT_ERRORS as e:
            raise self.fail(e, EXIT_INPUT)

    def fail(self, error, returncode) -> CommandError:
        logger.error(f'{self.__module__.rsplit(".", 1)[-1]} failed with exit code {returncode}: {error}')
        return CommandError(str(error), returncode=returncode)

    def run(self, config: CliConfig):
        raise NotImplementedError('subclasses of FcaCommand must provide a run() method')
