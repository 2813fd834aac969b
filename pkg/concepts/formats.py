"""
Readers and writers for Burmeister ``.cxt`` files and 0/1 CSV tables.
"""
from __future__ import annotations

import csv
import io
import logging
from pathlib import Path

from .bitsets import iter_indexes, make_bitset
from .context import FormalContext
from .exceptions import ContextFormatError

logger = logging.getLogger(__name__)

CXT_INCIDENT = frozenset('Xx')
CXT_EMPTY = '.'
CSV_INCIDENT = frozenset({'1', 'X', 'x'})
CSV_EMPTY = frozenset({'0', '.', ''})


def _read_count(lines, index, what):
    if index >= len(lines):
        raise ContextFormatError(f'missing {what}', line=index + 1)
    try:
        value = int(lines[index].strip())
    except ValueError:
        raise ContextFormatError(f'{what} must be an integer, got {lines[index]!r}', line=index + 1) from None
    if value < 0:
        raise ContextFormatError(f'{what} must not be negative', line=index + 1)
    return value


def _read_names(lines, start, count, kind):
    if start + count > len(lines):
        raise ContextFormatError(f'unexpected end of file in {kind} names', line=len(lines) + 1)
    names = lines[start:start + count]
    seen = {}
    for offset, name in enumerate(names):
        if name in seen:
            raise ContextFormatError(
                f'duplicate {kind} name {name!r} (first on line {seen[name]})',
                line=start + offset + 1,
            )
        seen[name] = start + offset + 1
    return names


def parse_cxt(text: str, default_name: str = '') -> FormalContext:
    """
    Parse a Burmeister context.

    Layout: ``B``, the context name, |G|, |M|, the object names, the
    attribute names and |G| grid lines over ``X``/``.``. A single blank line
    after |M|, as written by ConExp and similar tools, is tolerated. An empty
    name line falls back to ``default_name``.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != 'B':
        raise ContextFormatError('header must start with "B"', line=1)
    if len(lines) < 2:
        raise ContextFormatError('missing context name line', line=2)
    name = lines[1] or default_name
    n_objects = _read_count(lines, 2, 'object count')
    n_attrs = _read_count(lines, 3, 'attribute count')

    start = 4
    expected = start + n_objects + n_attrs + n_objects
    if len(lines) > start + 1 and lines[start].strip() == '':
        if len(lines) > expected and any(line.strip() for line in lines[expected:]):
            start += 1
        elif n_attrs == 0 and n_objects and lines[start + 1].strip():
            # with no attributes the grid lines are blank too
            start += 1
    objects = _read_names(lines, start, n_objects, 'object')
    attributes = _read_names(lines, start + n_objects, n_attrs, 'attribute')

    grid_start = start + n_objects + n_attrs
    rows = []
    for g in range(n_objects):
        index = grid_start + g
        if index >= len(lines) and n_attrs == 0:
            rows.append(0)
            continue
        if index >= len(lines):
            raise ContextFormatError('unexpected end of file in incidence grid', line=index + 1)
        cells = lines[index].rstrip()
        if len(cells) != n_attrs:
            raise ContextFormatError(
                f'row length {len(cells)} does not match {n_attrs} attributes', line=index + 1
            )
        bits = 0
        for m, cell in enumerate(cells):
            if cell in CXT_INCIDENT:
                bits |= 1 << m
            elif cell != CXT_EMPTY:
                raise ContextFormatError(f'illegal character {cell!r} in grid', line=index + 1)
        rows.append(bits)

    for index in range(grid_start + n_objects, len(lines)):
        if lines[index].strip():
            raise ContextFormatError('unexpected content after incidence grid', line=index + 1)

    return FormalContext(objects, attributes, rows, name=name)


def serialize_cxt(ctx: FormalContext, name: str | None = None) -> str:
    """Write ``ctx`` in Burmeister format with LF line endings."""
    lines = ['B', ctx.name if name is None else name, str(ctx.n_objects), str(ctx.n_attributes)]
    lines.extend(ctx.objects)
    lines.extend(ctx.attributes)
    for row in ctx.rows:
        lines.append(''.join('X' if row >> m & 1 else CXT_EMPTY for m in range(ctx.n_attributes)))
    return '\n'.join(lines) + '\n'


def parse_csv(text: str, default_name: str = '') -> FormalContext:
    """
    Parse a CSV incidence table.

    The header holds the attribute names after an ignored first cell; every
    later row is an object name followed by one cell per attribute. The first
    record is always the header, even when all of its cells are blank.
    """
    reader = csv.reader(io.StringIO(text))
    header = None
    objects, rows = [], []
    for record in reader:
        if not record:
            continue
        if header is None:
            header = [cell.strip() for cell in record[1:]]
            continue
        if len(record) != len(header) + 1:
            raise ContextFormatError(
                f'row has {len(record) - 1} cells, header has {len(header)} attributes',
                line=reader.line_num,
            )
        owned = []
        for m, cell in enumerate(record[1:]):
            token = cell.strip()
            if token in CSV_INCIDENT:
                owned.append(m)
            elif token not in CSV_EMPTY:
                raise ContextFormatError(f'unrecognized cell token {token!r}', line=reader.line_num)
        objects.append(record[0].strip())
        rows.append(make_bitset(owned))

    return FormalContext(objects, header or [], rows, name=default_name)


def serialize_csv(ctx: FormalContext) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow([''] + list(ctx.attributes))
    for obj, row in zip(ctx.objects, ctx.rows):
        owned = set(iter_indexes(row))
        writer.writerow([obj] + ['1' if m in owned else '0' for m in range(ctx.n_attributes)])
    return out.getvalue()


PARSERS = {
    'cxt': parse_cxt,
    'csv': parse_csv,
}


def load_context(path, fmt: str | None = None) -> FormalContext:
    """Read a context file; the format comes from ``fmt`` or the file extension."""
    path = Path(path)
    fmt = (fmt or path.suffix.lstrip('.')).lower()
    if fmt not in PARSERS:
        raise ContextFormatError(f'unknown context format {fmt!r} for {path.name}; use cxt or csv')
    with open(path, encoding='utf-8', newline='') as handle:
        text = handle.read()
    ctx = PARSERS[fmt](text, default_name=path.stem)
    logger.info(f'Loaded {fmt} context {path} with {ctx.n_objects} objects and {ctx.n_attributes} attributes')
    return ctx
