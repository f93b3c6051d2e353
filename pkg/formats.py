"""
Self-Dual Codes - Text Formats
===============================
Plain-text formats shared by the CLI and the services:

  * generator matrices  header ``q=<q> n=<n> k=<k>`` then one row per line
  * reports             ``key: value`` lines nested by two-space indentation
  * problems            ``q = p^m``, ``n = N``, ``gen = ...`` lines, ``#`` comments
"""

import math
import re
from dataclasses import dataclass, field

from exceptions import NotPrime, ParseError, ValidationError
from services.gf import field_from_order, field_make
from services.group import GSet, group_make
from services.linalg import Subspace

HEADER_RE = re.compile(r'^q=(\d+) n=(\d+) k=(\d+)$')
FIELD_RE = re.compile(r'^(\d+)(?:\^(\d+))?$')
INDENT = '  '


# ---------------------------------------------------------------------------
# Generator matrices
# ---------------------------------------------------------------------------

def matrix_rows(M):
    """Rows of a field matrix as space-separated integer strings."""
    return [' '.join(str(int(x)) for x in row) for row in M]


def format_matrix(code):
    """
    Render a code's generator matrix

    Args:
        code: Subspace whose RREF basis is written

    Returns:
        str: header line plus one line per basis row, newline terminated
    """
    lines = [f'q={code.GF.order} n={code.n} k={code.dim}'] + matrix_rows(code.basis)
    return '\n'.join(lines) + '\n'


def parse_matrix(text):
    """
    Parse a generator matrix

    Returns:
        (FiniteField, FieldArray of shape (k, n))
    """
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    lines = [(i, line) for i, line in lines if line and not line.startswith('#')]
    if not lines:
        raise ParseError('empty matrix file', line=1)
    number, header = lines[0]
    match = HEADER_RE.match(header)
    if not match:
        raise ParseError(f'expected "q=<q> n=<n> k=<k>", got {header!r}', line=number, column=1)
    q, n, k = (int(g) for g in match.groups())
    F = field_from_order(q)

    rows = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(f'row has {len(tokens)} entries, expected {n}', line=number)
        row = []
        for token in tokens:
            if not token.isdigit() or int(token) >= q:
                raise ParseError(f'{token!r} is not an element of GF({q})',
                                 line=number, column=line.index(token) + 1)
            row.append(int(token))
        rows.append(row)
    if len(rows) != k:
        raise ParseError(f'found {len(rows)} rows, header says {k}', line=number)
    return F, F.GF(rows).reshape(k, n) if k else F.zeros((0, n))


def read_code(text):
    """Parse a matrix file into (FiniteField, Subspace)."""
    F, M = parse_matrix(text)
    return F, Subspace.span(F.GF, M, M.shape[1])


# ---------------------------------------------------------------------------
# Structured reports
# ---------------------------------------------------------------------------

def _scalar(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return 'none'
    return str(value)


def _render(value, depth, lines):
    pad = INDENT * depth
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f'{pad}{key}:')
                _render(item, depth + 1, lines)
            elif isinstance(item, (dict, list)):
                lines.append(f'{pad}{key}: []' if isinstance(item, list) else f'{pad}{key}: {{}}')
            else:
                lines.append(f'{pad}{key}: {_scalar(item)}')
    else:
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f'{pad}-')
                _render(item, depth + 1, lines)
            else:
                lines.append(f'{pad}- {_scalar(item)}')


def render_report(mapping):
    """Render nested dicts and lists as indented ``key: value`` text."""
    lines = []
    _render(mapping, 0, lines)
    return '\n'.join(lines) + '\n'


# ---------------------------------------------------------------------------
# Problems
# ---------------------------------------------------------------------------

@dataclass
class ProblemSpec:
    p: int
    m: int
    n: int
    generators: list = field(default_factory=list)
    extend: bool = False
    _built: tuple = field(default=None, init=False, repr=False, compare=False)

    @property
    def q(self):
        return self.p ** self.m

    def build(self):
        """(FiniteField, PermGroup, natural GSet) for this problem."""
        if self._built is None:
            F = field_make(self.p, self.m)
            G = group_make(self.n, self.generators)
            self._built = (F, G, GSet.natural(G))
        return self._built


def _value(line, number, key):
    _, _, value = line.partition('=')
    column = line.index('=') + 2
    value = value.strip()
    if not value:
        raise ParseError(f'missing value for {key!r}', line=number, column=column)
    return value, column


def parse_problem(text):
    """
    Parse and validate a problem description

    The group generated by the ``gen`` lines is enumerated, and its order
    must be coprime to q.

    Returns:
        ProblemSpec
    """
    q = n = None
    generators, extend = [], False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue
        if '=' not in line:
            raise ParseError(f'expected "key = value", got {line.strip()!r}', line=number, column=1)
        key = line.split('=', 1)[0].strip()
        value, column = _value(line, number, key)

        if key == 'q':
            match = FIELD_RE.match(value)
            if not match:
                raise ParseError(f'field must be written p^m, got {value!r}', line=number, column=column)
            if match.group(2) is None:
                try:
                    F = field_from_order(int(match.group(1)))
                except NotPrime:
                    raise ParseError(f'{value} is not a prime power', line=number,
                                     column=column) from None
                q = (F.p, F.m)
            else:
                q = (int(match.group(1)), int(match.group(2)))
        elif key == 'n':
            if not value.isdigit() or int(value) < 1:
                raise ParseError(f'degree must be a positive integer, got {value!r}',
                                 line=number, column=column)
            n = int(value)
        elif key == 'gen':
            if n is None:
                raise ParseError('"gen" before "n"', line=number, column=1)
            images = []
            for token in value.split():
                if not token.isdigit():
                    raise ParseError(f'{token!r} is not a point', line=number,
                                     column=line.index(token, column - 1) + 1)
                images.append(int(token))
            if sorted(images) != list(range(n)):
                raise ParseError(f'not a bijection on 0..{n - 1}: {value}', line=number, column=column)
            generators.append(tuple(images))
        elif key == 'extend':
            if value not in ('true', 'false'):
                raise ParseError(f'extend must be true or false, got {value!r}',
                                 line=number, column=column)
            extend = value == 'true'
        else:
            raise ParseError(f'unknown key {key!r}', line=number, column=1)

    if q is None or n is None:
        raise ParseError('both "q" and "n" are required', line=1)
    spec = ProblemSpec(p=q[0], m=q[1], n=n, generators=generators, extend=extend)
    F, G, _ = spec.build()
    if math.gcd(G.order, F.p) != 1:
        raise ValidationError(f'gcd(|G|, q) = gcd({G.order}, {F.order}) != 1', rule='coprime')
    return spec


def format_problem(spec):
    lines = [f'q = {spec.p}^{spec.m}', f'n = {spec.n}']
    lines += ['gen = ' + ' '.join(map(str, g)) for g in spec.generators]
    if spec.extend:
        lines.append('extend = true')
    return '\n'.join(lines) + '\n'


def write_matrix(code, path):
    with open(path, 'w') as handle:
        handle.write(format_matrix(code))


def read_matrix(path):
    """Read a matrix file into (FiniteField, Subspace)."""
    with open(path) as handle:
        return read_code(handle.read())
