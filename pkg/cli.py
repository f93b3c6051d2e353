"""
Self-Dual Codes - Command Line
===============================
Entry point for the analyze / construct / extend / dual / verify / search /
suite pipelines.

Exit codes: 0 success, 1 mathematical failure (a certificate is written),
2 usage error, 3 internal error.
"""

import functools
import logging
import sys

import click
from rich.console import Console
from rich.table import Table

from config import get_config
from exceptions import SelfDualError, ValidationError
from formats import format_matrix, parse_problem, read_matrix, render_report
from services.construct import (
    decide_existence, extend_code, extended_code, regular_normal_code, theorem2_code,
    theorem3_code,
)
from services.group import group_make
from services.modrep import permutation_module
from services.verify import (
    brute_force_search, check_construction, classify_hull, dual_code, invariance_check,
)

logger = logging.getLogger(__name__)

MODES = ['theorem2', 'theorem3', 'lemma8']
SUITE_MODES = ['theorem2', 'theorem3', 'lemma7', 'lemma6', 'extend', 'all']


def configure_logging(verbose=False):
    """Send log records to stderr so stdout carries only artifacts."""
    level = logging.DEBUG if verbose else get_config().LOG_LEVEL
    logging.basicConfig(
        level=level,
        format='%(asctime)s %(levelname)s [%(name)s] %(message)s',
        stream=sys.stderr,
    )


def emit(text, out=None):
    if out:
        with open(out, 'w') as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


def emit_code(code, report_text, out):
    """Matrix to ``out`` (report beside it), or both to stdout separated by ``---``."""
    if out:
        emit(format_matrix(code), out)
        emit(report_text, f'{out}.report')
    else:
        emit(format_matrix(code) + '---\n' + report_text)


def handles_errors(func):
    """Turn toolkit errors into their exit codes, writing any attached certificate."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SelfDualError as exc:
            logger.error('%s: %s', type(exc).__name__, exc.message)
            report = getattr(exc, 'report', None)
            if report is not None:
                certificate = {'certificate': exc.as_dict(), **report.as_dict()}
                out = kwargs.get('out')
                emit(render_report(certificate), f'{out}.report' if out else None)
            click.echo(f'{type(exc).__name__}: {exc.message}', err=True)
            click.get_current_context().exit(exc.exit_code)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except OSError as exc:
            click.echo(f'error: {exc}', err=True)
            click.get_current_context().exit(2)
        except Exception:
            logger.exception('%s failed', func.__name__)
            click.get_current_context().exit(3)
    return wrapper


def load_problem(path):
    with open(path) as handle:
        spec = parse_problem(handle.read())
    return spec, *spec.build()


def resolve_seed(seed):
    return get_config().DEFAULT_SEED if seed is None else seed


def fixing_last_point(G):
    """G acting on its points plus one extra fixed point."""
    n = G.degree
    return group_make(n + 1, [g.images + (n,) for g in G.generators])


seed_option = click.option('--seed', type=int, default=None, help='Random seed (u64).')
in_option = click.option('--in', 'in_path', type=click.Path(exists=True, dir_okay=False),
                         help='Problem file.')
code_option = click.option('--code', 'code_path', type=click.Path(exists=True, dir_okay=False),
                           help='Generator matrix file.')
out_option = click.option('--out', type=click.Path(dir_okay=False), default=None,
                          help='Write the matrix here and the report to <out>.report.')


@click.group()
@click.option('--verbose', is_flag=True, help='Log at DEBUG level.')
def cli(verbose):
    """Self-dual permutation codes of finite groups."""
    configure_logging(verbose)


@cli.command()
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@seed_option
@out_option
@handles_errors
def analyze(in_path, seed, out):
    """Homogeneous decomposition of FX and the existence verdicts."""
    _, F, G, X = load_problem(in_path)
    verdict = decide_existence(X, F, resolve_seed(seed))
    if out:
        emit(render_report(verdict), out)
        return

    console = Console()
    classes = Table(title=f'FX over GF({F.order}), n = {X.degree}, |G| = {G.order}')
    for column in ('class', 'dim', 'multiplicity', 'self-dual', 'trivial'):
        classes.add_column(column)
    for c in verdict['classes']:
        classes.add_row(c['label'], str(c['dim']), str(c['multiplicity']),
                        'yes' if c['self_dual'] else 'no', 'yes' if c['trivial'] else 'no')
    console.print(classes)

    criteria = Table(title='Existence criteria')
    criteria.add_column('criterion')
    criteria.add_column('status')
    criteria.add_row('theorem2 (even multiplicities)', verdict['theorem2']['status'])
    criteria.add_row('proposition2 (no self-dual factor)', verdict['proposition2']['status'])
    for name in ('theorem3', 'corollary2', 'corollary3'):
        criteria.add_row(f'{name} (extended)', verdict['extended'][name]['status'])
    console.print(criteria)


@cli.command()
@click.option('--mode', required=True, type=click.Choice(MODES), help='Construction to run.')
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@seed_option
@out_option
@handles_errors
def construct(mode, in_path, seed, out):
    """Build a witness code and re-verify it before reporting success."""
    spec, F, G, X = load_problem(in_path)
    if spec.extend and mode == 'theorem2':
        raise ValidationError('extend = true needs a hull code (theorem3 or lemma8)',
                              rule='extend-mode')
    seed = resolve_seed(seed)
    if mode == 'theorem2':
        code, report = theorem2_code(X, F, seed)
        relation = 'self_dual'
    elif mode == 'theorem3':
        code, report = theorem3_code(G, X, F, seed)
        relation = 'hull_plus_e'
    else:
        code, report = regular_normal_code(X, F, seed)
        relation = 'hull_plus_e'
    check_construction(code, G, relation)

    if spec.extend and relation == 'hull_plus_e':
        code, lam = extend_code(code, X.degree, F)
        report.codes['extended'] = code
        report.summary['lambda'] = int(lam)
        check_construction(code, fixing_last_point(G), 'self_dual')
    emit_code(code, report.to_text(), out)


@cli.command()
@in_option
@code_option
@seed_option
@out_option
@handles_errors
def extend(in_path, code_path, seed, out):
    """Self-dual extended code from a hull code (--code) or a transitive problem (--in)."""
    if code_path:
        F, C = read_matrix(code_path)
        extended, lam = extend_code(C, C.n, F)
        report = {'operation': 'extend', 'degree': C.n, 'lambda': int(lam),
                  'relation': classify_hull(extended).relation}
        if in_path:
            _, _, G, _ = load_problem(in_path)
            check_construction(extended, fixing_last_point(G), 'self_dual')
        emit_code(extended, render_report(report), out)
    elif in_path:
        _, F, G, X = load_problem(in_path)
        extended, report = extended_code(X, F, resolve_seed(seed))
        check_construction(extended, fixing_last_point(G), 'self_dual')
        emit_code(extended, report.to_text(), out)
    else:
        raise ValidationError('extend needs --code or --in', rule='extend-input')


@cli.command()
@code_option
@in_option
@out_option
@handles_errors
def dual(code_path, in_path, out):
    """The dual code under the standard inner product."""
    if not code_path:
        raise ValidationError('dual needs --code', rule='dual-input')
    _, C = read_matrix(code_path)
    G = load_problem(in_path)[2] if in_path else None
    emit(format_matrix(dual_code(C, group=G)), out)


@cli.command()
@code_option
@in_option
@click.option('--expect', type=click.Choice(['self_dual', 'hull_plus_e', 'any']), default='any',
              help='Relation the code must have.')
@out_option
@handles_errors
def verify(code_path, in_path, expect, out):
    """Classify a code's hull and check it is G-invariant."""
    if not code_path or not in_path:
        raise ValidationError('verify needs --code and --in', rule='verify-input')
    _, C = read_matrix(code_path)
    _, _, G, _ = load_problem(in_path)
    group = fixing_last_point(G) if C.n == G.degree + 1 else G
    hull = classify_hull(C)
    invariant = invariance_check(C, group)
    passed = invariant and expect in ('any', hull.relation)
    emit(render_report({**hull.as_dict(), 'invariant': invariant,
                        'verdict': 'pass' if passed else 'fail'}), out)
    if not passed:
        click.get_current_context().exit(1)


@cli.command()
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--target', type=click.Choice(['self_dual', 'hull_plus_e']), default='self_dual')
@click.option('--method', type=click.Choice(['lattice', 'raw']), default='lattice')
@click.option('--budget', type=int, default=None, help='Cap on q^n for the enumeration.')
@out_option
@handles_errors
def search(in_path, target, method, budget, out):
    """Exhaustive search for an invariant code with the target relation."""
    _, F, _, X = load_problem(in_path)
    witness = brute_force_search(permutation_module(X, F), target, budget=budget, method=method)
    if witness is None:
        click.echo(f'exhausted: no {target} submodule', err=True)
        click.get_current_context().exit(1)
    emit(format_matrix(witness), out)


@cli.command()
@click.option('--mode', required=True, type=click.Choice(SUITE_MODES), help='Sweep to run.')
@click.option('--verbose', 'show_rows', is_flag=True, help='Print every instance.')
def suite(mode, show_rows):
    """Acceptance sweeps over the built-in group library."""
    from services.suite import SUITES, run_all

    result = run_all() if mode == 'all' else SUITES[mode]()
    click.echo(f'\n[suite --mode {mode}]')
    click.echo(result.get('details', str(result)))

    rows = result.get('failures', []) + (result.get('rows', []) if show_rows else [])
    if rows:
        table = Table()
        columns = list(dict.fromkeys(key for row in rows for key in row))
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*(str(row.get(column, '')) for column in columns))
        Console().print(table)
    if result['status'] != 'ok':
        sys.exit(3)


if __name__ == '__main__':
    cli()
