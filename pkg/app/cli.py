"""
Flask CLI commands for expanding expressions and verifying identities.

Exit codes: 0 all checks pass, 1 an identity fails, 2 usage or parse error,
3 evaluation error.
"""
import functools
import json

import click
from flask import current_app
from flask.cli import with_appcontext

from app.services.expression_evaluator import evaluate
from app.services.expression_parser import ParseError, parse
from app.services.identities import UnknownIdentity, list_identities
from app.services.residual import residual_report
from app.services.series import QSeriesError, format_series
from app.services.verifier import verify, verify_all
from app.utils.serialization import to_json_line

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_EVALUATION = 3


def _exit_on_errors(command):
    """Map library errors to the documented exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except (ParseError, UnknownIdentity) as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_USAGE)
        except QSeriesError as e:
            current_app.logger.error(f"Evaluation failed: {e}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_EVALUATION)
    return wrapper


def _suite_order(order):
    return current_app.config['SUITE_ORDER'] if order is None else order


@click.command('expand')
@click.argument('expression')
@click.option('--order', type=int, default=None, help='Truncation order (default: SUITE_ORDER)')
@click.option('--json', 'as_json', is_flag=True, help='Print the complete series as JSON')
@with_appcontext
@_exit_on_errors
def expand_command(expression, order, as_json):
    """
    Expand an expression as a q-series.

    Usage:
        $ flask expand "J(1)^2 * chi0()" --order 30
        $ flask expand "f(1,2,1; q, q)" --json
    """
    series = evaluate(parse(expression), _suite_order(order))
    if as_json:
        click.echo(series.to_json())
    else:
        click.echo(format_series(series, current_app.config['DISPLAY_TERMS']))


def _report_line(report) -> str:
    if report.passed:
        return (f'PASS {report.name} (order {report.order_checked}, '
                f'{report.cases_checked} case(s), {report.wall_time:.2f}s)')
    mismatch = report.first_mismatch
    return (f'FAIL {report.name} [{mismatch.case}] at q^{mismatch.exponent}: '
            f'lhs={mismatch.lhs} rhs={mismatch.rhs}')


@click.command('verify')
@click.argument('name', required=False)
@click.option('--all', 'run_all', is_flag=True, help='Verify every registered identity')
@click.option('--order', type=int, default=None, help='Comparison order (default: per identity)')
@click.option('--jobs', type=int, default=None, help='Worker processes for --all (default: VERIFY_JOBS)')
@click.option('--json', 'as_json', is_flag=True, help='One JSON report per line')
@with_appcontext
@_exit_on_errors
def verify_command(name, run_all, order, jobs, as_json):
    """
    Verify one identity, or all of them with --all.

    Usage:
        $ flask verify newid-1 --order 50
        $ flask verify --all --order 60 --json --jobs 4
    """
    if bool(name) == run_all:
        raise click.UsageError('Give exactly one of NAME or --all')
    if jobs is not None and jobs < 1:
        raise click.BadParameter('must be at least 1', param_hint='--jobs')

    reports = verify_all(order, jobs) if run_all else [verify(name, order)]
    for report in reports:
        click.echo(to_json_line(report.to_dict()) if as_json else _report_line(report))

    failed = [r.name for r in reports if not r.passed]
    if not as_json and run_all:
        click.echo(f'\n{len(reports) - len(failed)} of {len(reports)} identities passed')
    if failed:
        click.get_current_context().exit(EXIT_FAILED)


@click.command('residual')
@click.option('--order', type=int, default=None, help='Truncation order (default: SUITE_ORDER)')
@click.option('--stability', type=int, default=None, help='Also recompute at this higher order and compare')
@click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON')
@with_appcontext
@_exit_on_errors
def residual_command(order, stability, as_json):
    """
    Compute the residual of the conjectured g_{1,3,1,3,3,1}(q,q,q) expansion.

    Usage:
        $ flask residual --order 60 --stability 80 --json
    """
    order = _suite_order(order)
    if stability is not None and stability < order:
        raise click.BadParameter(f"must be at least the residual order {order}", param_hint="--stability")
    report = residual_report(order, stability)
    if as_json:
        click.echo(to_json_line(report.to_dict()))
        return
    click.echo(format_series(report.series, current_app.config['DISPLAY_TERMS']))
    click.echo(f"  integral coefficients: {'yes' if report.integral else 'no'}")
    if 'stable' in report.details:
        click.echo(f"  stable through q^{report.details['order']} at order "
                   f"{report.details['stability_order']}: {'yes' if report.details['stable'] else 'no'}")


@click.command('list')
@click.option('--json', 'as_json', is_flag=True, help='One JSON object per identity')
@with_appcontext
def list_command(as_json):
    """List registered identities with their sources."""
    for identity_class in list_identities():
        info = identity_class.describe()
        if as_json:
            click.echo(json.dumps(info))
        else:
            click.echo(f"{info['name']:<28} [{info['group']}] {info['source']}")


def init_app(app):
    """Register CLI commands with Flask app."""
    app.cli.add_command(expand_command)
    app.cli.add_command(verify_command)
    app.cli.add_command(residual_command)
    app.cli.add_command(list_command)
