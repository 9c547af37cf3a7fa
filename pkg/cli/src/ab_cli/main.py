import inspect
import os
import sys

import click
from dotenv import load_dotenv
from loguru import logger

from ab_cli import __version__


def _python_type_to_click(param_type):
    """Map a Python type hint to a Click type."""
    if param_type == bool or param_type == 'bool':
        return bool
    if param_type == int or param_type == 'int':
        return click.INT
    return click.STRING


def _option_name(pname: str) -> str:
    """Flag spelling for a parameter: trailing underscores dropped (in_ -> in), underscores hyphenated."""
    return pname.rstrip('_').replace('_', '-')


def _run_verb(func, kwargs):
    """Call a verb, print its output and map failures onto exit codes (2 usage, 1 everything else)."""
    from ab_core.errors import AbelianCodeError, ParameterError, describe_error
    from ab_core.registry import VerbOutput

    try:
        result = func(**kwargs)
    except ParameterError as exc:
        raise click.UsageError(str(exc)) from exc
    except Exception as exc:
        envelope = describe_error(exc)['error']
        if isinstance(exc, AbelianCodeError):
            logger.debug(f"{envelope['type']}: {envelope['detail']}")
        else:
            logger.opt(exception=exc).debug(envelope['detail'])
        click.echo(f"error: {envelope['type']}: {envelope['message']}", err=True)
        sys.exit(1)

    if isinstance(result, VerbOutput):
        click.echo(result.text)
        if not result.ok:
            sys.exit(1)
    else:
        click.echo(result)


def _make_verb_command(func, name):
    """Build a Click command for a single verb function."""
    from ab_core.registry import extract_description, extract_parameter_help, parameter_types

    sig = inspect.signature(func)
    hints = parameter_types(func)
    help_text = extract_parameter_help(func)

    # A required code-file parameter may also be given positionally (abelian-workbench mindist h3.code)
    has_path = 'in_' in sig.parameters

    params = []
    if has_path:
        params.append(click.Argument(['_path'], required=False, metavar='[PATH]'))
    for pname, param in sig.parameters.items():
        click_type = _python_type_to_click(hints.get(pname, str))
        flag = _option_name(pname)
        required = param.default is inspect.Parameter.empty and not (has_path and pname == 'in_')

        if click_type is bool:
            params.append(
                click.Option(
                    [f'--{flag}/--no-{flag}', pname],
                    default=param.default if param.default is not inspect.Parameter.empty else False,
                    help=help_text.get(pname, f'{flag} flag'),
                )
            )
        else:
            params.append(
                click.Option(
                    [f'--{flag}', pname],
                    type=click_type,
                    required=required,
                    default=None if param.default is inspect.Parameter.empty else param.default,
                    help=help_text.get(pname, flag),
                )
            )

    def callback(**kwargs):
        # Map positional PATH onto --in
        if has_path:
            path = kwargs.pop('_path', None)
            if kwargs.get('in_') and path:
                raise click.UsageError('give the code file either as PATH or with --in, not both')
            kwargs['in_'] = kwargs.get('in_') or path
            if not kwargs['in_']:
                raise click.UsageError(f'a code file is required. Usage: abelian-workbench {name} PATH')
        _run_verb(func, kwargs)

    return click.Command(
        name=name,
        callback=callback,
        params=params,
        help=extract_description(func),
    )


class VerbGroup(click.Group):
    """Click group that lazily loads verb commands from the registry."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._verbs_loaded = False

    def _load_verbs(self):
        if self._verbs_loaded:
            return
        self._verbs_loaded = True

        from ab_core.registry import _all_verbs_registry, ensure_verbs_loaded, verb_name

        ensure_verbs_loaded()

        for func in _all_verbs_registry:
            name = verb_name(func)
            self.add_command(_make_verb_command(func, name))

    def list_commands(self, ctx):
        self._load_verbs()
        return super().list_commands(ctx)

    def get_command(self, ctx, cmd_name):
        self._load_verbs()
        return super().get_command(ctx, cmd_name.lower().replace('_', '-'))


def _configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level='DEBUG' if verbose else 'WARNING')


@click.group(cls=VerbGroup, context_settings=dict(
    help_option_names=['-h', '--help'],
    max_content_width=200,
))
@click.version_option(version=__version__, prog_name="abelian-workbench")
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.pass_context
def cli(ctx, verbose):
    """Abelian code workbench - build, multiply and certify bivariate abelian codes.

    \b
    Quick start:
      abelian-workbench bch --q 2 --r 7 --delta 3 --b 1 --out hamming.code
      abelian-workbench multiply hamming.code --n 3 --out h3.code
      abelian-workbench mindist h3.code
      abelian-workbench reproduce --example 2
    Budgets: ABELIAN_MSD_ORBIT_CAP, ABELIAN_ENUMERATION_CAP, ABELIAN_FIELD_SIZE_CAP (also read from .env).
    """
    load_dotenv(os.path.join(os.getcwd(), '.env'))
    _configure_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose


if __name__ == "__main__":
    cli()
