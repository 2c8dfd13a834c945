import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path

import click
from dotenv import find_dotenv, load_dotenv
from pydantic import ValidationError

from . import commands
from .data_models.commands import CommandResult
from .data_models.enums import (
    AlphabetName,
    ConversionDirection,
    DesignKind,
    NegaConSet,
    ProductMode,
    SymmetryRequirement,
    VerifyProperty,
)
from .data_models.search import SearchSpec
from .exceptions import PreconditionError, QuatSeqError, VerificationError
from .settings import get_settings
from .version import __version__

logger = logging.getLogger(__name__)

_JSON_OPTION = click.option(
    "--json", "as_json", is_flag=True, default=False, help="Print the JSON payload instead."
)


def _choices(enum: type) -> click.Choice:
    return click.Choice([member.value for member in enum])


def _read_input(value: str) -> str:
    """An inline sequence, a file path, or `-` for standard input."""
    if value == "-":
        return click.get_text_stream("stdin").read()
    path = Path(value)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return value


def _run(ctx: click.Context, as_json: bool, fn: Callable[..., CommandResult], *args, **kwargs) -> None:  # noqa: ANN002, ANN003, FBT001
    """Runs a command body and maps its outcome to output and an exit code."""
    try:
        result = fn(*args, **kwargs)
    except (PreconditionError, VerificationError) as e:
        click.echo(str(e), err=True)
        ctx.exit(1)
    except (QuatSeqError, ValidationError, ValueError, OSError) as e:
        click.echo(str(e), err=True)
        ctx.exit(2)
    if as_json:
        click.echo(json.dumps(result.payload, indent=2))
    else:
        click.echo(result.report)
    ctx.exit(int(result.exit_code))


@click.group()
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx: click.Context) -> None:
    """quatseq - perfect and odd perfect quaternion sequences and Williamson designs."""
    # usecwd=True ensures that we look for .env in the directory where the
    # command is run, rather than where this file is installed.
    load_dotenv(find_dotenv(usecwd=True))
    try:
        settings = get_settings()
    except ValidationError as e:
        click.echo(f"Invalid configuration: {e}", err=True)
        ctx.exit(2)
    logging.basicConfig(level=settings.logging_level, stream=sys.stderr)


@cli.command()
@click.argument("source")
@click.option(
    "--property", "prop", type=_choices(VerifyProperty), required=True, help="Property to check."
)
@_JSON_OPTION
@click.pass_context
def verify(ctx: click.Context, source: str, prop: str, *, as_json: bool) -> None:
    """Verify a property of SOURCE (inline text, a file, or - for stdin)."""
    _run(ctx, as_json, commands.cmd_verify, _read_input(source), VerifyProperty(prop))


@cli.group()
def construct() -> None:
    """Run a construction; the output is always re-verified."""


@construct.command()
@click.option("--t", "t", type=click.IntRange(min=0), required=True, help="Length 2^t.")
@click.option(
    "--set", "nega_set", type=_choices(NegaConSet), default=None,
    help="Golay family for the nega-Williamson ingredients (default 2).",
)
@_JSON_OPTION
@click.pass_context
def power2(ctx: click.Context, t: int, nega_set: str | None, *, as_json: bool) -> None:
    """Symmetric perfect Q8 sequence of length 2^t."""
    which = NegaConSet(nega_set) if nega_set else None
    _run(ctx, as_json, commands.cmd_construct_power2, t, which)


@construct.command("main")
@click.option("--williamson", required=True, help="Even-length Williamson quad.")
@click.option("--nega", required=True, help="Antipalindromic nega-Williamson quad.")
@_JSON_OPTION
@click.pass_context
def main_construction(ctx: click.Context, williamson: str, nega: str, *, as_json: bool) -> None:
    """Williamson quad of length 4n from even-length inputs."""
    _run(ctx, as_json, commands.cmd_construct_main, _read_input(williamson), _read_input(nega))


@construct.command("odd-variant")
@click.option("--williamson", required=True, help="Odd-length Williamson quad.")
@click.option("--nega", required=True, help="Palindromic nega-Williamson quad.")
@_JSON_OPTION
@click.pass_context
def odd_variant(ctx: click.Context, williamson: str, nega: str, *, as_json: bool) -> None:
    """Williamson quad of length 4n from odd-length inputs."""
    _run(
        ctx, as_json, commands.cmd_construct_odd_variant, _read_input(williamson), _read_input(nega)
    )


@construct.command()
@click.option("--golay", required=True, help="Golay pair, e.g. '++,+-'.")
@click.option("--set", "which", type=_choices(NegaConSet), default=NegaConSet.SET1.value)
@_JSON_OPTION
@click.pass_context
def negcon(ctx: click.Context, golay: str, which: str, *, as_json: bool) -> None:
    """Palindromic nega-Williamson quad with the Q8-property from a Golay pair."""
    _run(ctx, as_json, commands.cmd_construct_negcon, _read_input(golay), NegaConSet(which))


@construct.command("odd-perfect")
@click.option("--golay", required=True, help="Golay pair, e.g. '++,+-'.")
@_JSON_OPTION
@click.pass_context
def odd_perfect(ctx: click.Context, golay: str, *, as_json: bool) -> None:
    """Palindromic odd perfect Q8 sequence of length 8n from a Golay pair."""
    _run(ctx, as_json, commands.cmd_construct_odd_perfect, _read_input(golay))


@construct.command()
@click.option("--x", "x", required=True, help="First factor.")
@click.option("--y", "y", required=True, help="Second factor, of coprime length.")
@click.option("--mode", type=_choices(ProductMode), default=ProductMode.PERIODIC.value)
@_JSON_OPTION
@click.pass_context
def product(ctx: click.Context, x: str, y: str, mode: str, *, as_json: bool) -> None:
    """Product of a perfect (or odd perfect) pair of coprime lengths."""
    _run(
        ctx, as_json, commands.cmd_construct_product, _read_input(x), _read_input(y), ProductMode(mode)
    )


@construct.command()
@click.option("--perfect", required=True, help="Perfect sequence to arrange.")
@click.option("--cols", type=click.IntRange(min=1), default=4, show_default=True)
@_JSON_OPTION
@click.pass_context
def matrix(ctx: click.Context, perfect: str, cols: int, *, as_json: bool) -> None:
    """Write a perfect sequence row by row into a matrix."""
    _run(ctx, as_json, commands.cmd_construct_matrix, _read_input(perfect), cols)


@construct.command("nega-odd")
@click.option("--nega", required=True, help="Palindromic nega-Williamson quad.")
@_JSON_OPTION
@click.pass_context
def nega_odd(ctx: click.Context, nega: str, *, as_json: bool) -> None:
    """Palindromic odd perfect Q+ sequence from a palindromic nega-Williamson quad."""
    _run(ctx, as_json, commands.cmd_construct_nega_odd, _read_input(nega))


@construct.command("pal-antipal")
@click.option("--nega", required=True, help="Even-length nega-Williamson quad.")
@click.option(
    "--direction", type=_choices(ConversionDirection), default=ConversionDirection.FORWARD.value
)
@_JSON_OPTION
@click.pass_context
def pal_antipal(ctx: click.Context, nega: str, direction: str, *, as_json: bool) -> None:
    """Convert between palindromic and antipalindromic nega-Williamson quads."""
    _run(
        ctx,
        as_json,
        commands.cmd_construct_pal_antipal,
        _read_input(nega),
        ConversionDirection(direction),
    )


@construct.command()
@click.option("--t", "t", type=click.IntRange(min=0), required=True, help="Length 2^t.")
@_JSON_OPTION
@click.pass_context
def golay(ctx: click.Context, t: int, *, as_json: bool) -> None:
    """Golay pair of length 2^t by repeated interleaving."""
    _run(ctx, as_json, commands.cmd_construct_golay, t)


@cli.command()
@click.option("--kind", type=_choices(DesignKind), required=True)
@click.option("--length", type=click.IntRange(min=1), required=True)
@click.option("--alphabet", type=_choices(AlphabetName), default=AlphabetName.SIGNS.value)
@click.option("--symmetry", type=_choices(SymmetryRequirement), default=SymmetryRequirement.NONE.value)
@click.option("--q8", "q8_property", is_flag=True, default=False, help="Require the Q8-property.")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Maximum results listed.")
@click.option("--catalog", "as_catalog", is_flag=True, default=False, help="List catalog lines.")
@_JSON_OPTION
@click.pass_context
def search(
    ctx: click.Context,
    kind: str,
    length: int,
    alphabet: str,
    symmetry: str,
    cap: int | None,
    *,
    q8_property: bool,
    as_catalog: bool,
    as_json: bool,
) -> None:
    """Exhaustively enumerate a small design space and print the exact count."""
    try:
        spec = SearchSpec(
            kind=DesignKind(kind),
            length=length,
            alphabet=AlphabetName(alphabet),
            symmetry=SymmetryRequirement(symmetry),
            q8_property=q8_property,
            cap=cap,
        )
    except ValidationError as e:
        raise click.UsageError(str(e)) from e
    _run(ctx, as_json, commands.cmd_search, spec, as_catalog=as_catalog)


@cli.group()
def catalog() -> None:
    """Catalog files of sequences."""


@catalog.command("verify")
@click.argument("file", required=False, type=click.Path(exists=True, dir_okay=False))
@_JSON_OPTION
@click.pass_context
def catalog_verify(ctx: click.Context, file: str | None, *, as_json: bool) -> None:
    """Verify every entry of FILE (default: the configured or shipped catalog)."""
    _run(ctx, as_json, commands.cmd_catalog, file)


def main() -> None:
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
