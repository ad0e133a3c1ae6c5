import os
import sys
import asyncio
import click

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.log import setup_logging

setup_logging()

from src.config import settings
from src.main import handle_command
from src.structure import Command
from src.data.processer.textfile import TextFile as DataProcesser
from src.data.utils.field import parse_symmetries


class Run:
    """
    Class representing one command line invocation.
    """

    def __init__(self):
        """
        Initialize the Run object.
        """
        self.data_processer = DataProcesser()

    def execute(self, command: Command) -> int:
        """
        Handle the command, print its output and return the exit status.
        """
        command = asyncio.run(handle_command(command, self.data_processer))
        for line in command.output:
            click.echo(line)
        if not command.valid:
            click.echo(f"error: {command.error}", err=True)
            return 1
        return 0


def dispatch(ctx: click.Context, name: str, /, **params) -> None:
    params = {k: v for k, v in params.items() if v is not None}
    ctx.exit(Run().execute(Command(name, params)))


def symmetries_option(ctx, param, value):
    parsed = parse_symmetries(value)
    if parsed is None:
        raise click.BadParameter("expected a subset of m,r,rm")
    return tuple(parsed)


def invariant_options(func):
    options = [
        click.option("--quandle", "-q", required=True, type=click.Path(exists=True)),
        click.option("--name", help="quandle record to use; defaults to the first"),
        click.option("--braid", help='inline braid "<n> <k> <w1 ... wk>"'),
        click.option("--knots", type=click.Path(exists=True)),
        click.option("--base", type=int, default=1, show_default=True),
        click.option("--workers", type=int, default=lambda: settings.workers),
        click.option("--out", type=click.Path()),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.option("--max-inn-order", type=int, help="element enumeration bound")
def cli(max_inn_order):
    """Tangle coloring invariants of knots given as braid words."""
    if max_inn_order is not None:
        settings.max_inn_order = max_inn_order


@cli.group()
def quandle():
    """Build and inspect quandles."""


@quandle.command("check")
@click.argument("file", type=click.Path(exists=True))
@click.pass_context
def quandle_check(ctx, file):
    dispatch(ctx, "quandle-check", file=file)


@quandle.command("info")
@click.option("--quandle", "-q", type=click.Path(exists=True))
@click.option("--name")
@click.option("--group", type=click.Path(exists=True), help="build GAlex from a group file")
@click.option("--auto", help="automorphism record name")
@click.pass_context
def quandle_info(ctx, quandle, name, group, auto):
    if quandle is None and group is None:
        raise click.UsageError("give --quandle or --group")
    dispatch(ctx, "quandle-info", quandle=quandle, name=name, group=group, auto=auto)


@quandle.command("galex")
@click.option("--group", required=True, type=click.Path(exists=True))
@click.option("--group-name")
@click.option("--auto")
@click.option("--list", "list_", is_flag=True, help="list Aut(G) conjugacy classes")
@click.option("--name")
@click.option("--out", type=click.Path())
@click.pass_context
def quandle_galex(ctx, group, group_name, auto, list_, name, out):
    dispatch(
        ctx,
        "quandle-galex",
        group=group,
        group_name=group_name,
        auto=auto,
        list=list_ or None,
        name=name,
        out=out,
    )


@quandle.command("conj")
@click.option("--permgroup", required=True, type=click.Path(exists=True))
@click.option("--group-name")
@click.option("--element", required=True, help='e.g. "(1 2)" or "2 1 3"')
@click.option("--name")
@click.option("--out", type=click.Path())
@click.pass_context
def quandle_conj(ctx, permgroup, group_name, element, name, out):
    dispatch(
        ctx,
        "quandle-conj",
        permgroup=permgroup,
        group_name=group_name,
        element=element,
        name=name,
        out=out,
    )


@quandle.command("homog")
@click.option("--group", required=True, type=click.Path(exists=True))
@click.option("--auto")
@click.option("--subgroup", default="fix", show_default=True)
@click.option("--name")
@click.option("--out", type=click.Path())
@click.pass_context
def quandle_homog(ctx, group, auto, subgroup, name, out):
    dispatch(
        ctx, "quandle-homog", group=group, auto=auto, subgroup=subgroup, name=name, out=out
    )


@cli.group()
def cocycle():
    """Extract and check quandle 2-cocycles."""


@cocycle.command("extract")
@click.option("--group", required=True, type=click.Path(exists=True))
@click.option("--auto")
@click.option("--subgroup", default="fix", show_default=True)
@click.option("--section", help="base-to-total labels")
@click.option("--name")
@click.option("--out", type=click.Path())
@click.option("--extension-out", type=click.Path())
@click.pass_context
def cocycle_extract(ctx, group, auto, subgroup, section, name, out, extension_out):
    dispatch(
        ctx,
        "cocycle-extract",
        group=group,
        auto=auto,
        subgroup=subgroup,
        section=section,
        name=name,
        out=out,
        extension_out=extension_out,
    )


@cocycle.command("check")
@click.argument("file", type=click.Path(exists=True))
@click.pass_context
def cocycle_check(ctx, file):
    dispatch(ctx, "cocycle-check", file=file)


@cli.command("psi")
@invariant_options
@click.pass_context
def psi(ctx, **params):
    dispatch(ctx, "psi", **params)


@cli.command("symmetry")
@invariant_options
@click.option("--symmetries", default="m,r,rm", callback=symmetries_option)
@click.pass_context
def symmetry(ctx, **params):
    dispatch(ctx, "symmetry", **params)


@cli.command("sweep")
@click.option("--quandles", type=click.Path(exists=True, file_okay=False), default=lambda: os.path.join(settings.fixtures, "quandles"))
@click.option("--knots", required=True, type=click.Path(exists=True))
@click.option("--symmetries", default="m,r,rm", callback=symmetries_option)
@click.option("--base", type=int, default=1, show_default=True)
@click.option("--workers", type=int, default=lambda: settings.workers)
@click.option("--out", type=click.Path())
@click.pass_context
def sweep(ctx, **params):
    dispatch(ctx, "sweep", **params)


if __name__ == "__main__":
    cli()
