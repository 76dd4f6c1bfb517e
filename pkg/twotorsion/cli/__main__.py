import logging
import sys
from typing import Any

import click
import pkg_resources

from .. import __version__
from .common import EXIT_OK, EXIT_USAGE
from .elliptic import elliptic_q2_command, elliptic_table
from .forms import conjecture, gw_trace_form
from .hyperelliptic import hyper_q2, hyper_table
from .signed_count import signed_count
from .theta import odd_signed_sum, theta_counts_command
from .verify import verify

LOG_LEVELS = ["error", "warning", "info", "debug"]

_LOGGER = logging.getLogger(__name__)


class ExitCodeGroup(click.Group):
    """A group whose usage errors exit with 1 and commands choose their code."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs.pop("standalone_mode", None)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


@click.group(cls=ExitCodeGroup)
@click.option("--log-level", type=click.Choice(LOG_LEVELS), default="warning")
def cli(log_level: str) -> None:
    level = getattr(logging, log_level.upper())
    logging.basicConfig(level=level)
    _LOGGER.debug("twotorsion version: %s", get_version())


@cli.command()
def version() -> None:
    """Print installed package version."""
    print(get_version())


def get_version() -> str:
    try:
        return pkg_resources.get_distribution("twotorsion").version
    except pkg_resources.DistributionNotFound:
        return __version__


cli.add_command(elliptic_q2_command)
cli.add_command(elliptic_table)
cli.add_command(hyper_q2)
cli.add_command(hyper_table)
cli.add_command(signed_count)
cli.add_command(theta_counts_command)
cli.add_command(odd_signed_sum)
cli.add_command(gw_trace_form)
cli.add_command(conjecture)
cli.add_command(verify)

if __name__ == "__main__":
    cli()
