import click

from ..common import json_option, run
from ..render import Report
from .suite import ITEMS, run_suite


@click.command(help="Run the worked examples and randomized identities")
@click.option("--seed", default=0, help="Seed for the randomized items.")
@json_option
@click.pass_context
def verify(ctx: click.Context, seed: int, as_json: bool) -> None:
    inputs = {"seed": seed}

    def build() -> Report:
        checks = run_suite(seed)
        result = {
            "items": len(ITEMS),
            "checks": len(checks),
            "failed": sum(1 for c in checks if c.failed),
        }
        return Report("verify", inputs, result, checks)

    ctx.exit(run("verify", inputs, as_json, build))
