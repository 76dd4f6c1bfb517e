from typing import Any, Dict, Optional, Tuple

import click

from ..f2_theta import (
    F2Vector,
    OrientationParity,
    RealCurveType,
    odd_theta_signed_sum,
    theta_counts,
    theta_counts_closed_form,
)
from .common import bits_text, json_option, run, type_options
from .parser import BITS
from .render import Check, Report


@click.command(
    name="theta-counts",
    help="Even and odd real theta characteristics with given orientation and parity",
)
@type_options
@click.option("--orientation", type=BITS, help="Offset u1 on X_1..X_s (bits).")
@click.option("--parity", type=BITS, help="Parity vector on X_1..X_s (bits).")
@json_option
@click.pass_context
def theta_counts_command(
    ctx: click.Context,
    genus: int,
    s: int,
    a: int,
    orientation: Optional[Tuple[int, ...]],
    parity: Optional[Tuple[int, ...]],
    as_json: bool,
) -> None:
    inputs: Dict[str, Any] = {
        "g": genus,
        "s": s,
        "a": a,
        "orientation": None if orientation is None else bits_text(orientation),
        "parity": None if parity is None else bits_text(parity),
    }

    def build() -> Report:
        t = RealCurveType(genus, s, a)
        op = OrientationParity(
            (0,) * t.s if orientation is None else orientation,
            (0,) * t.s if parity is None else parity,
        )
        even, odd = theta_counts(t, op)
        expected = theta_counts_closed_form(t, op)
        result = {"even": even, "odd": odd}
        checks = [
            Check.compare(
                "closed form (even, odd)",
                "{}, {}".format(*expected),
                "{}, {}".format(even, odd),
            )
        ]
        return Report("theta-counts", inputs, result, checks)

    ctx.exit(run("theta-counts", inputs, as_json, build))


@click.command(
    name="odd-signed-sum",
    help="Signed count of real 2-torsion b with nu - b odd",
)
@type_options
@click.option("--nu", type=BITS, required=True, help="The 2g bits of nu: c_u then c_l.")
@json_option
@click.pass_context
def odd_signed_sum(
    ctx: click.Context,
    genus: int,
    s: int,
    a: int,
    nu: Tuple[int, ...],
    as_json: bool,
) -> None:
    inputs: Dict[str, Any] = {"g": genus, "s": s, "a": a, "nu": bits_text(nu)}

    def build() -> Report:
        t = RealCurveType(genus, s, a)
        if len(nu) != 2 * t.g:
            raise click.UsageError(
                "--nu needs {} bits, got {}".format(2 * t.g, len(nu))
            )
        v = F2Vector.from_bits(nu)
        total = odd_theta_signed_sum(t, v)
        result = {"nu": str(v), "signed_sum": total}
        checks = [Check.compare("signed sum equals 2^(g-1)", 2 ** (t.g - 1), total)]
        return Report("odd-signed-sum", inputs, result, checks)

    ctx.exit(run("odd-signed-sum", inputs, as_json, build))
