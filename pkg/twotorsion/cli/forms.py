from fractions import Fraction
from typing import Any, Dict, List, Optional

import click

from ..curves import EllipticModel, conjecture_lhs_elliptic, conjecture_lhs_split
from ..exact_math import Poly
from ..exceptions import ModelMismatch
from ..gw_forms import (
    GWElement,
    conjecture_rhs,
    invariants,
    is_isometric,
    scaled_trace_transfer,
    trace_form_weighted,
)
from .common import curve_inputs, curve_options, hyperelliptic_model, json_option, run
from .parser import POLY, render_poly
from .render import Check, Report


def describe(e: GWElement) -> Dict[str, Any]:
    inv = invariants(e)
    return {
        "form": str(e),
        "rank": inv.rank,
        "signature": inv.signature,
        "discriminant": inv.discriminant.value,
        "hasse_minus_one_at": [str(v) for v in inv.hasse_support],
    }


@click.command(
    name="gw-trace-form", help="Trace form of Q[x]/(p) as an element of GW(Q)"
)
@click.option("--poly", type=POLY, required=True, help="Squarefree polynomial p.")
@click.option("--alpha", type=POLY, help="Scale by alpha instead of 1/p'.")
@json_option
@click.pass_context
def gw_trace_form(
    ctx: click.Context, poly: Poly, alpha: Optional[Poly], as_json: bool
) -> None:
    inputs = {
        "poly": render_poly(poly),
        "alpha": None if alpha is None else render_poly(alpha),
    }

    def build() -> Report:
        if alpha is None:
            e = trace_form_weighted(poly)
        else:
            e = scaled_trace_transfer(poly, alpha)
        return Report("gw-trace-form", inputs, describe(e))

    ctx.exit(run("gw-trace-form", inputs, as_json, build))


@click.command(name="conjecture", help="Compare both sides of the GW conjecture")
@click.option("--genus", type=int, required=True, help="Genus of the curve.")
@curve_options
@json_option
@click.pass_context
def conjecture(
    ctx: click.Context,
    genus: int,
    roots: Optional[List[Fraction]],
    lead: Optional[Fraction],
    poly: Optional[Poly],
    as_json: bool,
) -> None:
    inputs: Dict[str, Any] = curve_inputs(roots, lead, poly)
    inputs["genus"] = genus

    def build() -> Report:
        if genus == 1 and poly is not None and poly.degree == 3:
            lhs = conjecture_lhs_elliptic(EllipticModel(poly))
        else:
            m = hyperelliptic_model(roots, lead, poly)
            if m.g != genus:
                raise ModelMismatch(
                    "model has genus {}, not {}".format(m.g, genus)
                )
            lhs = conjecture_lhs_split(m)
        rhs = conjecture_rhs(genus)
        left, right = invariants(lhs), invariants(rhs)
        isometric = is_isometric(lhs, rhs)

        checks = [
            Check.compare("rank", right.rank, left.rank),
            Check.compare("signature", right.signature, left.signature),
            Check.compare("discriminant", right.discriminant, left.discriminant),
        ]
        if genus == 1:
            checks.append(Check.compare("isometric", True, isometric))
        else:
            checks.append(Check.reported("isometric", True, isometric))
        result = {
            "lhs": describe(lhs),
            "rhs": describe(rhs),
            "isometric": isometric,
        }
        return Report("conjecture", inputs, result, checks)

    ctx.exit(run("conjecture", inputs, as_json, build))
