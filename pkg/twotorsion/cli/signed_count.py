from fractions import Fraction
from typing import Any, Dict, List, Optional

import click

from .. import curves, f2_theta
from ..curves import EllipticModel
from ..exact_math import Poly
from .common import curve_inputs, curve_options, hyperelliptic_model, json_option, run
from .render import Check, Report


@click.command(
    name="signed-count",
    help="Signed count of real 2-torsion, from a curve or a type (g, s, a)",
)
@curve_options
@click.option("--g", "genus", type=int, help="Genus of the abstract type.")
@click.option("--s", "s", type=int, help="Number of ovals of the abstract type.")
@click.option("--a", "a", type=int, help="0 if dividing, else 1.")
@json_option
@click.pass_context
def signed_count(
    ctx: click.Context,
    roots: Optional[List[Fraction]],
    lead: Optional[Fraction],
    poly: Optional[Poly],
    genus: Optional[int],
    s: Optional[int],
    a: Optional[int],
    as_json: bool,
) -> None:
    by_type = [v is not None for v in (genus, s, a)]
    by_curve = roots is not None or poly is not None
    if any(by_type) and by_curve:
        raise click.UsageError("give either a curve or --g/--s/--a, not both")
    if any(by_type) and not all(by_type):
        raise click.UsageError("--g, --s and --a must be given together")

    inputs: Dict[str, Any] = curve_inputs(roots, lead, poly)
    inputs.update({"g": genus, "s": s, "a": a})

    def build() -> Report:
        if all(by_type):
            assert genus is not None and s is not None and a is not None
            t = f2_theta.RealCurveType(genus, s, a)
            g, count = t.g, f2_theta.signed_count(t)
            source = "type"
        elif poly is not None and poly.degree == 3 and roots is None:
            g, count = 1, curves.elliptic_signed_count(EllipticModel(poly))
            source = "elliptic"
        else:
            m = hyperelliptic_model(roots, lead, poly)
            g, count = m.g, curves.signed_count(m)
            source = "hyperelliptic"
        result = {"genus": g, "signed_count": count, "source": source}
        checks = [Check.compare("signed count equals 2^g", 2 ** g, count)]
        return Report("signed-count", inputs, result, checks)

    ctx.exit(run("signed-count", inputs, as_json, build))
