from fractions import Fraction
from typing import List, Optional, Tuple

import click

from ..curves import (
    TwoTorsionClass,
    b2_real_sign,
    h_classes,
    kummer_node_signs,
    par_vec,
    q2,
    q2_product,
    sg_vec,
    signed_count,
)
from ..divisor import q2_by_divisor_eval
from ..exact_math import Poly, real_sign
from .common import (
    bits_text,
    curve_inputs,
    curve_options,
    hyperelliptic_model,
    json_option,
    run,
)
from .parser import INDICES
from .render import Check, Report, Table


@click.command(name="hyper-q2", help="q2 of one 2-torsion class of a split model")
@curve_options
@click.option("--subset", type=INDICES, required=True, help="Even set of root indices.")
@json_option
@click.pass_context
def hyper_q2(
    ctx: click.Context,
    roots: Optional[List[Fraction]],
    lead: Optional[Fraction],
    poly: Optional[Poly],
    subset: Tuple[int, ...],
    as_json: bool,
) -> None:
    inputs = curve_inputs(roots, lead, poly)
    inputs["subset"] = bits_text(subset)

    def build() -> Report:
        m = hyperelliptic_model(roots, lead, poly)
        c = TwoTorsionClass(m, subset)
        value = q2(m, c)
        topological = b2_real_sign(m, c, c)
        oracle = q2_by_divisor_eval(m, c, max(m.roots) + 1)
        result = {
            "class": c.label,
            "subset": list(c.subset),
            "q2": value.value,
            "sign": real_sign(value),
        }
        checks = [
            Check.compare("sign from real components", real_sign(value), topological),
            Check.compare("divisor evaluation", value, oracle),
        ]
        return Report("hyper-q2", inputs, result, checks)

    ctx.exit(run("hyper-q2", inputs, as_json, build))


@click.command(name="hyper-table", help="q2 over every 2-torsion class")
@curve_options
@json_option
@click.pass_context
def hyper_table(
    ctx: click.Context,
    roots: Optional[List[Fraction]],
    lead: Optional[Fraction],
    poly: Optional[Poly],
    as_json: bool,
) -> None:
    inputs = curve_inputs(roots, lead, poly)

    def build() -> Report:
        m = hyperelliptic_model(roots, lead, poly)
        table = Table(["class", "q2", "sign", "par", "sg"])
        classes = []
        for c in h_classes(m):
            value = q2(m, c)
            par = bits_text(par_vec(m, c))
            sg = bits_text(sg_vec(m, c))
            table.rows.append([c.label, value, real_sign(value), par, sg])
            classes.append(
                {
                    "class": c.label,
                    "subset": list(c.subset),
                    "q2": value.value,
                    "sign": real_sign(value),
                    "par": par,
                    "sg": sg,
                }
            )
        positive, negative = kummer_node_signs(m)
        count = signed_count(m)
        product = q2_product(m)
        result = {
            "genus": m.g,
            "classes": classes,
            "positive": positive,
            "negative": negative,
            "signed_count": count,
            "q2_product": product.value,
        }
        checks = [
            Check.compare("signed count equals 2^g", 2 ** m.g, count),
            Check.compare("product of q2", -1 if m.g == 1 else 1, product.value),
        ]
        return Report("hyper-table", inputs, result, checks, table)

    ctx.exit(run("hyper-table", inputs, as_json, build))
