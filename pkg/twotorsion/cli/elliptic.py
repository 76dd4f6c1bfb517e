from fractions import Fraction
from typing import Optional

import click

from ..curves import (
    elliptic_b2_matrix,
    elliptic_e2_matrix,
    elliptic_q2,
    elliptic_signed_count,
)
from ..exact_math import Poly, real_sign
from ..exceptions import NotARoot
from .common import elliptic_model, json_option, run
from .parser import POLY, RATIONAL, render_poly
from .render import Check, Report, Table


@click.command(name="elliptic-q2", help="q2 at the rational 2-torsion of y^2 = p(x)")
@click.option("--poly", type=POLY, help="Cubic right-hand side, e.g. 'x^3 - x'.")
@click.option("--root", type=RATIONAL, help="Only report this root.")
@json_option
@click.pass_context
def elliptic_q2_command(
    ctx: click.Context, poly: Optional[Poly], root: Optional[Fraction], as_json: bool
) -> None:
    inputs = {
        "poly": None if poly is None else render_poly(poly),
        "root": None if root is None else str(root),
    }

    def build() -> Report:
        m = elliptic_model(poly)
        roots = [root] if root is not None else sorted(set(m.rational_roots()))
        table = Table(["root", "q2", "sign"])
        rows = []
        for z in roots:
            q = elliptic_q2(m, z)
            table.rows.append([z, q, real_sign(q)])
            rows.append({"root": str(z), "q2": q.value, "sign": real_sign(q)})
        return Report("elliptic-q2", inputs, {"points": rows}, table=table)

    ctx.exit(run("elliptic-q2", inputs, as_json, build))


@click.command(name="elliptic-table", help="b2 and e2 matrices of a split cubic")
@click.option("--poly", type=POLY, help="Cubic right-hand side, e.g. 'x^3 - x'.")
@json_option
@click.pass_context
def elliptic_table(ctx: click.Context, poly: Optional[Poly], as_json: bool) -> None:
    inputs = {"poly": None if poly is None else render_poly(poly)}

    def build() -> Report:
        m = elliptic_model(poly)
        roots = sorted(set(m.rational_roots()))
        if len(roots) < 2:
            raise NotARoot("{} has fewer than two rational roots".format(m.p))
        basis = roots[:2]
        b2 = elliptic_b2_matrix(m, basis)
        e2 = elliptic_e2_matrix(m, basis)
        count = elliptic_signed_count(m)

        table = Table(["pair", "b2", "e2"])
        for i, zi in enumerate(basis):
            for j, zj in enumerate(basis):
                table.rows.append(["({}, {})".format(zi, zj), b2[i][j], e2[i][j]])
        result = {
            "basis": [str(z) for z in basis],
            "b2": [[c.value for c in row] for row in b2],
            "e2": e2,
            "signed_count": count,
        }
        checks = [Check.compare("signed count equals 2^g", 2, count)]
        return Report("elliptic-table", inputs, result, checks, table)

    ctx.exit(run("elliptic-table", inputs, as_json, build))
