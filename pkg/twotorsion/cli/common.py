import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

from ..curves import EllipticModel, HyperellipticModel
from ..exact_math import Poly
from ..exceptions import DomainError, ParseError
from .parser import POLY, RATIONAL, RATIONALS, render_poly
from .render import Report, emit, emit_error

_LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

Decorator = Callable[[Callable[..., Any]], Callable[..., Any]]


def run(
    command: str, inputs: Dict[str, Any], as_json: bool, build: Callable[[], Report]
) -> int:
    """Build and emit a report, mapping library errors to exit codes."""
    try:
        report = build()
    except ParseError as e:
        emit_error(command, inputs, e, as_json)
        return EXIT_USAGE
    except DomainError as e:
        _LOGGER.debug("%s failed: %r", command, e)
        emit_error(command, inputs, e, as_json)
        return EXIT_DOMAIN
    emit(report, as_json)
    return EXIT_VERIFY if report.failed else EXIT_OK


def json_option(f: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--json", "as_json", is_flag=True, help="Emit a single JSON object."
    )(f)


def _compose(*decorators: Decorator) -> Decorator:
    def wrapper(f: Callable[..., Any]) -> Callable[..., Any]:
        for d in reversed(decorators):
            f = d(f)
        return f

    return wrapper


curve_options = _compose(
    click.option("--roots", type=RATIONALS, help="Comma separated rational roots."),
    click.option("--lead", type=RATIONAL, help="Leading coefficient u (default 1)."),
    click.option("--poly", type=POLY, help="Right-hand side polynomial in x."),
)

type_options = _compose(
    click.option("--g", "genus", type=int, required=True, help="Genus."),
    click.option("--s", "s", type=int, required=True, help="Number of ovals."),
    click.option("--a", "a", type=int, required=True, help="0 if dividing, else 1."),
)


def render_rationals(values: Optional[Sequence[Fraction]]) -> Optional[str]:
    if values is None:
        return None
    return ",".join(str(v) for v in values)


def curve_inputs(
    roots: Optional[List[Fraction]], lead: Optional[Fraction], poly: Optional[Poly]
) -> Dict[str, Any]:
    return {
        "roots": render_rationals(roots),
        "lead": None if lead is None else str(lead),
        "poly": None if poly is None else render_poly(poly),
    }


def hyperelliptic_model(
    roots: Optional[List[Fraction]], lead: Optional[Fraction], poly: Optional[Poly]
) -> HyperellipticModel:
    if roots is not None and poly is not None:
        raise click.UsageError("--roots and --poly are mutually exclusive")
    if roots is not None:
        return HyperellipticModel.of(roots, 1 if lead is None else lead)
    if poly is not None:
        if lead is not None:
            raise click.UsageError("--lead only applies to --roots")
        return HyperellipticModel.from_poly(poly)
    raise click.UsageError("one of --roots or --poly is required")


def elliptic_model(poly: Optional[Poly]) -> EllipticModel:
    if poly is None:
        raise click.UsageError("--poly is required")
    return EllipticModel(poly)


def bits_text(bits: Sequence[int]) -> str:
    return ",".join(str(b) for b in bits)
