"""
The worked examples and randomized identities checked by ``verify``.

Each item returns a list of checks. Randomized items draw from a single
``random.Random`` seeded by the caller, so a run is reproducible.
"""
import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, Tuple

from ... import curves, divisor, f2_theta, gw_forms
from ...curves import EllipticModel, HyperellipticModel, TwoTorsionClass
from ...exact_math import Poly, real_sign
from ...exceptions import ComplexSemiOrientation
from ..parser import parse_poly, render_poly
from ..render import Check
from . import sampling

_LOGGER = logging.getLogger(__name__)

Item = Callable[[random.Random], List[Check]]

GENUS_TWO_ROOTS = range(6)
GENUS_TWO_Q2 = {(0, 1): 5, (0, 2): -10, (0, 3): 10, (0, 4): -5, (0, 5): 1}


def _failures(name: str, failures: int, total: int) -> Check:
    return Check.compare(
        "{} ({} cases)".format(name, total),
        "0 failures",
        "{} failures".format(failures),
    )


def genus_two_values(rng: random.Random) -> List[Check]:
    m = HyperellipticModel.of(GENUS_TWO_ROOTS)
    checks = []
    for subset, expected in GENUS_TWO_Q2.items():
        c = TwoTorsionClass(m, subset)
        checks.append(
            Check.compare("q2({})".format(c.label), expected, curves.q2(m, c).value)
        )
    for i, j in combinations(range(1, 6), 2):
        c = TwoTorsionClass(m, (i, j))
        parts = [TwoTorsionClass(m, (0, i)), TwoTorsionClass(m, (0, j))]
        checks.append(
            Check.compare(
                "q2({}) from a0{} + a0{}".format(c.label, i, j),
                curves.q2_of_sum(m, parts).value,
                curves.q2(m, c).value,
            )
        )
    return checks


def genus_two_signs(rng: random.Random) -> List[Check]:
    m = HyperellipticModel.of(GENUS_TWO_ROOTS)
    positive, negative = curves.kummer_node_signs(m)
    return [
        Check.compare("positive classes", 10, positive),
        Check.compare("negative classes", 6, negative),
        Check.compare("signed count", 4, curves.signed_count(m)),
    ]


def elliptic_examples(rng: random.Random) -> List[Check]:
    m = EllipticModel(Poly.from_roots([-1, 0, 1]))
    el1 = EllipticModel(Poly.from_roots([-3], Fraction(1, 3)) * Poly.of(1, 0, 1))
    el2 = EllipticModel(Poly.from_roots([0, 1, -3], Fraction(1, 3)))
    diagonal = [curves.elliptic_q2(m, z).value for z in (-1, 0, 1)]
    off = [
        curves.elliptic_b2_offdiag(m, -1, 0).value,
        curves.elliptic_b2_offdiag(m, 0, -1).value,
    ]
    el2_signs = [real_sign(curves.elliptic_q2(el2, z)) for z in (-3, 0, 1)]
    return [
        Check.compare("x^3 - x: q2 at -1, 0, 1", [2, -1, 2], diagonal),
        Check.compare("x^3 - x: b2 off-diagonal", [-1, 1], off),
        Check.compare("el1: q2 at -3", 10, curves.elliptic_q2(el1, -3).value),
        Check.compare("el1: signed count", 2, curves.elliptic_signed_count(el1)),
        Check.compare("el2: signs at -3, 0, 1", [1, -1, 1], el2_signs),
        Check.compare("el2: signed count", 2, curves.elliptic_signed_count(el2)),
    ]


def random_split_models(rng: random.Random) -> List[Check]:
    count_failures = product_failures = 0
    total = 200
    for genus in sampling.genera(rng, total, 1, 4):
        m = sampling.split_model(rng, genus)
        if curves.signed_count(m) != 2 ** genus:
            count_failures += 1
            _LOGGER.warning("Signed count failed for %s", m)
        if curves.q2_product(m).value != (-1 if genus == 1 else 1):
            product_failures += 1
            _LOGGER.warning("Product of q2 failed for %s", m)
    return [
        _failures("signed count equals 2^g", count_failures, total),
        _failures("product of q2", product_failures, total),
    ]


def f2_model(rng: random.Random) -> List[Check]:
    types = f2_theta.valid_types(6)
    signed = odd_sums = errors = counts = 0
    checked_nus = checked_counts = 0
    for t in types:
        if f2_theta.signed_count(t) != 2 ** t.g:
            signed += 1
        for nu in f2_theta.real_thetas(t):
            checked_nus += 1
            complex_orientation = t.a == 0 and not any(nu.c_u[: t.s])
            try:
                if f2_theta.odd_theta_signed_sum(t, nu) != 2 ** (t.g - 1):
                    odd_sums += 1
                if complex_orientation:
                    errors += 1
            except ComplexSemiOrientation:
                if not complex_orientation:
                    errors += 1
        for u1 in f2_theta.bit_cube(t.s).tolist():
            for eps in f2_theta.bit_cube(t.s).tolist():
                checked_counts += 1
                op = f2_theta.OrientationParity(tuple(u1), tuple(eps))
                if f2_theta.theta_counts(t, op) != f2_theta.theta_counts_closed_form(
                    t, op
                ):
                    counts += 1

    lagrangian = checked_lagrangian = census = 0
    for g in range(1, 7):
        t = f2_theta.RealCurveType(g, 0, 1)
        for bits in f2_theta.all_vectors(g).tolist():
            c = f2_theta.F2Vector.from_bits(bits)
            if not any(c.c_l):
                continue
            checked_lagrangian += 1
            if f2_theta.lagrangian_odd_count(t, c) != 2 ** (g - 1):
                lagrangian += 1
        if f2_theta.arf_census(g) != 2 ** (g - 1) * (2 ** g - 1):
            census += 1

    return [
        _failures("signed count equals 2^g", signed, len(types)),
        _failures("odd theta signed sum equals 2^(g-1)", odd_sums, checked_nus),
        _failures("complex semi-orientation rejected exactly", errors, checked_nus),
        _failures("theta counts match closed forms", counts, checked_counts),
        _failures("lagrangian odd count", lagrangian, checked_lagrangian),
        _failures("arf census", census, 6),
    ]


def trace_forms(rng: random.Random) -> List[Check]:
    form = gw_forms.trace_form_weighted(Poly.from_roots([-1, 0, 1]))
    failures = 0
    total = 100
    rhs = gw_forms.conjecture_rhs(1)
    for i in range(total):
        p = sampling.squarefree_cubic(rng, split=i % 2 == 0)
        lhs = curves.conjecture_lhs_elliptic(EllipticModel(p))
        if not gw_forms.is_isometric(lhs, rhs):
            failures += 1
            _LOGGER.warning("Genus one conjecture failed for %s", p)
    return [
        Check.compare(
            "trace form of x^3 - x is <1> + <1> + <-1>",
            True,
            gw_forms.is_isometric(form, gw_forms.GWElement.of(1, 1, -1)),
        ),
        _failures("genus one conjecture on random cubics", failures, total),
    ]


def genus_two_conjecture(rng: random.Random) -> List[Check]:
    m = HyperellipticModel.of(GENUS_TWO_ROOTS)
    lhs = curves.conjecture_lhs_split(m)
    rhs = gw_forms.conjecture_rhs(2)
    left, right = gw_forms.invariants(lhs), gw_forms.invariants(rhs)
    return [
        Check.compare("genus two rank", right.rank, left.rank),
        Check.compare("genus two signature", right.signature, left.signature),
        Check.compare("genus two discriminant", right.discriminant, left.discriminant),
        Check.reported(
            "genus two Hasse invariants",
            [str(v) for v in right.hasse_support],
            [str(v) for v in left.hasse_support],
        ),
        Check.reported("genus two isometric", True, gw_forms.is_isometric(lhs, rhs)),
    ]


def weil_reciprocity(rng: random.Random) -> List[Check]:
    failures = 0
    total = 100
    for genus in sampling.genera(rng, total, 1, 3):
        m = sampling.split_model(rng, genus)
        f, g = sampling.reciprocity_pair(rng, m)
        if not divisor.weil_reciprocity_check(m, f, g):
            failures += 1
            _LOGGER.warning("Weil reciprocity failed for %s, %s on %s", f, g, m)
    return [_failures("f(div g) equals g(div f)", failures, total)]


def oracle_equivalence(rng: random.Random) -> List[Check]:
    failures = 0
    total = 100
    for genus in sampling.genera(rng, total, 1, 3):
        m = sampling.split_model(rng, genus)
        s = sampling.random_class(rng, m)
        t = sampling.random_class(rng, m)
        value = curves.q2(m, s)
        consistent = (
            value == divisor.q2_by_divisor_eval(m, s, sampling.auxiliary_point(rng, m))
            and real_sign(value) == curves.b2_real_sign(m, s, s)
        )
        if curves.e2(s, t) == 1:
            consistent = consistent and real_sign(
                curves.b2(m, s, t)
            ) == curves.b2_real_sign(m, s, t)
        if not consistent:
            failures += 1
            _LOGGER.warning("Oracle mismatch for %s, %s on %s", s, t, m)
    return [_failures("closed form, divisor evaluation and real sign", failures, total)]


def _round_trip(rng: random.Random) -> Tuple[int, int]:
    failures = 0
    total = 1000
    for _ in range(total):
        p = sampling.random_poly(rng)
        if parse_poly(render_poly(p)) != p:
            failures += 1
            _LOGGER.warning("Round trip failed for %s", render_poly(p))
    return failures, total


def cli_behaviour(rng: random.Random) -> List[Check]:
    from click.testing import CliRunner

    from ..__main__ import cli

    failures, total = _round_trip(rng)
    runner = CliRunner()
    args = ["hyper-table", "--roots", "0,1,2,3,4,5", "--lead", "1", "--json"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    return [
        _failures("parse and render round trip", failures, total),
        Check.compare("hyper-table exit code", 0, first.exit_code),
        Check.compare(
            "JSON output is byte stable", True, first.output == second.output
        ),
    ]


ITEMS: List[Tuple[str, Item]] = [
    ("genus two worked values", genus_two_values),
    ("genus two signs", genus_two_signs),
    ("elliptic examples", elliptic_examples),
    ("random split models", random_split_models),
    ("F2 model", f2_model),
    ("trace forms", trace_forms),
    ("genus two conjecture", genus_two_conjecture),
    ("Weil reciprocity", weil_reciprocity),
    ("oracle equivalence", oracle_equivalence),
    ("command line", cli_behaviour),
]


def run_suite(seed: int = 0) -> List[Check]:
    rng = random.Random(seed)
    checks: List[Check] = []
    for name, item in ITEMS:
        _LOGGER.info("Running %s", name)
        results = item(rng)
        for check in results:
            if check.failed:
                _LOGGER.warning("%s: %s failed", name, check.name)
        checks.extend(results)
    return checks
