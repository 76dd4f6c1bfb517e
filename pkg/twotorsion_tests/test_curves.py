import unittest
from fractions import Fraction
from os import path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twotorsion.curves import (
    EllipticModel,
    HyperellipticModel,
    Interval,
    TwoTorsionClass,
    b2,
    b2_real_sign,
    components,
    conjecture_lhs_elliptic,
    conjecture_lhs_split,
    e2,
    elliptic_b2_matrix,
    elliptic_b2_offdiag,
    elliptic_e2_matrix,
    elliptic_q2,
    elliptic_signed_count,
    h_classes,
    identity_component_classes,
    kummer_node_signs,
    par_vec,
    q2,
    q2_of_sum,
    q2_product,
    sg_vec,
    signed_count,
)
from twotorsion.exact_math import Poly, real_sign, sc_product
from twotorsion.exceptions import (
    DegenerateModel,
    EqualRoots,
    InvalidType,
    IrrationalRealRoot,
    ModelMismatch,
    NotARoot,
    NotSquarefree,
    OddIntersection,
    RepeatedRoots,
)
from twotorsion.gw_forms import conjecture_rhs, invariants, is_isometric


def fixture_path(fixture_name: str):
    return path.join(path.dirname(__file__), "fixtures", fixture_name)


class EllipticTestCase(unittest.TestCase):
    def setUp(self):
        self.cubic = EllipticModel(Poly.of(0, -1, 0, 1))
        self.el1 = EllipticModel(
            Poly.from_roots([-3], Fraction(1, 3)) * Poly.of(1, 0, 1)
        )
        self.el2 = EllipticModel(Poly.from_roots([0, 1, -3], Fraction(1, 3)))

    def test_q2(self):
        self.assertEqual(elliptic_q2(self.cubic, 0).value, -1)
        self.assertEqual(elliptic_q2(self.cubic, -1).value, 2)
        self.assertEqual(elliptic_q2(self.el1, -3).value, 10)
        self.assertEqual(elliptic_q2(self.el2, -3).value, 3)

    def test_q2_not_a_root(self):
        self.assertRaises(NotARoot, lambda: elliptic_q2(self.cubic, 2))

    def test_offdiag(self):
        self.assertEqual(elliptic_b2_offdiag(self.cubic, -1, 0).value, -1)
        self.assertEqual(elliptic_b2_offdiag(self.cubic, 0, -1).value, 1)
        self.assertRaises(EqualRoots, lambda: elliptic_b2_offdiag(self.cubic, 0, 0))

    def test_offdiag_product_is_q2(self):
        for m in (self.cubic, self.el2):
            roots = m.rational_roots()
            for z in roots:
                product = sc_product(
                    elliptic_b2_offdiag(m, z, w) for w in roots if w != z
                )
                self.assertEqual(product, elliptic_q2(m, z))

    def test_matrices(self):
        b = elliptic_b2_matrix(self.cubic, [-1, 0])
        self.assertEqual([[c.value for c in row] for row in b], [[2, -1], [1, -1]])
        self.assertEqual(elliptic_e2_matrix(self.cubic, [-1, 0]), [[1, -1], [-1, 1]])

    def test_signed_count(self):
        self.assertEqual(elliptic_signed_count(self.el1), 2)
        self.assertEqual(elliptic_signed_count(self.el2), 2)
        self.assertEqual(elliptic_signed_count(self.cubic), 2)

    def test_irrational_real_root(self):
        m = EllipticModel(Poly.of(-2, 0, 0, 1))
        self.assertRaises(IrrationalRealRoot, lambda: elliptic_signed_count(m))

    def test_invalid_models(self):
        self.assertRaises(DegenerateModel, lambda: EllipticModel(Poly.of(-1, 0, 1)))
        self.assertRaises(
            NotSquarefree, lambda: EllipticModel(Poly.from_roots([1, 1, 2]))
        )

    def test_conjecture_lhs(self):
        lhs = conjecture_lhs_elliptic(self.cubic)
        self.assertTrue(is_isometric(lhs, conjecture_rhs(1)))
        other = conjecture_lhs_elliptic(EllipticModel(Poly.of(0, 1, 0, 1)))
        self.assertEqual(invariants(other).signature, 2)


class HyperellipticModelTestCase(unittest.TestCase):
    def test_sorts_roots(self):
        m = HyperellipticModel.of([3, 1, 2, 0], -1)
        self.assertEqual(m.roots, (0, 1, 2, 3))
        self.assertEqual(m.u, -1)
        self.assertEqual(m.g, 1)
        self.assertEqual(m.poly, Poly.from_roots([0, 1, 2, 3], -1))

    def test_from_poly(self):
        m = HyperellipticModel.from_poly(Poly.from_roots(range(6), 2))
        self.assertEqual(m, HyperellipticModel.of(range(6), 2))

    def test_invalid(self):
        self.assertRaises(RepeatedRoots, lambda: HyperellipticModel.of([0, 0, 1, 2]))
        self.assertRaises(DegenerateModel, lambda: HyperellipticModel.of([0, 1, 2]))
        self.assertRaises(
            DegenerateModel, lambda: HyperellipticModel.of([0, 1, 2, 3], 0)
        )
        self.assertRaises(
            DegenerateModel,
            lambda: HyperellipticModel.from_poly(Poly.of(1, 0, 0, 0, 1)),
        )


class TwoTorsionClassTestCase(unittest.TestCase):
    def setUp(self):
        self.m = HyperellipticModel.of(range(6))

    def test_canonical_form(self):
        self.assertEqual(TwoTorsionClass(self.m, (5, 0)).subset, (0, 5))
        self.assertEqual(TwoTorsionClass(self.m, (1, 2, 3, 4)).subset, (0, 5))
        self.assertEqual(TwoTorsionClass(self.m, range(6)).subset, ())
        self.assertEqual(TwoTorsionClass(self.m, (0, 1)).label, "a01")
        self.assertEqual(TwoTorsionClass(self.m).label, "0")

    def test_invalid_subsets(self):
        self.assertRaises(InvalidType, lambda: TwoTorsionClass(self.m, (0,)))
        self.assertRaises(InvalidType, lambda: TwoTorsionClass(self.m, (0, 6)))
        self.assertRaises(InvalidType, lambda: TwoTorsionClass(self.m, (1, 1)))

    def test_addition(self):
        a01 = TwoTorsionClass(self.m, (0, 1))
        a02 = TwoTorsionClass(self.m, (0, 2))
        self.assertEqual((a01 + a02).subset, (1, 2))
        self.assertTrue((a01 + a01).is_identity)

    def test_model_mismatch(self):
        other = HyperellipticModel.of(range(1, 7))
        s = TwoTorsionClass(self.m, (0, 1))
        t = TwoTorsionClass(other, (0, 1))
        self.assertRaises(ModelMismatch, lambda: e2(s, t))
        self.assertRaises(ModelMismatch, lambda: q2(other, s))

    def test_h_classes(self):
        classes = h_classes(self.m)
        self.assertEqual(len(classes), 16)
        self.assertTrue(classes[0].is_identity)
        self.assertEqual(
            [c.label for c in classes[1:6]], ["a01", "a02", "a03", "a04", "a05"]
        )
        self.assertEqual(len(h_classes(HyperellipticModel.of(range(4)))), 4)
        self.assertEqual(len(h_classes(HyperellipticModel.of(range(8)))), 64)


class PairingTestCase(unittest.TestCase):
    def setUp(self):
        self.m = HyperellipticModel.of(range(6))

    def cls(self, *indices):
        return TwoTorsionClass(self.m, indices)

    def test_worked_values(self):
        with open(fixture_path("genus2_q2_values.txt")) as f:
            expected = [int(line) for line in f if line.strip()]
        actual = [q2(self.m, c).value for c in h_classes(self.m)]
        self.assertEqual(actual, expected)

    def test_e2(self):
        self.assertEqual(e2(self.cls(0, 1), self.cls(1, 2)), -1)
        self.assertEqual(e2(self.cls(0, 1), self.cls(0, 1)), 1)
        self.assertEqual(e2(self.cls(0, 1), self.cls(2, 3)), 1)

    def test_b2(self):
        self.assertEqual(b2(self.m, self.cls(0, 1), self.cls(2, 3)).value, 3)
        for c in h_classes(self.m):
            self.assertEqual(b2(self.m, c, c), q2(self.m, c))
        self.assertRaises(
            OddIntersection, lambda: b2(self.m, self.cls(0, 1), self.cls(1, 2))
        )

    def test_q2_of_sum(self):
        a01, a02 = self.cls(0, 1), self.cls(0, 2)
        self.assertEqual(q2_of_sum(self.m, [a01, a02]).value, 2)
        self.assertEqual(q2_of_sum(self.m, [a01, a02]), q2(self.m, a01 + a02))

    def test_signed_count(self):
        self.assertEqual(kummer_node_signs(self.m), (10, 6))
        self.assertEqual(signed_count(self.m), 4)
        self.assertEqual(signed_count(HyperellipticModel.of([-5, 1, 2, 9], -3)), 2)

    def test_q2_product(self):
        self.assertEqual(q2_product(self.m).value, 1)
        self.assertEqual(q2_product(HyperellipticModel.of([0, 1, 3, 7])).value, -1)

    def test_conjecture_lhs_split(self):
        inv = invariants(conjecture_lhs_split(self.m))
        self.assertEqual((inv.rank, inv.signature, inv.discriminant.value), (16, 4, 1))
        genus_one = invariants(conjecture_lhs_split(HyperellipticModel.of(range(4))))
        self.assertEqual((genus_one.rank, genus_one.signature), (4, 2))


class RealTopologyTestCase(unittest.TestCase):
    def setUp(self):
        self.m = HyperellipticModel.of(range(6))

    def test_components(self):
        decomposition = components(self.m)
        self.assertEqual(decomposition.s, 2)
        self.assertEqual(
            decomposition.components[0].intervals,
            (Interval(None, Fraction(0)), Interval(Fraction(5), None)),
        )
        self.assertEqual(
            [str(c.intervals[0]) for c in decomposition.components[1:]],
            ["[1, 2]", "[3, 4]"],
        )
        self.assertEqual(decomposition.component_of(5), 0)
        self.assertEqual(decomposition.component_of(3), 2)

    def test_negative_lead(self):
        decomposition = components(HyperellipticModel.of(range(4), -1))
        self.assertEqual(decomposition.s, 1)
        for c in decomposition.components:
            for i in c.intervals:
                self.assertIsNotNone(i.lo)
                self.assertIsNotNone(i.hi)

    def test_par_and_sg(self):
        self.assertEqual(par_vec(self.m, TwoTorsionClass(self.m, (1, 2))), (0, 0))
        self.assertEqual(sg_vec(self.m, TwoTorsionClass(self.m, (0, 1))), (0, 0))
        self.assertEqual(par_vec(self.m, TwoTorsionClass(self.m)), (0, 0))
        self.assertEqual(sg_vec(self.m, TwoTorsionClass(self.m)), (0, 0))

    def test_b2_real_sign(self):
        a02 = TwoTorsionClass(self.m, (0, 2))
        a01 = TwoTorsionClass(self.m, (0, 1))
        self.assertEqual(b2_real_sign(self.m, a02, a02), -1)
        self.assertEqual(b2_real_sign(self.m, a01, a01), 1)
        for t in h_classes(self.m):
            self.assertEqual(b2_real_sign(self.m, TwoTorsionClass(self.m), t), 1)

    def test_identity_component_classes(self):
        classes = identity_component_classes(self.m)
        self.assertEqual(len(classes), 4)
        for s in classes:
            for t in h_classes(self.m):
                self.assertEqual(b2_real_sign(self.m, s, t), 1)


@st.composite
def split_models(draw, max_genus=3):
    genus = draw(st.integers(min_value=1, max_value=max_genus))
    roots = draw(
        st.lists(
            st.integers(min_value=-30, max_value=30),
            min_size=2 * genus + 2,
            max_size=2 * genus + 2,
            unique=True,
        )
    )
    u = draw(st.sampled_from([1, -1, 2, -3, Fraction(1, 2)]))
    return HyperellipticModel.of(roots, u)


@settings(max_examples=50, deadline=None)
@given(split_models())
def test_signed_count_is_two_to_the_genus(m):
    assert signed_count(m) == 2 ** m.g
    assert components(m).s == m.g


@settings(max_examples=50, deadline=None)
@given(split_models(), st.data())
def test_quadratic_refinement(m, data):
    classes = h_classes(m)
    s = data.draw(st.sampled_from(classes))
    t = data.draw(st.sampled_from(classes))
    assert q2(m, s + t) == q2_of_sum(m, [s, t])
    assert real_sign(q2(m, s)) == b2_real_sign(m, s, s)
    if e2(s, t) == 1:
        assert real_sign(b2(m, s, t)) == b2_real_sign(m, s, t)


@settings(max_examples=50, deadline=None)
@given(split_models(), st.data())
def test_b2_is_symmetric(m, data):
    classes = h_classes(m)
    s = data.draw(st.sampled_from(classes))
    t = data.draw(st.sampled_from([c for c in classes if e2(s, c) == 1]))
    assert b2(m, s, t) == b2(m, t, s)


@settings(max_examples=50, deadline=None)
@given(split_models(), st.data())
def test_b2_is_multiplicative_in_second_argument(m, data):
    classes = h_classes(m)
    s = data.draw(st.sampled_from(classes))
    admissible = [c for c in classes if e2(s, c) == 1]
    t = data.draw(st.sampled_from(admissible))
    t2 = data.draw(st.sampled_from(admissible))
    assert b2(m, s, t + t2) == b2(m, s, t) * b2(m, s, t2)


@settings(max_examples=50, deadline=None)
@given(split_models(), st.data())
def test_e2_ignores_complements(m, data):
    classes = h_classes(m)
    s = data.draw(st.sampled_from(classes))
    t = data.draw(st.sampled_from(classes))
    for left, right in [
        (s.complement, t.subset),
        (s.subset, t.complement),
        (s.complement, t.complement),
    ]:
        assert (-1) ** len(set(left) & set(right)) == e2(s, t)
    assert TwoTorsionClass(m, s.complement) == s
    assert q2(m, TwoTorsionClass(m, s.complement)) == q2(m, s)


@pytest.mark.parametrize("roots", [[0, 1, 2, 3], [-7, -1, 4, 10], [0, 2, 3, 5, 8, 13]])
def test_q2_product_sign(roots):
    m = HyperellipticModel.of(roots)
    assert q2_product(m).value == (-1 if m.g == 1 else 1)
