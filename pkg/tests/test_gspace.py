import pytest

from equizeta.errors import SchemaError, UnknownAtom
from equizeta.gspace import (
    Atom,
    ClosedComplement,
    DisjointUnion,
    ProductWithAffine,
    ProductWithPuncturedLines,
    Rational,
    atom_table,
    atom_value,
    beta_value,
    expr_from_json,
    expr_to_json,
)
from equizeta.ratpoly import RatFunc

PT = RatFunc((0, 1), (-1, 1))
U_MINUS_1 = RatFunc.poly((-1, 1))

ALL_ATOM_NAMES = [name for name, _ in atom_table(max_affine=3)]


class TestAtomCatalog:
    def test_point_pair(self):
        assert atom_value("point_pair_swapped") == RatFunc(1)

    def test_affine_two(self):
        assert atom_value("affine(2)") == RatFunc((0, 0, 0, 1), (-1, 1))

    def test_sphere_free(self):
        assert atom_value("sphere_free") == RatFunc((1, 1, 1))

    def test_affine_zero_is_point(self):
        assert atom_value("affine(0)") == PT
        assert atom_value("affine_trivial(0)") == RatFunc(1)

    def test_projective_line_equals_circle(self):
        assert atom_value("projective_line_G") == atom_value("circle_with_fixed_point")

    def test_unknown_atom(self):
        with pytest.raises(UnknownAtom):
            atom_value("mystery_space")

    def test_table_is_deterministic_and_complete(self):
        t1 = atom_table()
        t2 = atom_table()
        assert t1 == t2
        names = [n for n, _ in t1]
        assert "point_fixed" in names and "affine(8)" in names


class TestBetaEval:
    def test_sphere_minus_point_is_affine_plane(self):
        # the one-point compactification argument, run backwards
        expr = ClosedComplement(Atom("sphere_with_fixed_point"), Atom("point_fixed"))
        assert beta_value(expr) == RatFunc((0, 1, 0, 1), (-1, 1)) - PT
        assert beta_value(expr) == atom_value("affine(2)")

    def test_arc_stratum_shape(self):
        # (u-1) * u^(n-m) * u/(u-1) collapses to u^(n-m+1)
        for nm in (0, 1, 5):
            expr = ProductWithPuncturedLines(
                ProductWithAffine(Atom("point_fixed"), nm), 1
            )
            assert beta_value(expr) == RatFunc.monomial(nm + 1)

    def test_empty_union_is_zero(self):
        assert beta_value(DisjointUnion()) == RatFunc(0)

    def test_additivity(self):
        for a in ALL_ATOM_NAMES:
            for b in ALL_ATOM_NAMES[:4]:
                lhs = beta_value(DisjointUnion(Atom(a), Atom(b)))
                assert lhs == atom_value(a) + atom_value(b)

    def test_circle_identity(self):
        expr = ClosedComplement(
            Atom("circle_with_fixed_point"), DisjointUnion(Atom("point_fixed"))
        )
        # u + 2u/(u-1) - u/(u-1) = u + u/(u-1) = u^2/(u-1)
        assert beta_value(expr) == RatFunc((0, 1)) + PT
        assert beta_value(expr) == RatFunc((0, 0, 1), (-1, 1))

    def test_rational_passthrough(self):
        v = RatFunc((3, 1), (2, 5))
        assert beta_value(Rational(v)) == v

    def test_affine_product_composes(self):
        for name in ALL_ATOM_NAMES:
            for a in range(0, 5):
                for b in range(0, 5):
                    once = beta_value(ProductWithAffine(Atom(name), a + b))
                    twice = beta_value(
                        ProductWithAffine(ProductWithAffine(Atom(name), a), b)
                    )
                    assert once == twice

    def test_punctured_product_rule(self):
        for name in ALL_ATOM_NAMES:
            for m in range(0, 9):
                got = beta_value(ProductWithPuncturedLines(Atom(name), m))
                want = atom_value(name)
                for _ in range(m):
                    want = want * U_MINUS_1
                assert got == want

    def test_closed_complement_laurent_is_difference(self):
        sphere = Atom("sphere_with_fixed_point")
        expr = ClosedComplement(sphere, Atom("point_fixed"))
        val = beta_value(expr)
        assert val.laurent(-4) is not None  # expandable; values checked elsewhere


class TestJson:
    def test_round_trip_all_nodes(self):
        expr = ClosedComplement(
            DisjointUnion(
                Atom("circle_with_fixed_point"),
                ProductWithAffine(Rational(RatFunc((1, 2), (3,))), 2),
            ),
            ProductWithPuncturedLines(Atom("point_fixed"), 3),
        )
        assert expr_from_json(expr_to_json(expr)) == expr

    def test_unknown_atom_rejected_at_parse(self):
        with pytest.raises(SchemaError):
            expr_from_json({"kind": "atom", "name": "nope"})

    def test_bad_kind(self):
        with pytest.raises(SchemaError):
            expr_from_json({"kind": "tensor", "parts": []})

    def test_negative_dimension_rejected(self):
        with pytest.raises(SchemaError):
            expr_from_json(
                {"kind": "product_affine", "base": {"kind": "atom", "name": "point_fixed"}, "n": -1}
            )
