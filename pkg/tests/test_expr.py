"""Ring-expression grammar: parsing, pretty-printing, construction."""

import random

import pytest

from finring import (
    ConstructionError,
    ParseError,
    build_ring,
    parse_ring,
    parse_ring_expr,
    pretty_expr,
)
from finring.expr import BExpr, GFExpr, MExpr, ProdExpr, UTExpr, ZnExpr


def roundtrip(text):
    return pretty_expr(parse_ring_expr(text))


# ---------------------------------------------------------------------------
# grammar


def test_atoms():
    assert parse_ring_expr("Z(6)") == ZnExpr(6)
    assert parse_ring_expr("GF(8)") == GFExpr(8)
    assert parse_ring_expr("B(3)") == BExpr(3)


def test_constructors_nest():
    assert parse_ring_expr("M(2,GF(2))") == MExpr(2, GFExpr(2))
    assert parse_ring_expr("UT(3,Z(2))") == UTExpr(3, ZnExpr(2))
    assert parse_ring_expr("M(2,UT(2,Z(2)))") == MExpr(2, UTExpr(2, ZnExpr(2)))


def test_product_forms():
    infix = parse_ring_expr("Z(2) x Z(3)")
    explicit = parse_ring_expr("Prod(Z(2),Z(3))")
    assert infix == explicit == ProdExpr((ZnExpr(2), ZnExpr(3)))


def test_infix_chain_flattens_one_level():
    e = parse_ring_expr("Z(2) x Z(3) x Z(5)")
    assert e == ProdExpr((ZnExpr(2), ZnExpr(3), ZnExpr(5)))


def test_parenthesized_products_stay_nested():
    e = parse_ring_expr("(Z(2) x Z(3)) x Z(5)")
    assert e == ProdExpr((ProdExpr((ZnExpr(2), ZnExpr(3))), ZnExpr(5)))
    assert e != parse_ring_expr("Z(2) x Z(3) x Z(5)")


def test_whitespace_insensitive():
    assert parse_ring_expr(" M( 2 , GF( 4 ) ) ") == parse_ring_expr("M(2,GF(4))")
    assert parse_ring_expr("Z(2)  x\tZ(3)") == parse_ring_expr("Z(2) x Z(3)")
    assert parse_ring_expr("Prod(Z(2),Z(3))") == parse_ring_expr("Prod( Z(2) , Z(3) )")


def test_adjacent_keywords_need_a_separator():
    # words lex greedily, so the infix operator cannot touch the next keyword
    with pytest.raises(ParseError, match="xZ"):
        parse_ring_expr("Z(2)xZ(3)")


def test_keywords_case_sensitive():
    with pytest.raises(ParseError):
        parse_ring_expr("z(2)")
    with pytest.raises(ParseError):
        parse_ring_expr("gf(4)")


def test_prod_arity():
    assert parse_ring_expr("Prod(Z(2))") == ProdExpr((ZnExpr(2),))
    many = parse_ring_expr("Prod(Z(2),Z(3),Z(5),Z(7))")
    assert len(many.factors) == 4


# ---------------------------------------------------------------------------
# errors carry one-based columns


@pytest.mark.parametrize("text, column", [
    ("Z(2", 4),        # unclosed paren: error at end of input
    ("Q(2)", 1),       # unknown keyword
    ("Z(0)", 3),       # integers must be positive
    ("Z(2))", 5),      # trailing input
    ("", 1),           # empty input
    ("Z(2) x", 7),     # dangling product operator
    ("M(2 GF(2))", 5), # missing comma
    ("Z (2,3)", 5),    # extra argument
    ("@", 1),          # unknown character
])
def test_error_columns(text, column):
    with pytest.raises(ParseError) as exc:
        parse_ring_expr(text)
    assert exc.value.column == column


def test_error_message_names_expectations():
    with pytest.raises(ParseError, match="expected"):
        parse_ring_expr("M(2,)")
    with pytest.raises(ParseError, match=r"must be >= 1"):
        parse_ring_expr("Z(0)")


# ---------------------------------------------------------------------------
# pretty-printing


@pytest.mark.parametrize("text, pretty", [
    ("Z(6)", "Z(6)"),
    (" GF( 9 ) ", "GF(9)"),
    ("Z(2) x Z(3)", "Prod(Z(2),Z(3))"),
    ("Prod(Z(2),Z(3))", "Prod(Z(2),Z(3))"),
    ("M(2, UT(2, Z(2)))", "M(2,UT(2,Z(2)))"),
    ("B(4)", "B(4)"),
    ("(Z(2) x Z(3)) x Z(5)", "Prod(Prod(Z(2),Z(3)),Z(5))"),
])
def test_pretty_canonical_form(text, pretty):
    assert roundtrip(text) == pretty


def test_pretty_is_fixed_point():
    for text in ("Z(6)", "M(3,GF(4))", "Prod(Z(2),UT(2,Z(3)))", "B(2)"):
        once = roundtrip(text)
        assert roundtrip(once) == once


# ---------------------------------------------------------------------------
# construction


def test_build_ring_constructs_each_kind():
    cases = {
        "Z(6)": ("modular", 6),
        "GF(8)": ("field", 8),
        "M(2,GF(2))": ("matrix", 16),
        "UT(2,Z(3))": ("triangular", 27),
        "Z(2) x Z(3)": ("product", 6),
        "B(2)": ("product", 4),
    }
    for text, (kind, order) in cases.items():
        r = parse_ring(text)
        assert (r.kind, r.order) == (kind, order), text


def test_build_failures_are_construction_phase():
    # GF(6) is grammatical but not a prime power: parsing succeeds,
    # construction fails.
    e = parse_ring_expr("GF(6)")
    assert e == GFExpr(6)
    with pytest.raises(ConstructionError):
        build_ring(e)
    with pytest.raises(ConstructionError):
        parse_ring("M(2,M(2,Z(2)))")  # non-commutative base
    with pytest.raises(ConstructionError):
        parse_ring("Z(2000000)")  # order cap


# ---------------------------------------------------------------------------
# random ASTs round-trip through pretty / parse


def random_ast(depth, rng):
    leaf_picks = [
        lambda: ZnExpr(rng.randint(1, 30)),
        lambda: GFExpr(rng.choice([2, 3, 4, 5, 7, 8, 9, 16, 25, 27])),
        lambda: BExpr(rng.randint(1, 6)),
    ]
    if depth <= 0:
        return rng.choice(leaf_picks)()
    picks = leaf_picks + [
        lambda: MExpr(rng.randint(1, 3), random_ast(depth - 1, rng)),
        lambda: UTExpr(rng.randint(1, 3), random_ast(depth - 1, rng)),
        lambda: ProdExpr(tuple(random_ast(depth - 1, rng)
                               for _ in range(rng.randint(1, 3)))),
    ]
    return rng.choice(picks)()


def test_random_ast_round_trip():
    rng = random.Random(20260823)
    for _ in range(500):
        ast = random_ast(rng.randint(0, 4), rng)
        text = pretty_expr(ast)
        assert parse_ring_expr(text) == ast
        assert pretty_expr(parse_ring_expr(text)) == text
