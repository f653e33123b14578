"""Ring constructions: carriers, encodings, axioms, and their error cases."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finring import (
    BudgetError,
    ConstructionError,
    RingMismatchError,
    Elem,
    Ring,
    additive_invariant_factors,
    least_irreducible,
    make_boolean,
    make_gf,
    make_matrix_ring,
    make_product,
    make_table_ring,
    make_triangular_ring,
    make_zn,
    quotient_ring,
    verify_ring_axioms,
    verify_tables,
)
from finring.rings import DEFAULT_ORDER_CAP, TABLE_CAP, factorize, is_prime, prime_power


# ---------------------------------------------------------------------------
# number-theory helpers


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_factorize():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(97) == [(97, 1)]


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(27) == (3, 3)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


# ---------------------------------------------------------------------------
# Z_n


def test_zn_basic():
    r = make_zn(6)
    assert r.order == 6 and r.zero == 0 and r.one == 1
    assert r.kind == "modular" and r.name == "Z(6)"
    assert r.add(4, 5) == 3 and r.mul(4, 5) == 2 and r.neg(2) == 4
    assert r.sub(1, 5) == 2
    assert r.pretty(4) == "4"


def test_zn_rejects_bad_order():
    with pytest.raises(ConstructionError):
        make_zn(0)
    with pytest.raises(ConstructionError):
        make_zn(-3)
    with pytest.raises(ConstructionError):
        make_zn(DEFAULT_ORDER_CAP + 1)


def test_zn_order_one_is_zero_ring():
    r = make_zn(1)
    assert r.order == 1 and r.one == 0
    verify_ring_axioms(r)


@given(n=st.integers(2, 50), a=st.integers(0, 10**6), b=st.integers(0, 10**6))
@settings(max_examples=120, deadline=None)
def test_zn_matches_integer_arithmetic(n, a, b):
    r = make_zn(n)
    x, y = a % n, b % n
    assert r.add(x, y) == (x + y) % n
    assert r.mul(x, y) == (x * y) % n
    assert r.neg(x) == (-x) % n


# ---------------------------------------------------------------------------
# element views


def test_elem_arithmetic():
    r = make_zn(10)
    a, b = r.element(7), r.element(8)
    assert (a + b).index == 5
    assert (a - b).index == 9
    assert (a * b).index == 6
    assert (-a).index == 3
    assert (a ** 3).index == 3  # 343 mod 10
    assert a == r.element(7) and a != b
    assert bool(r.element(0)) is False and bool(a) is True
    assert a.pretty() == "7"
    assert len({a, r.element(7), b}) == 2


def test_elem_rejects_cross_ring_mixing():
    a = make_zn(6).element(2)
    b = make_zn(6).element(2)  # same parameters, distinct carrier
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        a * 3  # plain ints are never coerced
    with pytest.raises(RingMismatchError):
        make_gf(4).element(1) + make_zn(4).element(1)


def test_elem_range_checked():
    with pytest.raises(ValueError):
        Elem(make_zn(4), 4)
    with pytest.raises(ValueError):
        Elem(make_zn(4), -1)


# ---------------------------------------------------------------------------
# Galois fields


# Deterministic modulus choice: lexicographically least monic irreducible,
# coefficients compared low degree first.  These eight are pinned.
FROZEN_MODULI = {
    2: (0, 1),
    3: (0, 1),
    4: (1, 1, 1),
    8: (1, 0, 1, 1),
    9: (1, 0, 1),
    16: (1, 0, 0, 1, 1),
    25: (1, 1, 1),
    27: (1, 0, 2, 1),
}


def test_gf_frozen_moduli():
    for q, modulus in FROZEN_MODULI.items():
        assert make_gf(q).modulus == modulus, q


def test_least_irreducible_degree_one():
    assert least_irreducible(5, 1) == (0, 1)


def test_gf_rejects_non_prime_power():
    with pytest.raises(ConstructionError, match="prime power"):
        make_gf(6)
    with pytest.raises(ConstructionError):
        make_gf(1)


def test_gf4_arithmetic():
    f = make_gf(4)
    assert f.p == 2 and f.s == 2 and f.q == 4
    a = 2  # the generator x
    assert f.add(a, a) == 0  # characteristic 2
    assert f.mul(a, a) == 3  # x^2 = x + 1 under x^2 + x + 1
    assert f.mul(a, 3) == 1  # x * (x + 1) = x^2 + x = 1
    verify_ring_axioms(f)


def test_gf8_polynomial_reduction():
    f = make_gf(8)  # modulus x^3 + x^2 + 1
    x, x2 = 2, 4
    assert f.mul(x, x2) == 5  # x^3 = x^2 + 1 -> coeffs (1,0,1)
    verify_ring_axioms(f)


def test_gf_coeff_round_trip():
    f = make_gf(27)
    for i in range(27):
        assert f.from_coeffs(f.coeffs(i)) == i


def test_gf_pretty():
    f = make_gf(4)
    assert f.pretty(0) == "0" and f.pretty(1) == "1"
    assert f.pretty(2) == "a(2)" and f.pretty(3) == "a+1(3)"
    g = make_gf(8)
    assert g.pretty(5) == "a^2+1(5)"


def test_gf9_characteristic_three():
    f = make_gf(9)
    one = f.one
    assert f.add(f.add(one, one), one) == 0
    verify_ring_axioms(f)


# ---------------------------------------------------------------------------
# matrix rings


def test_matrix_packing_row_major_little_endian():
    m = make_matrix_ring(2, make_zn(2))
    assert m.order == 16 and m.kind == "matrix" and m.name == "M(2,Z(2))"
    assert m.one == m.from_entries([1, 0, 0, 1]) == 9
    assert m.entries(9) == (1, 0, 0, 1)
    e01 = m.from_entries([0, 1, 0, 0])
    e10 = m.from_entries([0, 0, 1, 0])
    e00 = m.from_entries([1, 0, 0, 0])
    assert m.mul(e01, e10) == e00
    assert m.mul(e10, e01) != m.mul(e01, e10)  # noncommutative
    assert m.pretty(e01) == "[[0,1],[0,0]]"


def test_matrix_requires_commutative_base():
    inner = make_matrix_ring(2, make_gf(2))
    with pytest.raises(ConstructionError, match="commutative"):
        make_matrix_ring(2, inner)
    with pytest.raises(ConstructionError, match="commutative"):
        make_triangular_ring(2, inner)


def test_matrix_axioms_and_tables():
    m = make_matrix_ring(2, make_zn(3))
    verify_ring_axioms(m)
    fast = m._build_tables()
    slow = Ring._build_tables(m)
    assert np.array_equal(fast[0], slow[0]) and np.array_equal(fast[1], slow[1])


def test_matrix_entry_validation():
    m = make_matrix_ring(2, make_zn(3))
    with pytest.raises(ConstructionError):
        m.from_entries([0, 0, 0])  # wrong arity
    with pytest.raises(ConstructionError):
        m.from_entries([0, 0, 0, 3])  # outside the base


# ---------------------------------------------------------------------------
# triangular rings


def test_triangular_basic():
    t = make_triangular_ring(2, make_zn(2))
    assert t.order == 8 and t.kind == "triangular" and t.name == "UT(2,Z(2))"
    assert t.one == t.from_entries([1, 0, 0, 1]) == 5
    e01 = t.from_entries([0, 1, 0, 0])
    assert t.mul(e01, e01) == 0  # strictly upper is nilpotent
    assert t.pretty(e01) == "[[0,1],[0,0]]"
    verify_ring_axioms(t)


def test_triangular_rejects_below_diagonal():
    t = make_triangular_ring(2, make_zn(2))
    with pytest.raises(ConstructionError, match="below the diagonal"):
        t.from_entries([0, 0, 1, 0])


def test_triangular_tables_match_generic():
    t = make_triangular_ring(3, make_zn(2))
    fast = t._build_tables()
    slow = Ring._build_tables(t)
    assert np.array_equal(fast[0], slow[0]) and np.array_equal(fast[1], slow[1])


def test_triangular_order():
    assert make_triangular_ring(3, make_zn(2)).order == 2 ** 6
    assert make_triangular_ring(4, make_zn(2)).order == 2 ** 10


# ---------------------------------------------------------------------------
# products and the boolean family


def test_product_mixed_radix():
    p = make_product([make_zn(2), make_zn(3)])
    assert p.order == 6 and p.kind == "product" and p.name == "Prod(Z(2),Z(3))"
    # first factor least significant: index = a + 2*b for (a, b)
    assert p.from_components([1, 2]) == 5
    assert p.components(5) == (1, 2)
    assert p.one == p.from_components([1, 1]) == 3
    assert p.add(5, 3) == p.from_components([0, 0])
    assert p.pretty(5) == "(1,2)"
    verify_ring_axioms(p)


def test_product_rejects_empty():
    with pytest.raises(ConstructionError):
        make_product([])


def test_boolean_family():
    b = make_boolean(3)
    assert b.order == 8 and b.name == "B(3)"
    for x in range(8):
        assert b.mul(x, x) == x
    verify_ring_axioms(b)


# ---------------------------------------------------------------------------
# explicit-table rings


def _zn_tables(n):
    r = make_zn(n)
    add, mul = r.tables()
    return add.tolist(), mul.tolist()


def test_table_ring_round_trip():
    add, mul = _zn_tables(6)
    t = make_table_ring(add, mul)
    assert t.order == 6 and t.one == 1 and t.kind == "table"
    assert t.additive_type == (6,)
    z = make_zn(6)
    for a in range(6):
        for b in range(6):
            assert t.add(a, b) == z.add(a, b) and t.mul(a, b) == z.mul(a, b)


def test_table_ring_finds_unity():
    add, mul = _zn_tables(5)
    t = make_table_ring(add, mul)  # unity located by scan
    assert t.one == 1
    with pytest.raises(ConstructionError, match="no unity"):
        zero_mul = [[0] * 5 for _ in range(5)]
        make_table_ring(add, zero_mul)


def test_table_ring_rejects_axiom_violations():
    add, mul = _zn_tables(4)
    bad = [row[:] for row in mul]
    bad[3][2] = 1  # breaks associativity/distributivity
    with pytest.raises(ConstructionError, match="ring axiom violated"):
        make_table_ring(add, bad)


def test_table_ring_zero_must_be_index_zero():
    add, mul = _zn_tables(4)
    with pytest.raises(ConstructionError):
        make_table_ring(add, mul, zero=1)


def test_table_ring_additive_type_checked():
    add, mul = _zn_tables(4)
    assert make_table_ring(add, mul, additive_type=(4,)).additive_type == (4,)
    with pytest.raises(ConstructionError):
        make_table_ring(add, mul, additive_type=(2, 2))


def test_verify_tables_reports_witness():
    add, mul = _zn_tables(3)
    broken = [row[:] for row in add]
    broken[1][2] = 1  # no longer a group
    with pytest.raises(ConstructionError, match="at"):
        verify_tables(np.array(broken), np.array(mul), one=1)


def test_table_cap_enforced():
    big = make_product([make_zn(5000), make_zn(2)])
    assert big.order == 10000 > TABLE_CAP
    with pytest.raises(ConstructionError, match="cap"):
        big.tables()


# ---------------------------------------------------------------------------
# quotient rings


def test_quotient_z4_mod_two():
    z4 = make_zn(4)
    q = quotient_ring(z4, [0, 2])
    assert q.order == 2 and q.one == 1 and q.kind == "quotient"
    add, mul = q.tables()
    assert add.tolist() == [[0, 1], [1, 0]]
    assert mul.tolist() == [[0, 0], [0, 1]]
    assert q.pretty(1) == "1"  # least coset representative
    verify_ring_axioms(q)


def test_quotient_accepts_elems():
    z6 = make_zn(6)
    q = quotient_ring(z6, [z6.element(0), z6.element(2), z6.element(4)])
    assert q.order == 2


def test_quotient_rejects_non_ideals():
    z4 = make_zn(4)
    with pytest.raises(ConstructionError, match="contain 0"):
        quotient_ring(z4, [2])
    with pytest.raises(ConstructionError):
        quotient_ring(z4, [0, 1])  # not closed / not proper
    z6 = make_zn(6)
    with pytest.raises(ConstructionError):
        quotient_ring(z6, [0, 3, 2])  # not additively closed (3+2=5 missing)


def test_quotient_rejects_foreign_elements():
    z4, z6 = make_zn(4), make_zn(6)
    with pytest.raises(RingMismatchError):
        quotient_ring(z4, [z6.element(0), z6.element(2)])


def test_quotient_tables_match_generic():
    z12 = make_zn(12)
    q = quotient_ring(z12, [0, 6])
    fast = q._build_tables()
    slow = Ring._build_tables(q)
    assert np.array_equal(fast[0], slow[0]) and np.array_equal(fast[1], slow[1])


# ---------------------------------------------------------------------------
# additive invariant factors


@pytest.mark.parametrize("build, factors", [
    (lambda: make_zn(1), (1,)),
    (lambda: make_zn(6), (6,)),
    (lambda: make_zn(12), (12,)),
    (lambda: make_product([make_zn(4), make_zn(2)]), (4, 2)),
    (lambda: make_product([make_zn(2), make_zn(3)]), (6,)),
    (lambda: make_boolean(3), (2, 2, 2)),
    (lambda: make_matrix_ring(2, make_gf(2)), (2, 2, 2, 2)),
    (lambda: make_gf(9), (3, 3)),
    (lambda: make_product([make_zn(6), make_zn(4)]), (12, 2)),
])
def test_additive_invariant_factors(build, factors):
    assert additive_invariant_factors(build()) == factors


def test_invariant_factors_form_divisibility_chain():
    for build in (lambda: make_product([make_zn(8), make_zn(6), make_zn(2)]),
                  lambda: make_product([make_zn(9), make_zn(3)])):
        fs = additive_invariant_factors(build())
        assert all(fs[i] % fs[i + 1] == 0 for i in range(len(fs) - 1))


# ---------------------------------------------------------------------------
# axiom verification across every construction kind


@pytest.mark.parametrize("build", [
    lambda: make_zn(9),
    lambda: make_gf(16),
    lambda: make_gf(25),
    lambda: make_matrix_ring(2, make_gf(4)),
    lambda: make_triangular_ring(2, make_zn(4)),
    lambda: make_product([make_zn(4), make_gf(4), make_zn(3)]),
    lambda: make_boolean(4),
    lambda: quotient_ring(make_zn(8), [0, 4]),
])
def test_axioms_hold_everywhere(build):
    verify_ring_axioms(build())
