"""Structural invariants of finite rings.

Characteristic, commutativity, booleanness, the unit group and its sum,
the Jacobson radical via the 1 - x*a*y criterion, semisimplicity, general
linear group orders, and primitive elements of finite fields.

Everything operates on integer element indices (see `finring.rings`) and
is a pure function of the ring, so results are deterministic and safe to
compute concurrently.  Exhaustive scans are bounded: full unit groups and
radicals up to order 4096, streaming unit sums up to 2**20 elements; past
those bounds the functions raise BudgetError rather than silently
truncating.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, ConstructionError, RingMismatchError
from .rings import (
    DEFAULT_ORDER_CAP,
    TABLE_CAP,
    Elem,
    GFRing,
    MatrixRing,
    ProductRing,
    QuotientRing,
    Ring,
    TriangularRing,
    ZnRing,
    is_prime,
    matrix_adjugate,
    matrix_determinant,
    prime_power,
)

# Full unit-group / radical enumeration bound.
UNIT_SCAN_CAP = TABLE_CAP

# Streaming scans (unit sums of lazy matrix rings) iterate at most this many
# elements.
STREAM_CAP = DEFAULT_ORDER_CAP


@dataclass
class UnitGroupSummary:
    """The full unit group of a ring: sorted units, count, and their sum.

    `closure_verified` records that the group laws (closure, identity,
    two-sided inverses) were checked exhaustively before the summary was
    returned.
    """

    units: list[Elem]
    count: int
    sum: Elem
    closure_verified: bool


@dataclass
class RadicalSummary:
    """The Jacobson radical as an explicit sorted member list."""

    members: list[Elem]
    is_zero: bool


def _as_index(r: Ring, x) -> int:
    if isinstance(x, Elem):
        if x.ring is not r:
            raise RingMismatchError(f"element of {x.ring.name} does not belong to {r.name}")
        return x.index
    i = int(x)
    if not 0 <= i < r.order:
        raise ValueError(f"index {i} out of range for {r.name}")
    return i


# ---------------------------------------------------------------------------
# characteristic / commutativity / booleanness


def characteristic(r: Ring) -> int:
    """The additive order of one: least k >= 1 with k*one = zero."""
    acc, k = r.one, 1
    while acc != 0:
        acc = r.add(acc, r.one)
        k += 1
    return k


def ring_generators(r: Ring) -> list[int]:
    """Indices of a finite generating set of r as a unital ring.

    Matrix and triangular rings are generated by matrix units carrying base
    generators, so pairwise checks over this set replace whole-ring scans
    for lazily enumerated rings.
    """
    if isinstance(r, ZnRing):
        return [r.one]
    if isinstance(r, GFRing):
        return [r.one] if r.s == 1 else [r.p]
    if isinstance(r, ProductRing):
        gens = []
        for t, f in enumerate(r.factors):
            for g in ring_generators(f):
                comps = [0] * len(r.factors)
                comps[t] = g
                gens.append(r.from_components(comps))
        return gens
    if isinstance(r, (MatrixRing, TriangularRing)):
        base_gens = set(ring_generators(r.base))
        base_gens.add(r.base.one)
        n = r.n
        positions = r.free if isinstance(r, TriangularRing) else [
            (i, j) for i in range(n) for j in range(n)]
        gens = []
        for (i, j) in positions:
            for g in base_gens:
                es = [0] * (n * n)
                es[i * n + j] = g
                gens.append(r.from_entries(es))
        return gens
    if r.order > TABLE_CAP:
        raise BudgetError(f"{r.name}: no generating set known below order {TABLE_CAP}")
    return list(range(r.order))


def is_commutative(r: Ring) -> bool:
    """True iff xy = yx for all pairs.

    Exhaustive (vectorized) for table-backed rings; for matrix and
    triangular rings the check runs over a generating set, which decides
    the whole ring because commuting generators span a commutative subring.
    """
    if isinstance(r, (ZnRing, GFRing)):
        return True
    if isinstance(r, ProductRing):
        return all(is_commutative(f) for f in r.factors)
    if isinstance(r, (MatrixRing, TriangularRing)):
        gens = ring_generators(r)
        return all(r.mul(a, b) == r.mul(b, a) for a in gens for b in gens)
    if isinstance(r, QuotientRing) and is_commutative(r.parent):
        return True
    if r.order > TABLE_CAP:
        raise BudgetError(f"{r.name}: commutativity scan needs order <= {TABLE_CAP}")
    _, mul = r.tables()
    return bool((mul == mul.T).all())


def is_boolean(r: Ring) -> bool:
    """True iff x*x = x for every element (scan stops at the first failure)."""
    if r.order > STREAM_CAP:
        raise BudgetError(f"{r.name}: booleanness scan needs order <= {STREAM_CAP}")
    return all(r.mul(x, x) == x for x in range(r.order))


# ---------------------------------------------------------------------------
# units and inverses


def _field_like(r: Ring) -> bool:
    return isinstance(r, GFRing) or (isinstance(r, ZnRing) and is_prime(r.n))


def inverse_by_scan(r: Ring, a: int) -> int | None:
    """Exhaustive two-sided inverse search; the reference invertibility route."""
    if r.order > UNIT_SCAN_CAP:
        raise BudgetError(f"{r.name}: inverse scan needs order <= {UNIT_SCAN_CAP}")
    one = r.one
    for y in range(r.order):
        if r.mul(a, y) == one and r.mul(y, a) == one:
            return y
    return None


def _matrix_inverse_adjugate(r, a: int) -> int | None:
    """Determinant-is-unit test with the inverse built as det^-1 * adjugate."""
    es = r.entries(a)
    d = matrix_determinant(r.base, es, r.n)
    dinv = inverse_index(r.base, d)
    if dinv is None:
        return None
    adj = matrix_adjugate(r.base, es, r.n)
    bm = r.base.mul
    inv = r.from_entries([bm(dinv, e) for e in adj])
    # both-sided self-check: cheap, and guards the commutative-base assumption
    if r.mul(a, inv) != r.one or r.mul(inv, a) != r.one:
        raise ConstructionError(f"{r.name}: adjugate inverse failed its self-check at {a}")
    return inv


def matrix_inverse_row_reduce(r, a: int) -> int | None:
    """Inverse by Gauss-Jordan elimination; requires a field base.

    An independent second route to invertibility: it never consults the
    determinant, so agreement with the adjugate route is a real check.
    """
    if not isinstance(r, (MatrixRing, TriangularRing)):
        raise ConstructionError("row reduction applies to matrix and triangular rings")
    base = r.base
    if not _field_like(base):
        raise ConstructionError(f"{r.name}: row reduction needs a field base")
    n = r.n
    es = r.entries(a)
    left = [list(es[i * n:(i + 1) * n]) for i in range(n)]
    right = [[base.one if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((row for row in range(col, n) if left[row][col] != 0), None)
        if pivot is None:
            return None
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        pinv = inverse_index(base, left[col][col])
        left[col] = [base.mul(pinv, v) for v in left[col]]
        right[col] = [base.mul(pinv, v) for v in right[col]]
        for row in range(n):
            if row == col or left[row][col] == 0:
                continue
            c = left[row][col]
            left[row] = [base.sub(u, base.mul(c, v)) for u, v in zip(left[row], left[col])]
            right[row] = [base.sub(u, base.mul(c, v)) for u, v in zip(right[row], right[col])]
    flat = [v for row in right for v in row]
    return r.from_entries(flat)


def inverse_index(r: Ring, a: int) -> int | None:
    """Index of the two-sided inverse of index a, or None if a is not a unit."""
    if isinstance(r, ZnRing):
        if r.n == 1:
            return 0
        return pow(a, -1, r.n) if math.gcd(a, r.n) == 1 else None
    if isinstance(r, GFRing):
        if a == 0:
            return None
        acc, base_, k = r.one, a, r.q - 2
        while k:
            if k & 1:
                acc = r.mul(acc, base_)
            base_ = r.mul(base_, base_)
            k >>= 1
        return acc
    if isinstance(r, ProductRing):
        invs = []
        for f, c in zip(r.factors, r.components(a)):
            v = inverse_index(f, c)
            if v is None:
                return None
            invs.append(v)
        return r.from_components(invs)
    if isinstance(r, (MatrixRing, TriangularRing)):
        return _matrix_inverse_adjugate(r, a)
    return inverse_by_scan(r, a)


def is_unit(r: Ring, x) -> Elem | None:
    """The two-sided inverse of x as an element, or None when x is not a unit."""
    a = _as_index(r, x)
    inv = inverse_index(r, a)
    return None if inv is None else Elem(r, inv)


def _unit_indices(r: Ring) -> list[int]:
    """All unit indices of a ring of order <= UNIT_SCAN_CAP."""
    if isinstance(r, (MatrixRing, TriangularRing)):
        return [a for a in range(r.order) if _matrix_inverse_adjugate(r, a) is not None]
    add, mul = r.tables()
    one = r.one
    right = (mul == one).any(axis=1)
    left = (mul == one).any(axis=0)
    if not (right == left).all():
        raise ConstructionError(f"{r.name}: one-sided and two-sided units disagree")
    return [int(u) for u in np.nonzero(right & left)[0]]


def unit_group(r: Ring) -> UnitGroupSummary:
    """Every unit of the ring, with count and elementwise sum.

    The group laws are verified exhaustively before returning: closure
    under multiplication, a two-sided inverse for each unit, and one in
    the set.  Rings larger than UNIT_SCAN_CAP raise BudgetError; use
    `unit_sum` / `unit_count` for streaming totals of lazy matrix rings.
    """
    if r.order > UNIT_SCAN_CAP:
        raise BudgetError(
            f"{r.name}: unit group enumerable only up to order {UNIT_SCAN_CAP}; "
            "unit_sum/unit_count stream larger matrix rings")
    units = _unit_indices(r)
    uset = set(units)
    if r.one not in uset:
        raise ConstructionError(f"{r.name}: one is missing from the unit set")
    for u in units:
        inv = inverse_index(r, u)
        if inv is None or inv not in uset:
            raise ConstructionError(f"{r.name}: unit {u} lacks a two-sided inverse in the set")
    for u in units:
        for v in units:
            if r.mul(u, v) not in uset:
                raise ConstructionError(f"{r.name}: units not closed under multiplication at ({u},{v})")
    s = 0
    for u in units:
        s = r.add(s, u)
    return UnitGroupSummary(units=[Elem(r, u) for u in units], count=len(units),
                            sum=Elem(r, s), closure_verified=True)


def _iter_matrix_entries(r: MatrixRing):
    """Row-major entry tuples of every matrix whose first column is nonzero.

    Matrices with an all-zero first column cannot be invertible, so the
    streaming unit scans skip them wholesale (first-column pruning).
    """
    n, b = r.n, r.base.order
    cells = r.cells
    col_positions = [i * n for i in range(n)]
    rest_positions = [k for k in range(cells) if k % n != 0]
    template = [0] * cells
    for col in itertools.product(range(b), repeat=n):
        if not any(col):
            continue
        for pos, v in zip(col_positions, col):
            template[pos] = v
        for rest in itertools.product(range(b), repeat=len(rest_positions)):
            for pos, v in zip(rest_positions, rest):
                template[pos] = v
            yield template


def _stream_matrix_units(r: MatrixRing) -> tuple[int, int]:
    """(count, sum index) over all invertible matrices, streamed."""
    if r.order > STREAM_CAP:
        raise BudgetError(f"{r.name}: streaming unit scan needs order <= {STREAM_CAP}")
    base = r.base
    field_base = _field_like(base)
    n = r.n
    badd = base.add
    count = 0
    sums = [0] * r.cells
    for es in _iter_matrix_entries(r):
        d = matrix_determinant(base, es, n)
        if (d == 0 if field_base else inverse_index(base, d) is None):
            continue
        count += 1
        for k, e in enumerate(es):
            if e:
                sums[k] = badd(sums[k], e)
    return count, r.from_entries(sums)


def _stream_triangular_units(r: TriangularRing) -> tuple[int, int]:
    """(count, sum index) for a triangular ring: unit diagonal, free uppers."""
    base = r.base
    diag_units = [u for u in range(base.order)
                  if inverse_index(base, u) is not None]
    n = r.n
    uppers = [(i, j) for (i, j) in r.free if i != j]
    total = len(diag_units) ** n * base.order ** len(uppers)
    if total > STREAM_CAP:
        raise BudgetError(f"{r.name}: streaming unit scan needs at most {STREAM_CAP} units")
    badd = base.add
    count = 0
    sums = [0] * r.cells
    full = [0] * r.cells
    for diag in itertools.product(diag_units, repeat=n):
        for i in range(n):
            full[i * n + i] = diag[i]
        for rest in itertools.product(range(base.order), repeat=len(uppers)):
            for (i, j), v in zip(uppers, rest):
                full[i * n + j] = v
            count += 1
            for k, e in enumerate(full):
                if e:
                    sums[k] = badd(sums[k], e)
    return count, r._pack_full(sums)


def _unit_census(r: Ring) -> tuple[int, int]:
    if r.order <= UNIT_SCAN_CAP:
        summary = unit_group(r)
        return summary.count, summary.sum.index
    if isinstance(r, TriangularRing):
        return _stream_triangular_units(r)
    if isinstance(r, MatrixRing):
        return _stream_matrix_units(r)
    raise BudgetError(f"{r.name}: no streaming unit scan for this ring kind")


def unit_census(r: Ring) -> tuple[int, Elem]:
    """(unit count, unit sum) in one pass; streams matrix-shaped rings
    above the dense cap rather than materializing their tables."""
    count, total = _unit_census(r)
    return count, Elem(r, total)


def unit_count(r: Ring) -> int:
    """Number of units; streams matrix-shaped rings above the dense cap."""
    return _unit_census(r)[0]


def unit_sum(r: Ring) -> Elem:
    """Sum of all units; streams matrix-shaped rings above the dense cap."""
    return Elem(r, _unit_census(r)[1])


def unit_first_column_classes(r: MatrixRing) -> dict[tuple[int, ...], int]:
    """Partition the invertible matrices by first column; count each class.

    Returns {first-column entries: class size} over all invertible
    matrices.  The classes partition the general linear group, which is
    how the even-count argument for characteristic-2 fields proceeds.
    """
    if not isinstance(r, MatrixRing):
        raise ConstructionError("first-column classes are defined for full matrix rings")
    if r.order > STREAM_CAP:
        raise BudgetError(f"{r.name}: class scan needs order <= {STREAM_CAP}")
    base = r.base
    field_base = _field_like(base)
    n = r.n
    counts: dict[tuple[int, ...], int] = {}
    for es in _iter_matrix_entries(r):
        d = matrix_determinant(base, es, n)
        if (d == 0 if field_base else inverse_index(base, d) is None):
            continue
        key = tuple(es[i * n] for i in range(n))
        counts[key] = counts.get(key, 0) + 1
    return counts


def is_division_ring(r: Ring) -> bool:
    """True iff every nonzero element is a unit (and the ring is not the zero ring)."""
    if r.order == 1:
        return False
    return unit_count(r) == r.order - 1


# ---------------------------------------------------------------------------
# the general linear group order formula


def gl_order(n: int, q: int) -> int:
    """|GL_n(GF(q))| = prod_{k=1..n} (q^n - q^(n-k)), exact integers."""
    if not isinstance(n, int) or n < 1:
        raise ConstructionError(f"gl_order: matrix size must be a positive integer, got {n}")
    if not isinstance(q, int) or prime_power(q) is None:
        raise ConstructionError(f"gl_order: field size must be a prime power, got {q}")
    qn = q ** n
    total = 1
    for k in range(1, n + 1):
        total *= qn - q ** (n - k)
    return total


# ---------------------------------------------------------------------------
# Jacobson radical


def jacobson_radical(r: Ring) -> RadicalSummary:
    """J(R) = { a : 1 - x*a*y is a unit for all x, y }.

    The unit set is computed once as a membership bitmap; candidates are
    prefiltered by the x = y = 1 instance before the full double scan.
    The ideal property of the result is verified before returning.
    """
    n = r.order
    if n > TABLE_CAP:
        raise BudgetError(f"{r.name}: radical computed only up to order {TABLE_CAP}")
    add, mul = r.tables()
    units = _unit_indices(r)
    umask = np.zeros(n, dtype=bool)
    umask[units] = True
    neg = np.argmax(add == 0, axis=1)
    one_minus = add[r.one][neg]          # one_minus[t] = 1 - t
    members = []
    for a in range(n):
        if not umask[one_minus[a]]:      # x = y = 1 prefilter
            continue
        xa = mul[:, a]
        if umask[one_minus[mul[xa]]].all():
            members.append(a)
    mmask = np.zeros(n, dtype=bool)
    mmask[members] = True
    midx = np.asarray(members, dtype=np.intp)
    if not mmask[add[np.ix_(midx, midx)]].all():
        raise ConstructionError(f"{r.name}: radical members are not closed under addition")
    if not (mmask[mul[:, midx]].all() and mmask[mul[midx, :]].all()):
        raise ConstructionError(f"{r.name}: radical members do not absorb multiplication")
    return RadicalSummary(members=[Elem(r, a) for a in members], is_zero=(members == [0]))


def is_semisimple(r: Ring) -> bool:
    """True iff the Jacobson radical is {zero} (finite rings are artinian)."""
    return jacobson_radical(r).is_zero


# ---------------------------------------------------------------------------
# fields: multiplicative orders and primitive elements


def multiplicative_order(r: Ring, x) -> int:
    """Least k >= 1 with x^k = one; defined for units only."""
    a = _as_index(r, x)
    acc, k = a, 1
    while acc != r.one:
        acc = r.mul(acc, a)
        k += 1
        if k > r.order:
            raise ConstructionError(f"{r.name}: {a} is not a unit, so has no multiplicative order")
    return k


def primitive_element(f: Ring) -> Elem:
    """The least-encoded generator of a finite field's unit group.

    Scans indices upward for the first element of multiplicative order
    q - 1 and asserts the geometric-sum identity on the way out:
    sum_{k=0}^{q-2} alpha^k equals 0 for q > 2 and equals 1 for q = 2.
    """
    if not _field_like(f):
        raise ConstructionError(f"{f.name} is not a field")
    q = f.order
    for a in range(1, q):
        if multiplicative_order(f, a) != q - 1:
            continue
        s, acc = 0, f.one
        for _ in range(q - 1):
            s = f.add(s, acc)
            acc = f.mul(acc, a)
        expected = f.one if q == 2 else 0
        if s != expected:
            raise ConstructionError(f"{f.name}: geometric-sum identity failed at alpha={a}")
        return Elem(f, a)
    raise ConstructionError(f"{f.name}: no primitive element found")  # pragma: no cover
