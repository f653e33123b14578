"""Finite unital rings addressed by canonical integer element indices.

Every ring here is the set {0, 1, ..., order-1} together with formula- or
table-backed arithmetic; index 0 is always the additive zero.  The concrete
families (integers mod n, Galois fields, matrix and upper-triangular rings,
direct products, explicit-table rings, quotient rings) all share the `Ring`
interface, so analysis and search code can stay representation-agnostic.

Rings are immutable after construction and all operations are pure functions
of (ring, element indices), so instances are safe to share between threads
and processes.  Internal caches (dense tables, field multiplication rows)
are filled idempotently and never change observable behaviour.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstructionError, RingMismatchError

# Dense order x order tables are only materialized up to this order; larger
# rings stay lazy (arithmetic on demand, elements enumerable by index).
TABLE_CAP = 4096

# Hard ceiling for constructors that must be able to touch every element
# eagerly (Z_n, GF, products).  Matrix rings may exceed it and remain lazy.
DEFAULT_ORDER_CAP = 1 << 20

# Field multiplication rows are precomputed below this order.
_GF_TABLE_CAP = 256


# ---------------------------------------------------------------------------
# small number theory helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, s) with n == p**s, or None when n is not a prime power."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0]
    return None


def _format_factorization(n: int) -> str:
    parts = []
    for p, e in factorize(n):
        parts.append(str(p) if e == 1 else f"{p}^{e}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# polynomial arithmetic over Z_p (little-endian coefficient lists)


def _poly_mul(f, g, p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return out


def _poly_rem(f, m, p: int) -> list[int]:
    """Remainder of f modulo the monic polynomial m, coefficients in Z_p.

    The result always has length deg(m), padded with zeros.
    """
    r = [c % p for c in f]
    dm = len(m) - 1
    for k in range(len(r) - 1, dm - 1, -1):
        c = r[k]
        if c:
            r[k] = 0
            for j in range(dm):
                r[k - dm + j] = (r[k - dm + j] - c * m[j]) % p
    r = r[:dm]
    return r + [0] * (dm - len(r))


def poly_is_irreducible(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg < 1 or f[-1] != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


_IRREDUCIBLE_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def least_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree s over Z_p.

    Candidates are ordered by their coefficient tuple (c_0, ..., c_{s-1}),
    constant term compared first.  The result is little-endian and includes
    the leading 1, e.g. (1, 1, 1) for 1 + x + x^2 over Z_2.
    """
    key = (p, s)
    if key not in _IRREDUCIBLE_CACHE:
        for tail in itertools.product(range(p), repeat=s):
            f = list(tail) + [1]
            if poly_is_irreducible(f, p):
                _IRREDUCIBLE_CACHE[key] = tuple(f)
                break
        else:  # pragma: no cover - an irreducible of every degree exists
            raise ConstructionError(f"no irreducible polynomial of degree {s} over Z_{p}")
    return _IRREDUCIBLE_CACHE[key]


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of a Galois field: order q = p**s and the fixed modulus.

    `modulus` is little-endian (constant term first) including the leading
    coefficient, so its length is s + 1.
    """

    p: int
    s: int
    q: int
    modulus: tuple[int, ...]


# ---------------------------------------------------------------------------
# elements


class Elem:
    """One ring element: a ring together with its integer index.

    Arithmetic is defined only between elements of the *same* ring object;
    mixing rings raises RingMismatchError instead of guessing a coercion.
    """

    __slots__ = ("ring", "index")

    def __init__(self, ring: "Ring", index: int):
        if not 0 <= index < ring.order:
            raise ValueError(f"index {index} out of range for {ring.name}")
        self.ring = ring
        self.index = index

    def _peer(self, other) -> int:
        if not isinstance(other, Elem):
            raise RingMismatchError(
                f"cannot combine a {self.ring.name} element with {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatchError(
                f"cannot combine elements of {self.ring.name} and {other.ring.name}")
        return other.index

    def pretty(self) -> str:
        return self.ring.pretty(self.index)

    def __add__(self, other):
        return Elem(self.ring, self.ring.add(self.index, self._peer(other)))

    def __sub__(self, other):
        return Elem(self.ring, self.ring.sub(self.index, self._peer(other)))

    def __mul__(self, other):
        return Elem(self.ring, self.ring.mul(self.index, self._peer(other)))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("element exponents must be non-negative integers")
        acc, base = self.ring.one, self.index
        while k:
            if k & 1:
                acc = self.ring.mul(acc, base)
            base = self.ring.mul(base, base)
            k >>= 1
        return Elem(self.ring, acc)

    def __eq__(self, other):
        return isinstance(other, Elem) and other.ring is self.ring and other.index == self.index

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"{self.ring.name}:{self.ring.pretty(self.index)}"


# ---------------------------------------------------------------------------
# the ring interface


class Ring:
    """Common interface for finite unital rings.

    Subclasses implement `add`, `neg` and `mul` on integer indices in
    range(order); index 0 is the additive zero and `one` names the
    multiplicative identity.  Ring objects compare by identity: two
    separately constructed copies are distinct carriers whose elements
    never mix (the arithmetic tables are still bit-identical).
    """

    kind = "ring"

    def __init__(self, order: int, one: int, name: str):
        self.order = order
        self.zero = 0
        self.one = one
        self.name = name
        self._tables: tuple[np.ndarray, np.ndarray] | None = None

    # -- index arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- element views ------------------------------------------------------

    def element(self, index: int) -> Elem:
        return Elem(self, index)

    def elements(self):
        """Iterate over every element in index order."""
        for i in range(self.order):
            yield Elem(self, i)

    def pretty(self, index: int) -> str:
        return str(index)

    # -- dense tables -------------------------------------------------------

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense (add, mul) index tables as int32 arrays, cached after first use."""
        if self._tables is None:
            if self.order > TABLE_CAP:
                raise ConstructionError(
                    f"{self.name} has order {self.order}, above the dense-table cap {TABLE_CAP}")
            self._tables = self._build_tables()
        return self._tables

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.order
        add = np.empty((n, n), dtype=np.int32)
        mul = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            ra, rm = add[a], mul[a]
            for b in range(n):
                ra[b] = self.add(a, b)
                rm[b] = self.mul(a, b)
        return add, mul

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class ZnRing(Ring):
    """Integers modulo n; element i is the residue class of i."""

    kind = "modular"

    def __init__(self, n: int):
        super().__init__(n, 1 % n, f"Z({n})")
        self.n = n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def _build_tables(self):
        idx = np.arange(self.n, dtype=np.int32)
        add = (idx[:, None] + idx[None, :]) % self.n
        mul = (idx[:, None] * idx[None, :]) % self.n
        return add.astype(np.int32), mul.astype(np.int32)


class GFRing(Ring):
    """The Galois field GF(p**s).

    Elements are polynomials over Z_p reduced modulo a fixed irreducible:
    index sum(c_i * p**i) stands for c_0 + c_1*a + ... + c_{s-1}*a^{s-1},
    where `a` is the class of x.  The modulus is the lexicographically
    least monic irreducible of degree s (constant coefficient compared
    first), so encodings are reproducible across runs and machines.
    """

    kind = "field"

    def __init__(self, q: int):
        pp = prime_power(q)
        if pp is None:
            detail = _format_factorization(q) if q > 1 else str(q)
            raise ConstructionError(f"GF({q}): {q} = {detail} is not a prime power")
        p, s = pp
        super().__init__(q, 1, f"GF({q})")
        self.p = p
        self.s = s
        self.q = q
        self.modulus = least_irreducible(p, s)
        self.spec = FieldSpec(p=p, s=s, q=q, modulus=self.modulus)
        self._mul_rows: list[list[int]] | None = None

    def coeffs(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            index, c = divmod(index, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) != self.s or any(not 0 <= c < self.p for c in cs):
            raise ConstructionError(
                f"{self.name} expects {self.s} coefficients in range(0, {self.p})")
        index = 0
        for c in reversed(cs):
            index = index * self.p + c
        return index

    def add(self, a, b):
        p = self.p
        index, scale = 0, 1
        while a or b:
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            index += ((ca + cb) % p) * scale
            scale *= p
        return index

    def neg(self, a):
        p = self.p
        index, scale = 0, 1
        while a:
            a, c = divmod(a, p)
            index += (-c % p) * scale
            scale *= p
        return index

    def mul(self, a, b):
        if self.q <= _GF_TABLE_CAP:
            if self._mul_rows is None:
                self._mul_rows = self._build_mul_rows()
            return self._mul_rows[a][b]
        return self._mul_poly(a, b)

    def _mul_poly(self, a, b):
        rem = _poly_rem(_poly_mul(self.coeffs(a), self.coeffs(b), self.p), self.modulus, self.p)
        index = 0
        for c in reversed(rem):
            index = index * self.p + c
        return index

    def _build_mul_rows(self):
        q = self.q
        rows = [[0] * q for _ in range(q)]
        for a in range(1, q):
            for b in range(a, q):
                v = self._mul_poly(a, b)
                rows[a][b] = v
                rows[b][a] = v
        return rows

    def pretty(self, index):
        if index < self.p:
            return str(index)
        cs = self.coeffs(index)
        terms = []
        for k in range(self.s - 1, -1, -1):
            c = cs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                var = "a" if k == 1 else f"a^{k}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms) + f"({index})"


class MatrixRing(Ring):
    """Full n-by-n matrices over a commutative base ring.

    Entries are flattened row-major; index sum(e_k * |B|**k) stores entry k
    of that flattening, so the (0, 0) entry is the least-significant digit.
    Arithmetic decodes on demand, so large matrix rings never materialize
    an element list.
    """

    kind = "matrix"

    def __init__(self, n: int, base: Ring):
        self.n = n
        self.base = base
        self.cells = n * n
        b = base.order
        one = 0
        for k in reversed(range(self.cells)):
            i, j = divmod(k, n)
            one = one * b + (base.one if i == j else 0)
        super().__init__(b ** self.cells, one, f"M({n},{base.name})")

    def entries(self, index) -> tuple[int, ...]:
        """Row-major base-ring indices of the matrix stored at `index`."""
        b = self.base.order
        out = []
        for _ in range(self.cells):
            index, e = divmod(index, b)
            out.append(e)
        return tuple(out)

    def from_entries(self, entries) -> int:
        es = list(entries)
        if len(es) != self.cells:
            raise ConstructionError(f"{self.name} expects {self.cells} row-major entries")
        b = self.base.order
        for e in es:
            if not 0 <= e < b:
                raise ConstructionError(f"{self.name}: entry {e} is outside the base ring")
        return self._pack(es)

    def _pack(self, es) -> int:
        b = self.base.order
        index = 0
        for e in reversed(es):
            index = index * b + e
        return index

    def add(self, x, y):
        ba = self.base.add
        return self._pack([ba(u, v) for u, v in zip(self.entries(x), self.entries(y))])

    def neg(self, x):
        bn = self.base.neg
        return self._pack([bn(e) for e in self.entries(x)])

    def mul(self, x, y):
        n, base = self.n, self.base
        ex, ey = self.entries(x), self.entries(y)
        out = []
        for i in range(n):
            row = ex[i * n:(i + 1) * n]
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = base.add(acc, base.mul(row[k], ey[k * n + j]))
                out.append(acc)
        return self._pack(out)

    def pretty(self, index):
        es = self.entries(index)
        n = self.n
        rows = ("[" + ",".join(self.base.pretty(e) for e in es[i * n:(i + 1) * n]) + "]"
                for i in range(n))
        return "[" + ",".join(rows) + "]"

    def _build_tables(self):
        # Entrywise over the base ring's dense tables: one fancy-indexed
        # N-by-N pass per cell (and per k-term for products) instead of a
        # Python dispatch for each of the N*N pairs.
        badd, bmul = self.base.tables()
        n, m, N = self.n, self.base.order, self.order
        powers = m ** np.arange(self.cells, dtype=np.int64)
        digits = (np.arange(N, dtype=np.int64)[:, None] // powers[None, :]) % m
        add = np.zeros((N, N), dtype=np.int64)
        for c in range(self.cells):
            col = digits[:, c]
            add += badd[np.ix_(col, col)].astype(np.int64) * powers[c]
        mul = np.zeros((N, N), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc = np.zeros((N, N), dtype=np.int32)
                for k in range(n):
                    acc = badd[acc, bmul[np.ix_(digits[:, i * n + k], digits[:, k * n + j])]]
                mul += acc.astype(np.int64) * powers[i * n + j]
        return add.astype(np.int32), mul.astype(np.int32)


class TriangularRing(Ring):
    """Upper-triangular n-by-n matrices over a commutative base ring.

    Only the cells on or above the diagonal are stored, row-major:
    (0,0), (0,1), ..., (0,n-1), (1,1), ... with the first free cell least
    significant.  `entries` still reports the full row-major matrix.
    """

    kind = "triangular"

    def __init__(self, n: int, base: Ring):
        self.n = n
        self.base = base
        self.cells = n * n
        self.free = [(i, j) for i in range(n) for j in range(i, n)]
        b = base.order
        one = 0
        for (i, j) in reversed(self.free):
            one = one * b + (base.one if i == j else 0)
        super().__init__(b ** len(self.free), one, f"UT({n},{base.name})")

    def entries(self, index) -> tuple[int, ...]:
        b = self.base.order
        full = [0] * self.cells
        for (i, j) in self.free:
            index, e = divmod(index, b)
            full[i * self.n + j] = e
        return tuple(full)

    def from_entries(self, entries) -> int:
        es = list(entries)
        n = self.n
        if len(es) != self.cells:
            raise ConstructionError(f"{self.name} expects {self.cells} row-major entries")
        b = self.base.order
        for i in range(n):
            for j in range(n):
                e = es[i * n + j]
                if j < i and e != 0:
                    raise ConstructionError(
                        f"{self.name}: entry at ({i},{j}) below the diagonal must be 0")
                if not 0 <= e < b:
                    raise ConstructionError(f"{self.name}: entry {e} is outside the base ring")
        return self._pack_full(es)

    def _pack_full(self, full) -> int:
        b = self.base.order
        n = self.n
        index = 0
        for (i, j) in reversed(self.free):
            index = index * b + full[i * n + j]
        return index

    def add(self, x, y):
        ba = self.base.add
        ex, ey = self.entries(x), self.entries(y)
        return self._pack_full([ba(u, v) for u, v in zip(ex, ey)])

    def neg(self, x):
        bn = self.base.neg
        return self._pack_full([bn(e) for e in self.entries(x)])

    def mul(self, x, y):
        n, base = self.n, self.base
        ex, ey = self.entries(x), self.entries(y)
        out = [0] * self.cells
        for (i, j) in self.free:
            acc = 0
            for k in range(i, j + 1):  # only i <= k <= j contributes above the diagonal
                acc = base.add(acc, base.mul(ex[i * n + k], ey[k * n + j]))
            out[i * n + j] = acc
        return self._pack_full(out)

    def pretty(self, index):
        es = self.entries(index)
        n = self.n
        rows = ("[" + ",".join(self.base.pretty(e) for e in es[i * n:(i + 1) * n]) + "]"
                for i in range(n))
        return "[" + ",".join(rows) + "]"

    def _build_tables(self):
        # Same cellwise vectorization as the full matrix ring, restricted
        # to the stored on-or-above-diagonal cells.
        badd, bmul = self.base.tables()
        n, m, N = self.n, self.base.order, self.order
        nf = len(self.free)
        pos = {cell: c for c, cell in enumerate(self.free)}
        powers = m ** np.arange(nf, dtype=np.int64)
        digits = (np.arange(N, dtype=np.int64)[:, None] // powers[None, :]) % m
        add = np.zeros((N, N), dtype=np.int64)
        for c in range(nf):
            col = digits[:, c]
            add += badd[np.ix_(col, col)].astype(np.int64) * powers[c]
        mul = np.zeros((N, N), dtype=np.int64)
        for c, (i, j) in enumerate(self.free):
            acc = np.zeros((N, N), dtype=np.int32)
            for k in range(i, j + 1):
                acc = badd[acc, bmul[np.ix_(digits[:, pos[(i, k)]], digits[:, pos[(k, j)]])]]
            mul += acc.astype(np.int64) * powers[c]
        return add.astype(np.int32), mul.astype(np.int32)


class ProductRing(Ring):
    """Direct product of rings with componentwise operations.

    Mixed-radix indices: the first factor is the least-significant digit.
    """

    kind = "product"

    def __init__(self, factors, name: str | None = None):
        factors = tuple(factors)
        self.factors = factors
        order = 1
        for f in factors:
            order *= f.order
        one = 0
        for f in reversed(factors):
            one = one * f.order + f.one
        super().__init__(order, one,
                         name or "Prod(" + ",".join(f.name for f in factors) + ")")

    def components(self, index) -> tuple[int, ...]:
        out = []
        for f in self.factors:
            index, c = divmod(index, f.order)
            out.append(c)
        return tuple(out)

    def from_components(self, cs) -> int:
        cs = list(cs)
        if len(cs) != len(self.factors):
            raise ConstructionError(f"{self.name} expects {len(self.factors)} components")
        index = 0
        for f, c in zip(reversed(self.factors), reversed(cs)):
            if not 0 <= c < f.order:
                raise ConstructionError(f"{self.name}: component {c} outside {f.name}")
            index = index * f.order + c
        return index

    def add(self, x, y):
        index = 0
        for f, u, v in zip(reversed(self.factors),
                           reversed(self.components(x)), reversed(self.components(y))):
            index = index * f.order + f.add(u, v)
        return index

    def neg(self, x):
        index = 0
        for f, u in zip(reversed(self.factors), reversed(self.components(x))):
            index = index * f.order + f.neg(u)
        return index

    def mul(self, x, y):
        index = 0
        for f, u, v in zip(reversed(self.factors),
                           reversed(self.components(x)), reversed(self.components(y))):
            index = index * f.order + f.mul(u, v)
        return index

    def pretty(self, index):
        return "(" + ",".join(f.pretty(c) for f, c in zip(self.factors, self.components(index))) + ")"


class TableRingStructure(Ring):
    """A ring given by explicit addition and multiplication tables.

    The tables are validated on construction: index 0 must be the additive
    zero, a unity must exist (or match the one supplied), and with
    `validate=True` (the default) every ring axiom is checked exhaustively.
    """

    kind = "table"

    def __init__(self, add_table, mul_table, one: int | None = None, *, zero: int = 0,
                 additive_type=None, name: str | None = None, validate: bool = True):
        add = np.ascontiguousarray(np.asarray(add_table, dtype=np.int32))
        mul = np.ascontiguousarray(np.asarray(mul_table, dtype=np.int32))
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise ConstructionError("tables must be two square matrices of the same order")
        n = add.shape[0]
        if zero != 0:
            raise ConstructionError("tables must be indexed so that 0 is the additive zero")
        for label, t in (("add", add), ("mul", mul)):
            if t.size and ((t < 0) | (t >= n)).any():
                raise ConstructionError(f"{label} table entries must be indices in range(0, {n})")
        arange = np.arange(n, dtype=np.int32)
        if not (add[0] == arange).all():
            raise ConstructionError("index 0 is not the additive zero of the add table")
        if one is None:
            for e in range(n):
                if (mul[e] == arange).all() and (mul[:, e] == arange).all():
                    one = e
                    break
            else:
                raise ConstructionError("multiplication table has no unity element")
        elif not ((mul[one] == arange).all() and (mul[:, one] == arange).all()):
            raise ConstructionError(f"declared unity {one} is not a two-sided identity")
        if validate:
            verify_tables(add, mul, one)
        elif not (add == 0).any(axis=1).all():
            raise ConstructionError("some element has no additive inverse")
        super().__init__(n, int(one), name or f"table({n})")
        self._add = add
        self._mul = mul
        self._neg = np.argmax(add == 0, axis=1).astype(np.int32)
        self._tables = (add, mul)
        self._additive_type = None
        if additive_type is not None:
            declared = tuple(int(d) for d in additive_type)
            actual = additive_invariant_factors(self)
            if declared != actual:
                raise ConstructionError(
                    f"declared additive type {list(declared)} does not match the "
                    f"add table's invariant factors {list(actual)}")
            self._additive_type = declared

    @property
    def additive_type(self) -> tuple[int, ...]:
        """Invariant factors of the additive group (largest first)."""
        if self._additive_type is None:
            self._additive_type = additive_invariant_factors(self)
        return self._additive_type

    def add(self, a, b):
        return int(self._add[a, b])

    def neg(self, a):
        return int(self._neg[a])

    def mul(self, a, b):
        return int(self._mul[a, b])


class QuotientRing(Ring):
    """Quotient of a ring by a two-sided ideal, elements as cosets.

    Coset k is represented by reps[k], the least parent index it contains.
    The zero coset is the ideal itself, so index 0 again names the zero.
    """

    kind = "quotient"

    def __init__(self, parent: Ring, ideal, name: str | None = None):
        members = set()
        for a in ideal:
            if isinstance(a, Elem):
                if a.ring is not parent:
                    raise RingMismatchError(
                        f"ideal element from {a.ring.name} does not belong to {parent.name}")
                members.add(a.index)
            else:
                members.add(int(a))
        members = sorted(members)
        n = parent.order
        if not members or members[0] < 0 or members[-1] >= n:
            raise ConstructionError(f"{parent.name}: ideal members must be element indices")
        if 0 not in members:
            raise ConstructionError(f"{parent.name}: an ideal must contain 0")
        mset = set(members)
        for a in members:
            if parent.neg(a) not in mset:
                raise ConstructionError(f"{parent.name}: ideal not closed under negation at {a}")
        if n <= TABLE_CAP:
            padd, pmul = parent.tables()
            marr = np.asarray(members)
            mmask = np.zeros(n, dtype=bool)
            mmask[marr] = True
            bad = np.argwhere(~mmask[padd[np.ix_(marr, marr)]])
            if bad.size:
                i, j = bad[0]
                raise ConstructionError(
                    f"{parent.name}: ideal not closed under addition at ({members[i]},{members[j]})")
            bad = np.argwhere(~mmask[pmul[:, marr]])
            if bad.size:
                r, i = bad[0]
                raise ConstructionError(
                    f"{parent.name}: ideal not absorbing on the left at ({r},{members[i]})")
            bad = np.argwhere(~mmask[pmul[marr, :]])
            if bad.size:
                i, r = bad[0]
                raise ConstructionError(
                    f"{parent.name}: ideal not absorbing on the right at ({members[i]},{r})")
            coset_of = {}
            reps = []
            for x in range(n):
                if x in coset_of:
                    continue
                k = len(reps)
                for y in padd[x, marr]:
                    coset_of[int(y)] = k
                reps.append(x)
        else:
            for a in members:
                for b in members:
                    if parent.add(a, b) not in mset:
                        raise ConstructionError(
                            f"{parent.name}: ideal not closed under addition at ({a},{b})")
            for r in range(n):
                for a in members:
                    if parent.mul(r, a) not in mset:
                        raise ConstructionError(
                            f"{parent.name}: ideal not absorbing on the left at ({r},{a})")
                    if parent.mul(a, r) not in mset:
                        raise ConstructionError(
                            f"{parent.name}: ideal not absorbing on the right at ({a},{r})")
            coset_of = {}
            reps = []
            for x in range(n):
                if x in coset_of:
                    continue
                k = len(reps)
                for a in members:
                    coset_of[parent.add(x, a)] = k
                reps.append(x)
        if len(reps) * len(members) != n:  # cosets of a subgroup tile the ring
            raise ConstructionError(f"{parent.name}: ideal cosets do not partition the ring")
        self.parent = parent
        self.ideal = tuple(members)
        self.reps = tuple(reps)
        self._coset_of = coset_of
        super().__init__(len(reps), coset_of[parent.one], name or f"{parent.name}/I")

    def add(self, a, b):
        return self._coset_of[self.parent.add(self.reps[a], self.reps[b])]

    def neg(self, a):
        return self._coset_of[self.parent.neg(self.reps[a])]

    def mul(self, a, b):
        return self._coset_of[self.parent.mul(self.reps[a], self.reps[b])]

    def _build_tables(self):
        # The coset map turns the parent's dense tables into the quotient's
        # with two fancy-indexing passes; the generic per-pair loop would
        # re-dispatch through parent.mul for every entry.
        padd, pmul = self.parent.tables()
        coset = np.empty(self.parent.order, dtype=np.int32)
        for x, k in self._coset_of.items():
            coset[x] = k
        grid = np.ix_(np.asarray(self.reps), np.asarray(self.reps))
        return (np.ascontiguousarray(coset[padd[grid]]),
                np.ascontiguousarray(coset[pmul[grid]]))

    def pretty(self, index):
        return self.parent.pretty(self.reps[index])


# ---------------------------------------------------------------------------
# axiom verification


def _axiom_fail(axiom: str, witness: str):
    raise ConstructionError(f"ring axiom violated: {axiom} at {witness}")


def verify_tables(add, mul, one: int) -> None:
    """Check all eight unital-ring axioms on dense tables.

    Quadratic axioms are checked whole-array; the cubic ones (both
    associativities, both distributivities) go row by row so the working
    set stays at one order x order slab.  The first failure raises a
    ConstructionError naming the axiom and a witness.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    arange = np.arange(n, dtype=add.dtype)

    if not (add == add.T).all():
        a, b = map(int, np.argwhere(add != add.T)[0])
        _axiom_fail("additive commutativity", f"({a},{b})")
    if not (add[0] == arange).all():
        b = int(np.nonzero(add[0] != arange)[0][0])
        _axiom_fail("additive identity", f"(0,{b})")
    no_inverse = np.nonzero(~(add == 0).any(axis=1))[0]
    if no_inverse.size:
        _axiom_fail("additive inverses", f"({int(no_inverse[0])},)")
    if n > 1 and one == 0:
        _axiom_fail("multiplicative identity", "one == zero in a ring of order > 1")
    if not (mul[one] == arange).all():
        b = int(np.nonzero(mul[one] != arange)[0][0])
        _axiom_fail("multiplicative identity", f"({one},{b})")
    if not (mul[:, one] == arange).all():
        b = int(np.nonzero(mul[:, one] != arange)[0][0])
        _axiom_fail("multiplicative identity", f"({b},{one})")

    for a in range(n):
        arow = add[a]
        lhs = add[arow]          # (a+b)+c indexed [b, c]
        rhs = arow[add]          # a+(b+c)
        if not (lhs == rhs).all():
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            _axiom_fail("additive associativity", f"({a},{b},{c})")
        mrow = mul[a]
        lhs = mul[mrow]          # (a*b)*c
        rhs = mrow[mul]          # a*(b*c)
        if not (lhs == rhs).all():
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            _axiom_fail("multiplicative associativity", f"({a},{b},{c})")
        lhs = mrow[add]                              # a*(b+c)
        rhs = add[mrow[:, None], mrow[None, :]]      # a*b + a*c
        if not (lhs == rhs).all():
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            _axiom_fail("left distributivity", f"({a},{b},{c})")
        mcol = mul[:, a]
        lhs = mcol[add]                              # (b+c)*a
        rhs = add[mcol[:, None], mcol[None, :]]      # b*a + c*a
        if not (lhs == rhs).all():
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            _axiom_fail("right distributivity", f"({b},{c},{a})")


def verify_ring_axioms(ring: Ring) -> None:
    """Materialize the ring's tables and check every unital-ring axiom."""
    add, mul = ring.tables()
    verify_tables(add, mul, ring.one)


# ---------------------------------------------------------------------------
# additive structure


def _exact_log(m: int, p: int) -> int:
    e = 0
    while m > 1:
        if m % p:
            raise ConstructionError("additive structure is not an abelian group")
        m //= p
        e += 1
    return e


def additive_invariant_factors(ring: Ring) -> tuple[int, ...]:
    """Invariant factors (d_1, d_2, ...) of the ring's additive group.

    Largest factor first, each divisible by the next; the product equals
    the order.  Recovered by counting p-power torsion: within the
    p-primary part, |{x : p^k x = 0}| = p^{c_k} and the differences
    c_k - c_{k-1} are the conjugate partition of the p-exponents.
    """
    n = ring.order
    if n == 1:
        return (1,)
    if n > TABLE_CAP:
        raise ConstructionError(
            f"{ring.name}: additive type computed only up to order {TABLE_CAP}")
    ords = [1] * n
    for x in range(1, n):
        acc, k = x, 1
        while acc != 0:
            acc = ring.add(acc, x)
            k += 1
        ords[x] = k
    per_prime: dict[int, list[int]] = {}
    for p, e in factorize(n):
        target = p ** e
        conj = []
        c_prev, pk = 0, 1
        while True:
            pk *= p
            cnt = sum(1 for o in ords if pk % o == 0)
            ck = _exact_log(cnt, p)
            conj.append(ck - c_prev)
            c_prev = ck
            if cnt == target:
                break
        lam = []
        i = 1
        while True:
            parts = sum(1 for c in conj if c >= i)
            if not parts:
                break
            lam.append(parts)
            i += 1
        per_prime[p] = lam
    width = max(len(lam) for lam in per_prime.values())
    out = []
    for i in range(width):
        d = 1
        for p, lam in per_prime.items():
            if i < len(lam):
                d *= p ** lam[i]
        out.append(d)
    return tuple(out)


# ---------------------------------------------------------------------------
# matrix helpers (commutative base)


def matrix_determinant(base: Ring, entries, n: int) -> int:
    """Determinant by cofactor expansion; valid over a commutative base."""
    es = list(entries)

    def det(rows, cols):
        if len(rows) == 1:
            return es[rows[0] * n + cols[0]]
        r0, rest = rows[0], rows[1:]
        total = 0
        for t, c in enumerate(cols):
            entry = es[r0 * n + c]
            if entry == 0:
                continue
            minor = det(rest, cols[:t] + cols[t + 1:])
            term = base.mul(entry, minor)
            total = base.add(total, term if t % 2 == 0 else base.neg(term))
        return total

    return det(tuple(range(n)), tuple(range(n)))


def matrix_adjugate(base: Ring, entries, n: int) -> tuple[int, ...]:
    """Adjugate (transposed cofactor matrix) over a commutative base."""
    es = list(entries)
    if n == 1:
        return (base.one,)
    out = [0] * (n * n)
    for i in range(n):
        rows = tuple(r for r in range(n) if r != i)
        for j in range(n):
            cols = tuple(c for c in range(n) if c != j)
            sub = [es[r * n + c] for r in rows for c in cols]
            m = matrix_determinant(base, sub, n - 1)
            if (i + j) % 2:
                m = base.neg(m)
            out[j * n + i] = m
    return tuple(out)


def _commutative(ring: Ring) -> bool:
    """Structural commutativity test used to vet matrix-ring bases."""
    if isinstance(ring, (ZnRing, GFRing)):
        return True
    if isinstance(ring, ProductRing):
        return all(_commutative(f) for f in ring.factors)
    if isinstance(ring, (MatrixRing, TriangularRing)):
        if ring.base.order == 1 or ring.order == 1:
            return True
        if ring.n == 1:
            return _commutative(ring.base)
        return False  # n >= 2 over a nontrivial base: E11*E12 != E12*E11
    if isinstance(ring, QuotientRing) and _commutative(ring.parent):
        return True
    if isinstance(ring, TableRingStructure):
        return bool((ring._mul == ring._mul.T).all())
    add, mul = ring.tables()  # small fallback: exhaustive symmetry check
    return bool((mul == mul.T).all())


# ---------------------------------------------------------------------------
# constructors


def make_zn(n: int) -> ZnRing:
    """The ring of integers modulo n (n = 1 gives the zero ring)."""
    if not isinstance(n, int) or n < 1:
        raise ConstructionError(f"Z({n}): the modulus must be a positive integer")
    if n > DEFAULT_ORDER_CAP:
        raise ConstructionError(f"Z({n}): order exceeds the cap {DEFAULT_ORDER_CAP}")
    return ZnRing(n)


def make_gf(q: int) -> GFRing:
    """The Galois field of prime-power order q."""
    if not isinstance(q, int) or q < 2:
        raise ConstructionError(f"GF({q}): order must be a prime power >= 2")
    if q > DEFAULT_ORDER_CAP:
        raise ConstructionError(f"GF({q}): order exceeds the cap {DEFAULT_ORDER_CAP}")
    return GFRing(q)


def make_matrix_ring(n: int, base: Ring) -> MatrixRing:
    """Full n-by-n matrices over a commutative base ring."""
    if not isinstance(n, int) or n < 1:
        raise ConstructionError(f"M({n},...): the size must be a positive integer")
    if not isinstance(base, Ring):
        raise ConstructionError("matrix rings need a base ring instance")
    if not _commutative(base):
        raise ConstructionError(
            f"M({n},{base.name}): matrix rings are only supported over commutative bases "
            "(invertibility is decided by the determinant criterion)")
    return MatrixRing(n, base)


def make_triangular_ring(n: int, base: Ring) -> TriangularRing:
    """Upper-triangular n-by-n matrices over a commutative base ring."""
    if not isinstance(n, int) or n < 1:
        raise ConstructionError(f"UT({n},...): the size must be a positive integer")
    if not isinstance(base, Ring):
        raise ConstructionError("triangular rings need a base ring instance")
    if not _commutative(base):
        raise ConstructionError(
            f"UT({n},{base.name}): triangular rings are only supported over commutative bases "
            "(invertibility is decided by the diagonal-units criterion)")
    return TriangularRing(n, base)


def make_product(factors, name: str | None = None) -> ProductRing:
    """Direct product of a nonempty list of rings."""
    factors = tuple(factors)
    if not factors:
        raise ConstructionError("a direct product needs at least one factor")
    for f in factors:
        if not isinstance(f, Ring):
            raise ConstructionError("product factors must be ring instances")
    order = 1
    for f in factors:
        order *= f.order
    if order > DEFAULT_ORDER_CAP:
        raise ConstructionError(f"product order {order} exceeds the cap {DEFAULT_ORDER_CAP}")
    return ProductRing(factors, name=name)


def make_boolean(k: int) -> ProductRing:
    """The boolean ring Z_2 x ... x Z_2 with k factors."""
    if not isinstance(k, int) or k < 1:
        raise ConstructionError(f"B({k}): the factor count must be a positive integer")
    if 2 ** k > DEFAULT_ORDER_CAP:
        raise ConstructionError(f"B({k}): order exceeds the cap {DEFAULT_ORDER_CAP}")
    return ProductRing(tuple(ZnRing(2) for _ in range(k)), name=f"B({k})")


def make_table_ring(add_table, mul_table, one: int | None = None, *, zero: int = 0,
                    additive_type=None, name: str | None = None,
                    validate: bool = True) -> TableRingStructure:
    """A ring from explicit tables; all axioms are verified before acceptance."""
    return TableRingStructure(add_table, mul_table, one, zero=zero,
                              additive_type=additive_type, name=name, validate=validate)


def quotient_ring(parent: Ring, ideal, name: str | None = None) -> QuotientRing:
    """The quotient of `parent` by a verified two-sided ideal."""
    if not isinstance(parent, Ring):
        raise ConstructionError("quotients need a parent ring instance")
    return QuotientRing(parent, ideal, name=name)
