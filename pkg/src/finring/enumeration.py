"""Exhaustive generation of all finite unital rings of a small order.

The search runs one additive group shape at a time: pick the abelian group
(as a descending chain of invariant factors), then choose the generator
products g_i * g_j as structure constants.  Bilinearity extends any such
choice to a full multiplication table, so the search space is the r*r
constant grid, pruned as it is filled by checking associativity on every
generator triple whose products are already determined.  Unity detection
runs last, by scanning for an element that fixes all generators on both
sides; tables without a unity are discarded.

Orders up to 8 enumerate without restriction.  Orders 9..16 are
best-effort: they require an explicit node budget and fail gracefully
with a resume token (BudgetError) when it runs out, so a later call can
continue exactly where the search stopped.  Parallel runs partition the
search space by the leading structure constants; the merged stream is
byte-identical for every worker count.

Isomorphism classing relies on the fact that, at these orders, every ring
isomorphism is in particular an isomorphism of additive groups: two rings
on the same canonical additive labeling are ring-isomorphic exactly when
an additive automorphism carries one multiplication table to the other.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BudgetError, ConstructionError
from .rings import (
    Ring,
    TableRingStructure,
    additive_invariant_factors,
    factorize,
    make_table_ring,
)
from . import analysis as _analysis

# Orders enumerable with no explicit budget.
MANDATORY_MAX_ORDER = 8
# Orders accepted at all; above this the search is out of scope.
BEST_EFFORT_MAX_ORDER = 16
# Canonicalization bound: additive automorphism groups stay materializable.
CANONICAL_CAP = 16

_TOKEN_VERSION = "v1"


# ---------------------------------------------------------------------------
# additive group shapes


@dataclass(frozen=True)
class AdditiveGroupShape:
    """One abelian group of the target order, as a divisibility chain.

    `invariant_factors` is d_1 >= d_2 >= ... with each d_{i+1} | d_i and
    product equal to the order; `generators` are the indices of the basis
    elements e_i in the shape's own labeling; `automorphism_count` is the
    size of the group's automorphism group (closed-form, cross-checked
    against brute enumeration whenever automorphisms are materialized).
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[int, ...]
    automorphism_count: int

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n


def _partitions(n: int):
    """Integer partitions of n as descending tuples."""
    if n == 0:
        yield ()
        return
    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def _aut_count_p_group(p: int, exponents) -> int:
    """|Aut| of Z_{p^e_1} x ... x Z_{p^e_n} by the closed product formula.

    Uses the standard description via the counts d_k (last index sharing
    the k-th exponent) and c_k (first index sharing it), with exponents
    taken in ascending order.
    """
    es = sorted(exponents)
    n = len(es)
    total = 1
    for k in range(1, n + 1):
        d_k = max(l for l in range(1, n + 1) if es[l - 1] == es[k - 1])
        total *= p ** d_k - p ** (k - 1)
    for j in range(1, n + 1):
        d_j = max(l for l in range(1, n + 1) if es[l - 1] == es[j - 1])
        total *= (p ** es[j - 1]) ** (n - d_j)
    for i in range(1, n + 1):
        c_i = min(l for l in range(1, n + 1) if es[l - 1] == es[i - 1])
        total *= (p ** (es[i - 1] - 1)) ** (n - c_i + 1)
    return total


def abelian_automorphism_count(factors) -> int:
    """Automorphism count of the abelian group with the given invariant factors."""
    factors = tuple(factors)
    if factors in ((), (1,)):
        return 1
    per_prime: dict[int, list[int]] = {}
    for d in factors:
        for p, e in factorize(d):
            per_prime.setdefault(p, []).append(e)
    total = 1
    for p, exps in per_prime.items():
        total *= _aut_count_p_group(p, exps)
    return total


def abelian_group_shapes(order: int) -> list[AdditiveGroupShape]:
    """All abelian groups of the order, as invariant-factor chains.

    Largest group first by factor tuple, e.g. order 8 gives
    [8], [4, 2], [2, 2, 2].
    """
    if not isinstance(order, int) or order < 1:
        raise ConstructionError(f"group order must be a positive integer, got {order}")
    if order == 1:
        return [AdditiveGroupShape((1,), (0,), 1)]
    per_prime = [(p, list(_partitions(e))) for p, e in factorize(order)]
    chains = []
    for combo in itertools.product(*(parts for _, parts in per_prime)):
        width = max(len(part) for part in combo)
        fs = []
        for i in range(width):
            d = 1
            for (p, _), part in zip(per_prime, combo):
                if i < len(part):
                    d *= p ** part[i]
            fs.append(d)
        chains.append(tuple(fs))
    chains.sort(reverse=True)
    shapes = []
    for fs in chains:
        ctx = _shape_context(fs)
        shapes.append(AdditiveGroupShape(fs, tuple(ctx.gens), abelian_automorphism_count(fs)))
    return shapes


# ---------------------------------------------------------------------------
# shape search context


class _ShapeContext:
    """Precomputed additive data for one invariant-factor chain.

    Elements are mixed-radix digit vectors over the factors, first factor
    least significant; `add` and `smul` are dense lookup lists, `digits`
    the nonzero digit support of each element, and `K[i][j]` the candidate
    values for the structure constant g_i * g_j (the annihilator of
    gcd(d_i, d_j), since that scalar kills both generators).
    """

    def __init__(self, factors: tuple[int, ...]):
        self.factors = factors
        r = len(factors)
        self.r = r
        strides = []
        n = 1
        for d in factors:
            strides.append(n)
            n *= d
        self.order = n
        self.strides = strides
        self.exponent = factors[0]

        def decode(x):
            return tuple((x // strides[i]) % factors[i] for i in range(r))

        def encode(t):
            return sum(a * strides[i] for i, a in enumerate(t))

        self.add = [[encode(tuple((a + b) % d for a, b, d in zip(decode(x), decode(y), factors)))
                     for y in range(n)] for x in range(n)]
        self.smul = [[encode(tuple((s * a) % d for a, d in zip(decode(x), factors)))
                      for x in range(n)] for s in range(self.exponent)]
        self.digits = [tuple((i, a) for i, a in enumerate(decode(x)) if a) for x in range(n)]
        self.gens = [strides[i] % n for i in range(r)]

        def ann(g):
            return [x for x in range(n)
                    if all((g * a) % d == 0 for a, d in zip(decode(x), factors))]

        self.K = [[ann(gcd(factors[i], factors[j])) for j in range(r)] for i in range(r)]

        # wavefront position order: finish each leading generator block so
        # associativity triples become checkable as early as possible
        positions = []
        for t in range(r):
            for i in range(t):
                positions.append((i, t))
                positions.append((t, i))
            positions.append((t, t))
        self.positions = positions
        posidx = {p: k for k, p in enumerate(positions)}
        self.P = [[posidx[(i, j)] for j in range(r)] for i in range(r)]
        self.triples = [(i, j, k) for i in range(r) for j in range(r) for k in range(r)]
        self.add_np = np.asarray(self.add, dtype=np.int32)

    def candidate_lists(self, reverse: bool) -> list[list[int]]:
        out = [self.K[i][j] for (i, j) in self.positions]
        if reverse:
            out = [list(reversed(c)) for c in out]
        return out


_CTX_CACHE: dict[tuple[int, ...], _ShapeContext] = {}


def _shape_context(factors) -> _ShapeContext:
    factors = tuple(factors)
    if factors not in _CTX_CACHE:
        _CTX_CACHE[factors] = _ShapeContext(factors)
    return _CTX_CACHE[factors]


# ---------------------------------------------------------------------------
# the structure-constant search


def _dfs_stream(ctx: _ShapeContext, reverse: bool = False, budget=None,
                start_path=None, token_prefix: str = "", fixed_prefix=None):
    """Yield every structure-constant assignment that stays associative.

    `budget` is a single-element list of remaining node visits shared
    across shapes (None = unbounded); exhausting it raises BudgetError
    whose resume token is `token_prefix` plus the candidate-index path of
    the node about to be visited.  `start_path` resumes from exactly such
    a path: subtrees lexicographically before it are skipped and the
    spine nodes above the target are replayed without consuming budget.
    `fixed_prefix` pins the candidate indices of the leading positions
    (parallel partitioning).
    """
    positions = ctx.positions
    npos = len(positions)
    cands = ctx.candidate_lists(reverse)
    triples = ctx.triples
    digits, add, smul, P = ctx.digits, ctx.add, ctx.smul, ctx.P
    ntri = len(triples)
    C = [-1] * npos
    spine = list(start_path) if start_path else []
    path: list[int] = []

    def check_triple(t):
        i, j, k = triples[t]
        cij = C[P[i][j]]
        if cij < 0:
            return -1
        cjk = C[P[j][k]]
        if cjk < 0:
            return -1
        lhs = 0
        for (m, a) in digits[cij]:
            v = C[P[m][k]]
            if v < 0:
                return -1
            lhs = add[lhs][smul[a][v]]
        rhs = 0
        for (m, a) in digits[cjk]:
            v = C[P[i][m]]
            if v < 0:
                return -1
            rhs = add[rhs][smul[a][v]]
        return 1 if lhs == rhs else 0

    def rec(depth, unchecked, on_spine):
        if depth == npos:
            yield tuple(C)
            return
        clist = cands[depth]
        if fixed_prefix is not None and depth < len(fixed_prefix):
            index_range = range(fixed_prefix[depth], fixed_prefix[depth] + 1)
        elif on_spine and depth < len(spine):
            index_range = range(spine[depth], len(clist))
        else:
            index_range = range(len(clist))
        for ci in index_range:
            replayed = (on_spine and depth < len(spine) - 1 and ci == spine[depth])
            if not replayed and budget is not None:
                if budget[0] <= 0:
                    raise BudgetError(
                        f"node budget exhausted while searching order {ctx.order}",
                        resume_token=token_prefix + ",".join(map(str, path + [ci])))
                budget[0] -= 1
            C[depth] = clist[ci]
            path.append(ci)
            newmask = unchecked
            ok = True
            t = 0
            m = unchecked
            while m:
                if m & 1:
                    res = check_triple(t)
                    if res == 0:
                        ok = False
                        break
                    if res == 1:
                        newmask &= ~(1 << t)
                m >>= 1
                t += 1
            if ok:
                yield from rec(depth + 1, newmask, replayed)
            path.pop()
        C[depth] = -1

    yield from rec(0, (1 << ntri) - 1, bool(spine))


def _unity_of(ctx: _ShapeContext, consts) -> int:
    """Index of the table's unity, or -1: e works iff it fixes all generators."""
    r, n = ctx.r, ctx.order
    add, smul, digits, P = ctx.add, ctx.smul, ctx.digits, ctx.P
    gens = ctx.gens
    for e in range(n):
        ok = True
        for j in range(r):
            s = 0
            for (m, a) in digits[e]:
                s = add[s][smul[a][consts[P[m][j]]]]
            if s != gens[j]:
                ok = False
                break
        if not ok:
            continue
        for i in range(r):
            s = 0
            for (m, a) in digits[e]:
                s = add[s][smul[a][consts[P[i][m]]]]
            if s != gens[i]:
                ok = False
                break
        if ok:
            return e
    return -1


def _full_mul(ctx: _ShapeContext, consts) -> tuple[int, ...]:
    """Bilinear extension of the structure constants to the full flat table."""
    n, exponent = ctx.order, ctx.exponent
    add, smul, digits, P = ctx.add, ctx.smul, ctx.digits, ctx.P
    out = []
    for x in range(n):
        dx = digits[x]
        for y in range(n):
            s = 0
            for (i, a) in dx:
                for (j, b) in digits[y]:
                    s = add[s][smul[(a * b) % exponent][consts[P[i][j]]]]
            out.append(s)
    return tuple(out)


def _unital_tables(ctx: _ShapeContext, assignments):
    """Filter a constant stream down to (flat mul table, unity) pairs."""
    for consts in assignments:
        e = _unity_of(ctx, consts)
        if e >= 0:
            yield _full_mul(ctx, consts), e


def _search_worker(args):
    """Search one contiguous block of leading-constant prefixes (parallel path)."""
    factors, reverse, depth, start, stop = args
    ctx = _shape_context(tuple(factors))
    ranges = [range(len(c)) for c in ctx.candidate_lists(reverse)[:depth]]
    out = []
    for combo in itertools.islice(itertools.product(*ranges), start, stop):
        out.extend(_unital_tables(ctx, _dfs_stream(ctx, reverse=reverse, fixed_prefix=combo)))
    return out


# ---------------------------------------------------------------------------
# additive isomorphisms, automorphisms, and orbit dedup


def _additive_isomorphisms(ctx: _ShapeContext, target_add, target_order: int):
    """All additive isomorphisms from the shape labeling onto a target group.

    Generator images are drawn from the target elements annihilated by the
    corresponding invariant factor; linear extension plus a bijectivity
    check keeps exactly the isomorphisms.  With the shape's own add law as
    target this enumerates the automorphism group.
    """
    n = ctx.order
    if target_order != n:
        return []
    cand = []
    for d in ctx.factors:
        cs = []
        for x in range(n):
            acc = 0
            for _ in range(d):
                acc = target_add(acc, x)
            if acc == 0:
                cs.append(x)
        cand.append(cs)
    isos = []
    for images in itertools.product(*cand):
        mults = []
        for d, img in zip(ctx.factors, images):
            row = [0] * d
            for a in range(1, d):
                row[a] = target_add(row[a - 1], img)
            mults.append(row)
        phi = [0] * n
        seen = set()
        for x in range(n):
            s = 0
            for (i, a) in ctx.digits[x]:
                s = target_add(s, mults[i][a])
            phi[x] = s
            seen.add(s)
        if len(seen) == n:
            isos.append(tuple(phi))
    return isos


_AUTOS_CACHE: dict[tuple[int, ...], list[tuple[int, ...]]] = {}


def _shape_automorphisms(ctx: _ShapeContext) -> list[tuple[int, ...]]:
    if ctx.factors not in _AUTOS_CACHE:
        autos = _additive_isomorphisms(ctx, lambda a, b: ctx.add[a][b], ctx.order)
        expected = abelian_automorphism_count(ctx.factors)
        if len(autos) != expected:
            raise ConstructionError(
                f"automorphism count mismatch for {list(ctx.factors)}: "
                f"enumerated {len(autos)}, formula {expected}")
        _AUTOS_CACHE[ctx.factors] = autos
    return _AUTOS_CACHE[ctx.factors]


def _relabeled(ctx: _ShapeContext, mul_flat, phi) -> tuple[int, ...]:
    n = ctx.order
    rel = [0] * (n * n)
    for i in range(n):
        pi = phi[i]
        base = i * n
        prow = pi * n
        for j in range(n):
            rel[prow + phi[j]] = phi[mul_flat[base + j]]
    return tuple(rel)


# ---------------------------------------------------------------------------
# the public enumeration stream


def _parse_resume(token: str, order: int, mode: str):
    parts = token.split(":")
    if len(parts) != 5 or parts[0] != _TOKEN_VERSION:
        raise ConstructionError(f"malformed resume token: {token!r}")
    _, t_order, t_mode, t_shape, t_path = parts
    if not (t_order.isdigit() and t_shape.isdigit()):
        raise ConstructionError(f"malformed resume token: {token!r}")
    if int(t_order) != order or t_mode != mode:
        raise ConstructionError(
            f"resume token {token!r} does not match order={order}, search_order mode {mode!r}")
    try:
        path = [int(p) for p in t_path.split(",") if p != ""]
    except ValueError:
        raise ConstructionError(f"malformed resume token: {token!r}") from None
    if any(p < 0 for p in path):
        raise ConstructionError(f"malformed resume token: {token!r}")
    return int(t_shape), path


def enumerate_unital_rings(order: int, up_to_iso: bool = False, *,
                           search_order: str = "forward", jobs: int = 1,
                           budget: int | None = None, resume: str | None = None):
    """Stream every unital ring of the order as validated explicit-table rings.

    With `up_to_iso` the stream keeps exactly one representative per
    isomorphism class (the first found).  `search_order` ("forward" or
    "reversed") flips the candidate order at every branch point — an
    independent traversal whose canonical-form sets must coincide with the
    forward run.  `jobs` parallelizes by leading-constant prefix with a
    worker-count-independent merge.  Orders above 8 require an explicit
    node `budget`; when it runs out, a BudgetError carries a `resume`
    token that continues the stream exactly where it stopped.
    """
    if not isinstance(order, int) or order < 1:
        raise ConstructionError(f"enumeration order must be a positive integer, got {order}")
    if order > BEST_EFFORT_MAX_ORDER:
        raise ConstructionError(
            f"enumeration is scoped to orders <= {BEST_EFFORT_MAX_ORDER}, got {order}")
    if search_order not in ("forward", "reversed"):
        raise ConstructionError(f"search_order must be 'forward' or 'reversed', got {search_order!r}")
    if not isinstance(jobs, int) or jobs < 1:
        raise ConstructionError(f"jobs must be a positive integer, got {jobs}")
    if budget is not None and (not isinstance(budget, int) or budget < 0):
        raise ConstructionError(f"budget must be a non-negative integer, got {budget}")
    mode = "f" if search_order == "forward" else "r"
    if jobs > 1 and (budget is not None or resume is not None):
        raise ConstructionError("budgeted or resumed searches run sequentially; use jobs=1")
    if order > MANDATORY_MAX_ORDER and budget is None and resume is None:
        raise BudgetError(
            f"order {order} is best-effort: pass an explicit node budget "
            "(the token restarts from the beginning)",
            resume_token=f"{_TOKEN_VERSION}:{order}:{mode}:0:")
    start_shape, start_path = 0, []
    if resume is not None:
        start_shape, start_path = _parse_resume(resume, order, mode)
        if budget is None and order > MANDATORY_MAX_ORDER:
            raise BudgetError(
                f"order {order} is best-effort: pass an explicit node budget along with the token",
                resume_token=resume)
    reverse = mode == "r"
    budget_cell = None if budget is None else [int(budget)]
    shapes = abelian_group_shapes(order)
    if start_shape >= len(shapes) and resume is not None:
        raise ConstructionError(
            f"resume token {resume!r} names shape {start_shape}, but order {order} "
            f"has only {len(shapes)} additive shapes")

    def run():
        emitted = 0
        for si in range(start_shape, len(shapes)):
            shape = shapes[si]
            ctx = _shape_context(shape.invariant_factors)
            token_prefix = f"{_TOKEN_VERSION}:{order}:{mode}:{si}:"
            path = start_path if si == start_shape else []
            if jobs > 1:
                pairs = _parallel_shape(ctx, reverse, jobs)
            else:
                pairs = _unital_tables(
                    ctx, _dfs_stream(ctx, reverse=reverse, budget=budget_cell,
                                     start_path=path, token_prefix=token_prefix))
            seen: set[tuple[int, ...]] = set()
            autos = None
            for mul_flat, one in pairs:
                if up_to_iso:
                    if mul_flat in seen:
                        continue
                    if autos is None:
                        autos = _shape_automorphisms(ctx)
                    for phi in autos:
                        seen.add(_relabeled(ctx, mul_flat, phi))
                n = ctx.order
                mul_rows = [list(mul_flat[i * n:(i + 1) * n]) for i in range(n)]
                ring = make_table_ring(ctx.add_np, mul_rows, one=one,
                                       additive_type=shape.invariant_factors,
                                       name=f"R{order}#{emitted}")
                emitted += 1
                yield ring

    return run()


def _parallel_shape(ctx: _ShapeContext, reverse: bool, jobs: int):
    """Worker-partitioned search of one shape, merged in sequential order."""
    cands = ctx.candidate_lists(reverse)
    sizes = [len(c) for c in cands]
    depth, total = 0, 1
    while depth < len(sizes) and total < jobs * 8:
        total *= sizes[depth]
        depth += 1
    if total < 2 or depth == 0:
        yield from _unital_tables(ctx, _dfs_stream(ctx, reverse=reverse))
        return
    nbatches = min(total, jobs * 4)
    bounds = sorted({round(total * k / nbatches) for k in range(nbatches + 1)})
    args = [(ctx.factors, reverse, depth, lo, hi)
            for lo, hi in zip(bounds[:-1], bounds[1:])]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for block in pool.map(_search_worker, args):
            yield from block


# ---------------------------------------------------------------------------
# canonical forms and isomorphism


@dataclass(frozen=True)
class CanonicalForm:
    """Lexicographically minimal relabeling of a ring's tables.

    The add component is the canonical table of the ring's additive shape;
    the mul component and unity are minimized over every additive
    isomorphism from that labeling onto the ring.  Equal canonical forms
    characterize ring isomorphism at the orders in scope.
    """

    invariant_factors: tuple[int, ...]
    add_table: tuple[int, ...]
    mul_table: tuple[int, ...]
    one: int


def canonical_form(r: Ring) -> CanonicalForm:
    """The minimal (add, mul, one) relabeling of r; orders up to 16."""
    if r.order > CANONICAL_CAP:
        raise ConstructionError(
            f"canonical forms are computed only up to order {CANONICAL_CAP}")
    if isinstance(r, TableRingStructure):
        factors = r.additive_type
    else:
        factors = additive_invariant_factors(r)
    ctx = _shape_context(factors)
    isos = _additive_isomorphisms(ctx, r.add, r.order)
    if not isos:
        raise ConstructionError(f"{r.name}: no additive isomorphism onto shape {list(factors)}")
    n = r.order
    best = None
    for phi in isos:
        inv = [0] * n
        for s_idx, t_idx in enumerate(phi):
            inv[t_idx] = s_idx
        mul_flat = tuple(inv[r.mul(phi[a], phi[b])] for a in range(n) for b in range(n))
        key = (mul_flat, inv[r.one])
        if best is None or key < best:
            best = key
    add_flat = tuple(v for row in ctx.add for v in row)
    return CanonicalForm(invariant_factors=factors, add_table=add_flat,
                         mul_table=best[0], one=best[1])


def are_isomorphic(r1: Ring, r2: Ring) -> bool:
    """Ring isomorphism test: cheap invariant screen, then canonical forms."""
    if r1 is r2:
        return True
    if r1.order != r2.order:
        return False
    if max(r1.order, r2.order) > CANONICAL_CAP:
        raise ConstructionError(
            f"isomorphism testing is scoped to orders <= {CANONICAL_CAP}")
    screens = (
        additive_invariant_factors,
        _analysis.characteristic,
        lambda r: _analysis.unit_group(r).count,
        _analysis.is_boolean,
        _analysis.is_commutative,
        lambda r: len(_analysis.jacobson_radical(r).members),
    )
    for screen in screens:
        if screen(r1) != screen(r2):
            return False
    return canonical_form(r1) == canonical_form(r2)


# ---------------------------------------------------------------------------
# text serialization


def serialize_table_ring(r: TableRingStructure) -> str:
    """Text form: header `order zero one factors...`, add rows, mul rows."""
    if not isinstance(r, TableRingStructure):
        raise ConstructionError("only explicit-table rings serialize to the text format")
    add, mul = r.tables()
    head = " ".join(map(str, [r.order, r.zero, r.one, *r.additive_type]))
    lines = [head]
    for row in add:
        lines.append(" ".join(str(int(v)) for v in row))
    for row in mul:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_table_ring(text: str, name: str | None = None) -> TableRingStructure:
    """Inverse of serialize_table_ring; validates every ring axiom on load."""
    lines = [ln for ln in text.strip().splitlines()]
    if not lines:
        raise ConstructionError("empty table-ring serialization")
    head = lines[0].split()
    if len(head) < 4:
        raise ConstructionError(f"table-ring header needs order, zero, one, factors: {lines[0]!r}")
    order, zero, one = (int(v) for v in head[:3])
    factors = tuple(int(v) for v in head[3:])
    if len(lines) != 1 + 2 * order:
        raise ConstructionError(
            f"expected {2 * order} table rows after the header, found {len(lines) - 1}")
    rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    return make_table_ring(rows[:order], rows[order:], one=one, zero=zero,
                           additive_type=factors, name=name)


def write_ring_file(stream, rings) -> int:
    """Write serialized rings separated by blank lines; returns the count."""
    count = 0
    for r in rings:
        if count:
            stream.write("\n")
        stream.write(serialize_table_ring(r))
        count += 1
    return count


def read_ring_file(stream) -> list[TableRingStructure]:
    """Read back a blank-line-separated ring file."""
    blocks = [b for b in stream.read().split("\n\n") if b.strip()]
    return [parse_table_ring(b, name=f"file#{i}") for i, b in enumerate(blocks)]
