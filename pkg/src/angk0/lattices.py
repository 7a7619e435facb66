"""Exact integer linear algebra: normal forms, row lattices, and finitely
generated abelian groups presented as quotients of Z^r.

Everything runs on Python's arbitrary-precision integers.  Intermediate
entries in the normal-form routines can exceed machine words even for small
inputs, so no fixed-width shortcuts are taken anywhere.
"""

from __future__ import annotations

import itertools

from .errors import InfiniteGroupError, NotWellDefinedError


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    # Invariants:      x * a +      y * b ==      g
    #             next_x * a + next_y * b == next_g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, found {width}")
            cols = width
        elif cols is None:
            cols = 0
        self.entries = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for matrix product")
        if other.rows == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        cols = list(zip(*other.entries))
        out = [
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self.entries
        ]
        return IntMatrix(out, cols=other.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.entries)) if self.entries else [], cols=self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]!r})"


def apply_matrix(vec, matrix: IntMatrix) -> tuple[int, ...]:
    """Image of a row vector under right multiplication by `matrix`."""
    vec = tuple(vec)
    if len(vec) != matrix.rows:
        raise ValueError("vector length does not match matrix row count")
    out = [0] * matrix.cols
    for x, row in zip(vec, matrix.entries):
        if x:
            for j, m in enumerate(row):
                out[j] += x * m
    return tuple(out)


def _row_combine(a, u, r, i, col):
    # Make a[r][col] = gcd(a[r][col], a[i][col]) and a[i][col] = 0 with a
    # unimodular operation on rows r and i, mirrored on u.
    ar, ai = a[r][col], a[i][col]
    if ai == 0:
        return
    if ar == 0:
        a[r], a[i] = a[i], a[r]
        u[r], u[i] = u[i], u[r]
        return
    if ai % ar == 0:
        q = ai // ar
        a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        return
    x, y, g = xgcd(ar, ai)
    p, q = ai // g, ar // g  # det [[x, y], [-p, q]] = (x*ar + y*ai)/g = 1
    a[r], a[i] = (
        [x * s + y * t for s, t in zip(a[r], a[i])],
        [-p * s + q * t for s, t in zip(a[r], a[i])],
    )
    u[r], u[i] = (
        [x * s + y * t for s, t in zip(u[r], u[i])],
        [-p * s + q * t for s, t in zip(u[r], u[i])],
    )


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (h, u) with u unimodular, u @ m == h, every pivot positive,
    entries above a pivot reduced into [0, pivot), and zero rows at the
    bottom.  The nonzero rows are the canonical basis of the row span.
    """
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(m.rows)] for i in range(m.rows)]
    piv = 0
    for col in range(m.cols):
        if piv >= m.rows:
            break
        for i in range(piv + 1, m.rows):
            _row_combine(a, u, piv, i, col)
        if a[piv][col] == 0:
            continue
        if a[piv][col] < 0:
            a[piv] = [-x for x in a[piv]]
            u[piv] = [-x for x in u[piv]]
        for i in range(piv):
            q = a[i][col] // a[piv][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[piv])]
                u[i] = [x - q * y for x, y in zip(u[i], u[piv])]
        piv += 1
    return IntMatrix(a, cols=m.cols), IntMatrix(u, cols=m.rows)


def _col_combine(a, v, t, j, row):
    # Column analogue of _row_combine, acting on columns t and j; the same
    # transformation is applied to the columns of v.
    at, aj = a[row][t], a[row][j]
    if aj == 0:
        return
    if at == 0:
        for r in a:
            r[t], r[j] = r[j], r[t]
        for r in v:
            r[t], r[j] = r[j], r[t]
        return
    if aj % at == 0:
        q = aj // at
        for r in a:
            r[j] -= q * r[t]
        for r in v:
            r[j] -= q * r[t]
        return
    x, y, g = xgcd(at, aj)
    p, q = aj // g, at // g
    for r in a:
        r[t], r[j] = x * r[t] + y * r[j], -p * r[t] + q * r[j]
    for r in v:
        r[t], r[j] = x * r[t] + y * r[j], -p * r[t] + q * r[j]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns (d, u, v) with u, v unimodular and u @ m @ v == d, where d is
    diagonal with nonnegative entries satisfying d[i] | d[i+1].
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]
    for t in range(min(nr, nc)):
        while True:
            pivot = None
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    val = abs(a[i][j])
                    if val and (best is None or val < best):
                        best, pivot = val, (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for r in a:
                    r[t], r[pj] = r[pj], r[t]
                for r in v:
                    r[t], r[pj] = r[pj], r[t]
            while True:
                for i in range(t + 1, nr):
                    _row_combine(a, u, t, i, t)
                for j in range(t + 1, nc):
                    _col_combine(a, v, t, j, t)
                if all(a[i][t] == 0 for i in range(t + 1, nr)) and all(
                    a[t][j] == 0 for j in range(t + 1, nc)
                ):
                    break
            # Divisibility fix-up: drag in a row holding an entry the corner
            # does not divide; the corner strictly shrinks, so this ends.
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        if a[t][t] == 0:
            break
    return IntMatrix(a, cols=nc), IntMatrix(u, cols=nr), IntMatrix(v, cols=nc)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if a[i][t]), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


class Lattice:
    """An integer row span inside Z^r, stored by its canonical Hermite basis.

    Canonical storage makes equality of lattices equality of the stored
    bases, which the correspondence round-trip tests rely on.
    """

    __slots__ = ("ambient_rank", "basis", "_pivot_of_col")

    def __init__(self, ambient_rank: int, rows=()):
        mat = IntMatrix(rows, cols=ambient_rank)
        h, _ = hermite_normal_form(mat)
        self.ambient_rank = ambient_rank
        self.basis = tuple(row for row in h.entries if any(row))
        self._pivot_of_col = {}
        for idx, row in enumerate(self.basis):
            col = next(j for j, x in enumerate(row) if x)
            self._pivot_of_col[col] = idx

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, vec) -> bool:
        v = [int(x) for x in vec]
        if len(v) != self.ambient_rank:
            raise ValueError("vector length does not match ambient rank")
        for j in range(self.ambient_rank):
            if v[j] == 0:
                continue
            idx = self._pivot_of_col.get(j)
            if idx is None:
                return False
            row = self.basis[idx]
            if v[j] % row[j]:
                return False
            q = v[j] // row[j]
            for k in range(j, self.ambient_rank):
                v[k] -= q * row[k]
        return True

    def contains_lattice(self, other: "Lattice") -> bool:
        if other.ambient_rank != self.ambient_rank:
            raise ValueError("ambient ranks differ")
        return all(row in self for row in other.basis)

    def join(self, rows) -> "Lattice":
        """Smallest lattice containing self and the given rows."""
        return Lattice(self.ambient_rank, self.basis + tuple(tuple(r) for r in rows))

    def is_full(self) -> bool:
        return self.basis == IntMatrix.identity(self.ambient_rank).entries

    def index_in_ambient(self) -> int | None:
        """[Z^r : L] when L has full rank, else None."""
        if self.rank != self.ambient_rank:
            return None
        result = 1
        for i, row in enumerate(self.basis):
            result *= row[i]
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.ambient_rank == other.ambient_rank
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))

    def __repr__(self):
        return f"Lattice({self.ambient_rank}, {[list(r) for r in self.basis]!r})"


def lattice_membership(lattice: Lattice, vec) -> bool:
    """Decide v in L by back-substitution against the Hermite basis."""
    return tuple(vec) in lattice


class FgAbelianGroup:
    """Z^r modulo an integer row lattice.

    Carries the invariant factors, the free rank, and a canonical coset
    representative map: two vectors reduce to the same representative
    exactly when their difference lies in the relation lattice.
    """

    __slots__ = ("ambient_rank", "relations", "invariant_factors", "free_rank", "_pivots")

    def __init__(self, relations: Lattice):
        self.relations = relations
        self.ambient_rank = relations.ambient_rank
        d, _, _ = smith_normal_form(IntMatrix(relations.basis, cols=self.ambient_rank))
        diag = [d.entries[i][i] for i in range(min(d.rows, d.cols))]
        self.invariant_factors = tuple(x for x in diag if x > 1)
        self.free_rank = self.ambient_rank - relations.rank
        # (pivot column, row) pairs in increasing column order; later rows
        # never touch earlier pivot columns, so greedy reduction lands in a
        # fundamental domain.
        self._pivots = tuple(
            (next(j for j, x in enumerate(row) if x), row) for row in relations.basis
        )

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        if not self.is_finite:
            return None
        result = 1
        for f in self.invariant_factors:
            result *= f
        return result

    def reduce(self, vec) -> tuple[int, ...]:
        """Canonical coset representative of a vector in Z^r."""
        v = [int(x) for x in vec]
        if len(v) != self.ambient_rank:
            raise ValueError("vector length does not match ambient rank")
        for col, row in self._pivots:
            q = v[col] // row[col]
            if q:
                for k in range(col, self.ambient_rank):
                    v[k] -= q * row[k]
        return tuple(v)

    def element(self, vec) -> "GroupElement":
        return GroupElement(self, self.reduce(vec))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ambient_rank)

    def elements(self):
        """All elements of a finite group, by canonical representative."""
        if not self.is_finite:
            raise InfiniteGroupError("cannot enumerate an infinite group")
        bounds = [row[i] for i, row in enumerate(self.relations.basis)]
        for rep in itertools.product(*(range(b) for b in bounds)):
            yield GroupElement(self, rep)

    def __eq__(self, other):
        return isinstance(other, FgAbelianGroup) and self.relations == other.relations

    def __hash__(self):
        return hash(self.relations)

    def __repr__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{f}" for f in self.invariant_factors]
        return f"FgAbelianGroup({' + '.join(parts) if parts else '0'})"


class GroupElement:
    """An element of an FgAbelianGroup, held by canonical representative."""

    __slots__ = ("group", "vec")

    def __init__(self, group: FgAbelianGroup, vec: tuple[int, ...]):
        self.group = group
        self.vec = vec

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self.group != other.group:
            raise ValueError("elements of different groups")
        return self.group.element([a + b for a, b in zip(self.vec, other.vec)])

    def __neg__(self) -> "GroupElement":
        return self.group.element([-a for a in self.vec])

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        return self.group.element([k * a for a in self.vec])

    @property
    def is_zero(self) -> bool:
        return not any(self.vec)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.group == other.group
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"GroupElement({list(self.vec)!r})"


def quotient_group(lattice: Lattice) -> FgAbelianGroup:
    """The quotient of Z^r by an integer row lattice."""
    return FgAbelianGroup(lattice)


class Subgroup:
    """A subgroup of an FgAbelianGroup, stored as its full preimage lattice
    in Z^r (which always contains the relation lattice)."""

    __slots__ = ("group", "preimage")

    def __init__(self, group: FgAbelianGroup, preimage: Lattice):
        if not preimage.contains_lattice(group.relations):
            raise ValueError("preimage lattice must contain the relation lattice")
        self.group = group
        self.preimage = preimage

    def contains(self, element: GroupElement) -> bool:
        if element.group != self.group:
            raise ValueError("element of a different group")
        return element.vec in self.preimage

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return self.preimage.contains_lattice(other.preimage)

    def generators(self) -> list[GroupElement]:
        """Group elements generating the subgroup (classes of basis rows)."""
        return [self.group.element(row) for row in self.preimage.basis]

    def order(self) -> int | None:
        """|H| = [Z^r : relations] / [Z^r : preimage] for finite groups."""
        if not self.group.is_finite:
            return None
        return (
            self.group.relations.index_in_ambient()
            // self.preimage.index_in_ambient()
        )

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.group == other.group
            and self.preimage == other.preimage
        )

    def __hash__(self):
        return hash(self.preimage)

    def __repr__(self):
        return f"Subgroup(basis={[list(r) for r in self.preimage.basis]!r})"


def subgroup_from_generators(group: FgAbelianGroup, gens) -> Subgroup:
    """The subgroup generated by the given elements."""
    rows = []
    for g in gens:
        if g.group != group:
            raise ValueError("generator from a different group")
        rows.append(g.vec)
    return Subgroup(group, group.relations.join(rows))


def _divisor_tuples(budget: int, length: int, divisors):
    if length == 0:
        yield ()
        return
    for d in divisors:
        if budget % d == 0:
            for rest in _divisor_tuples(budget // d, length - 1, divisors):
                yield (d,) + rest


def enumerate_subgroups(group: FgAbelianGroup) -> list[Subgroup]:
    """Every subgroup of a finite group, in lexicographic basis order.

    Subgroups correspond to intermediate lattices between the relation
    lattice and Z^r; these are enumerated as square Hermite bases whose
    diagonal product divides the group order.
    """
    if not group.is_finite:
        raise InfiniteGroupError("subgroup enumeration requires a finite group")
    r = group.ambient_rank
    order = group.order()
    divisors = [d for d in range(1, order + 1) if order % d == 0]
    found = []
    for diag in _divisor_tuples(order, r, divisors):
        above = [(i, j) for j in range(r) for i in range(j) if diag[j] > 1]
        for values in itertools.product(*(range(diag[j]) for _, j in above)):
            rows = [[0] * r for _ in range(r)]
            for i in range(r):
                rows[i][i] = diag[i]
            for (i, j), val in zip(above, values):
                rows[i][j] = val
            lattice = Lattice(r, rows)
            if lattice.contains_lattice(group.relations):
                found.append(Subgroup(group, lattice))
    found.sort(key=lambda s: s.preimage.basis)
    return found


class GroupHom:
    """A homomorphism between quotient groups, induced by an integer matrix
    on the ambient spaces (row vectors act on the left)."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntMatrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def __call__(self, element: GroupElement) -> GroupElement:
        if element.group != self.source:
            raise ValueError("element not in the source group")
        return self.target.element(apply_matrix(element.vec, self.matrix))

    def __repr__(self):
        return f"GroupHom({self.matrix!r})"


def hom_from_generator_images(
    source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntMatrix
) -> GroupHom:
    """Build the hom induced by `matrix`, verifying well-definedness.

    Raises NotWellDefinedError with a witness relation row when the matrix
    fails to map the source relations into the target relations.
    """
    if matrix.rows != source.ambient_rank or matrix.cols != target.ambient_rank:
        raise ValueError("matrix shape does not match the ambient ranks")
    for row in source.relations.basis:
        if apply_matrix(row, matrix) not in target.relations:
            raise NotWellDefinedError(
                f"relation row {list(row)} does not map into the target relations",
                witness=row,
            )
    return GroupHom(source, target, matrix)


def is_surjective(hom: GroupHom) -> bool:
    """True iff the image lattice plus the target relations is all of Z^r."""
    rows = hom.matrix.entries + hom.target.relations.basis
    return Lattice(hom.target.ambient_rank, rows).is_full()
