"""Shared oracles and instance generators for the test suite.

The oracles here deliberately avoid the library's reduction paths:
invariant factors come from gcds of k x k minors, memberships from
exhaustive small-coefficient searches, and subgroup counts from subsets
closed under addition.
"""

from __future__ import annotations

import itertools
import math
import random

from angk0.presentations import (
    Angle,
    Presentation,
    Suspension,
    basis_object,
    object_vec,
)
from angk0.tensor import TensorPresentation


def minors_gcd(entries, k):
    """gcd of all k x k minors (0 when every minor vanishes)."""
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    g = 0
    for rsel in itertools.combinations(range(rows), k):
        for csel in itertools.combinations(range(cols), k):
            minor = _det([[entries[i][j] for j in csel] for i in rsel])
            g = math.gcd(g, minor)
    return g


def _det(a):
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        total += (-1) ** j * a[0][j] * _det(minor)
    return total


def invariant_factors_by_minors(entries):
    """Nonzero Smith diagonal from determinantal divisors: d_1 ... d_k with
    d_1 * ... * d_i = gcd of i x i minors."""
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    factors = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = minors_gcd(entries, k)
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def brute_force_membership(rows, vec, coeff_bound):
    """Is vec an integer combination of rows with coefficients in
    [-coeff_bound, coeff_bound]?  Exhaustive."""
    vec = tuple(vec)
    if not rows:
        return not any(vec)
    width = len(rows[0])
    for coeffs in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=len(rows)):
        total = [0] * width
        for c, row in zip(coeffs, rows):
            for i, x in enumerate(row):
                total[i] += c * x
        if tuple(total) == vec:
            return True
    return False


def count_cosets_exhaustive(rows, box, coeff_bound=4):
    """Count equivalence classes of the box vectors under differing by a
    small-coefficient combination of the rows."""
    vectors = list(itertools.product(*(range(b) for b in box)))
    classes = []
    for v in vectors:
        for rep in classes:
            diff = tuple(a - b for a, b in zip(v, rep))
            if brute_force_membership(rows, diff, coeff_bound):
                break
        else:
            classes.append(v)
    return len(classes)


def subgroup_count_by_subsets(group):
    """Count subsets of a finite group closed under addition.

    Exhaustive over subsets containing zero; subsets whose size does not
    divide the order are skipped (a nonempty finite set closed under
    addition is a subgroup, so its size divides the order).
    """
    elements = list(group.elements())
    order = len(elements)
    index = {e.vec: i for i, e in enumerate(elements)}
    zero_idx = index[group.zero().vec]
    add = [
        [index[(a + b).vec] for b in elements]
        for a in elements
    ]
    count = 0
    for mask in range(1 << order):
        if not (mask >> zero_idx) & 1:
            continue
        members = [i for i in range(order) if (mask >> i) & 1]
        if order % len(members):
            continue
        if all((mask >> add[i][j]) & 1 for i in members for j in members):
            count += 1
    return count


_NAMES = "abcdefghij"


def random_presentation(rng: random.Random, max_rank=5, max_angles=4, max_mult=3, n=None):
    rank = rng.randint(1, max_rank)
    n = n if n is not None else rng.choice([3, 4, 5, 7])
    images = list(range(rank))
    rng.shuffle(images)
    angles = []
    for _ in range(rng.randint(0, max_angles)):
        vertices = tuple(
            object_vec([rng.randint(0, max_mult) for _ in range(rank)]) for _ in range(n)
        )
        angles.append(Angle(vertices))
    return Presentation(
        n=n,
        indec_names=tuple(_NAMES[:rank]),
        suspension=Suspension(tuple(images)),
        angles=tuple(angles),
    )


def random_object(rng: random.Random, rank, max_mult=3):
    return object_vec([rng.randint(0, max_mult) for _ in range(rank)])


def random_valid_tensor(rng: random.Random, n=None):
    """A random valid tensor presentation (odd n, identity suspension).

    Three families: a cyclic-shift table with a translation-closed angle
    list, a random commutative associative monoid table with no angles, and
    a componentwise table with no angles.
    """
    n = n if n is not None else rng.choice([3, 5, 7])
    family = rng.randint(0, 2)
    if family == 0:
        rank = rng.randint(1, 4)
        names = tuple(_NAMES[:rank])
        base_angles = []
        for _ in range(rng.randint(0, 2)):
            vertices = tuple(
                object_vec([rng.randint(0, 2) for _ in range(rank)]) for _ in range(n)
            )
            base_angles.append(vertices)
        # close the angle list under the index shift so tensoring by any
        # basis vector permutes the listed Euler vectors
        angles = []
        for vertices in base_angles:
            for shift in range(rank):
                shifted = tuple(
                    tuple(v[(j - shift) % rank] for j in range(rank)) for v in vertices
                )
                angles.append(Angle(shifted))
        table = {
            (i, j): basis_object(rank, (i + j) % rank)
            for i in range(rank)
            for j in range(i, rank)
        }
        p = Presentation(
            n=n,
            indec_names=names,
            suspension=Suspension(tuple(range(rank))),
            angles=tuple(angles),
        )
        return TensorPresentation(p, table, basis_object(rank, 0))
    if family == 1:
        # commutative monoid on {0..rank-1} given by a random associative
        # sample: use min/max style tables, which are always associative
        rank = rng.randint(1, 4)
        names = tuple(_NAMES[:rank])
        op = min if rng.random() < 0.5 else max
        table = {
            (i, j): basis_object(rank, op(i, j))
            for i in range(rank)
            for j in range(i, rank)
        }
        unit = basis_object(rank, rank - 1 if op is min else 0)
        p = Presentation(
            n=n, indec_names=names, suspension=Suspension(tuple(range(rank)))
        )
        return TensorPresentation(p, table, unit)
    rank = rng.randint(1, 4)
    names = tuple(_NAMES[:rank])
    table = {
        (i, j): basis_object(rank, i) if i == j else (0,) * rank
        for i in range(rank)
        for j in range(i, rank)
    }
    unit = object_vec([1] * rank)
    p = Presentation(n=n, indec_names=names, suspension=Suspension(tuple(range(rank))))
    return TensorPresentation(p, table, unit)
