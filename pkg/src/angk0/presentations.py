"""Finitely presented categories with an n-term angle structure.

Objects are multiplicity vectors over a fixed list of indecomposable
symbols (so isomorphism is vector equality), the suspension acts by
permuting symbols, and the distinguished n-angles are recorded as tuples
of objects.  Morphism data is deliberately absent: every computation
downstream depends on objects only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattices import IntMatrix

ObjectVec = tuple[int, ...]


def object_vec(values) -> ObjectVec:
    out = tuple(int(x) for x in values)
    if any(x < 0 for x in out):
        raise ValueError("object multiplicities must be nonnegative")
    return out


def zero_object(rank: int) -> ObjectVec:
    return (0,) * rank


def basis_object(rank: int, index: int) -> ObjectVec:
    return tuple(int(i == index) for i in range(rank))


def add_objects(v: ObjectVec, w: ObjectVec) -> ObjectVec:
    if len(v) != len(w):
        raise ValueError("objects live over different symbol lists")
    return tuple(a + b for a, b in zip(v, w))


def total_multiplicity(v: ObjectVec) -> int:
    return sum(v)


def iter_object_vectors(rank: int, max_total: int, include_zero: bool = False):
    """Objects with total multiplicity <= max_total, in lexicographic order."""
    for v in itertools.product(range(max_total + 1), repeat=rank):
        if sum(v) > max_total:
            continue
        if not include_zero and not any(v):
            continue
        yield v


@dataclass(frozen=True)
class Suspension:
    """The suspension automorphism as a permutation of symbol indices.

    images[i] is the index of the suspension of symbol i.  Bijectivity is
    not enforced here; `validate_presentation` reports on it.
    """

    images: tuple[int, ...]

    def is_permutation(self) -> bool:
        return sorted(self.images) == list(range(len(self.images)))

    def inverse(self) -> "Suspension":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Suspension(tuple(inv))

    def apply(self, v, times: int = 1) -> ObjectVec:
        """Permute an integer vector by the suspension, `times` times."""
        v = tuple(v)
        if len(v) != len(self.images):
            raise ValueError("vector length does not match symbol count")
        if times == 0:
            return v
        perm = self if times > 0 else self.inverse()
        for _ in range(abs(times)):
            out = [0] * len(v)
            for i, x in enumerate(v):
                out[perm.images[i]] = x
            v = tuple(out)
        return v

    def matrix(self) -> IntMatrix:
        """Row-vector action: row i is the basis vector at images[i]."""
        n = len(self.images)
        return IntMatrix(
            [[int(j == self.images[i]) for j in range(n)] for i in range(n)], cols=n
        )


@dataclass(frozen=True)
class Angle:
    """The object tuple (A_1, ..., A_n) of an n-angle.

    The closing vertex (the suspension of A_1) is implicit, so direct sums
    and rotations of stored angles keep the convention automatically.
    """

    vertices: tuple[ObjectVec, ...]


@dataclass(frozen=True)
class Presentation:
    """A finite presentation: arity n, symbols, suspension, listed angles.

    The semantic angle collection is the closure of the listed angles and
    the trivial angles under rotation and direct sum; only generators are
    stored.
    """

    n: int
    indec_names: tuple[str, ...]
    suspension: Suspension
    angles: tuple[Angle, ...] = ()

    def __post_init__(self):
        r = len(self.indec_names)
        if len(self.suspension.images) != r:
            raise ValueError("suspension image list must match symbol count")
        if any(not 0 <= i < r for i in self.suspension.images):
            raise ValueError("suspension image out of range")
        for a in self.angles:
            for v in a.vertices:
                if len(v) != r:
                    raise ValueError("angle vertex has wrong length")

    @property
    def rank(self) -> int:
        return len(self.indec_names)

    def name_index(self, name: str) -> int:
        return self.indec_names.index(name)

    def object(self, multiplicities: dict[str, int]) -> ObjectVec:
        """Build an object from a {symbol: multiplicity} mapping."""
        out = [0] * self.rank
        for name, mult in multiplicities.items():
            out[self.name_index(name)] = int(mult)
        return object_vec(out)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]
    parity: str
    classification_applies: bool

    @property
    def valid(self) -> bool:
        return not self.violations


def validate_presentation(p: Presentation) -> ValidationReport:
    """Structural checks plus the parity gate for the classification layer."""
    violations = []
    if p.n < 3:
        violations.append(f"n must be >= 3, found {p.n}")
    if len(set(p.indec_names)) != len(p.indec_names):
        violations.append("indecomposable names are not distinct")
    if any(not name for name in p.indec_names):
        violations.append("indecomposable names must be nonempty")
    if not p.suspension.is_permutation():
        violations.append("suspension not bijective")
    for idx, a in enumerate(p.angles):
        if len(a.vertices) != p.n:
            violations.append(
                f"angle {idx} has {len(a.vertices)} vertices, expected {p.n}"
            )
        for v in a.vertices:
            if any(x < 0 for x in v):
                violations.append(f"angle {idx} has a negative multiplicity")
                break
    parity = "odd" if p.n % 2 else "even"
    return ValidationReport(
        violations=tuple(violations),
        parity=parity,
        classification_applies=not violations and p.n % 2 == 1,
    )


def suspend_object(p: Presentation, v, k: int = 1) -> ObjectVec:
    """Apply the suspension k times (negative k uses the inverse)."""
    return p.suspension.apply(v, k)


def rotate_angle(p: Presentation, a: Angle) -> Angle:
    """Left rotation at the object level: (A_2, ..., A_n, S A_1)."""
    return Angle(a.vertices[1:] + (suspend_object(p, a.vertices[0]),))


def direct_sum_angle(a: Angle, b: Angle) -> Angle:
    if len(a.vertices) != len(b.vertices):
        raise ValueError("angles have different arity")
    return Angle(tuple(add_objects(x, y) for x, y in zip(a.vertices, b.vertices)))


def zero_angle(p: Presentation) -> Angle:
    return Angle((zero_object(p.rank),) * p.n)


def trivial_angle(p: Presentation, v, slot: int = 1) -> Angle:
    """The trivial angle on v, rotated slot-1 times from (v, v, 0, ..., 0)."""
    if not 1 <= slot <= p.n:
        raise ValueError(f"slot must be in 1..{p.n}")
    v = object_vec(v)
    if len(v) != p.rank:
        raise ValueError("object has wrong length")
    angle = Angle((v, v) + (zero_object(p.rank),) * (p.n - 2))
    for _ in range(slot - 1):
        angle = rotate_angle(p, angle)
    return angle
