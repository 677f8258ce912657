"""Orbit types under signed permutations and the orbit-set decomposition of Specht varieties."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyOrbitError, SizeMismatchError
from .partitions import (
    Bipartition,
    Partition,
    bidominates,
    concatenate,
    cut,
    enumerate_bipartitions,
)
from .tableaux import specht_generators

Point = tuple[Fraction, ...]


def as_point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class OrbitClass:
    """An orbit-type class of points, labelled by a bipartition."""

    bipartition: Bipartition
    nonempty: bool

    def to_json(self) -> dict:
        return {
            "bipartition": str(self.bipartition),
            "left": list(self.bipartition.left.parts),
            "right": list(self.bipartition.right.parts),
            "nonempty": self.nonempty,
        }


def sn_orbit_type(z) -> Partition:
    """Multiplicity partition of the coordinate values."""
    counts = Counter(as_point(z))
    return Partition(tuple(sorted(counts.values(), reverse=True)))


def bn_orbit_type(z) -> Bipartition:
    """Cut of the multiplicity partition of the squared coordinates at the zero count."""
    z = as_point(z)
    zeros = sum(1 for c in z if c == 0)
    return cut(sn_orbit_type(c * c for c in z), zeros)


def orbit_set_nonempty(shape: Bipartition) -> bool:
    """A class is populated iff the left parts are constant through row len(right)+1."""
    first = shape.left.at(1)
    return all(shape.left.at(i) == first for i in range(2, shape.right.length + 2))


def orbit_representative(shape: Bipartition) -> Point:
    """Canonical point of the class, built from blocks of values 1, 2, ... and zeros."""
    if not orbit_set_nonempty(shape):
        raise EmptyOrbitError(f"orbit set of {shape} is empty")
    lam, mu = shape.left, shape.right
    m = mu.length
    coords: list[Fraction] = []
    for i in range(1, m + 1):
        coords.extend([Fraction(i)] * (lam.at(1) + mu.at(i)))
    coords.extend([Fraction(0)] * lam.at(1))
    tail = m if lam.length <= m else lam.length - 1
    for i in range(m + 1, tail + 1):
        coords.extend([Fraction(i)] * lam.at(i + 1))
    return tuple(coords)


def variety_contains(shape: Bipartition, z, strategy: str = "orbit") -> bool:
    """Point membership in the Specht variety of the shape.

    strategy "evaluate" checks that every Specht generator vanishes at z;
    strategy "orbit" checks that the orbit type of z fails to bidominate the
    shape. The two must agree, which the test suite verifies.
    """
    z = as_point(z)
    if shape.size != len(z):
        raise SizeMismatchError(f"shape of size {shape.size} vs point of dimension {len(z)}")
    if strategy == "orbit":
        return not bidominates(shape, bn_orbit_type(z))
    if strategy == "evaluate":
        return all(g.evaluate(z) == 0 for g in specht_generators(shape, len(z)))
    raise ValueError(f"unknown strategy {strategy!r}; choose 'orbit' or 'evaluate'")


def decompose_variety(shape: Bipartition) -> list[OrbitClass]:
    """Nonempty orbit classes whose type is not bidominated by the shape."""
    return [
        OrbitClass(other, True)
        for other in enumerate_bipartitions(shape.size)
        if orbit_set_nonempty(other) and not bidominates(shape, other)
    ]


def decomposition_report(shape: Bipartition) -> dict:
    """JSON-ready decomposition with one representative per class."""
    classes = decompose_variety(shape)
    return {
        "bipartition": str(shape),
        "classes": [c.to_json() for c in classes],
        "representatives": [
            [str(c) for c in orbit_representative(cl.bipartition)] for cl in classes
        ],
    }


# ---------------------------------------------------------------------------
# witness points outside the variety


def witness_z1(shape: Bipartition) -> Point:
    """Blocks of distinct nonzero values with multiplicities from the glued shape."""
    from .partitions import glue

    merged = glue(shape.left, shape.right)
    coords: list[Fraction] = []
    for i, mult in enumerate(merged.parts, start=1):
        coords.extend([Fraction(i)] * mult)
    return tuple(coords)


def witness_z2(shape: Bipartition) -> Point:
    """Leading zeros, then blocks mixing the right parts with the shifted left parts."""
    lam, mu = shape.left, shape.right
    coords: list[Fraction] = [Fraction(0)] * lam.at(1)
    for i in range(1, max(mu.length, max(lam.length - 1, 0)) + 1):
        coords.extend([Fraction(i)] * (mu.at(i) + lam.at(i + 1)))
    return tuple(coords)


# ---------------------------------------------------------------------------
# the parameterization of nonempty classes by (zero count, residual type)


def phi(t: int, residual: Partition) -> Bipartition:
    """Class of points with t zeros whose nonzero squares have type `residual`."""
    if t < 0:
        raise ValueError("zero count must be non-negative")
    return cut(concatenate(residual, Partition((t,))), t)


def lambda_t(p: Partition, t: int) -> Partition:
    """Merge the last part >= t with its successor, discounting t boxes."""
    if t < 0:
        raise ValueError("threshold must be non-negative")
    if t == 0:
        return p
    if p.at(1) < t:
        raise ValueError(f"no part of {p} reaches threshold {t}")
    s = max(i for i in range(1, p.length + 1) if p.at(i) >= t)
    parts = p.parts[: s - 1] + (p.at(s) + p.at(s + 1) - t,) + p.parts[s + 1 :]
    return Partition(parts)
