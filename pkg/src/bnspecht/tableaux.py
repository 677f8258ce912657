"""Tableaux, bitableaux, the glueing bijection and Specht polynomials."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb, factorial

from .partitions import Bipartition, Partition, glue
from .polynomials import SparsePolynomial, vandermonde, vandermonde_squares


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram with distinct positive integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if r))
        entries = [e for row in self.rows for e in row]
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated entry in tableau {self.rows}")
        lengths = [len(r) for r in self.rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise ValueError(f"row lengths not non-increasing: {lengths}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def entries(self) -> frozenset[int]:
        return frozenset(e for row in self.rows for e in row)

    def columns(self) -> list[tuple[int, ...]]:
        """Column entry sequences, read top to bottom."""
        width = len(self.rows[0]) if self.rows else 0
        return [
            tuple(row[j] for row in self.rows if len(row) > j) for j in range(width)
        ]

    @staticmethod
    def from_columns(cols) -> "Tableau":
        depth = max((len(c) for c in cols), default=0)
        rows = tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(depth))
        return Tableau(rows)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    def __str__(self):
        return "/".join(" ".join(map(str, row)) for row in self.rows) or "-"


@dataclass(frozen=True)
class Bitableau:
    """A pair of tableaux whose entries partition {1,...,n}."""

    first: Tableau
    second: Tableau
    n: int

    def __post_init__(self):
        union = self.first.entries | self.second.entries
        if self.first.entries & self.second.entries or union != frozenset(range(1, self.n + 1)):
            raise ValueError("entries of the two tableaux must partition 1..n")

    @property
    def shape(self) -> Bipartition:
        return Bipartition(self.first.shape, self.second.shape)

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json(), "n": self.n}

    def __str__(self):
        return f"({self.first} , {self.second})"


# ---------------------------------------------------------------------------
# glueing bijection


def glue_bitableau(bt: Bitableau) -> Tableau:
    """Merge the two tableaux columnwise onto the glued shape.

    Columns of equal length keep their left-to-right order in (T, S),
    with all of T's columns preceding S's.
    """
    cols = bt.first.columns() + bt.second.columns()
    cols.sort(key=len, reverse=True)  # sorted() is stable, preserving occurrence order
    return Tableau.from_columns(cols)


def split_bitableau(t: Tableau, shape: Bipartition, n: int) -> Bitableau:
    """Inverse of glue_bitableau for a target bipartition shape."""
    if t.shape != glue(shape.left, shape.right):
        raise ValueError(f"tableau shape {t.shape} is not the glueing of {shape}")
    cols = t.columns()
    left_heights = list(_column_heights(shape.left))
    right_heights = list(_column_heights(shape.right))
    left_cols, right_cols = [], []
    # within each equal-height group, the left component's columns come first
    for col in cols:
        if left_heights and left_heights[0] == len(col):
            left_heights.pop(0)
            left_cols.append(col)
        else:
            right_heights.remove(len(col))
            right_cols.append(col)
    return Bitableau(Tableau.from_columns(left_cols), Tableau.from_columns(right_cols), n)


def _column_heights(p: Partition) -> tuple[int, ...]:
    if not p.parts:
        return ()
    return tuple(sum(1 for part in p.parts if part > j) for j in range(p.parts[0]))


# ---------------------------------------------------------------------------
# Specht polynomials


def specht_polynomial_sn(t: Tableau, n: int | None = None) -> SparsePolynomial:
    """Product of the column Vandermonde polynomials."""
    if n is None:
        n = max(t.entries, default=1)
    result = SparsePolynomial.constant(n, 1)
    for col in t.columns():
        result = result * vandermonde(n, col)
    return result


def specht_polynomial_bn(bt: Bitableau) -> SparsePolynomial:
    """Columnwise Vandermondes in the squares, times the second component's variables."""
    n = bt.n
    result = SparsePolynomial.constant(n, 1)
    for col in bt.first.columns() + bt.second.columns():
        result = result * vandermonde_squares(n, col)
    for k in sorted(bt.second.entries):
        result = result * SparsePolynomial.variable(n, k)
    return result


def reference_bitableau(shape: Bipartition, n: int) -> Bitableau:
    """Fill columns of the first tableau with 1,2,..., then the second's."""
    if shape.size != n:
        raise ValueError(f"shape {shape} has size {shape.size}, expected {n}")
    counter = itertools.count(1)
    first = _fill_columns(shape.left, counter)
    second = _fill_columns(shape.right, counter)
    return Bitableau(first, second, n)


def _fill_columns(p: Partition, counter) -> Tableau:
    cols = [[next(counter) for _ in range(h)] for h in _column_heights(p)]
    return Tableau.from_columns(cols)


def all_bitableaux(shape: Bipartition, n: int):
    """Every bitableau of the given shape, as an iterator."""
    ref = reference_bitableau(shape, n)
    for perm in itertools.permutations(range(1, n + 1)):
        yield relabel_bitableau(ref, dict(zip(range(1, n + 1), perm)))


def relabel_bitableau(bt: Bitableau, mapping: dict[int, int]) -> Bitableau:
    remap = lambda t: Tableau(tuple(tuple(mapping[e] for e in row) for row in t.rows))
    return Bitableau(remap(bt.first), remap(bt.second), bt.n)


def specht_generators(shape: Bipartition, n: int) -> list[SparsePolynomial]:
    """The S_n-orbit of the reference Specht polynomial, deduplicated up to sign."""
    if shape.size != n:
        raise ValueError(f"shape {shape} has size {shape.size}, expected {n}")
    ref = reference_bitableau(shape, n)
    # a Specht polynomial depends (up to sign) only on the column sets and the
    # split of [n] between the two tableaux, so dedupe combinatorially first
    seen_keys = set()
    combinatorial = []
    for perm in itertools.permutations(range(1, n + 1)):
        mapping = dict(zip(range(1, n + 1), perm))
        first_cols = tuple(sorted(tuple(sorted(mapping[e] for e in col)) for col in ref.first.columns()))
        second_cols = tuple(sorted(tuple(sorted(mapping[e] for e in col)) for col in ref.second.columns()))
        key = (first_cols, second_cols)
        if key not in seen_keys:
            seen_keys.add(key)
            combinatorial.append(key)
    polys = {}
    for first_cols, second_cols in sorted(combinatorial):
        n_vars = n
        poly = SparsePolynomial.constant(n_vars, 1)
        for col in first_cols + second_cols:
            poly = poly * vandermonde_squares(n_vars, col)
        for k in sorted(e for col in second_cols for e in col):
            poly = poly * SparsePolynomial.variable(n_vars, k)
        poly = poly.sign_normalized()
        polys.setdefault(poly, None)
    return list(polys)


# ---------------------------------------------------------------------------
# standard fillings


def num_standard_tableaux(p: Partition) -> int:
    """Hook-length formula."""
    if not p.parts:
        return 1
    conj = [sum(1 for part in p.parts if part > j) for j in range(p.parts[0])]
    product = 1
    for i, part in enumerate(p.parts):
        for j in range(part):
            product *= part - j + conj[j] - i - 1
    return factorial(p.size) // product


def num_standard_bitableaux(shape: Bipartition) -> int:
    """Choose the first component's entries, then fill each side standardly."""
    n = shape.size
    return (
        comb(n, shape.left.size)
        * num_standard_tableaux(shape.left)
        * num_standard_tableaux(shape.right)
    )


def enumerate_standard_tableaux(p: Partition, entries=None) -> list[Tableau]:
    """Brute-force row/column-increasing fillings with the given entry set."""
    if entries is None:
        entries = range(1, p.size + 1)
    entries = sorted(entries)
    if len(entries) != p.size:
        raise ValueError("entry count must match the shape size")
    results = []
    rows = [list(r) for r in [[None] * part for part in p.parts]]

    def place(k: int):
        if k == len(entries):
            results.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        value = entries[k]
        for i, row in enumerate(rows):
            j = next((c for c, v in enumerate(row) if v is None), None)
            if j is None:
                continue
            if i > 0 and (rows[i - 1][j] is None):
                continue
            row[j] = value
            place(k + 1)
            row[j] = None

    place(0)
    return results


def enumerate_standard_bitableaux(shape: Bipartition) -> list[Bitableau]:
    """All standard bitableaux: both components row- and column-increasing."""
    n = shape.size
    out = []
    for left_entries in itertools.combinations(range(1, n + 1), shape.left.size):
        right_entries = sorted(set(range(1, n + 1)) - set(left_entries))
        for t in enumerate_standard_tableaux(shape.left, left_entries):
            for s in enumerate_standard_tableaux(shape.right, right_entries):
                out.append(Bitableau(t, s, n))
    return out


def bitableau_from_json(doc) -> Bitableau:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return Bitableau(
        Tableau(tuple(tuple(r) for r in doc["first"]["rows"])),
        Tableau(tuple(tuple(r) for r in doc["second"]["rows"])),
        doc["n"],
    )
