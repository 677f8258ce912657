"""Partitions, bipartitions, the bidominance order and its Hasse diagram.

Partitions are kept in canonical form (non-increasing, no trailing zeros)
and indexed 1-based with zero padding beyond their length, so prefix-sum
conditions can be written exactly as in the combinatorial definitions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import total_ordering

from .errors import ParseError, SizeMismatchError

_INF = float("inf")


@total_ordering
@dataclass(frozen=True)
class Partition:
    """A canonical integer partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {self.parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not non-increasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def at(self, i: int) -> int:
        """1-based part access; reads as 0 beyond the length."""
        if i < 1:
            raise IndexError("partition rows are 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def prefix_sum(self, k: int) -> int:
        return sum(self.parts[: max(k, 0)])

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    def __repr__(self):
        return f"Partition({list(self.parts)})"


EMPTY = Partition()


@dataclass(frozen=True)
class Bipartition:
    """An ordered pair of partitions."""

    left: Partition
    right: Partition

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    def sort_key(self):
        """Deterministic vertex order: |left| descending, then lex on parts."""
        return (-self.left.size, self.left.parts, self.right.parts)

    def __str__(self):
        return f"({self.left},{self.right})"

    def __repr__(self):
        return f"Bipartition({self.left!r}, {self.right!r})"


def bp(left, right) -> Bipartition:
    """Shorthand constructor from part iterables."""
    return Bipartition(Partition(tuple(left)), Partition(tuple(right)))


def parse_partition(text: str, offset: int = 0) -> tuple[Partition, int]:
    """Parse "(a,b,...)" starting at `offset`; returns (partition, next position)."""
    i = offset
    while i < len(text) and text[i].isspace():
        i += 1
    if i >= len(text) or text[i] != "(":
        raise ParseError("expected '('", i)
    i += 1
    parts = []
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i < len(text) and text[i] == ")":
            return Partition(tuple(parts)), i + 1
        start = i
        while i < len(text) and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected a part or ')'", i)
        parts.append(int(text[start:i]))
        while i < len(text) and text[i].isspace():
            i += 1
        if i < len(text) and text[i] == ",":
            i += 1
        elif i < len(text) and text[i] == ")":
            return Partition(tuple(parts)), i + 1
        else:
            raise ParseError("expected ',' or ')'", i)


def parse_bipartition(text: str) -> Bipartition:
    """Parse "((a,b,...),(c,...))" with "()" for the empty partition."""
    i = 0
    while i < len(text) and text[i].isspace():
        i += 1
    if i >= len(text) or text[i] != "(":
        raise ParseError("expected '(' opening the bipartition", i)
    left, i = parse_partition(text, i + 1)
    while i < len(text) and text[i].isspace():
        i += 1
    if i >= len(text) or text[i] != ",":
        raise ParseError("expected ',' between the two partitions", i)
    right, i = parse_partition(text, i + 1)
    while i < len(text) and text[i].isspace():
        i += 1
    if i >= len(text) or text[i] != ")":
        raise ParseError("expected ')' closing the bipartition", i)
    i += 1
    while i < len(text):
        if not text[i].isspace():
            raise ParseError("trailing input after bipartition", i)
        i += 1
    return Bipartition(left, right)


# ---------------------------------------------------------------------------
# orders on partitions


def dominates(p: Partition, q: Partition) -> bool:
    """True iff p dominates q (all prefix sums of q bounded by those of p)."""
    if p.size != q.size:
        raise SizeMismatchError(f"|{p}| = {p.size} != |{q}| = {q.size}")
    sp = sq = 0
    for k in range(max(p.length, q.length)):
        sp += p.at(k + 1)
        sq += q.at(k + 1)
        if sq > sp:
            return False
    return True


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram."""
    if not p.parts:
        return EMPTY
    cols = [0] * p.parts[0]
    for part in p.parts:
        for j in range(part):
            cols[j] += 1
    return Partition(tuple(cols))


def glue(p: Partition, q: Partition) -> Partition:
    """Componentwise sum of the two part sequences."""
    m = max(p.length, q.length)
    return Partition(tuple(p.at(i) + q.at(i) for i in range(1, m + 1)))


def concatenate(p: Partition, q: Partition) -> Partition:
    """Sorted multiset union of the parts."""
    return Partition(tuple(sorted(p.parts + q.parts, reverse=True)))


def cut(p: Partition, t: int) -> Bipartition:
    """Slice the diagram of p at column threshold t."""
    if t < 0:
        raise ValueError("cut threshold must be non-negative")
    if t == 0:
        j = p.length + 1
    else:
        j = next((i for i in range(1, p.length + 1) if p.at(i) < t), p.length + 1)
    rho = (t,) * (j - 1) + p.parts[j - 1 :]
    sigma = tuple(p.at(i) - t for i in range(1, j))
    return Bipartition(Partition(rho), Partition(sigma))


def partition_coverings_below(p: Partition) -> list[Partition]:
    """Partitions covered by p in the dominance order (Brylawski moves).

    p arises from each output by moving one box from the end of row i up,
    so conversely each output moves a box of p from row i down to row j
    with j = i+1 or equal intermediate rows.
    """
    found = set()
    m = p.length
    for i in range(1, m + 1):
        for j in range(i + 1, m + 2):
            parts = [p.at(r) for r in range(1, max(m, j) + 1)]
            parts[i - 1] -= 1
            parts[j - 1] += 1
            if any(parts[r] < parts[r + 1] for r in range(len(parts) - 1)):
                continue
            # long falls must land exactly two below the source, through equal rows
            if not (j == i + 1 or parts[i - 1] == parts[j - 1]):
                continue
            found.add(Partition(tuple(parts)))
    return sorted(found, key=lambda q: q.parts)


def is_cm_shape(p: Partition) -> bool:
    """Shapes (n-d,1,...,1), (n-d,d) and (a,a,1)."""
    parts = p.parts
    if len(parts) <= 2:
        return True
    if all(x == 1 for x in parts[1:]):
        return True
    return len(parts) == 3 and parts[0] == parts[1] and parts[2] == 1


# ---------------------------------------------------------------------------
# orders on bipartitions


def bidominates(a: Bipartition, b: Bipartition) -> bool:
    """True iff a bidominates b (two interleaved families of prefix sums)."""
    if a.size != b.size:
        raise SizeMismatchError(f"|{a}| = {a.size} != |{b}| = {b.size}")
    kmax = max(a.left.length, a.right.length, b.left.length, b.right.length) + 1
    sa = sb = 0
    for k in range(1, kmax + 1):
        if sb + b.left.at(k) > sa + a.left.at(k):
            return False
        sa += a.left.at(k) + a.right.at(k)
        sb += b.left.at(k) + b.right.at(k)
        if sb > sa:
            return False
    return True


def hecke_leq(a: Bipartition, b: Bipartition) -> bool:
    """a below b in the Hecke-algebra order: left prefix sums, then shifted right ones."""
    if a.size != b.size:
        raise SizeMismatchError(f"|{a}| = {a.size} != |{b}| = {b.size}")
    kmax = max(a.left.length, b.left.length, a.right.length, b.right.length)
    for k in range(1, kmax + 1):
        if a.left.prefix_sum(k) > b.left.prefix_sum(k):
            return False
        if a.left.size + a.right.prefix_sum(k) > b.left.size + b.right.prefix_sum(k):
            return False
    return True


def induced_leq(a: Bipartition, b: Bipartition) -> bool:
    """a below b in the induced-representation order."""
    if a.size != b.size:
        raise SizeMismatchError(f"|{a}| = {a.size} != |{b}| = {b.size}")
    if a.left.size < b.left.size:
        return True
    if a.left.size != b.left.size:
        return False
    return dominates(b.left, a.left) and dominates(b.right, a.right)


# ---------------------------------------------------------------------------
# covering moves (the four constructive cases)


def bipartition_coverings_below(a: Bipartition) -> list[Bipartition]:
    """All bipartitions covered by a in the bidominance order.

    Generated constructively: box moves inside one component (cases 1 and 2,
    Brylawski moves gated by flatness of the other component) and partial
    column moves between the components (cases 3 and 4).
    """
    lam, mu = a.left, a.right
    found: set[Bipartition] = set()

    def mu_at(i):  # row 0 reads as +infinity so equality chains must start at row 1
        return _INF if i == 0 else mu.at(i)

    # case 1: Brylawski move inside the left component, right component flat on rows i-1..k
    for below in partition_coverings_below(lam):
        i = next(r for r in range(1, max(lam.length, below.length) + 1) if lam.at(r) != below.at(r))
        k = next(r for r in range(i + 1, max(lam.length, below.length) + 1) if below.at(r) == lam.at(r) + 1)
        if all(mu_at(i - 1) == mu.at(r) for r in range(i, k + 1)):
            found.add(Bipartition(below, mu))

    # case 2: Brylawski move inside the right component, left component flat on rows i..k+1
    for below in partition_coverings_below(mu):
        i = next(r for r in range(1, max(mu.length, below.length) + 1) if mu.at(r) != below.at(r))
        k = next(r for r in range(i + 1, max(mu.length, below.length) + 1) if below.at(r) == mu.at(r) + 1)
        if all(lam.at(i) == lam.at(r) for r in range(i + 1, k + 2)):
            found.add(Bipartition(lam, below))

    # case 3: move a partial column from the left component to the right, same rows
    for i in range(1, lam.length + 1):
        if mu_at(i - 1) <= mu.at(i):
            continue
        k = max(r for r in range(i, lam.length + 1) if lam.at(r) == lam.at(i))
        if mu.at(i) != mu.at(k):
            continue
        new_lam = tuple(lam.at(r) - 1 if i <= r <= k else lam.at(r) for r in range(1, lam.length + 1))
        new_mu = tuple(
            mu.at(r) + 1 if i <= r <= k else mu.at(r) for r in range(1, max(mu.length, k) + 1)
        )
        found.add(bp(new_lam, new_mu))

    # case 4: move a partial column from the right component to the left, one row down
    for i in range(1, mu.length + 1):
        k = max(r for r in range(i, mu.length + 1) if mu.at(r) == mu.at(i))
        if lam.at(i + 1) != lam.at(k + 1) or lam.at(i) <= lam.at(i + 1):
            continue
        new_mu = tuple(mu.at(r) - 1 if i <= r <= k else mu.at(r) for r in range(1, mu.length + 1))
        new_lam = tuple(
            lam.at(r) + 1 if i + 1 <= r <= k + 1 else lam.at(r)
            for r in range(1, max(lam.length, k + 1) + 1)
        )
        found.add(bp(new_lam, new_mu))

    return sorted(found, key=Bipartition.sort_key)


# ---------------------------------------------------------------------------
# enumeration and the Hasse diagram


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, lexicographically sorted."""
    if n < 0:
        raise ValueError("n must be non-negative")
    result: list[tuple[int, ...]] = []

    def build(remaining, bound, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(remaining, bound), 0, -1):
            build(remaining - part, part, prefix + [part])

    build(n, n, [])
    return sorted((Partition(t) for t in result), key=lambda p: p.parts)


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All bipartitions of n in the deterministic vertex order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = [
        Bipartition(left, right)
        for a in range(n, -1, -1)
        for left in enumerate_partitions(a)
        for right in enumerate_partitions(n - a)
    ]
    return sorted(out, key=Bipartition.sort_key)


@dataclass(frozen=True)
class HasseDiagram:
    """Covering graph of (BP_n, bidominance); edges point from coverer to covered."""

    n: int
    vertices: tuple[Bipartition, ...]
    edges: tuple[tuple[int, int], ...] = field(default=())

    def index(self, v: Bipartition) -> int:
        return self.vertices.index(v)

    def closure(self) -> set[tuple[int, int]]:
        """Reflexive-transitive closure of the covering edges, as index pairs."""
        below = {i: set() for i in range(len(self.vertices))}
        for u, v in self.edges:
            below[u].add(v)
        reach: dict[int, set[int]] = {}

        def dfs(u):
            if u in reach:
                return reach[u]
            acc = {u}
            reach[u] = acc  # placeholder breaks cycles (none exist in a poset)
            for v in below[u]:
                acc |= dfs(v)
            reach[u] = acc
            return acc

        return {(u, v) for u in below for v in dfs(u)}

    def maximal_chain_lengths(self) -> set[int]:
        """Element counts of maximal chains from the maximum to the minimum."""
        below = {i: [] for i in range(len(self.vertices))}
        for u, v in self.edges:
            below[u].append(v)
        top = self.index(bp((self.n,), ()) if self.n else bp((), ()))
        lengths: set[int] = set()

        def walk(u, count):
            if not below[u]:
                lengths.add(count)
                return
            for v in below[u]:
                walk(v, count + 1)

        walk(top, 1)
        return lengths

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "vertices": [
                {"left": list(v.left.parts), "right": list(v.right.parts)} for v in self.vertices
            ],
            "edges": [list(e) for e in self.edges],
        }
        return json.dumps(doc, indent=2)

    def to_dot(self) -> str:
        lines = ["digraph bidominance {", "  rankdir=TB;"]
        for i, v in enumerate(self.vertices):
            label = f"([{','.join(map(str, v.left.parts))}],[{','.join(map(str, v.right.parts))}])"
            lines.append(f'  v{i} [label="{label}"];')
        for u, v in self.edges:
            lines.append(f"  v{u} -> v{v};")
        lines.append("}")
        return "\n".join(lines)


def hasse_diagram(n: int) -> HasseDiagram:
    """Build the bidominance Hasse diagram on BP_n."""
    vertices = enumerate_bipartitions(n)
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for i, v in enumerate(vertices):
        for c in bipartition_coverings_below(v):
            edges.append((i, index[c]))
    return HasseDiagram(n, tuple(vertices), tuple(sorted(edges)))
