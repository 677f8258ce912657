"""Extracting Specht subideals and orbit exclusions from invariant ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import NoConclusionError, NotApplicableError, ResourceLimitExceeded
from .groebner import DEFAULT_LIMITS, ResourceLimits
from .partitions import (
    Bipartition,
    Partition,
    bidominates,
    conjugate,
    enumerate_bipartitions,
)
from .polynomials import Monomial, SignedPermutation, SparsePolynomial, act, vandermonde_squares
from .tableaux import num_standard_bitableaux


@dataclass(frozen=True)
class MonomialProfile:
    """The even/odd exponent split of a monomial.

    Variables in i1 carry exponent 2*k_i with k_i >= 1; variables in i2 carry
    exponent 2*r_i + 1 with r_i >= 0. Both index sets are stored sorted.
    """

    i1: tuple[int, ...]
    i2: tuple[int, ...]
    k: tuple[int, ...]
    r: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.i1)

    @property
    def s(self) -> int:
        return len(self.i2)

    @property
    def d1(self) -> int:
        return sum(self.k)

    @property
    def d2(self) -> int:
        return sum(self.r)


def monomial_profile(m: Monomial) -> MonomialProfile:
    """Split the exponents of m into their even and odd parts."""
    i1, i2, k, r = [], [], [], []
    for var, exp in sorted(m.exponents.items()):
        if exp % 2 == 0:
            i1.append(var)
            k.append(exp // 2)
        else:
            i2.append(var)
            r.append((exp - 1) // 2)
    return MonomialProfile(tuple(i1), tuple(i2), tuple(k), tuple(r))


def gamma(m: Monomial, n: int) -> Bipartition:
    """Bipartition read off a monomial's profile, padded with singleton rows."""
    p = monomial_profile(m)
    pad = n - (p.ell + p.s + p.d1 + p.d2)
    if pad < 0:
        raise NotApplicableError(
            f"profile weight {p.ell + p.s + p.d1 + p.d2} of {m} exceeds n={n}"
        )
    left = tuple(sorted((x + 1 for x in p.k), reverse=True)) + (1,) * pad
    right = tuple(sorted((x + 1 for x in p.r), reverse=True))
    return Bipartition(Partition(left), Partition(right))


def gamma_star(m: Monomial, n: int) -> Bipartition:
    """Componentwise conjugate of gamma(m, n)."""
    g = gamma(m, n)
    return Bipartition(conjugate(g.left), conjugate(g.right))


def detect_specht_subideal(P: SparsePolynomial, n: int) -> list[tuple[Monomial, Bipartition]]:
    """Monomials of the top component certifying a Specht subideal of any
    invariant ideal containing P, paired with their class labels."""
    if P.is_zero:
        raise ValueError("cannot analyze the zero polynomial")
    top = P.top_component()
    weight = len(top.variables())
    out = []
    for exps in sorted(top.terms, reverse=True):
        m = Monomial(exps)
        p = monomial_profile(m)
        if weight + p.d1 + p.d2 <= n:
            out.append((m, gamma_star(m, n)))
    return out


def maximal_detected(P: SparsePolynomial, n: int) -> list[Bipartition]:
    """Bidominance-maximal labels among the detections (an antichain)."""
    detected = {g for _, g in detect_specht_subideal(P, n)}
    if not detected:
        raise NoConclusionError("no monomial of the top component qualifies")
    return sorted(
        (g for g in detected if not any(h != g and bidominates(h, g) for h in detected)),
        key=Bipartition.sort_key,
    )


def excluded_orbit_classes(P: SparsePolynomial, n: int) -> list[Bipartition]:
    """Classes guaranteed to miss the zero set of any invariant ideal containing P."""
    maxima = maximal_detected(P, n)
    return [
        other
        for other in enumerate_bipartitions(n)
        if any(bidominates(g, other) for g in maxima)
    ]


def rank_bound(shape: Bipartition, n: int) -> int:
    """Sum of squared standard-filling counts over classes the shape fails to bidominate."""
    if shape.size != n:
        raise ValueError(f"shape {shape} has size {shape.size}, expected {n}")
    return sum(
        num_standard_bitableaux(other) ** 2
        for other in enumerate_bipartitions(n)
        if not bidominates(shape, other)
    )


def detection_report(P: SparsePolynomial, n: int) -> dict:
    """JSON-ready summary of the detection, exclusion and rank-bound analysis."""
    monomials = []
    top = P.top_component()
    weight = len(top.variables())
    for exps in sorted(top.terms, reverse=True):
        m = Monomial(exps)
        p = monomial_profile(m)
        applicable = weight + p.d1 + p.d2 <= n
        entry = {"monomial": str(m), "applicable": applicable}
        if applicable:
            entry["gamma"] = str(gamma(m, n))
            entry["gamma_star"] = str(gamma_star(m, n))
        monomials.append(entry)
    report = {"polynomial": str(P), "n": n, "monomials": monomials}
    try:
        maxima = maximal_detected(P, n)
        report["maximal_gamma_star"] = [str(g) for g in maxima]
        report["excluded_classes"] = [str(c) for c in excluded_orbit_classes(P, n)]
        report["rank_bound"] = min(rank_bound(g, n) for g in maxima)
    except NoConclusionError:
        report["maximal_gamma_star"] = []
        report["excluded_classes"] = []
        report["rank_bound"] = None
    return report


# ---------------------------------------------------------------------------
# the symmetrization identity behind the detection theorem


def verify_symmetrization(
    P: SparsePolynomial,
    m: Monomial,
    index_sets,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> bool:
    """Check the alternating-sum identity producing a Specht generator from P.

    The fresh index sets pair off with the variables of m (even-exponent ones
    first); set i must have k_i (resp. r_i) elements disjoint from everything
    else. The sign-averaged P is multiplied by the squared Vandermondes of the
    fresh sets and their odd variables, then alternately symmetrized over each
    block J_i = {i-th variable of m} + set i. The result must be the
    k_1!...r_s!-multiple of the Specht generator on the blocks, scaled by the
    coefficient of m.
    """
    n = P.n
    profile = monomial_profile(m)
    bases = profile.i1 + profile.i2
    sizes = profile.k + profile.r
    index_sets = [tuple(sorted(s)) for s in index_sets]
    if len(index_sets) != len(bases):
        raise ValueError(f"expected {len(bases)} index sets, got {len(index_sets)}")
    flat = [i for s in index_sets for i in s]
    if len(set(flat)) != len(flat) or set(flat) & set(bases):
        raise ValueError("index sets must be disjoint from each other and from m")
    if any(not 1 <= i <= n for i in flat):
        raise ValueError("index sets must live in the ambient variables")
    if any(len(s) != size for s, size in zip(index_sets, sizes)):
        raise ValueError(f"set sizes must match the exponent profile {sizes}")
    forbidden = P.top_component().variables()
    if any(i in forbidden for i in flat):
        raise ValueError("index sets must avoid the variables of the top component")

    half = Fraction(1, 2)
    cleaned = P
    for i in profile.i1:
        cleaned = (cleaned + act(SignedPermutation.sign_flip(n, i), cleaned)).scale(half)
    for i in profile.i2:
        cleaned = (cleaned - act(SignedPermutation.sign_flip(n, i), cleaned)).scale(half)

    base_poly = cleaned
    for s in index_sets:
        base_poly = base_poly * vandermonde_squares(n, s)
    for s in index_sets[profile.ell :]:
        for i in s:
            base_poly = base_poly * SparsePolynomial.variable(n, i)

    blocks = [(base,) + s for base, s in zip(bases, index_sets)]
    group_size = prod(factorial(len(b)) for b in blocks)
    if group_size > limits.max_cosets:
        raise ResourceLimitExceeded(
            f"symmetrization group of size {group_size} exceeds cap {limits.max_cosets}"
        )

    total = SparsePolynomial.zero(n)
    for images in itertools.product(*[itertools.permutations(b) for b in blocks]):
        perm = list(range(1, n + 1))
        sign = 1
        for block, image in zip(blocks, images):
            for src, dst in zip(block, image):
                perm[src - 1] = dst
            sign *= _permutation_sign(block, image)
        g = SignedPermutation.from_permutation(tuple(perm))
        total = total + act(g, base_poly).scale(sign)

    factor = prod(factorial(x) for x in sizes)
    expected = SparsePolynomial.constant(n, factor * cleaned.coefficient(m.exps))
    for b in blocks:
        expected = expected * vandermonde_squares(n, b)
    for b in blocks[profile.ell :]:
        for i in b:
            expected = expected * SparsePolynomial.variable(n, i)
    return total == expected


def _permutation_sign(domain, image) -> int:
    position = {v: i for i, v in enumerate(domain)}
    seq = [position[v] for v in image]
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# building invariant ideals from a single polynomial


def bn_orbit(P: SparsePolynomial) -> list[SparsePolynomial]:
    """The full signed-permutation orbit of P, deduplicated, in canonical order."""
    n = P.n
    seen = set()
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            q = act(SignedPermutation(perm, signs), P)
            if q not in seen:
                seen.add(q)
                out.append(q)
    out.sort(key=lambda q: sorted(q.terms.items()))
    return out
