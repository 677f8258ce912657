"""Buchberger machinery, Specht-ideal inclusions and covering certificates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import AmbientMismatchError, ResourceLimitExceeded, SizeMismatchError
from .partitions import Bipartition, bidominates, bipartition_coverings_below
from .polynomials import Monomial, SparsePolynomial, order_key, vandermonde_squares
from .tableaux import specht_generators


@dataclass(frozen=True)
class ResourceLimits:
    """Caps turning potential blow-ups into structured failures."""

    max_basis: int = 2000
    max_terms: int = 200000
    max_cosets: int = 10000

    def check_basis(self, size: int):
        if size > self.max_basis:
            raise ResourceLimitExceeded(f"basis size {size} exceeds cap {self.max_basis}")

    def check_terms(self, count: int):
        if count > self.max_terms:
            raise ResourceLimitExceeded(f"term count {count} exceeds cap {self.max_terms}")

    def check_cosets(self, count: int):
        if count > self.max_cosets:
            raise ResourceLimitExceeded(f"coset count {count} exceeds cap {self.max_cosets}")


DEFAULT_LIMITS = ResourceLimits()


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis under a fixed monomial order."""

    generators: tuple[SparsePolynomial, ...]
    order: str
    n: int

    @property
    def is_trivial(self) -> bool:
        """True iff the basis is {1}, i.e. the whole ring."""
        return len(self.generators) == 1 and self.generators[0] == SparsePolynomial.constant(
            self.n, 1
        )

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]


def reduce(p: SparsePolynomial, gb: GroebnerBasis) -> SparsePolynomial:
    """Normal form of p modulo the basis."""
    if p.n != gb.n:
        raise AmbientMismatchError(f"polynomial in {p.n} variables, basis in {gb.n}")
    return _normal_form(p, list(gb.generators), gb.order)


def _normal_form(p: SparsePolynomial, basis, order: str) -> SparsePolynomial:
    key = order_key(order)
    leads = [(g.leading_exponents(order), g) for g in basis if not g.is_zero]
    remainder_terms: dict = {}
    work = dict(p.terms)
    while work:
        exps = max(work, key=key)
        coeff = work.pop(exps)
        for lead, g in leads:
            if all(a >= b for a, b in zip(exps, lead)):
                quot = tuple(a - b for a, b in zip(exps, lead))
                factor = coeff / g.terms[lead]
                for ge, gc in g.terms.items():
                    if ge == lead:
                        continue
                    target = tuple(a + b for a, b in zip(quot, ge))
                    acc = work.get(target, 0) - factor * gc
                    if acc:
                        work[target] = acc
                    else:
                        work.pop(target, None)
                break
        else:
            remainder_terms[exps] = coeff
    return SparsePolynomial(p.n, remainder_terms)


def _s_polynomial(f: SparsePolynomial, g: SparsePolynomial, order: str) -> SparsePolynomial:
    lf, lg = f.leading_exponents(order), g.leading_exponents(order)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = tuple(a - b for a, b in zip(lcm, lf))
    mg = tuple(a - b for a, b in zip(lcm, lg))
    tf = SparsePolynomial(f.n, {mf: 1 / f.terms[lf]})
    tg = SparsePolynomial(g.n, {mg: 1 / g.terms[lg]})
    return tf * f - tg * g


def buchberger(
    gens, order: str = "lex", limits: ResourceLimits = DEFAULT_LIMITS
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return GroebnerBasis((), order, 0)
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise AmbientMismatchError("generators live in different rings")
    key = order_key(order)

    basis = []
    for g in gens:
        g = _normal_form(g, basis, order)
        if not g.is_zero:
            basis.append(g.monic(order))

    def lcm_exps(f, g):
        return tuple(max(a, b) for a, b in zip(f.leading_exponents(order), g.leading_exponents(order)))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        # normal strategy: smallest lcm first, degree as the sugar tie-break
        i, j = min(pairs, key=lambda p: (sum(lcm_exps(basis[p[0]], basis[p[1]])), key(lcm_exps(basis[p[0]], basis[p[1]])), p))
        pairs.discard((i, j))
        f, g = basis[i], basis[j]
        lf, lg = f.leading_exponents(order), g.leading_exponents(order)
        if all(a == 0 or b == 0 for a, b in zip(lf, lg)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        s = _normal_form(_s_polynomial(f, g, order), basis, order)
        if s.is_zero:
            continue
        limits.check_terms(len(s.terms))
        basis.append(s.monic(order))
        limits.check_basis(len(basis))
        k = len(basis) - 1
        pairs.update((i2, k) for i2 in range(k))

    return GroebnerBasis(tuple(_reduce_basis(basis, order, n)), order, n)


def _reduce_basis(basis, order: str, n: int) -> list[SparsePolynomial]:
    key = order_key(order)
    # minimal: drop generators whose lead is divisible by another's
    basis = sorted(basis, key=lambda g: key(g.leading_exponents(order)))
    minimal = []
    for g in basis:
        lead = g.leading_exponents(order)
        if any(
            all(a >= b for a, b in zip(lead, h.leading_exponents(order))) for h in minimal
        ):
            continue
        minimal.append(g)
    # reduced: take each generator's normal form against the others
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        nf = _normal_form(g, others, order)
        if not nf.is_zero:
            reduced.append(nf.monic(order))
    return sorted(reduced, key=lambda g: key(g.leading_exponents(order)), reverse=True)


def ideal_contains(
    gb: GroebnerBasis, polys, limits: ResourceLimits = DEFAULT_LIMITS
) -> bool:
    return all(reduce(p, gb).is_zero for p in polys)


# ---------------------------------------------------------------------------
# Specht ideals


def specht_ideal_basis(
    shape: Bipartition, n: int, order: str = "lex", limits: ResourceLimits = DEFAULT_LIMITS
) -> GroebnerBasis:
    return buchberger(specht_generators(shape, n), order, limits)


def specht_ideal_contains(
    a: Bipartition,
    b: Bipartition,
    n: int,
    order: str = "lex",
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> bool:
    """True iff the Specht ideal of a contains the Specht ideal of b.

    Decided purely by Groebner reduction; the combinatorial order is never
    consulted, so agreement with bidominance is an independent cross-check.
    """
    if a.size != n or b.size != n:
        raise SizeMismatchError(f"shapes must have size {n}")
    gb = specht_ideal_basis(a, n, order, limits)
    return ideal_contains(gb, specht_generators(b, n), limits)


# ---------------------------------------------------------------------------
# covering certificates


@dataclass(frozen=True)
class CoveringCertificate:
    """Exact witness that the alternating coset sum rebuilds the full Vandermonde."""

    case: int
    a: int
    b: int
    index_a: tuple[int, ...]
    index_b1: tuple[int, ...]
    index_b2: tuple[int, ...]
    target: SparsePolynomial
    symmetrized: SparsePolynomial
    verified: bool

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "a": self.a,
            "b": self.b,
            "A": list(self.index_a),
            "B1": list(self.index_b1),
            "B2": list(self.index_b2),
            "target": str(self.target),
            "symmetrized": str(self.symmetrized),
            "verified": self.verified,
        }


def covering_certificate(
    case: int, a: int, b: int, limits: ResourceLimits = DEFAULT_LIMITS
) -> CoveringCertificate:
    """Construct and verify the symmetrization identity for covering case 3 or 4.

    Case 3 moves a boxes between columns of sizes a+b and b (ambient a+2b);
    case 4 moves them one row down, the receiving column gaining a box
    (ambient a+2b+1, first block of size b+1 and an extra square factor).
    """
    if case not in (3, 4):
        raise ValueError("only cases 3 and 4 carry certificates")
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    if case == 3:
        n = a + 2 * b
        set_a = tuple(range(1, a + 1))
        set_b1 = tuple(range(a + 1, a + b + 1))
        set_b2 = tuple(range(a + b + 1, a + 2 * b + 1))
        extra_square = False
    else:
        n = a + 2 * b + 1
        set_a = tuple(range(1, a + 1))
        set_b1 = tuple(range(a + 1, a + b + 2))
        set_b2 = tuple(range(a + b + 2, a + 2 * b + 2))
        extra_square = True

    union = set_a + set_b1
    limits.check_cosets(comb(len(union), a))

    target = vandermonde_squares(n, union)

    symmetrized = SparsePolynomial.zero(n)
    for image_a in itertools.combinations(union, a):
        image_b1 = tuple(i for i in union if i not in image_a)
        sign = _shuffle_sign(union, image_a + image_b1)
        term = vandermonde_squares(n, image_a) * vandermonde_squares(n, image_b1)
        for i in image_a:
            # R(x_i^2) with R(y) = prod_{j in B2} (y - x_j^2)
            xi2 = SparsePolynomial.variable(n, i, 2)
            for j in set_b2:
                term = term * (xi2 - SparsePolynomial.variable(n, j, 2))
            if extra_square:
                term = term * xi2
        symmetrized = symmetrized + term.scale(sign)

    return CoveringCertificate(
        case, a, b, set_a, set_b1, set_b2, target, symmetrized, symmetrized == target
    )


def _shuffle_sign(domain, image) -> int:
    """Sign of the permutation of `domain` sending its i-th element to image[i]."""
    position = {v: i for i, v in enumerate(domain)}
    seq = [position[v] for v in image]
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class InclusionReport:
    included: bool
    chain: tuple[Bipartition, ...] = ()
    verified_steps: tuple[bool, ...] = ()

    def __bool__(self):
        return self.included


def inclusion_by_certificates(
    a: Bipartition,
    b: Bipartition,
    n: int,
    groebner_bound: int = 4,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> InclusionReport:
    """Exhibit a covering chain from b up to a; witness each step if n is small."""
    if a.size != n or b.size != n:
        raise SizeMismatchError(f"shapes must have size {n}")
    if not bidominates(a, b):
        raise ValueError(f"{a} does not bidominate {b}")
    chain = _covering_chain(a, b)
    verified = []
    if n <= groebner_bound:
        for upper, lower in zip(chain, chain[1:]):
            gb = specht_ideal_basis(upper, n, "lex", limits)
            verified.append(ideal_contains(gb, specht_generators(lower, n), limits))
    return InclusionReport(True, tuple(chain), tuple(verified))


def _covering_chain(a: Bipartition, b: Bipartition) -> list[Bipartition]:
    """A path a = c_0 > c_1 > ... > c_k = b through covering moves (DFS)."""
    if a == b:
        return [a]
    for c in bipartition_coverings_below(a):
        if c == b or bidominates(c, b):
            return [a] + _covering_chain(c, b)
    raise RuntimeError(f"no covering chain from {a} down to {b}")  # impossible in a finite poset


# ---------------------------------------------------------------------------
# the conjecture harness


def radical_membership(
    f: SparsePolynomial, gens, limits: ResourceLimits = DEFAULT_LIMITS
) -> bool:
    """True iff f vanishes on the zero set of gens (auxiliary-variable trick)."""
    gens = list(gens)
    if not gens:
        return f.is_zero
    n = gens[0].n
    if f.n != n or any(g.n != n for g in gens):
        raise AmbientMismatchError("polynomials live in different rings")
    lifted = [g.extend(n + 1) for g in gens]
    y = SparsePolynomial.variable(n + 1, n + 1)
    lifted.append(SparsePolynomial.constant(n + 1, 1) - y * f.extend(n + 1))
    gb = buchberger(lifted, "deglex", limits)
    return gb.is_trivial


def radical_report(
    shape: Bipartition, n: int, limits: ResourceLimits = DEFAULT_LIMITS
) -> dict:
    """Empirical radicality evidence for a Specht ideal.

    For the reference generator of every shape of the same size, membership
    in the radical (auxiliary-variable criterion) is compared against plain
    ideal membership; a radical ideal makes the two verdicts agree on every
    sample. The report records any disagreement instead of asserting.
    """
    from .partitions import enumerate_bipartitions
    from .tableaux import reference_bitableau, specht_polynomial_bn

    if shape.size != n:
        raise SizeMismatchError(f"shape {shape} has size {shape.size}, expected {n}")
    gens = specht_generators(shape, n)
    gb = buchberger(gens, "deglex", limits)
    samples = []
    agreement = True
    for other in enumerate_bipartitions(n):
        f = specht_polynomial_bn(reference_bitableau(other, n))
        in_radical = radical_membership(f, gens, limits)
        in_ideal = reduce(f, gb).is_zero
        samples.append(
            {"sample_shape": str(other), "in_radical": in_radical, "in_ideal": in_ideal}
        )
        agreement = agreement and (in_radical == in_ideal)
    return {"shape": str(shape), "n": n, "agreement": agreement, "samples": samples}


@dataclass(frozen=True)
class UniversalGBReport:
    shape: Bipartition
    n: int
    results: tuple[tuple[str, bool], ...]
    generator_count: int = 0

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "n": self.n,
            "generator_count": self.generator_count,
            "orders": {tag: passed for tag, passed in self.results},
        }


def universal_gb_check(
    shape: Bipartition,
    n: int,
    orders,
    limits: ResourceLimits = DEFAULT_LIMITS,
) -> UniversalGBReport:
    """Buchberger criterion for the conjectured universal basis of a Specht ideal.

    The candidate set collects the Specht polynomials of every shape below
    the given bipartition. Empirical evidence only: the report records a
    pass or fail per order and asserts nothing.
    """
    if shape.size != n:
        raise SizeMismatchError(f"shape {shape} has size {shape.size}, expected {n}")
    from .partitions import enumerate_bipartitions

    candidate: list[SparsePolynomial] = []
    seen = set()
    for other in enumerate_bipartitions(n):
        if bidominates(shape, other):
            for g in specht_generators(other, n):
                if g not in seen:
                    seen.add(g)
                    candidate.append(g)
    results = []
    for tag in orders:
        results.append((tag, _passes_buchberger_criterion(candidate, tag, limits)))
    return UniversalGBReport(shape, n, tuple(results), len(candidate))


def _passes_buchberger_criterion(polys, order: str, limits: ResourceLimits) -> bool:
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            li = polys[i].leading_exponents(order)
            lj = polys[j].leading_exponents(order)
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue
            s = _normal_form(_s_polynomial(polys[i], polys[j], order), polys, order)
            limits.check_terms(len(s.terms))
            if not s.is_zero:
                return False
    return True
