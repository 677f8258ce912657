"""Exact sparse multivariate polynomials over the rationals.

Terms are dicts mapping exponent tuples (length = ambient variable count)
to nonzero Fractions. Variables are 1-based in the external notation
(x1, x2, ...) and lex always means x1 > x2 > ... > xn unless an order tag
says otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbientMismatchError, ParseError

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    """A power product; zero exponents are allowed in storage but not printed."""

    exps: Exponents

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def exponents(self) -> dict[int, int]:
        """Map from 1-based variable index to positive exponent."""
        return {i + 1: e for i, e in enumerate(self.exps) if e}

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __str__(self):
        if not any(self.exps):
            return "1"
        return "*".join(
            f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(self.exps) if e
        )


# ---------------------------------------------------------------------------
# monomial orders

_BASE_ORDERS = ("lex", "deglex", "degrevlex")
ORDER_TAGS = _BASE_ORDERS + tuple(f"{t}-rev" for t in _BASE_ORDERS)


def order_key(tag: str):
    """Sort key for exponent tuples; larger key = larger monomial."""
    base, _, suffix = tag.partition("-")
    if base not in _BASE_ORDERS or (suffix and suffix != "rev"):
        raise ValueError(f"unknown monomial order {tag!r}; choose from {ORDER_TAGS}")
    reverse_vars = suffix == "rev"

    def key(exps: Exponents):
        e = tuple(reversed(exps)) if reverse_vars else exps
        if base == "lex":
            return e
        if base == "deglex":
            return (sum(e), e)
        return (sum(e), tuple(-x for x in reversed(e)))

    return key


_LEX = order_key("lex")


class SparsePolynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: dict[Exponents, Fraction] | None = None):
        self.n = n
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                if len(exps) != n:
                    raise AmbientMismatchError(f"exponent tuple {exps} does not match n={n}")
                clean[exps] = coeff
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "SparsePolynomial":
        return SparsePolynomial(n, {})

    @staticmethod
    def constant(n: int, value) -> "SparsePolynomial":
        return SparsePolynomial(n, {(0,) * n: Fraction(value)})

    @staticmethod
    def variable(n: int, i: int, power: int = 1) -> "SparsePolynomial":
        if not 1 <= i <= n:
            raise AmbientMismatchError(f"variable x{i} outside ambient 1..{n}")
        exps = tuple(power if j == i - 1 else 0 for j in range(n))
        return SparsePolynomial(n, {exps: Fraction(1)})

    # -- ring structure ------------------------------------------------------

    def _check(self, other: "SparsePolynomial"):
        if self.n != other.n:
            raise AmbientMismatchError(f"ambient mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, 0) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return SparsePolynomial(self.n, terms)

    def __neg__(self):
        return SparsePolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[Exponents, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                acc = terms.get(exps, 0) + ca * cb
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        return SparsePolynomial(self.n, terms)

    __rmul__ = __mul__

    def scale(self, value) -> "SparsePolynomial":
        value = Fraction(value)
        return SparsePolynomial(self.n, {e: c * value for e, c in self.terms.items()})

    def __pow__(self, k: int):
        result = SparsePolynomial.constant(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, SparsePolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading_exponents(self, tag: str = "lex") -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order_key(tag))

    def leading_monomial(self, tag: str = "lex") -> Monomial:
        return Monomial(self.leading_exponents(tag))

    def leading_coefficient(self, tag: str = "lex") -> Fraction:
        return self.terms[self.leading_exponents(tag)]

    def monic(self, tag: str = "lex") -> "SparsePolynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(tag))

    def sign_normalized(self) -> "SparsePolynomial":
        """Positive lex-leading coefficient; canonical representative of {p, -p}."""
        if not self.terms or self.leading_coefficient("lex") > 0:
            return self
        return -self

    def top_component(self) -> "SparsePolynomial":
        """The homogeneous component of highest total degree."""
        d = self.degree
        return SparsePolynomial(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def variables(self) -> set[int]:
        """1-based indices of variables actually appearing."""
        return {i + 1 for e in self.terms for i, x in enumerate(e) if x}

    # -- substitutions and evaluation -----------------------------------------

    def substitute_squares(self) -> "SparsePolynomial":
        return SparsePolynomial(self.n, {tuple(2 * x for x in e): c for e, c in self.terms.items()})

    def evaluate(self, point) -> Fraction:
        coords = [Fraction(z) for z in point]
        if len(coords) != self.n:
            raise AmbientMismatchError(f"point has dimension {len(coords)}, expected {self.n}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for z, e in zip(coords, exps):
                if e:
                    value *= z**e
            total += value
        return total

    def extend(self, n: int) -> "SparsePolynomial":
        """Embed into a ring with more variables (new ones appended)."""
        if n < self.n:
            raise AmbientMismatchError("cannot shrink the ambient ring")
        pad = (0,) * (n - self.n)
        return SparsePolynomial(n, {e + pad: c for e, c in self.terms.items()})

    # -- text form -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, key=_LEX, reverse=True):
            coeff = self.terms[exps]
            mono = str(Monomial(exps))
            if mono == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        head = pieces[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + pieces[1:])

    def __repr__(self):
        return f"SparsePolynomial({self.n}, {self})"

    def to_json_terms(self) -> list[dict]:
        out = []
        for exps in sorted(self.terms, key=_LEX, reverse=True):
            coeff = self.terms[exps]
            out.append({"coeff": str(coeff), "exps": {str(i + 1): e for i, e in enumerate(exps) if e}})
        return out


# ---------------------------------------------------------------------------
# named constructions


def vandermonde(n: int, indices) -> SparsePolynomial:
    """Product of pairwise differences over an index sequence; 1 if < 2 indices."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated index in Vandermonde sequence {idx}")
    result = SparsePolynomial.constant(n, 1)
    for j, k in itertools.combinations(idx, 2):
        result = result * (SparsePolynomial.variable(n, j) - SparsePolynomial.variable(n, k))
    return result


def vandermonde_squares(n: int, indices) -> SparsePolynomial:
    """Vandermonde in the squared variables."""
    return vandermonde(n, indices).substitute_squares()


# ---------------------------------------------------------------------------
# the signed-permutation action


@dataclass(frozen=True)
class SignedPermutation:
    """Element of {+-1}^n x| S_n; perm[i-1] is the image of i, signs in {+1,-1}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{n}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a +-1 vector of matching length")

    @property
    def n(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple(range(1, n + 1)), (1,) * n)

    @staticmethod
    def from_permutation(perm) -> "SignedPermutation":
        perm = tuple(perm)
        return SignedPermutation(perm, (1,) * len(perm))

    @staticmethod
    def sign_flip(n: int, i: int) -> "SignedPermutation":
        return SignedPermutation(
            tuple(range(1, n + 1)), tuple(-1 if j == i else 1 for j in range(1, n + 1))
        )

    def apply(self, i: int) -> int:
        return self.perm[i - 1]

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Group law chosen so that act(g.compose(h), p) == act(g, act(h, p))."""
        if self.n != other.n:
            raise AmbientMismatchError("signed permutations of different rank")
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(self.n))
        signs = tuple(self.signs[j] * other.signs[self.inverse_image(j + 1) - 1] for j in range(self.n))
        return SignedPermutation(perm, signs)

    def inverse_image(self, j: int) -> int:
        return self.perm.index(j) + 1

    def inverse(self) -> "SignedPermutation":
        inv_perm = tuple(self.perm.index(i + 1) + 1 for i in range(self.n))
        signs = tuple(self.signs[self.perm[j] - 1] for j in range(self.n))
        return SignedPermutation(inv_perm, signs)


def act(g: SignedPermutation, p: SparsePolynomial) -> SparsePolynomial:
    """Ring homomorphism sending x_i to signs[perm(i)] * x_{perm(i)}."""
    if g.n != p.n:
        raise AmbientMismatchError("group element and polynomial rank differ")
    terms: dict[Exponents, Fraction] = {}
    for exps, coeff in p.terms.items():
        new = [0] * p.n
        sign = 1
        for i, e in enumerate(exps):
            if e:
                j = g.perm[i] - 1
                new[j] = e
                if g.signs[j] == -1 and e % 2:
                    sign = -sign
        key = tuple(new)
        acc = terms.get(key, 0) + sign * coeff
        if acc:
            terms[key] = acc
        else:
            terms.pop(key, None)
    return SparsePolynomial(p.n, terms)


def act_point(g: SignedPermutation, z) -> tuple[Fraction, ...]:
    """Left action on points compatible with act: (g . p)(z) = p(g^-1 . z)."""
    ginv = g.inverse()
    return tuple(g.signs[i] * Fraction(z[ginv.perm[i] - 1]) for i in range(g.n))


# ---------------------------------------------------------------------------
# text parser (integers, xN, + - * ^, parentheses)


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> SparsePolynomial:
        poly = self.expression()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected character {self.text[self.pos]!r}")
        return poly

    def expression(self) -> SparsePolynomial:
        ch = self.peek()
        sign = 1
        while ch in ("+", "-"):
            if ch == "-":
                sign = -sign
            self.pos += 1
            ch = self.peek()
        poly = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> SparsePolynomial:
        poly = self.factor()
        while self.peek() == "*":
            self.pos += 1
            poly = poly * self.factor()
        return poly

    def factor(self) -> SparsePolynomial:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self.error("expected an integer exponent after '^'")
            base = base ** int(self.text[start : self.pos])
        return base

    def atom(self) -> SparsePolynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            poly = self.expression()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return poly
        if ch == "x":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self.error("expected a variable index after 'x'")
            i = int(self.text[start : self.pos])
            if not 1 <= i <= self.n:
                self.error(f"variable x{i} outside ambient 1..{self.n}")
            return SparsePolynomial.variable(self.n, i)
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return SparsePolynomial.constant(self.n, int(self.text[start : self.pos]))
        self.error("expected a number, variable or '('")


def parse_polynomial(text: str, n: int) -> SparsePolynomial:
    """Parse the canonical text form into a polynomial in n variables."""
    return _Parser(text, n).parse()
