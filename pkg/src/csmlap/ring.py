"""Exact commutative rings for matrix entries.

Elements are plain Python values wherever the language already has an exact
type: ``int`` for the integers and :class:`fractions.Fraction` for the
rationals.  Residues mod ``m`` and multivariate integer polynomials get small
immutable classes (:class:`ModInt`, :class:`Poly`) with operator overloading,
so matrix code can use ``+``, ``-`` and ``*`` uniformly.

A :class:`RingContext` names the ring and knows how to parse, print, coerce
and divide its elements.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping


class RingError(ValueError):
    """Base class for ring arithmetic failures."""


class ContextMismatch(RingError):
    """Operands belong to different rings."""


class DivisionError(RingError):
    """Division by zero, non-exact division, or division in a non-domain."""


class ParseError(ValueError):
    """A literal could not be read in the requested ring."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class ModInt:
    """Residue class ``value mod modulus``, always stored reduced."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise RingError(f"modulus must be >= 2, got {modulus}")
        self.value = value % modulus
        self.modulus = modulus

    def _other(self, other) -> int | None:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ContextMismatch(
                    f"mod {self.modulus} vs mod {other.modulus}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, (Poly, Fraction)):
            raise ContextMismatch(f"cannot combine ModInt with {type(other).__name__}")
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModInt(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModInt(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModInt(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return ModInt(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModInt({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


Monomial = tuple  # exponent vector, one int per indeterminate


class Poly:
    """Sparse multivariate polynomial with integer coefficients.

    ``terms`` maps exponent vectors (aligned with ``names``) to nonzero
    coefficients.  Zero coefficients are never stored, so two polynomials
    over the same indeterminates are equal iff their term maps are equal.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: Iterable[str], terms: Mapping[Monomial, int] | None = None):
        self.names = tuple(names)
        clean = {}
        if terms:
            k = len(self.names)
            for mono, c in terms.items():
                if len(mono) != k:
                    raise RingError(f"exponent vector {mono} does not match {k} names")
                if c:
                    clean[tuple(mono)] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, names, c: int) -> "Poly":
        names = tuple(names)
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names, name: str) -> "Poly":
        names = tuple(names)
        try:
            i = names.index(name)
        except ValueError:
            raise RingError(f"unknown indeterminate {name!r}") from None
        mono = tuple(1 if j == i else 0 for j in range(len(names)))
        return cls(names, {mono: 1})

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.names != self.names:
                raise ContextMismatch(
                    f"polynomials over {self.names} vs {other.names}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly.constant(self.names, other)
        if isinstance(other, (ModInt, Fraction)):
            raise ContextMismatch(f"cannot combine Poly with {type(other).__name__}")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.names, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.names, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.terms == Poly.constant(self.names, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def leading(self) -> tuple[Monomial, int]:
        return max(self.terms.items())

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        used = {self.names[i] for m in self.terms for i, e in enumerate(m) if e}
        missing = sorted(used - set(assignment))
        if missing:
            raise RingError(f"no value bound for {', '.join(missing)}")
        total = 0
        for mono, c in self.terms.items():
            v = c
            for name, e in zip(self.names, mono):
                if e:
                    v *= int(assignment[name]) ** e
            total += v
        return total

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_monomial(names, mono: Monomial) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        body = format_monomial(p.names, mono)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            out.append(text if sign == "+" else "-" + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_TERM_SPLIT = re.compile(r"(?=[+-])")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_INT = re.compile(r"[+-]?\d+\Z")


def parse_poly(text: str, names) -> Poly:
    names = tuple(names)
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial literal")
    total = Poly(names)
    for chunk in _TERM_SPLIT.split(s):
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ParseError(f"dangling sign in {text!r}")
        coef = sign
        mono = [0] * len(names)
        for factor in chunk.split("*"):
            if _INT.match(factor):
                coef *= int(factor)
                continue
            base, _, exp = factor.partition("^")
            if not _NAME.match(base):
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            if base not in names:
                raise ParseError(f"unknown indeterminate {base!r}")
            if exp:
                if not exp.isdigit():
                    raise ParseError(f"bad exponent in {factor!r}")
                e = int(exp)
            else:
                e = 1
            mono[names.index(base)] += e
        total = total + Poly(names, {tuple(mono): coef})
    return total


def _poly_divmod_exact(a: Poly, b: Poly) -> Poly:
    if not b:
        raise DivisionError("division by zero polynomial")
    q: dict = {}
    r = a
    lead_m, lead_c = b.leading()
    while r:
        m, c = r.leading()
        if any(x < y for x, y in zip(m, lead_m)) or c % lead_c:
            raise DivisionError(f"{b} does not divide {a}")
        qm = tuple(x - y for x, y in zip(m, lead_m))
        qc = c // lead_c
        q[qm] = q.get(qm, 0) + qc
        r = r - Poly(a.names, {qm: qc}) * b
    return Poly(a.names, q)


@dataclass(frozen=True)
class RingContext:
    """Which ring a value lives in.

    ``kind`` is one of ``integer``, ``rational``, ``mod`` or ``poly``.
    """

    kind: str
    modulus: int | None = None
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("integer", "rational", "mod", "poly"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == "mod" and (self.modulus is None or self.modulus < 2):
            raise RingError("modular ring needs a modulus >= 2")
        if self.kind == "poly":
            if not self.names:
                raise RingError("polynomial ring needs at least one indeterminate")
            if len(set(self.names)) != len(self.names):
                raise RingError("duplicate indeterminate names")
            for n in self.names:
                if not _NAME.match(n):
                    raise RingError(f"bad indeterminate name {n!r}")

    @classmethod
    def integers(cls) -> "RingContext":
        return cls("integer")

    @classmethod
    def rationals(cls) -> "RingContext":
        return cls("rational")

    @classmethod
    def mod(cls, m: int) -> "RingContext":
        return cls("mod", modulus=m)

    @classmethod
    def poly(cls, names: Iterable[str]) -> "RingContext":
        return cls("poly", names=tuple(names))

    @classmethod
    def from_spec(cls, spec: str) -> "RingContext":
        """Parse ``integer``, ``rational``, ``mod:m`` or ``poly:x,y,...``."""
        spec = spec.strip()
        if spec in ("integer", "int", "Z"):
            return cls.integers()
        if spec in ("rational", "Q"):
            return cls.rationals()
        head, _, rest = spec.partition(":")
        if head == "mod":
            try:
                return cls.mod(int(rest))
            except ValueError:
                raise ParseError(f"bad modulus in ring spec {spec!r}") from None
        if head == "poly":
            names = [n.strip() for n in rest.split(",") if n.strip()]
            return cls.poly(names)
        raise ParseError(f"unknown ring spec {spec!r}")

    @property
    def spec(self) -> str:
        if self.kind == "mod":
            return f"mod:{self.modulus}"
        if self.kind == "poly":
            return "poly:" + ",".join(self.names)
        return self.kind

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    @property
    def is_integral_domain(self) -> bool:
        if self.kind == "mod":
            return is_prime(self.modulus)
        return True

    def coerce(self, n: int):
        """Image of the integer ``n`` in this ring."""
        if self.kind == "integer":
            return int(n)
        if self.kind == "rational":
            return Fraction(n)
        if self.kind == "mod":
            return ModInt(n, self.modulus)
        return Poly.constant(self.names, n)

    def var(self, name: str) -> Poly:
        if self.kind != "poly":
            raise RingError("indeterminates exist only in polynomial rings")
        return Poly.var(self.names, name)

    def contains(self, v: Any) -> bool:
        if self.kind == "integer":
            return isinstance(v, int) and not isinstance(v, bool)
        if self.kind == "rational":
            return isinstance(v, Fraction)
        if self.kind == "mod":
            return isinstance(v, ModInt) and v.modulus == self.modulus
        return isinstance(v, Poly) and v.names == self.names

    def check(self, *values) -> None:
        for v in values:
            if not self.contains(v):
                raise ContextMismatch(f"{v!r} is not an element of {self.spec}")

    def parse(self, text: str):
        text = text.strip()
        try:
            if self.kind == "integer":
                if not _INT.match(text):
                    raise ValueError
                return int(text)
            if self.kind == "rational":
                m = re.fullmatch(r"([+-]?\d+)(?:/([+-]?\d+))?", text)
                if not m:
                    raise ValueError
                return Fraction(int(m.group(1)), int(m.group(2) or 1))
            if self.kind == "mod":
                if not _INT.match(text):
                    raise ValueError
                return ModInt(int(text), self.modulus)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad {self.spec} literal {text!r}") from None
        return parse_poly(text, self.names)

    def format(self, v) -> str:
        self.check(v)
        return str(v)

    def exact_div(self, a, b):
        """Return ``q`` with ``q * b == a``; raise :class:`DivisionError` otherwise."""
        self.check(a, b)
        if not self.is_integral_domain:
            raise DivisionError(f"{self.spec} is not an integral domain")
        if not b:
            raise DivisionError("division by zero")
        if self.kind == "integer":
            q, r = divmod(a, b)
            if r:
                raise DivisionError(f"{b} does not divide {a}")
            return q
        if self.kind == "rational":
            return a / b
        if self.kind == "mod":
            inv = pow(b.value, -1, self.modulus)
            return ModInt(a.value * inv, self.modulus)
        return _poly_divmod_exact(a, b)

    def random(self, rng, low: int = -9, high: int = 9):
        """Random element; uniform residues for ``mod``, integers in [low, high] otherwise."""
        if self.kind == "mod":
            return ModInt(rng.randrange(self.modulus), self.modulus)
        if self.kind == "poly":
            # constant polynomials: enough for identity fuzzing
            return Poly.constant(self.names, rng.randint(low, high))
        return self.coerce(rng.randint(low, high))


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}


def ring_arith(ctx: RingContext, op: str, a, b=None):
    """Apply ``add``, ``sub``, ``mul`` or ``neg`` after checking both operands belong to ``ctx``."""
    if op == "neg":
        ctx.check(a)
        return -a
    if op not in _OPS:
        raise RingError(f"unknown ring operation {op!r}")
    if b is None:
        raise RingError(f"{op} needs two operands")
    ctx.check(a, b)
    return _OPS[op](a, b)


def eval_poly(p: Poly, assignment: Mapping[str, int]) -> int:
    """Evaluate ``p`` at integer values; every indeterminate that occurs must be bound."""
    if not isinstance(p, Poly):
        raise RingError("eval_poly expects a polynomial")
    return p.evaluate(assignment)
