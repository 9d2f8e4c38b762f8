"""Exact arithmetic in the truncated ring Q[H]/(H^(n+1)).

H is the hyperplane class of complex projective n-space.  A class keeps
one exact rational coefficient per codimension 0..n, so the pushed
forward fundamental class of a k-plane is H^(n-k) and the class of a
point is H^n.  Products drop everything above H^n.  There is no
floating point anywhere in this module.

The regrading operations ``dual`` and ``tensor_line`` act on the
codimension-j piece by (-1)^j and by division by (1 + c1)^j.  Grading
always means codimension in the ambient space, never in a subvariety;
reports expose this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _coerce(value) -> Fraction:
    """Exact coercion; floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational coefficient")


def _sign(exponent: int) -> int:
    return 1 if exponent % 2 == 0 else -1


@dataclass(frozen=True)
class ChowClass:
    """A class in Q[H]/(H^(n+1)), graded by ambient codimension.

    >>> print(make_class(4, [0, 2, 6, 8, 4]))
    2H + 6H^2 + 8H^3 + 4H^4
    """

    ambient_dim: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be non-negative")
        coeffs = tuple(_coerce(c) for c in self.coeffs)
        if len(coeffs) != self.ambient_dim + 1:
            raise ValueError(
                f"need exactly {self.ambient_dim + 1} coefficients for "
                f"P^{self.ambient_dim}, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def _check_compatible(self, other: "ChowClass") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_compatible(other)
        return ChowClass(
            self.ambient_dim,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_compatible(other)
        return ChowClass(
            self.ambient_dim,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        return ChowClass(self.ambient_dim, tuple(-a for a in self.coeffs))

    def scale(self, q) -> "ChowClass":
        q = _coerce(q)
        return ChowClass(self.ambient_dim, tuple(q * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_compatible(other)
        n = self.ambient_dim
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return ChowClass(n, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def invert(self) -> "ChowClass":
        """Multiplicative inverse, solved degree by degree.

        Any nonzero rational constant term is accepted.

        >>> print(make_class(4, [1, 2]).invert())
        1 - 2H + 4H^2 - 8H^3 + 16H^4
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("cannot invert a class with zero constant term")
        n = self.ambient_dim
        inv = [Fraction(1) / c0] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * inv[k - i]
            inv[k] = -acc / c0
        return ChowClass(n, tuple(inv))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        result = one(self.ambient_dim)
        for _ in range(k):
            result = result * self
        return result

    def dual(self) -> "ChowClass":
        """Multiply the codimension-j piece by (-1)^j."""
        return ChowClass(
            self.ambient_dim,
            tuple(_sign(j) * a for j, a in enumerate(self.coeffs)),
        )

    def tensor_line(self, c1) -> "ChowClass":
        """Divide the codimension-j piece by (1 + c1)^j.

        ``c1`` is the first Chern class of a line bundle: either a class
        concentrated in degree 1 or a bare rational t standing for tH.

        >>> print(make_class(4, [0, 0, 1, -1, 1]).tensor_line(2))
        H^2 - 5H^3 + 19H^4
        """
        n = self.ambient_dim
        t = _degree_one_scalar(n, c1)
        base = make_class(n, [1, t] if n >= 1 else [1]).invert()
        acc = [Fraction(0)] * (n + 1)
        power = one(n)
        for j in range(n + 1):
            if j > 0:
                power = power * base
            a = self.coeffs[j]
            if a == 0:
                continue
            for k in range(j, n + 1):
                acc[k] += a * power.coeffs[k - j]
        return ChowClass(n, tuple(acc))

    def component(self, j: int) -> "ChowClass":
        if not 0 <= j <= self.ambient_dim:
            raise ValueError(f"component {j} out of range for P^{self.ambient_dim}")
        out = [Fraction(0)] * (self.ambient_dim + 1)
        out[j] = self.coeffs[j]
        return ChowClass(self.ambient_dim, tuple(out))

    def integral(self) -> Fraction:
        """Degree of the zero-dimensional piece (the H^n coefficient)."""
        return self.coeffs[self.ambient_dim]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def integer_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return tuple(int(a) for a in self.coeffs)

    def __str__(self) -> str:
        return format_class(self)


def make_class(n: int, coeffs) -> ChowClass:
    """Build sum(coeffs[j] H^j) in P^n; short inputs are zero padded.

    Inputs longer than n+1 are rejected rather than truncated, since
    over-long input almost always means a wrong ambient dimension.
    """
    if n < 0:
        raise ValueError("ambient dimension must be non-negative")
    coeffs = [_coerce(c) for c in coeffs]
    if len(coeffs) > n + 1:
        raise ValueError(f"{len(coeffs)} coefficients do not fit in P^{n}")
    coeffs += [Fraction(0)] * (n + 1 - len(coeffs))
    return ChowClass(n, tuple(coeffs))


def zero(n: int) -> ChowClass:
    return make_class(n, [])


def one(n: int) -> ChowClass:
    return make_class(n, [1])


def h_power(n: int, j: int) -> ChowClass:
    """The class H^j, e.g. the fundamental class of a codimension-j plane."""
    if not 0 <= j <= n:
        raise ValueError(f"H^{j} is not a class on P^{n}")
    return make_class(n, [0] * j + [1])


def _degree_one_scalar(n: int, c1) -> Fraction:
    if isinstance(c1, ChowClass):
        if c1.ambient_dim != n:
            raise ValueError("ambient dimensions differ")
        for j, a in enumerate(c1.coeffs):
            if j != 1 and a != 0:
                raise ValueError("expected a class concentrated in degree 1")
        return c1.coeffs[1] if n >= 1 else Fraction(0)
    return _coerce(c1)


def _fmt_coeff(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"({q})"


def format_class(c: ChowClass) -> str:
    """Render like ``2H + 7H^2 - 5H^3``, omitting zero terms."""
    parts = []
    for j, a in enumerate(c.coeffs):
        if a == 0:
            continue
        mag = abs(a)
        if j == 0:
            body = _fmt_coeff(mag)
        else:
            h = "H" if j == 1 else f"H^{j}"
            body = h if mag == 1 else f"{_fmt_coeff(mag)}{h}"
        parts.append((a < 0, body))
    if not parts:
        return "0"
    negative, body = parts[0]
    text = ("-" if negative else "") + body
    for negative, body in parts[1:]:
        text += (" - " if negative else " + ") + body
    return text
