"""Total Chern classes of bundles on P^n and the standard operations.

A bundle is recorded by its rank and its total Chern class.  The rank
matters even when high Chern components are killed by truncation: the
twist formula needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .chow import ChowClass, _degree_one_scalar, h_power, make_class, one


@dataclass(frozen=True)
class BundleChern:
    """Rank plus total Chern class (constant term 1) on P^n."""

    ambient_dim: int
    rank: int
    total: ChowClass

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.total.ambient_dim != self.ambient_dim:
            raise ValueError("total class lives on the wrong ambient space")
        if self.total.coeffs[0] != 1:
            raise ValueError("a total Chern class has constant term 1")
        for j in range(self.rank + 1, self.ambient_dim + 1):
            if self.total.coeffs[j] != 0:
                raise ValueError(
                    f"rank-{self.rank} bundle cannot have c_{j} != 0"
                )


def chern_tangent(n: int) -> BundleChern:
    """c(TP^n) = (1+H)^(n+1), truncated."""
    if n < 1:
        raise ValueError("need n >= 1")
    return BundleChern(n, n, make_class(n, [1, 1]) ** (n + 1))


def chern_cotangent(n: int) -> BundleChern:
    """c(T*P^n) = (1-H)^(n+1), truncated."""
    if n < 1:
        raise ValueError("need n >= 1")
    return BundleChern(n, n, make_class(n, [1, -1]) ** (n + 1))


def chern_line(n: int, d: int) -> BundleChern:
    """The line bundle O(d); any integer d is allowed."""
    return BundleChern(n, 1, make_class(n, [1, d] if n >= 1 else [1]))


def chern_sum(bundles) -> BundleChern:
    """Direct sum via the Whitney formula: ranks add, totals multiply."""
    bundles = list(bundles)
    if not bundles:
        raise ValueError("need at least one bundle")
    n = bundles[0].ambient_dim
    total = one(n)
    rank = 0
    for b in bundles:
        if b.ambient_dim != n:
            raise ValueError("ambient dimensions differ")
        rank += b.rank
        total = total * b.total
    return BundleChern(n, rank, total)


def chern_twist(e: BundleChern, c1) -> BundleChern:
    """Tensor by a line bundle with first Chern class c1.

    Components shift along the Chern roots:
    c_j(E (x) L) = sum_i C(rank-i, j-i) c_i(E) c1^(j-i).
    """
    n, m = e.ambient_dim, e.rank
    t = _degree_one_scalar(n, c1)
    c = e.total.coeffs
    out = []
    for j in range(n + 1):
        acc = Fraction(0)
        for i in range(min(j, m) + 1):
            if c[i] != 0:
                acc += comb(m - i, j - i) * c[i] * t ** (j - i)
        out.append(acc)
    return BundleChern(n, m, ChowClass(n, tuple(out)))


def segre_smooth(normal: BundleChern, z_class: ChowClass) -> ChowClass:
    """Segre class of a smooth subvariety: c(N)^(-1) times its class."""
    if normal.ambient_dim != z_class.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return normal.total.invert() * z_class


def fundamental_class_ci(n: int, degrees) -> ChowClass:
    """[X] = (prod d_i) H^r for a complete intersection of r hypersurfaces."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("hypersurface degrees must be positive")
    if len(degrees) > n:
        raise ValueError(f"{len(degrees)} hypersurfaces do not cut P^{n}")
    return prod(degrees, start=1) * h_power(n, len(degrees))
