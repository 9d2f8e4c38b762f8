"""Input model for hypersurfaces, intersections and Whitney stratifications.

Everything here is data plus validation.  Defining equations are never
stored: degrees, singular-locus descriptors and per-stratum Milnor
fibre data are all the class formulas need.  Transversality is an
assertion made by the user; it cannot be checked from degree data, so
the calculator records it and warns instead of deciding it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .bundles import BundleChern
from .chow import ChowClass, h_power, make_class


@dataclass(frozen=True)
class Smooth:
    """No singularities."""


@dataclass(frozen=True)
class Arrangement:
    """Union of smooth hypersurfaces in general position.

    Component degrees must sum to the total degree.  Only the pairwise
    transversal regime is supported.
    """

    component_degrees: tuple[int, ...]
    pairwise_transversal: bool = True


@dataclass(frozen=True)
class Stratified:
    """Singularities described only by an attached stratification."""


@dataclass(frozen=True)
class LinearLocus:
    """A linear subspace P^k, used as a smooth singular-locus model."""

    dim: int


@dataclass(frozen=True)
class SmoothLocus:
    """A smooth singular locus given by its class and normal bundle."""

    locus_class: ChowClass
    normal: BundleChern


@dataclass(frozen=True)
class Stratum:
    name: str
    dim: int
    chi_fiber: int = 1
    closure_class: ChowClass | None = None
    csm_closure: ChowClass | None = None
    mu: int | None = None
    gamma: int | None = None


@dataclass(frozen=True)
class Stratification:
    """Strata plus the closure partial order.

    ``closure_order`` lists pairs (upper, lower) meaning the closure of
    ``upper`` contains ``lower``.  The open stratum is the unique one of
    top dimension; its closure implicitly contains every other stratum,
    so those pairs may be omitted.
    """

    strata: tuple[Stratum, ...]
    closure_order: tuple[tuple[str, str], ...] = ()

    def by_name(self, name: str) -> Stratum:
        for s in self.strata:
            if s.name == name:
                return s
        raise KeyError(name)


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A degree-d hypersurface of P^n with its singularity description.

    ``strata`` may accompany any singularity kind; the ``Stratified``
    marker just says the stratification is the only description given.
    ``sing_locus`` feeds the mu-class route.
    """

    name: str
    ambient_dim: int
    degree: int
    singularity: Smooth | Arrangement | Stratified
    sing_locus: LinearLocus | SmoothLocus | None = None
    strata: Stratification | None = None


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    ambient_dim: int
    hypersurfaces: tuple[HypersurfaceSpec, ...]
    transversality_asserted: bool = False


class ValidationError(ValueError):
    """Carries every invariant violation, each tagged with a field path."""

    def __init__(self, errors):
        self.errors = tuple(errors)
        super().__init__("; ".join(self.errors))


def validate(spec):
    """Check all invariants; return the spec unchanged or raise."""
    errors = validation_errors(spec)
    if errors:
        raise ValidationError(errors)
    return spec


def validation_errors(spec) -> list[str]:
    if isinstance(spec, CompleteIntersectionSpec):
        return _ci_errors(spec)
    if isinstance(spec, HypersurfaceSpec):
        return _hypersurface_errors(spec, path=spec.name or "hypersurface")
    if isinstance(spec, Stratification):
        return _stratification_errors(spec, path="strata")
    raise TypeError(f"cannot validate {type(spec).__name__}")


def _ci_errors(ci: CompleteIntersectionSpec) -> list[str]:
    errors = []
    n = ci.ambient_dim
    if n < 1:
        errors.append("ambient_dim: must be at least 1")
    r = len(ci.hypersurfaces)
    if r > n >= 1:
        errors.append(
            f"hypersurfaces: {r} hypersurfaces in P^{n} give dim X = {n - r} < 0"
        )
    names = [h.name for h in ci.hypersurfaces]
    if len(set(names)) != len(names):
        errors.append("hypersurfaces: names must be distinct")
    for i, h in enumerate(ci.hypersurfaces):
        path = f"hypersurfaces[{i}]"
        if h.ambient_dim != n:
            errors.append(f"{path}.ambient_dim: {h.ambient_dim} != ambient {n}")
        errors.extend(_hypersurface_errors(h, path))
    return errors


def _hypersurface_errors(h: HypersurfaceSpec, path: str) -> list[str]:
    errors = []
    n = h.ambient_dim
    if n < 1:
        errors.append(f"{path}.ambient_dim: must be at least 1")
        return errors
    if h.degree < 1:
        errors.append(f"{path}.degree: must be positive")
    sing = h.singularity
    if isinstance(sing, Arrangement):
        degs = sing.component_degrees
        if not degs:
            errors.append(f"{path}.singularity.components: need at least one")
        elif any(d < 1 for d in degs):
            errors.append(f"{path}.singularity.components: degrees must be positive")
        elif sum(degs) != h.degree:
            errors.append(
                f"{path}.singularity.components: degrees sum to {sum(degs)}, "
                f"not the total degree {h.degree}"
            )
        if not sing.pairwise_transversal:
            errors.append(
                f"{path}.singularity: only pairwise-transversal arrangements are supported"
            )
    elif isinstance(sing, Stratified):
        if h.strata is None:
            errors.append(f"{path}.strata: required for stratified singularities")
    elif not isinstance(sing, Smooth):
        errors.append(f"{path}.singularity: unknown kind {type(sing).__name__}")
    if isinstance(sing, Smooth) and h.strata is not None and len(h.strata.strata) > 1:
        errors.append(f"{path}.strata: a smooth hypersurface has only its open stratum")
    locus = h.sing_locus
    if isinstance(locus, LinearLocus) and not 0 <= locus.dim <= n - 2:
        errors.append(
            f"{path}.sing_locus.dim: must lie in [0, {n - 2}] for a reduced "
            f"hypersurface of P^{n}"
        )
    if isinstance(locus, SmoothLocus):
        if locus.locus_class.ambient_dim != n:
            errors.append(f"{path}.sing_locus.class: wrong ambient dimension")
        if locus.normal.ambient_dim != n:
            errors.append(f"{path}.sing_locus.normal: wrong ambient dimension")
    if h.strata is not None:
        errors.extend(
            _stratification_errors(
                h.strata, path=f"{path}.strata", ambient_dim=n, variety_dim=n - 1
            )
        )
    return errors


def _stratification_errors(
    strat: Stratification, path: str, ambient_dim=None, variety_dim=None
) -> list[str]:
    errors = []
    if not strat.strata:
        errors.append(f"{path}: need at least one stratum")
        return errors
    names = [s.name for s in strat.strata]
    if len(set(names)) != len(names):
        errors.append(f"{path}: stratum names must be distinct")
        return errors
    by_name = {s.name: s for s in strat.strata}
    top = max(s.dim for s in strat.strata)
    open_candidates = [s for s in strat.strata if s.dim == top]
    if len(open_candidates) != 1:
        errors.append(
            f"{path}: exactly one open stratum expected, found "
            f"{len(open_candidates)} of top dimension {top}"
        )
    else:
        reg = open_candidates[0]
        if variety_dim is not None and reg.dim != variety_dim:
            errors.append(
                f"{path}.{reg.name}.dim: open stratum must have dimension {variety_dim}"
            )
        if reg.chi_fiber != 1:
            errors.append(
                f"{path}.{reg.name}.chiF: the Milnor fibre at a smooth point "
                "has Euler characteristic 1"
            )
        if any(lower == reg.name for _, lower in strat.closure_order):
            errors.append(f"{path}: the open stratum cannot lie below another stratum")
    for upper, lower in strat.closure_order:
        if upper not in by_name or lower not in by_name:
            errors.append(f"{path}.closure_order: unknown stratum in ({upper}, {lower})")
            continue
        if upper == lower:
            errors.append(f"{path}.closure_order: cycle at {upper}")
        elif by_name[upper].dim <= by_name[lower].dim:
            errors.append(
                f"{path}.closure_order: dimensions must strictly decrease, "
                f"({upper}, {lower}) does not"
            )
    if _has_cycle(names, strat.closure_order):
        errors.append(f"{path}.closure_order: contains a cycle")
    for s in strat.strata:
        if s.dim < 0:
            errors.append(f"{path}.{s.name}.dim: must be non-negative")
        if variety_dim is not None and s.dim > variety_dim:
            errors.append(f"{path}.{s.name}.dim: exceeds the variety dimension")
        if s.closure_class is not None and ambient_dim is not None:
            if s.closure_class.ambient_dim != ambient_dim:
                errors.append(f"{path}.{s.name}.closure: wrong ambient dimension")
            else:
                codim = ambient_dim - s.dim
                for j, a in enumerate(s.closure_class.coeffs):
                    if j != codim and a != 0:
                        errors.append(
                            f"{path}.{s.name}.closure: class must be concentrated "
                            f"in codimension {codim}"
                        )
                        break
    return errors


def _has_cycle(names, pairs) -> bool:
    below = {name: set() for name in names}
    for upper, lower in pairs:
        if upper in below and lower in below:
            below[upper].add(lower)
    state = dict.fromkeys(names, 0)

    def visit(name) -> bool:
        if state[name] == 1:
            return True
        if state[name] == 2:
            return False
        state[name] = 1
        hit = any(visit(m) for m in below[name])
        state[name] = 2
        return hit

    return any(visit(name) for name in names)


def open_stratum(strat: Stratification) -> Stratum:
    return max(strat.strata, key=lambda s: s.dim)


def containment_map(strat: Stratification) -> dict[str, frozenset[str]]:
    """Names of the strata strictly above each stratum.

    Transitive closure of the declared pairs, plus the open stratum
    above everything else (its closure is the whole variety).
    """
    reg = open_stratum(strat).name
    direct = {s.name: set() for s in strat.strata}
    for upper, lower in strat.closure_order:
        direct[lower].add(upper)
    for s in strat.strata:
        if s.name != reg:
            direct[s.name].add(reg)

    @lru_cache(maxsize=None)
    def above(name: str) -> frozenset[str]:
        out = set(direct[name])
        for parent in direct[name]:
            out |= above(parent)
        return frozenset(out)

    return {s.name: above(s.name) for s in strat.strata}


def strata_topological_order(strat: Stratification) -> tuple[Stratum, ...]:
    """Open stratum first, then strictly decreasing dimension, names
    breaking ties.  This is a linear extension of the closure order
    because dimensions strictly decrease along it."""
    validate(strat)
    return tuple(sorted(strat.strata, key=lambda s: (-s.dim, s.name)))


def with_csm(strat: Stratification, name: str, csm: ChowClass) -> Stratification:
    """Copy of the stratification with one stratum's closure class filled."""
    strata = tuple(
        replace(s, csm_closure=csm) if s.name == name else s for s in strat.strata
    )
    return Stratification(strata, strat.closure_order)


def csm_linear_subspace(n: int, k: int) -> ChowClass:
    """Pushforward of the SM class of a linear P^k inside P^n.

    Smooth model: (1+H)^(k+1) H^(n-k); its integral is chi(P^k) = k+1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"no P^{k} inside P^{n}")
    return make_class(n, [1, 1] if n >= 1 else [1]) ** (k + 1) * h_power(n, n - k)
