"""Characteristic classes of hypersurfaces and their intersections.

Every class on a subvariety X of P^n is computed as its pushforward to
the ambient ring Q[H]/(H^(n+1)); cap products and refined intersection
products then both become truncated polynomial multiplication.  The
Milnor class of X is computed along several independent routes and the
report records whether they agree after pushforward:

* ``definition``  (-1)^dim(X) (c^FJ(X) - c^SM(X)), with c^SM obtained
  by inclusion-exclusion over arrangement components or supplied
  explicitly.
* ``thm1``        the product rule: divide the product of the factors'
  classes by c(TP^n)^(r-1).
* ``expansion``   the same rule expanded factor by factor into a signed
  sum over mixed products of Milnor and SM classes.
* ``cor11``       the telescoped form of the expansion, one Milnor
  class per summand.
* ``aluffi``      from the mu-class of the singular locus (single
  hypersurfaces only).
* ``pp``          from per-stratum Milnor-fibre data.

The product-rule routes assume the inputs intersect their strata
transversally.  That hypothesis is recorded, never verified; the
shipped quadric/tangent-plane fixture shows them disagreeing with the
definition route when it fails.

Two sign conventions are calibrated here and pinned by tests, because
the dual/tensor regrading is ambient-codimension based (see ``chow``):
``ALUFFI_GLOBAL_SIGN`` and the Milnor-number exponent, which is the
dimension of the hypersurface, not of the ambient space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bundles import (
    BundleChern,
    chern_cotangent,
    chern_line,
    chern_tangent,
    chern_twist,
    fundamental_class_ci,
    segre_smooth,
)
from .chow import ChowClass, _sign, h_power, one, zero
from .varieties import (
    Arrangement,
    CompleteIntersectionSpec,
    HypersurfaceSpec,
    LinearLocus,
    Smooth,
    SmoothLocus,
    Stratification,
    Stratum,
    containment_map,
    open_stratum,
    strata_topological_order,
    validate,
    with_csm,
)

ROUTE_ORDER = ("definition", "thm1", "expansion", "cor11", "aluffi", "pp")

#: Global sign multiplying the classical mu-class formula for the
#: Milnor class, calibrated so the ambient-codimension grading of
#: dual/tensor reproduces the known value for a pair of hyperplanes in
#: P^4.  Cross-checked on odd-dimensional ambient spaces too.
ALUFFI_GLOBAL_SIGN = -1

CONVENTIONS = {
    "grading": "codimension in the ambient projective space",
    "dual_tensor_grading": "ambient codimension",
    "aluffi_global_sign": ALUFFI_GLOBAL_SIGN,
    "milnor_number_exponent": "dim of the hypersurface",
    "comparison": "routes compared after pushforward to the ambient ring",
}


class IntegralityError(ValueError):
    """A reported class came out non-integral; the route or input is wrong."""

    def __init__(self, variety: str, label: str, value: ChowClass):
        self.variety = variety
        self.label = label
        self.value = value
        super().__init__(
            f"{variety}: {label} has non-integral coefficients ({value})"
        )


# ---------------------------------------------------------------------------
# direct class computations


def _degrees(spec) -> tuple[int, tuple[int, ...]]:
    if isinstance(spec, HypersurfaceSpec):
        return spec.ambient_dim, (spec.degree,)
    if isinstance(spec, CompleteIntersectionSpec):
        return spec.ambient_dim, tuple(h.degree for h in spec.hypersurfaces)
    raise TypeError(f"expected a variety spec, got {type(spec).__name__}")


def _cfj(n: int, degrees) -> ChowClass:
    line_product = one(n)
    for d in degrees:
        line_product = line_product * chern_line(n, d).total
    return (
        chern_tangent(n).total
        * line_product.invert()
        * fundamental_class_ci(n, degrees)
    )


def cfj_ci(spec) -> ChowClass:
    """Chern class of the virtual tangent bundle, capped with [X].

    Depends only on the ambient dimension and the degrees, never on the
    singularities.
    """
    n, degrees = _degrees(validate(spec))
    return _cfj(n, degrees)


def csm_smooth_ci_degrees(n: int, degrees) -> ChowClass:
    """SM class of a smooth transversal complete intersection.

    For smooth X the SM class is the Chern class of the honest tangent
    bundle, which the virtual one computes.  More hypersurfaces than n
    cut out the empty variety, whose classes vanish.
    """
    if len(tuple(degrees)) > n:
        return zero(n)
    return _cfj(n, degrees)


def csm_smooth_ci(spec) -> ChowClass:
    n, degrees = _degrees(validate(spec))
    specs = [spec] if isinstance(spec, HypersurfaceSpec) else spec.hypersurfaces
    if not all(isinstance(h.singularity, Smooth) for h in specs):
        raise ValueError("csm_smooth_ci needs every hypersurface marked smooth")
    return csm_smooth_ci_degrees(n, degrees)


def csm_inclusion_exclusion(h: HypersurfaceSpec) -> ChowClass:
    """SM class of an arrangement: alternating sum over component subsets."""
    validate(h)
    if not isinstance(h.singularity, Arrangement):
        raise ValueError(f"{h.name}: not an arrangement")
    degrees = h.singularity.component_degrees
    n = h.ambient_dim
    total = zero(n)
    for size in range(1, len(degrees) + 1):
        for subset in itertools.combinations(degrees, size):
            total += _sign(size + 1) * csm_smooth_ci_degrees(n, subset)
    return total


def _component_degrees(h: HypersurfaceSpec) -> tuple[int, ...] | None:
    """Degrees of the smooth pieces a hypersurface decomposes into."""
    if isinstance(h.singularity, Smooth):
        return (h.degree,)
    if isinstance(h.singularity, Arrangement):
        return h.singularity.component_degrees
    return None


def csm_intersection_inclusion_exclusion(ci: CompleteIntersectionSpec) -> ChowClass:
    """SM class of the intersection, via its decomposition into smooth pieces.

    Each factor is a union of smooth components, so X is the union of
    the complete intersections cut by one component per factor;
    inclusion-exclusion over those pieces only needs SM classes of
    smooth complete intersections.  Valid under the same genericity the
    arrangement mode asserts.
    """
    validate(ci)
    per_factor = [_component_degrees(h) for h in ci.hypersurfaces]
    if any(c is None for c in per_factor):
        raise ValueError("every factor must be smooth or an arrangement")
    n = ci.ambient_dim
    pieces = [
        frozenset((i, j) for i, j in enumerate(choice))
        for choice in itertools.product(*(range(len(c)) for c in per_factor))
    ]
    degree_of = {
        (i, j): d for i, comps in enumerate(per_factor) for j, d in enumerate(comps)
    }
    total = zero(n)
    for size in range(1, len(pieces) + 1):
        for subset in itertools.combinations(pieces, size):
            components = frozenset().union(*subset)
            degs = [degree_of[c] for c in sorted(components)]
            total += _sign(size + 1) * csm_smooth_ci_degrees(n, degs)
    return total


# ---------------------------------------------------------------------------
# Milnor class routes


def milnor_definition(cfj: ChowClass, csm: ChowClass, dim_x: int) -> ChowClass:
    """(-1)^dim(X) (c^FJ - c^SM)."""
    if cfj.ambient_dim != csm.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return _sign(dim_x) * (cfj - csm)


def _tangent_correction(n: int, r: int) -> ChowClass:
    """c(TP^n restricted, summed r-1 times)^(-1)."""
    return (chern_tangent(n).total ** (r - 1)).invert()


def _class_product(classes, n: int) -> ChowClass:
    out = one(n)
    for c in classes:
        if c.ambient_dim != n:
            raise ValueError("ambient dimensions differ")
        out = out * c
    return out


def csm_product(csm_list, n: int) -> ChowClass:
    """SM class of a transversal intersection from the factors' SM classes."""
    csm_list = list(csm_list)
    if not csm_list:
        raise ValueError("need at least one class")
    return _tangent_correction(n, len(csm_list)) * _class_product(csm_list, n)


def cfj_product(cfj_list, n: int) -> ChowClass:
    """Same product rule for the virtual classes."""
    cfj_list = list(cfj_list)
    if not cfj_list:
        raise ValueError("need at least one class")
    return _tangent_correction(n, len(cfj_list)) * _class_product(cfj_list, n)


def milnor_product(cfj_list, csm_list, n: int, dim_x: int) -> ChowClass:
    """Milnor class of the intersection from the factors' class products."""
    cfj_list, csm_list = list(cfj_list), list(csm_list)
    if len(cfj_list) != len(csm_list):
        raise ValueError("need one virtual and one SM class per factor")
    if not cfj_list:
        raise ValueError("need at least one factor")
    r = len(cfj_list)
    difference = _class_product(cfj_list, n) - _class_product(csm_list, n)
    return _sign(dim_x) * (_tangent_correction(n, r) * difference)


def milnor_expansion(m_list, csm_list, codims, n: int) -> ChowClass:
    """The product rule expanded into 2^r - 1 signed mixed products.

    Each summand picks the Milnor or the SM class of every factor (the
    all-SM choice is excluded) and carries (-1)^(n - codim_i) per SM
    factor picked.  ``codims`` are the codimensions of the factors:
    1 for every hypersurface.  Only their parity matters.
    """
    m_list, csm_list, codims = list(m_list), list(csm_list), list(codims)
    if not len(m_list) == len(csm_list) == len(codims):
        raise ValueError("need a Milnor class, an SM class and a codimension per factor")
    r = len(m_list)
    acc = zero(n)
    for picks in itertools.product((0, 1), repeat=r):
        if all(picks):  # the all-SM product is the excluded one
            continue
        exponent = sum((n - codims[i]) * e for i, e in enumerate(picks))
        term = _class_product(
            [csm_list[i] if e else m_list[i] for i, e in enumerate(picks)], n
        )
        acc += _sign(exponent) * term
    return _sign(n * r - n) * (_tangent_correction(n, r) * acc)


def milnor_telescope(m_list, csm_list, cfj_list, codims, n: int) -> ChowClass:
    """Telescoped form: one summand per factor, each with a single
    Milnor class flanked by virtual classes on one side and SM classes
    on the other."""
    m_list, csm_list, cfj_list = list(m_list), list(csm_list), list(cfj_list)
    codims = list(codims)
    if not len(m_list) == len(csm_list) == len(cfj_list) == len(codims):
        raise ValueError("factor lists must all have the same length")
    r = len(m_list)
    if r == 0:
        return zero(n)
    total_codim = sum(codims)
    acc = zero(n)
    for i in range(r):
        term = _class_product(
            cfj_list[:i] + [m_list[i]] + csm_list[i + 1 :], n
        )
        acc += _sign(total_codim - codims[i]) * term
    return _tangent_correction(n, r) * acc


# ---------------------------------------------------------------------------
# mu-class route


def mu_class(n: int, degree: int, locus) -> ChowClass:
    """c(T*P^n (x) O(degree)) times the Segre class of the singular locus."""
    if locus is None:
        return zero(n)
    if isinstance(locus, LinearLocus):
        k = locus.dim
        normal = BundleChern(n, n - k, (one(n) + h_power(n, 1)) ** (n - k))
        segre = segre_smooth(normal, h_power(n, n - k))
    elif isinstance(locus, SmoothLocus):
        segre = segre_smooth(locus.normal, locus.locus_class)
    else:
        raise ValueError(f"unsupported singular-locus descriptor {locus!r}")
    twist = chern_twist(chern_cotangent(n), degree)
    return twist.total * segre


def milnor_from_mu(mu: ChowClass, degree: int, n: int) -> ChowClass:
    """Milnor class of a hypersurface from the mu-class of its singular locus.

    sign * (1+dH)^(n-1) * (mu dualised, then twisted by O(d)), with the
    regrading done by ambient codimension and the overall sign being
    ALUFFI_GLOBAL_SIGN * (-1)^(n-1).
    """
    line = chern_line(n, degree).total
    value = line ** (n - 1) * mu.dual().tensor_line(degree)
    return (ALUFFI_GLOBAL_SIGN * _sign(n - 1)) * value


# ---------------------------------------------------------------------------
# stratification route


def local_milnor_number(chi_fiber: int, dim_x: int) -> int:
    """(-1)^dim(X) (chi(F) - 1); zero at smooth points where chi(F) = 1.

    The exponent is the dimension of the hypersurface.  Using the
    ambient dimension instead flips the sign for even-dimensional
    hypersurfaces and breaks route agreement; a test pins this.
    """
    return _sign(dim_x) * (chi_fiber - 1)


def gamma_weights(strat: Stratification) -> Stratification:
    """Fill the mu and gamma fields of every stratum.

    gamma peels off the contributions of every stratum whose closure
    contains the given one, working from the open stratum downward.
    """
    order = strata_topological_order(strat)
    dim_x = order[0].dim
    above = containment_map(strat)
    gamma: dict[str, int] = {}
    filled = []
    for s in order:
        mu = local_milnor_number(s.chi_fiber, dim_x)
        g = mu - sum(gamma[name] for name in above[s.name])
        gamma[s.name] = g
        filled.append((s.name, mu, g))
    by_name = dict((name, (mu, g)) for name, mu, g in filled)
    strata = tuple(
        Stratum(
            s.name,
            s.dim,
            s.chi_fiber,
            s.closure_class,
            s.csm_closure,
            mu=by_name[s.name][0],
            gamma=by_name[s.name][1],
        )
        for s in strat.strata
    )
    return Stratification(strata, strat.closure_order)


def milnor_from_strata(strat: Stratification, degree: int, n: int) -> ChowClass:
    """Milnor class of a hypersurface as a gamma-weighted sum of
    c(O(d))^(-1) times the SM classes of the stratum closures."""
    inverse_line = chern_line(n, degree).total.invert()
    acc = zero(n)
    for s in strat.strata:
        if s.gamma is None:
            raise ValueError(f"stratum {s.name}: gamma not computed yet")
        if s.gamma == 0:
            continue
        if s.csm_closure is None:
            raise ValueError(f"stratum {s.name}: SM class of the closure is missing")
        acc += s.gamma * (inverse_line * s.csm_closure)
    return acc


def trivial_stratification(n: int, degree: int, csm: ChowClass) -> Stratification:
    """The stratification of a smooth hypersurface: one open stratum."""
    reg = Stratum(
        "reg",
        n - 1,
        chi_fiber=1,
        closure_class=degree * h_power(n, 1),
        csm_closure=csm,
        mu=0,
        gamma=0,
    )
    return Stratification((reg,))


def milnor_from_strata_ci(strats, degrees, n: int) -> ChowClass:
    """Milnor class of an intersection from per-factor stratifications.

    Sums over tuples of strata, one per factor, excluding the tuple of
    open strata.  A tuple carries the gamma weight of each non-open
    entry, a sign (-1)^((n-1) * number of open entries), one factor of
    c(O(d_i)) per open entry, and the product of the SM classes of the
    stratum closures; the whole sum is divided by c(O(d_1) + ... + O(d_r))
    and corrected like every other product-rule route.
    """
    strats, degrees = list(strats), list(degrees)
    if len(strats) != len(degrees):
        raise ValueError("need one stratification per degree")
    if not strats:
        raise ValueError("need at least one factor")
    r = len(strats)
    open_names = [open_stratum(s).name for s in strats]
    line_totals = [chern_line(n, d).total for d in degrees]
    acc = zero(n)
    for chosen in itertools.product(*(s.strata for s in strats)):
        eps = [1 if s.name == open_names[i] else 0 for i, s in enumerate(chosen)]
        if all(eps):
            continue
        weight = 1
        for i, s in enumerate(chosen):
            if eps[i]:
                continue
            if s.gamma is None:
                raise ValueError(f"stratum {s.name}: gamma not computed yet")
            weight *= s.gamma
        if weight == 0:
            continue
        term = one(n)
        for i, s in enumerate(chosen):
            if s.csm_closure is None:
                raise ValueError(
                    f"stratum {s.name}: SM class of the closure is missing"
                )
            term = term * s.csm_closure
            if eps[i]:
                term = term * line_totals[i]
        acc += (weight * _sign((n - 1) * sum(eps))) * term
    denominator = _class_product(line_totals, n).invert()
    return _sign(n * r - n) * (
        _tangent_correction(n, r) * (denominator * acc)
    )


# ---------------------------------------------------------------------------
# report assembly


@dataclass(frozen=True)
class RouteValue:
    route: str
    value: ChowClass


@dataclass(frozen=True)
class SkippedRoute:
    route: str
    reason: str


@dataclass(frozen=True)
class VarietyReport:
    name: str
    kind: str  # "hypersurface" or "intersection"
    dim: int
    cfj: ChowClass
    csm: ChowClass | None
    csm_route: str | None
    milnor: tuple[RouteValue, ...]
    skipped: tuple[SkippedRoute, ...] = ()

    @property
    def agree(self) -> bool:
        values = [rv.value for rv in self.milnor]
        return all(v == values[0] for v in values[1:])

    @property
    def consensus(self) -> ChowClass | None:
        if not self.milnor or not self.agree:
            return None
        return self.milnor[0].value


@dataclass(frozen=True)
class ClassReport:
    ambient_dim: int
    transversality_asserted: bool
    varieties: tuple[VarietyReport, ...]
    conventions: dict = None

    def __post_init__(self):
        if self.conventions is None:
            object.__setattr__(self, "conventions", dict(CONVENTIONS))

    @property
    def all_agree(self) -> bool:
        return all(v.agree for v in self.varieties)

    @property
    def used_product_routes(self) -> bool:
        """True when a route that assumes transversality ran on an
        actual intersection; single hypersurfaces never need it."""
        product = {"thm1", "expansion", "cor11", "pp"}
        return any(
            rv.route in product
            for v in self.varieties
            if v.kind == "intersection"
            for rv in v.milnor
        )


@dataclass(frozen=True)
class _Factor:
    spec: HypersurfaceSpec
    cfj: ChowClass
    csm: ChowClass | None
    csm_route: str | None
    milnor: dict
    skipped: dict
    reference: RouteValue | None
    strat: Stratification | None


def _factor_csm(h: HypersurfaceSpec):
    if isinstance(h.singularity, Smooth):
        return _cfj(h.ambient_dim, [h.degree]), "smooth model"
    if isinstance(h.singularity, Arrangement):
        return csm_inclusion_exclusion(h), "inclusion-exclusion"
    supplied = open_stratum(h.strata).csm_closure
    if supplied is not None:
        return supplied, "supplied"
    return None, None


def _factor_stratification(h: HypersurfaceSpec, csm):
    """Gamma-filled stratification, with the open stratum's closure class
    backfilled from the hypersurface's own SM class when known."""
    n = h.ambient_dim
    if h.strata is not None:
        strat = gamma_weights(h.strata)
        reg = open_stratum(strat)
        if reg.csm_closure is None and csm is not None:
            strat = with_csm(strat, reg.name, csm)
        return strat
    if isinstance(h.singularity, Smooth):
        return trivial_stratification(n, h.degree, csm)
    return None


def _analyze_factor(h: HypersurfaceSpec) -> _Factor:
    n = h.ambient_dim
    cfj = _cfj(n, [h.degree])
    csm, csm_route = _factor_csm(h)
    strat = _factor_stratification(h, csm)
    milnor: dict = {}
    skipped: dict = {}

    if csm is not None:
        milnor["definition"] = milnor_definition(cfj, csm, n - 1)
        milnor["thm1"] = milnor_product([cfj], [csm], n, n - 1)
    else:
        reason = "no SM class without arrangement or supplied data"
        skipped["definition"] = reason
        skipped["thm1"] = reason

    if isinstance(h.singularity, Smooth):
        milnor["aluffi"] = zero(n)
    elif h.sing_locus is not None:
        milnor["aluffi"] = milnor_from_mu(mu_class(n, h.degree, h.sing_locus), h.degree, n)
    else:
        skipped["aluffi"] = "no singular-locus descriptor"

    if strat is not None:
        try:
            milnor["pp"] = milnor_from_strata(strat, h.degree, n)
        except ValueError as exc:
            skipped["pp"] = str(exc)
    else:
        skipped["pp"] = "no stratification"

    reference = None
    for route in ("definition", "pp", "aluffi"):
        if route in milnor:
            reference = RouteValue(route, milnor[route])
            break

    if reference is not None:
        csm_or_zero = csm if csm is not None else zero(n)
        milnor["expansion"] = milnor_expansion(
            [reference.value], [csm_or_zero], [1], n
        )
        milnor["cor11"] = milnor_telescope(
            [reference.value], [csm_or_zero], [cfj], [1], n
        )
    else:
        skipped["expansion"] = "no Milnor class available for the factor"
        skipped["cor11"] = "no Milnor class available for the factor"

    return _Factor(h, cfj, csm, csm_route, milnor, skipped, reference, strat)


def _intersection_report(ci, factors, intersection_csm, methods):
    n = ci.ambient_dim
    r = len(factors)
    degrees = [f.spec.degree for f in factors]
    cfj = _cfj(n, degrees)
    milnor: dict = {}
    skipped: dict = {}

    if intersection_csm is not None:
        csm, csm_route = intersection_csm, "supplied"
    elif all(_component_degrees(f.spec) is not None for f in factors) and (
        ci.transversality_asserted or r == 0
    ):
        csm, csm_route = csm_intersection_inclusion_exclusion(ci), "inclusion-exclusion"
    else:
        csm, csm_route = None, None

    if csm is not None:
        milnor["definition"] = milnor_definition(cfj, csm, n - r)
    else:
        skipped["definition"] = "no SM class for the intersection"

    if r == 0:
        for route in ("thm1", "expansion", "cor11", "pp"):
            skipped[route] = "no factors"
    elif not ci.transversality_asserted:
        for route in ("thm1", "expansion", "cor11", "pp"):
            skipped[route] = "transversality not asserted"
    else:
        if all(f.csm is not None for f in factors):
            milnor["thm1"] = milnor_product(
                [f.cfj for f in factors], [f.csm for f in factors], n, n - r
            )
        else:
            skipped["thm1"] = "a factor is missing its SM class"

        if all(f.reference is not None and f.csm is not None for f in factors):
            m_list = [f.reference.value for f in factors]
            csm_list = [f.csm for f in factors]
            milnor["expansion"] = milnor_expansion(m_list, csm_list, [1] * r, n)
            milnor["cor11"] = milnor_telescope(
                m_list, csm_list, [f.cfj for f in factors], [1] * r, n
            )
        else:
            reason = "a factor is missing its Milnor or SM class"
            skipped["expansion"] = reason
            skipped["cor11"] = reason

        if all(f.strat is not None for f in factors):
            try:
                milnor["pp"] = milnor_from_strata_ci(
                    [f.strat for f in factors], degrees, n
                )
            except ValueError as exc:
                skipped["pp"] = str(exc)
        else:
            skipped["pp"] = "a factor is missing its stratification"

    skipped["aluffi"] = "mu-class route covers single hypersurfaces only"

    name = " ∩ ".join(f.spec.name for f in factors) if factors else f"P^{n}"
    return _build_row(name, "intersection", n - r, cfj, csm, csm_route,
                      milnor, skipped, methods)


def _build_row(name, kind, dim, cfj, csm, csm_route, milnor, skipped, methods):
    values = tuple(
        RouteValue(route, milnor[route])
        for route in ROUTE_ORDER
        if route in milnor and (methods is None or route in methods)
    )
    dropped = tuple(
        SkippedRoute(route, skipped[route])
        for route in ROUTE_ORDER
        if route in skipped and (methods is None or route in methods)
    )
    return VarietyReport(name, kind, dim, cfj, csm, csm_route, values, dropped)


def _check_integral(row: VarietyReport) -> None:
    if not row.cfj.is_integral():
        raise IntegralityError(row.name, "c^FJ", row.cfj)
    if row.csm is not None and not row.csm.is_integral():
        raise IntegralityError(row.name, "c^SM", row.csm)
    for rv in row.milnor:
        if not rv.value.is_integral():
            raise IntegralityError(row.name, f"Milnor class ({rv.route} route)", rv.value)


def compute_report(
    ci: CompleteIntersectionSpec,
    methods=None,
    intersection_csm: ChowClass | None = None,
) -> ClassReport:
    """Run every requested route on every variety in the spec.

    ``methods`` restricts the routes (None means all).  A single
    hypersurface yields one row; an intersection of r >= 2 adds a row
    per factor plus one for the intersection itself.  Any non-integral
    reported class aborts with IntegralityError.
    """
    validate(ci)
    if methods is not None:
        unknown = set(methods) - set(ROUTE_ORDER)
        if unknown:
            raise ValueError(f"unknown routes: {sorted(unknown)}")
    factors = [_analyze_factor(h) for h in ci.hypersurfaces]
    rows = [
        _build_row(
            f.spec.name,
            "hypersurface",
            ci.ambient_dim - 1,
            f.cfj,
            f.csm,
            f.csm_route,
            f.milnor,
            f.skipped,
            methods,
        )
        for f in factors
    ]
    if len(factors) != 1:
        rows.append(_intersection_report(ci, factors, intersection_csm, methods))
    for row in rows:
        _check_integral(row)
    return ClassReport(
        ci.ambient_dim, ci.transversality_asserted, tuple(rows)
    )
