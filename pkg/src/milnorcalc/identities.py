"""Randomized exact verification of the derived Milnor-class formulas.

The expansion and the telescoped sum are algebraic consequences of the
product rule once every factor satisfies

    cfj_i = csm_i + (-1)^(n - d_i) m_i,

where d_i is the codimension of the factor.  These checks draw random
classes with bounded integer coefficients, impose that relation, and
compare the routes for exact equality in the truncated ring.  Exact
arithmetic means a failure is a real counterexample, never noise, and
the bounded coefficients lose no generality for polynomial identities
of bounded degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chow import ChowClass, _sign
from .engine import milnor_expansion, milnor_product, milnor_telescope

COEFF_RANGE = (-9, 9)
CODIM_RANGE = (1, 5)


@dataclass(frozen=True)
class RandomInstance:
    """One random trial: factor classes tied together by the sign relation."""

    seed: int
    n: int
    r: int
    codims: tuple[int, ...]
    csm_list: tuple[ChowClass, ...]
    m_list: tuple[ChowClass, ...]

    @property
    def cfj_list(self) -> tuple[ChowClass, ...]:
        return tuple(
            csm + _sign(self.n - d) * m
            for csm, m, d in zip(self.csm_list, self.m_list, self.codims)
        )

    @property
    def dim_x(self) -> int:
        return self.n - sum(self.codims)


def _random_class(rng: random.Random, n: int) -> ChowClass:
    lo, hi = COEFF_RANGE
    return ChowClass(n, tuple(rng.randint(lo, hi) for _ in range(n + 1)))


def random_instance(rng: random.Random, n: int, r: int, seed: int) -> RandomInstance:
    codims = tuple(rng.randint(*CODIM_RANGE) for _ in range(r))
    csm_list = tuple(_random_class(rng, n) for _ in range(r))
    m_list = tuple(_random_class(rng, n) for _ in range(r))
    return RandomInstance(seed, n, r, codims, csm_list, m_list)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    r: int
    trials: int
    seed: int
    failures: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        line = (
            f"{self.identity}: n={self.n} r={self.r} trials={self.trials} "
            f"seed={self.seed} failures={len(self.failures)}"
        )
        if self.failures:
            line += f" (trials {', '.join(map(str, self.failures))})"
        return line


def _run(identity: str, n: int, r: int, trials: int, seed: int, check) -> IdentityReport:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    failures = []
    for index in range(trials):
        instance = random_instance(rng, n, r, seed)
        if not check(instance):
            failures.append(index)
    return IdentityReport(identity, n, r, trials, seed, tuple(failures))


def check_expansion_identity(n: int, r: int, trials: int = 100, seed: int = 0) -> IdentityReport:
    """Expansion route against the product rule, trial by trial."""

    def check(inst: RandomInstance) -> bool:
        lhs = milnor_product(inst.cfj_list, inst.csm_list, n, inst.dim_x)
        rhs = milnor_expansion(inst.m_list, inst.csm_list, inst.codims, n)
        return lhs == rhs

    return _run("expansion identity", n, r, trials, seed, check)


def check_telescope_identity(n: int, r: int, trials: int = 100, seed: int = 0) -> IdentityReport:
    """Telescoped sum against the product rule, trial by trial."""

    def check(inst: RandomInstance) -> bool:
        lhs = milnor_product(inst.cfj_list, inst.csm_list, n, inst.dim_x)
        rhs = milnor_telescope(
            inst.m_list, inst.csm_list, inst.cfj_list, inst.codims, n
        )
        return lhs == rhs

    return _run("telescope identity (cor11)", n, r, trials, seed, check)


def sweep(n_range=range(2, 9), max_r: int = 4, trials: int = 100, seed: int = 0):
    """Both identities over the full grid; yields one report per cell."""
    for n in n_range:
        for r in range(1, min(max_r, n) + 1):
            yield check_expansion_identity(n, r, trials, seed)
            yield check_telescope_identity(n, r, trials, seed)
