"""Orbifold and stringy invariants of linear quotients and normal-crossing pairs."""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CoordinateMismatch,
    HasReflections,
    InputError,
    RouteMismatch,
    StrataNotPartition,
    TrivialGroup,
)
from .matgroup import find_reflections, is_subgroup_of_SL
from .motivic import INFINITY, ZERO, MotivicWeight, stringy_factor
from .sectors import TwistedSector, diagonal_exponents, inertia_decomposition


class NonSLWarning(UserWarning):
    """Betti counts requested for a group outside SL_d."""


# --------------------------------------------------------------------------
# data
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    id: str
    coefficient: Fraction
    meets_W: bool = True


@dataclass(frozen=True)
class Stratum:
    components: frozenset
    open_class: MotivicWeight


@dataclass(frozen=True)
class NCPairData:
    """Strata data of a normal-crossing divisor sum e_i E_i on a smooth Y.

    ``coefficient`` holds e_i in the relative-canonical sense
    (K_{Y/X} = sum e_i E_i), so -e_i enters the exponent of the stringy sum.
    """

    ambient_class: MotivicWeight
    components: tuple
    strata: tuple

    def __post_init__(self):
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate component ids", ids=ids)
        known = set(ids)
        seen = set()
        for s in self.strata:
            unknown = sorted(set(s.components) - known)
            if unknown:
                raise InputError(f"stratum references unknown components {unknown}")
            if s.components in seen:
                raise InputError(f"stratum {sorted(s.components)} listed twice")
            seen.add(s.components)
            if s.open_class.infinite:
                raise InputError("stratum classes must be finite")
        if frozenset() not in seen:
            raise InputError("the open stratum (no components) is missing")
        total = sum((s.open_class for s in self.strata), ZERO)
        if total != self.ambient_class:
            raise StrataNotPartition(
                f"strata classes sum to {total}, ambient class is {self.ambient_class}",
                strata_sum=str(total), ambient=str(self.ambient_class),
            )

    def coefficient(self, cid):
        return next(c.coefficient for c in self.components if c.id == cid)

    def as_boundary(self):
        """The same data with coefficients u_i = -e_i (divisor D = -K_{Y/X})."""
        comps = tuple(Component(c.id, -c.coefficient, c.meets_W) for c in self.components)
        return NCPairData(self.ambient_class, comps, self.strata)


@dataclass(frozen=True)
class SectorDivisorData:
    sector: TwistedSector
    weights: tuple
    positions: tuple = None

    def coordinates(self):
        """Pairs (u_i, a_i) with a_i in the 1..l normalization."""
        exps = diagonal_exponents(self.sector.exponent_mult)
        positions = tuple(range(len(self.weights))) if self.positions is None else self.positions
        if len(positions) != len(self.weights):
            raise CoordinateMismatch("one position is needed per weight")
        if len(set(positions)) != len(positions):
            raise CoordinateMismatch("repeated exponent position")
        for p in positions:
            if not 0 <= p < len(exps):
                raise CoordinateMismatch(
                    f"position {p} out of range for degree {len(exps)}", position=p
                )
        return [(Fraction(u), exps[p]) for u, p in zip(self.weights, positions)]


# --------------------------------------------------------------------------
# quotient invariants
# --------------------------------------------------------------------------


def orbifold_weight(G, sectors=None):
    """sum over classes of L^(d - age), checked against L^(fixed_dim + shift)."""
    sectors = inertia_decomposition(G) if sectors is None else sectors
    d = G.degree
    by_age = sum((MotivicWeight.L_power(d - s.age) for s in sectors), ZERO)
    by_shift = sum((MotivicWeight.L_power(s.fixed_dim + s.shift) for s in sectors), ZERO)
    if by_age != by_shift:
        raise RouteMismatch(f"age route {by_age} != shift route {by_shift}")
    return by_age


def mckay_betti(G, sectors=None):
    """n_i = number of conjugacy classes of age i/2, keyed by i = 2 * age."""
    if not is_subgroup_of_SL(G):
        warnings.warn(
            "group is not in SL_d; counts are defined but have no crepant-resolution meaning",
            NonSLWarning,
            stacklevel=2,
        )
    sectors = inertia_decomposition(G) if sectors is None else sectors
    betti = {}
    for s in sectors:
        i = 2 * s.age
        betti[i] = betti.get(i, 0) + 1
    return dict(sorted(betti.items()))


def minimal_age_class(G, sectors=None):
    """(class index, age) of the non-identity class of least age."""
    sectors = inertia_decomposition(G) if sectors is None else sectors
    if len(G) == 1:
        raise TrivialGroup("the trivial group has no discrepancy; C^d is smooth")
    refl = find_reflections(G)
    if refl:
        classes = sorted({G.class_of[i] for i in refl})
        raise HasReflections(
            f"group contains reflections (classes {classes})", classes=classes
        )
    best = min(
        (s for s in sectors if G.class_reps[s.class_index] != G.identity_index),
        key=lambda s: (s.age, s.class_index),
    )
    return best.class_index, best.age


def discrepancy(G, sectors=None):
    return minimal_age_class(G, sectors)[1] - 1


# --------------------------------------------------------------------------
# normal-crossing pairs
# --------------------------------------------------------------------------


def stringy_nc(data):
    """sum_J {E_J^o} * prod_{i in J} (L - 1)/(L^(e_i + 1) - 1)."""
    total = ZERO
    for s in data.strata:
        if s.open_class.is_zero():
            continue
        term = s.open_class
        for cid in sorted(s.components):
            term = term * stringy_factor(data.coefficient(cid))
        total = total + term
    return total


def klt_nc(data, W_restricted=False):
    """True iff every relevant component has coefficient < 1.

    Coefficients are read as boundary coefficients u_i; pass
    ``data.as_boundary()`` for relative-canonical data.
    """
    return all(
        c.coefficient < 1
        for c in data.components
        if c.meets_W or not W_restricted
    )


@dataclass(frozen=True)
class FiberConvergence:
    converges: bool
    dim_sup: object  # Fraction, or math.inf when divergent


def sector_fiber_convergence(data):
    """Convergence and leading dimension of the fiber integral over a sector.

    The term for s = (s_1, ..., s_c) has dimension
    sum_i (u_i - 1) s_i + sum_i u_i a_i / l + shift, relative to the level
    normalization; the series converges iff every u_i < 1, and then the
    s = 0 term dominates.
    """
    coords = data.coordinates()
    if any(u >= 1 for u, _ in coords):
        return FiberConvergence(False, INFINITY.dim())
    l = data.sector.order
    const = sum((u * Fraction(a, l) for u, a in coords), Fraction(0)) + data.sector.shift
    return FiberConvergence(True, const)


__all__ = [
    "Component",
    "FiberConvergence",
    "NCPairData",
    "NonSLWarning",
    "SectorDivisorData",
    "Stratum",
    "discrepancy",
    "klt_nc",
    "minimal_age_class",
    "mckay_betti",
    "orbifold_weight",
    "sector_fiber_convergence",
    "stringy_nc",
]
