"""Exact orbifold and motivic invariants of finite linear quotients."""

__version__ = "0.1.0"

from .exactnum import Cyclotomic, cyclotomic_polynomial, parse_cyclotomic
from .invariants import (
    Component,
    NCPairData,
    SectorDivisorData,
    Stratum,
    discrepancy,
    klt_nc,
    mckay_betti,
    orbifold_weight,
    sector_fiber_convergence,
    stringy_nc,
)
from .matgroup import CycMatrix, FiniteMatrixGroup, close_group
from .motivic import INFINITY, L, MotivicWeight, parse_weight, stringy_factor
from .sectors import TwistedSector, age, exponent_multiplicities, fixed_dim, inertia_decomposition, shift
