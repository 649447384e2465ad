"""Eigenvalue-exponent data, age, shift and the twisted-sector decomposition.

Exponent multiplicities are stored with the convention ``m[j-1] = dim`` of the
zeta_l^j eigenspace for ``1 <= j <= l``, so the eigenvalue 1 sits in the last
slot.  They come from averaging traces of powers against the characters of
the cyclic group,

    m_j = (1/l) * sum_k zeta_l^(-jk) * trace(g^k),

which is evaluated exactly.  Age (exponents in 0..l-1) and shift
(exponents in 1..l) are both read off from this one list.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerMultiplicity
from .exactnum import _reduce
from .matgroup import CycMatrix, centralizer_order


@dataclass(frozen=True)
class TwistedSector:
    class_index: int
    order: int
    exponent_mult: tuple
    age: Fraction
    shift: Fraction
    fixed_dim: int
    centralizer_order: int
    class_size: int = 1

    @property
    def degree(self):
        return sum(self.exponent_mult)


def _multiplicities_from_traces(traces, field_order):
    l = len(traces)
    big = math.lcm(field_order, l)
    step_field = big // field_order
    step_root = big // l
    # lift each trace to Q(zeta_big) as an unreduced power-sum dict
    lifted = []
    for t in traces:
        lifted.append([(i * step_field, c) for i, c in enumerate(t.coeffs) if c])
    mults = []
    for j in range(1, l + 1):
        raw = [Fraction(0)] * big
        for k, terms in enumerate(lifted):
            shift = (-j * k * step_root) % big
            for e, c in terms:
                raw[(e + shift) % big] += c
        value = _reduce(big, raw)
        if any(value[1:]):
            raise NonIntegerMultiplicity(f"multiplicity of zeta^{j} is irrational")
        m = value[0] / l
        if m.denominator != 1 or m < 0:
            raise NonIntegerMultiplicity(f"multiplicity of zeta^{j} is {m}")
        mults.append(int(m))
    if sum(mults) != traces[0].to_rational():
        raise NonIntegerMultiplicity("multiplicities do not sum to the degree")
    return tuple(mults)


def exponent_multiplicities(g):
    """(m_1, ..., m_l) for a finite-order matrix g of order l."""
    ident = CycMatrix.identity(g.degree, g.order)
    traces = [ident.trace()]
    power = g
    while power != ident:
        traces.append(power.trace())
        power = power * g
    return _multiplicities_from_traces(traces, g.order)


def group_exponent_multiplicities(G, i):
    """Same as :func:`exponent_multiplicities` for ``G.elements[i]``, reusing
    the group's multiplication tables for the powers."""
    traces = [G.elements[k].trace() for k in G.power_indices(i)]
    return _multiplicities_from_traces(traces, G.order)


def age_from_mult(mult):
    l = len(mult)
    return Fraction(sum(j * m for j, m in enumerate(mult[:-1], start=1)), l)


def shift_from_mult(mult):
    l = len(mult)
    return Fraction(sum((l - j) * m for j, m in enumerate(mult, start=1)), l)


def fixed_dim_from_mult(mult):
    return mult[-1]


def age(g):
    return age_from_mult(exponent_multiplicities(g))


def shift(g):
    return shift_from_mult(exponent_multiplicities(g))


def fixed_dim(g):
    return fixed_dim_from_mult(exponent_multiplicities(g))


def diagonal_exponents(mult):
    """Exponents a_1 <= ... <= a_d in the 1..l normalization."""
    return tuple(j for j, m in enumerate(mult, start=1) for _ in range(m))


def element_sector(G, i, class_index=None):
    mult = group_exponent_multiplicities(G, i)
    c = G.class_of[i] if class_index is None else class_index
    return TwistedSector(
        class_index=c,
        order=len(mult),
        exponent_mult=mult,
        age=age_from_mult(mult),
        shift=shift_from_mult(mult),
        fixed_dim=fixed_dim_from_mult(mult),
        centralizer_order=centralizer_order(G, i),
        class_size=G.class_sizes[c],
    )


def inertia_decomposition(G):
    """One twisted sector per conjugacy class, in class order."""
    return [element_sector(G, rep, c) for c, rep in enumerate(G.class_reps)]
