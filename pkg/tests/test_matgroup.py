import random

import numpy as np
import pytest

from omk.errors import CapExceeded, InputError, NotAMember, OrderOverflow, SingularGenerator
from omk.exactnum import Cyclotomic
from omk.matgroup import (
    CycMatrix,
    centralizer_order,
    close_group,
    conjugacy_classes,
    determinant,
    element_order,
    find_reflections,
    is_subgroup_of_SL,
)

from conftest import load_group
from oracles import numeric_class_sizes, numeric_closure, to_numpy


def M(grid, order):
    return CycMatrix.from_strings(grid, order)


MINUS_I2 = M([["-1", "0"], ["0", "-1"]], 2)
QI = M([["z", "0"], ["0", "-z"]], 4)
QJ = M([["0", "-1"], ["1", "0"]], 4)


def test_close_z2():
    G = close_group([MINUS_I2])
    assert len(G) == 2
    assert G.class_sizes == (1, 1)


def test_close_identity():
    G = close_group([CycMatrix.identity(3, 5)])
    assert len(G) == 1 and G.class_reps == (0,)


def test_close_q8_against_numeric_closure():
    oracle = numeric_closure([to_numpy(QJ), to_numpy(QI)])
    G = close_group([QJ, QI])
    assert len(G) == len(oracle) == 8
    assert QI in G and QJ in G
    assert G.elements[G.identity_index].is_identity()


def test_closure_is_closed(q8):
    for g in q8.elements:
        for h in q8.elements:
            assert g * h in q8
        assert g.inverse() in q8


def test_closure_idempotent(all_groups):
    for name in ("q8", "binary_tetrahedral", "frobenius21", "s3_reflection"):
        G = all_groups[name]
        again = close_group(G.elements)
        assert set(again.elements) == set(G.elements)


def test_deterministic_element_order():
    a = close_group([QI, QJ])
    b = close_group([QJ, QI])
    assert a.elements == b.elements


def test_cap_exceeded():
    with pytest.raises(CapExceeded) as info:
        close_group([M([["z", "0"], ["0", "z^11"]], 12)], cap=5)
    assert info.value.exit_code == 4


def test_non_torsion_generator_hits_cap():
    with pytest.raises(CapExceeded):
        close_group([M([["1", "1"], ["0", "1"]], 1)], cap=50)


def test_singular_generator():
    with pytest.raises(SingularGenerator):
        close_group([M([["1", "1"], ["1", "1"]], 1)])


def test_generator_validation():
    with pytest.raises(InputError):
        close_group([])
    with pytest.raises(InputError):
        close_group([MINUS_I2, CycMatrix.identity(3, 2)])


def test_conjugacy_classes_examples(q8):
    assert close_group([MINUS_I2]).class_sizes == (1, 1)
    assert sorted(q8.class_sizes) == [1, 1, 2, 2, 2]
    assert sorted(q8.class_sizes) == numeric_class_sizes(numeric_closure([to_numpy(QJ), to_numpy(QI)]))
    abelian = load_group("z12xz12")
    assert abelian.num_classes == len(abelian)


def test_conjugacy_recompute_matches(q8):
    assert conjugacy_classes(q8) == (q8.class_of, q8.class_reps, q8.class_sizes)


def test_class_representative_is_minimal(all_groups):
    for G in all_groups.values():
        for c, rep in enumerate(G.class_reps):
            members = G.class_members(c)
            assert rep == min(members, key=lambda i: G.elements[i].key())
        assert G.class_reps[0] == G.identity_index


def test_classes_are_conjugation_orbits(q8):
    for i, g in enumerate(q8.elements):
        for h in q8.elements:
            assert q8.class_of[q8.index_of(h * g * h.inverse())] == q8.class_of[i]


def test_element_order_examples():
    assert element_order(CycMatrix.identity(2, 3)) == 1
    assert element_order(MINUS_I2) == 2
    assert element_order(CycMatrix.diagonal([Cyclotomic.zeta(6), Cyclotomic.zeta(6, 5)])) == 6


def test_element_order_overflow():
    with pytest.raises(OrderOverflow):
        element_order(M([["1", "1"], ["0", "1"]], 1), bound=100)


def test_group_element_orders_agree(all_groups):
    for name in ("q8", "binary_icosahedral", "z7_conjugated"):
        G = all_groups[name]
        for i, g in enumerate(G.elements):
            assert G.element_order_of(i) == element_order(g)


def test_lagrange(all_groups):
    for G in all_groups.values():
        for i in range(len(G)):
            assert len(G) % G.element_order_of(i) == 0


def test_centralizer_examples(q8):
    assert centralizer_order(q8, q8.elements[q8.identity_index]) == 8
    # brute-force commutation scan
    scan = sum(1 for h in q8.elements if h * QI == QI * h)
    assert scan == 4 and centralizer_order(q8, QI) == 4
    G = load_group("z5_12")
    for g in G.elements:
        assert centralizer_order(G, g) == len(G)


def test_centralizer_not_member(q8):
    with pytest.raises(NotAMember):
        centralizer_order(q8, M([["0", "1"], ["1", "0"]], 4))


def test_orbit_stabilizer(all_groups):
    for G in all_groups.values():
        assert sum(G.class_sizes) == len(G)
        for c, rep in enumerate(G.class_reps):
            assert G.class_sizes[c] * centralizer_order(G, rep) == len(G)


def test_determinant_examples():
    assert determinant(CycMatrix.identity(3, 7)) == 1
    z3 = Cyclotomic.zeta(3)
    assert determinant(CycMatrix.diagonal([z3, z3])) == z3**2
    assert determinant(M([["0", "-1"], ["1", "0"]], 1)) == 1
    assert determinant(M([["1", "2"], ["2", "4"]], 1)).is_zero()


def test_determinant_against_numpy(all_groups):
    G = all_groups["z7_conjugated"]
    for g in G.elements:
        assert abs(determinant(g).to_complex() - np.linalg.det(to_numpy(g))) < 1e-9


def test_determinant_multiplicative(all_groups):
    rng = random.Random(3)
    for G in all_groups.values():
        for _ in range(5):
            g, h = rng.choice(G.elements), rng.choice(G.elements)
            assert determinant(g * h) == determinant(g) * determinant(h)


def test_sl_examples(q8):
    assert is_subgroup_of_SL(close_group([MINUS_I2]))
    assert not is_subgroup_of_SL(close_group([M([["-1"]], 2)]))
    assert is_subgroup_of_SL(q8)
    assert all(abs(np.linalg.det(to_numpy(g)) - 1) < 1e-9 for g in q8.elements)


def test_reflections(q8):
    assert find_reflections(close_group([MINUS_I2])) == []
    G = close_group([M([["1", "0"], ["0", "-1"]], 2)])
    assert len(find_reflections(G)) == 1
    assert find_reflections(q8) == []
    assert len(find_reflections(load_group("s3_reflection"))) == 3


def test_inverse_and_power(q8):
    for g in q8.elements:
        assert (g * g.inverse()).is_identity()
        assert g ** -1 == g.inverse()
        assert g ** 4 == CycMatrix.identity(2, 4)


def test_matrix_validation():
    with pytest.raises(InputError):
        CycMatrix([[Cyclotomic.one(3), Cyclotomic.one(3)]])
    with pytest.raises(InputError):
        CycMatrix([[Cyclotomic.one(3), Cyclotomic.one(4)], [Cyclotomic.one(3), Cyclotomic.one(3)]])
