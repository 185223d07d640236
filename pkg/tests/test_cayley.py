import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import complete_graph, cycle_graph, fraction_rank, petersen_graph, real_eigen_nullity_float
from singcay.algebraic import AlgebraicValue
from singcay.cayley import (
    adjacency_matrix,
    bareiss_rank,
    brute_force_nullity,
    build_connecting,
    eigenvalue_for,
    generated_order,
    group_order,
    inverse_class,
    is_singular,
    lift_nullity,
    modular_rank,
    nullity,
    spectrum,
    transitive_lift_spectrum,
    verdict,
)
from singcay.characters import ALT, SYM, CharacterLabel, ClassLabel, characters_of, classes_of
from singcay.config import ResourceBoundError


def _nontrivial(group, n):
    return [c for c in classes_of(group, n) if any(x > 1 for x in c.cycle_type)]


def test_inverse_class():
    assert inverse_class(ClassLabel((3,), "+", ALT)) == ClassLabel((3,), "-", ALT)
    assert inverse_class(ClassLabel((5,), "+", ALT)) == ClassLabel((5,), "+", ALT)
    assert inverse_class(ClassLabel((2, 1))) == ClassLabel((2, 1))


def test_build_connecting():
    k = build_connecting(ALT, 4, [ClassLabel((2, 2), "", ALT)])
    assert not k.generates and k.total_size == 3
    s = build_connecting(SYM, 4, [ClassLabel((2, 1, 1))])
    assert s.generates and s.total_size == 6
    a3 = build_connecting(ALT, 3, [ClassLabel((3,), "+", ALT)])
    assert len(a3.classes) == 2 and a3.total_size == 2
    assert not build_connecting(SYM, 5, [ClassLabel((3, 1, 1))]).generates
    with pytest.raises(ValueError):
        build_connecting(SYM, 3, [ClassLabel((1, 1, 1))])
    with pytest.raises(ValueError):
        build_connecting(SYM, 3, [])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_generation_rule_against_closure(n):
    for group in (SYM, ALT):
        for cls in _nontrivial(group, n):
            spec = build_connecting(group, n, [cls])
            assert spec.generates == (generated_order(group, n, spec.classes) == group_order(group, n))


def test_eigenvalue_examples():
    spec = build_connecting(SYM, 5, [ClassLabel((2, 1, 1, 1))])
    assert eigenvalue_for(CharacterLabel((5,)), spec) == 10
    assert eigenvalue_for(CharacterLabel((1, 1, 1, 1, 1)), spec) == -10
    five = build_connecting(ALT, 5, [ClassLabel((5,), "+", ALT), ClassLabel((5,), "-", ALT)])
    assert eigenvalue_for(CharacterLabel((4, 1), "", ALT), five) == -6
    with pytest.raises(ValueError):
        eigenvalue_for(CharacterLabel((4, 1)), five)


def test_s3_transposition_spectrum():
    spec = build_connecting(SYM, 3, [ClassLabel((2, 1))])
    got = {e.eigenvalue: e.multiplicity for e in spectrum(spec)}
    assert got == {AlgebraicValue(3): 1, AlgebraicValue(0): 4, AlgebraicValue(-3): 1}
    singular, chi = is_singular(spec)
    assert singular and chi == CharacterLabel((2, 1))
    v = verdict(spec)
    assert v["nullity"] == 4 and v["certificate"]["vanishes_on_every_class"]


@pytest.mark.parametrize("group,n", [(SYM, 4), (ALT, 5), (ALT, 6)])
def test_spectrum_trace_is_zero(group, n):
    for cls in _nontrivial(group, n):
        spec = build_connecting(group, n, [cls])
        entries = spectrum(spec)
        trace = AlgebraicValue(0)
        for e in entries:
            trace = trace + e.eigenvalue * e.multiplicity
        assert trace.is_zero()
        assert max(e.eigenvalue.sort_key() for e in entries) == AlgebraicValue(spec.total_size).sort_key()


def test_all_nontrivial_classes_give_complete_graph():
    spec = build_connecting(SYM, 4, _nontrivial(SYM, 4))
    assert nullity(spec) == 0 and spec.total_size == 23
    assert brute_force_nullity(spec) == 0


@pytest.mark.parametrize("group,n", [(SYM, 3), (SYM, 4), (ALT, 4), (SYM, 5), (ALT, 5)])
def test_single_classes_agree_with_brute_force(group, n):
    for cls in _nontrivial(group, n):
        spec = build_connecting(group, n, [cls])
        assert brute_force_nullity(spec, modular_check=True) == nullity(spec), cls


@pytest.mark.parametrize("seed", range(6))
def test_random_unions_agree_with_brute_force(seed):
    rng = random.Random(seed)
    group, n = rng.choice([(SYM, 4), (ALT, 5), (SYM, 5)])
    pool = _nontrivial(group, n)
    chosen = rng.sample(pool, rng.randint(1, len(pool)))
    spec = build_connecting(group, n, chosen)
    a = adjacency_matrix(spec)
    assert (a == a.T).all()
    assert brute_force_nullity(spec) == nullity(spec) == real_eigen_nullity_float(a)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_convention_does_not_change_spectrum(n):
    for cls in _nontrivial(ALT, n):
        spec = build_connecting(ALT, n, [cls])
        assert spectrum(spec, 1) == spectrum(spec, -1)


def test_adjacency_bound():
    spec = build_connecting(SYM, 5, [ClassLabel((2, 1, 1, 1))])
    with pytest.raises(ResourceBoundError):
        adjacency_matrix(spec, limit=100)


@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 3), st.randoms(use_true_random=False))
@settings(max_examples=80)
def test_bareiss_matches_fraction_rank(rows, cols, rank_hint, rnd):
    m = [[rnd.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
    # duplicate some rows so that rank deficiency is common
    for _ in range(rank_hint):
        if rows > 1:
            i, j = rnd.randrange(rows), rnd.randrange(rows)
            m[i] = [a + 2 * b for a, b in zip(m[i], m[j])] if i != j else m[i]
            m[j] = list(m[i])
    assert bareiss_rank(m) == fraction_rank(m)
    assert modular_rank(m) == fraction_rank(m)


def test_bareiss_large_entries():
    m = np.array([[10**30, 1], [10**30 + 1, 1]], dtype=object)
    assert bareiss_rank(m) == 2
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    with pytest.raises(ValueError):
        bareiss_rank([1, 2, 3])


def test_lift_examples():
    assert lift_nullity([2, 0, -2], 1) == 1
    ents = transitive_lift_spectrum([2, 0, -2], 3, 3)
    assert {e.eigenvalue: e.multiplicity for e in ents} == {AlgebraicValue(6): 1, AlgebraicValue(0): 7,
                                                             AlgebraicValue(-6): 1}
    with pytest.raises(ValueError):
        transitive_lift_spectrum([1, 2], 2, 3)
    with pytest.raises(ValueError):
        transitive_lift_spectrum([1, 2], 0, 2)


@pytest.mark.parametrize("graph", [cycle_graph(4), cycle_graph(5), complete_graph(4), petersen_graph()])
@pytest.mark.parametrize("c", [1, 2, 3])
def test_lift_against_kronecker_product(graph, c):
    a = np.array(graph, dtype=np.int64)
    k = a.shape[0]
    lifted = np.kron(a, np.ones((c, c), dtype=np.int64))
    base_nullity = k - bareiss_rank(a)
    # base spectra here are integers; pass them through exactly
    w = np.linalg.eigvalsh(a.astype(float))
    base = [int(round(x)) for x in w] if all(abs(x - round(x)) < 1e-9 for x in w) else None
    expected = lifted.shape[0] - bareiss_rank(lifted)
    assert expected == base_nullity + k * (c - 1)
    if base is not None:
        assert lift_nullity(base, c) == expected
