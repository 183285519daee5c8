import pytest

from opcalc.algebra import dual_numbers, group_algebra_z2, make_pair, matrix_algebra_2, validate_pair
from opcalc.calculus import cap, check_dg_lie, check_dg_module, check_homotopy, cyclic_correction, lie
from opcalc.compmodule import check_simplicial_identities
from opcalc.errors import PreconditionError
from opcalc.hochschild import (HochschildInstance, closed_form_cap, closed_form_cup, closed_form_lie,
                               closed_form_S, delta_vs_standard, euler_derivation)
from opcalc.homology import HomologyEngine
from opcalc.operad import check_operad_axioms

INSTANCES = {
    "D": HochschildInstance(dual_numbers(), max_arity=6, max_degree=5),
    "M2": HochschildInstance(matrix_algebra_2(), max_arity=6, max_degree=4),
}


def twisted_pair():
    """V = k[y]/(y^2) mapped onto D by y -> 2x."""
    D = dual_numbers()
    V = D.change_basis([[1, 0], [0, 2]], ["1", "y"])
    return D, make_pair(D, V, [[1, 0], [0, 2]])


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_closed_forms_match_generic_operators(name):
    inst = INSTANCES[name]
    M, O = inst.module, inst.operad
    top = 3 if name == "D" else 2
    for p in range(3):
        for phi in O.basis(p):
            for n in range(top + 1):
                for x in M.basis(n):
                    assert closed_form_cap(inst, phi, x) == cap(M, phi, x)
                    assert closed_form_lie(inst, phi, x) == lie(M, phi, x)
                    assert closed_form_S(inst, phi, x) == cyclic_correction(M, phi, x)


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_closed_form_cup_and_coboundary(name):
    inst = INSTANCES[name]
    O = inst.operad
    for p in range(3):
        for phi in O.basis(p):
            assert delta_vs_standard(inst, phi)[0]
            for psi in O.basis(1):
                assert closed_form_cup(inst, phi, psi) == O.cup(phi, psi)


def test_twisted_coefficient_pair():
    D, pair = twisted_pair()
    assert validate_pair(D, pair).ok
    inst = HochschildInstance(D, pair, max_arity=7, max_degree=7)
    assert check_operad_axioms(inst.operad, 2).ok
    assert check_simplicial_identities(inst.module, 3).ok
    O, M = inst.operad, inst.module
    phis = [c for p in range(3) for c in O.basis(p)]
    xs = [x for n in range(4) for x in M.basis(n)]
    assert check_dg_module(M, phis, phis, xs).ok
    assert check_dg_lie(M, phis, phis, xs).ok
    nphis = [c for p in range(3) for c in O.normalized_basis(p)]
    assert check_homotopy(M, nphis, [x for n in range(4) for x in M.normalized_basis(n)]).ok
    for phi in phis:
        assert delta_vs_standard(inst, phi)[0]
        for x in xs[:6]:
            assert closed_form_cap(inst, phi, x) == cap(M, phi, x)


def test_twisted_pair_has_same_homology_and_cohomology():
    D, pair = twisted_pair()
    plain = HomologyEngine(HochschildInstance(D, max_arity=5, max_degree=5))
    twisted = HomologyEngine(HochschildInstance(D, pair, max_arity=5, max_degree=5))
    assert plain.homology(3, representatives=False).dims == twisted.homology(3, representatives=False).dims
    assert plain.cohomology(3, representatives=False).dims == twisted.cohomology(3, representatives=False).dims


def test_invalid_inputs_are_refused():
    D = dual_numbers()
    bad = make_pair(D, group_algebra_z2(), [[1, 0], [0, 1]])
    with pytest.raises(PreconditionError):
        HochschildInstance(D, bad, max_arity=3, max_degree=2)


def test_euler_derivation_is_a_cocycle_only_for_graded_algebras():
    D = INSTANCES["D"]
    assert D.operad.delta(euler_derivation(D.algebra)).is_zero()
    # on k[x]/(x^2 - 1), E(x x) = 0 but E(x) x + x E(x) = 2
    G = HochschildInstance(group_algebra_z2(), max_arity=4, max_degree=2)
    assert not G.operad.delta(euler_derivation(G.algebra)).is_zero()


def test_fingerprint_depends_on_inputs():
    D, pair = twisted_pair()
    a = HochschildInstance(D, max_arity=3, max_degree=2)
    b = HochschildInstance(D, pair, max_arity=3, max_degree=2)
    assert a.fingerprint() != b.fingerprint()
    assert a.fingerprint() == HochschildInstance(D, max_arity=3, max_degree=2).fingerprint()
