import pytest

from opcalc.algebra import (cochain_from_function, dual_numbers, group_algebra_z2, matrix_algebra_2,
                            multiplication_cochain)
from opcalc.calculus import cap
from opcalc.errors import PreconditionError
from opcalc.hochschild import HochschildInstance
from opcalc.homology import HomologyEngine
from opcalc.poisson import (brylinski_boundary, brylinski_homotopy_check, koszul_coboundary, pi_from_square,
                            poisson_cap, poisson_cup, poisson_instance, search_poisson_structures,
                            validate_poisson)
from opcalc.tensors import Cochain

D = dual_numbers()
PI = pi_from_square(D, {0: 1})
INST = poisson_instance(D, PI, max_arity=6, max_degree=5)


def test_pi_prime_is_the_product_of_the_group_algebra():
    G = group_algebra_z2()
    assert PI == multiplication_cochain(G)


def test_validation_reports_the_cocycle_condition_separately():
    plain = HochschildInstance(D, max_arity=4, max_degree=1)
    rep = validate_poisson(plain, PI)
    assert rep.ok
    # pi' - mu is x (x) x -> 1, the cocycle deforming x^2 = 0 into x^2 = 1
    assert rep.notes["hochschild 2-cocycle"] is True
    # the opposite product of M_2 is a valid structure but not a cocycle for the usual one
    A = matrix_algebra_2()
    opposite = cochain_from_function(A, 2, lambda i, j: A.table[j][i])
    rep = validate_poisson(HochschildInstance(A, max_arity=4, max_degree=1), opposite)
    assert rep.ok and rep.notes["hochschild 2-cocycle"] is False


@pytest.mark.parametrize("values, axiom", [
    ({(0, 0): {0: 1}, (0, 1): {1: 2}, (1, 0): {1: 1}, (1, 1): {}}, "unit law pi(1, a) = a"),
    ({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: 1}, (1, 1): {0: 1}}, "unit law pi(a, 1) = a"),
    ({(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}, }, None),
])
def test_rejections_carry_witnesses(values, axiom):
    plain = HochschildInstance(D, max_arity=4, max_degree=1)
    if axiom is None:
        values[(0, 0)] = {1: 1}
    rep = validate_poisson(plain, Cochain(2, 2, values))
    assert not rep.ok and rep.witness is not None
    if axiom:
        assert axiom in {v.axiom for v in rep.violations}


def test_non_poisson_instance_is_refused():
    bad = Cochain(2, 2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: 1}, (1, 1): {0: 1}})
    with pytest.raises(PreconditionError):
        poisson_instance(D, bad, max_arity=4, max_degree=2)


def test_closed_forms_agree_with_generic_constructions():
    O, M = INST.operad, INST.module
    for x in [x for n in range(4) for x in M.basis(n)]:
        assert brylinski_boundary(INST, PI, x) == M.b(x)
        for phi in O.basis(1) + O.basis(2):
            assert poisson_cap(INST, PI, phi, x) == cap(M, phi, x)
    for phi in O.basis(0) + O.basis(1) + O.basis(2):
        assert koszul_coboundary(INST, PI, phi) == O.delta(phi)
        for psi in O.basis(1):
            assert poisson_cup(INST, PI, phi, psi) == O.cup(phi, psi)


def test_brylinski_boundary_is_minus_the_lie_derivative():
    chains = [x for n in range(4) for x in INST.module.basis(n)]
    assert brylinski_homotopy_check(INST, PI, chains).ok
    plain = HochschildInstance(D, max_arity=4, max_degree=3)
    with pytest.raises(PreconditionError):
        brylinski_homotopy_check(plain, PI, chains)


def test_poisson_homology_and_cohomology():
    E = HomologyEngine(INST)
    assert E.homology(3, representatives=False).dims == [2, 0, 0, 0]
    assert E.cohomology(2, representatives=False).dims == [2, 0, 0]
    assert E.connes_cyclic_homology(3).dims == [2, 0, 2, 0]


def test_search_finds_known_structures():
    found = search_poisson_structures(D)
    pis = [pi for pi, _ in found]
    assert multiplication_cochain(D) in pis
    assert PI in pis
    plain = HochschildInstance(D, max_arity=4, max_degree=1)
    assert all(validate_poisson(plain, pi).ok for pi in pis)
