import pytest
from hypothesis import HealthCheck, given, settings

from opcalc.algebra import dual_numbers, group_algebra_z2, matrix_algebra_2
from opcalc.compmodule import check_comp_module_axioms, check_simplicial_identities
from opcalc.errors import CapacityError, RefusedError
from opcalc.hochschild import HochschildChains, HochschildInstance
from opcalc.tensors import Chain
from strategies import chains

G = HochschildInstance(group_algebra_z2(), max_arity=7, max_degree=6)
M2 = HochschildInstance(matrix_algebra_2(), max_arity=5, max_degree=4)
prop = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@pytest.mark.parametrize("inst, degree", [(G, 3), (M2, 2)])
def test_comp_module_axioms(inst, degree):
    rep = check_comp_module_axioms(inst.module, degree, 2)
    assert rep.ok, str(rep)
    assert rep.notes["status"] == "cyclic"


@pytest.mark.parametrize("inst, degree", [(G, 3), (M2, 2)])
def test_simplicial_identities(inst, degree):
    rep = check_simplicial_identities(inst.module, degree)
    assert rep.ok, str(rep)


def test_hochschild_boundary_in_low_degree():
    M = HochschildInstance(dual_numbers(), max_arity=5, max_degree=4).module
    # b(a0, a1) = a0 a1 - a1 a0 vanishes for a commutative algebra
    assert M.b(Chain.basis((1, 1))).is_zero()
    # b(x, x, 1) = (x x, 1) - (x, x) + (x, x)
    assert M.b(Chain.basis((1, 1, 0))).is_zero()
    # b(1, x, x) = (x, x) - (1, x x) + (x, x)
    assert M.b(Chain.basis((0, 1, 1))) == Chain(1, {(1, 1): 2})
    assert M.b(Chain.basis((0,))).is_zero()


def test_cyclic_operator():
    M = G.module
    x = Chain.basis((0, 1, 1))
    assert M.t(x) == Chain.basis((1, 0, 1))
    assert M.t_power(x, 3) == x
    assert M.t(Chain.basis((1,))) == Chain.basis((1,))


def test_B_on_low_degrees():
    M = G.module
    # normalized B(a0) = (1, a0)
    assert M.B(Chain.basis((1,))) == Chain.basis((0, 1))
    assert M.B(Chain.basis((0,))).is_zero()


@prop
@given(chains(G, 4))
def test_b_squares_to_zero(x):
    M = G.module
    assert M.b(M.b(x)).is_zero()


@prop
@given(chains(G, 4))
def test_full_B_squares_to_zero(x):
    M = G.module
    assert M.B_full(M.B_full(x)).is_zero()


@prop
@given(chains(G, 4, normalized=True))
def test_mixed_complex_relations(x):
    M = G.module
    assert M.B(M.B(x)).is_zero()
    assert (M.b_normalized(M.B(x)) + M.B(M.b_normalized(x))).is_zero()


@prop
@given(chains(G, 4))
def test_t_has_finite_order(x):
    assert G.module.t_power(x, x.degree + 1) == x


def test_capacity_is_enforced():
    small = HochschildInstance(dual_numbers(), max_arity=3, max_degree=2)
    with pytest.raises(CapacityError):
        small.module.degeneracy(0, Chain.basis((0, 0, 0)))


class TwistedChains(HochschildChains):
    """Rotation twisted by the automorphism x -> -x of k[Z/2]: only para-cyclic."""

    def _t(self, x):
        y = super()._t(x)
        out = {}
        for k, c in y.terms.items():
            out[k] = -c if k[0] == 1 else c
        return Chain(y.degree, out, check=False)


def test_para_cyclic_module_is_refused():
    inst = HochschildInstance(group_algebra_z2(), max_arity=5, max_degree=3)
    M = TwistedChains(inst.operad, max_degree=3)
    assert not M.is_cyclic(2)
    with pytest.raises(RefusedError):
        check_simplicial_identities(M, 2)
