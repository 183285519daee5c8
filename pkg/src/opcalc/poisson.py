"""Noncommutative Poisson structures: the Hochschild spaces with the operad
multiplication replaced by a 2-cochain pi.

The comp maps and comp module maps do not change, so every generic
construction (boundary, coboundary, cup/cap, Lie derivative, cyclic
correction, Connes' B) is available for pi through :func:`poisson_instance`.
The closed forms below are written out on indices and serve as a second,
independent code path.
"""

from __future__ import annotations

import itertools

from .algebra import Algebra, CoefficientPair, apply_map, cochain_from_function, identity_pair
from .calculus import lie
from .errors import PreconditionError
from .hochschild import HochschildInstance
from .operad import parity
from .report import Report
from .tensors import Chain, Cochain, acc, add_scaled


def poisson_instance(A: Algebra, pi: Cochain, pair: CoefficientPair | None = None, *,
                     max_arity: int = 6, max_degree: int = 6, require_valid: bool = True) -> HochschildInstance:
    inst = HochschildInstance(A, pair, max_arity=max_arity, max_degree=max_degree, mu=pi)
    if require_valid:
        rep = validate_poisson(inst, pi)
        if not rep.ok:
            raise PreconditionError(f"not a noncommutative Poisson structure: {rep}")
    return inst


def validate_poisson(inst: HochschildInstance, pi: Cochain) -> Report:
    """pi o_1 pi = pi o_2 pi, pi(1, 1) = 1_V, and the unit law pi(1, a) = pi(a, 1) = eta(a).

    Whether pi is also a 2-cocycle for the original multiplication is reported
    in ``notes`` without affecting the verdict.
    """
    rep = Report("noncommutative Poisson structure")
    if pi.arity != 2:
        rep.record("arity 2", (), pi.arity, 2)
        return rep
    base = HochschildInstance(inst.algebra, inst.pair, max_arity=4, max_degree=1, check_inputs=False)
    O = base.operad
    lhs, rhs = O.comp(pi, 1, pi), O.comp(pi, 2, pi)
    d = inst.algebra.dim
    for args in itertools.product(range(d), repeat=3):
        rep.expect("pi o_1 pi = pi o_2 pi", args, lhs(*args), rhs(*args))
    rep.expect("pi(1, 1) = 1", (0, 0), pi(0, 0), {0: 1})
    one = O.one
    for a in range(d):
        rep.expect("unit law pi(1, a) = a", (0, a), pi(0, a), one(a))
        rep.expect("unit law pi(a, 1) = a", (a, 0), pi(a, 0), one(a))
    rep.notes["hochschild 2-cocycle"] = not O.delta(pi)
    return rep


# -- closed forms -------------------------------------------------------------

def _gpi(inst, pi, a, b):
    return inst.operad.to_A(pi.values.get((a, b), {}))


def brylinski_boundary(inst: HochschildInstance, pi: Cochain, x: Chain) -> Chain:
    """sum_{i<n} (-1)^i (.., gamma pi(a_i, a_{i+1}), ..) + (-1)^n (gamma pi(a_n, a_0), a_1, .., a_{n-1})."""
    n = x.degree
    out: dict = {}
    if n >= 1:
        for a, c in x.terms.items():
            for i in range(n):
                for k, v in _gpi(inst, pi, a[i], a[i + 1]).items():
                    acc(out, a[:i] + (k,) + a[i + 2:], parity(i) * c * v)
            for k, v in _gpi(inst, pi, a[n], a[0]).items():
                acc(out, (k,) + a[1:n], parity(n) * c * v)
    return Chain(n - 1, out, check=False)


def koszul_coboundary(inst: HochschildInstance, pi: Cochain, phi: Cochain) -> Cochain:
    """pi(gamma phi(a_1..a_p), a_{p+1}) + (-1)^{p-1} pi(a_1, gamma phi(a_2..a_{p+1}))
    + sum_i (-1)^{i+p-1} phi(.., gamma pi(a_i, a_{i+1}), ..)."""
    p = phi.arity
    to_A = inst.operad.to_A

    def pi_vec(u: dict, v: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            for j, e in v.items():
                add_scaled(out, pi.values.get((i, j), {}), c * e)
        return out

    def value(*a):
        out: dict = {}
        g = to_A(phi.values.get(a[:p], {}))
        if g:
            add_scaled(out, pi_vec(g, {a[p]: 1}), 1)
        g = to_A(phi.values.get(a[1:], {}))
        if g:
            add_scaled(out, pi_vec({a[0]: 1}, g), parity(p - 1))
        for i in range(1, p + 1):
            for k, c in _gpi(inst, pi, a[i - 1], a[i]).items():
                add_scaled(out, phi.values.get(a[:i - 1] + (k,) + a[i + 1:], {}), parity(i + p - 1) * c)
        return out

    return cochain_from_function(inst.algebra, p + 1, value, inst.operad.codim)


def poisson_cup(inst: HochschildInstance, pi: Cochain, phi: Cochain, psi: Cochain) -> Cochain:
    """(phi cup_pi psi)(a_1..a_{q+p}) = pi(gamma psi(a_1..a_q), gamma phi(a_{q+1}..a_{q+p}))."""
    p, q = phi.arity, psi.arity
    to_A = inst.operad.to_A

    def value(*a):
        u = to_A(psi.values.get(a[:q], {}))
        v = to_A(phi.values.get(a[q:], {}))
        out: dict = {}
        for i, c in u.items():
            for j, e in v.items():
                add_scaled(out, pi.values.get((i, j), {}), c * e)
        return out

    return cochain_from_function(inst.algebra, p + q, value, inst.operad.codim)


def poisson_cap(inst: HochschildInstance, pi: Cochain, phi: Cochain, x: Chain) -> Chain:
    """(gamma pi(a_0, gamma phi(a_1..a_p)), a_{p+1}, .., a_n)."""
    p, n = phi.arity, x.degree
    to_A = inst.operad.to_A
    out: dict = {}
    if p <= n:
        for a, c in x.terms.items():
            g = to_A(phi.values.get(a[1:p + 1], {}))
            for j, e in g.items():
                for k, v in _gpi(inst, pi, a[0], j).items():
                    acc(out, (k,) + a[p + 1:], c * e * v)
    return Chain(n - p, out, check=False)


def brylinski_homotopy_check(inst: HochschildInstance, pi: Cochain, chains) -> Report:
    """b^pi = -L^pi_pi on the given chains (Lie derivative computed in the pi-operad)."""
    rep = Report("Brylinski boundary as a Lie derivative")
    M = inst.module
    if inst.operad.mu != pi:
        raise PreconditionError("instance multiplication differs from pi")
    for k, x in enumerate(chains):
        rep.expect("b^pi = -L_pi", {"x": k, "n": x.degree}, brylinski_boundary(inst, pi, x), -lie(M, pi, x))
    return rep


# -- examples and search ------------------------------------------------------

def pi_from_square(A: Algebra, square: dict, pair: CoefficientPair | None = None) -> Cochain:
    """2-cochain equal to the product of A except on (b_1, b_1), where it is ``square``.

    On k[x]/(x^2) with ``square = {0: 1}`` this is the product of k[x]/(x^2 - 1).
    """
    pair = pair or identity_pair(A)

    def value(i, j):
        if (i, j) == (1, 1):
            return dict(square)
        return apply_map(pair.eta, A.table[i][j])

    return cochain_from_function(A, 2, value, pair.V.dim)


def search_poisson_structures(A: Algebra, coefficients=(-1, 0, 1), limit: int = 10000):
    """Brute force over 2-cochains with the unit law built in and values on
    reduced basis pairs drawn from ``coefficients``.

    Returns ``[(pi, is_hochschild_cocycle)]`` for every candidate that passes
    :func:`validate_poisson`.  Exploration only; no classification is claimed.
    """
    d = A.dim
    F = A.field
    inst = HochschildInstance(A, max_arity=4, max_degree=1)
    slots = [(i, j) for i in range(1, d) for j in range(1, d)]
    found = []
    vectors = list(itertools.product(coefficients, repeat=d))
    for count, choice in enumerate(itertools.product(vectors, repeat=len(slots))):
        if count >= limit:
            break
        values = {}
        for i in range(d):
            values[(0, i)] = {i: F.one}
            values[(i, 0)] = {i: F.one}
        for (i, j), vec in zip(slots, choice):
            values[(i, j)] = {k: F(c) for k, c in enumerate(vec) if c}
        pi = Cochain(2, d, values)
        rep = validate_poisson(inst, pi)
        if rep.ok:
            found.append((pi, rep.notes["hochschild 2-cocycle"]))
    return found
