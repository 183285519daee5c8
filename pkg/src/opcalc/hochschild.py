"""Hochschild cochains C^*(A, V) as an operad with multiplication and Hochschild
chains C_*(A, A) as a cyclic unital comp module over it.

Cochain values live in the coefficient algebra V; wherever a value has to be
fed back into A the bimodule map ``gamma`` is applied.  The multiplication,
the identity and the unit are ``mu(a, b) = eta(ab)``, ``one(a) = eta(a)`` and
``e = 1_V`` with ``eta`` the inverse of ``gamma``.
"""

from __future__ import annotations

import hashlib
import itertools
import json

from .algebra import (Algebra, CoefficientPair, apply_map, cochain_from_function,
                      identity_pair, validate_pair)
from .compmodule import CyclicCompModule
from .errors import InputError, PreconditionError
from .operad import OperadWithMultiplication, parity
from .tensors import Chain, Cochain, acc, add_scaled


class HochschildOperad(OperadWithMultiplication):
    def __init__(self, A: Algebra, pair: CoefficientPair | None = None, *,
                 max_arity: int = 6, mu: Cochain | None = None):
        self.algebra = A
        self.pair = pair or identity_pair(A)
        if self.pair.eta is None:
            raise PreconditionError("gamma must be invertible to define mu, 1 and e on C^*(A, V)")
        self.max_arity = max_arity
        self.codim = self.pair.V.dim
        self._gamma = self.pair.gamma
        self._identity_gamma = all(g == {k: 1} for k, g in enumerate(self._gamma)) and self.codim == A.dim
        eta = self.pair.eta
        self._mu = mu if mu is not None else cochain_from_function(
            A, 2, lambda i, j: apply_map(eta, A.table[i][j]), self.codim)
        if self._mu.arity != 2 or self._mu.codim != self.codim:
            raise InputError("the multiplication must be a 2-cochain with values in V")
        self._one = cochain_from_function(A, 1, lambda i: eta[i], self.codim)
        self._e = Cochain(0, self.codim, {(): {0: A.field.one}}, check=False)
        self._bases: dict = {}

    # contract ----------------------------------------------------------------

    @property
    def mu(self):
        return self._mu

    @property
    def one(self):
        return self._one

    @property
    def e(self):
        return self._e

    def zero(self, arity: int) -> Cochain:
        return Cochain(arity, self.codim)

    def basis(self, arity: int):
        if arity not in self._bases:
            d = self.algebra.dim
            self._bases[arity] = [Cochain.basis(args, k, self.codim)
                                  for args in itertools.product(range(d), repeat=arity)
                                  for k in range(self.codim)]
        return self._bases[arity]

    def normalized_basis(self, arity: int):
        return [phi for phi in self.basis(arity) if all(a != 0 for a in next(iter(phi.values)))]

    def to_A(self, w: dict) -> dict:
        """gamma applied to a V-vector."""
        if self._identity_gamma:
            return w
        return apply_map(self._gamma, w)

    def _comp(self, phi: Cochain, i: int, psi: Cochain) -> Cochain:
        out: dict = {}
        cut = i - 1
        for s, w in psi.values.items():
            g = self.to_A(w)
            for t, w2 in phi.values.items():
                c = g.get(t[cut])
                if c is None:
                    continue
                key = t[:cut] + s + t[i:]
                cur = out.get(key)
                if cur is None:
                    cur = out[key] = {}
                add_scaled(cur, w2, c)
                if not cur:
                    del out[key]
        return Cochain(phi.arity + psi.arity - 1, self.codim, out, check=False)

    # extras ------------------------------------------------------------------

    def is_normalized(self, phi) -> bool:
        return all(0 not in args for args in phi.values)

    def with_multiplication(self, mu: Cochain) -> "HochschildOperad":
        return HochschildOperad(self.algebra, self.pair, max_arity=self.max_arity, mu=mu)


class HochschildChains(CyclicCompModule):
    """C_n(A, A) = A^{(x)(n+1)} with the substitution maps and the cyclic rotation."""

    def __init__(self, operad: HochschildOperad, *, max_degree: int = 6):
        self.operad = operad
        self.algebra = operad.algebra
        self.max_degree = max_degree
        self._bases: dict = {}

    def basis(self, n: int):
        if n not in self._bases:
            self._bases[n] = [Chain.basis(k) for k in itertools.product(range(self.algebra.dim), repeat=n + 1)]
        return self._bases[n]

    def normalized_basis(self, n: int):
        return [x for x in self.basis(n) if 0 not in next(iter(x.terms))[1:]]

    def _bullet(self, phi: Cochain, i: int, x: Chain) -> Chain:
        p = phi.arity
        out: dict = {}
        vals = phi.values
        to_A = self.operad.to_A
        stop = i + p
        for key, c in x.terms.items():
            w = vals.get(key[i:stop])
            if not w:
                continue
            head, tail = key[:i], key[stop:]
            for k, g in to_A(w).items():
                acc(out, head + (k,) + tail, c * g)
        return Chain(x.degree - p + 1, out, check=False)

    def _t(self, x: Chain) -> Chain:
        return Chain(x.degree, {k[-1:] + k[:-1]: c for k, c in x.terms.items()}, check=False)

    def normalize(self, x: Chain) -> Chain:
        return Chain(x.degree, {k: c for k, c in x.terms.items() if 0 not in k[1:]}, check=False)

    def is_normalized(self, x: Chain) -> bool:
        return all(0 not in k[1:] for k in x.terms)


class HochschildInstance:
    """The pair (C^*(A, V), C_*(A, A)) with caps on arity and chain degree."""

    def __init__(self, A: Algebra, pair: CoefficientPair | None = None, *,
                 max_arity: int = 6, max_degree: int = 6, mu: Cochain | None = None,
                 check_inputs: bool = True):
        if check_inputs:
            rep = A.validate()
            if not rep.ok:
                raise PreconditionError(f"algebra is not unital associative: {rep}")
            if pair is not None:
                prep = validate_pair(A, pair)
                if not prep.ok:
                    raise PreconditionError(f"coefficient pair rejected: {prep}")
        self.algebra = A
        self.field = A.field
        self.operad = HochschildOperad(A, pair, max_arity=max_arity, mu=mu)
        self.module = HochschildChains(self.operad, max_degree=max_degree)
        self.pair = self.operad.pair

    @property
    def max_degree(self):
        return self.module.max_degree

    @property
    def max_arity(self):
        return self.operad.max_arity

    def fingerprint(self) -> str:
        data = {
            "A": self.algebra.to_json(),
            "V": self.pair.V.to_json(),
            "gamma": [sorted((k, self.field.format(c)) for k, c in g.items()) for g in self.pair.gamma],
            "mu": sorted((str(k), self.field.format(c)) for k, c in self.operad.mu.flat().items()),
        }
        return hashlib.sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()[:16]

    def cochain(self, arity: int, f) -> Cochain:
        return cochain_from_function(self.algebra, arity, f, self.operad.codim)

    def element(self, vec: dict) -> Cochain:
        """A zero-cochain with the given value in V."""
        return Cochain(0, self.operad.codim, {(): dict(vec)})


def build_hochschild(A: Algebra, pair: CoefficientPair | None = None, *,
                     max_arity: int = 6, max_degree: int = 6) -> HochschildInstance:
    return HochschildInstance(A, pair, max_arity=max_arity, max_degree=max_degree)


def euler_derivation(A: Algebra, weights=None) -> Cochain:
    """Derivation acting on basis element b_i by the scalar ``weights[i]``.

    With the default weights (0, 1, 1, ...) on k[x]/(x^2) this is E(1) = 0, E(x) = x.
    """
    weights = weights or [0] + [1] * (A.dim - 1)
    return cochain_from_function(A, 1, lambda i: {i: A.field(weights[i])} if weights[i] else {})


# -- closed-form evaluations used to cross-check the generic calculus -------

def _gphi(inst: HochschildInstance, phi: Cochain, block) -> dict:
    return inst.operad.to_A(phi.values.get(tuple(block), {}))


def _emit(out: dict, prefix, g: dict, suffix, c):
    for k, v in g.items():
        acc(out, tuple(prefix) + (k,) + tuple(suffix), c * v)


def closed_form_cap(inst: HochschildInstance, phi: Cochain, x: Chain) -> Chain:
    """(a0 gamma(phi(a1..ap)), a_{p+1}, ..., a_n)."""
    A = inst.algebra
    p, n = phi.arity, x.degree
    out: dict = {}
    if p <= n:
        for a, c in x.terms.items():
            g = _gphi(inst, phi, a[1:p + 1])
            if g:
                _emit_vec(out, A.mul({a[0]: 1}, g), a[p + 1:], c)
    return Chain(n - p, out, check=False)


def _emit_vec(out, vec, suffix, c):
    for k, v in vec.items():
        acc(out, (k,) + tuple(suffix), c * v)


def closed_form_lie(inst: HochschildInstance, phi: Cochain, x: Chain) -> Chain:
    """Both sums written out on indices: insertion at slot i, then wrapped blocks."""
    p, n = phi.arity, x.degree
    out: dict = {}
    if p <= n + 1:
        for a, c in x.terms.items():
            for i in range(1, n - p + 2):
                g = _gphi(inst, phi, a[i:i + p])
                if g:
                    _emit(out, a[:i], g, a[i + p:], c * parity((p - 1) * (i - 1)))
            for i in range(1, p + 1):
                block = a[n - i + 2:] + a[:p - i + 1] if i > 1 else a[:p]
                g = _gphi(inst, phi, block)
                if g:
                    _emit(out, (), g, a[p - i + 1:n - i + 2], c * parity(n * (i - 1) + p - 1))
    return Chain(n - p + 1, out, check=False)


def closed_form_S(inst: HochschildInstance, phi: Cochain, x: Chain) -> Chain:
    """(1, a_{n-j+2}..a_n, a_0..a_{i-j}, gamma phi(a_{i-j+1}..a_{i-j+p}), .., a_{n-j+1})."""
    p, n = phi.arity, x.degree
    out: dict = {}
    if p <= n:
        for a, c in x.terms.items():
            for j in range(1, n - p + 2):
                wrapped = a[n - j + 2:] if j > 1 else ()
                for i in range(j, n - p + 2):
                    lo = i - j + 1
                    g = _gphi(inst, phi, a[lo:lo + p])
                    if g:
                        sign = parity(n * (j - 1) + (p - 1) * (i - 1))
                        _emit(out, (0,) + wrapped + a[:lo], g, a[lo + p:n - j + 2], c * sign)
    return Chain(n - p + 2, out, check=False)


def closed_form_cup(inst: HochschildInstance, phi: Cochain, psi: Cochain) -> Cochain:
    """(phi cup psi)(a_1..a_{p+q}) = eta(gamma psi(a_1..a_q) * gamma phi(a_{q+1}..a_{q+p}))."""
    A, eta = inst.algebra, inst.pair.eta
    p, q = phi.arity, psi.arity

    def value(*args):
        left = _gphi(inst, psi, args[:q])
        right = _gphi(inst, phi, args[q:])
        return apply_map(eta, A.mul(left, right)) if left and right else {}

    return cochain_from_function(A, p + q, value, inst.operad.codim)


def standard_coboundary(inst: HochschildInstance, phi: Cochain) -> Cochain:
    """Textbook Hochschild coboundary with values in V (bimodule structure through gamma)."""
    A, eta = inst.algebra, inst.pair.eta
    p = phi.arity

    def value(*a):
        out: dict = {}
        add_scaled(out, apply_map(eta, A.mul({a[0]: 1}, _gphi(inst, phi, a[1:]))), 1)
        for i in range(1, p + 1):
            prod = A.table[a[i - 1]][a[i]]
            for k, c in prod.items():
                add_scaled(out, phi.values.get(a[:i - 1] + (k,) + a[i + 1:], {}), parity(i) * c)
        add_scaled(out, apply_map(eta, A.mul(_gphi(inst, phi, a[:p]), {a[p]: 1})), parity(p + 1))
        return out

    return cochain_from_function(A, p + 1, value, inst.operad.codim)


def delta_vs_standard(inst: HochschildInstance, phi: Cochain):
    """``(ok, delta phi, (-1)^{p+1} delta_std phi)``."""
    lhs = inst.operad.delta(phi)
    rhs = standard_coboundary(inst, phi).scale(parity(phi.arity + 1))
    return lhs == rhs, lhs, rhs
