"""Operads with multiplication and their Gerstenhaber structure.

:class:`OperadWithMultiplication` fixes the contract a concrete instance has
to honour (bases of the graded pieces, the partial compositions on their
nonvanishing range, the three distinguished elements).  Everything else is
derived here: the pre-Lie product, the bracket, the cup product, the
coboundary and the codegeneracies.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod

from .errors import CapacityError
from .report import Report


def parity(n: int) -> int:
    """(-1)^n as an int; works for negative exponents."""
    return -1 if n % 2 else 1


class OperadWithMultiplication(ABC):
    """Non-symmetric operad O with mu in O(2), unit e in O(0), identity in O(1).

    Elements must support ``+``, ``-``, unary ``-``, ``.scale(c)`` and carry an
    ``arity`` attribute.  ``max_arity`` bounds the materialized pieces.
    """

    max_arity: int = 6

    # -- contract -----------------------------------------------------------

    @abstractmethod
    def zero(self, arity: int):
        ...

    @abstractmethod
    def basis(self, arity: int):
        """Iterable over a basis of O(arity)."""

    @abstractmethod
    def _comp(self, phi, i: int, psi):
        """phi o_i psi for 1 <= i <= arity(phi); no range handling needed."""

    @property
    @abstractmethod
    def mu(self):
        ...

    @property
    @abstractmethod
    def one(self):
        ...

    @property
    @abstractmethod
    def e(self):
        ...

    def dim(self, arity: int) -> int:
        return sum(1 for _ in self.basis(arity))

    # -- derived structure ----------------------------------------------------

    def _check_cap(self, arity):
        if arity > self.max_arity:
            raise CapacityError(f"arity {arity} exceeds the operad cap {self.max_arity}")

    def comp(self, phi, i: int, psi):
        p, q = phi.arity, psi.arity
        self._check_cap(p + q - 1)
        if p == 0 or i < 1 or i > p:
            return self.zero(p + q - 1)
        return self._comp(phi, i, psi)

    def bar_circ(self, phi, psi):
        p, q = phi.arity, psi.arity
        out = self.zero(p + q - 1)
        self._check_cap(p + q - 1)
        for i in range(1, p + 1):
            term = self._comp(phi, i, psi)
            out = out + term if parity((q - 1) * (i - 1)) > 0 else out - term
        return out

    def bracket(self, phi, psi):
        p, q = phi.arity, psi.arity
        left = self.bar_circ(phi, psi)
        right = self.bar_circ(psi, phi)
        return left - right if parity((p - 1) * (q - 1)) > 0 else left + right

    def cup(self, phi, psi):
        return self.comp(self.comp(self.mu, 2, phi), 1, psi)

    def delta(self, phi):
        return self.bracket(self.mu, phi)

    def codegeneracy(self, phi, j: int):
        if not 0 <= j < phi.arity:
            raise IndexError(f"codegeneracy index {j} out of range for arity {phi.arity}")
        return self.comp(phi, j + 1, self.e)

    def is_normalized(self, phi) -> bool:
        return all(not self.codegeneracy(phi, j) for j in range(phi.arity))

    def normalized_basis(self, arity: int):
        """Basis of the normalized cochains of this arity, if the instance knows one."""
        return [phi for phi in self.basis(arity) if self.is_normalized(phi)]


def check_operad_axioms(O: OperadWithMultiplication, max_arity: int = 3, *,
                        arities=None) -> Report:
    """Exhaustive sweep of the operad axioms on basis elements.

    Covers the vanishing conventions, the three-case associativity for
    ``p, q, r <= max_arity``, two-sided unitality of the identity, and the
    relations tying mu and e to the identity.
    """
    rep = Report("operad axioms")
    arities = range(max_arity + 1) if arities is None else arities
    bases = {a: list(O.basis(a)) for a in arities}
    one = O.one

    for p in arities:
        for phi in bases[p]:
            for q in arities:
                for psi in bases[q]:
                    for i in (0, p + 1):
                        rep.expect("vanishing: phi o_i psi = 0 if p < i or p = 0",
                                   (p, q, i), O.comp(phi, i, psi), 0)
        for phi in bases[p]:
            rep.expect("unitality: 1 o_1 phi = phi", (p,), O.comp(one, 1, phi), phi)
            for i in range(1, p + 1):
                rep.expect("unitality: phi o_i 1 = phi", (p, i), O.comp(phi, i, one), phi)

    mu, e = O.mu, O.e
    rep.expect("mu o_1 mu = mu o_2 mu", (), O.comp(mu, 1, mu), O.comp(mu, 2, mu))
    rep.expect("mu o_1 e = 1", (1,), O.comp(mu, 1, e), one)
    rep.expect("mu o_2 e = 1", (2,), O.comp(mu, 2, e), one)

    for p, q, r in itertools.product(arities, repeat=3):
        if p == 0:
            continue
        for a, phi in enumerate(bases[p]):
            for b, psi in enumerate(bases[q]):
                inner = [O._comp(phi, i, psi) for i in range(1, p + 1)]
                for c, chi in enumerate(bases[r]):
                    for i in range(1, p + 1):
                        left_i = inner[i - 1]
                        for j in range(1, p + q):
                            lhs = O.comp(left_i, j, chi)
                            if j < i:
                                rhs = O.comp(O.comp(phi, j, chi), i + r - 1, psi)
                                case = "j < i"
                            elif j < q + i:
                                rhs = O.comp(phi, i, O.comp(psi, j - i + 1, chi))
                                case = "i <= j < q + i"
                            else:
                                rhs = O.comp(O.comp(phi, j - q + 1, chi), i, psi)
                                case = "j >= q + i"
                            rep.expect(f"associativity ({case})",
                                       {"arities": (p, q, r), "basis": (a, b, c), "i": i, "j": j}, lhs, rhs)
    return rep
