"""Cyclic unital comp modules over an operad with multiplication.

A concrete module supplies bases of M(n), the comp module maps on their
standard range, the cyclic operator and the projection onto normalized
chains.  The simplicial structure, the Hochschild boundary ``b``, the norm
``N``, the extra degeneracy and both versions of Connes' ``B`` are derived.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod

from . import mutation
from .errors import CapacityError, RefusedError
from .operad import OperadWithMultiplication, parity
from .report import Report
from .tensors import Chain, acc


def combine(degree: int, pairs) -> Chain:
    """``sum c * x`` over ``(c, x)`` pairs, as one chain of the given degree."""
    out: dict = {}
    for c, x in pairs:
        if not c:
            continue
        for k, v in x.terms.items():
            acc(out, k, c * v)
    return Chain(degree, out, check=False)


class CyclicCompModule(ABC):
    """Graded module M(n) with maps phi . _i x (i >= 0) and a cyclic operator t."""

    operad: OperadWithMultiplication
    max_degree: int = 6

    # -- contract -----------------------------------------------------------

    @abstractmethod
    def basis(self, n: int):
        ...

    @abstractmethod
    def _bullet(self, phi, i: int, x: Chain) -> Chain:
        """phi . _i x for 1 <= i <= n-p+1, or i = 0 and p <= n+1."""

    @abstractmethod
    def _t(self, x: Chain) -> Chain:
        ...

    @abstractmethod
    def normalize(self, x: Chain) -> Chain:
        """Projection killing the degenerate part (images of s_j, j >= 0)."""

    def zero(self, n: int) -> Chain:
        return Chain(n)

    def is_normalized(self, x: Chain) -> bool:
        return self.normalize(x) == x

    def normalized_basis(self, n: int):
        return [x for x in self.basis(n) if self.normalize(x) == x]

    # -- comp module maps with range conventions ----------------------------

    def _cap(self, n):
        if n > self.max_degree:
            raise CapacityError(f"chain degree {n} exceeds the module cap {self.max_degree}")

    def bullet(self, phi, i: int, x: Chain) -> Chain:
        p, n = phi.arity, x.degree
        out_deg = n - p + 1
        self._cap(out_deg)
        if i == 0:
            if p > n + 1:
                return Chain(out_deg)
        elif i < 0 or i > n - p + 1:
            return Chain(out_deg)
        if not x.terms:
            return Chain(out_deg)
        return self._bullet(phi, i, x)

    def t(self, x: Chain) -> Chain:
        if x.degree <= 0:
            return x
        return self._t(x)

    def t_power(self, x: Chain, k: int) -> Chain:
        n = x.degree
        if n <= 0 or not x.terms:
            return x
        for _ in range(k):
            x = self._t(x)
        return x

    # -- simplicial structure ------------------------------------------------

    def face(self, i: int, x: Chain) -> Chain:
        n = x.degree
        if not 0 <= i <= n:
            raise IndexError(f"face index {i} out of range 0..{n}")
        mu = self.operad.mu
        if i < n:
            return self.bullet(mu, i, x)
        return self.bullet(mu, 0, self.t(x))

    def degeneracy(self, j: int, x: Chain) -> Chain:
        n = x.degree
        if not -1 <= j <= n:
            raise IndexError(f"degeneracy index {j} out of range -1..{n}")
        return self.bullet(self.operad.e, j + 1, x)

    def extra_degeneracy(self, x: Chain) -> Chain:
        return self.bullet(self.operad.e, 0, x)

    # -- differentials --------------------------------------------------------

    def b(self, x: Chain) -> Chain:
        n = x.degree
        if n <= 0:
            return Chain(n - 1)
        mu = self.operad.mu
        pairs = []
        for i in range(n):
            pairs.append((parity(i) * mutation.sign("b", i, "face"), self.bullet(mu, i, x)))
        pairs.append((parity(n) * mutation.sign("b", n, "last"), self.bullet(mu, 0, self.t(x))))
        return combine(n - 1, pairs)

    def norm(self, x: Chain) -> Chain:
        n = x.degree
        pairs = []
        y = x
        for i in range(n + 1):
            pairs.append((parity(i * n) * mutation.sign("B", i), y))
            y = self.t(y)
        return combine(n, pairs)

    def B_full(self, x: Chain) -> Chain:
        """(id - tau) s_{-1} N with the signed rotation tau = (-1)^{n+1} t on M(n+1).

        With the unsigned t the square of this operator is nonzero already on M(0).
        """
        y = self.extra_degeneracy(self.norm(x))
        ty = self.t(y)
        return y - ty if x.degree % 2 else y + ty

    def B(self, x: Chain) -> Chain:
        """Connes' operator on the normalized complex: sum (-1)^{in} e ._0 t^i x, projected."""
        n = x.degree
        self._cap(n + 1)
        e = self.operad.e
        pairs = []
        y = x
        for i in range(n + 1):
            pairs.append((parity(i * n) * mutation.sign("B", i), self.bullet(e, 0, y)))
            y = self.t(y)
        return self.normalize(combine(n + 1, pairs))

    def b_normalized(self, x: Chain) -> Chain:
        return self.normalize(self.b(x))

    def is_cyclic(self, max_degree: int) -> bool:
        return all(self._t_order_ok(x) for n in range(max_degree + 1) for x in self.basis(n))

    def _t_order_ok(self, x):
        y = x
        for _ in range(x.degree + 1):
            y = self.t(y)
        return y == x


def _valid_indices(p: int, n: int):
    """Indices i for which phi . _i is defined on M(n), phi of arity p."""
    out = [0] if p <= n + 1 else []
    out.extend(range(1, n - p + 2))
    return out


def check_comp_module_axioms(M: CyclicCompModule, max_degree: int = 4, max_arity: int = 2) -> Report:
    """Exhaustive sweep of the comp module relations (including index 0),
    unitality, compatibility with t and t^{n+1} = id on basis elements.

    ``notes["status"]`` is ``"cyclic"`` or ``"para-cyclic"``.
    """
    rep = Report("comp module axioms")
    O = M.operad
    ops = {p: list(O.basis(p)) for p in range(max_arity + 1)}
    one = O.one
    cyclic = True
    for n in range(max_degree + 1):
        xs = list(M.basis(n))
        for xi, x in enumerate(xs):
            for i in range(n + 1):
                rep.expect("unitality: 1 ._i x = x", {"n": n, "x": xi, "i": i}, M.bullet(one, i, x), x)
            y = x
            for _ in range(n + 1):
                y = M.t(y)
            rep.checked += 1
            if y != x:
                # para-cyclic is a legitimate structure: report it, do not fail
                if cyclic:
                    rep.notes["cyclicity witness"] = {"n": n, "x": xi, "t^{n+1}(x)": str(y)}
                cyclic = False
            for p in ops:
                for a, phi in enumerate(ops[p]):
                    for i in range(0, n - p + 1):
                        rep.expect("t(phi ._i x) = phi ._{i+1} t(x)", {"n": n, "p": p, "phi": a, "x": xi, "i": i},
                                   M.t(M.bullet(phi, i, x)), M.bullet(phi, i + 1, M.t(x)))
            for q in ops:
                for c, psi in enumerate(ops[q]):
                    for j in _valid_indices(q, n):
                        y = M.bullet(psi, j, x)
                        m = n - q + 1
                        for p in ops:
                            for a, phi in enumerate(ops[p]):
                                for i in _valid_indices(p, m):
                                    lhs = M.bullet(phi, i, y)
                                    if j < i:
                                        rhs = M.bullet(psi, j, M.bullet(phi, i + q - 1, x))
                                        case = "j < i"
                                    elif p > 0 and j - p < i:
                                        rhs = M.bullet(O.comp(phi, j - i + 1, psi), i, x)
                                        case = "j - p < i <= j"
                                    elif p > 0:
                                        rhs = M.bullet(psi, j - p + 1, M.bullet(phi, i, x))
                                        case = "0 <= i <= j - p"
                                    else:
                                        rhs = M.bullet(psi, j + 1, M.bullet(phi, i, x))
                                        case = "p = 0, 0 <= i <= j"
                                    rep.expect(f"comp module relation ({case})",
                                               {"n": n, "p": p, "q": q, "phi": a, "psi": c, "x": xi, "i": i, "j": j},
                                               lhs, rhs)
    rep.notes["status"] = "cyclic" if cyclic else "para-cyclic"
    return rep


def check_simplicial_identities(M: CyclicCompModule, max_degree: int = 4, *, chains=None) -> Report:
    """Simplicial and cyclic identities of the derived faces, degeneracies and t,
    plus b^2 = 0, B^2 = 0, bB + Bb = 0 (normalized) and b-stability of degenerate chains.

    Refuses on para-cyclic modules: the last face is only meaningful when t^{n+1} = id.
    """
    if not M.is_cyclic(max_degree):
        raise RefusedError("module is only para-cyclic (t^{n+1} != id); cyclic identities are not defined")
    rep = Report("simplicial and cyclic identities")
    d, s, t = M.face, M.degeneracy, M.t
    for n in range(max_degree + 1):
        xs = list(M.basis(n)) if chains is None else [x for x in chains if x.degree == n]
        for xi, x in enumerate(xs):
            idx = {"n": n, "x": xi}
            for j in range(n + 1 if n >= 2 else 0):
                for i in range(j):
                    rep.expect("d_i d_j = d_{j-1} d_i (i < j)", {**idx, "i": i, "j": j},
                               d(i, d(j, x)), d(j - 1, d(i, x)))
            for j in range(n + 1):
                sx = s(j, x)
                for i in range(n + 2):
                    lhs = d(i, sx)
                    if i < j:
                        rhs, law = s(j - 1, d(i, x)), "d_i s_j = s_{j-1} d_i (i < j)"
                    elif i in (j, j + 1):
                        rhs, law = x, "d_j s_j = d_{j+1} s_j = id"
                    else:
                        rhs, law = s(j, d(i - 1, x)), "d_i s_j = s_j d_{i-1} (i > j+1)"
                    rep.expect(law, {**idx, "i": i, "j": j}, lhs, rhs)
                for i in range(j + 1):
                    rep.expect("s_i s_j = s_{j+1} s_i (i <= j)", {**idx, "i": i, "j": j},
                               s(i, s(j, x)), s(j + 1, s(i, x)))
            tx = t(x)
            for i in range(1, n + 1):
                rep.expect("d_i t = t d_{i-1}", {**idx, "i": i}, d(i, tx), t(d(i - 1, x)))
                rep.expect("s_i t = t s_{i-1}", {**idx, "i": i}, s(i, tx), t(s(i - 1, x)))
            if n >= 1:
                rep.expect("d_0 t = d_n", idx, d(0, tx), d(n, x))
            rep.expect("s_0 t = t^2 s_n", idx, s(0, tx), t(t(s(n, x))))
            rep.expect("e ._0 x = t s_n x", idx, M.extra_degeneracy(x), t(s(n, x)))
            y = x
            for _ in range(n + 1):
                y = t(y)
            rep.expect("t^{n+1} = id", idx, y, x)

            rep.expect("b b = 0", idx, M.b(M.b(x)), 0)
            rep.expect("B B = 0 (full)", idx, M.B_full(M.B_full(x)), 0)
            if M.is_normalized(x):
                rep.expect("B B = 0 (normalized)", idx, M.B(M.B(x)), 0)
                rep.expect("b B + B b = 0 (normalized)", idx, M.b_normalized(M.B(x)) + M.B(M.b_normalized(x)), 0)
            for j in range(n + 1):
                rep.expect("b preserves degenerate chains", {**idx, "j": j}, M.normalize(M.b(s(j, x))), 0)
    return rep
