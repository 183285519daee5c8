"""Cap product, Lie derivative and cyclic correction on a cyclic comp module,
graded operators with their commutators, and the identity checkers built on
top of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import mutation
from .compmodule import CyclicCompModule, combine
from .errors import PreconditionError, RefusedError
from .operad import parity
from .report import Report
from .tensors import Chain


# sign exponents of the three signed sums
def zeta(p: int, i: int) -> int:
    return (p - 1) * (i - 1)


def xi(n: int, p: int, i: int) -> int:
    return n * (i - 1) + p - 1


def theta(n: int, p: int, j: int, i: int) -> int:
    return n * (j - 1) + (p - 1) * (i - 1)


# -- the three operators along a cochain ------------------------------------

def cap(M: CyclicCompModule, phi, x: Chain, *, mu_phi=None) -> Chain:
    """iota_phi x = (mu o_2 phi) ._0 x; ``mu_phi`` may carry a precomputed mu o_2 phi."""
    O = M.operad
    if mu_phi is None:
        mu_phi = O.comp(O.mu, 2, phi)
    y = M.bullet(mu_phi, 0, x)
    return -y if mutation.sign("iota", 0) < 0 else y


def lie(M: CyclicCompModule, phi, x: Chain) -> Chain:
    p, n = phi.arity, x.degree
    if p > n + 1:
        return Chain(n - p + 1)
    pairs = []
    for i in range(1, n - p + 2):
        pairs.append((parity(zeta(p, i)) * mutation.sign("lie", ("zeta", i), "zeta"), M.bullet(phi, i, x)))
    y = x
    for i in range(1, p + 1):
        pairs.append((parity(xi(n, p, i)) * mutation.sign("lie", ("xi", i), "xi"), M.bullet(phi, 0, y)))
        y = M.t(y)
    return combine(n - p + 1, pairs)


def cyclic_correction(M: CyclicCompModule, phi, x: Chain) -> Chain:
    """S_phi x = sum_{j<=i} (-1)^theta e ._0 (phi ._i t^{j-1} x); zero for p > n."""
    p, n = phi.arity, x.degree
    if p > n:
        return Chain(n - p + 2)
    e = M.operad.e
    pairs = []
    y = x
    for j in range(1, n - p + 2):
        for i in range(j, n - p + 2):
            s = parity(theta(n, p, j, i)) * mutation.sign("S", (j, i))
            pairs.append((s, M.bullet(e, 0, M.bullet(phi, i, y))))
        y = M.t(y)
    return combine(n - p + 2, pairs)


# -- graded operators ----------------------------------------------------------

@dataclass
class GradedOperator:
    """Linear operator on chains, possibly with several homogeneous parts.

    ``parts`` maps a degree shift to a function; ``parity`` is the operator
    degree entering commutator signs (p for cap and S, p-1 for the Lie
    derivative, 1 for b and B).  Every application checks the output degree.
    """

    name: str
    parity: int
    parts: dict = field(default_factory=dict)

    @classmethod
    def single(cls, name: str, shift: int, parity_: int, fn: Callable) -> "GradedOperator":
        return cls(name, parity_, {shift: fn})

    def apply(self, x: Chain) -> dict:
        """``{degree: chain}`` of the nonzero homogeneous components of the image."""
        out: dict = {}
        for shift, fn in self.parts.items():
            y = fn(x)
            if y.degree != x.degree + shift:
                raise AssertionError(f"{self.name}: degree {y.degree} != {x.degree} + {shift}")
            if y:
                d = y.degree
                out[d] = out[d] + y if d in out else y
                if not out[d]:
                    del out[d]
        return out

    def __call__(self, x: Chain):
        if len(self.parts) == 1:
            (shift, fn), = self.parts.items()
            y = fn(x)
            if y.degree != x.degree + shift:
                raise AssertionError(f"{self.name}: degree {y.degree} != {x.degree} + {shift}")
            return y
        return self.apply(x)

    def _merge(self, other: "GradedOperator", sign: int, name: str) -> "GradedOperator":
        if (self.parity - other.parity) % 2:
            raise ValueError(f"cannot add operators of different parity: {self.name}, {other.name}")
        parts = dict(self.parts)
        for s, g in other.parts.items():
            if s in parts:
                f = parts[s]
                parts[s] = (lambda f, g: (lambda x: f(x) + g(x)) if sign > 0 else (lambda x: f(x) - g(x)))(f, g)
            else:
                parts[s] = g if sign > 0 else (lambda g: lambda x: -g(x))(g)
        return GradedOperator(name, self.parity, parts)

    def __add__(self, other):
        return self._merge(other, 1, f"({self.name} + {other.name})")

    def __sub__(self, other):
        return self._merge(other, -1, f"({self.name} - {other.name})")

    def __neg__(self):
        return GradedOperator(f"-{self.name}", self.parity, {s: (lambda f: lambda x: -f(x))(f) for s, f in self.parts.items()})

    def __mul__(self, other: "GradedOperator") -> "GradedOperator":
        """Composition: ``(F * G)(x) = F(G(x))``."""
        parts: dict = {}
        for sg, g in other.parts.items():
            for sf, f in self.parts.items():
                comp = (lambda f, g: lambda x: f(g(x)))(f, g)
                s = sf + sg
                if s in parts:
                    prev = parts[s]
                    parts[s] = (lambda a, b: lambda x: a(x) + b(x))(prev, comp)
                else:
                    parts[s] = comp
        return GradedOperator(f"{self.name}{other.name}", self.parity + other.parity, parts)


def commutator(F: GradedOperator, G: GradedOperator) -> GradedOperator:
    """[F, G] = FG - (-1)^{|F||G|} GF."""
    fg, gf = F * G, G * F
    out = fg - gf if parity(F.parity * G.parity) > 0 else fg + gf
    out.name = f"[{F.name},{G.name}]"
    return out


def _proj(M, fn, normalized):
    if not normalized:
        return fn
    return lambda x: M.normalize(fn(x))


def op_b(M, normalized=False):
    return GradedOperator.single("b", -1, 1, _proj(M, M.b, normalized))


def op_B(M):
    """Connes' operator on normalized chains."""
    return GradedOperator.single("B", 1, 1, M.B)


def op_cap(M, phi, normalized=False):
    mu_phi = M.operad.comp(M.operad.mu, 2, phi)
    return GradedOperator.single(f"iota[{phi.arity}]", -phi.arity, phi.arity,
                                 _proj(M, lambda x: cap(M, phi, x, mu_phi=mu_phi), normalized))


def op_lie(M, phi, normalized=False):
    p = phi.arity
    return GradedOperator.single(f"L[{p}]", 1 - p, p - 1, _proj(M, lambda x: lie(M, phi, x), normalized))


def op_S(M, phi, normalized=True):
    p = phi.arity
    return GradedOperator.single(f"S[{p}]", 2 - p, p, _proj(M, lambda x: cyclic_correction(M, phi, x), normalized))


def op_zero(name="0", parity_=0):
    return GradedOperator(name, parity_, {})


def operators_equal(F: GradedOperator, G: GradedOperator, x: Chain):
    lhs, rhs = F.apply(x), G.apply(x)
    return lhs == rhs, lhs, rhs


def _fmt(v):
    if isinstance(v, dict):
        return "{" + ", ".join(f"deg {d}: {c}" for d, c in sorted(v.items())) + "}" if v else "0"
    return str(v)


def _expect(rep, axiom, idx, F, G, x):
    ok, lhs, rhs = operators_equal(F, G, x)
    rep.checked += 1
    if not ok:
        rep.record(axiom, idx, _fmt(lhs), _fmt(rhs))
    return ok


# -- identity suites -----------------------------------------------------------

def check_dg_module(M: CyclicCompModule, phis, psis, chains) -> Report:
    """iota_phi iota_psi = iota_{phi cup psi} and [b, iota_phi] = iota_{delta phi}."""
    rep = Report("dg module: cap product")
    O = M.operad
    b = op_b(M)
    for a, phi in enumerate(phis):
        iphi = op_cap(M, phi)
        lhs_b = commutator(b, iphi)
        rhs_b = op_cap(M, O.delta(phi))
        for xi_, x in enumerate(chains):
            _expect(rep, "[b, iota_phi] = iota_{delta phi}", {"phi": a, "x": xi_, "n": x.degree}, lhs_b, rhs_b, x)
        for c, psi in enumerate(psis):
            F = iphi * op_cap(M, psi)
            G = op_cap(M, O.cup(phi, psi))
            for xi_, x in enumerate(chains):
                _expect(rep, "iota_phi iota_psi = iota_{phi cup psi}",
                        {"phi": a, "psi": c, "x": xi_, "n": x.degree}, F, G, x)
    return rep


def check_dg_lie(M: CyclicCompModule, phis, psis, chains) -> Report:
    """[L_phi, L_psi] = L_{phi, psi}, b = -L_mu and [b, L_phi] + L_{delta phi} = 0."""
    rep = Report("dg Lie module: Lie derivative")
    O = M.operad
    b = op_b(M)
    neg_lmu = -op_lie(M, O.mu)
    for xi_, x in enumerate(chains):
        _expect(rep, "b = -L_mu", {"x": xi_, "n": x.degree}, b, neg_lmu, x)
    for a, phi in enumerate(phis):
        lphi = op_lie(M, phi)
        F = commutator(b, lphi) + op_lie(M, O.delta(phi))
        zero = op_zero()
        for xi_, x in enumerate(chains):
            _expect(rep, "[b, L_phi] + L_{delta phi} = 0", {"phi": a, "x": xi_, "n": x.degree}, F, zero, x)
        for c, psi in enumerate(psis):
            lhs = commutator(lphi, op_lie(M, psi))
            rhs = op_lie(M, O.bracket(phi, psi))
            for xi_, x in enumerate(chains):
                _expect(rep, "[L_phi, L_psi] = L_{phi, psi}",
                        {"phi": a, "psi": c, "x": xi_, "n": x.degree}, lhs, rhs, x)
    return rep


def _require_cyclic(M, max_degree):
    if not M.is_cyclic(max_degree):
        raise RefusedError("the homotopy formula needs a cyclic module; this one is only para-cyclic")


def _require_normalized(M, phis, chains):
    O = M.operad
    for a, phi in enumerate(phis):
        if not O.is_normalized(phi):
            raise PreconditionError(f"cochain #{a} is not normalized")
    for xi_, x in enumerate(chains):
        if not M.is_normalized(x):
            raise PreconditionError(f"chain #{xi_} is not normalized")


def check_homotopy(M: CyclicCompModule, phis, chains) -> Report:
    """On normalized chains, for normalized phi:

    [B, S_phi] = 0;  L_phi = [B + b, iota_phi + S_phi] - iota_{delta phi} - S_{delta phi};
    [L_phi, B] = 0.
    """
    max_deg = max((x.degree for x in chains), default=0)
    _require_cyclic(M, max_deg)
    _require_normalized(M, phis, chains)
    rep = Report("homotopy formula")
    O = M.operad
    B = op_B(M)
    bB = op_b(M, normalized=True) + B
    zero = op_zero()
    for a, phi in enumerate(phis):
        S = op_S(M, phi)
        iS = op_cap(M, phi, normalized=True) + S
        dphi = O.delta(phi)
        lphi = op_lie(M, phi, normalized=True)
        rhs = commutator(bB, iS) - op_cap(M, dphi, normalized=True) - op_S(M, dphi)
        BS = commutator(B, S)
        LB = commutator(lphi, B)
        for xi_, x in enumerate(chains):
            idx = {"phi": a, "x": xi_, "n": x.degree, "p": phi.arity}
            _expect(rep, "[B, S_phi] = 0", idx, BS, zero, x)
            _expect(rep, "L_phi = [B + b, iota_phi + S_phi] - iota_{delta phi} - S_{delta phi}", idx, lphi, rhs, x)
            _expect(rep, "[L_phi, B] = 0", idx, LB, zero, x)
    return rep


def check_homology_level(M: CyclicCompModule, engine, phi, psi, cycles) -> Report:
    """For cocycles phi, psi and normalized cycles z:

    ([iota_psi, L_phi] - iota_{psi, phi})(z) and (L_phi - [B, iota_phi])(z) are boundaries
    in the normalized complex; [L_phi, B] = 0 on normalized chains.  Certificates y with
    b(y) equal to the defect are verified and stored in ``notes["certificates"]``.
    """
    O = M.operad
    rep = Report("homology-level identities")
    pre = []
    if O.delta(phi):
        pre.append("delta phi != 0")
    if O.delta(psi):
        pre.append("delta psi != 0")
    for k, z in enumerate(cycles):
        if M.b_normalized(z):
            pre.append(f"cycle #{k} has nonzero boundary")
        if not M.is_normalized(z):
            pre.append(f"cycle #{k} is not normalized")
    if pre:
        raise PreconditionError("; ".join(pre))
    _require_cyclic(M, max((z.degree for z in cycles), default=0) + 1)
    ipsi = op_cap(M, psi, normalized=True)
    lphi = op_lie(M, phi, normalized=True)
    # operator degrees q and p-1 give the sign (-1)^{q(p-1)}
    mixed = commutator(ipsi, lphi) - op_cap(M, O.bracket(psi, phi), normalized=True)
    cartan = lphi - commutator(op_B(M), op_cap(M, phi, normalized=True))
    LB = commutator(lphi, op_B(M))
    certs = []
    for k, z in enumerate(cycles):
        for name, F in (("[iota_psi, L_phi] - iota_{psi, phi} is a boundary", mixed),
                        ("L_phi - [B, iota_phi] is a boundary", cartan)):
            y = F(z)
            rep.checked += 1
            ok, cert = engine.is_boundary(y, normalized=True)
            if not ok:
                rep.record(name, {"cycle": k, "n": z.degree}, str(y), "not in im b")
            else:
                certs.append({"identity": name, "cycle": k, "certificate": str(cert)})
        _expect(rep, "[L_phi, B] = 0", {"cycle": k, "n": z.degree}, LB, op_zero(), z)
    rep.notes["certificates"] = certs
    return rep

