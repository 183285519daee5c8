"""Exact (co)homology of the Hochschild complexes and of the Connes complex.

Operators are assembled column by column in the tensor basis (optionally the
normalized basis, tensors with no unit in positions 1..n).  Ranks and kernels
come from :mod:`opcalc.linalg`.  Matrices can be cached on disk; the cache only
speeds up dimension computations and is never used by the identity checkers.
"""

from __future__ import annotations

import hashlib
import itertools
import os
from dataclasses import dataclass, field

from . import mutation
from .errors import RefusedError
from .linalg import Echelon, kernel, rank
from .tensors import Chain, Cochain


@dataclass
class DegreeData:
    degree: int
    dim_chains: int
    dim_kernel: int
    dim_image: int
    representatives: list = field(default_factory=list)

    @property
    def dim_homology(self):
        return self.dim_kernel - self.dim_image


@dataclass
class HomologyReport:
    kind: str
    field: str
    degrees: list

    @property
    def dims(self) -> list:
        return [d.dim_homology for d in self.degrees]

    def to_dict(self, names=None) -> dict:
        out = []
        for d in self.degrees:
            entry = {"degree": d.degree, "dim_chains": d.dim_chains, "dim_kernel": d.dim_kernel,
                     "dim_image": d.dim_image, "dim_homology": d.dim_homology}
            if d.representatives:
                entry["representatives"] = [_render(r, names) for r in d.representatives]
            out.append(entry)
        return {"kind": self.kind, "field": self.field, "degrees": out}

    def to_csv(self) -> str:
        lines = ["degree,dim"]
        lines += [f"{d.degree},{d.dim_homology}" for d in self.degrees]
        return "\n".join(lines) + "\n"


def _render(r, names):
    if names is None:
        return str(r)
    if isinstance(r, Chain):
        return r.render(names)
    return str(r)


class HomologyEngine:
    def __init__(self, inst, cache_dir: str | None = None):
        self.inst = inst
        self.M = inst.module
        self.O = inst.operad
        self.d = inst.algebra.dim
        self.cache_dir = cache_dir
        self._bases: dict = {}
        self._mem: dict = {}

    # -- bases ---------------------------------------------------------------

    def chain_basis(self, n: int, normalized: bool = False):
        key = ("c", n, normalized)
        if key not in self._bases:
            if n < 0:
                keys = []
            elif normalized:
                keys = [(a0,) + rest for a0 in range(self.d)
                        for rest in itertools.product(range(1, self.d), repeat=n)]
            else:
                keys = list(itertools.product(range(self.d), repeat=n + 1))
            self._bases[key] = (keys, {k: i for i, k in enumerate(keys)})
        return self._bases[key]

    def cochain_basis(self, p: int, normalized: bool = False):
        key = ("h", p, normalized)
        if key not in self._bases:
            if p < 0:
                keys = []
            else:
                lo = 1 if normalized else 0
                keys = [(args, k) for args in itertools.product(range(lo, self.d), repeat=p)
                        for k in range(self.O.codim)]
            self._bases[key] = (keys, {k: i for i, k in enumerate(keys)})
        return self._bases[key]

    def to_vector(self, x: Chain, normalized: bool = False) -> dict:
        _, index = self.chain_basis(x.degree, normalized)
        out = {}
        for k, c in x.terms.items():
            if k not in index:
                raise ValueError(f"tensor {k} is not in the {'normalized ' if normalized else ''}basis")
            out[index[k]] = c
        return out

    def to_chain(self, n: int, vec: dict, normalized: bool = False) -> Chain:
        keys, _ = self.chain_basis(n, normalized)
        return Chain(n, {keys[i]: c for i, c in vec.items() if c}, check=False)

    # -- assembly --------------------------------------------------------------

    def assemble(self, fn, n_src: int, n_tgt: int, normalized: bool = False) -> list:
        """Columns (sparse dicts) of ``fn`` from C_{n_src} to C_{n_tgt}."""
        keys, _ = self.chain_basis(n_src, normalized)
        _, tindex = self.chain_basis(n_tgt, normalized)
        cols = []
        for k in keys:
            y = fn(Chain.basis(k))
            if normalized:
                y = self.M.normalize(y)
            cols.append({tindex[t]: c for t, c in y.terms.items()})
        return cols

    def _ops(self):
        M = self.M
        return {
            "b": (M.b, -1),
            "t": (M.t, 0),
            "B": (M.B, 1),
            "tau": (lambda x: x + M.t(x) if x.degree % 2 else x - M.t(x), 0),
        }

    def matrix(self, op: str, n: int, normalized: bool = False, *, disk: bool = True) -> list:
        fn, shift = self._ops()[op]
        tag = f"{op}{'-norm' if normalized else ''}"
        mem_key = (tag, n, mutation.active())
        if mem_key in self._mem:
            return self._mem[mem_key]
        use_cache = disk and self.cache_dir is not None and mutation.active() is None
        cols = self._load(tag, n) if use_cache else None
        if cols is None:
            cols = self.assemble(fn, n, n + shift, normalized)
            if use_cache:
                self._store(tag, n, cols, len(self.chain_basis(n + shift, normalized)[0]))
        self._mem[mem_key] = cols
        return cols

    def delta_matrix(self, p: int, normalized: bool = False) -> list:
        keys, _ = self.cochain_basis(p, normalized)
        _, tindex = self.cochain_basis(p + 1, normalized)
        cols = []
        for args, k in keys:
            y = self.O.delta(Cochain.basis(args, k, self.O.codim))
            col = {}
            for targs, vec in y.values.items():
                for kk, c in vec.items():
                    if (targs, kk) in tindex:
                        col[tindex[(targs, kk)]] = c
            cols.append(col)
        return cols

    # -- disk cache ------------------------------------------------------------

    def _path(self, tag, n):
        return os.path.join(self.cache_dir, self.inst.fingerprint(), f"{tag}-{n}.mat")

    def _store(self, tag, n, cols, nrows):
        F = self.inst.field
        rows = [[] for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, c in col.items():
                rows[i].append(f"{j}:{F.format(c)}")
        body = "\n".join(" ".join(r) for r in rows)
        digest = hashlib.sha256(body.encode()).hexdigest()
        path = self._path(tag, n)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            fh.write(f"opcalc-matrix 1\nfield {F.spec()}\nshape {nrows} {len(cols)}\nsha256 {digest}\n{body}\n")

    def _load(self, tag, n):
        path = self._path(tag, n)
        if not os.path.exists(path):
            return None
        F = self.inst.field
        try:
            with open(path) as fh:
                lines = fh.read().split("\n")
            if lines[0] != "opcalc-matrix 1" or lines[1] != f"field {F.spec()}":
                return None
            nrows, ncols = map(int, lines[2].split()[1:])
            digest = lines[3].split()[1]
            body_lines = lines[4:4 + nrows]
            if hashlib.sha256("\n".join(body_lines).encode()).hexdigest() != digest:
                return None
            cols = [dict() for _ in range(ncols)]
            for i, line in enumerate(body_lines):
                for item in line.split():
                    j, v = item.split(":", 1)
                    cols[int(j)][i] = F.parse(v)
            return cols
        except (OSError, ValueError, IndexError):
            return None

    # -- homology ----------------------------------------------------------------

    def homology(self, max_degree: int, normalized: bool = False, representatives: bool = True) -> HomologyReport:
        degrees = []
        next_cols = None
        for n in range(max_degree + 1):
            dim = len(self.chain_basis(n, normalized)[0])
            cols_n = next_cols if next_cols is not None else (self.matrix("b", n, normalized) if n > 0 else None)
            cols_up = self.matrix("b", n + 1, normalized)
            next_cols = cols_up
            degrees.append(self._degree_data(n, dim, cols_n, cols_up, representatives,
                                             lambda v, n=n: self.to_chain(n, v, normalized)))
        return HomologyReport("homology" + (" (normalized)" if normalized else ""),
                              self.inst.field.spec(), degrees)

    def cohomology(self, max_degree: int, normalized: bool = False, representatives: bool = True) -> HomologyReport:
        degrees = []
        for p in range(max_degree + 1):
            keys, _ = self.cochain_basis(p, normalized)
            cols_p = self.delta_matrix(p, normalized)
            cols_down = self.delta_matrix(p - 1, normalized) if p > 0 else None
            degrees.append(self._degree_data(p, len(keys), cols_p, cols_down, representatives,
                                             lambda v, p=p, keys=keys: self._cochain_from_vector(p, keys, v)))
        return HomologyReport("cohomology" + (" (normalized)" if normalized else ""),
                              self.inst.field.spec(), degrees)

    def _cochain_from_vector(self, p, keys, vec):
        vals: dict = {}
        for i, c in vec.items():
            args, k = keys[i]
            vals.setdefault(args, {})[k] = c
        return Cochain(p, self.O.codim, vals, check=False)

    def _degree_data(self, n, dim, cols_out, cols_in, representatives, convert):
        """``cols_out`` leaves degree n (None means the zero map); ``cols_in`` lands in it."""
        image_rank = rank(cols_in) if cols_in else 0
        if cols_out is None:
            kernel_vectors = [{i: 1} for i in range(dim)] if representatives else None
            dim_kernel = dim
        elif representatives:
            kernel_vectors = kernel(cols_out)
            dim_kernel = len(kernel_vectors)
        else:
            kernel_vectors = None
            dim_kernel = dim - rank(cols_out)
        reps = []
        if representatives:
            ech = Echelon()
            for col in cols_in or []:
                ech.insert(col)
            for v in kernel_vectors:
                residual, _ = ech.insert(v)
                if residual:
                    reps.append(convert(v))
        return DegreeData(n, dim, dim_kernel, image_rank, reps)

    # -- membership --------------------------------------------------------------

    def is_boundary(self, z: Chain, normalized: bool = True):
        """``(True, y)`` with ``b(y) = z`` (verified), or ``(False, None)``."""
        n = z.degree
        if normalized:
            z = self.M.normalize(z)
        if not z:
            return True, Chain(n + 1)
        key = ("ech", n + 1, normalized, mutation.active())
        if key not in self._mem:
            ech = Echelon(track=True)
            for j, col in enumerate(self.matrix("b", n + 1, normalized, disk=False)):
                ech.insert(col, label=j)
            self._mem[key] = ech
        residual, combo = self._mem[key].reduce(self.to_vector(z, normalized))
        if residual:
            return False, None
        cert = self.to_chain(n + 1, {j: -c for j, c in combo.items()}, normalized)
        image = self.M.b(cert)
        if normalized:
            image = self.M.normalize(image)
        if image != z:
            raise AssertionError("boundary certificate failed verification")
        return True, cert

    def is_cycle(self, z: Chain, normalized: bool = False) -> bool:
        y = self.M.b(z)
        return not (self.M.normalize(y) if normalized else y)

    def is_cocycle(self, phi) -> bool:
        return not self.O.delta(phi)

    def square_is_zero(self, n: int, normalized: bool = False) -> bool:
        """b_{n} b_{n+1} = 0 as assembled matrices."""
        upper = self.matrix("b", n + 1, normalized)
        lower = self.matrix("b", n, normalized)
        for col in upper:
            acc_: dict = {}
            for j, c in col.items():
                for i, v in lower[j].items():
                    acc_[i] = acc_.get(i, 0) + c * v
            if any(acc_.values()):
                return False
        return True

    # -- cyclic homology -------------------------------------------------------------

    def _check_connes_allowed(self, max_degree):
        F = self.inst.field
        for n in range(max_degree + 2):
            if not F.invertible(n + 1):
                raise RefusedError(f"the Connes quotient needs {n + 1} invertible in {F.spec()}")
        if not self.M.is_cyclic(min(max_degree + 1, self.M.max_degree)):
            raise RefusedError("cyclic homology needs a cyclic module")

    def connes_cyclic_homology(self, max_degree: int) -> HomologyReport:
        """Homology of C_n / im(1 - tau), tau = (-1)^n t, with the induced b."""
        self._check_connes_allowed(max_degree)
        tau_rank = {}
        tau_cols = {}

        def T(n):
            if n not in tau_cols:
                tau_cols[n] = self.matrix("tau", n) if n >= 0 else []
                tau_rank[n] = rank(tau_cols[n]) if n >= 0 else 0
            return tau_cols[n]

        def induced_rank(n):
            if n <= 0:
                return 0
            T(n - 1)
            return rank(list(self.matrix("b", n)) + T(n - 1)) - tau_rank[n - 1]

        degrees = []
        ranks = {n: induced_rank(n) for n in range(max_degree + 2)}
        for n in range(max_degree + 1):
            T(n)
            dim = self.d ** (n + 1) - tau_rank[n]
            degrees.append(DegreeData(n, dim, dim - ranks[n], ranks[n + 1]))
        return HomologyReport("cyclic homology (Connes complex)", self.inst.field.spec(), degrees)

    def lambda_preserved(self, n: int) -> bool:
        """b maps im(1 - tau) in degree n into im(1 - tau) in degree n - 1."""
        M = self.M
        ech = Echelon()
        for col in self.matrix("tau", n - 1):
            ech.insert(col)
        tau = self._ops()["tau"][0]
        for k in self.chain_basis(n)[0]:
            y = M.b(tau(Chain.basis(k)))
            if not ech.contains(self.to_vector(y)):
                return False
        return True
