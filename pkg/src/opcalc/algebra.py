"""Finite-dimensional unital associative algebras given by structure constants.

Basis element 0 is always the unit.  Products of basis elements are stored
sparsely: ``algebra.table[i][j]`` is ``{k: c}`` with ``b_i b_j = sum c b_k``.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import QQ, Field, parse_field
from .errors import InputError
from .linalg import Echelon, solve
from .report import Report
from .tensors import Chain, Cochain, acc, add_scaled


class Algebra:
    def __init__(self, name: str, field: Field, basis_names, table, unit_index: int = 0):
        if unit_index != 0:
            raise InputError("the unit must be basis element 0 (unit_index = 0)")
        self.name = name
        self.field = field
        self.basis_names = tuple(basis_names)
        d = len(self.basis_names)
        if d < 1:
            raise InputError("an algebra needs a positive dimension")
        if len(table) != d or any(len(row) != d for row in table):
            raise InputError(f"structure constants must form a {d}x{d} table")
        clean = []
        for row in table:
            out_row = []
            for entry in row:
                if isinstance(entry, dict):
                    vec = {int(k): field(c) for k, c in entry.items()}
                else:
                    if len(entry) != d:
                        raise InputError(f"each product must be a length-{d} vector")
                    vec = {k: field(c) for k, c in enumerate(entry)}
                for k in vec:
                    if not 0 <= k < d:
                        raise InputError(f"product coordinate {k} out of range")
                out_row.append({k: c for k, c in vec.items() if c})
            clean.append(tuple(out_row))
        self.table = tuple(clean)
        self.unit_index = 0

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim}, field={self.field.spec()})"

    # -- arithmetic -------------------------------------------------------

    def mul_basis(self, i: int, j: int) -> dict:
        return self.table[i][j]

    def mul(self, u: dict, v: dict) -> dict:
        """Product of sparse vectors."""
        out: dict = {}
        for i, a in u.items():
            row = self.table[i]
            for j, b in v.items():
                add_scaled(out, row[j], a * b)
        return out

    def multiply(self, u, v) -> list:
        """Product of dense coordinate vectors (lists of length dim)."""
        if len(u) != self.dim or len(v) != self.dim:
            raise InputError(f"vectors must have length {self.dim}")
        su = {i: self.field(c) for i, c in enumerate(u) if c}
        sv = {i: self.field(c) for i, c in enumerate(v) if c}
        return self.dense(self.mul(su, sv))

    def dense(self, vec: dict) -> list:
        return [vec.get(i, self.field.zero) for i in range(self.dim)]

    def unit(self) -> dict:
        return {0: self.field.one}

    # -- checks -----------------------------------------------------------

    def validate(self) -> Report:
        """Unit law and associativity on all basis pairs/triples."""
        rep = Report(f"algebra {self.name}")
        d = self.dim
        for i in range(d):
            e = {i: self.field.one}
            rep.expect("unit law 1*b = b", (0, i), self.table[0][i], e)
            rep.expect("unit law b*1 = b", (i, 0), self.table[i][0], e)
        for i, j, k in itertools.product(range(d), repeat=3):
            lhs = self.mul(self.table[i][j], {k: 1})
            rhs = self.mul({i: 1}, self.table[j][k])
            rep.expect("associativity (b_i b_j) b_k = b_i (b_j b_k)", (i, j, k), lhs, rhs)
        return rep

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(self.dim))

    # -- conversions ------------------------------------------------------

    def with_field(self, field: Field) -> "Algebra":
        """Reinterpret integer/rational structure constants over another field."""
        table = [[{k: _convert(c, field) for k, c in entry.items()} for entry in row]
                 for row in self.table]
        return Algebra(self.name, field, self.basis_names, table)

    def change_basis(self, matrix, names=None) -> "Algebra":
        """Algebra in the new basis ``b'_i = sum_j matrix[i][j] b_j``.

        The first new basis vector must be the unit.
        """
        d = self.dim
        F = self.field
        rows = [{j: F(c) for j, c in enumerate(r) if c} for r in matrix]
        if rows[0] != {0: F.one}:
            raise InputError("the first new basis vector must be the unit")
        cols = [dict() for _ in range(d)]
        # coordinates w.r.t. the new basis: solve sum_i y_i rows[i] = target
        for i, r in enumerate(rows):
            for j, c in r.items():
                cols[i][j] = c
        ech = Echelon()
        for c in cols:
            ech.insert(c)
        if ech.rank != d:
            raise InputError("change of basis matrix is singular")
        table = []
        for i in range(d):
            row = []
            for j in range(d):
                prod = self.mul(rows[i], rows[j])
                y = solve(cols, prod)
                row.append(y)
            table.append(row)
        names = names or [f"b{i}'" if i else "1" for i in range(d)]
        return Algebra(self.name + "'", F, names, table)

    def to_json(self) -> dict:
        F = self.field
        return {
            "name": self.name,
            "field": F.spec(),
            "dim": self.dim,
            "basis_names": list(self.basis_names),
            "unit_index": 0,
            "structure_constants": [
                [[F.format(entry.get(k, 0)) for k in range(self.dim)] for entry in row]
                for row in self.table
            ],
        }

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    @classmethod
    def from_json(cls, data: dict, field: Field | None = None) -> "Algebra":
        if not isinstance(data, dict):
            raise InputError(f"an algebra file must hold a JSON object, not {type(data).__name__}")
        try:
            F = field or parse_field(data.get("field", "Q"))
            d = int(data["dim"])
            names = data.get("basis_names") or [f"b{i}" for i in range(d)]
            if len(names) != d:
                raise InputError(f"basis_names has {len(names)} entries, dim is {d}")
            if int(data.get("unit_index", 0)) != 0:
                raise InputError("unit_index must be 0: the unit has to be basis element 0")
            sc = data["structure_constants"]
            if len(sc) != d or any(len(row) != d for row in sc):
                raise InputError(f"structure_constants must be a {d}x{d} array of length-{d} vectors")
            table = [[[_parse_scalar(F, c) for c in entry] for entry in row] for row in sc]
        except KeyError as exc:
            raise InputError(f"missing field {exc.args[0]!r} in algebra file") from exc
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(str(exc)) from exc
        return cls(data.get("name", "A"), F, names, table)


def _parse_scalar(F, c):
    if isinstance(c, str):
        return F.parse(c)
    if isinstance(c, bool) or isinstance(c, float):
        raise InputError(f"scalar {c!r} is not exact; use an integer or 'num/den'")
    return F(c)


def _convert(c, field):
    from .coefficients import ModP
    if isinstance(c, ModP):
        return field(int(c))
    return field(Fraction(c))


def load_algebra(path, field: Field | None = None) -> Algebra:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return Algebra.from_json(data, field)


# -- coefficient pairs -----------------------------------------------------

@dataclass
class CoefficientPair:
    """Coefficient algebra V with the bimodule map gamma: V -> A.

    ``gamma[k]`` is the image of the k-th basis vector of V as a sparse
    A-vector.  The A-ring structure of V is carried by ``eta``, the inverse
    of gamma (see :func:`validate_pair`).
    """

    V: Algebra
    gamma: list
    eta: list | None = None

    @property
    def dim(self):
        return self.V.dim


def identity_pair(A: Algebra) -> CoefficientPair:
    ident = [{i: A.field.one} for i in range(A.dim)]
    return CoefficientPair(A, ident, ident)


def make_pair(A: Algebra, V: Algebra, gamma) -> CoefficientPair:
    """Build a pair from dense/sparse images of the V basis; computes eta."""
    F = A.field
    g = []
    for img in gamma:
        if isinstance(img, dict):
            g.append({int(k): F(c) for k, c in img.items() if F(c)})
        else:
            if len(img) != A.dim:
                raise InputError(f"gamma images must have length {A.dim}")
            g.append({k: _parse_scalar(F, c) for k, c in enumerate(img) if _parse_scalar(F, c)})
    if len(g) != V.dim:
        raise InputError(f"gamma needs {V.dim} images, got {len(g)}")
    eta = None
    if V.dim == A.dim:
        eta_cols = []
        for i in range(A.dim):
            y = solve(g, {i: F.one})
            if y is None:
                eta_cols = None
                break
            eta_cols.append(y)
        eta = eta_cols
    return CoefficientPair(V, g, eta)


def apply_map(images: list, vec: dict) -> dict:
    out: dict = {}
    for k, c in vec.items():
        add_scaled(out, images[k], c)
    return out


def validate_pair(A: Algebra, pair: CoefficientPair) -> Report:
    """Checks that (V, gamma) is admissible coefficient data for C^*(A, V).

    V must be a unital algebra, gamma a unital algebra map and (through eta)
    ``gamma(v) v' = v v' = v gamma(v')`` must hold on all basis pairs.  Taking
    ``v' = 1`` in the first equation shows ``eta(gamma(v)) = v``, so gamma has to
    be invertible; a singular gamma is reported as such.
    """
    rep = Report("coefficient pair")
    V = pair.V
    rep.merge(V.validate())
    if V.field != A.field:
        rep.record("same field", (), V.field.spec(), A.field.spec())
        return rep
    one_A = A.unit()
    rep.expect("gamma(1_V) = 1_A", (), apply_map(pair.gamma, V.unit()), one_A)
    for i, j in itertools.product(range(V.dim), repeat=2):
        lhs = apply_map(pair.gamma, V.table[i][j])
        rhs = A.mul(pair.gamma[i], pair.gamma[j])
        rep.expect("gamma(v v') = gamma(v) gamma(v')", (i, j), lhs, rhs)
    if pair.eta is None:
        rep.record("gamma invertible (forced by gamma(v) 1_V = v)", (), "singular", "invertible")
        return rep
    for i, j in itertools.product(range(V.dim), repeat=2):
        vv = V.table[i][j]
        left = V.mul(apply_map(pair.eta, pair.gamma[i]), {j: 1})
        right = V.mul({i: 1}, apply_map(pair.eta, pair.gamma[j]))
        rep.expect("gamma(v) v' = v v'", (i, j), left, vv)
        rep.expect("v v' = v gamma(v')", (i, j), vv, right)
    return rep


def load_pair(path, A: Algebra) -> CoefficientPair:
    """Coefficient file: ``{"V": <algebra object or path>, "gamma": [A-vector per V basis element]}``."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        vdata = data["V"]
        V = load_algebra(vdata, A.field) if isinstance(vdata, str) else Algebra.from_json(vdata, A.field)
        return make_pair(A, V, data["gamma"])
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r} in coefficient file") from exc
    except (TypeError, AttributeError) as exc:
        raise InputError(f"malformed coefficient file: {exc}") from exc


# -- cochain evaluation and files ------------------------------------------

def evaluate_cochain(phi: Cochain, args) -> dict:
    """Value of ``phi`` on basis indices or on a sparse tensor of length p."""
    if isinstance(args, Chain):
        if args.degree + 1 != phi.arity:
            raise InputError(f"cochain of arity {phi.arity} applied to a tensor of length {args.degree + 1}")
        out: dict = {}
        for key, c in args.terms.items():
            add_scaled(out, phi.values.get(key, {}), c)
        return out
    if isinstance(args, dict):
        out = {}
        for key, c in args.items():
            if len(key) != phi.arity:
                raise InputError(f"cochain of arity {phi.arity} applied to a tensor of length {len(key)}")
            add_scaled(out, phi.values.get(tuple(key), {}), c)
        return out
    args = tuple(args)
    if len(args) != phi.arity:
        raise InputError(f"cochain of arity {phi.arity} applied to {len(args)} arguments")
    return dict(phi.values.get(args, {}))


def cochain_from_function(A: Algebra, arity: int, f, codim: int | None = None) -> Cochain:
    """Tabulate ``f(i1, ..., ip) -> sparse vector`` on all basis tuples."""
    codim = A.dim if codim is None else codim
    vals = {}
    for args in itertools.product(range(A.dim), repeat=arity):
        v = {k: c for k, c in f(*args).items() if c}
        if v:
            vals[args] = v
    return Cochain(arity, codim, vals, check=False)


def multiplication_cochain(A: Algebra) -> Cochain:
    return cochain_from_function(A, 2, lambda i, j: A.table[i][j])


def cochain_to_json(phi: Cochain, field: Field, codomain="A") -> dict:
    return {
        "arity": phi.arity,
        "codomain": codomain,
        "values": {
            ",".join(map(str, k)): [field.format(v.get(i, 0)) for i in range(phi.codim)]
            for k, v in sorted(phi.values.items())
        },
    }


def cochain_from_json(data: dict, field: Field, codim: int, dim_A: int | None = None) -> Cochain:
    try:
        p = int(data["arity"])
        vals = {}
        for key, vec in data["values"].items():
            args = tuple(int(s) for s in key.split(",")) if key.strip() else ()
            if len(args) != p:
                raise InputError(f"key {key!r} does not have {p} indices")
            if dim_A is not None and any(not 0 <= a < dim_A for a in args):
                raise InputError(f"key {key!r} has an index out of range")
            if len(vec) != codim:
                raise InputError(f"value for {key!r} must have {codim} entries")
            v = {i: _parse_scalar(field, c) for i, c in enumerate(vec)}
            vals[args] = {i: c for i, c in v.items() if c}
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r} in cochain file") from exc
    except (TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed cochain file: {exc}") from exc
    return Cochain(p, codim, vals)


def chain_to_json(x: Chain, field: Field) -> dict:
    return {
        "degree": x.degree,
        "terms": {",".join(map(str, k)): field.format(c) for k, c in sorted(x.terms.items())},
    }


def chain_from_json(data: dict, field: Field, dim: int | None = None) -> Chain:
    try:
        n = int(data["degree"])
        terms = {}
        for key, c in data["terms"].items():
            idx = tuple(int(s) for s in key.split(","))
            if dim is not None and any(not 0 <= a < dim for a in idx):
                raise InputError(f"tensor {key!r} has an index out of range")
            acc(terms, idx, _parse_scalar(field, c))
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r} in chain file") from exc
    except (TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed chain file: {exc}") from exc
    return Chain(n, terms)


# -- standard examples ------------------------------------------------------

def dual_numbers(field: Field = QQ) -> Algebra:
    """k[x]/(x^2)."""
    return Algebra("dual_numbers", field, ["1", "x"],
                   [[[1, 0], [0, 1]], [[0, 1], [0, 0]]])


def group_algebra_z2(field: Field = QQ) -> Algebra:
    """k[x]/(x^2 - 1), the group algebra of Z/2."""
    return Algebra("group_algebra_z2", field, ["1", "x"],
                   [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])


def ground_field(field: Field = QQ) -> Algebra:
    return Algebra("ground_field", field, ["1"], [[[1]]])


def algebra_from_matrices(name: str, field: Field, mats, names) -> Algebra:
    """Subalgebra of matrices spanned by ``mats`` (``mats[0]`` the identity)."""
    def flat(m):
        return {(r, c): field(x) for r, row in enumerate(m) for c, x in enumerate(row) if x}

    def matmul(a, b):
        size = len(a)
        return [[sum((field(a[r][k]) * field(b[k][c]) for k in range(size)), field.zero)
                 for c in range(size)] for r in range(size)]

    cols = [flat(m) for m in mats]
    table = []
    for a in mats:
        row = []
        for b in mats:
            y = solve(cols, flat(matmul(a, b)))
            if y is None:
                raise InputError("matrices do not span a subalgebra")
            row.append(y)
        table.append(row)
    return Algebra(name, field, names, table)


def matrix_algebra_2(field: Field = QQ) -> Algebra:
    """M_2(k) in the basis 1, e12, e21, e22 (so e11 = 1 - e22)."""
    mats = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 0]],
        [[0, 0], [1, 0]],
        [[0, 0], [0, 1]],
    ]
    return algebra_from_matrices("M2", field, mats, ["1", "e12", "e21", "e22"])


STANDARD = {
    "dual_numbers": dual_numbers,
    "group_algebra_z2": group_algebra_z2,
    "ground_field": ground_field,
    "M2": matrix_algebra_2,
}
