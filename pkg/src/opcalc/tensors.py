"""Sparse elements of tensor powers A^{(x)n}: Hochschild chains and cochains.

A :class:`Chain` of degree n is a sparse combination of basis tensors
``(i0, ..., in)``.  A :class:`Cochain` of arity p stores, for each basis tuple
``(i1, ..., ip)`` on which it is nonzero, its value as a sparse vector in the
codomain.  No zero coefficients are ever stored, so ``==`` is exact equality of
the underlying linear objects.
"""

from __future__ import annotations

from .errors import InputError


def acc(d: dict, key, c):
    """``d[key] += c`` dropping entries that cancel to zero."""
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def add_scaled(d: dict, vec: dict, c):
    for k, v in vec.items():
        acc(d, k, c * v)


def _fmt(c):
    return str(c)


def format_terms(terms: dict, render=None) -> str:
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms):
        c = terms[key]
        label = render(key) if render else str(key)
        parts.append(f"{_fmt(c)}*{label}")
    return " + ".join(parts)


class Chain:
    """Element of C_n(A,A) = A^{(x)(n+1)} in the tensor basis.

    Zero chains may carry a negative degree: operators lowering the degree
    below zero return them instead of raising.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict | None = None, *, check=True):
        self.degree = degree
        if terms is None:
            terms = {}
        elif check:
            terms = {tuple(k): v for k, v in terms.items() if v}
            for k in terms:
                if len(k) != degree + 1:
                    raise InputError(f"tensor {k} does not have length {degree + 1}")
        self.terms = terms

    @classmethod
    def basis(cls, index: tuple) -> "Chain":
        return cls(len(index) - 1, {tuple(index): 1}, check=False)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _same(self, other):
        if not isinstance(other, Chain):
            raise TypeError(f"expected a Chain, got {type(other).__name__}")
        if other.degree != self.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            acc(out, k, v)
        return Chain(self.degree if self.terms or not other.terms else other.degree, out, check=False)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            acc(out, k, -v)
        return Chain(self.degree if self.terms or not other.terms else other.degree, out, check=False)

    def __neg__(self):
        return Chain(self.degree, {k: -v for k, v in self.terms.items()}, check=False)

    def scale(self, c):
        if not c:
            return Chain(self.degree)
        return Chain(self.degree, {k: c * v for k, v in self.terms.items()}, check=False)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Chain):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Chain({self.degree}, {format_terms(self.terms)})"

    def __str__(self):
        return format_terms(self.terms)

    def render(self, names) -> str:
        return format_terms(self.terms, lambda k: "(" + ",".join(names[i] for i in k) + ")")


class Cochain:
    """Multilinear map A^{(x)p} -> W stored by its values on basis tuples.

    ``values[(i1, ..., ip)]`` is a sparse dict over the basis of the codomain W
    (``codim`` = dim W).  Arity 0 uses the empty tuple.
    """

    __slots__ = ("arity", "codim", "values")

    def __init__(self, arity: int, codim: int, values: dict | None = None, *, check=True):
        self.arity = arity
        self.codim = codim
        if values is None:
            values = {}
        elif check:
            clean = {}
            for k, vec in values.items():
                k = tuple(k)
                if len(k) != arity:
                    raise InputError(f"argument tuple {k} does not have length {arity}")
                vec = {int(i): c for i, c in vec.items() if c}
                for i in vec:
                    if not 0 <= i < codim:
                        raise InputError(f"codomain index {i} out of range")
                if vec:
                    clean[k] = vec
            values = clean
        self.values = values

    @classmethod
    def basis(cls, args: tuple, k: int, codim: int) -> "Cochain":
        return cls(len(args), codim, {tuple(args): {k: 1}}, check=False)

    def __call__(self, *args) -> dict:
        return self.values.get(tuple(args), {})

    def is_zero(self):
        return not self.values

    def __bool__(self):
        return bool(self.values)

    def _combine(self, other, sign):
        if not isinstance(other, Cochain):
            raise TypeError(f"expected a Cochain, got {type(other).__name__}")
        if other.arity != self.arity and self.values and other.values:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        arity = self.arity if self.values or not other.values else other.arity
        out = {k: dict(v) for k, v in self.values.items()}
        for k, vec in other.values.items():
            cur = out.setdefault(k, {})
            for i, c in vec.items():
                acc(cur, i, sign * c)
            if not cur:
                del out[k]
        return Cochain(arity, self.codim, out, check=False)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Cochain(self.arity, self.codim,
                       {k: {i: -c for i, c in v.items()} for k, v in self.values.items()}, check=False)

    def scale(self, c):
        if not c:
            return Cochain(self.arity, self.codim)
        return Cochain(self.arity, self.codim,
                       {k: {i: c * x for i, x in v.items()} for k, v in self.values.items()}, check=False)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.values
        if not isinstance(other, Cochain):
            return NotImplemented
        if not self.values and not other.values:
            return True
        return self.arity == other.arity and self.values == other.values

    def __hash__(self):
        return hash((self.arity, frozenset((k, frozenset(v.items())) for k, v in self.values.items())))

    def flat(self) -> dict:
        """Coordinates keyed by ``(args, codomain index)``."""
        return {(k, i): c for k, v in self.values.items() for i, c in v.items()}

    def __repr__(self):
        return f"Cochain({self.arity}, {self})"

    def __str__(self):
        return format_terms(self.flat(), lambda key: f"{key[0]}->{key[1]}")
