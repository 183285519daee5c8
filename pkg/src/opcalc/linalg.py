"""Exact sparse Gaussian elimination over a field.

Vectors are dicts ``{row: scalar}`` with orderable row keys.  An
:class:`Echelon` keeps a set of reduced vectors with pairwise distinct pivots
(the smallest row carrying a nonzero entry, normalized to 1) and, optionally,
the combination of inserted vectors that produced each one.  Rank, kernel,
image and linear solves are all built on it.
"""

from __future__ import annotations

from .tensors import acc


class Echelon:
    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict = {}       # pivot -> reduced vector
        self.combos: dict = {}     # pivot -> {label: coeff}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Reduce ``vec`` against the stored pivots.

        Returns ``(residual, combo)`` where ``residual = vec - sum combo[l] * inserted[l]``
        contains no pivot row.  The residual is zero iff ``vec`` lies in the span.
        """
        v = {k: c for k, c in vec.items() if c}
        combo = dict(combo) if combo else {}
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                break
            k = min(hits)
            c = v[k]
            for r, x in rows[k].items():
                acc(v, r, -c * x)
            if self.track:
                for l, x in self.combos[k].items():
                    acc(combo, l, -c * x)
        return v, combo

    def insert(self, vec: dict, label=None):
        """Add ``vec``; return the residual (empty dict if it was dependent) and its combo."""
        start = {label: 1} if (self.track and label is not None) else None
        v, combo = self.reduce(vec, start)
        if not v:
            return v, combo
        piv = min(v)
        inv = 1 / v[piv] if not _is_one(v[piv]) else None
        if inv is not None:
            v = {r: x * inv for r, x in v.items()}
            if self.track:
                combo = {l: x * inv for l, x in combo.items()}
        self.rows[piv] = v
        if self.track:
            self.combos[piv] = combo
        return v, combo

    def contains(self, vec: dict) -> bool:
        v, _ = self.reduce(vec)
        return not v


def _is_one(x):
    return x == 1


def rank(columns) -> int:
    ech = Echelon()
    for col in columns:
        ech.insert(col)
    return ech.rank


def kernel(columns) -> list[dict]:
    """Basis of ``{y : sum_j y[j] * columns[j] = 0}`` as sparse dicts over column indices."""
    ech = Echelon(track=True)
    out = []
    for j, col in enumerate(columns):
        v, combo = ech.insert(col, label=j)
        if not v:
            out.append(combo)
    return out


def image_basis(columns) -> list[dict]:
    ech = Echelon()
    for col in columns:
        ech.insert(col)
    return list(ech.rows.values())


def solve(columns, target: dict):
    """Some ``y`` with ``sum_j y[j] * columns[j] == target``, or ``None``."""
    ech = Echelon(track=True)
    for j, col in enumerate(columns):
        ech.insert(col, label=j)
    v, combo = ech.reduce(target)
    if v:
        return None
    # reduce() subtracted combo-weighted inserted vectors: target + combo.cols = 0
    return {j: -c for j, c in combo.items()}


def apply(columns, y: dict) -> dict:
    out: dict = {}
    for j, c in y.items():
        for r, x in columns[j].items():
            acc(out, r, c * x)
    return out
