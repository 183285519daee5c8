"""Test hook that flips one sign inside an operator implementation.

Each signed sum in :mod:`opcalc.compmodule` and :mod:`opcalc.calculus` asks
:func:`sign` for an extra factor per summand.  Outside a :func:`flip_sign`
block the factor is always +1.  A selector is either the summand key used by
the operator (``int`` or tuple) or a sign-site name that matches every summand
of one sum (for example ``"zeta"`` for the first sum of the Lie derivative).

Summand keys per operator::

    b      i = 0..n        ("face" sites i < n, "last" site i = n)
    B      i = 0..n
    iota   0
    lie    ("zeta", i) and ("xi", i)
    S      (j, i)
"""

from __future__ import annotations

import contextlib

OPERATORS = ("b", "B", "iota", "lie", "S")

_active: tuple | None = None


def parse(spec: str):
    """Parse ``flip-sign:OP`` or ``flip-sign:OP:KEY`` (KEY comma-separated ints or a site name)."""
    parts = spec.split(":")
    if len(parts) < 2 or parts[0] != "flip-sign" or parts[1] not in OPERATORS:
        raise ValueError(f"unknown mutation {spec!r}; expected flip-sign:<{'|'.join(OPERATORS)}>[:key]")
    op = parts[1]
    if len(parts) == 2:
        return op, None
    raw = parts[2]
    items = raw.split(",")
    if all(s.lstrip("-").isdigit() for s in items):
        key = tuple(int(s) for s in items)
        return op, key[0] if len(key) == 1 else key
    if len(items) == 2 and items[1].lstrip("-").isdigit():
        return op, (items[0], int(items[1]))
    return op, raw


@contextlib.contextmanager
def flip_sign(op: str, selector=None):
    """Flip the sign of one summand (or one sign site) of ``op`` inside the block.

    ``selector=None`` picks the first summand (``0``, ``("zeta", 1)`` or ``(1, 1)``).
    """
    global _active
    if op not in OPERATORS:
        raise ValueError(f"unknown operator {op!r}")
    if selector is None:
        selector = {"lie": ("zeta", 1), "S": (1, 1)}.get(op, 0)
    prev = _active
    _active = (op, selector)
    try:
        yield
    finally:
        _active = prev


def set_global(op: str | None, selector=None):
    """Activate a mutation for the rest of the process (used by the CLI)."""
    global _active
    if op is None:
        _active = None
        return
    if selector is None:
        selector = {"lie": ("zeta", 1), "S": (1, 1)}.get(op, 0)
    _active = (op, selector)


def active():
    return _active


def sign(op: str, key, site: str | None = None) -> int:
    a = _active
    if a is None or a[0] != op:
        return 1
    sel = a[1]
    if sel == key or (site is not None and sel == site):
        return -1
    return 1
