"""Named verification suites over a Hochschild-type instance.

Sweeps are exhaustive over basis elements when the number of identity
instances stays under ``budget``; beyond that a seeded random subset is used.
Seeded random linear combinations are always added on top (``trials``).
"""

from __future__ import annotations

import itertools
import random

from .calculus import check_dg_lie, check_dg_module, check_homology_level, check_homotopy
from .compmodule import check_comp_module_axioms, check_simplicial_identities
from .homology import HomologyEngine
from .operad import check_operad_axioms
from .report import Report
from .tensors import Chain, Cochain

SUITES = ("operad", "compmodule", "simplicial", "calculus", "homology-level")


def random_cochain(inst, arity: int, rng: random.Random, normalized: bool = False, density: float = 0.6) -> Cochain:
    F = inst.field
    lo = 1 if normalized else 0
    vals = {}
    for args in itertools.product(range(lo, inst.algebra.dim), repeat=arity):
        if rng.random() < density:
            vec = {k: F.random(rng) for k in range(inst.operad.codim)}
            vec = {k: c for k, c in vec.items() if c}
            if vec:
                vals[args] = vec
    return Cochain(arity, inst.operad.codim, vals, check=False)


def random_chain(inst, n: int, rng: random.Random, normalized: bool = False, density: float = 0.5) -> Chain:
    F = inst.field
    d = inst.algebra.dim
    terms = {}
    for rest in itertools.product(range(1 if normalized else 0, d), repeat=n):
        for a0 in range(d):
            if rng.random() < density:
                c = F.random(rng)
                if c:
                    terms[(a0,) + rest] = c
    return Chain(n, terms, check=False)


def _sample(items, k, rng):
    items = list(items)
    if len(items) <= k:
        return items
    return rng.sample(items, k)


def calculus_reports(inst, max_degree: int, max_arity: int, trials: int, seed: int,
                     budget: int = 250_000) -> list:
    """dg module, dg Lie module and homotopy-formula suites."""
    rng = random.Random(seed)
    M, O = inst.module, inst.operad
    phis = [c for p in range(max_arity + 1) for c in O.basis(p)]
    chains = [x for n in range(max_degree + 1) for x in M.basis(n)]
    nphis = [c for p in range(max_arity + 1) for c in O.normalized_basis(p)]
    nchains = [x for n in range(max_degree + 1) for x in M.normalized_basis(n)]
    mode = "exhaustive"
    if len(phis) ** 2 * len(chains) > budget:
        mode = "sampled"
        k = max(1, int((budget / max(len(chains), 1)) ** 0.5))
        phis_l, phis_r = _sample(phis, k, rng), _sample(phis, k, rng)
        chains = _sample(chains, max(1, budget // (k * k)), rng)
    else:
        phis_l = phis_r = phis
    if len(nphis) * len(nchains) > budget:
        nphis = _sample(nphis, 40, rng)
        nchains = _sample(nchains, max(1, budget // 40), rng)

    reports = [check_dg_module(M, phis_l, phis_r, chains),
               check_dg_lie(M, phis_l, phis_r, chains),
               check_homotopy(M, nphis, nchains)]
    for r in reports:
        r.notes["basis sweep"] = mode

    if trials:
        rphis, rpsis, rchains, nrphis, nrchains = [], [], [], [], []
        for _ in range(trials):
            rphis.append(random_cochain(inst, rng.randint(0, max_arity), rng))
            rpsis.append(random_cochain(inst, rng.randint(0, max_arity), rng))
            rchains.append(random_chain(inst, rng.randint(0, max_degree), rng))
            nrphis.append(random_cochain(inst, rng.randint(0, max_arity), rng, normalized=True))
            nrchains.append(random_chain(inst, rng.randint(0, max_degree), rng, normalized=True))
        rand = [Report("random trials: dg module"), Report("random trials: dg Lie module"),
                Report("random trials: homotopy formula")]
        for phi, psi, x in zip(rphis, rpsis, rchains):
            rand[0].merge(check_dg_module(M, [phi], [psi], [x]))
            rand[1].merge(check_dg_lie(M, [phi], [psi], [x]))
        for phi, x in zip(nrphis, nrchains):
            rand[2].merge(check_homotopy(M, [phi], [x]))
        for r in rand:
            r.notes["seed"] = seed
            r.notes["trials"] = trials
        reports.extend(rand)
    return reports


def homology_level_report(inst, max_degree: int, max_arity: int, engine: HomologyEngine | None = None) -> Report:
    """Homology-level identities for all pairs of cohomology representatives
    (arity <= max_arity) against normalized homology representatives (degree <= max_degree)."""
    engine = engine or HomologyEngine(inst)
    cocycles = [r for d in engine.cohomology(max_arity).degrees for r in d.representatives]
    cycles = [r for d in engine.homology(max_degree, normalized=True).degrees for r in d.representatives]
    total = Report("homology-level identities")
    for a, phi in enumerate(cocycles):
        for c, psi in enumerate(cocycles):
            rep = check_homology_level(inst.module, engine, phi, psi, cycles)
            total.merge(rep)
    total.notes["cocycles"] = len(cocycles)
    total.notes["cycles"] = len(cycles)
    return total


def run_suite(inst, name: str, *, max_degree: int = 4, max_arity: int = 2, trials: int = 0,
              seed: int = 0, operad_arity: int | None = None) -> list:
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s == "operad":
            out.append(check_operad_axioms(inst.operad, operad_arity if operad_arity is not None else max_arity))
        elif s == "compmodule":
            out.append(check_comp_module_axioms(inst.module, max_degree, max_arity))
        elif s == "simplicial":
            out.append(check_simplicial_identities(inst.module, max_degree))
        elif s == "calculus":
            out.extend(calculus_reports(inst, max_degree, max_arity, trials, seed))
        elif s == "homology-level":
            out.append(homology_level_report(inst, max(max_degree - 1, 0), max_arity))
        else:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
    return out
