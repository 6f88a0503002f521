"""Splittings of an edge ideal along an induced chordless cycle.

With J the edge ideal of the cycle and K the edge ideal of everything else,
the minimal generators of J cap K fall into three families:

* A: u_i u_{i+1} w_p, the edge u_i u_{i+1} with an outside neighbour of u_i or u_{i+1};
* B: u_i u_{i+1} u_j w_p, a cycle edge times a cross edge u_j w_p, not a multiple of A;
* C: u_i u_{i+1} w_p w_q, a cycle edge times an outside edge, not a multiple of A.

When no two consecutive cycle vertices have degree > 2, sending each
generator to the pair of generators it was built from is a splitting
function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

import numpy as np

from .errors import (
    AmbiguousAssignment,
    CapExceeded,
    HypothesisViolated,
    NoCandidatesError,
    ZeroIdealError,
)
from .graph import (
    CyclePartition,
    Graph,
    cycle_complement,
    cycle_subgraph,
    degree,
    make_cycle_partition,
    natural_key,
    splitting_condition,
)
from .monomials import Monomial, MonomialIdeal, edge_ideal, intersect, lcm, lcm_all, strictly_divides

MAX_VERIFY_GENERATORS = 20
MAX_SEARCH_GENERATORS = 12


@dataclass(frozen=True)
class AbcDecomposition:
    a_set: frozenset
    b_set: frozenset
    c_set: frozenset

    def flattened(self) -> frozenset:
        return self.a_set | self.b_set | self.c_set

    def to_json(self) -> dict:
        return {name: [str(m) for m in sorted(s, key=Monomial.sort_key)]
                for name, s in (("A", self.a_set), ("B", self.b_set), ("C", self.c_set))}


def abc_decomposition(g: Graph, cp: CyclePartition) -> AbcDecomposition:
    cp = make_cycle_partition(g, cp.cycle)  # rejects chords and k < 4
    on_cycle = set(cp.cycle)
    products = {lcm(Monomial(f), Monomial(h)) for f in cp.eu for h in cp.ex | cp.ew}
    a_set = frozenset(m for m in products if m.degree == 3)

    def redundant(m):
        return any(a.support < m.support for a in a_set)

    quartics = [m for m in products if m.degree == 4 and not redundant(m)]
    b_set = frozenset(m for m in quartics if len(m.support & on_cycle) == 3)
    c_set = frozenset(m for m in quartics if len(m.support & on_cycle) == 2)
    return AbcDecomposition(a_set, b_set, c_set)


@dataclass(frozen=True)
class SplittingFunction:
    j: MonomialIdeal
    k: MonomialIdeal
    assignments: tuple  # (w, phi, psi) triples, w in canonical order

    @classmethod
    def build(cls, j, k, mapping: dict) -> "SplittingFunction":
        rows = tuple((w, *mapping[w]) for w in sorted(mapping, key=Monomial.sort_key))
        return cls(j, k, rows)

    def domain(self) -> list[Monomial]:
        return [w for w, _, _ in self.assignments]

    def as_dict(self) -> dict:
        return {w: (phi, psi) for w, phi, psi in self.assignments}

    def to_json(self) -> list[list[str]]:
        return [[str(w), str(phi), str(psi)] for w, phi, psi in self.assignments]


def degree_violations(g: Graph, cp: CyclePartition) -> list[tuple[str, str]]:
    k = cp.k
    big = [degree(g, u) > 2 for u in cp.cycle]
    return [(cp.cycle[i], cp.cycle[(i + 1) % k]) for i in range(k) if big[i] and big[(i + 1) % k]]


def build_splitting_function(g: Graph, cp: CyclePartition) -> SplittingFunction:
    cp = make_cycle_partition(g, cp.cycle)
    bad = degree_violations(g, cp)
    if bad:
        a, b = bad[0]
        raise HypothesisViolated(f"adjacent cycle vertices {a}, {b} both have degree > 2", bad[0])
    if not (cp.ew or cp.ex):
        raise ZeroIdealError("the complement of the cycle has no edges")
    j = edge_ideal(cycle_subgraph(g, cp))
    k = edge_ideal(cycle_complement(g, cp))
    abc = abc_decomposition(g, cp)
    on_cycle = set(cp.cycle)
    mapping = {}
    for w in abc.a_set:
        pair = w.support & on_cycle
        (wp,) = w.support - on_cycle
        cands = [frozenset((u, wp)) for u in sorted(pair, key=natural_key) if frozenset((u, wp)) in cp.ex]
        if len(cands) != 1:
            raise AmbiguousAssignment(f"{w}: both cycle vertices are joined to {wp}")
        mapping[w] = (Monomial(pair), Monomial(cands[0]))
    for w in abc.b_set:
        us = w.support & on_cycle
        (wp,) = w.support - on_cycle
        edges = [e for e in cp.eu if e <= us]
        if len(edges) != 1:
            raise AmbiguousAssignment(f"{w}: cannot identify its cycle edge")
        (uj,) = us - edges[0]
        mapping[w] = (Monomial(edges[0]), Monomial(frozenset((uj, wp))))
    for w in abc.c_set:
        mapping[w] = (Monomial(w.support & on_cycle), Monomial(w.support - on_cycle))
    return SplittingFunction.build(j, k, mapping)


def verify_lcm_condition(sf: SplittingFunction) -> bool:
    """Totality over G(J cap K), w = lcm(phi(w), psi(w)), phi in G(J), psi in G(K)."""
    if set(sf.domain()) != set(intersect(sf.j, sf.k).generators):
        return False
    return all(lcm(phi, psi) == w and phi in sf.j and psi in sf.k for w, phi, psi in sf.assignments)


@dataclass(frozen=True)
class DivisibilityResult:
    passed: bool
    witness: Optional[tuple] = None  # the violating subset S, as monomials
    side: Optional[str] = None  # "phi" or "psi"
    lcm_s: Optional[Monomial] = None
    lcm_image: Optional[Monomial] = None

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "witness": None if self.witness is None else [str(m) for m in self.witness],
            "side": self.side,
            "lcm_S": None if self.lcm_s is None else str(self.lcm_s),
            "lcm_image": None if self.lcm_image is None else str(self.lcm_image),
        }


def _masks(sf: SplittingFunction):
    names = sorted({v for row in sf.assignments for m in row for v in m.support}, key=natural_key)
    index = {v: i for i, v in enumerate(names)}

    def mask(m):
        return sum(1 << index[v] for v in m.support)

    return [tuple(mask(m) for m in row) for row in sf.assignments], len(names)


def check_subset(sf: SplittingFunction, subset) -> DivisibilityResult:
    """Condition (b) for one subset S, given as positions into ``sf.assignments``."""
    rows = [sf.assignments[t] for t in subset]
    s = lcm_all(w for w, _, _ in rows)
    for side, col in (("phi", 1), ("psi", 2)):
        img = lcm_all(r[col] for r in rows)
        if not strictly_divides(img, s):
            return DivisibilityResult(False, tuple(r[0] for r in rows), side, s, img)
    return DivisibilityResult(True)


def _bad(img: int, s: int) -> bool:
    return img == s or bool(img & ~s)


def _any_violation(masks, nvars) -> bool:
    """Vectorised scan of every nonempty subset; index bit t selects generator t."""
    if nvars > 63:
        lw, lp, lq = [0], [0], [0]
        for w, p, q in masks:
            lw += [x | w for x in lw]
            lp += [x | p for x in lp]
            lq += [x | q for x in lq]
        return any(_bad(lp[i], lw[i]) or _bad(lq[i], lw[i]) for i in range(1, len(lw)))
    lw = np.zeros(1, dtype=np.uint64)
    lp = lw.copy()
    lq = lw.copy()
    for w, p, q in masks:
        lw = np.concatenate((lw, lw | np.uint64(w)))
        lp = np.concatenate((lp, lp | np.uint64(p)))
        lq = np.concatenate((lq, lq | np.uint64(q)))
    lw, lp, lq = lw[1:], lp[1:], lq[1:]
    bad = (lp == lw) | ((lp & ~lw) != 0) | (lq == lw) | ((lq & ~lw) != 0)
    return bool(bad.any())


def _least_violation(masks):
    """Depth-first walk visiting subsets in lexicographic order of index tuples."""
    n = len(masks)

    def walk(start, lw, lp, lq, chosen):
        for t in range(start, n):
            w, p, q = masks[t]
            nw, np_, nq = lw | w, lp | p, lq | q
            chosen.append(t)
            if _bad(np_, nw) or _bad(nq, nw):
                return list(chosen)
            found = walk(t + 1, nw, np_, nq, chosen)
            if found:
                return found
            chosen.pop()
        return None

    return walk(0, 0, 0, 0, [])


def verify_strict_divisibility(sf: SplittingFunction,
                               max_generators: int = MAX_VERIFY_GENERATORS) -> DivisibilityResult:
    """Check that lcm(phi(S)) and lcm(psi(S)) strictly divide lcm(S) for every nonempty S.

    On failure the witness is the least violating S, ordering subsets as
    increasing tuples of generator positions compared lexicographically.
    """
    n = len(sf.assignments)
    if n > max_generators:
        raise CapExceeded(f"{n} generators exceed the subset-enumeration cap of {max_generators}")
    if n == 0:
        return DivisibilityResult(True)
    masks, nvars = _masks(sf)
    if not _any_violation(masks, nvars):
        return DivisibilityResult(True)
    return check_subset(sf, _least_violation(masks))


def verify_strict_divisibility_plain(sf: SplittingFunction) -> DivisibilityResult:
    """Reference check by direct enumeration of all subsets."""
    n = len(sf.assignments)
    best = None
    for r in range(1, n + 1):
        for subset in combinations(range(n), r):
            if not check_subset(sf, subset):
                best = subset if best is None else min(best, subset)
    return DivisibilityResult(True) if best is None else check_subset(sf, best)


# -- exhaustive search -----------------------------------------------------------

def candidate_assignments(j: MonomialIdeal, k: MonomialIdeal) -> dict:
    """For each w in G(J cap K), every (f, g) in G(J) x G(K) with lcm(f, g) = w."""
    jk = intersect(j, k)
    out = {}
    for w in jk.generators:
        cands = [(f, g) for f in j.generators for g in k.generators if lcm(f, g) == w]
        if not cands:
            raise NoCandidatesError(f"no pair of generators has lcm {w}")
        out[w] = cands
    return out


def search_splitting_function(j: MonomialIdeal, k: MonomialIdeal,
                              max_generators: int = MAX_SEARCH_GENERATORS) -> Optional[SplittingFunction]:
    jk = intersect(j, k)
    if len(jk) > max_generators:
        raise CapExceeded(f"{len(jk)} generators exceed the search cap of {max_generators}")
    cands = candidate_assignments(j, k)
    gens = list(jk.generators)
    names = sorted(set().union(*(w.support for w in gens)) if gens else (), key=natural_key)
    index = {v: i for i, v in enumerate(names)}

    def mask(m):
        return sum(1 << index[v] for v in m.support)

    options = [[(mask(w), mask(f), mask(g), (f, g)) for f, g in cands[w]] for w in gens]
    chosen = []

    # lw/lp/lq hold lcm masks of every subset of the generators assigned so far;
    # a new generator only needs the subsets that contain it.
    def extend(t, lw, lp, lq):
        if t == len(gens):
            return True
        for w, p, q, pair in options[t]:
            nw = [x | w for x in lw]
            np_ = [x | p for x in lp]
            nq = [x | q for x in lq]
            if any(_bad(a, c) or _bad(b, c) for a, b, c in zip(np_, nq, nw)):
                continue
            chosen.append(pair)
            if extend(t + 1, lw + nw, lp + np_, lq + nq):
                return True
            chosen.pop()
        return False

    if not extend(0, [0], [0], [0]):
        return None
    return SplittingFunction.build(j, k, dict(zip(gens, chosen)))


@dataclass(frozen=True)
class ForcedAnalysis:
    """Condition (b) tested on S = all of G(J cap K), across every (a)-compatible choice."""

    candidates: dict
    lcm_all: Monomial
    phi_lcms: frozenset
    psi_lcms: frozenset
    fails_for_every_choice: bool

    def to_json(self) -> dict:
        return {
            "candidates": {str(w): [[str(f), str(g)] for f, g in c] for w, c in self.candidates.items()},
            "lcm_S": str(self.lcm_all),
            "lcm_phi_S": sorted(str(m) for m in self.phi_lcms),
            "lcm_psi_S": sorted(str(m) for m in self.psi_lcms),
            "fails_for_every_choice": self.fails_for_every_choice,
        }


def forced_assignment_analysis(j: MonomialIdeal, k: MonomialIdeal, max_choices: int = 4096) -> ForcedAnalysis:
    cands = candidate_assignments(j, k)
    count = 1
    for c in cands.values():
        count *= len(c)
    if count > max_choices:
        raise CapExceeded(f"{count} candidate functions exceed the cap of {max_choices}")
    whole = lcm_all(cands)
    phis, psis = set(), set()
    every = True
    for choice in product(*cands.values()):
        lp = lcm_all(f for f, _ in choice)
        lq = lcm_all(g for _, g in choice)
        phis.add(lp)
        psis.add(lq)
        every = every and (lp == whole or lq == whole)
    return ForcedAnalysis(cands, whole, frozenset(phis), frozenset(psis), every)


# -- certification -----------------------------------------------------------------

class Verdict(str, enum.Enum):
    CERTIFIED = "certified-splitting"
    FOUND_BY_SEARCH = "hypothesis-fails-but-splitting-found"
    NO_FUNCTION = "no-splitting-function"
    NOT_CHECKED = "not-checked"


@dataclass(frozen=True)
class SplitCertificate:
    cycle: tuple
    hypothesis_holds: bool
    offending_pairs: tuple
    nonzero_parts: bool
    disjoint_generators: bool
    condition_a: bool
    condition_b: bool
    witness: Optional[DivisibilityResult]
    function: Optional[SplittingFunction]
    method: Optional[str]
    verdict: Verdict

    def __post_init__(self):
        if self.verdict is Verdict.CERTIFIED:
            assert self.hypothesis_holds and self.condition_a and self.condition_b and self.nonzero_parts
        if self.verdict is Verdict.FOUND_BY_SEARCH:
            assert not self.hypothesis_holds and self.condition_a and self.condition_b

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "verdict": self.verdict.value,
            "hypothesis_holds": self.hypothesis_holds,
            "offending_pairs": [list(p) for p in self.offending_pairs],
            "nonzero_parts": self.nonzero_parts,
            "disjoint_generators": self.disjoint_generators,
            "condition_a": self.condition_a,
            "condition_b": self.condition_b,
            "witness": None if self.witness is None else self.witness.to_json(),
            "method": self.method,
            "function": None if self.function is None else self.function.to_json(),
        }


def certify(g: Graph, cp: CyclePartition, search: bool = True,
            max_generators: int = MAX_VERIFY_GENERATORS,
            search_max_generators: int = MAX_SEARCH_GENERATORS) -> SplitCertificate:
    cp = make_cycle_partition(g, cp.cycle)
    j = edge_ideal(cycle_subgraph(g, cp))
    k = edge_ideal(cycle_complement(g, cp))
    hyp = splitting_condition(g, cp)
    bad = tuple(degree_violations(g, cp))
    disjoint = not (set(j.generators) & set(k.generators))
    base = dict(cycle=cp.cycle, hypothesis_holds=hyp, offending_pairs=bad, disjoint_generators=disjoint)

    if k.is_zero:
        return SplitCertificate(**base, nonzero_parts=False, condition_a=False, condition_b=False,
                                witness=None, function=None, method=None, verdict=Verdict.NOT_CHECKED)
    base["nonzero_parts"] = True

    if hyp:
        sf = build_splitting_function(g, cp)
        cond_a = verify_lcm_condition(sf)
        cond_b = verify_strict_divisibility(sf, max_generators)
        if not (cond_a and cond_b):
            raise RuntimeError(f"constructed splitting function failed verification on cycle {cp.cycle}")
        return SplitCertificate(**base, condition_a=True, condition_b=True, witness=None, function=sf,
                                method="construction", verdict=Verdict.CERTIFIED)

    if not search:
        return SplitCertificate(**base, condition_a=False, condition_b=False, witness=None, function=None,
                                method=None, verdict=Verdict.NOT_CHECKED)

    found = search_splitting_function(j, k, search_max_generators)
    if found is not None:
        return SplitCertificate(**base, condition_a=True, condition_b=True, witness=None, function=found,
                                method="search", verdict=Verdict.FOUND_BY_SEARCH)
    # Report the failure of the first (a)-compatible assignment.
    cands = candidate_assignments(j, k)
    first = SplittingFunction.build(j, k, {w: c[0] for w, c in cands.items()})
    return SplitCertificate(**base, condition_a=True, condition_b=False,
                            witness=verify_strict_divisibility(first, max_generators), function=None,
                            method="search", verdict=Verdict.NO_FUNCTION)
