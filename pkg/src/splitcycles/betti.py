"""Graded Betti numbers of square-free monomial ideals via Hochster's formula.

beta_{i,j}(I) = sum over vertex subsets W with |W| = j of
dim H~_{j-i-2}(Delta_W), where Delta is the Stanley-Reisner complex of I
(the independence complex, for an edge ideal). Homological degree i starts
at 0, so beta_{0,j} counts minimal generators of degree j.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import CapExceeded, InputError
from .graph import Graph, CyclePartition, cycle_complement, cycle_graph, cycle_subgraph, \
    make_cycle_partition, spoke_deleted_wheel, star_graph, wheel_graph
from .homology import homology_from_faces, stanley_reisner_faces
from .monomials import MonomialIdeal, edge_ideal, intersect, minimalize

DEFAULT_CAP = 14


@dataclass(frozen=True)
class BettiTable:
    entries: dict = field(default_factory=dict)  # (i, j) -> positive multiplicity

    def __post_init__(self):
        for (i, j), b in self.entries.items():
            if i < 0 or j < 0 or b <= 0:
                raise ValueError(f"bad Betti entry beta_{i},{j} = {b}")

    @classmethod
    def from_counts(cls, counts: dict) -> "BettiTable":
        return cls({key: v for key, v in sorted(counts.items()) if v})

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def totals(self) -> list[int]:
        return total_betti(self)

    def shift(self, di: int = 0, dj: int = 0) -> "BettiTable":
        return BettiTable.from_counts({(i + di, j + dj): b for (i, j), b in self.entries.items()})

    def to_json(self) -> dict:
        return {
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())],
            "totals": self.totals(),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "BettiTable":
        return cls.from_counts({(e["i"], e["j"]): e["beta"] for e in doc["entries"]})


def total_betti(t: BettiTable) -> list[int]:
    if not t.entries:
        return []
    out = [0] * (max(i for i, _ in t.entries) + 1)
    for (i, _), b in t.entries.items():
        out[i] += b
    return out


# -- Hochster sum --------------------------------------------------------------

def _hochster_chunk(args) -> dict:
    n, gens, lo, hi = args
    counts: dict = {}
    for w in range(max(lo, 1), hi):
        inside = [g for g in gens if g & ~w == 0]
        covered = 0
        for g in inside:
            covered |= g
        if covered != w:
            # some vertex of W lies in no generator inside W: Delta_W is a cone
            continue
        j = bin(w).count("1")
        dims = homology_from_faces(stanley_reisner_faces(n, inside, within=w))
        for slot, h in enumerate(dims):
            if h:
                key = (j - slot - 1, j)  # slot = homological dimension + 1
                counts[key] = counts.get(key, 0) + h
    return counts


def _hochster(n: int, gens: Sequence[int], workers: int = 1) -> BettiTable:
    total = 1 << n
    if workers <= 1:
        counts = _hochster_chunk((n, list(gens), 0, total))
    else:
        step = max(1, -(-total // (workers * 4)))
        jobs = [(n, list(gens), lo, min(lo + step, total)) for lo in range(0, total, step)]
        counts = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_hochster_chunk, jobs):
                for key, v in part.items():
                    counts[key] = counts.get(key, 0) + v
    return BettiTable.from_counts(counts)


def graded_betti(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> BettiTable:
    """Graded Betti table of the edge ideal of ``g``."""
    if g.n > cap:
        raise CapExceeded(f"graph has {g.n} vertices, cap is {cap}")
    index = {v: i for i, v in enumerate(g.vertices)}
    gens = [sum(1 << index[v] for v in e) for e in g.edges]
    return _hochster(g.n, gens, workers)


def graded_betti_ideal(ideal: MonomialIdeal, variables: Sequence[str] | None = None,
                       cap: int = DEFAULT_CAP, workers: int = 1) -> BettiTable:
    """Graded Betti table of a square-free monomial ideal."""
    if variables is None:
        variables = ideal.variables()
    index = {v: i for i, v in enumerate(variables)}
    missing = [v for v in ideal.variables() if v not in index]
    if missing:
        raise InputError(f"generators use variables outside the ambient set: {missing}")
    if len(variables) > cap:
        raise CapExceeded(f"ideal has {len(variables)} variables, cap is {cap}")
    gens = [sum(1 << index[v] for v in m.support) for m in ideal.generators]
    return _hochster(len(variables), gens, workers)


# -- Eliahou-Kervaire comparison -------------------------------------------------

@dataclass(frozen=True)
class EKColumn:
    i: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class EKGraded:
    i: int
    j: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class EKReport:
    columns: tuple
    graded: tuple
    tables: dict  # "I", "J", "K", "JK" -> BettiTable

    @property
    def overall(self) -> bool:
        return all(c.equal for c in self.columns)

    def column(self, i: int) -> EKColumn:
        return next(c for c in self.columns if c.i == i)

    def failing(self) -> list[int]:
        return [c.i for c in self.columns if not c.equal]

    def to_json(self) -> dict:
        return {
            "overall": self.overall,
            "columns": [{"i": c.i, "lhs": c.lhs, "rhs": c.rhs, "equal": c.equal} for c in self.columns],
            "graded": [{"i": c.i, "j": c.j, "lhs": c.lhs, "rhs": c.rhs, "equal": c.equal}
                       for c in self.graded],
            "graded_overall": all(c.equal for c in self.graded),
        }


def ek_compare(ti: BettiTable, tj: BettiTable, tk: BettiTable, tjk: BettiTable) -> EKReport:
    """Compare beta_i(I) with beta_i(J) + beta_i(K) + beta_{i-1}(J cap K), beta_{-1} = 0."""
    tot = {name: total_betti(t) for name, t in (("I", ti), ("J", tj), ("K", tk), ("JK", tjk))}

    def at(seq, i):
        return seq[i] if 0 <= i < len(seq) else 0

    width = max(len(tot["I"]), len(tot["J"]), len(tot["K"]), len(tot["JK"]) + 1)
    columns = tuple(
        EKColumn(i, at(tot["I"], i), at(tot["J"], i) + at(tot["K"], i) + at(tot["JK"], i - 1))
        for i in range(width))
    keys = set(ti.entries) | set(tj.entries) | set(tk.entries) | {(i + 1, j) for i, j in tjk.entries}
    graded = tuple(
        EKGraded(i, j, ti.get(i, j), tj.get(i, j) + tk.get(i, j) + tjk.get(i - 1, j))
        for i, j in sorted(keys))
    return EKReport(columns, graded, {"I": ti, "J": tj, "K": tk, "JK": tjk})


def ek_check(g: Graph, cp: CyclePartition, cap: int = DEFAULT_CAP, workers: int = 1) -> EKReport:
    j_ideal = edge_ideal(cycle_subgraph(g, cp))
    k_ideal = edge_ideal(cycle_complement(g, cp))
    jk = intersect(j_ideal, k_ideal)
    return ek_compare(
        graded_betti(g, cap, workers),
        graded_betti(cycle_subgraph(g, cp), cap, workers),
        graded_betti(cycle_complement(g, cp), cap, workers),
        graded_betti_ideal(jk, cap=cap, workers=workers),
    )


def ek_check_ideals(j: MonomialIdeal, k: MonomialIdeal, cap: int = DEFAULT_CAP,
                    workers: int = 1) -> EKReport:
    """EK comparison for an arbitrary decomposition I = J + K of square-free ideals."""
    i_ideal = minimalize([*j.generators, *k.generators])
    return ek_compare(
        graded_betti_ideal(i_ideal, cap=cap, workers=workers),
        graded_betti_ideal(j, cap=cap, workers=workers),
        graded_betti_ideal(k, cap=cap, workers=workers),
        graded_betti_ideal(intersect(j, k), cap=cap, workers=workers),
    )


# -- wheels --------------------------------------------------------------------

def wheel_formula_betti(k: int, cap: int = DEFAULT_CAP, workers: int = 1) -> BettiTable:
    """Betti table of the full wheel on 2k+1 vertices from cycle and star data.

    The spoke-deleted wheel splits along its rim with J cap K = w * I(C_2k), so
    its intersection term beta_{i-1,j}(J cap K) is beta_{i-1,j-1}(C_2k). The
    linear strand j = i+2 then gains sum_{a=k}^{2k-1} C(a, i).
    """
    if k < 2:
        raise InputError("wheel formula needs k >= 2")
    cyc = graded_betti(cycle_graph(2 * k), cap, workers)
    star = graded_betti(star_graph([f"u{i}" for i in range(2, 2 * k + 1, 2)]), cap, workers)
    counts: dict = {}
    for (i, j), b in cyc.entries.items():
        counts[i, j] = counts.get((i, j), 0) + b
        counts[i + 1, j + 1] = counts.get((i + 1, j + 1), 0) + b
    for key, b in star.entries.items():
        counts[key] = counts.get(key, 0) + b
    for i in range(2 * k):
        extra = sum(comb(a, i) for a in range(k, 2 * k))
        counts[i, i + 2] = counts.get((i, i + 2), 0) + extra
    return BettiTable.from_counts(counts)


def wheel_oracle_betti(k: int, cap: int = DEFAULT_CAP, workers: int = 1) -> BettiTable:
    return graded_betti(wheel_graph(k), cap, workers)


def wheel_intersection_tables(k: int, cap: int = DEFAULT_CAP) -> tuple[BettiTable, BettiTable]:
    """(beta(J cap K) for the spoke-deleted wheel, beta(I(C_2k)) shifted by one internal degree)."""
    g = spoke_deleted_wheel(k)
    cp = make_cycle_partition(g, [f"u{i}" for i in range(1, 2 * k + 1)])
    jk = intersect(edge_ideal(cycle_subgraph(g, cp)), edge_ideal(cycle_complement(g, cp)))
    return graded_betti_ideal(jk, cap=cap), graded_betti(cycle_graph(2 * k), cap).shift(dj=1)


# -- text rendering --------------------------------------------------------------

def render_paper_table(t: BettiTable) -> str:
    """Column c = i + 1, row r = j - i - 1, '-' for empty cells, then a total row."""
    if not t.entries:
        return "\ntotal:\n"
    ncols = max(i for i, _ in t.entries) + 1
    rows = [j - i - 1 for i, j in t.entries]
    lo, hi = min(1, min(rows)), max(rows)
    cell = {(i + 1, j - i - 1): str(b) for (i, j), b in t.entries.items()}
    totals = [str(x) for x in total_betti(t)]
    width = max(len(s) for s in [*cell.values(), *totals, str(ncols)])
    label = max(len("total:"), len(f"{hi}:"), len(f"{lo}:"))

    def line(head, cells):
        return (head.rjust(label) + " " + " ".join(c.rjust(width) for c in cells)).rstrip()

    out = [line("", [str(c) for c in range(1, ncols + 1)])]
    for r in range(lo, hi + 1):
        out.append(line(f"{r}:", [cell.get((c, r), "-") for c in range(1, ncols + 1)]))
    out.append(line("total:", totals))
    return "\n".join(out) + "\n"
