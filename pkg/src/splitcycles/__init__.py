"""Splitting cycles of edge ideals, graded Betti numbers and the Eliahou-Kervaire check."""

__version__ = "0.1.0"

from .betti import (
    BettiTable,
    EKReport,
    ek_check,
    ek_check_ideals,
    graded_betti,
    graded_betti_ideal,
    render_paper_table,
    total_betti,
    wheel_formula_betti,
)
from .graph import (
    CyclePartition,
    Graph,
    cycle_complement,
    cycle_neighborhood,
    degree,
    induced_chordless_cycles,
    make_cycle_partition,
    parse_graph,
    splitting_condition,
)
from .monomials import Monomial, MonomialIdeal, edge_ideal, intersect, minimalize
from .splitting import (
    SplitCertificate,
    SplittingFunction,
    Verdict,
    abc_decomposition,
    build_splitting_function,
    certify,
    search_splitting_function,
    verify_lcm_condition,
    verify_strict_divisibility,
)
