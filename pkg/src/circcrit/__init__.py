"""Circular colourings, criticality and the structure of 4-critical graphs without (7,2)-colourings."""
from __future__ import annotations

from .circular import (
    AvailabilityInterval,
    CircularTarget,
    Colouring,
    available_colours,
    circular_chromatic_number,
    circular_clique,
    count_colourings_oracle,
    find_colouring,
    is_valid_colouring,
    lower_parents,
    reduce_nonsurjective,
)
from .constructions import (
    c6_expansion,
    complete,
    corpus_generate,
    cycle,
    indicator_compose,
    k_ore_family,
    moser_spindle,
    mycielski,
    ore_compose,
    path,
    wheel,
)
from .critical import CriticalityVerdict, chromatic_number, is_h_critical, is_k_critical
from .density import discharging_audit, evaluate_bounds, kostochka_yancey_bound, verify_main_theorem
from .formats import GraphFormatError, parse_graph_file, to_graph6, to_sparse6
from .gallai import (
    audit_alternating_path,
    audit_no_kminus1_clique,
    audit_path3_structure,
    audit_structure_theorem,
    gallai_tree,
    is_odd_wheel,
)
from .graph import Graph, GraphError, blocks, complement, has_hamiltonian_cycle, is_isomorphic
from .lists import ListAssignment, solve_list
from .suites import SuiteResult, run_suite

__version__ = "0.1.0"
