"""Markov equivalence class enumeration toolkit."""

from mecenum._core import (
    NotChordalError,
    NotExtendableError,
    Pdag,
    TooLargeError,
    apply_meek_rules,
    brute_force_extensions,
    consistent_extension,
    count_dags,
    covered_edges,
    cpdag_to_pdag,
    dag_to_cpdag,
    enumerate_dags,
    for_each_dag,
    is_acyclic,
    is_chordal,
    markov_equivalent,
    maximal_orientation,
    mcs,
    mec_size,
    parse,
    random_chordal,
    random_dag,
    shd,
    skeleton,
    to_dot,
    to_text,
    v_structures,
)

__all__ = [
    "NotChordalError",
    "NotExtendableError",
    "Pdag",
    "TooLargeError",
    "apply_meek_rules",
    "brute_force_extensions",
    "consistent_extension",
    "count_dags",
    "covered_edges",
    "cpdag_to_pdag",
    "dag_to_cpdag",
    "enumerate_dags",
    "for_each_dag",
    "is_acyclic",
    "is_chordal",
    "markov_equivalent",
    "maximal_orientation",
    "mcs",
    "mec_size",
    "parse",
    "random_chordal",
    "random_dag",
    "shd",
    "skeleton",
    "to_dot",
    "to_text",
    "v_structures",
]

__version__ = "0.1.0"
