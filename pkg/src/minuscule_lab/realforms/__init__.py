"""Satake diagrams, quasi-compact real forms, and the adapted-real-form tables."""
from .satake import (
    InnerClass,
    QuasiCompactCatalog,
    SatakeDiagram,
    SatakeError,
    SwapClass,
    delete_node,
    is_quasi_compact,
    isomorphic,
    quasi_compact_catalog,
    simple_inner_class,
)
from .tables import (
    TableRow,
    appendix_tables,
    instantiate,
    instantiate_range,
    levi_from_label,
    tables_document,
    tables_markdown,
)
from .verify import catalog_checks, coxeter_parity_check, rank_comparison_cases, verify_row

__all__ = [
    "InnerClass", "QuasiCompactCatalog", "SatakeDiagram", "SatakeError", "SwapClass",
    "TableRow", "appendix_tables", "catalog_checks", "coxeter_parity_check", "delete_node",
    "instantiate", "instantiate_range", "is_quasi_compact", "isomorphic", "levi_from_label",
    "quasi_compact_catalog", "rank_comparison_cases", "simple_inner_class", "tables_document",
    "tables_markdown", "verify_row",
]
