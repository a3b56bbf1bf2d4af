"""Genus spectra of Galois subfields of the GGK function fields."""

from ._ggk import (
    ConsistencyError,
    SearchBudgetExceeded,
    ambient_genus,
    compare_known,
    factorizations,
    field_spectrum,
    genus,
    genus_set,
    hermitian_genus,
    realizable_cardinalities,
    spectrum,
    subgroup_count,
    verify,
)

__all__ = [
    "ConsistencyError",
    "SearchBudgetExceeded",
    "ambient_genus",
    "compare_known",
    "factorizations",
    "field_spectrum",
    "genus",
    "genus_set",
    "hermitian_genus",
    "realizable_cardinalities",
    "spectrum",
    "subgroup_count",
    "verify",
]
