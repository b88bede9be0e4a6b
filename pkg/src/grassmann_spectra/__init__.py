"""Grassmann graphs, subspace-inclusion graphs and exact certificates of their spectra."""

from .enumeration import CapExceeded, enumerate_subspaces
from .field import FieldElement, FieldSpec, field_of_order, make_field
from .graphs import Graph, build_grassmann, build_inclusion, is_connected
from .linalg import Subspace, annihilator, contains, intersect_dim, span_sum, subspace_from_rows
from .qcount import count_disjoint, count_intersecting, cover_count, gaussian_binomial, q_bracket_one
from .spectra import (
    ExactEigenvalue,
    SpectrumTable,
    grassmann_spectrum_closed,
    inclusion_spectrum_closed,
    square_spectrum_closed,
)

__all__ = [
    "CapExceeded",
    "ExactEigenvalue",
    "FieldElement",
    "FieldSpec",
    "Graph",
    "SpectrumTable",
    "Subspace",
    "annihilator",
    "build_grassmann",
    "build_inclusion",
    "contains",
    "count_disjoint",
    "count_intersecting",
    "cover_count",
    "enumerate_subspaces",
    "field_of_order",
    "gaussian_binomial",
    "grassmann_spectrum_closed",
    "inclusion_spectrum_closed",
    "intersect_dim",
    "is_connected",
    "make_field",
    "q_bracket_one",
    "span_sum",
    "square_spectrum_closed",
    "subspace_from_rows",
]
