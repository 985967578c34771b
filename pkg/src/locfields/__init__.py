"""Explicit abelian fields over Q with controllable local degrees.

The package represents a finite abelian extension of Q by a conductor m
and a subgroup H of the units mod m, and computes splitting data, Gaussian
period minimal polynomials, cyclic extensions with prescribed split
primes, realizations of products of cyclic groups with bounded or
unbounded local degrees, and index divisibility tests for monic integer
polynomials.
"""

from .config import Config, DEFAULT_CONFIG, config_from_env
from .dedekind import (DedekindReport, IndexScanReport, ScanEntry,
                       dedekind_index_test, monogenic_degree_bound,
                       monogenic_index_scan)
from .errors import (CapExceededError, DegeneratePeriodError, LocfieldsError,
                     PrecisionError, SearchExhaustedError, ValidationError)
from .fields import (AbelianField, SplittingData, compositum,
                     cyclotomic_field, contains, field_from_document,
                     field_from_lattice, fixed_field, intersection,
                     local_degree, rational_field, roots_of_unity,
                     splitting_data, to_document, totally_split)
from .grunwald import (ConstructionTrace, CyclicFieldRequest,
                       construct_cyclic)
from .intpoly import (IntPolynomial, cyclotomic_polynomial, discriminant,
                      eisenstein_cubic, int_poly, is_eisenstein, resultant)
from .fppoly import FpPolynomial, fp_factor, fp_is_irreducible, fp_poly
from .periods import period_minimal_polynomial, quotient_structure
from .realizations import (ComponentRecord, RealizationReport,
                           SquarefreePrime, bounded_realization,
                           local_degree_bound, squarefree_primes,
                           unbounded_realization)
from .zmodstar import (Subgroup, UnitGroup, cyclic_decomposition,
                       discrete_log_mod_q, element_order, membership,
                       subgroup_closure, subgroup_from_lattice,
                       subgroup_join, unit_group, unit_group_from_factors)

__version__ = "0.1.0"

__all__ = [
    "AbelianField", "CapExceededError", "ComponentRecord", "Config",
    "ConstructionTrace", "CyclicFieldRequest", "DEFAULT_CONFIG",
    "DedekindReport", "DegeneratePeriodError", "FpPolynomial",
    "IndexScanReport", "IntPolynomial", "LocfieldsError", "PrecisionError",
    "RealizationReport", "ScanEntry", "SearchExhaustedError",
    "SplittingData", "SquarefreePrime", "Subgroup", "UnitGroup",
    "ValidationError", "bounded_realization", "compositum", "config_from_env",
    "construct_cyclic", "contains", "cyclic_decomposition",
    "cyclotomic_field", "cyclotomic_polynomial", "dedekind_index_test",
    "discrete_log_mod_q", "discriminant", "eisenstein_cubic", "element_order",
    "field_from_document", "field_from_lattice", "fixed_field", "fp_factor",
    "fp_is_irreducible", "fp_poly", "int_poly", "intersection",
    "is_eisenstein", "local_degree", "local_degree_bound", "membership",
    "monogenic_degree_bound", "monogenic_index_scan",
    "period_minimal_polynomial", "quotient_structure", "rational_field",
    "resultant", "roots_of_unity", "splitting_data", "squarefree_primes",
    "subgroup_closure", "subgroup_from_lattice", "subgroup_join",
    "to_document", "totally_split", "unbounded_realization", "unit_group",
    "unit_group_from_factors", "__version__",
]
