"""Exact spectra and integrality classification of mixed Cayley graphs
over finite abelian groups."""

from .atoms import (
    AtomDecomposition,
    atom_of,
    atom_partition,
    divisors_mod3,
    divisors_not3,
    eclass_of,
    g_units,
    g_units_mod3,
    in_boolean_algebra,
    in_skew_family,
)
from .cayley import (
    ConnectionSet,
    ExactSpectrum,
    MixedGraphMatrices,
    NumericOracleError,
    a_eigenvalue,
    build_matrices,
    exact_spectrum,
    hs_eigenvalue,
    hs_eigenvalue_components,
    make_connection_set,
    matrices_to_json,
    numeric_hermitian_eigenvalues,
    to_dot,
)
from .cyclo import (
    CycloNum,
    Poly,
    as_eisenstein,
    as_integer,
    as_rational,
    cyclotomic_poly,
    phi3_factors,
    reduce_root_counts,
    root,
    totient,
)
from .groups import Element, GroupSpec, make_group, parse_group
from .integrality import (
    CertificateValues,
    ClassificationReport,
    ConsistencyError,
    EnumerationStream,
    VerificationReport,
    atom_character_sum,
    certificate,
    classify,
    eisenstein_components,
    enumerate_hs_integral,
    verify_theorems,
)

__all__ = [
    "AtomDecomposition",
    "CertificateValues",
    "ClassificationReport",
    "ConnectionSet",
    "ConsistencyError",
    "CycloNum",
    "Element",
    "EnumerationStream",
    "ExactSpectrum",
    "GroupSpec",
    "MixedGraphMatrices",
    "NumericOracleError",
    "Poly",
    "VerificationReport",
    "a_eigenvalue",
    "as_eisenstein",
    "as_integer",
    "as_rational",
    "atom_character_sum",
    "atom_of",
    "atom_partition",
    "build_matrices",
    "certificate",
    "classify",
    "cyclotomic_poly",
    "divisors_mod3",
    "divisors_not3",
    "eclass_of",
    "eisenstein_components",
    "enumerate_hs_integral",
    "exact_spectrum",
    "g_units",
    "g_units_mod3",
    "hs_eigenvalue",
    "hs_eigenvalue_components",
    "in_boolean_algebra",
    "in_skew_family",
    "make_connection_set",
    "make_group",
    "matrices_to_json",
    "numeric_hermitian_eigenvalues",
    "parse_group",
    "phi3_factors",
    "reduce_root_counts",
    "root",
    "to_dot",
    "totient",
    "verify_theorems",
]
