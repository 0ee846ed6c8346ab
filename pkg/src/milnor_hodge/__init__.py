"""Exact Hodge-theoretic invariants of complex hypersurface singularities."""
from .errors import (DimensionMismatchError, InexactDivisionError, MilnorHodgeError,
                     PoleError, PreconditionError, SchemaError, StratificationError)
from .hodge import (ChiClass, HodgeEntry, HodgeTable, chi_one, chi_y_of_spectrum,
                    du_bois_test, hodge_table, link_is_rational_homology_sphere,
                    reduced_total_chi, rhm_signature_check, signature_steenbrink, total_chi)
from .kernel import FracPoly, LaurentPolyY, TruncatedSeries, laurent_eval, series_q_y, todd_series
from .projective import (ProjectiveHypersurface, chi_y_singular, chi_y_virtual, degree_mt,
                         euler_defect)
from .spectrum import (Spectrum, brieskorn_pham, is_symmetric, milnor_number, quasi_homogeneous,
                       suspension, thom_sebastiani)
from .strata import (StratifiedClass, Stratification, Stratum, consistency_report, it_hat,
                     mit_isolated, mit_stratified, mit_stratified_ic, mt_isolated, mt_smooth_locus,
                     mt_stratified_direct, mt_stratified_ic, t_minus_it)

__version__ = "0.1.0"

__all__ = [
    "ChiClass",
    "DimensionMismatchError",
    "FracPoly",
    "HodgeEntry",
    "HodgeTable",
    "InexactDivisionError",
    "LaurentPolyY",
    "MilnorHodgeError",
    "PoleError",
    "PreconditionError",
    "ProjectiveHypersurface",
    "SchemaError",
    "Spectrum",
    "Stratification",
    "StratificationError",
    "StratifiedClass",
    "Stratum",
    "TruncatedSeries",
    "brieskorn_pham",
    "chi_one",
    "chi_y_of_spectrum",
    "chi_y_singular",
    "chi_y_virtual",
    "consistency_report",
    "degree_mt",
    "du_bois_test",
    "euler_defect",
    "hodge_table",
    "is_symmetric",
    "it_hat",
    "laurent_eval",
    "link_is_rational_homology_sphere",
    "milnor_number",
    "mit_isolated",
    "mit_stratified",
    "mit_stratified_ic",
    "mt_isolated",
    "mt_smooth_locus",
    "mt_stratified_direct",
    "mt_stratified_ic",
    "quasi_homogeneous",
    "reduced_total_chi",
    "rhm_signature_check",
    "series_q_y",
    "signature_steenbrink",
    "suspension",
    "t_minus_it",
    "thom_sebastiani",
    "todd_series",
    "total_chi",
]
