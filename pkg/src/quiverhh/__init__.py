"""Exact Hochschild cohomology of the algebras A_T = KΓ/⟨xy, x^(4T+2) + y^(4T+2), yx⟩ on the 4-cycle."""
from .algebra import Algebra, AlgebraElement, FreeElement, FreePath, Monomial, algebra_make, compute_center
from .bar import BudgetExceeded, bar_hh_dimension
from .explicit import verify_image_maps, verify_explicit_bases
from .gsz import check_koszul_linearity, extract_right_differential, gsz_generate, verify_right_resolution
from .hochschild import (Cochain, Dims, closed_formula_dims, cochain_basis, cohomology_dimensions,
                         hom_matrix, verify_center)
from .report import Report
from .resolution import BimoduleMap, differential, induced_right_complex, verify_complex, verify_minimality
from .scalars import GF, QQ, Field, Scalar, divides_two_t_plus_one, field_arith
from .yoneda import (LiftingChain, RingPresentation, lift_cocycle, sigma_lifting, verify_nilpotent_part,
                     verify_ring_presentation, verify_sigma_liftings, yoneda_product)

__all__ = [
    "Algebra", "AlgebraElement", "BimoduleMap", "BudgetExceeded", "Cochain", "Dims", "Field", "FreeElement",
    "FreePath", "GF", "LiftingChain", "Monomial", "QQ", "Report", "RingPresentation", "Scalar",
    "algebra_make", "bar_hh_dimension", "check_koszul_linearity", "closed_formula_dims", "cochain_basis",
    "cohomology_dimensions", "compute_center", "differential", "divides_two_t_plus_one",
    "extract_right_differential", "field_arith", "gsz_generate", "hom_matrix", "induced_right_complex",
    "lift_cocycle", "sigma_lifting", "verify_center", "verify_complex", "verify_image_maps",
    "verify_minimality", "verify_nilpotent_part", "verify_explicit_bases", "verify_right_resolution",
    "verify_ring_presentation", "verify_sigma_liftings", "yoneda_product",
]


def clear_caches() -> None:
    """Drop every memoized algebra, differential and matrix (used for cold timings)."""
    from . import algebra, bar, gsz, hochschild, resolution

    for mod in (algebra, bar, gsz, hochschild, resolution):
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()
