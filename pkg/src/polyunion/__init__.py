"""Exact rational toolkit for unions of polytopes: H/V conversion,
disjunctive extended formulations, the colorful-certificate construction,
and the verification suites around them."""

from .rational import Rat, rat, parse_rat, format_rat
from .polytope import (HRep, VRep, Polytope, polytope_from_points,
                       polytope_from_hrep, facet_enumeration,
                       vertex_enumeration, fm_project)
from .disjunction import balas_ef, big_m, conv_union, project_to_x

__all__ = [
    "Rat", "rat", "parse_rat", "format_rat",
    "HRep", "VRep", "Polytope", "polytope_from_points", "polytope_from_hrep",
    "facet_enumeration", "vertex_enumeration", "fm_project",
    "balas_ef", "big_m", "conv_union", "project_to_x",
]
