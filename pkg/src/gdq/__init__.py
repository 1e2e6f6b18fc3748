"""Triangulation quivers, their weighted biserial algebras and disk contractions."""

from .algebra import (BasisPath, CartanMatrix, Element, GDPresentation, PathBasis,
                      bareiss_determinant, build_presentation, cartan_matrix, cycle_A,
                      cycle_B, dimension, gabriel_quiver, multiply, path_basis,
                      presentation_isomorphism, symmetrizing_form, verify_char_not_2_iso)
from .classify import ClassificationReport, Family, classify, match_family, exhaustive_sweep
from .disks import TwoTriangleDisk, contract, expand, find_disks
from .fields import GF, QQ, Field
from .homology import (growth_class, primitive_walk, simple_periodicity, syzygy_arrow,
                       tube_census)
from .quiver_core import (InvalidInputError, OrbitData, Quiver, SearchBudgetError,
                          TriangulationQuiver, ValidationReport, compute_orbit_data,
                          enumerate_triangulation_quivers, f_orbit_census, quiver_isomorphic,
                          validate_triangulation_quiver)
from .surface import (SurfaceTriangulation, border_consistency, quiver_from_surface,
                      validate_triangulation)

__version__ = "0.1.0"
