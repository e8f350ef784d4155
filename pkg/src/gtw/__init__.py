"""Exact computations with Gelfand-Tsetlin polytopes and their lattice-point semigroups."""
from .core import (
    Content,
    GTPattern,
    Partition,
    add_patterns,
    denominator,
    pattern_from_dict,
    pattern_from_json,
    scale_pattern,
    validate_pattern,
    zero_pattern,
)
from .minors import det_minor, eval_basis_vector, is_semistable
from .polytope import (
    EhrhartReport,
    GTPolytope,
    build,
    contains,
    count_lattice_points,
    dimension,
    ehrhart,
    generation_bound,
    is_vertex,
    krull_dimension,
    lattice_points,
    vertices,
)
from .semigroup import GradedElement, GeneratorReport, essential_generators, is_essential, multiply_degenerate
from .tableaux import Tableau, content, enumerate_ssyt, kostka, phi, phi_inverse, shape, validate_tableau
from .witness import build_witness, rigidity_check, t_sequences, tiling, verify_theorem2

__version__ = "0.1.0"
