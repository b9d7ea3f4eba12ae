"""Exact tools for del Pezzo surfaces of degree 5 and 6 over finite fields.

The package classifies the possible Galois actions on the (-1)-curves of a
del Pezzo surface of degree 5 or 6 (its *type*), constructs explicit point
configurations over finite fields realizing each achievable type, decides
minimality questions in the Picard lattice, and verifies all of it with
exact integer and finite-field arithmetic — no floating point anywhere.
"""

from .classify import (
    AutDescription,
    FieldCapability,
    aut_group_of,
    aut_table,
    custom,
    finite,
    g_minimal_exists,
    number_field,
    realizable,
)
from .construct import (
    PlanePoint,
    PointConfig,
    SurfaceModel,
    conic_config,
    conic_point,
    dp5_from_four_points,
    frobenius_permutation,
    general_position,
    model_from_json,
    plane_point,
    points_with_action,
    realize_dp5,
    realize_dp6,
    small_field_realize,
    verify_json,
)
from .curvegraphs import (
    CurveGraph,
    VertexPerm,
    blowdown_action,
    curve_graph,
    graph_action,
    has_invariant_independent_set,
    hexagon_restriction,
    invariant_vertices,
    to_dot,
    vertex_stabilizer,
)
from .fields import (
    FFElem,
    FieldSpec,
    element_degree,
    element_of_degree,
    elements_of_degree,
    field_elements,
    frobenius,
    frobenius_orbit,
    gen,
    in_base_field,
    make_field,
    minimal_polynomial,
    one,
    parse_field_literal,
    subfield_elements,
    zero,
)
from .perms import (
    ClassLabel,
    Perm,
    Subgroup,
    all_subgroups,
    centralizer,
    class_label,
    class_names,
    class_representative,
    complexity,
    contains_order5,
    cyclic_generator,
    generate,
    hex_decompose,
    hex_element,
    hex_embed_s5,
    hexagon_group_elements,
    orbits,
    parse_generators,
    parse_perm,
    subgroup_classes,
    symmetric_group_elements,
)
from .picard import (
    LatticeAction,
    PicClass,
    canonical_class,
    conic_classes,
    e_class,
    h_class,
    induced_lattice_action,
    intersect,
    invariant_rank,
    is_g_minimal,
    minus_one_classes,
)

__all__ = [
    "AutDescription",
    "CurveGraph",
    "ClassLabel",
    "FFElem",
    "FieldCapability",
    "FieldSpec",
    "LatticeAction",
    "Perm",
    "PicClass",
    "PlanePoint",
    "PointConfig",
    "Subgroup",
    "SurfaceModel",
    "VertexPerm",
    "all_subgroups",
    "aut_group_of",
    "aut_table",
    "blowdown_action",
    "canonical_class",
    "centralizer",
    "class_label",
    "class_names",
    "class_representative",
    "complexity",
    "conic_classes",
    "conic_config",
    "conic_point",
    "contains_order5",
    "curve_graph",
    "custom",
    "cyclic_generator",
    "dp5_from_four_points",
    "e_class",
    "element_degree",
    "element_of_degree",
    "elements_of_degree",
    "field_elements",
    "finite",
    "frobenius",
    "frobenius_orbit",
    "frobenius_permutation",
    "g_minimal_exists",
    "gen",
    "general_position",
    "generate",
    "graph_action",
    "h_class",
    "has_invariant_independent_set",
    "hex_decompose",
    "hex_element",
    "hex_embed_s5",
    "hexagon_group_elements",
    "hexagon_restriction",
    "in_base_field",
    "induced_lattice_action",
    "intersect",
    "invariant_rank",
    "invariant_vertices",
    "is_g_minimal",
    "make_field",
    "minimal_polynomial",
    "minus_one_classes",
    "model_from_json",
    "number_field",
    "one",
    "orbits",
    "parse_field_literal",
    "parse_generators",
    "parse_perm",
    "plane_point",
    "points_with_action",
    "realizable",
    "realize_dp5",
    "realize_dp6",
    "small_field_realize",
    "subfield_elements",
    "subgroup_classes",
    "symmetric_group_elements",
    "to_dot",
    "vertex_stabilizer",
    "verify_json",
    "zero",
]
