"""Second-largest maximal cliques of Paley graphs P(q^2), q in {9,...,23}.

Builds the field, the graph, and the affine geometry; enumerates every
maximal clique of the second-largest size; classifies the census into
automorphism orbits; and replays each named construction's printed data.
"""

from .errors import (
    PaleyCliqueError, NotPrime, NotPrimitive, UnsupportedSize,
    DivisionByZero, ZeroHasNoClass, S0Mismatch, NotADivisor,
    DegeneratePair, OutOfRangeVertex, GapViolation, NotStronglyRegular,
    NotClosed, NotAGroup, RecipeCollision,
)
from .field import FieldCtx, build_field, published_field, squares_and_s0
from .geometry import Line, line_through, lines_through_point, all_lines, \
    collinear_triples, direction_class, direction_class_reps, is_quadratic
from .graph import PaleyGraph, build_graph, srg_parameters, subfield_clique
from .cliques import CliqueSet, is_clique, is_maximal_clique, \
    enumerate_maximal_cliques, second_largest_census
from .group import Automorphism, identity, make_automorphism, group_order, \
    apply, apply_to_clique, compose, invert, element_order, stabilizer, \
    identify_group, OrbitRecord, orbit_partition, expand_orbit
from .constructions import LABELS, ConstructionSpec, get_spec, labels_for_q, \
    construct, named_generators, replay_action_tables, clique_family, \
    verify_construction, verify_all_for_q

__version__ = "1.0.0"
