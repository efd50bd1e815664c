"""Normalized edge algebras of graphs: generators, membership, moves and relations."""

__version__ = "0.1.0"

from tga.generators import (  # noqa: E402
    enumerate_exceptional_pairs,
    minimal_generators,
    pair_as_signed_edges,
    pair_square_as_edges,
    reduce_circuit_pair,
)
from tga.graph import Graph, GraphError, connected_components, enumerate_induced_odd_circuits, \
    parse_graph  # noqa: E402
from tga.semigroup import cone_decompose, decompose_to_generators, integer_membership, \
    is_member  # noqa: E402
from tga.splitting import split_even_closed_walk  # noqa: E402
from tga.terms import Word, generator_weight, parse_weight, parse_word  # noqa: E402
from tga.toric import congruence_check, enumerate_relations, fiber_words  # noqa: E402
from tga.words import apply_move, equal_words, factor_rotation, to_standard_form  # noqa: E402
