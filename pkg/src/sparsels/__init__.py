"""Local search for hitting sets and packings on sparse graphs."""
from .errors import ConfigurationError, InputError, ParseError, ShallownessError, SparseLSError
from .estimators import ExactHittingSet, ExactPacking, LocalSearchHittingSet, LocalSearchPacking
from .exact import ExactResult, exact_max_packing, exact_min_hitting
from .generators import GeneratorSpec, generate
from .graph import Graph, bfs_distances, diameter, induced_subgraph, is_isomorphic
from .io import dump_graph, load_family, load_graph, read_graph, write_graph
from .local_search import SearchTrace, local_search_hitting, local_search_packing
from .properties import (
    FiniteFamily, Packing, RadiusBall, enumerate_occurrences, is_hitting_set, is_valid_packing,
    packing_extension, parse_property, property_diameter,
)
from .separators import Cover, balanced_separator, build_cover, cover_check
from .structure import (
    ShallowCollection, VertexOrdering, build_shallow_collection, check_shallow, degeneracy_ordering, density,
    lemma_main_certificate, packing_graph, rich_vertices, wcol_exact, wcol_of_ordering, weak_reachable,
)

__version__ = "0.1.0"
