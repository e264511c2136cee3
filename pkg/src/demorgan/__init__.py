"""Decision procedures for De Morgan's law and excluded middle on
sheaf toposes over finite sites, with the matching frame and Heyting
algebra machinery."""

from .errors import BoundExceeded, Error, InputError, ParseError
from .fincat import FiniteCategory, arrows_into, is_mono, right_ore, validate_category
from .sieves import (
    Sieve,
    b_sieve,
    empty_sieve,
    generate_sieve,
    is_stably_nonempty,
    m_sieve,
    maximal_sieve,
    pullback_sieve,
    r_sieve,
)
from .topology import (
    GrothendieckTopology,
    boolean_counterexample,
    booleanize_site,
    closure_of_sieve,
    countroc_witness,
    demorgan_counterexample,
    demorgan_topology,
    demorganize_site,
    dense_topology,
    enumerate_topologies,
    generate_topology,
    is_boolean_general,
    is_boolean_reduced,
    is_closed,
    is_demorgan_general,
    is_demorgan_reduced,
    join_topology,
    leq_topology,
    meet_topology,
    no_empty_covers,
    reduced_site,
    trivial_topology,
    validate_topology,
)
from .heyting import (
    HeytingAlgebra,
    cons,
    from_poset,
    has_boolean_property,
    has_de_morgan_property,
    implication,
    is_boolean_algebra,
    is_de_morgan_algebra,
    negation,
    regular_elements,
)
from .frames import (
    Frame,
    Nucleus,
    closed_nucleus,
    closure_nucleus,
    demorganize_frame,
    dense_closed_factorization,
    enumerate_nuclei,
    filter_generated,
    fixset,
    frame_from_poset,
    identity_nucleus,
    is_almost_discrete,
    is_dense_nucleus,
    is_extremally_disconnected,
    nucleus_join,
    nucleus_meet,
    open_nucleus,
    quotient_by_filter,
    top_nucleus,
    validate_nucleus,
)
from .subobjects import (
    ClosedSieveAlgebra,
    closed_sieve_algebra,
    frame_as_site,
    oracle_is_boolean,
    oracle_is_demorgan,
)
from .catalog import (
    enumerate_categories,
    enumerate_frames,
    enumerate_heyting_algebras,
    enumerate_posets,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "ClosedSieveAlgebra",
    "Error",
    "FiniteCategory",
    "Frame",
    "GrothendieckTopology",
    "HeytingAlgebra",
    "InputError",
    "Nucleus",
    "ParseError",
    "Sieve",
    "arrows_into",
    "b_sieve",
    "boolean_counterexample",
    "booleanize_site",
    "closed_nucleus",
    "closed_sieve_algebra",
    "closure_nucleus",
    "closure_of_sieve",
    "cons",
    "countroc_witness",
    "demorgan_counterexample",
    "demorgan_topology",
    "demorganize_frame",
    "demorganize_site",
    "dense_closed_factorization",
    "dense_topology",
    "empty_sieve",
    "enumerate_categories",
    "enumerate_frames",
    "enumerate_heyting_algebras",
    "enumerate_nuclei",
    "enumerate_posets",
    "enumerate_topologies",
    "filter_generated",
    "fixset",
    "frame_as_site",
    "frame_from_poset",
    "from_poset",
    "generate_sieve",
    "generate_topology",
    "has_boolean_property",
    "has_de_morgan_property",
    "identity_nucleus",
    "implication",
    "is_almost_discrete",
    "is_boolean_algebra",
    "is_boolean_general",
    "is_boolean_reduced",
    "is_closed",
    "is_de_morgan_algebra",
    "is_demorgan_general",
    "is_demorgan_reduced",
    "is_dense_nucleus",
    "is_extremally_disconnected",
    "is_mono",
    "is_stably_nonempty",
    "join_topology",
    "leq_topology",
    "m_sieve",
    "maximal_sieve",
    "meet_topology",
    "negation",
    "no_empty_covers",
    "nucleus_join",
    "nucleus_meet",
    "open_nucleus",
    "oracle_is_boolean",
    "oracle_is_demorgan",
    "pullback_sieve",
    "quotient_by_filter",
    "r_sieve",
    "reduced_site",
    "regular_elements",
    "right_ore",
    "top_nucleus",
    "trivial_topology",
    "validate_category",
    "validate_nucleus",
    "validate_topology",
]
