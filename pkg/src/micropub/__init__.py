"""Micropublications: claims, their evidence and the arguments between them.

The main entry points:

* :mod:`micropub.model` for representations, micropublications and validation;
* :mod:`micropub.inference` for the supports closure and inferred challenges;
* :mod:`micropub.network` for merged corpora, lineage, grounding and audit;
* :mod:`micropub.serialization` for MPJSON, Turtle, TriG and DOT;
* :mod:`micropub.anchoring` for stand-off text selectors.
"""

from .errors import MicropubError
from .inference import challenge_graph, challenges_inferred, close, support_graph, supports_closure
from .model import (
    Agent,
    AgentKind,
    Attribution,
    Corpus,
    Kind,
    Media,
    Micropublication,
    Predicate,
    RelationEdge,
    Representation,
    add_edge,
    assert_element,
    new_micropublication,
    quote_element,
    set_claim,
    validate,
)
from .network import (
    Level,
    Network,
    claim_lineage,
    create_similarity_group,
    distortion_report,
    grounding_level,
    merge,
    resolve_reference,
    similogs_of,
)

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "AgentKind",
    "Attribution",
    "Corpus",
    "Kind",
    "Level",
    "Media",
    "MicropubError",
    "Micropublication",
    "Network",
    "Predicate",
    "RelationEdge",
    "Representation",
    "add_edge",
    "assert_element",
    "challenge_graph",
    "challenges_inferred",
    "claim_lineage",
    "close",
    "create_similarity_group",
    "distortion_report",
    "grounding_level",
    "merge",
    "new_micropublication",
    "quote_element",
    "resolve_reference",
    "set_claim",
    "similogs_of",
    "support_graph",
    "supports_closure",
    "validate",
]
