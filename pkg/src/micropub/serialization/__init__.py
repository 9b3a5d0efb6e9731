"""Text formats: MPJSON, Turtle, TriG nanopublications and DOT."""

from .canonical import (
    CanonicalDocument,
    emit_canonical,
    load_document,
    parse_canonical,
    parse_micropublication,
)
from .dot import DotOptions, emit_dot
from .nanopub import dropped_elements, export_nanopub, import_nanopub, read_nanopub
from .turtle import emit_turtle, turtle_triples
from .vocab import VocabularyMap

__all__ = [
    "CanonicalDocument",
    "DotOptions",
    "VocabularyMap",
    "dropped_elements",
    "emit_canonical",
    "emit_dot",
    "emit_turtle",
    "export_nanopub",
    "import_nanopub",
    "load_document",
    "parse_canonical",
    "parse_micropublication",
    "read_nanopub",
    "turtle_triples",
]
