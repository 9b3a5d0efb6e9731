"""Graphviz DOT rendering of a network, one cluster per micropublication.

Each node is drawn in the cluster of the first micropublication (by id)
that asserts it; quoted-only nodes land in the cluster of their first
quoting micropublication. Edges are drawn once per asserting
micropublication and carry its id as a tooltip, so cross-cluster edges
stay attributable.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..model import Attribution, Kind, Micropublication, Predicate
from ..network import Network, merge

SHAPES = {
    Kind.STATEMENT: "box",
    Kind.SENTENCE: "box",
    Kind.DATA: "note",
    Kind.METHOD: "component",
    Kind.PROCEDURE: "component",
    Kind.MATERIAL: "component",
    Kind.REFERENCE: "plaintext",
    Kind.SEMANTIC_QUALIFIER: "hexagon",
    Kind.ARTICLE_TEXT: "box",
    Kind.ATTRIBUTION: "ellipse",
}

STYLES = {
    Predicate.SUPPORTS: "solid",
    Predicate.DIRECTLY_CHALLENGES: "dashed",
    Predicate.QUALIFIED_BY: "dotted",
}


@dataclass(frozen=True)
class DotOptions:
    graph_name: str = "micropublications"
    show_qualifiers: bool = False
    show_text: bool = False
    rankdir: str = "BT"
    text_width: int = 40


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def _label(net: Network, rid: str, options: DotOptions) -> str:
    el = net.lookup(rid)
    text = getattr(el, "text", None)
    if not options.show_text or not text:
        return rid
    if len(text) > options.text_width:
        text = text[: options.text_width - 1] + "…"
    return f"{rid}\n{text}"


def emit_dot(net: Network | Micropublication, options: DotOptions | None = None) -> str:
    options = options or DotOptions()
    if isinstance(net, Micropublication):
        net = merge([net])

    def shown(e) -> bool:
        return options.show_qualifiers or e.predicate is not Predicate.QUALIFIED_BY

    edges = sorted((e for e in net.edges if shown(e)), key=lambda e: e.sort_key())
    qualifier_only = set()
    if not options.show_qualifiers:
        drawn = {n for e in edges for n in e.pair}
        qualifier_only = {
            e.from_id for e in net.edges if e.predicate is Predicate.QUALIFIED_BY and e.from_id not in drawn
        }

    home: dict[str, str] = {}
    for mp_id in sorted(net.micropublications):
        for rid in sorted(net.micropublications[mp_id].asserted):
            if rid not in qualifier_only:
                home.setdefault(rid, mp_id)
    for mp_id in sorted(net.micropublications):
        mp = net.micropublications[mp_id]
        for rid in sorted(mp.element_ids):
            if rid not in qualifier_only:
                home.setdefault(rid, mp_id)

    lines = [f"digraph {_quote(options.graph_name)} {{", f"  rankdir={options.rankdir};", "  node [fontname=\"Helvetica\"];"]
    for mp_id in sorted(net.micropublications):
        mp = net.micropublications[mp_id]
        lines.append(f"  subgraph {_quote('cluster_' + mp_id)} {{")
        lines.append(f"    label={_quote(mp_id)};")
        for rid in sorted(r for r, h in home.items() if h == mp_id):
            kind = net.kind_of(rid)
            shape = SHAPES.get(kind, "box") if kind else "box"
            attrs = [f"label={_quote(_label(net, rid, options))}", f"shape={shape}"]
            if rid == mp.claim_id:
                attrs.append("penwidth=2")
            if isinstance(net.lookup(rid), Attribution) or kind is None:
                attrs.append("style=dashed" if kind is None else "style=solid")
            lines.append(f"    {_quote(rid)} [{', '.join(attrs)}];")
        lines.append("  }")
    for e in edges:
        lines.append(
            f"  {_quote(e.from_id)} -> {_quote(e.to_id)} "
            f"[style={STYLES[e.predicate]}, label={_quote(e.predicate.value)}, tooltip={_quote(e.asserted_by)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
