"""MPJSON, the canonical interchange format.

A document is a single JSON object::

    {
      "agents": [...],
      "edges": [...],
      "micropublications": [...],
      "representations": [...],
      "resolution": [...],
      "similarity_groups": [...],
      "version": "mp/1"
    }

Output is UTF-8, two-space indented, keys sorted, LF line endings, one
trailing newline. Every collection is sorted by id (edges by asserting
micropublication, predicate, source, target), so equal inputs give
byte-identical text. Attributions are listed among the representations
with ``"kind": "Attribution"``.
"""

from __future__ import annotations

import datetime
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from ..anchoring import AnnotationTarget, Selector, SelectorKind
from ..errors import (
    AnchorError,
    CanonicalSyntaxError,
    InvalidInput,
    ModelError,
    SchemaError,
    VersionError,
)
from ..model import (
    Agent,
    AgentKind,
    Attribution,
    Element,
    Kind,
    Media,
    Micropublication,
    Predicate,
    Quote,
    RelationEdge,
    Representation,
)
from ..network import Network, Resolution, SimilarityGroup, merge

VERSION = "mp/1"

TOP_LEVEL = ("agents", "edges", "micropublications", "representations", "resolution", "similarity_groups", "version")


@dataclass(frozen=True)
class CanonicalDocument:
    """Parsed MPJSON content, before any merging."""

    micropublications: tuple[Micropublication, ...] = ()
    agents: tuple[Agent, ...] = ()
    resolution: tuple[Resolution, ...] = ()
    groups: tuple[SimilarityGroup, ...] = ()

    def network(self) -> Network:
        return merge(self.micropublications, self.agents, resolution=self.resolution, groups=self.groups)

    def single(self) -> Micropublication:
        if len(self.micropublications) != 1:
            raise SchemaError(f"expected one micropublication, found {len(self.micropublications)}")
        return self.micropublications[0]

    @classmethod
    def combine(cls, docs: Iterable["CanonicalDocument"]) -> "CanonicalDocument":
        mps, agents, res, groups = [], {}, [], []
        for d in docs:
            mps.extend(d.micropublications)
            for a in d.agents:
                agents.setdefault(a.id, a)
            res.extend(d.resolution)
            groups.extend(d.groups)
        return cls(tuple(mps), tuple(agents.values()), tuple(res), tuple(groups))


# -- emit -------------------------------------------------------------------


def _as_document(obj: Any, agents: Iterable[Agent]) -> CanonicalDocument:
    agents = tuple(agents)
    if isinstance(obj, CanonicalDocument):
        return obj if not agents else CanonicalDocument(obj.micropublications, obj.agents + agents, obj.resolution, obj.groups)
    if isinstance(obj, Network):
        return CanonicalDocument(
            tuple(obj.micropublications.values()),
            tuple(obj.agents.values()) + agents,
            tuple(obj.resolution.values()),
            obj.groups,
        )
    if isinstance(obj, Micropublication):
        return CanonicalDocument((obj,), agents)
    try:
        mps = tuple(obj)
    except TypeError:
        raise InvalidInput(f"cannot emit {type(obj).__name__} as MPJSON") from None
    if not all(isinstance(m, Micropublication) for m in mps):
        raise InvalidInput("expected micropublications")
    return CanonicalDocument(mps, agents)


def _selector_json(sel: Selector) -> dict[str, Any]:
    if sel.kind is SelectorKind.TEXT_QUOTE:
        return {"type": sel.kind.value, "exact": sel.exact, "prefix": sel.prefix, "suffix": sel.suffix}
    return {"type": sel.kind.value, "start": sel.start, "end": sel.end}


def _element_json(el: Element) -> dict[str, Any]:
    if isinstance(el, Attribution):
        out: dict[str, Any] = {"id": el.id, "kind": "Attribution", "agent": el.agent_id, "role": el.role}
        if el.date is not None:
            out["date"] = el.date.isoformat()
        return out
    out = {"id": el.id, "kind": el.kind.value}
    if el.text is not None:
        out["text"] = el.text
    if el.media is not None:
        out["media"] = {"kind": el.media.kind, "locator": el.media.locator}
    if el.source is not None:
        out["source"] = {
            "document": el.source.document_id,
            "selectors": [_selector_json(s) for s in el.source.selectors],
        }
    if el.attribution is not None:
        out["attribution"] = el.attribution.id
    return out


def _collect(doc: CanonicalDocument) -> dict[str, Element]:
    table: dict[str, Element] = {}

    def add(el: Element) -> None:
        known = table.get(el.id)
        if known is not None and known != el:
            raise InvalidInput(f"{el.id} has two different contents")
        table[el.id] = el
        attribution = getattr(el, "attribution", None)
        if attribution is not None:
            add(attribution)

    for mp in doc.micropublications:
        add(mp.attribution)
        for r in mp.contents():
            add(r)
    for g in doc.groups:
        add(g.attribution)
    return table


def emit_canonical(obj: Any, agents: Iterable[Agent] = ()) -> str:
    """Serialize a micropublication, a network, a document or an iterable
    of micropublications to MPJSON text."""
    doc = _as_document(obj, agents)
    mp_ids = {mp.id for mp in doc.micropublications}
    if len(mp_ids) != len(doc.micropublications):
        raise InvalidInput("duplicate micropublication ids")
    table = _collect(doc)

    mps_json = []
    edges = []
    for mp in sorted(doc.micropublications, key=lambda m: m.id):
        mps_json.append(
            {
                "id": mp.id,
                "attribution": mp.attribution.id,
                "claim": mp.claim_id,
                "asserted": sorted(mp.asserted),
                "quoted": [
                    {"id": q.id, "origin": q.origin, "with_content": q.representation is not None}
                    for q in sorted(mp.quoted.values(), key=lambda q: q.id)
                ],
            }
        )
        for e in mp.edges:
            if e.asserted_by != mp.id:
                raise InvalidInput(f"edge {e} in {mp.id} is stamped {e.asserted_by}")
        edges.extend(mp.edges)

    agent_table: dict[str, Agent] = {}
    for a in doc.agents:
        if agent_table.setdefault(a.id, a) != a:
            raise InvalidInput(f"agent {a.id} has two different contents")

    payload = {
        "version": VERSION,
        "agents": [{"id": a.id, "kind": a.kind.value, "name": a.name} for a in sorted(agent_table.values(), key=lambda a: a.id)],
        "edges": [
            {"asserted_by": e.asserted_by, "predicate": e.predicate.value, "from": e.from_id, "to": e.to_id}
            for e in sorted(edges, key=RelationEdge.sort_key)
        ],
        "micropublications": mps_json,
        "representations": [_element_json(table[k]) for k in sorted(table)],
        "resolution": [
            {"reference": r.reference_id, "document": r.document_id, "statement": r.statement_id, "resolved_by": r.resolved_by}
            for r in sorted(doc.resolution, key=lambda r: r.reference_id)
        ],
        "similarity_groups": [
            {
                "micropublication": g.group_mp,
                "holotype": g.holotype_id,
                "members": sorted(g.member_ids),
                "attribution": g.attribution.id,
            }
            for g in sorted(doc.groups, key=lambda g: g.group_mp)
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- parse ------------------------------------------------------------------


def _fields(obj: Any, where: str, required: Iterable[str], optional: Iterable[str] = ()) -> dict[str, Any]:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    required, optional = set(required), set(optional)
    missing = required - obj.keys()
    if missing:
        raise SchemaError(f"{where}: missing {', '.join(sorted(missing))}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise SchemaError(f"{where}: unknown field {', '.join(sorted(unknown))}")
    return obj


def _str(value: Any, where: str, nullable: bool = False) -> str | None:
    if value is None and nullable:
        return None
    if not isinstance(value, str):
        raise SchemaError(f"{where}: expected a string")
    return value


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected a list")
    return value


def _enum(cls, value: Any, where: str):
    try:
        return cls(value)
    except ValueError:
        raise SchemaError(f"{where}: unknown {cls.__name__.lower()} {value!r}") from None


def _selector(obj: Any, where: str) -> Selector:
    kind = _enum(SelectorKind, obj.get("type") if isinstance(obj, dict) else None, where)
    if kind is SelectorKind.TEXT_QUOTE:
        _fields(obj, where, ("type", "exact", "prefix", "suffix"))
        return Selector.quote(_str(obj["exact"], where), _str(obj["prefix"], where), _str(obj["suffix"], where))
    _fields(obj, where, ("type", "start", "end"))
    if not all(isinstance(obj[k], int) and not isinstance(obj[k], bool) for k in ("start", "end")):
        raise SchemaError(f"{where}: offsets must be integers")
    return Selector.position(obj["start"], obj["end"])


def _parse_elements(items: list) -> dict[str, Element]:
    raw: dict[str, dict] = {}
    for i, item in enumerate(items):
        where = f"representations[{i}]"
        if not isinstance(item, dict):
            raise SchemaError(f"{where}: expected an object")
        rid = _str(item.get("id"), where)
        if rid in raw:
            raise SchemaError(f"{where}: duplicate id {rid}")
        raw[rid] = item

    out: dict[str, Element] = {}
    for rid, item in raw.items():
        if item.get("kind") == "Attribution":
            where = f"attribution {rid}"
            _fields(item, where, ("id", "kind", "agent", "role"), ("date",))
            date = None
            if "date" in item:
                try:
                    date = datetime.date.fromisoformat(_str(item["date"], where))
                except ValueError:
                    raise SchemaError(f"{where}: bad date {item['date']!r}") from None
            out[rid] = Attribution(rid, _str(item["agent"], where), _str(item["role"], where), date)

    for rid, item in raw.items():
        if item.get("kind") == "Attribution":
            continue
        where = f"representation {rid}"
        _fields(item, where, ("id", "kind"), ("text", "media", "source", "attribution"))
        kind = _enum(Kind, item["kind"], where)
        media = source = attribution = None
        if "media" in item:
            m = _fields(item["media"], f"{where} media", ("kind", "locator"))
            media = Media(_str(m["kind"], where), _str(m["locator"], where))
        if "source" in item:
            s = _fields(item["source"], f"{where} source", ("document", "selectors"))
            sels = tuple(_selector(x, f"{where} selector") for x in _list(s["selectors"], where))
            source = AnnotationTarget(_str(s["document"], where), sels)
        if "attribution" in item:
            att_id = _str(item["attribution"], where)
            attribution = out.get(att_id)
            if not isinstance(attribution, Attribution):
                raise SchemaError(f"{where}: attribution {att_id} is not listed")
        text = _str(item["text"], where) if "text" in item else None
        out[rid] = Representation(rid, kind, text, media, source, attribution)
    return out


def load_document(text: str) -> CanonicalDocument:
    """Parse MPJSON text without validating or merging it.

    Raises:
        CanonicalSyntaxError: the text is not well-formed JSON.
        VersionError: the version is not ``mp/1``.
        SchemaError: structure, kinds or predicates are not recognised.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CanonicalSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise SchemaError("document: expected a JSON object")
    if "version" not in data:
        raise SchemaError("document: missing version")
    if data["version"] != VERSION:
        raise VersionError(f"unsupported MPJSON version {data['version']!r}; expected {VERSION!r}")
    _fields(data, "document", TOP_LEVEL)

    try:
        return _build(data)
    except (ModelError, AnchorError) as exc:
        raise SchemaError(str(exc)) from exc


def _build(data: dict) -> CanonicalDocument:
    agents = []
    for i, a in enumerate(_list(data["agents"], "agents")):
        _fields(a, f"agents[{i}]", ("id", "kind", "name"))
        agents.append(Agent(_str(a["id"], "agent"), _str(a["name"], "agent"), _enum(AgentKind, a["kind"], "agent")))

    elements = _parse_elements(_list(data["representations"], "representations"))

    edges_by_mp: dict[str, set[RelationEdge]] = {}
    for i, e in enumerate(_list(data["edges"], "edges")):
        where = f"edges[{i}]"
        _fields(e, where, ("asserted_by", "predicate", "from", "to"))
        edge = RelationEdge(
            _str(e["from"], where), _str(e["to"], where), _enum(Predicate, e["predicate"], where), _str(e["asserted_by"], where)
        )
        edges_by_mp.setdefault(edge.asserted_by, set()).add(edge)

    def attribution(att_id: Any, where: str) -> Attribution:
        att = elements.get(_str(att_id, where))
        if not isinstance(att, Attribution):
            raise SchemaError(f"{where}: attribution {att_id} is not listed")
        return att

    mps = []
    for i, m in enumerate(_list(data["micropublications"], "micropublications")):
        where = f"micropublications[{i}]"
        _fields(m, where, ("id", "attribution", "claim", "asserted", "quoted"))
        mp_id = _str(m["id"], where)
        asserted = {}
        for rid in _list(m["asserted"], where):
            rep = elements.get(_str(rid, where))
            if not isinstance(rep, Representation):
                raise SchemaError(f"{where}: asserted {rid} is not a listed representation")
            asserted[rid] = rep
        quoted = {}
        for q in _list(m["quoted"], where):
            _fields(q, f"{where} quote", ("id", "origin", "with_content"))
            qid = _str(q["id"], where)
            content = None
            if q["with_content"] is True:
                content = elements.get(qid)
                if not isinstance(content, Representation):
                    raise SchemaError(f"{where}: quoted content for {qid} is not listed")
            elif q["with_content"] is not False:
                raise SchemaError(f"{where}: with_content must be a boolean")
            quoted[qid] = Quote(qid, _str(q["origin"], where, nullable=True), content)
        mps.append(
            Micropublication(
                mp_id,
                attribution(m["attribution"], where),
                _str(m["claim"], where, nullable=True),
                asserted,
                quoted,
                frozenset(edges_by_mp.pop(mp_id, ())),
            )
        )
    if edges_by_mp:
        raise SchemaError(f"edges asserted by unknown micropublications: {', '.join(sorted(edges_by_mp))}")

    resolution = []
    for i, r in enumerate(_list(data["resolution"], "resolution")):
        where = f"resolution[{i}]"
        _fields(r, where, ("reference", "document", "statement", "resolved_by"))
        resolution.append(
            Resolution(
                _str(r["reference"], where),
                _str(r["document"], where),
                _str(r["statement"], where, nullable=True),
                _str(r["resolved_by"], where, nullable=True),
            )
        )

    groups = []
    for i, g in enumerate(_list(data["similarity_groups"], "similarity_groups")):
        where = f"similarity_groups[{i}]"
        _fields(g, where, ("micropublication", "holotype", "members", "attribution"))
        groups.append(
            SimilarityGroup(
                _str(g["micropublication"], where),
                _str(g["holotype"], where),
                frozenset(_str(x, where) for x in _list(g["members"], where)),
                attribution(g["attribution"], where),
            )
        )
    return CanonicalDocument(tuple(mps), tuple(agents), tuple(resolution), tuple(groups))


def parse_canonical(text: str) -> Network:
    """Parse MPJSON and merge it; members are validated on the way in."""
    return load_document(text).network()


def parse_micropublication(text: str) -> Micropublication:
    """Parse a document holding exactly one micropublication."""
    return load_document(text).single()


def network_equal(a: Network, b: Network) -> bool:
    """Structural equality of the parts MPJSON carries."""
    keys: Mapping[str, Any] = {
        "micropublications": lambda n: n.micropublications,
        "agents": lambda n: n.agents,
        "edges": lambda n: n.edges,
        "resolution": lambda n: n.resolution,
        "groups": lambda n: n.groups,
    }
    return all(f(a) == f(b) for f in keys.values())
