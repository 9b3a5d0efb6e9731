"""Independent reference computations used to check the library.

Nothing here imports the code under test except plain data types, so a
bug in the library cannot leak into its own oracle.
"""

from __future__ import annotations

import itertools

import numpy as np


def closure_matrix(nodes: list[str], pairs) -> set[tuple[str, str]]:
    """Transitive closure by repeated boolean squaring of the adjacency matrix."""
    index = {n: i for i, n in enumerate(nodes)}
    n = len(nodes)
    m = np.zeros((n, n), dtype=bool)
    for a, b in pairs:
        m[index[a], index[b]] = True
    while True:
        nxt = m | ((m.astype(np.int64) @ m.astype(np.int64)) > 0)
        if (nxt == m).all():
            break
        m = nxt
    return {(nodes[i], nodes[j]) for i, j in zip(*np.nonzero(m))}


def challenges_brute(supports_closed, direct) -> set[tuple[str, str]]:
    """(x, z) whenever x directly challenges z, or x directly challenges y
    and y supports z in the closure."""
    out = set(direct)
    for (x, y), (a, z) in itertools.product(direct, supports_closed):
        if y == a:
            out.add((x, z))
    return out


def ancestors_bfs(pairs, node: str) -> set[str]:
    preds: dict[str, set[str]] = {}
    for a, b in pairs:
        preds.setdefault(b, set()).add(a)
    seen, todo = set(), [node]
    while todo:
        for p in preds.get(todo.pop(), ()):
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


def has_cycle_brute(pairs) -> bool:
    nodes = sorted({n for p in pairs for n in p})
    return any((n, n) in closure_matrix(nodes, pairs) for n in nodes)


def longest_path_brute(pairs, end: str) -> int:
    """Longest edge count of any path ending at ``end`` (DAG assumed)."""
    preds: dict[str, list[str]] = {}
    for a, b in pairs:
        preds.setdefault(b, []).append(a)

    def walk(n: str) -> int:
        return max((1 + walk(p) for p in preds.get(n, ())), default=0)

    return walk(end)


def quote_hits(text: str, exact: str, prefix: str = "", suffix: str = "") -> list[int]:
    """Every offset where prefix + exact + suffix lines up, by direct slicing."""
    out = []
    for i in range(len(text) - len(exact) + 1):
        if text[i : i + len(exact)] != exact:
            continue
        if i < len(prefix) or text[i - len(prefix) : i] != prefix:
            continue
        if text[i + len(exact) : i + len(exact) + len(suffix)] != suffix:
            continue
        out.append(i)
    return out


def minimal_context(text: str, span: tuple[int, int], cap: int) -> int | None:
    """Smallest symmetric context size that isolates ``span``, or None."""
    s, e = span
    exact = text[s:e]
    for k in range(cap + 1):
        if quote_hits(text, exact, text[max(0, s - k) : s], text[e : e + k]) == [s]:
            return k
    return None


# -- Turtle emission, re-derived rule by rule --------------------------------

MP = "http://purl.org/mp#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
PROV = "http://www.w3.org/ns/prov#"
DCT = "http://purl.org/dc/terms/"
OA = "http://www.w3.org/ns/oa#"
MPX = "urn:x-micropub:ns#"


def expected_triples(mps, agents, base: str = "urn:mp:") -> set[tuple[str, str, str]]:
    """Triples one micropublication set should emit, as (s, p, o) strings.

    Literals are written as ``"value"`` (with ``^^datatype`` when typed),
    IRIs as bare strings. Covers the rules exercised by single-member
    networks with no resolutions or groups.
    """
    from urllib.parse import quote

    def iri(x: str) -> str:
        return base + quote(x, safe="-._~:@!$&'()*+,;=/")

    def lit(v: str, dt: str | None = None) -> str:
        return f'"{v}"' + (f"^^{dt}" if dt else "")

    t: set[tuple[str, str, str]] = set()
    reps: dict[str, object] = {}
    atts: dict[str, object] = {}
    for mp in mps:
        atts[mp.attribution.id] = mp.attribution
        for r in mp.contents():
            reps[r.id] = r
            if r.attribution is not None:
                atts[r.attribution.id] = r.attribution
    claims = {mp.claim_id for mp in mps}

    for a in agents:
        t |= {(iri(a.id), RDF + "type", MP + "Agent"), (iri(a.id), RDF + "type", MP + a.kind.value)}
        t.add((iri(a.id), RDFS + "label", lit(a.name)))
    for att in atts.values():
        s = iri(att.id)
        t |= {(s, RDF + "type", MP + "Attribution"), (s, MP + "attributionOfAgent", iri(att.agent_id))}
        t.add((s, PROV + "hadRole", lit(att.role)))
        if att.date is not None:
            t.add((s, DCT + "date", lit(att.date.isoformat(), "http://www.w3.org/2001/XMLSchema#date")))
    for r in reps.values():
        s = iri(r.id)
        t.add((s, RDF + "type", MP + r.kind.value))
        if r.id in claims:
            t.add((s, RDF + "type", MP + "Claim"))
        if r.text is not None:
            is_iri = r.kind.value == "SemanticQualifier" and r.text.startswith("http")
            t.add((s, RDF + "value", r.text if is_iri else lit(r.text)))
        if r.media is not None:
            t |= {(s, DCT + "format", lit(r.media.kind)), (s, DCT + "identifier", lit(r.media.locator))}
        if r.attribution is not None:
            t.add((s, PROV + "qualifiedAttribution", iri(r.attribution.id)))
        if r.source is not None:
            tgt = iri(f"{r.id}/target")
            t |= {(s, OA + "hasTarget", tgt), (tgt, OA + "hasSource", iri(r.source.document_id))}
            for sel in r.source.selectors:
                n = iri(f"{r.id}/target/{sel.kind.value}")
                t.add((tgt, OA + "hasSelector", n))
                if sel.kind.value == "TextQuote":
                    t.add((n, RDF + "type", OA + "TextQuoteSelector"))
                    t |= {(n, OA + "exact", lit(sel.exact)), (n, OA + "prefix", lit(sel.prefix)), (n, OA + "suffix", lit(sel.suffix))}
                else:
                    xsd_int = "http://www.w3.org/2001/XMLSchema#integer"
                    t.add((n, RDF + "type", OA + "TextPositionSelector"))
                    t |= {(n, OA + "start", lit(str(sel.start), xsd_int)), (n, OA + "end", lit(str(sel.end), xsd_int))}

    all_supports = {e.pair for mp in mps for e in mp.edges if e.predicate.value == "supports"}
    nodes = sorted({n for p in all_supports for n in p})
    closed = closure_matrix(nodes, all_supports) if nodes else set()
    direct = {e.pair for mp in mps for e in mp.edges if e.predicate.value == "directlyChallenges"}
    for mp in mps:
        s = iri(mp.id)
        t.add((s, RDF + "type", MP + "Micropublication"))
        t.add((s, MP + "arguedBy", iri(mp.claim_id)))
        t |= {(s, MP + "asserts", iri(r)) for r in mp.asserted}
        t |= {(s, MP + "quotes", iri(r)) for r in mp.quoted}
        t.add((s, PROV + "qualifiedAttribution", iri(mp.attribution.id)))
        elements = set(mp.asserted) | set(mp.quoted) | {r.attribution.id for r in mp.contents() if r.attribution}
        t |= {(iri(e), MP + "elementOf", s) for e in elements}
        sg = {a for a, b in closed if b == mp.claim_id and a in elements}
        sg |= {mp.lookup(x).attribution.id for x in list(sg) if getattr(mp.lookup(x), "attribution", None)}
        sg.discard(mp.claim_id)
        t |= {(s, MP + "hasSupportGraphElement", iri(x)) for x in sg}
        targets = sg | {mp.claim_id}
        for x, z in challenges_brute(closed, direct):
            if z in targets:
                t.add((s, MP + "hasChallengeGraphElement", iri(x)))
        for e in mp.edges:
            if e.predicate.value == "qualifiedBy":
                t.add((iri(e.to_id), MP + "qualifiedBy", iri(e.from_id)))
            else:
                t.add((iri(e.from_id), MP + e.predicate.value, iri(e.to_id)))
    for x, z in challenges_brute(closed, direct):
        t.add((iri(x), MP + "challenges", iri(z)))
    for a, c in closed:
        if c in reps and reps[c].kind.value == "Statement" and a in reps:
            k = reps[a].kind.value
            if k == "Data":
                t.add((iri(c), MP + "supportedByData", iri(a)))
            elif k in ("Method", "Procedure", "Material"):
                t.add((iri(c), MP + "supportedByMethod", iri(a)))
    return t


def rdflib_triples(graph) -> set[tuple[str, str, str]]:
    """Normalise an rdflib graph into the string form used above."""
    from rdflib import Literal

    out = set()
    for s, p, o in graph:
        if isinstance(o, Literal):
            o = f'"{o}"' + (f"^^{o.datatype}" if o.datatype else "")
        out.add((str(s), str(p), str(o)))
    return out
