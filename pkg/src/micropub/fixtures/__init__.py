"""Worked example corpus.

Builders here construct the example micropublications in memory; the
same content ships as MPJSON next to this module (regenerate with
``python -m micropub.fixtures``). See ``README.md`` in this directory
for what each file holds.

Numbering follows the example text except where ids would collide:

* MP7 is the similarity group, so the BEL statement is MP8;
* the review challenging S3 is MP11 and the third-party annotation MP12;
* C4, C5 and C6 come from their own micropublications MP13 to MP15.
"""

from __future__ import annotations

import functools
from importlib import resources
from pathlib import Path

from ..anchoring import make_target
from ..model import (
    Agent,
    AgentKind,
    Attribution,
    Kind,
    Media,
    Micropublication,
    Predicate,
    Representation,
    add_edge,
    assert_element,
    new_micropublication,
    quote_element,
    set_claim,
)
from ..network import Network, SimilarityGroup, create_similarity_group, merge

S, D, REF = Kind.STATEMENT, Kind.DATA, Kind.REFERENCE
SUPPORTS, CHALLENGES, QUALIFIED_BY = Predicate.SUPPORTS, Predicate.DIRECTLY_CHALLENGES, Predicate.QUALIFIED_BY

SPILMAN_DOC = "doi:10.1371/journal.pone.0009979"
A1_TEXT = "Rapamycin is an inhibitor of the mTOR pathway (Harrison et al., 2009)."

AGENTS = {
    a.id: a
    for a in (
        Agent("pspilman", "Patricia Spilman"),
        Agent("harrison", "David E. Harrison"),
        Agent("hsia", "Angela Y. Hsia"),
        Agent("huang", "Shile Huang"),
        Agent("brown", "Eric J. Brown"),
        Agent("sabatini", "David M. Sabatini"),
        Agent("dpratt", "Dexter Pratt"),
        Agent("a-neuroscientist", "A. Neuroscientist"),
        Agent("bryan", "Kelley J. Bryan"),
        Agent("kb-curator", "KB Curator"),
        Agent("mp-curator", "Micropublication Curator"),
        Agent("lab-a", "Laboratory A", AgentKind.ORGANIZATION),
        Agent("lab-b", "Laboratory B", AgentKind.ORGANIZATION),
    )
}


def _att(att_id: str, agent: str, role: str = "author") -> Attribution:
    return Attribution(att_id, agent, role)


def _curated(mp_id: str) -> Attribution:
    return _att(f"A_{mp_id}", "mp-curator", "curator")


# -- shared representations -------------------------------------------------

A_C1 = _att("A_C1", "pspilman")
A_C3 = _att("A_C3", "pspilman")
A_C11_1 = _att("A_C1.1", "harrison")
A_C21 = _att("A_C2.1", "hsia")

C1 = Representation(
    "C1",
    S,
    "Rapamycin is an inhibitor of the mTOR pathway",
    source=make_target(A1_TEXT, SPILMAN_DOC, (0, 45)),
    attribution=A_C1,
)
Q1 = Representation("Q1", Kind.SEMANTIC_QUALIFIER, "http://purl.obolibrary.org/obo/CHEBI_9168")
Q2 = Representation("Q2", Kind.SEMANTIC_QUALIFIER, "http://purl.obolibrary.org/obo/INO_0000736")
REF5 = Representation("Ref5", REF, "Harrison et al. 2009")
REF9 = Representation("Ref9", REF, "Hsia et al. 1999")
REF10 = Representation("Ref10", REF, "Mucke et al. 2000")

C3 = Representation(
    "C3",
    S,
    "Inhibition of mTOR by Rapamycin can slow or block AD progression in a transgenic mouse model of the disease.",
    attribution=A_C3,
)
D1 = Representation(
    "D1",
    D,
    "Learning and memory of Rapamycin-fed versus control-fed PDAPP and non-transgenic mice in the Morris water maze",
    media=Media("image", f"{SPILMAN_DOC}.g001"),
    attribution=A_C3,
)
M1 = Representation(
    "M1",
    Kind.PROCEDURE,
    "Rapamycin-supplemented or control diet for 13 weeks from 4 months of age; Morris water maze testing",
    attribution=A_C3,
)
M2 = Representation(
    "M2",
    Kind.MATERIAL,
    "hAPP(J20) PDAPP transgenic mice",
    media=Media("catalog", "JAX:034836"),
    attribution=A_C3,
)
S1 = Representation("S1", S, "Rapamycin ... an inhibitor of the mTOR pathway ...", attribution=A_C3)
S2 = Representation(
    "S2",
    S,
    "PDAPP mice accumulate soluble and deposited Aβ and develop AD-like synaptic deficits as well as "
    "cognitive impairment and hippocampal atrophy",
    attribution=A_C3,
)
S3 = Representation(
    "S3",
    S,
    "Rapamycin-fed PDAPP mice performed as well as non-transgenic controls in the Morris water maze",
    attribution=A_C3,
)

C1_1 = Representation("C1.1", S, "Rapamycin ... an inhibitor of the mTOR pathway ...", attribution=A_C11_1)
D1_1 = Representation("D1.1", D, "Survival of rapamycin-fed and control genetically heterogeneous mice", attribution=A_C11_1)
M1_1 = Representation("M1.1", Kind.METHOD, "Late-life dietary rapamycin feeding protocol", attribution=A_C11_1)

C2_1 = Representation(
    "C2.1",
    S,
    "... addition of the Swedish FAD mutation to the APP transgene in a second line of mice, further increased "
    "synaptic transmission deficits in young APP mice without plaques.",
    attribution=A_C21,
)
D2_1 = Representation("D2.1", D, "Synaptic transmission recordings in young APP transgenic mice", attribution=A_C21)
M2_1 = Representation("M2.1", Kind.MATERIAL, "J6 line of PDAPP transgenic mice", attribution=A_C21)

C4 = Representation("C4", S, "Rapamycin inhibits signaling through mTOR", attribution=_att("A_C4", "huang"))
C5 = Representation("C5", S, "Rapamycin blocks mTOR-dependent signaling", attribution=_att("A_C5", "brown"))
A_C6 = _att("A_C6", "sabatini")
C6 = Representation("C6", S, "RAFT1 is a mammalian target of the FKBP12-rapamycin complex", attribution=A_C6)
D6 = Representation("D6", D, "Binding of RAFT1 to FKBP12-rapamycin", attribution=A_C6)
M6 = Representation("M6", Kind.METHOD, "Affinity purification of FKBP12-rapamycin binding proteins", attribution=A_C6)

A_C7 = _att("A_C7", "dpratt")
C7 = Representation("C7", S, "a(CHEBI:9168) =| kin(p(HGNC:FRAP1))", attribution=A_C7)
R96 = Representation("R96", REF, "PMID:12030785")

A_C11 = _att("A_C11", "bryan")
C11 = Representation(
    "C11",
    S,
    "PDAPP mice tend to have lower body temperatures, which may result in varying degrees of hypothermia "
    "during the MWM task, which can produce amnesia in animals.",
    attribution=A_C11,
)
R48 = Representation("R48", REF, "Reference 48")
R49 = Representation("R49", REF, "Reference 49")
R50 = Representation("R50", REF, "Reference 50")

A_C12 = _att("A_C12", "kb-curator")
C12 = Representation(
    "C12",
    S,
    "MP11:C11 and MP3:S3 conflict: lower body temperature in PDAPP mice undermines their Morris water maze results",
    attribution=A_C12,
)


def _build(mp_id: str, attribution: Attribution, asserted=(), quoted=(), edges=(), claim=None) -> Micropublication:
    mp = new_micropublication(mp_id, attribution)
    for r in asserted:
        mp = assert_element(mp, r)
    for rep, origin in quoted:
        mp = quote_element(mp, rep.id, origin, rep)
    for a, b, pred in edges:
        mp = add_edge(mp, a, b, pred)
    return set_claim(mp, claim)


def mp1() -> Micropublication:
    return _build(
        "MP1",
        _curated("MP1"),
        [C1, REF5, Q1, Q2],
        edges=[("Ref5", "C1", SUPPORTS), ("A_C1", "C1", SUPPORTS), ("Q1", "C1", QUALIFIED_BY), ("Q2", "C1", QUALIFIED_BY)],
        claim="C1",
    )


def mp2() -> Micropublication:
    return _build(
        "MP2",
        _curated("MP2"),
        [C3, D1, M1, M2],
        edges=[("A_C3", "C3", SUPPORTS), ("D1", "C3", SUPPORTS), ("M1", "D1", SUPPORTS), ("M2", "D1", SUPPORTS)],
        claim="C3",
    )


def mp3() -> Micropublication:
    return _build(
        "MP3",
        _curated("MP3"),
        [C3, S1, S2, S3, D1, M1, M2, REF5, REF9, REF10],
        edges=[
            ("A_C3", "C3", SUPPORTS),
            ("S1", "C3", SUPPORTS),
            ("S2", "C3", SUPPORTS),
            ("S3", "C3", SUPPORTS),
            ("Ref5", "S1", SUPPORTS),
            ("Ref9", "S2", SUPPORTS),
            ("Ref10", "S2", SUPPORTS),
            ("D1", "S3", SUPPORTS),
            ("M1", "D1", SUPPORTS),
            ("M2", "D1", SUPPORTS),
        ],
        claim="C3",
    )


def mp4() -> Micropublication:
    return _build(
        "MP4",
        _curated("MP4"),
        [C1_1, D1_1, M1_1],
        edges=[("D1.1", "C1.1", SUPPORTS), ("M1.1", "D1.1", SUPPORTS)],
        claim="C1.1",
    )


def mp5() -> Micropublication:
    return _build(
        "MP5",
        _curated("MP5"),
        [C2_1, D2_1, M2_1],
        edges=[("D2.1", "C2.1", SUPPORTS), ("M2.1", "D2.1", SUPPORTS)],
        claim="C2.1",
    )


def mp6() -> Micropublication:
    return _build(
        "MP6",
        _curated("MP6"),
        quoted=[(C3, "MP3"), (S1, "MP3"), (S2, "MP3"), (C1_1, "MP4"), (C2_1, "MP5")],
        edges=[("C1.1", "S1", SUPPORTS), ("C2.1", "S2", SUPPORTS)],
        claim="C3",
    )


def mp8() -> Micropublication:
    return _build("MP8", _curated("MP8"), [C7, R96], edges=[("A_C7", "C7", SUPPORTS), ("R96", "C7", SUPPORTS)], claim="C7")


def mp9() -> Micropublication:
    # the BEL statement with its support resolved to a specific claim
    return _build(
        "MP9",
        _curated("MP9"),
        quoted=[(C7, "MP8"), (C4, "MP13")],
        edges=[("C4", "C7", SUPPORTS), ("A_C7", "C7", SUPPORTS)],
        claim="C7",
    )


def mp10() -> Micropublication:
    a = _att("A_C10", "a-neuroscientist")
    c10 = Representation(
        "C10", S, "Rapamycin analogs are worth evaluating as candidate therapeutics for Alzheimer disease", attribution=a
    )
    return _build(
        "MP10",
        _att("A_MP10", "a-neuroscientist"),
        [c10],
        quoted=[(C1, "MP1")],
        edges=[("C1", "C10", SUPPORTS), ("A_C10", "C10", SUPPORTS)],
        claim="C10",
    )


def mp11() -> Micropublication:
    return _build(
        "MP11",
        _curated("MP11"),
        [C11, R48, R49, R50],
        quoted=[(S3, "MP3")],
        edges=[
            ("A_C11", "C11", SUPPORTS),
            ("R48", "C11", SUPPORTS),
            ("R49", "C11", SUPPORTS),
            ("R50", "C11", SUPPORTS),
            ("C11", "S3", CHALLENGES),
        ],
        claim="C11",
    )


def mp12() -> Micropublication:
    return _build(
        "MP12",
        _att("A_MP12", "kb-curator", "curator"),
        [C12],
        quoted=[(C11, "MP11"), (S3, "MP3")],
        edges=[
            ("A_C12", "C12", SUPPORTS),
            ("C11", "C12", SUPPORTS),
            ("S3", "C12", SUPPORTS),
            ("C11", "S3", CHALLENGES),
        ],
        claim="C12",
    )


def mp13() -> Micropublication:
    return _build("MP13", _curated("MP13"), [C4], edges=[("A_C4", "C4", SUPPORTS)], claim="C4")


def mp14() -> Micropublication:
    return _build("MP14", _curated("MP14"), [C5], edges=[("A_C5", "C5", SUPPORTS)], claim="C5")


def mp15() -> Micropublication:
    return _build(
        "MP15",
        _curated("MP15"),
        [C6, D6, M6],
        edges=[("A_C6", "C6", SUPPORTS), ("D6", "C6", SUPPORTS), ("M6", "D6", SUPPORTS)],
        claim="C6",
    )


BUILDERS = {
    "MP1": mp1,
    "MP2": mp2,
    "MP3": mp3,
    "MP4": mp4,
    "MP5": mp5,
    "MP6": mp6,
    "MP8": mp8,
    "MP9": mp9,
    "MP10": mp10,
    "MP11": mp11,
    "MP12": mp12,
    "MP13": mp13,
    "MP14": mp14,
    "MP15": mp15,
}

GROUP_MEMBERS = ("C1.1", "C3", "C4", "C5", "C6")
GROUP_HOLOTYPE = "C4"
A_MP7 = Attribution("A_MP7", "mp-curator", "author and curator")


def corpus(*ids: str) -> Network:
    """Merge the named micropublications (all non-group ones by default)."""
    ids = ids or tuple(BUILDERS)
    return merge([BUILDERS[i]() for i in ids], AGENTS.values())


def network_mp3_mp6() -> Network:
    return corpus("MP3", "MP4", "MP5", "MP6")


@functools.lru_cache(maxsize=1)
def spilman_network() -> Network:
    """Every example micropublication plus the MP7 similarity group."""
    return create_similarity_group(corpus(), GROUP_MEMBERS, GROUP_HOLOTYPE, A_MP7, "MP7").network


def mp7() -> Micropublication:
    return spilman_network().micropublications["MP7"]


def mp7_group() -> SimilarityGroup:
    return next(g for g in spilman_network().groups if g.group_mp == "MP7")


def micropublication(mp_id: str) -> Micropublication:
    return mp7() if mp_id == "MP7" else BUILDERS[mp_id]()


# -- citation distortion network --------------------------------------------

G_TEXTS = {
    "G-C1": "Amyloid-β accumulation is an early event in IBM muscle fibers",
    "G-C2": "APP overexpression is upstream of the other IBM muscle fiber changes",
    "G-C3": "Abnormal APP processing may initiate the IBM pathogenic cascade",
    "G-C4": "Aβ deposition appears before vacuolation in IBM muscle fibers",
    "G-C5": "We hypothesize that Aβ accumulation drives IBM pathology",
    "G-C6": "We propose that APP overexpression is the primary IBM abnormality",
    "G-C11": "The accumulation of APP and its fragments precedes other abnormalities in IBM muscle fibers",
    "G-C12": "The accumulation of APP and its fragments is often stated to precede other abnormalities in IBM muscle fibers",
}

# claim -> (micropublication, laboratory, supporting statements)
G_LAYOUT = {
    "G-C12": ("G-MP1", "lab-b", ("G-C1", "G-C2")),
    "G-C1": ("G-MP2", "lab-a", ("G-C3", "G-C4")),
    "G-C2": ("G-MP3", "lab-a", ("G-C3",)),
    "G-C3": ("G-MP4", "lab-a", ("G-C5", "G-C6")),
    "G-C4": ("G-MP5", "lab-a", ("G-C5",)),
    "G-C5": ("G-MP6", "lab-a", ()),
    "G-C6": ("G-MP7", "lab-a", ()),
    "G-C11": ("G-MP8", "lab-b", ()),
}
G_ROOT = "G-C12"


def _g_statement(sid: str) -> Representation:
    lab = G_LAYOUT[sid][1]
    return Representation(sid, S, G_TEXTS[sid], attribution=_att(f"A_{sid}", lab))


def greenberg_micropublications() -> list[Micropublication]:
    out = []
    for sid, (mp_id, lab, supporters) in G_LAYOUT.items():
        asserted = [_g_statement(sid)]
        edges = [(f"A_{sid}", sid, SUPPORTS)] + [(s, sid, SUPPORTS) for s in supporters]
        if sid == "G-C5":
            asserted.append(Representation("G-R5", REF, "Earlier hypothesis paper from the same laboratory"))
            edges.append(("G-R5", sid, SUPPORTS))
        if sid == G_ROOT:
            asserted.append(Representation("G-Q12", Kind.SENTENCE, "is often stated to"))
            edges.append(("G-Q12", sid, QUALIFIED_BY))
        quoted = [(_g_statement(s), G_LAYOUT[s][0]) for s in supporters]
        out.append(_build(mp_id, _att(f"A_{mp_id}", lab), asserted, quoted, edges, sid))
    return out


@functools.lru_cache(maxsize=1)
def greenberg() -> Network:
    """Citation-distortion network, with the unhedged review claim as the
    holotype of a group it shares with the hedged root claim."""
    net = merge(greenberg_micropublications(), AGENTS.values())
    group_att = _att("A_G-MP9", "mp-curator", "curator")
    return create_similarity_group(net, ("G-C11", "G-C12"), "G-C11", group_att, "G-MP9").network


def cyclic() -> Micropublication:
    """An invalid micropublication whose supports edges form a loop.

    Built around the construction functions, which would refuse nothing
    here: cycles are only caught by validation.
    """
    a = _att("A_X1", "mp-curator")
    x1 = Representation("X1", S, "First statement of a circular argument", attribution=a)
    x2 = Representation("X2", S, "Second statement of a circular argument", attribution=a)
    return _build(
        "MPX",
        _curated("MPX"),
        [x1, x2],
        edges=[("X1", "X2", SUPPORTS), ("X2", "X1", SUPPORTS), ("A_X1", "X1", SUPPORTS)],
        claim="X1",
    )


# -- files ------------------------------------------------------------------


def _documents() -> dict[str, str]:
    from ..serialization.canonical import CanonicalDocument, emit_canonical

    docs: dict[str, str] = {}
    full = spilman_network()
    for mp_id in [*BUILDERS, "MP7"]:
        mp = micropublication(mp_id)
        agents = sorted({a.agent_id for a in [mp.attribution, *mp.element_attributions.values()]})
        groups = tuple(g for g in full.groups if g.group_mp == mp_id)
        docs[f"{mp_id.lower()}.json"] = emit_canonical(
            CanonicalDocument((mp,), tuple(AGENTS[a] for a in agents), (), groups)
        )
    docs["corpus-mp3-mp6.json"] = emit_canonical(network_mp3_mp6())
    docs["spilman.json"] = emit_canonical(full)
    docs["greenberg.json"] = emit_canonical(greenberg())
    docs["cyclic.json"] = emit_canonical(CanonicalDocument((cyclic(),), (AGENTS["mp-curator"],)))
    docs["empty.json"] = emit_canonical(CanonicalDocument())
    return docs


def write_all(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in sorted(_documents().items()):
        path = directory / name
        path.write_bytes(text.encode("utf-8"))
        written.append(path)
    return written


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture file, e.g. ``fixture_path("mp1.json")``."""
    return Path(str(resources.files(__package__).joinpath(name)))


def fixture_names() -> list[str]:
    return sorted(p.name for p in resources.files(__package__).iterdir() if p.name.endswith(".json"))
