import json
import random

import pytest

from micropub import fixtures as fx
from micropub.errors import CanonicalSyntaxError, InvalidInput, InvalidMicropublication, SchemaError, VersionError
from micropub.network import merge
from micropub.serialization import emit_canonical, load_document, parse_canonical, parse_micropublication
from micropub.serialization.canonical import network_equal

from generators import random_corpus

NAMES = fx.fixture_names()


def read(name):
    if not name.endswith(".json"):
        name += ".json"
    return fx.fixture_path(name).read_text(encoding="utf-8")


@pytest.mark.parametrize("name", NAMES)
def test_shipped_fixture_is_canonical(name):
    text = read(name)
    assert emit_canonical(load_document(text)) == text


@pytest.mark.parametrize("name", [n for n in NAMES if n != "cyclic.json"])
def test_fixture_network_round_trip(name):
    net = parse_canonical(read(name))
    again = parse_canonical(emit_canonical(net))
    assert network_equal(net, again)


def test_fixture_files_match_builders():
    for name, doc in fx._documents().items():
        assert read(name) == doc


def test_cyclic_fixture_loads_but_does_not_merge():
    doc = load_document(read("cyclic"))
    with pytest.raises(InvalidMicropublication):
        doc.network()


@pytest.mark.parametrize("seed", range(100))
def test_random_corpus_round_trip(seed):
    mps, agents = random_corpus(random.Random(seed), max_nodes=50)
    net = merge(mps, agents)
    text = emit_canonical(net)
    back = parse_canonical(text)
    assert network_equal(net, back)
    assert emit_canonical(back) == text


def test_emit_is_byte_stable():
    net = fx.spilman_network()
    a = emit_canonical(net)
    assert a == emit_canonical(parse_canonical(a))
    assert a.endswith("}\n")
    data = json.loads(a)
    assert list(data) == sorted(data)
    assert data["version"] == "mp/1"


def test_empty_corpus():
    text = emit_canonical([])
    assert text == read("empty")
    net = parse_canonical(text)
    assert not net.micropublications and not net.edges


def test_single_micropublication():
    mp = parse_micropublication(read("mp1"))
    assert mp == fx.mp1()
    with pytest.raises(SchemaError):
        parse_micropublication(read("corpus-mp3-mp6"))


def test_unknown_predicate():
    data = json.loads(read("mp2"))
    data["edges"][0]["predicate"] = "endorses"
    with pytest.raises(SchemaError, match="endorses"):
        load_document(json.dumps(data))


def test_unknown_field():
    data = json.loads(read("mp2"))
    data["extra"] = 1
    with pytest.raises(SchemaError):
        load_document(json.dumps(data))


def test_unknown_kind():
    data = json.loads(read("mp2"))
    data["representations"][0]["kind"] = "Rumour"
    with pytest.raises(SchemaError):
        load_document(json.dumps(data))


def test_syntax_error_has_position():
    text = read("mp1")
    broken = text.replace('"agents": [', '"agents": [,', 1)
    with pytest.raises(CanonicalSyntaxError) as info:
        load_document(broken)
    assert (info.value.line, info.value.column) == (2, 14)


def test_version_mismatch():
    data = json.loads(read("mp1"))
    data["version"] = "mp/2"
    with pytest.raises(VersionError):
        load_document(json.dumps(data))


def test_model_errors_surface_as_schema_errors():
    data = json.loads(read("mp2"))
    data["edges"].append({"asserted_by": "MP2", "from": "D1", "predicate": "supports", "to": "D1"})
    with pytest.raises(SchemaError):
        load_document(json.dumps(data))


def test_edge_stamped_by_another_member():
    data = json.loads(read("mp2"))
    data["edges"][0]["asserted_by"] = "MP9"
    with pytest.raises(SchemaError):
        load_document(json.dumps(data))


def test_emit_rejects_garbage():
    with pytest.raises(InvalidInput):
        emit_canonical(42)
    with pytest.raises(InvalidInput):
        emit_canonical([fx.mp1(), "x"])


def test_unicode_kept_verbatim():
    text = emit_canonical(fx.mp1())
    assert "\\u" not in text
