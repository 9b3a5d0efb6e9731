import json

import pytest

from micropub import fixtures as fx
from micropub.cli import main, parse_config
from micropub.serialization import emit_canonical, parse_canonical


def path(name):
    return str(fx.fixture_path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_mp1(capsys):
    code, out, _ = run(capsys, "validate", path("mp1.json"))
    assert code == 0
    assert out.splitlines()[:2] == ["mp1.json MP1: valid", "  minimal_form: true"]


def test_validate_cycle(capsys):
    code, out, err = run(capsys, "validate", path("cyclic.json"))
    assert code == 1
    assert "MPX: invalid" in out
    assert "Cycle" in err


def test_syntax_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": "mp/1",\n  "agents": [,]}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert f"{bad}:2:" in err and "SyntaxError" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "merge", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read" in err


def test_merge_matches_corpus(capsys):
    files = [path(f"mp{i}.json") for i in (3, 4, 5, 6)]
    code, out, _ = run(capsys, "merge", *files)
    assert code == 0
    merged, expected = parse_canonical(out), fx.network_mp3_mp6()
    assert merged.micropublications == expected.micropublications
    assert merged.edges == expected.edges
    assert set(merged.agents) == {"harrison", "hsia", "mp-curator", "pspilman"}


def test_merge_to_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "merge", path("mp1.json"), path("mp2.json"), "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["version"] == "mp/1"


def test_failed_run_writes_nothing(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, _, _ = run(capsys, "merge", path("cyclic.json"), "-o", str(target))
    assert code == 1
    assert not target.exists()


def test_query_grounding(capsys):
    code, out, _ = run(capsys, "query", "grounding", "C3", path("spilman.json"))
    assert code == 0
    assert out == "C3: MethodBacked (4)\nwitness: M1 -> D1 -> C3\n"


def test_query_lineage(capsys):
    code, out, _ = run(capsys, "query", "lineage", "C3", path("corpus-mp3-mp6.json"))
    assert code == 0
    assert "depth: 2" in out
    assert "  C1.1 -> S1" in out


def test_query_graphs_and_similogs(capsys):
    _, out, _ = run(capsys, "query", "support-graph", "MP1", path("mp1.json"))
    assert out.split() == ["A_C1", "Ref5"]
    _, out, _ = run(capsys, "query", "challenge-graph", "MP3", path("spilman.json"))
    assert out.split() == ["C11"]
    _, out, _ = run(capsys, "query", "similogs", "C3", path("spilman.json"))
    assert out.split() == sorted(fx.GROUP_MEMBERS)


def test_query_unknown_claim(capsys):
    code, _, err = run(capsys, "query", "lineage", "C99", path("mp1.json"))
    assert code == 1
    assert "UnknownClaim" in err


@pytest.mark.parametrize("fmt", ["mpjson", "ttl", "dot", "report-text"])
def test_export_formats(capsys, fmt):
    code, out, _ = run(capsys, "export", "--format", fmt, path("corpus-mp3-mp6.json"))
    assert code == 0 and out


def test_export_mpjson_is_canonical(capsys):
    _, out, _ = run(capsys, "export", "--format", "mpjson", path("spilman.json"))
    assert out == fx.fixture_path("spilman.json").read_text(encoding="utf-8")
    assert out == emit_canonical(fx.spilman_network())


def test_export_nanopub(capsys):
    code, out, _ = run(capsys, "export", "--format", "trig-nanopub", path("mp1.json"))
    assert code == 0 and "<urn:mp:MP1/np/Assertion> {" in out
    code, _, err = run(capsys, "export", "--format", "trig-nanopub", path("corpus-mp3-mp6.json"))
    assert code == 1 and "--mp" in err
    code, out, _ = run(capsys, "export", "--format", "trig-nanopub", "--mp", "MP4", "--nanopub-style", "figure1",
                       path("corpus-mp3-mp6.json"))
    assert code == 0 and "<urn:mp:MP4/np/Support> {" in out


def test_vocab_base_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MP_VOCAB_BASE", "http://example.org/mp#")
    _, out, _ = run(capsys, "export", "--format", "ttl", path("mp1.json"))
    assert "@prefix mp: <http://example.org/mp#> ." in out
    assert parse_config(["export", "--vocab-base", "http://x.org/v#", "f"]).vocab_base == "http://x.org/v#"


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", path("greenberg.json"))
    assert code == 0
    row = next(line for line in out.splitlines() if line.startswith("G-C12 "))
    assert row.split() == ["G-C12", "StatementBacked", "(2)", "3", "0.75", "-", "yes"]
    assert out.rstrip().endswith("(depth threshold 2)")
    code, _, _ = run(capsys, "audit", "--strict", path("greenberg.json"))
    assert code == 1
    code, out, _ = run(capsys, "audit", "--strict", path("corpus-mp3-mp6.json"))
    assert code == 0 and "flagged: 0 of 3" in out


def test_fixtures_written_match_shipped(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures", str(tmp_path))
    assert code == 0
    for name in fx.fixture_names():
        assert (tmp_path / name).read_bytes() == fx.fixture_path(name).read_bytes()
    code, out, _ = run(capsys, "fixtures")
    assert len(out.splitlines()) == len(fx.fixture_names())


def test_bad_usage_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["export", "--format", "pdf", path("mp1.json")])
    assert info.value.code == 2
