"""``micropub`` command-line tool.

Commands::

    micropub validate FILE...
    micropub merge FILE... [-o OUT]
    micropub query {lineage,grounding,support-graph,challenge-graph,similogs} ID FILE...
    micropub export --format {mpjson,ttl,trig-nanopub,dot,report-text} FILE... [-o OUT]
    micropub audit FILE... [--depth-threshold N] [--strict]
    micropub fixtures [DIR]

Exit status: 0 success, 1 domain error (invalid micropublication, unknown
id, flagged claims under ``--strict``), 2 unreadable input or bad usage.
Diagnostics go to standard error, results to standard output or ``-o``.
The Turtle namespace can be overridden with ``MP_VOCAB_BASE``.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from . import fixtures
from .errors import (
    CanonicalSyntaxError,
    CycleDetected,
    MicropubError,
    SchemaError,
    VersionError,
)
from .model import validate
from .network import (
    Network,
    challenge_graph_of,
    claim_lineage,
    distortion_report,
    grounding_level,
    similogs_of,
    support_graph_of,
)
from .serialization import DotOptions, VocabularyMap, emit_canonical, emit_dot, emit_turtle, export_nanopub
from .serialization.canonical import CanonicalDocument, load_document

FORMATS = ("mpjson", "ttl", "trig-nanopub", "dot", "report-text")
QUERIES = ("lineage", "grounding", "support-graph", "challenge-graph", "similogs")

OK, DOMAIN_ERROR, PARSE_ERROR = 0, 1, 2


class ParseFailure(Exception):
    """An input file could not be read as MPJSON."""


@dataclass
class RunConfig:
    command: str
    inputs: list[Path] = field(default_factory=list)
    output: Path | None = None
    format: str = "mpjson"
    depth_threshold: int = 2
    nanopub_style: str = "default"
    strict: bool = False
    query: str | None = None
    subject: str | None = None
    mp_id: str | None = None
    vocab_base: str | None = None
    directory: Path | None = None

    @property
    def vocab(self) -> VocabularyMap:
        return VocabularyMap(self.vocab_base) if self.vocab_base else VocabularyMap()


# -- loading ----------------------------------------------------------------


def _load_one(path: Path) -> CanonicalDocument:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseFailure(f"{path}: cannot read: {exc}") from None
    try:
        return load_document(text)
    except CanonicalSyntaxError as exc:
        raise ParseFailure(f"{path}:{exc.line}:{exc.column}: SyntaxError: {exc}") from None
    except (SchemaError, VersionError) as exc:
        raise ParseFailure(f"{path}: {type(exc).__name__}: {exc}") from None


def load(paths: list[Path]) -> CanonicalDocument:
    return CanonicalDocument.combine(_load_one(p) for p in paths)


def load_network(paths: list[Path], err: TextIO) -> Network:
    net = load(paths).network()
    for w in net.warnings:
        print(f"warning {w.code}: {w.message}", file=err)
    return net


# -- commands ---------------------------------------------------------------


def run_validate(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    status = OK
    for path in cfg.inputs:
        doc = _load_one(path)
        for mp in sorted(doc.micropublications, key=lambda m: m.id):
            report = validate(mp)
            print(f"{path.name} {mp.id}: {'valid' if report.valid else 'invalid'}", file=out)
            print(f"  minimal_form: {str(report.minimal_form).lower()}", file=out)
            for f in report.errors:
                print(f"  error {f.code}: {f.message}", file=out)
            for f in report.warnings:
                print(f"  warning {f.code}: {f.message}", file=out)
            if not report.valid:
                status = DOMAIN_ERROR
                for f in report.errors:
                    print(f"{path}: {mp.id}: {f.code}: {f.message}", file=err)
    return status


def run_merge(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    net = load_network(cfg.inputs, err)
    out.write(emit_canonical(net))
    return OK


def _format_path(path) -> str:
    return " -> ".join(path)


def run_query(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    net = load_network(cfg.inputs, err)
    subject = cfg.subject
    if cfg.query == "lineage":
        lin = claim_lineage(net, subject)
        print(f"lineage {subject}", file=out)
        print(f"depth: {lin.depth}", file=out)
        print(f"nodes: {' '.join(sorted(lin.nodes))}", file=out)
        print("edges:", file=out)
        for a, b in sorted(lin.edges):
            print(f"  {a} -> {b}", file=out)
    elif cfg.query == "grounding":
        g = grounding_level(net, subject)
        print(f"{subject}: {g.level}", file=out)
        print(f"witness: {_format_path(g.witness)}", file=out)
    elif cfg.query == "support-graph":
        for rid in sorted(support_graph_of(net, subject)):
            print(rid, file=out)
    elif cfg.query == "challenge-graph":
        for rid in sorted(challenge_graph_of(net, subject)):
            print(rid, file=out)
    else:
        for rid in sorted(similogs_of(net, subject)):
            print(rid, file=out)
    return OK


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def audit_text(net: Network, depth_threshold: int) -> str:
    report = distortion_report(net, depth_threshold)
    rows = []
    for e in report.entries:
        loss = ", ".join(f"{a}>{b}" for a, b in sorted(e.qualifier_loss)) or "-"
        rows.append(
            [e.claim_id, str(e.level), str(e.depth), f"{e.self_citation_ratio:.2f}", loss, "yes" if e.flagged else "no"]
        )
    text = _table(["claim", "grounding", "depth", "self_citation", "qualifier_loss", "flagged"], rows)
    return text + f"flagged: {len(report.flagged)} of {len(report.entries)} (depth threshold {depth_threshold})\n"


def report_text(net: Network, depth_threshold: int) -> str:
    rows = []
    for mp_id in sorted(net.micropublications):
        mp = net.micropublications[mp_id]
        rows.append(
            [mp_id, mp.claim_id or "-", str(len(mp.asserted)), str(len(mp.quoted)), str(len(mp.edges)),
             "group" if mp_id in net.group_mps else ""]
        )
    text = _table(["micropublication", "claim", "asserted", "quoted", "edges", "note"], rows)
    return text + "\n" + audit_text(net, depth_threshold)


def _pick_mp(net: Network, mp_id: str | None):
    if mp_id is not None:
        if mp_id not in net.micropublications:
            raise MicropubError(f"unknown micropublication {mp_id}")
        return net.micropublications[mp_id]
    candidates = [m for k, m in net.micropublications.items() if k not in net.group_mps]
    if len(candidates) != 1:
        raise MicropubError(f"trig-nanopub exports one micropublication; pass --mp (found {len(candidates)})")
    return candidates[0]


def run_export(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    net = load_network(cfg.inputs, err)
    if cfg.format == "mpjson":
        out.write(emit_canonical(net))
    elif cfg.format == "ttl":
        out.write(emit_turtle(net, cfg.vocab))
    elif cfg.format == "trig-nanopub":
        out.write(export_nanopub(_pick_mp(net, cfg.mp_id), net.agents, cfg.vocab, cfg.nanopub_style))
    elif cfg.format == "dot":
        out.write(emit_dot(net, DotOptions()))
    else:
        out.write(report_text(net, cfg.depth_threshold))
    return OK


def run_audit(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    net = load_network(cfg.inputs, err)
    out.write(audit_text(net, cfg.depth_threshold))
    if cfg.strict and distortion_report(net, cfg.depth_threshold).flagged:
        return DOMAIN_ERROR
    return OK


def run_fixtures(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    if cfg.directory is None:
        for name in fixtures.fixture_names():
            print(fixtures.fixture_path(name), file=out)
    else:
        for path in fixtures.write_all(cfg.directory):
            print(path, file=out)
    return OK


COMMANDS = {
    "validate": run_validate,
    "merge": run_merge,
    "query": run_query,
    "export": run_export,
    "audit": run_audit,
    "fixtures": run_fixtures,
}


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="micropub", description="Validate, merge, query and export micropublications.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_inputs(p: argparse.ArgumentParser, output: bool = True) -> None:
        p.add_argument("inputs", nargs="+", type=Path, metavar="FILE", help="MPJSON document")
        if output:
            p.add_argument("-o", "--output", type=Path, help="write the result here instead of standard output")

    with_inputs(sub.add_parser("validate", help="check each micropublication"), output=False)
    with_inputs(sub.add_parser("merge", help="merge documents into one MPJSON network"))

    q = sub.add_parser("query", help="lineage, grounding and graph queries")
    q.add_argument("query", choices=QUERIES)
    q.add_argument("subject", metavar="ID", help="claim, statement or micropublication id")
    with_inputs(q)

    e = sub.add_parser("export", help="write the merged corpus in another format")
    e.add_argument("--format", choices=FORMATS, default="mpjson")
    e.add_argument("--nanopub-style", choices=("default", "figure1"), default="default")
    e.add_argument("--mp", dest="mp_id", help="micropublication to export as a nanopublication")
    e.add_argument("--depth-threshold", type=int, default=2)
    e.add_argument("--vocab-base", help="Turtle namespace (default: $MP_VOCAB_BASE or http://purl.org/mp#)")
    with_inputs(e)

    a = sub.add_parser("audit", help="citation distortion report")
    a.add_argument("--depth-threshold", type=int, default=2)
    a.add_argument("--strict", action="store_true", help="exit 1 when any claim is flagged")
    with_inputs(a)

    f = sub.add_parser("fixtures", help="list the shipped fixtures, or write them to DIR")
    f.add_argument("directory", nargs="?", type=Path, metavar="DIR")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    values = vars(ns)
    cfg = RunConfig(command=values.pop("command"))
    for key, value in values.items():
        setattr(cfg, key, value)
    if cfg.vocab_base is None:
        cfg.vocab_base = os.environ.get("MP_VOCAB_BASE") or None
    return cfg


def run(cfg: RunConfig, out: TextIO, err: TextIO) -> int:
    try:
        return COMMANDS[cfg.command](cfg, out, err)
    except ParseFailure as exc:
        print(exc, file=err)
        return PARSE_ERROR
    except CycleDetected as exc:
        print(f"error Cycle: {exc}", file=err)
        return DOMAIN_ERROR
    except MicropubError as exc:
        print(f"error {type(exc).__name__}: {exc}", file=err)
        return DOMAIN_ERROR


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    if cfg.output is None:
        return run(cfg, sys.stdout, sys.stderr)
    # build the whole output first so a failed run leaves no partial file
    buf = io.StringIO()
    status = run(cfg, buf, sys.stderr)
    if status == OK:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
