"""Serialisation of factorizations: JSON (round-trippable), DOT, edge list,
and a plain text form.

JSON schema::

    {"n": int, "factor_type": [int, ...], "host": {"kind": str, "m": int},
     "factors": [[["x0", "x1", ...], ...], ...], "verified": bool, "seed": int}

Cycles are vertex lists in canonical rotation, so serialisation is
deterministic and re-serialising a parsed file reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from .core import CycleType, DirectedCycle, TwoRegularDigraph, parse_vertex
from .hosts import HostDescriptor


@dataclass(frozen=True)
class FactorizationDocument:
    n: int
    ftype: CycleType
    host: HostDescriptor
    factors: tuple  # TwoRegularDigraph
    verified: bool
    seed: int


def document_for_solution(solution) -> FactorizationDocument:
    """Wrap a solver result (over the complete host) for export."""
    return FactorizationDocument(
        n=solution.n,
        ftype=solution.ftype,
        host=HostDescriptor("CompleteSymmetric", solution.n),
        factors=tuple(solution.factors),
        verified=solution.report.passed,
        seed=solution.seed,
    )


def to_json_dict(doc: FactorizationDocument) -> dict:
    return {
        "n": doc.n,
        "factor_type": list(doc.ftype.lengths),
        "host": doc.host.to_json(),
        "factors": [
            [[v.text() for v in c.vertices] for c in f.cycles] for f in doc.factors
        ],
        "verified": doc.verified,
        "seed": doc.seed,
    }


def to_json(doc: FactorizationDocument) -> str:
    return json.dumps(to_json_dict(doc), indent=2) + "\n"


def from_json_dict(data: dict) -> FactorizationDocument:
    factors = tuple(
        TwoRegularDigraph(
            DirectedCycle(parse_vertex(t) for t in cyc) for cyc in factor
        )
        for factor in data["factors"]
    )
    host = data["host"]
    return FactorizationDocument(
        n=int(data["n"]),
        ftype=CycleType(data["factor_type"]),
        host=HostDescriptor(str(host["kind"]), int(host["m"])),
        factors=factors,
        verified=bool(data["verified"]),
        seed=int(data.get("seed", 0)),
    )


def from_json(text: str) -> FactorizationDocument:
    return from_json_dict(json.loads(text))


def to_text(doc: FactorizationDocument) -> str:
    lines = [
        f"n={doc.n} type={doc.ftype.text()} host={doc.host.kind}({doc.host.m_or_n}) "
        f"verified={doc.verified} seed={doc.seed}"
    ]
    for i, f in enumerate(doc.factors, 1):
        lines.append(f"F{i}: " + " ".join(c.text() for c in f.cycles))
    return "\n".join(lines) + "\n"


def to_edges(doc: FactorizationDocument) -> str:
    """One line per arc: ``<factor-index> <tail> <head>``."""
    lines = []
    for i, f in enumerate(doc.factors, 1):
        for a in sorted(f.arcs()):
            lines.append(f"{i} {a.tail.text()} {a.head.text()}")
    return "\n".join(lines) + "\n"


def to_dot(doc: FactorizationDocument) -> str:
    """A digraph with exactly one edge statement per arc, tagged by factor."""
    lines = [f'digraph factorization_{doc.n} {{']
    for i, f in enumerate(doc.factors, 1):
        for a in sorted(f.arcs()):
            lines.append(
                f'  "{a.tail.text()}" -> "{a.head.text()}" [factor={i}];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


FORMATS = {
    "json": to_json,
    "text": to_text,
    "edges": to_edges,
    "dot": to_dot,
}


def render(doc: FactorizationDocument, fmt: str) -> str:
    try:
        return FORMATS[fmt](doc)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None
