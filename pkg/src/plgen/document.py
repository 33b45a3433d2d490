"""Arrangement documents and canonical reports.

Document format, one directive per line, ``#`` starts a comment::

    dim 3
    vars x1 x2 x3            # optional, defaults to x1..xn
    subspace                 # following rows are forms vanishing on it
      1 -1 0
    subspace
      1 0 -1
    host                     # optional explicit hyperplanes
      1 -1 0
      1 0 -1
      0 1 -1

or a family reference instead of explicit subspaces::

    family orbit n=6 shape=3,3

Coefficients are integers or fractions such as ``3/2``.
"""

from __future__ import annotations

import difflib
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from .arrangements import Embedding, InvalidArrangement, SubspaceArrangement, canonical_embedding, embed
from .exact import as_form, independent_forms, is_zero, span_basis, span_contains
from .poly import GREVLEX, MonomialOrder, Ring

SCHEMA = "plgen-report/1"


class DocumentError(ValueError):
    """Invalid arrangement document; the message names the offending line."""


@dataclass
class ArrangementDocument:
    dim: int | None = None
    names: tuple | None = None
    subspaces: list = field(default_factory=list)
    subspace_lines: list = field(default_factory=list)
    host: list | None = None
    family: str | None = None
    params: dict = field(default_factory=dict)

    @property
    def ring(self) -> Ring:
        return Ring(self.names) if self.names else Ring.standard(self.dim)

    def echo(self) -> dict:
        out: dict = {}
        if self.family:
            out["family"] = self.family
            out["params"] = {k: str(v) for k, v in sorted(self.params.items())}
            return out
        ring = self.ring
        out["dim"] = self.dim
        out["vars"] = list(ring.names)
        out["subspaces"] = [[ring.linear_form(f).to_str() for f in s] for s in self.subspaces]
        if self.host is not None:
            out["host"] = [ring.linear_form(f).to_str() for f in self.host]
        return out


def _parse_row(text: str, lineno: int) -> tuple:
    try:
        return as_form(text.split())
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"line {lineno}: bad coefficient row {text.strip()!r}") from exc


def _parse_params(tokens: Sequence[str], lineno: int) -> dict:
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise DocumentError(f"line {lineno}: family parameter {tok!r} is not key=value")
        k, v = tok.split("=", 1)
        params[k.strip()] = v.strip()
    return params


def parse(text: str) -> ArrangementDocument:
    doc = ArrangementDocument()
    section = None
    current: list | None = None
    rows_seen: list = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        key = head.lower()
        if key == "dim":
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise DocumentError(f"line {lineno}: dim needs one positive integer")
            doc.dim = int(rest[0])
        elif key == "vars":
            doc.names = tuple(rest)
        elif key == "subspace":
            section = "subspace"
            current = []
            doc.subspaces.append(current)
            doc.subspace_lines.append(lineno)
        elif key == "host":
            section = "host"
            doc.host = []
        elif key == "family":
            if not rest:
                raise DocumentError(f"line {lineno}: family needs a name")
            doc.family = rest[0].lower()
            doc.params = _parse_params(rest[1:], lineno)
        else:
            if section is None:
                raise DocumentError(f"line {lineno}: unexpected {head!r} outside a subspace or host block")
            row = _parse_row(line, lineno)
            rows_seen.append((lineno, row, section))
            if section == "subspace":
                current.append(row)
            else:
                doc.host.append(row)

    if doc.family and (doc.subspaces or doc.host is not None):
        raise DocumentError("a document gives either explicit subspaces or a family, not both")
    if doc.family:
        return doc
    if not doc.subspaces:
        raise DocumentError("no subspaces given")
    if doc.dim is None:
        if doc.names:
            doc.dim = len(doc.names)
        elif rows_seen:
            doc.dim = len(rows_seen[0][1])
    if doc.names and len(doc.names) != doc.dim:
        raise DocumentError(f"{len(doc.names)} variable names for dimension {doc.dim}")
    for lineno, row, _ in rows_seen:
        if len(row) != doc.dim:
            raise DocumentError(f"line {lineno}: row has {len(row)} entries, dimension is {doc.dim}")
        if is_zero(row):
            raise DocumentError(f"line {lineno}: zero row defines no hyperplane")

    n = doc.dim
    canon = []
    for k, (s, lineno) in enumerate(zip(doc.subspaces, doc.subspace_lines)):
        if not s:
            raise DocumentError(f"line {lineno}: subspace {k + 1} has no rows")
        canon.append(span_basis(s, n))
    kept = [independent_forms(s, n) for s in doc.subspaces]
    for i in range(len(canon)):
        for j in range(len(canon)):
            if i == j:
                continue
            if canon[i] == canon[j]:
                if i < j:
                    raise DocumentError(
                        f"line {doc.subspace_lines[j]}: duplicate subspace (same as line {doc.subspace_lines[i]})"
                    )
            elif span_contains(canon[j], canon[i], n):
                raise DocumentError(
                    f"line {doc.subspace_lines[j]}: containment violation, subspace {j + 1} "
                    f"lies inside subspace {i + 1} (line {doc.subspace_lines[i]})"
                )
    doc.subspaces = kept
    return doc


def load(path) -> ArrangementDocument:
    return parse(Path(path).read_text())


# ----------------------------------------------------------------- families


def _int(params: dict, key: str, default=None) -> int:
    if key not in params:
        if default is None:
            raise DocumentError(f"family parameter {key!r} is required")
        return default
    try:
        return int(params[key])
    except ValueError as exc:
        raise DocumentError(f"family parameter {key}={params[key]!r} is not an integer") from exc


def _points(text: str) -> list:
    return [tuple(p.split(":")) for p in text.split(";") if p.strip()]


def family_embedding(name: str, params: dict) -> Embedding:
    """Instantiate a named family together with its natural host."""
    from . import families as fam

    name = name.lower()
    try:
        if name == "braid":
            n = _int(params, "n")
            host = fam.braid_arrangement(n)
            arr = SubspaceArrangement.from_forms([[f] for f in host.forms], n)
            return Embedding.of(arr, host)
        if name == "orbit":
            n = _int(params, "n")
            shapes = [fam.parse_shape(s) for s in params["shape"].split("+")]
            parts = [p for lam in shapes for p in fam.partitions_of_shape(lam, n)]
            return fam.braid_family(parts, n)
        if name == "blocks":
            n = _int(params, "n")
            return fam.braid_family(fam.partitions_with_blocks(_int(params, "k"), n), n)
        if name in ("kl", "kleitman-lovasz"):
            return fam.kleitman_lovasz(_int(params, "m"), _int(params, "n"))
        if name == "polygraph":
            return fam.polygraph(_int(params, "n"), _int(params, "m"))
        if name == "coordinate":
            n = _int(params, "n")
            facets = [[int(v) for v in f.split(",") if v] for f in params["facets"].split(";")]
            return fam.coordinate_family(fam.SimplicialComplex.from_facets(facets, n), check=False).embedding
        if name == "skewlines":
            r = _int(params, "r")
            ts = params.get("t")
            return canonical_embedding(fam.skew_lines(r, ts.split(",") if ts else None))
        if name == "p2points":
            pts = fam.PRESETS[params["preset"]] if "preset" in params else _points(params["points"])
            return canonical_embedding(fam.p2_points(pts))
        if name == "twoline":
            return canonical_embedding(fam.two_line_points(_int(params, "r1"), _int(params, "r2")).arrangement)
        if name == "cone":
            pts = fam.PRESETS[params.get("preset", "general5")] if "points" not in params else _points(params["points"])
            return canonical_embedding(fam.cone_arrangement(pts))
    except KeyError as exc:
        raise DocumentError(f"family {name}: missing or unknown parameter {exc}") from exc
    except (ValueError, InvalidArrangement) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(f"family {name}: {exc}") from exc
    raise DocumentError(f"unknown family {name!r}")


FAMILIES = ("braid", "orbit", "blocks", "kl", "polygraph", "coordinate", "skewlines", "p2points", "twoline", "cone")


def document_embedding(doc: ArrangementDocument) -> Embedding:
    if doc.family:
        return family_embedding(doc.family, doc.params)
    try:
        arr = SubspaceArrangement.from_forms(doc.subspaces, ring=doc.ring)
        if doc.host is not None:
            return embed(arr, doc.host)
        return canonical_embedding(arr)
    except InvalidArrangement as exc:
        raise DocumentError(str(exc)) from exc


# ------------------------------------------------------------------ reports


def poly_list(polys, order: MonomialOrder = GREVLEX) -> list[str]:
    """Canonically printed and sorted polynomials."""
    key = order.keyfunc
    items = sorted(
        polys,
        key=lambda p: (
            key(p.leading_monomial(order)),
            sorted(((key(m), c) for m, c in p.terms.items()), reverse=True),
        ),
        reverse=True,
    )
    return [p.to_str(order) for p in items]


def canonical(report: dict) -> str:
    """Deterministic serialization used for golden files (timings dropped)."""
    clean = {k: v for k, v in report.items() if k != "timings"}
    return json.dumps(clean, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_text(report: dict) -> str:
    lines = [f"command: {report.get('command')}"]

    def emit(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                emit(f"{prefix}{k}.", value[k])
        elif isinstance(value, list) and value and all(isinstance(v, str) for v in value):
            lines.append(f"{prefix[:-1]}:")
            lines.extend(f"  {v}" for v in value)
        else:
            lines.append(f"{prefix[:-1]}: {value}")

    emit("", report.get("result", {}))
    lines.append(f"complete: {report.get('complete')}")
    return "\n".join(lines) + "\n"


class GoldenMissing(FileNotFoundError):
    pass


@dataclass
class GoldenResult:
    ok: bool
    message: str


def golden_diff(report: dict, golden_path) -> GoldenResult:
    """Byte comparison of the canonical serialization against a golden file."""
    path = Path(golden_path)
    if not path.exists():
        raise GoldenMissing(f"golden file {path} is missing; regenerate it with --write-golden {path}")
    expected = path.read_text()
    actual = canonical(report)
    if expected == actual:
        return GoldenResult(True, "match")
    exp_lines = expected.splitlines()
    act_lines = actual.splitlines()
    for i, (a, b) in enumerate(zip(exp_lines, act_lines), start=1):
        if a != b:
            return GoldenResult(False, f"first difference at line {i}:\n- {a}\n+ {b}")
    i = min(len(exp_lines), len(act_lines)) + 1
    extra = "".join(difflib.unified_diff(exp_lines[i - 1:], act_lines[i - 1:], lineterm="\n", n=0))
    return GoldenResult(False, f"first difference at line {i} (length differs)\n{extra}")
