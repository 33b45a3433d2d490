"""Command-line front end.

    plgen plcheck examples.txt --emit json
    plgen family orbit --n 6 --shape 2,2,1,1 --run blocker
    plgen ideal doc.txt --golden tests/golden/doc_ideal.json

Exit codes: 0 success (a negative pl verdict is still success), 1 golden
mismatch, 2 input error, 3 time limit reached (partial report emitted).
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import families as fam
from .arrangements import (
    Embedding,
    blocker_ideal,
    h_product_ideal,
    minimal_covers,
    pl_check,
    vanishing_ideal,
)
from .document import (
    FAMILIES,
    SCHEMA,
    ArrangementDocument,
    DocumentError,
    GoldenMissing,
    canonical,
    document_embedding,
    golden_diff,
    load,
    poly_list,
    to_json,
    to_text,
)
from .lattice import blocker, double_blocker
from .poly import GREVLEX, MonomialOrder, TimeLimitExceeded, hilbert_function, time_limit

log = logging.getLogger("plgen")

COMMANDS = ("lattice", "blocker", "bideal", "fideal", "ideal", "plcheck")
DEFAULT_TIME_LIMIT = 300.0

EXIT_OK, EXIT_GOLDEN, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3


def _is_braid(e: Embedding) -> bool:
    n = e.host.n
    return n >= 2 and e.host == fam.braid_arrangement(n)


def _flat_labels(e: Embedding, flats) -> list[str]:
    ordered = sorted(flats, key=lambda f: (f.rank, sorted(f.hset)))
    if _is_braid(e):
        return [fam.partition_label(fam.flat_partition(f, e.host.n)) for f in ordered]
    return [f.label() for f in ordered]


def _shape_summary(e: Embedding, flats) -> dict:
    hist = fam.antichain_shapes(flats, e.host.n)
    return {",".join(map(str, s)): c for s, c in sorted(hist.items(), reverse=True)}


def _gb(ideal, order):
    return poly_list(ideal.groebner(order).elements, order)


def _cmd_lattice(e: Embedding, res: dict, opts):
    lat = e.lattice
    ring = e.ring
    res["hyperplanes"] = [ring.linear_form(f).to_str(opts.order) for f in e.host.forms]
    res["flats"] = len(lat)
    res["rank"] = lat.rank()
    res["rank_sizes"] = lat.rank_sizes()
    res["antichain"] = _flat_labels(e, e.antichain)


def _cmd_blocker(e: Embedding, res: dict, opts):
    lat = e.lattice
    a = e.antichain
    star = blocker(a, lat)
    dstar = double_blocker(a, lat)
    res["antichain"] = _flat_labels(e, a)
    res["blocker"] = _flat_labels(e, star)
    res["double_blocker"] = _flat_labels(e, dstar)
    res["reflexive"] = dstar == a
    if _is_braid(e):
        res["shapes"] = {
            "antichain": _shape_summary(e, a),
            "blocker": _shape_summary(e, star),
            "double_blocker": _shape_summary(e, dstar),
        }


def _cmd_bideal(e: Embedding, res: dict, opts):
    b = blocker_ideal(e)
    res["generators"] = poly_list(b.generators, opts.order)
    res["groebner"] = _gb(b, opts.order)


def _cmd_fideal(e: Embedding, res: dict, opts):
    ring = e.ring
    res["covers"] = [[ring.linear_form(e.host.forms[i]).to_str(opts.order) for i in c] for c in minimal_covers(e)]
    f = h_product_ideal(e)
    res["generators"] = poly_list(f.generators, opts.order)
    res["groebner"] = _gb(f, opts.order)


def _cmd_ideal(e: Embedding, res: dict, opts):
    ia = vanishing_ideal(e.arrangement)
    res["groebner"] = _gb(ia, opts.order)
    top = opts.max_degree if opts.max_degree is not None else ia.max_generator_degree()
    res["hilbert"] = [hilbert_function(ia, t) for t in range(top + 1)]


def _cmd_plcheck(e: Embedding, res: dict, opts):
    cert = pl_check(e.arrangement, embedding=e, trace=True, max_degree=opts.max_degree)
    ring = e.ring
    res["verdict"] = cert.verdict
    res["vanishing_ideal"] = poly_list(cert.vanishing_ideal.generators, opts.order)
    res["enlarged_host"] = [ring.linear_form(f).to_str(opts.order) for f in cert.enlarged_host.forms]
    res["f_generators"] = poly_list(cert.f_ideal_generators, opts.order)
    res["witness"] = cert.witness.to_str(opts.order) if cert.witness is not None else None
    res["hilbert_trace"] = [list(row) for row in cert.hilbert_trace]


HANDLERS = {
    "lattice": _cmd_lattice,
    "blocker": _cmd_blocker,
    "bideal": _cmd_bideal,
    "fideal": _cmd_fideal,
    "ideal": _cmd_ideal,
    "plcheck": _cmd_plcheck,
}


class Options:
    def __init__(self, order=GREVLEX, max_degree=None, time_limit=DEFAULT_TIME_LIMIT):
        self.order = order
        self.max_degree = max_degree
        self.time_limit = time_limit


def run(command: str, doc: ArrangementDocument, opts: Options | None = None) -> dict:
    """Run one command on a document; a time-out yields a partial report with complete=False."""
    opts = opts or Options()
    if command not in HANDLERS:
        raise DocumentError(f"unknown command {command!r}")
    report = {"schema": SCHEMA, "command": command, "input": doc.echo(), "order": str(opts.order)}
    res: dict = {}
    report["result"] = res
    t0 = time.perf_counter()
    try:
        with time_limit(opts.time_limit):
            e = document_embedding(doc)
            HANDLERS[command](e, res, opts)
        report["complete"] = True
    except TimeLimitExceeded:
        report["complete"] = False
        res["incomplete_reason"] = f"time limit of {opts.time_limit} s reached"
    report["timings"] = {"total_seconds": round(time.perf_counter() - t0, 4)}
    return report


def _family_doc(args) -> ArrangementDocument:
    params = {}
    for key in ("n", "m", "k", "r", "r1", "r2", "shape", "preset", "points", "facets", "t"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = str(v)
    return ArrangementDocument(family=args.name, params=params)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plgen", description=__doc__.split("\n\n")[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--order", default="grevlex", help="grevlex or lex (printing and reported bases)")
        sp.add_argument("--max-degree", type=int, default=None, help="Hilbert trace bound")
        sp.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT, help="seconds")
        sp.add_argument("--emit", choices=("json", "text"), default="text")
        sp.add_argument("--golden", help="compare the canonical report against this file")
        sp.add_argument("--write-golden", help="write the canonical report to this file")

    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file")
        common(sp)

    sp = sub.add_parser("family", help="instantiate a named family and run a command on it")
    sp.add_argument("name", choices=FAMILIES)
    for key in ("n", "m", "k", "r", "r1", "r2"):
        sp.add_argument(f"--{key}", type=int)
    for key in ("shape", "preset", "points", "facets", "t"):
        sp.add_argument(f"--{key}")
    sp.add_argument("--run", choices=COMMANDS, default="lattice")
    common(sp)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        order = MonomialOrder.parse(args.order)
        if order.kind == "elim":
            raise DocumentError("elimination orders are internal; use grevlex or lex")
        if args.command == "family":
            doc = _family_doc(args)
            command = args.run
        else:
            doc = load(args.file)
            command = args.command
        report = run(command, doc, Options(order, args.max_degree, args.time_limit))
    except (DocumentError, OSError, ValueError) as exc:
        print(f"plgen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    sys.stdout.write(to_json(report) if args.emit == "json" else to_text(report))
    if args.write_golden:
        Path(args.write_golden).write_text(canonical(report))
    if not report["complete"]:
        return EXIT_TIMEOUT
    if args.golden:
        try:
            g = golden_diff(report, args.golden)
        except GoldenMissing as exc:
            print(f"plgen: {exc}", file=sys.stderr)
            return EXIT_INPUT
        if not g.ok:
            print(f"plgen: golden mismatch: {g.message}", file=sys.stderr)
            return EXIT_GOLDEN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
