"""``herzogfp`` command line.

Every subcommand writes newline-delimited JSON records (one per result) or,
with ``--format table``, a plain-text rendering of the same records.  Exit
status: 0 on success, 1 on error, 2 when ``--strict`` is given and the
mathematical answer is negative (not F-pure, no certificate, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Iterable, Optional

from .. import __version__
from ..core.fields import GF, RationalField
from ..elliptic import DEFAULT_P_MAX, analyze_cubic, crosscheck_fedder, supersingular_scan
from ..errors import AlgebraError, ParseError
from ..frobenius import COMPAT_CAP, fedder_general, fedder_hypersurface, is_uniformly_compatible, trace
from ..groebner import DEFAULT_BUDGET, Ideal, buchberger, initial_ideal
from ..herzog import (
    SearchStrategy,
    certificate_payload,
    herzog_check,
    herzog_search,
    prime_scan,
    question12_report,
    reduce_ideal_mod_p,
)
from ..replay import run_all
from .parsing import (
    InputDocument,
    field_name,
    parse_polynomial,
    read_input_document,
    read_order,
    read_substitution,
)

SCHEMA_VERSION = 1


class Output:
    """Single writer for report records; optionally mirrors them to a ``.jsonl`` log."""

    def __init__(self, fmt: str, stream, log: Optional[Path]):
        self.fmt = fmt
        self.stream = stream
        self.log = log
        self.rows: list[dict] = []

    def emit(self, command: str, digest: str, seed: int, result: dict, elapsed_ms: float) -> None:
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "input_digest": digest,
            "seed": seed,
            "result": result,
            "elapsed_ms": round(elapsed_ms, 3),
        }
        line = json.dumps(record, sort_keys=True)
        if self.log is not None:
            with self.log.open("a", encoding="utf-8", newline="\n") as fh:
                fh.write(line + "\n")
        if self.fmt == "records":
            self.stream.write(line + "\n")
        else:
            self.rows.append(result)

    def close(self) -> None:
        if self.fmt == "table" and self.rows:
            self.stream.write(render_table(self.rows))


def render_table(rows: list[dict]) -> str:
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)

    def cell(v) -> str:
        if isinstance(v, (list, dict)):
            return json.dumps(v)
        return "" if v is None else str(v)

    body = [[cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(b[i]) for b in body)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.ljust(w) for v, w in zip(b, widths)) for b in body)
    return "\n".join(lines) + "\n"


def load_log(path: Optional[Path], command: str, digest: str) -> list[dict]:
    if path is None or not path.exists():
        return []
    out = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec.get("command") == command and rec.get("input_digest") == digest:
            out.append(rec)
    return out


# ---- shared argument handling -------------------------------------------


def _doc(args) -> InputDocument:
    if not args.ideal:
        raise ParseError("this command needs --ideal FILE")
    return read_input_document(args.ideal)


def _order(args, doc: InputDocument):
    if getattr(args, "order", None):
        return read_order(args.order, doc.variables)
    if "default" in doc.orders:
        return doc.orders["default"]
    return None


def _over_prime(doc: InputDocument, p: Optional[int], order, budget: int) -> Ideal:
    I = doc.ideal()
    if isinstance(doc.field, RationalField):
        if p is None:
            raise ParseError("--prime is required for an ideal over QQ")
        red = reduce_ideal_mod_p(I, p, order, budget)
        if not red.good:
            raise AlgebraError(f"bad prime {p}: {'; '.join(red.reasons)}")
        return red.ideal
    if p is not None and p != doc.field.p:
        raise ParseError(f"--prime {p} does not match the file's field {field_name(doc.field)}")
    return I


def _strategy(args, doc: InputDocument) -> SearchStrategy:
    order = _order(args, doc)
    subs = tuple(read_substitution(s, doc.variables, doc.field) for s in (args.sub or []))
    return SearchStrategy(
        orders=(order,) if order is not None else (),
        random_weights=args.random_weights,
        substitutions=subs,
        random_substitutions=args.random_subs,
        seed=args.seed,
    )


# ---- subcommands ------------------------------------------------------------


def cmd_gb(args, out: Output) -> int:
    doc = _doc(args)
    order = _order(args, doc) or doc.ideal().default_order()
    start = time.perf_counter()
    gb = buchberger(doc.ideal(), order, args.budget)
    result = {
        "order": order.describe(doc.variables),
        "basis": [g.to_str(doc.variables, order) for g in gb.elements],
    }
    out.emit("gb", doc.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
    return 0


def cmd_initial(args, out: Output) -> int:
    doc = _doc(args)
    order = _order(args, doc) or doc.ideal().default_order()
    start = time.perf_counter()
    ini = initial_ideal(doc.ideal(), order, args.budget)
    result = {"order": order.describe(doc.variables), "initial": ini.to_strs(doc.variables), "squarefree": ini.squarefree}
    out.emit("initial", doc.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
    return 0 if ini.squarefree or not args.strict else 2


def cmd_herzog_check(args, out: Output) -> int:
    doc = _doc(args)
    order = _order(args, doc) or doc.ideal().default_order()
    sub = read_substitution(args.sub[0], doc.variables, doc.field) if args.sub else None
    start = time.perf_counter()
    cert = herzog_check(doc.ideal(), order, sub, args.budget)
    result = {"certified": cert is not None, "certificate": certificate_payload(cert, doc.variables) if cert else None}
    out.emit("herzog-check", doc.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
    return 0 if cert or not args.strict else 2


def cmd_herzog_search(args, out: Output) -> int:
    doc = _doc(args)
    strategy = _strategy(args, doc)
    start = time.perf_counter()
    res = herzog_search(doc.ideal(), strategy, args.budget, doc.variables)
    result = {
        "certified": res.found,
        "certificate": certificate_payload(res.certificate, doc.variables) if res.found else None,
        "attempts": len(res.transcript),
        "transcript": res.transcript if args.transcript else None,
    }
    out.emit("herzog-search", doc.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
    return 0 if res.found or not args.strict else 2


def cmd_fedder(args, out: Output) -> int:
    doc = _doc(args)
    order = _order(args, doc)
    start = time.perf_counter()
    I = _over_prime(doc, args.prime, order, args.budget)
    if len(I.generators) == 1 and not args.general:
        verdict = fedder_hypersurface(I.generators[0])
    else:
        verdict = fedder_general(I, order=order, budget=args.budget)
    result = {
        "p": verdict.p,
        "mode": verdict.mode,
        "f_pure": verdict.f_pure,
        "witness": verdict.witness.to_str(doc.variables) if verdict.witness is not None else None,
    }
    out.emit("fedder", doc.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
    return 0 if verdict.f_pure or not args.strict else 2


def cmd_prime_scan(args, out: Output) -> int:
    doc = _doc(args)
    order = _order(args, doc)
    digest = doc.digest()
    done = {rec["result"]["p"] for rec in load_log(args.out, "prime-scan", digest)}
    records = prime_scan(doc.ideal(), args.lo, args.hi, order, args.budget, args.jobs, doc.variables, skip=done)
    negative = False
    for rec in records:
        out.emit("prime-scan", digest, args.seed, rec.payload(), rec.elapsed_ms)
        negative |= rec.status != "f_pure"
    return 2 if negative and args.strict else 0


def cmd_q12(args, out: Output) -> int:
    doc = _doc(args)
    order = _order(args, doc)
    start = time.perf_counter()
    report = question12_report(doc.ideal(), args.lo, args.hi, _strategy(args, doc), order, args.budget,
                               args.jobs, doc.variables)
    out.emit("q12", doc.digest(), args.seed, report.payload(doc.variables), (time.perf_counter() - start) * 1000)
    return 2 if args.strict and report.classification != "both_hold" else 0


def _cubic(doc: InputDocument):
    if len(doc.generators) != 1:
        raise ParseError("expected a single cubic form")
    return analyze_cubic(doc.generators[0])


def cmd_supersingular(args, out: Output) -> int:
    doc = _doc(args)
    cubic = _cubic(doc)
    if not cubic.nonsingular:
        raise AlgebraError("the cubic is singular")
    for rec in supersingular_scan(cubic, args.hi, args.lo):
        payload = rec.payload()
        if cubic.note:
            payload["note"] = cubic.note
        out.emit("supersingular", doc.digest(), args.seed, payload, 0.0)
    return 0


def cmd_crosscheck(args, out: Output) -> int:
    doc = _doc(args)
    cubic = _cubic(doc)
    if not cubic.nonsingular:
        raise AlgebraError("the cubic is singular")
    bad = False
    for row in crosscheck_fedder(cubic, args.hi, args.lo):
        out.emit("crosscheck", doc.digest(), args.seed, row.payload(), 0.0)
        bad |= not row.consistent
    return 2 if bad and args.strict else 0


def cmd_trace(args, out: Output) -> int:
    names = [v.strip() for v in args.vars.replace(",", " ").split()]
    fld = GF(args.prime)
    start = time.perf_counter()
    g = parse_polynomial(args.poly, names, fld)
    image = trace(args.e, g)
    digest_doc = InputDocument(names, fld, [g])
    result = {"e": args.e, "input": g.to_str(names), "image": image.to_str(names)}
    out.emit("trace", digest_doc.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
    return 0


def cmd_compat(args, out: Output) -> int:
    doc = _doc(args)
    if not args.target:
        raise ParseError("compat needs --target FILE")
    target = read_input_document(args.target)
    if target.variables != doc.variables or target.field != doc.field:
        raise ParseError("--target must use the same variables and field as --ideal")
    order = _order(args, doc)
    negative = False
    for e in range(args.e, (args.e_max or args.e) + 1):
        start = time.perf_counter()
        ok, witness = is_uniformly_compatible(doc.ideal(), target.ideal(), None, e, args.cap, order, args.budget)
        names = doc.variables
        result = {
            "e": e,
            "compatible": ok,
            "witness": None if witness is None else {
                "u": witness.u.to_str(names),
                "alpha": list(witness.alpha),
                "carrier": witness.carrier.to_str(names),
                "image": witness.image.to_str(names),
            },
        }
        out.emit("compat", doc.digest() + ":" + target.digest(), args.seed, result, (time.perf_counter() - start) * 1000)
        negative |= not ok
    return 2 if negative and args.strict else 0


def cmd_verify_paper(args, out: Output) -> int:
    results = run_all()
    for r in results:
        out.emit("verify-paper", "builtin", args.seed, r.payload(), r.elapsed_s * 1000)
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "gb": (cmd_gb, "reduced Groebner basis"),
    "initial": (cmd_initial, "initial ideal and squarefreeness"),
    "herzog-check": (cmd_herzog_check, "squarefree certificate for one order (and substitution)"),
    "herzog-search": (cmd_herzog_search, "search orders and substitutions for a certificate"),
    "fedder": (cmd_fedder, "Fedder's F-purity criterion at one prime"),
    "prime-scan": (cmd_prime_scan, "Fedder verdicts over a prime range"),
    "q12": (cmd_q12, "prime scan against certificate search"),
    "supersingular": (cmd_supersingular, "point counts and supersingular primes of a plane cubic"),
    "crosscheck": (cmd_crosscheck, "Fedder vs supersingularity on a plane cubic"),
    "trace": (cmd_trace, "apply the trace map Tr^e to a polynomial"),
    "compat": (cmd_compat, "uniform compatibility of an ideal"),
    "verify-paper": (cmd_verify_paper, "replay every worked computation"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["records", "table"], default="records")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="pair-reduction budget")
    common.add_argument("--strict", action="store_true", help="exit 2 on a negative answer")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", type=Path, help="append records to this .jsonl log (scans resume from it)")

    parser = argparse.ArgumentParser(prog="herzogfp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if name not in ("trace", "verify-paper"):
            sp.add_argument("--ideal", help=".id file")
            sp.add_argument("--order", help="order spec or .ord file")
        if name in ("herzog-check", "herzog-search", "q12"):
            sp.add_argument("--sub", action="append", help=".sub substitution file (repeatable)")
        if name in ("herzog-search", "q12"):
            sp.add_argument("--random-subs", type=int, default=0)
            sp.add_argument("--random-weights", type=int, default=0)
            sp.add_argument("--transcript", action="store_true")
        if name in ("fedder", "trace"):
            sp.add_argument("--prime", type=int, required=(name == "trace"))
        if name == "fedder":
            sp.add_argument("--general", action="store_true", help="use the colon criterion even for one generator")
        if name in ("prime-scan", "q12"):
            sp.add_argument("--from", dest="lo", type=int, required=True)
            sp.add_argument("--to", dest="hi", type=int, required=True)
        if name in ("supersingular", "crosscheck"):
            sp.add_argument("--from", dest="lo", type=int, default=2)
            sp.add_argument("--to", dest="hi", type=int, default=DEFAULT_P_MAX)
        if name == "trace":
            sp.add_argument("--poly", required=True)
            sp.add_argument("--vars", required=True, help="comma-separated variable names")
            sp.add_argument("--e", type=int, default=1)
        if name == "compat":
            sp.add_argument("--target", help=".id file of the ideal to test")
            sp.add_argument("--e", type=int, default=1)
            sp.add_argument("--e-max", type=int)
            sp.add_argument("--cap", type=int, default=COMPAT_CAP)
    return parser


def run(argv: Optional[Iterable[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    handler = COMMANDS[args.command][0]
    out = Output(args.format, stdout, args.out)
    try:
        status = handler(args, out)
    except (AlgebraError, OSError, ValueError) as exc:
        stderr.write(f"herzogfp {args.command}: error: {exc}\n")
        return 1
    out.close()
    return status


def main() -> None:
    sys.exit(run())
