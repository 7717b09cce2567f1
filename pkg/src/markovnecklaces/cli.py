"""Command-line surface: every pipeline, machine-readable output.

Exit codes are deliberately distinct so harnesses can alarm precisely:

* 0 - success
* 1 - usage error (bad arguments, malformed necklace text, capacity limits)
* 2 - mathematical inconsistency (evaluator disagreement, failed exact
      identity, or a mismatch between the two proven-equal pipelines)
* 3 - conjecture counterexample found (a value or Markov-number collision)

Unbounded integers are serialized as decimal strings in JSON so 64-bit
consumers cannot truncate them; lengths are the only floats.
"""

from __future__ import annotations

import argparse
import csv
import functools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import markov, necklace, spectrum
from .phi import DEFAULT_SUBSET_CAP, InconsistencyError, phi_literal, phi_transfer
from .slword import theta_length, trace_of_necklace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2
EXIT_COUNTEREXAMPLE = 3


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Parsed invocation: subcommand, bounds, evaluator, workers, format."""

    command: str
    action: str | None = None
    necklace_text: str | None = None
    params: tuple[int, int, int] | None = None
    bound: int | None = None
    phi_bound: int | None = None
    evaluator: str = "all"
    workers: int = 1
    fmt: str = "json"
    verify: bool = False
    inverse: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", dest="fmt"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="markovnecklaces", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("phi", help="evaluate a necklace by all methods")
    p.add_argument("necklace_text", metavar="NECKLACE", help='e.g. "[1,2]"')
    p.add_argument(
        "--evaluator",
        choices=("literal", "transfer", "oracle", "all"),
        default="all",
    )
    _add_format(p)

    p = sub.add_parser("necklace", help="necklace construction and predicates")
    act = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = act.add_parser("check", help="canonical form and predicates")
    q.add_argument("necklace_text", metavar="NECKLACE")
    _add_format(q)
    q = act.add_parser("from-params", help="build from counts x y m")
    q.add_argument("x", type=_positive_int)
    q.add_argument("y", type=int)
    q.add_argument("m", type=int)
    _add_format(q)
    q = act.add_parser("to-params", help="recover counts x y m")
    q.add_argument("necklace_text", metavar="NECKLACE")
    _add_format(q)
    q = act.add_parser("theta", help="run-length reduction onto {0,1} entries")
    q.add_argument("necklace_text", metavar="NECKLACE")
    q.add_argument("--inverse", action="store_true")
    _add_format(q)

    p = sub.add_parser("markov", help="Markov triples via the Vieta tree")
    act = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = act.add_parser("numbers", help="Markov numbers up to a bound")
    q.add_argument("--bound", type=_positive_int, required=True)
    _add_format(q)
    q = act.add_parser("uniqueness", help="scan for equal largest coordinates")
    q.add_argument("--bound", type=_positive_int, required=True)
    _add_format(q)

    p = sub.add_parser("spectrum", help="simple length spectrum entries")
    p.add_argument("--phi-bound", type=_positive_int, required=True)
    p.add_argument("--verify", action="store_true")
    _add_format(p)

    p = sub.add_parser("verify", help="bounded conjecture verification")
    act = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, help_text in (
        ("injectivity", "scan for equal-value necklaces"),
        ("cross-check", "compare necklace values against the Vieta tree"),
    ):
        q = act.add_parser(name, help=help_text)
        q.add_argument("--phi-bound", type=_positive_int, required=True)
        q.add_argument("--workers", type=_positive_int, default=1)
        q.add_argument("--verify", action="store_true")
        _add_format(q)

    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        action=getattr(ns, "action", None),
        necklace_text=getattr(ns, "necklace_text", None),
        params=(ns.x, ns.y, ns.m) if hasattr(ns, "x") else None,
        bound=getattr(ns, "bound", None),
        phi_bound=getattr(ns, "phi_bound", None),
        evaluator=getattr(ns, "evaluator", "all"),
        workers=getattr(ns, "workers", 1),
        fmt=getattr(ns, "fmt", "json"),
        verify=getattr(ns, "verify", False),
        inverse=getattr(ns, "inverse", False),
    )


def _emit(payload: object, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _fmt_length(length: float) -> str:
    return f"{length:.9g}"


def _cmd_phi(cfg: RunConfig) -> int:
    n = necklace.parse_necklace(cfg.necklace_text or "")
    values: dict[str, int] = {}
    if cfg.evaluator in ("literal", "all"):
        if cfg.evaluator == "literal" or n.k <= DEFAULT_SUBSET_CAP:
            values["literal"] = phi_literal(n).value
    if cfg.evaluator in ("transfer", "all"):
        values["transfer"] = phi_transfer(n).value
    if cfg.evaluator in ("oracle", "all"):
        necklace.require_member(n)
        trace = trace_of_necklace(n)
        if trace % 3:
            raise InconsistencyError(f"trace {trace} of {n} is not divisible by 3")
        values["oracle"] = trace // 3
    agree = len(set(values.values())) == 1
    value = next(iter(values.values()))
    trace = 3 * value
    length = theta_length(trace)
    payload = {
        "necklace": str(n),
        "phi": str(value),
        "trace": str(trace),
        "length": length,
        "evaluators": {name: str(v) for name, v in values.items()},
        "agree": agree,
    }
    lines = [
        f"necklace      {n}",
        f"phi           {value}",
        f"trace         {trace}",
        f"length        {_fmt_length(length)}",
        f"evaluators    {' '.join(f'{k}={v}' for k, v in values.items())}",
        f"agree         {str(agree).lower()}",
    ]
    if not agree:
        _emit(payload, cfg.fmt, lines)
        print(f"evaluator disagreement: {values}", file=sys.stderr)
        return EXIT_INCONSISTENT
    _emit(payload, cfg.fmt, lines)
    return EXIT_OK


def _cmd_necklace(cfg: RunConfig) -> int:
    if cfg.action == "from-params":
        x, y, m = cfg.params  # type: ignore[misc]
        n = necklace.from_params(necklace.NecklaceParams(x, y, m))
        _emit(str(n), cfg.fmt, [str(n)])
        return EXIT_OK

    n = necklace.parse_necklace(cfg.necklace_text or "")
    if cfg.action == "check":
        payload = {
            "necklace": str(n),
            "k": str(n.k),
            "member": necklace.is_member(n),
            "small_variation": necklace.is_small_variation(n),
            "primitive": necklace.is_primitive(n),
        }
        lines = [f"{key}  {value}" for key, value in payload.items()]
        _emit(payload, cfg.fmt, lines)
        return EXIT_OK
    if cfg.action == "to-params":
        params = necklace.to_params(n)
        payload = {"x": str(params.x), "y": str(params.y), "m": str(params.m)}
        _emit(payload, cfg.fmt, [f"x={params.x} y={params.y} m={params.m}"])
        return EXIT_OK
    if cfg.action == "theta":
        image = necklace.theta_inverse(n) if cfg.inverse else necklace.theta(n)
        _emit(str(image), cfg.fmt, [str(image)])
        return EXIT_OK
    raise AssertionError(cfg.action)


def _cmd_markov(cfg: RunConfig) -> int:
    bound = cfg.bound or 1
    if cfg.action == "numbers":
        numbers = markov.markov_numbers(bound)
        _emit(
            [str(v) for v in numbers],
            cfg.fmt,
            ["[" + ",".join(str(v) for v in numbers) + "]"],
        )
        return EXIT_OK
    if cfg.action == "uniqueness":
        pairs = markov.uniqueness_scan(bound)
        payload = {
            "bound": str(bound),
            "collisions": [
                {
                    "markov_number": str(a.z),
                    "triples": [[str(a.x), str(a.y), str(a.z)], [str(b.x), str(b.y), str(b.z)]],
                }
                for a, b in pairs
            ],
        }
        lines = [f"bound {bound}", f"collisions {len(pairs)}"]
        lines += [f"  z={a.z}: {a} vs {b}" for a, b in pairs]
        _emit(payload, cfg.fmt, lines)
        return EXIT_COUNTEREXAMPLE if pairs else EXIT_OK
    raise AssertionError(cfg.action)


def _scan(phi_bound: int, workers: int, verify: bool) -> list[tuple[int, necklace.Necklace]]:
    """The CLI owns the worker pool; library scans stay single-threaded.

    The scan is partitioned into m stripes; merging in m order makes the
    result identical for every worker count.
    """
    results = spectrum.scan_singletons(phi_bound, verify=verify)
    m_values = spectrum.stripe_m_values(phi_bound)
    spectrum.check_stripe_heads(m_values, phi_bound)
    if workers > 1 and len(m_values) > 1:
        job = functools.partial(spectrum.scan_stripe, phi_bound=phi_bound, verify=verify)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            stripes = list(pool.map(job, m_values))
    else:
        stripes = [
            spectrum.scan_stripe(m, phi_bound, verify=verify) for m in m_values
        ]
    for stripe in stripes:
        results.extend(stripe)
    return results


def _spectrum_rows(entries: list[spectrum.SpectrumEntry]) -> list[dict[str, object]]:
    return [
        {
            "necklace": str(e.source),
            "k": str(e.source.k),
            "sum_n": str(sum(e.source.entries)),
            "phi": str(e.phi),
            "trace": str(e.trace),
            "length": e.length,
            "multiplicity": str(e.multiplicity),
        }
        for e in entries
    ]


def _cmd_spectrum(cfg: RunConfig) -> int:
    phi_bound = cfg.phi_bound or 1
    scanned = _scan(phi_bound, 1, cfg.verify)
    entries = spectrum.spectrum_entries(scanned)
    rows = _spectrum_rows(entries)
    if cfg.fmt == "json":
        print(json.dumps({"phi_bound": str(phi_bound), "entries": rows}))
    elif cfg.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(
            ["necklace", "k", "sum_n", "phi", "trace", "length", "multiplicity"]
        )
        for row in rows:
            writer.writerow(
                [
                    row["necklace"],
                    row["k"],
                    row["sum_n"],
                    row["phi"],
                    row["trace"],
                    _fmt_length(float(row["length"])),  # type: ignore[arg-type]
                    row["multiplicity"],
                ]
            )
    else:
        for row in rows:
            print(
                f"{row['necklace']}  phi={row['phi']}  trace={row['trace']}  "
                f"length={_fmt_length(float(row['length']))}  "  # type: ignore[arg-type]
                f"multiplicity={row['multiplicity']}"
            )
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    phi_bound = cfg.phi_bound or 1
    scanned = _scan(phi_bound, cfg.workers, cfg.verify)
    if cfg.action == "injectivity":
        collisions = spectrum.find_collisions(scanned)
        payload = {
            "phi_bound": str(phi_bound),
            "scanned": str(len(scanned)),
            "collisions": [
                {"phi": str(c.phi), "necklaces": [str(n) for n in c.necklaces]}
                for c in collisions
            ],
        }
        lines = [f"phi_bound {phi_bound}", f"scanned {len(scanned)}"]
        lines += [f"  phi={c.phi}: {', '.join(map(str, c.necklaces))}" for c in collisions]
        lines.append(f"collisions {len(collisions)}")
        _emit(payload, cfg.fmt, lines)
        return EXIT_COUNTEREXAMPLE if collisions else EXIT_OK
    if cfg.action == "cross-check":
        phi_values = sorted({value for value, _ in scanned})
        markov_values = markov.markov_numbers(phi_bound)
        only_phi = sorted(set(phi_values) - set(markov_values))
        only_markov = sorted(set(markov_values) - set(phi_values))
        payload = {
            "phi_bound": str(phi_bound),
            "phi_values": [str(v) for v in phi_values],
            "markov_values": [str(v) for v in markov_values],
            "only_phi": [str(v) for v in only_phi],
            "only_markov": [str(v) for v in only_markov],
            "match": not only_phi and not only_markov,
        }
        lines = [
            f"phi_bound {phi_bound}",
            f"phi side     {phi_values}",
            f"markov side  {markov_values}",
            f"only phi     {only_phi}",
            f"only markov  {only_markov}",
        ]
        _emit(payload, cfg.fmt, lines)
        if only_phi or only_markov:
            print("pipelines disagree: the proven identity failed", file=sys.stderr)
            return EXIT_INCONSISTENT
        return EXIT_OK
    raise AssertionError(cfg.action)


_HANDLERS = {
    "phi": _cmd_phi,
    "necklace": _cmd_necklace,
    "markov": _cmd_markov,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(ns)
    try:
        return _HANDLERS[cfg.command](cfg)
    except (InconsistencyError, spectrum.EnumerationIncomplete) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
