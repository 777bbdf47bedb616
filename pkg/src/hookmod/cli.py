"""Command-line interface: ``hookmod <command> [options]``.

Every command builds a JSON-ready payload with deterministic ordering, then
renders it as JSON, CSV or plain text. Exit codes: 0 ok, 2 scale guard,
3 verification failure, 4 parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path
from typing import Callable, Sequence

from hookmod import __version__
from hookmod.errors import HookModError, ParseError, ScaleExceeded, VerificationError

EXIT_OK = 0
EXIT_GUARD = 2
EXIT_VERIFY = 3
EXIT_PARSE = 4

GOLDEN_VERSION = "v1"

# Largest n accepted by each command (checked before any work starts).
GUARDS = {
    "kostka": 10,
    "hilbert": 6,
    "basis-check": 5,
    "straighten": 8,
    "decompose": 8,
    "verify-axioms": 5,
    "action": 8,
}
HILBERT_GUARDS = {"derivatives": 6, "descent": 8, "fillings": 7, "stembridge": 10, "all": 6}

MONOMIAL_HELP = (
    "monomial as whitespace- or '*'-separated tokens x<i>^<e> / y<i>^<e> "
    "(exponent defaults to 1), e.g. 'x1^2 y2^4 x3^2 y5 x6^3'"
)
LAMBDA_HELP = (
    "(n,k)-bipartition as 'MU;NU' with comma-separated parts including the "
    "trailing 0, e.g. '1,0;1,1,0' for n=4, k=2"
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- helpers


def _qt_json(poly) -> dict:
    return {"text": str(poly), "terms": [list(t) for t in poly.sorted_terms()]}


def _shape_key(shape: Sequence[int]) -> str:
    return ",".join(str(p) for p in shape)


def parse_lambda(text: str, n: int, k: int):
    """Parse ``'MU;NU'`` into an :class:`NKBipartition`."""
    from hookmod.combinatorics import NKBipartition

    halves = text.split(";")
    if len(halves) != 2:
        raise ParseError(f"expected 'MU;NU', got {text!r}")
    try:
        mu, nu = (tuple(int(v) for v in h.split(",") if v.strip()) for h in halves)
    except ValueError as exc:
        raise ParseError(f"bad bipartition {text!r}") from exc
    try:
        return NKBipartition(n, k, mu, nu)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _require_nk(args: argparse.Namespace) -> None:
    if args.n is None or args.k is None:
        raise ParseError("--n and --k are required")
    if not 1 <= args.k <= args.n:
        raise ParseError(f"need 1 <= k <= n, got n={args.n}, k={args.k}")
    limit = GUARDS.get(args.command)
    if args.command == "hilbert":
        limit = HILBERT_GUARDS[args.method]
    if limit is not None and args.n > limit:
        raise ScaleExceeded(f"{args.command} is limited to n <= {limit}")


# ---------------------------------------------------------------- commands


def cmd_kostka(args: argparse.Namespace) -> tuple[dict, list[list]]:
    from hookmod.macdonald import htilde_hook
    from hookmod.combinatorics import num_syt

    table = htilde_hook(args.n, args.k)
    coeffs = {}
    entries = []
    rows = [["lambda", "coefficient", "at_q_t_1", "f_lambda"]]
    for lam, poly in table.items():
        f = num_syt(tuple(lam))
        if poly.at_one() != f:
            raise VerificationError(f"K({tuple(lam)}) at q=t=1 is {poly.at_one()}, expected {f}")
        coeffs[_shape_key(lam)] = str(poly)
        entries.append({"lambda": list(lam), "poly": str(poly), "coeffs": [list(t) for t in poly.sorted_terms()]})
        rows.append([_shape_key(lam), str(poly), poly.at_one(), f])
    return {"n": args.n, "k": args.k, "kostka": coeffs, "entries": entries}, rows


def hilbert_by_method(n: int, k: int, method: str):
    """Hilbert series in the Macdonald orientation (``q`` on the y-degree)."""
    from hookmod.bases import descent_monomial
    from hookmod.combinatorics import all_permutations
    from hookmod.harmonics import bigraded_hilbert, hook_harmonics, to_macdonald_orientation
    from hookmod.macdonald import hilbert_fillings, hilbert_stembridge
    from hookmod.qtpoly import QTPolynomial

    if method == "derivatives":
        return to_macdonald_orientation(bigraded_hilbert(hook_harmonics(n, k)))
    if method == "descent":
        raw = QTPolynomial.from_pairs(descent_monomial(pi, k).bidegree for pi in all_permutations(n))
        return to_macdonald_orientation(raw)
    if method == "fillings":
        return hilbert_fillings(n, k)
    if method == "stembridge":
        return hilbert_stembridge(n, k)
    raise ParseError(f"unknown method {method!r}")


HILBERT_METHODS = ("derivatives", "descent", "fillings", "stembridge")


def cmd_hilbert(args: argparse.Namespace) -> tuple[dict, list[list]]:
    methods = HILBERT_METHODS if args.method == "all" else (args.method,)
    results = {m: hilbert_by_method(args.n, args.k, m) for m in methods}
    payload = {
        "n": args.n,
        "k": args.k,
        "orientation": "q counts y-degree, t counts x-degree",
        "series": {m: _qt_json(p) for m, p in results.items()},
    }
    rows = [["method", "series"]] + [[m, str(p)] for m, p in results.items()]
    reference = results[methods[0]]
    diffs = {m: str(p - reference) for m, p in results.items() if p != reference}
    payload["agree"] = not diffs
    if diffs:
        payload["diff_vs_" + methods[0]] = diffs
        _emit(args, payload, rows)
        raise VerificationError(f"Hilbert series disagree: {sorted(diffs)}")
    return payload, rows


def cmd_basis_check(args: argparse.Namespace) -> tuple[dict, list[list]]:
    from hookmod.bases import named_basis
    from hookmod.harmonics import certify_basis, hook_harmonics

    try:
        candidates = named_basis(args.basis, args.n, args.k)
    except (ValueError, KeyError) as exc:
        raise ParseError(str(exc)) from exc
    report = certify_basis(candidates, hook_harmonics(args.n, args.k))
    payload = report.as_json(args.n, args.k, args.basis)
    rows = [["xdeg", "ydeg", "dim", "candidates", "rank", "ok"]]
    rows += [[b.xdeg, b.ydeg, b.dim, b.candidates, b.rank, b.ok] for b in report.blocks]
    if not report.ok:
        bad = report.first_failure()
        _emit(args, payload, rows)
        raise VerificationError(
            f"block ({bad.xdeg},{bad.ydeg}) has {bad.candidates} candidates of rank {bad.rank}, dimension {bad.dim}"
        )
    return payload, rows


def cmd_straighten(args: argparse.Namespace) -> tuple[dict, list[list]]:
    from hookmod.polyring import format_monomial, parse_monomial
    from hookmod.straighten import index_permutation, nu_of, reexpand, straighten

    if not args.monomial:
        raise ParseError("--monomial is required")
    m = parse_monomial(args.monomial, args.n)
    try:
        pi = index_permutation(m, args.k)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    terms = straighten(m, args.n, args.k)
    lead = terms[0]
    if (lead.coef, lead.pi, lead.nu) != (1, pi, nu_of(m, args.n, args.k)):
        raise VerificationError("leading term is not (1, pi(m), nu(m))")
    if reexpand(terms, args.n, args.k) != _single(m):
        raise VerificationError("re-expansion does not reproduce the input")
    payload = {
        "n": args.n,
        "k": args.k,
        "monomial": format_monomial(m),
        "lead": lead.as_json(),
        "terms": [t.as_json() for t in terms],
    }
    rows = [["coef", "pi", "nu"]] + [[t.coef, str(t.pi), _shape_key(t.nu)] for t in terms]
    return payload, rows


def _single(m):
    from hookmod.polyring import Polynomial

    return Polynomial.from_monomial(m)


def cmd_verify_axioms(args: argparse.Namespace) -> tuple[dict, list[list]]:
    from hookmod.macdonald import axiom_check

    report = axiom_check(args.n, args.k, args.numvars)
    payload = report.as_json()
    rows = [["axiom", "ok", "detail"]] + [[r.name, r.ok, r.detail] for r in report.results]
    if not report.ok:
        _emit(args, payload, rows)
        failed = [r.name for r in report.results if not r.ok]
        raise VerificationError(f"axioms failed: {failed}")
    return payload, rows


def _lambda_entry(lam) -> dict:
    from hookmod.combinatorics import a_lambda
    from hookmod.represent import action_matrices, character_of, decompose, r_lambda_basis, syt_descent_counts

    mats = action_matrices(lam)
    mult = decompose(character_of(mats, lam))
    descent_set = a_lambda(lam)
    if mult != syt_descent_counts(lam.n, descent_set):
        raise VerificationError(f"multiplicities of {lam.as_json()} differ from SYT descent counts")
    return {
        "lambda": lam.as_json(),
        "A_lambda": sorted(descent_set),
        "dim": len(r_lambda_basis(lam)),
        "weights": list(lam.weights()),
        "multiplicities": {_shape_key(s): c for s, c in sorted(mult.items(), reverse=True)},
    }


def cmd_decompose(args: argparse.Namespace) -> tuple[dict, list[list]]:
    from math import factorial

    from hookmod.combinatorics import nk_bipartitions

    entries = [_lambda_entry(lam) for lam in nk_bipartitions(args.n, args.k)]
    total = sum(e["dim"] for e in entries)
    if total != factorial(args.n):
        raise VerificationError(f"descent classes have total dimension {total}")
    payload = {"n": args.n, "k": args.k, "orientation": "weights are (t1, t2)", "bipartitions": entries}
    rows = [["mu", "nu", "A_lambda", "dim", "t1", "t2", "multiplicities"]]
    for e in entries:
        rows.append([
            _shape_key(e["lambda"]["mu"]),
            _shape_key(e["lambda"]["nu"]),
            _shape_key(e["A_lambda"]),
            e["dim"],
            *e["weights"],
            " ".join(f"{s}:{c}" for s, c in e["multiplicities"].items()),
        ])
    return payload, rows


def cmd_action(args: argparse.Namespace) -> tuple[dict, list[list]]:
    from hookmod.represent import action_matrices, coxeter_relations_hold

    if not args.lam:
        raise ParseError("--lambda is required")
    lam = parse_lambda(args.lam, args.n, args.k)
    mats = action_matrices(lam)
    if not coxeter_relations_hold(mats):
        raise VerificationError("action matrices violate the Coxeter relations")
    payload = _lambda_entry(lam)
    payload["basis"] = [str(p) for p in mats[0].basis] if mats else ["1"]
    payload["matrices"] = [{"j": a.j, "matrix": [list(r) for r in a.matrix]} for a in mats]
    rows = [["j", "row", "entries"]]
    for a in mats:
        for i, r in enumerate(a.matrix):
            rows.append([a.j, str(a.basis[i]), " ".join(str(v) for v in r)])
    return payload, rows


# ---------------------------------------------------------------- selftest and golden files


def golden_cases() -> list[tuple[str, list[str]]]:
    """``(file name, argv)`` for every golden file."""
    cases = []
    for n in range(1, 5):
        for k in range(1, n + 1):
            cases.append((f"kostka_n{n}_k{k}.json", ["kostka", "--n", str(n), "--k", str(k)]))
            cases.append((f"hilbert_n{n}_k{k}.json", ["hilbert", "--n", str(n), "--k", str(k), "--method", "all"]))
    cases.append(("decompose_n4_k3.json", ["decompose", "--n", "4", "--k", "3"]))
    cases.append(("basis_check_n4_k3_descent.json", ["basis-check", "--n", "4", "--k", "3", "--basis", "descent"]))
    cases.append((
        "straighten_n7_k5.json",
        ["straighten", "--n", "7", "--k", "5", "--monomial", "x1^2 y2^4 x3^2 y5 x6^3"],
    ))
    cases.append(("action_n4_k3_mu110_nu10.json", ["action", "--n", "4", "--k", "3", "--lambda", "1,1,0;1,0"]))
    return cases


def run_to_string(argv: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    code = main(argv, stdout=out, stderr=io.StringIO())
    return code, out.getvalue()


def write_golden(directory: Path) -> list[str]:
    from hookmod.harmonics import Q_VARIABLE

    directory.mkdir(parents=True, exist_ok=True)
    files = []
    for name, argv in golden_cases():
        code, text = run_to_string(argv)
        if code != EXIT_OK:
            raise VerificationError(f"golden command {argv} exited with {code}")
        (directory / name).write_text(text)
        files.append({"file": name, "argv": argv})
    manifest = {
        "version": GOLDEN_VERSION,
        "package_version": __version__,
        "orientation": {"q_variable": Q_VARIABLE, "meaning": "q counts the y-degree in Macdonald orientation"},
        "files": files,
    }
    (directory / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return [f["file"] for f in files]


def check_golden(directory: Path) -> list[str]:
    """Names of golden files whose regenerated output differs."""
    from hookmod.harmonics import Q_VARIABLE

    manifest = json.loads((directory / "manifest.json").read_text())
    if manifest["orientation"]["q_variable"] != Q_VARIABLE:
        raise VerificationError("golden files were written with a different orientation constant")
    bad = []
    for entry in manifest["files"]:
        code, text = run_to_string(entry["argv"])
        if code != EXIT_OK or text != (directory / entry["file"]).read_text():
            bad.append(entry["file"])
    return bad


def _selftest_checks(rng: random.Random) -> list[tuple[str, Callable[[], bool]]]:
    from hookmod.harmonics import certify_basis, hook_harmonics
    from hookmod.bases import named_basis
    from hookmod.combinatorics import nk_bipartitions
    from hookmod.polyring import Monomial, Polynomial
    from hookmod.represent import action_matrices, coxeter_relations_hold
    from hookmod.straighten import phi_k, psi_k, reexpand, straighten

    def hilbert_agree() -> bool:
        return all(
            len({str(hilbert_by_method(n, k, m)) for m in HILBERT_METHODS}) == 1
            for n in range(1, 5)
            for k in range(1, n + 1)
        )

    def bases_certify() -> bool:
        return all(
            certify_basis(named_basis(b, 4, k), hook_harmonics(4, k)).ok
            for b in ("descent", "artin", "haglund", "schubert")
            for k in range(1, 5)
        )

    def random_straighten() -> bool:
        for _ in range(20):
            n = rng.randint(2, 4)
            k = rng.randint(1, n)
            xs = rng.sample(range(n), rng.randint(0, k - 1))
            rest = [i for i in range(n) if i not in xs]
            ys = rng.sample(rest, rng.randint(0, min(n - k, len(rest))))
            exps = [0] * (2 * n)
            for i in xs:
                exps[i] = rng.randint(1, 3)
            for i in ys:
                exps[n + i] = rng.randint(1, 3)
            m = Monomial(exps)
            if reexpand(straighten(m, n, k), n, k) != Polynomial.from_monomial(m):
                return False
            if phi_k(psi_k(m, n, k), n, k) != m:
                return False
        return True

    def coxeter() -> bool:
        return all(
            coxeter_relations_hold(action_matrices(lam))
            for k in range(1, 5)
            for lam in nk_bipartitions(4, k)
        )

    return [
        ("hilbert methods agree, n <= 4", hilbert_agree),
        ("descent/artin/haglund/schubert bases certify, n = 4", bases_certify),
        ("random straightenings re-expand, n <= 4", random_straighten),
        ("Coxeter relations, n = 4", coxeter),
    ]


def cmd_selftest(args: argparse.Namespace) -> tuple[dict, list[list]]:
    if args.regen_golden:
        written = write_golden(Path(args.golden_dir))
        payload = {"golden_dir": str(args.golden_dir), "written": written}
        return payload, [["file"]] + [[w] for w in written]
    rng = random.Random(args.seed)
    results = {name: bool(check()) for name, check in _selftest_checks(rng)}
    if args.golden_dir:
        stale = check_golden(Path(args.golden_dir))
        results["golden files reproduce"] = not stale
    payload = {"seed": args.seed, "checks": results, "ok": all(results.values())}
    rows = [["check", "ok"]] + [[k, v] for k, v in results.items()]
    if not payload["ok"]:
        _emit(args, payload, rows)
        raise VerificationError(f"selftest failed: {[k for k, v in results.items() if not v]}")
    return payload, rows


COMMANDS: dict[str, Callable[[argparse.Namespace], tuple[dict, list[list]]]] = {
    "kostka": cmd_kostka,
    "hilbert": cmd_hilbert,
    "basis-check": cmd_basis_check,
    "straighten": cmd_straighten,
    "decompose": cmd_decompose,
    "verify-axioms": cmd_verify_axioms,
    "action": cmd_action,
    "selftest": cmd_selftest,
}


# ---------------------------------------------------------------- rendering


def render(payload: dict, rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _emit(args: argparse.Namespace, payload: dict, rows: list[list]) -> None:
    args._stdout.write(render(payload, rows, args.format))


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hookmod",
        description="Exact computations for the Garsia-Haiman modules of hook shapes (1^(k-1), n-k+1).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of variable pairs")
    common.add_argument("--k", type=int, help="hook parameter, 1 <= k <= n")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("kostka", parents=[common], help="q,t-Kostka coefficients of the hook")
    p = sub.add_parser("hilbert", parents=[common], help="bigraded Hilbert series")
    p.add_argument("--method", choices=HILBERT_METHODS + ("all",), default="all")
    p = sub.add_parser("basis-check", parents=[common], help="certify a candidate basis")
    p.add_argument(
        "--basis",
        default="descent",
        help="descent, artin, haglund, schubert or kicking:<x>,<y> with x,y in {descent,artin,schubert}",
    )
    p = sub.add_parser("straighten", parents=[common], help="straighten a monomial", description=MONOMIAL_HELP)
    p.add_argument("--monomial", help=MONOMIAL_HELP)
    p = sub.add_parser("verify-axioms", parents=[common], help="check the three characterizing axioms")
    p.add_argument("--numvars", type=int, default=None, help="alphabet size (default n)")
    sub.add_parser("decompose", parents=[common], help="descent representations and multiplicities")
    p = sub.add_parser("action", parents=[common], help="generator matrices on one descent representation")
    p.add_argument("--lambda", dest="lam", help=LAMBDA_HELP)
    p = sub.add_parser("selftest", parents=[common], help="quick internal cross-checks")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized checks")
    p.add_argument("--golden-dir", default=None, help="compare against (or regenerate) golden files here")
    p.add_argument("--regen-golden", action="store_true", help="rewrite the golden files in --golden-dir")
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._stdout = stdout
    try:
        if args.command == "selftest":
            if args.regen_golden and not args.golden_dir:
                raise ParseError("--regen-golden needs --golden-dir")
        else:
            _require_nk(args)
        payload, rows = COMMANDS[args.command](args)
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ScaleExceeded as exc:
        stderr.write(f"scale guard: {exc}\n")
        return EXIT_GUARD
    except VerificationError as exc:
        stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except HookModError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY
    except ValueError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    stdout.write(render(payload, rows, args.format))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
