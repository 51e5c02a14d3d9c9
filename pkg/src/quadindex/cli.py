"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 quadrinomial outside the
theorem scope, 3 internal inconsistency (a closed-form verdict disagreeing with
the Dedekind computation, or a failed exactness check).
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, quadtheorem
from .arith import FactorBudget, factor, is_prime
from .dedekind import Verdict, index_divides, splitting_type
from .errors import InternalInconsistency, InvalidArgument
from .irreducible import Irreducibility, certify
from .quadtheorem import Monogenicity
from .report import (
    ClassifyResult,
    classify_csv_row,
    classify_text,
    classify_to_dict,
    csv_text,
    dedekind_text,
    dedekind_to_dict,
    dumps,
    exclusions_to_dict,
)
from .zpoly import Quadrinomial, check_scope, discriminant, expand, parse_poly

EXIT_USAGE = 1
EXIT_SCOPE = 2
EXIT_INCONSISTENT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        v = int(text)
        return range(v, v + 1)
    return range(int(lo), int(hi) + 1)


def _prime_list(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    for p in ps:
        if p < 2 or not is_prime(p):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
    return ps


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(args, default: str = "text") -> str:
    return "json" if getattr(args, "json", False) else (args.format or default)


def _budget(args) -> FactorBudget:
    return FactorBudget(rho_iterations=args.factor_budget) if args.factor_budget else FactorBudget()


# -- classify -----------------------------------------------------------------


def classify_one(q: Quadrinomial, seed: int = 0, budget: FactorBudget | None = None,
                 cross_check: bool = True) -> ClassifyResult:
    scope = check_scope(q)
    if not scope.applicable:
        return ClassifyResult(q, scope, None, None, seed)
    rep = quadtheorem.is_monogenic(q, budget, seed, cross_check=cross_check)
    irr = certify(expand(q), seed)
    return ClassifyResult(q, scope, rep, irr, seed)


def _render_classify(res: ClassifyResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(classify_to_dict(res), indent=2) + "\n"
    if fmt == "jsonl":
        return dumps(classify_to_dict(res)) + "\n"
    if fmt == "csv":
        return csv_text([classify_csv_row(res)])
    return classify_text(res)


def cmd_classify(args) -> int:
    q = Quadrinomial(args.n, args.a, args.b, args.c)
    res = classify_one(q, args.seed, _budget(args), not args.no_cross_check)
    _emit(args, _render_classify(res, _fmt(args)))
    if not res.scope.applicable:
        print(f"not applicable: {res.scope.failure_reason.value}", file=sys.stderr)
        return EXIT_SCOPE
    return 0


# -- exclusions ---------------------------------------------------------------


def cmd_exclusions(args) -> int:
    q = Quadrinomial(args.n, args.a, args.b, args.c)
    scope = check_scope(q)
    if not scope.applicable:
        print(f"not applicable: {scope.failure_reason.value}", file=sys.stderr)
        return EXIT_SCOPE
    if args.primes is not None:
        primes = args.primes
    else:
        primes = [p for p in range(2, args.bound + 1) if is_prime(p)]
    rows = [(p, quadtheorem.exclusion_condition(q, p)) for p in primes]
    fmt = _fmt(args)
    if fmt in ("json", "jsonl"):
        d = exclusions_to_dict(q, rows, args.seed)
        text = (json.dumps(d, indent=2) if fmt == "json" else dumps(d)) + "\n"
    elif fmt == "csv":
        text = csv_text([[str(p), str(c is not None).lower(), "" if c is None else c.value] for p, c in rows],
                        header=("p", "excluded", "condition"))
    else:
        lines = [f"f = {q}"]
        for p, cond in rows:
            lines.append(f"  {p}: excluded ({cond.value})" if cond else f"  {p}: not excluded")
        lines.append(f"seed: {args.seed}  version: {__version__}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0


# -- dedekind -----------------------------------------------------------------


def cmd_dedekind(args) -> int:
    f = parse_poly(args.poly)
    if not f.is_monic():
        raise InvalidArgument("polynomial must be monic")
    cert = index_divides(f, args.p, args.seed)
    split = splitting_type(f, args.p, args.seed) if cert.verdict is Verdict.DOES_NOT_DIVIDE else None
    fmt = _fmt(args)
    if fmt in ("json", "jsonl"):
        d = dedekind_to_dict(f, cert, split, args.seed)
        text = (json.dumps(d, indent=2) if fmt == "json" else dumps(d)) + "\n"
    else:
        text = dedekind_text(f, cert, split) + f"seed: {args.seed}  version: {__version__}\n"
    _emit(args, text)
    return 0


# -- scan ---------------------------------------------------------------------


def _scan_task(job):
    q, seed, rho, cross = job
    budget = FactorBudget(rho_iterations=rho) if rho else None
    return classify_one(q, seed, budget, cross)


_FILTERS = {
    "all": None,
    "monogenic": Monogenicity.MONOGENIC,
    "non-monogenic": Monogenicity.NOT_MONOGENIC,
    "unknown": Monogenicity.UNKNOWN,
}


def scan_lines(ns, as_, bs, cs, seed=0, jobs=1, flt="all", fmt="jsonl", rho=None, cross_check=True):
    """Yield output chunks for every scope-applicable tuple in lexicographic order."""
    tuples = [Quadrinomial(*t) for t in itertools.product(ns, as_, bs, cs) if t[0] >= 3]
    applicable = [q for q in tuples if check_scope(q).applicable]
    work = [(q, seed, rho, cross_check) for q in applicable]
    counts = {m: 0 for m in Monogenicity}
    emitted = 0
    if fmt == "csv":
        yield csv_text([])
    if jobs > 1 and len(work) > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_scan_task, work, chunksize=max(1, len(work) // (4 * jobs)))
    else:
        pool = None
        results = map(_scan_task, work)
    try:
        for res in results:
            counts[res.report.verdict] += 1
            want = _FILTERS[flt]
            if want is not None and res.report.verdict is not want:
                continue
            emitted += 1
            if fmt == "csv":
                yield csv_text([classify_csv_row(res)], header=None)
            elif fmt == "text":
                rep = res.report
                idx = "" if rep.index is None else f" index={rep.index}"
                yield f"{res.q.n} {res.q.a} {res.q.b} {res.q.c}: monogenic={rep.verdict.value}{idx} D={rep.D}\n"
            else:
                yield dumps(classify_to_dict(res)) + "\n"
    finally:
        if pool is not None:
            pool.shutdown()
    summary = {
        "tuples": str(len(tuples)),
        "applicable": str(len(applicable)),
        "monogenic": str(counts[Monogenicity.MONOGENIC]),
        "non_monogenic": str(counts[Monogenicity.NOT_MONOGENIC]),
        "unknown": str(counts[Monogenicity.UNKNOWN]),
        "emitted": str(emitted),
        "filter": flt,
        "seed": str(seed),
        "version": __version__,
    }
    if fmt == "jsonl":
        yield dumps({"summary": summary}) + "\n"
    elif fmt == "text":
        yield "summary: " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n"
    else:
        print("summary: " + dumps(summary), file=sys.stderr)


def cmd_scan(args) -> int:
    fmt = args.format or "jsonl"
    if fmt == "json":
        fmt = "jsonl"
    chunks = scan_lines(args.n_range, args.a_range, args.b_range, args.c_range, args.seed, args.jobs,
                        args.filter, fmt, args.factor_budget, not args.no_cross_check)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.writelines(chunks)
    else:
        for chunk in chunks:
            sys.stdout.write(chunk)
    return 0


# -- verify -------------------------------------------------------------------


def _unitary_divisors(m: int) -> list[int]:
    out = [1]
    for p, e in factor(m).factors:
        out += [d * p**e for d in out]
    return sorted(out)


def sample_quadrinomials(count: int, seed: int, max_n: int = 9, coef_bound: int = 10, a_max: int = 25):
    """Seeded irreducible, scope-applicable quadrinomials (certified by a mod-p witness or similar)."""
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count + 1000:
            raise InvalidArgument("could not draw enough irreducible quadrinomials with these bounds")
        n = rng.randint(5, max_n)
        a = rng.choice([d for d in _unitary_divisors(n * n) if d <= a_max])
        b = rng.choice([x for x in range(-coef_bound, coef_bound + 1) if x])
        c = rng.choice([x for x in range(-coef_bound, coef_bound + 1) if x])
        q = Quadrinomial(n, a, b, c)
        if not check_scope(q).applicable:
            continue
        if certify(expand(q), seed).status is not Irreducibility.CERTIFIED:
            continue
        out.append(q)
    return out


def verify(samples: int, seed: int, prime_bound: int = 50, max_n: int = 9, coef_bound: int = 10,
           budget: FactorBudget | None = None):
    """Compare closed-form and Dedekind verdicts; returns (pairs checked, mismatch lines)."""
    small = [p for p in range(2, prime_bound + 1) if is_prime(p)]
    pairs = 0
    bad = []
    for q in sample_quadrinomials(samples, seed, max_n, coef_bound):
        f = expand(q)
        D = discriminant(q)
        ps = sorted(set(small) | set(factor(D, budget).primes)) if D else small
        for p in ps:
            got = quadtheorem.classify_prime(q, p, seed).verdict
            want = index_divides(f, p, seed).verdict
            pairs += 1
            if got is not want:
                bad.append(f"MISMATCH n={q.n} a={q.a} b={q.b} c={q.c} p={p}: "
                           f"closed form {got.value}, Dedekind {want.value}")
    return pairs, bad


def cmd_verify(args) -> int:
    pairs, bad = verify(args.samples, args.seed, args.prime_bound, args.max_n, args.coef_bound, _budget(args))
    status = "fail" if bad else "pass"
    fmt = _fmt(args)
    if fmt in ("json", "jsonl"):
        d = {"samples": str(args.samples), "pairs": str(pairs), "mismatches": bad, "status": status,
             "seed": str(args.seed), "version": __version__}
        text = (json.dumps(d, indent=2) if fmt == "json" else dumps(d)) + "\n"
    else:
        text = "".join(line + "\n" for line in bad)
        text += (f"verify: {args.samples} quadrinomials, {pairs} (quadrinomial, prime) pairs, "
                 f"{len(bad)} mismatches: {status}\nseed: {args.seed}  version: {__version__}\n")
    _emit(args, text)
    return EXIT_INCONSISTENT if bad else 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomised factoring and sampling")
    common.add_argument("--format", choices=("text", "json", "jsonl", "csv"), default=None)
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--factor-budget", type=_positive, default=None,
                        help="Pollard-Brent iteration budget for factoring D")

    quad = argparse.ArgumentParser(add_help=False)
    for name in ("n", "a", "b", "c"):
        quad.add_argument(f"--{name}", type=int, required=True)

    parser = _Parser(prog="quadindex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common, quad],
                       help="classify every prime factor of D and decide monogenity")
    p.add_argument("--no-cross-check", action="store_true",
                   help="skip comparing each verdict with the Dedekind computation")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("exclusions", parents=[common, quad],
                       help="primes ruled out of D and the index without computing D")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--primes", type=_prime_list, help="comma-separated primes")
    g.add_argument("--bound", type=_positive, help="every prime up to this bound")
    p.set_defaults(func=cmd_exclusions)

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind criterion for any monic polynomial")
    p.add_argument("--poly", required=True, help="coefficients, leading first, e.g. 1,4,0,0,0,1,3")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("scan", parents=[common], help="classify every applicable tuple in a box")
    p.add_argument("--n-range", type=_range, required=True, help="LO:HI inclusive")
    p.add_argument("--a-range", type=_range, required=True)
    p.add_argument("--b-range", type=_range, required=True)
    p.add_argument("--c-range", type=_range, required=True)
    p.add_argument("--filter", choices=tuple(_FILTERS), default="all")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--no-cross-check", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="closed form vs Dedekind on random samples")
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--prime-bound", type=_positive, default=50)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--coef-bound", type=_positive, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
