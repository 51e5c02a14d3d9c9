"""JSON / CSV encodings of reports.

Every integer is written as a decimal string so discriminants of any size
survive a round trip through tools that parse JSON numbers as doubles.
Witness values are ints, bools, None, non-numeric strings or lists of ints
(polynomials, leading coefficient first); the decoder uses that to restore
types.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import re
from dataclasses import dataclass

from . import __version__
from .arith import PrimeFactorization
from .dedekind import DedekindCertificate, RepeatedFactor, SplittingType, Verdict
from .fppoly import ModFactorization, ModPoly
from .irreducible import Irreducibility, IrreducibilityReport
from .quadtheorem import CaseLabel, CaseVerdict, Exclusion, Monogenicity, MonogenicityReport
from .zpoly import IntPoly, Quadrinomial, ScopeFailure, TheoremScope, format_poly, parse_poly

_INT = re.compile(r"-?\d+\Z")

CSV_COLUMNS = ("n", "a", "b", "c", "applicable", "D", "monogenic", "index",
               "index_divisors", "irreducibility", "seed")


def dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _enc(v):
    if isinstance(v, enum.Enum):
        v = v.value
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    if isinstance(v, str):
        if _INT.match(v):
            raise ValueError(f"numeric-looking string {v!r} would not round-trip")
        return str(v)
    raise TypeError(f"cannot encode {type(v).__name__}")


def _dec(v):
    if isinstance(v, list):
        return [_dec(x) for x in v]
    if isinstance(v, str) and _INT.match(v):
        return int(v)
    return v


def _poly_dict(q: Quadrinomial) -> dict:
    return {"n": str(q.n), "a": str(q.a), "b": str(q.b), "c": str(q.c)}


def _poly_from(d: dict) -> Quadrinomial:
    return Quadrinomial(int(d["n"]), int(d["a"]), int(d["b"]), int(d["c"]))


# -- classify -----------------------------------------------------------------


@dataclass(frozen=True)
class ClassifyResult:
    """Everything `classify` emits for one quadrinomial."""

    q: Quadrinomial
    scope: TheoremScope
    report: MonogenicityReport | None
    irreducibility: IrreducibilityReport | None
    seed: int
    version: str = __version__


def case_verdict_to_dict(cv: CaseVerdict) -> dict:
    return {
        "p": str(cv.p),
        "case": str(cv.label.case) if cv.label else None,
        "subcase": cv.label.subcase if cv.label else None,
        "verdict": cv.verdict.value,
        "source": cv.source,
        "witness": {k: _enc(v) for k, v in cv.witness.items()},
    }


def case_verdict_from_dict(d: dict) -> CaseVerdict:
    label = CaseLabel(int(d["case"]), d["subcase"]) if d["case"] is not None else None
    witness = {k: _dec(v) for k, v in d["witness"].items()}
    if "exclusion" in witness:
        witness["exclusion"] = Exclusion(witness["exclusion"])
    return CaseVerdict(int(d["p"]), label, Verdict(d["verdict"]), d["source"], witness)


def classify_to_dict(res: ClassifyResult) -> dict:
    out: dict = {"poly": _poly_dict(res.q), "applicable": res.scope.applicable}
    if not res.scope.applicable:
        out["reason"] = res.scope.failure_reason.value
    else:
        rep = res.report
        fac = rep.factorization
        out.update(
            k=str(res.scope.k),
            D=str(rep.D),
            D_factors=[{"p": str(p), "e": str(e)} for p, e in fac.factors],
            cofactor=str(fac.cofactor),
            primes=[case_verdict_to_dict(cv) for cv in rep.per_prime],
            monogenic=rep.verdict.value,
            index=None if rep.index is None else str(rep.index),
            irreducibility=res.irreducibility.status.value,
            irreducibility_reason=res.irreducibility.reason,
        )
    out["seed"] = str(res.seed)
    out["version"] = res.version
    return out


def classify_from_dict(d: dict) -> ClassifyResult:
    q = _poly_from(d["poly"])
    seed = int(d["seed"])
    if not d["applicable"]:
        scope = TheoremScope(False, None, ScopeFailure(d["reason"]))
        return ClassifyResult(q, scope, None, None, seed, d["version"])
    scope = TheoremScope(True, int(d["k"]))
    fac = PrimeFactorization(tuple((int(x["p"]), int(x["e"])) for x in d["D_factors"]), int(d["cofactor"]))
    rep = MonogenicityReport(
        q, scope, int(d["D"]), fac,
        tuple(case_verdict_from_dict(x) for x in d["primes"]),
        Monogenicity(d["monogenic"]),
        None if d["index"] is None else int(d["index"]),
    )
    irr = IrreducibilityReport(Irreducibility(d["irreducibility"]), d["irreducibility_reason"])
    return ClassifyResult(q, scope, rep, irr, seed, d["version"])


def classify_csv_row(res: ClassifyResult) -> list[str]:
    q, rep = res.q, res.report
    if rep is None:
        return [str(q.n), str(q.a), str(q.b), str(q.c), "false", "", "", "", "", "", str(res.seed)]
    divisors = ";".join(str(cv.p) for cv in rep.per_prime if cv.verdict is Verdict.DIVIDES)
    return [str(q.n), str(q.a), str(q.b), str(q.c), "true", str(rep.D), rep.verdict.value,
            "" if rep.index is None else str(rep.index), divisors,
            res.irreducibility.status.value, str(res.seed)]


def csv_text(rows, header=CSV_COLUMNS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _fmt_witness(w: dict) -> str:
    parts = []
    for k, v in w.items():
        if isinstance(v, list):
            v = format_poly(IntPoly.from_high(v)) if v else "0"
        elif isinstance(v, enum.Enum):
            v = v.value
        parts.append(f"{k}={v}")
    return ", ".join(parts)


def classify_text(res: ClassifyResult) -> str:
    q = res.q
    lines = [f"f = {q}"]
    if not res.scope.applicable:
        lines.append(f"scope: not applicable ({res.scope.failure_reason.value})")
        lines.append(f"seed: {res.seed}  version: {res.version}")
        return "\n".join(lines) + "\n"
    rep = res.report
    lines.append(f"scope: applicable (k = {res.scope.k})")
    lines.append(f"irreducibility: {res.irreducibility.status.value} ({res.irreducibility.reason})")
    fac = rep.factorization
    if rep.D:
        pieces = [f"{p}^{e}" if e > 1 else str(p) for p, e in fac.factors]
        if fac.cofactor != 1:
            pieces.append(f"[unfactored {fac.cofactor}]")
        sign = "-" if rep.D < 0 else ""
        lines.append(f"D = {rep.D} = {sign}{' * '.join(pieces) or '1'}")
    else:
        lines.append("D = 0")
    for cv in rep.per_prime:
        lines.append(f"  p = {cv.p}: case {cv.label} -> {cv.verdict.value}"
                     + (f"  [{_fmt_witness(cv.witness)}]" if cv.witness else ""))
    lines.append(f"monogenic: {rep.verdict.value}")
    if rep.index is not None:
        lines.append(f"index: {rep.index}")
    lines.append(f"seed: {res.seed}  version: {res.version}")
    return "\n".join(lines) + "\n"


# -- exclusions ---------------------------------------------------------------


def exclusions_to_dict(q: Quadrinomial, rows: list[tuple[int, Exclusion | None]], seed: int) -> dict:
    return {
        "poly": _poly_dict(q),
        "primes": [{"p": str(p), "excluded": cond is not None,
                    "condition": None if cond is None else cond.value} for p, cond in rows],
        "seed": str(seed),
        "version": __version__,
    }


def exclusions_from_dict(d: dict) -> tuple[Quadrinomial, list[tuple[int, Exclusion | None]], int]:
    rows = [(int(r["p"]), None if r["condition"] is None else Exclusion(r["condition"])) for r in d["primes"]]
    return _poly_from(d["poly"]), rows, int(d["seed"])


# -- dedekind -----------------------------------------------------------------


def _mp(g: ModPoly) -> list[str]:
    return [str(x) for x in g.to_high()]


def dedekind_to_dict(f: IntPoly, cert: DedekindCertificate, split: SplittingType | None, seed: int) -> dict:
    out = {
        "poly": format_poly(f),
        "p": str(cert.p),
        "verdict": cert.verdict.value,
        "shortcut": cert.shortcut,
        "factorization": None,
        "unit": None,
        "m": None,
        "m_bar": None,
        "repeated": [],
        "witnesses": [],
        "splitting_type": None if split is None else [[str(a), str(b)] for a, b in split.parts],
        "seed": str(seed),
        "version": __version__,
    }
    if cert.factorization is not None:
        out["factorization"] = [{"factor": _mp(g), "e": str(e)} for g, e in cert.factorization.factors]
        out["unit"] = str(cert.factorization.unit)
        out["m"] = [str(x) for x in cert.m_poly.to_high()] if not cert.m_poly.is_zero() else []
        out["m_bar"] = _mp(cert.m_bar)
        out["repeated"] = [{"factor": _mp(r.factor), "e": str(r.exponent), "remainder": _mp(r.remainder)}
                           for r in cert.repeated]
        out["witnesses"] = [_mp(r.factor) for r in cert.witnesses]
    return out


def dedekind_from_dict(d: dict) -> tuple[IntPoly, DedekindCertificate, SplittingType | None, int]:
    p = int(d["p"])

    def mp(xs):
        return ModPoly.from_high(p, [int(x) for x in xs])

    fact = m = mbar = None
    repeated: tuple = ()
    if d["factorization"] is not None:
        fact = ModFactorization(p, int(d["unit"]), tuple((mp(x["factor"]), int(x["e"])) for x in d["factorization"]))
        m = IntPoly.from_high([int(x) for x in d["m"]])
        mbar = mp(d["m_bar"])
        repeated = tuple(RepeatedFactor(mp(r["factor"]), int(r["e"]), mp(r["remainder"])) for r in d["repeated"])
    cert = DedekindCertificate(p, Verdict(d["verdict"]), fact, m, mbar, repeated, d["shortcut"])
    split = None
    if d["splitting_type"] is not None:
        split = SplittingType(tuple((int(a), int(b)) for a, b in d["splitting_type"]))
    return parse_poly(d["poly"]), cert, split, int(d["seed"])


def dedekind_text(f: IntPoly, cert: DedekindCertificate, split: SplittingType | None) -> str:
    lines = [f"f = {f}", f"p = {cert.p}"]
    if cert.shortcut:
        lines.append(f"shortcut: {cert.shortcut}")
    if cert.factorization is not None:
        lines.append(f"f mod p = {cert.factorization}")
        lines.append(f"M mod p = {cert.m_bar}")
        for r in cert.repeated:
            mark = "divides M mod p" if r.divides_m else f"leaves remainder {r.remainder}"
            lines.append(f"  repeated factor ({r.factor})^{r.exponent}: {mark}")
    lines.append(f"verdict: {cert.verdict.value}")
    if cert.witnesses:
        lines.append("witnesses: " + ", ".join(str(r.factor) for r in cert.witnesses))
    if split is not None:
        lines.append("splitting type: " + str([list(t) for t in split.parts]))
    return "\n".join(lines) + "\n"
