"""Index divisors and monogenity for quadrinomials x^n + a x^(n-1) + b x + c."""

__version__ = "0.1.0"

from .dedekind import DedekindCertificate, Verdict, index_divides  # noqa: E402
from .errors import InternalInconsistency, InvalidArgument  # noqa: E402
from .quadtheorem import (  # noqa: E402
    CaseLabel,
    CaseVerdict,
    Monogenicity,
    MonogenicityReport,
    case_of,
    classify_prime,
    excluded_prime,
    is_monogenic,
)
from .zpoly import IntPoly, Quadrinomial, check_scope, discriminant, expand, parse_poly  # noqa: E402

__all__ = [
    "CaseLabel",
    "CaseVerdict",
    "DedekindCertificate",
    "IntPoly",
    "InternalInconsistency",
    "InvalidArgument",
    "Monogenicity",
    "MonogenicityReport",
    "Quadrinomial",
    "Verdict",
    "case_of",
    "check_scope",
    "classify_prime",
    "discriminant",
    "excluded_prime",
    "expand",
    "index_divides",
    "is_monogenic",
    "parse_poly",
]
