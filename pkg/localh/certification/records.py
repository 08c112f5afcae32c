"""
Plain dictionary records for everything the command line emits.

Exact values are written as decimal strings, ``"p/q"`` for proper
fractions and ``"p"`` for integers, so records survive JSON and CSV
without loss and compare byte for byte across runs.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

from localh.combinatorics.basis_transforms import LocationCounts, TransferReport
from localh.combinatorics.chebyshev import HPolyReport, OracleReport
from localh.combinatorics.cluster_xi import CartanType, RootSystem
from localh.combinatorics.multiplier import PolyaSchurReport
from localh.polynomials.exact_poly import ExactPoly, RationalLike
from localh.polynomials.real_roots import IsolatingInterval, RealRootCertificate

Record = Dict[str, Any]


def rational_str(value: RationalLike) -> str:
    exact = Fraction(value)
    if exact.denominator == 1:
        return str(exact.numerator)
    return f"{exact.numerator}/{exact.denominator}"


def coefficient_strings(p: ExactPoly, length: Optional[int] = None) -> List[str]:
    """Coefficients constant term first, zero padded to ``length``."""
    size = len(p.coeffs) if length is None else max(length, len(p.coeffs))
    return [rational_str(p.coefficient(i)) for i in range(size)]


def interval_record(interval: IsolatingInterval) -> Record:
    return {
        "lo": rational_str(interval.lo),
        "hi": rational_str(interval.hi),
        "multiplicity": interval.multiplicity,
    }


def counts_record(counts: Optional[LocationCounts]) -> Optional[Record]:
    if counts is None:
        return None
    return {
        "neg_inf_to_m1": counts.neg_inf_to_m1,
        "m1_to_0": counts.m1_to_0,
        "at_0": counts.at_0,
        "at_m1": counts.at_m1,
    }


def _system_fields(rs: RootSystem) -> Record:
    record: Record = {"type": rs.family.value, "rank": rs.rank}
    if rs.family is CartanType.I2:
        record["param"] = rs.parameter
    return record


def xi_record(rs: RootSystem, xi: Iterable[RationalLike]) -> Record:
    return {**_system_fields(rs), "xi": [rational_str(v) for v in xi]}


def local_h_record(rs: RootSystem, p: ExactPoly) -> Record:
    return {**_system_fields(rs), "coeffs": coefficient_strings(p, rs.rank + 1)}


def certificate_record(
    rs: RootSystem,
    p: ExactPoly,
    certificate: RealRootCertificate,
    counts: Optional[LocationCounts],
    runtime_ms: Optional[int],
    show_roots: bool,
) -> Record:
    """
    ``{type, rank, coeffs, real_rooted, distinct_roots, counts, runtime_ms}``
    plus ``degenerate`` and, with ``show_roots``, ``intervals``.
    """
    record: Record = {
        **_system_fields(rs),
        "coeffs": coefficient_strings(p, rs.rank + 1),
        "real_rooted": certificate.is_real_rooted,
        "distinct_roots": certificate.distinct_real_roots,
        "counts": counts_record(counts),
        "runtime_ms": runtime_ms,
        "degenerate": certificate.is_degenerate,
    }
    if show_roots:
        record["intervals"] = [interval_record(i) for i in certificate.isolating_intervals]
    return record


def transfer_record(label: str, report: TransferReport) -> Record:
    return {
        "input": label,
        "n": report.vector.n,
        "xi": [rational_str(v) for v in report.vector.xi],
        "xi_real_rooted": report.xi_certificate.is_real_rooted,
        "local_real_rooted": report.local_certificate.is_real_rooted,
        "agreement": report.agreement,
        "xi_roots_negative_simple": report.xi_roots_negative_simple,
        "expected_per_side": report.expected_per_side,
        "expected_at_m1": report.expected_at_m1,
        "counts": counts_record(report.locations),
        "locations_match": report.locations_match,
        "passed": report.passed,
    }


def narayana_record(n: int, passed: bool) -> Record:
    return {"check": "narayana", "n": n, "passed": passed}


def chebyshev_check_record(n: int, check: str, passed: bool) -> Record:
    return {"check": check, "n": n, "passed": passed}


def h_poly_record(report: HPolyReport, show_roots: bool) -> Record:
    record: Record = {
        "check": "h_poly_certificate",
        "n": report.n,
        "degree": report.certificate.degree,
        "distinct_roots": report.certificate.distinct_real_roots,
        "coprime_to_derivative": report.coprime_to_derivative,
        "all_negative": report.all_negative,
        "passed": report.passed,
    }
    if show_roots:
        record["intervals"] = [
            interval_record(i) for i in report.certificate.isolating_intervals
        ]
    return record


def oracle_record(report: OracleReport) -> Record:
    return {
        "check": "oracle_agreement",
        "n": report.n,
        "matches": [
            {"k": m.k, "interval": m.interval_index, "precision_bits": m.precision_bits}
            for m in report.matches
        ],
        "passed": report.passed,
    }


def polya_schur_records(report: PolyaSchurReport) -> List[Record]:
    """One record per depth, then a summary record."""
    records: List[Record] = [
        {
            "sequence": report.sequence,
            "n": verdict.n,
            "real_rooted": verdict.real_rooted,
            "same_sign": verdict.same_sign,
            "distinct_roots": (
                None if verdict.certificate is None else verdict.certificate.distinct_real_roots
            ),
            "passed": verdict.passed,
        }
        for verdict in report.verdicts
    ]
    records.append(
        {
            "sequence": report.sequence,
            "max_n": report.max_n,
            "partial": report.partial,
            "first_failure": report.first_failure,
            "passed": report.passed,
        }
    )
    return records


def record_passed(record: Record) -> bool:
    """Verdict of a record: ``passed`` if present, else ``real_rooted``, else true."""
    if "passed" in record:
        return bool(record["passed"])
    if "real_rooted" in record:
        return bool(record["real_rooted"])
    return True
