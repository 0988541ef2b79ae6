"""Verification reports: count agreement, round trips, and refinements.

Everything here is a pure function of its arguments, so reports are
byte-for-byte reproducible.  CSV and JSON renderings are provided for
machine consumption; the text rendering is for humans.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bijection import schmidt_to_two_color, two_color_to_schmidt
from .partitions import (
    Parts,
    RefinedQuery,
    TwoColorPartition,
    alternating_sum,
    enumerate_schmidt,
    enumerate_schmidt_refined_literal,
    enumerate_two_color,
    enumerate_two_color_refined,
)
from .series import two_color_coefficients
from .textform import format_partition, format_two_color


@dataclass(frozen=True)
class VerifyRecord:
    n: int
    s_count: int
    t_count: int
    series_count: int
    round_trip_checked: int
    ok: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s_count": self.s_count,
            "t_count": self.t_count,
            "series_count": self.series_count,
            "round_trip_checked": self.round_trip_checked,
            "pass": self.ok,
        }


@dataclass(frozen=True)
class VerifyReport:
    max_n: int
    roundtrip_cutoff: int
    records: tuple[VerifyRecord, ...]
    ok: bool
    witness: str | None

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "roundtrip_cutoff": self.roundtrip_cutoff,
            "pass": self.ok,
            "witness": self.witness,
            "records": [r.to_dict() for r in self.records],
        }


@dataclass(frozen=True)
class RefinedRecord:
    n: int
    r: int
    l: int
    p: int
    q: int
    t_refined: int
    s_literal: int
    transported_count: int
    literal_match: bool
    transported_match: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "l": self.l,
            "p": self.p,
            "q": self.q,
            "t_refined": self.t_refined,
            "s_literal": self.s_literal,
            "transported_count": self.transported_count,
            "literal_match": self.literal_match,
            "transported_match": self.transported_match,
        }


@dataclass(frozen=True)
class RefinedReport:
    max_n: int
    max_r: int
    max_l: int
    max_p: int
    max_q: int
    records: tuple[RefinedRecord, ...]
    ok: bool

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "max_r": self.max_r,
            "max_l": self.max_l,
            "max_p": self.max_p,
            "max_q": self.max_q,
            "pass": self.ok,
            "records": [r.to_dict() for r in self.records],
        }


def table_pairs(n: int) -> list[tuple[TwoColorPartition, Parts]]:
    """Every (two-color partition, image) pair of weight ``n``, canonical order.

    Weight zero has no listable pairs; the degenerate empty mapping is not
    part of the table.
    """
    if n == 0:
        return []
    return [(tc, two_color_to_schmidt(tc)) for tc in enumerate_two_color(n)]


def table_text(n: int) -> str:
    """One "colored <-> plain" line per pair; empty for n = 0."""
    lines = [
        f"{format_two_color(tc)} <-> {format_partition(image)}"
        for tc, image in table_pairs(n)
    ]
    return "\n".join(lines)


def verify_report(max_n: int, roundtrip_cutoff: int = 12) -> VerifyReport:
    """Compare both counts with the series and exercise the round trips.

    Round trips run exhaustively in both directions for each n up to the
    cutoff; above it only the three counts are compared.
    """
    if max_n < 1:
        raise ValueError("max_n must be positive")
    if roundtrip_cutoff < 0:
        raise ValueError("roundtrip_cutoff must be nonnegative")
    coefficients = two_color_coefficients(max_n)
    records = []
    witness = None
    for n in range(1, max_n + 1):
        schmidt_side = enumerate_schmidt(n)
        two_color_side = enumerate_two_color(n)
        checked = 0
        ok = True
        if len(schmidt_side) != len(two_color_side) or len(schmidt_side) != coefficients[n]:
            ok = False
            witness = witness or (
                f"n={n}: s={len(schmidt_side)} t={len(two_color_side)}"
                f" series={coefficients[n]}"
            )
        if n <= roundtrip_cutoff:
            for tc in two_color_side:
                image = two_color_to_schmidt(tc)
                checked += 1
                if alternating_sum(image) != n or schmidt_to_two_color(image) != tc:
                    ok = False
                    witness = witness or (
                        f"n={n}: round trip failed at {format_two_color(tc)}"
                    )
                    break
            for partition in schmidt_side:
                preimage = schmidt_to_two_color(partition)
                checked += 1
                if two_color_to_schmidt(preimage) != partition:
                    ok = False
                    witness = witness or (
                        f"n={n}: round trip failed at {format_partition(partition)}"
                    )
                    break
        records.append(
            VerifyRecord(
                n=n,
                s_count=len(schmidt_side),
                t_count=len(two_color_side),
                series_count=coefficients[n],
                round_trip_checked=checked,
                ok=ok,
            )
        )
    return VerifyReport(
        max_n=max_n,
        roundtrip_cutoff=roundtrip_cutoff,
        records=tuple(records),
        ok=all(r.ok for r in records),
        witness=witness,
    )


def _preimage_stats(n: int) -> list[tuple[int, int, int, int]]:
    # (num_red, num_green, max_red, max_green) of the preimage of every
    # partition with alternating sum n
    stats = []
    for partition in enumerate_schmidt(n):
        tc = schmidt_to_two_color(partition)
        stats.append((tc.num_red, tc.num_green, tc.max_red, tc.max_green))
    return stats


def refined_report(
    max_n: int, max_r: int, max_l: int, max_p: int, max_q: int
) -> RefinedReport:
    """Run the refinement grid.

    t_refined counts two-color partitions matching the bounds directly;
    s_literal counts the fixed-length bounded vectors; transported_count
    counts partitions of alternating sum n whose preimage statistics
    match the bounds.  Only transported_match feeds the pass flag, the
    literal column is recorded as data.
    """
    if min(max_n, max_r, max_l, max_p, max_q) < 1:
        raise ValueError("all grid bounds must be positive")
    records = []
    for n in range(1, max_n + 1):
        stats = _preimage_stats(n)
        for r in range(1, max_r + 1):
            for l in range(1, max_l + 1):
                for p in range(1, max_p + 1):
                    for q in range(1, max_q + 1):
                        query = RefinedQuery(n=n, r=r, l=l, p=p, q=q)
                        t_refined = len(enumerate_two_color_refined(query))
                        s_literal = len(enumerate_schmidt_refined_literal(query))
                        transported = sum(
                            1
                            for nr, ng, mr, mg in stats
                            if nr == r and ng == l and mr <= p and mg <= q
                        )
                        records.append(
                            RefinedRecord(
                                n=n,
                                r=r,
                                l=l,
                                p=p,
                                q=q,
                                t_refined=t_refined,
                                s_literal=s_literal,
                                transported_count=transported,
                                literal_match=s_literal == t_refined,
                                transported_match=transported == t_refined,
                            )
                        )
    return RefinedReport(
        max_n=max_n,
        max_r=max_r,
        max_l=max_l,
        max_p=max_p,
        max_q=max_q,
        records=tuple(records),
        ok=all(r.transported_match for r in records),
    )


def _bool(value: bool) -> str:
    return "true" if value else "false"


def verify_text(report: VerifyReport) -> str:
    lines = [
        f"n={r.n} s={r.s_count} t={r.t_count} series={r.series_count}"
        f" roundtrips={r.round_trip_checked} {'ok' if r.ok else 'MISMATCH'}"
        for r in report.records
    ]
    if report.ok:
        lines.append(
            f"PASS: counts agree and round trips hold"
            f" (max_n={report.max_n}, cutoff={report.roundtrip_cutoff})"
        )
    else:
        lines.append(f"FAIL: {report.witness}")
    return "\n".join(lines)


def verify_csv(report: VerifyReport) -> str:
    lines = ["n,s,t,series,pass"]
    lines += [
        f"{r.n},{r.s_count},{r.t_count},{r.series_count},{_bool(r.ok)}"
        for r in report.records
    ]
    return "\n".join(lines)


def verify_json(report: VerifyReport) -> str:
    return json.dumps(report.to_dict(), indent=2)


def refined_text(report: RefinedReport) -> str:
    lines = [
        f"n={r.n} r={r.r} l={r.l} p={r.p} q={r.q}"
        f" t_refined={r.t_refined} s_literal={r.s_literal}"
        f" transported={r.transported_count}"
        f" literal_match={_bool(r.literal_match)}"
        f" transported_match={_bool(r.transported_match)}"
        for r in report.records
    ]
    lines.append("PASS: transported counts agree" if report.ok else "FAIL")
    return "\n".join(lines)


def refined_csv(report: RefinedReport) -> str:
    lines = ["n,r,l,p,q,t_refined,s_literal,transported,literal_match"]
    lines += [
        f"{r.n},{r.r},{r.l},{r.p},{r.q},{r.t_refined},{r.s_literal},"
        f"{r.transported_count},{_bool(r.literal_match)}"
        for r in report.records
    ]
    return "\n".join(lines)


def refined_json(report: RefinedReport) -> str:
    return json.dumps(report.to_dict(), indent=2)
