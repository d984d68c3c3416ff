"""Exact avoidability criterion for order-size pairs.

Decides whether (m, f) splits as a vertex-disjoint clique plus forest, attaches
the integer floor bounds L and R that witness impossibility, certifies pairs
whose both orientations are impossible, and scans m ranges for such pairs.

All verdicts come from integer arithmetic; the only approximate quantities are
the fixed-point diagnostics (fractional part of the half-surd and the interval
endpoint), which never influence a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import DomainError, ScanAssertionError
from .exactarith import DEFAULT_FRACBITS, FixedPointFrac, binom2, frac_sqrt_half, surd_floor
from .parallel import DEFAULT_CHUNK, run_chunked


@dataclass(frozen=True)
class PairMF:
    """An order-size pair: m vertices, f edges, 0 <= f <= m*(m-1)/2."""

    m: int
    f: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"pair order must be >= 1, got m={self.m}")
        if not 0 <= self.f <= binom2(self.m):
            raise DomainError(
                f"pair size must satisfy 0 <= f <= {binom2(self.m)}, got f={self.f}"
            )

    def complement(self) -> "PairMF":
        return PairMF(self.m, binom2(self.m) - self.f)


@dataclass(frozen=True)
class Realizable:
    """Decomposition witness: clique of size x plus a forest on the rest."""

    x: int
    forest_vertices: int
    forest_edges: int


@dataclass(frozen=True)
class Impossible:
    """Proof of impossibility: the lower clique bound L exceeds the upper R."""

    L: int
    R: int


CliqueForestCert = Union[Realizable, Impossible]


@dataclass(frozen=True)
class AvoidabilityCert:
    """Certificate that neither the pair nor its complement splits as clique+forest."""

    pair: PairMF
    cert_direct: Impossible
    cert_complement: Impossible


@dataclass(frozen=True)
class CertRejection:
    """Names the orientation that is realizable, with its decomposition."""

    pair: PairMF
    direction: str  # "direct" | "complement"
    rejected_pair: PairMF
    decomposition: Realizable


@dataclass(frozen=True)
class CriterionEval:
    """Exact L/R floors for (m, q) plus fixed-point diagnostics.

    Dy and Dz are the radicands 2m^2-10m-8q+9 and 2m^2-2m-8q+1; L and R are the
    exact floors of 5/2 + sqrt(Dy)/2 and 1/2 + sqrt(Dz)/2.  frac_y is the
    fractional part of sqrt(Dy)/2 and d_approx the interval endpoint
    3/2 - (sqrt(Dz)-sqrt(Dy))/2, both at fracbits precision (diagnostics only;
    d_approx can be negative for small m).
    """

    m: int
    q: int
    Dy: int
    Dz: int
    L: int
    R: int
    frac_y: FixedPointFrac
    d_approx: FixedPointFrac


def _require_envelope(m: int, q: int) -> None:
    # m >= 5 + 2*sqrt(|q|), checked as (m-5)^2 >= 4|q| with m >= 5
    if m < 5:
        raise DomainError(f"criterion needs m >= 5, got m={m}")
    if (m - 5) ** 2 < 4 * abs(q):
        raise DomainError(
            f"criterion needs (m-5)^2 >= 4*|q| (i.e. m >= 5 + 2*sqrt(|q|)); "
            f"got m={m}, q={q}"
        )


def lr_values(m: int, q: int) -> tuple[int, int]:
    """Exact (L, R) for the (m, q) parametrization, f = m(m-1)/4 - q."""
    _require_envelope(m, q)
    dy = 2 * m * m - 10 * m - 8 * q + 9
    dz = 2 * m * m - 2 * m - 8 * q + 1
    return surd_floor(5, dy), surd_floor(1, dz)


def lr_from_f(m: int, f: int) -> tuple[int, int]:
    """Exact (L, R) computed from the pair directly: Dy = 8(f-m)+9, Dz = 8f+1.

    Algebraically identical to lr_values at q = m(m-1)/4 - f, but defined for
    every f >= m - 1 even when that q is not an integer.
    """
    dy = 8 * (f - m) + 9
    if dy < 0:
        raise DomainError(f"L is undefined for f < m - 1 (f={f}, m={m})")
    return surd_floor(5, dy), surd_floor(1, 8 * f + 1)


def eval_criterion(m: int, q: int, fracbits: int = DEFAULT_FRACBITS) -> CriterionEval:
    """Evaluate the exact floors and diagnostics for (m, q)."""
    _require_envelope(m, q)
    dy = 2 * m * m - 10 * m - 8 * q + 9
    dz = 2 * m * m - 2 * m - 8 * q + 1
    frac_y = frac_sqrt_half(dy, fracbits)
    # d = 3/2 - (sqrt(Dz) - sqrt(Dy))/2 at fracbits precision
    a = math.isqrt(dz << (2 * fracbits))
    b = math.isqrt(dy << (2 * fracbits))
    d_num = (3 << (fracbits - 1)) - ((a - b) >> 1)
    return CriterionEval(
        m=m,
        q=q,
        Dy=dy,
        Dz=dz,
        L=surd_floor(5, dy),
        R=surd_floor(1, dz),
        frac_y=frac_y,
        d_approx=FixedPointFrac(d_num, fracbits),
    )


def _smallest_clique_size(m: int, f: int) -> int | None:
    """Smallest clique size x such that (m, f) is a clique K_x plus a forest on
    the remaining m - x vertices, or None when no x in [0, m] works.

    The exact feasibility condition at x is binom2(x) <= f and
    f - binom2(x) <= max(0, m - x - 1).  Pure integer search: x = 0 covers all
    f <= m - 1; for f >= m the forest-budget excess 2f - x(x-1) - 2(m - x - 1)
    is strictly decreasing on [2, m-1], so the smallest feasible x there is
    found by bisection; x = m needs f = binom2(m) exactly.
    """
    if f <= m - 1:
        return 0
    # f >= m: x = 0, 1 overflow the forest budget and add no clique edges.
    if f > binom2(m - 1):
        # excess still positive at x = m-1, so only the full clique remains
        return m if f == binom2(m) else None
    lo, hi = 2, m - 1  # excess > 0 at x=2 (since f >= m), <= 0 at x=m-1
    while lo < hi:
        mid = (lo + hi) >> 1
        if 2 * f - mid * (mid - 1) <= 2 * (m - mid - 1):
            hi = mid
        else:
            lo = mid + 1
    return lo if lo * (lo - 1) // 2 <= f else None


def _smallest_clique_size_linear(m: int, f: int) -> int | None:
    """Reference linear scan over x; same contract as _smallest_clique_size."""
    for x in range(m + 1):
        clique_edges = binom2(x)
        if clique_edges > f:
            break
        rest = m - x
        budget = rest - 1 if rest >= 1 else 0
        if f - clique_edges <= budget:
            return x
    return None


def clique_forest_realizable(pair: PairMF) -> CliqueForestCert:
    """Decide clique+forest realizability of the pair.

    Returns Realizable with the smallest feasible clique size, or Impossible
    carrying the (L, R) floor gap.  The verdict comes from the integer search;
    L and R are attached afterwards for the certificate record.
    """
    x = _smallest_clique_size(pair.m, pair.f)
    if x is None:
        return Impossible(*lr_from_f(pair.m, pair.f))
    return Realizable(x, pair.m - x, pair.f - binom2(x))


def avoidability_certificate(pair: PairMF) -> AvoidabilityCert | CertRejection:
    """Certificate when both the pair and its complement are impossible;
    otherwise a rejection naming the realizable orientation."""
    direct = clique_forest_realizable(pair)
    if isinstance(direct, Realizable):
        return CertRejection(pair, "direct", pair, direct)
    comp_pair = pair.complement()
    comp = clique_forest_realizable(comp_pair)
    if isinstance(comp, Realizable):
        return CertRejection(pair, "complement", comp_pair, comp)
    return AvoidabilityCert(pair, direct, comp)


# ---------------------------------------------------------------------------
# q(m) specifications for range scans


@dataclass(frozen=True)
class AffineQ:
    """q(m) = floor(alpha*m + beta) with rational alpha, beta."""

    alpha: Fraction
    beta: Fraction

    def __call__(self, m: int) -> int:
        return math.floor(self.alpha * m + self.beta)


@dataclass(frozen=True)
class TableQ:
    """q(m) looked up from an explicit table; missing m raises DomainError."""

    table: dict

    def __call__(self, m: int) -> int:
        try:
            return self.table[m]
        except KeyError:
            raise DomainError(f"q table has no entry for m={m}") from None


QSpec = Callable[[int], int]


# ---------------------------------------------------------------------------
# Scanners.  Each returns a list of plain dict records (JSON-ready); chunked
# execution merges partial results in range order, so output is independent of
# the worker count and chunk size.


def _offsets_evaluable(m: int) -> bool:
    # envelope for q = +/-6m: (m-5)^2 >= 24m
    return m >= 5 and (m - 5) ** 2 >= 24 * m


def _scan_disjunction_chunk(m_lo: int, m_hi: int) -> list[dict]:
    records = []
    for m in range(m_lo, m_hi + 1):
        if m % 4 not in (0, 1) or m < 5:
            continue
        l0, r0 = lr_values(m, 0)
        center = l0 > r0
        if _offsets_evaluable(m):
            l6, r6 = lr_values(m, 6 * m)
            lm6, rm6 = lr_values(m, -6 * m)
            offset = l6 > r6 and lm6 > rm6
        else:
            l6 = r6 = lm6 = rm6 = None
            offset = None
        which = "center" if center else ("offset6m" if offset else "none")
        records.append(
            {
                "m": m,
                "which": which,
                "L0": l0,
                "R0": r0,
                "L6m": l6,
                "R6m": r6,
                "Lneg6m": lm6,
                "Rneg6m": rm6,
            }
        )
    return records


def scan_offset_disjunction(
    m_lo: int,
    m_hi: int,
    assert_all: bool = False,
    jobs: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> list[dict]:
    """For each m = 0, 1 (mod 4) in range, report whether the center inequality
    L_0 > R_0 holds, or both offset inequalities at q = +/-6m hold.

    In assertion mode every m must satisfy one of the two branches; a violation
    raises ScanAssertionError listing the failing m values.
    """
    records = run_chunked(_scan_disjunction_chunk, m_lo, m_hi, jobs=jobs, chunk=chunk)
    if assert_all:
        bad = [rec for rec in records if rec["which"] == "none"]
        if bad:
            raise ScanAssertionError(
                f"{len(bad)} m values satisfy neither branch "
                f"(first: m={bad[0]['m']})",
                bad,
            )
    return records


def first_persistent_m(records: list[dict]) -> int | None:
    """Smallest scanned m from which every later record has a holding branch.

    Reports an observation over the scanned range only; no claim is made that
    the boundary is tight beyond it.
    """
    last_bad = None
    for rec in records:
        if rec["which"] == "none":
            last_bad = rec["m"]
    if last_bad is None:
        return records[0]["m"] if records else None
    later = [rec["m"] for rec in records if rec["m"] > last_bad]
    return later[0] if later else None


def _scan_affine_chunk_factory(q_of_m: QSpec):
    def chunk_fn(m_lo: int, m_hi: int) -> list[dict]:
        records = []
        for m in range(m_lo, m_hi + 1):
            if m % 4 in (2, 3):
                records.append({"m": m, "status": "skipped-nonintegral-f"})
                continue
            q = q_of_m(m)
            if m < 5 or (m - 5) ** 2 < 4 * abs(q):
                records.append({"m": m, "status": "skipped-envelope", "q": q})
                continue
            lp, rp = lr_values(m, q)
            ln, rn = lr_values(m, -q)
            hit = lp > rp and ln > rn
            records.append(
                {
                    "m": m,
                    "status": "hit" if hit else "miss",
                    "q": q,
                    "f": binom2(m) // 2 - q,
                    "L_pos": lp,
                    "R_pos": rp,
                    "L_neg": ln,
                    "R_neg": rn,
                }
            )
        return records

    return chunk_fn


def scan_affine_q(
    q_of_m: QSpec,
    m_lo: int,
    m_hi: int,
    jobs: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> list[dict]:
    """Scan m in range for pairs (m, m(m-1)/4 - q(m)) whose both-sign floor
    inequalities hold; every "hit" admits an avoidability certificate.

    m = 2, 3 (mod 4) are recorded as skipped (the target size is then not an
    integer), as are m below the envelope for |q(m)|.
    """
    return run_chunked(_scan_affine_chunk_factory(q_of_m), m_lo, m_hi, jobs=jobs, chunk=chunk)


def scan_hits(records: list[dict]) -> list[int]:
    """The m values of "hit" records."""
    return [rec["m"] for rec in records if rec.get("status") == "hit"]


def cert_record(f: int, outcome: AvoidabilityCert | CertRejection) -> dict:
    if isinstance(outcome, AvoidabilityCert):
        return {
            "f": f,
            "certified": True,
            "L_direct": outcome.cert_direct.L,
            "R_direct": outcome.cert_direct.R,
            "L_complement": outcome.cert_complement.L,
            "R_complement": outcome.cert_complement.R,
        }
    dec = outcome.decomposition
    return {
        "f": f,
        "certified": False,
        "direction": outcome.direction,
        "x": dec.x,
        "forest_vertices": dec.forest_vertices,
        "forest_edges": dec.forest_edges,
    }


def scan_interval(m: int) -> dict:
    """Certify every integer f' in the open interval of half-width 0.175*m
    around m(m-1)/4; verdict is all-pass or the list of failing f'.

    Any m >= 1 is accepted: for m = 2, 3 (mod 4) the midpoint is half-integral
    and the certificates come from the direct search alone.  The interval can
    then be empty (m = 2), which is reported as such.
    """
    if m < 1:
        raise DomainError(f"scan_interval needs m >= 1, got {m}")
    center = Fraction(binom2(m), 2)
    width = Fraction(7 * m, 40)  # 0.175 * m, exactly
    f_lo = math.floor(center - width) + 1
    f_hi = math.ceil(center + width) - 1
    f_lo = max(f_lo, 0)
    f_hi = min(f_hi, binom2(m))
    if f_lo > f_hi:
        return {"m": m, "empty": True, "f_lo": None, "f_hi": None,
                "all_pass": False, "results": []}
    results = [
        cert_record(f, avoidability_certificate(PairMF(m, f)))
        for f in range(f_lo, f_hi + 1)
    ]
    return {
        "m": m,
        "empty": False,
        "f_lo": f_lo,
        "f_hi": f_hi,
        "all_pass": all(rec["certified"] for rec in results),
        "results": results,
    }


def _realizability_record(pair: PairMF) -> dict:
    cert = clique_forest_realizable(pair)
    if isinstance(cert, Realizable):
        return {"f": pair.f, "realizable": True, "x": cert.x,
                "forest_edges": cert.forest_edges}
    return {"f": pair.f, "realizable": False, "L": cert.L, "R": cert.R}


def _scan_mod23_chunk(m_lo: int, m_hi: int) -> list[dict]:
    records = []
    for m in range(m_lo, m_hi + 1):
        if m % 4 not in (2, 3) or m < 2:
            continue
        total = binom2(m)
        f0 = total // 2  # total is odd here, so the complement size is f0 + 1
        center = [
            _realizability_record(PairMF(m, f0)),
            _realizability_record(PairMF(m, total - f0)),
        ]
        rec = {
            "m": m,
            "f_center": f0,
            "center": center,
            "center_avoidable": not any(r["realizable"] for r in center),
        }
        f6 = f0 - 6 * m
        if 0 <= f6 <= total:
            offset = [
                _realizability_record(PairMF(m, f6)),
                _realizability_record(PairMF(m, total - f6)),
            ]
            rec["f_offset"] = f6
            rec["offset"] = offset
            rec["offset_avoidable"] = not any(r["realizable"] for r in offset)
        else:
            rec["f_offset"] = None
            rec["offset"] = None
            rec["offset_avoidable"] = None
        records.append(rec)
    return records


def scan_mod23(
    m_lo: int,
    m_hi: int,
    jobs: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> list[dict]:
    """Exploration-only analogue of the mod-4 = 0, 1 scan for m = 2, 3 (mod 4),
    using f = floor(m(m-1)/4) and its complement, decided by direct search.

    No assertion mode: correctness of a persistent pattern here is not claimed.
    """
    return run_chunked(_scan_mod23_chunk, m_lo, m_hi, jobs=jobs, chunk=chunk)


# ---------------------------------------------------------------------------
# Exhaustive search-vs-floors cross-check (the converse direction of the
# impossibility bounds, supplied by the direct search).


def _xcheck_chunk(m_lo: int, m_hi: int) -> list[tuple[int, list[dict]]]:
    sq = math.isqrt
    search = _smallest_clique_size
    checked = 0
    mismatches: list[dict] = []
    for m in range(m_lo, m_hi + 1):
        if m % 4 in (2, 3) or m < 5:
            continue
        half = m * (m - 1) // 4
        qmax = min(m, (m - 5) ** 2 // 4)
        base_y = 2 * m * m - 10 * m + 9
        base_z = 2 * m * m - 2 * m + 1
        for q in range(-qmax, qmax + 1):
            f = half - q
            impossible = search(m, f) is None
            lval = (5 + sq(base_y - 8 * q)) >> 1
            rval = (1 + sq(base_z - 8 * q)) >> 1
            checked += 1
            if impossible != (lval > rval):
                mismatches.append({"m": m, "q": q, "f": f, "L": lval, "R": rval,
                                   "search_impossible": impossible})
    return [(checked, mismatches)]


def xcheck_lr_equivalence(
    m_lo: int,
    m_hi: int,
    jobs: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> dict:
    """For every m = 0, 1 (mod 4) in range and every integer q with |q| <= m
    inside the envelope, check that the direct search says impossible exactly
    when L > R.  Returns {"pairs_checked", "mismatches"}."""
    parts = run_chunked(_xcheck_chunk, m_lo, m_hi, jobs=jobs, chunk=chunk)
    checked = sum(c for c, _ in parts)
    mismatches = [rec for _, ms in parts for rec in ms]
    return {"pairs_checked": checked, "mismatches": mismatches}
