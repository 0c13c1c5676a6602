"""Desk-scale experiment: the family ex^k(beta) over a range of k.

For every k the runner records class functions, summit data, the Burau trace
and both entropy columns, then fills the pairwise conjugacy matrix.  Entries
are ``conjugate``, ``non-conjugate`` or ``undecided`` (summit set over cap).
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import burau_rep, garside, lamination
from .exchange import (
    DegeneracyReport,
    ExchangePresentation,
    is_degenerate,
    iterated_exchange,
    markov_invariants_check,
    read_key_values,
    twist_identity_check,
)
from .words import BraidError, BraidWord, exponent_sum, format_word

CSV_COLUMNS = (
    "k", "word", "len", "expsum", "inf", "sup", "sss_size",
    "trace", "ent_est", "ent_lb", "converged",
)

CONJUGATE = "conjugate"
NON_CONJUGATE = "non-conjugate"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class ExperimentConfig:
    presentation: ExchangePresentation
    k_min: int
    k_max: int
    iters: int = 2000
    tol: float = 1e-6
    seeds: int = 4
    cap: int = garside.DEFAULT_SSS_CAP
    format: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if self.k_min > self.k_max:
            raise BraidError(f"empty k range [{self.k_min}, {self.k_max}]")
        if self.iters < 1 or self.seeds < 1 or self.cap < 1:
            raise BraidError("iters, seeds and cap must be positive")
        if not self.tol > 0:
            raise BraidError("tol must be positive")
        if self.format not in ("csv", "json"):
            raise BraidError(f"unknown format {self.format!r}")

    @property
    def ks(self) -> range:
        return range(self.k_min, self.k_max + 1)

    @classmethod
    def from_text(cls, text: str) -> ExperimentConfig:
        kv = read_key_values(text)
        known = {"n", "A", "B", "k_min", "k_max", "iters", "tol", "seeds", "cap", "format", "out"}
        unknown = set(kv) - known
        if unknown:
            raise BraidError(f"unknown config keys: {sorted(unknown)}")
        try:
            P = ExchangePresentation.from_text(int(kv["n"]), kv.get("A", ""), kv.get("B", ""))
            opts = {}
            for key, conv in (("iters", int), ("tol", float), ("seeds", int), ("cap", int)):
                if key in kv:
                    opts[key] = conv(kv[key])
            return cls(
                P, int(kv["k_min"]), int(kv["k_max"]),
                format=kv.get("format", "csv"), out=kv.get("out") or None, **opts,
            )
        except KeyError as e:
            raise BraidError(f"config lacks key {e}") from None
        except ValueError as e:
            raise BraidError(f"bad config value: {e}") from None

    @classmethod
    def from_file(cls, path: str | Path) -> ExperimentConfig:
        return cls.from_text(Path(path).read_text())


@dataclass
class Row:
    k: int
    word: str
    len: int
    expsum: int
    inf: int | None
    sup: int | None
    sss_size: int | None
    trace: str
    ent_est: float
    ent_lb: float
    converged: bool
    trace_poly: str = ""
    markov_ok: bool = True


@dataclass
class ConjugacyEntry:
    verdict: str
    basis: str  # "sss", "class-function", "reflexive" or "cap"
    witness: str | None = None


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    rows: list[Row]
    matrix: dict[tuple[int, int], ConjugacyEntry]
    degeneracy: DegeneracyReport
    geometric: tuple[bool, bool]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def seed_list(self) -> list[int]:
        return list(range(self.config.seeds))

    def verdict(self, j: int, k: int) -> str:
        return self.matrix[j, k].verdict

    def pairs(self, verdict: str) -> list[tuple[int, int]]:
        ks = list(self.config.ks)
        return [(j, k) for j in ks for k in ks if j < k and self.matrix[j, k].verdict == verdict]

    def rows_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([_cell(getattr(r, c)) for c in CSV_COLUMNS])
        return buf.getvalue()

    def matrix_csv(self) -> str:
        ks = list(self.config.ks)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k"] + ks)
        for j in ks:
            w.writerow([j] + [self.matrix[j, k].verdict for k in ks])
        return buf.getvalue()

    def to_json(self) -> dict:
        P = self.config.presentation
        ks = list(self.config.ks)
        return {
            "presentation": {"n": P.n, "A": format_word(P.A), "B": format_word(P.B)},
            "k_range": [self.config.k_min, self.config.k_max],
            "entropy": {"iters": self.config.iters, "tol": self.config.tol,
                        "seeds": self.seed_list},
            "cap": self.config.cap,
            "columns": list(CSV_COLUMNS),
            "rows": [
                {**{c: getattr(r, c) for c in CSV_COLUMNS}, "trace_poly": r.trace_poly}
                for r in self.rows
            ],
            "conjugacy": [
                {"j": j, "k": k, **asdict(self.matrix[j, k])}
                for j in ks for k in ks if j < k
            ],
            "degeneracy": {
                "a_commutes": self.degeneracy.a_commutes,
                "b_commutes": self.degeneracy.b_commutes,
                "degenerate": self.degeneracy.degenerate,
                "a_moves_curve": self.geometric[0],
                "b_moves_curve": self.geometric[1],
            },
            "checks": self.checks,
        }

    def write(self, path: str | Path | None = None) -> list[Path]:
        path = Path(path or self.config.out)
        if self.config.format == "json":
            path.write_text(json.dumps(self.to_json(), indent=2) + "\n")
            return [path]
        side = path.with_name(path.stem + "_conjugacy.csv")
        path.write_text(self.rows_csv())
        side.write_text(self.matrix_csv())
        return [path, side]


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.9f}"
    return str(v)


def _row_numbers(P: ExchangePresentation, k: int, iters: int, tol: float, seeds: int):
    # the expensive per-k work, kept picklable for worker processes
    w = iterated_exchange(P, k)
    est = lamination.entropy_estimate(w, max_iters=iters, tol=tol, seeds=seeds)
    lb = burau_rep.entropy_lower_bound(w)
    tr = burau_rep.trace_certificate(w)
    return k, est, lb, tr


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("BRAIDFORGE_THREADS", "1")))
    except ValueError:
        return 1


def run_experiment(cfg: ExperimentConfig, cache: garside.SummitCache | None = None) -> ExperimentReport:
    P = cfg.presentation
    cache = cache if cache is not None else garside.SummitCache()
    ks = list(cfg.ks)
    words: dict[int, BraidWord] = {k: iterated_exchange(P, k) for k in ks}

    workers = min(_workers(), len(ks))
    args = [(P, k, cfg.iters, cfg.tol, cfg.seeds) for k in ks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            numbers = list(pool.map(_row_numbers, *zip(*args)))
    else:
        numbers = [_row_numbers(*a) for a in args]

    rows = []
    traces = {}
    summit_ok = {}
    for k, est, lb, tr in numbers:
        w = words[k]
        traces[k] = tr
        try:
            inv = garside.summit_invariant(w, cap=cfg.cap, cache=cache)
            summit = (inv.inf, inv.sup, inv.summit_set_size)
            summit_ok[k] = True
        except garside.SuperSummitOverflow:
            summit = (None, None, None)
            summit_ok[k] = False
        rows.append(Row(
            k=k, word=format_word(w), len=len(w), expsum=exponent_sum(w),
            inf=summit[0], sup=summit[1], sss_size=summit[2],
            trace=burau_rep.trace_hash(tr), trace_poly=tr.serialize(),
            ent_est=est.value, ent_lb=lb, converged=est.converged,
            markov_ok=markov_invariants_check(P, k),
        ))

    matrix: dict[tuple[int, int], ConjugacyEntry] = {}
    for j in ks:
        matrix[j, j] = ConjugacyEntry(CONJUGATE, "reflexive", "")
        for k in ks:
            if k <= j:
                continue
            matrix[j, k] = matrix[k, j] = _decide(words[j], words[k], traces[j] != traces[k], cfg.cap, cache)

    deg = is_degenerate(P)
    geo = lamination.geometric_nondegeneracy(P)
    checks = {
        "markov": all(r.markov_ok for r in rows),
        "degeneracy_agreement": geo == (not deg.a_commutes, not deg.b_commutes),
        "twist_identity_k1_N1": twist_identity_check(P, 1, 1, cap=cfg.cap, cache=cache),
        "twist_identity_k1_N2": twist_identity_check(P, 1, 2, cap=cfg.cap, cache=cache),
        "certificates_consistent": all(
            matrix[j, k].verdict != CONJUGATE or traces[j] == traces[k]
            for j in ks for k in ks
        ),
    }
    return ExperimentReport(cfg, rows, matrix, deg, geo, checks)


def _decide(u: BraidWord, v: BraidWord, traces_differ: bool, cap: int, cache) -> ConjugacyEntry:
    try:
        ok, g = garside.conjugate_test(u, v, cap=cap, cache=cache)
    except garside.SuperSummitOverflow:
        if traces_differ:
            return ConjugacyEntry(NON_CONJUGATE, "class-function")
        return ConjugacyEntry(UNDECIDED, "cap")
    if ok:
        return ConjugacyEntry(CONJUGATE, "sss", format_word(g))
    return ConjugacyEntry(NON_CONJUGATE, "sss")
