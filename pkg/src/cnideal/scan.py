"""Corpus scanning: every proven inequality plus the v <= reg conjecture.

Records are emitted in input order and written as JSON lines keyed by graph6;
rerunning on the same corpus appends nothing.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import signal
import threading
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator

from .domination import invariants
from .graph import (
    Graph,
    has_isolated_vertex,
    is_bipartite,
    is_chordal,
    is_connected,
    is_tree,
    is_very_well_covered,
    to_graph6,
)
from .monomial import v_number_bruteforce
from .regularity import DEFAULT_CAP, regularity
from .vnumber import v_number

log = logging.getLogger(__name__)

CHECKS = (
    "gamma<=v",
    "v<=tau",
    "v<=2a",
    "reg>=a",
    "reg>=tau",
    "reg==tau",
    "tree:reg==a==tau",
    "v<=reg",
    "oracle==formula",
)
REG_CHECKS = {"reg>=a", "reg>=tau", "reg==tau", "tree:reg==a==tau", "v<=reg"}
FLAG_NAMES = ("connected", "bipartite", "chordal", "tree", "very_well_covered")
CSV_FIELDS = ("n", "class", "graphs", "conjecture_checked", "violations", "max_gap")


@dataclass
class ScanConfig:
    max_n: int = 10
    field: str = "gf2"
    checks: tuple[str, ...] = CHECKS
    jobs: int = 1
    timeout_secs: float = 30.0
    reg_cap: int = DEFAULT_CAP
    oracle_cap: int = 10


@dataclass
class ScanRecord:
    graph6: str
    n: int
    edges: int
    gamma: int | None = None
    tau: int | None = None
    indep: int | None = None
    matching: int | None = None
    v: int | None = None
    reg: int | None = None
    flags: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    status: str = "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        return cls(**json.loads(line))


class _Timeout(Exception):
    pass


@contextmanager
def _deadline(seconds: float):
    if not seconds or seconds <= 0 or threading.current_thread() is not threading.main_thread():
        yield
        return

    def fire(signum, frame):
        raise _Timeout

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _failures(
    rec: ScanRecord, isolated: bool, oracle_v: int | None, checks: Iterable[str]
) -> list[str]:
    f = rec.flags
    v, reg = rec.v, rec.reg
    tests = {
        # false on isolated vertices (K_1: gamma 1, v 0), so only graphs without them
        "gamma<=v": None if isolated else rec.gamma <= v,
        "v<=tau": v <= rec.tau,
        "v<=2a": v <= 2 * rec.matching,
        "reg>=a": None if reg is None else reg >= rec.matching,
        "reg>=tau": None
        if reg is None or not (f["bipartite"] or f["very_well_covered"])
        else reg >= rec.tau,
        "reg==tau": None if reg is None or not f["chordal"] else reg == rec.tau,
        "tree:reg==a==tau": None
        if reg is None or not f["tree"]
        else (v <= rec.tau == rec.matching == reg),
        "v<=reg": None if reg is None else v <= reg,
        "oracle==formula": None if oracle_v is None else oracle_v == v,
    }
    return [name for name in checks if tests[name] is False]


def evaluate(g: Graph, config: ScanConfig, graph6: str | None = None) -> ScanRecord:
    rec = ScanRecord(graph6 or to_graph6(g), g.n, g.num_edges)
    try:
        with _deadline(config.timeout_secs):
            inv = invariants(g)
            rec.gamma, rec.tau, rec.indep, rec.matching = inv.gamma, inv.tau, inv.indep, inv.matching
            rec.v = v_number(g).value
            rec.flags = {
                "connected": is_connected(g),
                "bipartite": is_bipartite(g),
                "chordal": is_chordal(g),
                "tree": is_tree(g),
                "very_well_covered": is_very_well_covered(g),
            }
            oracle_v = None
            if "oracle==formula" in config.checks and g.n <= config.oracle_cap:
                oracle_v = v_number_bruteforce(g, cap=config.oracle_cap)[0]
            if g.n <= config.reg_cap:
                rec.reg = regularity(g, config.field, config.reg_cap)
            else:
                rec.status = "reg_over_cap"
            isolated = has_isolated_vertex(g)
            failed = _failures(rec, isolated, oracle_v, config.checks)
            if REG_CHECKS & set(failed) and config.field == "gf2":
                # confirm over the rationals before reporting anything about reg
                exact = regularity(g, "rational", config.reg_cap)
                log.warning("%s: gf2 regularity %s rechecked over QQ: %s", rec.graph6, rec.reg, exact)
                rec.reg = exact
                failed = _failures(rec, isolated, oracle_v, config.checks)
            rec.violations = failed
    except _Timeout:
        return ScanRecord(rec.graph6, g.n, g.num_edges, status="timeout")
    return rec


def _evaluate_item(args: tuple[str, Graph, ScanConfig]) -> ScanRecord:
    g6, g, config = args
    return evaluate(g, config, g6)


def scan(graphs: Iterable[tuple[str, Graph]], config: ScanConfig) -> Iterator[ScanRecord]:
    """One record per input graph, in input order, regardless of ``jobs``."""
    items = []
    for g6, g in graphs:
        if g.n > config.max_n:
            log.info("%s: %d vertices exceeds max_n=%d, skipped", g6, g.n, config.max_n)
            continue
        items.append((g6, g, config))
    if config.jobs <= 1:
        for item in items:
            yield _evaluate_item(item)
        return
    with Pool(config.jobs) as pool:
        yield from pool.imap(_evaluate_item, items, chunksize=8)


def summarize(records: Iterable[ScanRecord]) -> dict:
    total = 0
    counts = {name: 0 for name in CHECKS}
    confirmed = []
    statuses: dict[str, int] = {}
    max_gap = None
    max_gap_graph = None
    checked = 0
    for rec in records:
        total += 1
        statuses[rec.status] = statuses.get(rec.status, 0) + 1
        for name in rec.violations:
            counts[name] += 1
        if rec.violations:
            confirmed.append(rec.graph6)
        if rec.reg is not None and rec.v is not None:
            checked += 1
            gap = rec.reg - rec.v
            if max_gap is None or gap > max_gap:
                max_gap, max_gap_graph = gap, rec.graph6
    return {
        "graphs": total,
        "status": statuses,
        "conjecture_checked": checked,
        "violations": counts,
        "confirmed_violations": confirmed,
        "max_gap": max_gap,
        "max_gap_graph": max_gap_graph,
    }


def _classes(rec: ScanRecord) -> list[str]:
    return ["all"] + [name for name in FLAG_NAMES if rec.flags.get(name)]


def csv_summary(records: Iterable[ScanRecord]) -> str:
    rows: dict[tuple[int, str], dict] = {}
    for rec in records:
        for cls in _classes(rec):
            row = rows.setdefault(
                (rec.n, cls),
                {"n": rec.n, "class": cls, "graphs": 0, "conjecture_checked": 0, "violations": 0, "max_gap": ""},
            )
            row["graphs"] += 1
            row["violations"] += bool(rec.violations)
            if rec.reg is not None and rec.v is not None:
                row["conjecture_checked"] += 1
                gap = rec.reg - rec.v
                if row["max_gap"] == "" or gap > row["max_gap"]:
                    row["max_gap"] = gap
    order = {name: i for i, name in enumerate(("all",) + FLAG_NAMES)}
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for key in sorted(rows, key=lambda k: (k[0], order[k[1]])):
        writer.writerow(rows[key])
    return buf.getvalue()


def read_records(path: Path) -> list[ScanRecord]:
    if not path.exists():
        return []
    with path.open(encoding="utf-8") as fh:
        return [ScanRecord.from_json(line) for line in fh if line.strip()]


def report(records: Iterable[ScanRecord], out: Path) -> list[ScanRecord]:
    """Append unseen records to ``out`` (JSONL) and rewrite ``out.csv``.

    Returns every record now in the file.
    """
    out = Path(out)
    try:
        existing = read_records(out)
        seen = {r.graph6 for r in existing}
        out.parent.mkdir(parents=True, exist_ok=True)
        with out.open("a", encoding="utf-8") as fh:
            for rec in records:
                if rec.graph6 in seen:
                    continue
                seen.add(rec.graph6)
                existing.append(rec)
                fh.write(rec.to_json() + "\n")
        out.touch()
        out.with_suffix(".csv").write_text(csv_summary(existing), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write scan results to {out}: {exc}") from exc
    return existing
