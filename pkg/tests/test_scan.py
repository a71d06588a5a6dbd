import json

from cnideal import scan as scan_mod
from cnideal.graph import Graph, complete_multipartite, from_graph6, path, to_graph6
from cnideal.scan import ScanConfig, ScanRecord, csv_summary, evaluate, read_records, report, scan, summarize

from conftest import connected_upto7


def items(graphs):
    return [(to_graph6(g), g) for g in graphs]


def test_empty_input():
    records = list(scan([], ScanConfig()))
    assert records == []
    s = summarize(records)
    assert s["graphs"] == 0 and s["max_gap"] is None and s["confirmed_violations"] == []


def test_single_vertex_record():
    rec = evaluate(Graph(1, (0,)), ScanConfig())
    assert (rec.graph6, rec.v, rec.reg, rec.gamma) == ("@", 0, 0, 1)
    assert rec.violations == [] and rec.status == "ok"


def test_bipartite_gap():
    rec = evaluate(complete_multipartite(5, 3), ScanConfig())
    assert rec.v == 3 and rec.reg == 6 and rec.tau == 3
    assert summarize([rec])["max_gap"] == 3


def test_record_roundtrip():
    rec = evaluate(path(5), ScanConfig())
    assert ScanRecord.from_json(rec.to_json()) == rec


def test_report_is_idempotent(tmp_path):
    out = tmp_path / "scan.jsonl"
    graphs = items(list(connected_upto7())[:40])
    report(scan(graphs, ScanConfig()), out)
    first = out.read_bytes()
    first_csv = out.with_suffix(".csv").read_bytes()
    report(scan(graphs, ScanConfig()), out)
    assert out.read_bytes() == first
    assert out.with_suffix(".csv").read_bytes() == first_csv
    assert len(read_records(out)) == 40


def test_report_appends_new_graphs_only(tmp_path):
    out = tmp_path / "scan.jsonl"
    graphs = items(list(connected_upto7())[:30])
    report(scan(graphs[:20], ScanConfig()), out)
    report(scan(graphs, ScanConfig()), out)
    assert [r.graph6 for r in read_records(out)] == [g6 for g6, _ in graphs]


def test_jobs_do_not_change_output():
    graphs = items(list(connected_upto7())[100:160])
    one = [r.to_json() for r in scan(graphs, ScanConfig(jobs=1))]
    two = [r.to_json() for r in scan(graphs, ScanConfig(jobs=2))]
    assert one == two


def test_max_n_skips():
    assert list(scan(items([path(12)]), ScanConfig(max_n=10))) == []


def test_timeout_marks_record():
    rec = evaluate(path(14), ScanConfig(timeout_secs=0.001, reg_cap=14))
    assert rec.status == "timeout" and rec.v is None


def test_over_cap_skips_regularity():
    rec = evaluate(path(12), ScanConfig(reg_cap=10))
    assert rec.status == "reg_over_cap" and rec.reg is None and rec.v == 4


def test_rational_recheck(monkeypatch):
    real = scan_mod.regularity

    def flaky(g, fld="gf2", cap=14):
        return -1 if fld == "gf2" else real(g, fld, cap)

    monkeypatch.setattr(scan_mod, "regularity", flaky)
    rec = evaluate(path(4), ScanConfig())
    assert rec.reg == 2 and rec.violations == []


def test_csv_classes():
    recs = list(scan(items([path(4), complete_multipartite(2, 2), complete_multipartite(3, 2)]), ScanConfig()))
    rows = csv_summary(recs).splitlines()
    assert rows[0] == "n,class,graphs,conjecture_checked,violations,max_gap"
    assert "4,all,2,2,0,0" in rows
    assert "4,tree,1,1,0,0" in rows
    assert "4,chordal,1,1,0,0" in rows
    assert "5,bipartite,1,1,0,1" in rows
    assert rows.index("4,all,2,2,0,0") < rows.index("5,all,1,1,0,1")


def test_isolated_vertices_skip_gamma_check():
    g = from_graph6("A?")
    rec = evaluate(g, ScanConfig())
    assert rec.gamma == 2 and rec.v == 0 and rec.violations == []
