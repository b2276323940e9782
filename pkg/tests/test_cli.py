import json

import pytest

from kronwalk import Graph, make_cycle, read_graph, write_graph
from kronwalk.cli import main, parse_graph_spec


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_graph_spec_families():
    assert parse_graph_spec("cycle:5") == make_cycle(5)
    assert parse_graph_spec("complete+:2") == Graph(2, [(0, 0), (1, 1), (0, 1)])
    assert parse_graph_spec("multipartite:2,2").order == 4
    assert parse_graph_spec("H:5,3").order == 5
    assert parse_graph_spec("F:5,3").order == 5
    assert parse_graph_spec("path:1").order == 1


def test_parse_graph_spec_errors():
    for bad in ("cycle:2", "cycle:x", "H:3", "nosuchfile.txt", "what:1"):
        with pytest.raises(ValueError):
            parse_graph_spec(bad)


def test_metrics_cycle(capsys):
    code, out, _ = run_cli(capsys, "metrics", "cycle:5")
    assert code == 0
    doc = json.loads(out)
    assert doc["diameter"] == 2
    assert doc["exponent"] == 4
    assert doc["odd_girth"] == 5
    assert doc["l_o"] == 4
    assert doc["l_o_exact"] is True


def test_metrics_k_plus(capsys):
    code, out, _ = run_cli(capsys, "metrics", "complete+:3")
    assert code == 0
    assert json.loads(out)["exponent"] == 1


def test_metrics_family(capsys):
    code, out, _ = run_cli(capsys, "metrics", "F:5,3")
    assert code == 0
    assert json.loads(out)["exponent"] == 6


def test_metrics_disconnected_file(tmp_path, capsys):
    path = tmp_path / "split.edges"
    write_graph(path, Graph(4, [(0, 1), (2, 3)]))
    code, out, _ = run_cli(capsys, "metrics", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["diameter"] == "inf"
    assert doc["connected"] is False
    assert doc["l_o"] is None


def test_metrics_bad_spec(capsys):
    code, out, err = run_cli(capsys, "metrics", "cycle:1")
    assert code == 1
    assert out == ""
    assert "error" in err


def test_product_writes_file_and_matches(tmp_path, capsys):
    out_path = tmp_path / "product.edges"
    code, out, _ = run_cli(
        capsys, "product", "cycle:3", "complete:2", "--out", str(out_path)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["predicted"] == 3 and doc["measured"] == 3 and doc["match"] is True
    product = read_graph(out_path)
    assert product.order == 6 and product.edge_count == 6


def test_product_disconnected(capsys):
    code, out, _ = run_cli(capsys, "product", "complete:2", "complete:2")
    assert code == 0
    doc = json.loads(out)
    assert doc["predicted"] == "inf" and doc["measured"] == "inf"


def test_product_cycle_pair(capsys):
    code, out, _ = run_cli(capsys, "product", "cycle:5", "cycle:3")
    assert code == 0
    assert json.loads(out)["predicted"] == 3


def test_product_trivial_factor(capsys):
    code, out, _ = run_cli(capsys, "product", "complete+:1", "cycle:5")
    assert code == 0
    doc = json.loads(out)
    assert doc["predicted"] == 2 and doc["measured"] == 2


def test_predict_only(capsys):
    code, out, _ = run_cli(capsys, "predict", "cycle:3", "path:4")
    assert code == 0
    doc = json.loads(out)
    assert doc["predicted"] == 3
    assert doc["gamma2"] == "inf"
    assert doc["bounds"] == {"lower": 3, "upper": 3}


def test_verify_single_claim(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--claims", "Thm3.4", "--exhaustive", "3",
        "--random", "5", "--seed", "7",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["claims"][0]["claim_id"] == "Thm3.4"
    assert doc["claims"][0]["instances_checked"] == 36 * 36


def test_verify_report_is_byte_stable(capsys):
    args = ("verify", "--claims", "CorCycles,CorK2", "--exhaustive", "2",
            "--random", "4", "--seed", "3")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_unknown_claim(capsys):
    code, out, err = run_cli(capsys, "verify", "--claims", "nope")
    assert code == 1
    assert "unknown claim" in err


def test_product_mismatch_exits_two(monkeypatch, capsys):
    # force a wrong prediction: a mismatch must be signaled with exit 2
    import kronwalk.cli as cli_module
    from kronwalk.predict import DiameterPrediction

    real = cli_module.predict_diameter

    def wrong(s1, s2):
        pred = real(s1, s2)
        return DiameterPrediction(
            value=pred.value + 1,
            case=pred.case,
            bounds=pred.bounds,
            gamma1=pred.gamma1,
            gamma2=pred.gamma2,
            d1=pred.d1,
            d2=pred.d2,
        )

    monkeypatch.setattr(cli_module, "predict_diameter", wrong)
    code, out, err = run_cli(capsys, "product", "cycle:3", "cycle:5")
    assert code == 2
    doc = json.loads(out)
    assert doc["match"] is False
    assert "disagrees" in err


def test_verify_counterexample_exits_two_with_minimized_instance(monkeypatch, capsys):
    from kronwalk.harness.claims import REGISTRY, Claim, Failure

    def instances(spec, rng):
        yield (make_cycle(7),)

    def check(instance):
        (g,) = instance
        # fails whenever the graph has at least 5 vertices
        if g.order >= 5:
            return Failure("< 5 vertices", g.order, "synthetic failure")
        return None

    claim = Claim("synthetic", "always fails on big graphs", instances, check)
    monkeypatch.setitem(REGISTRY, "synthetic", claim)
    code, out, err = run_cli(capsys, "verify", "--claims", "synthetic")
    assert code == 2
    doc = json.loads(out)
    assert doc["pass"] is False
    cx = doc["claims"][0]["counterexample"]
    # minimization deleted vertices until the failure was about to vanish
    assert cx["graphs"][0]["order"] == 5
    assert cx["detail"] == "synthetic failure"


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["metrics"])  # missing the graph argument
    assert excinfo.value.code == 1


def test_generate_family_file(tmp_path, capsys):
    out_path = tmp_path / "c5.edges"
    code, out, _ = run_cli(capsys, "generate", "cycle:5", "--out", str(out_path))
    assert code == 0
    assert read_graph(out_path) == make_cycle(5)
    doc = json.loads(out)
    assert doc["order"] == 5 and doc["edges"] == 5


def test_generate_random_deterministic(tmp_path, capsys):
    a = tmp_path / "a.edges"
    b = tmp_path / "b.edges"
    for path in (a, b):
        code, _, _ = run_cli(
            capsys, "generate", "random:6", "--edge-prob", "0.5",
            "--loop-prob", "0.25", "--seed", "42", "--out", str(path),
        )
        assert code == 0
    assert a.read_text() == b.read_text()


def test_generate_json_format(tmp_path, capsys):
    out_path = tmp_path / "g.json"
    code, out, _ = run_cli(
        capsys, "generate", "path:3", "--out", str(out_path), "--format", "json"
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc == {"order": 3, "edges": [[0, 1], [1, 2]]}


def test_generate_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "generate", "path:3")
    assert code == 0
    doc = json.loads(out)
    assert doc["edges"] == [[0, 1], [1, 2]]


def test_stdout_is_json_only(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--claims", "CorCycles", "--random", "2"
    )
    assert code == 0
    json.loads(out)  # the whole stdout is one JSON document
    assert "instances" in err  # progress goes to stderr
