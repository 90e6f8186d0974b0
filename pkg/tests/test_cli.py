import json
from fractions import Fraction

import pytest

from equilib.cli import main, parse_input, ParseError

F = Fraction

TWO_STATE = "2/3 1/3\n2/3 1/3\n"
ABSORBING_PAIR = "1 0 0\n1/3 1/3 1/3\n0 0 1\n"
PATH_GRAPH = "nodes 3\n1 2\n2 1\n2 3\n3 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# --- parse_input -----------------------------------------------------------------

def test_parse_matrix_rational_literals():
    doc = parse_input("1/3 2/3\n2/3 1/3\n")
    assert doc.kind == "matrix"
    assert doc.mode == "exact"
    assert doc.matrix.p[0, 1] == F(2, 3)


def test_parse_matrix_decimals_infer_float():
    doc = parse_input("0.25, 0.75\n0.5, 0.5\n")
    assert doc.mode == "float"
    assert doc.matrix.p[0, 0] == 0.25


def test_parse_matrix_mode_override_exactifies_decimals():
    doc = parse_input("0.1 0.9\n0.5 0.5\n", mode="exact")
    assert doc.mode == "exact"
    assert doc.matrix.p[0, 0] == F(1, 10)


def test_parse_graph_edge_list():
    doc = parse_input(PATH_GRAPH)
    assert doc.kind == "graph"
    assert doc.graph.adjacency == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_parse_graph_adjacency_rows():
    doc = parse_input("0 1\n1 0\n", fmt="graph")
    assert doc.kind == "graph"
    assert doc.graph.adjacency == [[0, 1], [1, 0]]


def test_parse_json_matrix_document():
    doc = parse_input(json.dumps(
        {"kind": "matrix", "n": 2, "rows": [["1/3", "2/3"], ["1", "0"]]}))
    assert doc.mode == "exact"
    assert doc.matrix.p[0, 0] == F(1, 3)


def test_parse_json_graph_document():
    doc = parse_input(json.dumps(
        {"kind": "graph", "n": 2, "rows": [[0, 2], [1, 0]]}))
    assert doc.kind == "graph"
    assert doc.graph.adjacency == [[0, 2], [1, 0]]


def test_parse_malformed_literal_reports_position():
    with pytest.raises(ParseError, match="line 2, entry 1"):
        parse_input("1/2 1/2\nx 1\n")


def test_parse_non_square_matrix_rejected():
    with pytest.raises(ParseError, match="square"):
        parse_input("1/2 1/2\n1\n")


def test_parse_row_sum_violation_reported():
    with pytest.raises(ParseError, match="row 1"):
        parse_input("0.5 0.6\n0.5 0.5\n")


def test_parse_graph_index_out_of_range():
    with pytest.raises(ParseError, match="out of range"):
        parse_input("nodes 2\n1 3\n")


# --- subcommands -----------------------------------------------------------------

def test_stationary_unique_text_and_exit_code(tmp_path, capsys):
    path = write(tmp_path, "m.txt", TWO_STATE)
    code, out, _ = run(capsys, "stationary", path)
    assert code == 0
    assert "pi = [2/3, 1/3]" in out


def test_stationary_degenerate_report_and_exit_code(tmp_path, capsys):
    path = write(tmp_path, "m.txt", ABSORBING_PAIR)
    code, out, _ = run(capsys, "stationary", path)
    assert code == 2
    assert "degenerate" in out
    assert "[1, 0, 0]" in out
    assert "[0, 0, 1]" in out


def test_stationary_json_round_trips_through_verify(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", TWO_STATE)
    code, out, _ = run(capsys, "stationary", "--json", matrix)
    assert code == 0
    payload = json.loads(out)
    assert payload["variant"] == "unique"
    assert payload["pi"] == ["2/3", "1/3"]
    pi_file = write(tmp_path, "pi.json", out)
    code, out, _ = run(capsys, "verify", pi_file, matrix)
    assert code == 0
    assert "residual = 0" in out


def test_float_json_round_trip_residual(tmp_path, capsys):
    matrix = write(tmp_path, "m.txt", "0.9 0.1\n0.35 0.65\n")
    code, out, _ = run(capsys, "stationary", "--json", matrix)
    payload = json.loads(out)
    assert payload["mode"] == "float"
    pi_file = write(tmp_path, "pi.json", out)
    code, out, _ = run(capsys, "verify", pi_file, matrix)
    assert code == 0
    residual = float(out.split("=")[1])
    assert residual <= 1e-12


def test_weights_on_matrix(tmp_path, capsys):
    path = write(tmp_path, "m.txt", TWO_STATE)
    code, out, _ = run(capsys, "weights", path)
    assert code == 0
    assert "w = [2/3, 1/3]" in out
    assert "total = 1" in out


def test_weights_on_graph_shows_integers(tmp_path, capsys):
    path = write(tmp_path, "g.txt", PATH_GRAPH)
    code, out, _ = run(capsys, "weights", path)
    assert code == 0
    assert "numerators = [1, 2, 1]" in out
    assert "denominator = 4" in out
    assert "pi = [1/4, 1/2, 1/4]" in out


def test_graph_stationary_command(tmp_path, capsys):
    path = write(tmp_path, "g.txt", PATH_GRAPH)
    code, out, _ = run(capsys, "stationary", path)
    assert code == 0
    assert "pi = [1/4, 1/2, 1/4]" in out


def test_classes_exit_codes(tmp_path, capsys):
    path = write(tmp_path, "m.txt", ABSORBING_PAIR)
    code, out, _ = run(capsys, "classes", path)
    assert code == 2
    assert "transitory states: 2" in out
    path = write(tmp_path, "m2.txt", TWO_STATE)
    code, _, _ = run(capsys, "classes", path)
    assert code == 0


def test_polytope_lists_vertices(tmp_path, capsys):
    path = write(tmp_path, "m.txt", ABSORBING_PAIR)
    code, out, _ = run(capsys, "polytope", "--json", path)
    assert code == 2
    payload = json.loads(out)
    verts = payload["report"]["vertex_equilibria"]
    assert verts == [["1", "0", "0"], ["0", "0", "1"]]
    assert payload["report"]["classes"] == [[1], [2], [3]]


def test_ratio_command(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1/2 1/2 0\n0 2/3 1/3\n1/4 0 3/4\n")
    code, out, _ = run(capsys, "ratio", "1", "2", path)
    assert code == 0
    assert out.startswith("pi[1] / pi[2]")


def test_ratio_zero_weight_is_an_error(tmp_path, capsys):
    path = write(tmp_path, "m.txt",
                 "1/2 1/2 0\n1/3 1/3 1/3\n0 0 1\n")
    code, _, err = run(capsys, "ratio", "1", "1", path)
    assert code == 1
    assert "error" in err


def test_compare_on_exact_input(tmp_path, capsys):
    path = write(tmp_path, "m.txt", TWO_STATE)
    code, out, _ = run(capsys, "compare", path)
    assert code == 0
    assert "minor_weights" in out
    assert "linear_solve" in out
    assert "power_method" in out
    assert "max pairwise L-inf difference" in out


def test_compare_degenerate_input(tmp_path, capsys):
    path = write(tmp_path, "m.txt", ABSORBING_PAIR)
    code, out, _ = run(capsys, "compare", path)
    assert code == 2
    assert "degenerate" in out
    assert "singular" in out


def test_epsilon_flag_lifts_degeneracy(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "1 0\n0 1\n")
    code, out, _ = run(capsys, "stationary", "--epsilon", "1/100", path)
    assert code == 0
    assert "pi = [1/2, 1/2]" in out


def test_mode_flag_switches_output_to_float(tmp_path, capsys):
    path = write(tmp_path, "m.txt", TWO_STATE)
    code, out, _ = run(capsys, "stationary", "--mode", "float", path)
    assert code == 0
    assert "0.666667" in out


def test_mode_env_var_sets_default(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("EQUILIB_MODE", "float")
    path = write(tmp_path, "m.txt", TWO_STATE)
    code, out, _ = run(capsys, "stationary", path)
    assert code == 0
    assert "0.666667" in out


def test_stdin_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(TWO_STATE))
    code, out, _ = run(capsys, "stationary", "-")
    assert code == 0
    assert "pi = [2/3, 1/3]" in out


def test_parse_error_exits_one(tmp_path, capsys):
    path = write(tmp_path, "m.txt", "0.5 0.6\n0.5 0.5\n")
    code, _, err = run(capsys, "stationary", path)
    assert code == 1
    assert "error:" in err


def test_missing_file_exits_one(capsys):
    code, _, err = run(capsys, "stationary", "/no/such/file")
    assert code == 1
    assert "cannot read" in err


def test_zero_out_degree_reported_one_based(tmp_path, capsys):
    path = write(tmp_path, "g.txt", "nodes 2\n1 2\n")
    code, _, err = run(capsys, "stationary", path)
    assert code == 1
    assert "node 2" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1
    assert "error" in err


def test_unknown_flag_exits_one(capsys):
    code, _, _ = run(capsys, "stationary", "--no-such-flag")
    assert code == 1


def test_edge_threshold_flag(tmp_path, capsys):
    noise = 5e-15
    path = write(tmp_path, "m.txt",
                 f"{1 - noise!r} {noise!r}\n0.0 1.0\n")
    code, _, _ = run(capsys, "classes", path)
    assert code == 2
    code, _, _ = run(capsys, "classes", "--edge-threshold", "1e-16", path)
    assert code == 0
