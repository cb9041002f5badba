import json

import pytest

from bellgraph.cli import main
from bellgraph.graph import complete_graph, cycle_graph, disjoint_union, format_graph, path_graph


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_speed(capsys, files):
    spec = files("p3.txt", "graph P3\n" + format_graph(path_graph(3)))
    assert _run(capsys, "speed", spec, "--n", "4") == (0, "15\n", "")
    code, out, _ = _run(capsys, "speed", spec, "--n", "5", "--json")
    assert json.loads(out) == {"n": 5, "speed": 52}


def test_decide_text_and_json(capsys, files):
    spec = files("s.txt", "graph K3\n" + format_graph(complete_graph(3)) +
                 "graph claw\nn 4\ne 0 1\ne 0 2\ne 0 3\n")
    code, out, _ = _run(capsys, "decide", spec, "--max-letters", "1", "--max-period", "1", "--speed-n", "4")
    assert code == 0
    assert out.splitlines()[0] == "status: above_bell" and "n=4 speed=" in out
    code, out, _ = _run(capsys, "decide", spec, "--max-letters", "1", "--max-period", "1", "--speed-n", "4", "--json")
    data = json.loads(out)
    assert data["status"] == "above_bell" and data["caps"]["speed_n"] == 4


def test_decide_is_deterministic_across_threads(capsys, files):
    spec = files("c4.txt", "graph C4\n" + format_graph(cycle_graph(4)) + "graph K3\n" + format_graph(complete_graph(3)))
    outs = {_run(capsys, "decide", spec, "--max-period", "3", "--speed-n", "3", "--json", "--threads", t)[1]
            for t in ("0", "1", "3")}
    assert len(outs) == 1


def test_member_methods_agree(capsys, files):
    # (a) over an edgeless H gives linear forests; a loop gives their complements
    g = files("c4.txt", format_graph(cycle_graph(4)))
    h = files("h.txt", "n 1\n")
    for method in ("positions", "prefix", "doubled"):
        assert _run(capsys, "member", g, "--word", "(a)", "--method", method)[1] == "false\n"
    path_h = files("loop.txt", "n 1\ne 0 0\n")
    assert _run(capsys, "member", g, "--word", "(a)", "--h", path_h)[1] == "true\n"
    code, out, _ = _run(capsys, "member", g, "--word", "(a)", "--h", h, "--json")
    assert json.loads(out) == {"member": False, "word": "(a)", "method": "positions"}


def test_sparsify(capsys, files):
    k33 = files("k33.txt", "n 6\n" + "".join(f"e {u} {v}\n" for u in range(3) for v in range(3, 6)))
    code, out, _ = _run(capsys, "sparsify", k33, "--ell", "2", "--d", "0", "--t", "3")
    lines = out.splitlines()
    assert lines[:3] == [
        "bag 0: 0 1 2 ; kind(0,0)=sparse kind(0,1)=dense",
        "bag 1: 3 4 5 ; kind(1,0)=dense kind(1,1)=sparse",
        "sparsified:",
    ]
    assert lines[3:] == ["n 6"]
    code, out, _ = _run(capsys, "sparsify", k33, "--ell", "1", "--d", "1", "--json")
    assert code == 0 and json.loads(out) == {"partition": None}


def test_antichain_and_verify_round_trip(capsys, files, tmp_path):
    loop_path = files("lp.txt", "n 1\ne 0 0\n")
    code, out, _ = _run(capsys, "antichain", "--word", "(a)", "--h", loop_path, "--count", "3")
    assert code == 0 and out.count("graph F") == 3
    fam = files("fam.txt", out)
    assert _run(capsys, "verify-antichain", fam)[1] == "true\n"
    pair = files("pair.txt", "graph a\n" + format_graph(path_graph(3)) + "graph b\n" + format_graph(path_graph(4)))
    code, out, _ = _run(capsys, "verify-antichain", pair, "--json")
    assert json.loads(out) == {"antichain": False, "graphs": ["a", "b"]}


def test_bounds(capsys):
    code, out, _ = _run(capsys, "bounds", "--m", "1", "--form", "compositional")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = _run(capsys, "bounds", "--m", "2", "--json")
    data = json.loads(out)
    assert data["m"] == 2 and data["form"] == "display"
    assert all("exact" in v or "log_level" in v for k, v in data.items() if k not in ("m", "form"))


def test_universal(capsys, files):
    u = files("u.txt", format_graph(disjoint_union(complete_graph(3), complete_graph(3), complete_graph(3))))
    assert _run(capsys, "universal", u, "--class", "1", "--m", "3") == (0, "true\n", "")
    code, out, _ = _run(capsys, "universal", u, "--class", "2", "--m", "3", "--json")
    assert json.loads(out)["universal"] is False


def test_error_exit_codes(capsys, files, tmp_path):
    code, out, err = _run(capsys, "speed", str(tmp_path / "missing.txt"), "--n", "3")
    assert code == 1 and err.startswith("error:")
    bad = files("bad.txt", "n 2\ne 0 9\n")
    assert _run(capsys, "member", bad, "--word", "(a)")[0] == 1
    spec = files("k2.txt", "graph K2\n" + format_graph(complete_graph(2)))
    assert _run(capsys, "speed", spec, "--n", "12")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["universal", spec, "--class", "14", "--m", "2"])
    assert exc.value.code == 2
