import json

import pytest

from fareycheck.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_gen_farey(capsys, tmp_path):
    path = tmp_path / "f4.json"
    code, out, _ = run(capsys, "gen", "farey", "--stages", "4", "--out", str(path))
    assert code == 0 and out == ""
    obj = json.loads(path.read_text())
    assert obj["vertices"] == 17 and len(obj["edges"]) == 31


def test_gen_torus_stdout(capsys):
    code, obj = run_json(capsys, "gen", "torus", "--rows", "5", "--cols", "6")
    assert code == 0
    assert len(obj["rotations"]) == 30
    assert len(obj["displacements"]) == 90


def test_gen_platonic_dot(capsys, tmp_path):
    dot = tmp_path / "oct.dot"
    code, obj = run_json(
        capsys, "gen", "platonic", "--name", "octahedron", "--dot", str(dot)
    )
    assert code == 0 and len(obj["rotations"]) == 6
    text = dot.read_text()
    assert text.startswith("graph") and text.count("--") == 12


def test_gen_bad_name(capsys):
    code, _, err = run(capsys, "gen", "platonic", "--name", "teapot")
    assert code == 2 and "error:" in err


def test_check_phi0_roundtrip(capsys, tmp_path):
    path = tmp_path / "t.json"
    assert run(capsys, "gen", "torus", "--rows", "5", "--cols", "5",
               "--out", str(path))[0] == 0
    code, obj = run_json(capsys, "check", "phi0", str(path))
    assert code == 0 and obj["status"] == "pass"

    fpath = tmp_path / "f.json"
    assert run(capsys, "gen", "farey", "--stages", "3", "--out", str(fpath))[0] == 0
    code, obj = run_json(capsys, "check", "phi0", str(fpath))
    assert code == 1 and obj["status"] == "fail" and obj["witness"]


def test_check_psi_exit_codes(capsys, tmp_path):
    path = tmp_path / "oct.json"
    run(capsys, "gen", "platonic", "--name", "octahedron", "--out", str(path))
    assert run(capsys, "check", "psi", str(path), "--n", "3")[0] == 0
    code, obj = run_json(capsys, "check", "psi", str(path), "--n", "4")
    assert code == 1
    assert len(obj["witness"]["vertices"]) == 4


def test_check_psi_requires_n(capsys, tmp_path):
    path = tmp_path / "oct.json"
    run(capsys, "gen", "platonic", "--name", "octahedron", "--out", str(path))
    code, _, err = run(capsys, "check", "psi", str(path))
    assert code == 2 and "--n" in err


def test_check_psi_budget_exit(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "gen", "torus", "--rows", "7", "--cols", "7", "--out", str(path))
    code, obj = run_json(capsys, "check", "psi", str(path), "--n", "5",
                         "--budget", "50")
    assert code == 2 and obj["status"] == "error"


def test_check_psi_certificate(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "gen", "torus", "--rows", "7", "--cols", "7", "--out", str(path))
    code, obj = run_json(capsys, "check", "psi", str(path), "--n", "5",
                         "--mode", "certificate")
    assert code == 0
    assert obj["mode"] == "certificate" and obj["certified_psi"] == 5
    # the certificate route needs rotations, not just a graph
    gpath = tmp_path / "g.json"
    gpath.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    code, _, err = run(capsys, "check", "psi", str(gpath), "--n", "5",
                       "--mode", "certificate")
    assert code == 2 and "map" in err


def test_check_witness_dot(capsys, tmp_path):
    path = tmp_path / "oct.json"
    dot = tmp_path / "wit.dot"
    run(capsys, "gen", "platonic", "--name", "octahedron", "--out", str(path))
    code, _, _ = run(capsys, "check", "psi", str(path), "--n", "4",
                     "--dot", str(dot))
    assert code == 1
    assert dot.read_text().count("--") == 4  # induced C4


def test_analyze(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "gen", "torus", "--rows", "5", "--cols", "5", "--out", str(path))
    code, obj = run_json(
        capsys, "analyze", str(path), "--genus", "--facewidth",
        "--connectivity", "--chordal", "--k4",
    )
    assert code == 0
    assert obj == {
        "vertices": 25, "edges": 75, "genus": 1, "facewidth": 5,
        "connectivity": 6, "chordal": False, "chordal_witness": obj["chordal_witness"],
        "k4": None,
    }
    assert len(obj["chordal_witness"]) >= 4  # a hole


def test_analyze_facewidth_infinite(capsys, tmp_path):
    path = tmp_path / "ico.json"
    run(capsys, "gen", "platonic", "--name", "icosahedron", "--out", str(path))
    code, obj = run_json(capsys, "analyze", str(path), "--facewidth")
    assert code == 0 and obj["facewidth"] == "infinite"


def test_analyze_plain_graph_rejects_genus(capsys, tmp_path):
    gpath = tmp_path / "g.json"
    gpath.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    code, obj = run_json(capsys, "analyze", str(gpath), "--connectivity")
    assert code == 0 and obj["connectivity"] == 2
    code, _, err = run(capsys, "analyze", str(gpath), "--genus")
    assert code == 2 and "map" in err


def test_lift(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "gen", "torus", "--rows", "9", "--cols", "9", "--out", str(path))
    code, obj = run_json(capsys, "lift", str(path), "--subset", "0,1,2")
    assert code == 0 and obj["status"] == "ok"
    assert obj["coords"]["0"] == [0, 0]

    row = ",".join(str(j) for j in range(9))
    code, obj = run_json(capsys, "lift", str(path), "--subset", row)
    assert code == 1
    assert obj["status"] == "noncontractible"
    assert obj["displacement"] != [0, 0]

    code, _, err = run(capsys, "lift", str(path), "--subset", "0,x")
    assert code == 2 and "subset" in err


def test_lift_needs_torus(capsys, tmp_path):
    path = tmp_path / "oct.json"
    run(capsys, "gen", "platonic", "--name", "octahedron", "--out", str(path))
    code, _, err = run(capsys, "lift", str(path), "--subset", "0,1")
    assert code == 2 and "torus" in err


def test_batch_pseudofinite(capsys):
    code, obj = run_json(
        capsys, "batch", "pseudofinite", "--nmax", "4",
        "--family", "platonic:octahedron,platonic:icosahedron",
    )
    assert code == 0 and obj["complete"]
    by_n = {r["n"]: r for r in obj["results"]}
    # octahedron fails psi_4, so the icosahedron carries n=4
    assert by_n[3]["witness_model"] == "platonic:octahedron"
    assert by_n[4]["witness_model"] == "platonic:icosahedron"

    code, obj = run_json(
        capsys, "batch", "pseudofinite", "--nmax", "5",
        "--family", "platonic:octahedron",
    )
    assert code == 1 and not obj["complete"]


def test_batch_family_file_and_specs(capsys, tmp_path):
    path = tmp_path / "f2.json"
    run(capsys, "gen", "farey", "--stages", "2", "--out", str(path))
    code, obj = run_json(
        capsys, "batch", "pseudofinite", "--nmax", "2",
        "--family", f"torus:5x5,farey:3,{path}",
    )
    assert code == 0 and obj["complete"]
    code, _, err = run(capsys, "batch", "pseudofinite", "--nmax", "2",
                       "--family", " , ")
    assert code == 2 and "family" in err


def test_bad_file_inputs(capsys, tmp_path):
    missing = tmp_path / "nope.json"
    assert run(capsys, "check", "phi0", str(missing))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "check", "phi0", str(bad))[0] == 2
    weird = tmp_path / "weird.json"
    weird.write_text(json.dumps({"foo": 1}))
    code, _, err = run(capsys, "check", "phi0", str(weird))
    assert code == 2 and "schema" in err


def test_bad_flags_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["gen", "torus", "--rows", "5"]) == 2


def test_verbose_stderr(capsys):
    code, _, err = run(capsys, "--verbose", "gen", "torus",
                       "--rows", "5", "--cols", "5")
    assert code == 0 and "25 vertices" in err
