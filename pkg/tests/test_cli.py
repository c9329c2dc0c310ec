import json

from token_covers.cli import main


def run(*args):
    return main(list(args))


def test_build_token_star(tmp_path):
    assert run("build", "--token", "star:5", "--k", "3", "--out", str(tmp_path)) == 0
    payload = json.loads((tmp_path / "token_star5_k3.json").read_text())
    assert payload["vertices"] == 20
    assert (tmp_path / "token_star5_k3.dot").exists()


def test_build_johnson(tmp_path):
    assert run("build", "--johnson", "4", "2", "--out", str(tmp_path)) == 0
    payload = json.loads((tmp_path / "johnson_4_2.json").read_text())
    assert payload["vertices"] == 6


def test_build_token_dot_only(tmp_path):
    assert run("build", "--token", "complete:6", "--k", "2",
               "--format", "dot", "--out", str(tmp_path)) == 0
    text = (tmp_path / "token_complete6_k2.dot").read_text()
    node_lines = [l for l in text.splitlines() if "[label=" in l and "--" not in l]
    assert len(node_lines) == 15
    assert not (tmp_path / "token_complete6_k2.json").exists()


def test_build_theorem1_base_dot(tmp_path):
    assert run("build", "--theorem1-base", "6", "--format", "dot",
               "--out", str(tmp_path)) == 0
    text = (tmp_path / "theorem1_base_6.dot").read_text()
    edge_lines = [l for l in text.splitlines() if "--" in l]
    node_lines = [l for l in text.splitlines() if "[label=" in l and "--" not in l]
    assert len(node_lines) == 3
    assert len(edge_lines) == 14
    assert all("label=" in l for l in edge_lines)  # voltage labels


def test_build_requires_a_target(tmp_path):
    assert run("build", "--out", str(tmp_path)) == 2


def test_build_bad_family(tmp_path):
    assert run("build", "--family", "torus:3", "--out", str(tmp_path)) == 2


def test_verify_theorem1_single(tmp_path):
    assert run("verify-theorem1", "--n", "6", "--out", str(tmp_path)) == 0
    payload = json.loads((tmp_path / "theorem1_n6.json").read_text())
    assert payload["passed"] is True
    assert payload["schema_version"] == 1


def test_verify_theorem1_range(tmp_path):
    assert run("verify-theorem1", "--n", "4..10", "--out", str(tmp_path)) == 0
    names = sorted(p.name for p in tmp_path.glob("theorem1_n*.json"))
    assert names == ["theorem1_n10.json", "theorem1_n4.json",
                     "theorem1_n6.json", "theorem1_n8.json"]


def test_verify_theorem1_odd_rejected(tmp_path):
    assert run("verify-theorem1", "--n", "7", "--out", str(tmp_path)) == 2


def test_zz_complete(tmp_path):
    assert run("zz", "--family", "complete:5", "--k", "2..4", "--out", str(tmp_path)) == 0
    assert len(list(tmp_path.glob("zz_complete5_k*.json"))) == 3


def test_zz_star(tmp_path):
    assert run("zz", "--family", "star:4", "--k", "2..4", "--out", str(tmp_path)) == 0


def test_zz_negative_control(tmp_path):
    assert run("zz", "--family", "path:4", "--k", "2", "--out", str(tmp_path)) == 0
    payload = json.loads((tmp_path / "zz_path4_k2.json").read_text())
    predicted = [e for e in payload["evidence"]
                 if e["label"] == "predicted_edge_transitive"][0]["value"]
    assert predicted is False and payload["passed"] is True


def test_conjecture_1(tmp_path):
    assert run("conjecture", "1", "--n", "3", "--out", str(tmp_path)) == 0
    payload = json.loads((tmp_path / "conjecture1_n3.json").read_text())
    assert payload["status"] == "completed"


def test_conjecture_1_n5(tmp_path):
    assert run("conjecture", "1", "--n", "5", "--out", str(tmp_path)) == 0
    payload = json.loads((tmp_path / "conjecture1_n5.json").read_text())
    assert payload["status"] == "completed"
    candidates = [e for e in payload["evidence"]
                  if e["label"] == "verified_candidates"][0]["value"]
    assert candidates and all(c["base_vertices"] == 2 for c in candidates)


def test_conjecture_2_divisibility(tmp_path):
    assert run("conjecture", "2", "--n", "4", "--out", str(tmp_path)) == 2


def test_conjecture_budget_exit_code(tmp_path):
    assert run("conjecture", "1", "--n", "3", "--budget", "3",
               "--out", str(tmp_path)) == 3


def test_usage_error_exit_code():
    assert run("no-such-command") == 2


def test_byte_identical_reruns(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for out in (a, b):
        assert run("verify-theorem1", "--n", "6", "--out", str(out)) == 0
        assert run("zz", "--family", "complete:4", "--k", "2", "--out", str(out)) == 0
        assert run("build", "--token", "star:4", "--k", "2", "--out", str(out)) == 0
        assert run("conjecture", "1", "--n", "3", "--out", str(out)) == 0
    for name in ("theorem1_n6.json", "zz_complete4_k2.json",
                 "token_star4_k2.json", "token_star4_k2.dot",
                 "conjecture1_n3.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "caps.conf"
    cfg.write_text("# caps\nmax_vertices=5\n")
    assert run("build", "--token", "complete:6", "--k", "2",
               "--config", str(cfg), "--out", str(tmp_path)) == 2
    assert run("build", "--token", "complete:6", "--k", "2",
               "--config", str(cfg), "--max-vertices", "50",
               "--out", str(tmp_path)) == 0


def test_bad_config_rejected(tmp_path):
    cfg = tmp_path / "caps.conf"
    cfg.write_text("mystery=1\n")
    assert run("build", "--family", "cycle:3", "--config", str(cfg),
               "--out", str(tmp_path)) == 2


def test_out_dir_env_default(tmp_path, monkeypatch):
    monkeypatch.setenv("TOKEN_COVER_OUT", str(tmp_path / "envout"))
    assert run("build", "--family", "cycle:3") == 0
    assert (tmp_path / "envout" / "cycle3.json").exists()
