import json

import pytest

from stabkit.cli import main
from stabkit.fileio import load_graph, load_points, write_json
from stabkit.geom_graph import stabbing_number
from stabkit.verify import Claim, VerificationError, VerificationReport, run


def _write_points(path, pts):
    write_json(path, {"points": pts})
    return str(path)


SQUARE = [[0, 0], [4, 0], [4, 4], [0, 4]]


class TestReport:
    def test_passed_iff_all_claims_pass(self):
        r = VerificationReport("x")
        assert not r.passed  # nothing checked yet
        r.claim("a", "==", 3, 3)
        r.claim("b", "<=", 2, 1)
        assert r.passed
        r.claim("c", ">=", 3, 2)
        assert not r.passed

    def test_round_trip(self):
        r = VerificationReport("lemma-x", counts={"trees": 5}, input_hashes={"P": "ab"})
        r.claim("a", ">=", 3, 4)
        r.claim("b", "==", 1, 0)
        d = json.loads(json.dumps(r.to_dict()))
        assert d["schema"] == 1 and d["passed"] is False
        back = VerificationReport.from_dict(d)
        assert back == r
        assert [c.passed for c in back.claims] == [True, False]

    def test_unknown_schema(self):
        d = VerificationReport("x").to_dict()
        d["schema"] = 2
        with pytest.raises(VerificationError):
            VerificationReport.from_dict(d)

    def test_claim_relations(self):
        assert Claim("a", "<=", 23, 18).passed
        assert not Claim("a", "==", 4, 3).passed


class TestRun:
    def test_matching(self):
        r = run("lemma-5.1")
        assert r.passed and r.counts["explored_matchings"] == 945

    def test_triangulation(self):
        r = run("lemma-4.1")
        assert r.passed and r.counts["triangulations_P"] > 0

    def test_monotone_paths(self):
        r = run("corollary-2.2", trials=10, seed=1)
        assert r.passed and r.counts["trials"] == 10

    def test_tree_family_range(self):
        r = run("lemma-3.4", n_min=10, n_max=11)
        assert r.passed and r.counts["instances"] == 2

    def test_deterministic_apart_from_time(self):
        a, b = run("lemma-5.1").to_dict(), run("lemma-5.1").to_dict()
        a.pop("seconds"), b.pop("seconds")
        assert a == b

    @pytest.mark.parametrize(
        "target, kw",
        [("lemma-4.1", {"n_small": 8}), ("lemma-5.1", {"k": 9}), ("corollary-2.2", {"n_max": 12}),
         ("lemma-3.4", {"n_min": 8}), ("lemma-9.9", {})],
    )
    def test_infeasible_requests_refused(self, target, kw):
        with pytest.raises(VerificationError):
            run(target, **kw)


class TestCli:
    def test_lines(self, tmp_path, capsys):
        assert main(["lines", _write_points(tmp_path / "p.json", SQUARE)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[-1] == "total: 6" and "[0, 1] | [2, 3]" in out

    def test_stab(self, tmp_path, capsys):
        write_json(tmp_path / "g.json", {"points": SQUARE, "edges": [[0, 2], [1, 3]]})
        assert main(["stab", str(tmp_path / "g.json")]) == 0
        out = capsys.readouterr().out
        assert "stabbing number: 2" in out and "partition:" in out

    @pytest.mark.parametrize("cls", ["tree", "path", "matching", "triangulation"])
    def test_minstab(self, tmp_path, capsys, cls):
        f = _write_points(tmp_path / "p.json", SQUARE)
        assert main(["minstab", "--class", cls, f]) == 0
        rep = json.loads(capsys.readouterr().out)
        assert set(rep) >= {"optimum", "witness_edges", "explored", "seconds"}

    def test_minstab_bnb_agrees(self, tmp_path, capsys):
        f = _write_points(tmp_path / "p.json", [[0, 0], [9, 1], [4, 7], [2, 3], [7, 5], [-2, 6]])
        main(["minstab", f])
        ex = json.loads(capsys.readouterr().out)
        main(["minstab", "--mode", "bnb", "--witness-cap", "1", f])
        bb = json.loads(capsys.readouterr().out)
        assert ex["optimum"] == bb["optimum"] and ex["explored"] == 6**4

    def test_exhaustive_tree_refused_above_12(self, tmp_path, capsys):
        f = _write_points(tmp_path / "p.json", [[i, i * i] for i in range(13)])
        assert main(["minstab", f]) == 2
        assert "branch-and-bound" in capsys.readouterr().err

    @pytest.mark.parametrize("kind, extra", [("tree9", []), ("tree", ["--n", "10"]),
                                             ("tri", ["--n", "4"]), ("matching", ["--k", "5"])])
    def test_gen(self, tmp_path, kind, extra):
        out = tmp_path / kind
        assert main(["gen", kind, *extra, "--out", str(out)]) == 0
        for name in ("small.json", "big.json", "witness.json", "validation.json"):
            assert (out / name).exists()
        W = load_graph(out / "witness.json")
        assert W.base == load_points(out / "big.json")
        assert json.loads((out / "validation.json").read_text())["passed"] is True
        assert stabbing_number(W) <= 23

    def test_gen_missing_size(self, tmp_path, capsys):
        assert main(["gen", "tri", "--out", str(tmp_path)]) == 2
        assert "--n" in capsys.readouterr().err

    def test_gen_bad_size(self, tmp_path):
        assert main(["gen", "matching", "--k", "3", "--out", str(tmp_path)]) == 2

    def test_verify_writes_report(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["verify", "lemma-5.1", "--k", "5", "--out", str(out)]) == 0
        assert "lemma-5.1: PASS" in capsys.readouterr().out
        rep = VerificationReport.from_dict(json.loads(out.read_text()))
        assert rep.passed and rep.counts["explored_matchings"] == 945

    def test_verify_seeded_sweep(self, capsys):
        assert main(["verify", "corollary-2.2", "--seed", "4", "--trials", "5", "--n", "6"]) == 0

    def test_verify_infeasible(self, capsys):
        assert main(["verify", "lemma-4.1", "--n", "20"]) == 2

    def test_svg(self, tmp_path):
        write_json(tmp_path / "g.json", {"points": SQUARE, "edges": [[0, 2]]})
        out = tmp_path / "g.svg"
        assert main(["svg", str(tmp_path / "g.json"), "--out", str(out), "--overlay"]) == 0
        text = out.read_text()
        assert text.startswith("<?xml") and 'class="stab"' in text

    def test_bad_input(self, tmp_path, capsys):
        (tmp_path / "bad.json").write_text('{"points": [[0, 0], [1, "a"]]}')
        assert main(["lines", str(tmp_path / "bad.json")]) == 2
        assert "points[1]" in capsys.readouterr().err

    def test_collinear_input(self, tmp_path, capsys):
        f = _write_points(tmp_path / "p.json", [[0, 0], [1, 1], [2, 2]])
        assert main(["lines", f]) == 2
        assert "general position" in capsys.readouterr().err


def test_nine_point_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "lemma-3.2", "--out", str(out)]) == 0
    rep = VerificationReport.from_dict(json.loads(out.read_text()))
    assert rep.passed
    assert rep.counts["explored_trees"] == 4_782_969 and rep.counts["partitions_P1"] == 36
