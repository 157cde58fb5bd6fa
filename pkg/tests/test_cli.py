"""Command-line interface: dispatch, output, and exit codes."""

import pytest

from z2bord.catalog import GEN_1, REJECTED_SINGLETON
from z2bord.cli import main
from z2bord.repalg import render_polynomial


@pytest.fixture
def gen1_file(tmp_path):
    path = tmp_path / "gen1.poly"
    path.write_text(render_polynomial(GEN_1))
    return str(path)


@pytest.fixture
def rejected_file(tmp_path):
    path = tmp_path / "rejected.poly"
    path.write_text(render_polynomial(REJECTED_SINGLETON))
    return str(path)


class TestCheck:
    def test_accepted(self, gen1_file, capsys):
        assert main(["check", gen1_file]) == 0
        assert capsys.readouterr().out.startswith("accepted")

    def test_rejected(self, rejected_file, capsys):
        assert main(["check", rejected_file]) == 1
        out = capsys.readouterr().out
        assert out.startswith("rejected")
        assert "rho" in out

    def test_missing_file(self, capsys):
        assert main(["check", "/no/such/file.poly"]) == 2
        assert "error" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.poly"
        path.write_text("100,0x0\n")
        assert main(["check", str(path)]) == 2


class TestDim:
    def test_headline_value(self, capsys):
        assert main(["dim", "--n", "5", "--k", "3"]) == 0
        out = capsys.readouterr().out
        assert out.strip().splitlines()[-1] == "77"
        assert "faithful=329" in out and "constraints=490" in out

    def test_trivial_range(self, capsys):
        assert main(["dim", "--n", "1", "--k", "2"]) == 0
        assert capsys.readouterr().out.strip().splitlines()[-1] == "0"

    def test_bad_flags(self, capsys):
        assert main(["dim", "--n", "5"]) == 2
        assert main(["dim", "--n", "-1", "--k", "2"]) == 2


class TestOrbitAndSpan:
    def test_orbit(self, gen1_file, capsys):
        assert main(["orbit", gen1_file]) == 0
        out = capsys.readouterr().out
        assert "orbit_size=7" in out and "stabilizer_size=24" in out

    def test_orbit_elements_listing(self, gen1_file, capsys):
        assert main(["orbit", gen1_file, "--elements"]) == 0
        assert capsys.readouterr().out.count("--") == 7

    def test_span_with_orbit_expansion(self, gen1_file, capsys):
        assert main(["span", gen1_file, "--expand-orbits"]) == 0
        assert "span_dimension=7" in capsys.readouterr().out

    def test_span_plain(self, gen1_file, capsys):
        assert main(["span", gen1_file, gen1_file]) == 0
        assert "span_dimension=1" in capsys.readouterr().out


class TestGraphValidate:
    def test_valid(self, tmp_path, capsys):
        from z2bord.graphs import projective_space_graph, render_graph

        path = tmp_path / "rp3.graph"
        path.write_text(render_graph(projective_space_graph(3)))
        assert main(["graph-validate", str(path)]) == 0
        assert capsys.readouterr().out.startswith("valid")

    def test_invalid(self, tmp_path, capsys):
        path = tmp_path / "bad.graph"
        path.write_text("2 1\na b 10\nc d 01\n")
        assert main(["graph-validate", str(path)]) == 1
        assert capsys.readouterr().out.startswith("invalid")

    def test_malformed(self, tmp_path):
        path = tmp_path / "junk.graph"
        path.write_text("not a graph\n")
        assert main(["graph-validate", str(path)]) == 2


class TestSmallcover:
    @pytest.fixture
    def lam_file(self, tmp_path):
        from z2bord.catalog import SMALL_COVER_1

        path = tmp_path / "sc1.lam"
        rows = "\n".join(" ".join(map(str, r)) for r in SMALL_COVER_1["matrix"])
        path.write_text("1 4\n" + rows + "\n")
        return str(path)

    def test_fixed_polynomial(self, lam_file, capsys):
        assert main(["smallcover", "--polytope", "1x4", "--lambda", lam_file]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 10

    def test_restriction(self, lam_file, tmp_path, capsys):
        sub = tmp_path / "h.sub"
        sub.write_text("01111\n11010\n11001\n")
        assert main(["smallcover", "--polytope", "1x4", "--lambda", lam_file,
                     "--subgroup", str(sub)]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert len(out) == 10 and all(len(l.split(",")) == 5 for l in out)

    def test_polytope_mismatch(self, lam_file):
        assert main(["smallcover", "--polytope", "2x3", "--lambda", lam_file]) == 2

    def test_dependent_subgroup_rows(self, lam_file, tmp_path):
        sub = tmp_path / "h.sub"
        sub.write_text("01111\n01111\n11001\n")
        assert main(["smallcover", "--polytope", "1x4", "--lambda", lam_file,
                     "--subgroup", str(sub)]) == 2


class TestMilnor:
    def test_published_family(self, capsys):
        assert main(["milnor", "--m", "2", "--n", "4", "--r", "3",
                     "--sets", "2;12;23;123"]) == 0
        out = capsys.readouterr().out
        assert out == render_polynomial(GEN_1)

    def test_bad_family(self, capsys):
        assert main(["milnor", "--m", "2", "--n", "4", "--r", "3",
                     "--sets", "2;2;23;123"]) == 2

    def test_search(self, capsys):
        assert main(["milnor-search", "--m", "2", "--n", "4", "--r", "3"]) == 0
        out = capsys.readouterr().out
        assert "families_tried=840" in out
        assert "unreached_orbits=3,4" in out


class TestReproduce:
    def test_all_checkpoints_pass(self, capsys):
        assert main(["reproduce-paper"]) == 0
        out = capsys.readouterr().out
        lines = [l for l in out.splitlines() if ":PASS" in l or ":FAIL" in l]
        assert len(lines) >= 40
        assert all(l.endswith(":PASS") for l in lines)
        assert "all checkpoints passed" in out

    def test_emit_data(self, tmp_path, capsys):
        out_dir = tmp_path / "data"
        assert main(["reproduce-paper", "--emit-data", str(out_dir)]) == 0
        names = {p.name for p in out_dir.iterdir()}
        assert "generator_1.poly" in names
        assert "small_cover_1.lam" in names
        assert "projective_3.graph" in names

    def test_deterministic(self, capsys):
        main(["reproduce-paper"])
        first = capsys.readouterr().out
        main(["reproduce-paper"])
        assert capsys.readouterr().out == first


class TestDispatch:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_no_command(self, capsys):
        assert main([]) == 2
