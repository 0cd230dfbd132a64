import pytest

from platknot.cli import main

from conftest import data_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_trefoil(capsys):
    code, out, _ = run(
        capsys, "count", "--knot", data_path("trefoil.pd"),
        "--group", data_path("s3.grp"), "--class", "t",
    )
    assert code == 0 and out.strip() == "9"


def test_count_unknot_a5(capsys):
    code, out, _ = run(
        capsys, "count", "--knot", data_path("unknot.pd"),
        "--group", data_path("a5.grp"), "--class", "5c",
    )
    assert code == 0 and out.strip() == "12"


def test_q_trefoil(capsys):
    code, out, _ = run(
        capsys, "q", "--knot", data_path("trefoil.pd"),
        "--group", data_path("s3.grp"), "--class", "t",
    )
    assert code == 0
    row = out.splitlines()[1].split("\t")
    assert row == ["3", "2", "6", "1", "2", "6"]


def test_plat_count(capsys):
    code, out, _ = run(
        capsys, "plat-count", "--braid", data_path("trefoil.braid"),
        "--plat", data_path("trefoil.plat"),
        "--group", data_path("s3.grp"), "--class", "t",
    )
    assert code == 0 and out.strip() == "9"


def test_density_deterministic_and_plot(capsys, tmp_path):
    fig = tmp_path / "density.png"
    argv = [
        "density", "--extension", data_path("sl25_a5.ext"), "--class", "2a",
        "--kmax", "6", "--plot", str(fig), "--seed", "7",
    ]
    code, out1, _ = run(capsys, *argv)
    assert code == 0 and fig.exists() and fig.stat().st_size > 0
    code, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_orbits_plot(capsys, tmp_path):
    fig = tmp_path / "orbits.png"
    code, out, _ = run(
        capsys, "orbits", "--k", "2", "--extension", data_path("sl25_a5.ext"),
        "--class", "5a", "--stratum", "R", "--plot", str(fig),
    )
    assert code == 0 and fig.exists()
    assert "# orbits\t1" in out


def test_verify_cli(capsys):
    code, out, _ = run(
        capsys, "verify", "--circuit", data_path("planted_k2_w2.zsat"),
        "--registry", data_path("gadgets"), "--smaller", data_path("s3.grp") + ":t",
    )
    assert code == 0
    assert "three_way_equal\tTrue" in out
    assert "q_smaller\ts3:2a\t0" in out


def test_compile_cli(capsys, tmp_path):
    out_pd = tmp_path / "kz.pd"
    code, out, _ = run(
        capsys, "compile", "--circuit", data_path("identity_k3_w1.zsat"),
        "--registry", data_path("gadgets"), "-o", str(out_pd),
    )
    assert code == 0
    text = out_pd.read_text()
    assert "meridian" in text


def test_gadget_search_cli(capsys):
    code, out, _ = run(
        capsys, "gadget-search", "--k", "2", "--group", data_path("s3.grp"),
        "--class", "t", "--plant", "1 1", "--budget-depth", "4",
    )
    assert code == 0 and out.startswith("braid 4:")


def test_domain_error_exit_code(capsys):
    code, _, err = run(
        capsys, "count", "--knot", data_path("trefoil.pd"),
        "--group", data_path("s3.grp"), "--class", "zz",
    )
    assert code == 1
    assert "UnknownClass" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(
        capsys, "count", "--knot", "no/such/file.pd",
        "--group", data_path("s3.grp"), "--class", "t",
    )
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--nonsense"])
    assert exc.value.code == 2


def test_schur_cli(capsys):
    code, out, _ = run(
        capsys, "schur", "--tuple", "[+2 -18 +2 -18]",
        "--extension", data_path("sl25_a5.ext"), "--class", "5a",
    )
    assert code == 0 and out.strip() == "0"
