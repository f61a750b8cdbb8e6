import pytest

from algebra import BinaryCode
from core.checks import Check, CheckRegistry
from formats import read_complex, read_metadata, write_code, write_complex
from gadgets import GadgetRegistry
from main import main


@pytest.fixture
def run(tmp_path, capsys):
    def invoke(*argv: str) -> tuple[int, str, str]:
        status = main(["--config", str(tmp_path / "absent.yaml"), *argv])
        captured = capsys.readouterr()
        return status, captured.out, captured.err

    return invoke


@pytest.fixture
def even_code_file(tmp_path, even_code):
    path = tmp_path / "even.code"
    write_code(path, even_code)
    return path


def test_weight_enum_of_code(run, even_code_file):
    status, out, _ = run("weight-enum", "--code", str(even_code_file))
    assert status == 0
    assert out == "0 1\n2 3\n"


def test_represent_then_cycles(run, tmp_path, even_code_file):
    out_dir = tmp_path / "rep"
    status, out, _ = run("represent", str(even_code_file), "--out-dir", str(out_dir))
    assert status == 0
    assert out.split() == [str(out_dir / "delta.tri"), str(out_dir / "meta.txt")]
    meta = read_metadata(out_dir / "meta.txt")
    assert meta["e"] == 14
    assert meta["doubled"] == 0

    status, out, _ = run("weight-enum", "--cycles", str(out_dir / "delta.tri"))
    assert out == "0 1\n16 2\n30 1\n"

    status, out, _ = run("cycles", str(out_dir / "delta.tri"))
    assert status == 0
    assert out.splitlines()[0] == "dim 2"


def test_recover(run, tmp_path):
    wker = tmp_path / "wker.enum"
    wker.write_text("0 1\n16 2\n30 1\n")
    status, out, _ = run("recover", str(wker), "--e", "14", "--n", "3", "--d", "2")
    assert status == 0
    assert out == "0 1\n2 3\n"


def test_recover_rejects_small_modulus(run, tmp_path):
    wker = tmp_path / "wker.enum"
    wker.write_text("0 1\n")
    status, _, err = run("recover", str(wker), "--e", "2", "--n", "3", "--d", "0")
    assert status == 2
    assert err.startswith("ERROR unbalanced ")


def test_reduce_and_count_matchings(run, tmp_path, tetrahedron):
    source = tmp_path / "tetra.tri"
    write_complex(source, tetrahedron)
    out_dir = tmp_path / "red"
    status, _, _ = run("reduce", str(source), "--out-dir", str(out_dir))
    assert status == 0
    config, weights = read_complex(out_dir / "delta2.tri")
    assert sum(weights) == 4
    assert (out_dir / "registry.txt").read_text().startswith("# triangle gadgets\n")

    status, out, _ = run("weight-enum", "--matchings", str(out_dir / "delta2.tri"))
    assert status == 0
    assert out == "0 1\n4 1\n"


def test_gadget(run):
    status, out, _ = run("gadget", "sphere", "m=6")
    assert status == 0
    assert len(out.splitlines()) == 6

    status, _, err = run("gadget", "sphere", "m6")
    assert status == 2
    assert err.startswith("ERROR usage ")


def test_verify_passes_on_small_code(run, even_code_file):
    status, out, _ = run("verify", str(even_code_file))
    assert status == 0
    lines = out.splitlines()
    assert [line.split()[1].rstrip(":") for line in lines] == [
        "weight-polynomial",
        "cycle-bijection",
        "weight-law",
        "extended-polynomial",
        "blocks-in-cycles",
        "exponent-bound",
        "matching-bijection",
    ]
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_skips_matching_check_over_guard(run, tmp_path):
    path = tmp_path / "rep.code"
    write_code(path, BinaryCode.from_strings(["111"]))
    status, out, _ = run("--max-triangles", "100", "verify", str(path))
    assert status == 0
    assert out.splitlines()[-1].startswith("SKIP matching-bijection")


def test_missing_input_file(run, tmp_path):
    status, _, err = run("weight-enum", "--code", str(tmp_path / "nope.code"))
    assert status == 2
    assert err.startswith("ERROR missing-file ")


def test_malformed_code_file(run, tmp_path):
    path = tmp_path / "bad.code"
    path.write_text("3 1\n12x\n")
    status, _, err = run("weight-enum", "--code", str(path))
    assert status == 2
    assert err.startswith("ERROR format ")


def test_unknown_verb_is_one_error_line(run):
    status, out, err = run("no-such-verb")
    assert status == 2
    assert out == ""
    assert err.startswith("ERROR usage trireduce: ")
    assert "no-such-verb" in err
    assert len(err.splitlines()) == 1


def test_missing_required_option_is_one_error_line(run, tmp_path):
    status, _, err = run("recover", str(tmp_path / "w.txt"))
    assert status == 2
    assert err.startswith("ERROR usage trireduce recover: ")
    assert "--e, --n, --d" in err
    assert len(err.splitlines()) == 1


def test_gadget_list_shows_descriptions(run):
    status, out, _ = run("gadget", "--list")
    assert status == 0
    lines = out.splitlines()
    assert [line.split(":")[0] for line in lines] == GadgetRegistry.list_gadgets()
    assert "chain: parity chain" in out

    status, _, err = run("gadget")
    assert status == 2
    assert err.startswith("ERROR usage ")


def test_failed_check_exits_with_verification_error(run, even_code_file):
    @CheckRegistry.register("never-holds")
    class NeverHolds(Check):
        name = "never-holds"

        def run(self, ctx):
            return self.failed("counterexample")

    try:
        status, out, err = run("verify", str(even_code_file))
    finally:
        CheckRegistry._checks.pop("never-holds")
    assert status == 1
    assert out.splitlines()[0] == "FAIL never-holds: counterexample"
    assert err == "ERROR verification failed checks: never-holds\n"
