import pytest

from algebra import BinaryCode, WeightEnumerator
from formats import (
    FormatError,
    format_code,
    format_complex,
    format_registry,
    parse_code,
    parse_complex,
    parse_metadata,
    read_code,
    read_complex,
    read_enumerator,
    read_metadata,
    write_code,
    write_complex,
    write_enumerator,
    write_metadata,
)
from matching import reduce
from represent import balance, represent_code


class TestCodeFile:
    def test_parse_with_comments(self):
        code = parse_code("# small even code\n3 2\n110\n011  # second row\n")
        assert code == BinaryCode.from_strings(["110", "011"])

    def test_zero_code(self):
        code = parse_code("4 0\n")
        assert code.length == 4 and code.dimension == 0

    def test_format(self, even_code):
        assert format_code(even_code) == "3 2\n110\n011\n"

    def test_file_round_trip(self, tmp_path, even_code):
        path = tmp_path / "c.code"
        write_code(path, even_code)
        assert read_code(path) == even_code

    @pytest.mark.parametrize(
        "text",
        ["", "3\n110\n", "3 2\n110\n", "3 1\n1101\n", "3 1\n1a0\n", "0 0\n", "x 1\n110\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_code(text)

    def test_dependent_rows_keep_their_error_code(self):
        with pytest.raises(FormatError) as excinfo:
            parse_code("3 2\n110\n110\n")
        assert excinfo.value.code == "dependent"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FormatError) as excinfo:
            read_code(tmp_path / "absent.code")
        assert excinfo.value.code == "missing-file"


class TestComplexFile:
    def test_parse_without_weights(self):
        config, weights = parse_complex("0 1 2\n# comment\n2 1 3\n")
        assert config.triangles == ((0, 1, 2), (1, 2, 3))
        assert weights is None

    def test_parse_with_weights(self):
        config, weights = parse_complex("0 1 2 w=1\n1 2 3 w=0\n")
        assert weights == (1, 0)

    def test_mixed_weights_rejected(self):
        with pytest.raises(FormatError):
            parse_complex("0 1 2 w=1\n1 2 3\n")

    def test_bad_weight(self):
        with pytest.raises(FormatError):
            parse_complex("0 1 2 w=2\n")

    def test_duplicate_triangle(self):
        with pytest.raises(FormatError) as excinfo:
            parse_complex("0 1 2\n2 1 0\n")
        assert excinfo.value.code == "duplicate"

    def test_format_and_round_trip(self, tmp_path, tetrahedron):
        weights = (1, 0, 0, 1)
        assert format_complex(tetrahedron, weights).splitlines()[0] == "0 1 2 w=1"
        path = tmp_path / "t.complex"
        write_complex(path, tetrahedron, weights)
        assert read_complex(path) == (tetrahedron, weights)

    def test_weight_count_checked(self, tetrahedron):
        with pytest.raises(FormatError):
            format_complex(tetrahedron, [1])


def test_enumerator_file(tmp_path):
    path = tmp_path / "w.enum"
    w = WeightEnumerator({0: 1, 16: 2, 30: 1})
    write_enumerator(path, w)
    assert path.read_text() == "0 1\n16 2\n30 1\n"
    assert read_enumerator(path) == w
    path.write_text("0 one\n")
    with pytest.raises(FormatError):
        read_enumerator(path)


class TestMetadata:
    def test_round_trip(self, tmp_path, even_code):
        rep = balance(represent_code(even_code))
        path = tmp_path / "c.meta"
        write_metadata(path, rep)
        meta = read_metadata(path)
        assert (meta["n"], meta["d"], meta["m"], meta["e"], meta["doubled"]) == (3, 2, 4, 14, 0)
        assert meta["slots"] == {0: 0, 1: 1, 2: 2}
        assert meta["blocks"][0] == rep.block_indices(0)
        assert len(meta["blocks"][1]) == 16

    def test_unbalanced_exponent(self):
        meta = parse_metadata("e -\n")
        assert meta["e"] is None

    def test_unknown_line(self):
        with pytest.raises(FormatError):
            parse_metadata("colour blue\n")


def test_registry_lists_every_gadget(single_triangle):
    text = format_registry(reduce(single_triangle))
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    assert [line.split()[0] for line in lines] == ["triangle", "edge", "edge", "edge", "port", "port", "port"]
    assert lines[0].startswith("triangle 0 0 1 2 range 0 23 weight ")
