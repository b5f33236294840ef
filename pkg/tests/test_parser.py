"""
Tests for parser utilities.
"""
import pytest

from src.utils.parser import ValueParser


class TestValueParser:
    """Test cases for ValueParser."""

    def test_clean_text(self):
        """Test text cleaning functionality."""
        assert ValueParser.clean_text("  hello  world  ") == "hello world"
        assert ValueParser.clean_text("1_000_000") == "1000000"
        assert ValueParser.clean_text("1000  # first checkpoint") == "1000"
        assert ValueParser.clean_text("") == ""
        assert ValueParser.clean_text(None) == ""

    @pytest.mark.parametrize("text,expected", [
        ("1000000", 10 ** 6),
        ("1e6", 10 ** 6),
        ("10^6", 10 ** 6),
        ("10**6", 10 ** 6),
        ("2^20", 2 ** 20),
        ("1_000", 1000),
        ("0", 0),
        ("10^30", 10 ** 30),
    ])
    def test_parse_integer(self, text, expected):
        """Test the accepted integer spellings."""
        assert ValueParser.parse_integer(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "-5", "1.5", "1e-3"])
    def test_parse_integer_invalid(self, text):
        """Test that malformed integers are rejected."""
        with pytest.raises(ValueError):
            ValueParser.parse_integer(text)

    def test_parse_lists(self):
        """Test comma-separated integer and float lists."""
        assert ValueParser.parse_int_list("10,100, 1e3") == [10, 100, 1000]
        assert ValueParser.parse_int_list("2,") == [2]
        assert ValueParser.parse_float_list("1e4,1e6") == [1e4, 1e6]
        with pytest.raises(ValueError):
            ValueParser.parse_int_list(",")

    def test_ratio_grid(self):
        """Test geometric grids always ending at x_max."""
        assert ValueParser.ratio_grid(10 ** 4, 10) == [1000, 10 ** 4]
        assert ValueParser.ratio_grid(5000, 2) == [1000, 2000, 4000, 5000]
        assert ValueParser.ratio_grid(500, 2) == [500]
        with pytest.raises(ValueError):
            ValueParser.ratio_grid(10 ** 4, 1.0)

    def test_load_grid_file(self, tmp_path):
        """Test grid files with comments and blank lines."""
        path = tmp_path / "grid.txt"
        path.write_text("# checkpoints\n1000\n\n10^4  # ten thousand\n1e5\n")
        assert ValueParser.load_grid_file(str(path)) == [1000, 10 ** 4, 10 ** 5]
