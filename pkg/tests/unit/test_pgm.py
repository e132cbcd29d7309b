"""Unit tests for the binary PGM codec."""

from pathlib import Path

import numpy as np
import pytest

from src.denoise.pgm import encode_pgm, parse_pgm, pgm_read, pgm_write
from src.errors import PgmParseError
from src.models.image import GrayImage


class TestParsePgm:
    """Tests for parse_pgm."""

    def test_hand_written_file(self) -> None:
        """A minimal 3x2 file decodes row by row."""
        img = parse_pgm(b"P5\n3 2\n255\n" + bytes([0, 1, 2, 253, 254, 255]))
        assert img.shape == (2, 3)
        np.testing.assert_array_equal(img.pixels, [[0, 1, 2], [253, 254, 255]])

    def test_comments_and_whitespace(self) -> None:
        """Comments and mixed whitespace in the header are skipped."""
        data = b"P5 # made by hand\n2\t2\n# maxval next\n255\r" + bytes([9, 8, 7, 6])
        img = parse_pgm(data)
        np.testing.assert_array_equal(img.pixels, [[9, 8], [7, 6]])

    def test_sixteen_bit_rejected(self) -> None:
        """maxval 65535 is reported at the end of the size fields."""
        with pytest.raises(PgmParseError) as info:
            parse_pgm(b"P5\n3 2\n65535\n" + bytes(12))
        assert info.value.offset == 6

    def test_bad_magic(self) -> None:
        """Only P5 is accepted."""
        with pytest.raises(PgmParseError) as info:
            parse_pgm(b"P2\n3 2\n255\n0 1 2 3 4 5")
        assert info.value.offset == 0

    @pytest.mark.parametrize("data", [b"P52 2\n255\n" + bytes(4), b"P5"])
    def test_magic_needs_whitespace(self, data: bytes) -> None:
        """P5 must be followed by whitespace before the width."""
        with pytest.raises(PgmParseError) as info:
            parse_pgm(data)
        assert info.value.offset == 2

    def test_truncated_payload(self) -> None:
        """A short payload reports where the data ran out."""
        header = b"P5\n3 2\n255\n"
        with pytest.raises(PgmParseError) as info:
            parse_pgm(header + bytes(5))
        assert info.value.offset == len(header) + 5

    def test_truncated_header(self) -> None:
        """A header cut before maxval is rejected."""
        with pytest.raises(PgmParseError):
            parse_pgm(b"P5\n3 2")

    def test_non_numeric_size(self) -> None:
        """Size fields must be decimal integers."""
        with pytest.raises(PgmParseError):
            parse_pgm(b"P5\nthree 2\n255\n" + bytes(6))


class TestWritePgm:
    """Tests for encode_pgm and the file helpers."""

    def test_header_and_rounding(self) -> None:
        """Values are rounded to the nearest byte."""
        data = encode_pgm(GrayImage(pixels=[[0.4, 12.6], [254.6, 255.0]]))
        assert data == b"P5\n2 2\n255\n" + bytes([0, 13, 255, 255])

    def test_file_round_trip(self, pgm_file: Path, checkerboard_image: GrayImage) -> None:
        """Integer images survive a write and read."""
        np.testing.assert_array_equal(pgm_read(pgm_file).pixels, checkerboard_image.pixels)

    def test_write_creates_directories(self, tmp_path: Path, random_image: GrayImage) -> None:
        """Missing parent directories are created."""
        path = tmp_path / "nested" / "dir" / "out.pgm"
        pgm_write(random_image, path)
        assert pgm_read(path).shape == random_image.shape
