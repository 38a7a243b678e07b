"""
Unit Tests for Matrix IO Client

Tests the [re, im] matrix format, inline and file input, and report files.
"""

import json

import numpy as np
import pytest

from clients.matrix_io import (
    decode_matrix,
    encode_matrix,
    load_matrix,
    read_report,
    to_json_line,
    write_report,
)
from core.errors import ContractViolation


class TestMatrixFormat:
    """Test encoding and decoding."""

    def test_encode(self):
        assert encode_matrix(np.array([[1, 1j]])) == [[[1.0, 0.0], [0.0, 1.0]]]

    def test_decode_pairs(self):
        M = decode_matrix([[[1, 0], [0, 2]], [[0, -1], [3, 0]]])
        np.testing.assert_array_equal(M, [[1, 2j], [-1j, 3]])

    def test_plain_real_matrix(self):
        M = decode_matrix([[1, 0], [2, -1]])
        assert M.dtype == complex
        np.testing.assert_array_equal(M, [[1, 0], [2, -1]])

    def test_vector_mode(self):
        """A 2-d pair array is a real 2x2 matrix unless vector=True."""
        data = [[1, 0], [0, 1]]
        assert decode_matrix(data).shape == (2, 2)
        np.testing.assert_array_equal(decode_matrix(data, vector=True), [1, 1j])

    @pytest.mark.parametrize("data", [[[1, 2], [3]], "abc", [[[[1]]]]])
    def test_rejects_bad_data(self, data):
        with pytest.raises(ContractViolation):
            decode_matrix(data)


class TestLoadMatrix:
    """Test inline JSON and file input."""

    def test_inline(self):
        np.testing.assert_array_equal(load_matrix("[[1, 0], [0, -1]]"), np.diag([1, -1]))

    def test_file(self, tmp_path):
        path = tmp_path / "y.json"
        path.write_text(json.dumps(encode_matrix(np.array([[1, 1], [0, -1]]))), encoding="utf-8")
        np.testing.assert_array_equal(load_matrix(path), [[1, 1], [0, -1]])

    def test_invalid_json(self):
        with pytest.raises(ContractViolation):
            load_matrix("[[1, 0], [0,")


class TestReports:
    """Test report files and JSON lines."""

    def test_write_and_read(self, tmp_path):
        path = write_report({"passed": True, "suites": []}, tmp_path / "nested" / "report.json")
        assert path.exists()
        assert read_report(path) == {"passed": True, "suites": []}

    def test_missing_report(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_report(tmp_path / "absent.json")

    def test_json_line_is_compact(self):
        line = to_json_line({"name": "liealg.a", "pass": True})
        assert line == '{"name":"liealg.a","pass":true}'
        assert "\n" not in line
