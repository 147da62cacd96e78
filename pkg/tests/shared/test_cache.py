"""Tests for the grow-only memo table."""
from concurrent.futures import ThreadPoolExecutor

import pytest

from polyeuler.shared.cache import GrowingTable


def _fibonacci():
    return GrowingTable([0, 1], lambda values: values[-1] + values[-2])


class TestGrowingTable:
    def test_extends_on_demand(self):
        table = _fibonacci()
        assert table[10] == 55
        assert len(table) == 11

    def test_values_in_order(self):
        table = _fibonacci()
        assert [table[i] for i in range(6)] == [0, 1, 1, 2, 3, 5]

    def test_negative_index(self):
        with pytest.raises(IndexError):
            _fibonacci()[-1]

    def test_concurrent_readers_agree(self):
        table = _fibonacci()
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda i: table[i], [200] * 16))
        assert len(set(results)) == 1
        assert len(table) == 201
