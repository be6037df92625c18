"""Deterministic uniform sampling."""

from __future__ import annotations

import pytest

from dyckpeaks import (
    EmptySupport,
    enumerate_paths_with_peaks,
    parse_path,
    sample_uniform,
    stats,
)
from dyckpeaks.sampling import _Sha256Stream


class TestStream:
    def test_deterministic(self):
        a = _Sha256Stream(seed=1, index=0)
        b = _Sha256Stream(seed=1, index=0)
        assert [a.getrandbits(13) for _ in range(50)] == [
            b.getrandbits(13) for _ in range(50)
        ]

    def test_seed_and_index_matter(self):
        base = [_Sha256Stream(7, 0).getrandbits(64) for _ in range(1)]
        assert base != [_Sha256Stream(8, 0).getrandbits(64)]
        assert base != [_Sha256Stream(7, 1).getrandbits(64)]

    def test_randbelow_range(self):
        stream = _Sha256Stream(3, 0)
        for bound in (1, 2, 3, 10, 1000, 10**40):
            for _ in range(20):
                assert 0 <= stream.randbelow(bound) < bound

    def test_randbelow_one_is_free(self):
        stream = _Sha256Stream(3, 0)
        assert stream.randbelow(1) == 0
        assert stream._counter == 0

    def test_negative_seed_is_reduced(self):
        assert _Sha256Stream(-1, 0).getrandbits(64) == _Sha256Stream(
            2**64 - 1, 0
        ).getrandbits(64)

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            _Sha256Stream(0, 0).randbelow(0)


class TestSampleUniform:
    def test_unique_support_element(self):
        assert [p.text for p in sample_uniform(1, 1, seed=7, count=5)] == [
            "UUDD"
        ] * 5

    def test_deterministic_and_prefix_stable(self):
        full = [p.text for p in sample_uniform(2, 2, seed=11, count=40)]
        again = [p.text for p in sample_uniform(2, 2, seed=11, count=40)]
        prefix = [p.text for p in sample_uniform(2, 2, seed=11, count=10)]
        assert full == again
        assert full[:10] == prefix

    def test_seed_changes_stream(self):
        a = [p.text for p in sample_uniform(3, 3, seed=1, count=30)]
        b = [p.text for p in sample_uniform(3, 3, seed=2, count=30)]
        assert a != b

    def test_samples_are_valid_with_right_statistics(self):
        for path in sample_uniform(3, 2, seed=5, count=300):
            parse_path(path.text)  # validator
            assert path.semilength == 5
            assert stats(path).peak_count == 2

    def test_support_is_the_full_class(self):
        support = {p.text for p in sample_uniform(2, 2, seed=9, count=2000)}
        expected = {p.text for p in enumerate_paths_with_peaks(4, 2)}
        assert len(expected) == 6
        assert support == expected


class TestErrors:
    def test_empty_support(self):
        with pytest.raises(EmptySupport):
            sample_uniform(0, 1, seed=0, count=1)
        with pytest.raises(EmptySupport):
            sample_uniform(1, 0, seed=0, count=1)

    def test_negative_count(self):
        with pytest.raises(ValueError):
            sample_uniform(1, 1, seed=0, count=-1)

    def test_zero_count_is_empty(self):
        assert list(sample_uniform(1, 1, seed=0, count=0)) == []
