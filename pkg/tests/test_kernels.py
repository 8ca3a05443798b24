"""Backend parity: the compiled kernels must match the pure-Python ones
bit for bit (same operation order, contraction disabled in the build)."""

import math
import random

import pytest

from bezout_bezier import _kernels_py

compiled = pytest.importorskip(
    "bezout_bezier._kernels", reason="compiled kernels not built"
)


CASES = [
    (300, 21, 1.0),
    (300, 21, 9.0),
    (5, 5, 1.0),
    (1, 0, 2.5),
    (1, 1, 3.0),
    (60, 59, 41.0),
    (10**6, 2 * 10**5, 9.0),
    (10**6, 6 * 10**5, 9.0),
]


@pytest.mark.parametrize("p, q, radius", CASES)
def test_disk_enumeration_identical(p, q, radius):
    assert compiled.coprime_pairs_in_disk(p, q, radius) == (
        _kernels_py.coprime_pairs_in_disk(p, q, radius)
    )


@pytest.mark.parametrize("p, q, radius", CASES)
def test_envelope_scan_identical(p, q, radius):
    fast = compiled.envelope_scan(p, q, radius)
    slow = _kernels_py.envelope_scan(p, q, radius)
    assert len(fast) == len(slow)
    for row_fast, row_slow in zip(fast, slow):
        # exact: integers and bit-identical floats
        assert row_fast == row_slow


def test_bezout_identical_random():
    rng = random.Random(31)
    seen = 0
    while seen < 5000:
        r = rng.randint(1, 10**6)
        s = rng.randint(1, 10**6)
        if math.gcd(r, s) != 1:
            continue
        seen += 1
        assert compiled.bezout_normalized(r, s) == (
            _kernels_py.bezout_normalized(r, s)
        )


def test_bezout_box_and_identity_random():
    rng = random.Random(37)
    for backend in (compiled, _kernels_py):
        seen = 0
        while seen < 2000:
            r = rng.randint(1, 10**9)
            s = rng.randint(1, 10**9)
            if math.gcd(r, s) != 1:
                continue
            seen += 1
            a, b = backend.bezout_normalized(r, s)
            assert a * s - b * r == 1
            assert 0 < a <= r
            assert 0 <= b < s


def test_negative_radius_yields_empty():
    assert compiled.coprime_pairs_in_disk(10, 10, -1.0) == []
    assert _kernels_py.coprime_pairs_in_disk(10, 10, -1.0) == []
    assert compiled.envelope_scan(10, 3, -0.5) == []
    assert _kernels_py.envelope_scan(10, 3, -0.5) == []


def test_scan_tuples_match_single_call_ops():
    # batch rows must equal what the one-pair code paths produce
    from bezout_bezier import (
        Center,
        CoprimePair,
        EnvelopeParams,
        contact_parameter,
        endpoint_gaps,
    )

    p, q, eps = 50, 29, 5.0
    params = EnvelopeParams(Center(p, q), eps)
    for backend in (compiled, _kernels_py):
        for r, s, a, b, af, bf, t, gap_a, gap_b, _dev in backend.envelope_scan(
            p, q, eps - 1.0
        ):
            pair = CoprimePair(r, s)
            assert (af, bf) == (s - b, r - a)
            assert contact_parameter(pair) == t
            assert endpoint_gaps(pair, params) == (gap_a, gap_b)
