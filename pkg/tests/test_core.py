import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import K2_WITNESS_ROWS
from gtw.core import (
    Content,
    GTPattern,
    Partition,
    add_patterns,
    as_rational,
    denominator,
    pattern_from_dict,
    pattern_from_json,
    scale_pattern,
    validate_pattern,
    zero_pattern,
)
from gtw.errors import InterlacingViolation, InvalidPartition, MalformedPattern, SizeMismatch


def test_single_entry_pattern():
    p = validate_pattern([[5]])
    assert p.n == 1 and p.x(1, 1) == 5


def test_two_rows():
    validate_pattern([[3, 0], [1]])
    with pytest.raises(InterlacingViolation) as exc:
        validate_pattern([[3, 0], [4]])
    assert (exc.value.i, exc.value.j) == (1, 1)


def test_first_violation_is_reported_top_down():
    # row 2 breaks at i = 2 and row 1 breaks too; the scan reports row 2 first
    with pytest.raises(InterlacingViolation) as exc:
        validate_pattern([[3, 2, 0], [3, 3], [5]])
    assert (exc.value.i, exc.value.j) == (2, 2)


def test_k2_witness_is_valid():
    p = validate_pattern(K2_WITNESS_ROWS)
    assert p.n == 6
    assert p.x(2, 4) == Fraction(3, 2)
    assert p.row_sums() == (1, 2, 3, 4, 5, 6)


def test_malformed_rows():
    with pytest.raises(MalformedPattern):
        GTPattern([[1, 0], [1, 0]])
    with pytest.raises(MalformedPattern):
        GTPattern([["1.5"]])


def test_denominator():
    assert denominator(validate_pattern([[3, 0], [1]])) == 1
    assert denominator(validate_pattern([[1, "1/2", 0], ["1/2", "1/3"], ["1/3"]])) == 6
    assert denominator(validate_pattern(K2_WITNESS_ROWS)) == 2


def test_add_and_scale_identities():
    a = validate_pattern(K2_WITNESS_ROWS)
    z = zero_pattern(6)
    assert add_patterns(a, z) == a
    assert scale_pattern(a, 0) == z
    with pytest.raises(SizeMismatch):
        add_patterns(a, zero_pattern(5))


def test_partition_rules():
    assert Partition((2, 1, 0)).size == 3
    with pytest.raises(InvalidPartition, match=r"\(1, 0\)"):
        Partition((2, 1))
    with pytest.raises(InvalidPartition):
        Partition((1, 2, 0))
    with pytest.raises(InvalidPartition):
        Partition((0, 0))
    assert Content((1, 0, 2)).partial_sums() == (1, 1, 3)


def test_json_format():
    p = validate_pattern(K2_WITNESS_ROWS)
    d = json.loads(p.to_json())
    assert d == {"n": 6, "rows": K2_WITNESS_ROWS}
    assert pattern_from_json(p.to_json()) == p
    with pytest.raises(MalformedPattern):
        pattern_from_dict({"n": 5, "rows": K2_WITNESS_ROWS})


def test_as_rational():
    assert as_rational("3/2") == Fraction(3, 2)
    assert as_rational("-4") == -4
    for bad in ["0.5", 0.5, "x", True, "1/0"]:
        with pytest.raises(MalformedPattern):
            as_rational(bad)


@st.composite
def patterns(draw, max_n=5, n=None):
    """Random valid patterns built top-down, each entry drawn between its interlacing bounds."""
    if n is None:
        n = draw(st.integers(1, max_n))
    den = draw(st.sampled_from([1, 2, 3, 4, 6]))
    top = sorted((Fraction(draw(st.integers(0, 12)), den) for _ in range(n)), reverse=True)
    rows = [top]
    for _ in range(n - 1):
        upper = rows[-1]
        row = []
        for i in range(len(upper) - 1):
            lo, hi = upper[i + 1], upper[i]
            steps = int((hi - lo) * den)
            row.append(lo + Fraction(draw(st.integers(0, steps)), den))
        rows.append(row)
    return GTPattern(rows)


@settings(max_examples=200, deadline=None)
@given(patterns())
def test_json_round_trip(p):
    assert pattern_from_json(p.to_json()) == p


@settings(max_examples=200, deadline=None)
@given(patterns(), st.integers(1, 12))
def test_denominator_of_multiples(p, m):
    q = denominator(p)
    assert q % denominator(scale_pattern(p, m)) == 0
    assert denominator(scale_pattern(p, q)) == 1


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_addition_commutative_associative(data):
    n = data.draw(st.integers(1, 5))
    a, b, c = (data.draw(patterns(n=n)) for _ in range(3))
    assert add_patterns(a, b) == add_patterns(b, a)
    assert add_patterns(add_patterns(a, b), c) == add_patterns(a, add_patterns(b, c))
