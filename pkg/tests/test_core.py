import pytest
from hypothesis import given, strategies as st

from b2weight.core import (
    B2Error,
    BinaryVector,
    BoundResult,
    Codebook,
    CodeParameters,
    DomainError,
    Variant,
    WeightFraction,
    weight,
)
from b2weight.construction import unmap


def test_weight_examples():
    assert weight(BinaryVector((0,) * 8)) == 0
    assert weight(BinaryVector.from_string("1100")) == 2
    assert weight(unmap(3, CodeParameters(4, 2))) == 2


@given(st.lists(st.integers(0, 1), min_size=1, max_size=64))
def test_weight_plus_complement_weight_is_length(bits):
    v = BinaryVector(tuple(bits))
    assert weight(v) + weight(v.complement()) == v.length


@pytest.mark.parametrize("value", [0.0, 1.0, -0.1, 1.5])
def test_weight_fraction_rejects_closed_endpoints(value):
    with pytest.raises(DomainError):
        WeightFraction(value)


def test_code_parameters_bounds():
    CodeParameters(4, 4)
    with pytest.raises(B2Error):
        CodeParameters(4, 5)
    with pytest.raises(B2Error):
        CodeParameters(4, 0)


def test_binary_vector_rejects_non_binary():
    with pytest.raises(B2Error):
        BinaryVector((0, 2, 1))
    with pytest.raises(B2Error):
        BinaryVector.from_string("11x0")


def test_vector_sum_is_ternary():
    a, b = BinaryVector.from_string("1100"), BinaryVector.from_string("1010")
    assert a + b == (2, 1, 1, 0)
    assert a - b == (0, 1, -1, 0)
    assert str(a) == "1100"
    assert BinaryVector.from_support([0, 3], 4) == BinaryVector.from_string("1001")


def test_codebook_checks_lengths_only():
    # wrong weight is representable; verify_b2 diagnoses it
    cb = Codebook.from_strings(4, 2, ["1100", "1110"])
    assert len(cb) == 2
    with pytest.raises(B2Error):
        Codebook.from_strings(4, 2, ["1100", "110"])


def test_bound_result_split_fields_match_variant():
    BoundResult(Variant.SUM_ENTROPY, 0.5)
    BoundResult(Variant.IMPROVED, 0.5, 0.4, 0.2)
    with pytest.raises(B2Error):
        BoundResult(Variant.IMPROVED, 0.5)
    with pytest.raises(B2Error):
        BoundResult(Variant.LOWER, 0.5, 0.1, 0.1)
    with pytest.raises(B2Error):
        BoundResult(Variant.LOWER, 1.5)
