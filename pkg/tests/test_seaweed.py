import pytest

from rmcert.liecore import DomainError
from rmcert.seaweed import (algebra_index, build_seaweed, embedding_sl5, p_element, restricted_seaweed,
                            verify_embedding)
from rmcert.liecore import LoopElement, unit


def test_dimensions():
    assert build_seaweed(5, 1, 4).dim == 16
    assert restricted_seaweed(5).dim == 15


def test_frobenius_and_index():
    assert algebra_index(build_seaweed(5, 1, 4), trials=8, seed=1) == 0
    assert algebra_index(restricted_seaweed(5), trials=8, seed=1) == 1


def test_index_is_seed_stable():
    a = algebra_index(build_seaweed(4, 1, 3), trials=6, seed=11)
    b = algebra_index(build_seaweed(4, 1, 3), trials=6, seed=11)
    assert a == b


def test_bad_indices():
    with pytest.raises(DomainError):
        build_seaweed(5, 0, 4)


def test_p_element():
    assert [str(x) for x in p_element(5)] == ["3/5", "1/5", "-1/5", "-3/5"]


def test_embedding_verifies():
    report = verify_embedding()
    assert report.ok
    assert report.generator_pairs_checked == 81
    assert report.source_dim == 15
    assert report.image_degrees == [0, 1]


def test_degree_zero_variant_is_evaluation_at_one():
    # evaluating the loop at u = 1 is a homomorphism, so brackets survive without the degree
    emb = embedding_sl5()
    emb.assignments["E45"] = LoopElement.of(unit(4, 1))
    report = verify_embedding(emb)
    assert report.mismatches == [] and report.image_degrees == [0]


def test_wrong_sign_embedding_detected():
    emb = embedding_sl5()
    emb.assignments["E34"] = LoopElement.of(unit(4, 3))
    assert not verify_embedding(emb).ok
