from fractions import Fraction as F
from math import factorial

import pytest

from inctrees.hooks import (
    generic_hook_weight_sum,
    hook_sum_bucket,
    hook_sum_k_labelled,
    hook_sum_k_tuple,
)
from inctrees.trees import catalan
from inctrees.weights import DegreeWeights

EXP = DegreeWeights.exponential()
ORDERED = DegreeWeights.bundled(1)
THREE_BUNDLED = DegreeWeights.bundled(3)


def test_single_node_two_labels():
    report = hook_sum_k_labelled(EXP, 2, 1)
    assert report.lhs == F(1, 2)
    assert report.equal


def test_three_bundled_n3():
    report = hook_sum_k_labelled(THREE_BUNDLED, 2, 3)
    assert report.rhs == F(45, factorial(6))
    assert report.equal


def test_ordered_n4_uses_127():
    report = hook_sum_k_labelled(ORDERED, 2, 4)
    assert report.rhs == F(127, factorial(8))
    assert report.equal


@pytest.mark.parametrize("n", range(1, 7))
def test_k_labelled_identity_small(n):
    for weights in (EXP, ORDERED, DegreeWeights.polynomial([1, 0, 1])):
        report = hook_sum_k_labelled(weights, 2, n)
        assert report.equal
        assert report.trees_visited == catalan(n - 1)


def test_bucket_free_ordered_m3():
    report = hook_sum_bucket(ORDERED, 3)
    assert report.rhs == F(6, 6)  # T_3 = 6 objects over 3! labels
    assert report.equal


def test_bucket_unibi_m3():
    report = hook_sum_bucket(EXP, 3, max_bucket=2)
    assert report.rhs == F(4, 6)
    assert report.equal


def test_bucket_single_label():
    w = DegreeWeights.polynomial([F(5, 3), 1])
    report = hook_sum_bucket(w, 1)
    assert report.lhs == F(5, 3)
    assert report.equal


def test_bucket_rejects_other_bucket_caps():
    with pytest.raises(ValueError):
        hook_sum_bucket(EXP, 3, max_bucket=3)


def test_k_tuple_n2():
    report = hook_sum_k_tuple(EXP, 2, 2)
    assert report.equal


def test_k_tuple_single_node():
    w = DegreeWeights.polynomial([F(7, 2), 1])
    report = hook_sum_k_tuple(w, 4, 1)
    assert report.lhs == F(7, 2)
    assert report.equal


def test_k_tuple_ordered_n3():
    report = hook_sum_k_tuple(ORDERED, 2, 3)
    assert report.lhs == F(5, 36)
    assert report.equal


def test_postnikov_binary_n3():
    assert generic_hook_weight_sum("binary", [1, 1], [0, 1], 3) == F(64, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_postnikov_binary_all_n(n):
    got = generic_hook_weight_sum("binary", [1, 1], [0, 1], n)
    assert got == F(2**n * (n + 1) ** (n - 1), factorial(n))


def test_rho_one_counts_trees():
    assert generic_hook_weight_sum("ordered", [1], [1], 4) == catalan(3)


def test_rho_strict_binary_matches_two_label_left_side():
    # rho(h) = 1/(2h(2h-1)) over strict-binary trees equals the k=2 hook sum
    for n in range(1, 6):
        via_rho = generic_hook_weight_sum(
            "strict-binary", [1], [0, -2, 4], n
        )  # 4h^2 - 2h = 2h(2h-1)
        report = hook_sum_k_labelled(DegreeWeights.polynomial([1, 0, 1]), 2, n)
        assert via_rho == report.lhs


def test_rho_denominator_zero_is_named():
    with pytest.raises(ValueError, match="h = 2"):
        generic_hook_weight_sum("ordered", [1], [-2, 1], 4)


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        generic_hook_weight_sum("ternary", [1], [1], 3)


def test_hook_capacity_limits(monkeypatch):
    from inctrees.trees import CapacityError

    monkeypatch.delenv("INCTREE_CAPACITY", raising=False)
    with pytest.raises(CapacityError):
        hook_sum_k_labelled(EXP, 2, 13)
    with pytest.raises(CapacityError):
        hook_sum_bucket(EXP, 9)
    with pytest.raises(CapacityError):
        hook_sum_k_tuple(EXP, 2, 13)


def test_report_serialization():
    report = hook_sum_k_labelled(EXP, 2, 2)
    text = report.to_text()
    assert "equal" in text and "n=2" in text
    doc = report.to_json_dict()
    assert doc["verdict"] == "equal"
    assert doc["lhs"] == str(report.lhs)


def test_lhs_is_exhaustive_hook_product():
    # recompute the n=3 unordered lhs directly from the two tree shapes
    # path: hooks 3,2,1 / degrees 1,1,0; cherry: hooks 3,1,1 / degrees 2,0,0
    path = F(1, 1) / (6 * 5) / (4 * 3) / (2 * 1)
    cherry = F(1, 2) / (6 * 5) / (2 * 1) / (2 * 1)
    report = hook_sum_k_labelled(EXP, 2, 3)
    assert report.lhs == path + cherry
