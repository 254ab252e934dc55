import pytest

from pattgf.errors import PatternError
from pattgf.patterns import expand_layered
from pattgf.relations import verify_relation


def test_thm21_golden_instance():
    assert verify_relation("thm21", (3, 2, 1)).passed


def test_thm21_sweep_small():
    from pattgf.oracle import enumerate_avoiders

    for k in range(1, 5):
        for perm in enumerate_avoiders(k):
            assert verify_relation("thm21", perm).passed, perm


def test_thm23_instances():
    assert verify_relation("thm23", (3, 2, 1)).passed
    assert verify_relation("thm23", (5, 3, 1)).passed
    assert verify_relation("thm23", (6, 5, 3, 2)).passed
    with pytest.raises(PatternError):
        verify_relation("thm23", (4,))


def test_thm31_hand_counted_instances():
    # [3,2,1] = 321: the j=1 boundary factor reduces to the constant 1
    assert verify_relation("thm31", (3, 2, 1), terms=8).passed
    # [4,2,1]: nonempty first segment, two-pattern right factors in play
    assert verify_relation("thm31", (4, 2, 1), terms=8).passed


def test_thm31_accepts_layered_tops_or_pattern():
    tops = (4, 2)
    assert verify_relation("thm31", tops, terms=7).passed
    assert verify_relation("thm31", expand_layered(tops), terms=7).passed


def test_thm31_corrected_boundary_on_nonlayered_pattern():
    # (3,2,4,1): the printed left boundary factor (avoid the full next
    # prefix) fails brute force at n = 5; the prefix-closure boundary
    # implemented here keeps the relation exact.
    assert verify_relation("thm31", (3, 2, 4, 1), terms=8).passed


def test_thm33_instances():
    for tops in [(3, 2, 1), (4, 2, 1), (5, 4, 3, 1), (5, 3, 2, 1)]:
        assert verify_relation("thm33", tops, terms=8).passed


def test_remark31_instances():
    rep = verify_relation("remark31", (4, 2, 1), terms=8)
    assert rep.passed
    assert any("j=2" in c.label for c in rep.checks)
    assert verify_relation("remark31", (5, 4, 3, 1), terms=8).passed
    # two layers only: no j >= 2 instances, vacuously true
    rep = verify_relation("remark31", (3, 2), terms=6)
    assert rep.passed


def test_functional_equations():
    assert verify_relation("thm22feq", orders=(9, 7)).passed
    assert verify_relation("thm32feq", orders=(9, 7)).passed


def test_unknown_relation():
    with pytest.raises(PatternError):
        verify_relation("thm99", (3, 2, 1))


def test_report_lines():
    rep = verify_relation("thm21", (3, 2, 1))
    lines = rep.lines()
    assert lines[0].startswith("thm21") and lines[0].endswith("PASS")
