import math

import pytest

import subordlab


def test_dominants_listed():
    names = subordlab.dominant_names()
    assert "exp" in names and "opendoor-a" in names


def test_exp_series():
    c = subordlab.dominant_series("exp", order=8)
    assert len(c) == 9
    assert abs(c[3] - 1 / 6) < 1e-14


def test_lemma1_radius():
    w = subordlab.evaluate_dominant("opendoor-a", 1j, n=1, alpha=0.0, beta=1.0)
    assert abs(abs(w) - math.sqrt(5)) < 1e-12


def test_subordination_verdicts():
    p = [0.8**k / math.factorial(k) for k in range(33)]
    assert subordlab.is_subordinate(p, "exp")["holds"] == "true"
    assert subordlab.is_subordinate([2.0, 0.5], "exp")["holds"] == "false"


def test_solve_plug_back():
    q = [1.0, 0.3, -0.1] + [0.0] * 30
    psi = [0.5**k / math.factorial(k) for k in range(33)]
    p = subordlab.bb_solve(psi, q, alpha=1.0, beta=0.5, order=32)
    back = subordlab.bb_operator(p, q, alpha=1.0, beta=0.5)
    assert max(abs(a - b) for a, b in zip(back[:31], psi[:31])) < 1e-9


def test_closed_form_matches_recursion():
    q = [1.0, 0.4] + [0.0] * 31
    a = subordlab.odl_closed_form(q, alpha=1.0, beta=2.0, order=32)
    b = subordlab.bb_solve([1.0] + [0.0] * 32, q, alpha=1.0, beta=2.0, order=32)
    assert max(abs(x - y) for x, y in zip(a, b)) < 1e-9


def test_verify_and_falsify():
    assert "cor-ez" in subordlab.case_ids()
    r = subordlab.verify("cor-ez", trials=20, seed=7)
    assert r["failures"] == 0 and r["trials"] == 20
    f = subordlab.falsify("converse-of:cor-ez", budget=200, seed=7)
    assert f["failures"] > 0


def test_errors():
    with pytest.raises(ValueError):
        subordlab.verify("no-such-case")
    with pytest.raises(ValueError):
        subordlab.is_subordinate([1.0], "nope")
