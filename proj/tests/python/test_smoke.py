import doctest

import pytest

import skewfq


@pytest.fixture
def f4():
    return skewfq.Ring("field:p=2,n=2")


def test_factor_golden_examples(f4):
    unit, factors = f4.poly("t^3+a").factor()
    assert str(unit) == "1"
    assert [str(h) for h in factors] == ["t^2+a*t+1", "t+a"]
    _, factors = f4.poly("t^5+a*t^4+(1+a)*t^3+a*t^2+t+1").factor()
    assert [str(h) for h in factors] == ["t^2+t+1", "t+a", "t+a", "t+a"]


def test_alternates_reconstruct(f4):
    f = f4.poly("t^5+a*t^4+(1+a)*t^3+a*t^2+t+1")
    alts = f.alternate_factorizations(4)
    assert ["t+a+1", "t+1", "t+a", "t^2+(a+1)*t+1"] in [[str(h) for h in a] for a in alts]
    for alt in alts:
        prod = f4.poly("1")
        for h in alt:
            prod = prod * h
        assert prod == f


def test_arithmetic_and_evaluation(f4):
    f = f4.poly("t^2+a*t+1") * f4.poly("t+a")
    assert str(f) == "t^3+a"
    q, r = f.divmod(f4.poly("t+a"))
    assert str(q) == "t^2+a*t+1" and r.is_zero()
    assert str(f("a")) == "0"
    assert str(f.bracket()) == "x^7+a"
    assert str(f4.unbracket("x^3+a*x+1")) == "t^2+a*t+1"
    assert f4.poly("t^2+a*t+1").is_irreducible()
    assert [str(c) for c in f.roots()] == ["a"]


def test_ring_level_checks(f4):
    g, invariant = f4.min_vanishing()
    assert str(g) == "t^3+t" and invariant
    assert len(f4.conjugacy_classes()) == 2
    assert f4.hilbert90()
    audit = f4.poly("t^3+t").gm_audit()
    assert audit["sum"] == 3 and audit["wedderburn_equality"]


def test_truncated_ring():
    r = skewfq.Ring("trunc:p=3,m=3")
    lhs, rhs, equal = r.frobenius_law("u")
    assert equal and str(lhs) == "t^3"
    assert str(r.poly("t") * r.poly("u")) == "u*t+1"


def test_errors(f4):
    with pytest.raises(skewfq.ParseError) as info:
        f4.poly("t^3+")
    assert info.value.offset == 4
    with pytest.raises(skewfq.SkewfqError) as info:
        f4.unbracket("x^2+1")
    assert info.value.kind == "NotBracketPoly"


def test_verify_passes():
    report = skewfq.verify()
    assert set(report) == set(skewfq.suite_names())
    assert all(cases > 0 and violations == 0 for cases, violations in report.values())


def test_module_docstring():
    failures, _ = doctest.testmod(skewfq)
    assert failures == 0
