"""Tests for Buchberger machinery, ideal inclusions and covering certificates."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnspecht.errors import AmbientMismatchError, ResourceLimitExceeded, SizeMismatchError
from bnspecht.groebner import (
    GroebnerBasis,
    ResourceLimits,
    buchberger,
    covering_certificate,
    ideal_contains,
    inclusion_by_certificates,
    radical_membership,
    radical_report,
    reduce,
    specht_ideal_basis,
    specht_ideal_contains,
    universal_gb_check,
)
from bnspecht.partitions import bidominates, bp, enumerate_bipartitions
from bnspecht.polynomials import SparsePolynomial, parse_polynomial
from bnspecht.tableaux import specht_generators


def p(text, n):
    return parse_polynomial(text, n)


def test_buchberger_trivial_cases():
    one = SparsePolynomial.constant(2, 1)
    gb = buchberger([one.scale(3)], "lex")
    assert gb.generators == (one,)
    assert gb.is_trivial


def test_buchberger_small_specht_ideals():
    gb = specht_ideal_basis(bp((1,), (1,)), 2)
    assert set(gb.generators) == {p("x1", 2), p("x2", 2)}
    gb = specht_ideal_basis(bp((1, 1), ()), 2)
    assert gb.generators == (p("x1^2 - x2^2", 2),)
    gb = specht_ideal_basis(bp((2,), ()), 2)
    assert gb.generators == (SparsePolynomial.constant(2, 1),)


def test_buchberger_textbook_example():
    # twisted cubic: reduced lex basis eliminates down to the defining relations
    gens = [p("x1^2 - x2", 3), p("x1^3 - x3", 3)]
    gb = buchberger(gens, "lex")
    assert set(gb.generators) == {
        p("x1^2 - x2", 3),
        p("x1*x2 - x3", 3),
        p("x1*x3 - x2^2", 3),
        p("x2^3 - x3^2", 3),
    }


def test_buchberger_rejects_mixed_rings():
    with pytest.raises(AmbientMismatchError):
        buchberger([p("x1", 2), p("x1", 3)])


def test_reduce_examples():
    gb = buchberger([p("x1", 2), p("x2", 2)])
    assert reduce(p("x1", 2), gb).is_zero
    assert reduce(p("x1^2 - x2^2", 2), gb).is_zero
    gb2 = buchberger([p("x1^2 - x2^2", 2)])
    assert reduce(p("x1", 2), gb2) == p("x1", 2)
    with pytest.raises(AmbientMismatchError):
        reduce(p("x1", 3), gb)


def test_reduce_is_idempotent_and_additive():
    gb = specht_ideal_basis(bp((1, 1), (1,)), 3)
    for text in ("x1^4*x2 - x3", "x1*x2*x3 + x2^2", "x1^2 - x2^2 + 1"):
        q = p(text, 3)
        r = reduce(q, gb)
        assert reduce(r, gb) == r
    a, b = p("x1^3*x3", 3), p("x2^2 - x3^2 + x1", 3)
    assert reduce(a + b, gb) == reduce(reduce(a, gb) + reduce(b, gb), gb)


def test_reduced_basis_is_independent_of_generator_order():
    gens = specht_generators(bp((1, 1), (1,)), 3)
    forward = buchberger(gens, "deglex")
    backward = buchberger(list(reversed(gens)), "deglex")
    assert forward.generators == backward.generators


def test_resource_limits_trip():
    gens = specht_generators(bp((1, 1), (2,)), 4)
    with pytest.raises(ResourceLimitExceeded):
        buchberger(gens, "lex", ResourceLimits(max_basis=2))


def test_specht_ideal_contains_small_chain():
    assert specht_ideal_contains(bp((1,), (1,)), bp((1, 1), ()), 2)
    assert not specht_ideal_contains(bp((1, 1), ()), bp((1,), (1,)), 2)
    assert specht_ideal_contains(bp((2,), ()), bp((1,), (1,)), 2)
    assert specht_ideal_contains(bp((1,), (1,)), bp((1,), (1,)), 2)
    with pytest.raises(SizeMismatchError):
        specht_ideal_contains(bp((1,), ()), bp((1,), (1,)), 2)


def test_specht_ideal_contains_matches_bidominance_n3():
    shapes = enumerate_bipartitions(3)
    for a in shapes:
        gb = specht_ideal_basis(a, 3)
        for b in shapes:
            got = ideal_contains(gb, specht_generators(b, 3))
            assert got == bidominates(a, b), (str(a), str(b))


def test_covering_certificate_two_coset_expansion():
    cert = covering_certificate(3, 1, 1)
    assert cert.verified
    assert cert.target == p("x1^2 - x2^2", 3)
    assert cert.symmetrized == p("(x1^2 - x3^2) - (x2^2 - x3^2)", 3)


def test_covering_certificate_three_cosets():
    assert covering_certificate(3, 1, 2).verified
    assert covering_certificate(3, 2, 1).verified


def test_covering_certificate_case4():
    cert = covering_certificate(4, 1, 0)
    assert cert.verified
    assert cert.target == p("x1^2 - x2^2", 2)
    assert covering_certificate(4, 2, 1).verified


def test_covering_certificate_validation():
    with pytest.raises(ValueError):
        covering_certificate(1, 1, 1)
    with pytest.raises(ValueError):
        covering_certificate(3, 0, 1)
    with pytest.raises(ResourceLimitExceeded):
        covering_certificate(3, 3, 3, ResourceLimits(max_cosets=5))


def test_certificate_json_shape():
    doc = covering_certificate(3, 1, 1).to_json()
    assert doc["case"] == 3 and doc["A"] == [1] and doc["B1"] == [2] and doc["B2"] == [3]
    assert doc["verified"] is True
    assert doc["target"] == "x1^2 - x2^2"


def test_inclusion_by_certificates_small():
    report = inclusion_by_certificates(bp((2,), ()), bp((1, 1), ()), 2)
    assert report.included
    assert report.chain == (bp((2,), ()), bp((1,), (1,)), bp((1, 1), ()))
    assert report.verified_steps == (True, True)
    same = inclusion_by_certificates(bp((1,), (1,)), bp((1,), (1,)), 2)
    assert same.chain == (bp((1,), (1,)),) and same.verified_steps == ()


def test_inclusion_by_certificates_large_chain_without_groebner():
    report = inclusion_by_certificates(bp((3, 2), (2, 1)), bp((2, 1, 1), (3, 1)), 8)
    assert report.included and report.verified_steps == ()
    chain = report.chain
    assert chain[0] == bp((3, 2), (2, 1)) and chain[-1] == bp((2, 1, 1), (3, 1))
    for upper, lower in zip(chain, chain[1:]):
        assert bidominates(upper, lower) and upper != lower


def test_inclusion_by_certificates_rejects_incomparable():
    with pytest.raises(ValueError):
        inclusion_by_certificates(bp((1, 1), ()), bp((1,), (1,)), 2)


def test_radical_membership():
    assert radical_membership(p("x1", 2), [p("x1^2", 2)])
    assert not radical_membership(p("x1", 2), [p("x2", 2)])
    assert radical_membership(p("x1 + x2", 2), specht_generators(bp((1,), (1,)), 2))


def test_radical_report_agreement_n2():
    report = radical_report(bp((1,), (1,)), 2)
    assert report["agreement"] is True
    assert len(report["samples"]) == 5


def test_universal_gb_check_reports():
    rep = universal_gb_check(bp((2,), ()), 2, ["lex"])
    assert dict(rep.results)["lex"] is True  # the candidate set contains 1
    rep = universal_gb_check(bp((1,), (1,)), 2, ["lex", "deglex"])
    assert set(dict(rep.results)) == {"lex", "deglex"}
    doc = rep.to_json()
    assert doc["shape"] == "((1),(1))" and doc["n"] == 2
    with pytest.raises(SizeMismatchError):
        universal_gb_check(bp((1,), ()), 2, ["lex"])


@settings(deadline=None, max_examples=20)
@given(st.sampled_from(enumerate_bipartitions(3)), st.sampled_from(enumerate_bipartitions(3)))
def test_groebner_side_never_contradicts_the_order_side(a, b):
    assert specht_ideal_contains(a, b, 3) == bidominates(a, b)
