"""Division, Buchberger and triviality decisions over Q, F_p and Z."""

import random
from fractions import Fraction

import pytest

from corank.polyring import (DEGREVLEX, GRLEX, LEX, GF, QQ, ZZ, BudgetExceeded,
                             Polynomial, buchberger, format_polynomial,
                             ideals_equal, is_trivial_over_Z,
                             is_trivial_over_field, normal_form,
                             parse_polynomial)


def poly(text, nvars=3, domain=QQ):
    return parse_polynomial(text, nvars, domain)


def test_parse_format_roundtrip():
    for text in ["x0*x1 - x1 - 2", "x2^3 + 2*x0", "5", "-x0 + 1/2"]:
        p = poly(text)
        again = parse_polynomial(format_polynomial(p), 3, QQ)
        assert again == p


def test_parse_rejects_garbage():
    from corank.polyring import PolynomialParseError
    with pytest.raises(PolynomialParseError):
        parse_polynomial("x0 + zebra", 3)
    with pytest.raises(PolynomialParseError):
        parse_polynomial("x9", 3)


def test_normal_form_generator_reduces_to_zero():
    g1 = poly("x0*x1 + x2")
    assert normal_form(g1, [g1]).is_zero()


def test_normal_form_power_of_divisor():
    assert normal_form(poly("x0^2"), [poly("x0")]).is_zero()
    r = normal_form(poly("x0^2 + 1"), [poly("x0")])
    assert r == poly("1")


def test_normal_form_quotients_reconstruct():
    rng = random.Random(5)
    for _ in range(250):
        f = _random_poly(rng, QQ)
        divisors = [p for p in (_random_poly(rng, QQ) for _ in range(2))
                    if not p.is_zero()]
        if not divisors:
            continue
        r, quots = normal_form(f, divisors, with_quotients=True)
        total = r
        for q, g in zip(quots, divisors):
            total = total + q * g
        assert total == f
        # remainder is irreducible against the divisors
        assert normal_form(r, divisors) == r


def test_buchberger_unit_ideal():
    basis = buchberger([poly("x0"), poly("2")])
    assert basis.is_trivial()


def test_buchberger_spec_pair():
    # generators x*y and x + y reduce to the basis {x + y, y^2}
    basis = buchberger([poly("x0*x1", 2), poly("x0 + x1", 2)])
    texts = sorted(format_polynomial(p) for p in basis.generators)
    assert texts == ["x0 + x1", "x1^2"]


def test_buchberger_is_groebner_and_input_order_independent():
    rng = random.Random(11)
    for _ in range(100):
        gens = [p for p in (_random_poly(rng, QQ) for _ in range(3))
                if not p.is_zero()]
        if not gens:
            continue
        basis = buchberger(gens)
        _assert_spolys_reduce(basis)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        other = buchberger(shuffled)
        assert [p.key() for p in basis.generators] == \
            [p.key() for p in other.generators]


def _assert_spolys_reduce(basis):
    from corank.polyring import mono_div, mono_lcm
    gens = basis.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            f, g = gens[i], gens[j]
            lf = f.lead_monomial(basis.order)
            lg = g.lead_monomial(basis.order)
            lcm = mono_lcm(lf, lg)
            s = f.mul_term(f.domain.inv(f.lead_coeff(basis.order)),
                           mono_div(lcm, lf)) \
                - g.mul_term(g.domain.inv(g.lead_coeff(basis.order)),
                             mono_div(lcm, lg))
            assert normal_form(s, gens, basis.order).is_zero()


def test_division_property_over_prime_field():
    rng = random.Random(7)
    f7 = GF(7)
    for _ in range(250):
        f = _random_poly(rng, f7)
        divisors = [p for p in (_random_poly(rng, f7) for _ in range(2))
                    if not p.is_zero()]
        if not divisors:
            continue
        r, quots = normal_form(f, divisors, with_quotients=True)
        total = r
        for q, g in zip(quots, divisors):
            total = total + q * g
        assert total == f
        assert normal_form(f - r, divisors).is_zero()


def test_trivial_over_field_with_cofactors():
    gens = [poly("x0"), poly("x0 + 1")]
    ok, cof = is_trivial_over_field(gens, want_cofactors=True)
    assert ok
    total = Polynomial.zero(3, QQ)
    for h, g in zip(cof, gens):
        total = total + h * g
    assert total == Polynomial.constant(3, QQ, 1)


def test_trivial_over_Z_examples():
    # difference of the generators is 1
    ok, cert = is_trivial_over_Z([poly("x0", 3, ZZ), poly("x0 + 1", 3, ZZ)])
    assert ok and cert[0] == "denominator"
    # common zero x = 0 over F_5
    ok, cert = is_trivial_over_Z([poly("5", 3, ZZ), poly("x0", 3, ZZ)])
    assert not ok and cert[:2] == ("prime", 5)
    # all variables plus an even constant: 2 is not a unit
    gens = [poly(f"x{i}", 6, ZZ) for i in range(6)] + [poly("2", 6, ZZ)]
    ok, cert = is_trivial_over_Z(gens)
    assert not ok and cert[:2] == ("prime", 2)


def test_budget_error_carries_partial_state():
    # katsura-like system that needs more than one S-pair
    gens = [poly("x0^2 + x1^2 + x2^2 - 1"), poly("x0*x1 + x1*x2"),
            poly("x0 + 2*x1 + x2")]
    with pytest.raises(BudgetExceeded) as err:
        buchberger(gens, spair_cap=1)
    assert err.value.partial is not None


def test_degrevlex_vs_lex_disagree_when_expected():
    # x0^2 vs x1^3: degrevlex ranks by degree, lex by the first variable
    p = poly("x0^2 + x1^3")
    assert p.lead_monomial(DEGREVLEX) == (0, 3, 0)
    assert p.lead_monomial(LEX) == (2, 0, 0)
    assert p.lead_monomial(GRLEX) == (0, 3, 0)


def test_ideals_equal_by_mutual_reduction():
    a = buchberger([poly("x0 + x1", 2), poly("x1^2", 2)])
    assert ideals_equal(a, [poly("x0*x1", 2), poly("x0 + x1", 2)])
    assert not ideals_equal(a, [poly("x0", 2)])


def test_evaluate():
    p = poly("x0*x1 - 2*x2 + 3")
    assert p.evaluate([Fraction(1), Fraction(2), Fraction(1)]) == Fraction(3)


def _random_poly(rng, domain, nvars=3, max_terms=4, max_deg=2):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        coeff = rng.randint(-4, 4)
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(nvars, domain, terms)
