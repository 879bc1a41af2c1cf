"""Laurent polynomial arithmetic."""

from regionknot.polynomial import LaurentPolynomial


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({3: 0, 1: 2})
    assert p.exponents() == (1,)


def test_add_and_cancel():
    p = LaurentPolynomial({2: 1, 0: -1})
    q = LaurentPolynomial({0: 1, 2: -1})
    assert (p + q).is_zero()


def test_mul_matches_hand_expansion():
    # (A + A^-1)^2 = A^2 + 2 + A^-2
    p = LaurentPolynomial({1: 1, -1: 1})
    assert p * p == LaurentPolynomial({2: 1, 0: 2, -2: 1})


def test_scale_shifts_exponents():
    p = LaurentPolynomial({1: 1, -1: 1})
    assert p.scale(-1, 3) == LaurentPolynomial({4: -1, 2: -1})


def test_invert_variable():
    p = LaurentPolynomial({4: -1, 3: 1, 1: 1})
    assert p.invert_variable() == LaurentPolynomial({-4: -1, -3: 1, -1: 1})
    assert p.invert_variable().invert_variable() == p


def test_is_one():
    assert LaurentPolynomial.one().is_one()
    assert not LaurentPolynomial({0: 1, 1: 1}).is_one()
    assert not LaurentPolynomial({1: 1}).is_one()


def test_evaluate_at_minus_one():
    p = LaurentPolynomial({-4: -1, -3: 1, -1: 1})
    assert p.evaluate(-1) == -1 - 1 - 1


def test_span():
    assert LaurentPolynomial({-4: -1, -1: 1}).span() == 3
    assert LaurentPolynomial.zero().span() == 0


def test_str_readable():
    p = LaurentPolynomial({-4: -1, -3: 1, -1: 1}, variable="t")
    assert str(p) == "-t^-4 + t^-3 + t^-1"
