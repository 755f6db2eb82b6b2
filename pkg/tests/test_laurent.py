from hypothesis import given, strategies as st

from hopfweave.laurent import LaurentPolynomial

polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPolynomial)


def test_zero_and_one():
    assert LaurentPolynomial.zero().is_zero()
    assert LaurentPolynomial.one()[0] == 1
    assert str(LaurentPolynomial.zero()) == "0"


def test_zero_coefficients_dropped():
    p = LaurentPolynomial({2: 0, 1: 3})
    assert p.coefficients == {1: 3}


def test_str():
    p = LaurentPolynomial({2: 1, 1: -3, 0: 1})
    assert str(p) == "t^2 - 3*t + 1"
    assert str(LaurentPolynomial({-1: 2})) == "2*t^-1"


@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys, polys, polys)
def test_multiplication_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_multiplication_degree(p, q):
    product = p * q
    if not p.is_zero() and not q.is_zero():
        assert product.degree() == p.degree() + q.degree()
        assert product.valuation() == p.valuation() + q.valuation()


@given(polys)
def test_normalize_units_idempotent(p):
    canon = p.normalize_units()
    assert canon.normalize_units() == canon
    if not p.is_zero():
        assert canon.valuation() == 0
        assert canon[canon.degree()] > 0


@given(polys, st.integers(min_value=-3, max_value=3), st.booleans())
def test_units_equivalence(p, shift, flip):
    unit = LaurentPolynomial({shift: -1 if flip else 1})
    assert (unit * p).equals_up_to_units(p)


@given(polys, st.integers(min_value=-3, max_value=3))
def test_evaluation_homomorphism(p, x):
    q = LaurentPolynomial({0: 2, 1: -1})
    if x != 0:
        assert (p * q)(x) == p(x) * q(x)
