from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from gelfdual.cyclo import (CycNum, conjugate, cyc_arith, euler_phi, galois_apply, integer_coords,
                            is_cyclotomic_integer, parse_cycnum, snap)

z3, z4, z5, z7 = (CycNum.zeta(k) for k in (3, 4, 5, 7))

CONDUCTORS = [1, 3, 4, 5, 7, 8, 12]


@st.composite
def cycnums(draw, k=None):
    k = k or draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=1, max_size=k))
    return CycNum(k, coeffs)


def test_small_identities():
    assert z3 * z3 == CycNum.zeta(3, 2)
    assert 1 + z3 + z3**2 == 0
    assert z4 * z4 == -1
    assert CycNum.zeta(6) ** 6 == 1


def test_conjugation_examples():
    assert conjugate(z5) == CycNum.zeta(5, 4)
    assert conjugate(2 + 3 * z7 + 3 * z7**2) == 2 + 3 * z7**6 + 3 * z7**5
    assert conjugate(Fraction(5, 2)) == Fraction(5, 2)


def test_galois_examples():
    assert galois_apply(z5, 2) == z5**2
    assert galois_apply(1 + z3, 2) == 1 + z3**2 == -z3
    assert galois_apply(CycNum(Fraction(-3, 7)), 5) == Fraction(-3, 7)


def test_integrality_examples():
    golden = -z5**2 - z5**3
    assert abs(complex(golden) - (1 + 5 ** 0.5) / 2) < 1e-12
    assert is_cyclotomic_integer(golden)
    assert not is_cyclotomic_integer(Fraction(1, 2))
    assert integer_coords(z7**3 + z7**5 + z7**6) is not None
    assert integer_coords(CycNum(Fraction(1, 2))) is None


def test_cyc_arith_dispatch():
    assert cyc_arith(z3, z3, "mul") == z3**2
    assert cyc_arith(z4, 1, "sub") == z4 - 1
    assert cyc_arith(1, z4, "div") == -z4
    with pytest.raises(ZeroDivisionError):
        cyc_arith(z3, 0, "div")
    with pytest.raises(ValueError):
        cyc_arith(z3, z3, "pow")


def test_conductor_reduction_is_canonical():
    # zeta_12^4 is zeta_3; zeta_10^5 is -1
    assert CycNum.zeta(12, 4) == z3
    assert CycNum.zeta(12, 4).k == 3
    assert CycNum.zeta(10, 5).k == 1
    assert hash(CycNum.zeta(12, 4)) == hash(z3)
    # -zeta_5^... lives in Q(zeta_10) = Q(zeta_5)
    assert (-z5).k == 5


def test_snap_examples():
    assert snap(complex(-0.5, 0.8660254037844386), 3) == z3
    assert snap(6.0, 1) == 6
    assert snap(-1.6180339887498949, 5) == z5**2 + z5**3
    assert snap(0.123456789, 1, eps=1e-12) is None


def test_snap_high_precision():
    with mpmath.workdps(60):
        x = (2 * z7**3 - z7 + Fraction(1, 3)).to_mp()
    assert snap(x, 7, 3) == 2 * z7**3 - z7 + Fraction(1, 3)


def test_serialization_and_render():
    x = 3 * z7**6 + 3 * z7**5 + 3 * z7**3
    assert parse_cycnum(x.serialize()) == x
    assert "z7^" in x.render()
    assert CycNum(Fraction(-5, 2)).render() == "-5/2"


@given(cycnums(), cycnums(), cycnums())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0 and a * 1 == a


@given(cycnums())
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert (1 / a) * a == 1
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(cycnums(k=12), cycnums(k=12), st.sampled_from([1, 5, 7, 11]))
def test_galois_is_a_field_automorphism(a, b, t):
    assert (a * b).galois(t) == a.galois(t) * b.galois(t)
    assert (a + b).galois(t) == a.galois(t) + b.galois(t)


@given(cycnums())
def test_conjugate_matches_numerics(a):
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9
    assert a.conjugate().conjugate() == a
    assert abs(complex(a)) < 1e-9 or a


@given(cycnums(k=3), cycnums(k=4))
def test_embedding_commutes_with_arithmetic(a, b):
    # Q(zeta_3), Q(zeta_4) inside Q(zeta_12)
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-9
    assert abs(complex(a + b) - (complex(a) + complex(b))) < 1e-9
    assert (a * b).k in (1, 3, 4, 12)


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
