import random
from fractions import Fraction

import newton_example as ex
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from strategies import bases, nonzero_rationals, polys, rand_basis, rand_poly

from bezout_subres import (
    Poly,
    PolyInBasis,
    bezout_matrix_power,
    bezout_subresultant,
    coefficient_c_omega,
    det_exact,
    from_power,
    gcd,
    gcd_via_subresultants,
    make_newton_basis,
    make_power_basis,
    root_based_subresultant,
    subresultant_chain,
    sylvester_subresultant,
)
from bezout_subres.errors import (
    BasisMismatchError,
    DegreeError,
    RootsError,
    ZeroDivisorError,
)
from bezout_subres.subres import chain_in_power

X = Poly.x()
NU = ex.NU
F_EX = PolyInBasis(NU, [1, 1, 1, 1])
G_EX = PolyInBasis(NU, [1, 1, 1])


def test_c_omega_examples():
    assert coefficient_c_omega(3, 2, 1, 1) == -1
    assert coefficient_c_omega(3, 2, 1, 2) == Fraction(-1, 2)
    for n in range(1, 8):
        assert coefficient_c_omega(n, n - 1, n - 1, 3) == Fraction(1, 3)


def test_c_omega_errors():
    with pytest.raises(ZeroDivisorError):
        coefficient_c_omega(3, 2, 1, 0)
    with pytest.raises(DegreeError):
        coefficient_c_omega(2, 2, 1, 1)
    with pytest.raises(DegreeError):
        coefficient_c_omega(3, 1, 2, 1)


def test_example_s1():
    S1 = bezout_subresultant(F_EX, G_EX, 1)
    assert S1.coeffs == (0, 1)
    assert S1.to_power() == X - 2
    c0, c1 = ex.s1_nu((1, 1, 1, 1), (1, 1, 1))
    assert (c0, c1) == (0, 1)


def test_s0_is_resultant():
    P = make_power_basis(2)
    F, G = X**2 - 1, X - 2
    S0 = bezout_subresultant(from_power(F, P), from_power(G, P), 0)
    assert S0.coeffs == (3,)
    # c_omega * |B| with c = (-1)^C(2,2) a_n^(m-n) = -1
    assert S0.coeffs[0] == -det_exact(bezout_matrix_power(F, G).rows())


def test_example_s1_random_instances():
    rng = random.Random(7)
    for _ in range(200):
        a = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(4)]
        b = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(3)]
        if a[3] == 0 or b[2] == 0:
            continue
        S1 = bezout_subresultant(PolyInBasis(NU, a), PolyInBasis(NU, b), 1)
        c0, c1 = ex.s1_nu(a, b)
        assert (S1[0], S1[1]) == (c0, c1)
        assert S1.to_power() == ex.s1_power(a, b)


def test_degree_order_errors():
    P = make_power_basis(3)
    F = from_power(X**2 + 1, P)
    with pytest.raises(DegreeError):
        bezout_subresultant(F, from_power(X**2, P), 0)
    with pytest.raises(DegreeError):
        bezout_subresultant(F, PolyInBasis(P, []), 0)
    with pytest.raises(DegreeError):
        bezout_subresultant(F, from_power(X, P), 2)
    with pytest.raises(BasisMismatchError):
        bezout_subresultant(F_EX, from_power(X, P), 0)


def test_chain_example():
    chain = subresultant_chain(F_EX, G_EX)
    assert len(chain.polys) == 3
    assert chain.polys[1].coeffs == (0, 1)
    assert chain.principals == tuple(S[k] for k, S in enumerate(chain.polys))
    for k in range(3):
        assert chain.polys[k] == bezout_subresultant(F_EX, G_EX, k)


def test_chain_coprime_and_common_factor():
    P = make_power_basis(6)
    F1, G1 = X**3 + 2 * X + 5, X**2 - 3
    assert gcd(F1, G1) == Poly([1])
    coprime = subresultant_chain(from_power(F1, P), from_power(G1, P))
    assert coprime.principals[0] != 0

    H = X**2 - X + 7
    chain = subresultant_chain(from_power(H * F1, P), from_power(H * G1, P))
    assert chain.principals[0] == chain.principals[1] == 0
    assert chain.principals[2] != 0


def test_gcd_examples():
    F = (X - 1) ** 2 * (X - 2)
    G = (X - 1) * (X - 3)
    k, S = gcd_via_subresultants(from_power(F, make_power_basis(3)),
                                 from_power(G, make_power_basis(3)))
    assert k == 1 and S.to_power().monic() == X - 1
    k, S = gcd_via_subresultants(from_power(F, NU), from_power(G, NU))
    assert k == 1 and S.to_power().monic() == X - 1
    k, S = gcd_via_subresultants(from_power(F, NU), from_power(G, NU), monic=True)
    assert S.to_power() == X - 1

    k, S = gcd_via_subresultants(from_power(X**3 + 1, NU), from_power(X**2 + 1, NU))
    assert k == 0 and S.to_power().degree == 0


def test_sylvester_examples():
    F, G = Poly([-1, 1, -2, 1]), Poly([-1, -1, 1])
    assert sylvester_subresultant(F, G, 1) == X - 2
    assert divmod(F, G)[1] == X - 2
    assert sylvester_subresultant(X**2 - 1, X - 2, 0) == Poly([3])
    with pytest.raises(DegreeError):
        sylvester_subresultant(X, X, 0)


def test_root_based_examples():
    F = Poly.from_roots([1, 2, 3])
    assert F == Poly([-6, 11, -6, 1])
    G = X**2 - X - 1
    assert root_based_subresultant([1, 2, 3], 1, G, 1) == sylvester_subresultant(F, G, 1)
    assert root_based_subresultant([1, 2, 3], 1, X - 1, 0) == Poly()
    assert root_based_subresultant([5], 1, Poly([1]), 0) == Poly([1])
    with pytest.raises(RootsError):
        root_based_subresultant([1, 1, 2], 1, G, 0)
    with pytest.raises(DegreeError):
        root_based_subresultant([1, 2], 1, G, 0)


def test_k_equals_m():
    # with deg F = m + 1 the top subresultant is G itself
    P = make_power_basis(4)
    F, G = 2 * X**4 + X - 3, 5 * X**3 + X**2 - 1
    S = bezout_subresultant(from_power(F, P), from_power(G, P), 3)
    assert S.to_power() == sylvester_subresultant(F, G, 3)


fg_bases = st.integers(2, 7).flatmap(lambda n: st.tuples(
    polys(max_degree=n, min_degree=n), st.integers(0, n - 1).flatmap(
        lambda m: polys(max_degree=m, min_degree=m)), bases(n)))


@settings(max_examples=60, deadline=None)
@given(fg_bases)
def test_bezout_matches_sylvester(data):
    F, G, b = data
    Fb, Gb = from_power(F, b), from_power(G, b)
    for k in range(G.degree + 1):
        S = bezout_subresultant(Fb, Gb, k)
        assert S.to_power() == sylvester_subresultant(F, G, k)
        assert S.to_power().degree <= k


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    polys(max_degree=n, min_degree=n), st.integers(0, n - 1).flatmap(
        lambda m: polys(max_degree=m, min_degree=m)), bases(n), bases(n))))
def test_basis_independence(data):
    F, G, b1, b2 = data
    assert chain_in_power(F, G, b1) == chain_in_power(F, G, b2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6, unique=True),
       nonzero_rationals, st.data())
def test_root_oracle_agrees(roots, lead, data):
    n = len(roots)
    m = data.draw(st.integers(0, n - 1))
    G = data.draw(polys(max_degree=m, min_degree=m))
    F = Poly.from_roots(roots, lead)
    Fb, Gb = from_power(F, make_newton_basis(roots)), from_power(G, make_newton_basis(roots))
    for k in range(m + 1):
        r = root_based_subresultant(roots, lead, G, k)
        assert r == sylvester_subresultant(F, G, k)
        assert r == bezout_subresultant(Fb, Gb, k).to_power()


@settings(max_examples=40, deadline=None)
@given(polys(max_degree=3, min_degree=0), polys(max_degree=4, min_degree=1), st.data())
def test_gcd_criterion(H, F1, data):
    G1 = data.draw(polys(max_degree=F1.degree - 1, min_degree=0))
    assume(gcd(F1, G1) == Poly([1]))
    F, G = H * F1, H * G1
    b = make_power_basis(F.degree)
    chain = subresultant_chain(from_power(F, b), from_power(G, b))
    d = H.degree
    assert all(s == 0 for s in chain.principals[:d])
    assert chain.principals[d] != 0
    S = chain.polys[d].to_power()
    assert S.degree == d and (S % gcd(F, G)).is_zero()


def test_gcd_degree_pattern_matches_sylvester():
    rng = random.Random(11)
    for _ in range(30):
        H = rand_poly(rng, rng.randint(0, 3))
        F1 = rand_poly(rng, rng.randint(1, 4))
        G1 = rand_poly(rng, rng.randint(0, F1.degree - 1))
        F, G = H * F1, H * G1
        b = rand_basis(rng, F.degree)
        chain = subresultant_chain(from_power(F, b), from_power(G, b))
        syl = [sylvester_subresultant(F, G, k)[k] for k in range(G.degree + 1)]
        assert [s == 0 for s in chain.principals] == [s == 0 for s in syl]
