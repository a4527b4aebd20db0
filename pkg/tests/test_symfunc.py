from fractions import Fraction

import pytest

from hecke_fh import combinatorics as cb
from hecke_fh import symfunc as sf
from hecke_fh.coefficients import Laurent, NPolynomial

N = NPolynomial.n()
one = NPolynomial.const(1)


def poly(*coeffs):
    """Polynomial in n from low-degree-first rational coefficients."""
    return NPolynomial({d: Laurent.const(Fraction(c)) for d, c in enumerate(coeffs) if c})


def test_m3_from_m2e():
    assert sf.m2e_matrix(3).row((3,)) == {(3,): 3, (2, 1): -3, (1, 1, 1): 1}


def test_trivial_sizes():
    assert sf.e2m_matrix(1).entries == {((1,), (1,)): 1}
    assert sf.m2e_matrix(1).entries == {((1,), (1,)): 1}


def test_e2m_matches_brute_force_expansion():
    for n in range(1, 7):
        e2m = sf.e2m_matrix(n)
        for mu in cb.partitions(n):
            collected = sf.collect_monomials(sf.elementary_poly(mu, n))
            assert collected == e2m.row(mu)


def test_gale_ryser_support():
    for n in range(1, 7):
        e2m = sf.e2m_matrix(n)
        for mu in cb.partitions(n):
            for lam in cb.partitions(n):
                assert (e2m[mu, lam] != 0) == cb.dominates(cb.conjugate(mu), lam)


def test_m2e_inverts_e2m():
    for n in range(1, 7):
        a, b = sf.e2m_matrix(n), sf.m2e_matrix(n)
        labels = a.labels
        for r in labels:
            for c in labels:
                assert sum(b[r, k] * a[k, c] for k in labels) == int(r == c)


def test_p_polynomials_of_21():
    expected = {
        (2, 1): poly(1), (3,): poly(-3), (1, 1): poly(3, -1),
        (2,): poly(-8, 2), (1,): poly(-5, 2), (): poly(0, 4, -1),
    }
    assert sf.p_row((2, 1)) == expected


def test_q_polynomial_of_21_on_empty():
    assert sf.q_polynomial((2, 1), ()) == poly(0, 1, Fraction(-3, 2), Fraction(1, 2))


def test_empty_completion():
    assert sf.p_polynomial((), ()) == one
    assert sf.q_polynomial((), ()) == one


def _completed_identity_holds(lam, n):
    """m_(lam -> n) = sum_mu P(n) e_(mu ^ n) as polynomials in n variables."""
    lhs = sf.monomial_poly(cb.complete_arrow(lam, n), n)
    rhs: dict = {}
    for mu, p in sf.p_row(lam).items():
        if sum(mu) > n:
            continue
        c = p(n).at_one()
        for e, v in sf.elementary_poly(cb.complete_up(mu, n), n).items():
            rhs[e] = rhs.get(e, 0) + c * v
    return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


@pytest.mark.parametrize("lam", [(), (1,), (2,), (1, 1), (2, 1)])
def test_p_identity_as_symmetric_functions(lam):
    start = sum(lam) + len(lam)
    for n in range(max(start, 1), min(start + 6, 7) + 1):
        assert _completed_identity_holds(lam, n)


@pytest.mark.parametrize("rho", [(), (1,), (2,), (1, 1), (2, 1), (3,)])
def test_q_identity_matches_counts(rho):
    start = sum(rho) + len(rho)
    for n in range(max(start, 1), start + 7):
        row = sf.q_row(rho)
        e = sf.collect_monomials(sf.elementary_poly(cb.complete_up(rho, n), n)) if n <= 6 else None
        for nu in cb.partitions_up_to(sum(rho)):
            if sum(nu) + len(nu) > n:
                continue
            want = sf.q_value(rho, nu, n)
            assert row.get(nu, NPolynomial())(n) == Laurent.const(want)
            if e is not None:
                assert e.get(cb.complete_arrow(nu, n), 0) == want


def test_p_and_q_compose_to_identity():
    for lam in cb.partitions_up_to(3):
        for n in range(2 * sum(lam) + 1, 2 * sum(lam) + 4):
            total: dict = {}
            for mu, p in sf.p_row(lam).items():
                for nu, qp in sf.q_row(mu).items():
                    total[nu] = total.get(nu, Laurent()) + p(n) * qp(n)
            total = {k: v for k, v in total.items() if not v.is_zero()}
            assert total == {lam: Laurent.const(1)}


def test_count_01_matrices():
    assert sf.count_01_matrices((2, 1), (1, 1, 1)) == 3
    assert sf.count_01_matrices((3,), (1, 1)) == 0
    assert sf.count_01_matrices((1, 1, 1), (1, 1, 1)) == 6


def test_transition_json():
    data = sf.m2e_matrix(3).to_json()
    assert data["labels"] == ["3", "2,1", "1,1,1"]
    assert data["rows"][0] == [3, -3, 1]
