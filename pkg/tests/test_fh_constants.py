import json
from fractions import Fraction

import pytest

from hecke_fh import combinatorics as cb
from hecke_fh import fh_constants as fh
from hecke_fh import hecke as hk
from hecke_fh.coefficients import Laurent
from hecke_fh.verify import pairs_up_to, q1_shadow

q = Laurent.q()
qi = Laurent.q(-1)
one = Laurent.q(0)

SMALL_PAIRS = [p for p in pairs_up_to(3) if p[0] and p[1]]


def _combine_norms(entries, n):
    total = hk.HeckeElement.zero(n)
    for nu, c in entries.items():
        if sum(nu) <= n:
            total = total + hk.norm_completed(nu, n).scale(c)
    return total


def _combine_gammas(values, n):
    total = hk.HeckeElement.zero(n)
    for nu, c in values.items():
        total = total + hk.gamma_completed(nu, n).scale(c)
    return total


# g-constants ---------------------------------------------------------------

def test_g_one_one():
    table = fh.g_constants((1,), (1,))
    assert table.entries == {(1,): one, (1, 1): q + 1 + qi, (2,): -(q + 2 + qi)}
    assert table.agreed_at == table.levels


def test_g_unit():
    assert fh.g_constants((), (2, 1)).entries == {(2, 1): one}


@pytest.mark.parametrize("lam,mu", SMALL_PAIRS)
def test_g_reproduces_norm_products(lam, mu):
    table = fh.g_constants(lam, mu)
    s = sum(lam) + sum(mu)
    for n in range(max(sum(lam), sum(mu), 1), min(s + 2, 6) + 1):
        prod = hk.norm_completed(lam, n) * hk.norm_completed(mu, n)
        assert prod == _combine_norms(table.entries, n)


@pytest.mark.parametrize("lam,mu", [p for p in pairs_up_to(4) if p[0] and p[1]])
def test_g_is_q_symmetric(lam, mu):
    for v in fh.g_constants(lam, mu).entries.values():
        assert v.is_q_symmetric()


def test_g_commutative():
    assert fh.g_constants((2,), (1,)).entries == fh.g_constants((1,), (2,)).entries


# a-constants at fixed n ----------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5])
def test_a_direct_matches_full_product(n):
    for lam, mu in [((1,), (1,)), ((1,), (2,)), ((2,), (1, 1))]:
        if sum(lam) + len(lam) > n or sum(mu) + len(mu) > n:
            continue
        prod = hk.gamma_completed(lam, n) * hk.gamma_completed(mu, n)
        assert prod == _combine_gammas(fh.a_constants_at_n(lam, mu, n), n)


def test_routes_agree_at_small_n():
    for n in (3, 4, 5):
        values = [fh.a_constants_at_n((1,), (2,), n, route) for route in fh.ROUTES]
        assert values[0] == values[1] == values[2]


def test_unit_law():
    for n in (4, 5, 6):
        assert fh.a_constants_at_n((), (1, 1), n) == {(1, 1): one}
    # the completed class of (1, 1) needs four points
    assert fh.a_constants_at_n((), (1, 1), 3) == {}


def test_unknown_route():
    with pytest.raises(ValueError):
        fh.a_constants_at_n((1,), (1,), 3, "bogus")


# polynomials in n ----------------------------------------------------------

def test_a_polynomials_one_one():
    table = fh.a_polynomials((1,), (1,))
    for n in range(4, 12):
        nn = Fraction(n)
        expected = {(): q.scale(nn * (nn - 1) / 2), (1,): (q - 1).scale(nn - 1),
                    (2,): q + 1 + qi, (1, 1): q + qi}
        assert table(n) == expected


@pytest.mark.parametrize("lam,mu", pairs_up_to(4))
def test_support_and_degree(lam, mu):
    table = fh.a_polynomials(lam, mu, check_routes=False)
    s = sum(lam) + sum(mu)
    for nu, p in table.entries.items():
        assert sum(nu) <= s
        assert p.degree() <= table.degree_bound


@pytest.mark.parametrize("lam,mu", pairs_up_to(3))
def test_q_equals_one_oracle(lam, mu):
    assert q1_shadow(lam, mu, 6)


def test_symbolic_cross_check():
    table = fh.a_polynomials((2,), (1,), check_routes=False)
    assert fh.symbolic_a((2,), (1,)) == table.entries


def test_route_verification_records_levels():
    table = fh.a_polynomials((1,), (1,))
    assert table.verified_at and max(table.verified_at) <= fh.ROUTE_CHECK_MAX


def test_held_out_node_n8():
    report = fh.verify_theorem1((1,), (1,), [8])
    assert report.all_match
    assert set(report.checks[8]) == {(), (1,), (2,), (1, 1)}


def test_atable_json_round_trip():
    table = fh.a_polynomials((2,), (1,), check_routes=False)
    back = fh.ATable.from_json(json.loads(json.dumps(table.to_json())))
    assert back == table


# cache --------------------------------------------------------------------

def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("HECKE_FH_CACHE", str(tmp_path))
    first = fh.cached_a_polynomials((1,), (1,))
    path = tmp_path / "a_1_1.json"
    assert path.exists()
    text = path.read_text()
    assert fh.cached_a_polynomials((1,), (1,)) == first
    assert path.read_text() == text
    assert not list(tmp_path.glob("*.tmp"))
    assert fh.clear_cache() == 1
    assert not path.exists()


def test_atomic_write_keeps_old_file(tmp_path):
    path = tmp_path / "t.json"
    fh.write_json_atomic(path, {"a": 1})
    with pytest.raises(TypeError):
        fh.write_json_atomic(path, {"a": object()})
    assert json.loads(path.read_text()) == {"a": 1}
    assert [p.name for p in tmp_path.iterdir()] == ["t.json"]


def test_cache_dir_override(tmp_path, monkeypatch):
    monkeypatch.setenv("HECKE_FH_CACHE", "/nonexistent")
    assert fh.cache_dir(tmp_path) == tmp_path
