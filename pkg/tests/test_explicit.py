from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from conftest import valid_pairs
from gpstab import explicit
from gpstab.graphs import ParameterError, make_dgp, make_gp
from gpstab.perms import Perm, PermGroup
from gpstab.search import EdgeClass, edge_class_of

pairs = st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, (n - 1) // 2)))
LT_PAIRS = [(n, k) for n, k in valid_pairs(6, 40)
            if n % 2 == 0 and k % 2 == 0 and gcd(n, k) == 2 and n % 4]


def _fixes_classes(p, g: Perm) -> bool:
    d = make_dgp(p)
    return all(edge_class_of(p, (g[a], g[b])) == edge_class_of(p, (a, b)) for a, b in d.edges())


def test_theta_in_c():
    p = (8, 2)
    th = explicit.theta(p)
    assert explicit.is_automorphism(make_dgp(p), th)
    assert _fixes_classes(p, th)


@pytest.mark.parametrize("p", [(12, 3), (8, 3), (10, 2)])
def test_theta_rejects(p):
    with pytest.raises(ParameterError):
        explicit.theta(p)


def test_validity_examples():
    assert explicit.lambda_valid((6, 2))
    assert explicit.tau_valid((10, 2))
    assert not explicit.lambda_valid((10, 2))
    with pytest.raises(ParameterError):
        explicit.lambda_valid((8, 2))
    with pytest.raises(ParameterError):
        explicit.tau_perm((7, 2))


def test_is_automorphism_examples():
    assert explicit.is_automorphism(make_dgp((6, 2)), explicit.lambda_perm((6, 2)))
    assert not explicit.is_automorphism(make_dgp((10, 2)), explicit.lambda_perm((10, 2)))
    g = make_gp((7, 2))
    assert explicit.is_automorphism(g, Perm.identity(14))
    with pytest.raises(ValueError):
        explicit.is_automorphism(g, Perm.identity(13))


@given(pairs)
def test_dihedral_relations(p):
    n = p[0]
    rho, delta, beta = explicit.rho(p), explicit.delta(p), explicit.beta(p)
    assert (rho ** n).is_identity() and (delta ** 2).is_identity() and (beta ** 2).is_identity()
    assert delta * rho * delta == ~rho
    assert beta * rho * beta == rho and beta * delta * beta == delta
    assert PermGroup([rho, delta, beta]).order() == 4 * n
    d = make_dgp(p)
    assert all(explicit.is_automorphism(d, g) for g in (rho, delta, beta))


@pytest.mark.parametrize("n,k", LT_PAIRS)
def test_lambda_tau_validity_iff_automorphism(n, k):
    p = (n, k)
    d = make_dgp(p)
    lam, tau = explicit.lambda_perm(p), explicit.tau_perm(p)
    assert explicit.lambda_valid(p) == explicit.is_automorphism(d, lam)
    assert explicit.tau_valid(p) == explicit.is_automorphism(d, tau)
    rho, delta, beta = explicit.rho(p), explicit.delta(p), explicit.beta(p)
    half = rho ** (n // 2)
    if explicit.lambda_valid(p):
        assert ~lam * rho * lam == rho ** (k * k + k - 1)
        assert ~lam * delta * lam == delta
        assert ~lam * beta * lam == half * beta
        assert lam * lam == half
    if explicit.tau_valid(p):
        assert ~tau * rho * tau == rho ** (n // 2 + k)
        assert ~tau * delta * tau == delta
        assert ~tau * beta * tau == half * beta
        assert tau * tau == half * delta


@pytest.mark.parametrize("k", [2, 4, 6, 8, 10])
def test_theta_relations(k):
    p = (4 * k, k)
    rho, delta, beta, th = (explicit.rho(p), explicit.delta(p), explicit.beta(p), explicit.theta(p))
    assert th * rho * th == rho ** (2 * k + 1)
    assert th * delta * th == delta
    assert th * beta * th == rho ** (2 * k) * beta
    assert explicit.is_automorphism(make_dgp(p), th)


@pytest.mark.parametrize("n,k", [(n, k) for n, k in valid_pairs(5, 40) if (k * k - 1) % n == 0 or (k * k + 1) % n == 0])
def test_gp_alpha(n, k):
    p = (n, k)
    a, r = explicit.gp_alpha(p), explicit.gp_rho(p)
    assert explicit.is_automorphism(make_gp(p), a)
    assert a * r * ~a == r ** k


def test_gp_alpha_rejects():
    with pytest.raises(ParameterError):
        explicit.gp_alpha((7, 2))


def test_dgp_generators_names():
    assert set(explicit.dgp_generators((8, 2))) == {"rho", "delta", "beta", "theta"}
    assert set(explicit.dgp_generators((6, 2))) == {"rho", "delta", "beta", "lambda"}
    assert set(explicit.dgp_generators((10, 2))) == {"rho", "delta", "beta", "tau"}
    assert set(explicit.dgp_generators((12, 2))) == {"rho", "delta", "beta"}


def test_edge_class_helper():
    n = 8
    assert edge_class_of((8, 2), (0, 2 * n + 1)) is EdgeClass.OUTER
