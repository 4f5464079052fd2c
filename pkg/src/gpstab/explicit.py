"""Named permutations of DGP(n, k) and of GP(n, k).

All subscripts are reduced mod n as soon as they are formed.
"""
from __future__ import annotations

from math import gcd
from typing import Callable, Dict, Tuple

from .graphs import Graph, GpParams, ParameterError, as_params, dgp_id, dgp_vertex
from .perms import Perm


def _dgp_perm(n: int, rule: Callable[[str, int, int], Tuple[str, int, int]]) -> Perm:
    images = [0] * (4 * n)
    for x in range(4 * n):
        kind, i, layer = dgp_vertex(n, x)
        images[x] = dgp_id(n, *rule(kind, i, layer))
    return Perm(images)


def rho(params) -> Perm:
    n, _ = as_params(params)
    return _dgp_perm(n, lambda kind, i, j: (kind, i + 1, j))


def delta(params) -> Perm:
    n, _ = as_params(params)
    return _dgp_perm(n, lambda kind, i, j: (kind, -i, j))


def beta(params) -> Perm:
    n, _ = as_params(params)
    return _dgp_perm(n, lambda kind, i, j: (kind, i, 1 - j))


def theta(params) -> Perm:
    """Defined for n = 4k with k even."""
    n, k = as_params(params)
    if n != 4 * k or k % 2:
        raise ParameterError(f"theta needs n = 4k with k even, got ({n},{k})")

    def rule(kind, i, j):
        odd = (i + j) % 2 == 1
        if kind == "u":
            return kind, i + 2 * k if odd else i, j
        return kind, i if odd else i + 2 * k, j

    return _dgp_perm(n, rule)


def _check_lambda_tau_context(n: int, k: int) -> None:
    if n % 2 or k % 2 or gcd(n, k) != 2 or n % 4 == 0:
        raise ParameterError(
            f"lambda/tau need n, k even, gcd(n,k) = 2 and 4 not dividing n, got ({n},{k})"
        )


def _swap_rims(params, sign: int) -> Perm:
    n, k = as_params(params)
    _check_lambda_tau_context(n, k)

    def rule(kind, i, j):
        odd = (i + j) % 2 == 1
        shifted = sign + (i - k) * k
        if kind == "u":
            return "v", shifted if odd else i * k, j
        return "u", i * k if odd else shifted, j

    return _dgp_perm(n, rule)


def lambda_perm(params) -> Perm:
    return _swap_rims(params, 1)


def tau_perm(params) -> Perm:
    return _swap_rims(params, -1)


def lambda_valid(params) -> bool:
    n, k = as_params(params)
    _check_lambda_tau_context(n, k)
    return (k * k - 1) % (n // 2) == 0


def tau_valid(params) -> bool:
    n, k = as_params(params)
    _check_lambda_tau_context(n, k)
    return (k * k + 1) % (n // 2) == 0


def is_automorphism(g: Graph, p: Perm) -> bool:
    if p.degree != g.vertex_count:
        raise ValueError(f"degree mismatch: perm {p.degree} vs graph {g.vertex_count}")
    return all(g.has_edge(p[a], p[b]) for a, b in g.edges())


def dgp_generators(params) -> Dict[str, Perm]:
    """rho, delta, beta plus whichever of theta/lambda/tau exist for (n, k)."""
    params = as_params(params)
    n, k = params
    gens = {"rho": rho(params), "delta": delta(params), "beta": beta(params)}
    if n == 4 * k and k % 2 == 0:
        gens["theta"] = theta(params)
    if n % 2 == 0 and k % 2 == 0 and gcd(n, k) == 2 and n % 4:
        if lambda_valid(params):
            gens["lambda"] = lambda_perm(params)
        if tau_valid(params):
            gens["tau"] = tau_perm(params)
    return gens


# -- GP(n, k) itself -----------------------------------------------------------

def _gp_perm(n: int, rule: Callable[[str, int], Tuple[str, int]]) -> Perm:
    images = []
    for x in range(2 * n):
        kind, i = ("u", x) if x < n else ("v", x - n)
        kind2, i2 = rule(kind, i)
        images.append(i2 % n if kind2 == "u" else n + i2 % n)
    return Perm(images)


def gp_rho(params) -> Perm:
    n, _ = as_params(params)
    return _gp_perm(n, lambda kind, i: (kind, i + 1))


def gp_delta(params) -> Perm:
    n, _ = as_params(params)
    return _gp_perm(n, lambda kind, i: (kind, -i))


def gp_alpha(params) -> Perm:
    """Outer/inner swap ``u_i <-> v_{+-ki}``; needs k^2 = +-1 (mod n).

    The sign is chosen so that ``alpha rho alpha^-1 = rho^k`` in the right action.
    """
    n, k = as_params(params)
    if (k * k - 1) % n == 0:
        m = k
    elif (k * k + 1) % n == 0:
        m = -k
    else:
        raise ParameterError(f"alpha needs k^2 = +-1 (mod n), got ({n},{k})")
    return _gp_perm(n, lambda kind, i: ("v" if kind == "u" else "u", m * i))
