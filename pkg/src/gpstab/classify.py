"""Stability verdicts and predicted automorphism groups for GP(n, k) and its cover.

``classify_stability`` and ``predicted_group`` are pure arithmetic in (n, k).
``verify_pair`` recomputes everything by search and compares.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from . import explicit
from .graphs import (
    GpParams,
    as_params,
    is_bipartite,
    is_connected,
    is_vertex_determining,
    make_dgp,
    make_gp,
    odd_cover_map,
    odd_cover_target,
    split_cover,
)
from .perms import Perm, PermGroup, Presentation, relator_holds
from .search import SearchTimeout, automorphism_group, b_group, c_group


class Verdict(str, Enum):
    STABLE = "Stable"
    TRIVIALLY_UNSTABLE = "TriviallyUnstable"
    NONTRIVIALLY_UNSTABLE = "NontriviallyUnstable"


class Reason(str, Enum):
    ODD_N = "OddN"
    EVEN_N_ODD_K = "EvenNOddK"
    CONGRUENCE = "CongruencePlusMinusOne"
    N_EQUALS_4K = "NEquals4k"
    NO_CONDITION = "NoCondition"


REASON_TEXT = {
    Reason.ODD_N: "n odd",
    Reason.EVEN_N_ODD_K: "n even, k odd",
    Reason.CONGRUENCE: "k^2=+-1 mod n/2",
    Reason.N_EQUALS_4K: "n=4k",
    Reason.NO_CONDITION: "no condition",
}


@dataclass(frozen=True)
class StabilityVerdict:
    verdict: Verdict
    reasons: Tuple[Reason, ...]

    @property
    def reason(self) -> str:
        return "+".join(r.value for r in self.reasons)


def _pm1(a: int, m: int) -> Tuple[bool, bool]:
    """(a = 1 mod m, a = -1 mod m)."""
    return (a - 1) % m == 0, (a + 1) % m == 0


def classify_stability(params) -> StabilityVerdict:
    n, k = as_params(params)
    if n % 2:
        return StabilityVerdict(Verdict.STABLE, (Reason.ODD_N,))
    if k % 2:
        return StabilityVerdict(Verdict.TRIVIALLY_UNSTABLE, (Reason.EVEN_N_ODD_K,))
    reasons = []
    if any(_pm1(k * k, n // 2)):
        reasons.append(Reason.CONGRUENCE)
    if n == 4 * k:
        reasons.append(Reason.N_EQUALS_4K)
    if reasons:
        return StabilityVerdict(Verdict.NONTRIVIALLY_UNSTABLE, tuple(reasons))
    return StabilityVerdict(Verdict.STABLE, (Reason.NO_CONDITION,))


def half_odd_congruence(params) -> bool:
    """n = 2m with m >= 3 odd, k even and k^2 = +-1 (mod m)."""
    n, k = as_params(params)
    m, r = divmod(n, 2)
    return r == 0 and m >= 3 and m % 2 == 1 and k % 2 == 0 and any(_pm1(k * k, m))


def four_k_even(params) -> bool:
    n, k = as_params(params)
    return n == 4 * k and k % 2 == 0


# -- group specifications ------------------------------------------------------

class Family(str, Enum):
    F = "F"
    H = "H"
    J = "J"
    K = "K"
    L = "L"
    M = "M"
    N = "N"
    SPORADIC = "Sporadic"


# order of Aut(GP(n,k)) for the exceptional pairs, with its factorisation
GP_SPORADIC = {
    (4, 1): ("GP41", "S4 x Z2", 24 * 2),
    (5, 2): ("GP52", "S5", 120),
    (8, 3): ("GP83", "GL(2,3) : Z2", 48 * 2),
    (10, 2): ("GP102", "A5 x Z2", 60 * 2),
    (10, 3): ("GP103", "S5 x Z2", 120 * 2),
    (12, 5): ("GP125", "S4 x S3", 24 * 6),
    (24, 5): ("GP245", "(GL(2,3) x Z3) : Z2", 48 * 3 * 2),
}

# the two cover groups that are not wreath products of the above
COVER_SPORADIC = {
    (5, 2): ("GP52", "S5 x Z2", 120 * 2),
    (10, 2): ("GP102", "(A5 x Z2^2) : Z2", 60 * 4 * 2),
}


@dataclass
class GroupSpec:
    family: Family
    parameters: Tuple[int, ...]
    wreath: bool
    predicted_order: int
    sporadic_tag: Optional[str] = None
    description: str = ""
    case: str = ""
    realization: Optional[Dict[str, Perm]] = field(default=None, repr=False)

    @property
    def label(self) -> str:
        if self.family is Family.SPORADIC:
            return self.description
        name = f"{self.family.value}({','.join(map(str, self.parameters))})"
        return f"{name} wr S2" if self.wreath else name

    @property
    def presentation(self) -> Optional[Presentation]:
        if self.family is Family.SPORADIC:
            return None
        return presentation(self.family, *self.parameters)


def family_order(family: Family, m: int) -> int:
    if family is Family.F:
        return 2 * m
    if family in (Family.H, Family.J, Family.K):
        return 4 * m
    return 8 * m


def presentation(family: Family, m: int, k: int = 0) -> Presentation:
    """Relators for the seven families, with exponents reduced mod m."""
    family = Family(family)
    if family is Family.F:
        return Presentation(("rho", "delta"), (
            f"rho^{m}", "delta^2", "delta rho delta = rho^-1"), f"F({m})")
    if family is Family.H:
        return Presentation(("rho", "alpha"), (
            f"rho^{m}", "alpha^4", f"alpha rho alpha^-1 = rho^{k % m}"), f"H({m},{k})")
    if family is Family.J:
        return Presentation(("rho", "delta", "alpha"), (
            f"rho^{m}", "delta^2", "alpha^2", "delta rho delta = rho^-1",
            f"alpha rho alpha = rho^{k % m}", "alpha delta alpha = delta"), f"J({m},{k})")
    base = (f"rho^{m}", "delta^2", "beta^2", "delta rho delta = rho^-1",
            "beta rho beta = rho", "beta delta beta = delta")
    half = m // 2
    if family is Family.K:
        return Presentation(("rho", "delta", "beta"), base, f"K({m},{k})")
    if family is Family.L:
        return Presentation(("rho", "delta", "beta", "lambda"), base + (
            "lambda^4", f"lambda^-1 rho lambda = rho^{(k * k + k - 1) % m}",
            "lambda^-1 delta lambda = delta", f"lambda^-1 beta lambda = rho^{half} beta",
            f"lambda^2 = rho^{half}"), f"L({m},{k})")
    if family is Family.M:
        return Presentation(("rho", "delta", "beta", "tau"), base + (
            "tau^4", f"tau^-1 rho tau = rho^{(half + k) % m}", "tau^-1 delta tau = delta",
            f"tau^-1 beta tau = rho^{half} beta", f"tau^2 = rho^{half} delta"), f"M({m},{k})")
    if family is Family.N:
        return Presentation(("rho", "delta", "beta", "theta"), base + (
            "theta^2", f"theta rho theta = rho^{(2 * k + 1) % m}", "theta delta theta = delta",
            f"theta beta theta = rho^{half} beta"), f"N({m},{k})")
    raise ValueError(f"no presentation for {family}")


def _gp_family(n: int, k: int) -> Family:
    plus, minus = _pm1(k * k, n)
    if plus:
        return Family.J
    if minus:
        return Family.H
    return Family.F


def _gp_generators(n: int, k: int, family: Family) -> Dict[str, Perm]:
    p = GpParams(n, k)
    gens = {"rho": explicit.gp_rho(p)}
    if family is not Family.H:
        gens["delta"] = explicit.gp_delta(p)
    if family is not Family.F:
        gens["alpha"] = explicit.gp_alpha(p)
    return gens


def predicted_gp_aut(params) -> GroupSpec:
    """Aut(GP(n, k)) from the known classification, with generators on V(GP)."""
    n, k = as_params(params)
    if (n, k) in GP_SPORADIC:
        tag, desc, order = GP_SPORADIC[(n, k)]
        return GroupSpec(Family.SPORADIC, (n, k), False, order, tag, desc, "sporadic")
    fam = _gp_family(n, k)
    params_out = (n,) if fam is Family.F else (n, k)
    case = {Family.F: "i", Family.J: "ii", Family.H: "iii"}[fam]
    return GroupSpec(fam, params_out, False, family_order(fam, n), case=case,
                     realization=_gp_generators(n, k, fam))


def _conjugate_through(images: List[int], gens: Dict[str, Perm]) -> Dict[str, Perm]:
    """Pull permutations of the target back along the isomorphism ``images``."""
    inv = [0] * len(images)
    for x, y in enumerate(images):
        inv[y] = x
    return {name: Perm([inv[g[images[x]]] for x in range(len(images))], check=False)
            for name, g in gens.items()}


def _lift_to_part(split, gens: Dict[str, Perm], degree: int) -> Dict[str, Perm]:
    back = {y: x for x, y in split.map1.items()}
    out = {}
    for name, g in gens.items():
        images = list(range(degree))
        for x in split.part1:
            images[x] = back[g[split.map1[x]]]
        out[name] = Perm(images, check=False)
    return out


def predicted_group(params) -> GroupSpec:
    """Predicted Aut(DGP(n, k)), realised as permutations of V(DGP) when not sporadic."""
    params = as_params(params)
    n, k = params
    if n % 2:
        if (n, k) in COVER_SPORADIC:
            tag, desc, order = COVER_SPORADIC[(n, k)]
            return GroupSpec(Family.SPORADIC, (n, k), False, order, tag, desc, "ii.4")
        target = odd_cover_target(params)
        fam = _gp_family(n, k)
        m, k2 = target.n, target.k
        case = ("i." if k % 2 else "ii.") + {Family.F: "1", Family.J: "2", Family.H: "3"}[fam]
        gens = _conjugate_through(odd_cover_map(params), _gp_generators(m, k2, fam))
        params_out = (m,) if fam is Family.F else (m, k2)
        return GroupSpec(fam, params_out, False, family_order(fam, m), case=case, realization=gens)

    if k % 2:
        if (n, k) in GP_SPORADIC:
            tag, desc, order = GP_SPORADIC[(n, k)]
            return GroupSpec(Family.SPORADIC, (n, k), True, 2 * order * order, tag,
                             f"({desc}) wr S2", "iii.sporadic")
        fam = _gp_family(n, k)
        base = family_order(fam, n)
        split = split_cover(params)
        gens = _lift_to_part(split, _gp_generators(n, k, fam), 4 * n)
        gens["swap"] = explicit.beta(params)
        case = "iii." + {Family.F: "1", Family.J: "2", Family.H: "3"}[fam]
        params_out = (n,) if fam is Family.F else (n, k)
        return GroupSpec(fam, params_out, True, 2 * base * base, case=case, realization=gens)

    if (n, k) in COVER_SPORADIC:
        tag, desc, order = COVER_SPORADIC[(n, k)]
        return GroupSpec(Family.SPORADIC, (n, k), False, order, tag, desc, "iv.5")
    gens = {"rho": explicit.rho(params), "delta": explicit.delta(params), "beta": explicit.beta(params)}
    plus, minus = _pm1(k * k, n // 2)
    # L, M, N are checked in this order; the conditions never overlap for k < n/2
    if plus:
        fam, case = Family.L, "iv.1"
        gens["lambda"] = explicit.lambda_perm(params)
    elif minus:
        fam, case = Family.M, "iv.2"
        gens["tau"] = explicit.tau_perm(params)
    elif n == 4 * k:
        fam, case = Family.N, "iv.3"
        gens["theta"] = explicit.theta(params)
    else:
        fam, case = Family.K, "iv.4"
    return GroupSpec(fam, (n, k), False, family_order(fam, n), case=case, realization=gens)


def overlapping_conditions(params) -> bool:
    """More than one of the L/M/N conditions holds (never, for 1 <= k < n/2)."""
    n, k = as_params(params)
    if n % 2 or k % 2:
        return False
    plus, minus = _pm1(k * k, n // 2)
    return (plus + minus + (n == 4 * k)) > 1


def parity_case(params) -> str:
    n, k = as_params(params)
    return f"{'odd' if n % 2 else 'even'}-{'odd' if k % 2 else 'even'}"


# -- verification --------------------------------------------------------------

@dataclass
class VerificationRecord:
    n: int
    k: int
    parity_case: str
    verdict: str
    reason: str
    aut_gp_order: Optional[int]
    a_order_brute: Optional[int]
    a_order_predicted: int
    b_order: Optional[int]
    c_order: Optional[int]
    family: str
    wreath: bool
    sporadic_tag: Optional[str]
    status: str
    overlap: bool
    checks: Dict[str, bool]
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = self.passed
        order = ["n", "k", "parity_case", "verdict", "reason", "aut_gp_order", "a_order_brute",
                 "a_order_predicted", "b_order", "c_order", "family", "wreath", "sporadic_tag",
                 "pass", "status", "overlap", "checks", "elapsed_ms"]
        return {key: d[key] for key in order}


def definitional_verdict(params, aut_gp_order: int, a_order: int) -> Verdict:
    """Stability read off group orders plus the three trivial-instability tests."""
    if a_order == 2 * aut_gp_order:
        return Verdict.STABLE
    g = make_gp(params)
    if is_connected(g) and not is_bipartite(g) and is_vertex_determining(g):
        return Verdict.NONTRIVIALLY_UNSTABLE
    return Verdict.TRIVIALLY_UNSTABLE


def realization_checks(spec: GroupSpec, a: PermGroup) -> Dict[str, bool]:
    """Relators hold, generators lie in ``a``, and they generate a group of equal order."""
    gens = spec.realization
    pres = spec.presentation
    degree = a.degree
    return {
        "relators": all(relator_holds(r, gens, degree) for r in pres.relators),
        "containment": all(a.contains(p) for p in gens.values()),
        "realization_order": PermGroup(list(gens.values()), degree).order() == a.order(),
    }


def verify_pair(params, timeout: Optional[float] = None) -> VerificationRecord:
    """Check the stability verdict and predicted cover group of one (n, k).

    ``timeout`` (seconds) bounds the whole pair; exceeding it yields a record
    with ``status == "timeout"``.
    """
    params = as_params(params)
    n, k = params
    start = time.monotonic()
    spec = predicted_group(params)
    theory = classify_stability(params)
    base = dict(
        n=n, k=k, parity_case=parity_case(params), verdict=theory.verdict.value,
        reason=theory.reason, a_order_predicted=spec.predicted_order, family=spec.family.value,
        wreath=spec.wreath, sporadic_tag=spec.sporadic_tag, overlap=overlapping_conditions(params),
    )

    def remaining() -> Optional[float]:
        if timeout is None:
            return None
        left = timeout - (time.monotonic() - start)
        if left <= 0:
            raise SearchTimeout("pair deadline exceeded")
        return left

    try:
        aut_gp = automorphism_group(make_gp(params), remaining())
        a = automorphism_group(make_dgp(params), remaining())
        b = b_group(params, remaining())
        c = c_group(params, remaining())
    except SearchTimeout:
        return VerificationRecord(
            aut_gp_order=None, a_order_brute=None, b_order=None, c_order=None,
            status="timeout", checks={}, elapsed_ms=int(1000 * (time.monotonic() - start)), **base)

    gp_spec = predicted_gp_aut(params)
    checks = {
        "a_order": a.order() == spec.predicted_order,
        "gp_order": aut_gp.order() == gp_spec.predicted_order,
        "stability": definitional_verdict(params, aut_gp.order(), a.order()) == theory.verdict,
        "c_le_b_le_a": c.is_subgroup_of(b) and b.is_subgroup_of(a),
    }
    if spec.realization is not None:
        checks.update(realization_checks(spec, a))
    status = "pass" if all(checks.values()) else "fail"
    return VerificationRecord(
        aut_gp_order=aut_gp.order(), a_order_brute=a.order(), b_order=b.order(),
        c_order=c.order(), status=status, checks=checks,
        elapsed_ms=int(1000 * (time.monotonic() - start)), **base)
