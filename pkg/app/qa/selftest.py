"""
Golden and calibration checks.

Each check recomputes a known fact about the crystals and compares it
with the expected value. The CLI selftest command runs all of them; the
test suite calls them one by one.

Checks:
    - sl3_adjoint: B(omega_1 + omega_2) for sl_3 on components and on tableaux.
    - column_bijection: the sl_10 column (1,5,8,10).
    - grassmannian: sl_2, stable exactly for v <= w.
    - projective_lines: n stable components at w = e^1 + e^n, v = (1,...,1).
    - flag_chain: w = N e^n, stable iff v_1 <= ... <= v_n <= N.
    - kostka: weight multiplicities against the dimension formula.
    - stability_agreement: fixpoint vs kernel criterion on random points.
    - calibration: the fast rule against the geometric operators.

Usage:
    python -m app selftest [--quick]
"""

from dataclasses import dataclass, field
from itertools import product

from app.core import rep
from app.core.cartan import partition_of_weight, weight_from_dimvec, weyl_dim
from app.crystals import binf, blambda, bridge, fast_rule, tableau
from app.observability.events import emit
from app.policies.genericity import GenericitySampler
from app.types.errors import CrystalError
from app.types.segments import Multisegment
from app.types.tableaux import Tableau
from app.types.weights import RootDatum

SL3_ADJOINT_EDGES = {
    ("(11/2)", 1, "(12/2)"),
    ("(11/3)", 1, "(12/3)"),
    ("(12/3)", 1, "(22/3)"),
    ("(13/3)", 1, "(23/3)"),
    ("(11/2)", 2, "(11/3)"),
    ("(12/2)", 2, "(13/2)"),
    ("(13/2)", 2, "(13/3)"),
    ("(22/3)", 2, "(23/3)"),
}


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.name, "ok": self.ok, **self.detail}


def check_sl3_adjoint(sampler: GenericitySampler) -> CheckResult:
    d = RootDatum.type_a(2)
    tab = tableau.generate_tableau_graph(d, (2, 1))
    geo = blambda.generate_blambda(d, (1, 1), sampler)
    iso = bridge.crystal_isomorphic(geo, tab)
    x_a_zero = iso.matching.get(Multisegment.of(2, [(1, 1), (2, 2)]).key())
    x_abar_zero = iso.matching.get(Multisegment.of(2, [(1, 2)]).key())
    ok = (
        set(tab.edges()) == SL3_ADJOINT_EDGES
        and len(geo) == 8
        and geo.edge_count() == 8
        and iso.isomorphic
        and x_a_zero == "(12/3)"
        and x_abar_zero == "(13/2)"
    )
    return CheckResult("sl3_adjoint", ok, {"nodes": len(geo), "edges": geo.edge_count(), "reason": iso.reason})


def check_column_bijection() -> CheckResult:
    d = RootDatum.type_a(9)
    column = Tableau(9, ((1,), (5,), (8,), (10,)))
    m = bridge.tableau_to_multisegment(column)
    expected = Multisegment.of(9, [(4, 9), (3, 7), (2, 4)])
    wdims = tuple(int(k == 4) for k in range(1, 10))
    back = bridge.multisegment_to_tableau(d, m, wdims)
    return CheckResult("column_bijection", m == expected and back == column, {"segments": m.to_pairs()})


def check_grassmannian(sampler: GenericitySampler, max_w: int) -> CheckResult:
    failed = [w for w in range(max_w + 1) if not blambda.grassmannian_check(w, sampler)]
    return CheckResult("grassmannian", not failed, {"failed": failed})


def check_projective_lines(sampler: GenericitySampler, ranks: tuple[int, ...]) -> CheckResult:
    counts = {}
    for n in ranks:
        wdims = tuple(int(k in (1, n)) for k in range(1, n + 1))
        counts[n] = blambda.count_stable_components(n, (1,) * n, wdims, sampler)
    return CheckResult("projective_lines", all(c == n for n, c in counts.items()), {"counts": counts})


def check_flag_chain(sampler: GenericitySampler, ranks: tuple[int, ...], max_n: int) -> CheckResult:
    mismatches = []
    for n in ranks:
        d = RootDatum.type_a(n)
        for big_n in range(1, max_n + 1):
            wdims = (0,) * (n - 1) + (big_n,)
            for v in product(range(big_n + 1), repeat=n):
                got = blambda.flag_nonempty_check(d, wdims, v, sampler)
                if got != blambda.flag_chain_condition(v, big_n):
                    mismatches.append([n, big_n, list(v)])
    return CheckResult("flag_chain", not mismatches, {"mismatches": mismatches})


def check_kostka(max_size: int) -> CheckResult:
    bad = []
    if tableau.kostka((2, 1), (1, 1, 1)) != 2:
        bad.append("(2,1),(1,1,1)")
    for n in (1, 2, 3):
        d = RootDatum.type_a(n)
        for wdims in product(range(max_size + 1), repeat=n):
            shape = partition_of_weight(d, weight_from_dimvec(d, wdims))
            if not 0 < sum(shape) <= max_size:
                continue
            total = sum(
                tableau.kostka(shape, mu)
                for mu in product(range(sum(shape) + 1), repeat=n + 1)
                if sum(mu) == sum(shape)
            )
            if total != weyl_dim(d, weight_from_dimvec(d, wdims)):
                bad.append(f"A{n} {wdims}")
    return CheckResult("kostka", not bad, {"failed": bad})


def check_stability_agreement(sampler: GenericitySampler, points: int) -> CheckResult:
    """
    Random framed points over conormal fibers; is_stable raises on any
    disagreement between the two criteria.
    """
    pool = [m for n in (1, 2, 3) for m in binf.multisegments_up_to(n, 3) if m.size]
    rng = sampler.rng_for("spot-check", [points])
    stable = 0
    for k in range(points):
        m = pool[int(rng.integers(len(pool)))]
        x = binf.generic_point(m, sampler, "spot-check", k)
        wdims = tuple(int(w) for w in rng.integers(0, 3, size=m.n))
        # small entries so that unstable framings actually occur
        t = rep.random_framing(x, wdims, rng, 1)
        stable += rep.is_stable(rep.framed(x, wdims, t))
    return CheckResult("stability_agreement", True, {"points": points, "stable": stable})


def check_calibration(sampler: GenericitySampler, level: tuple[int, int], spot_checks: int,
                      spot_total: int) -> CheckResult:
    conv = fast_rule.calibrate_fast_rule(sampler, max_rank=level[0], total=level[1],
                                         spot_checks=spot_checks, spot_total=spot_total)
    return CheckResult("calibration", True, {
        "convention": str(conv),
        "level": list(level),
        "spot_checks": spot_checks,
        "spot_total": spot_total,
    })


def run_checks(sampler: GenericitySampler, full: bool = True) -> list[CheckResult]:
    """
    Run every check; acceptance scale by default, smaller sweeps when not full.

    A check that raises counts as failed.
    """
    plan = [
        ("sl3_adjoint", lambda: check_sl3_adjoint(sampler)),
        ("column_bijection", check_column_bijection),
        ("grassmannian", lambda: check_grassmannian(sampler, 5 if full else 3)),
        ("projective_lines", lambda: check_projective_lines(sampler, (2, 3, 4) if full else (2, 3))),
        ("flag_chain", lambda: check_flag_chain(sampler, (2, 3) if full else (2,), 3 if full else 2)),
        ("kostka", lambda: check_kostka(6 if full else 4)),
        ("stability_agreement", lambda: check_stability_agreement(sampler, 1000 if full else 100)),
        ("calibration", lambda: check_calibration(
            sampler,
            fast_rule.FULL_CALIBRATION if full else fast_rule.QUICK_CALIBRATION,
            fast_rule.SPOT_CHECKS if full else 50,
            fast_rule.SPOT_TOTAL if full else 5,
        )),
    ]
    results = []
    for name, check in plan:
        try:
            result = check()
        except CrystalError as err:
            result = CheckResult(name, False, {"error": f"{type(err).__name__}: {err}"})
        emit("SELFTEST_CHECK", result.to_dict())
        results.append(result)
    return results


if __name__ == "__main__":
    for r in run_checks(GenericitySampler.create(seed=0)):
        print(f"{r.name:<22} {'ok' if r.ok else 'FAIL'}")
