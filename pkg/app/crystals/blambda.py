"""
Highest-weight crystals B(lambda) as the stability cut of B(infinity).

A component of Lambda(v) survives in L(v, w) when a generic framed point
over it is stable. Stability is open, so one stable sample certifies the
component; it is declared unstable after every sample failed.

generate_blambda walks B(infinity) from the empty multisegment and keeps
an f_i edge only when its target is stable. Weights are bounded below, so
the walk ends; NODE_BUDGET guards against a broken stability filter.
"""

from app.core import component_cache, rep
from app.core.cartan import pairing, root_lattice_element, weight_from_dimvec, weyl_dim
from app.crystals import binf
from app.crystals.graph import CrystalGraph, build_graph
from app.policies.genericity import GenericitySampler
from app.types.crystal import CrystalEngine, CrystalNode
from app.types.errors import DomainError
from app.types.metrics import METRICS
from app.types.points import DimVector, check_dims
from app.types.segments import Multisegment
from app.types.weights import RootDatum

NODE_BUDGET = 10_000


def _check_wdims(n: int, wdims) -> DimVector:
    wdims = check_dims(wdims)
    if len(wdims) != n:
        raise DomainError(f"framing vector {wdims} has wrong length for A{n}")
    return wdims


def is_stable_component(m: Multisegment, wdims: DimVector, sampler: GenericitySampler) -> bool:
    """
    Whether a generic framed point over the component of m is stable.

    Args:
        m: Component label.
        wdims: Framing dimensions w.
        sampler: Source of the generic points and framings.
    """
    wdims = _check_wdims(m.n, wdims)
    key = ("stable", (sampler.seed, sampler.policy.samples, sampler.policy.bound), m.key(), m.n, wdims)
    return component_cache.memoize(key, lambda: _is_stable_component(m, wdims, sampler))


def _is_stable_component(m: Multisegment, wdims: DimVector, sampler: GenericitySampler) -> bool:
    if m.size == 0:
        return True
    for attempt in range(sampler.policy.samples):
        x = binf.generic_point(m, sampler, "stability", attempt, extra=wdims)
        rng = sampler.rng_for("stability", m.seed_ints() + list(wdims), attempt + sampler.policy.samples)
        t = rep.random_framing(x, wdims, rng, sampler.policy.bound)
        METRICS.bump("stability_checks")
        if rep.is_stable(rep.framed(x, wdims, t)):
            return True
    return False


def blambda_element(d: RootDatum, m: Multisegment, wdims: DimVector, sampler: GenericitySampler,
                    engine: CrystalEngine = CrystalEngine.GEOMETRIC) -> CrystalNode:
    """
    Decorate m as an element of B(omega_w): wt = omega_w - alpha_v, with
    epsilon_i read in B(infinity).
    """
    base = binf.binf_element(d, m, sampler, engine)
    wt = weight_from_dimvec(d, wdims) - root_lattice_element(d, m.dimvec)
    phi = tuple(e + pairing(d, i, wt) for i, e in enumerate(base.eps, start=1))
    return CrystalNode(key=m.key(), payload=m, wt=wt, eps=base.eps, phi=phi)


def generate_blambda(d: RootDatum, wdims: DimVector, sampler: GenericitySampler,
                     engine: CrystalEngine = CrystalEngine.GEOMETRIC, jobs: int = 1,
                     node_budget: int = NODE_BUDGET) -> CrystalGraph:
    """
    The crystal B(omega_w) on stable components.

    Raises:
        DomainError: If wdims is negative or zero.
        BudgetExceededError: If more than node_budget components are reached.
    """
    wdims = _check_wdims(d.n, wdims)
    if not any(wdims):
        raise DomainError("framing vector must be nonzero")
    f = binf.f_operator(engine, sampler)

    def successors(m: Multisegment) -> list[tuple[int, Multisegment]]:
        out = []
        for i in range(1, d.n + 1):
            target = f(m, i)
            if is_stable_component(target, wdims, sampler):
                out.append((i, target))
        return out

    return build_graph(
        d=d,
        root=Multisegment.empty(d.n),
        successors=successors,
        decorate=lambda m: blambda_element(d, m, wdims, sampler, engine),
        jobs=jobs,
        budget=node_budget,
        header={"model": "blambda", "engine": engine.value, "wdims": list(wdims)},
    )


def staircase_check(m: Multisegment, r: int) -> bool:
    """
    Stable components for w = e^r: left endpoints r, r-1, ... and strictly
    decreasing right endpoints.
    """
    if not 1 <= r <= m.n:
        raise DomainError(f"vertex {r} out of range 1..{m.n}")
    segs = m.segments
    for l, seg in enumerate(segs):
        if seg.i != r - l:
            return False
        if l and seg.j >= segs[l - 1].j:
            return False
    return True


def stable_components(n: int, v: DimVector, wdims: DimVector, sampler: GenericitySampler) -> list[Multisegment]:
    """Every stable component of Lambda(v) for framing w, in canonical order."""
    return [m for m in binf.enumerate_multisegments(n, tuple(v)) if is_stable_component(m, wdims, sampler)]


def count_stable_components(n: int, v: DimVector, wdims: DimVector, sampler: GenericitySampler) -> int:
    return len(stable_components(n, v, wdims, sampler))


def flag_nonempty_check(d: RootDatum, wdims: DimVector, v: DimVector, sampler: GenericitySampler) -> bool:
    """
    Whether L(v, N e^n) has a stable component.

    Raises:
        DomainError: If wdims is not supported at vertex n alone.
    """
    wdims = _check_wdims(d.n, wdims)
    if any(wdims[:-1]):
        raise DomainError(f"framing {wdims} must be supported at vertex {d.n} only")
    return bool(stable_components(d.n, v, wdims, sampler))


def flag_chain_condition(v: DimVector, big_n: int) -> bool:
    """v_1 <= v_2 <= ... <= v_n <= N."""
    return all(a <= b for a, b in zip(v, v[1:])) and (not v or v[-1] <= big_n)


def grassmannian_check(w: int, sampler: GenericitySampler) -> bool:
    """
    For sl_2 with framing w: a stable component exists at v exactly when
    v <= w, and B(w omega_1) has w + 1 elements.
    """
    if w < 0:
        raise DomainError(f"framing must be >= 0, got {w}")
    d = RootDatum.type_a(1)
    for v in range(w + 2):
        if bool(stable_components(1, (v,), (w,), sampler)) != (v <= w):
            return False
    if w == 0:
        return True
    return len(generate_blambda(d, (w,), sampler)) == w + 1 == weyl_dim(d, weight_from_dimvec(d, (w,)))
