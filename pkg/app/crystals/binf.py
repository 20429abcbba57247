"""
The B(infinity) crystal on irreducible components of Lusztig quiver
varieties of type A_n.

A component is named by the multisegment of the G_V-orbit whose conormal
bundle it closes. Everything is read off the fiber of that bundle over the
canonical point x_Omega = sum x^{i,j}: with x_Omega fixed the moment map is
linear in x_Omegabar, so the fiber is an exact null space.

epsilon_i is G_V-invariant and the conormal bundle is the G_V-sweep of this
fiber, so the generic value on the fiber is the generic value on the
component.

The operators follow the stratum correspondence
    Lambda(v - c e^i)_{i,0} <- ... -> Lambda(v)_{i,c}:
e_max restricts a generic point to S (S_i = sum of the images into V_i,
S_j = V_j otherwise) and decomposes the result; f and e then search for the
unique component with the right epsilon_i and e_max image.
"""

from dataclasses import dataclass
from itertools import product

from app.core import component_cache, linalg, rep
from app.core.cartan import pairing, root_lattice_element
from app.core.quiver import double_quiver
from app.observability.events import emit
from app.policies.genericity import GenericitySampler
from app.types.crystal import CrystalEngine, CrystalNode
from app.types.errors import DomainError, InternalError, UniquenessError
from app.types.metrics import METRICS
from app.types.points import RepPoint
from app.types.segments import Multisegment, Segment
from app.types.weights import RootDatum


@dataclass(frozen=True, eq=False)
class ConormalFiber:
    """
    The linear space of x_Omegabar with psi(x_Omega, x_Omegabar) = 0.

    Attributes:
        m: The component label.
        base: The canonical point, omega-bar maps zero.
        basis: One dict arrow_id -> integer matrix per basis vector.
    """
    m: Multisegment
    base: RepPoint
    basis: tuple[dict, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, coefficients: list[int]) -> RepPoint:
        if len(coefficients) != self.dimension:
            raise DomainError(f"need {self.dimension} coefficients, got {len(coefficients)}")
        maps = dict(self.base.maps)
        for arrow_id in self.base.maps:
            if arrow_id in self.base.double.omega:
                continue
            total = linalg.zeros(*self.base.maps[arrow_id].shape)
            for c, vec in zip(coefficients, self.basis):
                if c:
                    total = total + c * vec[arrow_id]
            maps[arrow_id] = total
        return RepPoint(double=self.base.double, dims=self.base.dims, maps=maps)


def _fingerprint(sampler: GenericitySampler) -> tuple[int, int, int]:
    return (sampler.seed, sampler.policy.samples, sampler.policy.bound)


def conormal_fiber(m: Multisegment) -> ConormalFiber:
    """
    Basis of the conormal fiber over the canonical point of m.

    Each unknown entry of x_Omegabar contributes one column psi(E_u) to a
    linear system; its null space is the fiber. Every point of the fiber
    satisfies psi = 0.
    """
    return component_cache.memoize(("fiber", m.key(), m.n), lambda: _conormal_fiber(m))


def _conormal_fiber(m: Multisegment) -> ConormalFiber:
    double = double_quiver(m.n)
    base = rep.multisegment_rep(double, m)
    unknowns = [
        (a.id, r, c)
        for a in double.quiver.arrows
        if a.id not in double.omega
        for r in range(base.maps[a.id].shape[0])
        for c in range(base.maps[a.id].shape[1])
    ]
    if not unknowns:
        return ConormalFiber(m=m, base=base, basis=())
    columns = []
    for arrow_id, r, c in unknowns:
        maps = dict(base.maps)
        unit = linalg.zeros(*base.maps[arrow_id].shape)
        unit[r, c] = 1
        maps[arrow_id] = unit
        psi = rep.moment_map(RepPoint(double=double, dims=base.dims, maps=maps))
        columns.append([x for i in double.quiver.vertices for x in psi[i].flat])
    equations = len(columns[0])
    system = linalg.zeros(equations, len(unknowns))
    for u, col in enumerate(columns):
        for e, value in enumerate(col):
            system[e, u] = value
    basis = []
    for vec in linalg.nullspace(system):
        maps = {a.id: linalg.zeros(*base.maps[a.id].shape)
                for a in double.quiver.arrows if a.id not in double.omega}
        for (arrow_id, r, c), value in zip(unknowns, vec):
            maps[arrow_id][r, c] = value
        basis.append(maps)
    return ConormalFiber(m=m, base=base, basis=tuple(basis))


def generic_point(m: Multisegment, sampler: GenericitySampler, purpose: str,
                  attempt: int, extra: tuple[int, ...] = ()) -> RepPoint:
    """A random exact point of the conormal fiber of m."""
    fiber = conormal_fiber(m)
    rng = sampler.rng_for(purpose, m.seed_ints() + list(extra), attempt)
    METRICS.bump("samples_drawn")
    return fiber.point(sampler.coefficients(rng, fiber.dimension))


def epsilon_vector(m: Multisegment, sampler: GenericitySampler) -> tuple[int, ...]:
    """Generic (epsilon_1, ..., epsilon_n) on the component of m."""
    key = ("eps", _fingerprint(sampler), m.key(), m.n)
    return component_cache.memoize(key, lambda: _epsilon_vector(m, sampler))


def _epsilon_vector(m: Multisegment, sampler: GenericitySampler) -> tuple[int, ...]:
    if m.size == 0:
        return (0,) * m.n
    best = [None] * m.n
    for attempt in range(sampler.policy.samples):
        x = generic_point(m, sampler, "epsilon", attempt)
        for i in range(1, m.n + 1):
            value = rep.epsilon_point(x, i)
            if best[i - 1] is None or value < best[i - 1]:
                best[i - 1] = value
    return tuple(best)


def epsilon_component(m: Multisegment, i: int, sampler: GenericitySampler) -> int:
    """
    Generic value of epsilon_i on the component of m.

    The minimum corank over sampler.policy.samples random fiber points.
    """
    if not 1 <= i <= m.n:
        raise DomainError(f"vertex {i} out of range 1..{m.n}")
    return epsilon_vector(m, sampler)[i - 1]


def e_max_geometric(m: Multisegment, i: int, sampler: GenericitySampler) -> tuple[Multisegment, int]:
    """
    Strip the i-top of a generic point: returns (mbar, c) with c = epsilon_i(m)
    and mbar in B(v - c e^i, infinity)_{i,0}.
    """
    if not 1 <= i <= m.n:
        raise DomainError(f"vertex {i} out of range 1..{m.n}")
    key = ("emax", _fingerprint(sampler), m.key(), m.n, i)
    return component_cache.memoize(key, lambda: _e_max_geometric(m, i, sampler))


def _e_max_geometric(m: Multisegment, i: int, sampler: GenericitySampler) -> tuple[Multisegment, int]:
    c = epsilon_component(m, i, sampler)
    if c == 0:
        return m, 0
    best = None
    best_profile = None
    policy = sampler.policy
    for attempt in range(max(policy.samples, policy.max_attempts)):
        if best is not None and attempt >= policy.samples:
            break
        x = generic_point(m, sampler, "emax", attempt, extra=(i,))
        if rep.epsilon_point(x, i) != c:
            continue
        bases = {k: linalg.identity(x.dim(k)) for k in x.double.quiver.vertices}
        bases[i] = linalg.column_basis(rep.incoming_matrix(x, i))
        restricted = rep.restrict_to_subspace(x, bases)
        if not rep.in_zero_set(restricted):
            raise InternalError(f"restriction of {m} at vertex {i} left the zero set of psi")
        profile = rep.rank_profile(restricted)
        if best_profile is None or sum(profile) > sum(best_profile):
            best, best_profile = restricted, profile
        if attempt == policy.samples - 1 and best is None:
            METRICS.bump("genericity_retries")
            emit("GENERICITY_RETRY", {"multisegment": str(m), "vertex": i, "epsilon": c})
    if best is None:
        raise InternalError(f"no sample of {m} reached the generic corank {c} at vertex {i}")
    return rep.decompose_segments(rep.restrict_omega(best)), c


def _unit(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign * int(k == i) for k in range(1, n + 1))


def _f_candidates(m: Multisegment, i: int) -> list[Multisegment]:
    out = [m.add(Segment(i, i))]
    distinct = sorted(set(m.segments))
    for seg in distinct:
        if seg.j == i - 1:
            out.append(m.replace(seg, Segment(seg.i, i)))
    for seg in distinct:
        if seg.i == i + 1:
            out.append(m.replace(seg, Segment(i, seg.j)))
    return list(dict.fromkeys(out))


def _e_candidates(m: Multisegment, i: int) -> list[Multisegment]:
    out = []
    distinct = sorted(set(m.segments))
    for seg in distinct:
        if seg == Segment(i, i):
            out.append(m.remove(seg))
        elif seg.j == i and seg.i < i:
            out.append(m.replace(seg, Segment(seg.i, i - 1)))
        elif seg.i == i and seg.j > i:
            out.append(m.replace(seg, Segment(i + 1, seg.j)))
    return list(dict.fromkeys(out))


def _search(m: Multisegment, i: int, target_dims: tuple[int, ...], candidates: list[Multisegment],
            qualifies, operator: str) -> Multisegment:
    hits = [c for c in candidates if qualifies(c)]
    if len(hits) == 1:
        return hits[0]
    if len(hits) > 1:
        raise UniquenessError(f"{operator}_{i}({m}) has {len(hits)} qualifying candidates")
    METRICS.bump("fallback_enumerations")
    emit("FALLBACK_ENUMERATION", {"operator": operator, "vertex": i, "multisegment": str(m)})
    hits = [c for c in enumerate_multisegments(m.n, target_dims) if qualifies(c)]
    if len(hits) != 1:
        raise UniquenessError(
            f"{operator}_{i}({m}) has {len(hits)} qualifying components after exhaustive search"
        )
    return hits[0]


def f_geometric(m: Multisegment, i: int, sampler: GenericitySampler) -> Multisegment:
    """
    The Kashiwara operator f_i on components.

    The result m' has dimvec(m) + e^i, epsilon_i(m') = c + 1 and the same
    e_max image as m. Candidates (add [i,i], extend a segment to reach i)
    are tried first; an exhaustive search over the target dimension vector
    backs them up.

    Raises:
        UniquenessError: If zero or several components qualify.
    """
    key = ("f", _fingerprint(sampler), m.key(), m.n, i)
    return component_cache.memoize(key, lambda: _f_geometric(m, i, sampler))


def _f_geometric(m: Multisegment, i: int, sampler: GenericitySampler) -> Multisegment:
    mbar, c = e_max_geometric(m, i, sampler)
    target = tuple(a + b for a, b in zip(m.dimvec, _unit(m.n, i)))

    def qualifies(cand: Multisegment) -> bool:
        return (epsilon_component(cand, i, sampler) == c + 1
                and e_max_geometric(cand, i, sampler) == (mbar, c + 1))

    return _search(m, i, target, _f_candidates(m, i), qualifies, "f")


def e_geometric(m: Multisegment, i: int, sampler: GenericitySampler) -> Multisegment | None:
    """
    The Kashiwara operator e_i on components; None is the zero.

    Inverse to f_geometric: e_i(f_i(m)) = m.
    """
    key = ("e", _fingerprint(sampler), m.key(), m.n, i)
    return component_cache.memoize(key, lambda: _e_geometric(m, i, sampler))


def _e_geometric(m: Multisegment, i: int, sampler: GenericitySampler) -> Multisegment | None:
    mbar, c = e_max_geometric(m, i, sampler)
    if c == 0:
        return None
    target = tuple(a - b for a, b in zip(m.dimvec, _unit(m.n, i)))

    def qualifies(cand: Multisegment) -> bool:
        return (epsilon_component(cand, i, sampler) == c - 1
                and e_max_geometric(cand, i, sampler)[0] == mbar)

    return _search(m, i, target, _e_candidates(m, i), qualifies, "e")


def f_power_geometric(m: Multisegment, i: int, c: int, sampler: GenericitySampler) -> Multisegment:
    for _ in range(c):
        m = f_geometric(m, i, sampler)
    return m


def enumerate_multisegments(n: int, dimvec: tuple[int, ...]) -> list[Multisegment]:
    """Every multisegment of A_n with the given dimension vector."""
    if len(dimvec) != n:
        raise DomainError(f"dimension vector {dimvec} has wrong length for A{n}")
    if any(x < 0 for x in dimvec):
        return []
    out: list[Multisegment] = []
    remaining = list(dimvec)

    def fill(k: int, acc: list[Segment]) -> None:
        # cover vertex k first: every segment through the lowest nonzero vertex starts there
        while k <= n and remaining[k - 1] == 0:
            k += 1
        if k > n:
            out.append(Multisegment(n, tuple(acc)))
            return
        for j in range(k, n + 1):
            if remaining[j - 1] == 0:
                break
            seg = Segment(k, j)
            if acc and acc[-1].i == k and acc[-1].j > j:
                continue
            for v in range(k, j + 1):
                remaining[v - 1] -= 1
            acc.append(seg)
            fill(k, acc)
            acc.pop()
            for v in range(k, j + 1):
                remaining[v - 1] += 1

    fill(1, [])
    return sorted(out, key=lambda ms: ms.key())


def multisegments_up_to(n: int, total: int) -> list[Multisegment]:
    """Every multisegment of A_n with sum(dimvec) <= total, smallest first."""
    out = []
    for dims in product(range(total + 1), repeat=n):
        if sum(dims) <= total:
            out.extend(enumerate_multisegments(n, dims))
    return sorted(out, key=lambda ms: (ms.size, ms.dimvec, ms.key()))


def kostant_count(n: int, dimvec: tuple[int, ...]) -> int:
    """
    Number of multisets of positive roots adding up to alpha_v.

    Counted through the partition-function generating series, one root at
    a time, independently of enumerate_multisegments.
    """
    counts = {tuple([0] * n): 1}
    roots = [tuple(int(i <= k <= j) for k in range(1, n + 1))
             for i in range(1, n + 1) for j in range(i, n + 1)]
    for root in roots:
        new: dict[tuple[int, ...], int] = {}
        for vec, ways in counts.items():
            cur = vec
            while all(c <= d for c, d in zip(cur, dimvec)):
                new[cur] = new.get(cur, 0) + ways
                cur = tuple(c + r for c, r in zip(cur, root))
        counts = new
    return counts.get(tuple(dimvec), 0)


def binf_element(d: RootDatum, m: Multisegment, sampler: GenericitySampler,
                 engine: CrystalEngine = CrystalEngine.GEOMETRIC) -> CrystalNode:
    """
    Decorate m as an element of B(infinity).

    wt = -alpha_v and phi_i = epsilon_i + <h_i, wt>.
    """
    if m.n != d.n:
        raise DomainError(f"multisegment rank {m.n} does not match {d.label}")
    wt = -root_lattice_element(d, m.dimvec)
    if engine is CrystalEngine.FAST:
        from app.crystals import fast_rule
        eps = tuple(fast_rule.epsilon_fast(m, i) for i in range(1, d.n + 1))
    else:
        eps = epsilon_vector(m, sampler)
    phi = tuple(e + pairing(d, i, wt) for i, e in enumerate(eps, start=1))
    return CrystalNode(key=m.key(), payload=m, wt=wt, eps=eps, phi=phi)


def f_operator(engine: CrystalEngine, sampler: GenericitySampler):
    if engine is CrystalEngine.FAST:
        from app.crystals import fast_rule
        fast_rule.ensure_calibrated(sampler)
        return lambda m, i: fast_rule.f_fast(m, i)
    return lambda m, i: f_geometric(m, i, sampler)


def generate_binf(d: RootDatum, depth: int, sampler: GenericitySampler,
                  engine: CrystalEngine = CrystalEngine.GEOMETRIC, jobs: int = 1):
    """
    Every element of B(infinity) with sum(v) <= depth and the f_i edges
    among them, rooted at the empty multisegment.
    """
    from app.crystals.graph import build_graph

    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    f = f_operator(engine, sampler)

    def successors(m: Multisegment) -> list[tuple[int, Multisegment]]:
        if m.size >= depth:
            return []
        return [(i, f(m, i)) for i in range(1, d.n + 1)]

    return build_graph(
        d=d,
        root=Multisegment.empty(d.n),
        successors=successors,
        decorate=lambda m: binf_element(d, m, sampler, engine),
        jobs=jobs,
        header={"model": "binf", "engine": engine.value, "depth": depth},
    )
