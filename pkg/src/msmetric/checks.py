"""Seeded randomized verification suites for every metric and algebraic law.

Each suite draws from its own ``numpy.random.Generator`` (PCG64) seeded by
``SeedSequence([seed, crc32(suite_name)])``, so suites are independent of
each other and of execution order. A suite stops at the first failing
sample and returns it as a counterexample.

Sampling parameters (shared by every port of this tool):

* coordinate spaces: dimension 1-3, coordinates uniform on [-10, 10]; with
  probability 0.3 a point is drawn from a small per-sample pool instead, and
  with probability 0.1 it is the basepoint, so repeats and basepoint
  entries actually occur
* discrete space: labels ``e`` (basepoint) and ``a``..``f``
* finite-matrix space: shortest-path closure of a random complete graph on
  6 labels with integer edge weights uniform on 1..10
* multisets: 0-6 draws with multiplicity 1-2; signed multisets: 0-5 draws
  with coefficients in {-2, -1, 1, 2}
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from msmetric import jsonio
from msmetric.assignment import BRUTE_FORCE_MAX, brute_force_assignment, permutation_cost, solve_assignment
from msmetric.ground import KINDS, GroundSpace, dist_to_set
from msmetric.l1 import TruncatedL1Multiset, cauchy_gap_table, l1_distance, truncate
from msmetric.nmultiset import (
    Multiset,
    canonicalize,
    embed_point,
    matching_distance,
    matching_distance_padded,
)
from msmetric.quotient import QuotientSpace, collapse, quotient_distance, uncollapsed_distance
from msmetric.zgroup import (
    SignedMultiset,
    distance_from_parts,
    embed_multiset,
    group_distance,
    group_neg,
    neg_part,
    pos_part,
)

__all__ = ["SuiteContext", "SuiteResult", "SUITES", "run_suite", "run_all", "suite_rng", "random_space"]

ISOMETRY_TOL = 1e-12


@dataclass
class SuiteContext:
    rng: np.random.Generator
    iterations: int = 10_000
    tol: float = 1e-9
    size_cap: int = 2000

    @property
    def pairs(self) -> int:
        """Sample count for the heavier pair-based suites (a tenth of ``iterations``)."""
        return max(1, self.iterations // 10)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"suite": self.name, "status": "PASS" if self.passed else "FAIL", "checks": self.checks}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class _Violation(Exception):
    def __init__(self, detail: dict):
        super().__init__(detail.get("law", "violation"))
        self.detail = detail


def suite_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, zlib.crc32(name.encode())]))


# -- random generation ---------------------------------------------------------


def _metric_closure(w: np.ndarray) -> np.ndarray:
    d = w.copy()
    for k in range(len(d)):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    return d


def random_space(rng: np.random.Generator, kind: str | None = None) -> GroundSpace:
    kind = kind or KINDS[int(rng.integers(len(KINDS)))]
    if kind in ("euclidean", "l1"):
        dim = int(rng.integers(1, 4))
        return GroundSpace(kind, (0.0,) * dim, dimension=dim)
    if kind == "discrete":
        return GroundSpace.discrete("e")
    k = 6
    # integer weights keep the closure exact, so the strict triangle check holds
    w = rng.integers(1, 11, (k, k)).astype(float)
    w = np.triu(w, 1)
    w = w + w.T
    labels = [f"p{i}" for i in range(k)]
    return GroundSpace.finite_matrix(_metric_closure(w), labels, "p0")


class _Sampler:
    """Draws points, multisets and signed multisets over one space."""

    def __init__(self, rng: np.random.Generator, space: GroundSpace):
        self.rng = rng
        self.space = space
        self.pool = [self._fresh() for _ in range(4)]

    def _fresh(self):
        sp = self.space
        if sp.is_coordinate:
            return tuple(float(c) for c in self.rng.uniform(-10.0, 10.0, sp.dimension))
        if sp.metric_kind == "discrete":
            return "eabcdef"[int(self.rng.integers(7))]
        return sp.labels[int(self.rng.integers(len(sp.labels)))]

    def point(self):
        u = self.rng.random()
        if u < 0.1:
            return self.space.basepoint
        if u < 0.4:
            return self.pool[int(self.rng.integers(len(self.pool)))]
        return self._fresh()

    def multiset(self, max_draws: int = 6) -> Multiset:
        n = int(self.rng.integers(0, max_draws + 1))
        return canonicalize(self.space, [(self.point(), int(self.rng.integers(1, 3))) for _ in range(n)])

    def signed(self, max_draws: int = 5) -> SignedMultiset:
        n = int(self.rng.integers(0, max_draws + 1))
        coeffs = (-2, -1, 1, 2)
        return SignedMultiset(self.space, [(self.point(), coeffs[int(self.rng.integers(4))]) for _ in range(n)])


def _sampler(ctx: SuiteContext, kind: str | None = None) -> _Sampler:
    return _Sampler(ctx.rng, random_space(ctx.rng, kind))


def _ms(a: Multiset) -> dict:
    return jsonio.multiset_to_json(a)


def _sg(x: SignedMultiset) -> dict:
    return jsonio.signed_to_json(x)


def _el(x) -> Any:
    return jsonio.element_to_json(x)


def _fail(law: str, space: GroundSpace, **data) -> None:
    raise _Violation({"law": law, "space": space.to_json(), **data})


# -- suites --------------------------------------------------------------------

SuiteFn = Callable[[SuiteContext], int]
SUITES: dict[str, SuiteFn] = {}


def suite(name: str):
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


@suite("ground_metric_axioms")
def ground_metric_axioms(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        p, q, r = s.point(), s.point(), s.point()
        sp = s.space
        dpq, dqp = sp.dist(p, q), sp.dist(q, p)
        if dpq < 0 or dpq != dqp:
            _fail("symmetry/nonnegativity", sp, p=_el(p), q=_el(q), d_pq=dpq, d_qp=dqp)
        if (dpq == 0) != (p == q):
            _fail("identity", sp, p=_el(p), q=_el(q), d_pq=dpq)
        if sp.dist(p, r) > dpq + sp.dist(q, r) + 1e-12:
            _fail("triangle", sp, p=_el(p), q=_el(q), r=_el(r))
    return ctx.iterations


@suite("dist_to_set_lemma")
def dist_to_set_lemma(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        H = [s.point() for _ in range(int(ctx.rng.integers(1, 5)))]
        p, q = s.point(), s.point()
        lhs = dist_to_set(s.space, p, H)
        rhs = s.space.dist(p, q) + dist_to_set(s.space, q, H)
        if lhs > rhs + 1e-12:
            _fail("d(p,H) <= d(p,q) + d(q,H)", s.space, p=_el(p), q=_el(q), H=[_el(h) for h in H])
    return ctx.iterations


@suite("assignment_oracle")
def assignment_oracle(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        n = int(ctx.rng.integers(1, 8))
        c = ctx.rng.uniform(0.0, 10.0, (n, n))
        got = solve_assignment(c, size_cap=ctx.size_cap)
        want = brute_force_assignment(c)
        perm = got.permutation
        if sorted(perm) != list(range(n)):
            raise _Violation({"law": "permutation validity", "matrix": c.tolist(), "permutation": list(perm)})
        if abs(got.total_cost - permutation_cost(c, perm)) > 1e-12:
            raise _Violation({"law": "reported cost", "matrix": c.tolist(), "permutation": list(perm)})
        if abs(got.total_cost - want.total_cost) > ctx.tol:
            raise _Violation(
                {"law": "oracle equivalence", "matrix": c.tolist(), "solver": got.total_cost, "oracle": want.total_cost}
            )
    return ctx.iterations


@suite("assignment_scale_equivariance")
def assignment_scale_equivariance(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        n = int(ctx.rng.integers(1, 8))
        c = ctx.rng.uniform(0.0, 10.0, (n, n))
        lam = float(ctx.rng.uniform(0.01, 100.0))
        base = solve_assignment(c, size_cap=ctx.size_cap)
        scaled = solve_assignment(c * lam, size_cap=ctx.size_cap)
        reused = permutation_cost(c * lam, base.permutation)
        bound = 1e-9 * max(1.0, abs(lam * base.total_cost))
        if abs(scaled.total_cost - lam * base.total_cost) > bound or abs(reused - scaled.total_cost) > bound:
            raise _Violation({"law": "scale equivariance", "matrix": c.tolist(), "lambda": lam})
    return ctx.iterations


def check_n_triangle(s: _Sampler, ctx: SuiteContext, a: Multiset, b: Multiset, c: Multiset) -> None:
    cap = ctx.size_cap
    dab, dba = matching_distance(a, b, cap), matching_distance(b, a, cap)
    if dab != dba:
        _fail("symmetry", s.space, a=_ms(a), b=_ms(b), d_ab=dab, d_ba=dba)
    if matching_distance(a, a, cap) != 0.0:
        _fail("identity", s.space, a=_ms(a))
    if dab == 0.0 and a != b:
        _fail("indiscernibles", s.space, a=_ms(a), b=_ms(b))
    dbc, dac = matching_distance(b, c, cap), matching_distance(a, c, cap)
    if dac > dab + dbc + ctx.tol:
        _fail("triangle", s.space, a=_ms(a), b=_ms(b), c=_ms(c), d_ac=dac, d_ab=dab, d_bc=dbc)


@suite("nmultiset_metric_axioms")
def nmultiset_metric_axioms(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        check_n_triangle(s, ctx, s.multiset(), s.multiset(), s.multiset())
    return ctx.iterations


@suite("nmultiset_padding_invariance")
def nmultiset_padding_invariance(ctx: SuiteContext) -> int:
    for _ in range(ctx.pairs):
        s = _sampler(ctx)
        a, b = s.multiset(), s.multiset()
        m, n = a.total_size, b.total_size
        ref = matching_distance(a, b, ctx.size_cap)
        for N in range(max(m, n, 1), m + n + 6):
            d = matching_distance_padded(a, b, N, ctx.size_cap)
            if abs(d - ref) > ctx.tol:
                _fail("padding invariance", s.space, a=_ms(a), b=_ms(b), N=N, d_N=d, d_default=ref)
    return ctx.pairs


@suite("nmultiset_lipschitz_addition")
def nmultiset_lipschitz_addition(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        a, b, a2, b2 = (s.multiset(4) for _ in range(4))
        lhs = matching_distance(a + b, a2 + b2, cap)
        rhs = matching_distance(a, a2, cap) + matching_distance(b, b2, cap)
        if lhs > rhs + ctx.tol:
            _fail("1-Lipschitz addition", s.space, a=_ms(a), b=_ms(b), a2=_ms(a2), b2=_ms(b2), lhs=lhs, rhs=rhs)
    return ctx.iterations


@suite("nmultiset_cancellation")
def nmultiset_cancellation(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        a, b, c = s.multiset(4), s.multiset(4), s.multiset(4)
        lhs = matching_distance(a + c, b + c, cap)
        rhs = matching_distance(a, b, cap)
        if abs(lhs - rhs) > ctx.tol:
            _fail("cancellation", s.space, a=_ms(a), b=_ms(b), c=_ms(c), lhs=lhs, rhs=rhs)
    return ctx.iterations


@suite("nmultiset_point_embedding")
def nmultiset_point_embedding(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        x, y = s.point(), s.point()
        d = matching_distance(embed_point(s.space, x), embed_point(s.space, y), ctx.size_cap)
        if abs(d - s.space.dist(x, y)) > ISOMETRY_TOL:
            _fail("point embedding isometry", s.space, x=_el(x), y=_el(y), d_N=d)
    return ctx.iterations


@suite("nmultiset_restriction")
def nmultiset_restriction(ctx: SuiteContext) -> int:
    """Equal sizes: the padded distance equals the unpadded optimum."""
    checked = 0
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        a = s.multiset()
        if a.total_size == 0 or a.total_size > BRUTE_FORCE_MAX:
            continue
        pts = [s.point() for _ in range(a.total_size)]
        if s.space.basepoint in pts:
            continue
        b = Multiset.from_elements(s.space, pts)
        unpadded = brute_force_assignment(s.space.pairwise(a.elements(), b.elements())).total_cost
        n = a.total_size
        for N in (n, 2 * n):
            got = matching_distance_padded(a, b, N, ctx.size_cap)
            if abs(got - unpadded) > ctx.tol:
                _fail("restriction to equal sizes", s.space, a=_ms(a), b=_ms(b), N=N, d_N=got, unpadded=unpadded)
        checked += 1
    return checked


@suite("zgroup_group_laws")
def zgroup_group_laws(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        x, y, z = s.signed(), s.signed(), s.signed()
        zero = SignedMultiset.zero(s.space)
        if (x + y) + z != x + (y + z) or x + y != y + x or x + (-x) != zero or x + zero != x:
            _fail("group laws", s.space, x=_sg(x), y=_sg(y), z=_sg(z))
        xp, xn = pos_part(x), neg_part(x)
        if embed_multiset(xp) - embed_multiset(xn) != x or set(xp.as_dict()) & set(xn.as_dict()):
            _fail("positive/negative parts", s.space, x=_sg(x))
    return ctx.iterations


@suite("zgroup_metric_axioms")
def zgroup_metric_axioms(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        x, y, z = s.signed(), s.signed(), s.signed()
        dxy, dyx = group_distance(x, y, cap), group_distance(y, x, cap)
        if dxy != dyx:
            _fail("symmetry", s.space, x=_sg(x), y=_sg(y), d_xy=dxy, d_yx=dyx)
        if group_distance(x, x, cap) != 0.0:
            _fail("identity", s.space, x=_sg(x))
        if dxy == 0.0 and x != y:
            _fail("indiscernibles", s.space, x=_sg(x), y=_sg(y))
        dyz, dxz = group_distance(y, z, cap), group_distance(x, z, cap)
        if dxz > dxy + dyz + ctx.tol:
            _fail("triangle", s.space, x=_sg(x), y=_sg(y), z=_sg(z), d_xz=dxz, d_xy=dxy, d_yz=dyz)
    return ctx.iterations


@suite("zgroup_inflation_invariance")
def zgroup_inflation_invariance(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        x, y = s.signed(4), s.signed(4)
        w, w2 = s.multiset(3), s.multiset(3)
        canon = group_distance(x, y, cap)
        inflated = distance_from_parts(pos_part(x) + w, neg_part(x) + w, pos_part(y) + w2, neg_part(y) + w2, cap)
        if abs(canon - inflated) > ctx.tol:
            _fail("decomposition independence", s.space, x=_sg(x), y=_sg(y), w=_ms(w), w2=_ms(w2))
    return ctx.iterations


@suite("zgroup_translation_invariance")
def zgroup_translation_invariance(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        x, y, z = s.signed(4), s.signed(4), s.signed(4)
        lhs, rhs = group_distance(x + z, y + z, cap), group_distance(x, y, cap)
        if abs(lhs - rhs) > ctx.tol:
            _fail("translation invariance", s.space, x=_sg(x), y=_sg(y), z=_sg(z), lhs=lhs, rhs=rhs)
        if abs(group_distance(group_neg(x), group_neg(y), cap) - rhs) > ctx.tol:
            _fail("negation isometry", s.space, x=_sg(x), y=_sg(y))
    return ctx.iterations


@suite("zgroup_lipschitz_addition")
def zgroup_lipschitz_addition(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        x, y, x2, y2 = (s.signed(3) for _ in range(4))
        lhs = group_distance(x + y, x2 + y2, cap)
        rhs = group_distance(x, x2, cap) + group_distance(y, y2, cap)
        if lhs > rhs + ctx.tol:
            _fail("1-Lipschitz addition", s.space, x=_sg(x), y=_sg(y), x2=_sg(x2), y2=_sg(y2), lhs=lhs, rhs=rhs)
    return ctx.iterations


@suite("embedding_chain")
def embedding_chain(ctx: SuiteContext) -> int:
    cap = ctx.size_cap
    for i in range(ctx.pairs):
        s = _sampler(ctx, KINDS[i % len(KINDS)])
        x, y = s.point(), s.point()
        d = s.space.dist(x, y)
        ex, ey = embed_point(s.space, x), embed_point(s.space, y)
        dn = matching_distance(ex, ey, cap)
        dz = group_distance(embed_multiset(ex), embed_multiset(ey), cap)
        if abs(d - dn) > ISOMETRY_TOL or abs(dn - dz) > ISOMETRY_TOL:
            _fail("isometric embedding chain", s.space, x=_el(x), y=_el(y), d=d, d_N=dn, d_Z=dz)
        a, b = s.multiset(), s.multiset()
        if abs(matching_distance(a, b, cap) - group_distance(embed_multiset(a), embed_multiset(b), cap)) > ISOMETRY_TOL:
            _fail("monoid-to-group isometry", s.space, a=_ms(a), b=_ms(b))
    return ctx.pairs


def _truncated_pair(s: _Sampler, ctx: SuiteContext):
    a, b = s.multiset(), s.multiset()
    ta = truncate(TruncatedL1Multiset(a), int(ctx.rng.integers(0, a.total_size + 1)))
    tb = truncate(TruncatedL1Multiset(b), int(ctx.rng.integers(0, b.total_size + 1)))
    return a, b, ta, tb


@suite("l1_enclosure")
def l1_enclosure(ctx: SuiteContext) -> int:
    for _ in range(ctx.pairs):
        s = _sampler(ctx)
        a, b, ta, tb = _truncated_pair(s, ctx)
        exact = matching_distance(a, b, ctx.size_cap)
        iv = l1_distance(ta, tb, ctx.size_cap)
        info = dict(a=_ms(a), b=_ms(b), a_head=_ms(ta.head), b_head=_ms(tb.head), tau_a=ta.tail_mass, tau_b=tb.tail_mass)
        if exact not in iv:
            _fail("enclosure", s.space, exact=exact, lower=iv.lower, upper=iv.upper, **info)
        radius = ta.tail_mass + tb.tail_mass
        if iv.lower > 0 and abs(iv.width - 2 * radius) > ctx.tol:
            _fail("interval width", s.space, width=iv.width, expected=2 * radius, **info)
    return ctx.pairs


@suite("l1_monotone_refinement")
def l1_monotone_refinement(ctx: SuiteContext) -> int:
    for _ in range(ctx.pairs):
        s = _sampler(ctx)
        a, b = s.multiset(), s.multiset()
        fa, fb = TruncatedL1Multiset(a), TruncatedL1Multiset(b)
        prev = None
        for budget in range(max(a.total_size, b.total_size) + 1):
            iv = l1_distance(truncate(fa, budget), truncate(fb, budget), ctx.size_cap)
            if prev is not None and iv.width > prev.width + ctx.tol:
                _fail("monotone refinement", s.space, a=_ms(a), b=_ms(b), budget=budget, width=iv.width, previous=prev.width)
            prev = iv
        exact = matching_distance(a, b, ctx.size_cap)
        if prev.lower != exact or prev.upper != exact:
            _fail("convergence", s.space, a=_ms(a), b=_ms(b), exact=exact)
    return ctx.pairs


@suite("l1_density")
def l1_density(ctx: SuiteContext) -> int:
    for _ in range(ctx.pairs):
        s = _sampler(ctx)
        a = s.multiset()
        full = TruncatedL1Multiset(a)
        prev = 0.0
        for budget in range(a.total_size, -1, -1):
            t = truncate(full, budget)
            d = matching_distance(a, t.head, ctx.size_cap)
            if abs(d - t.tail_mass) > ctx.tol or t.tail_mass < prev:
                _fail("truncation distance equals dropped mass", s.space, a=_ms(a), budget=budget, d=d, tau=t.tail_mass)
            prev = t.tail_mass
    return ctx.pairs


@suite("l1_cauchy")
def l1_cauchy(ctx: SuiteContext) -> int:
    rows = cauchy_gap_table(20)
    for row in rows:
        if abs(row.gap - (2.0**-row.n - 2.0**-row.m)) > 1e-15 or row.gap > row.bound:
            raise _Violation({"law": "cauchy gap", "m": row.m, "n": row.n, "gap": row.gap, "bound": row.bound})
    for eps_exp in (5, 10, 15):
        eps = 2.0**-eps_exp
        if not any(all(r.gap < eps for r in rows if r.n >= start) for start in range(1, 21)):
            raise _Violation({"law": "cauchy criterion", "epsilon": eps})
    return len(rows)


def _quotient(s: _Sampler, ctx: SuiteContext) -> QuotientSpace:
    return QuotientSpace(s.space, [s.point() for _ in range(int(ctx.rng.integers(1, 4)))])


@suite("quotient_metric_axioms")
def quotient_metric_axioms(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        qs = _quotient(s, ctx)
        x, y, z = s.point(), s.point(), s.point()
        p, q, r = collapse(qs, x), collapse(qs, y), collapse(qs, z)
        dpq, dqp = quotient_distance(qs, p, q), quotient_distance(qs, q, p)
        info = dict(H=sorted(_el(h) for h in qs.H), x=_el(x), y=_el(y), z=_el(z))
        if dpq != dqp:
            _fail("symmetry", s.space, **info)
        if (dpq == 0.0) != (p == q):
            _fail("identity", s.space, d=dpq, **info)
        if quotient_distance(qs, p, r) > dpq + quotient_distance(qs, q, r) + 1e-12:
            _fail("triangle", s.space, **info)
    return ctx.iterations


@suite("quotient_lipschitz")
def quotient_lipschitz(ctx: SuiteContext) -> int:
    for _ in range(ctx.iterations):
        s = _sampler(ctx)
        qs = _quotient(s, ctx)
        x, y = s.point(), s.point()
        if quotient_distance(qs, collapse(qs, x), collapse(qs, y)) > s.space.dist(x, y):
            _fail("1-Lipschitz collapse", s.space, H=sorted(_el(h) for h in qs.H), x=_el(x), y=_el(y))
        if len(qs.H) >= 2:
            h1, h2 = sorted(qs.H)[:2]
            if uncollapsed_distance(qs, h1, h2) != 0.0:
                _fail("uncollapsed formula is a pseudometric", s.space, h1=_el(h1), h2=_el(h2))
    return ctx.iterations


# -- runner ----------------------------------------------------------------------


def run_suite(name: str, seed: int = 0, iterations: int = 10_000, tol: float = 1e-9, size_cap: int = 2000) -> SuiteResult:
    ctx = SuiteContext(suite_rng(seed, name), iterations, tol, size_cap)
    try:
        checks = SUITES[name](ctx)
    except _Violation as v:
        return SuiteResult(name, False, 0, v.detail)
    return SuiteResult(name, True, checks)


def run_all(seed: int = 0, iterations: int = 10_000, tol: float = 1e-9, size_cap: int = 2000, names=None) -> list[SuiteResult]:
    names = sorted(names or SUITES)
    return [run_suite(n, seed, iterations, tol, size_cap) for n in names]
