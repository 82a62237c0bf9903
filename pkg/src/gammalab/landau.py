"""Small-measure fundamental sets for the gamma function, with tracers.

A fundamental set is a subset S of (0, 1] such that every value Gamma(x),
x in (0, 1], is recoverable from gamma evaluations on S through finitely
many identity applications.  The construction here repeatedly applies one
interval lemma: any (a, b] within (0, 1] splits, via the halving maps
x -> x/2 and x -> x/2 + 1/2 of the duplication formula, into one interval
inside (0, delta/2] and a stack of intervals inside (1/2, 1], with exact
length conservation.  Iterating t rounds leaves a remainder of exactly
computable rational mass below (1 - delta/4)**t, so the final set

    S_t = (0, delta/2]-part  union  remainder pieces

has measure < delta.

Two construction modes share the same arithmetic:

* explicit — the full decomposition forest is materialized (feasible when
  the round-by-round piece count stays within the node budget, e.g.
  delta = 1/2 needs about a thousand pieces), enabling derivation traces;
* summary — for small delta the piece count grows geometrically over
  hundreds of rounds and no explicit forest fits in memory, but the pieces
  occupy finitely many "class bands" and their masses obey a closed
  finite-state recursion over a rational threshold set, so the exact
  measure is still computed, with conservation asserted every round.

Tracers turn the records into derivation trees: `trace_evaluate` walks the
explicit forest, `quarter_set_trace` derives Gamma on (0, 1/2) from
(0, 1/4] and {1/3, 1} alone, and `complex_reduce_trace` extends the real
pattern into the strip |Im z| < 1 by duplication halvings.
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .core import gamma, pole_distance
from .errors import (
    DepthError,
    DomainError,
    ResourceError,
    TraceDepthError,
)
from .intervals import IntervalSet, as_fraction

_SQRT_PI = math.sqrt(math.pi)
_HALF = Fraction(1, 2)

DEFAULT_NODE_BUDGET = 200_000
DEFAULT_COMPLEX_BUDGET = 500_000
_QUARTER_DEPTH_CAP = 64


# ---------------------------------------------------------------------------
# interval lemma


@dataclass(frozen=True)
class DecompositionNode:
    """One node of the halving-chain decomposition of an interval.

    kind is "split" (two children: the x/2 and x/2 + 1/2 images), "I"
    (leaf inside (0, delta/2]) or "J" (leaf inside (1/2, 1], fed to the
    next round).  affine_record says which halving map produced this node
    from its parent ("half", "half-shift", or None for a root).
    """

    interval: tuple
    kind: str
    children: tuple
    affine_record: object


def _class_of(b: Fraction, delta: Fraction) -> int:
    """Least m with b / 2**m <= delta / 2."""
    m = 0
    while b > delta / 2:
        b = b / 2
        m += 1
    return m


def landau_lemma_decompose(alpha, beta, delta):
    """Split (alpha, beta] into I inside (0, delta/2] plus J's in (1/2, 1].

    Returns (I, J_list, node) where I = (alpha/2**m, beta/2**m], the J's are
    (alpha/2**i + 1/2, beta/2**i + 1/2] for i = 1..m, m minimal with
    beta/2**m <= delta/2, and node is the recorded halving chain.  Exact
    conservation |I| + sum |J_i| = beta - alpha and the lower bound
    |I| > (delta/4)(beta - alpha) are checked on every call.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    delta = as_fraction(delta)
    if not (0 <= alpha < beta <= 1):
        raise DomainError(f"need 0 <= alpha < beta <= 1, got ({alpha}, {beta}]")
    if not (0 < delta <= 1):
        raise DomainError(f"delta must lie in (0, 1], got {delta}")
    m = _class_of(beta, delta)
    I = (alpha / 2**m, beta / 2**m)
    J_list = [(alpha / 2**i + _HALF, beta / 2**i + _HALF) for i in range(1, m + 1)]

    # build the chain bottom-up: level m is the I-leaf, level i < m a split
    node = DecompositionNode(I, "I", (), "half" if m > 0 else None)
    for i in range(m, 0, -1):
        high = DecompositionNode(J_list[i - 1], "J", (), "half-shift")
        parent_iv = (alpha / 2 ** (i - 1), beta / 2 ** (i - 1))
        node = DecompositionNode(
            parent_iv, "split", (node, high), "half" if i > 1 else None
        )

    extracted = I[1] - I[0]
    j_total = sum((hi - lo for lo, hi in J_list), Fraction(0))
    if extracted + j_total != beta - alpha:
        raise AssertionError("interval lemma lost mass")  # pragma: no cover
    if not extracted > (delta / 4) * (beta - alpha):
        raise AssertionError("interval lemma lower bound failed")  # pragma: no cover
    return I, J_list, node


# ---------------------------------------------------------------------------
# threshold-state recursion (exact masses without enumeration)
#
# From round 1 on every piece lies in (1/2, 1] and each round replaces a
# piece (a, b] of class m (= _class_of(b)) by its m images
# (a/2**i + 1/2, b/2**i + 1/2], which land in pairwise disjoint dyadic
# bands — so the leftover stays a disjoint union and its mass evolves
# linearly.  The class of a piece depends only on whether its right end
# exceeds beta* = delta * 2**(M-1); tracking, for each threshold theta in
# a finite closure set, the mass S_theta of pieces with right end > theta
# closes the recursion exactly.


def _class_bounds(delta: Fraction):
    """Classes of right ends near 1/2 and at 1: they differ by at most one."""
    m_lo = 1
    while delta * 2 ** (m_lo - 1) <= _HALF:
        m_lo += 1
    m_hi = 1
    while delta * 2 ** (m_hi - 1) < 1:
        m_hi += 1
    return m_lo, m_hi


def _threshold_closure(delta: Fraction):
    """(M, M1, beta_star, thetas): the finite threshold set for delta.

    beta_star is None when every piece in (1/2, 1] has the same class.
    The closure iterates tau_i(theta) = 2**i (theta - 1/2) until no new
    threshold lands strictly inside (1/2, 1); it is finite for rational
    delta because all thresholds share a bounded denominator.
    """
    m_lo, m_hi = _class_bounds(delta)
    if m_lo == m_hi:
        return m_lo, m_hi, None, ()
    beta_star = delta * 2 ** (m_lo - 1)
    thetas = {beta_star}
    frontier = [beta_star]
    while frontier:
        th = frontier.pop()
        for i in range(1, m_hi + 1):
            tau = 2**i * (th - _HALF)
            if _HALF < tau < 1 and tau not in thetas:
                thetas.add(tau)
                frontier.append(tau)
    return m_lo, m_hi, beta_star, tuple(sorted(thetas))


def _run_threshold_recursion(delta: Fraction, steps: int, weight, total0, conserve):
    """Advance the piece statistics `steps` rounds from the round-1 state.

    weight(i) is a piece's contribution through band i (2**-i for masses,
    1 for counts); total0 the round-1 statistic of the single piece
    (1/2, 1].  When `conserve`, the mass-balance identity is checked
    exactly every round.  Returns the final total.
    """
    M, M1, beta_star, thetas = _threshold_closure(delta)
    total = total0
    S = {th: total0 for th in thetas}
    for _ in range(steps):
        prev = total
        total, S, extracted, _ = _threshold_step(
            total, S, M, M1, beta_star, thetas, weight
        )
        if conserve and total + extracted != prev:
            raise AssertionError("threshold recursion lost mass")  # pragma: no cover
    return total


def _threshold_step(total, S, M, M1, beta_star, thetas, weight):
    """One round of the piece statistics; returns (total', S', extracted, (A, B))."""
    w_lo = sum(weight(i) for i in range(1, M + 1))

    def lookup(tau):
        if tau <= _HALF:
            return total
        if tau >= 1:
            return 0
        return S[tau]

    if beta_star is None:
        A, B = total, 0
        new_total = w_lo * total
        extracted = weight(M) * total
        new_S = {}
    else:
        B = S[beta_star]  # pieces of the deeper class M1 (right end > beta*)
        A = total - B  # pieces of class M
        new_total = w_lo * A + (w_lo + weight(M1)) * B
        extracted = weight(M) * A + weight(M1) * B
        new_S = {}
        for th in thetas:
            acc = 0
            for i in range(1, M + 1):
                acc += weight(i) * lookup(2**i * (th - _HALF))
            tau = 2**M1 * (th - _HALF)
            acc += weight(M1) * lookup(max(tau, beta_star))
            new_S[th] = acc
    return new_total, new_S, extracted, (A, B)


def iteration_count(delta) -> int:
    """Least t with (1 - delta/4)**t < delta/2, by exact rational powering."""
    delta = as_fraction(delta)
    if not (0 < delta <= 1):
        raise DomainError(f"delta must lie in (0, 1], got {delta}")
    ratio = 1 - delta / 4
    acc = Fraction(1)
    t = 0
    while not acc < delta / 2:
        acc *= ratio
        t += 1
    return t


# ---------------------------------------------------------------------------
# the construction


@dataclass(frozen=True)
class FundamentalSet:
    """A constructed fundamental set with exact rational bookkeeping.

    explicit mode materializes the decomposition forest (root_forest holds
    every per-piece chain, rounds_pieces the per-round sorted piece lists
    used by the tracers) and leaf_union is the exact union of all I-leaves
    and the final remainder.  summary mode keeps leaf_union = (0, delta/2]
    and accounts for the remainder only through residual_mass; its measure
    is delta/2 + residual_mass, the measure of the closed-form set
    (0, delta/2] union remainder.  In both modes measure < delta exactly.
    """

    delta: Fraction
    t: int
    root_forest: tuple
    leaf_union: IntervalSet
    measure: Fraction
    residual_mass: Fraction
    explicit: bool
    rounds_pieces: tuple
    final_piece_count: int
    node_count: int

    def to_json_dict(self) -> dict:
        leaves = []
        boundary = self.delta / 2
        for lo, hi in self.leaf_union:
            leaves.append(
                {
                    "lo": str(lo),
                    "hi": str(hi),
                    "kind": "I" if hi <= boundary else "J",
                }
            )
        return {
            "delta": str(self.delta),
            "t": self.t,
            "leaves": leaves,
            "measure": str(self.measure),
            "explicit": self.explicit,
            "residual_mass": str(self.residual_mass),
            "final_piece_count": str(self.final_piece_count),
        }


def _count_nodes(node: DecompositionNode) -> int:
    return 1 + sum(_count_nodes(c) for c in node.children)


def _explicit_round_counts(delta: Fraction, t: int, node_budget: int):
    """Exact per-round piece counts, or None once the forest would exceed
    the node budget.  Uses the threshold recursion with unit weights."""
    M, M1, beta_star, thetas = _threshold_closure(delta)
    total = 1
    S = {th: 1 for th in thetas}
    counts = [1]  # round-1 state: the single piece (1/2, 1]
    # each decomposed piece of class m contributes a chain of 2m + 1 nodes
    nodes = 2 * _class_of(Fraction(1), delta) + 1  # round 0 on (0, 1]
    for _ in range(t - 1):
        total, S, _, (A, B) = _threshold_step(
            total, S, M, M1, beta_star, thetas, lambda i: 1
        )
        counts.append(total)
        nodes += A * (2 * M + 1) + B * (2 * M1 + 1)
        if nodes > node_budget:
            return None
    return counts


def landau_construct(delta, *, node_budget: int = DEFAULT_NODE_BUDGET) -> FundamentalSet:
    """Build a fundamental set of measure < delta for delta in (0, 1].

    Runs t rounds of the interval lemma, t minimal with
    (1 - delta/4)**t < delta/2.  The forest is materialized when it fits in
    node_budget nodes (then tracers work); otherwise the exact measure is
    computed by the threshold-state recursion and the set is reported in
    summary form.  Either way every measure statement is an exact rational
    comparison.
    """
    delta = as_fraction(delta)
    if not (0 < delta <= 1):
        raise DomainError(f"delta must lie in (0, 1], got {delta}")
    t = iteration_count(delta)
    plan = _explicit_round_counts(delta, t, node_budget)
    if plan is not None:
        return _construct_explicit(delta, t, node_budget)
    return _construct_summary(delta, t)


def _construct_explicit(delta: Fraction, t: int, node_budget: int) -> FundamentalSet:
    I0, J0, node0 = landau_lemma_decompose(0, 1, delta)
    roots = [node0]
    i_leaves = [I0]
    rounds_pieces = [((Fraction(0), Fraction(1)),)]
    leftover = IntervalSet(J0)  # round-0 J's are nested; take the set union
    node_count = _count_nodes(node0)
    for _ in range(1, t):
        pieces = tuple(leftover)
        rounds_pieces.append(pieces)
        next_pieces = []
        extracted = Fraction(0)
        for lo, hi in pieces:
            I, Js, node = landau_lemma_decompose(lo, hi, delta)
            roots.append(node)
            i_leaves.append(I)
            next_pieces.extend(Js)
            extracted += I[1] - I[0]
            node_count += _count_nodes(node)
            if node_count > node_budget:
                raise ResourceError(
                    f"decomposition forest exceeded {node_budget} nodes"
                )
        new_leftover = IntervalSet(next_pieces)
        # pieces born after round 0 live in disjoint dyadic bands, so the
        # set union must preserve the multiset mass exactly
        if new_leftover.measure + extracted != leftover.measure:
            raise AssertionError("round lost mass")  # pragma: no cover
        leftover = new_leftover
    residual = leftover.measure
    if not residual < (1 - delta / 4) ** t:
        raise AssertionError("remainder bound violated")  # pragma: no cover
    leaf_union = IntervalSet(i_leaves).union(leftover)
    measure = leaf_union.measure
    if not measure < delta:
        raise AssertionError("constructed set not small")  # pragma: no cover
    return FundamentalSet(
        delta=delta,
        t=t,
        root_forest=tuple(roots),
        leaf_union=leaf_union,
        measure=measure,
        residual_mass=residual,
        explicit=True,
        rounds_pieces=tuple(rounds_pieces),
        final_piece_count=len(leftover),
        node_count=node_count,
    )


def _construct_summary(delta: Fraction, t: int) -> FundamentalSet:
    residual = _run_threshold_recursion(
        delta, t - 1, lambda i: Fraction(1, 2**i), _HALF, conserve=True
    )
    count = _run_threshold_recursion(delta, t - 1, lambda i: 1, 1, conserve=False)
    if not residual < (1 - delta / 4) ** t:
        raise AssertionError("remainder bound violated")  # pragma: no cover
    measure = delta / 2 + residual
    if not measure < delta:
        raise AssertionError("constructed set not small")  # pragma: no cover
    return FundamentalSet(
        delta=delta,
        t=t,
        root_forest=(),
        leaf_union=IntervalSet([(Fraction(0), delta / 2)]),
        measure=measure,
        residual_mass=residual,
        explicit=False,
        rounds_pieces=(),
        final_piece_count=count,
        node_count=0,
    )


# ---------------------------------------------------------------------------
# derivation traces


@dataclass(frozen=True)
class TraceNode:
    """One evaluation in a derivation tree.

    rule is one of direct / functional / reflection / duplication / comb;
    argument is a Fraction (real traces) or complex; value the gamma value
    obtained at this node.
    """

    rule: str
    argument: object
    value: object
    children: tuple

    def to_json_dict(self) -> dict:
        a = self.argument
        if isinstance(a, complex):
            arg = [a.real, a.imag]
        elif isinstance(a, Fraction):
            arg = str(a)
        else:
            arg = float(a)
        return {
            "rule": self.rule,
            "arg": arg,
            "children": [c.to_json_dict() for c in self.children],
        }


@dataclass(frozen=True)
class DerivationTrace:
    root: TraceNode
    direct_count: int
    node_count: int

    def to_json_dict(self) -> dict:
        return self.root.to_json_dict()


def _trace_stats(node: TraceNode):
    direct = 1 if node.rule == "direct" else 0
    total = 1
    for c in node.children:
        d, n = _trace_stats(c)
        direct += d
        total += n
    return direct, total


def _finish_trace(root: TraceNode):
    direct, total = _trace_stats(root)
    return root.value, DerivationTrace(root, direct, total)


def _num(a):
    """Numeric (float/complex) view of a trace argument."""
    if isinstance(a, Fraction):
        return float(a)
    return a


def _recompute_node(node: TraceNode):
    """Re-derive an internal node's value from its children by its rule."""
    a = node.argument
    an = _num(a)
    ch = node.children
    if node.rule == "functional":
        (c,) = ch
        if c.argument == a - 1:
            return (an - 1) * c.value
        if c.argument == a + 1:
            return c.value / an
        raise DomainError(f"functional node at {a!r} has child {c.argument!r}")
    if node.rule == "reflection":
        (c,) = ch
        if c.argument != 1 - a:
            raise DomainError(f"reflection node at {a!r} has child {c.argument!r}")
        if isinstance(an, complex):
            return math.pi / (cmath.sin(math.pi * an) * c.value)
        return math.pi / (math.sin(math.pi * an) * c.value)
    if node.rule == "duplication":
        c1, c2 = ch
        if c1.argument == a / 2 and c2.argument == a / 2 + _half_like(a):
            if isinstance(an, complex):
                return cmath.exp((an - 1) * math.log(2.0)) * c1.value * c2.value / _SQRT_PI
            return 2.0 ** (an - 1) * c1.value * c2.value / _SQRT_PI
        if c1.argument == 2 * a - 1 and c2.argument == a - _half_like(a):
            z = _num(c1.argument)
            return _SQRT_PI * c1.value * 2.0 ** (1 - z) / c2.value
        raise DomainError(
            f"duplication node at {a!r} has children "
            f"{c1.argument!r}, {c2.argument!r}"
        )
    if node.rule == "comb":
        c4, cq, c2 = ch
        alpha = a - _quarter_like(a)
        if (
            c4.argument != 4 * alpha
            or cq.argument != _quarter_like(a) - alpha
            or c2.argument != 2 * alpha
        ):
            raise DomainError(f"comb node at {a!r} has inconsistent children")
        al = _num(alpha)
        return (
            c4.value
            * cq.value
            * math.sin(math.pi * (al + 0.75))
            / (2.0 ** (6 * al - 1.5) * c2.value)
        )
    raise DomainError(f"unknown trace rule {node.rule!r}")


def _half_like(a):
    return Fraction(1, 2) if isinstance(a, Fraction) else 0.5


def _quarter_like(a):
    return Fraction(1, 4) if isinstance(a, Fraction) else 0.25


def validate_trace(trace: DerivationTrace, direct_membership) -> int:
    """Check a trace: direct leaves satisfy direct_membership, and every
    internal value re-derives from its children to 1e-12 relative.

    Returns the number of nodes checked; raises DomainError on violation.
    """

    def check(node):
        if node.rule == "direct":
            if node.children:
                raise DomainError(f"direct node at {node.argument!r} has children")
            if not direct_membership(node.argument):
                raise DomainError(
                    f"direct leaf {node.argument!r} outside the restricted set"
                )
            return 1
        want = _recompute_node(node)
        scale = max(abs(node.value), abs(want), 1e-300)
        if abs(node.value - want) / scale > 1e-12:
            raise DomainError(
                f"{node.rule} node at {node.argument!r} fails replay: "
                f"{node.value!r} vs {want!r}"
            )
        return 1 + sum(check(c) for c in node.children)

    return check(trace.root)


# ---------------------------------------------------------------------------
# tracer 1: walking the explicit forest on (0, 1]


def _require_explicit(fs: FundamentalSet):
    if not fs.explicit:
        raise ResourceError(
            "this construction is summary-only (no recorded decomposition); "
            "tracing needs an explicit forest, available when the node "
            "budget admits it (e.g. delta = 1/2)"
        )


def _find_piece(pieces, y: Fraction):
    idx = bisect_left(pieces, (y, Fraction(0))) - 1
    if idx < 0:
        return None
    lo, hi = pieces[idx]
    if lo < y <= hi:
        return pieces[idx]
    return None


def _direct_real(y: Fraction) -> TraceNode:
    return TraceNode("direct", y, gamma(float(y)), ())


def _walk_real(y: Fraction, r: int, fs: FundamentalSet) -> TraceNode:
    if y in fs.leaf_union:
        return _direct_real(y)
    if r >= fs.t:
        raise TraceDepthError(f"point {y} uncovered after {fs.t} rounds")
    piece = _find_piece(fs.rounds_pieces[r], y)
    if piece is None:
        raise TraceDepthError(f"point {y} not covered by round {r} pieces")
    m = _class_of(piece[1], fs.delta)
    return _chain_real(y, m, r, fs)


def _chain_real(y: Fraction, m: int, r: int, fs: FundamentalSet) -> TraceNode:
    if y in fs.leaf_union:
        return _direct_real(y)
    if m == 0:
        raise TraceDepthError(f"chain bottomed out at {y} outside the set")
    low = _chain_real(y / 2, m - 1, r, fs)
    high = _walk_real(y / 2 + _HALF, r + 1, fs)
    value = 2.0 ** (float(y) - 1.0) * low.value * high.value / _SQRT_PI
    return TraceNode("duplication", y, value, (low, high))


def trace_evaluate(x, fs: FundamentalSet):
    """Evaluate Gamma(x) for x in (0, 1] using direct gamma calls only on
    fs.leaf_union, combining intermediate values with the duplication
    formula along the recorded decomposition.

    Returns (value, DerivationTrace).
    """
    x = as_fraction(x)
    if not (0 < x <= 1):
        raise DomainError(f"x must lie in (0, 1], got {x}")
    _require_explicit(fs)
    return _finish_trace(_walk_real(x, 0, fs))


# ---------------------------------------------------------------------------
# tracer 2: the quarter set (0, 1/4] with the two spare points {1/3, 1}

_THIRD = 1.0 / 3.0


def quarter_set_trace(x: float, *, depth_cap: int = _QUARTER_DEPTH_CAP):
    """Derive Gamma(x) for x in (0, 1/2) from values on (0, 1/4] and {1/3, 1}.

    Points in (1/4, 1/3) use the quarter-step relation at alpha = x - 1/4,
    whose recursive argument 4*alpha quadruples the distance to the fixed
    point 1/3 and so escapes the window; points in (1/3, 1/2) first reflect
    to 1 - x and then peel that with an inverted duplication step.  Raises
    DepthError if the escape exceeds depth_cap, and DomainError within
    1e-9 of 1/3 (except at the representable 1/3 itself, a direct leaf).
    """
    x = float(x)
    if not (0.0 < x < 0.5):
        raise DomainError(f"x must lie in (0, 1/2), got {x}")
    if x != _THIRD and abs(x - _THIRD) <= 1e-9:
        raise DomainError(f"{x} is inside the 1e-9 exclusion band around 1/3")
    return _finish_trace(_quarter_node(x, depth_cap))


def _quarter_node(x: float, depth_left: int) -> TraceNode:
    if depth_left < 0:
        raise DepthError("quarter-set escape exceeded the depth cap")
    if x == _THIRD or x <= 0.25:
        return TraceNode("direct", x, gamma(x), ())
    if x < _THIRD:
        # quarter-step relation solved for Gamma(alpha + 1/4)
        alpha = x - 0.25
        c4 = _quarter_node(4 * alpha, depth_left - 1)
        cq = TraceNode("direct", 0.25 - alpha, gamma(0.25 - alpha), ())
        c2 = TraceNode("direct", 2 * alpha, gamma(2 * alpha), ())
        value = (
            c4.value
            * cq.value
            * math.sin(math.pi * (alpha + 0.75))
            / (2.0 ** (6 * alpha - 1.5) * c2.value)
        )
        return TraceNode("comb", x, value, (c4, cq, c2))
    # x in (1/3, 1/2): reflect, then invert a duplication step at w = 1 - x
    w = 1.0 - x
    z = 2 * w - 1  # in (0, 1/3)
    cz = _quarter_node(z, depth_left - 1)
    ch = TraceNode("direct", w - 0.5, gamma(w - 0.5), ())
    inner_value = _SQRT_PI * cz.value * 2.0 ** (1 - z) / ch.value
    inner = TraceNode("duplication", w, inner_value, (cz, ch))
    value = math.pi / (math.sin(math.pi * x) * inner.value)
    return TraceNode("reflection", x, value, (inner,))


def quarter_set_membership(a) -> bool:
    """Membership predicate of the declared quarter set (0, 1/4] + {1/3, 1}."""
    return (0.0 < a <= 0.25) or a == _THIRD or a == 1.0


# ---------------------------------------------------------------------------
# tracer 3: the complex strip


def complex_reduce_trace(z, fs: FundamentalSet, *, node_budget: int = DEFAULT_COMPLEX_BUDGET):
    """Reduce Gamma(z) to direct evaluations at points whose real part lies
    in fs.leaf_union and |Im| < 1.

    Order of reduction: shifts/reflection bring Re z into (0, 1], then
    duplication halvings shrink the imaginary part below 1 (both children
    of z have imaginary part Im(z)/2), then the real decomposition pattern
    runs on real parts, which are exact dyadic rationals.  Raises
    DepthError when the tree would exceed node_budget nodes.
    """
    z = complex(z)
    if pole_distance(z) <= 1e-6:
        raise DomainError(f"{z!r} is within 1e-6 of a pole")
    if abs(z.imag) > 2.0**16:
        raise DomainError(f"|Im z| = {abs(z.imag)} exceeds 2**16")
    _require_explicit(fs)
    budget = [node_budget]
    return _finish_trace(_reduce_complex(z, fs, budget))


def _spend(budget):
    budget[0] -= 1
    if budget[0] < 0:
        raise DepthError("complex reduction exceeded the node budget")


def _reduce_complex(z: complex, fs: FundamentalSet, budget) -> TraceNode:
    if z.real > 1.0:
        _spend(budget)
        child = _reduce_complex(z - 1, fs, budget)
        return TraceNode("functional", z, (z - 1) * child.value, (child,))
    if z.real <= 0.0:
        _spend(budget)
        child = _reduce_complex(1 - z, fs, budget)
        value = math.pi / (cmath.sin(math.pi * z) * child.value)
        return TraceNode("reflection", z, value, (child,))
    if abs(z.imag) >= 1.0:
        _spend(budget)
        c1 = _reduce_complex(z / 2, fs, budget)
        c2 = _reduce_complex(z / 2 + 0.5, fs, budget)
        value = cmath.exp((z - 1) * math.log(2.0)) * c1.value * c2.value / _SQRT_PI
        return TraceNode("duplication", z, value, (c1, c2))
    return _walk_complex(z, 0, fs, budget)


def _walk_complex(z: complex, r: int, fs: FundamentalSet, budget) -> TraceNode:
    re = Fraction(z.real)
    if re in fs.leaf_union:
        _spend(budget)
        return TraceNode("direct", z, gamma(z), ())
    if r >= fs.t:
        raise TraceDepthError(f"real part {z.real} uncovered after {fs.t} rounds")
    piece = _find_piece(fs.rounds_pieces[r], re)
    if piece is None:
        raise TraceDepthError(f"real part {z.real} not covered at round {r}")
    m = _class_of(piece[1], fs.delta)
    return _chain_complex(z, m, r, fs, budget)


def _chain_complex(z: complex, m: int, r: int, fs: FundamentalSet, budget) -> TraceNode:
    _spend(budget)
    if Fraction(z.real) in fs.leaf_union:
        return TraceNode("direct", z, gamma(z), ())
    if m == 0:
        raise TraceDepthError(f"chain bottomed out at {z!r} outside the set")
    low = _chain_complex(z / 2, m - 1, r, fs, budget)
    high = _walk_complex(z / 2 + 0.5, r + 1, fs, budget)
    value = cmath.exp((z - 1) * math.log(2.0)) * low.value * high.value / _SQRT_PI
    return TraceNode("duplication", z, value, (low, high))
