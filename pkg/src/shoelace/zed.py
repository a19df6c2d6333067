"""Integer-window specialization: interval modules, barcodes, epsilon-matchings,
Condition (*), and the correspondence between matchings and decomposed
representations of the windowed shoelace.

The infinite chain of integers is handled through finite windows.  The
uniform translation by eps is clamped at the window top so it stays a valid
translation of the finite chain, but the shoelace cross relation uses the
unclamped rule i + eps <= j, matching the restriction of the full integer
shoelace to the window.  Clamping the cross rule instead would create
isomorphisms i = i' near the boundary that the infinite picture does not
have.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .exactlin import FieldSpec, Matrix, mat_rank, mat_solve_homogeneous
from .proset import (
    HeightFunction,
    Proset,
    ShoelaceProset,
    Translation,
    chain,
    shoelace,
)
from .rep import (
    NatTrans,
    Representation,
    direct_sum,
    precompose,
    subrelation_transfer,
    zero_nat,
    zero_representation,
)
from .interleave import Interleaving, pack


class Ext:
    """Integer extended with symbolic -inf / +inf endpoints.

    Distances follow the convention |+-inf - (-+inf)| = inf,
    |+-inf - (+-inf)| = 0, |+-inf - x| = inf for finite x.
    """

    __slots__ = ("kind", "value")

    def __init__(self, value: int):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"finite Ext needs an int, got {value!r}")
        object.__setattr__(self, "kind", 0)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Ext is immutable")

    @classmethod
    def _make_inf(cls, kind: int) -> "Ext":
        out = object.__new__(cls)
        object.__setattr__(out, "kind", kind)
        object.__setattr__(out, "value", 0)
        return out

    @property
    def is_finite(self) -> bool:
        return self.kind == 0

    def _key(self) -> tuple[int, int]:
        return (self.kind, self.value)

    @staticmethod
    def of(x: Union["Ext", int, str]) -> "Ext":
        if isinstance(x, Ext):
            return x
        if isinstance(x, str):
            if x == "-inf":
                return NEG_INF
            if x == "+inf":
                return POS_INF
            raise ValueError(f"not an extended integer: {x!r}")
        if isinstance(x, int) and not isinstance(x, bool):
            return Ext(x)
        raise ValueError(f"not an extended integer: {x!r}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (Ext, int)):
            return self._key() == Ext.of(other)._key()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other) -> bool:
        return self._key() < Ext.of(other)._key()

    def __le__(self, other) -> bool:
        return self._key() <= Ext.of(other)._key()

    def __gt__(self, other) -> bool:
        return self._key() > Ext.of(other)._key()

    def __ge__(self, other) -> bool:
        return self._key() >= Ext.of(other)._key()

    def __add__(self, other: int) -> "Ext":
        if self.kind != 0:
            return self
        return Ext(self.value + other)

    def __sub__(self, other: int) -> "Ext":
        if self.kind != 0:
            return self
        return Ext(self.value - other)

    def __str__(self) -> str:
        if self.kind < 0:
            return "-inf"
        if self.kind > 0:
            return "+inf"
        return str(self.value)

    def __repr__(self) -> str:
        return f"Ext({self})"

    def to_json(self) -> Union[int, str]:
        return self.value if self.kind == 0 else str(self)


NEG_INF = Ext._make_inf(-1)
POS_INF = Ext._make_inf(1)


def endpoint_distance(a: Union[Ext, int, str], b: Union[Ext, int, str]) -> Ext:
    a = Ext.of(a)
    b = Ext.of(b)
    if a.kind != 0 or b.kind != 0:
        return Ext(0) if a.kind == b.kind else POS_INF
    return Ext(abs(a.value - b.value))


class Interval:
    """Closed integer interval, possibly unbounded on either side.

    The four shapes are [x,y], (-inf,y], [x,+inf), and (-inf,+inf); finite
    endpoints are always closed.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Union[Ext, int, str], hi: Union[Ext, int, str]):
        lo = Ext.of(lo)
        hi = Ext.of(hi)
        if lo.kind > 0:
            raise ValueError("interval cannot start at +inf")
        if hi.kind < 0:
            raise ValueError("interval cannot end at -inf")
        if hi < lo:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    def length(self) -> Ext:
        return endpoint_distance(self.lo, self.hi)

    def is_short(self, eps: int) -> bool:
        return self.length() < Ext(2 * eps)

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.lo.kind, self.lo.value, self.hi.kind, self.hi.value)

    def contains(self, v: int) -> bool:
        return self.lo <= v and Ext.of(v) <= self.hi

    def shifted(self, eps: int) -> "Interval":
        """Both endpoints lowered by eps; infinite endpoints stay put."""
        return Interval(self.lo - eps, self.hi - eps)

    def finite_endpoints(self) -> tuple[int, ...]:
        out = []
        if self.lo.kind == 0:
            out.append(self.lo.value)
        if self.hi.kind == 0:
            out.append(self.hi.value)
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __str__(self) -> str:
        left = "(-inf" if self.lo.kind < 0 else f"[{self.lo}"
        right = "+inf)" if self.hi.kind > 0 else f"{self.hi}]"
        return f"{left},{right}"

    def __repr__(self) -> str:
        return f"Interval({self})"


class Barcode:
    """Multiset of intervals, stored in canonical sorted order."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval]):
        items = tuple(intervals)
        for i in items:
            if not isinstance(i, Interval):
                raise ValueError(f"not an interval: {i!r}")
        items = tuple(sorted(items, key=lambda i: i.sort_key))
        object.__setattr__(self, "intervals", items)

    def __setattr__(self, name, value):
        raise AttributeError("Barcode is immutable")

    def counts(self) -> Counter:
        return Counter(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Barcode):
            return NotImplemented
        return self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        return f"Barcode({', '.join(str(i) for i in self.intervals)})"


@dataclass(frozen=True)
class Window:
    """Finite integer range [lo, hi] serving as the carrier for the chain."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def index(self, v: int) -> int:
        if not (self.lo <= v <= self.hi):
            raise ValueError(f"value {v} outside window [{self.lo}, {self.hi}]")
        return v - self.lo

    def value(self, i: int) -> int:
        return self.lo + i


class Matching:
    """Partial bijection between barcode instances at a given epsilon.

    Whether the pairs really form a partial bijection satisfying the
    distance and shortness rules is checked by validate_matching.
    """

    __slots__ = ("source", "target", "pairs", "epsilon")

    def __init__(self, source: Barcode, target: Barcode,
                 pairs: Iterable[tuple[Interval, Interval]], epsilon: int):
        if not isinstance(epsilon, int) or isinstance(epsilon, bool) or epsilon < 0:
            raise ValueError(f"epsilon must be a nonnegative integer, got {epsilon!r}")
        ps = tuple(sorted(((a, b) for (a, b) in pairs),
                          key=lambda ab: (ab[0].sort_key, ab[1].sort_key)))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "pairs", ps)
        object.__setattr__(self, "epsilon", epsilon)

    def __setattr__(self, name, value):
        raise AttributeError("Matching is immutable")

    def unmatched_source(self) -> Counter:
        c = self.source.counts()
        c.subtract(Counter(a for (a, _) in self.pairs))
        return +c

    def unmatched_target(self) -> Counter:
        c = self.target.counts()
        c.subtract(Counter(b for (_, b) in self.pairs))
        return +c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.pairs == other.pairs and self.epsilon == other.epsilon)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.pairs, self.epsilon))

    def __repr__(self) -> str:
        return f"Matching(eps={self.epsilon}, pairs={len(self.pairs)})"


@dataclass(frozen=True)
class DecomposedShoelaceRep:
    """Certificate that a windowed shoelace representation splits into
    interval-shaped summands, each a (left bar, right bar) pair with at
    least one side present."""

    window: Window
    epsilon: int
    field: FieldSpec
    summands: tuple[tuple[Optional[Interval], Optional[Interval]], ...]

    def __init__(self, window: Window, epsilon: int, field: FieldSpec,
                 summands: Iterable[Sequence[Optional[Interval]]]):
        norm = []
        for s in summands:
            l, r = s[0], s[1]
            for side in (l, r):
                if side is not None and not isinstance(side, Interval):
                    raise ValueError(f"summand side must be an Interval or None, "
                                     f"got {side!r}")
            norm.append((l, r))
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "summands", tuple(norm))

    def canonical(self) -> "DecomposedShoelaceRep":
        return DecomposedShoelaceRep(
            self.window, self.epsilon, self.field,
            sorted(self.summands, key=_summand_key))


def _summand_key(s: tuple[Optional[Interval], Optional[Interval]]):
    l, r = s
    return (0 if l is not None else 1, l.sort_key if l is not None else (),
            0 if r is not None else 1, r.sort_key if r is not None else ())


@lru_cache(maxsize=1024)
def window_chain(w: Window) -> tuple[Proset, HeightFunction]:
    """The window as a chain proset with its values as labels and heights."""
    p = chain(w.size, tuple(str(w.value(i)) for i in range(w.size)))
    return p, HeightFunction(w.value(i) for i in range(w.size))


@lru_cache(maxsize=1024)
def lambda_eps(w: Window, eps: int) -> Translation:
    """Uniform shift by eps, clamped at the window top."""
    if eps < 0:
        raise ValueError(f"negative epsilon {eps}")
    p, _ = window_chain(w)
    return Translation(p, tuple(min(i + eps, w.size - 1) for i in range(w.size)))


@lru_cache(maxsize=1024)
def shoelace_window(w: Window, eps: int) -> tuple[ShoelaceProset, HeightFunction]:
    """Restriction of the doubled integer chain to the window.

    Cross relations use the unclamped rule i + eps <= j, so this is exactly
    the full shoelace of the integers cut down to the window; see the module
    docstring for why this differs from shoelace(window_chain, lambda_eps).
    The carrier's height repeats the window value on both copies.
    """
    if eps < 0:
        raise ValueError(f"negative epsilon {eps}")
    base, _ = window_chain(w)
    lam = lambda_eps(w, eps)
    n = w.size
    cross = tuple(tuple(i + eps <= j for j in range(n)) for i in range(n))
    rel = []
    for i in range(n):
        rel.append(tuple(base.rel[i]) + cross[i])
    for i in range(n):
        rel.append(cross[i] + tuple(base.rel[i]))
    labels = tuple(base.label(i) for i in range(n)) + tuple(
        base.label(i) + "'" for i in range(n))
    sh = ShoelaceProset(2 * n, tuple(rel), labels, base, lam)
    heights = [w.value(i) for i in range(n)] * 2
    return sh, HeightFunction(heights)


@lru_cache(maxsize=8192)
def interval_to_module(i: Interval, w: Window,
                       field: FieldSpec = FieldSpec(2)) -> Representation:
    """Thin representation of the window chain supported on the interval.

    Finite endpoints must lie inside the window; clamping them silently
    would change the module, so it is refused.  Infinite endpoints clamp to
    the window edges by design.
    """
    for e in i.finite_endpoints():
        if not (w.lo <= e <= w.hi):
            raise ValueError(
                f"finite endpoint {e} of {i} lies outside window "
                f"[{w.lo}, {w.hi}]; refusing a lossy clamp")
    p, _ = window_chain(w)
    dims = tuple(1 if i.contains(w.value(k)) else 0 for k in range(w.size))
    maps = {}
    for (a, b) in p.related_pairs:
        if dims[a] and dims[b]:
            maps[(a, b)] = Matrix.identity(field, 1)
        else:
            maps[(a, b)] = Matrix.zeros(field, dims[b], dims[a])
    return Representation(p, field, dims, maps)


def barcode(m: Representation, w: Window, boundary: str = "finite") -> Barcode:
    """Interval decomposition multiset of a module on the window chain.

    Uses the rank inclusion-exclusion formula
    m[a,b] = r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1), with r zero outside
    the window.  boundary="infinite" reports bars touching the window edges
    with infinite endpoints instead of the edge values.
    """
    if boundary not in ("finite", "infinite"):
        raise ValueError(f"boundary must be 'finite' or 'infinite', got {boundary!r}")
    n = w.size
    if m.proset.n != n:
        raise ValueError(f"module has {m.proset.n} points, window has {n}")

    ranks = {}
    for a in range(n):
        for b in range(a, n):
            ranks[(a, b)] = mat_rank(m.maps[(a, b)])

    def r(a: int, b: int) -> int:
        if a < 0 or b >= n or a > b:
            return 0
        return ranks[(a, b)]

    bars = []
    for a in range(n):
        for b in range(a, n):
            mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            if mult < 0:
                raise ValueError(
                    f"negative multiplicity at [{w.value(a)}, {w.value(b)}]; "
                    f"module is not functorial")
            if mult == 0:
                continue
            lo: Union[int, Ext] = w.value(a)
            hi: Union[int, Ext] = w.value(b)
            if boundary == "infinite":
                if a == 0:
                    lo = NEG_INF
                if b == n - 1:
                    hi = POS_INF
            bars.extend([Interval(lo, hi)] * mult)
    return Barcode(bars)


def condition_star(i: Interval, j: Interval, eps: int) -> bool:
    """The overlap disjunction: with i = I[x,y] and j = I[s,t], either
    s-eps <= x <= t-eps <= y or x-eps <= s <= y-eps <= t."""
    x, y = i.lo, i.hi
    s, t = j.lo, j.hi
    first = s - eps <= x and x <= t - eps and t - eps <= y
    second = x - eps <= s and s <= y - eps and y - eps <= t
    return first or second


def _star_disjuncts(i: Interval, j: Interval, eps: int) -> tuple[bool, bool]:
    x, y = i.lo, i.hi
    s, t = j.lo, j.hi
    first = s - eps <= x and x <= t - eps and t - eps <= y
    second = x - eps <= s and s <= y - eps and y - eps <= t
    return first, second


def validate_matching(s: Matching) -> Optional[str]:
    """None if s is a valid eps-matching, else the first violation.

    Checks that pairs draw from the barcodes as multisets, that matched
    endpoints are within eps, and that unmatched intervals are short
    (length < 2*eps).  An unmatched infinite interval fails the shortness
    rule, which is how the no-unmatched-infinite-bars consequence surfaces.
    """
    eps = s.epsilon
    left_used = Counter(a for (a, _) in s.pairs)
    right_used = Counter(b for (_, b) in s.pairs)
    if left_used - s.source.counts():
        bad = next(iter(left_used - s.source.counts()))
        return f"pair uses {bad} more times than the source barcode provides"
    if right_used - s.target.counts():
        bad = next(iter(right_used - s.target.counts()))
        return f"pair uses {bad} more times than the target barcode provides"
    for (a, b) in s.pairs:
        if endpoint_distance(a.lo, b.lo) > eps:
            return (f"matched pair ({a}, {b}): left endpoints differ by "
                    f"{endpoint_distance(a.lo, b.lo)} > {eps}")
        if endpoint_distance(a.hi, b.hi) > eps:
            return (f"matched pair ({a}, {b}): right endpoints differ by "
                    f"{endpoint_distance(a.hi, b.hi)} > {eps}")
    for side, counter in (("source", s.unmatched_source()),
                          ("target", s.unmatched_target())):
        for bar, cnt in counter.items():
            if cnt and not bar.is_short(eps):
                return (f"unmatched {side} interval {bar} has length "
                        f"{bar.length()}, not < {2 * eps}")
    return None


def is_essential(s: Matching) -> list[tuple[Interval, Interval]]:
    """Matched short-short pairs violating Condition (*).  Empty list means
    the matching is essential.  Pairs where either side has length >= 2*eps
    are exempt."""
    err = validate_matching(s)
    if err is not None:
        raise ValueError(f"invalid matching: {err}")
    eps = s.epsilon
    out = []
    for (a, b) in s.pairs:
        if a.is_short(eps) and b.is_short(eps) and not condition_star(a, b, eps):
            out.append((a, b))
    return out


def hom_dimension(i: Interval, j: Interval, w: Window,
                  field: FieldSpec = FieldSpec(2)) -> int:
    """Dimension of the natural-transformation space between the two
    interval modules, via the homogeneous solver over all naturality
    constraints."""
    m = interval_to_module(i, w, field)
    n = interval_to_module(j, w, field)
    shapes = [(n.dims[a], m.dims[a]) for a in range(w.size)]
    constraints = []
    for (a, b) in m.proset.related_pairs:
        if a == b:
            continue
        if m.dims[a] == 0 or n.dims[b] == 0:
            continue
        constraints.append((n.maps[(a, b)], a, m.maps[(a, b)], b))
    dim, _ = mat_solve_homogeneous(field, shapes, constraints)
    return dim


def _headroom(i: Interval, w: Window, eps: int) -> bool:
    u = i.hi
    if u.kind != 0:
        return True
    return u.value < w.hi or u.value + 2 * eps <= w.hi


def canonical_pair(i: Interval, j: Interval, eps: int, w: Window,
                   field: FieldSpec = FieldSpec(2)) -> tuple[NatTrans, NatTrans]:
    """The canonical comparison maps f: M(i) -> M(j) shifted, g: M(j) -> M(i)
    shifted, each the identity on its overlap range and zero elsewhere.

    f is supported on [i.lo, j.hi - eps] when the first disjunct of the
    overlap condition holds, else f = 0; symmetrically for g.  When the
    corresponding hom space is nonzero this is its canonical generator, and
    the support formula is exactly the matched-pair recipe.

    Needs top headroom beyond realizability: a finite upper endpoint u is
    allowed only if u < w.hi or u + 2*eps <= w.hi, else the clamp of the
    shift distorts naturality and the construction is refused.
    """
    for (name, iv) in (("first", i), ("second", j)):
        for e in iv.finite_endpoints():
            if not (w.lo <= e <= w.hi):
                raise ValueError(
                    f"{name} interval {iv} is not realizable on window "
                    f"[{w.lo}, {w.hi}]")
        if not _headroom(iv, w, eps):
            raise ValueError(
                f"window top {w.hi} leaves no headroom for {iv} at eps={eps}; "
                f"upper endpoint must satisfy u < {w.hi} or u + {2 * eps} <= {w.hi}")
    m = interval_to_module(i, w, field)
    n = interval_to_module(j, w, field)
    lam = lambda_eps(w, eps)
    nl = precompose(n, lam)
    ml = precompose(m, lam)
    d1, d2 = _star_disjuncts(i, j, eps)

    def build(src, tgt, active, lo: Ext, hi_minus: Ext):
        comps = []
        for a in range(w.size):
            v = w.value(a)
            on = (active and lo <= v and Ext.of(v) <= hi_minus
                  and src.dims[a] == 1 and tgt.dims[a] == 1)
            if on:
                comps.append(Matrix.identity(field, 1))
            else:
                comps.append(Matrix.zeros(field, tgt.dims[a], src.dims[a]))
        return NatTrans(src, tgt, comps)

    f = build(m, nl, d1, i.lo, j.hi - eps)
    g = build(n, ml, d2, j.lo, i.hi - eps)
    return f, g


def shift_interval(i: Interval, eps: int) -> Interval:
    """Endpoints lowered by eps; what precomposition with the uniform shift
    does to an interval away from the window clamp."""
    return i.shifted(eps)


def matching_to_rep(s: Matching, w: Window, variant: str = "essential_F",
                    field: FieldSpec = FieldSpec(2)) -> DecomposedShoelaceRep:
    """Turn a matching into a decomposition certificate.

    essential_F: one two-sided summand per matched pair, a single-sided
    summand per unmatched bar; requires the matching to be essential.
    nonessential_Fprime: matched short-short pairs failing Condition (*) are
    split into two single-sided summands instead.
    """
    if variant not in ("essential_F", "nonessential_Fprime"):
        raise ValueError(f"unknown variant {variant!r}")
    err = validate_matching(s)
    if err is not None:
        raise ValueError(f"invalid matching: {err}")
    eps = s.epsilon
    bad = is_essential(s)
    if variant == "essential_F" and bad:
        raise ValueError(
            f"matching is not essential: pair ({bad[0][0]}, {bad[0][1]}) "
            f"violates the overlap condition")
    for bar in list(s.source) + list(s.target):
        for e in bar.finite_endpoints():
            if not (w.lo <= e - 2 * eps and e + 2 * eps <= w.hi):
                raise ValueError(
                    f"window too small: endpoint {e} needs 2*eps = {2 * eps} "
                    f"padding inside [{w.lo}, {w.hi}]")
    summands: list[tuple[Optional[Interval], Optional[Interval]]] = []
    for (a, b) in s.pairs:
        if (variant == "nonessential_Fprime" and a.is_short(eps)
                and b.is_short(eps) and not condition_star(a, b, eps)):
            summands.append((a, None))
            summands.append((None, b))
        else:
            summands.append((a, b))
    for bar, cnt in sorted(s.unmatched_source().items(),
                           key=lambda kv: kv[0].sort_key):
        summands.extend([(bar, None)] * cnt)
    for bar, cnt in sorted(s.unmatched_target().items(),
                           key=lambda kv: kv[0].sort_key):
        summands.extend([(None, bar)] * cnt)
    return DecomposedShoelaceRep(w, eps, field, summands).canonical()


def rep_to_matching(l: DecomposedShoelaceRep) -> Matching:
    """Read the matching back off a decomposition certificate: two-sided
    summands become matched pairs, single-sided ones unmatched bars."""
    err = validate_decomposed(l)
    if err is not None:
        raise ValueError(f"invalid decomposed representation: {err}")
    source = Barcode(s[0] for s in l.summands if s[0] is not None)
    target = Barcode(s[1] for s in l.summands if s[1] is not None)
    pairs = [(s[0], s[1]) for s in l.summands
             if s[0] is not None and s[1] is not None]
    return Matching(source, target, pairs, l.epsilon)


def summand_support(s: tuple[Optional[Interval], Optional[Interval]],
                    w: Window, eps: int) -> frozenset[int]:
    """Carrier elements of shoelace_window(w, eps) where the summand's
    expansion is nonzero: the left bar on the plain copy, the right bar on
    the primed copy."""
    out = set()
    for k in range(w.size):
        v = w.value(k)
        if s[0] is not None and s[0].contains(v):
            out.add(k)
        if s[1] is not None and s[1].contains(v):
            out.add(w.size + k)
    return frozenset(out)


def support_is_interval(p: Proset, support: frozenset[int]) -> bool:
    """Connected in the comparability graph and convex (closed under
    in-betweenness)."""
    if not support:
        return False
    start = min(support)
    seen = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for y in support:
            if y not in seen and (p.rel[x][y] or p.rel[y][x]):
                seen.add(y)
                queue.append(y)
    if seen != support:
        return False
    for a in support:
        for b in support:
            if not p.rel[a][b]:
                continue
            for c in range(p.n):
                if c not in support and p.rel[a][c] and p.rel[c][b]:
                    return False
    return True


def validate_decomposed(l: DecomposedShoelaceRep) -> Optional[str]:
    """None if the certificate satisfies all structural rules.

    Checks the window padding, per-summand side presence, single-sided
    shortness, two-sided endpoint distances and the overlap condition for
    short-short pairs, and connectedness/convexity of each summand's
    support on the windowed shoelace carrier.
    """
    eps = l.epsilon
    if not isinstance(eps, int) or isinstance(eps, bool) or eps < 0:
        return f"epsilon must be a nonnegative integer, got {eps!r}"
    w = l.window
    for idx, (a, b) in enumerate(l.summands):
        for bar in (a, b):
            if bar is None:
                continue
            for e in bar.finite_endpoints():
                if not (w.lo <= e - 2 * eps and e + 2 * eps <= w.hi):
                    return (f"summand {idx}: endpoint {e} needs 2*eps = "
                            f"{2 * eps} padding inside [{w.lo}, {w.hi}]")
        if a is None and b is None:
            return f"summand {idx} has no sides"
        if a is None or b is None:
            bar = a if a is not None else b
            if not bar.is_short(eps):
                return (f"summand {idx}: single-sided bar {bar} has length "
                        f"{bar.length()}, not < {2 * eps}")
        else:
            if endpoint_distance(a.lo, b.lo) > eps:
                return (f"summand {idx}: left endpoints of ({a}, {b}) differ "
                        f"by more than {eps}")
            if endpoint_distance(a.hi, b.hi) > eps:
                return (f"summand {idx}: right endpoints of ({a}, {b}) differ "
                        f"by more than {eps}")
            if (a.is_short(eps) and b.is_short(eps)
                    and not condition_star(a, b, eps)):
                return (f"summand {idx}: short pair ({a}, {b}) fails the "
                        f"overlap condition")
    sh, _ = shoelace_window(w, eps)
    for idx, s in enumerate(l.summands):
        if not support_is_interval(sh, summand_support(s, w, eps)):
            return f"summand {idx}: support is not connected and convex"
    return None


def expand_summand(s: tuple[Optional[Interval], Optional[Interval]],
                   w: Window, eps: int, field: FieldSpec) -> Representation:
    """One summand as a concrete representation of shoelace(chain, lambda_eps),
    the packable clamped carrier."""
    p, _ = window_chain(w)
    lam = lambda_eps(w, eps)
    a, b = s
    m = interval_to_module(a, w, field) if a is not None else zero_representation(p, field)
    n = interval_to_module(b, w, field) if b is not None else zero_representation(p, field)
    if a is not None and b is not None:
        f, g = canonical_pair(a, b, eps, w, field)
    else:
        f = zero_nat(m, precompose(n, lam))
        g = zero_nat(n, precompose(m, lam))
    return pack(Interleaving(m, n, lam, f, g))


def pack_decomposed(l: DecomposedShoelaceRep) -> Representation:
    """Whole certificate on the clamped carrier shoelace(chain, lambda_eps),
    where unpack can take it apart again."""
    err = validate_decomposed(l)
    if err is not None:
        raise ValueError(f"invalid decomposed representation: {err}")
    p, _ = window_chain(l.window)
    lam = lambda_eps(l.window, l.epsilon)
    carrier = shoelace(p, lam)
    parts = [expand_summand(s, l.window, l.epsilon, l.field) for s in l.summands]
    total, _ = direct_sum(parts, proset=carrier, field=l.field)
    return total


def expand_decomposed(l: DecomposedShoelaceRep) -> Representation:
    """Whole certificate as a concrete representation of the unclamped
    windowed shoelace carrier."""
    sh, _ = shoelace_window(l.window, l.epsilon)
    return subrelation_transfer(pack_decomposed(l), sh)


def matching_interleaving(s: Matching, w: Window,
                          field: FieldSpec = FieldSpec(2)) -> Interleaving:
    """Explicit interleaving between the canonical interval-sum modules of
    the two barcodes, with one canonical-pair block per matched pair.

    Matched short-short pairs that fail the overlap condition contribute
    zero blocks (their canonical maps vanish), so the result is valid for
    any valid matching, essential or not.
    """
    err = validate_matching(s)
    if err is not None:
        raise ValueError(f"invalid matching: {err}")
    eps = s.epsilon
    for bar in list(s.source) + list(s.target):
        for e in bar.finite_endpoints():
            if not (w.lo <= e - 2 * eps and e + 2 * eps <= w.hi):
                raise ValueError(
                    f"window too small: endpoint {e} needs 2*eps = {2 * eps} "
                    f"padding inside [{w.lo}, {w.hi}]")
    p, _ = window_chain(w)
    lam = lambda_eps(w, eps)
    src_bars = list(s.source)
    tgt_bars = list(s.target)
    m_parts = [interval_to_module(bar, w, field) for bar in src_bars]
    n_parts = [interval_to_module(bar, w, field) for bar in tgt_bars]
    m, m_slices = direct_sum(m_parts, proset=p, field=field)
    n, n_slices = direct_sum(n_parts, proset=p, field=field)

    src_free = list(range(len(src_bars)))
    tgt_free = list(range(len(tgt_bars)))

    def take(pool: list[int], bars: list[Interval], bar: Interval) -> int:
        for pos, k in enumerate(pool):
            if bars[k] == bar:
                return pool.pop(pos)
        raise ValueError(f"bar {bar} not available; matching is inconsistent")

    nl = precompose(n, lam)
    ml = precompose(m, lam)
    phi_ent = [[[0] * m.dims[a] for _ in range(nl.dims[a])] for a in range(p.n)]
    psi_ent = [[[0] * n.dims[a] for _ in range(ml.dims[a])] for a in range(p.n)]
    for (a, b) in s.pairs:
        ks = take(src_free, src_bars, a)
        kt = take(tgt_free, tgt_bars, b)
        if a.is_short(eps) and b.is_short(eps) and not condition_star(a, b, eps):
            continue
        f, g = canonical_pair(a, b, eps, w, field)
        for idx in range(p.n):
            block = f.components[idx]
            (r0, _) = n_slices[kt][lam.mapping[idx]]
            (c0, _) = m_slices[ks][idx]
            for r in range(block.rows):
                for c in range(block.cols):
                    phi_ent[idx][r0 + r][c0 + c] = block.entries[r][c]
            block = g.components[idx]
            (r0, _) = m_slices[ks][lam.mapping[idx]]
            (c0, _) = n_slices[kt][idx]
            for r in range(block.rows):
                for c in range(block.cols):
                    psi_ent[idx][r0 + r][c0 + c] = block.entries[r][c]
    phi = NatTrans(m, nl, tuple(
        Matrix(field, nl.dims[a], m.dims[a], phi_ent[a]) for a in range(p.n)))
    psi = NatTrans(n, ml, tuple(
        Matrix(field, ml.dims[a], n.dims[a], psi_ent[a]) for a in range(p.n)))
    return Interleaving(m, n, lam, phi, psi)


def iter_matchings(bm: Barcode, bn: Barcode, eps: int,
                   require_essential: bool = False):
    """All valid (optionally essential) eps-matchings between two barcodes,
    distinct as pair-multisets, in a deterministic order that tries matched
    options before leaving a bar unmatched."""
    if eps < 0:
        raise ValueError(f"negative epsilon {eps}")
    src = list(bm)
    tgt_counts = Counter(bn)

    def pair_ok(a: Interval, b: Interval) -> bool:
        if endpoint_distance(a.lo, b.lo) > eps:
            return False
        if endpoint_distance(a.hi, b.hi) > eps:
            return False
        if require_essential and a.is_short(eps) and b.is_short(eps):
            return condition_star(a, b, eps)
        return True

    seen: set[frozenset] = set()
    pairs: list[tuple[Interval, Interval]] = []

    def emit():
        key = frozenset(Counter(pairs).items())
        if key in seen:
            return None
        seen.add(key)
        return Matching(bm, bn, pairs, eps)

    def rec(idx: int):
        if idx == len(src):
            for bar, cnt in tgt_counts.items():
                if cnt and not bar.is_short(eps):
                    return
            out = emit()
            if out is not None:
                yield out
            return
        a = src[idx]
        tried = set()
        for b in sorted(tgt_counts, key=lambda x: x.sort_key):
            if tgt_counts[b] == 0 or b in tried:
                continue
            tried.add(b)
            if not pair_ok(a, b):
                continue
            tgt_counts[b] -= 1
            pairs.append((a, b))
            yield from rec(idx + 1)
            pairs.pop()
            tgt_counts[b] += 1
        if a.is_short(eps):
            yield from rec(idx + 1)

    yield from rec(0)


def find_matching(bm: Barcode, bn: Barcode, eps: int,
                  require_essential: bool = False) -> Optional[Matching]:
    """First matching from the deterministic search, or None."""
    for s in iter_matchings(bm, bn, eps, require_essential):
        return s
    return None
