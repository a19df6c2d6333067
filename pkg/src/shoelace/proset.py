"""Finite preordered sets, translations, and the shoelace construction.

A proset here is reflexive and transitive but not required to be
antisymmetric, so distinct elements may be related both ways.  Elements are
the integers 0..n-1 with optional display labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class Proset:
    """Finite proset with a dense relation table.

    rel[i][j] is True when i <= j.  Equality compares (n, rel, labels) only,
    so two prosets with the same table and labels are interchangeable.
    """

    __slots__ = ("n", "rel", "labels", "_pairs")

    def __init__(self, n: int, rel: Sequence[Sequence[bool]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError(f"negative size {n}")
        table = tuple(tuple(bool(x) for x in row) for row in rel)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"relation table is not {n}x{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rel", table)
        object.__setattr__(self, "labels",
                           None if labels is None else tuple(str(x) for x in labels))
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"expected {n} labels, got {len(self.labels)}")
        object.__setattr__(self, "_pairs", None)

    def __setattr__(self, name, value):
        raise AttributeError("Proset is immutable")

    def leq(self, i: int, j: int) -> bool:
        return self.rel[i][j]

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(i)
        return self.labels[i]

    @property
    def related_pairs(self) -> tuple[tuple[int, int], ...]:
        """All ordered pairs (i, j) with i <= j, including every (i, i)."""
        if self._pairs is None:
            pairs = tuple((i, j) for i in range(self.n) for j in range(self.n)
                          if self.rel[i][j])
            object.__setattr__(self, "_pairs", pairs)
        return self._pairs

    def up(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.rel[i][j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Proset):
            return NotImplemented
        return (self.n == other.n and self.rel == other.rel
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.n, self.rel, self.labels))

    def __repr__(self) -> str:
        return f"Proset(n={self.n})"


def chain(n: int, labels: Optional[Sequence[str]] = None) -> Proset:
    """The linear order 0 <= 1 <= ... <= n-1."""
    return Proset(n, tuple(tuple(i <= j for j in range(n)) for i in range(n)),
                  labels)


def proset_from_pairs(n: int, pairs: Iterable[tuple[int, int]],
                      labels: Optional[Sequence[str]] = None) -> Proset:
    """Smallest proset containing the given pairs: reflexive-transitive closure."""
    rel = [[i == j for j in range(n)] for i in range(n)]
    for (i, j) in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"pair ({i}, {j}) out of range for n={n}")
        rel[i][j] = True
    for k in range(n):
        rk = rel[k]
        for i in range(n):
            if rel[i][k]:
                ri = rel[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return Proset(n, rel, labels)


def validate_proset(p: Proset) -> Optional[str]:
    """None if reflexive and transitive, else a report naming the first violation."""
    for i in range(p.n):
        if not p.rel[i][i]:
            return f"not reflexive: {p.label(i)} !<= {p.label(i)}"
    for i in range(p.n):
        for j in range(p.n):
            if not p.rel[i][j]:
                continue
            for k in range(p.n):
                if p.rel[j][k] and not p.rel[i][k]:
                    return (f"not transitive: {p.label(i)} <= {p.label(j)} <= "
                            f"{p.label(k)} but {p.label(i)} !<= {p.label(k)}")
    return None


class Translation:
    """An inflationary monotone self-map of a proset.

    Validity (i <= mapping[i], monotonicity) is checked by
    validate_translation, not the constructor, so invalid candidates can be
    built and reported on.
    """

    __slots__ = ("base", "mapping")

    def __init__(self, base: Proset, mapping: Sequence[int]):
        m = tuple(int(x) for x in mapping)
        if len(m) != base.n:
            raise ValueError(f"expected {base.n} mapping entries, got {len(m)}")
        if any(not (0 <= x < base.n) for x in m):
            raise ValueError("mapping entry out of range")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "mapping", m)

    def __setattr__(self, name, value):
        raise AttributeError("Translation is immutable")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Translation):
            return NotImplemented
        return self.base == other.base and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash((self.base, self.mapping))

    def __repr__(self) -> str:
        return f"Translation({self.mapping})"


def identity_translation(p: Proset) -> Translation:
    return Translation(p, tuple(range(p.n)))


def validate_translation(t: Translation) -> Optional[str]:
    p = t.base
    for i in range(p.n):
        if not p.rel[i][t.mapping[i]]:
            return (f"not inflationary: {p.label(i)} !<= "
                    f"{p.label(t.mapping[i])} = image of {p.label(i)}")
    for (i, j) in p.related_pairs:
        if not p.rel[t.mapping[i]][t.mapping[j]]:
            return (f"not monotone: {p.label(i)} <= {p.label(j)} but "
                    f"{p.label(t.mapping[i])} !<= {p.label(t.mapping[j])}")
    return None


def compose_translations(a: Translation, b: Translation) -> Translation:
    """a after b: i |-> a(b(i))."""
    if a.base != b.base:
        raise ValueError("translations live on different prosets")
    return Translation(a.base, tuple(a.mapping[b.mapping[i]] for i in range(a.base.n)))


def power_translation(t: Translation, k: int) -> Translation:
    if k < 0:
        raise ValueError(f"negative power {k}")
    out = identity_translation(t.base)
    for _ in range(k):
        out = compose_translations(t, out)
    return out


def compare_translations(a: Translation, b: Translation) -> str:
    """Pointwise comparison in the base relation.

    Returns "equal", "leq" (a <= b strictly one-way), "geq", or
    "incomparable".  "equal" means both directions hold pointwise, which on a
    proset with 2-cycles is weaker than mapping equality.
    """
    if a.base != b.base:
        raise ValueError("translations live on different prosets")
    p = a.base
    ab = all(p.rel[a.mapping[i]][b.mapping[i]] for i in range(p.n))
    ba = all(p.rel[b.mapping[i]][a.mapping[i]] for i in range(p.n))
    if ab and ba:
        return "equal"
    if ab:
        return "leq"
    if ba:
        return "geq"
    return "incomparable"


class ShoelaceProset(Proset):
    """Doubled proset carrying an interleaving as a single representation.

    Elements 0..n-1 are the plain copy of the base, n..2n-1 the primed copy.
    Cross relations both ways between i and j' hold exactly when
    lam(i) <= j in the base.

    Equality between two ShoelaceProsets compares base and translation as
    well as the relation table: over a non-antisymmetric base, distinct
    translations can induce identical tables, and pack/unpack needs the
    translation.  Comparison against a plain Proset falls back to
    relation-table equality.
    """

    __slots__ = ("base", "lam")

    def __init__(self, n: int, rel: Sequence[Sequence[bool]],
                 labels: Optional[Sequence[str]], base: Proset, lam: Translation):
        super().__init__(n, rel, labels)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "lam", lam)

    def plain(self, i: int) -> int:
        return i

    def primed(self, i: int) -> int:
        return self.base.n + i

    def origin(self, k: int) -> tuple[int, bool]:
        """Base element and primed flag for a carrier element."""
        n = self.base.n
        if k < n:
            return (k, False)
        return (k - n, True)

    def __eq__(self, other) -> bool:
        if isinstance(other, ShoelaceProset):
            return (Proset.__eq__(self, other) is True
                    and self.base == other.base
                    and self.lam.mapping == other.lam.mapping)
        if isinstance(other, Proset):
            return Proset.__eq__(self, other)
        return NotImplemented

    def __hash__(self) -> int:
        return Proset.__hash__(self)

    def __repr__(self) -> str:
        return f"ShoelaceProset(base_n={self.base.n}, lam={self.lam.mapping})"


def shoelace(p: Proset, lam: Translation) -> ShoelaceProset:
    """Disjoint union of two copies of p laced together by lam.

    Within each copy the relation is p's own.  Between copies, i <= j' and
    i' <= j both hold exactly when lam(i) <= j.  The result of a valid
    translation is transitively closed by construction.
    """
    if lam.base != p:
        raise ValueError("translation is not defined on this proset")
    err = validate_translation(lam)
    if err is not None:
        raise ValueError(f"invalid translation: {err}")
    n = p.n
    cross = tuple(tuple(p.rel[lam.mapping[i]][j] for j in range(n))
                  for i in range(n))
    rel = []
    for i in range(n):
        rel.append(tuple(p.rel[i]) + cross[i])
    for i in range(n):
        rel.append(cross[i] + tuple(p.rel[i]))
    labels = tuple(p.label(i) for i in range(n)) + tuple(
        p.label(i) + "'" for i in range(n))
    return ShoelaceProset(2 * n, tuple(rel), labels, p, lam)


def iso_pairs(p: Proset) -> frozenset[frozenset[int]]:
    """Unordered pairs {x, y}, x != y, related both ways.

    Always empty on a poset.  On a shoelace carrier, {i, i'} shows up
    exactly when lam(i) <= i in the base.
    """
    out = []
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if p.rel[x][y] and p.rel[y][x]:
                out.append(frozenset((x, y)))
    return frozenset(out)


def induced_translation(sh: ShoelaceProset, gamma: Translation,
                        twist: bool = False) -> Translation:
    """Lift a base translation gamma to the shoelace carrier.

    Requires gamma to commute with the lacing translation as a map.  The
    plain lift sends i -> gamma(i), i' -> gamma(i)'.  The twisted lift
    (twist=True) swaps copies, i -> gamma(i)', i' -> gamma(i), and
    additionally requires lam <= gamma pointwise, else the result would not
    be inflationary across the lacing.
    """
    lam = sh.lam
    if gamma.base != sh.base:
        raise ValueError("gamma is not a translation of the base proset")
    n = sh.base.n
    for i in range(n):
        if lam.mapping[gamma.mapping[i]] != gamma.mapping[lam.mapping[i]]:
            raise ValueError(
                f"gamma does not commute with the lacing translation at "
                f"{sh.base.label(i)}")
    if twist and compare_translations(lam, gamma) not in ("leq", "equal"):
        raise ValueError("twisted lift needs lam <= gamma pointwise")
    if twist:
        mapping = tuple(n + gamma.mapping[i] for i in range(n)) + tuple(
            gamma.mapping[i] for i in range(n))
    else:
        mapping = tuple(gamma.mapping[i] for i in range(n)) + tuple(
            n + gamma.mapping[i] for i in range(n))
    return Translation(sh, mapping)


@dataclass(frozen=True)
class HeightFunction:
    """Monotone rational height on a proset's elements."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in values))

    def __call__(self, i: int) -> Fraction:
        return self.values[i]


def validate_height(p: Proset, h: HeightFunction) -> Optional[str]:
    if len(h.values) != p.n:
        return f"expected {p.n} heights, got {len(h.values)}"
    for (i, j) in p.related_pairs:
        if h.values[i] > h.values[j]:
            return (f"not monotone: {p.label(i)} <= {p.label(j)} but "
                    f"height {h.values[i]} > {h.values[j]}")
    return None


@dataclass(frozen=True)
class TranslationHeight:
    """How far a translation moves points, measured by a height function.

    height is the maximum of h(t(i)) - h(i).  uniform means the shift is the
    same at every measured point; epsilon is that common shift when uniform,
    else None.
    """

    height: Fraction
    uniform: bool
    epsilon: Optional[Fraction]


def translation_height(t: Translation, h: HeightFunction,
                       elements: Optional[Iterable[int]] = None) -> TranslationHeight:
    """Measure t against h, optionally only on a subset of elements.

    The subset lets callers exclude boundary points where a clamped
    translation necessarily moves less than its nominal shift.
    """
    p = t.base
    err = validate_height(p, h)
    if err is not None:
        raise ValueError(f"invalid height function: {err}")
    idx = tuple(range(p.n)) if elements is None else tuple(elements)
    if not idx:
        raise ValueError("no elements to measure")
    shifts = [h.values[t.mapping[i]] - h.values[i] for i in idx]
    top = max(shifts)
    uniform = all(s == top for s in shifts)
    return TranslationHeight(height=top, uniform=uniform,
                             epsilon=top if uniform else None)
