"""Representations of finite prosets and natural transformations between them.

A representation stores a matrix for every related ordered pair, including
the diagonal.  That is redundant (composites determine most maps) but the
redundancy is validated rather than trusted: validate_representation checks
the diagonal identities and every composable triple.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .exactlin import FieldSpec, Matrix, mat_mul, mat_inverse
from .proset import Proset, ShoelaceProset, Translation


class Representation:
    """Functor from a proset to finite-dimensional F_p vector spaces.

    dims[i] is the dimension at element i; maps[(i, j)] is the dims[j] x
    dims[i] matrix of the structure map i <= j.  The key set must be exactly
    the proset's related pairs.
    """

    __slots__ = ("proset", "field", "dims", "maps")

    def __init__(self, proset: Proset, field: FieldSpec,
                 dims: Sequence[int], maps: Mapping[tuple[int, int], Matrix]):
        d = tuple(int(x) for x in dims)
        if len(d) != proset.n:
            raise ValueError(f"expected {proset.n} dims, got {len(d)}")
        if any(x < 0 for x in d):
            raise ValueError("negative dimension")
        expected = set(proset.related_pairs)
        got = set(maps.keys())
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            raise ValueError(
                f"maps must cover exactly the related pairs; "
                f"missing {missing[:4]}, unexpected {extra[:4]}")
        store = {}
        for (i, j), m in maps.items():
            if m.field != field:
                raise ValueError(f"map at ({i}, {j}) is over F_{m.field.p}, "
                                 f"not F_{field.p}")
            if (m.rows, m.cols) != (d[j], d[i]):
                raise ValueError(
                    f"map at ({i}, {j}) has shape {m.rows}x{m.cols}, "
                    f"expected {d[j]}x{d[i]}")
            store[(i, j)] = m
        object.__setattr__(self, "proset", proset)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dims", d)
        object.__setattr__(self, "maps", store)

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.proset == other.proset and self.field == other.field
                and self.dims == other.dims and self.maps == other.maps)

    def __repr__(self) -> str:
        return f"Representation(p={self.field.p}, dims={self.dims})"


def validate_representation(m: Representation) -> Optional[str]:
    """None if functorial, else a report on the first failure.

    Checks identity on every diagonal and the composition equation on every
    related triple i <= j <= k with i != j and j != k.
    """
    p = m.proset
    for i in range(p.n):
        if m.maps[(i, i)] != Matrix.identity(m.field, m.dims[i]):
            return f"map at ({p.label(i)}, {p.label(i)}) is not the identity"
    # pairs with a zero-dimensional end are vacuous: both sides of the
    # equation are the unique empty-shaped matrix
    for (i, j) in p.related_pairs:
        if i == j or m.dims[i] == 0:
            continue
        for k in range(p.n):
            if k == j or m.dims[k] == 0 or not p.rel[j][k]:
                continue
            if mat_mul(m.maps[(j, k)], m.maps[(i, j)]) != m.maps[(i, k)]:
                return (f"composition fails over {p.label(i)} <= {p.label(j)}"
                        f" <= {p.label(k)}")
    return None


def zero_representation(proset: Proset, field: FieldSpec) -> Representation:
    dims = (0,) * proset.n
    maps = {pair: Matrix.zeros(field, 0, 0) for pair in proset.related_pairs}
    return Representation(proset, field, dims, maps)


def chain_representation(proset: Proset, field: FieldSpec,
                         dims: Sequence[int],
                         steps: Sequence[Matrix]) -> Representation:
    """Build a representation of a total chain from its consecutive maps.

    steps[i] sends dims[i] to dims[i + 1]; longer maps are the composites, so
    the result is functorial by construction.
    """
    n = proset.n
    for i in range(n):
        for j in range(n):
            if proset.rel[i][j] != (i <= j):
                raise ValueError("proset is not a total chain in index order")
    if len(steps) != max(n - 1, 0):
        raise ValueError(f"expected {n - 1} step maps, got {len(steps)}")
    for i, s in enumerate(steps):
        if s.rows != dims[i + 1] or s.cols != dims[i]:
            raise ValueError(f"step {i} has shape {s.rows}x{s.cols},"
                             f" expected {dims[i + 1]}x{dims[i]}")
    maps = {}
    for i in range(n):
        acc = Matrix.identity(field, dims[i])
        maps[(i, i)] = acc
        for j in range(i + 1, n):
            acc = mat_mul(steps[j - 1], acc)
            maps[(i, j)] = acc
    return Representation(proset, field, dims, maps)


class NatTrans:
    """Natural transformation: one matrix per element, squares checked separately."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: Representation, target: Representation,
                 components: Sequence[Matrix]):
        if source.proset != target.proset:
            raise ValueError("source and target live on different prosets")
        if source.field != target.field:
            raise ValueError("source and target are over different fields")
        comp = tuple(components)
        if len(comp) != source.proset.n:
            raise ValueError(f"expected {source.proset.n} components, got {len(comp)}")
        for i, c in enumerate(comp):
            if c.field != source.field:
                raise ValueError(f"component {i} is over the wrong field")
            if (c.rows, c.cols) != (target.dims[i], source.dims[i]):
                raise ValueError(
                    f"component {i} has shape {c.rows}x{c.cols}, expected "
                    f"{target.dims[i]}x{source.dims[i]}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "components", comp)

    def __setattr__(self, name, value):
        raise AttributeError("NatTrans is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.components == other.components)

    def __repr__(self) -> str:
        return f"NatTrans({[c.rows for c in self.components]}x{[c.cols for c in self.components]})"


def validate_nat_trans(t: NatTrans) -> Optional[str]:
    p = t.source.proset
    src_dims = t.source.dims
    tgt_dims = t.target.dims
    for (i, j) in p.related_pairs:
        # both sides have shape target.dims[j] x source.dims[i]; when either
        # is 0 the equation is vacuous
        if i == j or src_dims[i] == 0 or tgt_dims[j] == 0:
            continue
        lhs = mat_mul(t.target.maps[(i, j)], t.components[i])
        rhs = mat_mul(t.components[j], t.source.maps[(i, j)])
        if lhs != rhs:
            return (f"naturality fails over {p.label(i)} <= {p.label(j)}")
    return None


def identity_nat(m: Representation) -> NatTrans:
    return NatTrans(m, m, tuple(Matrix.identity(m.field, d) for d in m.dims))


def zero_nat(source: Representation, target: Representation) -> NatTrans:
    return NatTrans(source, target,
                    tuple(Matrix.zeros(source.field, target.dims[i], source.dims[i])
                          for i in range(source.proset.n)))


def compose_nats(g: NatTrans, f: NatTrans) -> NatTrans:
    if f.target != g.source:
        raise ValueError("nat trans composition mismatch")
    return NatTrans(f.source, g.target,
                    tuple(mat_mul(a, b) for a, b in zip(g.components, f.components)))


def scale_nat(c: int, t: NatTrans) -> NatTrans:
    from .exactlin import mat_scale
    return NatTrans(t.source, t.target,
                    tuple(mat_scale(c, x) for x in t.components))


def precompose(m: Representation, lam: Translation) -> Representation:
    """The representation M after lam: point i carries M(lam(i))."""
    if lam.base != m.proset:
        raise ValueError("translation is not defined on this representation's proset")
    p = m.proset
    dims = tuple(m.dims[lam.mapping[i]] for i in range(p.n))
    maps = {(i, j): m.maps[(lam.mapping[i], lam.mapping[j])]
            for (i, j) in p.related_pairs}
    return Representation(p, m.field, dims, maps)


def unit_whisker(m: Representation, lam: Translation) -> NatTrans:
    """The canonical map M -> M(lam), with component M(i <= lam(i)) at i."""
    if lam.base != m.proset:
        raise ValueError("translation is not defined on this representation's proset")
    comps = tuple(m.maps[(i, lam.mapping[i])] for i in range(m.proset.n))
    return NatTrans(m, precompose(m, lam), comps)


def post_whisker(t: NatTrans, lam: Translation) -> NatTrans:
    """Reindex a nat trans by lam: component at i is t's component at lam(i)."""
    if lam.base != t.source.proset:
        raise ValueError("translation is not defined on this nat trans's proset")
    comps = tuple(t.components[lam.mapping[i]] for i in range(t.source.proset.n))
    return NatTrans(precompose(t.source, lam), precompose(t.target, lam), comps)


def direct_sum(parts: Sequence[Representation],
               proset: Optional[Proset] = None,
               field: Optional[FieldSpec] = None,
               ) -> tuple[Representation, list[list[tuple[int, int]]]]:
    """Block-diagonal sum.  Returns (total, slices) where slices[k][i] is the
    (start, stop) range of part k inside the total space at element i.

    proset and field must be given explicitly when parts is empty.
    """
    if parts:
        proset = parts[0].proset if proset is None else proset
        field = parts[0].field if field is None else field
    if proset is None or field is None:
        raise ValueError("empty sum needs an explicit proset and field")
    for k, m in enumerate(parts):
        if m.proset != proset:
            raise ValueError(f"part {k} lives on a different proset")
        if m.field != field:
            raise ValueError(f"part {k} is over a different field")
    dims = tuple(sum(m.dims[i] for m in parts) for i in range(proset.n))
    slices: list[list[tuple[int, int]]] = []
    offs = [0] * proset.n
    for m in parts:
        row = []
        for i in range(proset.n):
            row.append((offs[i], offs[i] + m.dims[i]))
            offs[i] += m.dims[i]
        slices.append(row)
    maps = {}
    for (i, j) in proset.related_pairs:
        ent = [[0] * dims[i] for _ in range(dims[j])]
        for k, m in enumerate(parts):
            (ri, _), (rj, _) = slices[k][i], slices[k][j]
            block = m.maps[(i, j)]
            for r in range(block.rows):
                ent[rj + r][ri:ri + block.cols] = block.entries[r]
        maps[(i, j)] = Matrix(field, dims[j], dims[i], ent)
    return Representation(proset, field, dims, maps), slices


def project_summand(total: Representation, slices: Sequence[Sequence[tuple[int, int]]],
                    k: int) -> Representation:
    """Extract block k of a direct sum built with the given slices."""
    p = total.proset
    sl = slices[k]
    dims = tuple(stop - start for (start, stop) in sl)
    maps = {}
    for (i, j) in p.related_pairs:
        (ci, di), (cj, dj) = sl[i], sl[j]
        block = tuple(row[ci:di] for row in total.maps[(i, j)].entries[cj:dj])
        maps[(i, j)] = Matrix(total.field, dims[j], dims[i], block)
    return Representation(p, total.field, dims, maps)


def permutation_iso(parts: Sequence[Representation], order: Sequence[int],
                    proset: Optional[Proset] = None,
                    field: Optional[FieldSpec] = None) -> NatTrans:
    """Iso from sum(parts) to sum(parts reordered by order).

    order[k] names which original part lands in output slot k.
    """
    if sorted(order) != list(range(len(parts))):
        raise ValueError(f"order {order} is not a permutation of 0..{len(parts) - 1}")
    src, src_slices = direct_sum(parts, proset=proset, field=field)
    tgt_parts = [parts[k] for k in order]
    tgt, tgt_slices = direct_sum(tgt_parts, proset=src.proset, field=src.field)
    comps = []
    for i in range(src.proset.n):
        ent = [[0] * src.dims[i] for _ in range(tgt.dims[i])]
        for slot, k in enumerate(order):
            (cs, _) = src_slices[k][i]
            (ct, _) = tgt_slices[slot][i]
            d = parts[k].dims[i]
            for r in range(d):
                ent[ct + r][cs + r] = 1
        comps.append(Matrix(src.field, tgt.dims[i], src.dims[i], ent))
    return NatTrans(src, tgt, comps)


def restrict(m: Representation, side: str) -> Representation:
    """Restrict a shoelace-carrier representation to one copy of the base.

    side is "left" for the plain copy, "right" for the primed copy.
    """
    sh = m.proset
    if not isinstance(sh, ShoelaceProset):
        raise ValueError("restrict needs a representation on a shoelace carrier")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    base = sh.base
    off = 0 if side == "left" else base.n
    dims = tuple(m.dims[off + i] for i in range(base.n))
    maps = {(i, j): m.maps[(off + i, off + j)] for (i, j) in base.related_pairs}
    return Representation(base, m.field, dims, maps)


def subrelation_transfer(m: Representation, q: Proset) -> Representation:
    """Move m to a coarser proset q whose relation is contained in m's.

    Keeps the maps of pairs that survive; drops the rest.  Functoriality is
    inherited, since every q-composite is an m-composite.
    """
    p = m.proset
    if q.n != p.n:
        raise ValueError(f"size mismatch: {q.n} vs {p.n}")
    for (i, j) in q.related_pairs:
        if not p.rel[i][j]:
            raise ValueError(
                f"target relation is not a subrelation: ({i}, {j}) missing")
    maps = {(i, j): m.maps[(i, j)] for (i, j) in q.related_pairs}
    return Representation(q, m.field, m.dims, maps)


def invert_iso(t: NatTrans) -> NatTrans:
    """Inverse of a pointwise-invertible nat trans.  Raises if any component
    is singular."""
    comps = tuple(mat_inverse(c) for c in t.components)
    return NatTrans(t.target, t.source, comps)
