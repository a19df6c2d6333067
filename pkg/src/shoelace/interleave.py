"""Interleavings between two representations, and the shoelace pack/unpack
equivalence that stores an interleaving as a single representation of the
doubled proset.
"""

from __future__ import annotations

from typing import Optional

from .exactlin import Matrix, mat_mul, mat_inverse, mat_scale
from .proset import (
    Proset,
    ShoelaceProset,
    Translation,
    compare_translations,
    compose_translations,
    induced_translation,
    shoelace,
)
from .rep import (
    NatTrans,
    Representation,
    precompose,
    restrict,
    unit_whisker,
)


class Interleaving:
    """A translation-indexed pair of comparison maps between M and N.

    phi: M -> N(lam) and psi: N -> M(lam).  The constructor checks the
    structural frame (shared proset and field, nat trans endpoints); the
    triangle equations are checked by validate_interleaving.
    """

    __slots__ = ("m", "n", "lam", "phi", "psi")

    def __init__(self, m: Representation, n: Representation, lam: Translation,
                 phi: NatTrans, psi: NatTrans):
        if lam.base != m.proset:
            raise ValueError("translation is not defined on M's proset")
        if m.proset != n.proset:
            raise ValueError("M and N live on different prosets")
        if m.field != n.field:
            raise ValueError("M and N are over different fields")
        if phi.source != m or phi.target != precompose(n, lam):
            raise ValueError("phi must map M to N after the translation")
        if psi.source != n or psi.target != precompose(m, lam):
            raise ValueError("psi must map N to M after the translation")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "psi", psi)

    def __setattr__(self, name, value):
        raise AttributeError("Interleaving is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interleaving):
            return NotImplemented
        return (self.m == other.m and self.n == other.n and self.lam == other.lam
                and self.phi == other.phi and self.psi == other.psi)

    def __repr__(self) -> str:
        return f"Interleaving(lam={self.lam.mapping})"


class InterleavingMorphism:
    """A pair of nat transes commuting with the comparison maps of two
    interleavings over the same translation."""

    __slots__ = ("source", "target", "gm", "gn")

    def __init__(self, source: Interleaving, target: Interleaving,
                 gm: NatTrans, gn: NatTrans):
        if source.lam != target.lam:
            raise ValueError("interleavings use different translations")
        if gm.source != source.m or gm.target != target.m:
            raise ValueError("gm must map source M to target M")
        if gn.source != source.n or gn.target != target.n:
            raise ValueError("gn must map source N to target N")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "gm", gm)
        object.__setattr__(self, "gn", gn)

    def __setattr__(self, name, value):
        raise AttributeError("InterleavingMorphism is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, InterleavingMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.gm == other.gm and self.gn == other.gn)


def validate_interleaving(x: Interleaving) -> Optional[str]:
    """None if phi and psi are natural and both triangle equations hold.

    Functoriality of M and N themselves is a precondition, checked by
    validate_representation, not here.
    """
    from .rep import validate_nat_trans

    err = validate_nat_trans(x.phi)
    if err is not None:
        return f"phi: {err}"
    err = validate_nat_trans(x.psi)
    if err is not None:
        return f"psi: {err}"
    p = x.m.proset
    lam = x.lam.mapping
    lamlam = compose_translations(x.lam, x.lam).mapping
    for i in range(p.n):
        lhs = mat_mul(x.psi.components[lam[i]], x.phi.components[i])
        if lhs != x.m.maps[(i, lamlam[i])]:
            return (f"triangle for M fails at {p.label(i)}")
        lhs = mat_mul(x.phi.components[lam[i]], x.psi.components[i])
        if lhs != x.n.maps[(i, lamlam[i])]:
            return (f"triangle for N fails at {p.label(i)}")
    return None


def validate_interleaving_morphism(g: InterleavingMorphism) -> Optional[str]:
    from .rep import validate_nat_trans

    err = validate_nat_trans(g.gm)
    if err is not None:
        return f"gm: {err}"
    err = validate_nat_trans(g.gn)
    if err is not None:
        return f"gn: {err}"
    lam = g.source.lam.mapping
    p = g.source.m.proset
    for i in range(p.n):
        lhs = mat_mul(g.target.phi.components[i], g.gm.components[i])
        rhs = mat_mul(g.gn.components[lam[i]], g.source.phi.components[i])
        if lhs != rhs:
            return f"phi square fails at {p.label(i)}"
        lhs = mat_mul(g.target.psi.components[i], g.gn.components[i])
        rhs = mat_mul(g.gm.components[lam[i]], g.source.psi.components[i])
        if lhs != rhs:
            return f"psi square fails at {p.label(i)}"
    return None


def pack(x: Interleaving) -> Representation:
    """Encode an interleaving as one representation of the shoelace carrier.

    The plain copy carries M, the primed copy carries N.  A cross map into
    the primed copy factors phi through N's own maps, and symmetrically:

        V(i <= j') = N(lam(i) <= j) . phi(i)
        V(i' <= j) = M(lam(i) <= j) . psi(i)
    """
    err = validate_interleaving(x)
    if err is not None:
        raise ValueError(f"invalid interleaving: {err}")
    sh = shoelace(x.m.proset, x.lam)
    n0 = x.m.proset.n
    lam = x.lam.mapping
    dims = tuple(x.m.dims) + tuple(x.n.dims)
    maps = {}
    for (a, b) in sh.related_pairs:
        (i, ip) = sh.origin(a)
        (j, jp) = sh.origin(b)
        if not ip and not jp:
            maps[(a, b)] = x.m.maps[(i, j)]
        elif ip and jp:
            maps[(a, b)] = x.n.maps[(i, j)]
        elif not ip:
            maps[(a, b)] = mat_mul(x.n.maps[(lam[i], j)], x.phi.components[i])
        else:
            maps[(a, b)] = mat_mul(x.m.maps[(lam[i], j)], x.psi.components[i])
    return Representation(sh, x.m.field, dims, maps)


def unpack(v: Representation) -> Interleaving:
    """Decode a shoelace-carrier representation back into an interleaving.

    Needs the carrier to relate each plain i to (lam(i))', which holds on a
    full shoelace but can fail on carriers restricted to a subrelation;
    those must be transferred back first.
    """
    sh = v.proset
    if not isinstance(sh, ShoelaceProset):
        raise ValueError("unpack needs a representation on a shoelace carrier")
    n0 = sh.base.n
    lam_map = sh.lam.mapping
    for i in range(n0):
        if not sh.rel[i][n0 + lam_map[i]] or not sh.rel[n0 + i][lam_map[i]]:
            raise ValueError(
                f"carrier does not relate {sh.label(i)} across the lacing; "
                f"transfer to the full shoelace relation before unpacking")
    m = restrict(v, "left")
    n = restrict(v, "right")
    phi = NatTrans(m, precompose(n, sh.lam),
                   tuple(v.maps[(i, n0 + lam_map[i])] for i in range(n0)))
    psi = NatTrans(n, precompose(m, sh.lam),
                   tuple(v.maps[(n0 + i, lam_map[i])] for i in range(n0)))
    return Interleaving(m, n, sh.lam, phi, psi)


def pack_morphism(g: InterleavingMorphism) -> NatTrans:
    """Pack a morphism of interleavings as a nat trans of packed modules."""
    src = pack(g.source)
    tgt = pack(g.target)
    comps = tuple(g.gm.components) + tuple(g.gn.components)
    return NatTrans(src, tgt, comps)


def unpack_morphism(t: NatTrans) -> InterleavingMorphism:
    sh = t.source.proset
    if not isinstance(sh, ShoelaceProset):
        raise ValueError("unpack_morphism needs a shoelace carrier")
    n0 = sh.base.n
    src = unpack(t.source)
    tgt = unpack(t.target)
    gm = NatTrans(src.m, tgt.m, tuple(t.components[:n0]))
    gn = NatTrans(src.n, tgt.n, tuple(t.components[n0:]))
    return InterleavingMorphism(src, tgt, gm, gn)


def square_interleave(a: Interleaving, b: Interleaving) -> Interleaving:
    """Two interleavings of the same pair become one interleaving of their
    packed modules, over the twisted lift of the shared translation.

    Phi uses a on the plain copy and b's return map on the primed copy; Psi
    uses b on the plain copy and a's return map on the primed copy.
    """
    if a.m != b.m or a.n != b.n:
        raise ValueError("both interleavings must compare the same M and N")
    if a.lam != b.lam:
        raise ValueError("both interleavings must use the same translation")
    v = pack(a)
    w = pack(b)
    sh = v.proset
    lt = induced_translation(sh, a.lam, twist=True)
    n0 = a.m.proset.n
    phi = NatTrans(v, precompose(w, lt),
                   tuple(a.phi.components) + tuple(b.psi.components))
    psi = NatTrans(w, precompose(v, lt),
                   tuple(b.phi.components) + tuple(a.psi.components))
    return Interleaving(v, w, lt, phi, psi)


def upgrade_interleaving(x: Interleaving, gamma: Translation) -> Interleaving:
    """Relax an interleaving to a larger translation gamma >= lam by pushing
    each comparison map forward along the target's own maps."""
    if gamma.base != x.lam.base:
        raise ValueError("gamma is not a translation of the same proset")
    if compare_translations(x.lam, gamma) not in ("leq", "equal"):
        raise ValueError("upgrade needs lam <= gamma pointwise")
    p = x.m.proset
    lam = x.lam.mapping
    g = gamma.mapping
    phi = NatTrans(x.m, precompose(x.n, gamma),
                   tuple(mat_mul(x.n.maps[(lam[i], g[i])], x.phi.components[i])
                         for i in range(p.n)))
    psi = NatTrans(x.n, precompose(x.m, gamma),
                   tuple(mat_mul(x.m.maps[(lam[i], g[i])], x.psi.components[i])
                         for i in range(p.n)))
    return Interleaving(x.m, x.n, gamma, phi, psi)


def untwist_square(a: Interleaving, b: Interleaving) -> Interleaving:
    """Square two interleavings, then relax from the twisted lift to the
    plain lift of lam^2, which dominates it."""
    sq = square_interleave(a, b)
    sh = sq.m.proset
    lam2 = compose_translations(a.lam, a.lam)
    plain = induced_translation(sh, lam2, twist=False)
    return upgrade_interleaving(sq, plain)


def transport_interleaving(x: Interleaving, um: NatTrans, un: NatTrans) -> Interleaving:
    """Conjugate an interleaving along isos um: M -> M2, un: N -> N2.

    Components of the isos must be invertible.
    """
    if um.source != x.m:
        raise ValueError("um must start at M")
    if un.source != x.n:
        raise ValueError("un must start at N")
    m2 = um.target
    n2 = un.target
    lam = x.lam.mapping
    p = x.m.proset
    um_inv = tuple(mat_inverse(c) for c in um.components)
    un_inv = tuple(mat_inverse(c) for c in un.components)
    phi = NatTrans(m2, precompose(n2, x.lam),
                   tuple(mat_mul(un.components[lam[i]],
                                 mat_mul(x.phi.components[i], um_inv[i]))
                         for i in range(p.n)))
    psi = NatTrans(n2, precompose(m2, x.lam),
                   tuple(mat_mul(um.components[lam[i]],
                                 mat_mul(x.psi.components[i], un_inv[i]))
                         for i in range(p.n)))
    return Interleaving(m2, n2, x.lam, phi, psi)


def scale_interleaving(x: Interleaving, c: int) -> Interleaving:
    """Scale phi by c and psi by the inverse of c, preserving the triangles."""
    f = x.m.field
    cc = c % f.p
    if cc == 0:
        raise ValueError("scale factor must be nonzero in the field")
    inv = f.inv(cc)
    phi = NatTrans(x.phi.source, x.phi.target,
                   tuple(mat_scale(cc, t) for t in x.phi.components))
    psi = NatTrans(x.psi.source, x.psi.target,
                   tuple(mat_scale(inv, t) for t in x.psi.components))
    return Interleaving(x.m, x.n, x.lam, phi, psi)
