"""Exact persistence-module interleavings over finite preordered sets.

The core objects are representations of finite prosets with matrices over a
prime field, translations (inflationary monotone self-maps), interleavings
between two representations relative to a translation, and the shoelace
construction that encodes an interleaving as a single representation of a
doubled proset.  A specialization layer handles integer window modules,
barcodes, epsilon-matchings, and the matching <-> decomposed-representation
correspondence.
"""

from .exactlin import FieldSpec, Matrix
from .proset import (
    Proset,
    ShoelaceProset,
    Translation,
    HeightFunction,
    chain,
    proset_from_pairs,
    shoelace,
    iso_pairs,
    induced_translation,
)
from .rep import Representation, NatTrans
from .interleave import Interleaving, InterleavingMorphism, pack, unpack
from .zed import Ext, NEG_INF, POS_INF, Interval, Barcode, Window, Matching

__all__ = [
    "FieldSpec",
    "Matrix",
    "Proset",
    "ShoelaceProset",
    "Translation",
    "HeightFunction",
    "chain",
    "proset_from_pairs",
    "shoelace",
    "iso_pairs",
    "induced_translation",
    "Representation",
    "NatTrans",
    "Interleaving",
    "InterleavingMorphism",
    "pack",
    "unpack",
    "Ext",
    "NEG_INF",
    "POS_INF",
    "Interval",
    "Barcode",
    "Window",
    "Matching",
]
