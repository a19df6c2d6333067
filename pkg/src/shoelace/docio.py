"""JSON interchange documents.

Every file is an envelope {"kind", "version", "payload"}.  Loading validates
the payload with the owning module's validator, so a document that parses
but violates the mathematical rules raises DocumentValidationError, while a
structurally malformed file raises DocumentFormatError.  Emission uses a
fixed key order and canonical array orders, so output is byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .exactlin import FieldSpec, Matrix
from .proset import (
    HeightFunction,
    Proset,
    Translation,
    validate_height,
    validate_proset,
    validate_translation,
)
from .rep import (
    NatTrans,
    Representation,
    chain_representation,
    precompose,
    validate_nat_trans,
    validate_representation,
)
from .interleave import Interleaving, validate_interleaving
from .zed import (
    Barcode,
    DecomposedShoelaceRep,
    Interval,
    Matching,
    Window,
    validate_decomposed,
    validate_matching,
)

VERSION = "1"

KINDS = (
    "proset",
    "translation",
    "height",
    "representation",
    "nattrans",
    "interleaving",
    "barcode",
    "matching",
    "decomposed_rep",
    "window_module",
)


class DocumentFormatError(Exception):
    """Not a recognizable document: bad JSON, envelope, or payload schema."""


class DocumentValidationError(Exception):
    """Parsed fine but the payload violates the owning module's rules."""


def _need(payload: dict, key: str, kind: str):
    if not isinstance(payload, dict) or key not in payload:
        raise DocumentFormatError(f"{kind} payload is missing '{key}'")
    return payload[key]


def _as_int(x, what: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise DocumentFormatError(f"{what} must be an integer, got {x!r}")
    return x


def _validated(report: Optional[str], kind: str):
    if report is not None:
        raise DocumentValidationError(f"invalid {kind}: {report}")


# per-kind payload builders


def _proset_payload(p: Proset) -> dict:
    return {
        "n": p.n,
        "labels": list(p.labels) if p.labels is not None else None,
        "rel": [[1 if x else 0 for x in row] for row in p.rel],
    }


def _load_proset(payload: dict) -> Proset:
    n = _as_int(_need(payload, "n", "proset"), "n")
    rel = _need(payload, "rel", "proset")
    labels = payload.get("labels")
    try:
        p = Proset(n, rel, labels)
    except (ValueError, TypeError) as e:
        raise DocumentFormatError(f"bad proset payload: {e}") from None
    _validated(validate_proset(p), "proset")
    return p


def _translation_payload(t: Translation) -> dict:
    return {"base": _proset_payload(t.base), "mapping": list(t.mapping)}


def _load_translation(payload: dict) -> Translation:
    base = _load_proset(_need(payload, "base", "translation"))
    mapping = _need(payload, "mapping", "translation")
    try:
        t = Translation(base, mapping)
    except (ValueError, TypeError) as e:
        raise DocumentFormatError(f"bad translation payload: {e}") from None
    _validated(validate_translation(t), "translation")
    return t


def _height_payload(p: Proset, h: HeightFunction) -> dict:
    return {"proset": _proset_payload(p),
            "values": [str(v) for v in h.values]}


def _load_height(payload: dict) -> tuple[Proset, HeightFunction]:
    p = _load_proset(_need(payload, "proset", "height"))
    raw = _need(payload, "values", "height")
    try:
        h = HeightFunction(Fraction(v) for v in raw)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise DocumentFormatError(f"bad height values: {e}") from None
    _validated(validate_height(p, h), "height")
    return p, h


def _matrix_entries(m: Matrix) -> list:
    return [list(row) for row in m.entries]


def _load_matrix(field: FieldSpec, rows: int, cols: int, entries, what: str) -> Matrix:
    try:
        return Matrix(field, rows, cols, entries)
    except (ValueError, TypeError) as e:
        raise DocumentFormatError(f"bad matrix for {what}: {e}") from None


def _rep_payload(m: Representation) -> dict:
    return {
        "prime": m.field.p,
        "proset": _proset_payload(m.proset),
        "dims": list(m.dims),
        "maps": [
            {"src": i, "dst": j, "entries": _matrix_entries(m.maps[(i, j)])}
            for (i, j) in sorted(m.maps.keys())
        ],
    }


def _load_field(payload: dict, kind: str) -> FieldSpec:
    p = _as_int(_need(payload, "prime", kind), "prime")
    try:
        return FieldSpec(p)
    except ValueError as e:
        raise DocumentValidationError(str(e)) from None


def _load_rep(payload: dict, validate: bool = True) -> Representation:
    field = _load_field(payload, "representation")
    proset = _load_proset(_need(payload, "proset", "representation"))
    dims = _need(payload, "dims", "representation")
    raw_maps = _need(payload, "maps", "representation")
    dims = [_as_int(d, "dim") for d in dims]
    maps = {}
    for item in raw_maps:
        i = _as_int(_need(item, "src", "representation map"), "src")
        j = _as_int(_need(item, "dst", "representation map"), "dst")
        if not (0 <= i < proset.n and 0 <= j < proset.n):
            raise DocumentFormatError(f"map ({i}, {j}) out of range")
        maps[(i, j)] = _load_matrix(field, dims[j], dims[i],
                                    _need(item, "entries", "representation map"),
                                    f"map ({i}, {j})")
    try:
        m = Representation(proset, field, dims, maps)
    except (ValueError, TypeError) as e:
        raise DocumentValidationError(f"inconsistent representation: {e}") from None
    if validate:
        _validated(validate_representation(m), "representation")
    return m


def _nattrans_payload(t: NatTrans) -> dict:
    return {
        "prime": t.source.field.p,
        "source": _rep_payload(t.source),
        "target": _rep_payload(t.target),
        "components": [_matrix_entries(c) for c in t.components],
    }


def _load_nattrans(payload: dict) -> NatTrans:
    field = _load_field(payload, "nattrans")
    source = _load_rep(_need(payload, "source", "nattrans"))
    target = _load_rep(_need(payload, "target", "nattrans"))
    if source.field != field or target.field != field:
        raise DocumentValidationError("nattrans prime differs from its endpoints")
    raw = _need(payload, "components", "nattrans")
    if len(raw) != source.proset.n:
        raise DocumentFormatError(
            f"expected {source.proset.n} components, got {len(raw)}")
    comps = [
        _load_matrix(field, target.dims[i], source.dims[i], raw[i],
                     f"component {i}")
        for i in range(source.proset.n)
    ]
    try:
        t = NatTrans(source, target, comps)
    except (ValueError, TypeError) as e:
        raise DocumentValidationError(f"inconsistent nattrans: {e}") from None
    _validated(validate_nat_trans(t), "nattrans")
    return t


def _interleaving_payload(x: Interleaving) -> dict:
    return {
        "prime": x.m.field.p,
        "translation": _translation_payload(x.lam),
        "m": _rep_payload(x.m),
        "n": _rep_payload(x.n),
        "phi": [_matrix_entries(c) for c in x.phi.components],
        "psi": [_matrix_entries(c) for c in x.psi.components],
    }


def _load_interleaving(payload: dict) -> Interleaving:
    field = _load_field(payload, "interleaving")
    lam = _load_translation(_need(payload, "translation", "interleaving"))
    m = _load_rep(_need(payload, "m", "interleaving"))
    n = _load_rep(_need(payload, "n", "interleaving"))
    if m.field != field or n.field != field:
        raise DocumentValidationError("interleaving prime differs from its modules")
    if m.proset != lam.base or n.proset != lam.base:
        raise DocumentValidationError(
            "interleaving modules do not live on the translation's proset")
    nl = precompose(n, lam)
    ml = precompose(m, lam)
    raw_phi = _need(payload, "phi", "interleaving")
    raw_psi = _need(payload, "psi", "interleaving")
    if len(raw_phi) != lam.base.n or len(raw_psi) != lam.base.n:
        raise DocumentFormatError("wrong number of interleaving components")
    phi_comps = [_load_matrix(field, nl.dims[i], m.dims[i], raw_phi[i], f"phi {i}")
                 for i in range(lam.base.n)]
    psi_comps = [_load_matrix(field, ml.dims[i], n.dims[i], raw_psi[i], f"psi {i}")
                 for i in range(lam.base.n)]
    try:
        x = Interleaving(m, n, lam,
                         NatTrans(m, nl, phi_comps), NatTrans(n, ml, psi_comps))
    except (ValueError, TypeError) as e:
        raise DocumentValidationError(f"inconsistent interleaving: {e}") from None
    _validated(validate_interleaving(x), "interleaving")
    return x


def _interval_payload(i: Interval) -> dict:
    return {"lo": i.lo.to_json(), "hi": i.hi.to_json()}


def _load_interval(raw, what: str) -> Interval:
    lo = _need(raw, "lo", what)
    hi = _need(raw, "hi", what)
    try:
        return Interval(lo, hi)
    except (ValueError, TypeError) as e:
        raise DocumentValidationError(f"bad interval in {what}: {e}") from None


def _barcode_payload(b: Barcode) -> dict:
    items = []
    for bar, count in sorted(b.counts().items(), key=lambda kv: kv[0].sort_key):
        items.append({"lo": bar.lo.to_json(), "hi": bar.hi.to_json(),
                      "count": count})
    return {"intervals": items}


def _load_barcode(payload: dict) -> Barcode:
    raw = _need(payload, "intervals", "barcode")
    bars = []
    for item in raw:
        count = _as_int(_need(item, "count", "barcode interval"), "count")
        if count < 1:
            raise DocumentValidationError(f"barcode multiplicity {count} < 1")
        bars.extend([_load_interval(item, "barcode")] * count)
    return Barcode(bars)


def _matching_payload(s: Matching) -> dict:
    return {
        "epsilon": s.epsilon,
        "source": _barcode_payload(s.source),
        "target": _barcode_payload(s.target),
        "pairs": [
            {"left": _interval_payload(a), "right": _interval_payload(b)}
            for (a, b) in s.pairs
        ],
    }


def _load_matching(payload: dict) -> Matching:
    eps = _as_int(_need(payload, "epsilon", "matching"), "epsilon")
    source = _load_barcode(_need(payload, "source", "matching"))
    target = _load_barcode(_need(payload, "target", "matching"))
    pairs = []
    for item in _need(payload, "pairs", "matching"):
        pairs.append((_load_interval(_need(item, "left", "matching pair"),
                                     "matching pair"),
                      _load_interval(_need(item, "right", "matching pair"),
                                     "matching pair")))
    try:
        s = Matching(source, target, pairs, eps)
    except (ValueError, TypeError) as e:
        raise DocumentValidationError(f"inconsistent matching: {e}") from None
    _validated(validate_matching(s), "matching")
    return s


def _decomposed_payload(l: DecomposedShoelaceRep) -> dict:
    return {
        "prime": l.field.p,
        "window": {"lo": l.window.lo, "hi": l.window.hi},
        "epsilon": l.epsilon,
        "summands": [
            {"left": _interval_payload(a) if a is not None else None,
             "right": _interval_payload(b) if b is not None else None}
            for (a, b) in l.summands
        ],
    }


def _load_window(raw, what: str) -> Window:
    lo = _as_int(_need(raw, "lo", what), "window lo")
    hi = _as_int(_need(raw, "hi", what), "window hi")
    try:
        return Window(lo, hi)
    except ValueError as e:
        raise DocumentValidationError(str(e)) from None


def _load_decomposed(payload: dict) -> DecomposedShoelaceRep:
    field = _load_field(payload, "decomposed_rep")
    w = _load_window(_need(payload, "window", "decomposed_rep"), "decomposed_rep")
    eps = _as_int(_need(payload, "epsilon", "decomposed_rep"), "epsilon")
    summands = []
    for item in _need(payload, "summands", "decomposed_rep"):
        left = _need(item, "left", "summand")
        right = _need(item, "right", "summand")
        summands.append((
            _load_interval(left, "summand") if left is not None else None,
            _load_interval(right, "summand") if right is not None else None,
        ))
    l = DecomposedShoelaceRep(w, eps, field, summands)
    _validated(validate_decomposed(l), "decomposed_rep")
    return l


def _window_module_payload(w: Window, m: Representation) -> dict:
    steps = []
    for i in range(m.proset.n - 1):
        steps.append(_matrix_entries(m.maps[(i, i + 1)]))
    return {
        "prime": m.field.p,
        "window": {"lo": w.lo, "hi": w.hi},
        "dims": list(m.dims),
        "steps": steps,
    }


def _load_window_module(payload: dict) -> tuple[Window, Representation]:
    from .zed import window_chain

    field = _load_field(payload, "window_module")
    w = _load_window(_need(payload, "window", "window_module"), "window_module")
    dims = [_as_int(d, "dim") for d in _need(payload, "dims", "window_module")]
    raw_steps = _need(payload, "steps", "window_module")
    if len(dims) != w.size:
        raise DocumentValidationError(
            f"expected {w.size} dims for window [{w.lo}, {w.hi}], got {len(dims)}")
    if len(raw_steps) != w.size - 1:
        raise DocumentFormatError(
            f"expected {w.size - 1} step matrices, got {len(raw_steps)}")
    steps = [
        _load_matrix(field, dims[i + 1], dims[i], raw_steps[i], f"step {i}")
        for i in range(w.size - 1)
    ]
    p, _ = window_chain(w)
    try:
        m = chain_representation(p, field, dims, steps)
    except (ValueError, TypeError) as e:
        raise DocumentValidationError(f"inconsistent window module: {e}") from None
    _validated(validate_representation(m), "window_module")
    return w, m


_SAVERS = {
    "proset": lambda obj: _proset_payload(obj),
    "translation": lambda obj: _translation_payload(obj),
    "height": lambda obj: _height_payload(*obj),
    "representation": lambda obj: _rep_payload(obj),
    "nattrans": lambda obj: _nattrans_payload(obj),
    "interleaving": lambda obj: _interleaving_payload(obj),
    "barcode": lambda obj: _barcode_payload(obj),
    "matching": lambda obj: _matching_payload(obj),
    "decomposed_rep": lambda obj: _decomposed_payload(obj),
    "window_module": lambda obj: _window_module_payload(*obj),
}

_LOADERS = {
    "proset": _load_proset,
    "translation": _load_translation,
    "height": _load_height,
    "representation": _load_rep,
    "nattrans": _load_nattrans,
    "interleaving": _load_interleaving,
    "barcode": _load_barcode,
    "matching": _load_matching,
    "decomposed_rep": _load_decomposed,
    "window_module": _load_window_module,
}


def document_dict(kind: str, obj: Any) -> dict:
    if kind not in KINDS:
        raise DocumentFormatError(f"unknown document kind {kind!r}")
    return {"kind": kind, "version": VERSION, "payload": _SAVERS[kind](obj)}


def save_document(kind: str, obj: Any) -> str:
    return json.dumps(document_dict(kind, obj), indent=2) + "\n"


def load_document(text: str) -> tuple[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentFormatError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise DocumentFormatError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentFormatError(f"unknown document kind {kind!r}")
    if doc.get("version") != VERSION:
        raise DocumentFormatError(
            f"unsupported version {doc.get('version')!r}, expected {VERSION!r}")
    if "payload" not in doc:
        raise DocumentFormatError("document is missing its payload")
    return kind, _LOADERS[kind](doc["payload"])
