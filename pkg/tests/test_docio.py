import json
from fractions import Fraction

import pytest

from shoelace.docio import (
    KINDS,
    DocumentFormatError,
    DocumentValidationError,
    document_dict,
    load_document,
    save_document,
)
from shoelace.exactlin import FieldSpec, Matrix
from shoelace.interleave import Interleaving, validate_interleaving
from shoelace.proset import (
    HeightFunction,
    Translation,
    chain,
    proset_from_pairs,
)
from shoelace.rep import chain_representation, unit_whisker, zero_nat, precompose
from shoelace.zed import (
    Barcode,
    Interval,
    Matching,
    NEG_INF,
    POS_INF,
    Window,
    canonical_pair,
    interval_to_module,
    lambda_eps,
    matching_to_rep,
    window_chain,
)

F2 = FieldSpec(2)
F5 = FieldSpec(5)


def _examples():
    """One representative object per document kind."""
    w = Window(-1, 4)
    m = interval_to_module(Interval(0, 2), w, F5)
    n = interval_to_module(Interval(1, 3), w, F5)
    f, g = canonical_pair(Interval(0, 2), Interval(1, 3), 1, w, F5)
    x = Interleaving(m, n, lambda_eps(w, 1), f, g)
    i02, i13, i55 = Interval(0, 2), Interval(1, 3), Interval(5, 5)
    s = Matching(Barcode([i02, i55]), Barcode([i13]), [(i02, i13)], 1)
    wm = chain_representation(
        window_chain(Window(0, 3))[0], F5, (1, 0, 2, 2),
        [Matrix(F5, 0, 1, []),
         Matrix(F5, 2, 0, [[], []]),
         Matrix(F5, 2, 2, [[1, 2], [0, 3]])])
    return {
        "proset": proset_from_pairs(3, [(0, 1), (1, 0)], labels=("a", "b", "c")),
        "translation": Translation(chain(3), (1, 2, 2)),
        "height": (chain(3), HeightFunction([0, Fraction(1, 2), 7])),
        "representation": m,
        "nattrans": unit_whisker(m, lambda_eps(w, 1)),
        "interleaving": x,
        "barcode": Barcode([Interval(0, 1), Interval(0, 1),
                            Interval(NEG_INF, 3), Interval(2, POS_INF)]),
        "matching": s,
        "decomposed_rep": matching_to_rep(s, Window(-2, 7)),
        "window_module": (Window(0, 3), wm),
    }


def test_every_kind_round_trips():
    examples = _examples()
    assert set(examples) == set(KINDS)
    for kind, obj in examples.items():
        text = save_document(kind, obj)
        got_kind, loaded = load_document(text)
        assert got_kind == kind
        if kind in ("height", "window_module"):
            assert tuple(loaded) == tuple(obj)
        else:
            assert loaded == obj


def test_output_is_byte_stable():
    for kind, obj in _examples().items():
        text = save_document(kind, obj)
        _, loaded = load_document(text)
        assert save_document(kind, loaded) == text
        assert text.endswith("\n")
        assert json.loads(text)["version"] == "1"


def test_infinite_matching_round_trips():
    inf1, inf0 = Interval(1, POS_INF), Interval(0, POS_INF)
    s = Matching(Barcode([inf1]), Barcode([inf0]), [(inf1, inf0)], 1)
    text = save_document("matching", s)
    assert '"+inf"' in text
    _, loaded = load_document(text)
    assert loaded == s


def test_envelope_errors():
    with pytest.raises(DocumentFormatError, match="not valid JSON"):
        load_document("{nope")
    with pytest.raises(DocumentFormatError, match="JSON object"):
        load_document("[1, 2]")
    with pytest.raises(DocumentFormatError, match="unknown document kind"):
        load_document('{"kind": "cheese", "version": "1", "payload": {}}')
    with pytest.raises(DocumentFormatError, match="unsupported version"):
        load_document('{"kind": "proset", "version": "2", "payload": {}}')
    with pytest.raises(DocumentFormatError, match="missing its payload"):
        load_document('{"kind": "proset", "version": "1"}')
    with pytest.raises(DocumentFormatError, match="unknown document kind"):
        document_dict("cheese", None)


def _doc(kind, payload):
    return json.dumps({"kind": kind, "version": "1", "payload": payload})


def test_proset_payload_errors():
    with pytest.raises(DocumentFormatError, match="missing 'n'"):
        load_document(_doc("proset", {"rel": []}))
    with pytest.raises(DocumentFormatError, match="bad proset payload"):
        load_document(_doc("proset", {"n": 2, "rel": [[1, 0]], "labels": None}))
    not_transitive = {"n": 3, "labels": None,
                      "rel": [[1, 1, 0], [0, 1, 1], [0, 0, 1]]}
    with pytest.raises(DocumentValidationError, match="invalid proset"):
        load_document(_doc("proset", not_transitive))
    with pytest.raises(DocumentFormatError, match="must be an integer"):
        load_document(_doc("proset", {"n": True, "rel": [[1]]}))


def test_translation_payload_errors():
    base = {"n": 2, "labels": None, "rel": [[1, 1], [0, 1]]}
    with pytest.raises(DocumentFormatError, match="bad translation payload"):
        load_document(_doc("translation", {"base": base, "mapping": [0]}))
    with pytest.raises(DocumentValidationError, match="invalid translation"):
        load_document(_doc("translation", {"base": base, "mapping": [0, 0]}))


def test_height_payload_errors():
    base = {"n": 2, "labels": None, "rel": [[1, 1], [0, 1]]}
    with pytest.raises(DocumentFormatError, match="bad height values"):
        load_document(_doc("height", {"proset": base, "values": ["1", "x"]}))
    with pytest.raises(DocumentValidationError, match="invalid height"):
        load_document(_doc("height", {"proset": base, "values": ["1", "0"]}))


def test_representation_payload_errors():
    good = document_dict("representation",
                         chain_representation(chain(3), F2, (1, 1, 1),
                                              [Matrix(F2, 1, 1, [[1]])] * 2))
    broken = json.loads(json.dumps(good))
    for item in broken["payload"]["maps"]:
        if item["src"] == 0 and item["dst"] == 2:
            item["entries"] = [[0]]
    with pytest.raises(DocumentValidationError, match="invalid representation"):
        load_document(json.dumps(broken))
    bad_shape = json.loads(json.dumps(good))
    bad_shape["payload"]["maps"][0]["entries"] = [[1, 1]]
    with pytest.raises(DocumentFormatError, match="bad matrix"):
        load_document(json.dumps(bad_shape))
    out_of_range = json.loads(json.dumps(good))
    out_of_range["payload"]["maps"][0]["dst"] = 9
    with pytest.raises(DocumentFormatError, match="out of range"):
        load_document(json.dumps(out_of_range))
    not_prime = json.loads(json.dumps(good))
    not_prime["payload"]["prime"] = 4
    with pytest.raises(DocumentValidationError):
        load_document(json.dumps(not_prime))
    missing_pair = json.loads(json.dumps(good))
    missing_pair["payload"]["maps"] = missing_pair["payload"]["maps"][:-1]
    with pytest.raises(DocumentValidationError, match="inconsistent"):
        load_document(json.dumps(missing_pair))


def test_nattrans_payload_errors():
    m = chain_representation(chain(2), F5, (1, 1), [Matrix(F5, 1, 1, [[1]])])
    good = document_dict("nattrans", zero_nat(m, m))
    wrong_prime = json.loads(json.dumps(good))
    wrong_prime["payload"]["prime"] = 3
    with pytest.raises(DocumentValidationError, match="differs from its endpoints"):
        load_document(json.dumps(wrong_prime))
    short = json.loads(json.dumps(good))
    short["payload"]["components"] = short["payload"]["components"][:1]
    with pytest.raises(DocumentFormatError, match="expected 2 components"):
        load_document(json.dumps(short))
    unnatural = json.loads(json.dumps(good))
    unnatural["payload"]["components"] = [[[1]], [[2]]]
    with pytest.raises(DocumentValidationError, match="invalid nattrans"):
        load_document(json.dumps(unnatural))


def test_interleaving_payload_errors():
    w = Window(-1, 4)
    m = interval_to_module(Interval(0, 2), w)
    n = interval_to_module(Interval(1, 3), w)
    lam = lambda_eps(w, 1)
    invalid = Interleaving(m, n, lam,
                           zero_nat(m, precompose(n, lam)),
                           zero_nat(n, precompose(m, lam)))
    assert validate_interleaving(invalid) is not None
    text = save_document("interleaving", invalid)
    with pytest.raises(DocumentValidationError, match="invalid interleaving"):
        load_document(text)
    f, g = canonical_pair(Interval(0, 2), Interval(1, 3), 1, w)
    good = document_dict("interleaving", Interleaving(m, n, lam, f, g))
    mismatched = json.loads(json.dumps(good))
    mismatched["payload"]["translation"]["base"] = {
        "n": 2, "labels": None, "rel": [[1, 1], [0, 1]]}
    mismatched["payload"]["translation"]["mapping"] = [1, 1]
    with pytest.raises(DocumentValidationError, match="translation's proset"):
        load_document(json.dumps(mismatched))
    short = json.loads(json.dumps(good))
    short["payload"]["phi"] = short["payload"]["phi"][:2]
    with pytest.raises(DocumentFormatError, match="number of interleaving"):
        load_document(json.dumps(short))


def test_barcode_payload_errors():
    with pytest.raises(DocumentValidationError, match="multiplicity"):
        load_document(_doc("barcode",
                           {"intervals": [{"lo": 0, "hi": 1, "count": 0}]}))
    with pytest.raises(DocumentValidationError, match="bad interval"):
        load_document(_doc("barcode",
                           {"intervals": [{"lo": 3, "hi": 0, "count": 1}]}))
    with pytest.raises(DocumentFormatError, match="missing 'count'"):
        load_document(_doc("barcode", {"intervals": [{"lo": 0, "hi": 1}]}))


def test_matching_payload_errors():
    payload = {
        "epsilon": 1,
        "source": {"intervals": []},
        "target": {"intervals": []},
        "pairs": [{"left": {"lo": 0, "hi": 1}, "right": {"lo": 0, "hi": 1}}],
    }
    with pytest.raises(DocumentValidationError, match="invalid matching"):
        load_document(_doc("matching", payload))
    bad_eps = dict(payload, epsilon=True, pairs=[])
    with pytest.raises(DocumentFormatError, match="must be an integer"):
        load_document(_doc("matching", bad_eps))


def test_decomposed_payload_errors():
    payload = {
        "prime": 2,
        "window": {"lo": -4, "hi": 9},
        "epsilon": 1,
        "summands": [{"left": {"lo": 0, "hi": 5}, "right": None}],
    }
    with pytest.raises(DocumentValidationError, match="invalid decomposed_rep"):
        load_document(_doc("decomposed_rep", payload))
    with pytest.raises(DocumentFormatError, match="missing 'right'"):
        load_document(_doc("decomposed_rep", dict(payload, summands=[{
            "left": None}])))


def test_window_module_payload_errors():
    payload = {
        "prime": 2,
        "window": {"lo": 0, "hi": 2},
        "dims": [1, 1],
        "steps": [[[1]], [[1]]],
    }
    with pytest.raises(DocumentValidationError, match="expected 3 dims"):
        load_document(_doc("window_module", payload))
    wrong_steps = dict(payload, dims=[1, 1, 1], steps=[[[1]]])
    with pytest.raises(DocumentFormatError, match="step matrices"):
        load_document(_doc("window_module", wrong_steps))
    bad_window = dict(payload, window={"lo": 2, "hi": 0})
    with pytest.raises(DocumentValidationError, match="empty window"):
        load_document(json.dumps(
            {"kind": "window_module", "version": "1", "payload": bad_window}))
