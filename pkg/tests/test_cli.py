import json

import pytest

from degentensor.canonical import canonical, pad_z
from degentensor.cli import EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED, EXIT_ZERO, main
from degentensor.document import (DocumentError, TensorDocument, corpus_names, corpus_path,
                                  load_corpus, parse_document, serialize_document)
from degentensor.tensor_core import Tensor3


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write_tensor(tmp_path, a: Tensor3, name="t.json"):
    path = tmp_path / name
    path.write_text(serialize_document(TensorDocument(a)))
    return path


def test_analyze_example_3_11_certified(capsys):
    code, out, _ = run(capsys, "analyze", corpus_path("example_3_11"))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["degenerate"] == "certified"
    assert report["degeneracy"]["certificate"] is not None


def test_analyze_type_iv(capsys):
    code, out, _ = run(capsys, "analyze", corpus_path("type_IV_222"), "--json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert (report["trk"], report["det_zero"]) == (2, False)
    assert list(report)[:3] == ["tool", "version", "format"]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", corpus_path("type_VI_223"), "--text")
    assert code == EXIT_OK
    assert "canonical_type: \"VI\"" in out


def test_analyze_hint_flag_merges(capsys):
    code, out, _ = run(capsys, "analyze", corpus_path("example_3_10"), "--hint", "z:0,1,1,0")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["degenerate"] == "undetermined"
    assert len(report["degeneracy"]["notes"]) == 2


def test_malformed_shape(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"shape": [2, 2], "entries": []}')
    code, _, err = run(capsys, "analyze", path)
    assert code == EXIT_INPUT and "shape" in err


def test_parse_error_positions(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"shape": [2,2,2],\n "entries": [[[1,0],[0,0]],[[0,0],[0,1]]}')
    code, _, err = run(capsys, "analyze", path)
    assert code == EXIT_INPUT and "line 2 column" in err
    with pytest.raises(DocumentError) as info:
        parse_document('{"shape": [1,1,2], "entries": [[[1, 0.5]]]}')
    assert info.value.position == "entries[0][0][1]"
    with pytest.raises(DocumentError):
        parse_document('{"shape": [1,1,1], "entries": [[[1]]], "extra": 0}')


def test_missing_file(capsys):
    code, _, _ = run(capsys, "analyze", "/nonexistent/tensor.json")
    assert code == EXIT_INPUT


def test_zero_tensor(tmp_path, capsys):
    path = write_tensor(tmp_path, Tensor3.zeros(2, 2, 3))
    assert run(capsys, "analyze", path)[0] == EXIT_ZERO
    assert run(capsys, "scheme", path, "--axis", "x", "--point", "1,0")[0] == EXIT_ZERO


def test_scheme_examples(capsys):
    code, out, _ = run(capsys, "scheme", corpus_path("example_3_10"),
                       "--axis", "z", "--point", "1,1,0,-1")
    d = json.loads(out)
    assert code == EXIT_OK and (d["bidegenerate"], d["rank_at"]) == (True, 1)
    code, out, _ = run(capsys, "scheme", corpus_path("example_3_11"),
                       "--axis", "z", "--point", "0,1,1,0")
    d = json.loads(out)
    assert code == EXIT_OK and (d["degenerate"], d["bidegenerate"]) == (True, False)
    assert list(d) == ["axis", "point", "on_scheme", "rank_at", "jacobian_rank",
                       "expected_codim", "degenerate", "bidegenerate"]


@pytest.mark.parametrize("point", ["0,0,0,0", "1,0", "a,b,c,d", "1/0,1,1,1"])
def test_scheme_bad_point(capsys, point):
    code, _, _ = run(capsys, "scheme", corpus_path("example_3_11"), "--axis", "z", "--point", point)
    assert code == EXIT_INPUT


def test_hyperdet(tmp_path, capsys):
    assert run(capsys, "hyperdet", corpus_path("type_IV_222"))[:2] == (EXIT_OK, '"1"\n')
    assert run(capsys, "hyperdet", corpus_path("type_III_222"))[:2] == (EXIT_OK, '"0"\n')
    path = write_tensor(tmp_path, Tensor3.from_entries((3, 3, 5), {(1, 1, 1): 1}))
    code, _, err = run(capsys, "hyperdet", path)
    assert code == EXIT_UNSUPPORTED and "r <= p+q-1" in err
    assert run(capsys, "hyperdet", write_tensor(tmp_path, Tensor3.zeros(2, 2, 2)))[0] == EXIT_ZERO


def test_hyperdet_2qq_and_permuted(tmp_path, capsys):
    a = Tensor3.from_entries((2, 3, 3), {(1, 1, 1): 1, (1, 2, 2): 1, (2, 2, 2): 1, (2, 3, 3): 1})
    code, out, _ = run(capsys, "hyperdet", write_tensor(tmp_path, a.permute((1, 2, 0))))
    assert code == EXIT_OK and json.loads(out) != "0"


def test_corpus_round_trip():
    names = corpus_names()
    assert len(names) == 20
    for name in names:
        text = corpus_path(name).read_text()
        doc = parse_document(text)
        again = parse_document(serialize_document(doc))
        assert again == doc
        assert doc.provenance


def test_rational_entries_round_trip():
    a = Tensor3.from_entries((1, 2, 2), {(1, 1, 1): "3/4", (1, 2, 2): -2})
    doc = parse_document(serialize_document(TensorDocument(a)))
    assert doc.tensor == a
    assert '"3/4"' in serialize_document(TensorDocument(a))


def test_corpus_matches_constructors():
    assert load_corpus("type_VI_223").tensor == canonical("223", "VI")
    assert load_corpus("concise_225").tensor == pad_z(canonical("224", "concise"), 5)
