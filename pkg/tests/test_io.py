"""Dataset and relation file round-trips and validation on load."""

import json

import pytest

from gifss.errors import ContainmentError, DatasetError, DatasetParseError
from gifss.io import (
    gifss_from_dict,
    gifss_to_dict,
    load_gifss,
    load_relation,
    relation_to_dict,
    save_gifss,
    save_relation,
)
from gifss.norms import PRODUCT
from gifss.relations import maximal_relation
from gifss.sets import equals


def minimal_doc():
    return {
        "universe": ["x1", "x2"],
        "parameters": [
            {
                "name": "p",
                "preference": "0.5",
                "values": {
                    "x1": {"mu": "0.3", "nu": "0.4"},
                    "x2": {"mu": "0.7", "nu": "0.2"},
                },
            }
        ],
    }


def test_shipped_partner_dataset(partner):
    assert partner.universe.elements == ("b1", "b2", "b3", "b4", "b5", "b6")
    assert partner.params == ("e3", "e4", "e7", "e9")
    prefs = [str(partner.preference(p)) for p in partner.params]
    assert prefs == ["0.1", "0.5", "0.4", "0.3"]


def test_dataset_round_trip(tmp_path, partner, student_f, student_g):
    for g in (partner, student_f, student_g):
        path = tmp_path / "out.json"
        save_gifss(g, path)
        assert equals(load_gifss(path), g)


def test_dict_round_trip(partner):
    assert equals(gifss_from_dict(gifss_to_dict(partner)), partner)


def test_missing_file_is_parse_error():
    with pytest.raises(DatasetParseError):
        load_gifss("/no/such/file.json")


def test_malformed_json_is_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(DatasetParseError):
        load_gifss(path)


def test_validity_violation_names_the_cell():
    doc = minimal_doc()
    doc["parameters"][0]["values"]["x2"] = {"mu": "0.7", "nu": "0.4"}
    with pytest.raises(DatasetError) as exc:
        gifss_from_dict(doc)
    assert "'p'" in str(exc.value)
    assert "'x2'" in str(exc.value)


def test_allow_invalid_skips_validity_only():
    from gifss.degrees import Degree

    doc = minimal_doc()
    doc["parameters"][0]["values"]["x2"] = {"mu": "0.7", "nu": "0.4"}
    g = gifss_from_dict(doc, allow_invalid=True)
    v = g.ifset("p").value("x2")
    assert (v.mu, v.nu) == (Degree("0.7"), Degree("0.4"))


def test_binary_floats_rejected_in_files():
    doc = minimal_doc()
    doc["parameters"][0]["preference"] = 0.5
    with pytest.raises(DatasetError) as exc:
        gifss_from_dict(doc)
    assert "float" in str(exc.value)


def test_empty_universe_rejected():
    doc = minimal_doc()
    doc["universe"] = []
    doc["parameters"] = []
    with pytest.raises(DatasetError):
        gifss_from_dict(doc)


def test_duplicate_parameter_rejected():
    doc = minimal_doc()
    doc["parameters"].append(doc["parameters"][0])
    with pytest.raises(DatasetError):
        gifss_from_dict(doc)


def test_value_for_unknown_element_rejected():
    doc = minimal_doc()
    doc["parameters"][0]["values"]["x9"] = {"mu": "0", "nu": "0"}
    with pytest.raises(DatasetError) as exc:
        gifss_from_dict(doc)
    assert "x9" in str(exc.value)


def test_preference_out_of_range_rejected():
    doc = minimal_doc()
    doc["parameters"][0]["preference"] = "1.5"
    with pytest.raises(DatasetError) as exc:
        gifss_from_dict(doc)
    assert "p" in str(exc.value)


def test_relation_round_trip(tmp_path, student_f, student_g):
    r = maximal_relation(student_f, student_g, PRODUCT)
    path = tmp_path / "rel.json"
    save_relation(r, path)
    assert load_relation(path) == r


def test_relation_file_with_path_parents(tmp_path, data_dir, student_f, student_g):
    r = maximal_relation(student_f, student_g, PRODUCT)
    doc = relation_to_dict(r)
    doc["source"] = str(data_dir / "best_student_f.json")
    doc["target"] = str(data_dir / "best_student_g.json")
    path = tmp_path / "rel.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert load_relation(path) == r


def test_relation_file_validates_containment(tmp_path, student_f, student_g):
    r = maximal_relation(student_f, student_g, PRODUCT)
    doc = relation_to_dict(r)
    entry = doc["entries"][0]
    element = sorted(entry["values"])[0]
    entry["values"][element]["mu"] = "1"
    entry["values"][element]["nu"] = "0"
    path = tmp_path / "rel.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(ContainmentError):
        load_relation(path)


def test_relation_requires_all_keys(tmp_path, student_f, student_g):
    r = maximal_relation(student_f, student_g, PRODUCT)
    doc = relation_to_dict(r)
    del doc["norms"]
    path = tmp_path / "rel.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(DatasetError):
        load_relation(path)


def test_saved_files_end_with_newline(tmp_path, partner):
    path = tmp_path / "out.json"
    save_gifss(partner, path)
    assert path.read_text(encoding="utf-8").endswith("\n")
