import copy
import json

import pytest
from support import fixture, rel

from dblcoh.core import verify_double_category
from dblcoh.models.table import TableError, dump_table, load_table, table_from_model, table_monoidal
from dblcoh.report import SampleBudget


def _data(name="two_group"):
    with open(fixture(name), encoding="utf-8") as fh:
        return json.load(fh)


def test_load_from_path_text_and_dict():
    a = load_table(fixture("two_group"))
    b = load_table(json.dumps(_data()))
    c = load_table(_data())
    assert a.name == b.name == c.name == "two-group"
    assert list(a.all_hcells()) == list(c.all_hcells()) == [0, 1]
    assert len(list(b.all_squares())) == 6


def test_two_group_operations():
    m = load_table(fixture("two_group"))
    s = next(x for x in m.all_squares() if x.payload == "s1.2")
    t = next(x for x in m.all_squares() if x.payload == "s1.1")
    assert m.sq_vcomp(s, t).payload == "s1.0"
    assert m.sq_hcomp(s, t).payload == "s0.0"
    assert m.hcomp(1, 1) == 0
    assert m.sq_inverse(s).payload == "s1.1"
    assert table_monoidal(m) is not None
    assert table_monoidal(load_table(fixture("nonfibrant"))) is None


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.update(schema_version=2), "schema_version"),
    (lambda d: d["hcells"].append({"id": 5, "src": "*", "tgt": "nowhere"}), "unknown endpoint"),
    (lambda d: d["squares"].append(dict(d["squares"][0])), "duplicate square"),
    (lambda d: d["compose_h"].update(hcells=[[0, 1]]), "rows of length 3"),
    (lambda d: d["compose_h"]["hcells"].append([0, 1, 0]), "conflicting"),
    (lambda d: d["compose_v"].update(squares={}), "must be an array"),
    (lambda d: d.update(objects=[{"a": 1}]), "scalars or arrays"),
])
def test_schema_errors(mutate, message):
    d = _data()
    mutate(d)
    with pytest.raises(TableError, match=message):
        load_table(d)


def test_top_level_and_json_errors():
    with pytest.raises(TableError, match="top level"):
        load_table([1, 2])
    with pytest.raises(TableError, match="top level"):
        load_table("[1, 2]")
    with pytest.raises(TableError, match="invalid JSON"):
        load_table("{not json")


def test_missing_table_entry():
    d = _data()
    d["compose_h"]["hcells"] = [r for r in d["compose_h"]["hcells"] if r[:2] != [1, 1]]
    with pytest.raises(TableError, match="missing compose_h.hcells entry"):
        load_table(d)


def test_dump_load_round_trip():
    d = _data()
    m = load_table(json.loads(dump_table(d)))
    assert dump_table(copy.deepcopy(m.data)) == dump_table(d)


def test_tabulated_rel_round_trip():
    src = rel(1)
    data = table_from_model(src)
    m = load_table(dump_table(data))
    assert len(list(m.all_hcells())) == len(list(src.all_hcells()))
    assert len(list(m.all_squares())) == len(list(src.all_squares()))
    assert table_from_model(m, data["name"]) == data
    rep = verify_double_category(m, SampleBudget(limit=2000))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", ["two_group", "broken_interchange", "broken_hexagon", "inverted_pi",
                                  "non_companion", "non_involutive", "nonfibrant"])
def test_fixtures_are_double_categories(name):
    rep = verify_double_category(load_table(fixture(name)), SampleBudget(limit=2000))
    assert rep.ok == (name != "broken_interchange"), rep.summary()


def test_fixtures_are_up_to_date():
    import importlib.util

    spec = importlib.util.spec_from_file_location("build", fixture("build").replace(".json", ".py"))
    build = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(build)
    for fname, make in build.FIXTURES.items():
        assert json.loads(json.dumps(make())) == _data(fname[:-5]), fname
