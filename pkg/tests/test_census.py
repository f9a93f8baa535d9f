import pytest

from config import VerdictKind
from geometry.lattice import UnimodularMap
from analysis.families import FIXTURES, fano, named_fixture
from classification.census import (
    census,
    classify_candidates,
    deduplicate,
    result_record,
    tabulate,
    validate_records,
)
from data.enumerator import enumerate_fano_polygons
from data.records import PolytopeRecord


@pytest.fixture(scope="module")
def reflexive_census():
    return census(enumerate_fano_polygons(3, 6, index_filter=1))


def _record(record_id, vertices):
    return PolytopeRecord(id=record_id, vertices=list(vertices))


def test_reflexive_polygon_census(reflexive_census):
    table = reflexive_census.table
    assert len(table) == 1
    row = table.iloc[0]
    assert row["dimension"] == 2
    assert row["gorenstein_index"] == 1
    assert row["total"] == 16
    assert row["B0"] == 3
    assert row["B1"] == 0
    assert row["B2"] == 0
    assert row["B3"] == 1
    assert row["B_inf"] == 12
    assert row["unresolved"] == 0
    assert row["KE"] == 5
    assert row["rejected"] == 0


def test_reflexive_census_is_stable_in_a_larger_box(reflexive_census):
    larger = census(enumerate_fano_polygons(4, 6, index_filter=1))
    assert {r.canonical_key for r in larger.results} == {r.canonical_key for r in reflexive_census.results}


def test_smooth_only():
    report = census(enumerate_fano_polygons(3, 6, index_filter=1), smooth_only=True)
    assert int(report.table["total"].sum()) == 5


def test_validate_records_splits_rejections():
    records = [
        _record("ok", FIXTURES["square"]),
        _record("flat", [(1, 0), (-1, 0)]),
        _record("off", [(1, 0), (-1, 1), (1, -1)]),
    ]
    accepted, rejected = validate_records(records)
    assert [record_id for record_id, _ in accepted] == ["ok"]
    assert {r.id: r.reason for r in rejected} == {"flat": "DimensionDrop", "off": "OriginNotInterior"}


def test_deduplicate():
    shear = UnimodularMap.from_rows([[1, 1], [0, 1]])
    square = named_fixture("square")
    sheared = [shear(v) for v in square.vertices]
    polytopes = [("a", square), ("b", fano(sheared)), ("c", named_fixture("diamond"))]
    candidates, duplicates = deduplicate(polytopes)
    assert [c.id for c in candidates] == ["a", "c"]
    assert duplicates == 1
    kept, none = deduplicate(polytopes, dedup=False)
    assert len(kept) == 3 and none == 0


def test_census_counts_rejections_and_duplicates():
    records = [
        _record("P", FIXTURES["projective-plane"]),
        _record("minus-P", [(-1, 0), (0, -1), (1, 1)]),
        _record("off", [(1, 0), (-1, 1), (1, -1)]),
        _record("strict", FIXTURES["strict-b1"]),
    ]
    report = census(records)
    assert report.duplicates == 1
    assert report.rejected == {"off": "OriginNotInterior"}
    assert int(report.table["total"].sum()) == 2
    assert set(report.table["rejected"]) == {1}


def test_result_record():
    record = result_record("to-ke", named_fixture("to-ke"))
    assert record.verdict.kind == VerdictKind.PERIODIC
    assert record.verdict.label == "B_inf"
    assert (record.verdict.preperiod, record.verdict.period) == (1, 1)
    assert record.trajectory.kahler_einstein == [False, True, True]
    assert record.trajectory.vertex_counts == [3, 3, 3]
    assert not record.kahler_einstein


def test_result_record_of_strict_type():
    record = result_record("strict", named_fixture("strict-b1"))
    assert record.verdict.label == "B1"
    assert record.gorenstein_index == 5
    assert sorted(record.trajectory.terminal_vertices) == [(-1, 0), (1, -1), (1, 0)]


def test_worker_pool_matches_serial():
    polytopes = [(name, named_fixture(name)) for name in ("square", "strict-b1", "to-ke", "hexagon")]
    candidates, _ = deduplicate(polytopes)
    assert classify_candidates(candidates, budget=16, workers=2) == classify_candidates(candidates, budget=16)


def test_tabulate_empty():
    table = tabulate([])
    assert table.empty
    assert "total" in table.columns


def test_strict_columns_run_to_the_budget():
    table = tabulate([], budget=3)
    assert [c for c in table.columns if c.startswith("B")] == ["B0", "B1", "B2", "B_inf"]
    report = census([_record("strict", FIXTURES["strict-b1"])], budget=5)
    row = report.table.iloc[0]
    assert [int(row[f"B{k}"]) for k in range(5)] == [0, 1, 0, 0, 0]
