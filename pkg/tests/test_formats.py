import pytest

from config import InputFormat
from errors import ParseError
from analysis.families import FIXTURES
from data.formats import content_id, parse, serialize
from data.records import PolytopeRecord

CORPUS = [PolytopeRecord(id=name, vertices=list(vertices)) for name, vertices in sorted(FIXTURES.items())] + [
    PolytopeRecord(id="cube", vertices=[(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1), (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1)]),
]


def test_plain_line():
    records = parse("(2,-1);(0,1);(-1,0)")
    assert len(records) == 1
    assert records[0].vertices == [(2, -1), (0, 1), (-1, 0)]
    assert records[0].dimension == 2
    assert records[0].id == content_id([(2, -1), (0, 1), (-1, 0)])


def test_plain_ids_comments_and_blank_lines():
    text = "# reflexive\nP2: (1,0); (0,1); (-1,-1)  # projective plane\n\n  ( 1 , 1 );(-1,-1)\n"
    records = parse(text)
    assert [r.id for r in records][0] == "P2"
    assert records[0].vertices == [(1, 0), (0, 1), (-1, -1)]
    assert records[1].vertices == [(1, 1), (-1, -1)]


def test_plain_malformed_vertex_reports_line():
    with pytest.raises(ParseError, match="line 2") as info:
        parse("(1,0);(0,1)\n(1,0);(x,1)\n")
    assert info.value.line == 2


def test_plain_mixed_dimensions():
    with pytest.raises(ParseError, match="line 1"):
        parse("(1,0);(0,1,0)")


@pytest.mark.parametrize("fmt", list(InputFormat))
def test_empty_input(fmt):
    assert parse("", fmt) == []


def test_grdb_matrix():
    records = parse("2 4\n1 -1 -1 1\n1 1 -1 -1\n", InputFormat.GRDB_MATRIX)
    assert records[0].vertices == [(1, 1), (-1, 1), (-1, -1), (1, -1)]
    assert records[0].tags == {"source": "grdb"}


def test_grdb_matrix_transposed():
    records = parse("2 3\n1 0\n0 1\n-1 -1\n", InputFormat.GRDB_MATRIX, transpose=True)
    assert records[0].vertices == [(1, 0), (0, 1), (-1, -1)]


def test_grdb_several_blocks():
    text = "2 3\n1 0 -1\n0 1 -1\n\n1 2\n-1 1\n"
    records = parse(text, InputFormat.GRDB_MATRIX)
    assert [r.dimension for r in records] == [2, 1]


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 4\n1 -1 -1 1\n", 1),
        ("2 4\n1 -1 -1\n1 1 -1 -1\n", 2),
        ("two four\n", 1),
        ("2 2\n1 a\n0 1\n", 2),
    ],
)
def test_grdb_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse(text, InputFormat.GRDB_MATRIX)
    assert info.value.line == line


def test_json():
    records = parse('[{"id":"P2","vertices":[[-5,-4],[-5,8],[5,1],[8,-5]]}]', InputFormat.JSON)
    assert records[0].id == "P2"
    assert records[0].vertices == [(-5, -4), (-5, 8), (5, 1), (8, -5)]


def test_json_without_id():
    records = parse('[{"vertices":[[1,0],[0,1],[-1,-1]]}]', InputFormat.JSON)
    assert records[0].id == content_id([(1, 0), (0, 1), (-1, -1)])


@pytest.mark.parametrize("text", ['{"id": "x"}', "[{", '[{"id": "x", "vertices": [[1, 0], [1]]}]'])
def test_json_errors(text):
    with pytest.raises(ParseError):
        parse(text, InputFormat.JSON)


@pytest.mark.parametrize("fmt", [InputFormat.PLAIN, InputFormat.JSON])
def test_serialize_then_parse(fmt):
    assert parse(serialize(CORPUS, fmt), fmt) == CORPUS


@pytest.mark.parametrize("transpose", [False, True])
def test_serialize_then_parse_grdb(transpose):
    text = serialize(CORPUS, InputFormat.GRDB_MATRIX, transpose)
    parsed = parse(text, InputFormat.GRDB_MATRIX, transpose)
    assert [r.vertices for r in parsed] == [r.vertices for r in CORPUS]
