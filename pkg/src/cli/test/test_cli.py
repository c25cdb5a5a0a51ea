"""
Tests for the JSON codec, DOT rendering and command dispatch

Commands run in-process through dispatch(); stdin is swapped for a string
buffer and stdout/stderr are captured.
"""

import io
import json
import os
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout

import pytest

from src.errors import ParseError, ValidationError
from src.maps import find_unique_iso
from src.constructions import a_map, coface, fixture, globe, simplex
from src.cli import decode_shape, dispatch, encode_shape, map_text, parse_map, parse_shape, shape_text, to_dot


def run(argv, stdin=""):
    """dispatch(argv) with the given stdin; returns (exit code, stdout, stderr)"""
    saved = sys.stdin
    sys.stdin = io.StringIO(stdin)
    out, err = io.StringIO(), io.StringIO()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = dispatch(argv)
    finally:
        sys.stdin = saved
    return code, out.getvalue(), err.getvalue()


def write_documents(directory, **texts):
    paths = {}
    for name, text in texts.items():
        paths[name] = os.path.join(directory, f"{name}.json")
        with open(paths[name], 'w', encoding='utf-8') as f:
            f.write(text)
    return paths


# ============ Codec ============

def test_shape_documents_round_trip():
    for name in ('globe3', 'simplex2', 'cube2', 'vertical2', 'two_points'):
        P = fixture(name)
        assert decode_shape(encode_shape(P)) == P, name


def test_encoding_is_canonical():
    text = shape_text(simplex(2))
    assert shape_text(parse_shape(text)) == text
    elements = json.loads(text)['elements']
    assert [e['dim'] for e in elements] == sorted(e['dim'] for e in elements)
    assert json.loads(text)['format_version'] == "1.0"


def test_map_documents_round_trip():
    for f in (coface(1, 2), a_map(2)):
        assert parse_map(map_text(f)) == f


def test_annotations_are_kept():
    document = encode_shape(globe(1), {'name': 'arrow'})
    assert document['annotations'] == {'name': 'arrow'}


def test_unknown_sign_is_a_parse_error():
    document = encode_shape(globe(1))
    document['covers'][0]['sign'] = "±"
    with pytest.raises(ParseError):
        decode_shape(document)
    with pytest.raises(ParseError):
        parse_shape("[1, 2]")
    with pytest.raises(ParseError):
        parse_shape("{")


def test_transitive_cover_is_rejected():
    document = {
        'elements': [{'id': name} for name in ("p", "q", "e", "f", "s")],
        'covers': [
            {'u': "e", 'l': "p", 'sign': "-"}, {'u': "e", 'l': "q", 'sign': "+"},
            {'u': "f", 'l': "p", 'sign': "-"}, {'u': "f", 'l': "q", 'sign': "+"},
            {'u': "s", 'l': "e", 'sign': "-"}, {'u': "s", 'l': "f", 'sign': "+"},
            {'u': "s", 'l': "p", 'sign': "-"},
        ],
    }
    with pytest.raises(ValidationError) as info:
        decode_shape(document)
    assert info.value.reason == "TransitiveEdge"
    assert info.value.to_dict()['locus'] == ["s", "p"]


def test_invalid_map_document():
    document = json.loads(map_text(coface(1, 2)))
    document['assignment'] = [pair for pair in document['assignment'] if pair[0] != "⊤⊤"]
    with pytest.raises(ValidationError) as info:
        parse_map(json.dumps(document))
    assert info.value.reason == "NotAMap"


# ============ DOT ============

def test_dot_ranks_by_dimension():
    text = to_dot(globe(2))
    assert text.startswith('digraph "hasse" {')
    assert text.count("rank = same;") == 3
    assert '"2" -> "1-" [label="-", style=dashed' in text
    assert '"2" -> "1+" [label="+", style=solid' in text


# ============ Dispatch ============

def test_generate_then_validate():
    code, out, _ = run(['gen', 'globe', '2'])
    assert code == 0
    assert parse_shape(out) == globe(2)
    code, verdict, _ = run(['validate', '--level', 'regular'], stdin=out)
    assert code == 0
    assert json.loads(verdict)['ok'] is True


def test_negative_verdict_exits_one():
    code, out, _ = run(['validate', '--level', 'molecule'], stdin=shape_text(fixture('two_points')))
    assert code == 1
    assert json.loads(out) == {'level': 'molecule', 'ok': False}


def test_boundary_command():
    text = shape_text(simplex(2))
    code, out, _ = run(['boundary', '-n', '1', '-s', '-'], stdin=text)
    assert code == 0
    assert sorted(parse_shape(out).ids) == sorted(["⊤⊥⊥", "⊥⊥⊤", "⊤⊥⊤"])
    code, out, _ = run(['boundary', '-n', '1', '-s', '+', '--granular'], stdin=text)
    assert json.loads(out) == {'elements': ["⊤⊤⊥", "⊥⊤⊤"]}


def test_shape_commands():
    code, out, _ = run(['susp'], stdin=shape_text(globe(1)))
    assert code == 0 and find_unique_iso(parse_shape(out), globe(2)) is not None
    code, out, _ = run(['dual', '--j', '2'], stdin=shape_text(simplex(2)))
    assert code == 0 and len(parse_shape(out)) == 7
    code, out, _ = run(['dot'], stdin=shape_text(globe(1)))
    assert code == 0 and "rank = same" in out


def test_two_shape_commands():
    with tempfile.TemporaryDirectory() as directory:
        paths = write_documents(directory, arrow=shape_text(globe(1)), edge=shape_text(simplex(1)),
                                triangle=shape_text(simplex(2)))
        code, out, _ = run(['gray', paths['arrow'], paths['arrow']])
        assert code == 0 and len(parse_shape(out)) == 9
        code, out, _ = run(['paste', paths['arrow'], paths['arrow'], '-k', '0'])
        assert code == 0 and len(parse_shape(out)) == 5
        code, out, _ = run(['maps', paths['edge'], paths['triangle'], '--inclusions'])
        assert code == 0 and json.loads(out)['count'] == 3


def test_substitution_command():
    with tempfile.TemporaryDirectory() as directory:
        paths = write_documents(directory, host=shape_text(fixture('vertical2')), cell=shape_text(globe(2)))
        code, out, err = run(['subst', paths['host'], paths['cell'], paths['cell']])
        assert code == 0, err
        assert find_unique_iso(parse_shape(out), fixture('vertical2')) is not None


def test_relative_cylinder_command():
    with tempfile.TemporaryDirectory() as directory:
        paths = write_documents(directory, end=json.dumps({'elements': [{'id': "0-", 'dim': 0}], 'covers': []}))
        code, out, _ = run(['cyl', '--rel', paths['end']], stdin=shape_text(globe(1)))
        assert code == 0 and len(parse_shape(out)) == 7


def test_map_commands():
    code, out, _ = run(['amap', '2', '--explicit'])
    assert code == 0 and parse_map(out) == a_map(2)
    code, out, _ = run(['amap', '2'])
    assert code == 0 and parse_map(out) == a_map(2)
    code, out, _ = run(['extr', '0', '2'])
    assert code == 0 and parse_map(out).is_surjective()
    code, out, _ = run(['unitor'], stdin=shape_text(globe(1)))
    assert code == 0 and parse_map(out).target == globe(1)
    code, out, _ = run(['shell'], stdin=shape_text(simplex(2)))
    assert code == 0 and parse_map(out).is_injective()


def test_factor_and_pushout_commands():
    with tempfile.TemporaryDirectory() as directory:
        paths = write_documents(directory, face=map_text(coface(0, 2)), other=map_text(coface(0, 2)))
        code, out, _ = run(['factor', paths['face']])
        assert code == 0 and set(json.loads(out)) == {'surjection', 'inclusion'}
        code, out, _ = run(['pushout', paths['face'], paths['other']])
        assert code == 0
        assert len(parse_shape(json.dumps(json.loads(out)['shape']))) == 2 * 7 - 3


def test_horns_homology_and_euler():
    code, out, _ = run(['horns'], stdin=shape_text(globe(2)))
    assert code == 0
    assert [h['kind'] for h in json.loads(out)['horns']] == ['composition', 'composition']
    code, out, _ = run(['homology', '--reduced'], stdin=shape_text(globe(2)))
    assert code == 0
    assert all(g['betti'] == 0 for g in json.loads(out)['groups'])
    code, out, _ = run(['euler'], stdin=shape_text(globe(2)))
    assert json.loads(out) == {'by_elements': 1, 'by_chains': 1}


def test_output_file():
    with tempfile.TemporaryDirectory() as directory:
        target = os.path.join(directory, "simplex.json")
        code, out, _ = run(['-o', target, 'gen', 'simplex', '2'])
        assert code == 0 and out == ""
        with open(target, encoding='utf-8') as f:
            assert parse_shape(f.read()) == simplex(2)


def test_usage_errors_exit_two():
    assert run([])[0] == 2
    assert run(['gen'])[0] == 2
    assert run(['frobnicate'])[0] == 2
    assert run(['gen', 'globe', 'two'])[0] == 2
    code, _, err = run(['validate', '/nonexistent/shape.json'])
    assert code == 2
    assert json.loads(err)['error'] == 'FileNotFoundError'


def test_library_errors_exit_one():
    code, _, err = run(['horns'], stdin=shape_text(fixture('path2')))
    assert code == 1
    assert json.loads(err)['error'] == 'NotAnAtom'
    code, _, err = run(['validate'], stdin="not json")
    assert code == 1
    assert json.loads(err)['error'] == 'ParseError'


def test_braiding_demo_command():
    code, out, _ = run(['demo', 'braiding'])
    assert code == 0
    assert "BRAIDING DEGENERACIES" in out
    for name in ("U1", "U2", "V1", "V2", "q1", "q2"):
        assert f"\n{name}" in out, name
    assert "❌" not in out


def main():
    """Run the command-line checks as a script"""
    print("=" * 60)
    print("COMMAND-LINE CHECKS")
    print("=" * 60)
    checks = [name for name in globals() if name.startswith("test_")]
    failures = 0
    for name in checks:
        try:
            globals()[name]()
            print(f"✓ {name}")
        except Exception as e:
            failures += 1
            print(f"❌ {name}: {e!r}")
    print(f"\n{len(checks) - failures}/{len(checks)} passed")


if __name__ == "__main__":
    main()
