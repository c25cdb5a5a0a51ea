"""
JSON documents for shapes and maps

A shape document is

    {"format_version": "1.0",
     "elements": [{"id": "0-", "dim": 0}, ...],
     "covers": [{"u": "1", "l": "0-", "sign": "-"}, ...],
     "annotations": {...}}

and a map document carries "source" and "target" shape documents and an
"assignment" list of [from_id, to_id] pairs. Encoding is canonical: elements
sorted by (dim, id), covers by (u, l, sign), keys sorted.
"""

import json
from typing import Any, Dict, List, Optional

from src.errors import OgposetError, MapError, ParseError, ValidationError
from src.maps import OgpMap, check_map
from src.ogposet import OrientedGradedPoset, build_ogp
from src.settings import get_format_version, get_logger

logger = get_logger(__name__)

SIGN_TOKENS = ('+', '-')


# ============ Shapes ============

def encode_shape(P: OrientedGradedPoset, annotations: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    elements = sorted(({'id': P.id_of(x), 'dim': P.dims[x]} for x in range(len(P))),
                      key=lambda e: (e['dim'], e['id']))
    covers = sorted(({'u': P.id_of(u), 'l': P.id_of(l), 'sign': s.char} for u, l, s in P.covers()),
                    key=lambda c: (c['u'], c['l'], c['sign']))
    document = {'format_version': get_format_version(), 'elements': elements, 'covers': covers}
    if annotations:
        document['annotations'] = annotations
    return document


def _require(document: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(document, dict) or key not in document:
        raise ParseError(f"{where} is missing {key!r}", locus=key)
    value = document[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}.{key} must be a {kind.__name__}", locus=key)
    return value


def decode_shape(document: Dict[str, Any]) -> OrientedGradedPoset:
    """
    Shape document to poset

    Raises:
        ParseError: for a malformed document, including an unknown sign token
        ValidationError: when the data does not describe an oriented graded poset;
            reason names the underlying failure, e.g. TransitiveEdge
    """
    raw_elements = _require(document, 'elements', list, 'shape')
    raw_covers = _require(document, 'covers', list, 'shape')
    elements: List[Any] = []
    for e in raw_elements:
        name = _require(e, 'id', str, 'element')
        dim = e.get('dim')
        if dim is not None and (not isinstance(dim, int) or isinstance(dim, bool) or dim < 0):
            raise ParseError(f"element {name!r} has a bad dim {dim!r}", locus=name)
        elements.append({'id': name, 'dim': dim})
    covers = []
    for c in raw_covers:
        u, l = _require(c, 'u', str, 'cover'), _require(c, 'l', str, 'cover')
        sign = _require(c, 'sign', str, 'cover')
        if sign not in SIGN_TOKENS:
            raise ParseError(f"cover {u} -> {l} has sign {sign!r}", locus=[u, l])
        covers.append((u, l, sign))
    try:
        return build_ogp(elements, covers)
    except OgposetError as e:
        raise ValidationError(e.message, locus=e.locus, reason=type(e).__name__) from e


# ============ Maps ============

def encode_map(f: OgpMap) -> Dict[str, Any]:
    assignment = sorted([f.source.id_of(x), f.target.id_of(f(x))] for x in range(len(f.source)))
    return {
        'format_version': get_format_version(),
        'source': encode_shape(f.source),
        'target': encode_shape(f.target),
        'assignment': assignment,
    }


def decode_map(document: Dict[str, Any]) -> OgpMap:
    """
    Map document to a validated map

    Raises:
        ParseError: for a malformed document
        ValidationError: when a shape is invalid or the assignment is not a map
    """
    source = decode_shape(_require(document, 'source', dict, 'map'))
    target = decode_shape(_require(document, 'target', dict, 'map'))
    pairs = _require(document, 'assignment', list, 'map')
    assignment: Dict[str, str] = {}
    for pair in pairs:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(p, str) for p in pair)):
            raise ParseError("assignment entries must be [from_id, to_id] pairs", locus=str(pair))
        assignment[pair[0]] = pair[1]
    try:
        return check_map(source, target, assignment)
    except (OgposetError, MapError) as e:
        raise ValidationError(e.message, locus=e.locus, reason=type(e).__name__) from e


# ============ Text ============

def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(document, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> Dict[str, Any]:
    """
    Raises:
        ParseError: for invalid JSON or a non-object document
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", locus=[e.lineno, e.colno]) from e
    if not isinstance(document, dict):
        raise ParseError("document must be a JSON object")
    return document


def parse_shape(text: str) -> OrientedGradedPoset:
    return decode_shape(loads(text))


def parse_map(text: str) -> OgpMap:
    return decode_map(loads(text))


def shape_text(P: OrientedGradedPoset, annotations: Optional[Dict[str, Any]] = None) -> str:
    return dumps(encode_shape(P, annotations))


def map_text(f: OgpMap) -> str:
    return dumps(encode_map(f))
