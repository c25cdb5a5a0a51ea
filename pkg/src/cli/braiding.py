"""
The degeneracies behind a braiding of two 2-cells

U₁ and U₂ are 2-molecules with the boundary of O²: an input edge, then x
onto a two-edge path through a middle vertex, a 2-cell y between parallel
edges on one side of the middle vertex, and x' onto the output edge. The
edge z sits on the other side. The 3-atoms O² ⇒ Uᵢ carry surjections pᵢ onto
O² that send the top and y to the top of O², are the identity on the input
O², and collapse z, x, x' onto their boundaries.

V₁ and V₂ are the 3-atoms that slide a whiskered 2-cell x' past y: the input
side is y followed by x, the output side is x' (whiskered by z) and y'. The
surjections qᵢ onto O² send the top to the top of O², are the identity on
clos{x} and clos{x'}, and collapse z, y, y' onto their boundaries.

The demo finds every pᵢ and qᵢ by enumeration and checks them together with
the reverses pᵢ'.
"""

from typing import Callable, Dict, List, Optional, Tuple

from src.errors import InvariantViolation
from src.maps import OgpMap, enumerate_maps, reverse_surjection
from src.molecule import has_spherical_boundary, is_atom, is_molecule
from src.ogposet import OrientedGradedPoset, build_ogp, closure, greatest_element
from src.constructions import ShapeBundle, cell_extension, globe
from src.settings import get_logger

logger = get_logger(__name__)

VERTICES = ("s", "m", "t")


def _edge(name: str, source: str, target: str):
    return [(name, source, '-'), (name, target, '+')]


def _check_which(which: int, label: str) -> None:
    if which not in (1, 2):
        raise ValueError(f"{label} must be 1 or 2, got {which}")


def braiding_molecule(which: int) -> OrientedGradedPoset:
    """
    U₁ (z leaves the middle vertex) or U₂ (z enters it)

    Raises:
        ValueError: unless which is 1 or 2
    """
    _check_which(which, "braiding molecule")
    if which == 1:
        arcs, z = ("s", "m"), ("m", "t")
        path_lower, path_upper = ["lower", "z"], ["upper", "z"]
    else:
        arcs, z = ("m", "t"), ("s", "m")
        path_lower, path_upper = ["z", "lower"], ["z", "upper"]
    elements = [(v, 0) for v in VERTICES]
    elements += [(e, 1) for e in ("bottom", "top", "lower", "upper", "z")]
    elements += [(c, 2) for c in ("x", "y", "x'")]
    covers = _edge("bottom", "s", "t") + _edge("top", "s", "t") + _edge("z", *z)
    covers += _edge("lower", *arcs) + _edge("upper", *arcs)
    covers += [("x", "bottom", '-')] + [("x", e, '+') for e in path_lower]
    covers += [("y", "lower", '-'), ("y", "upper", '+')]
    covers += [("x'", e, '-') for e in path_upper] + [("x'", "top", '+')]
    return build_ogp(elements, covers)


def braiding_atom(which: int) -> ShapeBundle:
    """O² ⇒ Uᵢ with its 'input' and 'output' inclusions"""
    return cell_extension(globe(2), braiding_molecule(which))


def interchange_sides(which: int) -> Tuple[OrientedGradedPoset, OrientedGradedPoset]:
    """
    Input and output 2-molecules of V₁ (z enters the middle vertex) or V₂ (z leaves it)

    In V₁ the edge w runs from the middle vertex and x' turns it into w'; in V₂
    the edge u runs into the middle vertex and x' turns u' into it.

    Raises:
        ValueError: unless which is 1 or 2
    """
    _check_which(which, "interchange atom")
    vertices = [(v, 0) for v in VERTICES]
    if which == 1:
        shared = _edge("z", "s", "m") + _edge("w", "m", "t") + _edge("top", "s", "t")
        before = vertices + [(e, 1) for e in ("z", "w", "top", "mid")] + [("y", 2), ("x", 2)]
        before_covers = shared + _edge("mid", "s", "t")
        before_covers += [("y", "z", '-'), ("y", "w", '-'), ("y", "mid", '+')]
        before_covers += [("x", "mid", '-'), ("x", "top", '+')]
        after = vertices + [(e, 1) for e in ("z", "w", "w'", "top")] + [("x'", 2), ("y'", 2)]
        after_covers = shared + _edge("w'", "m", "t")
        after_covers += [("x'", "w", '-'), ("x'", "w'", '+')]
        after_covers += [("y'", "z", '-'), ("y'", "w'", '-'), ("y'", "top", '+')]
    else:
        shared = _edge("u", "s", "m") + _edge("z", "m", "t") + _edge("bottom", "s", "t")
        before = vertices + [(e, 1) for e in ("u", "z", "bottom", "mid")] + [("x", 2), ("y", 2)]
        before_covers = shared + _edge("mid", "s", "t")
        before_covers += [("x", "bottom", '-'), ("x", "mid", '+')]
        before_covers += [("y", "mid", '-'), ("y", "u", '+'), ("y", "z", '+')]
        after = vertices + [(e, 1) for e in ("u", "u'", "z", "bottom")] + [("y'", 2), ("x'", 2)]
        after_covers = shared + _edge("u'", "s", "m")
        after_covers += [("y'", "bottom", '-'), ("y'", "u'", '+'), ("y'", "z", '+')]
        after_covers += [("x'", "u'", '-'), ("x'", "u", '+')]
    return build_ogp(before, before_covers), build_ogp(after, after_covers)


def interchange_atom(which: int) -> ShapeBundle:
    """Vᵢ with its 'input' and 'output' inclusions"""
    return cell_extension(*interchange_sides(which))


def _lands_on_globe_top(p: OgpMap) -> bool:
    return p.is_surjective() and p(greatest_element(p.source.whole())) == p.target.index_of("2")


def _collapses(p: OgpMap, side: OgpMap, names) -> bool:
    for name in names:
        x = side(side.source.index_of(name))
        if p.target.dims[p(x)] >= p.source.dims[x]:
            return False
    return True


def _is_braiding_surjection(p: OgpMap, bundle: ShapeBundle) -> bool:
    if not _lands_on_globe_top(p):
        return False
    O2 = p.target
    inclusion = bundle['input']
    if any(O2.id_of(p(inclusion(x))) != inclusion.source.id_of(x) for x in range(len(inclusion.source))):
        return False
    output = bundle['output']
    if p(output(output.source.index_of("y"))) != O2.index_of("2"):
        return False
    return _collapses(p, output, ("z", "x", "x'"))


def _is_interchange_surjection(p: OgpMap, bundle: ShapeBundle) -> bool:
    if not _lands_on_globe_top(p):
        return False
    W = p.source
    for side, name in ((bundle['input'], "x"), (bundle['output'], "x'")):
        cell = closure(W, [side(side.source.index_of(name))])
        if len({p(c) for c in cell.members}) != len(p.target) or len(cell) != len(p.target):
            return False
    return _collapses(p, bundle['input'], ("z", "y")) and _collapses(p, bundle['output'], ("y'",))


def _unique_surjection(bundle: ShapeBundle, accept: Callable[[OgpMap, ShapeBundle], bool], label: str) -> OgpMap:
    found = [p for p in enumerate_maps(bundle.shape, globe(2)) if accept(p, bundle)]
    if len(found) != 1:
        raise InvariantViolation(f"expected one surjection {label}, found {len(found)}", locus=label)
    return found[0]


def braiding_surjection(which: int, bundle: Optional[ShapeBundle] = None) -> OgpMap:
    """
    pᵢ: (O² ⇒ Uᵢ) ->> O², found by enumerating all maps

    Raises:
        InvariantViolation: unless exactly one map has the defining properties
    """
    bundle = bundle if bundle is not None else braiding_atom(which)
    return _unique_surjection(bundle, _is_braiding_surjection, f"p{which}")


def interchange_surjection(which: int, bundle: Optional[ShapeBundle] = None) -> OgpMap:
    """
    qᵢ: Vᵢ ->> O², found by enumerating all maps

    Raises:
        InvariantViolation: unless exactly one map has the defining properties
    """
    bundle = bundle if bundle is not None else interchange_atom(which)
    return _unique_surjection(bundle, _is_interchange_surjection, f"q{which}")


def run_braiding_demo() -> Dict[str, object]:
    """
    Build U₁, U₂, O² ⇒ U₁, O² ⇒ U₂, V₁, V₂, p₁, p₂, q₁, q₂ and the reverses of pᵢ

    Returns:
        Dictionary with 'shapes' (name -> poset), 'maps' (name -> OgpMap),
        'duals' (reversed map name -> dualized dimensions) and 'checks'
        (description -> verdict)
    """
    shapes: Dict[str, OrientedGradedPoset] = {}
    maps: Dict[str, OgpMap] = {}
    duals: Dict[str, List[int]] = {}
    checks: Dict[str, bool] = {}
    atoms = {which: braiding_atom(which) for which in (1, 2)}
    interchanges = {which: interchange_atom(which) for which in (1, 2)}

    for which in (1, 2):
        molecule = braiding_molecule(which)
        shapes[f"U{which}"] = molecule
        checks[f"U{which} is a molecule"] = is_molecule(molecule) is not None
        checks[f"U{which} has spherical boundary"] = has_spherical_boundary(molecule)
    for which in (1, 2):
        shapes[f"W{which}"] = atoms[which].shape
        checks[f"O2 => U{which} is an atom"] = is_atom(atoms[which].shape)
    for which in (1, 2):
        shapes[f"V{which}"] = interchanges[which].shape
        checks[f"V{which} is an atom"] = is_atom(interchanges[which].shape)

    for which in (1, 2):
        p = braiding_surjection(which, atoms[which])
        maps[f"p{which}"] = p
        checks[f"p{which} is surjective"] = p.is_surjective()
    for which in (1, 2):
        q = interchange_surjection(which, interchanges[which])
        maps[f"q{which}"] = q
        checks[f"q{which} is surjective"] = q.is_surjective()
    for which in (1, 2):
        reverse = reverse_surjection(maps[f"p{which}"])
        maps[f"p{which}'"] = reverse
        duals[f"p{which}'"] = [reverse.source.dim]
        checks[f"p{which}' is surjective"] = reverse.is_surjective()

    logger.debug("braiding demo checks: %s", checks)
    return {'shapes': shapes, 'maps': maps, 'duals': duals, 'checks': checks}


def demo_lines(report: Dict[str, object]) -> List[str]:
    lines = ["=" * 60, "BRAIDING DEGENERACIES", "=" * 60]
    for name, shape in report['shapes'].items():
        lines.append(f"{name}: {len(shape)} elements, dimension {shape.dim}")
    duals = report.get('duals', {})
    for name, f in report['maps'].items():
        if name in duals:
            lines.append(f"{name} (source dualized in J={{{', '.join(map(str, duals[name]))}}}): {f.by_id()}")
        else:
            lines.append(f"{name}: {f.by_id()}")
    lines.append("")
    for description, ok in report['checks'].items():
        lines.append(f"{'✓' if ok else '❌'} {description}")
    return lines
