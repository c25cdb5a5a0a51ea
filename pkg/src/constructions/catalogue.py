"""
Named shapes shared by the tests and the command line
"""

from typing import Callable, Dict, List

from src.errors import Unsupported
from src.molecule import paste
from src.ogposet import OrientedGradedPoset, build_ogp
from .cells import compose_atom, shell
from .cylinders import cylinder
from .extraction import extr
from .generators import comp_globe, cube, globe, simplex


def _path(length: int) -> OrientedGradedPoset:
    shape = globe(1)
    for _ in range(length - 1):
        shape = paste(shape, globe(1), 0).shape
    return shape


def _two_points() -> OrientedGradedPoset:
    return build_ogp([("a", 0), ("b", 0)], [])


FIXTURES: Dict[str, Callable[[], OrientedGradedPoset]] = {
    'globe1': lambda: globe(1),
    'globe2': lambda: globe(2),
    'globe3': lambda: globe(3),
    'globe4': lambda: globe(4),
    'simplex1': lambda: simplex(1),
    'simplex2': lambda: simplex(2),
    'simplex3': lambda: simplex(3),
    'simplex4': lambda: simplex(4),
    'cube2': lambda: cube(2),
    'cube3': lambda: cube(3),
    'path2': lambda: _path(2),
    'path3': lambda: _path(3),
    'vertical2': lambda: paste(globe(2), globe(2), 1).shape,
    'horizontal2': lambda: paste(globe(2), globe(2), 0).shape,
    'comp_globe2': lambda: comp_globe(2).shape,
    'comp_globe3': lambda: comp_globe(3).shape,
    'compose_path3': lambda: compose_atom(_path(3)).shape,
    'cylinder_simplex2': lambda: cylinder(simplex(2)).shape,
    'shell_simplex2': lambda: shell(simplex(2)).shape,
    'extr0_2': lambda: extr(0, 2).shape,
    'extr0_3': lambda: extr(0, 3).shape,
    'extr1_2': lambda: extr(1, 2).shape,
    'extr1_3': lambda: extr(1, 3).shape,
    'extr0_3_tilde': lambda: extr(0, 3, tilde=True).shape,
    'two_points': _two_points,
}


def fixture(name: str) -> OrientedGradedPoset:
    """
    Build a named shape

    Raises:
        Unsupported: for an unknown name
    """
    if name not in FIXTURES:
        raise Unsupported(f"unknown fixture {name!r}", locus=name)
    return FIXTURES[name]()


def fixture_names() -> List[str]:
    return sorted(FIXTURES)
