"""
JSON codec, DOT rendering, the braiding demo and the command-line dispatcher
"""

from .codec import (
    encode_shape,
    decode_shape,
    encode_map,
    decode_map,
    dumps,
    loads,
    parse_shape,
    parse_map,
    shape_text,
    map_text,
)
from .dot import to_dot
from .braiding import (
    braiding_molecule,
    braiding_atom,
    braiding_surjection,
    interchange_sides,
    interchange_atom,
    interchange_surjection,
    run_braiding_demo,
    demo_lines,
)
from .main import build_parser, dispatch

__all__ = [
    'encode_shape',
    'decode_shape',
    'encode_map',
    'decode_map',
    'dumps',
    'loads',
    'parse_shape',
    'parse_map',
    'shape_text',
    'map_text',
    'to_dot',
    'braiding_molecule',
    'braiding_atom',
    'braiding_surjection',
    'interchange_sides',
    'interchange_atom',
    'interchange_surjection',
    'run_braiding_demo',
    'demo_lines',
    'build_parser',
    'dispatch',
]
