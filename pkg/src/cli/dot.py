"""
Graphviz DOT rendering of Hasse diagrams

One rank per dimension, top dimension first. Edges point from the upper
element to the lower one and are labelled with their sign; input edges are
drawn dashed.
"""

from typing import List

from src.ogposet import OrientedGradedPoset, Sign


def _quote(name: str) -> str:
    return '"' + name.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(P: OrientedGradedPoset, name: str = "hasse") -> str:
    lines: List[str] = [f"digraph {_quote(name)} {{", "\trankdir = TB;"]
    for d in range(P.dim, -1, -1):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for x in P.of_dim(d):
            lines.append(f"\t\t{_quote(P.id_of(x))} [label={_quote(P.id_of(x))}];")
        lines.append("\t}")
    for upper, lower, sign in P.covers():
        style = "dashed" if sign is Sign.MINUS else "solid"
        color = "blue" if sign is Sign.MINUS else "red"
        lines.append(f"\t{_quote(P.id_of(upper))} -> {_quote(P.id_of(lower))} "
                     f"[label=\"{sign.char}\", style={style}, color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
