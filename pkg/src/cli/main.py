"""
Command-line surface

Every subcommand decodes its shape and map documents, makes one library call
and writes the resulting document. Positional shape arguments accept '-' for
stdin; -o FILE redirects the output.

Exit codes: 0 ok, 1 library error or negative verdict, 2 usage error,
3 internal law violated or unexpected failure. Errors are written to stderr
as a JSON object.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from src.errors import DiagramError, InvariantViolation
from src.maps import enumerate_maps, image_factorization, pushout_inclusions
from src.molecule import check_complex, has_spherical_boundary, is_molecule, paste
from src.ogposet import (
    ClosedSubset,
    OrientedGradedPoset,
    Sign,
    boundary,
    closure,
    is_oriented_thin,
    restrict,
)
from src.constructions import (
    KINDS,
    a_map,
    c_map,
    dual,
    extr,
    generate,
    gray_product,
    horns,
    join,
    relative_cylinder,
    shell,
    substitution,
    suspension,
    unitor_atom,
)
from src.simplicial import euler, homology, nerve
from src.settings import get_logger
from .braiding import demo_lines, run_braiding_demo
from .codec import dumps, encode_map, encode_shape, loads, map_text, parse_map, parse_shape, shape_text
from .dot import to_dot

logger = get_logger(__name__)

LEVELS = ('thin', 'directed', 'regular', 'molecule', 'spherical')
SIDES = {'-': Sign.MINUS, '+': Sign.PLUS, 'both': None}


class CommandFailed(Exception):
    """A command ran but its verdict is negative; the document is still written"""

    def __init__(self, output: str):
        super().__init__("negative verdict")
        self.output = output


# ============ Input ============

def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path, encoding='utf-8') as f:
        return f.read()


def _shape(path: str) -> OrientedGradedPoset:
    return parse_shape(_read(path))


def _subset(P: OrientedGradedPoset, path: str) -> ClosedSubset:
    """Closure in P of the element ids listed by a shape document"""
    names = [e.get('id') for e in loads(_read(path)).get('elements', [])]
    return closure(P, [P.index_of(name) for name in names])


def _dual_spec(value: str):
    if value in ('op', 'co', 'all'):
        return value
    return [int(d) for d in value.split(',') if d.strip()]


# ============ Commands ============

def cmd_gen(args) -> str:
    return shape_text(generate(args.kind, args.n).shape)


def cmd_validate(args) -> str:
    P = _shape(args.shape)
    verdict: Dict[str, Any] = {'level': args.level}
    if args.level == 'thin':
        report = is_oriented_thin(P)
        verdict.update(ok=report.ok, interval=list(report.interval) if report.interval else None)
    elif args.level in ('directed', 'regular'):
        report = check_complex(P, args.level)
        verdict.update(ok=report.ok, element=report.element, reason=report.reason)
    elif args.level == 'molecule':
        witness = is_molecule(P)
        verdict.update(ok=witness is not None)
    else:
        verdict.update(ok=has_spherical_boundary(P))
    text = dumps(verdict)
    if not verdict['ok']:
        raise CommandFailed(text)
    return text


def cmd_boundary(args) -> str:
    P = _shape(args.shape)
    side = SIDES[args.s]
    if args.granular:
        members = boundary(P, P.whole(), args.n, side, granular=True)
        return dumps({'elements': sorted(P.id_of(x) for x in members)})
    face, _ = restrict(P, boundary(P, P.whole(), args.n, side))
    return shape_text(face)


def cmd_gray(args) -> str:
    return shape_text(gray_product(_shape(args.first), _shape(args.second)))


def cmd_join(args) -> str:
    return shape_text(join(_shape(args.first), _shape(args.second)))


def cmd_dual(args) -> str:
    return shape_text(dual(_shape(args.shape), _dual_spec(args.j)))


def cmd_susp(args) -> str:
    return shape_text(suspension(_shape(args.shape)))


def cmd_paste(args) -> str:
    return shape_text(paste(_shape(args.first), _shape(args.second), args.k).shape)


def cmd_subst(args) -> str:
    U = _shape(args.host)
    bundle = substitution(U, _subset(U, args.sub), _shape(args.replacement))
    return shape_text(bundle.shape)


def cmd_cyl(args) -> str:
    U = _shape(args.shape)
    collapsed = _subset(U, args.rel) if args.rel else None
    return shape_text(relative_cylinder(U, collapsed).shape)


def cmd_unitor(args) -> str:
    U = _shape(args.shape)
    side = Sign.MINUS if args.side == 'l' else Sign.PLUS
    if args.sub:
        V = _subset(U, args.sub)
    else:
        V = boundary(U, U.whole(), U.dim - 1, side)
    return map_text(unitor_atom(U, V, side, flipped=args.flip)['retraction'])


def cmd_shell(args) -> str:
    return map_text(shell(_shape(args.shape))['inclusion'])


def cmd_amap(args) -> str:
    return map_text(a_map(args.n, 'explicit' if args.explicit else 'recursive'))


def cmd_cmap(args) -> str:
    return map_text(c_map(args.n))


def cmd_extr(args) -> str:
    return map_text(extr(args.k, args.n, tilde=args.tilde)['retraction'])


def cmd_horns(args) -> str:
    return dumps({'horns': [h.to_dict() for h in horns(_shape(args.shape))]})


def cmd_maps(args) -> str:
    found = enumerate_maps(_shape(args.first), _shape(args.second), inclusions_only=args.inclusions)
    assignments = [encode_map(f)['assignment'] for f in found]
    return dumps({'count': len(found), 'assignments': assignments})


def cmd_factor(args) -> str:
    factorization = image_factorization(parse_map(_read(args.map)))
    return dumps({'surjection': encode_map(factorization.surjection),
                  'inclusion': encode_map(factorization.inclusion)})


def cmd_pushout(args) -> str:
    glued = pushout_inclusions(parse_map(_read(args.first)), parse_map(_read(args.second)))
    return dumps({'shape': encode_shape(glued.shape),
                  'j1': encode_map(glued.j1)['assignment'],
                  'j2': encode_map(glued.j2)['assignment']})


def cmd_homology(args) -> str:
    return dumps(homology(nerve(_shape(args.shape)), reduced=args.reduced).to_dict())


def cmd_euler(args) -> str:
    characteristic = euler(_shape(args.shape))
    return dumps(characteristic._asdict())


def cmd_dot(args) -> str:
    return to_dot(_shape(args.shape))


def cmd_demo(args) -> str:
    report = run_braiding_demo()
    text = "\n".join(demo_lines(report)) + "\n"
    if not all(report['checks'].values()):
        raise CommandFailed(text)
    return text


# ============ Parser ============

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='dgs', description='Diagrammatic-set shapes and maps')
    parser.add_argument('-o', '--output', help='Write the output document to a file instead of stdout')
    commands = parser.add_subparsers(dest='command', required=True)

    def command(name: str, handler, help_text: str, shape: bool = False) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        if shape:
            sub.add_argument('shape', nargs='?', default='-', help="Shape document (default: '-' for stdin)")
        return sub

    sub = command('gen', cmd_gen, 'Build a named generator')
    sub.add_argument('kind', choices=KINDS)
    sub.add_argument('n', type=int, nargs='?', default=0)

    sub = command('validate', cmd_validate, 'Check a shape at some level', shape=True)
    sub.add_argument('--level', choices=LEVELS, default='regular')

    sub = command('boundary', cmd_boundary, 'Input or output boundary of a shape', shape=True)
    sub.add_argument('-n', type=int, required=True, help='Boundary dimension')
    sub.add_argument('-s', choices=tuple(SIDES), default='both', help='Side: -, + or both')
    sub.add_argument('--granular', action='store_true', help='List the granular boundary cells only')

    for name, handler, help_text in (('gray', cmd_gray, 'Gray product A ⊗ B'), ('join', cmd_join, 'Join A ⋆ B')):
        sub = command(name, handler, help_text)
        sub.add_argument('first')
        sub.add_argument('second')

    sub = command('dual', cmd_dual, 'J-dual of a shape', shape=True)
    sub.add_argument('--j', required=True, help="Comma-separated dimensions, or op, co, all")

    command('susp', cmd_susp, 'Suspension of a shape', shape=True)

    sub = command('paste', cmd_paste, 'Paste A #ₖ B')
    sub.add_argument('first')
    sub.add_argument('second')
    sub.add_argument('-k', type=int, required=True)

    sub = command('subst', cmd_subst, 'Substitute W for the submolecule V of U')
    sub.add_argument('host')
    sub.add_argument('sub', help='Shape document whose ids pick the submolecule of the host')
    sub.add_argument('replacement')

    sub = command('cyl', cmd_cyl, 'Cylinder, optionally relative to a boundary subset', shape=True)
    sub.add_argument('--rel', help='Shape document whose ids pick the collapsed subset')

    sub = command('unitor', cmd_unitor, 'Unitor atom and its retraction', shape=True)
    sub.add_argument('--side', choices=('l', 'r'), default='l')
    sub.add_argument('--flip', action='store_true')
    sub.add_argument('--sub', help='Shape document picking the boundary submolecule (default: the whole side)')

    command('shell', cmd_shell, 'Shell of a shape with spherical boundary', shape=True)

    sub = command('amap', cmd_amap, 'The map Δⁿ ->> Oⁿ')
    sub.add_argument('n', type=int)
    sub.add_argument('--explicit', action='store_true', help='Use the word formula instead of the recursion')

    sub = command('cmap', cmd_cmap, 'The map Δⁿ ->> Gⁿ')
    sub.add_argument('n', type=int)

    sub = command('extr', cmd_extr, 'Extraction molecule and its retraction')
    sub.add_argument('k', type=int)
    sub.add_argument('n', type=int)
    sub.add_argument('--tilde', action='store_true')

    command('horns', cmd_horns, 'Horns of an atom and their kinds', shape=True)

    sub = command('maps', cmd_maps, 'Enumerate maps A -> B')
    sub.add_argument('first')
    sub.add_argument('second')
    sub.add_argument('--inclusions', action='store_true')

    sub = command('factor', cmd_factor, 'Image factorization of a map')
    sub.add_argument('map')

    sub = command('pushout', cmd_pushout, 'Pushout of two inclusions with a common source')
    sub.add_argument('first')
    sub.add_argument('second')

    sub = command('homology', cmd_homology, 'Integer homology of the nerve', shape=True)
    sub.add_argument('--reduced', action='store_true')

    command('euler', cmd_euler, 'Euler characteristic by elements and by nerve chains', shape=True)
    command('dot', cmd_dot, 'Graphviz rendering of the Hasse diagram', shape=True)

    sub = command('demo', cmd_demo, 'Worked examples')
    sub.add_argument('name', choices=('braiding',))
    return parser


# ============ Dispatch ============

def _write(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _fail(payload: Dict[str, Any]) -> None:
    sys.stderr.write(json.dumps(payload, ensure_ascii=False) + "\n")


def dispatch(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    logger.info("dispatching %s", args.command)
    try:
        _write(args.handler(args), args.output)
    except CommandFailed as e:
        _write(e.output, args.output)
        return 1
    except InvariantViolation as e:
        _fail(e.to_dict())
        return 3
    except DiagramError as e:
        _fail(e.to_dict())
        return 1
    except (ValueError, OSError) as e:
        _fail({'error': type(e).__name__, 'message': str(e), 'locus': None})
        return 2
    except Exception as e:
        logger.exception("command %s failed", args.command)
        _fail({'error': type(e).__name__, 'message': str(e), 'locus': None})
        return 3
    return 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
