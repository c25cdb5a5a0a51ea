"""
Molecule recognition
====================

A closed subset is a molecule when it is an atom (has a greatest element) or
splits as U₁ #ₖ U₂ with U₁ ∩ U₂ = ∂ₖ⁺U₁ = ∂ₖ⁻U₂ for smaller molecules U₁, U₂.

Candidate splits at level k are read off the precedence preorder on the
maximal elements of dimension > k: a precedes b when some k-dimensional
element is an output face of clos{a} and an input face of clos{b}. Every
decomposition has U₁ = clos(A) ∪ ∂ₖ⁻U and U₂ = clos(B) ∪ ∂ₖ⁺U for a down-set
A of this preorder and its complement B, so enumerating down-sets is
complete. Prefixes of one linear extension are tried before the rest.

Verdicts are memoized on the host poset. Searches run under a SearchBudget
and raise Indeterminate when it runs out.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

import networkx as nx

from src.errors import HostMismatch, NoLayering, NotAMolecule, NotSpherical
from src.ogposet import (
    Sign,
    ClosedSubset,
    OrientedGradedPoset,
    boundary_members,
    closure_members,
    element_boundary,
    granular_members,
    maximal_members,
    subset_dim,
)
from src.settings import SearchBudget, get_logger

logger = get_logger(__name__)

Members = FrozenSet[int]
SubsetLike = Union[ClosedSubset, OrientedGradedPoset]


@dataclass(frozen=True)
class DecompositionWitness:
    """Binary tree certifying that subset is a molecule; leaves are atoms"""

    subset: ClosedSubset
    k: Optional[int] = None
    left: Optional['DecompositionWitness'] = None
    right: Optional['DecompositionWitness'] = None

    @property
    def is_leaf(self) -> bool:
        return self.k is None

    def leaves(self) -> List[ClosedSubset]:
        if self.is_leaf:
            return [self.subset]
        return self.left.leaves() + self.right.leaves()

    def to_dict(self) -> Dict:
        if self.is_leaf:
            return {'subset': self.subset.ids}
        return {'subset': self.subset.ids, 'k': self.k, 'left': self.left.to_dict(), 'right': self.right.to_dict()}


@dataclass(frozen=True)
class BinarySplit:
    first: ClosedSubset
    second: ClosedSubset
    first_extended: ClosedSubset
    second_extended: ClosedSubset


@dataclass(frozen=True)
class MergerTree:
    label: ClosedSubset
    children: Tuple['MergerTree', ...] = ()

    def leaves(self) -> List[ClosedSubset]:
        if not self.children:
            return [self.label]
        return [leaf for child in self.children for leaf in child.leaves()]

    def branchings(self) -> int:
        return (1 if self.children else 0) + sum(child.branchings() for child in self.children)

    def to_dict(self) -> Dict:
        result = {'label': self.label.ids}
        if self.children:
            result['children'] = [child.to_dict() for child in self.children]
        return result


class ComplexReport:
    """Verdict of check_complex with the first failing element"""

    def __init__(self, ok: bool, element: Optional[str] = None, reason: Optional[str] = None):
        self.ok = ok
        self.element = element
        self.reason = reason

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "ComplexReport(ok)"
        return f"ComplexReport(failed at {self.element}: {self.reason})"


def as_subset(U: SubsetLike) -> ClosedSubset:
    if isinstance(U, OrientedGradedPoset):
        return U.whole()
    return U


# ============ Precedence and down-sets ============

def precedence_graph(P: OrientedGradedPoset, cells: List[int], k: int) -> nx.DiGraph:
    """Edge a -> b when a k-element is in Δₖ⁺ clos{a} and in Δₖ⁻ clos{b}"""
    graph = nx.DiGraph()
    graph.add_nodes_from(cells)
    outputs: Dict[int, List[int]] = {}
    for a in cells:
        for z in granular_members(P, P.down(a), k, Sign.PLUS):
            outputs.setdefault(z, []).append(a)
    for b in cells:
        for z in granular_members(P, P.down(b), k, Sign.MINUS):
            for a in outputs.get(z, ()):
                if a != b:
                    graph.add_edge(a, b)
    return graph


def down_sets(graph: nx.DiGraph) -> Iterator[FrozenSet[int]]:
    """
    Proper nonempty down-sets of the preorder generated by graph

    Prefixes of one linear extension come first, then every other down-set.
    """
    condensed = nx.condensation(graph)
    order = list(nx.lexicographical_topological_sort(condensed))
    blocks = {c: frozenset(condensed.nodes[c]['members']) for c in order}
    total = len(order)
    seen = set()

    acc: FrozenSet[int] = frozenset()
    for c in order[:-1]:
        acc = acc | blocks[c]
        seen.add(acc)
        yield acc

    chosen: List[int] = []
    included = set()

    def extend(i: int) -> Iterator[FrozenSet[int]]:
        if i == total:
            if 0 < len(chosen) < total:
                result = frozenset().union(*(blocks[c] for c in chosen))
                if result not in seen:
                    yield result
            return
        c = order[i]
        if all(p in included for p in condensed.predecessors(c)):
            chosen.append(c)
            included.add(c)
            yield from extend(i + 1)
            included.discard(c)
            chosen.pop()
        yield from extend(i + 1)

    yield from extend(0)


def candidate_splits(P: OrientedGradedPoset, members: Members, k: int) -> Iterator[Tuple[Members, Members]]:
    """Pairs (U₁, U₂) with U = U₁ #ₖ U₂ and both proper, not yet checked for molecule-hood"""
    cells = sorted(x for x in maximal_members(P, members) if P.dims[x] > k)
    if len(cells) < 2:
        return
    lower = boundary_members(P, members, k, Sign.MINUS)
    upper = boundary_members(P, members, k, Sign.PLUS)
    for A in down_sets(precedence_graph(P, cells, k)):
        B = [x for x in cells if x not in A]
        first = closure_members(P, A) | lower
        second = closure_members(P, B) | upper
        if first == members or second == members or (first | second) != members:
            continue
        if is_split(P, first, second, k):
            yield first, second


def is_split(P: OrientedGradedPoset, first: Members, second: Members, k: int) -> bool:
    meet = first & second
    return meet == boundary_members(P, first, k, Sign.PLUS) and meet == boundary_members(P, second, k, Sign.MINUS)


# ============ Recognition ============

def _memo(P: OrientedGradedPoset) -> Dict[Members, Optional[DecompositionWitness]]:
    return P._cache.setdefault('molecule', {})


def _decompose(P: OrientedGradedPoset, members: Members, budget: SearchBudget) -> Optional[DecompositionWitness]:
    memo = _memo(P)
    if members in memo:
        return memo[members]
    budget.check()
    witness = None
    maximal = maximal_members(P, members)
    if len(maximal) == 1:
        witness = DecompositionWitness(ClosedSubset(P, members))
    elif maximal:
        for k in range(subset_dim(P, members) - 1, -1, -1):
            for first, second in candidate_splits(P, members, k):
                budget.check()
                left = _decompose(P, first, budget)
                if left is None:
                    continue
                right = _decompose(P, second, budget)
                if right is None:
                    continue
                witness = DecompositionWitness(ClosedSubset(P, members), k, left, right)
                break
            if witness is not None:
                break
    memo[members] = witness
    return witness


def is_atom(U: SubsetLike) -> bool:
    U = as_subset(U)
    return len(maximal_members(U.host, U.members)) == 1


def is_molecule(U: SubsetLike, budget: Optional[SearchBudget] = None) -> Optional[DecompositionWitness]:
    """
    Search for a decomposition of U into atoms

    Args:
        U: Closed subset, or a poset standing for its whole
        budget: Shared search budget; a fresh one is made if None

    Returns:
        DecompositionWitness, or None when U is not a molecule

    Raises:
        Indeterminate: when the search budget runs out
    """
    U = as_subset(U)
    budget = budget or SearchBudget(label="molecule search")
    witness = _decompose(U.host, U.members, budget)
    logger.debug("molecule search on %d elements: %s after %d steps", len(U), witness is not None, budget.steps)
    return witness


def check_witness(U: SubsetLike, witness: DecompositionWitness) -> bool:
    """
    Verify every node of a decomposition witness

    Raises:
        HostMismatch: when the witness lives in another poset
    """
    U = as_subset(U)
    if witness.subset.host is not U.host and witness.subset.host != U.host:
        raise HostMismatch("witness belongs to a different poset")
    return _check_node(U.host, U.members, witness)


def _check_node(P: OrientedGradedPoset, members: Members, witness: DecompositionWitness) -> bool:
    if witness.subset.members != members or closure_members(P, members) != members:
        return False
    if witness.is_leaf:
        return len(maximal_members(P, members)) == 1
    if witness.left is None or witness.right is None or witness.k < 0:
        return False
    first, second = witness.left.subset.members, witness.right.subset.members
    if first == members or second == members or (first | second) != members:
        return False
    if not is_split(P, first, second, witness.k):
        return False
    return _check_node(P, first, witness.left) and _check_node(P, second, witness.right)


def exhaustive_molecule_check(U: SubsetLike) -> bool:
    """
    Decide molecule-hood by brute force over all closed proper subsets

    Only meant for small inputs; it serves as an independent check of is_molecule.
    """
    U = as_subset(U)
    P = U.host
    closed = _closed_subsets(P, U.members)
    memo: Dict[Members, bool] = {}

    def decide(members: Members) -> bool:
        if members in memo:
            return memo[members]
        maximal = maximal_members(P, members)
        verdict = len(maximal) == 1
        if not verdict and maximal:
            for first in closed:
                if not first or not first < members:
                    continue
                for k in range(subset_dim(P, members)):
                    rest = (members - first) | boundary_members(P, first, k, Sign.PLUS)
                    second = closure_members(P, rest)
                    if second == members or (first | second) != members:
                        continue
                    if is_split(P, first, second, k) and decide(first) and decide(second):
                        verdict = True
                        break
                if verdict:
                    break
        memo[members] = verdict
        return verdict

    return decide(U.members)


def _closed_subsets(P: OrientedGradedPoset, members: Members) -> List[Members]:
    elements = sorted(members)
    found: List[Members] = []
    chosen = set()

    def extend(i: int):
        if i == len(elements):
            found.append(frozenset(chosen))
            return
        x = elements[i]
        if all(y in chosen for y in P.faces(x)):
            chosen.add(x)
            extend(i + 1)
            chosen.discard(x)
        extend(i + 1)

    extend(0)
    return found


def is_submolecule(V: ClosedSubset, U: SubsetLike, budget: Optional[SearchBudget] = None) -> bool:
    """
    Decide V ⊑ U by searching all decompositions of U for a node labelled V

    Raises:
        NotAMolecule: when U is not a molecule
        Indeterminate: when the search budget runs out
    """
    U = as_subset(U)
    P = U.host
    if V.host is not P and V.host != P:
        raise HostMismatch("submolecule candidate belongs to a different poset")
    budget = budget or SearchBudget(label="submolecule search")
    if _decompose(P, U.members, budget) is None:
        raise NotAMolecule("is_submolecule needs a molecule", locus=U.ids)
    target = V.members
    memo: Dict[Members, bool] = {}

    def search(members: Members) -> bool:
        if members == target:
            return True
        if not target <= members:
            return False
        if members in memo:
            return memo[members]
        budget.check()
        found = False
        for k in range(subset_dim(P, members) - 1, -1, -1):
            for first, second in candidate_splits(P, members, k):
                if not (target <= first or target <= second):
                    continue
                if _decompose(P, first, budget) is None or _decompose(P, second, budget) is None:
                    continue
                if (target <= first and search(first)) or (target <= second and search(second)):
                    found = True
                    break
            if found:
                break
        memo[members] = found
        return found

    return search(U.members)


def is_spherical_submolecule(V: ClosedSubset, U: SubsetLike, budget: Optional[SearchBudget] = None) -> bool:
    return is_submolecule(V, U, budget) and has_spherical_boundary(V, budget)


# ============ Sphericity and complexes ============

def spherical_members(P: OrientedGradedPoset, members: Members) -> bool:
    for k in range(subset_dim(P, members)):
        meet = boundary_members(P, members, k, Sign.PLUS) & boundary_members(P, members, k, Sign.MINUS)
        if meet != boundary_members(P, members, k - 1, None):
            return False
    return True


def has_spherical_boundary(U: SubsetLike, budget: Optional[SearchBudget] = None) -> bool:
    """
    Check ∂ₖ⁺U ∩ ∂ₖ⁻U = ∂ₖ₋₁U for every k below dim U

    Raises:
        NotAMolecule: when U is not a molecule
    """
    U = as_subset(U)
    if is_molecule(U, budget) is None:
        raise NotAMolecule("sphericity is only defined for molecules", locus=U.ids)
    return spherical_members(U.host, U.members)


def check_complex(P: OrientedGradedPoset, level: str = 'regular', budget: Optional[SearchBudget] = None) -> ComplexReport:
    """
    Check the directed-complex axioms, and optionally regularity, element by element

    Args:
        P: Poset to check
        level: 'directed' or 'regular'

    Returns:
        ComplexReport naming the first failing element
    """
    if level not in ('directed', 'regular'):
        raise ValueError(f"unknown level {level!r}")
    budget = budget or SearchBudget(label="complex check")
    for x in range(len(P)):
        n = P.dims[x]
        if n == 0:
            continue
        for alpha in (Sign.MINUS, Sign.PLUS):
            face = element_boundary(P, x, n - 1, alpha)
            if _decompose(P, face, budget) is None:
                return ComplexReport(False, P.id_of(x), f"boundary {alpha.char} is not a molecule")
            for beta in (Sign.MINUS, Sign.PLUS):
                if boundary_members(P, face, n - 2, beta) != element_boundary(P, x, n - 2, beta):
                    return ComplexReport(False, P.id_of(x), f"globularity fails for {beta.char}{alpha.char}")
        if level == 'regular' and not spherical_members(P, P.down(x)):
            return ComplexReport(False, P.id_of(x), "atom does not have spherical boundary")
    return ComplexReport(True)


# ============ Layerings, splits, merger trees ============

def _top_cells(P: OrientedGradedPoset, members: Members) -> List[int]:
    n = subset_dim(P, members)
    return sorted(x for x in members if P.dims[x] == n)


def layering(U: SubsetLike, budget: Optional[SearchBudget] = None) -> List[int]:
    """
    Order the top-dimensional elements so that every prefix cuts U as Ũ₁ #ₙ₋₁ Ũ₂

    Returns:
        Element indices x₁ ... xₘ

    Raises:
        NoLayering: when no linear extension of the precedence order works
    """
    U = as_subset(U)
    P, members = U.host, U.members
    n = subset_dim(P, members)
    cells = _top_cells(P, members)
    if any(P.dims[x] != n for x in maximal_members(P, members)):
        raise NoLayering("layerings need a pure subset", locus=U.ids)
    if len(cells) <= 1:
        return cells
    graph = precedence_graph(P, cells, n - 1)
    if not nx.is_directed_acyclic_graph(graph):
        raise NoLayering("top cells precede each other cyclically", locus=U.ids)
    budget = budget or SearchBudget(label="layering search")
    lower = boundary_members(P, members, n - 1, Sign.MINUS)
    upper = boundary_members(P, members, n - 1, Sign.PLUS)
    for order in nx.all_topological_sorts(graph):
        budget.check()
        ok = True
        for i in range(1, len(order)):
            first = closure_members(P, order[:i]) | lower
            second = closure_members(P, order[i:]) | upper
            if not is_split(P, first, second, n - 1):
                ok = False
                break
        if ok:
            return list(order)
    raise NoLayering("no linear extension of the precedence order is a layering", locus=U.ids)


def binary_splits(U: SubsetLike, budget: Optional[SearchBudget] = None) -> List[BinarySplit]:
    """
    All binary splits of a molecule with spherical boundary

    Returns:
        List of BinarySplit; empty when U is unsplittable

    Raises:
        NotSpherical: when U does not have spherical boundary
    """
    U = as_subset(U)
    budget = budget or SearchBudget(label="split search")
    if not has_spherical_boundary(U, budget):
        raise NotSpherical("binary splits need spherical boundary", locus=U.ids)
    P, members = U.host, U.members
    n = subset_dim(P, members)
    cells = _top_cells(P, members)
    if len(cells) < 2:
        return []
    lower = boundary_members(P, members, n - 1, Sign.MINUS)
    upper = boundary_members(P, members, n - 1, Sign.PLUS)
    splits = []
    for A in down_sets(precedence_graph(P, cells, n - 1)):
        budget.check()
        first = closure_members(P, A)
        second = closure_members(P, [x for x in cells if x not in A])
        first_ext, second_ext = first | lower, second | upper
        if (first & second) - (boundary_members(P, first, n - 1, Sign.PLUS)
                               & boundary_members(P, second, n - 1, Sign.MINUS)):
            continue
        if not is_split(P, first_ext, second_ext, n - 1):
            continue
        parts = [ClosedSubset(P, s) for s in (first, second, first_ext, second_ext)]
        if any(_decompose(P, part.members, budget) is None for part in parts):
            continue
        if not (spherical_members(P, first) and spherical_members(P, second)):
            continue
        if not (is_submolecule(parts[0], parts[2], budget) and is_submolecule(parts[1], parts[3], budget)):
            continue
        splits.append(BinarySplit(*parts))
    logger.debug("found %d binary splits", len(splits))
    return splits


def merger_tree(U: SubsetLike, budget: Optional[SearchBudget] = None) -> MergerTree:
    """
    Merger tree obtained by splitting greedily until every leaf is unsplittable

    Raises:
        NotSpherical: when U does not have spherical boundary
    """
    U = as_subset(U)
    budget = budget or SearchBudget(label="merger tree")
    splits = binary_splits(U, budget)
    if not splits:
        return MergerTree(U)
    split = splits[0]
    return MergerTree(U, (merger_tree(split.first, budget), merger_tree(split.second, budget)))
