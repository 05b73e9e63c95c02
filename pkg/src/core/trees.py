"""
Complete increasing binary trees with a, x, y, z leaf labels and their
correspondence with permutations in cycle notation.

Cycle minima form the right spine. A singleton cycle's minimum carries a
left z-leaf; otherwise the rest of its cycle word hangs to the left as a
min-rooted tree read in order. The spine ends in the a-leaf.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import MalformedTree, NoSuchLeaf
from .perms import CycleForm, check_size
from .poly import LaurentPolynomial, Monomial

logger = logging.getLogger(__name__)

LEAF_LABELS = ('a', 'x', 'y', 'z')
SIDES = ('L', 'R')

Child = Union[int, str]


@dataclass(frozen=True, order=True)
class LeafPosition:
    vertex: int
    side: str

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"Leaf side must be 'L' or 'R', got {self.side!r}")

    def __str__(self) -> str:
        return f"{self.vertex}{self.side}"


@dataclass(frozen=True)
class LabeledTree:
    """children[v - 1] is the (left, right) pair of internal vertex v."""
    children: Tuple[Tuple[Child, Child], ...]

    def __post_init__(self):
        object.__setattr__(self, 'children', tuple(tuple(pair) for pair in self.children))
        _validate(self.children)

    @classmethod
    def from_mapping(cls, children: Dict[int, Tuple[Child, Child]]) -> 'LabeledTree':
        n = len(children)
        if sorted(children) != list(range(1, n + 1)):
            raise MalformedTree(f"Vertices must be exactly 1..{n}, got {sorted(children)}")
        return cls(tuple(children[v] for v in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> 'LabeledTree':
        from ..utils.parsing import parse_tree_text
        children: Dict[int, Tuple[Child, Child]] = {}

        def walk(node) -> Child:
            if isinstance(node, str):
                return node
            vertex, left, right = node
            if vertex in children:
                raise MalformedTree(f"Vertex {vertex} appears twice")
            children[vertex] = None
            children[vertex] = (walk(left), walk(right))
            return vertex

        walk(parse_tree_text(text))
        return cls.from_mapping(children)

    @property
    def n(self) -> int:
        return len(self.children)

    def child(self, pos: LeafPosition) -> Child:
        if not 1 <= pos.vertex <= self.n:
            raise NoSuchLeaf(f"No vertex {pos.vertex} in a tree on [{self.n}]")
        left, right = self.children[pos.vertex - 1]
        return left if pos.side == 'L' else right

    def label_at(self, pos: LeafPosition) -> str:
        label = self.child(pos)
        if not isinstance(label, str):
            raise NoSuchLeaf(f"{pos} holds vertex {label}, not a leaf")
        return label

    @property
    def spine(self) -> List[int]:
        path = [1]
        while isinstance(self.children[path[-1] - 1][1], int):
            path.append(self.children[path[-1] - 1][1])
        return path

    def parent(self, vertex: int) -> Optional[LeafPosition]:
        """Position of vertex under its parent; None for the root."""
        for v, pair in enumerate(self.children, 1):
            for side, child in zip(SIDES, pair):
                if child == vertex:
                    return LeafPosition(v, side)
        return None

    def leaves(self) -> List[Tuple[LeafPosition, str]]:
        return [
            (LeafPosition(v, side), child)
            for v, pair in enumerate(self.children, 1)
            for side, child in zip(SIDES, pair)
            if isinstance(child, str)
        ]

    def leaf_positions(self, label: str) -> List[LeafPosition]:
        return [pos for pos, leaf in self.leaves() if leaf == label]

    @property
    def a_leaf(self) -> LeafPosition:
        return LeafPosition(self.spine[-1], 'R')

    def to_text(self, vertex: int = 1) -> str:
        parts = [str(vertex)]
        for child in self.children[vertex - 1]:
            parts.append(self.to_text(child) if isinstance(child, int) else child)
        return '(' + ' '.join(parts) + ')'

    def to_json(self, vertex: int = 1) -> Dict[str, Any]:
        left, right = self.children[vertex - 1]
        return {
            'vertex': vertex,
            'left': self.to_json(left) if isinstance(left, int) else left,
            'right': self.to_json(right) if isinstance(right, int) else right,
        }

    def __str__(self) -> str:
        return self.to_text()


def _validate(children: Sequence[Tuple[Child, Child]]) -> None:
    n = len(children)
    if n < 1:
        raise MalformedTree("A tree needs at least one vertex")

    parents: Dict[int, int] = {}
    for v, pair in enumerate(children, 1):
        if len(pair) != 2:
            raise MalformedTree(f"Vertex {v} must have exactly two children")
        for child in pair:
            if isinstance(child, str):
                if child not in LEAF_LABELS:
                    raise MalformedTree(f"Unknown leaf label {child!r} under vertex {v}")
            elif isinstance(child, int) and not isinstance(child, bool):
                if not v < child <= n:
                    raise MalformedTree(f"Child {child} of vertex {v} breaks increasing order")
                if child in parents:
                    raise MalformedTree(f"Vertex {child} has two parents")
                parents[child] = v
            else:
                raise MalformedTree(f"Bad child {child!r} under vertex {v}")
    if set(parents) != set(range(2, n + 1)):
        raise MalformedTree("Every vertex except the root must have a parent")

    spine = [1]
    while isinstance(children[spine[-1] - 1][1], int):
        spine.append(children[spine[-1] - 1][1])
    on_spine = set(spine)

    for v, (left, right) in enumerate(children, 1):
        if v in on_spine:
            if isinstance(left, str) and left != 'z':
                raise MalformedTree(f"Spine vertex {v} has left leaf {left!r}, expected z")
            if isinstance(right, str) and right != 'a':
                raise MalformedTree(f"Spine vertex {v} has right leaf {right!r}, expected a")
        else:
            if isinstance(left, str) and left != 'x':
                raise MalformedTree(f"Vertex {v} has left leaf {left!r}, expected x")
            if isinstance(right, str) and right != 'y':
                raise MalformedTree(f"Vertex {v} has right leaf {right!r}, expected y")


def base_tree() -> LabeledTree:
    """Vertex 1 with a left z-leaf and a right a-leaf."""
    return LabeledTree((('z', 'a'),))


def _hang(word: Sequence[int], children: Dict[int, Tuple[Child, Child]]) -> int:
    """Min-rooted tree whose in-order reading is word; empty sides become x / y leaves."""
    k = word.index(min(word))
    root = word[k]
    left = _hang(word[:k], children) if k > 0 else 'x'
    right = _hang(word[k + 1:], children) if k + 1 < len(word) else 'y'
    children[root] = (left, right)
    return root


def encode(c: CycleForm) -> LabeledTree:
    cycles = c.cycles
    children: Dict[int, Tuple[Child, Child]] = {}
    for idx, cycle in enumerate(cycles):
        right: Child = cycles[idx + 1][0] if idx + 1 < len(cycles) else 'a'
        left: Child = _hang(cycle[1:], children) if len(cycle) > 1 else 'z'
        children[cycle[0]] = (left, right)
    return LabeledTree.from_mapping(children)


def _in_order(t: LabeledTree, vertex: int) -> Iterator[int]:
    left, right = t.children[vertex - 1]
    if isinstance(left, int):
        yield from _in_order(t, left)
    yield vertex
    if isinstance(right, int):
        yield from _in_order(t, right)


def decode(t: LabeledTree) -> CycleForm:
    cycles = []
    for vertex in t.spine:
        left = t.children[vertex - 1][0]
        rest = tuple(_in_order(t, left)) if isinstance(left, int) else ()
        cycles.append((vertex,) + rest)
    return CycleForm(tuple(cycles))


def grow(t: LabeledTree, leaf: LeafPosition) -> LabeledTree:
    """Turn a leaf into vertex n+1: a becomes (z, a), any other leaf (x, y)."""
    label = t.label_at(leaf)
    new = t.n + 1
    children = {v: pair for v, pair in enumerate(t.children, 1)}
    left, right = children[leaf.vertex]
    children[leaf.vertex] = (new, right) if leaf.side == 'L' else (left, new)
    children[new] = ('z', 'a') if label == 'a' else ('x', 'y')
    return LabeledTree.from_mapping(children)


def shrink(t: LabeledTree) -> Tuple[LabeledTree, LeafPosition]:
    """Remove vertex n; returns the re-encoded tree on [n-1] and where n was attached."""
    if t.n < 2:
        raise MalformedTree("Cannot remove the only vertex of a tree")
    position = t.parent(t.n)
    cycles = [tuple(v for v in cycle if v != t.n) for cycle in decode(t).cycles]
    reduced = encode(CycleForm(tuple(cycle for cycle in cycles if cycle)))
    return reduced, position


def tree_weight(t: LabeledTree) -> LaurentPolynomial:
    exponents: Dict[str, int] = {}
    for _, label in t.leaves():
        exponents[label] = exponents.get(label, 0) + 1
    return LaurentPolynomial.monomial(Monomial.from_exponents(exponents))


def _leaf_vertices(t: LabeledTree, label: str) -> FrozenSet[int]:
    return frozenset(pos.vertex for pos in t.leaf_positions(label))


def x_leaf_vertices(t: LabeledTree) -> FrozenSet[int]:
    return _leaf_vertices(t, 'x')


def y_leaf_vertices(t: LabeledTree) -> FrozenSet[int]:
    return _leaf_vertices(t, 'y')


def z_leaf_vertices(t: LabeledTree) -> FrozenSet[int]:
    return _leaf_vertices(t, 'z')


def all_trees(n: int) -> List[LabeledTree]:
    """Every tree on [n], grown from the base tree over all leaf choices."""
    check_size(n)
    if n < 1:
        raise ValueError("Trees need at least one vertex")
    level = [base_tree()]
    for _ in range(n - 1):
        level = [grow(t, pos) for t in level for pos, _ in t.leaves()]
    logger.debug("grew %d trees on [%d]", len(level), n)
    return level
