"""
Grammar-assisted bijection from permutations with a given set of left
succession values to permutations with the same set of fixed points.

The forward map replays a permutation's insertion history on the tree side:
each slot is paired with a leaf carrying the same label, and the tree grows
at the leaf paired with the slot the permutation grows at.
"""
import logging
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Dict, FrozenSet, List, Tuple

from .errors import Incoherent, NoSuchLeaf, SizeTooLarge
from .labeling import Variant, extract_history, insert_at, label_slots
from .perms import Permutation, all_permutations, from_cycles, to_cycles
from .trees import LabeledTree, LeafPosition, base_tree, decode, encode, grow, shrink, tree_weight

logger = logging.getLogger(__name__)

MAX_BIJECTION_SIZE = 8


@dataclass(frozen=True)
class CoherencePairing:
    """Slot index -> tree leaf, label for label."""
    slots: Dict[int, LeafPosition]

    def leaf_for(self, slot: int) -> LeafPosition:
        try:
            return self.slots[slot]
        except KeyError:
            raise Incoherent(f"Slot {slot} is not paired with any leaf") from None

    def slot_for(self, leaf: LeafPosition) -> int:
        for slot, pos in self.slots.items():
            if pos == leaf:
                return slot
        raise Incoherent(f"Leaf {leaf} is not paired with any slot")


def _leaf_for_slot(p: Permutation, t: LabeledTree, slot: int, label: str) -> LeafPosition:
    if label == 'a':
        return t.a_leaf
    if label in ('x', 'z'):
        return LeafPosition(p.value(slot), 'L')
    # a y-slot follows a descent top sigma_{i-1}
    return LeafPosition(p.value(slot - 1) + 1, 'R')


def pair(p: Permutation, t: LabeledTree) -> CoherencePairing:
    """The label-compatible slot/leaf pairing of a synchronized (sigma, T)."""
    labeling = label_slots(p, Variant.L)
    if labeling.weight() != tree_weight(t):
        raise Incoherent(
            f"Weights differ: {p} has {labeling.weight()}, tree {t} has {tree_weight(t)}"
        )
    slots: Dict[int, LeafPosition] = {}
    for slot, label in enumerate(labeling.labels, 1):
        pos = _leaf_for_slot(p, t, slot, label)
        try:
            found = t.label_at(pos)
        except NoSuchLeaf as exc:
            raise Incoherent(f"Slot {slot} ({label}) of {p}: {exc}") from exc
        if found != label:
            raise Incoherent(f"Slot {slot} of {p} is {label} but leaf {pos} of {t} is {found}")
        slots[slot] = pos
    if len(set(slots.values())) != len(slots):
        raise Incoherent(f"Two slots of {p} claim the same leaf of {t}")
    return CoherencePairing(slots)


@dataclass(frozen=True)
class TraceStep:
    size: int
    slot: int
    label: str
    leaf: LeafPosition
    labeling: str
    tree: str


def phi_trace(p: Permutation) -> List[TraceStep]:
    """Every intermediate (labeled permutation, tree) of the forward map."""
    perm = Permutation((1,))
    tree = base_tree()
    steps = [TraceStep(1, 0, '', tree.a_leaf, label_slots(perm).to_text(), tree.to_text())]
    for slot, label in extract_history(p):
        leaf = pair(perm, tree).leaf_for(slot)
        tree = grow(tree, leaf)
        perm = insert_at(perm, slot)
        logger.debug("insert %d at slot %d (%s) -> leaf %s", perm.n, slot, label, leaf)
        steps.append(TraceStep(perm.n, slot, label, leaf, label_slots(perm).to_text(), tree.to_text()))
    return steps


def companion_tree(p: Permutation) -> LabeledTree:
    """The tree grown in step with p."""
    tree = base_tree()
    perm = Permutation((1,))
    for slot, _ in extract_history(p):
        tree = grow(tree, pair(perm, tree).leaf_for(slot))
        perm = insert_at(perm, slot)
    return tree


def phi(p: Permutation) -> Permutation:
    return from_cycles(decode(companion_tree(p)))


def phi_inverse(q: Permutation) -> Permutation:
    if q.n < 1:
        raise ValueError("phi_inverse needs a permutation of size at least 1")
    tree = encode(to_cycles(q))
    positions: List[LeafPosition] = []
    while tree.n > 1:
        tree, pos = shrink(tree)
        positions.append(pos)

    perm = Permutation((1,))
    for pos in reversed(positions):
        slot = pair(perm, tree).slot_for(pos)
        perm = insert_at(perm, slot)
        tree = grow(tree, pos)
    return perm


@dataclass(frozen=True)
class CorrespondenceRow:
    subset: FrozenSet[int]
    source: Permutation
    image: Permutation
    source_stats: Tuple[int, int]
    image_stats: Tuple[int, int]

    def to_json(self) -> Dict:
        return {
            'I': sorted(self.subset),
            'sigma': str(self.source),
            'image': str(self.image),
            'image_cycles': str(self.image.to_cycles()),
            'jump_des': list(self.source_stats),
            'exc_drop': list(self.image_stats),
        }


def _subset_key(subset: FrozenSet[int]) -> Tuple[int, List[int]]:
    return len(subset), sorted(subset)


def correspondence_table(n: int) -> List[CorrespondenceRow]:
    """phi on S_n grouped by the left-succession value set, empty classes omitted."""
    rows = []
    for p in all_permutations(n):
        image = phi(p)
        rows.append(CorrespondenceRow(
            subset=p.set_stat('Lbar'),
            source=p,
            image=image,
            source_stats=(p.stat('jump'), p.stat('des')),
            image_stats=(image.stat('exc'), image.stat('drop')),
        ))
    rows.sort(key=lambda row: (_subset_key(row.subset), row.source.word))
    return rows


@dataclass
class BijectionReport:
    n: int
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _subsets(n: int):
    universe = range(1, n + 1)
    return chain.from_iterable(combinations(universe, k) for k in range(n + 1))


def verify_fixed_set_bijection(n: int) -> BijectionReport:
    """Check phi maps each left-succession class of S_n onto the fixed-set class of the same set."""
    if n > MAX_BIJECTION_SIZE:
        raise SizeTooLarge(f"Bijection verification is limited to n <= {MAX_BIJECTION_SIZE}, got {n}")
    report = BijectionReport(n)
    images = set()
    by_source: Dict[FrozenSet[int], int] = {}
    by_image: Dict[FrozenSet[int], int] = {}
    for p in all_permutations(n):
        image = phi(p)
        report.checked += 1
        images.add(image)
        lbar, fixed = p.set_stat('Lbar'), image.set_stat('F')
        by_source[lbar] = by_source.get(lbar, 0) + 1
        by_image[fixed] = by_image.get(fixed, 0) + 1
        if lbar != fixed:
            report.violations.append(f"{p}: Lbar {sorted(lbar)} but F(image) {sorted(fixed)}")
        if (p.stat('jump'), p.stat('des')) != (image.stat('exc'), image.stat('drop')):
            report.violations.append(f"{p}: (jump, des) not carried to (exc, drop) by {image}")
        if p.set_stat('Jumpbar') != image.set_stat('Excbar'):
            report.violations.append(f"{p}: Jumpbar not carried to Excbar by {image}")
        if phi_inverse(image) != p:
            report.violations.append(f"{p}: phi_inverse({image}) = {phi_inverse(image)}")
    if len(images) != report.checked:
        report.violations.append(f"phi is not injective on S_{n}")
    for subset in map(frozenset, _subsets(n)):
        if by_source.get(subset, 0) != by_image.get(subset, 0):
            report.violations.append(
                f"I = {sorted(subset)}: {by_source.get(subset, 0)} sources, "
                f"{by_image.get(subset, 0)} images"
            )
    if report.violations:
        logger.warning("fixed-set bijection fails at n=%d: %d violations", n, len(report.violations))
    return report
