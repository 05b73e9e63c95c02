"""
Grammatical labelings of permutation slots.

Slot i (1 <= i <= n) sits between sigma_{i-1} and sigma_i with sigma_0 = 0,
and slot n+1 follows sigma_n. Inserting n+1 into a slot rewrites its label
by the matching grammar rule.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import MalformedPermutation, SlotOutOfRange
from .grammar import DUMONT, DUMONT_B, Grammar
from .perms import Permutation, all_permutations
from .poly import LaurentPolynomial, Monomial

logger = logging.getLogger(__name__)

LABELS = ('a', 'b', 'x', 'y', 'z')

HistoryStep = Tuple[int, str]


class Variant(str, Enum):
    """L labels left successions; R labels interior successions and marks sigma_1 = 1 with b."""
    L = 'L'
    R = 'R'

    @property
    def grammar(self) -> Grammar:
        return DUMONT if self is Variant.L else DUMONT_B


@dataclass(frozen=True)
class SlotLabeling:
    permutation: Permutation
    labels: Tuple[str, ...]
    variant: Variant = Variant.L

    def __post_init__(self):
        if len(self.labels) != self.permutation.n + 1:
            raise ValueError(
                f"{len(self.labels)} labels for {self.permutation.n + 1} slots of {self.permutation}"
            )

    def label(self, slot: int) -> str:
        _check_slot(self.permutation, slot)
        return self.labels[slot - 1]

    def count(self, symbol: str, first: int = 1, last: Optional[int] = None) -> int:
        """Occurrences of symbol among slots first..last inclusive."""
        last = len(self.labels) if last is None else last
        return sum(1 for label in self.labels[first - 1:last] if label == symbol)

    def counts(self) -> Dict[str, int]:
        return {symbol: self.count(symbol) for symbol in LABELS}

    def slots_with(self, symbol: str) -> List[int]:
        return [slot for slot, label in enumerate(self.labels, 1) if label == symbol]

    @property
    def a_slot(self) -> int:
        slot, = self.slots_with('a')
        return slot

    def weight(self) -> LaurentPolynomial:
        return weight(self)

    def to_text(self) -> str:
        """`0 x 2 x 6 y 3 ... 9 a 7 y`: elements interleaved with slot labels."""
        parts = ['0']
        for label, value in zip(self.labels, self.permutation.word):
            parts.extend((label, str(value)))
        parts.append(self.labels[-1])
        return ' '.join(parts)

    def to_json(self) -> Dict:
        return {
            'permutation': list(self.permutation.word),
            'variant': self.variant.value,
            'labels': list(self.labels),
            'weight': str(self.weight()),
        }

    def __str__(self) -> str:
        return self.to_text()


def _check_slot(p: Permutation, slot: int) -> None:
    if not 1 <= slot <= p.n + 1:
        raise SlotOutOfRange(f"Slot {slot} outside 1..{p.n + 1} for {p}")


def _slot_label(p: Permutation, slot: int, variant: Variant) -> str:
    n = p.n
    before = p.value(slot - 1)
    if before == n:
        return 'a'
    if slot == n + 1:
        return 'y'
    after = p.value(slot)
    if after >= before + 2:
        return 'x'
    if after == before + 1:
        return 'b' if variant is Variant.R and slot == 1 else 'z'
    return 'y'


def label_slots(p: Permutation, variant: Variant = Variant.L) -> SlotLabeling:
    if p.n < 1:
        raise MalformedPermutation("Labeling needs a permutation of size at least 1")
    variant = Variant(variant)
    labels = tuple(_slot_label(p, slot, variant) for slot in range(1, p.n + 2))
    return SlotLabeling(p, labels, variant)


def weight(labeling: SlotLabeling) -> LaurentPolynomial:
    exponents: Dict[str, int] = {}
    for label in labeling.labels:
        exponents[label] = exponents.get(label, 0) + 1
    return LaurentPolynomial.monomial(Monomial.from_exponents(exponents))


def insert_at(p: Permutation, slot: int) -> Permutation:
    """Splice n+1 into the given slot."""
    _check_slot(p, slot)
    word = p.word
    return Permutation(word[:slot - 1] + (p.n + 1,) + word[slot - 1:])


def predicted_weight(labeling: SlotLabeling, slot: int) -> LaurentPolynomial:
    """Weight after inserting into slot, as the grammar rule for its label predicts."""
    symbol = labeling.label(slot)
    image = labeling.variant.grammar.rule(symbol)
    lowered = labeling.weight() * LaurentPolynomial.variable(symbol) ** -1
    return lowered * image


def transition_mismatches(p: Permutation, variant: Variant = Variant.L) -> List[int]:
    """Slots of p whose insertion disagrees with the grammar rule of its label."""
    labeling = label_slots(p, variant)
    bad = []
    for slot in range(1, p.n + 2):
        grown = label_slots(insert_at(p, slot), variant)
        if grown.weight() != predicted_weight(labeling, slot):
            bad.append(slot)
    return bad


def remove_max(p: Permutation) -> Tuple[Permutation, int]:
    """Delete n from sigma; returns the reduced permutation and the slot n occupied."""
    slot = p.position(p.n)
    word = tuple(v for v in p.word if v != p.n)
    return Permutation(word), slot


def extract_history(p: Permutation) -> List[HistoryStep]:
    """(slot, L-label) for each insertion of k = 2..n that builds p from 1."""
    if p.n < 1:
        raise MalformedPermutation("History needs a permutation of size at least 1")
    steps = []
    current = p
    while current.n > 1:
        reduced, slot = remove_max(current)
        steps.append((slot, label_slots(reduced, Variant.L).label(slot)))
        current = reduced
    steps.reverse()
    logger.debug("history of %s: %s", p, steps)
    return steps


def replay_history(history: Iterable[HistoryStep]) -> Permutation:
    p = Permutation((1,))
    for slot, _ in history:
        p = insert_at(p, slot)
    return p


def weight_sum(n: int, variant: Variant = Variant.L) -> LaurentPolynomial:
    """Sum of labeling weights over S_n; equals D^n(a), or D^{n-1}(ab) for variant R."""
    variant = Variant(variant)
    total = LaurentPolynomial.zero()
    for p in all_permutations(n):
        total = total + label_slots(p, variant).weight()
    return total
