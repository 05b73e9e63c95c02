"""
Permutations in one-line notation, their statistics and brute-force
distribution polynomials.
Every statistic honours the virtual boundary value sigma_0 = 0.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .errors import (
    MalformedCycles, MalformedPermutation, ParseError, SizeTooLarge, UnknownStatistic,
)
from .poly import VARIABLES, LaurentPolynomial, Monomial, from_exponent_counts, var

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 9

Word = Tuple[int, ...]


def _pairs_from_zero(w: Word) -> Iterator[Tuple[int, int]]:
    """(sigma_{i-1}, sigma_i) for 1 <= i <= n."""
    return zip((0,) + w, w)


def _interior_pairs(w: Word) -> Iterator[Tuple[int, int]]:
    """(sigma_i, sigma_{i+1}) for 1 <= i <= n - 1."""
    return zip(w, w[1:])


STATISTICS: Dict[str, Callable[[Word], int]] = {
    'exc': lambda w: sum(1 for i, v in enumerate(w, 1) if v > i),
    'drop': lambda w: sum(1 for i, v in enumerate(w, 1) if v < i),
    'fix': lambda w: sum(1 for i, v in enumerate(w, 1) if v == i),
    'asc': lambda w: sum(1 for u, v in _pairs_from_zero(w) if u < v),
    'des': lambda w: sum(1 for u, v in _interior_pairs(w) if u > v),
    'suc': lambda w: sum(1 for u, v in _interior_pairs(w) if u + 1 == v),
    'lsuc': lambda w: sum(1 for u, v in _pairs_from_zero(w) if u + 1 == v),
    'jump': lambda w: sum(1 for u, v in _pairs_from_zero(w) if v >= u + 2),
    # a jump at index 1 is not a big ascent
    'basc': lambda w: sum(1 for u, v in _interior_pairs(w) if v >= u + 2),
}

SET_STATISTICS: Dict[str, Callable[[Word], FrozenSet[int]]] = {
    'M': lambda w: frozenset(i for i, (u, v) in enumerate(_interior_pairs(w), 1) if u + 1 == v),
    'Mbar': lambda w: frozenset(u for u, v in _interior_pairs(w) if u + 1 == v),
    # index n is never part of G
    'G': lambda w: frozenset(i for i, v in enumerate(w[:-1], 1) if v == i),
    'F': lambda w: frozenset(i for i, v in enumerate(w, 1) if v == i),
    'Lbar': lambda w: frozenset(v for u, v in _pairs_from_zero(w) if u + 1 == v),
    'Jumpbar': lambda w: frozenset(v for u, v in _pairs_from_zero(w) if v >= u + 2),
    'Excbar': lambda w: frozenset(v for i, v in enumerate(w, 1) if v > i),
}

# class name -> (set statistic, whether I ranges over [n-1] rather than [n])
CLASSES: Dict[str, Tuple[str, bool]] = {
    'M_n': ('M', True),
    'Mbar_n': ('Mbar', True),
    'G_n': ('G', True),
    'F_n': ('F', False),
    'Lbar_n': ('Lbar', False),
}


@dataclass(frozen=True)
class Permutation:
    """One-line notation sigma_1 ... sigma_n of a bijection on [n]."""
    word: Word

    def __post_init__(self):
        word = tuple(self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise MalformedPermutation(f"Not a permutation of [{len(word)}]: {word}")
        object.__setattr__(self, 'word', word)

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        try:
            word = tuple(int(token) for token in text.replace(',', ' ').split())
        except ValueError:
            raise MalformedPermutation(f"Expected space-separated integers, got {text!r}") from None
        return cls(word)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def value(self, i: int) -> int:
        """sigma_i for 0 <= i <= n, with sigma_0 = 0."""
        return 0 if i == 0 else self.word[i - 1]

    def position(self, v: int) -> int:
        return self.word.index(v) + 1

    def stat(self, which: str) -> int:
        return stat(self, which)

    def set_stat(self, which: str) -> FrozenSet[int]:
        return set_stat(self, which)

    def inverse(self) -> 'Permutation':
        return inverse(self)

    def to_cycles(self) -> 'CycleForm':
        return to_cycles(self)

    def __str__(self) -> str:
        return ' '.join(str(v) for v in self.word)


@dataclass(frozen=True)
class CycleForm:
    """Cycles each led by its minimum, ordered by increasing minima."""
    cycles: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cycles = tuple(tuple(c) for c in self.cycles)
        elements = [v for c in cycles for v in c]
        if any(not c for c in cycles) or sorted(elements) != list(range(1, len(elements) + 1)):
            raise MalformedCycles(f"Cycles do not partition [{len(elements)}]: {cycles}")
        minima = [c[0] for c in cycles]
        if any(c[0] != min(c) for c in cycles) or minima != sorted(minima):
            raise MalformedCycles(f"Cycles are not in canonical order: {cycles}")
        object.__setattr__(self, 'cycles', cycles)

    @classmethod
    def canonical(cls, cycles: Iterable[Sequence[int]]) -> 'CycleForm':
        """Rotate each cycle to start at its minimum and sort by minima."""
        rotated = []
        for c in cycles:
            c = list(c)
            if not c:
                raise MalformedCycles("Empty cycle")
            k = c.index(min(c))
            rotated.append(tuple(c[k:] + c[:k]))
        return cls(tuple(sorted(rotated)))

    @classmethod
    def parse(cls, text: str) -> 'CycleForm':
        """Parse `(1 8 4 9 6)(2)(3 5)(7)`; cycles may start anywhere and come in any order."""
        from ..utils.parsing import parse_cycles_text
        try:
            cycles = parse_cycles_text(text)
        except ParseError as exc:
            raise MalformedCycles(str(exc)) from exc
        return cls.canonical(cycles)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def to_permutation(self) -> Permutation:
        return from_cycles(self)

    def __str__(self) -> str:
        return ''.join('(' + ' '.join(str(v) for v in c) + ')' for c in self.cycles)


def stat(p: Permutation, which: str) -> int:
    try:
        return STATISTICS[which](p.word)
    except KeyError:
        raise UnknownStatistic(
            f"Unknown statistic {which!r}; choose from {', '.join(STATISTICS)}"
        ) from None


def set_stat(p: Permutation, which: str) -> FrozenSet[int]:
    try:
        return SET_STATISTICS[which](p.word)
    except KeyError:
        raise UnknownStatistic(
            f"Unknown set statistic {which!r}; choose from {', '.join(SET_STATISTICS)}"
        ) from None


def inverse(p: Permutation) -> Permutation:
    word = [0] * p.n
    for i, v in enumerate(p.word, 1):
        word[v - 1] = i
    return Permutation(tuple(word))


def to_cycles(p: Permutation) -> CycleForm:
    seen = set()
    cycles = []
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        cycle = []
        v = start
        while v not in seen:
            seen.add(v)
            cycle.append(v)
            v = p.word[v - 1]
        cycles.append(tuple(cycle))
    return CycleForm(tuple(cycles))


def from_cycles(c: CycleForm) -> Permutation:
    word = [0] * c.n
    for cycle in c.cycles:
        for i, v in enumerate(cycle):
            word[v - 1] = cycle[(i + 1) % len(cycle)]
    return Permutation(tuple(word))


def check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"Size must be nonnegative, got {n}")
    if n > MAX_ENUMERATION_SIZE:
        raise SizeTooLarge(f"Exhaustive enumeration is limited to n <= {MAX_ENUMERATION_SIZE}, got {n}")


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    check_size(n)
    for word in _permutations(range(1, n + 1)):
        yield Permutation(word)


def _words(n: int) -> Iterator[Word]:
    check_size(n)
    return _permutations(range(1, n + 1))


def _check_spec(spec: Sequence[Tuple[str, str]]) -> Tuple[Tuple[str, str], ...]:
    spec = tuple((str(s), str(v)) for s, v in spec)
    for statistic, variable in spec:
        if statistic not in STATISTICS:
            raise UnknownStatistic(
                f"Unknown statistic {statistic!r}; choose from {', '.join(STATISTICS)}"
            )
        if variable not in VARIABLES:
            raise ValueError(f"Unknown variable {variable!r}")
    return spec


def distribution(n: int, spec: Sequence[Tuple[str, str]]) -> LaurentPolynomial:
    """Sum over S_n of the product of variable^statistic; n = 0 gives 1."""
    check_size(n)
    return _distribution(n, _check_spec(spec))


@lru_cache(maxsize=None)
def _distribution(n: int, spec: Tuple[Tuple[str, str], ...]) -> LaurentPolynomial:
    slots = [(STATISTICS[s], VARIABLES.index(v)) for s, v in spec]
    counts: Counter = Counter()
    for word in _words(n):
        vector = [0] * len(VARIABLES)
        for fn, idx in slots:
            vector[idx] += fn(word)
        counts[tuple(vector)] += 1
    logger.debug("distribution n=%d spec=%s: %d monomials", n, spec, len(counts))
    return from_exponent_counts(counts)


def parse_spec(text: str) -> List[Tuple[str, str]]:
    """`jump:x,des:y,suc:z` -> [('jump', 'x'), ('des', 'y'), ('suc', 'z')]."""
    spec = []
    for item in text.split(','):
        statistic, sep, variable = item.strip().partition(':')
        if not sep:
            raise UnknownStatistic(f"Expected statistic:variable, got {item.strip()!r}")
        spec.append((statistic.strip(), variable.strip()))
    return list(_check_spec(spec))


def filter_class(n: int, which: str, subset: Iterable[int]) -> List[Permutation]:
    """All sigma in S_n whose class statistic equals the given set exactly."""
    check_size(n)
    try:
        statistic, interior = CLASSES[which]
    except KeyError:
        raise UnknownStatistic(f"Unknown class {which!r}; choose from {', '.join(CLASSES)}") from None
    target = frozenset(subset)
    bound = n - 1 if interior else n
    if not target <= frozenset(range(1, bound + 1)):
        raise ValueError(f"{sorted(target)} is not a subset of [{bound}]")
    fn = SET_STATISTICS[statistic]
    return [Permutation(w) for w in _words(n) if fn(w) == target]


def class_sizes(n: int, statistic: str) -> Counter:
    """|{sigma : statistic(sigma) = I}| for every I that occurs."""
    if statistic not in SET_STATISTICS:
        raise UnknownStatistic(f"Unknown set statistic {statistic!r}")
    fn = SET_STATISTICS[statistic]
    return Counter(fn(w) for w in _words(n))


def derangement_counts(n: int) -> Tuple[int, int]:
    """(D_n, Q_n): permutations without fixed points, without successions."""
    check_size(n)
    fix, suc = STATISTICS['fix'], STATISTICS['suc']
    derangements = relative = 0
    for word in _words(n):
        derangements += fix(word) == 0
        relative += suc(word) == 0
    return derangements, relative


# -- named distribution polynomials --------------------------------------

def exc_drop_fix_polynomial(n: int) -> LaurentPolynomial:
    """F_n(x, y, z)."""
    return distribution(n, [('exc', 'x'), ('drop', 'y'), ('fix', 'z')])


def jump_des_lsuc_polynomial(n: int) -> LaurentPolynomial:
    """L_n(x, y, z)."""
    return distribution(n, [('jump', 'x'), ('des', 'y'), ('lsuc', 'z')])


def roselle_polynomial(n: int) -> LaurentPolynomial:
    """R_n(x, y, z) = sum x^jump y^des z^suc."""
    return distribution(n, [('jump', 'x'), ('des', 'y'), ('suc', 'z')])


def jump_lsuc_polynomial(n: int) -> LaurentPolynomial:
    """P*_n(x, z)."""
    return distribution(n, [('jump', 'x'), ('lsuc', 'z')])


def asc_suc_polynomial(n: int) -> LaurentPolynomial:
    """P_n(x, z)."""
    return distribution(n, [('asc', 'x'), ('suc', 'z')])


def eulerian_oracle(k: int) -> LaurentPolynomial:
    """sum over S_k of x^(exc+1) y^(k-exc); equals D^k(x) under x -> xy, y -> xy."""
    return var('x') * distribution(k, [('exc', 'x'), ('drop', 'y'), ('fix', 'y')])


def roselle_count(n: int, r: int, s: int) -> int:
    """P(n, r, s): permutations of [n] with r ascents and s successions."""
    coeff = asc_suc_polynomial(n).coefficient_of(Monomial.of(x=r, z=s))
    return int(coeff)


def roselle_star_count(n: int, r: int, s: int) -> int:
    """P*(n, r, s): permutations of [n] with r ascents and s left successions."""
    coeff = jump_lsuc_polynomial(n).coefficient_of(Monomial.of(x=r - s, z=s))
    return int(coeff)


# -- ascent decompositions ------------------------------------------------

def ascent_decomposition_holds(p: Permutation) -> bool:
    """asc = [sigma_1 = 1] + jump + suc."""
    starts_with_one = 1 if p.n and p.word[0] == 1 else 0
    return stat(p, 'asc') == starts_with_one + stat(p, 'jump') + stat(p, 'suc')


def literal_ascent_counterexamples(n: int) -> List[Permutation]:
    """sigma in S_n violating 1 + jump + suc = asc as literally stated."""
    bad = [p for p in all_permutations(n)
           if 1 + stat(p, 'jump') + stat(p, 'suc') != stat(p, 'asc')]
    if bad:
        logger.warning("1 + jump + suc = asc fails for %d of %d permutations of [%d], e.g. %s",
                       len(bad), sum(1 for _ in _words(n)), n, bad[0])
    return bad
