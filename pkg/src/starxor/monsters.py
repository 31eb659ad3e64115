"""Monster automata: one letter per transformation tuple of the state sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .automata import Dfa
from .transforms import (
    LimitExceeded,
    Transformation,
    enumerate_all,
    transformation_count,
)

DEFAULT_LETTER_CAP = 10**6


@dataclass(frozen=True)
class PairLetter:
    """A shared-alphabet letter for two automata: one transformation each."""

    first: Transformation
    second: Transformation

    def render(self) -> str:
        return f"({self.first.render()},{self.second.render()})"


@dataclass(frozen=True)
class MonsterSpec:
    """Sizes and final sets for a family of monsters sharing one alphabet."""

    sizes: tuple[int, ...]
    finals: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "finals", tuple(frozenset(f) for f in self.finals))
        if not self.sizes:
            raise ValueError("at least one automaton size is required")
        if len(self.finals) != len(self.sizes):
            raise ValueError("one final set per size is required")
        for n, f in zip(self.sizes, self.finals):
            if n < 1:
                raise ValueError("sizes must be at least 1")
            if any(not 0 <= q < n for q in f):
                raise ValueError(f"final state out of range for size {n}: {sorted(f)}")

    @classmethod
    def pair(
        cls,
        n1: int,
        n2: int,
        finals1: Iterable[int],
        finals2: Iterable[int],
    ) -> "MonsterSpec":
        return cls((n1, n2), (frozenset(finals1), frozenset(finals2)))

    def letter_total(self) -> int:
        total = 1
        for n in self.sizes:
            total *= transformation_count(n)
        return total


def monster(spec: MonsterSpec, cap_letters: int = DEFAULT_LETTER_CAP) -> tuple[Dfa, ...]:
    """The monsters of spec, one per size, sharing the product alphabet.

    Letters are tuples of transformations, enumerated in lexicographic
    (first, second, ...) order; coordinate i acts on automaton i by
    delta(q, letter) = letter[i](q). Every automaton starts in state 0.
    """
    total = spec.letter_total()
    if total > cap_letters:
        raise LimitExceeded(f"{total} letters exceed the cap of {cap_letters}")
    per_coord = [enumerate_all(n, limit=cap_letters) for n in spec.sizes]
    letters = list(itertools.product(*per_coord))
    if len(spec.sizes) == 1:
        labels = tuple(combo[0].render() for combo in letters)
    else:
        labels = tuple(
            "(" + ",".join(t.render() for t in combo) + ")"
            for combo in letters
        )
    out = []
    for coord, n in enumerate(spec.sizes):
        delta = tuple(
            tuple(combo[coord](q) for combo in letters)
            for q in range(n)
        )
        out.append(Dfa(len(letters), n, 0, spec.finals[coord], delta, labels))
    return tuple(out)


def monster1(
    n: int,
    finals: Iterable[int],
    cap_letters: int = DEFAULT_LETTER_CAP,
) -> Dfa:
    """The single monster on n states with the given finals: alphabet n^n."""
    return monster(MonsterSpec((n,), (frozenset(finals),)), cap_letters)[0]


def monster2(
    spec: MonsterSpec,
    cap_letters: int = DEFAULT_LETTER_CAP,
) -> tuple[Dfa, Dfa]:
    """The two monsters of a k=2 spec, sharing the pair alphabet."""
    if len(spec.sizes) != 2:
        raise ValueError("monster2 needs exactly two sizes")
    pair = monster(spec, cap_letters)
    return pair[0], pair[1]


def letter_index(spec: MonsterSpec, letter: PairLetter | Iterable[Transformation]) -> int:
    """Rank of a shared-alphabet letter in the lexicographic enumeration."""
    if isinstance(letter, PairLetter):
        combo: tuple[Transformation, ...] = (letter.first, letter.second)
    else:
        combo = tuple(letter)
    if len(combo) != len(spec.sizes):
        raise ValueError("letter arity does not match spec.sizes")
    index = 0
    for t, n in zip(combo, spec.sizes):
        if t.n != n:
            raise ValueError(f"coordinate on {t.n} states where {n} expected")
        rank = 0
        for img in t.images:
            rank = rank * n + img
        index = index * transformation_count(n) + rank
    return index
