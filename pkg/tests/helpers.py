"""Shared oracles for the tests, independent of the package's own algorithms."""

from __future__ import annotations

import random

from starxor import Dfa, accepts


def random_dfa(
    rng: random.Random,
    max_states: int = 4,
    max_letters: int = 4,
) -> Dfa:
    n = rng.randint(1, max_states)
    width = rng.randint(1, max_letters)
    delta = tuple(
        tuple(rng.randrange(n) for _ in range(width))
        for _ in range(n)
    )
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(width, n, rng.randrange(n), finals, delta)


def random_dfa_over(
    rng: random.Random,
    letter_count: int,
    max_states: int = 4,
) -> Dfa:
    n = rng.randint(1, max_states)
    delta = tuple(
        tuple(rng.randrange(n) for _ in range(letter_count))
        for _ in range(n)
    )
    finals = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(letter_count, n, rng.randrange(n), finals, delta)


def random_renaming(
    rng: random.Random,
    letter_count: int,
    max_new: int = 4,
) -> tuple[int, ...]:
    return tuple(
        rng.randrange(letter_count)
        for _ in range(rng.randint(1, max_new))
    )


def distinguishable_classes(a: Dfa) -> int:
    """Minimal state count for L(a), by the pair-marking table method.

    A different algorithm family from signature refinement: mark pairs with
    differing finality, propagate backwards to a fixpoint, count classes of
    reachable states.
    """
    reachable = {a.initial}
    frontier = [a.initial]
    while frontier:
        q = frontier.pop()
        for t in a.delta[q]:
            if t not in reachable:
                reachable.add(t)
                frontier.append(t)
    states = sorted(reachable)
    marked: set[tuple[int, int]] = set()
    for i, p in enumerate(states):
        for q in states[i + 1:]:
            if (p in a.finals) != (q in a.finals):
                marked.add((p, q))
    changed = True
    while changed:
        changed = False
        for i, p in enumerate(states):
            for q in states[i + 1:]:
                if (p, q) in marked:
                    continue
                for j in range(a.letter_count):
                    x, y = a.delta[p][j], a.delta[q][j]
                    if x > y:
                        x, y = y, x
                    if x != y and (x, y) in marked:
                        marked.add((p, q))
                        changed = True
                        break
    class_of: dict[int, int] = {}
    count = 0
    for i, p in enumerate(states):
        for q in states[:i]:
            if (q, p) not in marked:
                class_of[p] = class_of[q]
                break
        else:
            class_of[p] = count
            count += 1
    return count


def star_membership(a: Dfa, word: tuple[int, ...]) -> bool:
    """Does the word split into factors of L(a)? Prefix dynamic programming."""
    k = len(word)
    ok = [False] * (k + 1)
    ok[0] = True
    for j in range(1, k + 1):
        ok[j] = any(ok[i] and accepts(a, word[i:j]) for i in range(j))
    return ok[k]


def all_words(letter_count: int, up_to: int):
    """Every word over range(letter_count) of length at most up_to."""
    stack: list[tuple[int, ...]] = [()]
    while stack:
        w = stack.pop()
        yield w
        if len(w) < up_to:
            for j in range(letter_count):
                stack.append(w + (j,))
