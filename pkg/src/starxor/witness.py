"""The fixed 17-letter witness alphabet and the pair of automata it drives."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .automata import Dfa, minimize
from .modifiers import DEFAULT_STATE_CAP, stx
from .monsters import PairLetter
from .reports import ExperimentReport
from .tableaux import predicted_complexity
from .transforms import LimitExceeded, cycle, identity, point_map


@dataclass(frozen=True)
class WitnessAlphabet:
    n1: int
    n2: int
    letters: tuple[PairLetter, ...]


def sigma_prime(n1: int, n2: int) -> WitnessAlphabet:
    """Seventeen pair letters: five cycles, six transpositions, six point maps.

    The list is fixed for all sizes. Degenerate supports (empty or singleton)
    give identity coordinates and small sizes make some letters coincide;
    duplicates are kept so the alphabet always has exactly 17 letters.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("the witness alphabet needs both sizes at least 2")
    one, two = identity(n1), identity(n2)
    raw = [
        (cycle(n1, range(0, n1 - 1)), two),
        (cycle(n1, range(1, n1 - 1)), two),
        (one, cycle(n2, range(1, n2 - 1))),
        (cycle(n1, range(1, n1)), two),
        (one, cycle(n2, range(1, n2))),
        (cycle(n1, (0, n1 - 1)), two),
        (one, cycle(n2, (0, n2 - 1))),
        (cycle(n1, (0, 1)), cycle(n2, (0, 1))),
        (cycle(n1, (0, 1)), two),
        (one, cycle(n2, (0, 1))),
        (cycle(n1, (n1 - 2, n1 - 1)), two),
        (point_map(n1, 1, 0), two),
        (one, point_map(n2, 1, 0)),
        (point_map(n1, n1 - 2, n1 - 1), two),
        (one, point_map(n2, n2 - 2, n2 - 1)),
        (point_map(n1, n1 - 1, 0), two),
        (one, point_map(n2, n2 - 1, 0)),
    ]
    return WitnessAlphabet(n1, n2, tuple(PairLetter(f, g) for f, g in raw))


def witness_pair(n1: int, n2: int) -> tuple[Dfa, Dfa]:
    """The 17-letter automata: finals {n1-1} on the first, {0} on the second."""
    alphabet = sigma_prime(n1, n2)
    labels = tuple(letter.render() for letter in alphabet.letters)
    first = Dfa(
        len(alphabet.letters),
        n1,
        0,
        frozenset({n1 - 1}),
        tuple(
            tuple(letter.first(q) for letter in alphabet.letters)
            for q in range(n1)
        ),
        labels,
    )
    second = Dfa(
        len(alphabet.letters),
        n2,
        0,
        frozenset({0}),
        tuple(
            tuple(letter.second(q) for letter in alphabet.letters)
            for q in range(n2)
        ),
        labels,
    )
    return first, second


def verify_witness(
    n1: int,
    n2: int,
    cap_states: int = DEFAULT_STATE_CAP,
) -> ExperimentReport:
    """Build the witness star-of-xor, minimize, compare with the prediction."""
    t0 = time.perf_counter()
    predicted = predicted_complexity(n1, n2)
    parameters = {"n1": n1, "n2": n2, "method": "witness"}
    try:
        first, second = witness_pair(n1, n2)
        measured = minimize(stx(first, second, cap_states=cap_states)).state_count
    except LimitExceeded as exc:
        return ExperimentReport(
            command="verify-witness",
            parameters=parameters,
            measured=None,
            predicted=predicted,
            verdict="skipped",
            wall_time_ms=(time.perf_counter() - t0) * 1000,
            note=str(exc),
        )
    return ExperimentReport(
        command="verify-witness",
        parameters=parameters,
        measured=measured,
        predicted=predicted,
        verdict="pass" if measured == predicted else "fail",
        wall_time_ms=(time.perf_counter() - t0) * 1000,
    )
