"""DFA toolkit: accessibility, minimization, equivalence, renaming, formats."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from starxor import (
    Dfa,
    accepts,
    accessible_part,
    export_dot,
    export_json,
    import_json,
    is_equivalent,
    minimize,
    nerode_partition,
    preimage_by_renaming,
    run,
)


@st.composite
def dfas(draw, max_states=5, max_letters=3):
    n = draw(st.integers(1, max_states))
    width = draw(st.integers(1, max_letters))
    delta = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in range(width))
        for _ in range(n)
    )
    finals = frozenset(
        q for q in range(n) if draw(st.booleans())
    )
    return Dfa(width, n, draw(st.integers(0, n - 1)), finals, delta)


def test_validation_catches_shape_errors():
    with pytest.raises(ValueError):
        Dfa(1, 0, 0, frozenset(), ())
    with pytest.raises(ValueError):
        Dfa(1, 2, 2, frozenset(), ((0,), (1,)))
    with pytest.raises(ValueError):
        Dfa(1, 2, 0, frozenset({2}), ((0,), (1,)))
    with pytest.raises(ValueError):
        Dfa(2, 2, 0, frozenset(), ((0,), (1,)))
    with pytest.raises(ValueError):
        Dfa(1, 2, 0, frozenset(), ((0,), (2,)))
    with pytest.raises(ValueError):
        Dfa(1, 2, 0, frozenset(), ((0,), (1,)), ("a", "b"))


def test_accessible_part_drops_the_unreachable():
    a = Dfa(1, 3, 0, frozenset({1, 2}), ((1,), (0,), (2,)))
    b, kept = accessible_part(a)
    assert b.state_count == 2
    assert kept == (0, 1)
    assert b.finals == frozenset({1})
    assert b.delta == ((1,), (0,))


def test_accessible_part_keeps_breadth_first_order():
    a = Dfa(2, 4, 2, frozenset(), ((0, 1), (2, 3), (3, 1), (0, 0)))
    b, kept = accessible_part(a)
    assert kept == (2, 3, 1, 0)
    assert b.initial == 0


def test_run_and_accepts():
    a = Dfa(2, 2, 0, frozenset({1}), ((0, 1), (1, 0)))
    assert run(a, ()) == 0
    assert run(a, (1, 1)) == 0
    assert accepts(a, (1,))
    assert not accepts(a, (0,))
    with pytest.raises(ValueError):
        run(a, (2,))


def test_minimize_collapses_twin_states():
    # states 1 and 2 have the same rows and finality
    a = Dfa(1, 3, 0, frozenset({1, 2}), ((1,), (2,), (1,)))
    m = minimize(a)
    assert m.state_count == 2
    assert is_equivalent(m, a)


def test_minimize_of_empty_and_full_languages():
    empty = Dfa(1, 2, 0, frozenset(), ((1,), (0,)))
    assert minimize(empty).state_count == 1
    full = Dfa(1, 2, 0, frozenset({0, 1}), ((1,), (0,)))
    assert minimize(full).state_count == 1


def test_nerode_partition_respects_finality():
    a = Dfa(1, 4, 0, frozenset({2, 3}), ((1,), (2,), (3,), (3,)))
    part = nerode_partition(a)
    finals_classes = {part.class_of[q] for q in a.finals}
    others = {part.class_of[q] for q in range(4) if q not in a.finals}
    assert finals_classes.isdisjoint(others)
    blocks = part.blocks()
    assert sum(len(b) for b in blocks) == 4


@settings(max_examples=150, deadline=None)
@given(dfas())
def test_minimize_matches_the_pair_marking_oracle(a):
    m = minimize(a)
    assert m.state_count == helpers.distinguishable_classes(a)
    assert is_equivalent(m, a)
    assert nerode_partition(m).class_count == m.state_count


@settings(max_examples=100, deadline=None)
@given(dfas())
def test_minimize_is_idempotent_in_size_and_language(a):
    m = minimize(a)
    again = minimize(m)
    assert again.state_count == m.state_count
    assert is_equivalent(again, m)


def test_is_equivalent_requires_a_common_alphabet():
    a = Dfa(1, 1, 0, frozenset(), ((0,),))
    b = Dfa(2, 1, 0, frozenset(), ((0, 0),))
    with pytest.raises(ValueError):
        is_equivalent(a, b)


def test_is_equivalent_detects_differences():
    ends_in_1 = Dfa(2, 2, 0, frozenset({1}), ((0, 1), (0, 1)))
    contains_1 = Dfa(2, 2, 0, frozenset({1}), ((0, 1), (1, 1)))
    assert not is_equivalent(ends_in_1, contains_1)
    assert is_equivalent(ends_in_1, minimize(ends_in_1))


def test_preimage_by_renaming_permutes_columns():
    a = Dfa(3, 2, 0, frozenset({1}), ((0, 1, 0), (1, 0, 1)))
    b = preimage_by_renaming(a, (2, 0), ("x", "y"))
    assert b.delta == ((0, 0), (1, 1))
    assert b.letter_labels == ("x", "y")
    assert b.finals == a.finals and b.initial == a.initial
    with pytest.raises(ValueError):
        preimage_by_renaming(a, (3,))


@settings(max_examples=150, deadline=None)
@given(dfas(), st.data())
def test_preimage_never_needs_more_states(a, data):
    phi = tuple(
        data.draw(st.integers(0, a.letter_count - 1))
        for _ in range(data.draw(st.integers(1, 4)))
    )
    assert minimize(preimage_by_renaming(a, phi)).state_count <= minimize(a).state_count


@settings(max_examples=50, deadline=None)
@given(dfas(), st.data())
def test_preimage_membership_translates_letterwise(a, data):
    phi = tuple(
        data.draw(st.integers(0, a.letter_count - 1))
        for _ in range(data.draw(st.integers(1, 3)))
    )
    b = preimage_by_renaming(a, phi)
    word = tuple(
        data.draw(st.integers(0, len(phi) - 1))
        for _ in range(data.draw(st.integers(0, 6)))
    )
    assert accepts(b, word) == accepts(a, tuple(phi[j] for j in word))


def test_export_dot_declares_every_state_once():
    a = Dfa(2, 2, 0, frozenset({1}), ((0, 1), (1, 1)), ("a", "b"))
    dot = export_dot(a)
    assert dot.count("shape=circle") + dot.count("shape=doublecircle") == 2
    assert '__init -> q0' in dot
    assert 'label="a,b"' in dot  # parallel edges merged


def test_json_round_trip_is_fieldwise():
    a = Dfa(2, 3, 1, frozenset({0, 2}), ((0, 1), (2, 2), (1, 0)), ("x", "y"))
    assert import_json(export_json(a)) == a
    bare = Dfa(1, 1, 0, frozenset(), ((0,),))
    assert import_json(export_json(bare)) == bare


def test_import_json_rejects_malformed_text_with_position():
    with pytest.raises(json.JSONDecodeError) as err:
        import_json('{"state_count": 1,')
    assert err.value.lineno >= 1
    with pytest.raises(ValueError):
        import_json('{"state_count": 1}')
    with pytest.raises(ValueError):
        import_json('[1, 2]')


def test_minimal_dfas_with_random_renamings():
    rng = random.Random(20260822)
    for _ in range(50):
        a = helpers.random_dfa(rng)
        phi = helpers.random_renaming(rng, a.letter_count)
        assert minimize(preimage_by_renaming(a, phi)).state_count <= minimize(a).state_count
