"""Max-min automata: extended transitions, generated languages, round trips."""

import random
from fractions import Fraction as F

import pytest

from fdes import (
    Alphabet,
    FdesError,
    FuzzyAutomaton,
    automaton_from_language,
    build_language,
    generated_language,
    extended_transition,
)
from helpers import central_example, lang, random_lattice, random_plant

AB = Alphabet({"a", "b"}, controllable={"a"}, observable={"a", "b"})


def two_step():
    return FuzzyAutomaton(
        frozenset({"q0", "q1", "q2"}),
        AB,
        "q0",
        {("q0", "a", "q1"): F(9, 10), ("q1", "b", "q2"): F(4, 5)},
    )


def test_epsilon_reaches_only_the_start_state():
    aut = two_step()
    assert extended_transition(aut, "q0", (), "q0") == 1
    assert extended_transition(aut, "q0", (), "q1") == 0


def test_single_path_grade_is_min_of_edges():
    assert extended_transition(two_step(), "q0", ("a", "b"), "q2") == F(4, 5)


def test_multiple_paths_take_the_max():
    aut = FuzzyAutomaton(
        frozenset({"q0", "q1", "q2"}),
        AB,
        "q0",
        {
            ("q0", "a", "q1"): F(9, 10),
            ("q1", "b", "q2"): F(4, 5),
            ("q0", "a", "q2"): F(1, 2),
            ("q2", "b", "q2"): F(9, 10),
        },
    )
    assert extended_transition(aut, "q0", ("a", "b"), "q2") == F(4, 5)


def test_unknown_state_and_event_errors():
    aut = two_step()
    with pytest.raises(FdesError) as err:
        extended_transition(aut, "nope", (), "q0")
    assert err.value.code == "UNKNOWN_STATE"
    with pytest.raises(FdesError) as err:
        extended_transition(aut, "q0", ("z",), "q0")
    assert err.value.code == "UNKNOWN_EVENT"
    with pytest.raises(FdesError) as err:
        FuzzyAutomaton(frozenset({"q0"}), AB, "q1", {})
    assert err.value.code == "UNKNOWN_STATE"


def test_generated_language_horizon_zero():
    assert generated_language(two_step(), 0) == lang(AB, {"eps": "1"})


def test_generated_language_two_steps():
    expected = lang(AB, {"eps": "1", "a": "0.9", "a.b": "0.8"})
    assert generated_language(two_step(), 2) == expected
    assert generated_language(two_step(), 5) == expected


def test_generated_language_cycle_respects_horizon():
    aut = FuzzyAutomaton(
        frozenset({"q0"}), AB, "q0", {("q0", "a", "q0"): F(1, 2)}
    )
    language = generated_language(aut, 3)
    assert language.grade(("a",) * 3) == F(1, 2)
    assert language.max_length() == 3


def test_construction_from_language_matches_support():
    _, _, spec = central_example()
    aut = automaton_from_language(spec)
    assert len(aut.states) == 5
    assert aut.transitions[("eps", "a", "a")] == F(7, 10)
    assert aut.transitions[("a", "c", "a.c")] == F(2, 5)
    assert aut.transitions[("a", "d", "a.d")] == F(7, 10)
    assert aut.transitions[("a.c", "d", "a.c.d")] == F(2, 5)
    assert generated_language(aut, spec.max_length()) == spec


def test_construction_rejects_empty_language():
    with pytest.raises(FdesError) as err:
        automaton_from_language(build_language(AB, {}))
    assert err.value.code == "EMPTY_LANGUAGE"


def test_single_string_language_round_trip():
    unit = lang(AB, {"eps": "1"})
    aut = automaton_from_language(unit)
    assert aut.transitions == {}
    assert generated_language(aut, 4) == unit


def _random_automaton(rng):
    states = [f"q{i}" for i in range(rng.randint(1, 4))]
    lattice = [g for g in random_lattice(rng) if g > 0]
    transitions = {}
    for p in states:
        for e in sorted(AB.events):
            for q in states:
                if rng.random() < 0.3:
                    transitions[(p, e, q)] = rng.choice(lattice)
    return FuzzyAutomaton(frozenset(states), AB, states[0], transitions)


def test_generated_language_is_always_valid_and_horizon_monotone():
    rng = random.Random(1905)
    for _ in range(60):
        aut = _random_automaton(rng)
        shallow = generated_language(aut, 2)
        deep = generated_language(aut, 3)
        for s, g in shallow.items():
            assert deep.grade(s) == g
        for s, g in deep.items():
            if len(s) <= 2:
                assert shallow.grade(s) == g


def test_round_trip_on_random_languages():
    rng = random.Random(1906)
    for _ in range(60):
        lattice = random_lattice(rng)
        language = random_plant(rng, AB, lattice, max_support=8, max_len=3)
        aut = automaton_from_language(language)
        assert generated_language(aut, language.max_length()) == language
