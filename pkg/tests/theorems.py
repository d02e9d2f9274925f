"""Single-instance theorem checks.

Each function asserts one theorem, proposition, or closure law on one
randomly generated instance.  The property suite runs them individually;
the acceptance suite sweeps them together over hundreds of instances.
"""

from __future__ import annotations

from fractions import Fraction as F

from fdes import (
    closed_loop_central,
    closed_loop_decentralized,
    intersection,
    inverse_project_meet,
    is_controllable,
    is_coobservable,
    is_normal,
    is_observable,
    is_strongly_observable,
    is_sublanguage,
    natural_projection,
    project_language,
    synthesize_central,
    synthesize_decentralized,
    union,
    verify_achieves,
)
from fdes.grades import ZERO, meet
from fdes.observation import projection_classes
from fdes.oracle import (
    crisp_reference,
    observable_pairwise,
    strongly_observable_direct,
)

import helpers


def make_instance(rng, max_events=4, max_support=12, max_lattice=5):
    alphabet = helpers.random_alphabet(rng, max_events=max_events)
    lattice = helpers.random_lattice(rng, max_values=max_lattice)
    plant = helpers.random_plant(rng, alphabet, lattice, max_support=max_support)
    spec = helpers.random_sublanguage(rng, plant, lattice)
    pr = helpers.random_projection(rng, alphabet)
    return alphabet, lattice, plant, spec, pr


def check_central_theorem(rng, alphabet, lattice, plant, pr):
    """Closed loops of arbitrary supervisors are controllable and
    observable; synthesis reproduces any such closed loop exactly."""
    supervisor = helpers.random_supervisor(rng, plant, pr, alphabet.controllable, lattice)
    loop = closed_loop_central(plant, supervisor)
    assert is_sublanguage(loop, plant)
    assert is_controllable(loop, plant).holds
    assert is_observable(loop, plant, pr).holds
    if not loop.is_empty:
        rebuilt = closed_loop_central(plant, synthesize_central(loop, plant, pr))
        assert verify_achieves(loop, rebuilt)
    return loop


def check_central_round_trip(spec, plant, pr):
    """Any controllable and observable non-empty spec is achieved exactly."""
    if spec.is_empty:
        return
    if is_controllable(spec, plant).holds and is_observable(spec, plant, pr).holds:
        achieved = closed_loop_central(plant, synthesize_central(spec, plant, pr))
        assert achieved == spec


def check_decentralized_theorem(rng, alphabet, lattice, plant):
    """Joint closed loops are controllable and co-observable; decentralized
    synthesis reproduces them exactly."""
    site1, site2 = helpers.random_sites(rng, alphabet)
    s1 = helpers.random_supervisor(rng, plant, site1[0], site1[1], lattice)
    s2 = helpers.random_supervisor(rng, plant, site2[0], site2[1], lattice)
    loop = closed_loop_decentralized(plant, s1, s2)
    assert is_sublanguage(loop, plant)
    assert is_controllable(loop, plant).holds
    assert is_coobservable(loop, plant, site1, site2).holds
    if not loop.is_empty:
        t1, t2 = synthesize_decentralized(loop, plant, site1, site2)
        assert closed_loop_decentralized(plant, t1, t2) == loop


def check_identical_sites_reduce_to_central(spec, plant, pr):
    site = (pr, spec.alphabet.controllable)
    coobs = is_coobservable(spec, plant, site, site).holds
    obs = is_observable(spec, plant, pr).holds
    assert coobs == obs


def check_observability_implementations_agree(spec, plant, pr):
    """The class-based checkers match the literal definitional readings."""
    assert is_observable(spec, plant, pr).holds == observable_pairwise(spec, plant, pr)
    assert (
        is_strongly_observable(spec, plant, pr).holds
        == strongly_observable_direct(spec, plant, pr)
    )
    if is_strongly_observable(spec, plant, pr).holds:
        assert is_observable(spec, plant, pr).holds


def check_intersection_closures(k1, k2, plant, pr):
    both = intersection(k1, k2)
    if is_observable(k1, plant, pr).holds and is_observable(k2, plant, pr).holds:
        assert is_observable(both, plant, pr).holds
    if (
        is_strongly_observable(k1, plant, pr).holds
        and is_strongly_observable(k2, plant, pr).holds
    ):
        assert is_strongly_observable(both, plant, pr).holds
    if is_controllable(k1, plant).holds and is_controllable(k2, plant).holds:
        assert is_controllable(both, plant).holds
        assert is_controllable(union(k1, k2), plant).holds


def check_normal_union_closure(k1, k2, plant, pr):
    """Normal languages are closed under union; exercised both on the
    observation-consistent hulls (always normal) and, when the raw specs
    happen to be normal, on those too."""
    hull1 = inverse_project_meet(pr, project_language(pr, k1), plant)
    hull2 = inverse_project_meet(pr, project_language(pr, k2), plant)
    assert is_normal(hull1, plant, pr).holds
    assert is_normal(hull2, plant, pr).holds
    assert is_normal(union(hull1, hull2), plant, pr).holds
    if is_normal(k1, plant, pr).holds and is_normal(k2, plant, pr).holds:
        assert is_normal(union(k1, k2), plant, pr).holds


def check_normal_implies_observable(spec, plant, pr):
    if is_normal(spec, plant, pr).holds:
        # normality is independent of the controllable set, so observability
        # must follow even when every event is controllable
        assert is_observable(spec, plant, pr, controllables=plant.alphabet.events).holds
        assert is_observable(spec, plant, pr).holds


def check_observable_controllable_implies_normal_when_ec_observable(spec, plant, pr):
    """With every controllable event observable, controllability plus
    observability force normality."""
    if not spec.alphabet.controllable <= pr.observable:
        return
    if is_controllable(spec, plant).holds and is_observable(spec, plant, pr).holds:
        assert is_normal(spec, plant, pr).holds


def check_normal_support_is_crisp_normal(spec, plant, pr):
    if is_normal(spec, plant, pr).holds:
        from fdes.oracle import crisp_normal

        assert crisp_normal(set(spec.support), set(plant.support), pr.observable)


def check_lemma_consequences(spec, plant, pr):
    """On observable specs, same-class strict continuations share one grade,
    and a tight continuation never exceeds a strict one."""
    if not is_observable(spec, plant, pr).holds:
        return
    classes = projection_classes(pr, (s for s, _ in spec.items()))
    for members in classes.values():
        for event in sorted(spec.alphabet.controllable):
            strict, tight = [], []
            for s in members:
                extended = s + (event,)
                grade = spec.grade(extended)
                ceiling = meet(spec.grade(s), plant.grade(extended))
                if grade < ceiling:
                    strict.append(grade)
                else:
                    tight.append(grade)
            for i, a in enumerate(strict):
                for b in strict[i + 1 :]:
                    assert a == b
                for b in tight:
                    assert b <= a


def check_crisp_degeneration(rng):
    """On {0,1}-valued instances every graded checker agrees with the
    classical set-based one."""
    crisp = (ZERO, F(1))
    alphabet = helpers.random_alphabet(rng, max_events=3)
    plant = helpers.random_plant(rng, alphabet, crisp, max_support=8, max_len=3)
    spec = helpers.random_sublanguage(rng, plant, crisp, allow_empty=False)
    pr = natural_projection(alphabet)
    site1, site2 = helpers.random_sites(rng, alphabet)
    assert crisp_reference("controllability", spec, plant) == is_controllable(spec, plant).holds
    assert crisp_reference("observability", spec, plant, pr) == is_observable(spec, plant, pr).holds
    assert crisp_reference("normality", spec, plant, pr) == is_normal(spec, plant, pr).holds
    assert (
        crisp_reference("coobservability", spec, plant, site1=site1, site2=site2)
        == is_coobservable(spec, plant, site1, site2).holds
    )
