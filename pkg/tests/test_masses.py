"""Mass distributions, support functions, and interval semantics.

Derived expectations are frozen from the brute-force enumeration oracles in
oracles.py, which work on frozensets rather than the package's arrays.
"""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evident import (
    EvidentialInterval,
    Frame,
    MassFunction,
    bayesian_from_probabilities,
    mass_new,
    simple_support,
    vacuous,
)
from evident.errors import (
    DegreeOutOfRange,
    EmptyFocus,
    FrameMismatch,
    MassOnEmptySet,
    MissingAtom,
    NegativeMass,
    NotNormalized,
    UnknownAtom,
)

from .conftest import mass_and_prop, masses
from .oracles import bel_oracle, focal_map, pl_oracle, powerset


@pytest.fixture
def sample(ltr_frame):
    """m({lake})=0.5, m({lake,tower})=0.3, m(whole)=0.2 on a 3-atom frame."""
    return mass_new(
        ltr_frame,
        [
            (ltr_frame.proposition(["lake"]), 0.5),
            (ltr_frame.proposition(["lake", "tower"]), 0.3),
            (ltr_frame.full(), 0.2),
        ],
    )


class TestConstruction:
    def test_three_focals(self, sample):
        assert len(sample) == 3

    def test_not_normalized_reports_total(self, lt_frame):
        with pytest.raises(NotNormalized) as err:
            mass_new(lt_frame, [(lt_frame.proposition(["lake"]), 0.5)])
        assert err.value.total == 0.5

    def test_mass_on_empty_set(self, lt_frame):
        with pytest.raises(MassOnEmptySet):
            mass_new(lt_frame, [(lt_frame.empty(), 0.1), (lt_frame.full(), 0.9)])

    def test_zero_mass_on_empty_set_is_dropped(self, lt_frame):
        m = mass_new(lt_frame, [(lt_frame.empty(), 0.0), (lt_frame.full(), 1.0)])
        assert len(m) == 1

    def test_negative_mass(self, lt_frame):
        with pytest.raises(NegativeMass):
            mass_new(
                lt_frame,
                [(lt_frame.proposition(["lake"]), -0.1), (lt_frame.full(), 1.1)],
            )

    def test_duplicates_summed_and_zeros_dropped(self, lt_frame):
        lake = lt_frame.proposition(["lake"])
        m = mass_new(
            lt_frame,
            [(lake, 0.25), (lake, 0.25), (lt_frame.full(), 0.5), (lt_frame.full(), 0.0)],
        )
        assert len(m) == 2
        assert m.mass(lake) == 0.5

    def test_wrong_frame_entry(self, lt_frame, ltr_frame):
        with pytest.raises(FrameMismatch):
            mass_new(lt_frame, [(ltr_frame.full(), 1.0)])

    def test_stored_exactly_as_given(self, lt_frame):
        m = mass_new(
            lt_frame, [(lt_frame.proposition(["lake"]), 0.3), (lt_frame.full(), 0.7)]
        )
        assert m.mass(lt_frame.proposition(["lake"])) == 0.3
        assert m.mass(lt_frame.full()) == 0.7


class TestSimpleSupport:
    def test_basic_shape(self, lt_frame):
        m = simple_support(lt_frame, lt_frame.proposition(["lake"]), 0.6)
        assert m.mass(lt_frame.proposition(["lake"])) == 0.6
        assert m.mass(lt_frame.full()) == pytest.approx(0.4, abs=0)

    def test_zero_degree_is_vacuous(self, lt_frame):
        m = simple_support(lt_frame, lt_frame.proposition(["lake"]), 0.0)
        assert m == vacuous(lt_frame)

    def test_full_degree(self, lt_frame):
        m = simple_support(lt_frame, lt_frame.proposition(["lake"]), 1.0)
        assert m.mass(lt_frame.proposition(["lake"])) == 1.0
        assert len(m) == 1

    def test_empty_focus(self, lt_frame):
        with pytest.raises(EmptyFocus):
            simple_support(lt_frame, lt_frame.empty(), 0.5)

    def test_degree_out_of_range(self, lt_frame):
        for bad in (-0.1, 1.1, float("nan")):
            with pytest.raises(DegreeOutOfRange):
                simple_support(lt_frame, lt_frame.proposition(["lake"]), bad)

    def test_three_case_belief_shape(self):
        # belief is 0 / degree / 1 according to whether the statement
        # contains the focus and whether it is the whole frame
        for n in range(1, 6):
            frame = Frame([f"a{i}" for i in range(n)])
            full = (1 << n) - 1
            for degree in (0.0, 0.25, 0.5, 0.75, 1.0):
                for focus_bits in range(1, full + 1):
                    focus = frame.from_bits(focus_bits)
                    m = simple_support(frame, focus, degree)
                    for a_bits in range(full + 1):
                        a = frame.from_bits(a_bits)
                        if a_bits == full:
                            expected = 1.0
                        elif focus.is_subset(a):
                            expected = degree
                        else:
                            expected = 0.0
                        assert m.belief(a) == expected


class TestVacuous:
    def test_all_mass_on_whole_frame(self, lt_frame):
        m = vacuous(lt_frame)
        assert m.mass(lt_frame.full()) == 1.0
        assert len(m) == 1

    def test_unit_interval_everywhere(self, lt_frame):
        m = vacuous(lt_frame)
        assert m.interval(lt_frame.proposition(["lake"])) == EvidentialInterval(0.0, 1.0)

    def test_whole_frame_collapses_to_one(self, lt_frame):
        assert vacuous(lt_frame).interval(lt_frame.full()) == EvidentialInterval(1.0, 1.0)


class TestBayesian:
    def test_singleton_masses(self, ltr_frame):
        m = bayesian_from_probabilities(
            ltr_frame, {"lake": 0.5, "tower": 0.3, "ridge": 0.2}
        )
        assert m.mass(ltr_frame.singleton("lake")) == 0.5
        assert m.mass(ltr_frame.singleton("tower")) == 0.3
        assert m.mass(ltr_frame.singleton("ridge")) == 0.2

    def test_belief_adds_up(self, ltr_frame):
        m = bayesian_from_probabilities(
            ltr_frame, {"lake": 0.5, "tower": 0.3, "ridge": 0.2}
        )
        assert m.belief(ltr_frame.proposition(["lake", "tower"])) == 0.8

    def test_missing_atom(self, ltr_frame):
        with pytest.raises(MissingAtom):
            bayesian_from_probabilities(ltr_frame, {"lake": 0.5, "tower": 0.5})

    def test_unknown_atom(self, lt_frame):
        with pytest.raises(UnknownAtom):
            bayesian_from_probabilities(
                lt_frame, {"lake": 0.5, "tower": 0.3, "ridge": 0.2}
            )

    def test_not_normalized(self, lt_frame):
        with pytest.raises(NotNormalized):
            bayesian_from_probabilities(lt_frame, {"lake": 0.5, "tower": 0.4})

    def test_negative_probability(self, lt_frame):
        with pytest.raises(NegativeMass):
            bayesian_from_probabilities(lt_frame, {"lake": -0.5, "tower": 1.5})

    def test_zero_probability_atom_dropped(self, lt_frame):
        m = bayesian_from_probabilities(lt_frame, {"lake": 1.0, "tower": 0.0})
        assert len(m) == 1

    def test_intervals_collapse(self, ltr_frame):
        m = bayesian_from_probabilities(
            ltr_frame, {"lake": 0.5, "tower": 0.3, "ridge": 0.2}
        )
        for bits in range(1 << len(ltr_frame)):
            iv = m.interval(ltr_frame.from_bits(bits))
            assert iv.ignorance == pytest.approx(0.0, abs=1e-12)

    @given(st.data())
    def test_additive_like_a_probability(self, data):
        # belief(A) + belief(not A) caps at 1 in general; probability
        # assignments hit the cap for every proposition
        n = data.draw(st.integers(1, 5))
        frame = Frame([f"a{i}" for i in range(n)])
        weights = data.draw(
            st.lists(st.floats(0.05, 1.0, allow_nan=False), min_size=n, max_size=n)
        )
        total = math.fsum(weights)
        m = bayesian_from_probabilities(
            frame, {a: w / total for a, w in zip(frame.atoms, weights)}
        )
        prop = frame.from_bits(data.draw(st.integers(0, (1 << n) - 1)))
        assert m.belief(prop) + m.belief(prop.complement()) == pytest.approx(
            1.0, abs=1e-12
        )


class TestBeliefPlausibility:
    def test_belief_of_superset(self, sample, ltr_frame):
        # oracle: focals {lake} and {lake,tower} lie inside {lake,tower}
        assert sample.belief(ltr_frame.proposition(["lake", "tower"])) == 0.8

    def test_belief_without_contained_focal(self, sample, ltr_frame):
        assert sample.belief(ltr_frame.proposition(["tower"])) == 0.0

    def test_belief_of_whole_frame(self, sample, ltr_frame):
        assert sample.belief(ltr_frame.full()) == 1.0

    def test_belief_of_empty(self, sample, ltr_frame):
        assert sample.belief(ltr_frame.empty()) == 0.0

    def test_plausibility_of_tower(self, sample, ltr_frame):
        # {lake,tower} and the whole frame intersect {tower}: 0.3 + 0.2
        assert sample.plausibility(ltr_frame.proposition(["tower"])) == 0.5

    def test_plausibility_of_lake(self, sample, ltr_frame):
        assert sample.plausibility(ltr_frame.proposition(["lake"])) == 1.0

    def test_plausibility_of_empty(self, sample, ltr_frame):
        assert sample.plausibility(ltr_frame.empty()) == 0.0

    def test_interval_of_tower(self, sample, ltr_frame):
        assert sample.interval(ltr_frame.proposition(["tower"])) == EvidentialInterval(
            0.0, 0.5
        )

    def test_frame_mismatch(self, sample, lt_frame):
        with pytest.raises(FrameMismatch):
            sample.belief(lt_frame.proposition(["lake"]))
        with pytest.raises(FrameMismatch):
            sample.plausibility(lt_frame.proposition(["lake"]))


class TestAgainstEnumeration:
    @given(masses(max_atoms=6))
    def test_every_proposition_matches_oracle(self, frame_and_mass):
        frame, m = frame_and_mass
        focals = focal_map(m)
        for subset in powerset(frame.atoms):
            prop = frame.proposition(subset)
            assert m.belief(prop) == pytest.approx(
                bel_oracle(focals, subset), abs=1e-12
            )
            assert m.plausibility(prop) == pytest.approx(
                pl_oracle(focals, subset), abs=1e-12
            )

    @given(mass_and_prop())
    def test_belief_plus_counter_belief_bounded(self, bundle):
        frame, m, prop = bundle
        assert m.belief(prop) + m.belief(prop.complement()) <= 1.0 + 1e-9

    @given(mass_and_prop())
    def test_monotone_under_inclusion(self, bundle):
        frame, m, q = bundle
        p = frame.from_bits(q.bits & ((q.bits << 1) | 1) & ((1 << len(frame)) - 1))
        p = p.intersect(q)  # p is a subset of q by construction
        assert m.belief(p) <= m.belief(q) + 1e-12
        assert m.plausibility(p) <= m.plausibility(q) + 1e-12

    @given(mass_and_prop())
    def test_interval_is_ordered(self, bundle):
        _, m, prop = bundle
        iv = m.interval(prop)
        assert 0.0 <= iv.support <= iv.plausibility <= 1.0


class TestIntervalType:
    def test_rejects_disorder(self):
        with pytest.raises(ValueError):
            EvidentialInterval(0.7, 0.3)
        with pytest.raises(ValueError):
            EvidentialInterval(-0.1, 0.5)

    def test_ignorance_is_width(self):
        assert EvidentialInterval(0.2, 0.7).ignorance == pytest.approx(0.5)

    def test_unpacks(self):
        support, plausibility = EvidentialInterval(0.2, 0.7)
        assert (support, plausibility) == (0.2, 0.7)


def test_equality_and_allclose(lt_frame):
    lake = lt_frame.proposition(["lake"])
    a = mass_new(lt_frame, [(lake, 0.3), (lt_frame.full(), 0.7)])
    b = mass_new(lt_frame, [(lake, 0.3), (lt_frame.full(), 0.7)])
    c = mass_new(lt_frame, [(lake, 0.3 + 1e-13), (lt_frame.full(), 0.7 - 1e-13)])
    assert a == b
    assert a != c
    assert a.allclose(c)


def test_focals_are_sorted_and_typed(sample):
    bits = [p.bits for p, _ in sample.focals()]
    assert bits == sorted(bits)
    assert all(isinstance(w, float) for _, w in sample.focals())
