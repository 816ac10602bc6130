"""Exact-arithmetic rank, Kalman, Hautus, and sampling oracle tests."""

import random
from fractions import Fraction

import pytest

from ssctrl import (
    RationalMatrix,
    StructuredSystem,
    ZeroVectorError,
    exhaustive_small,
    free_entry_count,
    hautus_check,
    kalman_controllable,
    mix64,
    monte_carlo_ssc,
    parse_pattern,
    rank_exact,
    sample_instance,
)
from ssctrl.errors import TooManyFreeEntriesError

from util import circuit_system, network_system, random_system


def mat(rows):
    return RationalMatrix.from_rows(rows)


class TestRankExact:
    def test_identity(self):
        assert rank_exact(RationalMatrix.identity(4)) == 4

    def test_zero(self):
        assert rank_exact(mat([[0, 0], [0, 0]])) == 0

    def test_rank_one(self):
        assert rank_exact(mat([[1, 2], [2, 4]])) == 1

    def test_rectangular(self):
        assert rank_exact(mat([[1, 0, 1], [0, 1, 1]])) == 2

    def test_fractions(self):
        m = mat([[Fraction(1, 3), Fraction(1, 6)], [Fraction(2, 3), Fraction(1, 3)]])
        assert rank_exact(m) == 1

    def test_row_combination_preserves_rank(self):
        # Adding a multiple of one row to another never changes the rank.
        rng = random.Random(42)
        for _ in range(200):
            n = rng.randint(2, 5)
            m = rng.randint(2, 5)
            rows = [
                [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(m)]
                for _ in range(n)
            ]
            base = mat(rows)
            i, j = rng.sample(range(n), 2)
            factor = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            rows2 = [list(r) for r in rows]
            rows2[i] = [a + factor * b for a, b in zip(rows2[i], rows2[j])]
            assert rank_exact(mat(rows2)) == rank_exact(base)

    def test_transposition_invariance(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 4)
            m = rng.randint(1, 4)
            rows = [[Fraction(rng.randint(-4, 4)) for _ in range(m)] for _ in range(n)]
            transposed = [[rows[i][j] for i in range(n)] for j in range(m)]
            assert rank_exact(mat(rows)) == rank_exact(mat(transposed))


class TestKalman:
    def test_integrator_chain(self):
        a = mat([[0, 1], [0, 0]])
        b = mat([[0], [1]])
        assert kalman_controllable(a, b)

    def test_disconnected_state(self):
        a = mat([[0, 0], [0, 0]])
        b = mat([[1], [0]])
        assert not kalman_controllable(a, b)

    def test_negation_symmetry(self):
        # (A, B) controllable iff (-A, B) controllable.
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(1, 4)
            m = rng.randint(1, 2)
            a = mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
            b = mat([[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)])
            neg = mat([[-v for v in row] for row in a.entries])
            assert kalman_controllable(a, b) == kalman_controllable(neg, b)


class TestHautus:
    def test_certificate_accepted(self):
        a = mat([[0, 1], [0, 1]])
        b = mat([[1], [1]])
        x = (Fraction(1), Fraction(-1))
        assert hautus_check(a, b, Fraction(0), x)

    def test_wrong_eigenvalue_rejected(self):
        a = mat([[0, 1], [0, 1]])
        b = mat([[1], [1]])
        x = (Fraction(1), Fraction(-1))
        assert not hautus_check(a, b, Fraction(1), x)

    def test_zero_vector_rejected(self):
        a = RationalMatrix.identity(2)
        b = mat([[1], [0]])
        with pytest.raises(ZeroVectorError):
            hautus_check(a, b, Fraction(0), (Fraction(0), Fraction(0)))

    def test_controllable_pair_has_no_rational_certificate(self):
        a = mat([[0, 1], [0, 0]])
        b = mat([[0], [1]])
        for num in range(-3, 4):
            for x in ((Fraction(1), Fraction(num)), (Fraction(num), Fraction(1))):
                assert not hautus_check(a, b, Fraction(num), x)


class TestMix64:
    def test_deterministic(self):
        assert mix64(0, 0) == mix64(0, 0)

    def test_spread(self):
        seen = {mix64(123, t) for t in range(1000)}
        assert len(seen) == 1000

    def test_range(self):
        for t in range(100):
            assert 0 <= mix64(999, t) < 1 << 64


class TestMonteCarlo:
    def test_circuit_agrees(self):
        verdict = monte_carlo_ssc(circuit_system(), trials=50, seed=1)
        assert verdict.agrees
        assert verdict.counterexample is None

    def test_network_injects_witness(self):
        verdict = monte_carlo_ssc(network_system(), trials=50, seed=1)
        assert verdict.agrees
        assert verdict.counterexample is not None
        a0, b0 = verdict.counterexample
        assert not kalman_controllable(a0, b0)

    def test_deterministic(self):
        s = network_system()
        v1 = monte_carlo_ssc(s, trials=30, seed=7)
        v2 = monte_carlo_ssc(s, trials=30, seed=7)
        assert v1.counterexample == v2.counterexample

    def test_random_systems_agree(self):
        rng = random.Random(5)
        for _ in range(80):
            s = random_system(rng, max_n=3, max_m=2)
            assert monte_carlo_ssc(s, trials=20, seed=3).agrees


class TestExhaustive:
    def test_circuit_clean_grid(self):
        verdict = exhaustive_small(circuit_system())
        assert verdict.mode == "exhaustive"
        assert verdict.agrees
        assert verdict.counterexample is None

    def test_network_counterexample(self):
        verdict = exhaustive_small(network_system())
        assert verdict.agrees
        assert verdict.counterexample is not None
        a0, b0 = verdict.counterexample
        assert not kalman_controllable(a0, b0)

    def test_free_entry_limit(self):
        a = parse_pattern("? ? ? ?\n? ? ? ?\n? ? ? ?\n? ? ? ?")
        b = parse_pattern("*\n*\n*\n*")
        with pytest.raises(TooManyFreeEntriesError):
            exhaustive_small(StructuredSystem(a, b))

    def test_zero_star_value_rejected(self):
        with pytest.raises(ZeroVectorError):
            exhaustive_small(circuit_system(), star_values=(0, 1))

    def test_free_entry_count(self):
        assert free_entry_count(circuit_system()) == 9

    def test_random_small_systems_agree(self):
        rng = random.Random(9)
        checked = 0
        while checked < 40:
            s = random_system(rng, max_n=2, max_m=1)
            if free_entry_count(s) > 6:
                continue
            assert exhaustive_small(s).agrees
            checked += 1


class TestSampling:
    def test_membership_and_determinism(self):
        s = circuit_system()
        a1 = sample_instance(s.a, 17)
        a2 = sample_instance(s.a, 17)
        assert a1 == a2
