import random

import pytest

from cubictrace.padic import (SplittingType, dedekind_index_test,
                              lift_root_unramified, lift_root_zp,
                              roots_mod_p, splitting_type, valuation)
from cubictrace.poly import TraceOnePoly, discriminant, is_cyclic


class TestValuation:
    def test_values(self):
        assert valuation(200704, 2) == 12
        assert valuation(200704, 7) == 2
        assert valuation(49, 7) == 2
        assert valuation(5, 7) == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            valuation(0, 2)


class TestRootsModP:
    def test_examples(self):
        assert roots_mod_p(TraceOnePoly(-2, 1), 13) == {3, 5, 6}
        assert roots_mod_p(TraceOnePoly(-2, 1), 5) == set()
        assert roots_mod_p(TraceOnePoly(-2, 1), 7) == {5}  # triple root mod 7

    def test_brute_force_agreement(self):
        rng = random.Random(7)
        for _ in range(300):
            f = TraceOnePoly(rng.randint(-80, 0), rng.randint(-80, 80))
            p = rng.choice([2, 3, 5, 7, 11, 13, 97, 101, 1009, 1013])
            assert roots_mod_p(f, p) == {r for r in range(p) if f(r) % p == 0}

    def test_large_prime_paths(self):
        # exercise the Frobenius path (p > brute-force threshold)
        f = TraceOnePoly(-2, 1)
        for p in (10007, 10009, 100003):
            assert roots_mod_p(f, p) == {r for r in range(p) if f(r) % p == 0}


class TestLifting:
    def test_zp_examples(self):
        assert lift_root_zp(TraceOnePoly(-2, 1), 13)
        assert not lift_root_zp(TraceOnePoly(-2, 1), 7)   # 7 totally ramified
        assert not lift_root_zp(TraceOnePoly(-37, 29), 2)  # inert despite 2^12 | disc

    def test_unramified_examples(self):
        assert lift_root_unramified(TraceOnePoly(-2, 1), 2)   # inert: root in W
        assert lift_root_unramified(TraceOnePoly(-2, 1), 13)  # Z_13 root is a W root
        assert not lift_root_unramified(TraceOnePoly(-2, 1), 7)  # ramified
        assert lift_root_unramified(TraceOnePoly(-37, 29), 2)

    def test_zp_implies_unramified(self):
        rng = random.Random(11)
        for _ in range(200):
            f = TraceOnePoly(rng.randint(-60, 0), rng.randint(-60, 60))
            if discriminant(f) == 0:
                continue
            p = rng.choice([2, 3, 5, 7, 11])
            if lift_root_zp(f, p):
                assert lift_root_unramified(f, p)


class TestSplittingType:
    def test_good_primes(self):
        f = TraceOnePoly(-2, 1)
        assert splitting_type(f, 13) is SplittingType.SPLIT
        assert splitting_type(f, 5) is SplittingType.INERT
        assert splitting_type(f, 7) is SplittingType.RAMIFIED

    def test_index_divisor_robustness(self):
        # 2 divides disc = 2^12 * 7^2 but is an index divisor, not ramified
        f = TraceOnePoly(-37, 29)
        assert splitting_type(f, 2) is SplittingType.INERT
        assert splitting_type(f, 7) is SplittingType.RAMIFIED

    def test_rejects_noncyclic(self):
        with pytest.raises(ValueError):
            splitting_type(TraceOnePoly(-2, 2), 5)

    def test_three_never_ramified(self):
        for a in range(-60, 0):
            for b in range(-10, 11):
                f = TraceOnePoly(a, b)
                if is_cyclic(f):
                    assert splitting_type(f, 3) is not SplittingType.RAMIFIED

    def test_isomorphism_invariance(self):
        # (-37, 29) and (-2, 1) define the same field: same type at every prime
        for p in (2, 3, 5, 7, 11, 13, 29, 41, 43):
            assert (splitting_type(TraceOnePoly(-37, 29), p)
                    is splitting_type(TraceOnePoly(-2, 1), p))

    def test_split_iff_three_roots_away_from_disc(self):
        rng = random.Random(3)
        checked = 0
        while checked < 200:
            f = TraceOnePoly(rng.randint(-120, 0), rng.randint(-120, 120))
            if not is_cyclic(f):
                continue
            p = rng.choice([5, 11, 13, 17, 19, 23, 101, 997])
            if discriminant(f) % p == 0:
                continue
            kind = splitting_type(f, p)
            n = len(roots_mod_p(f, p))
            assert (kind, n) in ((SplittingType.SPLIT, 3), (SplittingType.INERT, 0))
            checked += 1


class TestDedekind:
    def test_examples(self):
        assert not dedekind_index_test(TraceOnePoly(-2, 1), 7)
        assert dedekind_index_test(TraceOnePoly(-37, 29), 2)
        assert not dedekind_index_test(TraceOnePoly(-37, 29), 7)

    def test_nondivisors_of_disc_never_index_divisors(self):
        f = TraceOnePoly(-2, 1)
        for p in (3, 5, 11, 13):
            assert not dedekind_index_test(f, p)

    def test_exact_valuation_two_dichotomy(self):
        # v_p(disc) = 2: either p is ramified or p divides the index, not both
        rng = random.Random(5)
        checked = 0
        while checked < 100:
            f = TraceOnePoly(rng.randint(-120, 0), rng.randint(-120, 120))
            if not is_cyclic(f):
                continue
            d = discriminant(f)
            for p in (2, 5, 7, 13, 31):
                if valuation(d, p) != 2:
                    continue
                ramified = splitting_type(f, p) is SplittingType.RAMIFIED
                index = dedekind_index_test(f, p)
                assert ramified != index
                checked += 1
