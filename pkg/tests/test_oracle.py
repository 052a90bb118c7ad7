import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherebraid import words as W
from spherebraid.groups import make_group, sphere_three_strand_table
from spherebraid.oracle import (
    FreeAutomorphism,
    OracleBudgetError,
    Order,
    artin_action,
    central_value,
    commute,
    conjugation_action,
    equals,
    is_central,
    is_inner,
    is_trivial,
    order_of,
    torsion_order_candidates,
    verify_finite_subgroup,
)
from spherebraid.words import alpha, alpha_prime, delta_comm, full_twist, half_twist, identity, sigma, word


def surface_relation(n):
    return word(n, list(range(1, n - 1)) + [n - 1, n - 1] + list(range(n - 2, 0, -1)))


def random_word(rng, n, max_len=20):
    return word(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                    for _ in range(rng.randint(1, max_len))])


class TestArtinAction:
    def test_identity_word(self):
        assert artin_action(identity(5)).is_identity()

    def test_generator_images(self):
        a = artin_action(sigma(4, 1))
        assert a.images == ((1, 2, -1), (1,), (3,))

    def test_last_generator_rewrites_missing_basis(self):
        a = artin_action(sigma(4, 3))
        assert a.images == ((1,), (2,), (-2, -1, -3))

    def test_inverse_composes_to_identity(self):
        for x in (1, 2, 3):
            w = sigma(4, x) * sigma(4, -x)
            assert artin_action(w).is_identity()

    def test_surface_relation_is_inner(self):
        for n in range(3, 11):
            assert is_inner(artin_action(surface_relation(n))) is not None

    @given(st.lists(st.integers(1, 4).flatmap(lambda k: st.sampled_from([k, -k])), max_size=12))
    @settings(max_examples=40, deadline=None)
    def test_homomorphism(self, a):
        w = word(5, a)
        lhs = artin_action(w * w)
        rhs = artin_action(w).compose(artin_action(w))
        assert lhs == rhs


class TestIsInner:
    def test_identity(self):
        assert is_inner(FreeAutomorphism.identity(3)) == ()

    def test_basis_conjugation(self):
        g = (1,)
        a = FreeAutomorphism(tuple((1, j, -1) if j != 1 else (1,) for j in range(1, 4)))
        assert is_inner(a) == g

    def test_square_not_inner(self):
        assert is_inner(artin_action(word(4, [1, 1]))) is None

    def test_agrees_with_exhaustive_search(self):
        # Exhaustive conjugator search up to length 6 on short automorphisms.
        rng = random.Random(5)
        n = 4
        rank = n - 1
        syms = [s * k for k in range(1, rank + 1) for s in (1, -1)]

        def reduced_words(max_len):
            frontier = [()]
            yield ()
            for _ in range(max_len):
                frontier = [g + (x,) for g in frontier for x in syms
                            if not g or g[-1] != -x]
                yield from frontier

        def conj(g, j):
            red = []
            for x in g + (j,) + tuple(-x for x in reversed(g)):
                if red and red[-1] == -x:
                    red.pop()
                else:
                    red.append(x)
            return tuple(red)

        def brute(a):
            return any(
                all(a.images[j - 1] == conj(g, j) for j in range(1, rank + 1))
                for g in reduced_words(6)
            )

        for _ in range(8):
            w = random_word(rng, n, max_len=5)
            a = artin_action(w)
            assert (is_inner(a) is not None) == brute(a)


class TestEquals:
    @pytest.mark.parametrize("n", range(4, 10))
    def test_full_twist_power_identity(self, n):
        assert equals(full_twist(n), alpha(n, 0) ** n)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_half_twist_reverses_indices(self, n):
        D = half_twist(n)
        for i in range(1, n):
            assert equals(D * sigma(n, i) * D.inv(), sigma(n, n - i))

    def test_distinct_generators(self):
        assert not equals(sigma(4, 1), sigma(4, 2))

    def test_three_strand_table_path(self):
        assert sphere_three_strand_table().order == 12
        assert equals(full_twist(3), alpha(3, 0) ** 3)
        assert not equals(sigma(3, 1), sigma(3, 2))

    def test_congruence_properties(self):
        rng = random.Random(3)
        n = 5
        for _ in range(10):
            u, v, w = (random_word(rng, n, 8) for _ in range(3))
            assert equals(w, w)
            w2 = w * surface_relation(n)
            assert equals(w, w2) and equals(w2, w)
            # Multiplicative on both sides of an equality.
            assert equals(u * w * v, u * w2 * v)

    def test_central_value(self):
        assert central_value(identity(6)) == 0
        assert central_value(full_twist(6)) == 2
        assert central_value(sigma(6, 1) ** 2) is None
        assert is_central(full_twist(7)) and not is_central(sigma(7, 1))


class TestOrder:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_torsion_orders(self, n):
        assert order_of(alpha(n, 0)) == Order.finite(2 * n)
        assert order_of(alpha(n, 1)) == Order.finite(2 * (n - 1))
        assert order_of(alpha(n, 2)) == Order.finite(2 * (n - 2))

    def test_identity_and_full_twist(self):
        assert order_of(identity(5)) == Order.finite(1)
        assert order_of(full_twist(5)) == Order.finite(2)

    def test_pure_square_infinite(self):
        assert not order_of(word(4, [1, 1])).is_finite

    @pytest.mark.parametrize("n", (4, 5, 6, 7, 8))
    def test_torsion_census(self, n):
        candidates = set(torsion_order_candidates(n))
        witnessed = set()
        for i in (0, 1, 2):
            m = 2 * (n - i)
            for k in range(1, m + 1):
                witnessed.add(m // __import__("math").gcd(m, k))
        assert witnessed == candidates

    @pytest.mark.parametrize("n", (5, 6))
    def test_torsion_census_through_the_oracle(self, n):
        # Every candidate order is attained by an explicit torsion power.
        import math

        for d in torsion_order_candidates(n):
            i = next(
                i for i in (0, 1, 2) if (2 * (n - i)) % d == 0
            )
            k = 2 * (n - i) // d
            assert order_of(alpha(n, i) ** k) == Order.finite(d)

    def test_random_orders_land_in_candidates(self):
        rng = random.Random(9)
        for n in (4, 5, 6):
            cands = set(torsion_order_candidates(n))
            for _ in range(15):
                o = order_of(random_word(rng, n, 10))
                if o.is_finite:
                    assert o.value in cands


class TestCommute:
    def test_full_twist_is_central(self):
        rng = random.Random(1)
        for n in (4, 5, 6):
            ft = full_twist(n)
            for _ in range(5):
                assert commute(random_word(rng, n), ft)

    def test_generators_do_not_commute(self):
        assert not commute(sigma(4, 1), sigma(4, 2))

    def test_commuter_element(self):
        for n, i, m in ((6, 0, 2), (8, 0, 4), (8, 2, 3)):
            d = delta_comm(n, m if (n - i) % m == 0 else m // 2, i)
            assert commute(d, alpha(n, i) ** m)

    def test_conjugation_action(self):
        g, w = sigma(5, 1), sigma(5, 2)
        assert conjugation_action(g, w) == g * w * g.inv()


class TestForgettingTorsion:
    @pytest.mark.parametrize("n", (6, 7))
    def test_alpha2_projects_to_alpha0(self, n):
        from spherebraid.words import forget_strands

        got = forget_strands(alpha(n, 2), range(1, n - 1))
        assert equals(got, alpha(n - 2, 0))

    def test_full_twist_projects_to_full_twist(self):
        from spherebraid.words import forget_strands

        got = forget_strands(full_twist(6), [1, 2, 3])
        assert equals(got, full_twist(3))


class TestVerifyFiniteSubgroup:
    @pytest.mark.parametrize("n,i", [(5, 0), (5, 2), (6, 0), (6, 2)])
    def test_standard_dicyclic_copy(self, n, i):
        gens = [alpha_prime(n, i), half_twist(n)]
        assert verify_finite_subgroup(gens, make_group("dicyclic", n - i))

    def test_binary_tetrahedral_copy_on_six_strands(self):
        g, d = W.gamma_b6(), W.delta_b6()
        x = g ** 4  # order-3 part of the order-6 generator
        assert verify_finite_subgroup([d, x * d * x.inv(), x], make_group("T*"))

    def test_generator_order_failure(self):
        assert not verify_finite_subgroup([sigma(4, 1)], make_group("cyclic", 2))

    def test_quaternion_copy(self):
        n = 6
        gens = [alpha(n, 0) ** 3, half_twist(n)]
        assert verify_finite_subgroup(gens, make_group("dicyclic", 2))


class TestBudget:
    def test_pseudo_anosov_power_aborts_cleanly(self):
        # Images grow exponentially for these; the oracle must refuse with a
        # clear error instead of exhausting memory.
        with pytest.raises(OracleBudgetError):
            order_of(word(4, [1, -2] * 18))

    def test_budget_parameter(self):
        from spherebraid.oracle import artin_action

        with pytest.raises(OracleBudgetError):
            artin_action(word(4, [1, -2] * 9), budget=1000)


class TestCatalogIdentities:
    """Cross-identities between the direct letter forms and conjugated forms."""

    @pytest.mark.parametrize("n,i,m", [(6, 0, 1), (8, 0, 2), (8, 2, 1), (10, 2, 2), (12, 0, 3)])
    def test_xi_is_conjugated_commuter(self, n, i, m):
        a0 = alpha(n, 0)
        rhs = (a0 ** (i // 2)) * W.delta_comm(n, 2 * m, i) * (a0 ** (-(i // 2)))
        assert equals(W.xi_elt(n, i, m), rhs)

    @pytest.mark.parametrize("n,i,m", [(8, 0, 2), (8, 2, 1), (12, 0, 3)])
    def test_xi_prime_is_half_twist_conjugate(self, n, i, m):
        D = half_twist(n)
        assert equals(W.xi_prime_elt(n, i, m), D * W.xi_elt(n, i, m) * D.inv())

    @pytest.mark.parametrize("n,i", [(8, 0), (10, 2)])
    def test_lambda_fixed_by_half_twist(self, n, i):
        lam = W.lambda_elt(n, i, 1)
        D = half_twist(n)
        assert equals(D * lam * D.inv(), lam)


class TestForgettingIsHomomorphic:
    def test_on_pure_band_products(self):
        rng = random.Random(12)
        n, keep = 6, (1, 2, 3, 4)
        pool = [W.band_generator(n, i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        for _ in range(10):
            u = identity(n)
            v = identity(n)
            for _ in range(3):
                u = u * rng.choice(pool) ** rng.choice([1, -1])
                v = v * rng.choice(pool) ** rng.choice([1, -1])
            left = W.forget_strands(u * v, keep)
            right = W.forget_strands(u, keep) * W.forget_strands(v, keep)
            assert equals(left, right)
