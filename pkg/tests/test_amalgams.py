import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherebraid.amalgams import (
    AmalgamElement,
    amalgam_iso,
    build_amalgam,
    distinguish_k1_k2,
    find_extension,
    hom_from_gen_images,
    k1,
    k1_prime,
    k2,
    k2_prime,
    to_semidirect,
)
from spherebraid.groups import (
    aut_from_gen_images,
    is_isomorphic,
    make_group,
    quotient,
    structure_name,
    subgroups,
)


def cyclic_spec(q):
    big, small = make_group("cyclic", 4 * q), make_group("cyclic", 2 * q)
    emb = hom_from_gen_images(small, big, (2 % (4 * q),))
    return build_amalgam(big, big, small, emb, emb)


def dic_over_cyclic_spec(q):
    big, small = make_group("dicyclic", q), make_group("cyclic", 2 * q)
    emb = hom_from_gen_images(small, big, (big.generators[0],))
    return build_amalgam(big, big, small, emb, emb)


class TestNormalForm:
    def test_subgroup_elements_have_no_syllables(self):
        spec = cyclic_spec(1)
        for h in range(spec.f.order):
            assert spec.from_f(h).syllables == ()

    def test_factor_element_times_inverse(self):
        spec = cyclic_spec(1)
        g = spec.embed(1, 1)  # a generator of the first factor, outside F
        assert spec.mul(g, spec.inv(g)) == spec.one

    def test_two_syllable_product_infinite(self):
        spec = cyclic_spec(1)
        prod = spec.mul(spec.embed(1, 1), spec.embed(2, 1))
        assert prod.syllable_length == 2
        assert not spec.element_order(prod).is_finite

    def test_alternation_enforced(self):
        with pytest.raises(ValueError):
            AmalgamElement(0, (1, 1))

    @pytest.mark.parametrize("spec_fn", [lambda: cyclic_spec(2), lambda: dic_over_cyclic_spec(3), k1, k2])
    def test_exhaustive_ball_arithmetic(self, spec_fn):
        spec = spec_fn()
        ball1, ball3 = spec.ball(1), spec.ball(3)
        in_ball = set(ball3)
        for a in ball3:
            assert spec.mul(a, spec.inv(a)) == spec.one
            for b in ball1:
                c = spec.mul(a, b)
                assert c.syllable_length > 3 or c in in_ball
        for a in ball1:
            for b in ball1:
                for c in ball1:
                    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))

    def test_torsion_dichotomy(self):
        spec = k1()
        for e in spec.ball(2):
            assert spec.element_order(e).is_finite == (e.syllable_length <= 1)

    @given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
    @settings(max_examples=50, deadline=None)
    def test_sampled_associativity_k2(self, i, j, k):
        spec = k2()
        ball = spec.ball(2)
        a, b, c = ball[i * 37 % len(ball)], ball[j * 53 % len(ball)], ball[k * 11 % len(ball)]
        assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))


class TestBuildValidation:
    def test_rejects_non_injective(self):
        big, small = make_group("cyclic", 8), make_group("cyclic", 4)
        bad = hom_from_gen_images(small, big, (4,))  # kernel of order 2
        with pytest.raises(ValueError):
            build_amalgam(big, big, small, bad, bad)

    def test_rejects_wrong_index(self):
        big, small = make_group("cyclic", 12), make_group("cyclic", 4)
        emb = hom_from_gen_images(small, big, (3,))
        with pytest.raises(ValueError):
            build_amalgam(big, big, small, emb, emb)


class TestSemidirect:
    def test_cyclic_gluing(self):
        spec = cyclic_spec(1)
        form = to_semidirect(spec, find_extension(spec))
        assert form.signs.count(1) == 2 and form.signs.count(-1) == 2

    def test_dicyclic_gluing_signs_match_subgroup(self):
        spec = dic_over_cyclic_spec(3)
        form = to_semidirect(spec, find_extension(spec))
        image = spec.image_set(2)
        assert all((form.signs[g] == 1) == (g in image) for g in range(spec.g2.order))

    def test_straight_quaternion_gluing(self):
        spec = k1()
        form = to_semidirect(spec, find_extension(spec))
        assert form.generator.syllable_length == 2
        assert form.signs.count(1) == 8

    def test_twisted_gluing_has_no_extension(self):
        assert find_extension(k2()) is None

    def test_invalid_extension_rejected(self):
        spec = k1()
        G = spec.g1
        x, y = G.generators
        bad = aut_from_gen_images(G, (G.inv(x), y))
        with pytest.raises(ValueError):
            to_semidirect(spec, bad)


class TestGluingClasses:
    def test_shared_relations(self):
        spec = k1()
        G = spec.g1
        x, y = G.generators
        # The identified pieces coincide in the amalgam: x^2 = a^2 and y = b.
        x2 = G.mul(x, x)
        assert spec.embed(1, x2) == spec.embed(2, x2)
        assert spec.embed(1, y) == spec.embed(2, y)

    def test_shared_central_involution(self):
        for spec in (k1(), k2()):
            G = spec.g1
            z = G.pow(G.generators[0], 4)
            e = spec.embed(1, z)
            assert e == spec.embed(2, z)
            assert spec.element_order(e).value == 2

    def test_twisted_permuter_identities(self):
        spec = k2()
        G = spec.g1
        x, y = G.generators
        x2 = G.mul(x, x)
        u = spec.mul(spec.embed(2, x), spec.embed(1, x))
        trip = [spec.embed(1, x2), spec.embed(1, y), spec.embed(1, G.mul(x2, y))]
        for j in range(3):
            assert spec.conj(u, trip[j]) == trip[(j + 1) % 3]

    def test_straight_conjugation_signs(self):
        spec = k1()
        G = spec.g1
        x, y = G.generators
        t = spec.mul(spec.embed(1, x), spec.inv(spec.embed(2, x)))
        assert spec.conj(spec.embed(1, x), t) == spec.inv(t)
        assert spec.conj(spec.embed(2, x), t) == spec.inv(t)
        assert spec.conj(spec.embed(1, y), t) == t
        assert spec.conj(spec.embed(2, y), t) == t

    def test_report_passes(self):
        rep = distinguish_k1_k2()
        assert rep.ok
        assert rep.k1_quotient_order == 16 and rep.k1_quotient_name == "Q16"

    def test_dihedral_report_passes(self):
        rep = distinguish_k1_k2(dihedral=True)
        assert rep.ok
        assert rep.k1_quotient_order == 8 and rep.k1_quotient_name == "Dih8"

    def test_prime_specs_are_central_quotients(self):
        # The dihedral factors are the quaternion factors modulo the shared
        # central involution, and the amalgamated Klein group is the image
        # of the amalgamated quaternion group.
        q16 = make_group("dicyclic", 4)
        z2 = next(h for h in subgroups(q16) if h.name == "Z2")
        assert is_isomorphic(quotient(q16, z2), k1_prime().g1)
        q8 = make_group("dicyclic", 2)
        z2q = next(h for h in subgroups(q8) if h.name == "Z2")
        assert structure_name(quotient(q8, z2q)) == "Z2 x Z2"
        assert structure_name(k1_prime().f) == "Z2 x Z2"


class TestAmalgamIso:
    def test_identity_thetas(self):
        spec = k1()
        ident = tuple(range(spec.g1.order))
        cert = amalgam_iso(spec, spec, ident, ident)
        assert cert.ok and cert.ball_bijective

    def test_first_and_fourth_gluings_isomorphic(self):
        G = make_group("dicyclic", 4)
        F = make_group("dicyclic", 2)
        x, y = G.generators
        x2 = G.mul(x, x)
        i1 = hom_from_gen_images(F, G, (x2, y))
        i2_four = hom_from_gen_images(F, G, (x2, G.mul(x2, y)))
        spec4 = build_amalgam(G, G, F, i1, i2_four)
        psi = aut_from_gen_images(G, (x, G.mul(x2, y)))
        cert = amalgam_iso(k1(), spec4, tuple(range(G.order)), psi)
        assert cert.ok and cert.ball_bijective

    def test_dihedral_analog(self):
        G = make_group("dihedral", 4)
        F = make_group("dihedral", 2)
        x, y = G.generators
        x2 = G.mul(x, x)
        i1 = hom_from_gen_images(F, G, (x2, y))
        i2_four = hom_from_gen_images(F, G, (x2, G.mul(x2, y)))
        spec4 = build_amalgam(G, G, F, i1, i2_four)
        psi = aut_from_gen_images(G, (x, G.mul(x2, y)))
        cert = amalgam_iso(k1_prime(), spec4, tuple(range(G.order)), psi)
        assert cert.ok and cert.ball_bijective

    def test_rejects_non_intertwining(self):
        spec = k1()
        G = spec.g1
        x, y = G.generators
        theta = aut_from_gen_images(G, (G.inv(x), y))
        with pytest.raises(ValueError):
            amalgam_iso(spec, k2(), theta, theta)
