import itertools
import random

import pytest

from spherebraid.groups import (
    CosetBudgetError,
    GroupPresentation,
    action_catalog,
    automorphisms,
    aut_from_gen_images,
    center,
    classify_action,
    derived_subgroup,
    inner_automorphisms,
    is_isomorphic,
    make_group,
    outer_group,
    quotient,
    restriction_is_surjective,
    sphere_three_strand_table,
    structure_name,
    subgroup_table,
    subgroups,
    todd_coxeter,
)


REPRESENTATIVE_TABLES = [
    ("B3", sphere_three_strand_table),
    ("Z6", lambda: make_group("cyclic", 6)),
    ("Dih8", lambda: make_group("dihedral", 4)),
    ("Q8", lambda: make_group("dicyclic", 2)),
    ("Dic12", lambda: make_group("dicyclic", 3)),
    ("Q16", lambda: make_group("dicyclic", 4)),
    ("A4", lambda: make_group("A4")),
    ("S4", lambda: make_group("S4")),
    ("T*", lambda: make_group("T*")),
    ("O*", lambda: make_group("O*")),
    ("A5", lambda: make_group("A5")),
    ("I*", lambda: make_group("I*")),
]


class TestGroupAxioms:
    @pytest.mark.parametrize("name,build", REPRESENTATIVE_TABLES)
    def test_axioms_exhaustive(self, name, build):
        G = build()
        e = G.identity
        n = G.order
        assert all(G.mult[e][a] == a == G.mult[a][e] for a in range(n))
        assert all(G.mult[a][G.inverse[a]] == e for a in range(n))
        if n <= 60:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(200_000))
        assert all(
            G.mult[G.mult[a][b]][c] == G.mult[a][G.mult[b][c]] for a, b, c in triples
        )

    @pytest.mark.parametrize("name,build", REPRESENTATIVE_TABLES)
    def test_generators_generate(self, name, build):
        G = build()
        assert len(G.closure(G.generators)) == G.order
        assert all(G.eval_word(G.words[x]) == x for x in range(G.order))


class TestCosetEnumeration:
    def test_three_strand_group(self):
        assert sphere_three_strand_table().order == 12

    def test_three_strand_group_structure(self):
        # The order-12 group is the metacyclic semidirect product of a
        # three-cycle by a four-cycle, i.e. the dicyclic group of order 12.
        assert is_isomorphic(sphere_three_strand_table(), make_group("dicyclic", 3))

    @pytest.mark.parametrize("m", range(2, 11))
    def test_dicyclic_orders(self, m):
        assert make_group("dicyclic", m).order == 4 * m

    def test_binary_polyhedral_orders(self):
        assert make_group("T*").order == 24
        assert make_group("O*").order == 48
        assert make_group("I*").order == 120

    def test_budget_error_on_free_presentation(self):
        free = GroupPresentation(2, ((1, 2, -1, -2),))  # Z x Z, infinite
        with pytest.raises(CosetBudgetError):
            todd_coxeter(free, limit=500)

    def test_deterministic(self):
        p = GroupPresentation(2, ((1,) * 4 + (-2, -2), (2, 1, -2, 1)))
        assert todd_coxeter(p).mult == todd_coxeter(p).mult

    def test_subgroup_budget(self):
        from spherebraid.groups import SubgroupBudgetError

        with pytest.raises(SubgroupBudgetError):
            subgroups(make_group("cyclic", 201))

    def test_coset_budget_env(self, monkeypatch):
        monkeypatch.setenv("SPHEREBRAID_COSET_BUDGET", "7")
        from spherebraid.groups import default_coset_budget

        assert default_coset_budget() == 7


class TestStructure:
    def test_names(self):
        assert structure_name(make_group("cyclic", 6)) == "Z6"
        assert structure_name(make_group("dicyclic", 2)) == "Q8"
        assert structure_name(make_group("dicyclic", 3)) == "Dic12"
        assert structure_name(make_group("dihedral", 2)) == "Z2 x Z2"
        assert structure_name(make_group("dihedral", 3)) == "Dih6"
        assert structure_name(make_group("T*")) == "T*"
        assert structure_name(make_group("A5")) == "A5"

    def test_q8_order_histogram(self):
        assert make_group("dicyclic", 2).order_histogram() == ((1, 1), (2, 1), (4, 6))

    def test_cyclic_has_full_order_element(self):
        G = make_group("cyclic", 6)
        assert max(G.element_orders) == 6

    def test_unique_involution_in_binary_icosahedral(self):
        G = make_group("I*")
        assert sum(1 for o in G.element_orders if o == 2) == 1


class TestSubgroups:
    def test_cyclic_four(self):
        names = sorted(h.name for h in subgroups(make_group("cyclic", 4)))
        assert names == ["1", "Z2", "Z4"]

    def test_binary_tetrahedral_lattice(self):
        names = {h.name for h in subgroups(make_group("T*"))}
        assert names == {"1", "Z2", "Z3", "Z4", "Z6", "Q8", "T*"}

    def test_binary_octahedral_quaternion16_copies(self):
        hs = [h for h in subgroups(make_group("O*")) if h.name == "Q16"]
        assert len(hs) == 3 and not any(h.normal for h in hs)

    def test_binary_icosahedral_unique_normal(self):
        hs = [h for h in subgroups(make_group("I*"))
              if h.normal and 1 < h.order < 120]
        assert [h.name for h in hs] == ["Z2"]

    def test_characteristic_by_uniqueness_flags(self):
        hs = {h.name: h for h in subgroups(make_group("T*"))}
        assert hs["Q8"].unique_of_class
        assert not hs["Z3"].unique_of_class


class TestQuotientsAndIso:
    def test_quotient_by_center(self):
        q8 = make_group("dicyclic", 2)
        assert structure_name(quotient(q8, center(q8))) == "Z2 x Z2"
        ts = make_group("T*")
        assert structure_name(quotient(ts, center(ts))) == "A4"
        os_ = make_group("O*")
        assert structure_name(quotient(os_, center(os_))) == "S4"
        is_ = make_group("I*")
        assert structure_name(quotient(is_, center(is_))) == "A5"

    def test_not_isomorphic_by_histogram(self):
        assert not is_isomorphic(make_group("cyclic", 4), make_group("dihedral", 2))

    def test_dicyclic_quotient_is_dihedral(self):
        q16 = make_group("dicyclic", 4)
        z2 = next(h for h in subgroups(q16) if h.name == "Z2")
        assert structure_name(quotient(q16, z2)) == "Dih8"

    def test_derived_subgroup(self):
        q8 = make_group("dicyclic", 2)
        assert len(derived_subgroup(q8)) == 2


class TestAutomorphisms:
    def test_quaternion_aut_out(self):
        q8 = make_group("dicyclic", 2)
        assert automorphisms(q8).order == 24
        out = outer_group(q8)
        assert out.order == 6 and structure_name(out) == "Dih6"

    def test_binary_polyhedral_out(self):
        for tag in ("T*", "O*", "I*"):
            assert outer_group(make_group(tag)).order == 2

    def test_cyclic_aut(self):
        assert automorphisms(make_group("cyclic", 6)).order == 2

    def test_inner_count_matches_center(self):
        ts = make_group("T*")
        assert len(inner_automorphisms(ts)) == 24 // len(center(ts).elements)

    def test_aut_from_gen_images_rejects_bad(self):
        q8 = make_group("dicyclic", 2)
        x, y = q8.generators
        with pytest.raises(ValueError):
            aut_from_gen_images(q8, (q8.identity, y))


class TestClassifyAction:
    def test_quaternion_tags(self):
        q8 = make_group("dicyclic", 2)
        cat = action_catalog(q8)
        assert classify_action(q8, cat["alpha"]) == "alpha"
        assert classify_action(q8, cat["beta"]) == "beta"
        assert classify_action(q8, tuple(range(8))) == "trivial"

    def test_quaternion_six_reps_to_three_tags(self):
        from spherebraid.groups import _compose_maps

        q8 = make_group("dicyclic", 2)
        cat = action_catalog(q8)
        a, b = cat["alpha"], cat["beta"]
        a2 = _compose_maps(a, a)
        assert classify_action(q8, a2) == "alpha"
        assert classify_action(q8, _compose_maps(a, b)) == "beta"
        assert classify_action(q8, _compose_maps(a2, b)) == "beta"

    def test_cyclic_inversion(self):
        z6 = make_group("cyclic", 6)
        assert classify_action(z6, action_catalog(z6)["rho"]) == "rho"

    def test_tetrahedral_nontrivial(self):
        ts = make_group("T*")
        assert classify_action(ts, action_catalog(ts)["omega"]) == "omega"

    def test_klein_tags_distinct(self):
        v4 = make_group("klein")
        cat = action_catalog(v4)
        assert classify_action(v4, cat["alpha~"]) == "alpha~"
        assert classify_action(v4, cat["beta~"]) == "beta~"


class TestIndexTwoRestriction:
    @pytest.mark.parametrize("q", range(1, 9))
    def test_cyclic(self, q):
        G = make_group("cyclic", 4 * q)
        h = next(x for x in subgroups(G) if x.order == 2 * q)
        assert restriction_is_surjective(G, h.elements)

    @pytest.mark.parametrize("q", range(3, 9))
    def test_dicyclic_over_cyclic(self, q):
        G = make_group("dicyclic", q)
        h = next(x for x in subgroups(G) if x.name == f"Z{2 * q}")
        assert restriction_is_surjective(G, h.elements)

    def test_quaternion_over_cyclic_four(self):
        G = make_group("dicyclic", 2)
        for h in subgroups(G):
            if h.name == "Z4":
                assert restriction_is_surjective(G, h.elements)

    @pytest.mark.parametrize("q", (6, 8, 10))
    def test_dicyclic_over_dicyclic(self, q):
        G = make_group("dicyclic", q)
        target = f"Q{2 * q}" if (q // 2) & (q // 2 - 1) == 0 else f"Dic{2 * q}"
        hs = [x for x in subgroups(G) if x.name == target]
        assert hs and all(restriction_is_surjective(G, h.elements) for h in hs)

    def test_octahedral_over_tetrahedral(self):
        G = make_group("O*")
        h = next(x for x in subgroups(G) if x.name == "T*")
        assert restriction_is_surjective(G, h.elements)

    def test_quaternion16_over_quaternion8_fails(self):
        G = make_group("dicyclic", 4)
        h = next(x for x in subgroups(G) if x.name == "Q8")
        assert not restriction_is_surjective(G, h.elements)

    def test_subgroup_table_roundtrip(self):
        G = make_group("O*")
        h = next(x for x in subgroups(G) if x.name == "T*")
        assert is_isomorphic(subgroup_table(G, h.elements), make_group("T*"))
