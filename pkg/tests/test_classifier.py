import pytest

from spherebraid.classifier import (
    GroupDesc,
    VcClassRecord,
    WitnessUnavailable,
    enumerate_all,
    enumerate_v1,
    enumerate_v2,
    enumerate_vtilde,
    finite_classes,
    project_to_mcg,
    realization_status,
    witness,
)
from spherebraid.words import alpha, delta_comm, half_twist, omega1, zeta_elt


def shapes(records):
    return {r.shape for r in records}


def by_shape(records, shape):
    return next(r for r in records if r.shape == shape)


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


class TestFiniteClasses:
    def test_maximal_classes_smallest_case(self):
        recs = finite_classes(4)
        maximal = {str(r.desc) for r in recs if r.maximal}
        assert maximal == {"Q16", "T*"}
        z6 = next(r for r in recs if str(r.desc) == "Z6")
        assert "T*" in z6.inside

    def test_five_strands_contains_expected(self):
        names = {str(r.desc) for r in finite_classes(5)}
        assert {"Z8", "Dic20", "Dic12"} <= names

    @pytest.mark.parametrize("n", range(4, 13))
    def test_order_two_always_present(self, n):
        assert any(str(r.desc) == "Z2" for r in finite_classes(n))

    def test_n_below_four_rejected(self):
        with pytest.raises(ValueError):
            finite_classes(3)

    def test_congruence_gates(self):
        assert any(str(r.desc) == "I*" for r in finite_classes(12))
        assert not any(str(r.desc) == "I*" for r in finite_classes(6))
        assert any(str(r.desc) == "O*" for r in finite_classes(6))
        assert not any(str(r.desc) == "O*" for r in finite_classes(4))


def _independent_type1_predicate(r: VcClassRecord) -> bool:
    """Re-derivation of the Type I membership conditions, written directly
    from the defining divisibility clauses (separate from the enumerator)."""
    n, f, act = r.n, r.factor, r.action
    if f.family == "Z":
        q = f.param
        if act == "trivial":
            return any(
                q in divisors(2 * (n - i)) and q != 2 * (n - i)
                and not ((n - i) % 2 == 1 and q == n - i)
                for i in r.admissible_i
            ) and set(r.admissible_i) <= {0, 1, 2}
        if act == "rho":
            return q >= 3 and all(
                i in (0, 2) and q in divisors(2 * (n - i)) and q != 2 * (n - i)
                and not (n % 2 == 1 and q == n - i)
                for i in r.admissible_i
            )
    if f.family == "Dic" and f.param >= 3:
        m = f.param
        if act == "trivial":
            return all(i in (0, 2) and m in divisors(n - i) and m != n - i
                       for i in r.admissible_i)
        if act == "nu":
            return all(i in (0, 2) and m in divisors(n - i) and ((n - i) // m) % 2 == 0
                       for i in r.admissible_i)
    if f == GroupDesc("Dic", 2):
        return n % 2 == 0 and act in ("trivial", "alpha", "beta")
    if f == GroupDesc("T*"):
        return (act == "trivial" and n % 2 == 0) or (act == "omega" and n % 6 in (0, 2))
    if f == GroupDesc("O*"):
        return act == "trivial" and n % 6 in (0, 2)
    if f == GroupDesc("I*"):
        return act == "trivial" and n % 30 in (0, 2, 12, 20)
    return False


def _independent_type2_predicate(r: VcClassRecord) -> bool:
    n = r.n
    a, b = r.factors
    f = r.amalgamated
    if a.family == "Z" and b.family == "Z":
        q = a.param // 4
        return (a == b == GroupDesc("Z", 4 * q) and f == GroupDesc("Z", 2 * q)
                and all((n - i) % 2 == 0 and q in divisors((n - i) // 2)
                        for i in r.admissible_i))
    if a.family == "Z" and b.family == "Dic":
        q = b.param
        return (q >= 2 and a == GroupDesc("Z", 4 * q) and f == GroupDesc("Z", 2 * q)
                and all(i in (0, 2) and (n - i) % 2 == 0 and q in divisors((n - i) // 2)
                        for i in r.admissible_i))
    if a.family == "Dic" and f.family == "Z":
        q = a.param
        return (q >= 2 and a == b and f == GroupDesc("Z", 2 * q)
                and all(i in (0, 2) and q in divisors(n - i) and q != n - i
                        for i in r.admissible_i))
    if a.family == "Dic" and f.family == "Dic":
        q = a.param
        return (q >= 4 and q % 2 == 0 and a == b and f == GroupDesc("Dic", q // 2)
                and (r.gluing in ("K1", "K2")) == (q == 4)
                and all(i in (0, 2) and q in divisors(n - i) for i in r.admissible_i))
    if a == GroupDesc("O*"):
        return b == GroupDesc("O*") and f == GroupDesc("T*") and n % 6 in (0, 2)
    return False


class TestEnumerationV1:
    def test_five_strands_examples(self):
        v1 = enumerate_v1(5)
        assert "Z4 x Z" in shapes(v1)
        assert not any(r.factor == GroupDesc("Dic", 2) for r in v1)

    def test_six_strands_has_twisted_tetrahedral(self):
        assert "T* x|omega Z" in shapes(enumerate_v1(6))

    def test_quaternion_tags_carry_no_distinctness_claim(self):
        tags = [r.action for r in enumerate_v1(8) if r.factor == GroupDesc("Dic", 2)]
        assert sorted(tags) == ["alpha", "beta", "trivial"]

    @pytest.mark.parametrize("n", range(4, 13))
    def test_independent_predicate(self, n):
        for r in enumerate_v1(n):
            assert _independent_type1_predicate(r), r.shape

    @pytest.mark.parametrize("n", range(4, 13))
    def test_deduplication_by_class(self, n):
        keys = [r.key for r in enumerate_v1(n)]
        assert len(keys) == len(set(keys))


class TestEnumerationV2:
    def test_eight_strands_has_large_cyclic_gluing(self):
        assert "Z16 *_{Z8} Z16" in shapes(enumerate_v2(8))

    def test_six_strands_has_octahedral_amalgam(self):
        assert "O* *_{T*} O*" in shapes(enumerate_v2(6))

    def test_odd_strands_have_no_dicyclic_over_dicyclic(self):
        assert not any(
            r.amalgamated and r.amalgamated.family == "Dic" for r in enumerate_v2(5)
        )

    def test_quaternion16_gluing_splits(self):
        glu = [r.gluing for r in enumerate_v2(8)
               if r.factors == (GroupDesc("Dic", 4), GroupDesc("Dic", 4))
               and r.amalgamated == GroupDesc("Dic", 2)]
        assert sorted(glu) == ["K1", "K2"]

    @pytest.mark.parametrize("n", range(4, 13))
    def test_independent_predicate(self, n):
        for r in enumerate_v2(n):
            assert _independent_type2_predicate(r), r.shape

    @pytest.mark.parametrize("n", range(4, 13))
    def test_factors_appear_in_finite_classes(self, n):
        finite = {r.desc for r in finite_classes(n)}
        for r in enumerate_all(n):
            pieces = (r.factor,) if r.kind == "I" else (*r.factors, r.amalgamated)
            for d in pieces:
                assert d in finite, (r.shape, str(d))


class TestStatuses:
    def test_exclusions(self):
        assert by_shape(enumerate_v1(4), "T* x Z").status == "not_realized"
        assert by_shape(enumerate_v1(6), "O* x Z").status == "not_realized"

    def test_open_sets(self):
        assert by_shape(enumerate_v1(10), "Q8 x|alpha Z").status == "open"
        assert by_shape(enumerate_v1(8), "T* x Z").status == "open"
        assert by_shape(enumerate_v1(6), "T* x|omega Z").status == "open"
        assert by_shape(enumerate_v2(6), "O* *_{T*} O*").status == "open"
        assert by_shape(enumerate_v2(6), "Q16 *_{Q8} Q16 [K2]").status == "open"

    def test_realized_large_cases(self):
        assert by_shape(enumerate_v2(36), "O* *_{T*} O*").status == "realized"
        assert by_shape(enumerate_v1(30), "I* x Z").status == "open"
        assert by_shape(enumerate_v1(60), "I* x Z").status == "realized"
        assert by_shape(enumerate_v1(16), "T* x Z").status == "realized"
        assert by_shape(enumerate_v1(12), "Q8 x|alpha Z").status == "realized"

    def test_k2_congruence_regimes(self):
        assert by_shape(enumerate_v2(10), "Q16 *_{Q8} Q16 [K2]").status == "realized"
        assert by_shape(enumerate_v2(14), "Q16 *_{Q8} Q16 [K2]").status == "open"
        assert by_shape(enumerate_v2(42), "Q16 *_{Q8} Q16 [K2]").status == "realized"

    def test_odd_strand_counts_fully_realized(self):
        for n in (5, 7, 9, 11):
            assert all(r.status == "realized" for r in enumerate_all(n))

    def test_status_requires_braid_record(self):
        rec = enumerate_vtilde(6)[0]
        with pytest.raises(ValueError):
            realization_status(rec)


class TestProjection:
    def test_factor_projections(self):
        recs = enumerate_v1(14)
        dic24 = next(r for r in recs if r.factor == GroupDesc("Dic", 6) and r.action == "trivial")
        assert project_to_mcg(dic24).factor == GroupDesc("Dih", 6)

    def test_type2_projection_small(self):
        rec = by_shape(enumerate_v2(4), "Z4 *_{Z2} Z4")
        proj = project_to_mcg(rec)
        assert proj.shape == "Z2 *_{1} Z2"

    def test_quaternion_action_projection(self):
        rec = by_shape(enumerate_v1(8), "Q8 x|alpha Z")
        proj = project_to_mcg(rec)
        assert proj.factor == GroupDesc("V4") and proj.action == "alpha~"

    @pytest.mark.parametrize("n", range(4, 13))
    def test_projection_is_onto_the_tilde_family(self, n):
        projected = {project_to_mcg(r).key for r in enumerate_all(n)}
        tilde = {r.key for r in enumerate_vtilde(n)}
        assert projected == tilde

    @pytest.mark.parametrize("n", range(4, 13))
    def test_projection_statuses_agree(self, n):
        tilde = {r.key: r.status for r in enumerate_vtilde(n)}
        for rec in enumerate_all(n):
            proj = project_to_mcg(rec)
            assert tilde[proj.key] == proj.status
            if rec.status == "realized":
                assert proj.status == "realized"

    def test_odd_cyclic_preimages_merge(self):
        # Both Z3-by-Z and Z6-by-Z project onto the same mapping-class record.
        recs = enumerate_v1(7)
        z3 = next(r for r in recs if r.factor == GroupDesc("Z", 3) and r.action == "trivial")
        z6 = next(r for r in recs if r.factor == GroupDesc("Z", 6) and r.action == "trivial")
        assert project_to_mcg(z3).key == project_to_mcg(z6).key

    def test_mcg_statuses_track_exclusions(self):
        assert by_shape(enumerate_vtilde(4), "A4 x Z").status == "not_realized"
        assert by_shape(enumerate_vtilde(6), "S4 x Z").status == "not_realized"
        assert by_shape(enumerate_vtilde(6), "S4 *_{A4} S4").status == "open"
        assert by_shape(enumerate_vtilde(8), "Dih8 *_{Dih4} Dih8 [K2']").status == "realized"
        assert by_shape(enumerate_vtilde(14), "Dih8 *_{Dih4} Dih8 [K2']").status == "open"


class TestWitness:
    def test_cyclic_by_z_generators(self):
        rec = by_shape(enumerate_v1(6), "Z4 x Z")
        w = witness(rec)
        assert w.ok
        gens = dict(w.generators)
        assert gens["finite"] == alpha(6, 0) ** 3
        assert gens["axis"] == delta_comm(6, 3, 0)

    def test_quaternion_beta_generators(self):
        rec = by_shape(enumerate_v1(8), "Q8 x|beta Z")
        w = witness(rec)
        assert w.ok
        gens = dict(w.generators)
        assert gens["finite-y"] == half_twist(8)
        assert gens["axis"] == omega1(8) * half_twist(8) == zeta_elt(8)

    def test_derived_cyclic_gluing_witness(self):
        rec = by_shape(enumerate_v2(8), "Z8 *_{Z4} Z8")
        w = witness(rec)
        assert w.ok
        gens = dict(w.generators)
        assert gens["factor-1"] == alpha(8, 0) ** 2
        assert gens["conjugator"] == delta_comm(8, 4, 0)

    def test_unavailable_for_geometric_classes(self):
        with pytest.raises(WitnessUnavailable):
            witness(by_shape(enumerate_v1(16), "T* x Z"))
        with pytest.raises(WitnessUnavailable):
            witness(by_shape(enumerate_v2(36), "O* *_{T*} O*"))

    def test_unavailable_for_open_and_excluded(self):
        with pytest.raises(WitnessUnavailable):
            witness(by_shape(enumerate_v1(4), "T* x Z"))
        with pytest.raises(WitnessUnavailable):
            witness(by_shape(enumerate_v1(10), "Q8 x|alpha Z"))

    def test_unavailable_for_mcg_records(self):
        with pytest.raises(WitnessUnavailable):
            witness(enumerate_vtilde(6)[0])

    def test_k2_witness_at_eight_strands(self):
        rec = by_shape(enumerate_v2(8), "Q16 *_{Q8} Q16 [K2]")
        w = witness(rec)
        assert w.ok
        labels = [label for label, _ in w.transcript]
        assert any("twisted gluing" in lab for lab in labels)


class TestStatusBoundaries:
    """The exception lists at their boundary strand counts."""

    EXPECTED_OPEN = {
        14: {"O* *_{T*} O*", "O* x Z", "Q16 *_{Q8} Q16 [K2]", "Q8 x|alpha Z",
             "T* x Z", "T* x|omega Z"},
        20: {"I* x Z", "O* *_{T*} O*", "O* x Z", "T* x|omega Z"},
        24: {"O* *_{T*} O*"},
        36: set(),
        38: {"O* *_{T*} O*", "Q16 *_{Q8} Q16 [K2]"},
        42: {"I* x Z"},
        60: set(),
        62: {"I* x Z"},
    }

    @pytest.mark.parametrize("n", sorted(EXPECTED_OPEN))
    def test_open_sets(self, n):
        got = {r.shape for r in enumerate_all(n) if r.status == "open"}
        assert got == self.EXPECTED_OPEN[n]

    @pytest.mark.parametrize("n", (20, 36, 63))
    def test_projection_onto_at_large_n(self, n):
        projected = {project_to_mcg(r).key for r in enumerate_all(n)}
        assert projected == {r.key for r in enumerate_vtilde(n)}
