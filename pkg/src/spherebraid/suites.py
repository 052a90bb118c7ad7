"""
Identity regression suites: every quotable identity of the engine, replayed
over a range of strand counts with machine-readable results.

Each suite is a deterministic sequence of independent named checks (they
share no state and may be evaluated in any order; the runner executes and
reports them in check-id order).  A nonzero count of failed checks makes
the overall result fail, which the command line turns into a nonzero exit
code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import amalgams, classifier, groups, oracle, words
from .groups import make_group
from .oracle import Order
from .words import BraidWord

__all__ = ["CheckResult", "SuiteResult", "SUITE_IDS", "run_suite", "default_range"]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    elapsed: float


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    n_range: tuple[int, int]
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> tuple[int, int]:
        good = sum(1 for c in self.checks if c.passed)
        return good, len(self.checks) - good


Check = tuple[str, Callable[[], bool]]


def _eq(w1: BraidWord, w2: BraidWord) -> Callable[[], bool]:
    return lambda: oracle.equals(w1, w2)


def _inf(w: BraidWord) -> Callable[[], bool]:
    return lambda: not oracle.order_of(w).is_finite


def _ord(w: BraidWord, k: int) -> Callable[[], bool]:
    return lambda: oracle.order_of(w) == Order.finite(k)


# ---------------------------------------------------------------------------
# Suite check generators.
# ---------------------------------------------------------------------------


def _presentation_checks(lo: int, hi: int) -> Iterator[Check]:
    yield "three-strand-group-order-12", lambda: groups.sphere_three_strand_table().order == 12
    for m in range(2, 11):
        yield f"dicyclic-{4 * m}-order", (lambda m=m: make_group("dicyclic", m).order == 4 * m)
    yield "quaternion-16-order", lambda: make_group("dicyclic", 4).order == 16
    yield "binary-tetrahedral-order-24", lambda: make_group("T*").order == 24
    yield "binary-octahedral-order-48", lambda: make_group("O*").order == 48
    yield "binary-icosahedral-order-120", lambda: make_group("I*").order == 120


def _torsion_checks(lo: int, hi: int) -> Iterator[Check]:
    for n in range(lo, hi + 1):
        ft = words.full_twist(n)
        for i in (0, 1, 2):
            yield f"n={n}/torsion-order-a{i}", _ord(words.alpha(n, i), 2 * (n - i))
            yield f"n={n}/full-twist-root-a{i}", _eq(words.alpha(n, i) ** (n - i), ft)
        yield f"n={n}/full-twist-order", _ord(ft, 2)


def _funda_checks(lo: int, hi: int) -> Iterator[Check]:
    for n in range(lo, hi + 1):
        D = words.half_twist(n)
        for i in (0, 1, 2):
            a = words.alpha(n, i)
            for j in range(1, n - i):
                for l in range(1, n - i - j):
                    yield (
                        f"n={n}/index-shift-i{i}-j{j}-l{l}",
                        _eq(a ** l * words.sigma(n, j) * a ** (-l), words.sigma(n, j + l)),
                    )
            yield (
                f"n={n}/index-wrap-i{i}",
                _eq(words.sigma(n, 1), a ** 2 * words.sigma(n, n - i - 1) * a ** (-2)),
            )
        a0 = words.alpha(n, 0)
        for q in range(n + 1):
            rhs = words.word(n, list(range(1, q)) * q)
            for k in range(1, q + 1):
                rhs = rhs * words.word(n, list(range(q - k + 1, n - k + 1)))
            yield f"n={n}/block-form-q{q}", _eq(a0 ** q, rhs)
        for i in range(1, n):
            yield (
                f"n={n}/half-twist-reversal-s{i}",
                _eq(D * words.sigma(n, i) * D.inv(), words.sigma(n, n - i)),
            )
        for i in (0, 2):
            ap = words.alpha_prime(n, i)
            yield f"n={n}/half-twist-inverts-a{i}p", _eq(D * ap * D.inv(), ap.inv())
        if n <= 7:
            for j1 in range(1, n):
                for j2 in range(j1 + 1, n):
                    lhs = words.word(n, list(range(j1, j2))) ** (j2 - j1 + 1)
                    rhs = words.word(n, list(range(j2 - 1, j1 - 1, -1))) ** (j2 - j1 + 1)
                    yield f"n={n}/reversed-power-{j1}-{j2}", _eq(lhs, rhs)


def _propsomega_checks(lo: int, hi: int) -> Iterator[Check]:
    for n in range(lo, hi + 1):
        if n % 2:
            continue
        D = words.half_twist(n)
        o1, o2, r = words.omega1(n), words.omega2(n), words.rho_pass(n)
        half = words.alpha(n, 0) ** (n // 2)
        yield f"n={n}/pass-swaps-blocks-1", _eq(r * o1, o2 * r)
        yield f"n={n}/half-twist-factorization", _eq(D, o1 * o2 * r)
        yield f"n={n}/pass-swaps-blocks-2", _eq(r * o2, o1 * r)
        desc = words.identity(n)
        for k in range(n - 1, n // 2, -1):
            desc = desc * words.word(n, list(range(k, n)))
        yield f"n={n}/second-block-descending-form", _eq(o2, desc)
        yield f"n={n}/half-power-factorization", _eq(half, o1 * o1 * r)
        yield f"n={n}/half-twist-conjugate", _eq(D, o2 * half * o2.inv())
        yield f"n={n}/half-power-conjugate", _eq(half, o1 * D * o1.inv())
        yield f"n={n}/full-twist-block-quotient", _eq(words.full_twist(n), o1 ** 2 * o2 ** -2)


def _commalphaigen_checks(lo: int, hi: int) -> Iterator[Check]:
    for n in range(lo, hi + 1):
        for i in (0, 1, 2):
            a = words.alpha(n, i)
            for m in range(1, 2 * (n - i) + 1):
                if (2 * (n - i)) % m:
                    continue
                r = m if (n - i) % m == 0 else m // 2
                if r < 2:
                    continue
                d = words.delta_comm(n, r, i)
                yield f"n={n}/commuter-infinite-i{i}-m{m}", _inf(d)
                yield f"n={n}/commuter-commutes-i{i}-m{m}", (
                    lambda d=d, x=a ** m: oracle.commute(d, x)
                )
        # Inverting-action elements and the dicyclic-by-Z constructions.
        a0 = words.alpha(n, 0)
        Dp = a0.inv() * words.half_twist(n) * a0
        for i in (0, 2):
            for q in range(3, n - i + 1):
                if (2 * (n - i)) % q or (n % 2 == 1 and q == n - i):
                    continue
                m = 2 * (n - i) // q
                r = m if (n - i) % m == 0 else m // 2
                z = Dp * words.delta_comm(n, r, i)
                x = words.alpha(n, i) ** m
                yield f"n={n}/inverter-infinite-i{i}-q{q}", _inf(z)
                yield f"n={n}/inverter-action-i{i}-q{q}", _eq(z * x * z.inv(), x.inv())
            for s in range(3, n - i + 1):
                if (n - i) % s:
                    continue
                m = (n - i) // s
                if m < 2:
                    continue
                rp = (a0 ** (i // 2)) * words.block_pass(n, i, m) ** m * (a0 ** (-(i // 2)))
                x = words.alpha_prime(n, i) ** m
                y = words.half_twist(n)
                yield f"n={n}/block-commuter-infinite-i{i}-s{s}", _inf(rp)
                yield f"n={n}/block-commuter-x-i{i}-s{s}", (
                    lambda rp=rp, x=x: oracle.commute(rp, x)
                )
                yield f"n={n}/block-commuter-y-i{i}-s{s}", (
                    lambda rp=rp, y=y: oracle.commute(rp, y)
                )
                if m % 2 == 0:
                    z = words.alpha_prime(n, i) ** (m // 2) * rp
                    yield f"n={n}/dicyclic-twist-infinite-i{i}-s{s}", _inf(z)
                    yield f"n={n}/dicyclic-twist-fixes-x-i{i}-s{s}", _eq(z * x * z.inv(), x)
                    yield f"n={n}/dicyclic-twist-y-to-xy-i{i}-s{s}", _eq(
                        z * y * z.inv(), x * y
                    )


def _constq8_checks(lo: int, hi: int) -> Iterator[Check]:
    for n in range(lo, hi + 1):
        if n % 2:
            continue
        x = words.alpha(n, 0) ** (n // 2)
        y = words.half_twist(n)
        if n % 4 == 0 and n >= 8:
            nu = words.nu_elt(n)
            yield f"n={n}/three-cycle-axis-infinite", _inf(nu)
            yield f"n={n}/three-cycle-x", _eq(nu * x * nu.inv(), x * y)
            yield f"n={n}/three-cycle-xy", _eq(nu * (x * y) * nu.inv(), y.inv())
            yield f"n={n}/three-cycle-yinv", _eq(nu * y.inv() * nu.inv(), x)
        z = words.zeta_elt(n)
        yield f"n={n}/swap-axis-infinite", _inf(z)
        yield f"n={n}/swap-y-to-x", _eq(z * y * z.inv(), x)
        yield f"n={n}/swap-x-to-y", _eq(z * x * z.inv(), y)
        yield f"n={n}/swap-inverts-xy", _eq(z * (x * y) * z.inv(), (x * y).inv())


def _realV2_checks(lo: int, hi: int) -> Iterator[Check]:
    if lo <= 5 <= hi:
        lhs = (words.sigma(5, 4).inv() * words.sigma(5, 3)) ** 3
        rhs = words.word(5, [-4, -4, -3, -3, 4, 4, 3, 3])
        yield "five-strands/band-cube-identity", _eq(lhs, rhs)
        yield "five-strands/band-cube-infinite", _inf(words.sigma(5, 4).inv() * words.sigma(5, 3))
    for (n, i) in ((4, 0), (4, 2), (6, 2)):
        if not lo <= n <= hi:
            continue
        et = words.eta_tilde_elt(n, i)
        yield f"n={n}/eta-tilde-infinite-i{i}", _inf(et)
    if lo <= 4 <= hi:
        A = words.band_generator
        yield "n=4/eta-tilde-band-form-i0", _eq(
            words.eta_tilde_elt(4, 0), A(4, 1, 2) * A(4, 1, 4).inv()
        )
        yield "n=4/eta-tilde-band-form-i2", _eq(
            words.eta_tilde_elt(4, 2), A(4, 2, 3) * A(4, 3, 4) ** 2
        )
    if lo <= 6 <= hi:
        A = words.band_generator
        rhs = A(6, 1, 3).inv() * A(6, 4, 5) * A(6, 3, 4).inv() * A(6, 5, 6)
        yield "n=6/eta-tilde-band-form-i2", _eq(words.eta_tilde_elt(6, 2), rhs)
    for n in range(lo, hi + 1):
        v1, v2 = words.v_pair(n)
        yield f"n={n}/order4-pair-first", _ord(v1, 4)
        yield f"n={n}/order4-pair-shared-square", _eq(v1 ** 2, v2 ** 2)
        yield f"n={n}/order4-pair-product-infinite", _inf(v1 * v2)


_TSTAR_LATTICE = {
    "classes": {"1", "Z2", "Z3", "Z4", "Z6", "Q8", "T*"},
    "maximal": {"Z6", "Q8"},
    "normal": {"Z2", "Q8"},
}
_OSTAR_LATTICE = {
    "classes": {"1", "Z2", "Z3", "Z4", "Z6", "Z8", "Q8", "Dic12", "Q16", "T*", "O*"},
    "maximal": {"Dic12", "Q16", "T*"},
    "normal": {"Z2", "Q8", "T*"},
}
_ISTAR_LATTICE = {
    "classes": {"1", "Z2", "Z3", "Z4", "Z5", "Z6", "Q8", "Z10", "Dic12", "Dic20", "T*", "I*"},
    "maximal": {"Dic12", "Dic20", "T*"},
    "normal": {"Z2"},
}


def _lattice_checks_for(tag: str, expected: dict) -> Iterator[Check]:
    def subs():
        return groups.subgroups(make_group(tag))

    yield f"{tag}/subgroup-classes", (
        lambda: {h.name for h in subs()} == expected["classes"]
    )

    def maximal_ok() -> bool:
        hs = subs()
        maximal = set()
        for h in hs:
            if h.order == make_group(tag).order:
                continue
            if not any(
                h.elements < g.elements and g.order < make_group(tag).order for g in hs
            ):
                maximal.add(h.name)
        return maximal == expected["maximal"]

    yield f"{tag}/maximal-classes", maximal_ok
    yield f"{tag}/normal-classes", (
        lambda: {
            h.name
            for h in subs()
            if h.normal and 1 < h.order < make_group(tag).order
        }
        == expected["normal"]
    )


def _finite_lattices_checks(lo: int, hi: int) -> Iterator[Check]:
    yield from _lattice_checks_for("T*", _TSTAR_LATTICE)
    yield from _lattice_checks_for("O*", _OSTAR_LATTICE)
    yield from _lattice_checks_for("I*", _ISTAR_LATTICE)
    yield "T*/unique-quaternion-8", (
        lambda: sum(1 for h in groups.subgroups(make_group("T*")) if h.name == "Q8") == 1
    )
    yield "O*/unique-binary-tetrahedral", (
        lambda: sum(1 for h in groups.subgroups(make_group("O*")) if h.name == "T*") == 1
    )
    yield "O*/three-nonnormal-quaternion-16", (
        lambda: [
            (h.normal)
            for h in groups.subgroups(make_group("O*"))
            if h.name == "Q16"
        ]
        == [False, False, False]
    )
    yield "I*/unique-nontrivial-normal", (
        lambda: [
            h.name
            for h in groups.subgroups(make_group("I*"))
            if h.normal and 1 < h.order < 120
        ]
        == ["Z2"]
    )


def _autout_checks(lo: int, hi: int) -> Iterator[Check]:
    q8 = make_group("dicyclic", 2)
    yield "Q8/aut-order-24", lambda: groups.automorphisms(q8).order == 24
    yield "Q8/out-is-symmetric-3", (
        lambda: groups.structure_name(groups.outer_group(q8)) == "Dih6"
    )
    yield "Q8/inner-is-klein", (
        lambda: groups.structure_name(groups.quotient(q8, groups.center(q8))) == "Z2 x Z2"
    )
    for tag in ("T*", "O*", "I*"):
        yield f"{tag}/out-order-2", (lambda tag=tag: groups.outer_group(make_group(tag)).order == 2)
    yield "T*/inner-is-alternating-4", (
        lambda: groups.structure_name(groups.quotient(make_group("T*"), groups.center(make_group("T*"))))
        == "A4"
    )
    yield "Z6/aut-order-2", lambda: groups.automorphisms(make_group("cyclic", 6)).order == 2

    def quatact_partition() -> bool:
        cat = groups.action_catalog(q8)
        a, b = cat["alpha"], cat["beta"]
        a2 = groups._compose_maps(a, a)
        reps = {
            "id": tuple(range(8)),
            "alpha": a,
            "alpha2": a2,
            "beta": b,
            "ab": groups._compose_maps(a, b),
            "a2b": groups._compose_maps(a2, b),
        }
        tags = {name: groups.classify_action(q8, m) for name, m in reps.items()}
        return (
            tags["id"] == "trivial"
            and tags["alpha"] == tags["alpha2"] == "alpha"
            and tags["beta"] == tags["ab"] == tags["a2b"] == "beta"
        )

    yield "Q8/semidirect-three-tags", quatact_partition
    yield "T*/nontrivial-action-tag", (
        lambda: groups.classify_action(make_group("T*"), groups.action_catalog(make_group("T*"))["omega"])
        == "omega"
    )

    def restriction(tag_g, param_g, sub_name) -> bool:
        G = make_group(tag_g, param_g)
        subs = [h for h in groups.subgroups(G) if h.name == sub_name]
        return bool(subs) and all(
            groups.restriction_is_surjective(G, h.elements) for h in subs
        )

    for q in range(1, 7):
        yield f"Z{4 * q}/restriction-onto-Z{2 * q}", (
            lambda q=q: restriction("cyclic", 4 * q, f"Z{2 * q}")
        )
    for q in range(3, 7):
        yield f"Dic{4 * q}/restriction-onto-Z{2 * q}", (
            lambda q=q: restriction("dicyclic", q, f"Z{2 * q}")
        )
    yield "Q8/restriction-onto-Z4", lambda: restriction("dicyclic", 2, "Z4")
    for q in (6, 8):
        name = f"Q{2 * q}" if (q // 2) & (q // 2 - 1) == 0 else f"Dic{2 * q}"
        yield f"Dic{4 * q}/restriction-onto-{name}", (
            lambda q=q, name=name: restriction("dicyclic", q, name)
        )
    yield "O*/restriction-onto-T*", lambda: restriction("O*", None, "T*")


def _amalgams_checks(lo: int, hi: int) -> Iterator[Check]:
    def zz_spec(q: int) -> amalgams.AmalgamSpec:
        big, small = make_group("cyclic", 4 * q), make_group("cyclic", 2 * q)
        emb = amalgams.hom_from_gen_images(small, big, (2 % (4 * q),))
        return amalgams.build_amalgam(big, big, small, emb, emb)

    def dic_over_cyclic(q: int) -> amalgams.AmalgamSpec:
        big, small = make_group("dicyclic", q), make_group("cyclic", 2 * q)
        emb = amalgams.hom_from_gen_images(small, big, (big.generators[0],))
        return amalgams.build_amalgam(big, big, small, emb, emb)

    named = {
        "cyclic-8-over-4": zz_spec(2),
        "dicyclic-12-over-6": dic_over_cyclic(3),
        "quaternion-straight": amalgams.k1(),
        "quaternion-twisted": amalgams.k2(),
    }
    for name, spec in named.items():
        def closure_ok(spec=spec) -> bool:
            ball1 = spec.ball(1)
            ball3 = spec.ball(3)
            idx = {e: None for e in ball3}
            return all(
                spec.mul(a, b) in idx or spec.mul(a, b).syllable_length > 3
                for a in ball3
                for b in ball1
            )

        def assoc_ok(spec=spec) -> bool:
            ball1 = spec.ball(1)
            return all(
                spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))
                for a in ball1
                for b in ball1
                for c in ball1
            )

        def inverse_ok(spec=spec) -> bool:
            return all(spec.mul(e, spec.inv(e)) == spec.one for e in spec.ball(3))

        def torsion_ok(spec=spec) -> bool:
            return all(
                spec.element_order(e).is_finite == (e.syllable_length <= 1)
                for e in spec.ball(2)
            )

        yield f"{name}/normal-form-closure", closure_ok
        yield f"{name}/associativity", assoc_ok
        yield f"{name}/inverses", inverse_ok
        yield f"{name}/torsion-dichotomy", torsion_ok

    def semidirect_ok(spec: amalgams.AmalgamSpec) -> bool:
        ext = amalgams.find_extension(spec)
        return ext is not None and amalgams.to_semidirect(spec, ext) is not None

    for q in range(1, 7):
        yield f"cyclic-{4 * q}-over-{2 * q}/semidirect", (
            lambda q=q: semidirect_ok(zz_spec(q))
        )
    for q in range(2, 7):
        yield f"dicyclic-{4 * q}-over-{2 * q}/semidirect", (
            lambda q=q: semidirect_ok(dic_over_cyclic(q))
        )
    yield "quaternion-straight/semidirect", lambda: semidirect_ok(amalgams.k1())
    yield "quaternion-twisted/no-extension", (
        lambda: amalgams.find_extension(amalgams.k2()) is None
    )

    def dic_over_dic(q: int) -> amalgams.AmalgamSpec:
        big = make_group("dicyclic", q)
        small = make_group("dicyclic", q // 2)
        x, y = big.generators
        emb = amalgams.hom_from_gen_images(small, big, (big.mul(x, x), y))
        return amalgams.build_amalgam(big, big, small, emb, emb)

    yield "dicyclic-24-over-12/semidirect", lambda: semidirect_ok(dic_over_dic(6))

    def octahedral_over_tetrahedral() -> bool:
        big = make_group("O*")
        small = make_group("T*")
        # The index-2 copy generated by the first three presentation gens.
        emb = amalgams.hom_from_gen_images(small, big, big.generators[:3])
        spec = amalgams.build_amalgam(big, big, small, emb, emb)
        return semidirect_ok(spec)

    yield "octahedral-over-tetrahedral/semidirect", octahedral_over_tetrahedral
    yield "quaternion-gluings/distinguished", lambda: amalgams.distinguish_k1_k2().ok
    yield "dihedral-gluings/distinguished", (
        lambda: amalgams.distinguish_k1_k2(dihedral=True).ok
    )

    def phi4_iso() -> bool:
        G = make_group("dicyclic", 4)
        F = make_group("dicyclic", 2)
        x, y = G.generators
        x2 = G.mul(x, x)
        i1 = amalgams.hom_from_gen_images(F, G, (x2, y))
        i2_four = amalgams.hom_from_gen_images(F, G, (x2, G.mul(x2, y)))
        spec4 = amalgams.build_amalgam(G, G, F, i1, i2_four)
        psi = groups.aut_from_gen_images(G, (x, G.mul(x2, y)))
        ident = tuple(range(G.order))
        cert = amalgams.amalgam_iso(amalgams.k1(), spec4, ident, psi)
        return cert.ok and cert.ball_bijective

    yield "quaternion-gluings/first-equals-fourth", phi4_iso


def _expected_mainodd(n: int) -> set:
    """The realized descriptor set for odd strand counts, from the theorem."""
    recs: set = set()
    for i in (0, 2):
        for m in range(1, 2 * (n - i)):
            if (2 * (n - i)) % m == 0 and m != n - i:
                recs.add(("I", classifier.GroupDesc("Z", m), "trivial"))
                if m >= 3:
                    recs.add(("I", classifier.GroupDesc("Z", m), "rho"))
    for m in range(1, 2 * (n - 1)):
        if (2 * (n - 1)) % m == 0:
            recs.add(("I", classifier.GroupDesc("Z", m), "trivial"))
    for i in (0, 2):
        for m in range(3, n - i):
            if (n - i) % m == 0:
                recs.add(("I", classifier.GroupDesc("Dic", m), "trivial"))
    for q in range(1, (n - 1) // 2 + 1):
        if ((n - 1) // 2) % q == 0:
            recs.add(
                ("II", classifier.GroupDesc("Z", 4 * q), classifier.GroupDesc("Z", 4 * q),
                 classifier.GroupDesc("Z", 2 * q), None)
            )
    for i in (0, 2):
        for q in range(2, n - i):
            if (n - i) % q == 0:
                recs.add(
                    ("II", classifier.GroupDesc("Dic", q), classifier.GroupDesc("Dic", q),
                     classifier.GroupDesc("Z", 2 * q), None)
                )
    return recs


def _classifier_mainodd_checks(lo: int, hi: int) -> Iterator[Check]:
    for n in range(lo, hi + 1):
        if n % 2 == 0 or n < 5:
            continue

        def match(n=n) -> bool:
            got = set()
            for r in classifier.enumerate_all(n):
                if r.status != "realized":
                    return False  # odd strand counts have no open cases
                if r.kind == "I":
                    got.add(("I", r.factor, r.action))
                else:
                    got.add(("II", *r.factors, r.amalgamated, r.gluing))
            return got == _expected_mainodd(n)

        yield f"n={n}/realized-set-matches-odd-classification", match


_SUITES: dict[str, tuple[Callable[[int, int], Iterator[Check]], tuple[int, int]]] = {
    "presentation": (_presentation_checks, (3, 3)),
    "torsion": (_torsion_checks, (4, 10)),
    "funda": (_funda_checks, (4, 8)),
    "propsomega": (_propsomega_checks, (4, 10)),
    "commalphaigen": (_commalphaigen_checks, (4, 10)),
    "constq8": (_constq8_checks, (4, 12)),
    "realV2": (_realV2_checks, (4, 8)),
    "finite_lattices": (_finite_lattices_checks, (3, 3)),
    "autout": (_autout_checks, (3, 3)),
    "amalgams": (_amalgams_checks, (3, 3)),
    "classifier_mainodd": (_classifier_mainodd_checks, (4, 20)),
}

SUITE_IDS = tuple(sorted(_SUITES))


def default_range(suite: str) -> tuple[int, int]:
    return _SUITES[suite][1]


def run_suite(suite: str, n_range: tuple[int, int] | None = None) -> SuiteResult:
    """Execute every check of the suite over the range; deterministic order."""
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_IDS)}")
    gen, default = _SUITES[suite]
    lo, hi = n_range if n_range is not None else default
    if lo < 3:
        raise ValueError("strand counts below 3 are not supported")
    results = []
    for check_id, fn in gen(lo, hi):
        t0 = time.perf_counter()
        try:
            passed = bool(fn())
        except Exception:
            passed = False
        results.append(CheckResult(check_id, passed, time.perf_counter() - t0))
    return SuiteResult(suite, (lo, hi), tuple(results))
