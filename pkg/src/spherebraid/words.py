"""
Words in the braid group of the sphere on n strands.

A braid word is a free-reduced sequence of signed Artin generator indices:
letter ``k`` (1 <= k <= n-1) is the generator sigma_k crossing strands k and
k+1, and ``-k`` is its inverse.  Words are stored eagerly free-reduced (no
adjacent letter/inverse pair), which makes hashing and raw equality cheap;
deciding equality *in the group* is the job of :mod:`spherebraid.oracle`.

Two homomorphisms are computable directly on words: the underlying
permutation (sigma_k maps to the transposition (k, k+1), permutations
composed left to right, i.e. the leftmost letter acts first) and the
abelianization (exponent sum mod 2(n-1)).  The module also implements the
geometric strand-forgetting projection and a catalog of standard elements
(torsion elements, half/full twist, the half-block twists, and the various
commuting and conjugating elements used by the realization constructions),
together with a small text DSL for naming them on the command line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "WordError",
    "SideConditionError",
    "StrandMismatchError",
    "BraidWord",
    "Permutation",
    "AbelianClass",
    "NamedElement",
    "word",
    "identity",
    "sigma",
    "parse_braid",
    "concat",
    "invert",
    "permutation",
    "abelianize",
    "exponent_sum",
    "forget_strands",
    "std_element",
    "alpha",
    "alpha_prime",
    "half_twist",
    "full_twist",
    "delta_comm",
    "omega1",
    "omega2",
    "rho_strip",
    "rho_pass",
    "block_pass",
    "band_generator",
    "xi_elt",
    "xi_prime_elt",
    "lambda_elt",
    "nu_elt",
    "zeta_elt",
    "eta_elt",
    "eta_tilde_elt",
    "v_pair",
    "gamma_b6",
    "delta_b6",
]


class WordError(ValueError):
    """Malformed word input: bad token, index out of range, bad n."""


class SideConditionError(WordError):
    """A named element's parameters violate its defining side condition."""


class StrandMismatchError(WordError):
    """Two words from braid groups with different strand counts were mixed."""


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A free-reduced word over the Artin generators of the n-strand group.

    Instances are immutable and hashable.  Use :func:`word` (or the `*`, `**`
    and `.inv()` operators, which reduce eagerly) rather than the raw
    constructor unless the letters are already reduced.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 3:
            raise WordError(f"strand count must be at least 3, got {self.n}")
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or abs(x) > self.n - 1:
                raise WordError(f"letter {x!r} out of range for n={self.n}")
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise WordError("letters are not free-reduced")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.n != other.n:
            raise StrandMismatchError(f"cannot multiply words on {self.n} and {other.n} strands")
        return BraidWord(self.n, _reduce(self.letters + other.letters))

    def inv(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, e: int) -> "BraidWord":
        if e == 0:
            return BraidWord(self.n)
        base = self if e > 0 else self.inv()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def conj(self, g: "BraidWord") -> "BraidWord":
        """g * self * g^-1."""
        return g * self * g.inv()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters) if self.letters else "<empty>"


def word(n: int, letters: Iterable[int] = ()) -> BraidWord:
    """Build a word on n strands, free-reducing the given letters."""
    letters = tuple(letters)
    for x in letters:
        if not isinstance(x, int) or x == 0 or abs(x) > n - 1:
            raise WordError(f"letter {x!r} out of range for n={n}")
    return BraidWord(n, _reduce(letters))


def identity(n: int) -> BraidWord:
    return BraidWord(n)


def sigma(n: int, k: int) -> BraidWord:
    """The generator sigma_k (k < 0 for the inverse)."""
    return BraidWord(n, (k,))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    return w1 * w2


def invert(w: BraidWord) -> BraidWord:
    return w.inv()


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise WordError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: apply self first, then other."""
        if self.n != other.n:
            raise StrandMismatchError("permutation size mismatch")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inv(self) -> "Permutation":
        out = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            out[v - 1] = k
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def order(self) -> int:
        d = 1
        for c in self.cycles():
            d = _lcm(d, len(c))
        return d

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(k for k, v in enumerate(self.images, start=1) if v == k)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its least element."""
        seen = [False] * self.n
        out = []
        for k in range(1, self.n + 1):
            if seen[k - 1]:
                continue
            cyc = [k]
            seen[k - 1] = True
            v = self(k)
            while v != k:
                cyc.append(v)
                seen[v - 1] = True
                v = self(v)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def maps_onto(self, subset: frozenset[int]) -> bool:
        return {self(k) for k in subset} == set(subset)


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def permutation(w: BraidWord) -> Permutation:
    """Image of the word under the map sending sigma_k to (k, k+1).

    Composes left to right: the leftmost letter acts first, so for example
    the word sigma_1 ... sigma_{n-1} sends 1 to n and k to k-1 for k >= 2.
    """
    n = w.n
    im = list(range(n + 1))  # im[k] = image of k (1-based; slot 0 unused)
    pos = list(range(n + 1))  # pos[v] = preimage of v
    for x in w.letters:
        i = abs(x)
        a, b = pos[i], pos[i + 1]
        im[a], im[b] = i + 1, i
        pos[i], pos[i + 1] = b, a
    return Permutation(tuple(im[1:]))


@dataclass(frozen=True)
class AbelianClass:
    """A residue modulo 2(n-1), the abelianization of the n-strand group."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if not (0 <= self.value < self.modulus):
            raise WordError("abelian class value out of range")

    def __add__(self, other: "AbelianClass") -> "AbelianClass":
        if self.modulus != other.modulus:
            raise StrandMismatchError("abelian class modulus mismatch")
        return AbelianClass((self.value + other.value) % self.modulus, self.modulus)

    def is_zero(self) -> bool:
        return self.value == 0


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def abelianize(w: BraidWord) -> AbelianClass:
    """Exponent sum of the word reduced modulo 2(n-1)."""
    m = 2 * (w.n - 1)
    return AbelianClass(exponent_sum(w) % m, m)


def forget_strands(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Project onto the braid group of the kept strands.

    Tracks strand positions through the word, drops every crossing that
    involves a forgotten strand, and relabels the surviving strands by the
    order-preserving bijection onto {1, ..., len(keep)}.  Defined only when
    the word's permutation maps the keep-set onto itself.
    """
    keep_set = frozenset(keep)
    if not keep_set or not keep_set <= set(range(1, w.n + 1)):
        raise WordError(f"keep-set {sorted(keep_set)} is not a nonempty subset of 1..{w.n}")
    if len(keep_set) < 3:
        raise WordError("fewer than 3 strands would remain")
    if not permutation(w).maps_onto(keep_set):
        raise WordError("word's permutation does not preserve the keep-set")
    kept = [False] * (w.n + 1)
    for p in keep_set:
        kept[p] = True
    strand_at = list(range(w.n + 1))  # strand occupying each position
    out: list[int] = []
    for x in w.letters:
        i = abs(x)
        a, b = strand_at[i], strand_at[i + 1]
        if kept[a] and kept[b]:
            j = sum(1 for p in range(1, i + 1) if kept[strand_at[p]])
            out.append(j if x > 0 else -j)
        strand_at[i], strand_at[i + 1] = b, a
    return word(len(keep_set), out)


# ---------------------------------------------------------------------------
# Catalog of standard elements.
# ---------------------------------------------------------------------------


def _run(lo: int, hi: int) -> list[int]:
    """Letters sigma_lo ... sigma_hi ascending; empty when hi < lo."""
    return list(range(lo, hi + 1))


def alpha(n: int, i: int) -> BraidWord:
    """The standard torsion element of order 2(n-i), for i in {0, 1, 2}."""
    if i == 0:
        return word(n, _run(1, n - 1))
    if i == 1:
        return word(n, _run(1, n - 2) + [n - 1, n - 1])
    if i == 2:
        return word(n, _run(1, n - 3) + [n - 2, n - 2])
    raise SideConditionError(f"torsion element index must be 0, 1 or 2, got {i}")


def alpha_prime(n: int, i: int) -> BraidWord:
    """The conjugate alpha_0^(i/2) alpha_i alpha_0^(-i/2), inverted by the half twist."""
    if i not in (0, 2):
        raise SideConditionError(f"primed torsion element needs i in {{0, 2}}, got {i}")
    a0 = alpha(n, 0)
    return (a0 ** (i // 2)) * alpha(n, i) * (a0 ** (-(i // 2)))


def half_twist(n: int) -> BraidWord:
    """The Garside-type element whose conjugation reverses generator indices."""
    out: list[int] = []
    for i in range(1, n):
        out += _run(1, n - i)
    return word(n, out)


def full_twist(n: int) -> BraidWord:
    """The central element of order 2, written as (sigma_1 ... sigma_{n-1})^n."""
    return alpha(n, 0) ** n


def delta_comm(n: int, r: int, i: int) -> BraidWord:
    """The infinite-order element sigma_1 sigma_{r+1} ... sigma_{n-i-r+1}.

    Commutes with alpha_i^r; requires r >= 2 and r dividing n - i.
    """
    if i not in (0, 1, 2):
        raise SideConditionError(f"index i must be 0, 1 or 2, got {i}")
    if r < 2 or (n - i) % r != 0:
        raise SideConditionError(f"need r >= 2 dividing n-i; got r={r}, n-i={n - i}")
    return word(n, [k * r + 1 for k in range((n - i) // r)])


def omega1(n: int) -> BraidWord:
    """Half twist on the first n/2 strands (n even)."""
    _require_even(n, "half-block twist")
    out: list[int] = []
    for i in range(1, n // 2):
        out += _run(1, n // 2 - i)
    return word(n, out)


def omega2(n: int) -> BraidWord:
    """Half twist on the last n/2 strands (n even)."""
    _require_even(n, "half-block twist")
    out: list[int] = []
    for i in range(1, n // 2):
        out += _run(n // 2 + 1, n - i)
    return word(n, out)


def rho_strip(n: int, j: int) -> BraidWord:
    """The strip sigma_j ... sigma_{j+n/2-1}, for 1 <= j <= n/2 (n even)."""
    _require_even(n, "strip element")
    if not 1 <= j <= n // 2:
        raise SideConditionError(f"strip index must satisfy 1 <= j <= n/2, got {j}")
    return word(n, _run(j, j + n // 2 - 1))


def rho_pass(n: int) -> BraidWord:
    """The braid passing the first n/2 strands over the last n/2 (n even)."""
    _require_even(n, "block-pass element")
    out = identity(n)
    for j in range(n // 2, 0, -1):
        out = out * rho_strip(n, j)
    return out


def block_pass(n: int, i: int, m: int) -> BraidWord:
    """Product of s = (n-i)/m disjoint ascending runs of length m-1.

    Conjugation by alpha_i^m permutes the runs cyclically; its m-th power is
    an infinite-order element commuting with the standard dicyclic copy.
    """
    if i not in (0, 2):
        raise SideConditionError(f"index i must be 0 or 2, got {i}")
    if m < 2 or (n - i) % m != 0:
        raise SideConditionError(f"need m >= 2 dividing n-i; got m={m}, n-i={n - i}")
    s = (n - i) // m
    out: list[int] = []
    for j in range(1, s + 1):
        out += _run((j - 1) * m + 1, j * m - 1)
    return word(n, out)


def band_generator(n: int, i: int, j: int) -> BraidWord:
    """The pure band generator linking strands i < j."""
    if not 1 <= i < j <= n:
        raise SideConditionError(f"band generator needs 1 <= i < j <= n, got ({i}, {j})")
    pre = list(range(j - 1, i, -1))
    return word(n, pre + [i, i] + [-k for k in reversed(pre)])


def xi_elt(n: int, i: int, m: int = 1) -> BraidWord:
    """sigma_{1+i/2} sigma_{1+2m+i/2} ... sigma_{1+n-2m-i/2}, step 2m.

    The conjugating element used for the cyclic-by-cyclic amalgam
    constructions; equal in the group to delta_comm(n, 2m, i) conjugated by
    alpha_0^(i/2).
    """
    if i not in (0, 2):
        raise SideConditionError(f"index i must be 0 or 2, got {i}")
    if m < 1 or (n - i) % (2 * m) != 0:
        raise SideConditionError(f"need 2m dividing n-i; got m={m}, n-i={n - i}")
    return word(n, list(range(1 + i // 2, n - 2 * m - i // 2 + 2, 2 * m)))


def xi_prime_elt(n: int, i: int, m: int = 1) -> BraidWord:
    """The half-twist conjugate of :func:`xi_elt`, written directly."""
    if i not in (0, 2):
        raise SideConditionError(f"index i must be 0 or 2, got {i}")
    if m < 1 or (n - i) % (2 * m) != 0:
        raise SideConditionError(f"need 2m dividing n-i; got m={m}, n-i={n - i}")
    first = 2 * m - 1 + i // 2
    return word(n, list(range(first, n - i // 2, 2 * m)))


def lambda_elt(n: int, i: int, m: int = 1) -> BraidWord:
    """sigma_{m+i/2} sigma_{3m+i/2} ... sigma_{n-m-i/2}, step 2m.

    Fixed by half-twist conjugation; requires (n-i)/m even.
    """
    if i not in (0, 2):
        raise SideConditionError(f"index i must be 0 or 2, got {i}")
    if m < 1 or (n - i) % m != 0 or ((n - i) // m) % 2 != 0:
        raise SideConditionError(f"need (n-i)/m a positive even integer; got m={m}, n-i={n - i}")
    q = (n - i) // m
    return word(n, [m * (1 + 2 * j) + i // 2 for j in range(q // 2)])


def nu_elt(n: int) -> BraidWord:
    """alpha_0^(n/4) omega2, the 3-cycle action element (n divisible by 4)."""
    if n % 4 != 0:
        raise SideConditionError(f"this element needs n divisible by 4, got {n}")
    return alpha(n, 0) ** (n // 4) * omega2(n)


def zeta_elt(n: int) -> BraidWord:
    """omega1 times the half twist, the swap action element (n even)."""
    _require_even(n, "swap action element")
    return omega1(n) * half_twist(n)


def eta_tilde_elt(n: int, i: int, m: int = 1) -> BraidWord:
    """xi alpha_i'^m xi^-1 alpha_i'^m, of infinite order."""
    x = xi_elt(n, i, m)
    ap = alpha_prime(n, i) ** m
    return x * ap * x.inv() * ap


def eta_elt(n: int, i: int, m: int = 1) -> BraidWord:
    """The mixed-factor product xi alpha_i'^m xi^-1 times a dicyclic generator."""
    x = xi_elt(n, i, m)
    ap = alpha_prime(n, i)
    if m == 1:
        return x * ap * x.inv() * ap * half_twist(n)
    return x * (ap ** m) * x.inv() * half_twist(n)


def v_pair(n: int) -> tuple[BraidWord, BraidWord]:
    """The pair of order-4 words generating the smallest cyclic amalgam."""
    i = 2 if n % 2 == 0 else 1
    v1 = alpha(n, i) ** ((n - i) // 2)
    s = sigma(n, n - i)
    return v1, s * v1 * s.inv()


def gamma_b6(n: int = 6) -> BraidWord:
    """First generator of the explicit binary tetrahedral copy on 6 strands."""
    if n != 6:
        raise SideConditionError("this element lives on exactly 6 strands")
    return word(6, [5, 4, -1, -2])


def delta_b6(n: int = 6) -> BraidWord:
    """Second generator of the explicit binary tetrahedral copy on 6 strands."""
    if n != 6:
        raise SideConditionError("this element lives on exactly 6 strands")
    return word(6, [-3, -4, -5, -2, -1, -2, 5, 4, 5, 5, 4, 3])


def _require_even(n: int, what: str) -> None:
    if n % 2 != 0:
        raise SideConditionError(f"{what} needs an even strand count, got n={n}")


# ---------------------------------------------------------------------------
# Named-element registry and text parser.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NamedElement:
    """A catalog tag plus its integer parameters."""

    tag: str
    params: tuple[int, ...] = ()


# tag -> (builder taking (n, *params), allowed arities)
_CATALOG = {
    "a0": (lambda n: alpha(n, 0), (0,)),
    "a1": (lambda n: alpha(n, 1), (0,)),
    "a2": (lambda n: alpha(n, 2), (0,)),
    "ap": (alpha_prime, (1,)),
    "D": (half_twist, (0,)),
    "FT": (full_twist, (0,)),
    "O1": (omega1, (0,)),
    "O2": (omega2, (0,)),
    "rho": (lambda n, *p: rho_strip(n, *p) if p else rho_pass(n), (0, 1)),
    "delta": (delta_comm, (2,)),
    "blocks": (block_pass, (2,)),
    "xi": (xi_elt, (1, 2)),
    "xip": (xi_prime_elt, (1, 2)),
    "lam": (lambda_elt, (1, 2)),
    "A": (band_generator, (2,)),
    "nu": (nu_elt, (0,)),
    "zeta": (zeta_elt, (0,)),
    "eta": (eta_elt, (1, 2)),
    "etat": (eta_tilde_elt, (1, 2)),
    "v1": (lambda n: v_pair(n)[0], (0,)),
    "v2": (lambda n: v_pair(n)[1], (0,)),
    "gamma6": (gamma_b6, (0,)),
    "delta6": (delta_b6, (0,)),
}


def std_element(name: NamedElement | str, n: int) -> BraidWord:
    """The literal catalog word for a named element on n strands."""
    if isinstance(name, str):
        name = NamedElement(name)
    if name.tag not in _CATALOG:
        raise WordError(f"unknown named element {name.tag!r}")
    builder, arities = _CATALOG[name.tag]
    if len(name.params) not in arities:
        raise SideConditionError(
            f"{name.tag} takes {' or '.join(map(str, arities))} parameter(s), got {len(name.params)}"
        )
    return builder(n, *name.params)


_TOKEN = re.compile(
    r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)(?:\((?P<args>[^)]*)\))?)"
    r"(?:\^(?P<exp>-?\d+))?\s*"
)


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse a braid word from text.

    Accepts whitespace-separated signed integers (``"1 2 -3"``), or the named
    element DSL with ``*`` concatenation and ``^e`` powers, e.g.
    ``"a0^4"``, ``"delta(2,0) * D^-1"``.  Plain integers may be mixed in.
    """
    out = identity(n)
    pos = 0
    expect_atom = True
    while pos < len(text):
        if not expect_atom:
            rest = text[pos:].lstrip()
            if rest.startswith("*"):
                pos = len(text) - len(rest) + 1
                expect_atom = True
                continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordError(f"malformed token at {text[pos:pos + 20]!r}")
        pos = m.end()
        expect_atom = False
        exp = int(m.group("exp")) if m.group("exp") else 1
        if m.group("int") is not None:
            k = int(m.group("int"))
            if k == 0 or abs(k) > n - 1:
                raise WordError(f"generator index {k} out of range for n={n}")
            atom = sigma(n, k)
        else:
            args = m.group("args")
            params = tuple(int(a) for a in args.split(",")) if args else ()
            atom = std_element(NamedElement(m.group("name"), params), n)
        out = out * atom ** exp
    return out
