"""The universal enveloping algebra in normal (ordered-word) form.

Elements are supported on ordered words in the basis, written as exponent
monomials exactly like commutative polynomials; multiplication straightens
out-of-order products with the rewriting rule x_u x_v = x_v x_u + [x_u, x_v]
until every word is non-decreasing.  The rewriting terminates because each
correction term has strictly smaller filtration degree, and single-letter
multiplications are memoized per table and characteristic.

A reference rewriting engine with an injectable (randomizable) choice of
redex backs the confluence property test; the fast path must agree with it.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Sequence, Union

from . import report as rep
from .exactalg import (
    Field,
    GF,
    MONO_ONE,
    Monomial,
    Polynomial,
    QQ,
    mono_degree,
    mono_mul_var,
)
from .liealg import StructureTable, ad_power_identity


class CharacteristicObstruction(ValueError):
    """Symmetrization needs to divide by k! but the characteristic is <= k."""


class PBWElement:
    """An element of the enveloping algebra in normal form."""

    __slots__ = ("registry", "field", "terms")

    def __init__(self, registry, field: Field, terms: dict):
        self.registry = registry
        self.field = field
        self.terms = terms

    @classmethod
    def zero(cls, registry, field: Field) -> "PBWElement":
        return cls(registry, field, {})

    @classmethod
    def unit(cls, registry, field: Field) -> "PBWElement":
        return cls(registry, field, {MONO_ONE: field.one})

    @classmethod
    def variable(cls, registry, field: Field, var: Union[int, str]) -> "PBWElement":
        i = registry.resolve(var)
        return cls(registry, field, {((i, 1),): field.one})

    @classmethod
    def monomial(cls, registry, field: Field, mono: Monomial, coeff=None) -> "PBWElement":
        c = field.one if coeff is None else field.coerce(coeff)
        return cls(registry, field, {mono: c} if c != field.zero else {})

    @classmethod
    def from_terms(cls, registry, field: Field, items) -> "PBWElement":
        terms: dict = {}
        for m, c in items:
            c = field.coerce(c)
            acc = terms.get(m)
            c = c if acc is None else field.add(acc, c)
            if c == field.zero:
                terms.pop(m, None)
            else:
                terms[m] = c
        return cls(registry, field, terms)

    def _check(self, other: "PBWElement") -> None:
        if self.registry != other.registry or self.field != other.field:
            raise ValueError("mixed registries or fields in enveloping algebra")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def filtration_degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def __add__(self, other: "PBWElement") -> "PBWElement":
        self._check(other)
        field = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            c = c if acc is None else field.add(acc, c)
            if c == field.zero:
                terms.pop(m, None)
            else:
                terms[m] = c
        return PBWElement(self.registry, field, terms)

    def __neg__(self) -> "PBWElement":
        field = self.field
        return PBWElement(
            self.registry, field, {m: field.neg(c) for m, c in self.terms.items()}
        )

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def scale(self, value) -> "PBWElement":
        field = self.field
        c0 = field.coerce(value)
        if c0 == field.zero:
            return PBWElement.zero(self.registry, field)
        return PBWElement(
            self.registry, field, {m: field.mul(c, c0) for m, c in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, PBWElement)
            and self.registry == other.registry
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.registry, self.field, frozenset(self.terms.items())))

    def __str__(self):
        as_poly = Polynomial(self.registry, self.field, dict(self.terms))
        return str(as_poly)

    def __repr__(self):
        return f"<PBWElement {self}>"


def word_of(mono: Monomial) -> tuple[int, ...]:
    """Expand an exponent monomial into its non-decreasing letter sequence."""
    out = []
    for i, e in mono:
        out.extend([i] * e)
    return tuple(out)


def mono_of_word(word: Sequence[int]) -> Monomial:
    """Exponent monomial of a sorted word."""
    out = []
    for letter in word:
        if out and out[-1][0] == letter:
            out[-1] = (letter, out[-1][1] + 1)
        else:
            out.append((letter, 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# Straightening
# ---------------------------------------------------------------------------


def _mul_mono_letter(t: StructureTable, field: Field, mono: Monomial, v: int):
    """Normal form of (normal monomial) * x_v as ((monomial, coeff), ...).

    Recursion: with u the greatest letter of the word and m' the word minus
    one u, if u <= v the letter appends; otherwise
    m' x_u x_v = (m' x_v) x_u + m' [x_u, x_v], and both pieces recurse at
    strictly smaller degree except the top layer of m' x_v, whose greatest
    letter is at most u, so multiplying it by u is a plain append.
    """
    char = field.characteristic
    cache = t._pbw_cache.setdefault(char, {})
    key = (mono, v)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not mono or mono[-1][0] <= v:
        result = ((mono_mul_var(mono, v), field.one),)
        cache[key] = result
        return result
    u = mono[-1][0]
    if mono[-1][1] > 1:
        mprime = mono[:-1] + ((u, mono[-1][1] - 1),)
    else:
        mprime = mono[:-1]
    acc: dict = {}
    zero = field.zero
    for m1, c1 in _mul_mono_letter(t, field, mprime, v):
        for m2, c2 in _mul_mono_letter(t, field, m1, u):
            c = field.mul(c1, c2)
            prev = acc.get(m2)
            c = c if prev is None else field.add(prev, c)
            if c == zero:
                acc.pop(m2, None)
            else:
                acc[m2] = c
    for k, ck in t.bracket_coords(u, v).items():
        ckf = field.coerce(ck)
        if ckf == zero:
            continue
        for m2, c2 in _mul_mono_letter(t, field, mprime, k):
            c = field.mul(ckf, c2)
            prev = acc.get(m2)
            c = c if prev is None else field.add(prev, c)
            if c == zero:
                acc.pop(m2, None)
            else:
                acc[m2] = c
    result = tuple(acc.items())
    cache[key] = result
    return result


def _mul_mono_mono(t: StructureTable, field: Field, ma: Monomial, mb: Monomial) -> dict:
    """Normal form of the product of two normal monomials."""
    current = {ma: field.one}
    zero = field.zero
    for letter in word_of(mb):
        nxt: dict = {}
        for m, c in current.items():
            for m2, c2 in _mul_mono_letter(t, field, m, letter):
                cc = field.mul(c, c2)
                prev = nxt.get(m2)
                cc = cc if prev is None else field.add(prev, cc)
                if cc == zero:
                    nxt.pop(m2, None)
                else:
                    nxt[m2] = cc
        current = nxt
    return current


def pbw_mul(t: StructureTable, a: PBWElement, b: PBWElement) -> PBWElement:
    """Associative product in the enveloping algebra, straightened."""
    a._check(b)
    field = a.field
    t.check_characteristic(field.characteristic)
    zero = field.zero
    terms: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            base = field.mul(ca, cb)
            for m, c in _mul_mono_mono(t, field, ma, mb).items():
                cc = field.mul(base, c)
                prev = terms.get(m)
                cc = cc if prev is None else field.add(prev, cc)
                if cc == zero:
                    terms.pop(m, None)
                else:
                    terms[m] = cc
    return PBWElement(a.registry, field, terms)


def straighten_word(
    t: StructureTable, field: Field, word: Sequence[int], rng=None
) -> dict:
    """Reference straightening by explicit rewriting of adjacent inversions.

    ``rng`` (a ``random.Random``) picks which inversion to rewrite next; the
    default takes the first.  Confluence of the result against the memoized
    fast path is property-tested.
    """
    zero = field.zero
    result: dict = {}
    stack = [(field.one, tuple(word))]
    while stack:
        coeff, w = stack.pop()
        inversions = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not inversions:
            mono = mono_of_word(w)
            acc = result.get(mono)
            c = coeff if acc is None else field.add(acc, coeff)
            if c == zero:
                result.pop(mono, None)
            else:
                result[mono] = c
            continue
        i = inversions[0] if rng is None else rng.choice(inversions)
        swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        stack.append((coeff, swapped))
        for k, ck in t.bracket_coords(w[i], w[i + 1]).items():
            ckf = field.coerce(ck)
            if ckf != zero:
                stack.append((field.mul(coeff, ckf), w[:i] + (k,) + w[i + 2 :]))
    return result


# ---------------------------------------------------------------------------
# Commutators
# ---------------------------------------------------------------------------


def commutator_u(t: StructureTable, a: PBWElement, b: PBWElement) -> PBWElement:
    """ab - ba in normal form."""
    return pbw_mul(t, a, b) - pbw_mul(t, b, a)


def commutator_with_basis(t: StructureTable, g: Union[int, str], e: PBWElement) -> PBWElement:
    """[x_g, e] computed position-by-position: commuting a generator across
    a word inserts one bracket per letter, so no full product expansion is
    needed.  Agrees with :func:`commutator_u` (property-tested)."""
    gi = t.registry.resolve(g)
    field = e.field
    t.check_characteristic(field.characteristic)
    zero = field.zero
    total: dict = {}
    for mono, coeff in e.terms.items():
        word = word_of(mono)
        for pos in range(len(word)):
            targets = t.bracket_coords(gi, word[pos])
            if not targets:
                continue
            prefix = mono_of_word(word[:pos])
            suffix = word[pos + 1 :]
            for k, ck in targets.items():
                ckf = field.coerce(ck)
                if ckf == zero:
                    continue
                current = {
                    m: field.mul(c, field.mul(coeff, ckf))
                    for m, c in _mul_mono_letter(t, field, prefix, k)
                }
                for letter in suffix:
                    nxt: dict = {}
                    for m, c in current.items():
                        for m2, c2 in _mul_mono_letter(t, field, m, letter):
                            cc = field.mul(c, c2)
                            prev = nxt.get(m2)
                            cc = cc if prev is None else field.add(prev, cc)
                            if cc == zero:
                                nxt.pop(m2, None)
                            else:
                                nxt[m2] = cc
                    current = nxt
                for m, c in current.items():
                    prev = total.get(m)
                    c = c if prev is None else field.add(prev, c)
                    if c == zero:
                        total.pop(m, None)
                    else:
                        total[m] = c
    return PBWElement(e.registry, field, total)


def is_central_u(
    t: StructureTable, e: PBWElement, gens: Iterable[int]
) -> tuple[bool, Optional[int]]:
    """True iff [x_i, e] = 0 for every generator index (generators suffice)."""
    for i in gens:
        if not commutator_with_basis(t, i, e).is_zero:
            return False, i
    return True, None


# ---------------------------------------------------------------------------
# Symmetrization, lifts and the associated graded map
# ---------------------------------------------------------------------------


def naive_lift(f: Polynomial) -> PBWElement:
    """Interpret each commutative monomial as its ordered word, unchanged."""
    return PBWElement(f.registry, f.field, dict(f.terms))


def symmetrize(t: StructureTable, f: Polynomial) -> PBWElement:
    """The canonical lift: each degree-k monomial becomes the average of its
    k! letter orderings, straightened to normal form.

    Distinct orderings are enumerated once with multiplicity prod(e_i!)/k!,
    which requires k! to be invertible: characteristic 0 or p > deg f.
    """
    field = f.field
    char = field.characteristic
    if char and f.total_degree() >= char:
        raise CharacteristicObstruction(
            f"symmetrizing degree {f.total_degree()} needs p > degree, have p={char}"
        )
    total: dict = {}
    zero = field.zero
    for mono, coeff in f.terms.items():
        word = word_of(mono)
        k = len(word)
        if k <= 1:
            prev = total.get(mono)
            c = coeff if prev is None else field.add(prev, coeff)
            if c == zero:
                total.pop(mono, None)
            else:
                total[mono] = c
            continue
        stab = 1
        for _, e in mono:
            stab *= factorial(e)
        factor = field.mul(coeff, field.coerce(Fraction(stab, factorial(k))))
        for perm in set(itertools.permutations(word)):
            current = {MONO_ONE: factor}
            for letter in perm:
                nxt: dict = {}
                for m, c in current.items():
                    for m2, c2 in _mul_mono_letter(t, field, m, letter):
                        cc = field.mul(c, c2)
                        prev = nxt.get(m2)
                        cc = cc if prev is None else field.add(prev, cc)
                        if cc == zero:
                            nxt.pop(m2, None)
                        else:
                            nxt[m2] = cc
                current = nxt
            for m, c in current.items():
                prev = total.get(m)
                c = c if prev is None else field.add(prev, c)
                if c == zero:
                    total.pop(m, None)
                else:
                    total[m] = c
    return PBWElement(f.registry, field, total)


def gr_leading(e: PBWElement) -> Polynomial:
    """Image of the top filtration layer under the monomial identification."""
    if e.is_zero:
        raise ValueError("the zero element has no leading symbol")
    top = e.filtration_degree()
    return Polynomial(
        e.registry,
        e.field,
        {m: c for m, c in e.terms.items() if mono_degree(m) == top},
    )


def reduce_u(e: PBWElement, field: Field) -> Optional[PBWElement]:
    """Reduce a rational element into a prime field, or None when some
    coefficient denominator is divisible by the characteristic."""
    p = field.characteristic
    for c in e.terms.values():
        if Fraction(c).denominator % p == 0:
            return None
    return PBWElement.from_terms(e.registry, field, e.terms.items())


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def p_center_suite(
    t: StructureTable, p: int, gens: Optional[Sequence[int]] = None
) -> list[rep.Claim]:
    """Verify that p-th powers of nilradical generators and h^p - h for
    Cartan generators are central in the enveloping algebra over F_p, and
    cross-check the matrix identities (ad x)^p = 0, (ad h)^p = ad h."""
    t.check_characteristic(p)
    field = GF(p)
    gens = list(range(t.dim)) if gens is None else list(gens)
    claims = []
    elements: list[tuple[str, PBWElement]] = []
    for i in t.nilradical:
        mono = ((i, p),)
        elements.append((f"{t.label(i)}^{p}", PBWElement.monomial(t.registry, field, mono)))
    for j in t.cartan:
        hp = PBWElement.monomial(t.registry, field, ((j, p),))
        h = PBWElement.variable(t.registry, field, j)
        elements.append((f"{t.label(j)}^{p}-{t.label(j)}", hp - h))
    for name, elt in elements:
        for g in gens:
            com = commutator_with_basis(t, g, elt)
            claims.append(
                rep.check(
                    f"{t.name}.pcenter.p{p}.{name}.{t.label(g)}",
                    f"[{t.label(g)}, {name}] = 0 in the enveloping algebra over GF({p})",
                    com.is_zero,
                    residual=None if com.is_zero else str(com),
                )
            )
    for i in range(t.dim):
        res = ad_power_identity(t, i, p)
        statement = (
            f"(ad {res.label})^{p} = ad {res.label} over GF({p})"
            if res.kind == "cartan"
            else f"(ad {res.label})^{p} = 0 over GF({p})"
        )
        claims.append(
            rep.check(f"{t.name}.pcenter.p{p}.adpower.{res.label}", statement, res.ok)
        )
    return claims


def z_lift_audit(t: StructureTable, fam, field: Field = QQ) -> list[rep.Claim]:
    """For each central family element c: symmetrize it, test centrality over
    the nilradical, check gr(z) = c, and record how the naive ordered lift
    behaves (its centrality verdict and that it differs from the symmetrized
    lift only in lower filtration)."""
    claims = []
    char = field.characteristic
    for name in fam.central:
        c = fam.element(name, field)
        cid = f"{t.name}.zlift.{name}.char{char}"
        try:
            z = symmetrize(t, c)
        except CharacteristicObstruction as exc:
            claims.append(
                rep.asserted(
                    f"{cid}.central",
                    f"a central lift of {name} exists over characteristic {char}",
                    note=f"symmetrization obstructed: {exc}",
                )
            )
            continue
        ok, witness = is_central_u(t, z, t.nilradical)
        claims.append(
            rep.check(
                f"{cid}.central",
                f"symmetrize({name}) is central in the enveloping algebra",
                ok,
                witness=None if ok else t.label(witness),
            )
        )
        claims.append(
            rep.check(
                f"{cid}.gr",
                f"gr(symmetrize({name})) = {name}",
                gr_leading(z) == c,
            )
        )
        naive = naive_lift(c)
        nok, nwit = is_central_u(t, naive, t.nilradical)
        diff = z - naive
        low = diff.is_zero or diff.filtration_degree() < c.total_degree()
        claims.append(
            rep.verified(
                f"{cid}.naive",
                f"naive ordered lift of {name}: centrality verdict recorded",
                note=(
                    ("central" if nok else f"not central, witness {t.label(nwit)}")
                    + (
                        "; coincides with the symmetrized lift"
                        if diff.is_zero
                        else "; differs from the symmetrized lift in lower filtration only"
                        if low
                        else "; differs from the symmetrized lift at top degree"
                    )
                ),
            )
        )
        claims.append(
            rep.check(
                f"{cid}.naive-low",
                f"symmetrize({name}) - naive_lift({name}) has filtration degree < {c.total_degree()}",
                low,
            )
        )
    return claims
