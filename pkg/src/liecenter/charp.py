"""Characteristic-p bookkeeping: p-power generator sets, Frobenius-power
membership with non-membership witnesses, the determinant identities behind
the height argument, and the generator audits for the structural theorems.

Derivatives "with respect to x^p" are taken formally on p-power-patterned
polynomials: writing y_i for x_i^p identifies the p-power subalgebra with a
plain polynomial ring, so the determinant identities are first proved as
exact rational identities in the y-variables (characteristic-free) and then
instantiated literally over F_3 through the Frobenius expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import report as rep
from .exactalg import (
    Field,
    GF,
    Polynomial,
    QQ,
    frobenius_expand,
    jacobian_det,
    poly_det,
    ppattern_membership,
)
from .invariants import InvariantFamily, brute_force_invariant_space, compare_with_generated
from .liealg import StructureTable, ad_power_identity
from .linalg import rank_int, rows_to_integer
from .pbw import (
    CharacteristicObstruction,
    PBWElement,
    commutator_with_basis,
    gr_leading,
    is_central_u,
    reduce_u,
    symmetrize,
)
from .poisson import cartan_eigenvalue, is_invariant, weight_of


def c1_label(t: StructureTable) -> str:
    """The single basis variable that equals the first invariant."""
    if t.name.startswith("g2"):
        return "x6"
    if t.name.startswith("f4"):
        return "x24"
    if "b1" in t.registry and t.name[:1] == "c":
        return "b1"
    raise ValueError(f"no designated degree-one invariant for {t.name!r}")


# ---------------------------------------------------------------------------
# Generator sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorEntry:
    name: str
    kind: str  # p-power | exempt-variable | cartan-p-power


@dataclass
class GeneratorSet:
    """The p-power generator list of the invariant subalgebra at the
    nilradical or Borel level."""

    algebra: str
    level: str
    p: int
    table: StructureTable
    entries: tuple[GeneratorEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def polynomials(self, field: Field) -> list[tuple[str, Polynomial]]:
        out = []
        for entry in self.entries:
            if entry.kind == "exempt-variable":
                out.append(
                    (entry.name, Polynomial.variable(self.table.registry, field, entry.name))
                )
            else:
                label = entry.name.split("^")[0]
                var = Polynomial.variable(self.table.registry, field, label)
                out.append((entry.name, var ** self.p))
        return out


def sp_generators(t: StructureTable, p: int, level: str = "nilradical") -> GeneratorSet:
    """p-th powers of the generators plus the degree-one invariant itself;
    at the Borel level the Cartan p-th powers are appended."""
    t.check_characteristic(p)
    if level not in ("nilradical", "borel"):
        raise ValueError(f"unknown level {level!r}")
    if level == "borel" and not t.cartan:
        raise ValueError(f"{t.name} has no Cartan part; cannot build Borel-level set")
    exempt = c1_label(t)
    entries = []
    for i in t.nilradical:
        label = t.label(i)
        if label == exempt:
            continue
        entries.append(GeneratorEntry(f"{label}^{p}", "p-power"))
    entries.append(GeneratorEntry(exempt, "exempt-variable"))
    if level == "borel":
        for j in t.cartan:
            entries.append(GeneratorEntry(f"{t.label(j)}^{p}", "cartan-p-power"))
    return GeneratorSet(t.name, level, p, t, tuple(entries))


# ---------------------------------------------------------------------------
# Frobenius-power membership
# ---------------------------------------------------------------------------


def frobenius_membership_suite(
    t: StructureTable, fam: InvariantFamily, p: int
) -> list[rep.Claim]:
    """For every invariant c_i with i >= 2: c_i^p lies in the p-power
    subalgebra (pattern membership) while c_i itself does not, with a
    deterministic witness monomial; for F4 the layered compositions of
    c_3^p and c_4^p are verified by exact subtraction."""
    t.check_characteristic(p)
    field = GF(p)
    exempt = (c1_label(t),)
    claims = []
    prefix = f"{t.name}.frobenius.p{p}"
    for name in fam.central:
        if name == "c1":
            continue
        c = fam.element(name, field)
        cp = frobenius_expand(c, p)
        ok, witness = ppattern_membership(cp, p, exempt)
        claims.append(
            rep.check(
                f"{prefix}.{name}.power-member",
                f"{name}^{p} has {p}-divisible exponents outside {exempt[0]}",
                ok,
                witness=None if ok else _mono_str(t, witness),
            )
        )
        member, witness = ppattern_membership(c, p, exempt)
        claims.append(
            rep.Claim(
                f"{prefix}.{name}.non-member",
                f"{name} itself violates the {p}-power pattern (witness recorded)",
                rep.VERIFIED if (not member and witness is not None) else rep.FAILED,
                witness=None if witness is None else _mono_str(t, witness),
            )
        )
    if t.name.startswith("f4"):
        claims.extend(_f4_layered_claims(t, fam, p))
    return claims


def _mono_str(t: StructureTable, mono) -> str:
    return str(Polynomial(t.registry, QQ, {mono: Fraction(1)}))


def _f4_layered_claims(t: StructureTable, fam: InvariantFamily, p: int) -> list[rep.Claim]:
    field = GF(p)
    F = lambda name: frobenius_expand(fam.element(name, field), p)
    claims = []
    prefix = f"{t.name}.frobenius.p{p}"
    half_p = field.pow(field.coerce("1/2"), p)
    quarter_p = field.pow(field.coerce("1/4"), p)
    lhs3 = F("c3") - (F("c2") * F("u9") + (F("v4") * F("v4")).scale(half_p))
    claims.append(
        rep.check(
            f"{prefix}.c3p-layered",
            f"c3^{p} = c2^{p}*u9^{p} + (1/2)^{p}*v4^{2*p} exactly",
            lhs3.is_zero,
            residual=None if lhs3.is_zero else str(lhs3),
        )
    )
    lhs4 = F("c4") - (
        -(F("u2") * F("c3"))
        + (F("u6") * F("v3")).scale(half_p)
        + (F("v7") * F("w3")).scale(quarter_p)
    )
    claims.append(
        rep.check(
            f"{prefix}.c4p-layered",
            f"c4^{p} = -u2^{p}*c3^{p} + (1/2)^{p}*u6^{p}*v3^{p} + (1/4)^{p}*v7^{p}*w3^{p} exactly",
            lhs4.is_zero,
            residual=None if lhs4.is_zero else str(lhs4),
        )
    )
    for aux in ("u9", "v4", "u6", "v3", "u2", "v7", "w3"):
        ok, witness = ppattern_membership(frobenius_expand(fam.element(aux, field), p), p, ())
        claims.append(
            rep.check(
                f"{prefix}.{aux}p-pattern",
                f"{aux}^{p} is a polynomial in the {p}-th powers of the generators",
                ok,
                witness=None if ok else _mono_str(t, witness),
            )
        )
    return claims


# ---------------------------------------------------------------------------
# Formal derivatives with respect to p-th powers, determinant identities
# ---------------------------------------------------------------------------


def partial_wrt_ppower(f: Polynomial, var: Union[int, str], p: int) -> Polynomial:
    """d f / d (x^p) for a polynomial whose x-exponents are all p-divisible:
    x^(p*e) differentiates to e * x^(p*(e-1))."""
    v = f.registry.resolve(var)
    field = f.field
    items = []
    for m, c in f.terms.items():
        for i, e in m:
            if i == v:
                if e % p:
                    raise ValueError(
                        f"exponent {e} of {f.registry.name(v)} is not divisible by {p}"
                    )
                k = e // p
                rest = tuple(
                    (j, ej) for j, ej in m if j != v
                )
                if k > 1:
                    rest = tuple(sorted(rest + ((v, p * (k - 1)),)))
                items.append((rest, field.mul(c, field.coerce(k))))
                break
    return Polynomial.from_terms(f.registry, field, items)


def stretch_exponents(f: Polynomial, p: int, field: Field) -> Polynomial:
    """The substitution y_i -> x_i^p: multiply every exponent by p."""
    return Polynomial.from_terms(
        f.registry,
        field,
        ((tuple((i, e * p) for i, e in m), c) for m, c in f.terms.items()),
    )


_F4_JACOBIANS = (
    (("x16", "x9", "x2"), "2", (("c1", 3), ("c2", 1), ("c3", 1))),
    (("x16", "x9", "x6"), "-2", (("c1", 3), ("c2", 1), ("v3", 1))),
    (("x16", "x13", "x2"), "-4", (("c1", 3), ("v4", 1), ("c3", 1))),
    (("x18", "x15", "x8"), "-4", (("x23", 3), ("v4", 1), ("v3", 1))),
)


def _factor_poly(fam: InvariantFamily, t: StructureTable, name: str, field: Field) -> Polynomial:
    if name in fam.elements(field):
        return fam.element(name, field)
    return Polynomial.variable(t.registry, field, name)


def jacobian_identity_suite(
    t: StructureTable, fam: InvariantFamily, p: int = 3
) -> list[rep.Claim]:
    """The displayed determinant identities behind the height argument.

    Writing f_i = t_i^p - c_i^p, the determinant of d(f_2,f_3,f_4) with
    respect to three chosen p-th powers equals minus the determinant of the
    c_i in the p-power variables, which is a characteristic-free rational
    identity; it is checked exactly over Q up to one recorded global sign,
    then instantiated literally over F_p via Frobenius expansion.
    """
    claims = []
    if t.name.startswith("f4"):
        cs = [fam.element(f"c{i}") for i in (2, 3, 4)]
        for vars_, coef, factors in _F4_JACOBIANS:
            rhs = Polynomial.constant(t.registry, QQ, coef)
            for fname, power in factors:
                rhs = rhs * _factor_poly(fam, t, fname, QQ) ** power
            lhs = -jacobian_det(cs, list(vars_))
            claim_id = f"{t.name}.jacobians.det.{'-'.join(vars_)}"
            rhs_str = f"{coef}*" + "*".join(
                f"{n}^{k}" if k > 1 else n for n, k in factors
            )
            statement = (
                f"det d(t_i^p - c_i^p)/d({','.join(vars_)}^p) = {rhs_str} "
                f"(p-th powers dropped) up to a recorded sign"
            )
            if lhs == rhs:
                claims.append(rep.verified(claim_id, statement, note="sign +1"))
            elif lhs == -rhs:
                claims.append(rep.noted(claim_id, statement, "sign -1 relative to the stated product"))
            else:
                claims.append(rep.failed(claim_id, statement, residual=str(lhs - rhs)))
            # literal instantiation over F_p
            field = GF(p)
            lit_rows = [
                [
                    -partial_wrt_ppower(
                        frobenius_expand(fam.element(f"c{i}", field), p), v, p
                    )
                    for v in vars_
                ]
                for i in (2, 3, 4)
            ]
            lit = poly_det(lit_rows)
            expected_lit = stretch_exponents(lhs.scale(-1), p, field).scale(-1)
            claims.append(
                rep.check(
                    f"{claim_id}.f{p}",
                    f"the same determinant instantiated over GF({p}) equals the "
                    f"Q-identity under y -> x^{p}",
                    lit == expected_lit,
                    residual=None if lit == expected_lit else str(lit - expected_lit),
                )
            )
    if t.name.startswith("g2"):
        from .exactalg import parse_polynomial

        c2 = fam.element("c2")
        # stated values of d(t^p - c2^p)/d(x^p); the raw partial of c2 is
        # minus that value with the p-th powers dropped
        for var, stated in (("x1", "-3*x6"), ("x2", "-3*x5")):
            got = c2.partial(var)
            expected_raw = -parse_polynomial(t.registry, QQ, stated)
            claim_id = f"{t.name}.jacobians.partial.{var}"
            statement = (
                f"d(t^p - c2^p)/d({var}^p) = {stated} with p-th powers dropped, "
                f"up to a recorded sign"
            )
            if got == expected_raw:
                claims.append(rep.verified(claim_id, statement, note="sign +1"))
            elif got == -expected_raw:
                claims.append(
                    rep.noted(claim_id, statement, "sign -1 relative to the stated value")
                )
            else:
                claims.append(
                    rep.failed(claim_id, statement, residual=str(got - expected_raw))
                )
            field = GF(p)
            lit = partial_wrt_ppower(frobenius_expand(fam.element("c2", field), p), var, p)
            expected = stretch_exponents(
                Polynomial.from_terms(t.registry, field, got.terms.items()), p, field
            )
            claims.append(
                rep.check(
                    f"{claim_id}.f{p}",
                    f"d(c2^{p})/d({var}^{p}) over GF({p}) matches the Q-partial under y -> x^{p}",
                    lit == expected,
                )
            )
    return claims


# ---------------------------------------------------------------------------
# Central lifts usable at any admissible characteristic
# ---------------------------------------------------------------------------


def central_lift(
    t: StructureTable, fam: InvariantFamily, name: str, field: Field
) -> tuple[Optional[PBWElement], str]:
    """A lift of a central family element into the enveloping algebra.

    Symmetrization is used when the characteristic permits; otherwise the
    characteristic-zero symmetrized lift is reduced, which is possible
    whenever its coefficient denominators avoid p.  Returns (element, how)
    with element None when no construction applies.
    """
    char = field.characteristic
    c = fam.element(name, field)
    try:
        return symmetrize(t, c), "symmetrized"
    except CharacteristicObstruction:
        pass
    z_q = symmetrize(t, fam.element(name, QQ))
    reduced = reduce_u(z_q, field)
    if reduced is not None:
        return reduced, f"characteristic-0 symmetrized lift reduced mod {char}"
    return None, "no construction: symmetrization obstructed and reduction undefined"


# ---------------------------------------------------------------------------
# Theorem generator audits
# ---------------------------------------------------------------------------

_ORACLE_CAPS = {"g2": 6, "f4": 4, "c": 3}


def _oracle_cap(t: StructureTable, max_degree: Optional[int]) -> int:
    if max_degree is not None:
        return max_degree
    for key, cap in _ORACLE_CAPS.items():
        if t.name.startswith(key):
            return cap
    return 3


def _audit_invariant_generators(
    t: StructureTable,
    claims: list,
    prefix: str,
    generators: Sequence[tuple[str, Polynomial]],
    gens_idx: Sequence[int],
    scope: str,
) -> None:
    for name, poly in generators:
        ok, bad = is_invariant(t, poly, gens_idx)
        claims.append(
            rep.check(
                f"{prefix}.gen.{name}.invariant",
                f"generator {name} is {scope}-invariant",
                ok,
                witness=None if ok else t.label(bad),
            )
        )


def _audit_central_generators(
    t: StructureTable,
    claims: list,
    prefix: str,
    elements: Sequence[tuple[str, PBWElement]],
    gens_idx: Sequence[int],
) -> None:
    for name, elt in elements:
        ok, bad = is_central_u(t, elt, gens_idx)
        claims.append(
            rep.check(
                f"{prefix}.gen.{name}.central",
                f"generator {name} commutes with every generator of the enveloping algebra",
                ok,
                witness=None if ok else t.label(bad),
            )
        )


def _asserted_generation(prefix: str, ring: str, note: str) -> rep.Claim:
    return rep.asserted(
        f"{prefix}.generation",
        f"the listed generators generate {ring} in every degree",
        note=note,
    )


def theorem_generator_audit(
    t: StructureTable,
    fam: InvariantFamily,
    char: int,
    max_degree: Optional[int] = None,
    max_entries: int = 10**7,
) -> list[rep.Claim]:
    """Assemble each structural theorem's claimed generator set at this
    characteristic and verify every generator's defining property, plus
    low-degree completeness through the brute-force oracle; the
    generation-in-all-degrees statements are recorded as asserted, never
    silently assumed."""
    t.check_characteristic(char)
    field = QQ if char == 0 else GF(char)
    claims: list[rep.Claim] = []
    cap = _oracle_cap(t, max_degree)
    level = "borel" if t.cartan else "nilradical"
    c_gens = [(name, fam.element(name, field)) for name in fam.central]

    if level == "nilradical":
        # Poisson center of the symmetric algebra of the nilradical
        prefix = f"{t.name}.audit.poisson-center.char{char}"
        if char:
            sp = sp_generators(t, char, "nilradical")
            claims.append(
                rep.check(
                    f"{prefix}.gen-count",
                    f"the p-power generator list has {len(t.nilradical)} entries",
                    len(sp) == len(t.nilradical),
                )
            )
            sp_polys = sp.polynomials(field)
            _audit_invariant_generators(t, claims, prefix, sp_polys, t.nilradical, "nilradical")
            _audit_invariant_generators(
                t, claims, prefix, [g for g in c_gens if g[0] != "c1"], t.nilradical, "nilradical"
            )
            oracle_gens = sp_polys + [g for g in c_gens if g[0] != "c1"]
        else:
            _audit_invariant_generators(t, claims, prefix, c_gens, t.nilradical, "nilradical")
            oracle_gens = c_gens
        for d in range(1, cap + 1):
            basis = brute_force_invariant_space(t, d, t.nilradical, field, max_entries)
            res = compare_with_generated(t, basis, oracle_gens, d, field)
            claims.append(
                rep.check(
                    f"{prefix}.complete.deg{d}",
                    f"degree-{d} invariants (dim {res['oracle_dim']}) all lie in the generated span",
                    res["equal"],
                    residual=None if res["equal"] else str(res),
                )
            )
        claims.append(
            _asserted_generation(
                prefix,
                "the Poisson center",
                f"verified mechanically up to degree {cap}; higher degrees rest on the source's normality argument",
            )
        )

        # center of the enveloping algebra
        prefix = f"{t.name}.audit.u-center.char{char}"
        z_elements: list[tuple[str, PBWElement]] = []
        if char:
            for i in t.nilradical:
                label = t.label(i)
                if label == c1_label(t):
                    continue
                z_elements.append(
                    (f"{label}^{char}", PBWElement.monomial(t.registry, field, ((i, char),)))
                )
        for name in fam.central:
            if char == 0 or name == "c1":
                lift, how = symmetrize(t, fam.element(name, field)), "symmetrized"
            else:
                lift, how = central_lift(t, fam, name, field)
            zname = "z" + name[1:]
            if lift is None:
                claims.append(
                    rep.asserted(
                        f"{prefix}.gen.{zname}.central",
                        f"a central lift {zname} of {name} exists",
                        note=how,
                    )
                )
                continue
            z_elements.append((zname, lift))
            claims.append(
                rep.check(
                    f"{prefix}.gen.{zname}.gr",
                    f"gr({zname}) = {name} ({how})",
                    gr_leading(lift) == fam.element(name, field),
                )
            )
        _audit_central_generators(t, claims, prefix, z_elements, t.nilradical)
        claims.append(
            _asserted_generation(
                prefix,
                "the center of the enveloping algebra",
                "follows from the graded comparison with the symmetric-algebra side",
            )
        )
        return claims

    # Borel level -------------------------------------------------------------
    all_idx = list(range(t.dim))
    nil_idx = list(t.nilradical)

    # split equations and derived-subalgebra witnesses behind the
    # semicenter = nilradical-invariants identity
    prefix = f"{t.name}.audit.split.char{char}"
    if char:
        ok_all = True
        for i in range(t.dim):
            res = ad_power_identity(t, i, char)
            ok_all = ok_all and res.ok
        claims.append(
            rep.check(
                f"{prefix}.ad-power",
                f"every ad-operator satisfies X^{char} = X or X^{char} = 0 over GF({char})",
                ok_all,
            )
        )
    span_rows = []
    for entry in t.brackets.values():
        row = [Fraction(0)] * t.dim
        for k, c in entry:
            row[k] = c
        span_rows.append(row)
    derived_rank = rank_int(rows_to_integer(span_rows)) if span_rows else 0
    claims.append(
        rep.check(
            f"{prefix}.derived-subalgebra",
            "the brackets span exactly the nilradical",
            derived_rank == len(nil_idx),
            residual=f"rank {derived_rank} != {len(nil_idx)}" if derived_rank != len(nil_idx) else None,
        )
    )

    # completeness over the Borel registry is checked to lower degree than at
    # the nilradical level: the Cartan variables are grade-zero in every
    # bracket-compatible grading, so the solver blocks grow quickly
    bcap = min(cap, 3)

    # Poisson center of S(B)
    prefix = f"{t.name}.audit.poisson-center.char{char}"
    if char:
        power_gens = [
            (f"{t.label(i)}^{char}", Polynomial.variable(t.registry, field, i) ** char)
            for i in all_idx
        ]
        claims.append(
            rep.check(
                f"{prefix}.gen-count",
                f"the claimed generator list has {t.dim} entries",
                len(power_gens) == t.dim,
            )
        )
        _audit_invariant_generators(t, claims, prefix, power_gens, all_idx, "Borel")
        for d in range(1, min(bcap, char + 1) + 1):
            basis = brute_force_invariant_space(t, d, all_idx, field, max_entries)
            res = compare_with_generated(t, basis, power_gens, d, field)
            claims.append(
                rep.check(
                    f"{prefix}.complete.deg{d}",
                    f"degree-{d} Borel invariants (dim {res['oracle_dim']}) equal the p-power span",
                    res["equal"],
                    residual=None if res["equal"] else str(res),
                )
            )
        claims.append(
            _asserted_generation(prefix, "the Poisson center of the Borel", f"verified mechanically up to degree {min(bcap, char + 1)}")
        )
    else:
        for d in range(1, bcap + 1):
            basis = brute_force_invariant_space(t, d, all_idx, field, max_entries)
            claims.append(
                rep.check(
                    f"{prefix}.trivial.deg{d}",
                    f"no nonconstant Borel-invariant polynomial exists in degree {d}",
                    not basis,
                    residual=None if not basis else str(basis[0]),
                )
            )
        claims.append(
            _asserted_generation(prefix, "the (trivial) Poisson center of the Borel", f"verified mechanically up to degree {bcap}")
        )

    # semicenter of S(B): nilradical invariants with Cartan weights
    prefix = f"{t.name}.audit.semicenter.char{char}"
    if char:
        spb = sp_generators(t, char, "borel")
        expected_count = len(nil_idx) + len(t.cartan)
        claims.append(
            rep.check(
                f"{prefix}.gen-count",
                f"the Borel-level p-power list has {expected_count} entries",
                len(spb) == expected_count,
            )
        )
        spb_polys = spb.polynomials(field)
        semi_gens = spb_polys + [g for g in c_gens if g[0] != "c1"]
    else:
        semi_gens = c_gens
    _audit_invariant_generators(t, claims, prefix, semi_gens, nil_idx, "nilradical")
    for name, poly in semi_gens:
        weights, bad = weight_of(t, poly)
        claims.append(
            rep.check(
                f"{prefix}.gen.{name}.weight-vector",
                f"generator {name} is a simultaneous Cartan eigenvector",
                weights is not None,
                witness=None if weights is not None else t.label(bad),
            )
        )
    for name, h_label in fam.nonzero_pairings:
        lam = cartan_eigenvalue(t, h_label, fam.element(name, field))
        claims.append(
            rep.check(
                f"{prefix}.pairing.{name}.{h_label}",
                f"{{{h_label}, {name}}} is a nonzero multiple of {name}",
                lam is not None and lam != field.zero,
                residual=f"eigenvalue {lam}",
            )
        )
    for d in range(1, bcap + 1):
        basis = brute_force_invariant_space(t, d, nil_idx, field, max_entries)
        res = compare_with_generated(t, basis, semi_gens, d, field)
        claims.append(
            rep.check(
                f"{prefix}.complete.deg{d}",
                f"degree-{d} nilradical invariants of the Borel (dim {res['oracle_dim']}) equal the generated span",
                res["equal"],
                residual=None if res["equal"] else str(res),
            )
        )
    claims.append(
        _asserted_generation(prefix, "the Poisson semicenter of the Borel", f"verified mechanically up to degree {bcap}")
    )

    # center and semicenter of U(B)
    prefix = f"{t.name}.audit.u-center.char{char}"
    if char:
        central_elements: list[tuple[str, PBWElement]] = []
        for i in nil_idx:
            central_elements.append(
                (f"{t.label(i)}^{char}", PBWElement.monomial(t.registry, field, ((i, char),)))
            )
        for j in t.cartan:
            hp = PBWElement.monomial(t.registry, field, ((j, char),))
            h = PBWElement.variable(t.registry, field, j)
            central_elements.append((f"{t.label(j)}^{char}-{t.label(j)}", hp - h))
        claims.append(
            rep.check(
                f"{prefix}.gen-count",
                f"the extended p-center generator list has {t.dim} entries",
                len(central_elements) == t.dim,
            )
        )
        _audit_central_generators(t, claims, prefix, central_elements, all_idx)
        claims.append(
            _asserted_generation(prefix, "the center of the enveloping algebra of the Borel", "follows from the graded comparison")
        )
    else:
        claims.append(
            rep.check(
                f"{prefix}.trivial.deg1",
                "no degree-one element of the enveloping algebra is central",
                not [
                    i
                    for i in all_idx
                    if is_central_u(
                        t, PBWElement.variable(t.registry, field, i), all_idx
                    )[0]
                ],
            )
        )
        claims.append(
            _asserted_generation(prefix, "the (trivial) center of the enveloping algebra of the Borel", "verified mechanically in filtration degree 1")
        )

    prefix = f"{t.name}.audit.u-semicenter.char{char}"
    for name in fam.central:
        lift, how = central_lift(t, fam, name, field)
        zname = "z" + name[1:]
        if lift is None:
            claims.append(
                rep.asserted(
                    f"{prefix}.gen.{zname}.semi-central",
                    f"a semi-central lift {zname} of {name} exists",
                    note=how,
                )
            )
            continue
        ok, bad = is_central_u(t, lift, nil_idx)
        eigen_ok = True
        nonzero_weight = False
        for k in t.cartan:
            com = commutator_with_basis(t, k, lift)
            if com.is_zero:
                continue
            lam = None
            probe = next(iter(lift.terms))
            if probe in com.terms:
                lam = field.div(com.terms[probe], lift.terms[probe])
            if lam is None or not (com - lift.scale(lam)).is_zero:
                eigen_ok = False
                break
            if lam != field.zero:
                nonzero_weight = True
        claims.append(
            rep.check(
                f"{prefix}.gen.{zname}.semi-central",
                f"{zname} commutes with the nilradical and is a Cartan eigenvector "
                f"with nonzero weight ({how})",
                ok and eigen_ok and nonzero_weight,
                witness=None if ok else t.label(bad),
            )
        )
        claims.append(
            rep.check(
                f"{prefix}.gen.{zname}.gr",
                f"gr({zname}) = {name}",
                gr_leading(lift) == fam.element(name, field),
            )
        )
    claims.append(
        _asserted_generation(prefix, "the semicenter of the enveloping algebra of the Borel", "follows from the graded comparison")
    )
    return claims
