"""Named invariant elements of the catalog algebras and their verification.

For G2 and F4 the central elements c_i and the auxiliary u/v/w elements are
built from explicit formulas; for Cn they are determinants of nested
right-upper blocks of a 2n x 2n arrangement of the basis.  The module also
provides the independent brute-force oracle: the space of homogeneous
invariants of a fixed degree computed by exact linear algebra, decomposed
into multidegree blocks derived from the structure table itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

from . import linalg
from . import report as rep
from .exactalg import (
    QQ,
    Field,
    Monomial,
    Polynomial,
    VarRegistry,
    mono_div_var,
    mono_mul_var,
    mono_sort_key,
    parse_polynomial,
)
from .liealg import StructureTable
from .poisson import ad_apply, cartan_eigenvalue, is_invariant


class OracleCapExceeded(ValueError):
    """The brute-force solver would exceed its configured size cap."""


# ---------------------------------------------------------------------------
# Invariant families
# ---------------------------------------------------------------------------

TriangleCase = tuple[str, str, Optional[str]]  # (v-name, x-label, expected c or None)


@dataclass
class InvariantFamily:
    """The named elements of one catalog algebra, rebuildable over any
    admissible coefficient field."""

    algebra: str
    table: StructureTable
    central: tuple[str, ...]
    builder: Callable[[Field], dict[str, Polynomial]]
    weight_expectations: tuple = ()
    nonzero_pairings: tuple = ()
    chain: dict = dc_field(default_factory=dict)
    chain_weights: tuple = ()
    triangle_cases: tuple[TriangleCase, ...] = ()
    notes: tuple[str, ...] = ()
    extras: dict = dc_field(default_factory=dict)
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def elements(self, field: Field = QQ) -> dict[str, Polynomial]:
        key = field.characteristic
        if key not in self._cache:
            self.table.check_characteristic(key)
            self._cache[key] = self.builder(field)
        return self._cache[key]

    def element(self, name: str, field: Field = QQ) -> Polynomial:
        return self.elements(field)[name]

    def names(self) -> list[str]:
        return sorted(self.elements(QQ))

    def degree(self, name: str) -> int:
        return self.element(name).total_degree()


# -- G2 ----------------------------------------------------------------------


def _g2_defs(registry: VarRegistry, field: Field) -> dict[str, Polynomial]:
    def P(text: str) -> Polynomial:
        return parse_polynomial(registry, field, text)

    return {
        "c1": P("x6"),
        "c2": P("3*x1*x6 - 3*x2*x5 + x3^2"),
        "v2": P("-1/3*x3"),
        "v3": P("1/3*x2"),
        "v4": P("x5"),
        "v5": P("-x4"),
    }


def g2_invariants(t: StructureTable) -> InvariantFamily:
    triangle = []
    for i in range(2, 6):
        for j in range(i, 6):
            triangle.append((f"v{i}", f"x{j}", "c1" if i == j else None))
    return InvariantFamily(
        algebra=t.name,
        table=t,
        central=("c1", "c2"),
        builder=lambda field: _g2_defs(t.registry, field),
        weight_expectations=(
            ("c1", "h1", "1", None),
            ("c1", "h2", "-2", None),
            ("c2", "h1", "0", None),
            (
                "c2",
                "h2",
                "-2",
                "source states eigenvalue -1; direct expansion from the bracket "
                "table forces -2 (antisymmetry with {c2,h2} = 2*c2 agrees)",
            ),
        ),
        nonzero_pairings=(("c1", "h1"), ("c2", "h2")),
        triangle_cases=tuple(triangle),
    )


# -- F4 ----------------------------------------------------------------------


def _f4_defs(registry: VarRegistry, field: Field) -> dict[str, Polynomial]:
    def P(text: str) -> Polynomial:
        return parse_polynomial(registry, field, text)

    e: dict[str, Polynomial] = {}
    e["c1"] = P("x24")
    e["c2"] = P("2*x16*x24 - 2*x18*x23 - x20*x22 + x21^2")
    e["v4"] = P("-2*x13*x24 + 2*x15*x23 + x17*x22 - x19*x21")
    e["u9"] = P("x9*x24 - x11*x23 + x14*x22 - 1/2*x19^2")
    e["c3"] = e["c2"] * e["u9"] + (e["v4"] * e["v4"]).scale("1/2")
    e["v7"] = P("2*x10*x24 - 2*x12*x23 + x19*x20 - x17*x21")
    e["u6"] = P("x6*x24 - x8*x23 + x14*x21 - 1/2*x17*x19")
    e["v3"] = -(e["c2"] * e["u6"]) + (e["v4"] * e["v7"]).scale("1/2")
    e["u2"] = P("x2*x24 - x5*x23 - 1/2*x14*x20 + 1/4*x17^2")
    e["w3"] = e["u9"] * e["v7"] + e["u6"] * e["v4"]
    e["c4"] = (
        -(e["u2"] * e["c3"])
        + (e["u6"] * e["v3"]).scale("1/2")
        + (e["v7"] * e["w3"]).scale("1/4")
    )
    e["v23"] = P("x1")
    e["v22"] = P("x5")
    e["v21"] = P("x8")
    e["v20"] = P("-1/2*x11")
    e["v19"] = P("x12")
    e["v18"] = P("-x14")
    e["v17"] = P("-x15")
    e["v15"] = P("x17")
    e["v14"] = P("x18")
    e["v12"] = P("-x19")
    e["v11"] = P("1/2*x20")
    # The source prints v8 = x21, but {x21, x8} = -x24 = -c1 while the
    # triangle identity requires +c1; the bracket [x8, x21] = x24 is forced
    # by the Jacobi identity, so the sign belongs on v8.
    e["v8"] = P("-x21")
    e["v5"] = P("-x22")
    e["v1"] = P("-x23")
    e["v13"] = P("2*x4*x24 - 2*x17*x18 + 2*x15*x20 - 2*x12*x21")
    e["v10"] = P("-2*x7*x24 + 2*x18*x19 + 2*x12*x22 - 2*x15*x21")
    e["u3"] = P("-x3*x24 - x11*x21 + x8*x22 - x15*x19")
    e["v6"] = -(e["c2"] * e["u3"]) + (e["v4"] * e["v10"]).scale("1/2")
    return e


_F4_TRIANGLE_INDICES = tuple(i for i in range(1, 25) if i not in (2, 9, 16, 24))

_F4_U6_X3_NOTE = (
    "source states {x3, u6} = -u9; the bracket table forces +u9, which is "
    "also what the passing identity {x3, v3} = -c3 requires"
)

_F4_CHAIN = {
    "v4": {"x4": ("-1", "c2")},
    "u9": {"x4": ("1", "v4")},
    "v7": {"x3": ("-1", "v4"), "x7": ("-1", "c2")},
    "u6": {
        "x3": ("1", "u9", _F4_U6_X3_NOTE),
        "x4": ("-1/2", "v7"),
        "x7": ("-1/2", "v4"),
    },
    "v3": {"x3": ("-1", "c3")},
    "u2": {"x3": ("-1", "u6"), "x7": ("-1/2", "v7")},
    "w3": {"x4": ("1", "v3"), "x7": ("-1", "c3")},
    "v10": {"x2": ("-1", "v7"), "x6": ("-1", "v4"), "x10": ("-1", "c2")},
    "u3": {
        "x2": ("-1", "u6"),
        "x4": ("-1/2", "v10"),
        "x6": ("1", "u9"),
        "x10": ("-1/2", "v4"),
    },
}

_F4_CHAIN_WEIGHTS = (
    ("u9", "h3", "2"),
    ("v4", "h3", "1"),
    ("u9", "h2", "0"),
    ("v4", "h2", "0"),
    ("u2", "h2", "2"),
    ("u6", "h2", "1"),
    ("v3", "h2", "1"),
    ("v7", "h2", "1"),
    ("w3", "h2", "1"),
)


def f4_invariants(t: StructureTable) -> InvariantFamily:
    def diag_class(i: int) -> str:
        if i in (3, 6):
            return "c3"
        if i in (4, 7, 10, 13):
            return "c2"
        return "c1"

    triangle = []
    for a, i in enumerate(_F4_TRIANGLE_INDICES):
        for j in _F4_TRIANGLE_INDICES[a:]:
            triangle.append((f"v{i}", f"x{j}", diag_class(i) if i == j else None))
    return InvariantFamily(
        algebra=t.name,
        table=t,
        central=("c1", "c2", "c3", "c4"),
        builder=lambda field: _f4_defs(t.registry, field),
        weight_expectations=(
            ("c1", "h1", "1", None),
            ("c1", "h2", "0", None),
            ("c1", "h3", "0", None),
            ("c1", "h4", "0", None),
            ("c2", "h2", "0", None),
            ("c2", "h3", "0", None),
            ("c2", "h4", "2", None),
            ("c3", "h2", "0", None),
            ("c3", "h3", "2", None),
            ("c4", "h2", "2", None),
        ),
        nonzero_pairings=(
            ("c1", "h1"),
            ("c2", "h4"),
            ("c3", "h3"),
            ("c4", "h2"),
        ),
        chain=_F4_CHAIN,
        chain_weights=_F4_CHAIN_WEIGHTS,
        triangle_cases=tuple(triangle),
        notes=(
            "v8 is taken as -x21: the printed +x21 gives {v8, x8} = -c1, "
            "while the Jacobi-forced bracket [x8, x21] = x24 requires -x21 "
            "for the triangle identity {v8, x8} = c1",
        ),
    )


# -- Cn ----------------------------------------------------------------------


def anti_index(l: int, s: int) -> int:
    """Position s counted from the other end of a length-l range: l - s + 1."""
    return l - s + 1


@dataclass(frozen=True)
class BlockMatrixM:
    """The 2n x 2n arrangement of the nilradical basis, anti-diagonally
    symmetric, from whose nested right-upper blocks the c_i are taken."""

    n: int
    convention: str
    entries: tuple  # entries[r][c] are polynomials over QQ

    def block(self, i: int) -> list[list[Polynomial]]:
        """The i-th right-upper block (rows 1..i, last i columns), 1-based."""
        size = 2 * self.n
        return [
            [self.entries[r][c] for c in range(size - i, size)] for r in range(i)
        ]


def _build_m_matrix(t: StructureTable, n: int, convention: str) -> BlockMatrixM:
    size = 2 * n
    reg = t.registry
    zero = Polynomial.zero(reg, QQ)
    grid = [[zero for _ in range(size)] for _ in range(size)]

    def var(label: str) -> Polynomial:
        return Polynomial.variable(reg, QQ, label)

    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i != j:
                a = var(f"a{i}_{j}")
                grid[i - 1][j - 1] = a
                grid[anti_index(size, j) - 1][anti_index(size, i) - 1] = a
            if i == j:
                b = var(f"b{i}")
                if convention == "double-diagonal":
                    b = b.scale(2)
                grid[i - 1][anti_index(size, i) - 1] = b
            else:
                c = var(f"c{i}_{j}")
                if convention == "halve-shared":
                    c = c.scale("1/2")
                grid[i - 1][anti_index(size, j) - 1] = c
                grid[j - 1][anti_index(size, i) - 1] = c
    return BlockMatrixM(n, convention, tuple(tuple(row) for row in grid))


def _poly_det(rows: list[list[Polynomial]]) -> Polynomial:
    if len(rows) == 1:
        return rows[0][0]
    first = rows[0][0]
    total = Polynomial.zero(first.registry, first.field)
    sign = 1
    for j in range(len(rows)):
        minor = [[row[k] for k in range(len(rows)) if k != j] for row in rows[1:]]
        term = rows[0][j] * _poly_det(minor)
        total = total + term if sign > 0 else total - term
        sign = -sign
    return total


CN_CONVENTIONS = ("literal", "halve-shared", "double-diagonal")


def cn_invariants(t: StructureTable) -> InvariantFamily:
    """Build the Cn determinant invariants, selecting the entry-scaling
    convention empirically: candidates are evaluated in a fixed order and the
    first one whose determinants are all nilradical-invariant wins."""
    n = len(t.cartan) if t.cartan else _infer_cn_rank(t)
    verdicts: dict[str, bool] = {}
    chosen = None
    chosen_cs: dict[str, Polynomial] = {}
    chosen_matrix = None
    for convention in CN_CONVENTIONS:
        matrix = _build_m_matrix(t, n, convention)
        cs = {f"c{i}": _poly_det(matrix.block(i)) for i in range(1, n + 1)}
        ok = all(
            is_invariant(t, f, t.nilradical)[0] and not f.is_zero
            for f in cs.values()
        )
        verdicts[convention] = ok
        if ok and chosen is None:
            chosen, chosen_cs, chosen_matrix = convention, cs, matrix
    if chosen is None:
        raise ValueError(
            f"no entry-scaling convention makes the c_i invariant for {t.name}"
        )

    def build(field: Field) -> dict[str, Polynomial]:
        return {
            name: Polynomial.from_terms(t.registry, field, poly.terms.items())
            for name, poly in chosen_cs.items()
        }

    weight_expectations = tuple(
        (f"c{i}", f"h{k}", "2" if k <= i else "0", None)
        for i in range(1, n + 1)
        for k in range(1, n + 1)
    )
    return InvariantFamily(
        algebra=t.name,
        table=t,
        central=tuple(f"c{i}" for i in range(1, n + 1)),
        builder=build,
        weight_expectations=weight_expectations,
        nonzero_pairings=tuple((f"c{i}", f"h{i}") for i in range(1, n + 1)),
        notes=(f"entry-scaling convention: {chosen}",),
        extras={"matrix": chosen_matrix, "convention_verdicts": verdicts, "n": n},
    )


def _infer_cn_rank(t: StructureTable) -> int:
    n = int(round(len(t.registry) ** 0.5))
    if n * n != len(t.registry):
        raise ValueError(f"cannot infer Cn rank from dimension {len(t.registry)}")
    return n


_CN_NAME = re.compile(r"c\d+-")


def build_family(t: StructureTable) -> InvariantFamily:
    if t.name.startswith("g2"):
        return g2_invariants(t)
    if t.name.startswith("f4"):
        return f4_invariants(t)
    if _CN_NAME.match(t.name):
        return cn_invariants(t)
    raise ValueError(f"no invariant family known for algebra {t.name!r}")


# ---------------------------------------------------------------------------
# Verification suites over families
# ---------------------------------------------------------------------------


def invariance_suite(t: StructureTable, fam: InvariantFamily, field: Field = QQ) -> list[rep.Claim]:
    """One claim per (central element, nilradical generator): {x, c} = 0."""
    claims = []
    char = field.characteristic
    for name in fam.central:
        f = fam.element(name, field)
        for i in t.nilradical:
            g = ad_apply(t, i, f)
            claims.append(
                rep.check(
                    f"{t.name}.invariance.{name}.{t.label(i)}.char{char}",
                    f"{{{t.label(i)}, {name}}} = 0 over characteristic {char}",
                    g.is_zero,
                    residual=None if g.is_zero else str(g),
                )
            )
    return claims


def _expected_poly(fam: InvariantFamily, field: Field, spec: Optional[tuple]) -> Polynomial:
    reg = fam.table.registry
    if spec is None:
        return Polynomial.zero(reg, field)
    coef, target = spec[0], spec[1]
    return fam.element(target, field).scale(coef)


def verify_relation_chain(t: StructureTable, fam: InvariantFamily, field: Field = QQ) -> list[rep.Claim]:
    """Check every stated derivation identity of the auxiliary elements,
    including all '= 0 otherwise' complements, plus their weight facts.

    A chain entry may carry a note recording a corrected sign; such claims
    report as derived-with-note when the corrected identity holds.
    """
    claims = []
    for elem in sorted(fam.chain):
        expect_map = fam.chain[elem]
        f = fam.element(elem, field)
        for i in t.nilradical:
            label = t.label(i)
            spec = expect_map.get(label)
            expected = _expected_poly(fam, field, spec)
            got = ad_apply(t, i, f)
            residual = got - expected
            note = spec[2] if spec and len(spec) > 2 else None
            if spec:
                statement = f"{{{label}, {elem}}} = {spec[0]}*{spec[1]}"
            else:
                statement = f"{{{label}, {elem}}} = 0"
            claim_id = f"{t.name}.chain.{elem}.{label}"
            if residual.is_zero and note:
                claims.append(rep.noted(claim_id, statement, note))
            else:
                claims.append(
                    rep.check(
                        claim_id,
                        statement,
                        residual.is_zero,
                        residual=None if residual.is_zero else str(residual),
                        note=note,
                    )
                )
    for elem, h_label, scalar in fam.chain_weights:
        if h_label not in t.registry:  # Cartan facts need the Borel table
            continue
        f = fam.element(elem, field)
        lam = cartan_eigenvalue(t, h_label, f)
        want = field.coerce(scalar)
        claims.append(
            rep.check(
                f"{t.name}.chain.weight.{elem}.{h_label}",
                f"{{{h_label}, {elem}}} = {scalar}*{elem}",
                lam is not None and lam == want,
                residual=None if lam == want else f"eigenvalue {lam}",
            )
        )
    return claims


def verify_triangle_property(t: StructureTable, fam: InvariantFamily, field: Field = QQ) -> list[rep.Claim]:
    """The triangular pairing of the v-elements against the generators:
    zero above the diagonal, a designated central element on it."""
    claims = []
    for vname, xlabel, cname in fam.triangle_cases:
        v = fam.element(vname, field)
        got = ad_apply(t, t.registry.index(xlabel), v.scale(-1))  # {v, x} = -{x, v}
        expected = (
            Polynomial.zero(t.registry, field)
            if cname is None
            else fam.element(cname, field)
        )
        residual = got - expected
        claims.append(
            rep.check(
                f"{t.name}.triangle.{vname}.{xlabel}",
                f"{{{vname}, {xlabel}}} = {cname or '0'}",
                residual.is_zero,
                residual=None if residual.is_zero else str(residual),
            )
        )
    return claims


# ---------------------------------------------------------------------------
# Brute-force oracle: homogeneous invariant spaces by exact linear algebra
# ---------------------------------------------------------------------------


def homogeneous_monomials(nvars: int, degree: int) -> list[Monomial]:
    """All sparse monomials of the given total degree, in a fixed
    deterministic order (lexicographic by dense exponent vector)."""
    out: list[Monomial] = []

    def rec(start: int, remaining: int, acc: list):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if start == nvars:
            return
        if start == nvars - 1:
            acc.append((start, remaining))
            out.append(tuple(acc))
            acc.pop()
            return
        for e in range(remaining, 0, -1):
            acc.append((start, e))
            rec(start + 1, remaining - e, acc)
            acc.pop()
        rec(start + 1, remaining, acc)

    rec(0, degree, [])
    return out


def derive_multigrading(t: StructureTable) -> list[tuple[int, ...]]:
    """Integer gradings of the basis compatible with every bracket:
    w_i + w_j = w_k whenever x_k appears in [x_i, x_j].

    Any such grading splits the invariance system into independent blocks,
    because each ad x_i shifts a monomial's multidegree by w_i uniformly.
    """
    dim = t.dim
    rows = []
    for (i, j), entry in sorted(t.brackets.items()):
        for k, c in entry:
            if c:
                row = [0] * dim
                row[i] += 1
                row[j] += 1
                row[k] -= 1
                rows.append(row)
    if not rows:
        rows = [[0] * dim]
    return [tuple(v) for v in linalg.nullspace_int(rows, dim)]


def _mono_grade(mono: Monomial, gradings: Sequence[tuple[int, ...]]) -> tuple:
    return tuple(sum(e * g[v] for v, e in mono) for g in gradings)


def _integer_scaled_rows(t: StructureTable, gens: Sequence[int]) -> dict:
    """Bracket rows with all rational constants scaled to integers by one
    global factor; a uniform scale leaves every kernel unchanged."""
    scale = 1
    for entry in t.brackets.values():
        for _, c in entry:
            d = c.denominator
            scale = scale * d // gcd(scale, d)
    out = {}
    for i in gens:
        row = t.bracket_row(i, 0)
        out[i] = {
            v: tuple((w, int(c * scale)) for w, c in targets)
            for v, targets in row.items()
        }
    return out


def brute_force_invariant_space(
    t: StructureTable,
    degree: int,
    gens: Iterable[int],
    field: Field = QQ,
    max_entries: int = 10**6,
) -> list[Polynomial]:
    """Basis of the space of homogeneous degree-d polynomials killed by every
    ad x_i, i in gens, solved exactly blockwise per derived multidegree.

    This is the independent oracle: it never consults the invariant
    families, only the structure table.  Over the rationals each block is
    first rank-tested modulo a fixed large prime; full modular column rank
    proves an empty kernel, and only the remaining blocks go through exact
    fraction-free elimination.
    """
    t.check_characteristic(field.characteristic)
    gens = list(gens)
    char = field.characteristic
    monos = homogeneous_monomials(t.dim, degree)
    gradings = derive_multigrading(t)
    blocks: dict[tuple, list[Monomial]] = {}
    for m in monos:
        blocks.setdefault(_mono_grade(m, gradings), []).append(m)

    if char:
        rows_cache = {i: t.bracket_row(i, char) for i in gens}
    else:
        rows_cache = _integer_scaled_rows(t, gens)
    basis: list[Polynomial] = []
    total_entries = 0
    for grade in sorted(blocks):
        cols = blocks[grade]
        constraint_rows: dict[tuple, dict[int, int]] = {}
        for gi in gens:
            row_map = rows_cache[gi]
            for cidx, mono in enumerate(cols):
                for v, e in mono:
                    targets = row_map.get(v)
                    if not targets:
                        continue
                    base = mono_div_var(mono, v)
                    for w, cw in targets:
                        target_mono = mono_mul_var(base, w)
                        key = (gi, target_mono)
                        row = constraint_rows.setdefault(key, {})
                        if char:
                            row[cidx] = (row.get(cidx, 0) + e * cw) % char
                        else:
                            row[cidx] = row.get(cidx, 0) + e * cw
        dense = []
        for key in sorted(constraint_rows, key=lambda k: (k[0], mono_sort_key(k[1]))):
            row = constraint_rows[key]
            if any(row.values()):
                dense.append([row.get(c, 0) for c in range(len(cols))])
        total_entries += len(dense) * len(cols)
        if total_entries > max_entries:
            raise OracleCapExceeded(
                f"oracle system exceeds {max_entries} matrix entries"
            )
        if not dense:
            null = [[1 if c == k else 0 for c in range(len(cols))] for k in range(len(cols))]
        elif char:
            if linalg.saturates_mod(dense, len(cols), char):
                null = []
            else:
                null = linalg.nullspace_mod(dense, len(cols), char)
        else:
            if linalg.saturates_mod(dense, len(cols), linalg.FILTER_PRIME):
                null = []
            else:
                null = linalg.nullspace_int(dense, len(cols))
        for vec in null:
            basis.append(
                Polynomial.from_terms(
                    t.registry, field, ((cols[c], vec[c]) for c in range(len(cols)))
                )
            )
    return basis


# ---------------------------------------------------------------------------
# Span comparison against declared generators
# ---------------------------------------------------------------------------


def degree_d_products(
    generators: Sequence[tuple[str, Polynomial]], degree: int
) -> list[tuple[str, Polynomial]]:
    """All products of the declared generators of total degree d."""
    gens = [(name, poly, poly.total_degree()) for name, poly in generators]
    out: list[tuple[str, Polynomial]] = []

    def rec(idx: int, remaining: int, label_parts: list, acc: Optional[Polynomial]):
        if remaining == 0:
            out.append(("*".join(label_parts) or "1", acc))
            return
        if idx == len(gens):
            return
        name, poly, d = gens[idx]
        rec(idx + 1, remaining, label_parts, acc)
        power = 1
        current = acc
        while power * d <= remaining:
            current = poly if current is None else current * poly
            label = name if power == 1 else f"{name}^{power}"
            rec(idx + 1, remaining - power * d, label_parts + [label], current)
            power += 1

    rec(0, degree, [], None)
    return out


def _vectorize(polys: Sequence[Polynomial], char: int) -> tuple[list, int]:
    cols: dict[Monomial, int] = {}
    for p in polys:
        for m in p.terms:
            if m not in cols:
                cols[m] = len(cols)
    rows = []
    for p in polys:
        if char:
            row = [0] * len(cols)
        else:
            row = [Fraction(0)] * len(cols)
        for m, c in p.terms.items():
            row[cols[m]] = c
        rows.append(row)
    return rows, len(cols)


def compare_with_generated(
    t: StructureTable,
    oracle_basis: Sequence[Polynomial],
    generators: Sequence[tuple[str, Polynomial]],
    degree: int,
    field: Field = QQ,
) -> dict:
    """Exact mutual-containment comparison: the span of degree-d generator
    products against the oracle's invariant space."""
    char = field.characteristic
    products = [p for _, p in degree_d_products(generators, degree) if not p.is_zero]
    all_polys = list(oracle_basis) + products
    if not all_polys:
        return {
            "degree": degree,
            "oracle_dim": 0,
            "generated_dim": 0,
            "union_dim": 0,
            "equal": True,
        }
    rows, _ = _vectorize(all_polys, char)
    n_oracle = len(oracle_basis)
    oracle_rows = rows[:n_oracle]
    generated_rows = rows[n_oracle:]
    if char:
        rank = lambda rs: linalg.rank_mod(rs, char) if rs else 0
    else:
        rank = lambda rs: linalg.rank_int(linalg.rows_to_integer(rs)) if rs else 0
    r_oracle = rank(oracle_rows)
    r_generated = rank(generated_rows)
    r_union = rank(oracle_rows + generated_rows)
    return {
        "degree": degree,
        "oracle_dim": r_oracle,
        "generated_dim": r_generated,
        "union_dim": r_union,
        "equal": r_oracle == r_generated == r_union,
    }


def oracle_suite(
    t: StructureTable,
    generators: Sequence[tuple[str, Polynomial]],
    degrees: Iterable[int],
    field: Field = QQ,
    gens: Optional[Sequence[int]] = None,
    max_entries: int = 10**6,
) -> tuple[list[rep.Claim], list[dict]]:
    """Compare oracle invariant spaces with generated spans degree by degree."""
    claims = []
    results = []
    gen_indices = list(t.nilradical) if gens is None else list(gens)
    char = field.characteristic
    for d in degrees:
        basis = brute_force_invariant_space(t, d, gen_indices, field, max_entries)
        res = compare_with_generated(t, basis, generators, d, field)
        results.append(res)
        claims.append(
            rep.check(
                f"{t.name}.oracle.deg{d}.char{char}",
                f"degree-{d} invariant space (dim {res['oracle_dim']}) equals the "
                f"generated span (dim {res['generated_dim']}) over characteristic {char}",
                res["equal"],
                residual=None if res["equal"] else str(res),
            )
        )
    return claims, results
