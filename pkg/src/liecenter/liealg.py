"""Lie algebras as exact structure-constant tables.

A :class:`StructureTable` stores the brackets of ordered basis pairs (i < j)
as linear combinations of basis elements with rational coefficients; the
table is characteristic-free and coefficients are reduced into a prime field
on demand.  The catalog provides the Borel subalgebras of G2 (dimension 8),
F4 (dimension 28) and Cn (dimension n^2+n, generated programmatically from a
2n x 2n matrix realization), plus their nilradicals.

Every shipped table passes :func:`jacobi_check`; builders validate by
default and accept an optional corrections overlay that replaces individual
printed entries while retaining the original for audit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from . import _f4_data
from .exactalg import (
    QQ,
    Field,
    Polynomial,
    VarRegistry,
    parse_polynomial,
)

LinComb = dict[int, Fraction]  # basis index -> rational coefficient


class TableDataError(ValueError):
    """Raised when shipped or loaded table data is internally inconsistent."""


@dataclass(frozen=True)
class Correction:
    """A single overridden bracket entry, keeping the original value."""

    lhs: str
    rhs: str
    value: str
    original: str


class StructureTable:
    """A Lie algebra given by basis labels and exact structure constants."""

    def __init__(
        self,
        name: str,
        registry: VarRegistry,
        brackets: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]],
        cartan: Sequence[int],
        nilradical: Sequence[int],
        excluded_primes: Iterable[int] = (2,),
        corrections: Sequence[Correction] = (),
    ):
        self.name = name
        self.registry = registry
        self.brackets = brackets
        self.cartan = tuple(cartan)
        self.nilradical = tuple(nilradical)
        self.excluded_primes = frozenset(excluded_primes)
        self.corrections = tuple(corrections)
        self._row_cache: dict = {}
        self._pbw_cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.registry)

    def label(self, i: int) -> str:
        return self.registry.name(i)

    def admissible_characteristic(self, char: int) -> bool:
        return char == 0 or char not in self.excluded_primes

    def check_characteristic(self, char: int) -> None:
        if not self.admissible_characteristic(char):
            raise ValueError(
                f"characteristic {char} is excluded for algebra {self.name}"
            )

    # -- raw bracket access --------------------------------------------------

    def bracket_coords(self, i: int, j: int) -> LinComb:
        """[basis_i, basis_j] as a sparse coefficient dict (antisymmetry applied)."""
        if i == j:
            return {}
        if i < j:
            entry = self.brackets.get((i, j))
            return dict(entry) if entry else {}
        entry = self.brackets.get((j, i))
        return {k: -c for k, c in entry} if entry else {}

    def bracket(self, i: Union[int, str], j: Union[int, str], field: Field = QQ) -> Polynomial:
        """[basis_i, basis_j] as a linear polynomial over ``field``."""
        i = self.registry.resolve(i)
        j = self.registry.resolve(j)
        coords = self.bracket_coords(i, j)
        return Polynomial.from_terms(
            self.registry, field, (( ((k, 1),), c) for k, c in coords.items())
        )

    def bracket_row(self, i: int, char: int) -> dict:
        """Cached map j -> ((k, coeff), ...) of [basis_i, basis_j] over the
        field of the given characteristic, for every j with nonzero bracket."""
        key = (char, i)
        row = self._row_cache.get(key)
        if row is not None:
            return row
        row = {}
        for j in range(self.dim):
            coords = self.bracket_coords(i, j)
            if not coords:
                continue
            if char:
                reduced = []
                for k, c in coords.items():
                    den = c.denominator % char
                    if den == 0:
                        raise ZeroDivisionError(
                            f"structure constant {c} not reducible mod {char}"
                        )
                    reduced.append((k, c.numerator * pow(den, char - 2, char) % char))
                row[j] = tuple((k, c) for k, c in reduced if c)
            else:
                row[j] = tuple(coords.items())
        self._row_cache[key] = row
        return row

    # -- derived tables --------------------------------------------------------

    def __repr__(self):
        return f"<StructureTable {self.name} dim={self.dim}>"


def _lincomb_apply(t: StructureTable, i: int, lin: LinComb) -> LinComb:
    """[basis_i, sum_k lin_k basis_k] as a coefficient dict."""
    out: LinComb = {}
    for k, c in lin.items():
        for m, cm in t.bracket_coords(i, k).items():
            acc = out.get(m, 0) + c * cm
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
    return out


def lincomb_to_poly(t: StructureTable, lin: LinComb, field: Field = QQ) -> Polynomial:
    return Polynomial.from_terms(
        t.registry, field, ((((k, 1),), c) for k, c in lin.items())
    )


# ---------------------------------------------------------------------------
# Jacobi validation
# ---------------------------------------------------------------------------


@dataclass
class JacobiFailure:
    triple: tuple[str, str, str]
    residual: str


@dataclass
class JacobiReport:
    algebra: str
    triples_checked: int
    failures: list[JacobiFailure] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def jacobi_check(t: StructureTable) -> JacobiReport:
    """Check [xi,[xj,xk]] + [xj,[xk,xi]] + [xk,[xi,xj]] = 0 over all triples."""
    report = JacobiReport(algebra=t.name, triples_checked=0)
    for i, j, k in combinations(range(t.dim), 3):
        report.triples_checked += 1
        total: LinComb = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = t.bracket_coords(b, c)
            for m, cm in _lincomb_apply(t, a, inner).items():
                acc = total.get(m, 0) + cm
                if acc:
                    total[m] = acc
                else:
                    total.pop(m, None)
        if total:
            residual = str(lincomb_to_poly(t, total))
            report.failures.append(
                JacobiFailure((t.label(i), t.label(j), t.label(k)), residual)
            )
    return report


def check_nilradical_ideal(t: StructureTable) -> list[str]:
    """Return violation messages if [B,B] is not inside the nilradical span
    or the Cartan part is not abelian."""
    problems = []
    nil = set(t.nilradical)
    for (i, j), entry in t.brackets.items():
        outside = [k for k, c in entry if k not in nil and c]
        if outside:
            problems.append(
                f"[{t.label(i)},{t.label(j)}] leaves the nilradical span"
            )
    cartan = set(t.cartan)
    for i in t.cartan:
        for j in t.cartan:
            if i < j and t.brackets.get((i, j)):
                problems.append(f"[{t.label(i)},{t.label(j)}] != 0 inside the Cartan")
    return problems


# ---------------------------------------------------------------------------
# Adjoint matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjointMatrix:
    """Matrix of ad(basis_index) on the basis span; column j holds the
    coordinates of [x, basis_j]."""

    algebra: str
    index: int
    entries: tuple  # entries[r][c]

    @property
    def size(self) -> int:
        return len(self.entries)


def ad_matrix(t: StructureTable, i: Union[int, str], field: Field = QQ, indices: Optional[Sequence[int]] = None) -> AdjointMatrix:
    """ad(basis_i) on the span of ``indices`` (default: the full basis)."""
    i = t.registry.resolve(i)
    idx = list(range(t.dim)) if indices is None else list(indices)
    pos = {k: r for r, k in enumerate(idx)}
    zero = field.zero
    cols = []
    for j in idx:
        col = [zero] * len(idx)
        for k, c in t.bracket_coords(i, j).items():
            if k in pos:
                col[pos[k]] = field.coerce(c)
            elif c:
                raise ValueError(
                    f"[{t.label(i)},{t.label(j)}] leaves the requested span"
                )
        cols.append(col)
    entries = tuple(
        tuple(cols[c][r] for c in range(len(idx))) for r in range(len(idx))
    )
    return AdjointMatrix(t.name, i, entries)


def mat_mul(a, b, field: Field):
    n = len(a)
    bt = list(zip(*b))
    zero = field.zero
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x != zero and y != zero:
                    acc = field.add(acc, field.mul(x, y))
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_pow(a, k: int, field: Field):
    n = len(a)
    result = tuple(
        tuple(field.one if r == c else field.zero for c in range(n)) for r in range(n)
    )
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base, field)
        k >>= 1
        if k:
            base = mat_mul(base, base, field)
    return result


@dataclass
class AdPowerResult:
    algebra: str
    label: str
    kind: str  # "nilpotent" or "cartan"
    p: int
    ok: bool


def ad_power_identity(t: StructureTable, i: Union[int, str], p: int) -> AdPowerResult:
    """Verify (ad x)^p = 0 for nilradical elements and (ad h)^p = ad h for
    Cartan elements, as exact matrix identities over F_p."""
    from .exactalg import GF

    t.check_characteristic(p)
    i = t.registry.resolve(i)
    fp = GF(p)
    m = ad_matrix(t, i, fp).entries
    power = mat_pow(m, p, fp)
    if i in t.cartan:
        kind, ok = "cartan", power == m
    else:
        zero = tuple(tuple(fp.zero for _ in row) for row in m)
        kind, ok = "nilpotent", power == zero
    return AdPowerResult(t.name, t.label(i), kind, p, ok)


# ---------------------------------------------------------------------------
# Builders: parsing helpers, corrections overlay
# ---------------------------------------------------------------------------


def _parse_lincomb(registry: VarRegistry, text: str) -> tuple[tuple[int, Fraction], ...]:
    poly = parse_polynomial(registry, QQ, text)
    out = []
    for m, c in poly.sorted_terms():
        if len(m) != 1 or m[0][1] != 1:
            raise TableDataError(f"bracket value {text!r} is not linear in the basis")
        out.append((m[0][0], c))
    return tuple(out)


def _apply_corrections(
    registry: VarRegistry,
    raw: dict[tuple[str, str], str],
    corrections: Sequence[dict],
) -> tuple[dict[tuple[str, str], str], list[Correction]]:
    applied = []
    data = dict(raw)
    for corr in corrections:
        lhs, rhs, value = corr["lhs"], corr["rhs"], corr["value"]
        if lhs not in registry or rhs not in registry:
            raise TableDataError(f"correction names unknown basis label: {corr}")
        original = data.get((lhs, rhs), "0")
        data[(lhs, rhs)] = value
        applied.append(Correction(lhs, rhs, value, original))
    return data, applied


def _build_table(
    name: str,
    labels: Sequence[str],
    cartan_labels: Sequence[str],
    raw: dict[tuple[str, str], str],
    excluded_primes: Iterable[int],
    corrections: Sequence[dict] = (),
    validate: bool = True,
) -> StructureTable:
    registry = VarRegistry(labels)
    raw, applied = _apply_corrections(registry, raw, corrections)
    brackets = {}
    for (lhs, rhs), text in raw.items():
        i, j = registry.index(lhs), registry.index(rhs)
        if i >= j:
            raise TableDataError(f"bracket key ({lhs},{rhs}) not in increasing order")
        value = _parse_lincomb(registry, text)
        if value:
            brackets[(i, j)] = value
    cartan = [registry.index(h) for h in cartan_labels]
    nil = [i for i in range(len(labels)) if i not in set(cartan)]
    table = StructureTable(
        name, registry, brackets, cartan, nil, excluded_primes, applied
    )
    if validate:
        report = jacobi_check(table)
        if not report.ok:
            first = report.failures[0]
            raise TableDataError(
                f"{name}: Jacobi fails at {first.triple} with residual {first.residual}"
                f" ({len(report.failures)} failing triples)"
            )
        problems = check_nilradical_ideal(table)
        if problems:
            raise TableDataError(f"{name}: {problems[0]}")
    return table


# ---------------------------------------------------------------------------
# G2 catalog data
# ---------------------------------------------------------------------------

_G2_LABELS = ("h1", "h2", "x1", "x2", "x3", "x4", "x5", "x6")

_G2_BRACKETS = {
    ("h1", "x1"): "-x1",
    ("h1", "x2"): "x2",
    ("h1", "x4"): "2*x4",
    ("h1", "x5"): "-x5",
    ("h1", "x6"): "x6",
    ("h2", "x2"): "-x2",
    ("h2", "x3"): "-x3",
    ("h2", "x4"): "-x4",
    ("h2", "x5"): "-x5",
    ("h2", "x6"): "-2*x6",
    ("x1", "x2"): "2*x3",
    ("x1", "x3"): "3*x5",
    ("x1", "x4"): "x2",
    ("x2", "x3"): "3*x6",
    ("x4", "x5"): "-x6",
}


def g2_borel(corrections: Sequence[dict] = (), validate: bool = True) -> StructureTable:
    """The 8-dimensional Borel subalgebra of type G2 (h1, h2, x1..x6)."""
    if not corrections and validate:
        return _g2_borel_cached()
    return _build_table(
        "g2-borel", _G2_LABELS, ("h1", "h2"), _G2_BRACKETS, (2, 3), corrections, validate
    )


@lru_cache(maxsize=1)
def _g2_borel_cached() -> StructureTable:
    return _build_table("g2-borel", _G2_LABELS, ("h1", "h2"), _G2_BRACKETS, (2, 3))


# ---------------------------------------------------------------------------
# F4 catalog data
# ---------------------------------------------------------------------------


def _f4_raw_brackets() -> dict[tuple[str, str], str]:
    """Merge the printed low/high column blocks, cross-checking antisymmetry.

    Both (xi, xj) and (xj, xi) are printed; they must be exact negatives,
    and the diagonal must vanish.  Root additivity is checked as well: each
    nonzero [xi, xj] must be a multiple of the generator whose root is the
    sum of the two roots.
    """
    labels = _f4_data.F4_HS + _f4_data.F4_XS
    registry = VarRegistry(labels)
    columns = {f"x{c}": c for c in range(1, 25)}
    cell: dict[tuple[str, str], str] = {}
    for data, offset in ((_f4_data.F4_TABLE_LOW, 1), (_f4_data.F4_TABLE_HIGH, 13)):
        for row_label, entries in data.items():
            if len(entries) != 12:
                raise TableDataError(f"F4 row {row_label} has {len(entries)} entries")
            for c, text in enumerate(entries):
                cell[(row_label, f"x{offset + c}")] = text

    roots = {f"x{i + 1}": r for i, r in enumerate(_f4_data.F4_ROOTS)}
    raw: dict[tuple[str, str], str] = {}
    for (row, col), text in cell.items():
        value = _parse_lincomb(registry, text)
        if row in columns:  # x-row: verify against the mirrored printed cell
            if row == col and value:
                raise TableDataError(f"F4 diagonal [{row},{row}] nonzero: {text}")
            mirror = _parse_lincomb(registry, cell[(col, row)])
            if tuple((k, -c) for k, c in mirror) != value:
                raise TableDataError(
                    f"F4 printed cells [{row},{col}] and [{col},{row}] are not antisymmetric"
                )
        if value and row in roots and col in roots:
            target = tuple(a + b for a, b in zip(roots[row], roots[col]))
            if len(value) != 1 or roots.get(registry.name(value[0][0])) != target:
                raise TableDataError(f"F4 bracket [{row},{col}] is not root-additive")
        i, j = registry.index(row), registry.index(col)
        if i < j and value:
            raw[(row, col)] = text
    return raw


def f4_borel(corrections: Sequence[dict] = (), validate: bool = True) -> StructureTable:
    """The 28-dimensional Borel subalgebra of type F4 (h1..h4, x1..x24)."""
    if not corrections and validate:
        return _f4_borel_cached()
    labels = _f4_data.F4_HS + _f4_data.F4_XS
    return _build_table(
        "f4-borel", labels, _f4_data.F4_HS, _f4_raw_brackets(), (2,), corrections, validate
    )


@lru_cache(maxsize=1)
def _f4_borel_cached() -> StructureTable:
    labels = _f4_data.F4_HS + _f4_data.F4_XS
    return _build_table("f4-borel", labels, _f4_data.F4_HS, _f4_raw_brackets(), (2,))


# ---------------------------------------------------------------------------
# Cn catalog: generated from the 2n x 2n matrix realization
# ---------------------------------------------------------------------------

Matrix = tuple  # tuple of row tuples with int entries


@dataclass(frozen=True)
class MatrixRealization:
    """Basis labels realized as 2n x 2n matrices."""

    n: int
    matrices: dict  # label -> Matrix

    @property
    def size(self) -> int:
        return 2 * self.n


def _unit_matrix(size: int, entries: dict[tuple[int, int], int]) -> Matrix:
    return tuple(
        tuple(entries.get((r, c), 0) for c in range(size)) for r in range(size)
    )


def _mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    def prod(x, y):
        return tuple(
            tuple(sum(x[r][k] * y[k][c] for k in range(size)) for c in range(size))
            for r in range(size)
        )
    ab, ba = prod(a, b), prod(b, a)
    return tuple(
        tuple(ab[r][c] - ba[r][c] for c in range(size)) for r in range(size)
    )


def cn_basis_labels(n: int) -> tuple[list[str], list[str]]:
    """Cartan labels (h1..hn) and nilradical labels in realization order:
    a{i}_{j} = e(i,j)-e(n+j,n+i) for i<j, b{i} = e(i,n+i),
    c{i}_{j} = e(i,n+j)+e(j,n+i) for i<j."""
    cartan = [f"h{i}" for i in range(1, n + 1)]
    nil = [f"a{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    nil += [f"b{i}" for i in range(1, n + 1)]
    nil += [f"c{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return cartan, nil


def cn_realization(n: int) -> MatrixRealization:
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 2 * n
    mats: dict[str, Matrix] = {}
    for i in range(1, n + 1):
        mats[f"h{i}"] = _unit_matrix(size, {(i - 1, i - 1): 1, (n + i - 1, n + i - 1): -1})
        mats[f"b{i}"] = _unit_matrix(size, {(i - 1, n + i - 1): 1})
        for j in range(i + 1, n + 1):
            mats[f"a{i}_{j}"] = _unit_matrix(
                size, {(i - 1, j - 1): 1, (n + j - 1, n + i - 1): -1}
            )
            mats[f"c{i}_{j}"] = _unit_matrix(
                size, {(i - 1, n + j - 1): 1, (j - 1, n + i - 1): 1}
            )
    return MatrixRealization(n, mats)


def _cn_defining_position(n: int, label: str) -> tuple[int, int]:
    """The matrix position whose entry equals the coefficient of this basis
    element; positions are pairwise distinct across the basis."""
    kind = label[0]
    body = label[1:]
    if kind == "h":
        i = int(body)
        return (i - 1, i - 1)
    if kind == "b":
        i = int(body)
        return (i - 1, n + i - 1)
    i, j = (int(s) for s in body.split("_"))
    if kind == "a":
        return (i - 1, j - 1)
    return (i - 1, n + j - 1)  # c-type


def cn_borel(n: int, validate: bool = True) -> tuple[StructureTable, MatrixRealization]:
    """Borel subalgebra of type Cn: structure constants are computed from
    matrix commutators of the realization and expressed in the basis.

    Raises :class:`TableDataError` if a commutator falls outside the span.
    """
    real = cn_realization(n)
    cartan_labels, nil_labels = cn_basis_labels(n)
    labels = cartan_labels + nil_labels
    registry = VarRegistry(labels)
    positions = {lab: _cn_defining_position(n, lab) for lab in labels}
    size = 2 * n

    def to_coords(mat: Matrix, what: str) -> dict[str, int]:
        coords = {lab: mat[r][c] for lab, (r, c) in positions.items() if mat[r][c]}
        # verify the decomposition reproduces the commutator exactly
        for r in range(size):
            for c in range(size):
                acc = sum(coef * real.matrices[lab][r][c] for lab, coef in coords.items())
                if acc != mat[r][c]:
                    raise TableDataError(f"commutator {what} is not in the basis span")
        return coords

    brackets = {}
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            comm = _mat_commutator(real.matrices[labels[i]], real.matrices[labels[j]])
            coords = to_coords(comm, f"[{labels[i]},{labels[j]}]")
            if coords:
                brackets[(i, j)] = tuple(
                    sorted((registry.index(lab), Fraction(c)) for lab, c in coords.items())
                )
    cartan = [registry.index(h) for h in cartan_labels]
    nil = [registry.index(x) for x in nil_labels]
    table = StructureTable(f"c{n}-borel", registry, brackets, cartan, nil, (2,))
    if validate:
        report = jacobi_check(table)
        if not report.ok:
            raise TableDataError(f"c{n}-borel: Jacobi fails ({len(report.failures)} triples)")
    return table, real


# ---------------------------------------------------------------------------
# Derived tables and mutation support
# ---------------------------------------------------------------------------


def nilradical_table(t: StructureTable) -> StructureTable:
    """Restrict a Borel table to its nilradical (an ideal, so closed)."""
    if not t.cartan:
        return t
    nil = list(t.nilradical)
    old_to_new = {old: new for new, old in enumerate(nil)}
    registry = VarRegistry([t.label(i) for i in nil])
    brackets = {}
    for (i, j), entry in t.brackets.items():
        if i in old_to_new and j in old_to_new:
            brackets[(old_to_new[i], old_to_new[j])] = tuple(
                (old_to_new[k], c) for k, c in entry
            )
    name = t.name.replace("-borel", "-nil") if "-borel" in t.name else t.name + "-nil"
    return StructureTable(
        name, registry, brackets, (), range(len(nil)), t.excluded_primes, t.corrections
    )


def with_bracket(t: StructureTable, lhs: str, rhs: str, value: str) -> StructureTable:
    """A copy of the table with one bracket replaced (no validation).

    Used by the mutation harness to show that corrupted tables are caught.
    """
    i, j = t.registry.index(lhs), t.registry.index(rhs)
    if i > j:
        raise ValueError("pass the bracket key in basis order")
    brackets = dict(t.brackets)
    entry = _parse_lincomb(t.registry, value)
    if entry:
        brackets[(i, j)] = entry
    else:
        brackets.pop((i, j), None)
    return StructureTable(
        t.name + "+mutated",
        t.registry,
        brackets,
        t.cartan,
        t.nilradical,
        t.excluded_primes,
        t.corrections,
    )


def nonzero_bracket_items(t: StructureTable) -> list[tuple[str, str, str]]:
    """All stored nonzero brackets as (lhs, rhs, value-text) triples."""
    out = []
    for (i, j), entry in sorted(t.brackets.items()):
        poly = Polynomial.from_terms(
            t.registry, QQ, ((((k, 1),), c) for k, c in entry)
        )
        out.append((t.label(i), t.label(j), str(poly)))
    return out


# ---------------------------------------------------------------------------
# Algebra-table file format
# ---------------------------------------------------------------------------


def table_to_dict(t: StructureTable) -> dict:
    return {
        "name": t.name,
        "excluded_primes": sorted(t.excluded_primes),
        "basis": list(t.registry.names),
        "cartan": [t.label(i) for i in t.cartan],
        "brackets": [
            {
                "lhs": t.label(i),
                "rhs": t.label(j),
                "value": [[str(c), t.label(k)] for k, c in entry],
            }
            for (i, j), entry in sorted(t.brackets.items())
        ],
    }


def table_from_dict(data: dict, validate: bool = True) -> StructureTable:
    labels = list(data["basis"])
    registry = VarRegistry(labels)
    raw: dict[tuple[str, str], str] = {}
    for item in data["brackets"]:
        parts = [f"({coef})*{lab}" for coef, lab in item["value"]]
        # parse_polynomial has no parentheses; build via Fraction directly
        pairs = tuple(
            (registry.index(lab), Fraction(coef)) for coef, lab in item["value"]
        )
        i, j = registry.index(item["lhs"]), registry.index(item["rhs"])
        if i >= j:
            raise TableDataError("bracket keys must be in basis order")
        poly = Polynomial.from_terms(registry, QQ, ((((k, 1),), c) for k, c in pairs))
        raw[(item["lhs"], item["rhs"])] = str(poly)
    return _build_table(
        data["name"],
        labels,
        list(data["cartan"]),
        raw,
        tuple(data.get("excluded_primes", [2])),
        validate=validate,
    )


def save_table(t: StructureTable, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(table_to_dict(t), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_table(path: str, validate: bool = True) -> StructureTable:
    with open(path, "r", encoding="utf-8") as fh:
        return table_from_dict(json.load(fh), validate=validate)
