import random

import pytest

from liecenter import pbw
from liecenter.exactalg import GF, QQ, parse_polynomial
from liecenter.pbw import (
    CharacteristicObstruction,
    PBWElement,
    commutator_u,
    commutator_with_basis,
    gr_leading,
    is_central_u,
    naive_lift,
    pbw_mul,
    p_center_suite,
    reduce_u,
    straighten_word,
    symmetrize,
    word_of,
    z_lift_audit,
)


def V(t, name, field=QQ):
    return PBWElement.variable(t.registry, field, name)


def lift(t, text, field=QQ):
    return naive_lift(parse_polynomial(t.registry, field, text))


def rand_element(rng, t, field, max_len=4, max_terms=3):
    items = []
    for _ in range(rng.randint(1, max_terms)):
        word = sorted(rng.randrange(t.dim) for _ in range(rng.randint(0, max_len)))
        items.append((pbw.mono_of_word(word), rng.randint(-4, 4)))
    return PBWElement.from_terms(t.registry, field, items)


class TestStraightening:
    def test_basic_swap(self, g2n):
        prod = pbw_mul(g2n, V(g2n, "x2"), V(g2n, "x1"))
        assert prod == lift(g2n, "x1*x2 - 2*x3")

    def test_unit(self, g2n):
        e = lift(g2n, "x1*x2 + 3*x5")
        unit = PBWElement.unit(g2n.registry, QQ)
        assert pbw_mul(g2n, unit, e) == e
        assert pbw_mul(g2n, e, unit) == e

    def test_associativity_spot(self, g2n):
        a, b, c = V(g2n, "x2"), V(g2n, "x1"), V(g2n, "x4")
        assert pbw_mul(g2n, pbw_mul(g2n, a, b), c) == pbw_mul(g2n, a, pbw_mul(g2n, b, c))

    @pytest.mark.parametrize("field", [QQ, GF(5)], ids=["QQ", "GF5"])
    def test_associativity_random(self, g2b, field):
        rng = random.Random(13)
        for _ in range(30):
            a = rand_element(rng, g2b, field, max_len=2)
            b = rand_element(rng, g2b, field, max_len=2)
            c = rand_element(rng, g2b, field, max_len=2)
            assert pbw_mul(g2b, pbw_mul(g2b, a, b), c) == pbw_mul(g2b, a, pbw_mul(g2b, b, c))

    def test_confluence_randomized_choices(self, g2n, f4n):
        rng = random.Random(42)
        for table, cases in ((g2n, 100), (f4n, 25)):
            for _ in range(cases):
                k = rng.randint(2, 4)
                word = tuple(rng.randrange(table.dim) for _ in range(k))
                randomized = straighten_word(table, QQ, word, rng=rng)
                deterministic = straighten_word(table, QQ, word)
                fast = PBWElement.unit(table.registry, QQ)
                for letter in word:
                    fast = pbw_mul(table, fast, PBWElement.variable(table.registry, QQ, letter))
                assert randomized == deterministic == fast.terms

    def test_filtration_multiplicativity(self, g2b):
        # gr U is the (domain) polynomial algebra, so top symbols multiply
        rng = random.Random(14)
        for _ in range(30):
            a = rand_element(rng, g2b, QQ, max_len=3)
            b = rand_element(rng, g2b, QQ, max_len=3)
            if a.is_zero or b.is_zero:
                continue
            assert gr_leading(pbw_mul(g2b, a, b)) == gr_leading(a) * gr_leading(b)


class TestCommutators:
    def test_z2_commutes_with_x1(self, g2n, g2n_fam):
        z2 = naive_lift(g2n_fam.element("c2"))
        assert commutator_u(g2n, V(g2n, "x1"), z2).is_zero

    def test_self_commutator(self, g2b):
        rng = random.Random(15)
        for _ in range(10):
            a = rand_element(rng, g2b, QQ)
            assert commutator_u(g2b, a, a).is_zero

    def test_h1_x4(self, g2b):
        assert commutator_u(g2b, V(g2b, "h1"), V(g2b, "x4")) == V(g2b, "x4").scale(2)

    def test_fast_commutator_agrees(self, g2b):
        rng = random.Random(16)
        for _ in range(25):
            g = rng.randrange(g2b.dim)
            e = rand_element(rng, g2b, QQ)
            fast = commutator_with_basis(g2b, g, e)
            slow = commutator_u(g2b, V(g2b, g2b.label(g)), e)
            assert fast == slow


class TestSymmetrize:
    def test_single_variable_power(self, g2n):
        f = parse_polynomial(g2n.registry, QQ, "x3^2")
        assert symmetrize(g2n, f) == naive_lift(f)

    def test_commuting_pair(self, g2n):
        f = parse_polynomial(g2n.registry, QQ, "x1*x6")
        assert symmetrize(g2n, f) == naive_lift(f)

    def test_noncommuting_pair(self, g2n):
        # x1*x2: (x1x2 + x2x1)/2 = x1x2 - x3
        f = parse_polynomial(g2n.registry, QQ, "x1*x2")
        assert symmetrize(g2n, f) == lift(g2n, "x1*x2 - x3")

    def test_gr_of_symmetrized(self, g2n, g2n_fam):
        c2 = g2n_fam.element("c2")
        assert gr_leading(symmetrize(g2n, c2)) == c2

    def test_characteristic_obstruction(self, f4n, f4n_fam):
        with pytest.raises(CharacteristicObstruction):
            symmetrize(f4n, f4n_fam.element("c3", GF(3)))

    def test_equivariance_for_invariants(self, g2n, g2n_fam, f4n, f4n_fam):
        # the symmetrization of a Poisson invariant is central, so every
        # commutator is not merely of lower filtration but exactly zero
        for table, fam in ((g2n, g2n_fam), (f4n, f4n_fam)):
            for name in fam.central:
                f = fam.element(name)
                if f.total_degree() > 2:
                    continue
                z = symmetrize(table, f)
                for g in table.nilradical:
                    com = commutator_with_basis(table, g, z)
                    assert com.is_zero or com.filtration_degree() < f.total_degree()
                    assert com.is_zero


class TestGrLeading:
    def test_h_power(self, g2b):
        h1p = PBWElement.monomial(g2b.registry, QQ, ((0, 5),))
        e = h1p - V(g2b, "h1")
        assert str(gr_leading(e)) == "h1^5"

    def test_mixed(self, g2n):
        e = lift(g2n, "x1*x2 - 2*x3")
        assert str(gr_leading(e)) == "x1*x2"

    def test_z1(self, g2n, g2n_fam):
        assert gr_leading(naive_lift(g2n_fam.element("c1"))) == g2n_fam.element("c1")

    def test_zero_rejected(self, g2n):
        with pytest.raises(ValueError):
            gr_leading(PBWElement.zero(g2n.registry, QQ))


class TestCentrality:
    def test_z2_central_char0(self, g2n, g2n_fam):
        z2 = symmetrize(g2n, g2n_fam.element("c2"))
        ok, _ = is_central_u(g2n, z2, g2n.nilradical)
        assert ok

    def test_x5_not_central(self, g2n):
        ok, witness = is_central_u(g2n, V(g2n, "x5"), g2n.nilradical)
        assert not ok and g2n.label(witness) == "x4"

    def test_unit_central(self, g2n):
        ok, _ = is_central_u(g2n, PBWElement.unit(g2n.registry, QQ), g2n.nilradical)
        assert ok

    def test_f4_naive_lift_verdicts(self, f4n, f4n_fam):
        # computed once, frozen: the naive lifts of c3 and c4 are not central
        for name, expect_central in (("c1", True), ("c2", True), ("c3", False), ("c4", False)):
            naive = naive_lift(f4n_fam.element(name))
            ok, witness = is_central_u(f4n, naive, f4n.nilradical)
            assert ok is expect_central, name
            if not ok:
                assert f4n.label(witness) == "x1"


class TestPCenterSuite:
    def test_g2_p5_spot(self, g2b):
        field = GF(5)
        h1p = PBWElement.monomial(g2b.registry, field, ((0, 5),))
        e = h1p - PBWElement.variable(g2b.registry, field, "h1")
        assert commutator_with_basis(g2b, "x4", e).is_zero
        x2p = PBWElement.monomial(g2b.registry, field, ((g2b.registry.index("x2"), 5),))
        assert commutator_with_basis(g2b, "x1", x2p).is_zero

    def test_abelian_trivial(self):
        from conftest import abelian_table

        claims = p_center_suite(abelian_table(), 5)
        assert all(c.passed for c in claims)

    @pytest.mark.parametrize("p", [5, 7])
    def test_g2_full(self, g2b, p):
        claims = p_center_suite(g2b, p)
        assert all(c.passed for c in claims)
        # (6 powers + 2 cartan) x 8 generators + 8 ad-power cross-checks
        assert len(claims) == 72

    @pytest.mark.parametrize("p", [3, 5])
    def test_f4_full(self, f4b, p):
        claims = p_center_suite(f4b, p)
        assert len(claims) == 28 * 28 + 28
        assert all(c.passed for c in claims)

    @pytest.mark.parametrize("n,p", [(2, 3), (2, 5), (3, 3), (3, 5)])
    def test_cn_full(self, n, p):
        from liecenter import liealg

        t, _ = liealg.cn_borel(n)
        claims = p_center_suite(t, p)
        assert all(c.passed for c in claims)


class TestReduceAndLifts:
    def test_reduce_u(self, g2n):
        e = lift(g2n, "1/2*x1*x2")
        r = reduce_u(e, GF(5))
        assert r is not None and list(r.terms.values()) == [3]

    def test_reduce_u_blocked(self, g2n):
        e = lift(g2n, "1/5*x1")
        assert reduce_u(e, GF(5)) is None

    def test_z_lift_audit_g2(self, g2n, g2n_fam):
        claims = z_lift_audit(g2n, g2n_fam, QQ)
        assert all(c.passed for c in claims)
        notes = {c.claim_id: c.note for c in claims if c.note}
        assert "central; coincides with the symmetrized lift" in notes["g2-nil.zlift.c2.char0.naive"]

    def test_text_round_trip(self, g2n):
        e = lift(g2n, "x1*x2^2 - 2*x3 + 1/2*x5")
        again = naive_lift(parse_polynomial(g2n.registry, QQ, str(e)))
        assert again == e

    def test_word_expansion(self):
        assert word_of(((0, 2), (3, 1))) == (0, 0, 3)
        assert pbw.mono_of_word((0, 0, 3)) == ((0, 2), (3, 1))
