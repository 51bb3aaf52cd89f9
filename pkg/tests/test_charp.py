import pytest

from liecenter import invariants, liealg
from liecenter.charp import (
    c1_label,
    central_lift,
    frobenius_membership_suite,
    jacobian_identity_suite,
    partial_wrt_ppower,
    sp_generators,
    stretch_exponents,
    theorem_generator_audit,
)
from liecenter.exactalg import GF, QQ, parse_polynomial
from liecenter.pbw import gr_leading, is_central_u


class TestGeneratorSets:
    def test_counts(self, g2b, g2n, f4b, f4n):
        assert len(sp_generators(g2n, 5, "nilradical")) == 6
        assert len(sp_generators(g2b, 5, "borel")) == 8
        assert len(sp_generators(f4n, 3, "nilradical")) == 24
        assert len(sp_generators(f4b, 3, "borel")) == 28

    @pytest.mark.parametrize("n", [2, 3])
    def test_cn_counts(self, n):
        t, _ = liealg.cn_borel(n)
        assert len(sp_generators(t, 3, "borel")) == n * n + n

    def test_g2_entries(self, g2n):
        gs = sp_generators(g2n, 5, "nilradical")
        names = [e.name for e in gs.entries]
        assert names == ["x1^5", "x2^5", "x3^5", "x4^5", "x5^5", "x6"]
        kinds = {e.name: e.kind for e in gs.entries}
        assert kinds["x6"] == "exempt-variable"
        assert kinds["x1^5"] == "p-power"

    def test_inadmissible_primes(self, g2n, f4n):
        with pytest.raises(ValueError):
            sp_generators(f4n, 2, "nilradical")
        with pytest.raises(ValueError):
            sp_generators(g2n, 3, "nilradical")

    def test_borel_level_needs_cartan(self, g2n):
        with pytest.raises(ValueError):
            sp_generators(g2n, 5, "borel")

    def test_payload_polynomials(self, g2n):
        gs = sp_generators(g2n, 5, "nilradical")
        polys = dict(gs.polynomials(GF(5)))
        assert polys["x1^5"] == parse_polynomial(g2n.registry, GF(5), "x1^5")
        assert polys["x6"] == parse_polynomial(g2n.registry, GF(5), "x6")

    def test_c1_labels(self, g2n, f4n, c2_pair):
        assert c1_label(g2n) == "x6"
        assert c1_label(f4n) == "x24"
        assert c1_label(c2_pair[0]) == "b1"


class TestFrobeniusMembership:
    def test_g2_p5(self, g2n, g2n_fam):
        claims = frobenius_membership_suite(g2n, g2n_fam, 5)
        assert all(c.passed for c in claims)
        by_id = {c.claim_id: c for c in claims}
        assert by_id["g2-nil.frobenius.p5.c2.non-member"].witness == "x1*x6"

    def test_f4_p3_witness(self, f4n, f4n_fam):
        claims = frobenius_membership_suite(f4n, f4n_fam, 3)
        assert all(c.passed for c in claims)
        by_id = {c.claim_id: c for c in claims}
        assert by_id["f4-nil.frobenius.p3.c2.non-member"].witness == "x16*x24"
        assert "f4-nil.frobenius.p3.c3p-layered" in by_id
        assert "f4-nil.frobenius.p3.c4p-layered" in by_id

    @pytest.mark.parametrize("p", [3, 5])
    def test_f4_layered(self, f4n, f4n_fam, p):
        claims = frobenius_membership_suite(f4n, f4n_fam, p)
        assert all(c.passed for c in claims)

    @pytest.mark.parametrize("n,p", [(2, 3), (2, 5), (3, 3)])
    def test_cn(self, n, p):
        t, _ = liealg.cn_borel(n)
        nil = liealg.nilradical_table(t)
        fam = invariants.cn_invariants(nil)
        claims = frobenius_membership_suite(nil, fam, p)
        assert all(c.passed for c in claims)


class TestPPowerCalculus:
    def test_partial_wrt_ppower(self, g2n):
        field = GF(5)
        f = parse_polynomial(g2n.registry, field, "2*x1^10*x2^5 + x3^5")
        got = partial_wrt_ppower(f, "x1", 5)
        assert got == parse_polynomial(g2n.registry, field, "4*x1^5*x2^5")

    def test_partial_requires_divisible_exponent(self, g2n):
        f = parse_polynomial(g2n.registry, QQ, "x1^3")
        with pytest.raises(ValueError):
            partial_wrt_ppower(f, "x1", 5)

    def test_stretch(self, g2n):
        f = parse_polynomial(g2n.registry, QQ, "x1*x2^2")
        assert stretch_exponents(f, 3, QQ) == parse_polynomial(g2n.registry, QQ, "x1^3*x2^6")


class TestJacobianIdentities:
    def test_f4_all_four_with_printed_signs(self, f4n, f4n_fam):
        claims = jacobian_identity_suite(f4n, f4n_fam, 3)
        assert len(claims) == 8  # four identities, each with an F_3 instantiation
        assert all(c.passed for c in claims)
        det_claims = [c for c in claims if not c.claim_id.endswith(".f3")]
        assert all(c.note == "sign +1" for c in det_claims)

    def test_g2_partials(self, g2n, g2n_fam):
        claims = jacobian_identity_suite(g2n, g2n_fam, 5)
        by_id = {c.claim_id: c for c in claims}
        assert by_id["g2-nil.jacobians.partial.x1"].status == "verified"
        assert by_id["g2-nil.jacobians.partial.x2"].status == "derived-with-note"
        assert all(c.passed for c in claims)

    def test_raw_g2_partial_values(self, g2n, g2n_fam):
        c2 = g2n_fam.element("c2")
        assert c2.partial("x1") == parse_polynomial(g2n.registry, QQ, "3*x6")
        assert c2.partial("x2") == parse_polynomial(g2n.registry, QQ, "-3*x5")


class TestCentralLift:
    @pytest.mark.parametrize("p", [3, 5])
    def test_f4_c3_c4_reduced_lifts(self, f4n, f4n_fam, p):
        field = GF(p)
        for name in ("c3", "c4"):
            lifted, how = central_lift(f4n, f4n_fam, name, field)
            assert lifted is not None
            if field.characteristic <= f4n_fam.degree(name):
                assert "reduced mod" in how
            ok, _ = is_central_u(f4n, lifted, f4n.nilradical)
            assert ok
            assert gr_leading(lifted) == f4n_fam.element(name, field)

    def test_g2_symmetrized_directly(self, g2n, g2n_fam):
        lifted, how = central_lift(g2n, g2n_fam, "c2", GF(5))
        assert how == "symmetrized"
        ok, _ = is_central_u(g2n, lifted, g2n.nilradical)
        assert ok


class TestTheoremAudit:
    def test_g2_nil_char5(self, g2n, g2n_fam):
        claims = theorem_generator_audit(g2n, g2n_fam, 5)
        assert all(c.passed for c in claims)
        asserted = sorted(c.claim_id for c in claims if c.status == "asserted-not-verified")
        assert asserted == [
            "g2-nil.audit.poisson-center.char5.generation",
            "g2-nil.audit.u-center.char5.generation",
        ]

    def test_g2_borel_char5_asserted_set(self, g2b, g2b_fam):
        claims = theorem_generator_audit(g2b, g2b_fam, 5)
        assert all(c.passed for c in claims)
        asserted = sorted(c.claim_id for c in claims if c.status == "asserted-not-verified")
        assert asserted == [
            "g2-borel.audit.poisson-center.char5.generation",
            "g2-borel.audit.semicenter.char5.generation",
            "g2-borel.audit.u-center.char5.generation",
            "g2-borel.audit.u-semicenter.char5.generation",
        ]

    def test_g2_borel_char0(self, g2b, g2b_fam):
        claims = theorem_generator_audit(g2b, g2b_fam, 0)
        assert all(c.passed for c in claims)
        trivial = [c for c in claims if ".trivial." in c.claim_id]
        assert trivial and all(c.status == "verified" for c in trivial)

    def test_excluded_characteristic(self, g2n, g2n_fam):
        with pytest.raises(ValueError):
            theorem_generator_audit(g2n, g2n_fam, 3)

    @pytest.mark.parametrize("n,p", [(2, 3), (2, 5)])
    def test_cn_borel(self, n, p):
        t, _ = liealg.cn_borel(n)
        fam = invariants.cn_invariants(t)
        claims = theorem_generator_audit(t, fam, p)
        assert all(c.passed for c in claims)
        gen_count = [c for c in claims if c.claim_id.endswith("u-center.char%d.gen-count" % p)]
        assert len(gen_count) == 1 and gen_count[0].status == "verified"
