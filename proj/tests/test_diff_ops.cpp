#include "catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace tietze;

TEST_CASE("tau acts by substitution", "[diff_ops]") {
    DiffOp q = DiffOp::q_dilation();
    CHECK(tau(q, parse_elem("1/(q^3*t^2)")) == parse_elem("1/(q^5*t^2)"));
    CHECK(tau(q, fe_q(7) + fe(2, 3)) == fe_q(7) + fe(2, 3)); // constants fixed
    CHECK(tau(DiffOp::mahler(2), parse_elem("t+1")) == parse_elem("t^2+1"));
    CHECK(tau(DiffOp::shift(QRat(1)), parse_elem("t^2")) == parse_elem("(t+1)^2"));
}

TEST_CASE("tau_n iterates", "[diff_ops]") {
    DiffOp q = DiffOp::q_dilation();
    FieldElem r = parse_elem("1/(q^3*t^2)");
    for (long i = 0; i <= 3; ++i) {
        CHECK(tau_n(q, r, i) == fe(1) / (fe_q(2 * i + 3) * fe_t(2)));
        CHECK(*valuation(tau_n(q, r, i), Place::infinity()) == 2);
    }
    tt::Rng rng(5);
    FieldElem x = rng.fe_elem();
    CHECK(tau_n(q, x, 0) == x);
    CHECK(tau_n(DiffOp::shift(QRat(1)), fe_t(), 3) == parse_elem("t+3"));
}

TEST_CASE("derive is d/dt with Q(q) constants", "[diff_ops]") {
    CHECK(derive(parse_elem("1/(q^3*t^2)")) == parse_elem("-2/(q^3*t^3)"));
    CHECK(derive(fe_q(5)).is_zero());
    CHECK(derive(parse_elem("t^3+t")) == parse_elem("3*t^2+1"));
    CHECK(derive(parse_elem("1/(t-1)")) == parse_elem("-1/(t-1)^2"));
}

TEST_CASE("commutation factor per operator family", "[diff_ops]") {
    CHECK(DiffOp::shift(QRat(1)).s_factor() == fe(1));
    CHECK(DiffOp::q_dilation().s_factor() == fe_q());
    CHECK(DiffOp::mahler(2).s_factor() == parse_elem("2*t")); // s = 2t for t -> t^2
    CHECK(verify_commutation(DiffOp::q_dilation(), fe_t()));
    CHECK(verify_commutation(DiffOp::mahler(2), fe_t()));
    CHECK(verify_commutation(DiffOp::q_dilation(), parse_elem("1/(q^3*t^2)")));
    // both sides computed independently for the q-Airy r
    DiffOp q = DiffOp::q_dilation();
    FieldElem r = parse_elem("1/(q^3*t^2)");
    CHECK(derive(tau(q, r)) == parse_elem("-2/(q^5*t^3)"));
    CHECK(fe_q() * tau(q, derive(r)) == parse_elem("-2/(q^5*t^3)"));
}

TEST_CASE("tau is a field homomorphism and injective", "[diff_ops]") {
    tt::Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        DiffOp op = rng.any_op();
        FieldElem x = rng.fe_elem(), y = rng.fe_elem();
        CHECK(tau(op, x + y) == tau(op, x) + tau(op, y));
        CHECK(tau(op, x * y) == tau(op, x) * tau(op, y));
        FieldElem nz = rng.fe_elem(2, true);
        CHECK(!tau(op, nz).is_zero());
    }
}

TEST_CASE("commutation law on random elements", "[diff_ops]") {
    tt::Rng rng(12);
    const std::vector<DiffOp> ops = {DiffOp::shift(QRat(1)), DiffOp::q_dilation(), DiffOp::mahler(2),
                                     DiffOp::mahler(3)};
    for (const auto& op : ops)
        for (int k = 0; k < 25; ++k) CHECK(verify_commutation(op, rng.fe_elem()));
}

TEST_CASE("tau_n is additive in the exponent", "[diff_ops]") {
    tt::Rng rng(13);
    for (int k = 0; k < 20; ++k) {
        DiffOp op = rng.any_op();
        if (op.kind == DiffOp::Kind::mahler) continue; // degree growth too fast for big iterates
        FieldElem x = rng.fe_elem();
        long a = rng.pick(0, 3), b = rng.pick(0, 3);
        CHECK(tau_n(op, x, a + b) == tau_n(op, tau_n(op, x, a), b));
    }
    DiffOp m = DiffOp::mahler(2);
    FieldElem x = parse_elem("t+q");
    CHECK(tau_n(m, x, 3) == tau_n(m, tau_n(m, x, 1), 2));
}
