#include <doctest.h>

#include <stdexcept>

#include "tableaux/verify.hpp"

using namespace tableaux;

namespace {

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& rep : reports)
        if (!rep.pass) return false;
    return !reports.empty();
}

}  // namespace

TEST_CASE("total imbalance") {
    const VerificationReport rep = verify_total(3);
    CHECK(rep.pass);
    CHECK(rep.computed == "2");
    CHECK(rep.expected == "2");
    for (int n = 0; n <= 10; ++n) CHECK(verify_total(n).pass);
    CHECK_THROWS_AS(verify_total(-1), std::invalid_argument);
}

TEST_CASE("weighted polynomial identity") {
    for (int n = 0; n <= 10; ++n) CHECK(verify_conj_a(n).pass);
    CHECK(verify_conj_a(1).computed == "1");
    CHECK(verify_conj_a(1).expected == "1");
}

TEST_CASE("alternating squared identity in t") {
    for (int n : {2, 3, 4, 6, 7, 8, 10}) {
        const VerificationReport rep = verify_conj_b(n);
        CHECK(rep.pass);
        CHECK(rep.expected == "0");
    }
    CHECK_THROWS_AS(verify_conj_b(5), std::invalid_argument);
    CHECK_THROWS_AS(verify_conj_b(9), std::invalid_argument);

    // the empty-shape case is reported, not asserted
    const VerificationReport zero = verify_conj_b(0);
    CHECK(zero.pass);
    CHECK(zero.computed == "1");
    CHECK(zero.parameters.find("not asserted") != std::string::npos);
}

TEST_CASE("hook identity") {
    const VerificationReport rep = verify_hooks(3);
    CHECK(rep.pass);
    CHECK(rep.computed == "q + x");
    CHECK(verify_hooks(1).computed == "1");
    for (int n = 1; n <= 16; ++n) CHECK(verify_hooks(n).pass);
    CHECK_THROWS_AS(verify_hooks(0), std::invalid_argument);
}

TEST_CASE("fixed fourling body class sums") {
    const VerificationReport figure = verify_jonas(Shape({4, 4}), 1, 1, 4);
    CHECK(figure.pass);
    CHECK(figure.computed == "0");
    CHECK(figure.parameters.find("shapes=7") != std::string::npos);

    CHECK(verify_jonas(Shape({2, 2}), 0, 0, 0).pass);
    // a class with no members sums to zero trivially
    const VerificationReport empty = verify_jonas(Shape({2, 2}), 9, 9, 1);
    CHECK(empty.pass);
    CHECK(empty.parameters.find("shapes=0") != std::string::npos);

    CHECK_THROWS_AS(verify_jonas(Shape{}, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_jonas(Shape({3, 3}), 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_jonas(Shape({4, 4}), -1, 0, 0), std::invalid_argument);

    for (int n = 4; n <= 10; ++n) CHECK(all_pass(sweep_jonas(n)));
}

TEST_CASE("alternating squared sums with fixed body") {
    CHECK(verify_betterb(Shape{}, 2).pass);
    CHECK(verify_betterb(Shape({2, 2}), 4).pass);
    CHECK_THROWS_AS(verify_betterb(Shape{}, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_betterb(Shape({3, 3}), 4), std::invalid_argument);

    const VerificationReport zero = verify_betterb(Shape{}, 0);
    CHECK(zero.pass);
    CHECK(zero.parameters.find("not asserted") != std::string::npos);

    for (int n = 2; n <= 10; n += 2) CHECK(all_pass(sweep_betterb(n)));
}

TEST_CASE("alternating squared sums with fixed black squares") {
    CHECK(verify_bettererb(CellSet{{1, 1}}, 2).pass);
    // no shape of 2 squares has this black set
    const VerificationReport empty = verify_bettererb(CellSet{{2, 2}}, 2);
    CHECK(empty.pass);
    CHECK(empty.parameters.find("shapes=0") != std::string::npos);
    CHECK_THROWS_AS(verify_bettererb(CellSet{}, 3), std::invalid_argument);

    for (int n = 2; n <= 10; n += 2) CHECK(all_pass(sweep_bettererb(n)));
}

TEST_CASE("parity dichotomy for n congruent to 2 or 3") {
    for (int n : {2, 3, 6, 7, 10, 11}) CHECK(verify_special23(n).pass);
    CHECK_THROWS_AS(verify_special23(4), std::invalid_argument);
    CHECK_THROWS_AS(verify_special23(5), std::invalid_argument);
}

TEST_CASE("pluggable symmetric functions") {
    const ShapeFunction default_f = [](const Shape& s) {
        MonomialMap value;
        const long long imb = imbalance(s);
        value.add({0, d_count(s), 0}, checked_mul(imb, imb));
        return value;
    };
    CHECK(verify_special23_with(6, "t^d*I^2", default_f).pass);

    const ShapeFunction asymmetric = [](const Shape& s) {
        MonomialMap value;
        if (s == Shape({2})) value.add({0, 0, 0}, 1);
        return value;
    };
    CHECK_THROWS_AS(verify_special23_with(2, "bad", asymmetric), std::invalid_argument);

    const ShapeFunction not_vanishing = [](const Shape&) {
        MonomialMap value;
        value.add({0, 0, 0}, 1);
        return value;
    };
    CHECK_THROWS_AS(verify_special23_with(3, "bad", not_vanishing),
                    std::invalid_argument);
}

TEST_CASE("alternating squared sum over all shapes") {
    for (int n = 2; n <= 14; ++n) {
        const VerificationReport rep = verify_special(n);
        CHECK(rep.pass);
        if (n <= 7) CHECK(rep.computed.find("rs_sum=0") != std::string::npos);
    }
    CHECK(verify_special(5).pass);  // includes n = 1 mod 4
    CHECK_THROWS_AS(verify_special(1), std::invalid_argument);
}

TEST_CASE("vertical-strip extension identity") {
    const VerificationReport column = verify_horizontal(Shape({1, 1}), 2);
    CHECK(column.pass);
    CHECK(column.computed == "2");

    const VerificationReport empty = verify_horizontal(Shape{}, 0);
    CHECK(empty.pass);
    CHECK(empty.computed == "1");

    // conjugates of fourling shapes have empty strips and zero imbalance
    CHECK(verify_horizontal(Shape({2, 2}), 3).pass);
    CHECK(verify_horizontal(Shape({2, 2}), 3).expected == "0");
    CHECK(verify_horizontal(Shape({4, 4}), 2).pass);

    CHECK_THROWS_AS(verify_horizontal(Shape({1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_horizontal(Shape({2}), 1), std::invalid_argument);

    for (int n = 0; n <= 8; ++n)
        for (const VerificationReport& rep : sweep_horizontal(n, 10)) CHECK(rep.pass);
}

TEST_CASE("sorted word sums") {
    CHECK(verify_sigma(4, 1).computed == "0");
    CHECK(verify_sigma(4, 1).pass);
    CHECK(verify_sigma(0, 0).computed == "1");
    CHECK(verify_sigma(5, 2).computed == "-2");
    for (int i = 0; i <= 9; ++i)
        for (int j = 0; j <= i; ++j) CHECK(verify_sigma(i, j).pass);
    CHECK_THROWS_AS(verify_sigma(2, 3), std::invalid_argument);
}

TEST_CASE("conjugation law sweep") {
    for (int n = 0; n <= 10; ++n) CHECK(verify_transpose(n).pass);
}

TEST_CASE("fourling shapes have zero imbalance and no chess tableaux") {
    const VerificationReport rep = verify_fourling(12);
    CHECK(rep.pass);
    CHECK(rep.parameters.find("shapes=6") != std::string::npos);
    CHECK(verify_fourling(0).parameters.find("shapes=0") != std::string::npos);
}

TEST_CASE("claim dispatch") {
    CHECK(is_known_claim("total"));
    CHECK(is_known_claim("all"));
    CHECK_FALSE(is_known_claim("bogus"));
    CHECK(claim_names().size() == 13);
    CHECK_THROWS_AS(run_claim("bogus", 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(run_claim("total", 4, 2), std::invalid_argument);

    // inapplicable n are skipped, not rejected
    const auto conj_b = run_claim("conj-b", 0, 5, 1);
    CHECK(conj_b.size() == 4);  // n = 0, 2, 3, 4

    const auto everything = run_claim("all", 0, 6, 2);
    CHECK(all_pass(everything));
}
