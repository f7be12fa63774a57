#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <sphlab/sphlab.hpp>

using namespace sphlab;

namespace {

// Deterministic group elements: alternating integral shears and diagonal
// powers, so labels and denominators both get exercised.
GroupElement random_element(const PrimeContext& ctx, std::mt19937_64& rng, int blocks) {
    GroupElement g = GroupElement::identity(ctx);
    for (int b = 0; b < blocks; ++b) {
        g = g * detail::seeded_unimodular(ctx, rng, 4);
        IntVector m(static_cast<std::size_t>(ctx.n), 0);
        long v = static_cast<long>(rng() % 3) - 1;
        m.front() = v;
        m.back() = -v;
        g = g * GroupElement::diagonal_power(ctx, m);
    }
    return g;
}

}  // namespace

TEST_CASE("rational parsing and formatting round-trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(-7)) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("rational powers and valuations") {
    CHECK(rational_pow(2, 3) == Rational(8));
    CHECK(rational_pow(2, -3) == Rational(1, 8));
    CHECK(rational_pow(5, 0) == Rational(1));
    CHECK(integer_valuation(Integer(24), 2) == 3);
    CHECK(integer_valuation(Integer(-24), 2) == 3);
    CHECK(integer_valuation(Integer(7), 2) == 0);
    CHECK(valuation(Rational(3, 8), 2) == -3);
    CHECK(valuation(Rational(12), 2) == 2);
    CHECK_FALSE(valuation(Rational(0), 2).has_value());
}

TEST_CASE("prime context validation") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(PrimeContext(4, 2), Error);
    CHECK_THROWS_AS(PrimeContext(2, 1), Error);
    CHECK_NOTHROW(PrimeContext(3, 3));
}

TEST_CASE("rational matrix determinant and inverse") {
    RationalMatrix a(3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 4;
    a(2, 0) = 5; a(2, 1) = 6; a(2, 2) = 0;
    CHECK(a.det() == Rational(1));
    RationalMatrix b = a.inverse();
    RationalMatrix prod = a * b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == Rational(i == j ? 1 : 0));
}

TEST_CASE("group elements must be unimodular") {
    PrimeContext ctx(2, 2);
    RationalMatrix a(2);
    a(0, 0) = 2; a(1, 1) = 1;
    CHECK_THROWS_AS(GroupElement(ctx, a), NonUnimodularError);
    a(1, 1) = Rational(1, 2);
    GroupElement g(ctx, a);
    CHECK((g * g.inverse()) == GroupElement::identity(ctx));
    CHECK_FALSE(g.is_integral());
    CHECK(GroupElement::identity(ctx).is_integral());
}

TEST_CASE("dominant coweight validation") {
    CHECK_THROWS_AS(DominantCoweight({0, 1}), InvalidCoweightError);
    CHECK_THROWS_AS(DominantCoweight({1, 0}), InvalidCoweightError);
    CHECK_THROWS_AS(DominantCoweight(IntVector{}), InvalidCoweightError);
    DominantCoweight m({3, 1, -4});
    CHECK(m.spread() == 7);
    CHECK(m.inverse_label() == DominantCoweight({4, -1, -3}));
    CHECK(m.inverse_label().inverse_label() == m);
    CHECK(DominantCoweight::zero(3).is_zero());
}

TEST_CASE("dominant label grids") {
    auto g22 = dominant_labels_up_to(2, 2);
    REQUIRE(g22.size() == 2);
    CHECK(g22[0] == DominantCoweight({0, 0}));
    CHECK(g22[1] == DominantCoweight({1, -1}));

    auto g32 = dominant_labels_up_to(3, 2);
    REQUIRE(g32.size() == 2);
    CHECK(g32[0] == DominantCoweight({0, 0, 0}));
    CHECK(g32[1] == DominantCoweight({1, 0, -1}));

    auto g34 = dominant_labels_up_to(3, 4);
    std::vector<DominantCoweight> expected{
        DominantCoweight({0, 0, 0}),  DominantCoweight({1, 0, -1}),
        DominantCoweight({1, 1, -2}), DominantCoweight({2, -1, -1}),
        DominantCoweight({2, 0, -2})};
    CHECK(g34 == expected);

    auto g24 = dominant_labels_up_to(2, 4);
    CHECK(g24.size() == 3);  // (0,0), (1,-1), (2,-2)

    // every returned label respects the bound, and inverses stay inside
    for (const auto& m : dominant_labels_up_to(4, 3)) {
        CHECK(m.spread() <= 3);
        CHECK(m.inverse_label().spread() <= 3);
    }
}

TEST_CASE("cartan decomposition of a known element") {
    PrimeContext ctx(2, 2);
    RationalMatrix a(2);
    a(0, 0) = 1; a(0, 1) = 0;
    a(1, 0) = Rational(1, 2); a(1, 1) = 1;
    GroupElement g(ctx, a);
    CartanForm form = cartan_decompose(g);
    CHECK(form.m.entries() == IntVector{1, -1});
    CHECK(form.u1.is_integral());
    CHECK(form.u2.is_integral());
    CHECK(form.reconstruct() == g);
    CHECK(cartan_label(g) == form.m);
}

TEST_CASE("cartan label properties on seeded elements") {
    std::mt19937_64 rng(2024);
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            PrimeContext ctx(p, n);
            for (int trial = 0; trial < 12; ++trial) {
                GroupElement g = random_element(ctx, rng, 2);
                CartanForm form = cartan_decompose(g);
                CHECK(form.reconstruct() == g);
                CHECK(cartan_label(g) == form.m);
                CHECK(cartan_label(g.inverse()) == form.m.inverse_label());
                GroupElement u = detail::seeded_unimodular(ctx, rng, 5);
                GroupElement v = detail::seeded_unimodular(ctx, rng, 5);
                CHECK(cartan_label(u * g * v) == form.m);
            }
        }
    }
}

TEST_CASE("cartan label of diagonal powers") {
    PrimeContext ctx(3, 3);
    DominantCoweight m({2, 1, -3});
    GroupElement g = GroupElement::diagonal_power(ctx, m.entries());
    CHECK(cartan_label(g) == m);
    // a permuted diagonal has the same label
    GroupElement h = GroupElement::diagonal_power(ctx, {-3, 2, 1});
    CHECK(cartan_label(h) == m);
}

TEST_CASE("iwasawa decomposition of a known element") {
    PrimeContext ctx(2, 2);
    RationalMatrix a(2);
    a(0, 0) = 1; a(0, 1) = 0;
    a(1, 0) = Rational(1, 2); a(1, 1) = 1;
    GroupElement g(ctx, a);
    IwasawaForm form = iwasawa_decompose(g);
    CHECK(form.hval == IntVector{-1, 1});
    CHECK(form.reconstruct() == g);
    CHECK(form.k.is_integral());
}

TEST_CASE("iwasawa properties on seeded elements") {
    std::mt19937_64 rng(7);
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            PrimeContext ctx(p, n);
            for (int trial = 0; trial < 12; ++trial) {
                GroupElement g = random_element(ctx, rng, 2);
                IwasawaForm form = iwasawa_decompose(g);
                CHECK(form.reconstruct() == g);
                CHECK(form.k.is_integral());
                CHECK(vector_sum(form.hval) == 0);
                for (const Rational& u : form.hunit) {
                    auto v = valuation(u, p);
                    REQUIRE(v.has_value());
                    CHECK(*v == 0);
                }
                for (int i = 0; i < n; ++i) {
                    CHECK(form.nmat(i, i) == Rational(1));
                    for (int j = 0; j < i; ++j) CHECK(form.nmat(i, j) == Rational(0));
                }
            }
        }
    }
}

TEST_CASE("context mismatch is rejected") {
    PrimeContext a(2, 2), b(3, 2);
    GroupElement ga = GroupElement::identity(a);
    GroupElement gb = GroupElement::identity(b);
    CHECK_THROWS_AS(ga * gb, ContextMismatchError);
}
