#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <fstream>

#include <sphlab/sphlab.hpp>

using namespace sphlab;

namespace {

Json load_fixture(const std::string& name) {
    std::ifstream in(std::string(SPHLAB_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    return Json::parse(in);
}

}  // namespace

TEST_CASE("gram matrices are hermitian with unit diagonal") {
    PrimeContext ctx(2, 3);
    SphericalFunction omega(SatakeParameter::sequence(ctx, 1));
    std::vector<GroupElement> pts{GroupElement::identity(ctx),
                                  GroupElement::diagonal_power(ctx, {1, 0, -1}),
                                  GroupElement::diagonal_power(ctx, {1, 1, -2})};
    ComplexMatrix g = gram_matrix(omega, pts);
    REQUIRE(g.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(g[j][j] - 1.0) < 1e-9);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(g[j][k] - std::conj(g[k][j])) < 1e-9);
    }
}

TEST_CASE("the quadratic form agrees with its algebraic expansion") {
    PrimeContext ctx(2, 3);
    SphericalFunction omega(SatakeParameter::sequence(ctx, 1));
    std::vector<GroupElement> pts{GroupElement::identity(ctx),
                                  GroupElement::diagonal_power(ctx, {1, 0, -1}),
                                  GroupElement::diagonal_power(ctx, {1, 1, -2})};
    std::vector<std::complex<double>> z{{1.0, 0.5}, {-0.75, 0.25}, {0.0, -1.0}};

    auto direct = inner_form(omega, pts, z);
    auto through_algebra = inner_form_algebraic(omega, pts, z);
    CHECK(std::abs(direct - through_algebra) < 1e-9);

    CHECK_THROWS_AS(inner_form(omega, pts, {{1.0, 0.0}}), DimensionMismatchError);
}

TEST_CASE("witness search finds the frozen certificate at p=2, n=3") {
    PrimeContext ctx(2, 3);
    WitnessSearchConfig cfg;
    cfg.j_max = 8;
    cfg.seeded_sets = 2;
    auto outcome = find_nonpd_witness(ctx, cfg);

    REQUIRE(outcome.certificate.has_value());
    const WitnessCertificate& cert = *outcome.certificate;
    CHECK(cert.j == 1);
    CHECK(cert.points.size() == 3);
    CHECK(cert.quadratic_value == Catch::Approx(-0.0532171).epsilon(1e-4));
    CHECK(cert.min_eigenvalue == Catch::Approx(-0.0532171).epsilon(1e-4));
    CHECK(cert.quadratic_value < -cert.tol);

    double value = 0.0;
    CHECK(verify_witness_certificate(cert, &value));
    CHECK(value == Catch::Approx(cert.quadratic_value).margin(1e-9));

    // The parameter in the certificate is the j-th member of the sequence
    // and still a star parameter.
    CHECK(params_equivalent(cert.param, SatakeParameter::sequence(ctx, cert.j)));
    CHECK(is_star_param(cert.param).has_value());
}

TEST_CASE("witness search succeeds at p=3 as well") {
    PrimeContext ctx(3, 3);
    WitnessSearchConfig cfg;
    cfg.j_max = 4;
    cfg.seeded_sets = 2;
    auto outcome = find_nonpd_witness(ctx, cfg);
    REQUIRE(outcome.certificate.has_value());
    CHECK(outcome.certificate->j == 1);
    CHECK(outcome.certificate->quadratic_value == Catch::Approx(-0.143472).epsilon(1e-4));
    CHECK(verify_witness_certificate(*outcome.certificate));
}

TEST_CASE("witness search is deterministic across thread counts") {
    PrimeContext ctx(2, 3);
    WitnessSearchConfig one;
    one.j_max = 4;
    WitnessSearchConfig four = one;
    four.threads = 4;

    auto a = find_nonpd_witness(ctx, one);
    auto b = find_nonpd_witness(ctx, four);
    REQUIRE(a.certificate.has_value());
    REQUIRE(b.certificate.has_value());
    CHECK(a.certificate->j == b.certificate->j);
    CHECK(a.certificate->quadratic_value == b.certificate->quadratic_value);
    CHECK(a.certificate->points.size() == b.certificate->points.size());
    CHECK(a.min_eigenvalues == b.min_eigenvalues);
}

TEST_CASE("tampered witness certificates are rejected") {
    PrimeContext ctx(2, 3);
    WitnessSearchConfig cfg;
    cfg.j_max = 2;
    auto outcome = find_nonpd_witness(ctx, cfg);
    REQUIRE(outcome.certificate.has_value());

    WitnessCertificate wrong_value = *outcome.certificate;
    wrong_value.quadratic_value += 1e-3;
    CHECK_FALSE(verify_witness_certificate(wrong_value));

    WitnessCertificate wrong_param = *outcome.certificate;
    wrong_param.param = SatakeParameter::trivial(ctx);
    CHECK_FALSE(verify_witness_certificate(wrong_param));

    WitnessCertificate wrong_coeff = *outcome.certificate;
    wrong_coeff.coefficients[0] = -wrong_coeff.coefficients[0];
    CHECK_FALSE(verify_witness_certificate(wrong_coeff));
}

TEST_CASE("capped searches skip tasks instead of fabricating answers") {
    PrimeContext ctx(2, 3);
    WitnessSearchConfig cfg;
    cfg.j_max = 2;
    Limits tiny;
    tiny.coset_cap = 10;
    auto outcome = find_nonpd_witness(ctx, cfg, tiny);
    CHECK_FALSE(outcome.certificate.has_value());
    REQUIRE_FALSE(outcome.min_eigenvalues.empty());
    for (double v : outcome.min_eigenvalues) CHECK(std::isnan(v));
}

TEST_CASE("witness search validates its configuration") {
    CHECK_THROWS_AS(find_nonpd_witness(PrimeContext(2, 2)), RankTooSmallError);
    WitnessSearchConfig bad;
    bad.j_min = 3;
    bad.j_max = 2;
    CHECK_THROWS_AS(find_nonpd_witness(PrimeContext(2, 3), bad), SchemaError);
}

TEST_CASE("witness certificates survive a json round trip") {
    PrimeContext ctx(2, 3);
    WitnessSearchConfig cfg;
    cfg.j_max = 2;
    auto outcome = find_nonpd_witness(ctx, cfg);
    REQUIRE(outcome.certificate.has_value());

    Json j = witness_certificate_to_json(*outcome.certificate);
    CHECK(j.at("kind") == "bounded_non_positive_definite_witness");
    WitnessCertificate back = witness_certificate_from_json(j);
    CHECK(back.j == outcome.certificate->j);
    CHECK(back.quadratic_value == outcome.certificate->quadratic_value);
    CHECK(verify_witness_certificate(back));

    Json broken = j;
    broken.erase("points");
    CHECK_THROWS_AS(witness_certificate_from_json(broken), SchemaError);
}

TEST_CASE("diagonal-axis certificate at sigma=1 has the frozen profile") {
    PrimeContext ctx(2, 2);
    UnboundednessCertificate cert = unboundedness_certificate(ctx, 1, 4);

    CHECK(cert.first_crossing == 1);
    REQUIRE(cert.profile.size() == 5);
    CHECK(cert.profile[0] == 1);
    CHECK(cert.profile[1] == Rational(19, 12));
    CHECK(cert.profile[2] == Rational(299, 96));
    CHECK(cert.profile[3] == Rational(1593, 256));
    CHECK(cert.profile[4] == Rational(76459, 6144));
    CHECK(cert.form_value == 1 - Rational(19, 12) * Rational(19, 12));
    CHECK(cert.form_value < 0);

    CHECK(verify_unboundedness_certificate(cert));
}

TEST_CASE("tampered diagonal-axis certificates are rejected") {
    PrimeContext ctx(2, 2);
    UnboundednessCertificate cert = unboundedness_certificate(ctx, 1, 3);

    UnboundednessCertificate wrong_profile = cert;
    wrong_profile.profile[2] += 1;
    CHECK_FALSE(verify_unboundedness_certificate(wrong_profile));

    UnboundednessCertificate late_crossing = cert;
    late_crossing.first_crossing = 2;
    CHECK_FALSE(verify_unboundedness_certificate(late_crossing));

    UnboundednessCertificate wrong_form = cert;
    wrong_form.form_value += Rational(1, 100);
    CHECK_FALSE(verify_unboundedness_certificate(wrong_form));
}

TEST_CASE("the half parameter stays on the unit circle and never crosses") {
    PrimeContext ctx(2, 2);
    CHECK_THROWS_AS(unboundedness_certificate(ctx, Rational(1, 2), 6), ResourceLimitError);

    std::vector<ComplexRational> c(2);
    c[0].re = Rational(1, 2);
    c[1].re = Rational(-1, 2);
    SphericalFunction omega((SatakeParameter(ctx, c)));
    for (long m = 0; m <= 6; ++m)
        CHECK(*omega.eval_label_exact(DominantCoweight({m, -m})) == 1);
}

TEST_CASE("diagonal-axis certificate rejects unusable inputs") {
    CHECK_THROWS_AS(unboundedness_certificate(PrimeContext(2, 3), 1, 4), DimensionMismatchError);
    CHECK_THROWS_AS(unboundedness_certificate(PrimeContext(2, 2), 1, 0), SchemaError);
    CHECK_THROWS_AS(unboundedness_certificate(PrimeContext(2, 2), Rational(1, 3), 4),
                    InexactCoefficientError);
}

TEST_CASE("diagonal-axis certificates survive a json round trip") {
    PrimeContext ctx(3, 2);
    UnboundednessCertificate cert = unboundedness_certificate(ctx, 1, 4);
    Json j = unboundedness_certificate_to_json(cert);
    CHECK(j.at("kind") == "unbounded_star_spherical");
    UnboundednessCertificate back = unboundedness_certificate_from_json(j);
    CHECK(back.first_crossing == cert.first_crossing);
    CHECK(back.profile == cert.profile);
    CHECK(back.form_value == cert.form_value);
    CHECK(verify_unboundedness_certificate(back));
}

TEST_CASE("frozen fixture certificates still verify") {
    WitnessCertificate w =
        witness_certificate_from_json(load_fixture("witness_p2_n3.json"));
    CHECK(w.ctx.p == 2);
    CHECK(w.ctx.n == 3);
    double value = 0.0;
    CHECK(verify_witness_certificate(w, &value));
    CHECK(value < 0.0);

    UnboundednessCertificate u =
        unboundedness_certificate_from_json(load_fixture("unbounded_p2_sigma1.json"));
    CHECK(u.ctx.p == 2);
    CHECK(u.sigma == 1);
    CHECK(verify_unboundedness_certificate(u));
}
