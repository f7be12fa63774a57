#pragma once

// JSON serialization for the public value types.  Exact data (rationals,
// group elements, parameters, the rank-2 certificate profile) round-trips
// through canonical "a/b" strings; spectral data stays floating point.
// Malformed input surfaces as SchemaError.

#include <json.hpp>

#include "sphlab/positivity.hpp"
#include "sphlab/transform.hpp"

namespace sphlab {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw SchemaError("expected rational string");
    return parse_rational(j.get<std::string>());
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <typename T>
T field_as(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaError(std::string("field '") + key + "' has the wrong type");
    }
}

inline const Json& field_array(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
    return v;
}

}  // namespace detail

inline Json complex_to_json(const std::complex<double>& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline std::complex<double> complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw SchemaError("expected complex value {re, im}");
    return {detail::field_as<double>(j, "re"), detail::field_as<double>(j, "im")};
}

inline Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("expected a non-empty matrix array");
    const int n = static_cast<int>(j.size());
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!j.at(static_cast<std::size_t>(i)).is_array() ||
            static_cast<int>(j.at(static_cast<std::size_t>(i)).size()) != n)
            throw SchemaError("matrix rows must all have length " + std::to_string(n));
        for (int k = 0; k < n; ++k)
            m(i, k) = rational_from_json(j.at(static_cast<std::size_t>(i)).at(
                static_cast<std::size_t>(k)));
    }
    return m;
}

inline Json group_to_json(const GroupElement& g) {
    return Json{{"p", g.context().p}, {"n", g.context().n}, {"entries", matrix_to_json(g.entries())}};
}

inline GroupElement group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("entries"))
        throw SchemaError("expected group element {p, n, entries}");
    PrimeContext ctx(detail::field_as<long>(j, "p"), detail::field_as<int>(j, "n"));
    return GroupElement(ctx, matrix_from_json(detail::field(j, "entries")));
}

inline Json coweight_to_json(const DominantCoweight& m) { return Json(m.entries()); }

inline DominantCoweight coweight_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("expected coweight array");
    try {
        return DominantCoweight(j.get<IntVector>());
    } catch (const nlohmann::json::exception&) {
        throw SchemaError("coweight entries must be integers");
    }
}

inline Json param_to_json(const SatakeParameter& s) {
    Json coords = Json::array();
    for (const ComplexRational& c : s.coords())
        coords.push_back(Json{{"re", rational_to_json(c.re)}, {"im", rational_to_json(c.im)}});
    return Json{{"p", s.context().p}, {"n", s.context().n}, {"coords", std::move(coords)}};
}

inline SatakeParameter param_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("coords"))
        throw SchemaError("expected parameter {p, n, coords}");
    PrimeContext ctx(detail::field_as<long>(j, "p"), detail::field_as<int>(j, "n"));
    std::vector<ComplexRational> coords;
    for (const Json& c : detail::field_array(j, "coords"))
        coords.push_back(ComplexRational{rational_from_json(detail::field(c, "re")),
                                         rational_from_json(detail::field(c, "im"))});
    return SatakeParameter(ctx, std::move(coords));
}

inline Json hecke_to_json(const HeckeElement& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back(Json{{"m", coweight_to_json(m)}, {"coeff", complex_to_json(c)}});
    return Json{{"p", f.context().p}, {"n", f.context().n}, {"terms", std::move(terms)}};
}

inline HeckeElement hecke_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("terms"))
        throw SchemaError("expected hecke element {p, n, terms}");
    PrimeContext ctx(detail::field_as<long>(j, "p"), detail::field_as<int>(j, "n"));
    HeckeElement f(ctx);
    for (const Json& t : detail::field_array(j, "terms"))
        f.add_term(coweight_from_json(detail::field(t, "m")),
                   complex_from_json(detail::field(t, "coeff")));
    return f;
}

inline Json exact_hecke_to_json(const ExactHeckeElement& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back(Json{{"m", coweight_to_json(m)}, {"coeff", rational_to_json(c)}});
    return Json{{"p", f.context().p}, {"n", f.context().n}, {"terms", std::move(terms)}};
}

inline ExactHeckeElement exact_hecke_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("terms"))
        throw SchemaError("expected hecke element {p, n, terms}");
    PrimeContext ctx(detail::field_as<long>(j, "p"), detail::field_as<int>(j, "n"));
    ExactHeckeElement f(ctx);
    for (const Json& t : detail::field_array(j, "terms"))
        f.add_term(coweight_from_json(detail::field(t, "m")),
                   rational_from_json(detail::field(t, "coeff")));
    return f;
}

inline Json psd_report_to_json(const PsdReport& r) {
    Json witness = Json::array();
    for (const auto& z : r.witness) witness.push_back(complex_to_json(z));
    return Json{{"verdict", to_string(r.verdict)},
                {"min_eigenvalue", r.min_eigenvalue},
                {"rayleigh", r.rayleigh},
                {"hermitian_defect", r.hermitian_defect},
                {"tol", r.tol},
                {"witness", std::move(witness)}};
}

inline Json witness_certificate_to_json(const WitnessCertificate& c) {
    Json points = Json::array();
    for (const GroupElement& g : c.points) points.push_back(matrix_to_json(g.entries()));
    Json coeffs = Json::array();
    for (const auto& z : c.coefficients) coeffs.push_back(complex_to_json(z));
    return Json{{"kind", "bounded_non_positive_definite_witness"},
                {"p", c.ctx.p},
                {"n", c.ctx.n},
                {"j", c.j},
                {"param", param_to_json(c.param)},
                {"points", std::move(points)},
                {"coefficients", std::move(coeffs)},
                {"quadratic_value", c.quadratic_value},
                {"min_eigenvalue", c.min_eigenvalue},
                {"tol", c.tol}};
}

inline WitnessCertificate witness_certificate_from_json(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "bounded_non_positive_definite_witness")
        throw SchemaError("expected a bounded_non_positive_definite_witness certificate");
    PrimeContext ctx(detail::field_as<long>(j, "p"), detail::field_as<int>(j, "n"));
    std::vector<GroupElement> points;
    for (const Json& pj : detail::field_array(j, "points"))
        points.emplace_back(ctx, matrix_from_json(pj));
    std::vector<std::complex<double>> coeffs;
    for (const Json& cj : detail::field_array(j, "coefficients"))
        coeffs.push_back(complex_from_json(cj));
    return WitnessCertificate{ctx,
                              detail::field_as<long>(j, "j"),
                              param_from_json(detail::field(j, "param")),
                              std::move(points),
                              std::move(coeffs),
                              detail::field_as<double>(j, "quadratic_value"),
                              detail::field_as<double>(j, "min_eigenvalue"),
                              detail::field_as<double>(j, "tol")};
}

inline Json unboundedness_certificate_to_json(const UnboundednessCertificate& c) {
    Json profile = Json::array();
    for (const Rational& v : c.profile) profile.push_back(rational_to_json(v));
    return Json{{"kind", "unbounded_star_spherical"},
                {"p", c.ctx.p},
                {"n", c.ctx.n},
                {"sigma", rational_to_json(c.sigma)},
                {"param", param_to_json(c.param)},
                {"first_crossing", c.first_crossing},
                {"profile", std::move(profile)},
                {"witness_point", matrix_to_json(c.witness_point.entries())},
                {"form_value", rational_to_json(c.form_value)}};
}

inline UnboundednessCertificate unboundedness_certificate_from_json(const Json& j) {
    if (!j.is_object() || j.value("kind", "") != "unbounded_star_spherical")
        throw SchemaError("expected an unbounded_star_spherical certificate");
    PrimeContext ctx(detail::field_as<long>(j, "p"), detail::field_as<int>(j, "n"));
    std::vector<Rational> profile;
    for (const Json& v : detail::field_array(j, "profile")) profile.push_back(rational_from_json(v));
    return UnboundednessCertificate{ctx,
                                    rational_from_json(detail::field(j, "sigma")),
                                    param_from_json(detail::field(j, "param")),
                                    detail::field_as<long>(j, "first_crossing"),
                                    std::move(profile),
                                    GroupElement(ctx, matrix_from_json(detail::field(j, "witness_point"))),
                                    rational_from_json(detail::field(j, "form_value"))};
}

inline Json laurent_to_json(const LaurentPolynomial& q) {
    Json terms = Json::array();
    for (const auto& [e, c] : q.terms())
        terms.push_back(Json{{"exponent", e}, {"coeff", rational_to_json(c)}});
    return Json{{"p", q.context().p}, {"n", q.context().n}, {"terms", std::move(terms)}};
}

inline Json convergence_to_json(const std::vector<ConvergencePoint>& profile) {
    Json out = Json::array();
    for (const ConvergencePoint& pt : profile)
        out.push_back(Json{{"j", pt.j},
                           {"max_omega_gap", pt.omega_gap},
                           {"max_majorant_gap", pt.majorant_gap}});
    return out;
}

}  // namespace sphlab
