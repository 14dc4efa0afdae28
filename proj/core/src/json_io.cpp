#include "scv/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace scv {

Json scalar_to_json(const GaussianRational& x) { return x.str(); }

GaussianRational scalar_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("scalar must be a string");
    return GaussianRational::parse(j.get<std::string>());
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    Vector v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
    std::vector<Vector> rows;
    for (const auto& row : j) rows.push_back(vector_from_json(row));
    return Matrix::from_rows(rows);
}

Json quadratic_to_json(const QuadraticVector& q) {
    Json out;
    out["d"] = q.d;
    out["A"] = matrix_to_json(q.A);
    out["B"] = vector_to_json(q.B);
    out["Lambda"] = vector_to_json(q.lambda);
    return out;
}

QuadraticVector quadratic_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("quadratic vector must be an object");
    for (const char* key : {"d", "A", "B", "Lambda"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("missing field '") + key + "'");
    QuadraticVector q;
    if (!j["d"].is_number_integer()) throw std::invalid_argument("'d' must be an integer");
    q.d = j["d"].get<long>();
    q.A = matrix_from_json(j["A"]);
    q.B = vector_from_json(j["B"]);
    q.lambda = vector_from_json(j["Lambda"]);
    validate_quadratic(q);
    if (!(q.A.transpose() == q.A))
        throw std::invalid_argument("'A' must be symmetric: the quadratic coefficients "
                                    "determine entries at (i,j) and (j,i) together");
    return q;
}

Json fock_to_json(const FockElement& v) {
    Json out = Json::array();
    for (const auto& [m, c] : v.terms()) {
        Json term;
        Json mono = Json::array();
        for (const Factor& f : m.factors()) mono.push_back(Json::array({f.mode, f.flavor}));
        term["monomial"] = std::move(mono);
        term["coeff"] = scalar_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

FockElement fock_from_json(const Json& j, long rank) {
    if (!j.is_array()) throw std::invalid_argument("element must be an array of terms");
    FockElement v(rank);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff"))
            throw std::invalid_argument("term must have 'monomial' and 'coeff'");
        std::vector<Factor> factors;
        for (const auto& pair : term["monomial"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("monomial entries must be [mode, flavor] pairs");
            factors.push_back({pair[0].get<long>(), pair[1].get<long>()});
        }
        v.add_term(FockMonomial(std::move(factors)), scalar_from_json(term["coeff"]));
    }
    return v;
}

Json check_report_to_json(const CheckReport& r) {
    Json out;
    out["verdict"] = r.verdict;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        Json jf;
        jf["equation"] = f.equation;
        jf["witness"] = fock_to_json(f.witness);
        fails.push_back(std::move(jf));
    }
    out["failures"] = std::move(fails);
    out["c_prime"] = r.central_charge ? Json(r.central_charge->str()) : Json(nullptr);
    return out;
}

Json scpoint_to_json(const ScPoint& p) {
    Json out = quadratic_to_json(p.quadratic());
    out["rank"] = p.rank_of_A();
    out["central_charge"] = p.central_charge().str();
    return out;
}

Json commutant_profile_to_json(const CommutantProfile& profile) {
    Json out;
    out["point"] = scpoint_to_json(profile.point);
    out["degree_bound"] = profile.degree_bound;
    out["dims_commutant"] = Json{{"actual", profile.dims_commutant},
                                 {"expected", profile.expected_commutant}};
    out["dims_double_commutant"] = Json{{"actual", profile.dims_double_commutant},
                                        {"expected", profile.expected_double_commutant}};
    out["matches_expected"] = profile.matches_expected();
    out["tensor_identity"] = tensor_dim_check(profile);
    return out;
}

std::string commutant_profile_to_csv(const CommutantProfile& profile) {
    std::ostringstream os;
    os << "n,commutant,expected_commutant,double_commutant,expected_double_commutant\n";
    for (long n = 0; n <= profile.degree_bound; ++n)
        os << n << "," << profile.dims_commutant[n] << "," << profile.expected_commutant[n]
           << "," << profile.dims_double_commutant[n] << ","
           << profile.expected_double_commutant[n] << "\n";
    return os.str();
}

Json chain_to_json(const Chain& chain) {
    Json out;
    out["length"] = chain.points.empty() ? 0 : chain.points.size() - 1;
    Json pts = Json::array();
    for (const ScPoint& p : chain.points) pts.push_back(scpoint_to_json(p));
    out["points"] = std::move(pts);
    return out;
}

Json extremal_to_json(const ExtremalClass& c) {
    Json out;
    out["labels"] = c.labels();
    return out;
}

Json verify_summary_to_json(const VerifySummary& s) {
    Json out;
    Json arr = Json::array();
    for (const auto& c : s.criteria) {
        Json jc;
        jc["id"] = c.id;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        jc["seconds"] = c.seconds;
        jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    out["criteria"] = std::move(arr);
    out["all_passed"] = s.all_passed();
    out["total_seconds"] = s.total_seconds;
    return out;
}

std::string verify_summary_to_csv(const VerifySummary& s) {
    std::ostringstream os;
    os << "id,name,passed,seconds\n";
    for (const auto& c : s.criteria)
        os << c.id << "," << c.name << "," << (c.passed ? "pass" : "fail") << "," << c.seconds
           << "\n";
    return os.str();
}

}  // namespace scv
