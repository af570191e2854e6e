#include "symdec/json_io.hpp"

#include <stdexcept>

namespace symdec {

using nlohmann::json;

std::string dtos(double x) { return json(x).dump(); }

json matrix_to_json(const HermitianMatrix& m) {
    const int d = m.dim();
    json rows = json::array();
    for (int r = 0; r < d; ++r) {
        json row = json::array();
        for (int c = 0; c < d; ++c) {
            const cplx v = m(r, c);
            row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"d", d}, {"entries", std::move(rows)}};
}

HermitianMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must be an object with \"d\" and \"entries\"");
    const int d = j.at("d").get<int>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
        throw std::invalid_argument("matrix JSON: entries must hold d rows");
    std::vector<cplx> raw;
    raw.reserve(static_cast<std::size_t>(d) * d);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw std::invalid_argument("matrix JSON: each row must hold d entries");
        for (const json& cell : row) {
            if (!cell.is_array() || cell.size() != 2)
                throw std::invalid_argument("matrix JSON: each entry must be [re, im]");
            raw.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return HermitianMatrix::from_entries(d, raw);
}

json family_to_json(const std::vector<HermitianMatrix>& members, const HermitianMatrix* T) {
    json ms = json::array();
    for (const auto& m : members) ms.push_back(matrix_to_json(m));
    json out;
    out["T"] = T != nullptr ? matrix_to_json(*T) : json(nullptr);
    out["members"] = std::move(ms);
    return out;
}

FamilyFile family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("members"))
        throw std::invalid_argument("family JSON must be an object with \"members\"");
    FamilyFile file;
    if (j.contains("T") && !j.at("T").is_null()) file.T = matrix_from_json(j.at("T"));
    for (const json& m : j.at("members")) file.members.push_back(matrix_from_json(m));
    if (file.members.empty()) throw std::invalid_argument("family JSON: members must be nonempty");
    return file;
}

json basis_to_json(const ConstructionBasis& basis) {
    json f = json::array();
    for (const auto& m : basis.F) f.push_back(matrix_to_json(m));
    json r = json::array();
    for (const auto& m : basis.R) r.push_back(matrix_to_json(m));
    return json{{"T", matrix_to_json(basis.T)},
                {"F", std::move(f)},
                {"R", std::move(r)},
                {"mu", basis.mu},
                {"rho", basis.rho}};
}

json window_to_json(const PsdWindow& win) {
    return json{{"x_sufficient", win.x_sufficient},
                {"x_exact", win.x_exact},
                {"a_sufficient", win.a_at(win.x_sufficient)},
                {"a_exact", win.a_at(win.x_exact)}};
}

json fit_to_json(const SymmetricFamily& fam) {
    return json{{"N", fam.size()},
                {"d", fam.dim()},
                {"a_fit", fam.a_fit},
                {"b_fit", fam.b_defined ? json(fam.b_fit) : json(nullptr)},
                {"max_dev", fam.max_dev}};
}

json decomposition_report_to_json(const DecompositionReport& rep) {
    return json{{"residual", rep.residual},
                {"b_identity_dev", rep.b_identity_dev},
                {"trace_identity_dev", rep.trace_identity_dev},
                {"degenerate", rep.degenerate},
                {"degenerate_weights",
                 rep.degenerate_weights ? json(*rep.degenerate_weights) : json(nullptr)}};
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json bounds_to_json(const BoundsReport& rep) {
    return json{{"a_lower", rep.a_lower},
                {"a_upper_positive", rep.a_upper_positive},
                {"a_upper_projection", opt(rep.a_upper_projection)},
                {"a_upper_condition", opt(rep.a_upper_condition)},
                {"a_upper_psd", opt(rep.a_upper_psd)},
                {"x_upper_psd", opt(rep.x_upper_psd)},
                {"phi", opt(rep.phi)},
                {"t2", rep.t2},
                {"N", rep.N}};
}

json welch_to_json(const WelchReport& rep) {
    json out{{"lhs", rep.lhs},
             {"rhs", rep.rhs},
             {"slack", rep.slack},
             {"equality", rep.equality},
             {"equiangular_dev", rep.equiangular_dev},
             {"tightness_dev", rep.tightness_dev},
             {"clamped", rep.clamped}};
    out["rhs_weighted"] = opt(rep.rhs_weighted);
    return out;
}

json dual_parameters_to_json(const DualParameters& p) {
    return json{{"a_tilde", p.a_tilde},
                {"b_tilde", p.b_tilde},
                {"a_hat", p.a_hat},
                {"b_hat", p.b_hat},
                {"x_hat", opt(p.x_hat)}};
}

WeightVector weights_from_json(const json& j) {
    if (!j.is_object() || !j.contains("v"))
        throw std::invalid_argument("weights JSON must be an object with \"v\"");
    return WeightVector(j.at("v").get<std::vector<double>>());
}

}  // namespace symdec
