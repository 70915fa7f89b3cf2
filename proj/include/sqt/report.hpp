#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sqt/complex_matrix.hpp"
#include "sqt/majorization.hpp"

namespace sqt {

using json = nlohmann::json;

// One inequality instance: both sides, margin = rhs - lhs, pass <=> margin >= -tol.
struct VerificationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool passed = false;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    json witnesses = json::object();

    double scaled_margin() const {
        return margin / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    }

    void finalize() {
        margin = rhs - lhs;
        passed = margin >= -tol;
    }

    json to_json() const {
        return json{{"name", name},       {"lhs", lhs},   {"rhs", rhs},
                    {"margin", margin},   {"passed", passed}, {"tol", tol},
                    {"seed", seed},       {"scaled_margin", scaled_margin()},
                    {"witnesses", witnesses}};
    }
};

inline json vec_to_json(const std::vector<double>& v) { return json(v); }

inline json rmat_to_json(const RMat& P) {
    json rows = json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < P.size(); ++j) row.push_back(P(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline json cmat_to_json(const CMat& A) {
    json re = json::array(), im = json::array();
    for (const auto& z : A.data()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"rows", A.rows()}, {"cols", A.cols()}, {"re", re}, {"im", im}};
}

} // namespace sqt
