#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "sqt/complex_matrix.hpp"
#include "sqt/errors.hpp"

namespace sqt {

// Matrix file format: { "n": int, "re": [row-major], "im": [row-major] },
// "im" optional (zeros).
inline CMat matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("re"))
        throw ConfigError("matrix json: fields 'n' and 're' required");
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw BadDims("matrix json: n must be positive");
    const auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(n * n, 0.0);
    if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
    if (re.size() != n * n || im.size() != n * n)
        throw ConfigError("matrix json: entry count must be n*n");
    CMat A(n, n);
    for (std::size_t k = 0; k < n * n; ++k)
        A(k / n, k % n) = cplx(re[k], im[k]);
    return A;
}

inline nlohmann::json matrix_to_json(const CMat& A) {
    if (A.rows() != A.cols()) throw BadDims("matrix json: square only");
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (const auto& z : A.data()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"n", A.rows()}, {"re", re}, {"im", im}};
}

inline CMat load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open matrix file: " + path);
    nlohmann::json j;
    in >> j;
    return matrix_from_json(j);
}

} // namespace sqt
