#include "qtet/json_io.hpp"

namespace qtet {

Json matrix_to_json(const SqMatrix& m) {
    Json j;
    j["schema"] = "qtet/1";
    j["dim"] = m.dim();
    Json entries = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(m.at(i, k).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

SqMatrix matrix_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must carry dim and entries");
    const int dim = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != dim)
        throw std::invalid_argument("matrix JSON row count mismatch");
    SqMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = entries.at(i);
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("matrix JSON column count mismatch");
        for (int k = 0; k < dim; ++k) {
            const std::string text = row.at(k).get<std::string>();
            const Scalar s = parse_scalar(text);
            if (s.str() != text)
                throw std::invalid_argument("entry not in canonical form: " + text);
            m.at(i, k) = s;
        }
    }
    return m;
}

Json report_to_json(const std::string& suite, const VerifyReport& rep) {
    Json j;
    j["schema"] = "qtet/1";
    j["suite"] = suite;
    j["pass"] = rep.all_pass();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json pairing_to_json(const PairingTable& p) {
    Json j = Json::object();
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (i == k) continue;
            j["(eta_" + std::to_string(i) + ",eta*_" + std::to_string(k) + ")"] =
                p.at(i, k).str();
        }
    return j;
}

}  // namespace qtet
