#include "museq/core.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "museq/reduce.hpp"

namespace museq {

MuSequence::MuSequence(Integer mu_, IVec terms_) : mu(std::move(mu_)), terms(std::move(terms_)) {
    if (mu < 2) throw InputError("MuSequence: mu >= 2 required");
    if (terms.empty()) throw InputError("MuSequence: empty terms");
    if (terms[0] != 1) throw InputError("MuSequence: terms[0] must be 1");
    for (const auto& t : terms)
        if (t < 1) throw InputError("MuSequence: terms must be >= 1");
}

std::string to_sequence_json(const MuSequence& seq, bool certified, bool*) {
    nlohmann::json j;
    j["mu"] = seq.mu.get_str();
    auto arr = nlohmann::json::array();
    for (const auto& t : seq.terms) arr.push_back(t.get_str());
    j["terms"] = arr;
    j["certified"] = certified;
    return j.dump(2) + "\n";
}

MuSequence from_sequence_json(const std::string& text, bool* certified) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("sequence file: ") + e.what());
    }
    if (!j.contains("mu") || !j.contains("terms"))
        throw InputError("sequence file: fields 'mu' and 'terms' required");
    if (!j["mu"].is_string() || !j["terms"].is_array())
        throw InputError("sequence file: 'mu' must be a string, 'terms' an array");
    Integer mu = parse_integer(j["mu"].get<std::string>());
    IVec terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_string()) throw InputError("sequence file: terms must be decimal strings");
        terms.push_back(parse_integer(t.get<std::string>()));
    }
    if (certified) *certified = j.value("certified", false);
    return MuSequence(std::move(mu), std::move(terms));
}

void save_sequence_file(const MuSequence& seq, const std::string& path, bool certified) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << to_sequence_json(seq, certified);
}

MuSequence load_sequence_file(const std::string& path, bool* certified) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_sequence_json(ss.str(), certified);
}

ValidationResult validate_mu_sequence(const MuSequence& seq, uint64_t svp_budget) {
    ValidationResult res;
    for (size_t len = 2; len <= seq.terms.size(); ++len) {
        IVec prefix(seq.terms.begin(), seq.terms.begin() + len);
        auto cert = reduce::shortest_vector(reduce::kernel_basis(prefix), svp_budget);
        if (cert.minimum < seq.mu) {
            res.pass = false;
            res.failing_prefix_len = len;
            res.minimum_found = cert.minimum;
            res.witness = cert.witness;
            return res;
        }
    }
    res.pass = true;
    return res;
}

}  // namespace museq
