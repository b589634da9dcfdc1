#pragma once

#include <cstdint>
#include <string>

#include "museq/types.hpp"

namespace museq {

// A candidate mu-sequence: terms[0] = 1, all terms >= 1. Whether every
// prefix's kernel lattice really has minimum >= mu is checked by
// validate_mu_sequence, not assumed.
struct MuSequence {
    Integer mu;
    IVec terms;

    MuSequence() = default;
    MuSequence(Integer mu_, IVec terms_);

    size_t length() const { return terms.size(); }
};

// Sequence file format: JSON document with fields
//   mu: decimal string, terms: array of decimal strings, certified: bool (optional)
std::string to_sequence_json(const MuSequence& seq, bool certified = false,
                             bool* has_certified = nullptr);
MuSequence from_sequence_json(const std::string& text, bool* certified = nullptr);
void save_sequence_file(const MuSequence& seq, const std::string& path,
                        bool certified = false);
MuSequence load_sequence_file(const std::string& path, bool* certified = nullptr);

struct ValidationResult {
    bool pass = false;
    // on failure: length of the first bad prefix and an SVP witness
    size_t failing_prefix_len = 0;
    Integer minimum_found;
    IVec witness;
};

// Certifies every prefix of length >= 2 (lattice dimension >= 1) via
// LLL + exact enumeration. A length-1 sequence passes vacuously.
ValidationResult validate_mu_sequence(const MuSequence& seq,
                                      uint64_t svp_budget = 100'000'000);

}  // namespace museq
