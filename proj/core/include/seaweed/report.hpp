#pragma once

// JSON forms of the module results. Everything is returned as text so that
// callers do not depend on a particular JSON library.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seaweed/spectrum.hpp"

namespace seaweed {

std::string to_json(const SpectrumReport& r, int indent = -1);
std::string to_json(const Seaweed& s, const FrobeniusWitness& w, int indent = -1);
std::string to_json(const EigenvalueMultiset& ms);  // {"-1":2,"0":5}

/// One line of census output.
struct CensusRecord {
    std::string literal;
    char family = 'C';
    int rank = 0;
    std::vector<int> pi1;
    std::vector<int> pi2;
    std::vector<int> a;
    std::vector<int> b;
    bool frobenius = false;
    std::vector<OrbitCount> orbits;
    std::optional<std::vector<long long>> simple_eigenvalues;
    std::optional<std::map<long long, long long>> spectrum;
    std::map<std::string, bool> checks;
    std::vector<std::string> flags;
    std::optional<std::string> error;
    std::optional<double> seconds;

    bool passed() const;  // no failed check and no error
    bool operator==(const CensusRecord& o) const;
};

std::string to_json_line(const CensusRecord& r);
/// Throws ParseError.
CensusRecord census_record_from_json(const std::string& line);

}  // namespace seaweed
