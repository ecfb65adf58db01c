#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nvk/affine.hpp"
#include "nvk/algebras.hpp"

namespace nvk::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchema = "report_v1";

enum ExitCode : int { kPass = 0, kFailed = 2, kUsage = 64, kParse = 65 };

nlohmann::json report_to_json(const Report& r);
nlohmann::json banded_to_json(const BandedTensor2& t, const Basis& b);
nlohmann::json banded_to_json(const BandedTensor3& t, const Basis& b);
std::string fnv1a64_hex(const std::string& bytes);

// Worker threads: NVK_THREADS if set and positive, else `requested`, else hardware concurrency.
unsigned worker_count(unsigned requested = 0);

struct SearchOptions {
    std::size_t dim = 1;
    std::uint32_t p = 2;
    AlgebraClass cls = AlgebraClass::novikov;
    bool admits_quasi_frobenius = false;  // some nondegenerate skewsymmetric omega passes
    bool admits_nybe = false;             // some nonzero skewsymmetric r solves the NYBE
    std::optional<std::uint64_t> samples;  // sampling mode
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::uint64_t cap = 1u << 20;  // largest exhaustive candidate count
};

struct SearchHit {
    std::uint64_t index;  // candidate number (enumeration index or sample number)
    Algebra algebra;
};

struct SearchResult {
    std::uint64_t candidates = 0;
    bool sampled = false;
    std::vector<SearchHit> hits;  // in candidate order
};

// Candidate number k: the base-p digits of k fill the constants c[a][b][g]
// in row-major order, least significant digit first.
Algebra candidate_algebra(std::size_t dim, const Field& f, std::uint64_t index);

SearchResult search(const SearchOptions& opt);

bool admits_quasi_frobenius(const Algebra& a);
bool admits_nybe_solution(const Algebra& a);

std::optional<AlgebraClass> parse_class(const std::string& name);

// Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nvk::cli
