#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nvk/core/tensor.hpp"

namespace nvk {

inline constexpr std::size_t kMaxWitnesses = 10;

struct Violation {
    std::string identity;
    std::vector<std::size_t> witness;  // basis indices (and degrees for completed checks)
    std::string label;                 // human-readable witness, e.g. "(e1,e2,e2)"
    std::vector<Scalar> residual;      // flattened nonzero residual
};

// Verdict of one check. Parts let composite checks keep per-identity verdicts.
struct Report {
    std::string name;
    bool pass = true;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;
    std::vector<Report> parts;
    std::vector<std::string> notes;

    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}

    void add_violation(Violation v);
    void add_part(Report r);
    void fail(const std::string& note);

    // Depth-first search by name; nullptr if absent.
    const Report* find(const std::string& part_name) const;
    bool part_passes(const std::string& part_name) const;

    template <std::size_t R>
    void expect_zero(const std::string& identity, std::vector<std::size_t> witness, std::string label,
                     const Tensor<R>& residual) {
        if (residual.is_zero()) return;
        add_violation({identity, std::move(witness), std::move(label), residual.data()});
    }
};

std::string render_text(const Report& r, int indent = 0);

// "(e1,e2,e3)" from indices into a basis.
std::string witness_label(const Basis& b, const std::vector<std::size_t>& idx);

}  // namespace nvk
