#include <sstream>

#include "nvk/core/form.hpp"
#include "nvk/core/report.hpp"

namespace nvk {

BilinearForm::BilinearForm(Mat m) : m_(std::move(m)) {
    if (m_.extent(0) != m_.extent(1)) throw Error(ErrorKind::ShapeMismatch, "bilinear form matrix must be square");
    const std::size_t n = m_.extent(0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (m_(a, b) != m_(b, a)) symmetric_ = false;
            if (m_(a, b) != -m_(b, a)) skew_ = false;
        }
    nondegenerate_ = !determinant(m_).is_zero();
}

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const {
    Scalar s = field().zero();
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x(a).is_zero()) continue;
        for (std::size_t b = 0; b < dim(); ++b)
            if (!y(b).is_zero() && !m_(a, b).is_zero()) s += x(a) * m_(a, b) * y(b);
    }
    return s;
}

void Report::add_violation(Violation v) {
    pass = false;
    ++violation_count;
    if (violations.size() < kMaxWitnesses) violations.push_back(std::move(v));
}

void Report::add_part(Report r) {
    if (!r.pass) pass = false;
    parts.push_back(std::move(r));
}

void Report::fail(const std::string& note) {
    pass = false;
    notes.push_back(note);
}

const Report* Report::find(const std::string& part_name) const {
    if (name == part_name) return this;
    for (const auto& p : parts)
        if (const Report* f = p.find(part_name)) return f;
    return nullptr;
}

bool Report::part_passes(const std::string& part_name) const {
    const Report* f = find(part_name);
    if (!f) throw Error(ErrorKind::InvalidArgument, "report has no part '" + part_name + "'");
    return f->pass;
}

std::string render_text(const Report& r, int indent) {
    std::ostringstream os;
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    os << pad << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (r.violation_count) os << "  (" << r.violation_count << " violation" << (r.violation_count > 1 ? "s" : "") << ")";
    os << '\n';
    for (const auto& n : r.notes) os << pad << "  note: " << n << '\n';
    for (const auto& v : r.violations) {
        os << pad << "  " << v.identity << " at " << v.label << ": residual [";
        for (std::size_t k = 0; k < v.residual.size(); ++k) os << (k ? " " : "") << v.residual[k];
        os << "]\n";
    }
    for (const auto& p : r.parts) os << render_text(p, indent + 1);
    return os.str();
}

std::string witness_label(const Basis& b, const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + b.name(idx[k]);
    return s + ")";
}

}  // namespace nvk
