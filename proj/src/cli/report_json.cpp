#include <cstdlib>
#include <thread>

#include "nvk/cli/cli.hpp"

namespace nvk::cli {

using nlohmann::json;

json report_to_json(const Report& r) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["violation_count"] = r.violation_count;
    json vs = json::array();
    for (const auto& v : r.violations) {
        json res = json::array();
        for (const auto& s : v.residual) res.push_back(s.to_string());
        vs.push_back({{"identity", v.identity}, {"witness", v.witness}, {"label", v.label}, {"residual", res}});
    }
    j["violations"] = vs;
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(report_to_json(p));
    j["parts"] = parts;
    j["notes"] = r.notes;
    return j;
}

namespace {

template <std::size_t R>
json banded_json(const BandedTensor<R>& t, const Basis& b) {
    json bands = json::array();
    for (const auto& [d, p] : t.bands()) {
        // Regroup the tensor-valued polynomial into one scalar polynomial per cell.
        std::map<std::vector<std::size_t>, Poly> cells;
        for (const auto& [m, c] : p.terms()) {
            const auto& shape = c.shape();
            std::size_t total = c.size();
            for (std::size_t k = 0; k < total; ++k) {
                const Scalar& s = c.at_flat(k);
                if (s.is_zero()) continue;
                std::vector<std::size_t> idx(R);
                std::size_t rest = k;
                for (std::size_t q = R; q-- > 0;) {
                    idx[q] = rest % shape[q];
                    rest /= shape[q];
                }
                auto it = cells.try_emplace(idx, Poly(t.field())).first;
                it->second.add_term(m, s);
            }
        }
        json cs = json::array();
        for (const auto& [idx, poly] : cells) {
            json names = json::array();
            for (auto i : idx) names.push_back(b.name(i));
            cs.push_back({{"cell", names}, {"poly", poly.to_string()}});
        }
        bands.push_back({{"total_degree", d}, {"cells", cs}});
    }
    return {{"rank", R}, {"variables", R == 2 ? json{"u"} : json{"u", "v"}}, {"bands", bands}};
}

}  // namespace

json banded_to_json(const BandedTensor2& t, const Basis& b) { return banded_json<2>(t, b); }
json banded_to_json(const BandedTensor3& t, const Basis& b) { return banded_json<3>(t, b); }

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

unsigned worker_count(unsigned requested) {
    if (const char* env = std::getenv("NVK_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace nvk::cli
