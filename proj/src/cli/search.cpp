#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "nvk/cli/cli.hpp"
#include "nvk/yangbaxter.hpp"

namespace nvk::cli {

std::optional<AlgebraClass> parse_class(const std::string& name) {
    for (AlgebraClass c : {AlgebraClass::novikov, AlgebraClass::right_novikov, AlgebraClass::lie,
                           AlgebraClass::comm_assoc, AlgebraClass::zinbiel})
        if (name == class_name(c)) return c;
    return std::nullopt;
}

Algebra candidate_algebra(std::size_t dim, const Field& f, std::uint64_t index) {
    const std::uint64_t p = f.characteristic();
    if (p == 0) throw Error(ErrorKind::InvalidArgument, "enumeration needs a finite field");
    Ten3 c(f, {dim, dim, dim});
    for (std::size_t k = 0; k < c.size(); ++k) {
        c.at_flat(k) = f.from_int(static_cast<std::int64_t>(index % p));
        index /= p;
    }
    return Algebra(Basis::numbered(dim), std::move(c));
}

namespace {

// All skewsymmetric 2-tensors over F_p. In characteristic 2 the diagonal is free.
std::vector<Mat> skew_tensors(std::size_t n, const Field& f) {
    const std::uint64_t p = f.characteristic();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (i != j || p == 2) slots.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        total *= p;
        if (total > (1u << 16)) throw Error(ErrorKind::CapExceeded, "too many skewsymmetric candidates");
    }
    std::vector<Mat> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Mat m(f, {n, n});
        std::uint64_t rest = idx;
        for (auto [i, j] : slots) {
            const Scalar s = f.from_int(static_cast<std::int64_t>(rest % p));
            rest /= p;
            m(i, j) = s;
            if (i != j) m(j, i) = -s;
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

bool admits_quasi_frobenius(const Algebra& a) {
    for (const Mat& m : skew_tensors(a.dim(), a.field())) {
        const BilinearForm w(m);
        if (w.nondegenerate() && check_quasi_frobenius(a, w).pass) return true;
    }
    return false;
}

bool admits_nybe_solution(const Algebra& a) {
    for (const Mat& r : skew_tensors(a.dim(), a.field()))
        if (!r.is_zero() && nybe_tensor(a, r).is_zero()) return true;
    return false;
}

SearchResult search(const SearchOptions& opt) {
    if (!is_prime(opt.p)) throw Error(ErrorKind::InvalidArgument, "field size must be prime");
    if (opt.dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    const Field f = Field::prime(opt.p);
    const std::size_t cells = opt.dim * opt.dim * opt.dim;

    SearchResult res;
    std::vector<std::uint64_t> sample_digits;  // flattened digits when sampling
    if (opt.samples) {
        res.sampled = true;
        res.candidates = *opt.samples;
        if (res.candidates > opt.cap) throw Error(ErrorKind::CapExceeded, "sample count exceeds the cap");
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::uint64_t> digit(0, opt.p - 1);
        sample_digits.resize(res.candidates * cells);
        for (auto& d : sample_digits) d = digit(rng);
    } else {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < cells; ++k) {
            if (total > opt.cap / opt.p) throw Error(ErrorKind::CapExceeded, "p^(dim^3) candidates exceed the cap; use --samples");
            total *= opt.p;
        }
        res.candidates = total;
    }

    auto make = [&](std::uint64_t k) {
        if (!res.sampled) return candidate_algebra(opt.dim, f, k);
        Ten3 c(f, {opt.dim, opt.dim, opt.dim});
        for (std::size_t q = 0; q < cells; ++q) c.at_flat(q) = f.from_int(static_cast<std::int64_t>(sample_digits[k * cells + q]));
        return Algebra(Basis::numbered(opt.dim), std::move(c));
    };
    auto accept = [&](const Algebra& a) {
        if (!check_class(a, opt.cls).pass) return false;
        if (opt.admits_quasi_frobenius && !admits_quasi_frobenius(a)) return false;
        if (opt.admits_nybe && !admits_nybe_solution(a)) return false;
        return true;
    };

    std::vector<char> flags(res.candidates, 0);
    std::atomic<std::uint64_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    constexpr std::uint64_t kChunk = 64;
    auto worker = [&] {
        try {
            while (true) {
                const std::uint64_t start = next.fetch_add(kChunk);
                if (start >= res.candidates) return;
                const std::uint64_t stop = std::min(res.candidates, start + kChunk);
                for (std::uint64_t k = start; k < stop; ++k) flags[k] = accept(make(k)) ? 1 : 0;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
            next = res.candidates;
        }
    };
    const unsigned n_threads = std::min<std::uint64_t>(worker_count(opt.threads), std::max<std::uint64_t>(1, res.candidates / kChunk));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    for (std::uint64_t k = 0; k < res.candidates; ++k)
        if (flags[k]) res.hits.push_back({k, make(k)});
    return res;
}

}  // namespace nvk::cli
