#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "nvk/cli/cli.hpp"
#include "nvk/cli/format.hpp"
#include "nvk/doubling.hpp"
#include "nvk/yangbaxter.hpp"

namespace nvk::cli {

using nlohmann::json;

namespace {

struct Outcome {
    Report report;
    json extra = json::object();
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Shared by every file-based command.
struct Input {
    std::string path;
    std::string text;
    Document doc;
};

Input load(const std::string& path) {
    Input in{path, read_file(path), {}};
    in.doc = parse_document(in.text);
    return in;
}

Ten2 resolve_r(const AlgebraBlock& blk, const std::string& text, const std::string& tensor_name, const Field& f) {
    if (!text.empty()) return parse_tensor2(text, blk.algebra.basis(), blk.algebra.basis(), f);
    const std::string name = tensor_name.empty() ? "r" : tensor_name;
    auto it = blk.tensors.find(name);
    if (it == blk.tensors.end()) throw Error(ErrorKind::InvalidArgument, "no tensor '" + name + "' given (use --r)");
    return it->second;
}

Report verdict_part(const std::string& name, bool pass, const std::string& why) {
    Report r(name);
    if (!pass) r.fail(why);
    return r;
}

std::string monomial_label(const Basis& b, std::size_t a, std::int64_t k) { return b.name(a) + " t^" + std::to_string(k); }

Outcome cmd_check(const Input& in, const std::vector<std::string>& classes, const std::string& name) {
    Outcome o{Report("check")};
    for (const auto& c : classes) {
        if (auto cls = parse_class(c)) {
            o.report.add_part(check_class(in.doc.algebra(name).algebra, *cls));
        } else if (c == "prenovikov") {
            o.report.add_part(check_pre_novikov(in.doc.pre_novikov(name).algebra));
        } else if (c == "ldendriform") {
            o.report.add_part(check_l_dendriform(in.doc.pre_novikov(name).algebra));
        } else if (c == "representation") {
            o.report.add_part(check_representation(in.doc.representation(name).rep));
        } else if (c == "matchedpair") {
            o.report.add_part(check_matched_pair(in.doc.matched_pair(name).pair));
        } else if (c == "coalgebra") {
            const auto& blk = in.doc.algebra(name);
            if (!blk.coalgebra) throw Error(ErrorKind::InvalidArgument, "algebra " + blk.name + " has no delta lines");
            o.report.add_part(check_novikov_coalgebra(*blk.coalgebra));
        } else if (c == "invariant" || c == "invariant_right") {
            const auto& blk = in.doc.algebra(name);
            if (!blk.form) throw Error(ErrorKind::InvalidArgument, "algebra " + blk.name + " has no form lines");
            o.report.add_part(check_invariant_form(blk.algebra, BilinearForm(*blk.form),
                                                   c == "invariant" ? FormFlavor::novikov : FormFlavor::right_novikov));
        } else {
            throw std::invalid_argument("unknown class " + c);
        }
    }
    return o;
}

const Coalgebra& need_delta(const AlgebraBlock& blk) {
    if (!blk.coalgebra) throw Error(ErrorKind::InvalidArgument, "algebra " + blk.name + " has no delta lines");
    return *blk.coalgebra;
}

Outcome cmd_bialgebra(const Input& in, const std::string& name) {
    const auto& blk = in.doc.algebra(name);
    Outcome o{Report("bialgebra")};
    o.report.add_part(check_novikov_bialgebra(blk.algebra, need_delta(blk)));
    return o;
}

Outcome cmd_coboundary(const Input& in, const std::string& name, const std::string& r_text, const std::string& tensor) {
    const auto& blk = in.doc.algebra(name);
    const Ten2 r = resolve_r(blk, r_text, tensor, in.doc.field);
    Outcome o{Report("coboundary")};
    o.report.add_part(check_cob_conditions(blk.algebra, r));
    const Coalgebra d = coboundary_coproduct(blk.algebra, r);
    json deltas = json::object();
    for (std::size_t g = 0; g < d.dim(); ++g)
        deltas[blk.algebra.basis().name(g)] = format_tensor2(d.delta(g), d.basis, d.basis, ".");
    o.extra["coproduct"] = deltas;
    return o;
}

Outcome cmd_nybe(const Input& in, const std::string& name, const std::string& r_text, const std::string& tensor,
                 bool require_skew) {
    const auto& blk = in.doc.algebra(name);
    const Ten2 r = resolve_r(blk, r_text, tensor, in.doc.field);
    Outcome o{Report("nybe")};
    o.report.add_part(check_nybe(blk.algebra, r));
    const bool skew = is_skewsymmetric(r);
    if (require_skew)
        o.report.add_part(verdict_part("skewsymmetric", skew, "r + flip(r) is nonzero"));
    else
        o.report.notes.push_back(std::string("r is ") + (skew ? "" : "not ") + "skewsymmetric");
    return o;
}

Outcome cmd_ooperator(const Input& in, const std::string& rep_name, const std::string& t_text) {
    const auto& rb = in.doc.representation(rep_name);
    const Ten2 T = parse_tensor2(t_text, rb.rep.algebra.basis(), rb.rep.module_basis, in.doc.field);
    const OOperator op{rb.rep, T};
    Outcome o{Report("ooperator")};
    Report oc = check_o_operator(op);
    const bool ok = oc.pass;
    o.report.add_part(std::move(oc));
    if (ok) {
        o.report.add_part(check_pre_novikov(o_operator_to_pre_novikov(op)));
        auto [big, r] = o_operator_lift(op);
        o.report.add_part(check_nybe(big, r));
        o.extra["lifted_r"] = format_tensor2(r, big.basis(), big.basis(), "^");
    }
    return o;
}

Outcome cmd_double(const Input& in, const std::string& name) {
    const auto& blk = in.doc.algebra(name);
    const auto v = equivalence_verdicts(blk.algebra, need_delta(blk));
    Outcome o{Report("double")};
    o.report.add_part(verdict_part("manin_triple", v.manin, "no Manin triple"));
    o.report.add_part(verdict_part("matched_pair", v.matched_pair, "not a matched pair"));
    o.report.add_part(verdict_part("bialgebra", v.bialgebra, "not a Novikov bialgebra"));
    o.report.add_part(verdict_part("agreement", v.consistent(), "the three verdicts disagree"));
    if (v.manin) {
        const auto t = assemble_double(blk.algebra, need_delta(blk));
        json prods = json::array();
        const Basis& b = t.double_algebra.basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                const Vec p = t.double_algebra.product(i, j);
                if (!p.is_zero()) prods.push_back(b.name(i) + "*" + b.name(j) + " = " + format_vector(p, b));
            }
        o.extra["double_products"] = prods;
    }
    return o;
}

Outcome cmd_affinize(const Input& in, const std::string& name, const std::vector<std::int64_t>& probes,
                     const std::string& with) {
    const auto& blk = in.doc.algebra(name);
    const Algebra& A = blk.algebra;
    Outcome o{Report("affinize")};
    o.report.add_part(check_laurent_jacobi(A, default_jacobi_probes()));
    if (blk.coalgebra) {
        o.report.add_part(check_completed_lie_bialgebra(A, *blk.coalgebra, probes));
        json deltas = json::array();
        for (std::int64_t k : probes)
            for (std::size_t a = 0; a < A.dim(); ++a)
                deltas.push_back({{"element", monomial_label(A.basis(), a, k)},
                                  {"delta", banded_to_json(apply_Delta_affine(LaurentVector::monomial(A.unit(a), k),
                                                                               *blk.coalgebra),
                                                           A.basis())}});
        o.extra["delta"] = deltas;
    }
    if (!with.empty()) {
        const auto& bb = in.doc.algebra(with);
        const Algebra L = induced_lie_finite(A, bb.algebra);
        Report lie = check_lie(L);
        lie.name = "induced_lie";
        o.report.add_part(std::move(lie));
        if (blk.coalgebra && bb.form) {
            const Coalgebra delta = induced_cobracket_finite(*blk.coalgebra, quadratic_coproduct(bb.algebra, BilinearForm(*bb.form)));
            o.report.add_part(check_lie_bialgebra(L, delta));
        }
    }
    return o;
}

Outcome cmd_cybe(const Input& in, const std::string& name, const std::string& r_text, const std::string& tensor) {
    const auto& blk = in.doc.algebra(name);
    const Ten2 r = resolve_r(blk, r_text, tensor, in.doc.field);
    const BandedTensor2 rl = affinize_r(blk.algebra, r);
    Outcome o{Report("cybe")};
    o.report.add_part(verdict_part("skewsymmetric", (rl + twist(rl)).is_zero(), "r_L is not skewsymmetric"));
    o.report.add_part(check_completed_cybe(blk.algebra, rl));
    o.extra["r_L"] = banded_to_json(rl, blk.algebra.basis());
    o.extra["residual"] = banded_to_json(cybe_residual(blk.algebra, rl), blk.algebra.basis());
    return o;
}

Outcome cmd_quasifrobenius(const Input& in, const std::string& name) {
    const auto& blk = in.doc.algebra(name);
    if (!blk.form) throw Error(ErrorKind::InvalidArgument, "algebra " + blk.name + " has no form lines");
    Report eq = quasi_frobenius_equivalence(blk.algebra, BilinearForm(*blk.form));
    Outcome o{Report("quasifrobenius")};
    // The library's equivalence report passes on agreement; here every condition must hold.
    const bool agree = eq.pass;
    for (auto& p : eq.parts) o.report.add_part(std::move(p));
    o.report.add_part(verdict_part("agreement", agree, "the four conditions disagree"));
    return o;
}

Outcome cmd_search(const SearchOptions& opt, bool list) {
    const SearchResult res = search(opt);
    Outcome o{Report("search")};
    o.report.notes.push_back("found " + std::to_string(res.hits.size()) + " of " + std::to_string(res.candidates) +
                             (res.sampled ? " sampled" : "") + " candidates");
    json hits = json::array();
    for (const auto& h : res.hits) {
        json prods = json::array();
        const Basis& b = h.algebra.basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                const Vec p = h.algebra.product(i, j);
                if (!p.is_zero()) prods.push_back(b.name(i) + "*" + b.name(j) + " = " + format_vector(p, b));
            }
        hits.push_back({{"index", h.index}, {"products", prods}});
        if (list) {
            std::string line = "#" + std::to_string(h.index) + ":";
            for (const auto& p : prods) line += " " + p.get<std::string>() + ";";
            o.report.notes.push_back(line);
        }
    }
    o.extra["dim"] = opt.dim;
    o.extra["field"] = "F" + std::to_string(opt.p);
    o.extra["class"] = class_name(opt.cls);
    o.extra["sampled"] = res.sampled;
    if (res.sampled) o.extra["seed"] = opt.seed;
    o.extra["candidates"] = res.candidates;
    o.extra["count"] = res.hits.size();
    o.extra["results"] = hits;
    return o;
}

// Small built-in documents exercised by `selftest`.
// The coproduct e1 -> e2.e2 is compatible with e1*e2 = -e2, not with e1*e2 = 0.
constexpr const char* kSelftestNovikov = R"(field Q
algebra A
basis e1 e2
e1*e1 = e1
e1*e2 = -e2
e2*e1 = e2
delta e1 = e2.e2
)";

constexpr const char* kSelftestSV = R"(field Q
algebra SV
basis a b c
a*a = a
a*b = 1/2 b
b*a = b
c*a = c
b*b = c
r = b^c - c^b
)";

Outcome cmd_selftest() {
    Outcome o{Report("selftest")};
    const Document d1 = parse_document(kSelftestNovikov);
    const auto& a = d1.algebra();
    o.report.add_part(check_novikov_bialgebra(a.algebra, *a.coalgebra));
    o.report.add_part(check_completed_lie_bialgebra(a.algebra, *a.coalgebra));
    Report eq = equivalence_suite(a.algebra, *a.coalgebra);
    o.report.add_part(verdict_part("equivalence_agreement", eq.pass, "verdicts disagree"));
    Algebra zero_sign = a.algebra;
    {
        Ten3 c = zero_sign.constants();
        c(0, 1, 1) = c.field().zero();
        zero_sign = Algebra(zero_sign.basis(), c);
    }
    const Report lb5 = check_novikov_bialgebra(zero_sign, *a.coalgebra);
    o.report.add_part(verdict_part("product_compat_rejects_e1e2_zero", check_novikov(zero_sign).pass && !lb5.part_passes("compat_product"),
                                   "with e1*e2 = 0 the product compatibility should fail"));
    const Document d2 = parse_document(kSelftestSV);
    const auto& sv = d2.algebra();
    const Ten2& r = sv.tensors.at("r");
    o.report.add_part(check_nybe(sv.algebra, r));
    o.report.add_part(check_completed_cybe(sv.algebra, affinize_r(sv.algebra, r)));
    o.report.add_part(cross_check_cor44(sv.algebra, r));
    o.report.add_part(check_laurent_coproduct_duality(-4, 4));
    SearchOptions so;
    const auto res = search(so);
    o.report.add_part(verdict_part("search_dim1_F2", res.hits.size() == 2, "expected 2 Novikov algebras"));
    if (serialize(parse_document(serialize(d2))) != serialize(d2)) o.report.fail("serialization round trip changed the file");
    return o;
}

std::string join_args(int argc, const char* const* argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += std::string(i > 1 ? "\x1f" : "") + argv[i];
    return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Novikov bialgebra and affinization checker", "nvk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string json_path, name, r_text, tensor, rep_name, t_text, with;
    std::vector<std::string> classes;
    std::vector<std::int64_t> probes = default_probe_degrees();
    bool require_skew = false, list = false;
    std::string file;
    SearchOptions so;
    std::string class_text = "novikov";
    std::uint64_t samples = 0;

    auto add_common = [&](CLI::App* c, bool with_file = true) {
        if (with_file) c->add_option("file", file, "input .alg file")->required();
        c->add_option("--json", json_path, "write the machine report (report_v1) to this path; '-' for stdout");
        c->add_option("--name", name, "object to use when the file holds several");
    };

    auto* check = app.add_subcommand("check", "check algebraic axioms");
    add_common(check);
    check->add_option("--class", classes,
                      "novikov, right_novikov, lie, comm_assoc, zinbiel, prenovikov, ldendriform, representation, "
                      "matchedpair, coalgebra, invariant, invariant_right")
        ->required();

    auto* bialg = app.add_subcommand("bialgebra", "check a Novikov bialgebra (product plus delta lines)");
    add_common(bialg);

    auto* cob = app.add_subcommand("coboundary", "coboundary coproduct conditions for r");
    add_common(cob);
    cob->add_option("--r", r_text, "2-tensor such as \"e1^e2 - e2^e1\"");
    cob->add_option("--tensor", tensor, "name of a tensor line in the file (default r)");

    auto* nybe = app.add_subcommand("nybe", "Novikov Yang-Baxter equation");
    add_common(nybe);
    nybe->add_option("--r", r_text, "2-tensor");
    nybe->add_option("--tensor", tensor, "name of a tensor line in the file");
    nybe->add_flag("--skew", require_skew, "also require r to be skewsymmetric");

    auto* oop = app.add_subcommand("ooperator", "O-operator on a representation");
    add_common(oop);
    oop->add_option("--rep", rep_name, "representation name");
    oop->add_option("--T", t_text, "T as a tensor \"a^v\" meaning T(v) contains a")->required();

    auto* dbl = app.add_subcommand("double", "Manin triple / matched pair / bialgebra equivalence");
    add_common(dbl);

    auto* aff = app.add_subcommand("affinize", "Laurent affinization checks");
    add_common(aff);
    aff->add_option("--probes", probes, "probe degrees (default 0 1 2)");
    aff->add_option("--with", with, "finite right Novikov algebra block for the finite induced Lie algebra");

    auto* cybe = app.add_subcommand("cybe", "completed CYBE for the affinized r");
    add_common(cybe);
    cybe->add_option("--r", r_text, "2-tensor");
    cybe->add_option("--tensor", tensor, "name of a tensor line in the file");

    auto* qf = app.add_subcommand("quasifrobenius", "quasi-Frobenius four-way equivalence for the form lines");
    add_common(qf);

    auto* srch = app.add_subcommand("search", "enumerate algebras over F_p");
    add_common(srch, false);
    srch->add_option("--dim", so.dim, "dimension")->required();
    srch->add_option("--field", so.p, "prime p")->required();
    srch->add_option("--class", class_text, "novikov, right_novikov, lie, comm_assoc, zinbiel");
    srch->add_flag("--admits-qf", so.admits_quasi_frobenius, "keep only algebras admitting a quasi-Frobenius form");
    srch->add_flag("--admits-nybe", so.admits_nybe, "keep only algebras with a nonzero skewsymmetric NYBE solution");
    srch->add_option("--samples", samples, "sampling mode: number of random candidates");
    srch->add_option("--seed", so.seed, "sampling seed");
    srch->add_option("--threads", so.threads, "worker threads (NVK_THREADS overrides)");
    srch->add_option("--cap", so.cap, "largest candidate count");
    srch->add_flag("--list", list, "print every hit");

    auto* self = app.add_subcommand("selftest", "run built-in example checks");
    add_common(self, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    Outcome o;
    std::string digest_source;
    std::uint32_t small_char = 0;
    try {
        if (cmd == "search" || cmd == "selftest") {
            digest_source = join_args(argc, argv);
            if (cmd == "search") {
                auto cls = parse_class(class_text);
                if (!cls) {
                    err << "unknown class " << class_text << "\n";
                    return kUsage;
                }
                so.cls = *cls;
                if (samples > 0) so.samples = samples;
                small_char = so.p == 2 || so.p == 3 ? so.p : 0;
                o = cmd_search(so, list);
            } else {
                o = cmd_selftest();
            }
        } else {
            const Input in = load(file);
            digest_source = in.text;
            const auto ch = in.doc.field.characteristic();
            small_char = ch == 2 || ch == 3 ? ch : 0;
            if (cmd == "check") o = cmd_check(in, classes, name);
            else if (cmd == "bialgebra") o = cmd_bialgebra(in, name);
            else if (cmd == "coboundary") o = cmd_coboundary(in, name, r_text, tensor);
            else if (cmd == "nybe") o = cmd_nybe(in, name, r_text, tensor, require_skew);
            else if (cmd == "ooperator") o = cmd_ooperator(in, rep_name, t_text);
            else if (cmd == "double") o = cmd_double(in, name);
            else if (cmd == "affinize") o = cmd_affinize(in, name, probes, with);
            else if (cmd == "cybe") o = cmd_cybe(in, name, r_text, tensor);
            else if (cmd == "quasifrobenius") o = cmd_quasifrobenius(in, name);
        }
    } catch (const ParseError& e) {
        err << "nvk: " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        o = Outcome{Report(cmd)};
        o.report.fail(e.what());
        o.extra["error"] = error_kind_name(e.kind());
    } catch (const std::invalid_argument& e) {
        err << "nvk: " << e.what() << "\n";
        return kUsage;
    }

    if (small_char != 0) {
        const std::string w = "characteristic " + std::to_string(small_char) +
                              ": the underlying results are stated for characteristic 0";
        err << "nvk: warning: " << w << "\n";
        o.report.notes.push_back("warning: " + w);
    }

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

    if (json_path != "-") {
        out << cmd << ": " << (o.report.pass ? "PASS" : "FAIL") << "\n" << render_text(o.report);
    }
    if (!json_path.empty()) {
        json doc;
        doc["schema"] = kSchema;
        doc["tool"] = {{"name", "nvk"}, {"version", kToolVersion}};
        std::vector<std::string> echo(argv + 1, argv + argc);
        doc["command"] = echo;
        doc["input_digest"] = "fnv1a64:" + fnv1a64_hex(digest_source);
        doc["pass"] = o.report.pass;
        doc["report"] = report_to_json(o.report);
        for (auto it = o.extra.begin(); it != o.extra.end(); ++it) doc[it.key()] = it.value();
        doc["timing_ms"] = ms;
        const std::string text = doc.dump(2) + "\n";
        if (json_path == "-") {
            out << text;
        } else {
            std::ofstream f(json_path, std::ios::binary);
            if (!f) {
                err << "nvk: cannot write " << json_path << "\n";
                return kUsage;
            }
            f << text;
        }
    }
    return o.report.pass ? kPass : kFailed;
}

}  // namespace nvk::cli
