#include "cli.hpp"

#include "partalg/oracle.hpp"
#include "partalg/partalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

namespace partalg::cli {

namespace {

using json = nlohmann::ordered_json;

json big_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json parts_json(const Partition& p) { return p.parts(); }

std::string join_parens(const std::vector<Partition>& ps) {
    std::string s;
    for (const auto& p : ps) {
        if (!s.empty()) s += ' ';
        s += to_paren_string(p);
    }
    return s;
}

std::string word_list(const std::vector<oracle::Word>& ws, const oracle::SuperBasis& b) {
    std::string s;
    for (const auto& w : ws) {
        if (!s.empty()) s += ' ';
        s += oracle::to_string(w, b);
    }
    return s;
}

json words_json(const std::vector<oracle::Word>& ws, const oracle::SuperBasis& b) {
    json j = json::array();
    for (const auto& w : ws) j.push_back(oracle::to_string(w, b));
    return j;
}

std::vector<Partition> parse_set(const std::string& text) {
    std::vector<Partition> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(Partition::parse(item));
    return out;
}

void verdict(std::ostream& out, bool pass, const std::string& what, const json& detail) {
    out << (pass ? "PASS " : "FAIL ") << what << '\n' << detail.dump() << '\n';
}

struct Options {
    std::string format = "text";
    // lr
    std::string mu, lam, nu;
    // dims
    std::string lambda;
    int k = 0, l = 0;
    // filter / series / growth
    std::string action, file;
    int n = 0;
    int n_max = 0;
    bool super = false;
    unsigned jobs = 1;
    // oracle
    std::string set, poly;
    bool nonempty = false;
    int d = 0;
    std::uint64_t samples = 2000;
};

int cmd_lr(const Options& o, std::ostream& out) {
    const Partition mu = Partition::parse(o.mu), lam = Partition::parse(o.lam);
    if (!o.nu.empty()) {
        const Partition nu = Partition::parse(o.nu);
        const BigInt c = lr_coefficient(mu, lam, nu);
        if (o.format == "json")
            out << json{{"mu", parts_json(mu)}, {"lam", parts_json(lam)}, {"nu", parts_json(nu)}, {"c", big_json(c)}}.dump()
                << '\n';
        else
            out << c << '\n';
        return kOk;
    }
    const LRExpansion e = outer_product(mu, lam);
    if (o.format == "json") {
        json terms = json::array();
        for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it)
            terms.push_back(json{{"nu", parts_json(it->first)}, {"c", big_json(it->second)}});
        out << json{{"mu", parts_json(mu)}, {"lam", parts_json(lam)}, {"degree", e.degree}, {"terms", terms}}.dump()
            << '\n';
        return kOk;
    }
    std::string line;
    for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
        if (!line.empty()) line += ' ';
        line += to_paren_string(it->first) + "=" + it->second.get_str();
    }
    out << line << '\n';
    return kOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
    if (o.k < 0 || o.l < 0) throw InvalidArgument("k and l must be nonnegative");
    const auto r = dimension_record(Partition::parse(o.lambda), o.k, o.l);
    if (o.format == "json")
        out << json{{"lambda", parts_json(r.lambda)},
                    {"k", o.k},
                    {"l", o.l},
                    {"f", big_json(r.f)},
                    {"schur", big_json(r.schur_dim)},
                    {"w", big_json(r.w_dim)}}
                   .dump()
            << '\n';
    else
        out << "f=" << r.f << " schur=" << r.schur_dim << " w=" << r.w_dim << '\n';
    return kOk;
}

int cmd_filter(const Options& o, std::ostream& out) {
    const Filter f = load_filter(o.file);
    const bool as_json = o.format == "json";
    if (o.action == "minimize") {
        if (as_json) out << filter_to_json(f).dump() << '\n';
        else out << join_parens(f.generators()) << '\n';
        return kOk;
    }
    if (o.action == "member") {
        if (o.lambda.empty()) throw InvalidArgument("filter member needs --lambda");
        const Partition lam = Partition::parse(o.lambda);
        const bool m = f.member(lam);
        if (as_json) out << json{{"lambda", parts_json(lam)}, {"member", m}}.dump() << '\n';
        else out << (m ? "true" : "false") << '\n';
        return m ? kOk : kFalse;
    }
    if (o.action == "complement") {
        const auto c = complement_at(f, o.n);
        if (as_json) {
            json arr = json::array();
            for (const auto& p : c) arr.push_back(parts_json(p));
            out << json{{"n", o.n}, {"complement", arr}}.dump() << '\n';
        } else {
            out << join_parens(c) << '\n';
        }
        return kOk;
    }
    if (o.action == "hr") {
        const int a = hr(f);
        if (as_json) out << json{{"hr", a}, {"exp_growth", exp_growth(f)}}.dump() << '\n';
        else out << "hr=" << a << " exp=" << exp_growth(f) << '\n';
        return kOk;
    }
    // pi
    const Hook h = f.require_ambient("filter pi");
    if (!o.super && h.l == 0) {
        const auto c = is_pi_classical(f);
        if (as_json) {
            json j{{"kind", "classical"}, {"pi", c.has_value()}};
            if (c) {
                j["c"] = *c;
                j["commutators"] = classical_identity_degree(*c, h.k);
            }
            out << j.dump() << '\n';
        } else if (c) {
            out << "c=" << *c << " commutators=" << classical_identity_degree(*c, h.k) << '\n';
        } else {
            out << "absent\n";
        }
        return c ? kOk : kFalse;
    }
    const auto b = is_pi_super(f);
    if (as_json) {
        json j{{"kind", "super"}, {"pi", b.has_value()}};
        if (b) {
            j["b"] = *b;
            j["factors"] = super_identity_factors(*b);
        }
        out << j.dump() << '\n';
    } else if (b) {
        out << "b=" << *b << " factors=" << super_identity_factors(*b) << '\n';
    } else {
        out << "absent\n";
    }
    return b ? kOk : kFalse;
}

int cmd_series(const Options& o, std::ostream& out) {
    const Filter f = load_filter(o.file);
    const auto s = series(f, o.n_max, std::max(1u, o.jobs));
    if (o.format == "json") {
        json vals = json::array();
        for (const auto& v : s.values) vals.push_back(big_json(v));
        out << json{{"filter", filter_to_json(f)}, {"values", vals}}.dump() << '\n';
    } else if (o.format == "csv") {
        out << "n,d_n\n";
        for (std::size_t n = 0; n < s.values.size(); ++n) out << n << ',' << s.values[n] << '\n';
    } else {
        for (std::size_t n = 0; n < s.values.size(); ++n) out << "d_" << n << " = " << s.values[n] << '\n';
    }
    return kOk;
}

int cmd_growth(const Options& o, std::ostream& out) {
    const Filter f = load_filter(o.file);
    const auto r = verify_growth(f, o.n_max, std::max(1u, o.jobs));
    json j{{"alpha", r.alpha}, {"n_max", r.n_max}};
    j["slope"] = r.slope ? json(*r.slope) : json(nullptr);
    j["nilpotency"] = r.nilpotency ? json(*r.nilpotency) : json(nullptr);
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    j["detail"] = r.detail;
    out << j.dump() << '\n';
    return r.pass ? kOk : kFalse;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    if (o.k < 0 || o.l < 0 || o.n < 0) throw InvalidArgument("k, l and n must be nonnegative");
    const oracle::SuperBasis b{o.k, o.l};
    json parts = json::array();
    BigInt total = 0;
    bool ok = true;
    for (const auto& lam : enumerate(o.n)) {
        const auto dim = oracle::module_W(lam, b, o.n).dim();
        const BigInt expect = w_dim(lam, o.k, o.l);
        ok = ok && BigInt(static_cast<unsigned long>(dim)) == expect;
        total += static_cast<unsigned long>(dim);
        parts.push_back(json{{"lambda", parts_json(lam)}, {"dim", dim}, {"w_dim", big_json(expect)}});
    }
    const BigInt ambient = power(static_cast<unsigned long>(b.size()), static_cast<unsigned long>(o.n));
    ok = ok && total == ambient;
    verdict(out, ok, "decompose k=" + std::to_string(o.k) + " l=" + std::to_string(o.l) + " n=" + std::to_string(o.n),
            json{{"total", big_json(total)}, {"ambient", big_json(ambient)}, {"modules", parts}});
    return ok ? kOk : kFalse;
}

int cmd_check_ideal(const Options& o, std::ostream& out) {
    std::vector<Partition> set;
    oracle::SuperBasis b;
    if (!o.file.empty()) {
        const Filter f = load_filter(o.file);
        const Hook h = f.require_ambient("oracle check-ideal");
        b = {h.k, h.l};
        set = oracle::members_up_to(f, o.n_max);
    } else {
        b = {o.k, o.l};
        set = parse_set(o.set);
    }
    const auto r = oracle::check_ideal(set, b, o.n_max);
    json j{{"k", b.k}, {"l", b.l}, {"n_max", o.n_max}, {"ideal", r.is_ideal}};
    if (r.failing_degree) j["failing_degree"] = *r.failing_degree;
    verdict(out, r.is_ideal, "check-ideal", j);
    return r.is_ideal ? kOk : kFalse;
}

int cmd_identity(const Options& o, std::ostream& out) {
    const Filter f = load_filter(o.file);
    const Hook h = f.require_ambient("oracle identity");
    const oracle::SuperBasis b{h.k, h.l};
    const auto g = oracle::named_polynomial(o.poly);
    const auto r = oracle::evaluate_identity(g, f, b, o.n, o.nonempty);
    json j{{"poly", o.poly}, {"degree", g.degree()}, {"n", o.n}, {"substitutions", r.substitutions}};
    if (r.witness) j["witness"] = words_json(*r.witness, b);
    verdict(out, r.holds, "identity " + o.poly + " n=" + std::to_string(o.n), j);
    return r.holds ? kOk : kFalse;
}

int cmd_ee(const Options& o, std::ostream& out) {
    const auto g = oracle::named_polynomial(o.poly);
    const bool sampled = static_cast<int>(g.degree()) > oracle::caps().ee_degree;
    const auto r = sampled ? oracle::is_identity_EE_sampled(g, o.samples) : oracle::is_identity_EE(g);
    json j{{"poly", o.poly}, {"degree", g.degree()}, {"mode", sampled ? "sampled" : "exhaustive"},
           {"pairs_checked", r.pairs_checked}};
    if (r.violation) {
        j["I1"] = r.violation->first;
        j["I2"] = r.violation->second;
        j["value"] = r.violation_value.get_str();
    }
    verdict(out, r.identity, "ee " + o.poly, j);
    return r.identity ? kOk : kFalse;
}

int cmd_ee_kernel(const Options& o, std::ostream& out) {
    const auto dim = oracle::ee_identity_kernel_dim(o.d);
    if (o.format == "json") out << json{{"d", o.d}, {"kernel_dim", dim}}.dump() << '\n';
    else out << dim << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Filters in Young's lattice and the algebras they define", "partalg"};
    app.require_subcommand(1);
    Options o;
    std::function<int(std::ostream&)> action;

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    lr->add_option("--mu", o.mu, "first partition")->required();
    lr->add_option("--lam", o.lam, "second partition")->required();
    lr->add_option("--nu", o.nu, "single target partition");
    lr->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    lr->callback([&] { action = [&](std::ostream& s) { return cmd_lr(o, s); }; });

    auto* dims = app.add_subcommand("dims", "f^lambda, hook Schur dimension and dim W_lambda");
    dims->add_option("--lambda", o.lambda)->required();
    dims->add_option("--k", o.k)->required();
    dims->add_option("--l", o.l)->required();
    dims->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    dims->callback([&] { action = [&](std::ostream& s) { return cmd_dims(o, s); }; });

    auto* filter = app.add_subcommand("filter", "queries on a filter file");
    filter->add_option("action", o.action)
        ->required()
        ->check(CLI::IsMember({"minimize", "member", "complement", "hr", "pi"}));
    filter->add_option("--file", o.file)->required();
    filter->add_option("--lambda", o.lambda);
    filter->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
    filter->add_flag("--super", o.super, "use the super criterion for pi");
    filter->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    filter->callback([&] { action = [&](std::ostream& s) { return cmd_filter(o, s); }; });

    auto* ser = app.add_subcommand("series", "dimension series d_0..d_N");
    ser->add_option("--file", o.file)->required();
    ser->add_option("--n-max", o.n_max)->required()->check(CLI::NonNegativeNumber);
    ser->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    ser->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    ser->callback([&] { action = [&](std::ostream& s) { return cmd_series(o, s); }; });

    auto* growth = app.add_subcommand("growth", "growth exponent check");
    growth->add_option("--file", o.file)->required();
    growth->add_option("--n-max", o.n_max)->required()->check(CLI::NonNegativeNumber);
    growth->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    growth->callback([&] { action = [&](std::ostream& s) { return cmd_growth(o, s); }; });

    auto* orc = app.add_subcommand("oracle", "brute-force tensor algebra checks");
    orc->require_subcommand(1);

    auto* dec = orc->add_subcommand("decompose", "dim W_lambda against the formula");
    dec->add_option("--k", o.k)->required();
    dec->add_option("--l", o.l)->required();
    dec->add_option("--n", o.n)->required();
    dec->callback([&] { action = [&](std::ostream& s) { return cmd_decompose(o, s); }; });

    auto* ci = orc->add_subcommand("check-ideal", "is the span of the W_lambda a two-sided ideal");
    auto* ci_file = ci->add_option("--file", o.file);
    auto* ci_set = ci->add_option("--set", o.set, "partitions separated by ';'");
    ci_file->excludes(ci_set);
    ci->add_option("--k", o.k);
    ci->add_option("--l", o.l);
    ci->add_option("--n-max", o.n_max)->required()->check(CLI::NonNegativeNumber);
    ci->callback([&] {
        if (o.file.empty() && ci_set->count() == 0) throw CLI::ValidationError("check-ideal needs --file or --set");
        action = [&](std::ostream& s) { return cmd_check_ideal(o, s); };
    });

    auto* id = orc->add_subcommand("identity", "does a polynomial vanish on A_Omega in degree n");
    id->add_option("--file", o.file)->required();
    id->add_option("--poly", o.poly)->required();
    id->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    id->add_flag("--nonempty", o.nonempty, "substitute nonempty words only");
    id->callback([&] { action = [&](std::ostream& s) { return cmd_identity(o, s); }; });

    auto* ee = orc->add_subcommand("ee", "is a polynomial an identity of E⊗E");
    ee->add_option("--poly", o.poly)->required();
    ee->add_option("--samples", o.samples, "pairs tested past the exhaustive degree cap");
    ee->callback([&] { action = [&](std::ostream& s) { return cmd_ee(o, s); }; });

    auto* eek = orc->add_subcommand("ee-kernel", "dimension of the degree-d multilinear E⊗E identities");
    eek->add_option("--d", o.d)->required()->check(CLI::NonNegativeNumber);
    eek->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    eek->callback([&] { action = [&](std::ostream& s) { return cmd_ee_kernel(o, s); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action(out);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace partalg::cli
