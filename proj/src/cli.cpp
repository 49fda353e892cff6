#include "kloo/cli.hpp"

#include <CLI11.hpp>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>

#include "kloo/errors.hpp"
#include "kloo/identities.hpp"
#include "kloo/serial.hpp"
#include "kloo/verify.hpp"

namespace kloo {

namespace {

struct Cfg {
    int r = 0;
    std::uint64_t q = 0;
    std::string modulus;
    int h_max = 9;
    std::string format = "table";
    std::string out_path;
    std::uint64_t seed_order = 0;
    bool cross_check = false;
    bool full = false;
    int j_max = 9;
    std::string code;  // "", "o3", "sp2"
    std::string sweep;
    std::vector<std::string> only;
    std::string inject_fault;
};

Fe parse_modulus(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos, 0);  // base 0: accepts 0x-prefixed hex or decimal
    } catch (const std::exception&) {
        throw ConfigError("cannot parse modulus: " + s);
    }
    if (pos != s.size() || v == 0 || v > 0xffffffffull)
        throw ConfigError("cannot parse modulus: " + s);
    return static_cast<Fe>(v);
}

int degree_from(const Cfg& cfg) {
    if (cfg.r && cfg.q) throw ConfigError("give --r or --q, not both");
    if (cfg.r) return cfg.r;
    if (cfg.q) {
        if (cfg.q < 2 || (cfg.q & (cfg.q - 1)) != 0)
            throw ConfigError("q must be a power of 2, got " + std::to_string(cfg.q));
        return std::bit_width(cfg.q) - 1;
    }
    throw ConfigError("missing --r or --q");
}

FieldCtx make_field(const Cfg& cfg, int r_cap, const char* what) {
    int r = degree_from(cfg);
    if (r > r_cap)
        throw SizeError(std::string(what) + " supports r <= " + std::to_string(r_cap) +
                        ", got r=" + std::to_string(r));
    if (!cfg.modulus.empty()) return FieldCtx(r, parse_modulus(cfg.modulus));
    return FieldCtx(r);
}

std::vector<int> parse_sweep(const std::string& s) {
    std::vector<int> out;
    auto push = [&out](int v) {
        for (int x : out)
            if (x == v) return;
        out.push_back(v);
    };
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ConfigError("empty sweep entry in: " + s);
        std::size_t dots = tok.find("..");
        try {
            if (dots == std::string::npos) {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                push(v);
            } else {
                std::size_t pa = 0, pb = 0;
                std::string sa = tok.substr(0, dots), sb = tok.substr(dots + 2);
                int a = std::stoi(sa, &pa), b = std::stoi(sb, &pb);
                if (pa != sa.size() || pb != sb.size() || a > b)
                    throw std::invalid_argument(tok);
                for (int v = a; v <= b; ++v) push(v);
            }
        } catch (const std::exception&) {
            throw ConfigError("cannot parse sweep entry: " + tok);
        }
    }
    if (out.empty()) throw ConfigError("empty sweep: " + s);
    return out;
}

void write_out(const Cfg& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output path: " + cfg.out_path);
    f << text;
    if (!f.good()) throw ConfigError("failed writing output path: " + cfg.out_path);
}

std::string render(const Cfg& cfg, const Json& doc, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows,
                   const std::string& table_tail = "") {
    if (cfg.format == "json") return doc.dump(2) + "\n";
    if (cfg.format == "csv") return render_csv(header, rows);
    return render_table(header, rows) + table_tail;
}

int cmd_kloosterman(const Cfg& cfg, std::ostream& out) {
    FieldCtx F = make_field(cfg, 12, "kloosterman");
    KloostermanTable kt(F);

    Json doc = json_document("kloosterman");
    doc["field"] = json_of(F.spec());
    Json jrows = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (Fe a = 1; a < F.q(); ++a) {
        Json jr;
        jr["a"] = a;
        jr["trace"] = F.trace(a);
        jr["k"] = kt.at(a);
        jrows.push_back(std::move(jr));
        rows.push_back({std::to_string(a), poly_to_string(a), std::to_string(F.trace(a)),
                        std::to_string(kt.at(a))});
    }
    doc["rows"] = std::move(jrows);
    write_out(cfg, out, render(cfg, doc, {"a", "poly", "trace", "k"}, rows));
    return 0;
}

int cmd_moments(const Cfg& cfg, std::ostream& out) {
    FieldCtx F = make_field(cfg, 12, "moments");
    if (cfg.h_max < 0 || cfg.h_max > kMaxMomentExponent)
        throw ConfigError("hmax must be in [0, " + std::to_string(kMaxMomentExponent) + "]");
    MomentTable table = moments(F, cfg.h_max);

    std::string tail;
    Json doc = json_document("moments");
    doc["field"] = json_of(F.spec());
    Json jm = json_of(table);
    for (auto& [key, value] : jm.items()) doc[key] = value;
    if (cfg.cross_check) {
        if (F.r() > 6) throw ConfigError("cross-check supports r <= 6");
        if (cfg.h_max > kMaxRecursionExponent)
            throw ConfigError("cross-check needs hmax <= " +
                              std::to_string(kMaxRecursionExponent));
        std::vector<mpz_class> rec = mk_recursion(F, cfg.h_max);
        for (int h = 0; h <= cfg.h_max; ++h)
            if (rec[h] != table.mk[h])
                throw IdentityViolation("MK recursion vs direct moments (h=" +
                                            std::to_string(h) + ")",
                                        rec[h].get_str(), table.mk[h].get_str());
        doc["cross_check"] = "pass";
        tail = "cross-check pass: MK recursion agrees for h <= " + std::to_string(cfg.h_max) +
               "\n";
    }

    std::vector<std::vector<std::string>> rows;
    for (int h = 0; h <= table.h_max(); ++h)
        rows.push_back({std::to_string(h), table.mk[h].get_str(), table.t0k[h].get_str(),
                        table.t1k[h].get_str()});
    write_out(cfg, out, render(cfg, doc, {"h", "mk", "t0k", "t1k"}, rows, tail));
    return 0;
}

int cmd_gauss(const Cfg& cfg, std::ostream& out) {
    FieldCtx F = make_field(cfg, 8, "gauss");
    TraceDistribution o3 = trace_distribution(F, GroupCode::O3);
    TraceDistribution sp = trace_distribution(F, GroupCode::Sp2);
    KloostermanTable kt(F);

    Json doc = json_document("gauss");
    doc["field"] = json_of(F.spec());
    Json jrows = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (Fe a = 1; a < F.q(); ++a) {
        // both enumerated sums are checked against their closed forms inside
        std::int64_t go3 = gauss_sum_bruteforce(F, o3, a);
        std::int64_t gsp = gauss_sum_bruteforce(F, sp, a);
        Json jr;
        jr["a"] = a;
        jr["k"] = kt.at(a);
        jr["o3"] = go3;
        jr["sp2"] = gsp;
        jrows.push_back(std::move(jr));
        rows.push_back({std::to_string(a), std::to_string(kt.at(a)), std::to_string(go3),
                        std::to_string(gsp)});
    }
    doc["rows"] = std::move(jrows);
    write_out(cfg, out, render(cfg, doc, {"a", "k", "o3", "sp2"}, rows));
    return 0;
}

int cmd_weights(const Cfg& cfg, std::ostream& out) {
    FieldCtx F = make_field(cfg, 6, "weights");
    if (!cfg.full && (cfg.j_max < 0 || cfg.j_max > kMaxTruncatedDegree))
        throw ConfigError("jmax must be in [0, " + std::to_string(kMaxTruncatedDegree) + "]");
    const int j_arg = cfg.full ? kFullDistribution : cfg.j_max;

    std::vector<GroupCode> codes;
    if (cfg.code.empty() || cfg.code == "o3") codes.push_back(GroupCode::O3);
    if (cfg.code.empty() || cfg.code == "sp2") codes.push_back(GroupCode::Sp2);
    const bool both = codes.size() == 2;

    Json doc = json_document("weights");
    doc["field"] = json_of(F.spec());
    doc["mode"] = cfg.full ? "full" : "truncated";

    std::map<GroupCode, std::map<std::int64_t, std::int64_t>> spectra;
    std::map<GroupCode, WeightDistribution> dists;
    Json jcodes = Json::object();
    for (GroupCode which : codes) {
        if (cfg.seed_order) {
            TraceVector tv = build_trace_vector(F, which, cfg.seed_order);
            spectra[which] = dual_weight_spectrum(F, tv);
        } else {
            spectra[which] = dual_weight_spectrum(F, which);
        }
        dists[which] = weight_distribution_dp(F, which, j_arg);
        Json jc;
        jc["dual_spectrum"] = json_of(spectra[which]);
        jc["distribution"] = json_of(dists[which]);
        jcodes[group_code_name(which)] = std::move(jc);
    }
    doc["codes"] = std::move(jcodes);
    doc["n"] = dists[codes[0]].n;

    std::vector<mpz_class> d;
    if (both) {
        const int j_hi = dists[GroupCode::O3].j_max();
        Json jd = Json::array();
        for (int j = 0; j <= j_hi; ++j) {
            d.push_back(dists[GroupCode::O3].counts[j] - dists[GroupCode::Sp2].counts[j]);
            jd.push_back(d.back().get_str());
        }
        doc["d"] = std::move(jd);
    }

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    if (both) {
        header = {"section", "index", "o3", "sp2", "d"};
        std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> dual;
        for (const auto& [w, c] : spectra[GroupCode::O3]) dual[w].first = c;
        for (const auto& [w, c] : spectra[GroupCode::Sp2]) dual[w].second = c;
        for (const auto& [w, pair] : dual)
            rows.push_back({"dual", std::to_string(w), std::to_string(pair.first),
                            std::to_string(pair.second), ""});
        for (std::size_t j = 0; j < d.size(); ++j)
            rows.push_back({"weight", std::to_string(j),
                            dists[GroupCode::O3].counts[j].get_str(),
                            dists[GroupCode::Sp2].counts[j].get_str(), d[j].get_str()});
    } else {
        header = {"section", "index", "count"};
        for (const auto& [w, c] : spectra[codes[0]])
            rows.push_back({"dual", std::to_string(w), std::to_string(c)});
        const WeightDistribution& wd = dists[codes[0]];
        for (int j = 0; j <= wd.j_max(); ++j)
            rows.push_back({"weight", std::to_string(j), wd.counts[j].get_str()});
    }
    write_out(cfg, out, render(cfg, doc, header, rows));
    return 0;
}

int cmd_verify(const Cfg& cfg, std::ostream& out) {
    VerifyOptions opt;
    if (!cfg.sweep.empty())
        opt.sweep = parse_sweep(cfg.sweep);
    else if (cfg.r || cfg.q)
        opt.sweep = {degree_from(cfg)};
    opt.h_max = cfg.h_max;
    opt.only = cfg.only;
    opt.inject_fault = cfg.inject_fault;
    if (!opt.only.empty() && opt.h_max % 2 == 0)
        for (const std::string& name : opt.only)
            if (name == "trace-one-recursion")
                throw ConfigError("trace-one-recursion requires an odd hmax");

    VerificationReport report = run_checks(opt);

    Json doc = json_document("verify");
    Json jr = json_of(report);
    for (auto& [key, value] : jr.items()) doc[key] = value;
    std::vector<std::vector<std::string>> rows;
    for (const CheckResult& row : report.rows)
        rows.push_back({std::to_string(row.r), row.check, row.pass ? "pass" : "FAIL",
                        row.detail});
    std::string tail = report.all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
    write_out(cfg, out, render(cfg, doc, {"r", "check", "status", "detail"}, rows, tail));
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("kloo");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Cfg cfg;
    CLI::App app{"exact Kloosterman sums, group character sums, and code weight"
                 " distributions over GF(2^r), with a self-verification suite"};
    app.require_subcommand(1);

    auto add_field = [&cfg](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "field degree r (q = 2^r)")->check(CLI::Range(1, 16));
        sub->add_option("--q", cfg.q, "field size q (power of 2)");
        sub->add_option("--modulus", cfg.modulus,
                        "irreducible modulus, hex (e.g. 0x13) or decimal");
    };
    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--out", cfg.out_path, "write output to this path instead of stdout");
        sub->add_option("--seed-order", cfg.seed_order,
                        "shuffle the group enumeration order (results must not change)");
    };

    CLI::App* c_klo = app.add_subcommand("kloosterman", "table of (a, tr a, K(lambda;a))");
    add_field(c_klo);
    add_output(c_klo);

    CLI::App* c_mom = app.add_subcommand("moments", "power moments MK/T0K/T1K up to hmax");
    add_field(c_mom);
    add_output(c_mom);
    c_mom->add_option("--hmax", cfg.h_max, "largest exponent h");
    c_mom->add_flag("--cross-check", cfg.cross_check,
                    "also recompute MK via the weight-coefficient recursion and compare");

    CLI::App* c_gau = app.add_subcommand("gauss", "group character sums vs closed forms");
    add_field(c_gau);
    add_output(c_gau);

    CLI::App* c_wts = app.add_subcommand(
        "weights", "dual spectra and (truncated or full) weight distributions with D_j");
    add_field(c_wts);
    add_output(c_wts);
    CLI::Option* o_full = c_wts->add_flag("--full", cfg.full, "all N+1 coefficients");
    CLI::Option* o_jmax =
        c_wts->add_option("--jmax", cfg.j_max, "truncate the distribution at this degree");
    o_full->excludes(o_jmax);
    c_wts->add_option("--code", cfg.code, "restrict to one code")
        ->check(CLI::IsMember({"o3", "sp2"}));

    CLI::App* c_ver = app.add_subcommand("verify", "run named consistency checks");
    add_field(c_ver);
    add_output(c_ver);
    c_ver->add_option("--hmax", cfg.h_max, "largest exponent for moment checks");
    c_ver->add_option("--sweep", cfg.sweep, "field degrees, e.g. 2,3,4 or 2..10");
    c_ver->add_option("--only", cfg.only, "run only these checks (repeatable)")
        ->delimiter(',');
    c_ver->add_option("--inject-fault", cfg.inject_fault,
                      "test hook: corrupt the named check's input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_klo->parsed()) return cmd_kloosterman(cfg, out);
        if (c_mom->parsed()) return cmd_moments(cfg, out);
        if (c_gau->parsed()) return cmd_gauss(cfg, out);
        if (c_wts->parsed()) return cmd_weights(cfg, out);
        if (c_ver->parsed()) return cmd_verify(cfg, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const IdentityViolation& e) {
        err << "identity violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kloo
