#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqs/f_family.hpp"
#include "dqs/matrix_system.hpp"
#include "dqs/report_json.hpp"
#include "dqs/verifier.hpp"

namespace {

using dqs::ConfigEcho;
using dqs::Rational;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int emit_checks(const std::vector<dqs::CheckReport>& checks, const std::string& format,
                const ConfigEcho& config) {
    if (format == "json")
        std::cout << dqs::render_report_json(checks, config);
    else if (format == "csv")
        std::cout << dqs::render_report_csv(checks);
    else
        std::cout << dqs::render_report_table(checks);
    for (const auto& c : checks)
        if (!c.pass) return kExitCheckFailed;
    return kExitPass;
}

struct EvalArgs {
    unsigned l = 0, k = 1, nu = 0;
    std::string z = "2";
    unsigned prec = 192;
    long T = 0;  // 0: default 2 nu + 40
    std::string format = "human";
};

int run_eval(const EvalArgs& a) {
    dqs::FamilyIndex idx(a.l, a.k, a.nu);
    const long T = a.T > 0 ? a.T : dqs::default_truncation(a.nu);
    auto [re, im] = dqs::parse_complex(a.z);
    const dqs::Precision prec(a.prec);

    dqs::LogSeries f = dqs::build_f(idx, T);
    dqs::EvalPoint pt = (a.k == 1) ? dqs::EvalPoint::for_polynomial(re, im, prec)
                                   : dqs::EvalPoint::make(re, im, prec);
    double tail = 0.0;
    if (a.k != 1) {
        const dqs::CBall lg = dqs::log_paper(re, im, prec);
        const double z2 = re.abs_double_upper() * re.abs_double_upper() +
                          im.abs_double_upper() * im.abs_double_upper();
        const double z_lo = std::sqrt(z2) * (1.0 - 1e-9);
        tail = dqs::y_entry_tail_bound(a.l, a.k, a.nu, 1, T + 1, z_lo, lg.abs_upper());
    }
    const dqs::CBall v = dqs::ls_eval(f, pt, dqs::TailBound(tail));

    ConfigEcho cfg = {{"command", "eval"},      {"l", std::to_string(a.l)},
                      {"k", std::to_string(a.k)}, {"nu", std::to_string(a.nu)},
                      {"z", a.z},               {"prec", std::to_string(a.prec)},
                      {"T", std::to_string(T)}, {"format", a.format}};
    if (a.format == "json") {
        nlohmann::json root;
        root["version"] = dqs::kArtifactVersion;
        nlohmann::json c = nlohmann::json::object();
        for (const auto& [k2, v2] : cfg) c[k2] = v2;
        root["config"] = c;
        root["value"] = {{"re", v.re_str()}, {"im", v.im_str()}, {"radius", dqs::double_str(v.radius())}};
        std::cout << root.dump(2) << "\n";
    } else {
        std::printf("f[l=%u,k=%u](z=%s, nu=%u) = %s + %s i\n", a.l, a.k, a.z.c_str(), a.nu,
                    v.re_str().c_str(), v.im_str().c_str());
        std::printf("error radius <= %s\n", dqs::double_str(v.radius()).c_str());
    }
    return kExitPass;
}

struct IdentityArgs {
    int l = -1;  // -1: all
    std::string format = "human";
};

int run_identities(const IdentityArgs& a) {
    std::vector<dqs::CheckReport> checks;
    std::vector<unsigned> ls = a.l < 0 ? std::vector<unsigned>{0, 1, 2}
                                       : std::vector<unsigned>{static_cast<unsigned>(a.l)};
    for (unsigned l : ls) {
        auto t0 = std::chrono::steady_clock::now();
        dqs::IdentityReport rep = dqs::check_identities(l);
        for (const auto& c : rep.checks) {
            dqs::CheckReport r;
            r.check_id = "identities:l=" + std::to_string(l) + ":" + c.id;
            r.params = {{"l", std::to_string(l)}};
            r.pass = c.pass;
            r.detail = c.witness;
            r.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count() /
                static_cast<double>(rep.checks.size());
            checks.push_back(std::move(r));
        }
    }
    ConfigEcho cfg = {{"command", "verify identities"},
                      {"l", a.l < 0 ? std::string("all") : std::to_string(a.l)},
                      {"format", a.format}};
    return emit_checks(checks, a.format, cfg);
}

struct RecurrenceArgs {
    int l = -1;
    int k = -1;
    unsigned nu_min = 2, nu_max = 12;
    std::string mode = "exact";
    std::string z = "2";
    unsigned prec = 192;
    long T = 0;
    unsigned jobs = 1;
    std::string format = "human";
};

int run_recurrence(const RecurrenceArgs& a) {
    dqs::SweepConfig cfg;
    if (a.l >= 0) cfg.ls = {static_cast<unsigned>(a.l)};
    if (a.k >= 0) cfg.k = static_cast<unsigned>(a.k);
    cfg.nu_min = a.nu_min;
    cfg.nu_max = a.nu_max;
    cfg.jobs = a.jobs;
    if (a.T > 0) cfg.T = a.T;
    if (a.mode == "numeric") {
        cfg.numeric = true;
        auto [re, im] = dqs::parse_complex(a.z);
        cfg.pt = dqs::EvalPoint::make(re, im, dqs::Precision(a.prec));
    } else if (a.mode != "exact") {
        throw std::invalid_argument("mode must be exact or numeric");
    }
    // validate the (l, k) pairs up front so bad combinations are usage errors
    for (unsigned l : cfg.ls)
        if (cfg.k) dqs::FamilyIndex check(l, *cfg.k, std::max(1u, cfg.nu_min));

    std::vector<dqs::CheckReport> checks = dqs::sweep(cfg);
    ConfigEcho echo = {{"command", "verify recurrence"},
                       {"l", a.l < 0 ? std::string("all") : std::to_string(a.l)},
                       {"k", a.k < 0 ? std::string("all") : std::to_string(a.k)},
                       {"nu_min", std::to_string(a.nu_min)},
                       {"nu_max", std::to_string(a.nu_max)},
                       {"mode", a.mode},
                       {"T", a.T > 0 ? std::to_string(a.T) : std::string("default")},
                       {"jobs", std::to_string(a.jobs)},
                       {"format", a.format}};
    if (a.mode == "numeric") {
        echo.emplace_back("z", a.z);
        echo.emplace_back("prec", std::to_string(a.prec));
    }
    return emit_checks(checks, a.format, echo);
}

struct DumpMatricesArgs {
    int l = 0;
    std::string format = "human";
};

int run_dump_matrices(const DumpMatricesArgs& a) {
    if (a.l < 0 || a.l > 2) throw std::out_of_range("l in {0,1,2} required");
    const unsigned l = static_cast<unsigned>(a.l);
    const dqs::MatrixSet mats = dqs::canonical_matrices(l);
    auto entry_str = [](const dqs::PolyMatrix& m, unsigned r, unsigned c) {
        return m.at(r, c).z_coeff(0).str();
    };
    if (a.format == "json") {
        nlohmann::json root;
        root["version"] = dqs::kArtifactVersion;
        root["l"] = l;
        auto mat_json = [&](const dqs::PolyMatrix& m) {
            nlohmann::json rows = nlohmann::json::array();
            for (unsigned r = 0; r < m.dim(); ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (unsigned c = 0; c < m.dim(); ++c) row.push_back(entry_str(m, r, c));
                rows.push_back(row);
            }
            return rows;
        };
        root["s"] = mat_json(mats.s);
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : mats.v) vs.push_back(mat_json(v));
        root["v"] = vs;
        std::cout << root.dump(2) << "\n";
    } else {
        const bool csv = a.format == "csv";
        auto put = [&](const dqs::PolyMatrix& m, const std::string& name) {
            if (!csv) std::cout << name << ":\n";
            for (unsigned r = 0; r < m.dim(); ++r) {
                for (unsigned c = 0; c < m.dim(); ++c) {
                    if (c) std::cout << (csv ? "," : " ");
                    if (!csv) std::printf("%6s", entry_str(m, r, c).c_str());
                    else std::cout << entry_str(m, r, c);
                }
                std::cout << "\n";
            }
            if (!csv) std::cout << "\n";
        };
        put(mats.s, "S_" + std::to_string(l));
        for (unsigned i = 0; i < mats.v.size(); ++i)
            put(mats.v[i], "V_" + std::to_string(l) + "(" + std::to_string(i) + ")");
    }
    return kExitPass;
}

struct DumpTableArgs {
    int l = 0;
    unsigned nu_max = 8;
    std::string format = "human";
};

int run_dump_table(const DumpTableArgs& a) {
    if (a.l < 0 || a.l > 2) throw std::out_of_range("l in {0,1,2} required");
    const unsigned l = static_cast<unsigned>(a.l);
    std::vector<Rational> vals;
    for (unsigned nu = 0; nu <= a.nu_max; ++nu) {
        dqs::LogSeries f = dqs::build_f1(l, nu);
        Rational v(0);
        for (int e = f.e_min(); e <= f.e_max(); ++e) v += f.coeff(0, e).coeff(0);
        vals.push_back(v);
    }
    if (a.format == "json") {
        nlohmann::json root;
        root["version"] = dqs::kArtifactVersion;
        root["l"] = l;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : vals) arr.push_back(v.str());
        root["values"] = arr;
        std::cout << root.dump(2) << "\n";
    } else if (a.format == "csv") {
        std::cout << "nu,value\n";
        for (unsigned nu = 0; nu < vals.size(); ++nu)
            std::cout << nu << "," << vals[nu].str() << "\n";
    } else {
        for (size_t i = 0; i < vals.size(); ++i)
            std::cout << (i ? ", " : "") << vals[i].str();
        std::cout << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructs a family of Apery-type log-power series exactly over the rationals "
                 "and verifies the matrix difference-equation system they satisfy"};
    app.set_config("--config", "", "key=value defaults file (also via DQS_CONFIG)")
        ->envname("DQS_CONFIG");
    app.require_subcommand(1);

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a family function at an exact point");
    eval->add_option("--l", ev.l, "family level l in {0,1,2}")->required();
    eval->add_option("--k", ev.k, "family member k in K_l")->required();
    eval->add_option("--nu", ev.nu, "parameter nu >= 0")->required();
    eval->add_option("--z", ev.z, "exact complex point, e.g. -3 or 3/2+1/2i")->required();
    eval->add_option("--prec", ev.prec, "working precision in bits (>= 64)");
    eval->add_option("--T", ev.T, "truncation depth (default 2 nu + 40)");
    eval->add_option("--format", ev.format, "human|json")->check(CLI::IsMember({"human", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    verify->require_subcommand(1);

    IdentityArgs id;
    CLI::App* vid = verify->add_subcommand("identities", "the four structural matrix identities");
    vid->add_option("--l", id.l, "restrict to one family level");
    vid->add_option("--format", id.format, "human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    RecurrenceArgs rec;
    CLI::App* vrec = verify->add_subcommand("recurrence", "the difference-equation system");
    vrec->add_option("--l", rec.l, "restrict to one family level");
    vrec->add_option("--k", rec.k, "restrict to one family member");
    vrec->add_option("--nu-min", rec.nu_min, "first nu (>= 2)");
    vrec->add_option("--nu-max", rec.nu_max, "last nu");
    vrec->add_option("--mode", rec.mode, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    vrec->add_option("--z", rec.z, "evaluation point for numeric mode");
    vrec->add_option("--prec", rec.prec, "precision bits for numeric mode");
    vrec->add_option("--T", rec.T, "truncation depth (default 2 nu + 40)");
    vrec->add_option("--jobs", rec.jobs, "parallel sweep workers");
    vrec->add_option("--format", rec.format, "human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    CLI::App* dump = app.add_subcommand("dump", "print constants and tables");
    dump->require_subcommand(1);

    DumpMatricesArgs dm;
    CLI::App* dmat = dump->add_subcommand("matrices", "the recurrence constant matrices");
    dmat->add_option("--l", dm.l, "family level")->required();
    dmat->add_option("--format", dm.format, "human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    DumpTableArgs dt;
    CLI::App* dtab = dump->add_subcommand("table", "f_{l,1}(1, nu) for nu = 0..nu-max");
    dtab->add_option("--l", dt.l, "family level")->required();
    dtab->add_option("--nu-max", dt.nu_max, "largest nu");
    dtab->add_option("--format", dt.format, "human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(ev);
        if (vid->parsed()) return run_identities(id);
        if (vrec->parsed()) return run_recurrence(rec);
        if (dmat->parsed()) return run_dump_matrices(dm);
        if (dtab->parsed()) return run_dump_table(dt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
