#include "jhopf/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "jhopf/cohen.hpp"
#include "jhopf/errors.hpp"
#include "jhopf/freealg.hpp"
#include "jhopf/hopfcheck.hpp"
#include "jhopf/modarith.hpp"

namespace jhopf::cli {

namespace {

using hopfcheck::CheckReport;
using hopfcheck::CheckStatus;

struct Options {
    std::int64_t p = 2;
    std::int64_t r = 1;
    std::int64_t t = 0;
    int n = 0;
    int k = 2;
    int dim = 4;
    int degree = 4;
    std::int64_t modulus = 0;
    int trials = 100;
    std::int64_t seed = 0;
    std::string expr;
    std::string word;
    bool json = false;
    std::string out_path;
};

std::string render_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    int passed = 0, failed = 0, skipped = 0;
    for (const CheckReport& r : reports) {
        switch (r.status) {
            case CheckStatus::pass: ++passed; break;
            case CheckStatus::fail: ++failed; break;
            case CheckStatus::skipped: ++skipped; break;
        }
        os << "[" << hopfcheck::to_string(r.status) << "] " << r.check;
        for (const auto& [key, value] : r.params) os << " " << key << "=" << value;
        os << " (" << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms)\n";
        if (r.witness) os << "  witness: " << *r.witness << "\n";
        if (!r.note.empty()) os << "  note: " << r.note << "\n";
    }
    os << "summary: " << passed << " passed, " << failed << " failed, " << skipped
       << " skipped\n";
    return os.str();
}

std::string render_json(const std::vector<CheckReport>& reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        nlohmann::json obj;
        obj["check"] = r.check;
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, value] : r.params) params[key] = value;
        obj["params"] = params;
        obj["status"] = hopfcheck::to_string(r.status);
        if (r.witness)
            obj["witness"] = *r.witness;
        else
            obj["witness"] = nullptr;
        obj["elapsed_ms"] = r.elapsed_ms;
        array.push_back(obj);
    }
    return array.dump(2) + "\n";
}

int render_reports(std::vector<CheckReport> reports, const Options& opt, std::ostream& out,
                   std::ostream& err) {
    hopfcheck::sort_reports(reports);
    const std::string payload = opt.json ? render_json(reports) : render_text(reports);
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << opt.out_path << "' for writing\n";
            return 2;
        }
        file << payload;
        if (!file) {
            err << "error: failed writing '" << opt.out_path << "'\n";
            return 2;
        }
    } else {
        out << payload;
    }
    for (const CheckReport& r : reports)
        if (r.status == CheckStatus::fail) return 1;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convolution calculus on truncated tensor algebras, combinatorial James-Hopf "
                 "maps, and the associated verification suite",
                 "jhopf"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* verify = app.add_subcommand("verify", "Run checks and report pass/fail/skipped");
    verify->require_subcommand(1);
    const auto add_report_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "Emit the report as a JSON array instead of text");
        sub->add_option("--out", opt.out_path, "Write the report to this file instead of stdout");
    };

    CLI::App* v_all = verify->add_subcommand("all", "The full desk-scale verification grid");
    add_report_flags(v_all);

    CLI::App* v_hw = verify->add_subcommand(
        "hopf-whitehead", "Vanishing of the k-th James-Hopf map on the n-fold bracket (k must "
                          "not divide n)");
    v_hw->add_option("--n", opt.n, "Bracket length")->required();
    v_hw->add_option("--k", opt.k, "James-Hopf index")->required();
    add_report_flags(v_hw);

    CLI::App* v_h2 = verify->add_subcommand(
        "h2-beta4", "Compare three expansions of the second James-Hopf map on the 4-fold bracket");
    add_report_flags(v_h2);

    CLI::App* v_power = verify->add_subcommand(
        "power", "Triviality of the p^(r+t)-th convolution power below length p^(t+1) over "
                 "Z/p^r, with sharpness at the previous power");
    v_power->add_option("--p", opt.p, "Prime")->required();
    v_power->add_option("--r", opt.r, "Exponent of the coefficient modulus p^r")->required();
    v_power->add_option("--t", opt.t, "Filtration exponent")->required();
    v_power->add_option("--dim", opt.dim, "Number of generators (at least p^(t+1)-1)")->required();
    add_report_flags(v_power);

    CLI::App* v_obs = verify->add_subcommand(
        "obstruction", "Deviation of the p^(r+t)-th convolution power on the length-p^(t+1) "
                       "word equals a valuation-(r-1) scalar times the trace");
    v_obs->add_option("--p", opt.p, "Prime")->required();
    v_obs->add_option("--r", opt.r, "Exponent of the coefficient modulus p^r")->required();
    v_obs->add_option("--t", opt.t, "Filtration exponent")->required();
    add_report_flags(v_obs);

    CLI::App* v_cmn = verify->add_subcommand(
        "cmn", "lie_trace = trace mod p in degree p^t, and its permutation invariance");
    v_cmn->add_option("--p", opt.p, "Prime")->required();
    v_cmn->add_option("--t", opt.t, "Degree exponent (degree p^t)")->required();
    add_report_flags(v_cmn);

    CLI::App* v_trace = verify->add_subcommand(
        "trace", "Two-sided absorption of random group-algebra elements by the full symmetrizer");
    v_trace->add_option("--n", opt.n, "Arity (1..5)")->required();
    v_trace->add_option("--trials", opt.trials, "Number of random elements")
        ->capture_default_str();
    v_trace->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    add_report_flags(v_trace);

    CLI::App* c_eval = app.add_subcommand(
        "eval", "Parse a tensor-algebra expression and print its canonical form");
    c_eval->add_option("--expr", opt.expr, "Expression, e.g. \"3*x1.x2 - x2.x1 + 1\"")->required();
    c_eval->add_option("--modulus", opt.modulus, "Coefficient modulus, 0 for the integers")
        ->capture_default_str();
    c_eval->add_option("--dim", opt.dim, "Number of generators")->capture_default_str();
    c_eval->add_option("--degree", opt.degree, "Degree bound")->capture_default_str();

    CLI::App* c_hopf = app.add_subcommand(
        "hopf-word", "Apply the combinatorial James-Hopf map to a group word");
    c_hopf->add_option("--word", opt.word, "Group word over x1..xn, e.g. \"[x1,x2]^6\"")
        ->required();
    c_hopf->add_option("--n", opt.n, "Rank of the group")->required();
    c_hopf->add_option("--k", opt.k, "James-Hopf index")->capture_default_str();

    CLI::App* c_rep = app.add_subcommand(
        "represent", "Print the square-zero multilinear representation of a group word");
    c_rep->add_option("--word", opt.word, "Group word; block generators like {x1|x2} when k > 1")
        ->required();
    c_rep->add_option("--n", opt.n, "Rank of the group")->required();
    int rep_k = 1;
    c_rep->add_option("--k", rep_k, "Generator block size")->capture_default_str();
    c_rep->add_option("--modulus", opt.modulus, "Coefficient modulus, 0 for the integers")
        ->capture_default_str();

    CLI::App* c_member = app.add_subcommand(
        "member-hn", "Test whether all face projections of a group word agree");
    c_member->add_option("--word", opt.word, "Group word over x1..xn")->required();
    c_member->add_option("--n", opt.n, "Rank of the group")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (verify->parsed()) {
            std::vector<CheckReport> reports;
            if (v_all->parsed()) {
                reports = hopfcheck::run_all_checks();
            } else if (v_hw->parsed()) {
                reports.push_back(hopfcheck::check_hopf_whitehead_vanishing(opt.n, opt.k));
            } else if (v_h2->parsed()) {
                reports.push_back(hopfcheck::check_h2_beta4());
            } else if (v_power->parsed()) {
                reports.push_back(
                    hopfcheck::check_power_map_triviality(opt.p, opt.r, opt.t, opt.dim));
            } else if (v_obs->parsed()) {
                reports.push_back(hopfcheck::check_obstruction_formula(opt.p, opt.r, opt.t));
            } else if (v_cmn->parsed()) {
                reports.push_back(hopfcheck::check_cmn_congruence(opt.p, opt.t));
            } else if (v_trace->parsed()) {
                reports.push_back(hopfcheck::check_trace_lemmas(
                    opt.n, opt.trials, static_cast<std::uint64_t>(opt.seed)));
            }
            return render_reports(std::move(reports), opt, out, err);
        }
        if (c_eval->parsed()) {
            const freealg::AlgebraContext ctx = freealg::make_context(
                opt.dim, opt.degree, modarith::CoefficientRing(opt.modulus));
            out << freealg::to_string(freealg::parse_element(opt.expr, ctx)) << "\n";
            return 0;
        }
        if (c_hopf->parsed()) {
            const cohen::GroupWord w = cohen::parse_group_word(opt.word, opt.n, 1);
            out << cohen::to_string(cohen::combinatorial_james_hopf(w, opt.k)) << "\n";
            return 0;
        }
        if (c_rep->parsed()) {
            const cohen::GroupWord w = cohen::parse_group_word(opt.word, opt.n, rep_k);
            out << cohen::to_string(
                       cohen::represent(w, modarith::CoefficientRing(opt.modulus)))
                << "\n";
            return 0;
        }
        if (c_member->parsed()) {
            const cohen::GroupWord w = cohen::parse_group_word(opt.word, opt.n, 1);
            out << (cohen::is_in_H_n(w) ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand executed\n";
    return 2;
}

}  // namespace jhopf::cli
