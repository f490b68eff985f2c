#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wgcalc/gram.hpp"
#include "wgcalc/jucys.hpp"
#include "wgcalc/moments.hpp"
#include "wgcalc/montecarlo.hpp"
#include "wgcalc/verify.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc::cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 success, 1 verification failure, 2 bad arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadArguments = 2;

namespace detail {

inline MultiIndex parse_multiindex(const std::string& text) {
    MultiIndex out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            throw std::invalid_argument("multiindex: empty entry in '" + text + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

inline void emit(std::ostream& out, const json& value) { out << value.dump(2) << "\n"; }

inline json rational_table(const ClassFunction& f) {
    json table = json::object();
    for (const auto& [mu, value] : f.values()) table[mu.str()] = value.str();
    return table;
}

inline json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (long r = 0; r < m.order(); ++r) {
        json row = json::array();
        for (long c = 0; c < m.order(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json estimate_json(const Estimate& e) {
    return json{{"mean", {{"re", e.mean.real()}, {"im", e.mean.imag()}}},
                {"se", e.std_error},
                {"samples", e.samples}};
}

}  // namespace detail

/// Runs the command line given argv-style arguments (program name excluded).
/// JSON goes to `out`, human diagnostics to `err`. Exact output is
/// deterministic: identical arguments produce byte-identical JSON.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Exact Haar-measure moments of unitary matrix entries"};
    app.require_subcommand(1);

    // ---- wg ----------------------------------------------------------------
    auto* wg_cmd = app.add_subcommand("wg", "Weingarten function table or single value");
    int wg_n = 0, wg_d = 0;
    std::string wg_class;
    wg_cmd->add_option("--n", wg_n, "weight of the symmetric group")->required();
    wg_cmd->add_option("--d", wg_d, "unitary group dimension")->required();
    wg_cmd->add_option("--class", wg_class,
                       "cycle type, e.g. 2,1 — print only this class");

    // ---- moment ------------------------------------------------------------
    auto* moment_cmd = app.add_subcommand("moment", "Haar moment of an entry monomial");
    std::string m_i, m_j, m_ip, m_jp;
    int m_d = 0;
    moment_cmd->add_option("--i", m_i, "row indices, comma separated");
    moment_cmd->add_option("--j", m_j, "column indices");
    moment_cmd->add_option("--ip", m_ip, "conjugate row indices");
    moment_cmd->add_option("--jp", m_jp, "conjugate column indices");
    moment_cmd->add_option("--d", m_d, "unitary group dimension")->required();

    // ---- trace-moment --------------------------------------------------------
    auto* trace_cmd = app.add_subcommand("trace-moment", "|tr U^k|^{2n} moments");
    int t_n = 0, t_d = 0, t_k = 1;
    trace_cmd->add_option("--n", t_n, "moment order")->required();
    trace_cmd->add_option("--d", t_d, "unitary group dimension")->required();
    trace_cmd->add_option("--k", t_k, "trace power (default 1)");

    // ---- hr ------------------------------------------------------------------
    auto* hr_cmd = app.add_subcommand("hr", "single-row closed-form moment");
    std::string hr_a;
    int hr_d = 0;
    hr_cmd->add_option("--a", hr_a, "composition, e.g. 2,0,1")->required();
    hr_cmd->add_option("--d", hr_d, "unitary group dimension")->required();

    // ---- gram ----------------------------------------------------------------
    auto* gram_cmd = app.add_subcommand("gram", "Gram/Weingarten matrices and checks");
    int g_n = 0, g_d = 0;
    bool g_mp = false, g_rank = false, g_print = false;
    gram_cmd->add_option("--n", g_n, "symmetric group weight")->required();
    gram_cmd->add_option("--d", g_d, "unitary group dimension")->required();
    gram_cmd->add_flag("--verify-mp", g_mp, "check the Moore-Penrose identities");
    gram_cmd->add_flag("--rank", g_rank, "exact rank and nullity of G");
    gram_cmd->add_flag("--print", g_print, "include the G and W matrices");

    // ---- mc ------------------------------------------------------------------
    auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo estimate of a moment");
    std::string mc_i, mc_j, mc_ip, mc_jp;
    int mc_d = 0, mc_trace_n = 0, mc_trace_k = 1;
    long long mc_samples = 100000;
    std::uint64_t mc_seed = 12345;
    bool mc_trace = false;
    mc_cmd->add_option("--i", mc_i, "row indices");
    mc_cmd->add_option("--j", mc_j, "column indices");
    mc_cmd->add_option("--ip", mc_ip, "conjugate row indices");
    mc_cmd->add_option("--jp", mc_jp, "conjugate column indices");
    mc_cmd->add_flag("--trace", mc_trace, "estimate |tr U^k|^{2n} instead");
    mc_cmd->add_option("--trace-n", mc_trace_n, "n for the trace mode");
    mc_cmd->add_option("--trace-k", mc_trace_k, "k for the trace mode (default 1)");
    mc_cmd->add_option("--d", mc_d, "unitary group dimension")->required();
    mc_cmd->add_option("--samples", mc_samples, "sample count (default 100000)");
    mc_cmd->add_option("--seed", mc_seed, "RNG seed (default 12345)");

    // ---- verify ----------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-identity suite");
    int v_n = 4, v_d = 4;
    long long v_mc_samples = 0;
    std::uint64_t v_seed = 42;
    verify_cmd->add_option("--max-n", v_n, "largest weight to check (<= 8)");
    verify_cmd->add_option("--max-d", v_d, "largest dimension to check");
    verify_cmd->add_option("--mc-samples", v_mc_samples,
                           "enable the Monte-Carlo section with this many samples");
    verify_cmd->add_option("--seed", v_seed, "seed for randomized checks (default 42)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }

    try {
        if (*wg_cmd) {
            const ClassFunction& wg = weingarten_class_function(wg_n, wg_d);
            if (wg_class.empty()) {
                detail::emit(out, detail::rational_table(wg));
            } else {
                const Partition mu = Partition::parse(wg_class);
                if (mu.weight() != wg_n)
                    throw std::invalid_argument("--class must be a partition of n");
                detail::emit(out, json(wg.at(mu).str()));
            }
        } else if (*moment_cmd) {
            const MomentQuery q(detail::parse_multiindex(m_i), detail::parse_multiindex(m_j),
                                detail::parse_multiindex(m_ip),
                                detail::parse_multiindex(m_jp), m_d);
            const MomentDetail result = haar_moment_detail(q);
            detail::emit(out, json{{"n", q.n()},
                                   {"n_conj", q.n_conj()},
                                   {"value", result.value.str()},
                                   {"matched_sigma", result.sigma_matches},
                                   {"matched_tau", result.tau_matches}});
        } else if (*trace_cmd) {
            const Rational value = t_k == 1 ? Rational(trace_moment(t_n, t_d))
                                            : trace_power_moment(t_k, t_n, t_d);
            detail::emit(out, json(value.str()));
        } else if (*hr_cmd) {
            const MultiIndex a = detail::parse_multiindex(hr_a);
            std::vector<int> composition(a.begin(), a.end());
            detail::emit(out, json(hewitt_ross_row_moment(composition, hr_d).str()));
        } else if (*gram_cmd) {
            if (g_n < 1 || g_n > kGramCap)
                throw std::length_error("gram: n must lie in 1.." +
                                        std::to_string(kGramCap) + " (matrix is n! x n!)");
            if (g_d < 1) throw std::invalid_argument("gram: d must be >= 1");
            json result = {{"n", g_n}, {"d", g_d}};
            result["order"] = factorial(g_n).get_str();
            if (g_mp) {
                const MoorePenroseReport report = verify_moore_penrose(g_n, g_d);
                result["GWG=G"] = report.gwg_equals_g;
                result["WGW=W"] = report.wgw_equals_w;
                result["(WG)*=WG"] = report.wg_self_adjoint;
                result["(GW)*=GW"] = report.gw_self_adjoint;
                if (report.inverse_checked) result["W=G^-1"] = report.inverse_holds;
            }
            if (g_rank) {
                const auto [rank, nullity] = rank_and_nullity(g_n, g_d);
                result["rank"] = rank;
                result["nullity"] = nullity;
            }
            if (g_print) {
                result["G"] = detail::matrix_json(gram_matrix(g_n, g_d));
                result["W"] = detail::matrix_json(weingarten_matrix(g_n, g_d));
            }
            detail::emit(out, result);
        } else if (*mc_cmd) {
            GaussianStream stream(mc_seed);
            Estimate estimate;
            if (mc_trace) {
                if (mc_trace_n < 1)
                    throw std::invalid_argument("--trace requires --trace-n >= 1");
                estimate = estimate_trace_power_moment(mc_trace_k, mc_trace_n, mc_d,
                                                       mc_samples, stream);
            } else {
                const MomentQuery q(detail::parse_multiindex(mc_i),
                                    detail::parse_multiindex(mc_j),
                                    detail::parse_multiindex(mc_ip),
                                    detail::parse_multiindex(mc_jp), mc_d);
                estimate = estimate_moment(q, mc_samples, stream);
            }
            detail::emit(out, detail::estimate_json(estimate));
        } else if (*verify_cmd) {
            if (v_n < 1 || v_n > group_cap()) {
                err << "error: --max-n must lie in 1.." << group_cap()
                    << " (group enumeration cap)\n";
                return kExitBadArguments;
            }
            if (v_d < 1) {
                err << "error: --max-d must be >= 1\n";
                return kExitBadArguments;
            }

            std::vector<CheckResult> results;
            results.push_back(check_dual_construction(std::min(v_n, 6), std::min(v_d, 6)));
            results.push_back(check_gram_moore_penrose(std::min(v_n, kGramCap),
                                                       std::min(v_d, kGramCap)));
            results.push_back(check_weingarten_sum(v_n, std::min(v_d, 10)));
            results.push_back(check_hewitt_ross(std::min(v_n, 5), std::min(v_d, 4)));
            results.push_back(check_trace_moments(std::min(v_n, 6), std::min(v_d, 6)));
            results.push_back(check_jucys_identities(std::min(v_n, 6), std::min(v_d, 6)));
            results.push_back(check_rank_nullity(std::min(v_n, kGramCap),
                                                 std::min(v_d, kGramCap)));
            results.push_back(check_diaconis_evans(std::min(v_n, 4), std::min(v_d, 4)));
            results.push_back(check_symmetry_suite(v_n, v_d, 200, v_seed));
            results.push_back(check_invariant_hermitian(std::min(v_n, 3), std::min(v_d, 4)));
            if (v_mc_samples > 0) {
                const auto mc = check_monte_carlo(v_mc_samples, v_seed);
                results.insert(results.end(), mc.begin(), mc.end());
            }

            bool all_pass = true;
            json checks = json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                checks.push_back(
                    {{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
                err << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.details
                    << "\n";
            }
            detail::emit(out, json{{"pass", all_pass}, {"checks", checks}});
            return all_pass ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    return kExitOk;
}

}  // namespace wgcalc::cli
