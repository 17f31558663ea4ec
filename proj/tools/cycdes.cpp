// cycdes: command-line harness for cyclic descent statistics.
//
//   cycdes verify <claim-id> [--n A..B] [--J mask] [--all] [--threads N] [--format table|json]
//   cycdes expand <class-spec> [--format table|json]
//   cycdes dist <class-spec> [--track-t] [--format table|json]
//   cycdes map <name> <input> [--j J] [--gamma parts] [--word s1,s2,s1]
//
// Exit codes: 0 pass, 1 any failure, 2 usage error. CYCDES_MAX_N caps n.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"

#include "cycdes/bijections.hpp"
#include "cycdes/class_spec.hpp"
#include "cycdes/distributions.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/verify.hpp"

namespace {

using namespace cycdes;

int max_n_cap() {
    if (const char* env = std::getenv("CYCDES_MAX_N")) {
        int value = std::atoi(env);
        if (value >= 1) return value;
    }
    return 10;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

int cmd_verify(const std::string& claim, const std::string& range, const std::string& j_filter,
               bool all, int threads, const std::string& format) {
    const ClaimInfo* info = find_claim(claim);
    if (!info) {
        std::cerr << "unknown claim id: " << claim << "\nknown claims:\n";
        for (const ClaimInfo& c : claim_registry())
            std::cerr << "  " << c.id << "  (default n " << c.default_lo << ".." << c.default_hi
                      << "): " << c.description << "\n";
        return 2;
    }
    int lo = info->default_lo, hi = info->default_hi;
    if (!range.empty() && !parse_range(range, lo, hi)) {
        std::cerr << "bad --n range: " << range << "\n";
        return 2;
    }
    if (lo < info->min_n || hi > max_n_cap()) {
        std::cerr << "n range " << lo << ".." << hi << " outside [" << info->min_n << ", "
                  << max_n_cap() << "] (raise CYCDES_MAX_N to go higher)\n";
        return 2;
    }

    VerifyOptions options;
    options.threads = threads;
    options.run_all = all;
    if (!j_filter.empty()) options.j_filter = j_filter;

    std::vector<VerificationReport> reports;
    try {
        reports = run_claim(claim, lo, hi, options);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    bool any_fail = false;
    for (const VerificationReport& r : reports) {
        if (!r.pass) any_fail = true;
        if (format == "json") {
            std::cout << r.to_json_line() << "\n";
        } else {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.claim << "  " << r.params_str()
                      << "  (" << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s)";
            if (!r.pass) std::cout << "  " << r.counterexample;
            std::cout << "\n";
        }
    }
    return any_fail ? 1 : 0;
}

int cmd_expand(const std::string& spec, const std::string& format) {
    PermSet a;
    try {
        a = parse_class_spec(spec);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (a.n() > max_n_cap()) {
        std::cerr << "class over S_" << a.n() << " exceeds the cap (raise CYCDES_MAX_N)\n";
        return 2;
    }
    CspResult result = csp_certificate(a);
    if (!result.ok()) {
        std::string tag = result.status == CspResult::Status::not_schur_positive
                              ? "not-Schur-positive"
                              : "not-cDes-invariant";
        if (format == "json") {
            std::cout << "{\"status\":\"" << tag << "\",\"detail\":\"" << result.detail << "\"}\n";
        } else {
            std::cout << "status: " << tag << "\n" << result.detail << "\n";
        }
        return 1;
    }
    const SchurCertificate& cert = *result.certificate;
    if (format == "json") {
        std::cout << cert.to_json() << "\n";
    } else {
        std::cout << "n = " << cert.n << ", |A| = " << a.size() << "\nstraight expansion:\n";
        for (const auto& [lambda, mult] : cert.straight)
            std::cout << "  " << partition_str(lambda) << ": " << mult << "\n";
        std::cout << "cyclic certificate (verified):\n";
        for (const auto& [shape, mult] : cert.cyclic)
            std::cout << "  " << shape.str() << ": " << mult << "\n";
    }
    return 0;
}

int cmd_dist(const std::string& spec, bool track_t, const std::string& format) {
    PermSet a;
    try {
        a = parse_class_spec(spec);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (a.n() > max_n_cap()) {
        std::cerr << "class over S_" << a.n() << " exceeds the cap (raise CYCDES_MAX_N)\n";
        return 2;
    }
    GenDist dist = cdes_dist(a, track_t);
    if (format == "json") {
        std::cout << dist.to_json() << "\n";
    } else {
        std::cout << "n = " << dist.n() << ", total = " << dist.total() << "\n";
        for (const auto& [term, count] : dist.counts()) {
            std::cout << "  " << Mask::from_bits(dist.n(), term.mask_bits).str();
            if (track_t) std::cout << " t^" << term.t;
            std::cout << ": " << count << "\n";
        }
    }
    return 0;
}

int cmd_map(const std::string& name, const std::string& input, int j, const std::string& gamma_text,
            const std::string& word_text) {
    Permutation pi;
    try {
        pi = Permutation::parse(input);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (pi.size() > max_n_cap()) {
        std::cerr << "permutation over S_" << pi.size() << " exceeds the cap (raise CYCDES_MAX_N)\n";
        return 2;
    }
    try {
        if (name == "arcsyt" || name == "arcpermsyt") {
            Tableau t = name == "arcsyt" ? arc_to_syt(pi) : arc_perm_to_syt(pi);
            std::cout << "input:  " << pi.str() << "  cDes " << cdes_set(pi).str() << "\n"
                      << "output: " << t.str() << "  cDes " << cdes_near_hook(t).str() << "\n";
            return 0;
        }
        Permutation out;
        if (name == "psi") {
            if (j < 1) {
                std::cerr << "map psi needs --j\n";
                return 2;
            }
            out = psi_singleton(pi, j);
        } else if (name == "arcphi") {
            out = arc_phi(pi);
        } else if (name == "arcpsi") {
            out = arc_psi(pi);
        } else if (name == "multiphi") {
            if (gamma_text.empty()) {
                std::cerr << "map multiphi needs --gamma\n";
                return 2;
            }
            Composition gamma;
            std::size_t pos = 0;
            while (pos < gamma_text.size()) {
                std::size_t comma = gamma_text.find(',', pos);
                if (comma == std::string::npos) comma = gamma_text.size();
                gamma.parts.push_back(std::stoi(gamma_text.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            std::optional<std::vector<int>> word;
            if (!word_text.empty()) {
                std::vector<int> letters;
                std::size_t p = 0;
                while (p < word_text.size()) {
                    std::size_t comma = word_text.find(',', p);
                    if (comma == std::string::npos) comma = word_text.size();
                    std::string tok = word_text.substr(p, comma - p);
                    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok = tok.substr(1);
                    letters.push_back(std::stoi(tok));
                    p = comma + 1;
                }
                word = letters;
            }
            out = multi_shuffle_phi(pi, gamma, word);
        } else {
            std::cerr << "unknown map: " << name
                      << " (known: psi, arcphi, arcpsi, arcsyt, arcpermsyt, multiphi)\n";
            return 2;
        }
        std::cout << "input:  " << pi.str() << "  cDes " << cdes_set(pi).str() << "\n"
                  << "output: " << out.str() << "  cDes " << cdes_set(out).str() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycdes: cyclic descent statistics on permutations and standard Young tableaux"};
    app.require_subcommand(1);

    std::string claim, range, j_filter, format = "table";
    bool all = false;
    int threads = 1;
    CLI::App* verify = app.add_subcommand("verify", "run a built-in exhaustive check");
    verify->add_option("claim", claim, "claim id (run with an unknown id to list)")->required();
    verify->add_option("--n", range, "n or A..B range (default per claim)");
    verify->add_option("--J", j_filter, "restrict to one descent mask, e.g. {1,2}");
    verify->add_flag("--all", all, "keep sweeping past the first failure");
    verify->add_option("--threads", threads, "parameter cells run in parallel");
    verify->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    std::string spec;
    CLI::App* expand = app.add_subcommand("expand", "Schur expansion and cyclic certificate");
    expand->add_option("class", spec, "class specifier, e.g. VC[Dinv(5,{1,2})]")->required();
    expand->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    std::string dist_spec;
    bool track_t = false;
    CLI::App* dist = app.add_subcommand("dist", "cyclic descent distribution of a class");
    dist->add_option("class", dist_spec, "class specifier")->required();
    dist->add_flag("--track-t", track_t, "also track the position of n");
    dist->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    std::string map_name, map_input, gamma_text, word_text;
    int map_j = 0;
    CLI::App* map = app.add_subcommand("map", "apply one of the explicit bijections");
    map->add_option("name", map_name, "psi | arcphi | arcpsi | arcsyt | arcpermsyt | multiphi")->required();
    map->add_option("input", map_input, "permutation, e.g. 672819435 or 13,6,14,...")->required();
    map->add_option("--j", map_j, "singleton descent for psi");
    map->add_option("--gamma", gamma_text, "composition for multiphi, e.g. 5,6,3");
    map->add_option("--word", word_text, "reduced word for multiphi, e.g. s1,s2,s1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed()) return cmd_verify(claim, range, j_filter, all, threads, format);
    if (expand->parsed()) return cmd_expand(spec, format);
    if (dist->parsed()) return cmd_dist(dist_spec, track_t, format);
    if (map->parsed()) return cmd_map(map_name, map_input, map_j, gamma_text, word_text);
    return 2;
}
