#include "catpoly/cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "catpoly/caterpillar.hpp"
#include "catpoly/factorization.hpp"
#include "catpoly/json_io.hpp"
#include "catpoly/polynomial.hpp"
#include "catpoly/tree.hpp"
#include "catpoly/verify.hpp"
#include "env_caps.hpp"

namespace catpoly::cli {

namespace {

Tree load_tree(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tree file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    ParsedTree parsed = parse_tree(buf.str());
    for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
    return parsed.tree;
}

void emit_partition_polynomial(const PartitionPolynomial& p, const std::string& format,
                               std::ostream& out) {
    if (format == "json")
        out << json_text(to_json(p)) << "\n";
    else
        out << p.to_text() << "\n";
}

void emit_composition_list(const std::vector<Composition>& list, const std::string& format,
                           std::ostream& out) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["class"] = nlohmann::ordered_json::array();
        for (const auto& c : list) j["class"].push_back(to_json(c));
        out << json_text(j) << "\n";
    } else {
        for (const auto& c : list) out << to_text(c) << "\n";
    }
}

std::shared_ptr<std::string> add_format(CLI::App* cmd) {
    auto fmt = std::make_shared<std::string>("text");
    cmd->add_option("--format", *fmt, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    return fmt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Composition algebra, caterpillar trees, and their polynomials"};
    app.require_subcommand(1);
    int rc = 0;

    // Option storage shared across subcommands; each callback reads only the
    // fields its own subcommand registered.
    auto comp_text = std::make_shared<std::string>();
    auto tree_path = std::make_shared<std::string>();
    auto alpha_text = std::make_shared<std::string>();
    auto beta_text = std::make_shared<std::string>();
    auto gamma_text = std::make_shared<std::string>();
    auto exhaustive = std::make_shared<bool>(false);
    auto force = std::make_shared<bool>(false);
    auto normalize = std::make_shared<bool>(false);
    auto include_y = std::make_shared<bool>(false);
    auto jobs = std::make_shared<int>(1);
    auto param_n = std::make_shared<int>(0);
    auto count = std::make_shared<int>(200);
    auto max_size = std::make_shared<long long>(30);
    auto seed = std::make_shared<unsigned long long>(123456789ULL);
    auto check_name = std::make_shared<std::string>();

    auto tree_or_composition = [&](CLI::App* cmd) {
        cmd->add_option("--tree,-t", *tree_path, "Edge-list file, one \"u v\" pair per line");
        cmd->add_option("--composition,-c", *comp_text,
                        "Spine-weight composition, e.g. \"2,3\" (parts >= 2)");
    };
    auto pick_tree = [&, tree_path, comp_text]() {
        if (tree_path->empty() == comp_text->empty())
            throw std::invalid_argument("pass exactly one of --tree and --composition");
        if (!tree_path->empty()) return load_tree(*tree_path, err);
        return psi(parse_composition(*comp_text));
    };

    auto* lpoly = app.add_subcommand("lpoly", "L-polynomial of a composition");
    lpoly->add_option("--composition,-c", *comp_text, "Composition, e.g. \"2,5,3\"")->required();
    auto lpoly_fmt = add_format(lpoly);
    lpoly->callback([&, comp_text, lpoly_fmt] {
        emit_partition_polynomial(l_polynomial(parse_composition(*comp_text)), *lpoly_fmt, out);
    });

    auto* upoly = app.add_subcommand("upoly", "Tree polynomial (sum over all edge subsets)");
    tree_or_composition(upoly);
    auto upoly_fmt = add_format(upoly);
    upoly->callback([&, upoly_fmt] {
        emit_partition_polynomial(u_polynomial_tree(pick_tree()), *upoly_fmt, out);
    });

    auto* ulpoly = app.add_subcommand(
        "ulpoly", "Caterpillar polynomial restricted to subsets containing every leaf edge");
    tree_or_composition(ulpoly);
    auto ulpoly_fmt = add_format(ulpoly);
    ulpoly->callback([&, ulpoly_fmt] {
        emit_partition_polynomial(u_restricted(pick_tree()), *ulpoly_fmt, out);
    });

    auto* factor = app.add_subcommand("factor", "Irreducible factorization under ∘");
    factor->add_option("--composition,-c", *comp_text, "Composition to factor")->required();
    auto factor_fmt = add_format(factor);
    factor->callback([&, comp_text, factor_fmt] {
        auto factors = irreducible_factorization(parse_composition(*comp_text));
        if (*factor_fmt == "json") {
            nlohmann::ordered_json j;
            j["factors"] = nlohmann::ordered_json::array();
            for (const auto& f : factors) j["factors"].push_back(to_json(f));
            out << json_text(j) << "\n";
        } else {
            std::string line;
            for (const auto& f : factors) {
                if (!line.empty()) line += " ∘ ";
                line += "(" + to_text(f) + ")";
            }
            out << line << "\n";
        }
    });

    auto* sym = app.add_subcommand("sym",
                                   "Compositions reachable by reversing irreducible factors");
    sym->add_option("--composition,-c", *comp_text, "Composition")->required();
    auto sym_fmt = add_format(sym);
    sym->callback([&, comp_text, sym_fmt] {
        auto cls = sym_class(parse_composition(*comp_text));
        emit_composition_list(std::vector<Composition>(cls.begin(), cls.end()), *sym_fmt, out);
    });

    auto* lclass = app.add_subcommand("lclass",
                                      "Compositions sharing the L-polynomial (brute force)");
    lclass->add_option("--composition,-c", *comp_text, "Composition")->required();
    lclass->add_flag("--exhaustive", *exhaustive,
                     "Confirm the scan over every composition of n");
    lclass->add_flag("--force", *force, "Bypass the size cap");
    auto lclass_fmt = add_format(lclass);
    lclass->callback([&, comp_text, exhaustive, force, lclass_fmt] {
        Composition c = parse_composition(*comp_text);
        if (!*exhaustive)
            throw std::invalid_argument(
                "lclass enumerates every composition of n; pass --exhaustive to confirm");
        int cap = detail::env_cap("CATPOLY_CAP_LCLASS", 14);
        if (c.size() > cap && !*force)
            throw std::invalid_argument("lclass: n = " + std::to_string(c.size()) +
                                        " exceeds cap " + std::to_string(cap) +
                                        "; raise CATPOLY_CAP_LCLASS or pass --force");
        auto cls = l_class_bruteforce(c);
        emit_composition_list(std::vector<Composition>(cls.begin(), cls.end()), *lclass_fmt,
                              out);
    });

    auto* phi_cmd = app.add_subcommand("phi", "Spine-weight composition of a proper caterpillar");
    phi_cmd->add_option("--tree,-t", *tree_path, "Edge-list file")->required();
    auto phi_fmt = add_format(phi_cmd);
    phi_cmd->callback([&, tree_path, phi_fmt] {
        Composition c = phi(load_tree(*tree_path, err));
        if (*phi_fmt == "json")
            out << json_text(to_json(c)) << "\n";
        else
            out << to_text(c) << "\n";
    });

    auto* psi_cmd = app.add_subcommand("psi", "Proper caterpillar of a composition (parts >= 2)");
    psi_cmd->add_option("--composition,-c", *comp_text, "Spine-weight composition")->required();
    auto psi_fmt = add_format(psi_cmd);
    psi_cmd->callback([&, comp_text, psi_fmt] {
        Tree t = psi(parse_composition(*comp_text));
        if (*psi_fmt == "json")
            out << json_text(to_json(t)) << "\n";
        else
            out << to_edge_list_text(t);
    });

    auto* witness = app.add_subcommand(
        "witness", "Separating coefficient for psi(alpha∘gamma) vs psi(beta∘gamma)");
    witness->add_option("--alpha", *alpha_text, "Composition alpha")->required();
    witness->add_option("--beta", *beta_text, "Composition beta")->required();
    witness->add_option("--gamma", *gamma_text, "Non-palindromic composition gamma")->required();
    witness->add_flag("--normalize", *normalize,
                      "Reverse the triple and order alpha, beta as the construction expects");
    auto witness_fmt = add_format(witness);
    witness->callback([&, alpha_text, beta_text, gamma_text, normalize, witness_fmt] {
        Composition alpha = parse_composition(*alpha_text);
        Composition beta = parse_composition(*beta_text);
        Composition gamma = parse_composition(*gamma_text);
        if (*normalize) {
            WitnessTriple t = normalize_witness_triple(alpha, beta, gamma);
            alpha = t.alpha;
            beta = t.beta;
            gamma = t.gamma;
        }
        WitnessData w = witness_theorem(alpha, beta, gamma);
        if (*witness_fmt == "json") {
            out << json_text(to_json(w)) << "\n";
            return;
        }
        out << "alpha: " << to_text(w.alpha) << "\n";
        out << "beta: " << to_text(w.beta) << "\n";
        out << "gamma: " << to_text(w.gamma) << "\n";
        out << "k_alpha_beta: " << w.k_ab << "\n";
        out << "k_gamma: " << w.k_g << "\n";
        out << "a: " << w.a << "\n";
        out << "b: " << w.b << "\n";
        out << "delta1: " << w.delta1 << "\n";
        out << "delta2: " << w.delta2 << "\n";
        out << "lambda: " << to_text(w.lambda_witness) << "\n";
        out << "rho1: " << to_text(w.rho1) << "\n";
        out << "rho2: " << to_text(w.rho2) << "\n";
        out << "coeff_S: " << w.coeff_S << "\n";
        out << "coeff_T: " << w.coeff_T << "\n";
    });

    auto* verify = app.add_subcommand("verify", "Run one exhaustive or randomized check");
    verify
        ->add_option("check", *check_name,
                     "One of: sym-lclass, palindromes, ul-equals-l, x1, main-result, "
                     "stanley-trees, corollary-l-u, witness-random")
        ->required()
        ->check(CLI::IsMember({"sym-lclass", "palindromes", "ul-equals-l", "x1", "main-result",
                               "stanley-trees", "corollary-l-u", "witness-random"}));
    verify->add_option("--n", *param_n, "Instance size");
    verify->add_option("--jobs,-j", *jobs, "Worker threads (never changes the output bytes)")
        ->check(CLI::Range(1, 512))
        ->capture_default_str();
    verify->add_flag("--force", *force, "Bypass the check's size cap");
    verify->add_option("--count", *count, "witness-random: number of triples")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    verify->add_option("--max-size", *max_size, "witness-random: bound on |alpha∘gamma|")
        ->capture_default_str();
    verify->add_option("--seed", *seed, "witness-random: RNG seed")->capture_default_str();
    auto verify_fmt = add_format(verify);
    verify->callback([&, check_name, param_n, jobs, force, count, max_size, seed, verify_fmt] {
        RunOptions ro;
        ro.jobs = *jobs;
        ro.force = *force;
        VerificationReport rep;
        if (*check_name == "witness-random") {
            rep = check_witness_random(*count, *max_size, *seed, ro);
        } else {
            if (*param_n < 1) throw std::invalid_argument("pass --n (>= 1)");
            if (*check_name == "sym-lclass")
                rep = check_sym_equals_lclass(*param_n, ro);
            else if (*check_name == "palindromes")
                rep = check_palindromes_unique(*param_n, ro);
            else if (*check_name == "ul-equals-l")
                rep = check_ul_equals_l(*param_n, ro);
            else if (*check_name == "x1")
                rep = check_x1_proposition(*param_n, ro);
            else if (*check_name == "main-result")
                rep = check_main_result(*param_n, ro);
            else if (*check_name == "stanley-trees")
                rep = check_stanley_trees(*param_n, ro);
            else
                rep = check_corollary_l_implies_u(*param_n, ro);
        }
        if (*verify_fmt == "json")
            out << json_text(to_json(rep)) << "\n";
        else
            out << rep.to_text();
        err << "elapsed: " << std::fixed << std::setprecision(3) << rep.elapsed.count()
            << "s\n";
        if (!rep.passed()) rc = 1;
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("catpoly");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace catpoly::cli
