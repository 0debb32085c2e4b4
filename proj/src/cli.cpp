#include "spfilt/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spfilt/graph.hpp"
#include "spfilt/mutation.hpp"
#include "spfilt/spec_z.hpp"
#include "spfilt/text_io.hpp"

namespace spfilt {

namespace {

struct UsageError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int parse_int(const std::string& text, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError(what + " '" + text + "' is not an integer");
    }
    if (used != text.size()) throw ParseError(what + " '" + text + "' is not an integer");
    return value;
}

// A poset argument is a file path or one of the shorthands chain:<n>, fan:<k>.
PosetHandle load_poset(const std::string& arg) {
    if (arg.rfind("chain:", 0) == 0)
        return PrimePoset::chain(parse_int(arg.substr(6), "chain length"));
    if (arg.rfind("fan:", 0) == 0)
        return PrimePoset::fan(parse_int(arg.substr(4), "fan width"));
    return parse_poset_text(read_file(arg));
}

// A function argument is a file path or an inline "(v0,v1,...)" listing
// values in element order.
PosetHom load_function(const std::string& arg, PosetHandle poset) {
    if (!arg.empty() && arg.front() == '(') {
        if (arg.back() != ')') throw ParseError("inline function '" + arg + "' misses ')'");
        std::vector<int> values;
        std::stringstream stream(arg.substr(1, arg.size() - 2));
        std::string item;
        while (std::getline(stream, item, ','))
            values.push_back(parse_int(item, "inline value"));
        if (values.size() != static_cast<size_t>(poset->size()))
            throw ParseError("inline function lists " + std::to_string(values.size()) +
                             " values for " + std::to_string(poset->size()) + " elements");
        return PosetHom(std::move(poset), std::move(values));
    }
    return parse_function_text(read_file(arg), std::move(poset));
}

std::pair<int, int> parse_window(const std::string& text) {
    const size_t colon = text.find(':', 1);  // skip a leading minus sign
    if (colon == std::string::npos)
        throw UsageError{"--window expects <a>:<b>, got '" + text + "'"};
    try {
        return {parse_int(text.substr(0, colon), "window bound"),
                parse_int(text.substr(colon + 1), "window bound")};
    } catch (const ParseError& e) {
        throw UsageError{e.what()};
    }
}

std::vector<uint64_t> parse_primes_arg(const std::string& text) {
    std::vector<uint64_t> primes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw ParseError("prime '" + item + "' is not a number");
        }
        if (used != item.size()) throw ParseError("prime '" + item + "' is not a number");
        primes.push_back(value);
    }
    if (primes.empty()) throw ParseError("--primes lists no primes");
    return primes;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// The symbolic subcommands take a function either as --base/--u or as a full
// --hom text.
ZPosetHom load_zhom(bool has_hom, const std::string& hom, bool has_base, int base,
                    bool has_u, const std::string& u) {
    if (has_hom) {
        if (has_base || has_u)
            throw UsageError{"--hom excludes --base and --u"};
        return parse_zhom(hom);
    }
    if (!has_base || !has_u)
        throw UsageError{"give either --hom or both --base and --u"};
    return ZTFunction{base, parse_zset(u)}.to_hom();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"calculus of sp-filtrations, t-functions and their mutations"};
    app.require_subcommand(1);

    std::string poset_arg;
    std::string fn_arg;
    std::string filt_arg;
    std::string set_arg;
    std::string window_arg;
    std::string dot_arg;

    auto* convert = app.add_subcommand("convert", "translate a function to its filtration or back");
    convert->add_option("--poset", poset_arg)->required();
    auto* convert_fn = convert->add_option("--fn", fn_arg);
    auto* convert_filt = convert->add_option("--filt", filt_arg);

    auto* mutate = app.add_subcommand("mutate", "right-mutate a function at a subset");
    mutate->add_option("--poset", poset_arg)->required();
    mutate->add_option("--fn", fn_arg)->required();
    mutate->add_option("--set", set_arg)->required();

    auto* check = app.add_subcommand("check", "report upper-set and t-function verdicts");
    check->add_option("--poset", poset_arg)->required();
    auto* check_set = check->add_option("--set", set_arg);
    auto* check_fn = check->add_option("--fn", fn_arg);

    auto* decompose = app.add_subcommand("decompose", "write a function as iterated mutations");
    decompose->add_option("--poset", poset_arg)->required();
    decompose->add_option("--fn", fn_arg)->required();

    auto* enumerate = app.add_subcommand("enumerate", "list every upper set");
    enumerate->add_option("--poset", poset_arg)->required();

    auto* graph = app.add_subcommand("graph", "build the mutation graph over a window");
    graph->add_option("--poset", poset_arg)->required();
    graph->add_option("--window", window_arg)->required();
    graph->add_option("--dot", dot_arg);

    auto* specz = app.add_subcommand("specz", "symbolic calculus over the integer spectrum");
    specz->require_subcommand(1);
    std::string hom_arg;
    std::string u_arg;
    std::string w_arg;
    std::string op_arg;
    std::string a_arg;
    std::string b_arg;
    std::string primes_arg;
    int base_arg = 0;

    auto* z_mutate = specz->add_subcommand("mutate", "right-mutate a symbolic function");
    auto* z_mutate_base = z_mutate->add_option("--base", base_arg);
    auto* z_mutate_u = z_mutate->add_option("--u", u_arg);
    auto* z_mutate_hom = z_mutate->add_option("--hom", hom_arg);
    z_mutate->add_option("--w", w_arg)->required();

    auto* z_check = specz->add_subcommand("check", "normalize and test a symbolic function");
    auto* z_check_base = z_check->add_option("--base", base_arg);
    auto* z_check_u = z_check->add_option("--u", u_arg);
    auto* z_check_hom = z_check->add_option("--hom", hom_arg);

    auto* z_set = specz->add_subcommand("set", "finite/cofinite prime-set algebra");
    z_set->add_option("--op", op_arg)->required();
    auto* z_set_a = z_set->add_option("--a", a_arg);
    auto* z_set_b = z_set->add_option("--b", b_arg);
    z_set_a->required();

    auto* z_truncate = specz->add_subcommand("truncate", "restrict to finitely many primes");
    auto* z_truncate_base = z_truncate->add_option("--base", base_arg);
    auto* z_truncate_u = z_truncate->add_option("--u", u_arg);
    auto* z_truncate_hom = z_truncate->add_option("--hom", hom_arg);
    z_truncate->add_option("--primes", primes_arg)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*convert) {
            if (static_cast<bool>(*convert_fn) == static_cast<bool>(*convert_filt))
                throw UsageError{"convert needs exactly one of --fn and --filt"};
            auto poset = load_poset(poset_arg);
            if (*convert_fn)
                out << print_filtration(function_to_filtration(load_function(fn_arg, poset)));
            else
                out << print_function(filtration_to_function(
                    parse_filtration_text(read_file(filt_arg), poset)));
        } else if (*mutate) {
            auto poset = load_poset(poset_arg);
            const PosetHom f = load_function(fn_arg, poset);
            const PosetHom mutated = mutate_function(f, parse_subset(set_arg, *poset));
            out << display_function(mutated) << "\n";
            out << "t-function: " << yes_no(is_t_function(mutated)) << "\n";
        } else if (*check) {
            if (!*check_set && !*check_fn)
                throw UsageError{"check needs --set or --fn"};
            auto poset = load_poset(poset_arg);
            if (*check_set)
                out << "upper-set: " << yes_no(is_upper_set(*poset, parse_subset(set_arg, *poset)))
                    << "\n";
            if (*check_fn)
                out << "t-function: " << yes_no(is_t_function(load_function(fn_arg, poset)))
                    << "\n";
        } else if (*decompose) {
            auto poset = load_poset(poset_arg);
            const MutationSequence seq = decompose_to_mutations(load_function(fn_arg, poset));
            out << "base " << seq.base << "\n";
            for (const auto& step : seq.steps)
                out << print_upper(detail_make_upper_unchecked(poset, step)) << "\n";
        } else if (*enumerate) {
            for (const auto& set : enumerate_upper_sets(load_poset(poset_arg)))
                out << print_upper(set) << "\n";
        } else if (*graph) {
            const auto [a, b] = parse_window(window_arg);
            const MutationGraph g = build_mutation_graph(load_poset(poset_arg), a, b);
            out << "nodes: " << g.nodes().size() << "\n";
            out << "edges: " << g.edges().size() << "\n";
            if (!dot_arg.empty()) {
                std::ofstream dot(dot_arg);
                if (!dot) throw ParseError("cannot write file '" + dot_arg + "'");
                dot << graph_to_dot(g);
            }
        } else if (*specz) {
            if (*z_mutate) {
                const ZPosetHom f = load_zhom(static_cast<bool>(*z_mutate_hom), hom_arg,
                                              static_cast<bool>(*z_mutate_base), base_arg,
                                              static_cast<bool>(*z_mutate_u), u_arg);
                const ZPosetHom mutated = mutate_z(f, parse_zupper(w_arg));
                if (const auto tf = as_z_tfunction(mutated))
                    out << print_ztf(*tf) << "\n";
                else
                    out << print_zhom(mutated) << "\n";
                out << "t-function: " << yes_no(is_z_tfunction(mutated)) << "\n";
            } else if (*z_check) {
                const ZPosetHom f = load_zhom(static_cast<bool>(*z_check_hom), hom_arg,
                                              static_cast<bool>(*z_check_base), base_arg,
                                              static_cast<bool>(*z_check_u), u_arg);
                out << print_zhom(f) << "\n";
                out << "t-function: " << yes_no(is_z_tfunction(f)) << "\n";
            } else if (*z_set) {
                const ZPrimeSet a = parse_zset(a_arg);
                if (op_arg == "complement") {
                    if (*z_set_b) throw UsageError{"complement takes no --b"};
                    out << print_zset(zset_complement(a)) << "\n";
                } else {
                    if (!*z_set_b) throw UsageError{"--op " + op_arg + " needs --b"};
                    const ZPrimeSet b = parse_zset(b_arg);
                    if (op_arg == "union")
                        out << print_zset(zset_union(a, b)) << "\n";
                    else if (op_arg == "intersect")
                        out << print_zset(zset_intersection(a, b)) << "\n";
                    else if (op_arg == "symdiff")
                        out << print_zset(zset_symmetric_difference(a, b)) << "\n";
                    else
                        throw UsageError{"unknown --op '" + op_arg + "'"};
                }
            } else if (*z_truncate) {
                const ZPosetHom f = load_zhom(static_cast<bool>(*z_truncate_hom), hom_arg,
                                              static_cast<bool>(*z_truncate_base), base_arg,
                                              static_cast<bool>(*z_truncate_u), u_arg);
                out << display_function(truncate_z(f, parse_primes_arg(primes_arg))) << "\n";
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace spfilt
