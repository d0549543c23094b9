// Command-line front end: construction, counting, imbalance classification,
// degree sequences, couple streaming, the embedding, the identity
// verification suite, and named integer sequences.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibcube/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace fibcube;

namespace {

enum class Format { Plain, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "plain")
        return Format::Plain;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw CLI::ValidationError("--format", "expected plain, json or csv");
}

Family parse_family(const std::string& name) {
    if (name == "gamma")
        return Family::Fibonacci;
    if (name == "lambda")
        return Family::Lucas;
    if (name == "q")
        return Family::Hypercube;
    if (name == "gammabar")
        return Family::FibComplement;
    throw CLI::ValidationError("--family", "expected gamma, lambda, q or gammabar");
}

u64 closed_form_vertex_count(Family f, std::uint32_t n) {
    return count_class(n, vertex_class(f));
}

// Closed-form irregularity where the formulas are claimed; the degenerate
// dimensions and the regular families fall back to the definition.
u64 irregularity_of(Family f, std::uint32_t n) {
    if (f == Family::Fibonacci)
        return irr_gamma(n);
    if (f == Family::Lucas && n >= 3)
        return irr_lambda(n);
    return oracle_irregularity(build(f, n));
}

int cmd_gen(Family family, std::uint32_t n, bool edge_list, Format format) {
    const CubeGraph g = build(family, n);
    if (!edge_list) {
        if (format == Format::Json) {
            for (const BitString& v : g.vertices())
                std::cout << json{{"vertex", v.to_string()}} << "\n";
        } else {
            for (const BitString& v : g.vertices())
                std::cout << v.to_string() << "\n";
        }
        return 0;
    }
    visit_edges(g, [&](const Edge& e) {
        switch (format) {
            case Format::Plain:
                std::cout << edge_list_line(e) << "\n";
                break;
            case Format::Csv:
                std::cout << e.lower.to_string() << "," << e.direction << ","
                          << e.upper().to_string() << "\n";
                break;
            case Format::Json:
                std::cout << json{{"lower", e.lower.to_string()},
                                  {"direction", e.direction},
                                  {"upper", e.upper().to_string()}}
                          << "\n";
                break;
        }
    });
    return 0;
}

int cmd_count(Family family, std::uint32_t n, bool check, Format format) {
    const u64 closed = closed_form_vertex_count(family, n);
    u64 enumerated = 0;
    if (check)
        enumerated = build(family, n).vertices().size();
    if (format == Format::Json) {
        json line{{"n", n}, {"family", to_string(family)}, {"count", closed}};
        if (check)
            line["enumerated"] = enumerated;
        std::cout << line << "\n";
    } else if (check) {
        std::cout << "closed=" << closed << " enumerated=" << enumerated << "\n";
    } else {
        std::cout << closed << "\n";
    }
    return check && closed != enumerated ? 1 : 0;
}

int cmd_irr(Family family, std::uint32_t n, bool check, Format format) {
    const u64 value = irregularity_of(family, n);
    u64 oracle = value;
    if (check)
        oracle = oracle_irregularity(build(family, n));
    if (format == Format::Json) {
        json line{{"n", n}, {"family", to_string(family)}, {"irr", value}};
        if (check)
            line["oracle"] = oracle;
        std::cout << line << "\n";
    } else if (check) {
        std::cout << "closed=" << value << " oracle=" << oracle << "\n";
    } else {
        std::cout << value << "\n";
    }
    return check && value != oracle ? 1 : 0;
}

int cmd_imb(Family family, std::uint32_t n, const std::string& upper_text, std::uint32_t direction,
            Format format) {
    if (family != Family::Fibonacci && family != Family::Lucas)
        throw CLI::ValidationError("--family", "imbalance tables exist for gamma and lambda");
    const BitString upper = BitString::parse(upper_text);
    if (upper.length() != n)
        throw CLI::ValidationError("--upper", "string length does not match --n");
    const ImbalanceValue v = family == Family::Fibonacci ? imbalance_gamma(upper, direction)
                                                         : imbalance_lambda(upper, direction);
    if (format == Format::Json) {
        std::cout << json{{"n", n},
                          {"family", to_string(family)},
                          {"upper", upper.to_string()},
                          {"direction", direction},
                          {"imbalance", v.value()},
                          {"left", v.left},
                          {"right", v.right}}
                  << "\n";
    } else {
        std::cout << v.value() << "\n";
    }
    return 0;
}

int cmd_degseq(Family family, std::uint32_t n, bool check, Format format) {
    DegreeCensus census;
    if (family == Family::FibComplement)
        census = complement_degree_census(n);
    else
        census = oracle_degree_census(build(family, n));
    int status = 0;
    if (check) {
        const DegreeCensus oracle = oracle_degree_census(build(family, n));
        if (!same_counts(census, oracle)) {
            std::cerr << "degree census disagrees with the adjacency oracle\n";
            status = 1;
        }
    }
    for (const auto& [degree, count] : census.entries) {
        switch (format) {
            case Format::Plain:
                std::cout << degree << "\t" << count << "\n";
                break;
            case Format::Csv:
                std::cout << degree << "," << count << "\n";
                break;
            case Format::Json:
                std::cout << json{{"n", n},
                                  {"family", to_string(family)},
                                  {"degree", degree},
                                  {"count", count}}
                          << "\n";
                break;
        }
    }
    return status;
}

int cmd_embed(std::uint32_t n, const std::string& x_text, bool all, Format format) {
    if (!all) {
        const BitString x = BitString::parse(x_text);
        if (x.length() != n)
            throw CLI::ValidationError("--x", "string length does not match --n");
        const BitString image = embed_gamma_into_complement(x);
        if (format == Format::Json)
            std::cout << json{{"x", x.to_string()}, {"image", image.to_string()}} << "\n";
        else
            std::cout << image.to_string() << "\n";
        return 0;
    }
    const CubeGraph gamma = build(Family::Fibonacci, n);
    std::vector<Edge> mapped;
    visit_edges(gamma, [&](const Edge& e) {
        const BitString a = embed_gamma_into_complement(e.lower);
        const BitString b = embed_gamma_into_complement(e.upper());
        const std::uint32_t direction = embedded_direction(e.direction);
        mapped.push_back(a.bit(direction) == 0 ? Edge{a, direction} : Edge{b, direction});
    });
    std::sort(mapped.begin(), mapped.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.direction, a.lower) < std::pair(b.direction, b.lower);
    });
    for (const Edge& e : mapped) {
        if (format == Format::Json)
            std::cout << json{{"lower", e.lower.to_string()},
                              {"direction", e.direction},
                              {"upper", e.upper().to_string()}}
                      << "\n";
        else
            std::cout << edge_list_line(e) << "\n";
    }
    return 0;
}

int cmd_couples(Family family, std::uint32_t n, Format format) {
    const CubeGraph g = build(family, n);
    for (const ImbalancedCouple& c : enumerate_couples(g)) {
        if (format == Format::Json)
            std::cout << json{{"y", c.e.lower.to_string()},
                              {"direction", c.e.direction},
                              {"side", to_string(c.side)}}
                      << "\n";
        else if (format == Format::Csv)
            std::cout << c.e.lower.to_string() << "," << c.e.direction << ","
                      << to_string(c.side) << "\n";
        else
            std::cout << couple_line(c) << "\n";
    }
    return 0;
}

int cmd_verify(std::uint32_t to, Format format) {
    const VerifyReport report = verify_all(to);
    for (const IdentityResult& r : report.results) {
        if (format == Format::Json) {
            std::cout << json{{"n", r.n},
                              {"family", r.family},
                              {"identity", r.identity},
                              {"expected", r.expected},
                              {"actual", r.actual},
                              {"pass", r.pass}}
                      << "\n";
        } else if (format == Format::Csv) {
            std::cout << r.n << "," << r.family << "," << r.identity << "," << r.expected << ","
                      << r.actual << "," << (r.pass ? "pass" : "FAIL") << "\n";
        } else if (!r.pass) {
            std::cout << "FAIL n=" << r.n << " " << r.family << "/" << r.identity
                      << " expected=" << r.expected << " actual=" << r.actual << "\n";
        }
    }
    if (format == Format::Plain) {
        std::cout << report.results.size() << " identity checks up to n=" << to << ", "
                  << report.failure_count() << " failures\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_seq(const std::string& name, std::uint32_t from, std::uint32_t to, Format format) {
    std::vector<u64> values;
    for (std::uint32_t n = from; n <= to; ++n) {
        if (name == "gamma-edges")
            values.push_back(gamma_edge_count(n));
        else if (name == "complement-edges")
            values.push_back(complement_edge_count(n));
        else if (name == "irr-gamma")
            values.push_back(irr_gamma(n));
        else if (name == "irr-lambda")
            values.push_back(irregularity_of(Family::Lucas, n));
        else if (name == "a235996")
            values.push_back(n == 0 ? 0 : a235996_prefix(n).back());
        else
            throw CLI::ValidationError(
                "sequence", "expected gamma-edges, complement-edges, a235996, irr-gamma or "
                            "irr-lambda");
    }
    if (format == Format::Json) {
        std::cout << json(values) << "\n";
    } else if (format == Format::Csv) {
        for (u64 v : values)
            std::cout << v << "\n";
    } else {
        for (std::size_t k = 0; k < values.size(); ++k)
            std::cout << (k ? " " : "") << values[k];
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci cube, Lucas cube and cube-complement toolkit"};
    app.require_subcommand(1);

    std::uint32_t cap = 0;
    app.add_option("--cap", cap, "enumeration cap (overrides FIBCUBE_CAP and the default 26)");

    std::string family_name = "gamma";
    std::string format_name = "plain";
    std::uint32_t n = 0;
    bool check = false;

    auto add_common = [&](CLI::App* sub, bool with_family = true) {
        if (with_family)
            sub->add_option("--family", family_name, "gamma | lambda | q | gammabar");
        sub->add_option("--format", format_name, "plain | json | csv");
    };

    auto* gen = app.add_subcommand("gen", "print the vertices or edges of a graph");
    bool gen_edges = false;
    gen->add_option("--n", n, "dimension")->required();
    gen->add_flag("--edges", gen_edges, "print the edge list instead of the vertices");
    add_common(gen);

    auto* count = app.add_subcommand("count", "closed-form vertex count");
    count->add_option("--n", n, "dimension")->required();
    count->add_flag("--check", check, "also enumerate and compare");
    add_common(count);

    auto* irr = app.add_subcommand("irr", "irregularity of a graph");
    irr->add_option("--n", n, "dimension")->required();
    irr->add_flag("--check", check, "also run the brute-force oracle");
    add_common(irr);

    auto* imb = app.add_subcommand("imb", "imbalance of one edge from its upper endpoint");
    std::string upper_text;
    std::uint32_t direction = 0;
    imb->add_option("--n", n, "dimension")->required();
    imb->add_option("--upper", upper_text, "upper endpoint (bit set at --dir)")->required();
    imb->add_option("--dir", direction, "edge direction, 1-indexed from the left")->required();
    add_common(imb);

    auto* degseq = app.add_subcommand("degseq", "degree census of a graph");
    degseq->add_option("--n", n, "dimension")->required();
    degseq->add_flag("--check", check, "compare against the adjacency oracle");
    add_common(degseq);

    auto* embed = app.add_subcommand("embed",
                                     "embed the Fibonacci cube into its cube complement");
    std::string x_text;
    bool embed_all = false;
    embed->add_option("--n", n, "dimension")->required();
    embed->add_option("--x", x_text, "one Fibonacci string to map");
    embed->add_flag("--all", embed_all, "print the whole image edge list");
    add_common(embed, false);

    auto* couples = app.add_subcommand("couples", "stream the imbalanced couples of a graph");
    couples->add_option("--n", n, "dimension")->required();
    add_common(couples);

    auto* verify = app.add_subcommand("verify", "run the identity suite for every n up to --to");
    std::uint32_t verify_to = 10;
    verify->add_option("--to", verify_to, "largest dimension to verify (default 10)");
    add_common(verify, false);

    auto* seq = app.add_subcommand("seq", "emit a named integer sequence");
    std::string seq_name;
    std::uint32_t seq_from = 1, seq_to = 10;
    seq->add_option("sequence", seq_name,
                    "gamma-edges | complement-edges | a235996 | irr-gamma | irr-lambda")
        ->required();
    seq->add_option("--from", seq_from, "first dimension (default 1)");
    seq->add_option("--to", seq_to, "last dimension (default 10)");
    add_common(seq, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char* env_cap = std::getenv("FIBCUBE_CAP"); env_cap && cap == 0)
            set_enumeration_cap(static_cast<std::uint32_t>(std::stoul(env_cap)));
        if (cap != 0)
            set_enumeration_cap(cap);

        const Format format = parse_format(format_name);
        const Family family = parse_family(family_name);

        if (*gen)
            return cmd_gen(family, n, gen_edges, format);
        if (*count)
            return cmd_count(family, n, check, format);
        if (*irr)
            return cmd_irr(family, n, check, format);
        if (*imb)
            return cmd_imb(family, n, upper_text, direction, format);
        if (*degseq)
            return cmd_degseq(family, n, check, format);
        if (*embed) {
            if (!embed_all && x_text.empty())
                throw CLI::ValidationError("--x", "give --x or --all");
            return cmd_embed(n, x_text, embed_all, format);
        }
        if (*couples)
            return cmd_couples(family, n, format);
        if (*verify)
            return cmd_verify(verify_to, format);
        if (*seq)
            return cmd_seq(seq_name, seq_from, seq_to, format);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
