#include <algorithm>
#include <set>
#include <string>

#include "fibcube/oracle.hpp"

namespace fibcube {

namespace {

std::string fmt(u64 v) { return std::to_string(v); }

std::string fmt(const ImbalanceCensus& c) {
    return "(" + fmt(c.zero) + "," + fmt(c.one) + "," + fmt(c.two) + ")";
}

std::string fmt(const QnEdgeCensus& c) {
    return "(" + fmt(c.none_fib) + "," + fmt(c.one_fib) + "," + fmt(c.both_fib) + ")";
}

std::string fmt(const DegreeCensus& c) {
    std::string out = "{";
    for (const auto& [degree, count] : c.entries) {
        if (count == 0)
            continue;
        if (out.size() > 1)
            out += ",";
        out += std::to_string(degree) + ":" + fmt(count);
    }
    return out + "}";
}

constexpr StringClass kAllClasses[] = {
    StringClass::All,     StringClass::Fib,     StringClass::Fib0dot,
    StringClass::Fib1dot, StringClass::FibDot0, StringClass::FibDot1,
    StringClass::Fib00,   StringClass::Lucas,   StringClass::NonFib,
};

struct Checker {
    VerifyReport& report;
    std::uint32_t n;

    void add(const std::string& family, const std::string& identity, std::string expected,
             std::string actual) {
        const bool pass = expected == actual;
        report.results.push_back(
            {n, family, identity, std::move(expected), std::move(actual), pass});
    }

    void add_flag(const std::string& family, const std::string& identity, bool ok,
                  const std::string& detail_on_failure) {
        add(family, identity, "ok", ok ? "ok" : detail_on_failure);
    }
};

void check_strings(Checker& c) {
    const std::uint32_t n = c.n;
    for (StringClass cls : kAllClasses)
        c.add("strings", std::string("count/") + to_string(cls), fmt(count_class(n, cls)),
              fmt(enumerate(n, cls).size()));

    if (n >= 2) {
        // Fib(n) = {0s : s in Fib(n-1)} union {10s : s in Fib(n-2)}
        std::set<BitString> built;
        for (const BitString& s : enumerate(n - 1, StringClass::Fib))
            built.insert(BitString(n, s.value()));
        for (const BitString& s : enumerate(n - 2, StringClass::Fib))
            built.insert(BitString(n, s.value() | (u64{1} << (n - 1))));
        const auto direct = enumerate(n, StringClass::Fib);
        const bool ok = built.size() == direct.size() &&
                        std::equal(built.begin(), built.end(), direct.begin(), direct.end());
        c.add_flag("strings", "fib-decomposition", ok, "sets differ");
    }
    if (n >= 1) {
        // Fib1dot(n) = {1s : s in Fib0dot(n-1)}
        std::set<BitString> built;
        for (const BitString& s : enumerate(n - 1, StringClass::Fib0dot))
            built.insert(BitString(n, s.value() | (u64{1} << (n - 1))));
        const auto direct = enumerate(n, StringClass::Fib1dot);
        const bool ok = built.size() == direct.size() &&
                        std::equal(built.begin(), built.end(), direct.begin(), direct.end());
        c.add_flag("strings", "fib1dot-shift", ok, "sets differ");
    }
    c.add("strings", "total-zeros-fib", fmt(total_zeros_in_fib(n)),
          fmt(oracle_zero_one_totals(n, StringClass::Fib).zeros));
    c.add("strings", "dot0-count-equals-0dot",
          fmt(enumerate(n, StringClass::Fib0dot).size()),
          fmt(enumerate(n, StringClass::FibDot0).size()));
}

void check_cubes(Checker& c, const CubeGraph& q, const CubeGraph& gamma,
                 const CubeGraph& lambda, const CubeGraph& gbar) {
    const std::uint32_t n = c.n;
    for (const CubeGraph* g : {&q, &gamma, &lambda, &gbar}) {
        u64 degree_sum = 0;
        for (const BitString& v : g->vertices())
            degree_sum = checked_add(degree_sum, u64{g->degree(v)});
        c.add(to_string(g->family()), "handshake", fmt(checked_mul(u64{2}, edge_count(*g))),
              fmt(degree_sum));
    }

    const u64 gamma_adjacency = edge_count(gamma);
    const std::string expected_triple =
        "(" + fmt(gamma_adjacency) + "," + fmt(gamma_adjacency) + "," + fmt(gamma_adjacency) + ")";
    c.add("gamma", "edge-count-closed-forms", expected_triple,
          "(" + fmt(gamma_edge_count(n)) + "," + fmt(gamma_edge_count_closed(n)) + "," +
              fmt(gamma_edge_count_recurrence(n)) + ")");
    c.add("lambda", "edge-count-closed-form", fmt(edge_count(lambda)), fmt(lambda_edge_count(n)));

    bool gamma_directions_ok = true;
    bool lambda_directions_ok = true;
    for (std::uint32_t i = 1; i <= n; ++i) {
        if (edge_count_in_direction(gamma, i) !=
            checked_mul(fibonacci(i), fibonacci(n - i + 1)))
            gamma_directions_ok = false;
        if (edge_count_in_direction(lambda, i) != fibonacci(n - 1))
            lambda_directions_ok = false;
    }
    c.add_flag("gamma", "direction-census", gamma_directions_ok, "some direction differs");
    if (n >= 1)
        c.add_flag("lambda", "direction-census", lambda_directions_ok, "some direction differs");

    if (n >= 2 && !gbar.vertices().empty())
        c.add("gammabar", "connected", "true", is_connected(gbar) ? "true" : "false");

    const QnEdgeCensus census = classify_qn_edges(n);
    QnEdgeCensus expected;
    expected.none_fib = edge_count(gbar);
    expected.both_fib = gamma_adjacency;
    expected.one_fib = checked_sub(n == 0 ? 0 : checked_mul(u64{n}, checked_pow2(n - 1)),
                                   checked_add(expected.none_fib, expected.both_fib));
    c.add("q", "edge-incidence-classes", fmt(expected), fmt(census));
}

void check_imbalance(Checker& c, const CubeGraph& gamma, const CubeGraph& lambda) {
    const std::uint32_t n = c.n;
    for (const CubeGraph* g : {&gamma, &lambda}) {
        const bool cyclic = g->family() == Family::Lucas;
        const std::string family = to_string(g->family());

        u64 domination_violations = 0;
        u64 locality_violations = 0;
        u64 classifier_mismatches = 0;
        visit_edges(*g, [&](const Edge& e) {
            const BitString y = e.lower;
            const BitString x = e.upper();
            const std::uint32_t dl = g->degree(y);
            const std::uint32_t du = g->degree(x);
            if (dl < du)
                ++domination_violations;
            for (std::uint32_t j = 1; j <= n; ++j) {
                bool near;
                if (cyclic)
                    near = j == e.direction ||
                           j == cyclic_index(static_cast<std::int64_t>(e.direction) - 1, n) ||
                           j == cyclic_index(static_cast<std::int64_t>(e.direction) + 1, n);
                else
                    near = j + 1 >= e.direction && j <= e.direction + 1;
                if (!near && g->contains(x.flip(j)) != g->contains(y.flip(j)))
                    ++locality_violations;
            }
            const ImbalanceValue iv = cyclic ? imbalance_lambda(x, e.direction)
                                             : imbalance_gamma(x, e.direction);
            if (iv.value() != (dl > du ? dl - du : du - dl))
                ++classifier_mismatches;
        });
        c.add(family, "degree-domination", "0", fmt(domination_violations));
        c.add(family, "locality", "0", fmt(locality_violations));
        c.add(family, "imbalance-classifier", "0", fmt(classifier_mismatches));

        const u64 irr = oracle_irregularity(*g);
        c.add(family, "couples-equal-irr", fmt(irr), fmt(enumerate_couples(*g).size()));
        const ImbalanceCensus oracle_census = oracle_class_census(*g);  // throws above 2
        c.add(family, "imbalance-census",
              fmt(cyclic ? lambda_class_census(n) : gamma_class_census(n)), fmt(oracle_census));
        if (!cyclic)
            c.add(family, "irr-closed-form", fmt(irr_gamma(n)), fmt(irr));
        else if (n >= 3)
            c.add(family, "irr-closed-form", fmt(irr_lambda(n)), fmt(irr));
    }
}

void check_gamma_bijections(Checker& c, const CubeGraph& gamma) {
    const std::uint32_t n = c.n;
    if (n < 2)
        return;
    const auto couples = enumerate_couples(gamma);
    const auto previous_edges = edges(build(Family::Fibonacci, n - 1));
    const std::set<Edge> previous(previous_edges.begin(), previous_edges.end());

    for (Side side : {Side::Right, Side::Left}) {
        std::set<Edge> image;
        u64 total = 0;
        bool round_trips = true;
        for (const ImbalancedCouple& cp : couples) {
            if (cp.side != side)
                continue;
            ++total;
            const Edge f = side == Side::Right ? theta_gamma_right(cp) : phi_gamma_left(cp);
            image.insert(f);
            const ImbalancedCouple back =
                side == Side::Right ? theta_gamma_right_inverse(f) : phi_gamma_left_inverse(f);
            if (back != cp)
                round_trips = false;
        }
        for (const Edge& f : previous_edges) {
            const ImbalancedCouple cp =
                side == Side::Right ? theta_gamma_right_inverse(f) : phi_gamma_left_inverse(f);
            const Edge forward = side == Side::Right ? theta_gamma_right(cp) : phi_gamma_left(cp);
            if (forward != f)
                round_trips = false;
        }
        const bool ok = image.size() == total && image == previous && round_trips;
        c.add_flag("gamma", std::string(side == Side::Right ? "theta-right" : "phi-left") +
                                "-bijection",
                   ok, "not a bijection onto the previous cube's edges");
    }
}

void check_lambda_bijections(Checker& c, const CubeGraph& lambda) {
    const std::uint32_t n = c.n;
    if (n < 4)
        return;
    const auto couples = enumerate_couples(lambda);
    const auto fib_strings = enumerate(n - 4, StringClass::Fib);
    const std::set<BitString> targets(fib_strings.begin(), fib_strings.end());

    bool ok = true;
    for (std::uint32_t i = 1; i <= n && ok; ++i) {
        for (Side side : {Side::Right, Side::Left}) {
            std::set<BitString> image;
            u64 total = 0;
            for (const ImbalancedCouple& cp : couples) {
                if (cp.e.direction != i || cp.side != side)
                    continue;
                ++total;
                const BitString z = theta_lambda(cp);
                image.insert(z);
                if (theta_lambda_inverse(z, i, side, n) != cp)
                    ok = false;
            }
            if (image.size() != total || image != targets)
                ok = false;
            for (const BitString& z : fib_strings)
                if (theta_lambda(theta_lambda_inverse(z, i, side, n)) != z)
                    ok = false;
        }
    }
    c.add_flag("lambda", "direction-bijections", ok,
               "some direction is not in bijection with Fib(n-4)");
}

void check_couples_complete(Checker& c, const CubeGraph& g) {
    // Recompute the couples from the bare definition, probing every j, and
    // compare with the side-restricted enumeration.
    const bool cyclic = g.family() == Family::Lucas;
    const std::uint32_t n = g.n();
    const std::string family = to_string(g.family());
    std::set<ImbalancedCouple> brute;
    bool sides_forced = true;
    visit_edges(g, [&](const Edge& e) {
        const BitString y = e.lower;
        const BitString x = e.upper();
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (j == e.direction)
                continue;
            if (!g.contains(y.flip(j)) || g.contains(x.flip(j)))
                continue;
            Side side;
            if (cyclic) {
                const std::uint32_t right =
                    cyclic_index(static_cast<std::int64_t>(e.direction) + 1, n);
                const std::uint32_t left =
                    cyclic_index(static_cast<std::int64_t>(e.direction) - 1, n);
                if (j == right)
                    side = Side::Right;
                else if (j == left)
                    side = Side::Left;
                else {
                    sides_forced = false;
                    continue;
                }
            } else {
                if (j == e.direction + 1)
                    side = Side::Right;
                else if (j + 1 == e.direction)
                    side = Side::Left;
                else {
                    sides_forced = false;
                    continue;
                }
            }
            brute.insert(ImbalancedCouple{e, side});
        }
    });
    const auto enumerated = enumerate_couples(g);
    const std::set<ImbalancedCouple> listed(enumerated.begin(), enumerated.end());
    const bool ok = sides_forced && listed == brute && listed.size() == enumerated.size();
    c.add_flag(family, "couples-definition-complete", ok,
               "definition probe and enumeration disagree");
}

void check_rotation_automorphism(Checker& c, const CubeGraph& lambda) {
    const std::uint32_t n = c.n;
    if (n < 2 || n > 12)
        return;
    bool ok = true;
    visit_edges(lambda, [&](const Edge& e) {
        for (std::uint32_t i = 1; i <= n; ++i) {
            const BitString a = rotate_to_front(e.lower, i);
            const BitString b = rotate_to_front(e.upper(), i);
            if (!lambda.contains(a) || !lambda.contains(b) ||
                __builtin_popcountll(a.value() ^ b.value()) != 1)
                ok = false;
        }
    });
    c.add_flag("lambda", "rotation-automorphism", ok, "rotation broke an adjacency");
}

void check_complement(Checker& c, const CubeGraph& gamma, const CubeGraph& gbar) {
    const std::uint32_t n = c.n;
    c.add("gammabar", "vertex-count", fmt(gbar.vertices().size()),
          fmt(complement_vertex_count(n)));
    c.add("gammabar", "vertex-recurrence", fmt(gbar.vertices().size()),
          fmt(complement_vertex_recurrence(n)));
    if (n >= 1)
        c.add("gammabar", "edge-count", fmt(edge_count(gbar)), fmt(complement_edge_count(n)));

    u64 classifier_mismatches = 0;
    bool degrees_in_range = true;
    for (const BitString& v : gbar.vertices()) {
        const std::uint32_t d = gbar.degree(v);
        if (classify_complement_vertex(v) != d)
            ++classifier_mismatches;
        if (d + 2 < n || d > n)
            degrees_in_range = false;
    }
    c.add("gammabar", "degree-classifier", "0", fmt(classifier_mismatches));
    c.add_flag("gammabar", "degree-range", degrees_in_range, "a degree left {n-2, n-1, n}");
    c.add("gammabar", "degree-census", fmt(complement_degree_census(n)),
          fmt(oracle_degree_census(gbar)));

    if (n >= 1) {
        const auto prefix = a235996_prefix(n);
        const auto oracle = oracle_degree_census(gbar);
        const u64 full = oracle.entries.contains(n) ? oracle.entries.at(n) : 0;
        c.add("gammabar", "a235996", fmt(prefix.back()), fmt(full));
    }

    if (n >= 4) {
        std::set<BitString> image;
        bool in_complement = true;
        for (const BitString& v : gamma.vertices()) {
            const BitString t = embed_gamma_into_complement(v);
            image.insert(t);
            if (!gbar.contains(t))
                in_complement = false;
        }
        const bool injective = image.size() == gamma.vertices().size();
        bool edges_forward = true;
        visit_edges(gamma, [&](const Edge& e) {
            const BitString a = embed_gamma_into_complement(e.lower);
            const BitString b = embed_gamma_into_complement(e.upper());
            if (__builtin_popcountll(a.value() ^ b.value()) != 1)
                edges_forward = false;
        });
        u64 induced_edges = 0;
        visit_edges(gbar, [&](const Edge& e) {
            if (image.contains(e.lower) && image.contains(e.upper()))
                ++induced_edges;
        });
        const bool ok = injective && in_complement && edges_forward &&
                        induced_edges == edge_count(gamma);
        c.add_flag("gammabar", "embedding-induced-subgraph", ok,
                   "image is not an induced copy of the Fibonacci cube");
    }

    if (n >= 1) {
        const ZeroOneTotals fib_totals = oracle_zero_one_totals(n, StringClass::Fib);
        const ZeroOneTotals nonfib_totals = oracle_zero_one_totals(n, StringClass::NonFib);
        const QnEdgeCensus census = classify_qn_edges(n);
        c.add("gammabar", "edges-equal-zeros-in-nonfib", fmt(edge_count(gbar)),
              fmt(nonfib_totals.zeros));
        c.add("gamma", "edges-equal-ones-in-fib", fmt(edge_count(gamma)), fmt(fib_totals.ones));
        c.add("gamma", "zeros-in-fib-accounting", fmt(total_zeros_in_fib(n)),
              fmt(checked_add(census.one_fib, census.both_fib)));
        c.add("gamma", "zeros-in-fib-oracle", fmt(total_zeros_in_fib(n)), fmt(fib_totals.zeros));
    }
}

}  // namespace

VerifyReport verify_all(std::uint32_t n_max) {
    VerifyReport report;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        Checker checker{report, n};
        try {
            const CubeGraph q = build(Family::Hypercube, n);
            const CubeGraph gamma = build(Family::Fibonacci, n);
            const CubeGraph lambda = build(Family::Lucas, n);
            const CubeGraph gbar = build(Family::FibComplement, n);

            check_strings(checker);
            check_cubes(checker, q, gamma, lambda, gbar);
            check_imbalance(checker, gamma, lambda);
            check_gamma_bijections(checker, gamma);
            check_lambda_bijections(checker, lambda);
            check_couples_complete(checker, gamma);
            check_couples_complete(checker, lambda);
            check_rotation_automorphism(checker, lambda);
            check_complement(checker, gamma, gbar);

            for (Family f : {Family::Hypercube, Family::Fibonacci, Family::Lucas,
                             Family::FibComplement})
                report.reports.push_back(oracle_report(build(f, n)));
        } catch (const std::exception& err) {
            checker.add("-", "exception", "none", err.what());
        }
    }
    return report;
}

}  // namespace fibcube
