#include "fibcube/oracle.hpp"

namespace fibcube {

u64 oracle_irregularity(const CubeGraph& g) {
    u64 total = 0;
    visit_edges(g, [&](const Edge& e) {
        const std::uint32_t dl = g.degree(e.lower);
        const std::uint32_t du = g.degree(e.upper());
        total = checked_add(total, u64{dl > du ? dl - du : du - dl});
    });
    return total;
}

ImbalanceCensus oracle_class_census(const CubeGraph& g) { return census_by_degrees(g); }

ZeroOneTotals oracle_zero_one_totals(std::uint32_t n, StringClass c) {
    ZeroOneTotals totals;
    for (const BitString& s : enumerate(n, c)) {
        const u64 ones = static_cast<u64>(__builtin_popcountll(s.value()));
        totals.ones = checked_add(totals.ones, ones);
        totals.zeros = checked_add(totals.zeros, u64{n} - ones);
    }
    return totals;
}

DegreeCensus oracle_degree_census(const CubeGraph& g) {
    DegreeCensus census{g.n(), {}};
    for (const BitString& v : g.vertices())
        ++census.entries[g.degree(v)];
    return census;
}

OracleReport oracle_report(const CubeGraph& g) {
    const auto start = std::chrono::steady_clock::now();
    OracleReport report;
    report.n = g.n();
    report.family = g.family();
    report.quantities["vertices"] = g.vertices().size();
    report.quantities["edges"] = edge_count(g);
    report.quantities["irr"] = oracle_irregularity(g);
    const ImbalanceCensus census = oracle_class_census(g);
    report.quantities["imb0"] = census.zero;
    report.quantities["imb1"] = census.one;
    report.quantities["imb2"] = census.two;
    if (g.family() == Family::Fibonacci || g.family() == Family::Lucas)
        report.quantities["couples"] = enumerate_couples(g).size();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

bool VerifyReport::all_pass() const {
    for (const IdentityResult& r : results)
        if (!r.pass)
            return false;
    return true;
}

std::size_t VerifyReport::failure_count() const {
    std::size_t failures = 0;
    for (const IdentityResult& r : results)
        failures += r.pass ? 0 : 1;
    return failures;
}

}  // namespace fibcube
