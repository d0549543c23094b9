#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fibcube/bijections.hpp"
#include "fibcube/complement.hpp"
#include "fibcube/cubes.hpp"
#include "fibcube/imbalance.hpp"
#include "fibcube/strings.hpp"

namespace fibcube {

// Ground truth computed directly from the definitions over enumerated vertex
// sets: degrees by membership scans, irregularity by summing degree
// differences, censuses by exhaustive partition.  No Fibonacci-number
// shortcut appears on this side of any cross-check.

u64 oracle_irregularity(const CubeGraph& g);

// Partition of the edge set by |d(x) - d(y)|; throws if any edge exceeds 2.
ImbalanceCensus oracle_class_census(const CubeGraph& g);

struct ZeroOneTotals {
    u64 zeros = 0;
    u64 ones = 0;

    friend bool operator==(const ZeroOneTotals&, const ZeroOneTotals&) = default;
};

// Position-wise totals over all members of the class at length n.
ZeroOneTotals oracle_zero_one_totals(std::uint32_t n, StringClass c);

DegreeCensus oracle_degree_census(const CubeGraph& g);

// Bundle of definitionally computed quantities for one graph.
struct OracleReport {
    std::uint32_t n = 0;
    Family family = Family::Hypercube;
    std::map<std::string, u64> quantities;
    std::chrono::duration<double> elapsed{0};
};

OracleReport oracle_report(const CubeGraph& g);

// One identity checked at one dimension.
struct IdentityResult {
    std::uint32_t n = 0;
    std::string family;
    std::string identity;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::vector<OracleReport> reports;
    std::vector<IdentityResult> results;

    bool all_pass() const;
    std::size_t failure_count() const;
};

// Runs the whole identity suite (string counts, edge counts, irregularity,
// the constant-time classifiers, couple bijections, complement counts,
// degree classification, the embedding, zero/one accounting) for every
// 0 <= n <= n_max.
VerifyReport verify_all(std::uint32_t n_max);

}  // namespace fibcube
