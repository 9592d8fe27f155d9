#pragma once

// Named verification suites, run as independent tasks on a small thread
// pool and merged in a fixed order.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chowgamma/chow.hpp"
#include "chowgamma/group.hpp"
#include "chowgamma/report.hpp"

namespace chowgamma {

using ReportTask = std::function<Report()>;

/// Runs every task and returns the results in task order. The first
/// exception, in task order, is rethrown after all workers finish.
std::vector<Report> run_parallel(const std::vector<ReportTask>& tasks, unsigned threads);

/// CHOWGAMMA_THREADS if set to a positive integer, else 1.
unsigned default_thread_count();

struct SuiteOptions {
    std::string suite;
    std::optional<int> n;
    /// Inline spec or file path; used by main-theorems.
    std::optional<std::string> matroid;
    std::string group = "symmetric";
    std::vector<RingKind> rings{RingKind::chow, RingKind::augmented};
    unsigned threads = 1;
    std::size_t group_cap = kDefaultGroupCap;
};

/// main-theorems, lemmas, corollaries, pq, schur, braid, bridges, ribbon,
/// properties, all.
const std::vector<std::string>& suite_names();

/// Merged report, records sorted by id. DomainError for an unknown suite.
Report run_suite(const SuiteOptions& options);

/// Equivariant checks of one matroid under a group, for each ring kind.
Report verify_matroid(const std::string& label, const Matroid& m, const PermGroup& g, RingKind kind);

/// Ring laws, Moebius round trip, boundary squares, Cohen-Macaulay
/// vanishing, character orthogonality, Stab counts and thread determinism.
Report verify_properties(int n);

}  // namespace chowgamma
