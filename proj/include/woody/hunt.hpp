#ifndef WOODY_HUNT_HPP
#define WOODY_HUNT_HPP

#include <woody/exact.hpp>
#include <woody/report.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace woody
{
    enum class Conjecture
    {
        /// zeta <= 4 on planar graphs
        planar4,
        /// zeta <= 2 arb
        twoarb,
        /// zeta <= col
        col,
        /// zeta = arb once the girth is large enough (empirical threshold only)
        girth_eq
    };

    auto conjecture_name(Conjecture c) -> std::string;
    auto parse_conjecture(const std::string & name) -> Conjecture;
    auto parse_conjecture_list(const std::string & list) -> std::set<Conjecture>;

    struct HuntOptions
    {
        std::set<Conjecture> conjectures{Conjecture::planar4, Conjecture::twoarb, Conjecture::col};
        /// Per graph and per solver call.
        Budget budget{10'000'000ULL, 10.0};
        int jobs = 1;
        /// Abort on the first corpus error instead of logging and skipping it.
        bool strict = false;
        std::string generator;
        std::string declared_class;
        bool compute_chi = true;
        bool compute_chi_a = true;
    };

    /// One JSON-lines record per corpus graph; `timings` is kept out of the
    /// record so reports stay byte-identical across runs.
    struct HuntRecord
    {
        std::size_t index = 0;
        json record;
        json timings;
        bool violated = false;
    };

    auto hunt_graph(const CorpusEntry & entry, std::size_t index, const HuntOptions & options) -> HuntRecord;

    struct RecheckResult
    {
        bool ok = false;
        std::string detail;
    };

    /// Re-verifies every certificate in a record from the record alone: the
    /// zeta coloring, the forest decomposition and density certificate, the
    /// coloring-number ordering, and (when zeta exceeds its trivial bound) the
    /// lower bound, by an independent from-scratch search.
    auto recheck_record(const json & record, const Budget & budget = {}) -> RecheckResult;

    struct HuntOutcome
    {
        json summary;
        std::vector<json> csv_rows;
        std::optional<json> violation;
        bool aborted = false;
        std::string abort_reason;
        std::size_t records = 0;
    };

    /// Runs the corpus on a pool of `jobs` workers. Records are written to
    /// `report` in corpus order regardless of completion order; timings go
    /// to `timings` when given. Stops at the first violated conjecture.
    auto run_hunt(const std::vector<CorpusEntry> & corpus, const HuntOptions & options, std::ostream & report,
        std::ostream * timings = nullptr) -> HuntOutcome;

    auto csv_header() -> std::string;
    auto csv_line(const json & row) -> std::string;
}

#endif
