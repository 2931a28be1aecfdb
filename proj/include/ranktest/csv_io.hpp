#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ranktest/types.hpp"

namespace ranktest::io {

/// Item names mapped to dense indices. The mapping is lexicographic over
/// the union of names seen in both populations, so it does not depend on
/// file row order.
struct NameMap {
    std::vector<std::string> names;         // index -> name
    std::map<std::string, int> index_of;    // name -> index

    static NameMap from_names(std::vector<std::string> sorted_unique);
    int require(const std::string& name) const;
};

struct PairwiseIngest {
    PairwiseDataset population_p;
    PairwiseDataset population_q;
    NameMap names;
    long long dropped_ties = 0;
};

/// Reads `population,winner,loser[,result]` rows (header required,
/// population in {P,Q}). Ties (`result` = draw) are rejected unless
/// drop_ties is set, mirroring a discard-draws preprocessing step.
/// In the asymmetric setting a row is one comparison in the ordered
/// context (winner, loser).
PairwiseIngest ingest_pairwise_csv(const std::string& path, Setting setting, bool drop_ties);
PairwiseIngest ingest_pairwise_csv(std::istream& input, Setting setting, bool drop_ties,
                                   const std::string& origin = "<stream>");

struct RankingIngest {
    RankingDataset population_p;
    RankingDataset population_q;
    NameMap names;
};

/// Reads `population,ranking` rows where the ranking field joins item
/// names best-first with '>': e.g. `P,a>c>b`. Lengths may vary.
RankingIngest ingest_ranking_csv(const std::string& path);
RankingIngest ingest_ranking_csv(std::istream& input, const std::string& origin = "<stream>");

/// Inverse of ingestion: rewriting and re-reading reproduces the datasets
/// and the name map exactly.
std::string emit_pairwise_csv(const PairwiseDataset& p, const PairwiseDataset& q,
                              const NameMap& names);
std::string emit_ranking_csv(const RankingDataset& p, const RankingDataset& q,
                             const NameMap& names);

void write_file(const std::string& path, const std::string& contents);

}  // namespace ranktest::io
