#include "ranktest/csv_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ranktest::io {

namespace {

struct PairwiseRow {
    char population = 'P';
    std::string winner;
    std::string loser;
};

struct RankingRow {
    char population = 'P';
    std::vector<std::string> items;
};

[[noreturn]] void fail_at(const std::string& origin, std::size_t line, const std::string& what) {
    std::ostringstream out;
    out << origin << ":" << line << ": " << what;
    throw std::runtime_error(out.str());
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> read_lines(std::istream& input) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(input, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

char parse_population(const std::string& field, const std::string& origin, std::size_t line) {
    if (field == "P") return 'P';
    if (field == "Q") return 'Q';
    fail_at(origin, line, "unknown population label '" + field + "' (expected P or Q)");
}

}  // namespace

NameMap NameMap::from_names(std::vector<std::string> sorted_unique) {
    NameMap map;
    map.names = std::move(sorted_unique);
    for (std::size_t i = 0; i < map.names.size(); ++i)
        map.index_of.emplace(map.names[i], static_cast<int>(i));
    return map;
}

int NameMap::require(const std::string& name) const {
    const auto it = index_of.find(name);
    if (it == index_of.end()) throw std::runtime_error("unknown item name: " + name);
    return it->second;
}

PairwiseIngest ingest_pairwise_csv(const std::string& path, Setting setting, bool drop_ties) {
    std::ifstream input(path);
    if (!input) throw std::runtime_error("cannot open file: " + path);
    return ingest_pairwise_csv(input, setting, drop_ties, path);
}

PairwiseIngest ingest_pairwise_csv(std::istream& input, Setting setting, bool drop_ties,
                                   const std::string& origin) {
    const std::vector<std::string> lines = read_lines(input);
    if (lines.empty()) fail_at(origin, 1, "missing header");
    const bool has_result = lines[0] == "population,winner,loser,result";
    if (!has_result && lines[0] != "population,winner,loser")
        fail_at(origin, 1, "expected header population,winner,loser[,result]");

    std::vector<PairwiseRow> rows;
    long long dropped = 0;
    std::set<std::string> names;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        const auto fields = split(lines[n], ',');
        if (fields.size() != (has_result ? 4u : 3u))
            fail_at(origin, n + 1, "malformed row (wrong field count)");
        if (has_result) {
            if (fields[3] == "draw") {
                if (!drop_ties)
                    fail_at(origin, n + 1, "tie row present; rerun with --drop-ties");
                ++dropped;
                continue;
            }
            if (fields[3] != "win") fail_at(origin, n + 1, "result must be win or draw");
        }
        PairwiseRow row;
        row.population = parse_population(fields[0], origin, n + 1);
        row.winner = fields[1];
        row.loser = fields[2];
        if (row.winner.empty() || row.loser.empty())
            fail_at(origin, n + 1, "empty item name");
        if (row.winner == row.loser) fail_at(origin, n + 1, "winner equals loser");
        names.insert(row.winner);
        names.insert(row.loser);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(origin + ": no observations");

    NameMap map = NameMap::from_names({names.begin(), names.end()});
    const int d = static_cast<int>(map.names.size());
    PairwiseIngest result{PairwiseDataset(d, setting), PairwiseDataset(d, setting),
                          std::move(map), dropped};
    for (const auto& row : rows) {
        PairwiseDataset& data =
            row.population == 'P' ? result.population_p : result.population_q;
        const int w = result.names.require(row.winner);
        const int l = result.names.require(row.loser);
        if (setting == Setting::Symmetric) {
            data.record(std::min(w, l), std::max(w, l), w < l);
        } else {
            data.record(w, l, true);  // ordered context (winner, loser)
        }
    }
    return result;
}

RankingIngest ingest_ranking_csv(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw std::runtime_error("cannot open file: " + path);
    return ingest_ranking_csv(input, path);
}

RankingIngest ingest_ranking_csv(std::istream& input, const std::string& origin) {
    const std::vector<std::string> lines = read_lines(input);
    if (lines.empty()) fail_at(origin, 1, "missing header");
    if (lines[0] != "population,ranking")
        fail_at(origin, 1, "expected header population,ranking");

    std::vector<RankingRow> rows;
    std::set<std::string> names;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        const auto fields = split(lines[n], ',');
        if (fields.size() != 2) fail_at(origin, n + 1, "malformed row (wrong field count)");
        RankingRow row;
        row.population = parse_population(fields[0], origin, n + 1);
        row.items = split(fields[1], '>');
        if (row.items.size() < 2) fail_at(origin, n + 1, "a ranking needs at least two items");
        std::set<std::string> seen;
        for (const auto& item : row.items) {
            if (item.empty()) fail_at(origin, n + 1, "empty item name in ranking");
            if (!seen.insert(item).second)
                fail_at(origin, n + 1, "duplicate item '" + item + "' in ranking");
            names.insert(item);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(origin + ": no observations");

    NameMap map = NameMap::from_names({names.begin(), names.end()});
    const int d = static_cast<int>(map.names.size());
    RankingIngest result{RankingDataset(d), RankingDataset(d), std::move(map)};
    for (const auto& row : rows) {
        std::vector<int> items;
        items.reserve(row.items.size());
        for (const auto& item : row.items) items.push_back(result.names.require(item));
        (row.population == 'P' ? result.population_p : result.population_q)
            .add(std::move(items));
    }
    return result;
}

std::string emit_pairwise_csv(const PairwiseDataset& p, const PairwiseDataset& q,
                              const NameMap& names) {
    if (p.dim() != static_cast<int>(names.names.size()) || p.dim() != q.dim())
        throw std::invalid_argument("name map does not match datasets");
    std::ostringstream out;
    out << "population,winner,loser\n";
    const auto emit_population = [&](char label, const PairwiseDataset& data) {
        for_each_slot(data.dim(), data.setting(), [&](int i, int j) {
            const auto& a = names.names[static_cast<std::size_t>(i)];
            const auto& b = names.names[static_cast<std::size_t>(j)];
            for (long long w = 0; w < data.wins(i, j); ++w)
                out << label << ',' << a << ',' << b << '\n';
            for (long long l = 0; l < data.count(i, j) - data.wins(i, j); ++l)
                out << label << ',' << b << ',' << a << '\n';
        });
    };
    emit_population('P', p);
    emit_population('Q', q);
    return out.str();
}

std::string emit_ranking_csv(const RankingDataset& p, const RankingDataset& q,
                             const NameMap& names) {
    if (p.dim() != static_cast<int>(names.names.size()) || p.dim() != q.dim())
        throw std::invalid_argument("name map does not match datasets");
    std::ostringstream out;
    out << "population,ranking\n";
    const auto emit_population = [&](char label, const RankingDataset& data) {
        for (const auto& ranking : data.rankings()) {
            out << label << ',';
            for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
                if (pos > 0) out << '>';
                out << names.names[static_cast<std::size_t>(ranking[pos])];
            }
            out << '\n';
        }
    };
    emit_population('P', p);
    emit_population('Q', q);
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ranktest::io
