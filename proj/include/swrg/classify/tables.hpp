#pragma once

#include "swrg/classify/search.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace swrg {

using Shape = std::pair<int, int>;
using Triple = std::array<std::uint64_t, 3>;

/// A published generator matrix with its parameters.
struct PublishedMatrix {
    std::string name;
    std::string ring;  // "z4" or "f2u"
    std::size_t n;
    Shape shape;
    Triple w, A;
    std::string rows;  // ';'-separated, parse_matrix syntax
};

/// A published parameter row: shapes are the realized ones (T4) or the excluded ones (T2, T3).
struct PublishedRow {
    std::size_t n;
    int cls;
    Triple w, A;
    std::vector<Shape> shapes;
};

const std::vector<PublishedMatrix>& table1_matrices();
const std::vector<PublishedMatrix>& table5_matrices();
const std::vector<PublishedRow>& table2_rows();
const std::vector<PublishedRow>& table3_rows();
const std::vector<PublishedRow>& table4_rows();

/// Parameters reported as realizable beyond the tables (Z4, DECIDE mode).
struct ExtraExample {
    std::size_t n;
    int cls;
    Triple w, A;
};
const std::vector<ExtraExample>& extra_examples();

enum class TableId { T1, T2, T3, T4, T5 };
TableId parse_table_id(const std::string& s);
std::string to_string(TableId t);

struct TableCheck {
    std::string label;
    std::size_t n = 0;
    int cls = 0;
    Triple w{};
    Shape shape{};
    std::string expected;  // REALIZED / EMPTY / VERIFIED
    std::string got;
    bool match = false;
    bool undecided = false;
    std::uint64_t nodes = 0;
    double ms = 0;
    std::string detail;
};

struct TableReport {
    TableId id;
    std::size_t n_max = 0;
    std::vector<TableCheck> checks;
    std::size_t mismatches() const;
    std::size_t undecided() const;
    bool ok() const { return mismatches() == 0; }
};

struct TableRunOptions {
    std::size_t n_max = 8;
    std::uint64_t budget_nodes = std::uint64_t{1} << 32;
    unsigned threads = 0;
};

/// Recomputes each row: matrices are re-verified (WD, shape, d⊥ >= 3), searched rows must
/// reach the published verdict. Undecided rows are reported, never counted as matches.
TableReport run_table(TableId id, const TableRunOptions& opt = {});

/// Verifies a published matrix: WD equals the printed frequencies, shape, d⊥ >= 3.
TableCheck verify_published_matrix(const PublishedMatrix& m);

}  // namespace swrg
