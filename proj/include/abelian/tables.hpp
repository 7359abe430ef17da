#pragma once

#include <string>
#include <vector>

#include "abelian/bounds.hpp"

namespace abelian {

struct TableRow {
    std::vector<std::string> inputs;  // same order as TableResult::input_columns
    int dimension = 0;
    int delta = 0;
    bool d_certified = false;
    std::string note;
};

struct TableMismatch {
    std::size_t row;  // 1-based
    std::string column;
    std::string expected, got;
};

struct TableResult {
    int which = 0;
    std::string title;
    std::vector<std::string> input_columns;
    std::vector<TableRow> rows;
    std::vector<TableMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// recomputes every row from the fixture divisors and diffs against the bundled expected values
TableResult compute_table(int which, const BoundSet& B = BoundSet());

// fixture divisors as parseable expressions
struct TableFixture {
    std::string name;
    std::string expr;
};
const std::vector<TableFixture>& table_fixtures();

}  // namespace abelian
