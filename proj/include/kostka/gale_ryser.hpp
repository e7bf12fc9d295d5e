#pragma once

// Ryser's canonical {0,1}-matrix A(lambda, mu), the difference matrix A*,
// the shape sequence of left-submatrix row sums, and column-subset
// reducibility.
//
// Matrices are indexed from 0 through operator(). Column sets (ColumnSet)
// hold 1-based column indices, matching the usual matrix-index notation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kostka/partition.hpp"
#include "kostka/subset_search.hpp"

namespace kostka {

/// Dense row-major integer grid. Entries are {0,1} for A and {-1,0,1} for A*.
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
    std::int8_t& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }

    std::vector<Int> row_sums() const;
    std::vector<Int> col_sums() const;

    /// Space-separated rows, one per line; -1 prints as "-1", others padded.
    std::string to_text() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int8_t> data_;
};

using ColumnSet = std::vector<int>;

struct CanonicalMatrix {
    KostkaPair pair;
    Grid entries;               // rank x lambda_1
    std::vector<Grid> history;  // A^(0) = A(mu), ..., A^(lambda_1) = A(lambda, mu)

    int rows() const { return entries.rows(); }
    int cols() const { return entries.cols(); }
};

struct StarMatrix {
    Grid entries;
    std::vector<Int> mu_star;  // mu_i - mu_{i+1}, length = rank
};

enum class StepKind { DeleteColumn, ShortenRightmost, ShortenAndDelete };

const char* to_string(StepKind k);

/// One transition mu^(i-1) -> mu^(i). Lengths refer to columns of the Young
/// diagram of mu^(i-1); diagram column indices are 1-based.
struct ShapeStep {
    StepKind kind;
    int matrix_column;        // column of A processed at this step (1-based)
    Int shortened_from = 0;   // length before shortening (0 if none)
    Int shortened_to = 0;     // length after shortening
    Int deleted_length = 0;   // length of the deleted column (0 if none)
    int shortened_column = 0; // diagram column index that was shortened
    int deleted_column = 0;   // diagram column index that was deleted
};

struct ShapeSequence {
    std::vector<Partition> chain;  // mu^(0) = mu, ..., mu^(lambda_1) = empty
    std::vector<ShapeStep> steps;  // steps[i-1] describes mu^(i-1) -> mu^(i)
};

/// r x width matrix whose i-th row has mu_i ones placed flush-left.
Grid initial_matrix(const Partition& mu, int rows, int width);

CanonicalMatrix ryser_canonical(const KostkaPair& pair);

/// GR(alpha, beta) is nonempty: some {0,1}-matrix has row sums alpha and
/// column sums beta.
bool gr_nonempty(const Partition& alpha, const Partition& beta);

/// Checks the three column shapes of a canonical matrix; throws AssertionFailure.
void validate_canonical(const CanonicalMatrix& a);

StarMatrix star_matrix(const CanonicalMatrix& a);

/// Column cases, leftmost column, bottom row, the left-neighbour rule for
/// every -1, and the row sums. Throws AssertionFailure.
void validate_star(const StarMatrix& s);

ShapeSequence shape_sequence(const KostkaPair& pair);
ShapeSequence shape_sequence(const CanonicalMatrix& a, const StarMatrix& s);

bool is_matrix_reducing_subset(const CanonicalMatrix& a, const ColumnSet& s);
bool is_star_reducing_subset(const StarMatrix& s, const ColumnSet& cols);

/// Lexicographically smallest nontrivial proper column subset witnessing
/// reducibility of A(lambda, mu), or nullopt.
std::optional<ColumnSet> matrix_reducible(const CanonicalMatrix& a, int width_cap = kSubsetSearchCap);

/// Same search against the *-reducibility predicate 0 <= v* <= mu*.
std::optional<ColumnSet> star_reducible(const StarMatrix& s, int width_cap = kSubsetSearchCap);

struct Decomposition {
    KostkaPair bullet;  // the piece built from the selected columns
    KostkaPair circ;    // the complement
};

/// Splits along a reducing column subset of the canonical matrix.
Decomposition split_pair(const CanonicalMatrix& a, const ColumnSet& s);
Decomposition split_pair(const KostkaPair& pair, const ColumnSet& s);

}  // namespace kostka
