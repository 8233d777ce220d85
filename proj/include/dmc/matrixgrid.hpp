#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dmc/errors.hpp"

namespace dmc {

/// Dense 0-1 matrix. Contractions need a third cell state, so cells are
/// bytes: 0, 1, or kRed.
class ZeroOneMatrix {
public:
    static constexpr std::uint8_t kRed = 2;

    ZeroOneMatrix(int rows, int cols, std::uint8_t fill = 0);
    static ZeroOneMatrix parse(const std::string& text);     // '0'/'1' lines
    std::string to_text() const;                             // red not serialized

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint8_t get(int r, int c) const { return cells_.at(r * cols_ + c); }
    void set(int r, int c, std::uint8_t v) { cells_.at(r * cols_ + c) = v; }
    bool nonzero(int r, int c) const { return get(r, c) != 0; } // red counts as 1
    long long ones() const; // 1 or red entries

    bool operator==(const ZeroOneMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<std::uint8_t> cells_;
};

/// Interval partition of rows and columns: boundaries 0 = b_0 < ... < b_r = n.
/// Block i spans [bounds[i], bounds[i+1]).
struct Division {
    std::vector<int> row_bounds;
    std::vector<int> col_bounds;

    int row_blocks() const { return static_cast<int>(row_bounds.size()) - 1; }
    int col_blocks() const { return static_cast<int>(col_bounds.size()) - 1; }
    void validate(int rows, int cols) const;
};

/// One merge of two consecutive lines on an axis; `index` is the first of
/// the merged pair at the time of the step (indices refer to the current,
/// already-contracted matrix).
struct ContractionStep {
    enum class Axis { Row, Col };
    Axis axis;
    int index;
};

struct MatrixContraction {
    std::vector<ContractionStep> steps;
    int width = 0; // max red entries in any single row/column over all steps
};

/// Trigraph: disjoint black and red edge sets over n vertices.
struct Trigraph {
    int n = 0;
    std::vector<std::pair<int, int>> black; // normalized u < v
    std::vector<std::pair<int, int>> red;

    void validate() const;
};

bool division_is_grid_minor(const ZeroOneMatrix& m, const Division& d);
bool division_is_rank_division(const ZeroOneMatrix& m, const Division& d, int k);

/// Exact: a k-division with a nonzero in every cell, or nullopt if none
/// exists. Row divisions are enumerated; columns completed by the greedy
/// earliest-closing sweep.
std::optional<Division> find_grid_minor(const ZeroOneMatrix& m, int k);

/// Exact exhaustive rank-k division search (both axes enumerated).
std::optional<Division> find_rank_division(const ZeroOneMatrix& m, int k,
                                           bool override_guard = false);

/// Largest k admitting a rank-k division (>= 1 for any nonempty matrix).
int grid_rank(const ZeroOneMatrix& m, bool override_guard = false);

/// First index i (0-based) on the axis with ones(line_i) + ones(line_{i+1})
/// <= 4c - 1, or nullopt. Red entries count as ones.
std::optional<int> light_consecutive_lines(const ZeroOneMatrix& m,
                                           ContractionStep::Axis axis, int c);

/// Either a k-grid minor of m (verified cell-by-cell) or an order-respecting
/// contraction sequence down to a single cell. Density above c triggers the
/// grid-minor search; light consecutive lines drive the contraction.
std::variant<Division, MatrixContraction> gridminor_or_contraction(
    const ZeroOneMatrix& m, int k, int c);

/// Replays a contraction sequence and returns the realized width.
int contraction_width(const ZeroOneMatrix& m, const std::vector<ContractionStep>& steps);

/// |d1| x |d2| matrix with a 1 at (x, pi(x)); pi given as pairs of positions
/// into the two ordered domains. Throws InputError unless pi is a bijection.
ZeroOneMatrix adj_of_permutation(const std::vector<std::pair<int, int>>& pi,
                                 int d1, int d2);

/// Replays a trigraph contraction sequence (steps merge vertex pairs, second
/// merged into first) and returns the maximum red degree encountered.
int verify_d_sequence(const Trigraph& g, const std::vector<std::pair<int, int>>& steps);

} // namespace dmc
