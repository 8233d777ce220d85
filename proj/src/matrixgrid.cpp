#include "dmc/matrixgrid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dmc {

ZeroOneMatrix::ZeroOneMatrix(int rows, int cols, std::uint8_t fill)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 1 || cols < 1)
        throw InputError("matrix: dimensions must be >= 1");
}

ZeroOneMatrix ZeroOneMatrix::parse(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    if (lines.empty())
        throw InputError("matrix: empty input");
    ZeroOneMatrix m(static_cast<int>(lines.size()), static_cast<int>(lines[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(lines[r].size()) != m.cols())
            throw InputError("matrix: ragged rows");
        for (int c = 0; c < m.cols(); ++c) {
            char ch = lines[r][c];
            if (ch != '0' && ch != '1')
                throw InputError("matrix: cells must be '0' or '1'");
            m.set(r, c, ch == '1' ? 1 : 0);
        }
    }
    return m;
}

std::string ZeroOneMatrix::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            out.push_back(nonzero(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

long long ZeroOneMatrix::ones() const {
    long long total = 0;
    for (auto c : cells_)
        total += (c != 0);
    return total;
}

void Division::validate(int rows, int cols) const {
    auto check = [](const std::vector<int>& b, int limit) {
        if (b.size() < 2 || b.front() != 0 || b.back() != limit)
            throw InputError("division: bad boundary endpoints");
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] >= b[i + 1])
                throw InputError("division: boundaries must strictly increase");
    };
    check(row_bounds, rows);
    check(col_bounds, cols);
}

void Trigraph::validate() const {
    auto check = [&](const std::vector<std::pair<int, int>>& es) {
        for (auto [u, v] : es)
            if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
                throw InputError("trigraph: bad edge");
    };
    check(black);
    check(red);
    std::set<std::pair<int, int>> b(black.begin(), black.end());
    for (auto e : red)
        if (b.count(e))
            throw InputError("trigraph: black and red edge sets intersect");
}

bool division_is_grid_minor(const ZeroOneMatrix& m, const Division& d) {
    d.validate(m.rows(), m.cols());
    for (int i = 0; i + 1 < static_cast<int>(d.row_bounds.size()); ++i)
        for (int j = 0; j + 1 < static_cast<int>(d.col_bounds.size()); ++j) {
            bool hit = false;
            for (int r = d.row_bounds[i]; r < d.row_bounds[i + 1] && !hit; ++r)
                for (int c = d.col_bounds[j]; c < d.col_bounds[j + 1] && !hit; ++c)
                    hit = m.nonzero(r, c);
            if (!hit)
                return false;
        }
    return true;
}

namespace {

int distinct_rows_in_cell(const ZeroOneMatrix& m, int r0, int r1, int c0, int c1) {
    std::vector<std::vector<std::uint8_t>> rows;
    for (int r = r0; r < r1; ++r) {
        std::vector<std::uint8_t> slice;
        slice.reserve(c1 - c0);
        for (int c = c0; c < c1; ++c)
            slice.push_back(m.nonzero(r, c) ? 1 : 0);
        rows.push_back(std::move(slice));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return static_cast<int>(rows.size());
}

int distinct_cols_in_cell(const ZeroOneMatrix& m, int r0, int r1, int c0, int c1) {
    std::vector<std::vector<std::uint8_t>> cols;
    for (int c = c0; c < c1; ++c) {
        std::vector<std::uint8_t> slice;
        slice.reserve(r1 - r0);
        for (int r = r0; r < r1; ++r)
            slice.push_back(m.nonzero(r, c) ? 1 : 0);
        cols.push_back(std::move(slice));
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return static_cast<int>(cols.size());
}

// compositions of `total` into `parts` positive parts, lexicographic by
// boundary vector; fn gets the boundary vector (0 ... total)
template <typename F>
bool for_each_composition(int total, int parts, F&& fn) {
    if (parts < 1 || parts > total)
        return false;
    std::vector<int> bounds(parts + 1);
    bounds[0] = 0;
    bounds[parts] = total;
    // cut positions: parts-1 strictly increasing values in [1, total-1]
    std::vector<int> cuts(parts - 1);
    for (int i = 0; i < parts - 1; ++i)
        cuts[i] = i + 1;
    while (true) {
        for (int i = 0; i < parts - 1; ++i)
            bounds[i + 1] = cuts[i];
        if (fn(bounds))
            return true;
        int i = parts - 2;
        while (i >= 0 && cuts[i] == total - (parts - 1 - i))
            --i;
        if (i < 0)
            return false;
        ++cuts[i];
        for (int j = i + 1; j < parts - 1; ++j)
            cuts[j] = cuts[j - 1] + 1;
    }
}

} // namespace

bool division_is_rank_division(const ZeroOneMatrix& m, const Division& d, int k) {
    d.validate(m.rows(), m.cols());
    if (d.row_blocks() != k || d.col_blocks() != k)
        return false;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int r0 = d.row_bounds[i], r1 = d.row_bounds[i + 1];
            int c0 = d.col_bounds[j], c1 = d.col_bounds[j + 1];
            if (distinct_rows_in_cell(m, r0, r1, c0, c1) < k)
                return false;
            if (distinct_cols_in_cell(m, r0, r1, c0, c1) < k)
                return false;
        }
    return true;
}

std::optional<Division> find_grid_minor(const ZeroOneMatrix& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw InputError("find_grid_minor: k out of range");
    std::optional<Division> result;
    for_each_composition(m.rows(), k, [&](const std::vector<int>& rb) {
        // greedy earliest-closing column sweep for this row division
        std::vector<int> cb{0};
        std::vector<char> covered(k, 0);
        int covered_count = 0;
        for (int c = 0; c < m.cols(); ++c) {
            for (int i = 0; i < k; ++i) {
                if (covered[i])
                    continue;
                for (int r = rb[i]; r < rb[i + 1]; ++r)
                    if (m.nonzero(r, c)) {
                        covered[i] = 1;
                        ++covered_count;
                        break;
                    }
            }
            if (covered_count == k) {
                if (static_cast<int>(cb.size()) == k) {
                    // this is the final block; absorb the remaining columns
                    cb.push_back(m.cols());
                    result = Division{rb, cb};
                    return true;
                }
                cb.push_back(c + 1);
                std::fill(covered.begin(), covered.end(), 0);
                covered_count = 0;
            }
        }
        return false;
    });
    return result;
}

std::optional<Division> find_rank_division(const ZeroOneMatrix& m, int k,
                                           bool override_guard) {
    if (k < 1)
        throw InputError("find_rank_division: k < 1");
    if (k > std::min(m.rows(), m.cols()))
        return std::nullopt;
    if (!override_guard && static_cast<long long>(m.rows()) * m.cols() > 64 * 64)
        throw CapacityError("find_rank_division: matrix too large for exhaustive search");
    std::optional<Division> result;
    for_each_composition(m.rows(), k, [&](const std::vector<int>& rb) {
        for (int i = 0; i < k; ++i)
            if (rb[i + 1] - rb[i] < k)
                return false; // a block with < k rows cannot hold k distinct rows
        return for_each_composition(m.cols(), k, [&](const std::vector<int>& cbnd) {
            for (int j = 0; j < k; ++j)
                if (cbnd[j + 1] - cbnd[j] < k)
                    return false;
            Division d{rb, cbnd};
            if (division_is_rank_division(m, d, k)) {
                result = d;
                return true;
            }
            return false;
        });
    });
    return result;
}

int grid_rank(const ZeroOneMatrix& m, bool override_guard) {
    for (int k = std::min(m.rows(), m.cols()); k >= 2; --k)
        if (find_rank_division(m, k, override_guard))
            return k;
    return 1; // the 1-division needs one distinct row and column: always present
}

std::optional<int> light_consecutive_lines(const ZeroOneMatrix& m,
                                           ContractionStep::Axis axis, int c) {
    int lines = axis == ContractionStep::Axis::Row ? m.rows() : m.cols();
    if (lines < 2)
        throw InputError("light_consecutive_lines: axis has fewer than 2 lines");
    std::vector<long long> count(lines, 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int cc = 0; cc < m.cols(); ++cc)
            if (m.nonzero(r, cc))
                ++count[axis == ContractionStep::Axis::Row ? r : cc];
    for (int i = 0; i + 1 < lines; ++i)
        if (count[i] + count[i + 1] <= 4LL * c - 1)
            return i;
    return std::nullopt;
}

namespace {

ZeroOneMatrix contract_lines(const ZeroOneMatrix& m, ContractionStep::Axis axis,
                             int idx) {
    bool row = axis == ContractionStep::Axis::Row;
    int lines = row ? m.rows() : m.cols();
    if (idx < 0 || idx + 1 >= lines)
        throw InputError("contraction: index out of range");
    ZeroOneMatrix out(m.rows() - (row ? 1 : 0), m.cols() - (row ? 0 : 1));
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) {
            int r2 = row && r > idx ? r + 1 : r;
            int c2 = !row && c > idx ? c + 1 : c;
            if ((row && r == idx) || (!row && c == idx)) {
                std::uint8_t a = m.get(row ? idx : r2, row ? c2 : idx);
                std::uint8_t b = m.get(row ? idx + 1 : r2, row ? c2 : idx + 1);
                out.set(r, c, (a == b && a != ZeroOneMatrix::kRed) ? a : ZeroOneMatrix::kRed);
            } else {
                out.set(r, c, m.get(r2, c2));
            }
        }
    return out;
}

int max_red_per_line(const ZeroOneMatrix& m) {
    int best = 0;
    for (int r = 0; r < m.rows(); ++r) {
        int cnt = 0;
        for (int c = 0; c < m.cols(); ++c)
            cnt += (m.get(r, c) == ZeroOneMatrix::kRed);
        best = std::max(best, cnt);
    }
    for (int c = 0; c < m.cols(); ++c) {
        int cnt = 0;
        for (int r = 0; r < m.rows(); ++r)
            cnt += (m.get(r, c) == ZeroOneMatrix::kRed);
        best = std::max(best, cnt);
    }
    return best;
}

} // namespace

std::variant<Division, MatrixContraction> gridminor_or_contraction(
    const ZeroOneMatrix& m, int k, int c) {
    if (k < 1 || c < 1)
        throw InputError("gridminor_or_contraction: k and c must be >= 1");
    ZeroOneMatrix cur = m;
    // interval of original lines covered by each current line
    std::vector<std::pair<int, int>> row_span, col_span;
    for (int r = 0; r < m.rows(); ++r)
        row_span.emplace_back(r, r + 1);
    for (int cc = 0; cc < m.cols(); ++cc)
        col_span.emplace_back(cc, cc + 1);

    auto try_minor = [&]() -> std::optional<Division> {
        if (k > std::min(cur.rows(), cur.cols()))
            return std::nullopt;
        auto div = find_grid_minor(cur, k);
        if (!div)
            return std::nullopt;
        Division lifted;
        for (int b : div->row_bounds)
            lifted.row_bounds.push_back(b == 0 ? 0 : row_span[b - 1].second);
        for (int b : div->col_bounds)
            lifted.col_bounds.push_back(b == 0 ? 0 : col_span[b - 1].second);
        if (!division_is_grid_minor(m, lifted))
            throw std::logic_error("lifted grid minor failed verification");
        return lifted;
    };

    MatrixContraction contraction;
    while (cur.rows() * cur.cols() > 1) {
        auto axis = cur.rows() >= cur.cols() && cur.rows() > 1
                        ? ContractionStep::Axis::Row
                        : ContractionStep::Axis::Col;
        int lines = axis == ContractionStep::Axis::Row ? cur.rows() : cur.cols();
        long long total = cur.ones();
        bool dense = total > static_cast<long long>(c) * lines;
        if (dense) {
            if (auto div = try_minor())
                return *div;
        }
        auto idx = light_consecutive_lines(cur, axis, c);
        if (!idx) {
            if (!dense) {
                if (auto div = try_minor())
                    return *div;
            }
            // no light pair at this c: fall back to the min-sum pair
            std::vector<long long> count(lines, 0);
            for (int r = 0; r < cur.rows(); ++r)
                for (int cc = 0; cc < cur.cols(); ++cc)
                    if (cur.nonzero(r, cc))
                        ++count[axis == ContractionStep::Axis::Row ? r : cc];
            int best = 0;
            for (int i = 1; i + 1 < lines; ++i)
                if (count[i] + count[i + 1] < count[best] + count[best + 1])
                    best = i;
            idx = best;
        }
        cur = contract_lines(cur, axis, *idx);
        auto& span = axis == ContractionStep::Axis::Row ? row_span : col_span;
        span[*idx].second = span[*idx + 1].second;
        span.erase(span.begin() + *idx + 1);
        contraction.steps.push_back({axis, *idx});
        contraction.width = std::max(contraction.width, max_red_per_line(cur));
    }
    return contraction;
}

int contraction_width(const ZeroOneMatrix& m, const std::vector<ContractionStep>& steps) {
    ZeroOneMatrix cur = m;
    int width = 0;
    for (const auto& st : steps) {
        cur = contract_lines(cur, st.axis, st.index);
        width = std::max(width, max_red_per_line(cur));
    }
    return width;
}

ZeroOneMatrix adj_of_permutation(const std::vector<std::pair<int, int>>& pi, int d1,
                                 int d2) {
    ZeroOneMatrix m(d1, d2);
    std::set<int> from, to;
    for (auto [x, y] : pi) {
        if (x < 0 || x >= d1 || y < 0 || y >= d2)
            throw InputError("adj_of_permutation: index out of range");
        if (!from.insert(x).second || !to.insert(y).second)
            throw InputError("adj_of_permutation: not a bijection");
        m.set(x, y, 1);
    }
    return m;
}

int verify_d_sequence(const Trigraph& g, const std::vector<std::pair<int, int>>& steps) {
    g.validate();
    if (static_cast<int>(steps.size()) != g.n - 1)
        throw InputError("verify_d_sequence: steps must reduce the trigraph to K1");
    // state[u][v]: 0 none, 1 black, 2 red
    std::vector<std::vector<std::uint8_t>> state(g.n, std::vector<std::uint8_t>(g.n, 0));
    for (auto [u, v] : g.black)
        state[u][v] = state[v][u] = 1;
    for (auto [u, v] : g.red)
        state[u][v] = state[v][u] = 2;
    std::vector<char> alive(g.n, 1);
    int width = 0;
    auto max_red_degree = [&]() {
        int best = 0;
        for (int u = 0; u < g.n; ++u) {
            if (!alive[u])
                continue;
            int deg = 0;
            for (int v = 0; v < g.n; ++v)
                deg += (alive[v] && state[u][v] == 2);
            best = std::max(best, deg);
        }
        return best;
    };
    width = max_red_degree();
    for (auto [u, v] : steps) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v || !alive[u] || !alive[v])
            throw InputError("verify_d_sequence: malformed step");
        for (int z = 0; z < g.n; ++z) {
            if (!alive[z] || z == u || z == v)
                continue;
            std::uint8_t a = state[u][z], b = state[v][z];
            std::uint8_t merged = 0;
            if (a == 1 && b == 1)
                merged = 1;
            else if (a != 0 || b != 0)
                merged = 2;
            state[u][z] = state[z][u] = merged;
        }
        alive[v] = 0;
        for (int z = 0; z < g.n; ++z)
            state[v][z] = state[z][v] = 0;
        width = std::max(width, max_red_degree());
    }
    return width;
}

} // namespace dmc
