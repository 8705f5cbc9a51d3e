#include "ivec/matrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ivec {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("matrix dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

std::size_t BinaryMatrix::index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
}

void BinaryMatrix::set(int i, int j, int value) {
    if (value != 0 && value != 1)
        throw std::invalid_argument("entries must be 0 or 1");
    data_[index(i, j)] = static_cast<unsigned char>(value);
}

int BinaryMatrix::row_sum(int i) const {
    int s = 0;
    for (int j = 1; j <= cols_; ++j) s += at(i, j);
    return s;
}

int BinaryMatrix::col_sum(int j) const {
    int s = 0;
    for (int i = 1; i <= rows_; ++i) s += at(i, j);
    return s;
}

int row_start(const BinaryMatrix& h, int i) {
    for (int j = 1; j <= h.cols(); ++j)
        if (h.at(i, j)) return j;
    throw std::invalid_argument("row_start: all-zero row");
}

namespace {

// Nonempty contiguous run of 1s along one line of the matrix.
bool line_collected(const BinaryMatrix& h, bool row, int index) {
    int len = row ? h.cols() : h.rows();
    int first = 0, last = 0;
    for (int p = 1; p <= len; ++p) {
        int v = row ? h.at(index, p) : h.at(p, index);
        if (v) {
            if (!first) first = p;
            last = p;
        }
    }
    if (!first) return false;
    for (int p = first; p <= last; ++p)
        if (!(row ? h.at(index, p) : h.at(p, index))) return false;
    return true;
}

}  // namespace

bool is_collected(const BinaryMatrix& h) {
    for (int i = 1; i <= h.rows(); ++i)
        if (!line_collected(h, true, i)) return false;
    for (int j = 1; j <= h.cols(); ++j)
        if (!line_collected(h, false, j)) return false;
    if (!h.at(1, 1) || !h.at(h.rows(), h.cols())) return false;
    for (int i = 2; i <= h.rows(); ++i)
        if (row_start(h, i) < row_start(h, i - 1)) return false;
    return true;
}

bool is_row_regular(const BinaryMatrix& h, int b) {
    for (int i = 1; i <= h.rows(); ++i)
        if (h.row_sum(i) != b) return false;
    return true;
}

bool is_column_compressed(const BinaryMatrix& h, int c) {
    for (int j = 1; j <= h.cols(); ++j)
        if (h.col_sum(j) > c) return false;
    return true;
}

int collected_width_bound(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("collected_width_bound: need positive m, n");
    return (m + n - 1) / n * n;
}

BinaryMatrix peel(const BinaryMatrix& p, int n) {
    if (n < 1 || p.rows() <= n)
        throw std::invalid_argument("peel: need more than n rows");
    if (!is_collected(p) || !is_row_regular(p, n) || !is_column_compressed(p, n))
        throw std::invalid_argument("peel: matrix not collected n-regular n-compressed");
    int e = row_start(p, n + 1);
    BinaryMatrix out(p.rows() - n, p.cols() - (e - 1));
    for (int i = 1; i <= out.rows(); ++i)
        for (int j = 1; j <= out.cols(); ++j)
            out.set(i, j, p.at(i + n, j + e - 1));
    return out;
}

BinaryMatrix spectrum_matrix(const BipartiteGraph& g, const EdgeColoring& c) {
    VerificationReport report = verify(g, c, Side::X, CheckMode::Interval);
    if (!report.passed)
        throw std::invalid_argument(
            "spectrum_matrix: coloring is not proper/surjective/interval on X");

    std::vector<Spectrum> spectra;
    for (int x = 1; x <= g.x_count(); ++x)
        spectra.push_back(spectrum(g, c, Side::X, x));
    std::vector<int> order(g.x_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return spectra[a].min() < spectra[b].min();
    });

    BinaryMatrix out(g.x_count(), c.t);
    for (int i = 0; i < g.x_count(); ++i)
        for (int col : spectra[order[i]].colors) out.set(i + 1, col, 1);
    return out;
}

namespace {

// Rows of a collected n-regular matrix are intervals of length n, so an
// instance is exactly a start vector s_1 <= ... <= s_m with
//   s_1 = 1, s_m = w - n + 1          (corner entries)
//   s_{i+1} <= s_i + n                (no empty column)
//   s_{i+n} >= s_i + n                (column sums <= n)
void enumerate_starts(int m, int n, int w, std::vector<int>& starts,
                      const std::function<void(const std::vector<int>&)>& fn) {
    int i = static_cast<int>(starts.size());
    if (i == m) {
        if (starts.back() == w - n + 1) fn(starts);
        return;
    }
    int lo = i == 0 ? 1 : starts.back();
    int hi = i == 0 ? 1 : std::min(starts.back() + n, w - n + 1);
    if (i >= n) lo = std::max(lo, starts[i - n] + n);
    for (int s = lo; s <= hi; ++s) {
        // Must still be able to reach the final column.
        if (s + static_cast<long long>(m - 1 - i) * n < w - n + 1) continue;
        starts.push_back(s);
        enumerate_starts(m, n, w, starts, fn);
        starts.pop_back();
    }
}

BinaryMatrix matrix_from_starts(const std::vector<int>& starts, int n, int w) {
    BinaryMatrix out(static_cast<int>(starts.size()), w);
    for (std::size_t i = 0; i < starts.size(); ++i)
        for (int j = starts[i]; j < starts[i] + n; ++j)
            out.set(static_cast<int>(i) + 1, j, 1);
    return out;
}

}  // namespace

void for_each_collected(int m, int n, int w,
                        const std::function<void(const BinaryMatrix&)>& fn) {
    if (m < 1 || n < 1 || w < n) return;
    std::vector<int> starts;
    starts.reserve(m);
    enumerate_starts(m, n, w, starts,
                     [&](const std::vector<int>& s) { fn(matrix_from_starts(s, n, w)); });
}

std::optional<int> census_min_width(int m, int n, int w_max) {
    if (m < 1 || n < 1 || w_max < 1)
        throw std::invalid_argument("census_min_width: need positive parameters");
    if (m > 12 || n > 6 || w_max > 24)
        throw BudgetError("census_min_width: parameters beyond enumeration budget");
    for (int w = n; w <= w_max; ++w) {
        bool found = false;
        std::vector<int> starts;
        starts.reserve(m);
        enumerate_starts(m, n, w, starts,
                         [&](const std::vector<int>&) { found = true; });
        if (found) return w;
    }
    return std::nullopt;
}

BinaryMatrix parse_matrix(std::istream& in) {
    std::string raw;
    int line_no = 0;
    auto next = [&](std::string& out) {
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            auto end = raw.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            out = raw.substr(0, end + 1);
            return true;
        }
        return false;
    };

    std::string line;
    if (!next(line)) throw ParseError(0, "missing header");
    std::istringstream head(line);
    std::string tag;
    int rows = 0, cols = 0;
    if (!(head >> tag >> rows >> cols) || tag != "matrix")
        throw ParseError(line_no, "expected 'matrix <rows> <cols>'");
    if (rows < 1 || cols < 1)
        throw ParseError(line_no, "dimensions must be positive");
    BinaryMatrix out(rows, cols);
    for (int i = 1; i <= rows; ++i) {
        if (!next(line)) throw ParseError(0, "missing matrix row");
        std::istringstream rs(line);
        for (int j = 1; j <= cols; ++j) {
            int v = -1;
            if (!(rs >> v) || (v != 0 && v != 1))
                throw ParseError(line_no, "expected 0/1 entries");
            out.set(i, j, v);
        }
        std::string extra;
        if (rs >> extra) throw ParseError(line_no, "trailing entries in row");
    }
    if (next(line)) throw ParseError(line_no, "trailing content");
    return out;
}

BinaryMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string emit_matrix(const BinaryMatrix& h) {
    std::ostringstream out;
    out << "matrix " << h.rows() << ' ' << h.cols() << '\n';
    for (int i = 1; i <= h.rows(); ++i) {
        for (int j = 1; j <= h.cols(); ++j)
            out << h.at(i, j) << (j == h.cols() ? '\n' : ' ');
    }
    return out.str();
}

}  // namespace ivec
