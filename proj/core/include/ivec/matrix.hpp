#ifndef IVEC_MATRIX_HPP
#define IVEC_MATRIX_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ivec/coloring.hpp"
#include "ivec/graph.hpp"

namespace ivec {

/// Dense (0,1)-matrix, 1-based accessors.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, int value);

    int row_sum(int i) const;
    int col_sum(int j) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t index(int i, int j) const;
    int rows_;
    int cols_;
    std::vector<unsigned char> data_;
};

/// Least column index carrying a 1 in the given row. Throws
/// std::invalid_argument on an all-zero row.
int row_start(const BinaryMatrix& h, int i);

/// Every row and column is a contiguous nonempty run of 1s, the top-left and
/// bottom-right entries are 1, and row start positions are nondecreasing.
bool is_collected(const BinaryMatrix& h);

/// All row sums equal b.
bool is_row_regular(const BinaryMatrix& h, int b);

/// All column sums are at most c.
bool is_column_compressed(const BinaryMatrix& h, int c);

/// Minimum width of a collected n-regular n-compressed matrix with m rows:
/// ceil(m/n) * n.
int collected_width_bound(int m, int n);

/// Peel the first n rows and the columns left of row n+1's start from a
/// collected n-regular n-compressed matrix with more than n rows. The result
/// is again collected, n-regular and n-compressed, with one block fewer.
BinaryMatrix peel(const BinaryMatrix& p, int n);

/// Row-indicator matrix of the X-spectra of a proper coloring interval on X,
/// rows sorted by spectrum minimum (stable in the original x order). Columns
/// are the colors 1..t. Throws std::invalid_argument when the coloring is
/// not proper/surjective/interval on X.
BinaryMatrix spectrum_matrix(const BipartiteGraph& g, const EdgeColoring& c);

/// Enumerate all collected n-regular n-compressed matrices with m rows and
/// exactly w columns. The structure forces each row to be an interval of
/// length n, so enumeration walks nondecreasing start vectors only.
void for_each_collected(int m, int n, int w,
                        const std::function<void(const BinaryMatrix&)>& fn);

/// Minimum w <= w_max admitting a collected n-regular n-compressed matrix
/// with m rows, or nullopt when none exists within the cap.
std::optional<int> census_min_width(int m, int n, int w_max);

// Text format:
//   matrix <rows> <cols>
//   then `rows` lines of `cols` space-separated 0/1 entries.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const BinaryMatrix& h);

}  // namespace ivec

#endif
