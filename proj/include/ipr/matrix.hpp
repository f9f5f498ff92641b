#pragma once

#include "ipr/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ipr {

/// Matrix row with finite support. Entries are (column, value) pairs with
/// strictly increasing columns and nonzero values.
class SparseRow {
public:
    using Entry = std::pair<std::uint64_t, Rational>;

    SparseRow() = default;
    explicit SparseRow(std::vector<Entry> entries); // validates order and nonzero values

    /// Builds from a dense vector, dropping zeros.
    static SparseRow from_dense(const std::vector<Rational>& values);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Largest column with a nonzero value; row must be nonempty.
    std::uint64_t max_col() const;

    /// Value at a column, zero when absent.
    Rational at(std::uint64_t col) const;

    /// First (column, value) pair; row must be nonempty.
    const Entry& first() const;

    SparseRow scaled(const Rational& factor) const; // factor == 0 yields empty row
    SparseRow shifted(std::uint64_t offset) const;  // all columns moved right by offset

    friend bool operator==(const SparseRow& a, const SparseRow& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const SparseRow& a, const SparseRow& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<Entry> entries_;
};

/// Finite matrix of exact rationals stored as sparse rows.
class FinMatrix {
public:
    FinMatrix() = default;
    FinMatrix(std::uint64_t nrows, std::uint64_t ncols, std::vector<SparseRow> rows);

    std::uint64_t nrows() const { return nrows_; }
    std::uint64_t ncols() const { return ncols_; }
    const SparseRow& row(std::uint64_t i) const;
    const std::vector<SparseRow>& rows() const { return rows_; }
    Rational at(std::uint64_t i, std::uint64_t j) const;

    friend bool operator==(const FinMatrix& a, const FinMatrix& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    std::uint64_t nrows_ = 0;
    std::uint64_t ncols_ = 0;
    std::vector<SparseRow> rows_;
};

/// Exact image vector A*x. Throws InvalidArgument on dimension mismatch.
std::vector<Rational> mat_apply(const FinMatrix& a, const std::vector<Rational>& x);

/// Dense initial segment of row i through column l inclusive (length l+1).
std::vector<Rational> row_profile(const FinMatrix& a, std::uint64_t i, std::uint64_t l);

/// Dense slice of row i over columns [lo, hi).
std::vector<Rational> row_slice(const FinMatrix& a, std::uint64_t i, std::uint64_t lo,
                                std::uint64_t hi);

/// Lazily generated matrix with countably many rows, each of finite support.
/// The generator must be pure: repeated calls for the same index agree.
struct InfMatrixSpec {
    std::function<SparseRow(std::uint64_t)> row_generator;
    /// Optional: row n is guaranteed supported inside columns [0, support_bound(n)).
    std::function<std::uint64_t(std::uint64_t)> support_bound;
    /// Family name and structural notes carried along for diagnostics.
    std::map<std::string, std::string> metadata;
};

/// First n rows as a FinMatrix. Column count is the declared bound when one
/// exists, otherwise one past the largest column observed.
FinMatrix materialize(const InfMatrixSpec& spec, std::uint64_t n);

// JSON interchange. The matrix document is
//   {"nrows":p,"ncols":q,"rows":[[[col,"num/den"],...],...]}
// Values parse from "num/den" strings or bare integers and always print as
// strings, integers without the "/1".
std::string matrix_to_json(const FinMatrix& m);
FinMatrix matrix_from_json(const std::string& text);

} // namespace ipr
