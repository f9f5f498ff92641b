#include "ipr/matrix.hpp"

#include "ipr/errors.hpp"

#include "json.hpp"

#include <algorithm>

namespace ipr {

using nlohmann::json;

SparseRow::SparseRow(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second.is_zero()) {
            throw InvalidArgument("sparse row stores an explicit zero value");
        }
        if (i > 0 && entries_[i - 1].first >= entries_[i].first) {
            throw InvalidArgument("sparse row columns not strictly increasing");
        }
    }
}

SparseRow SparseRow::from_dense(const std::vector<Rational>& values) {
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (!values[j].is_zero()) entries.emplace_back(j, values[j]);
    }
    return SparseRow(std::move(entries));
}

std::uint64_t SparseRow::max_col() const {
    if (entries_.empty()) throw InvalidArgument("max_col of empty row");
    return entries_.back().first;
}

Rational SparseRow::at(std::uint64_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, std::uint64_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) return it->second;
    return Rational(0);
}

const SparseRow::Entry& SparseRow::first() const {
    if (entries_.empty()) throw InvalidArgument("first entry of empty row");
    return entries_.front();
}

SparseRow SparseRow::scaled(const Rational& factor) const {
    if (factor.is_zero()) return SparseRow();
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [col, val] : entries_) out.emplace_back(col, val * factor);
    return SparseRow(std::move(out));
}

SparseRow SparseRow::shifted(std::uint64_t offset) const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [col, val] : entries_) out.emplace_back(col + offset, val);
    return SparseRow(std::move(out));
}

FinMatrix::FinMatrix(std::uint64_t nrows, std::uint64_t ncols, std::vector<SparseRow> rows)
    : nrows_(nrows), ncols_(ncols), rows_(std::move(rows)) {
    if (rows_.size() != nrows_) {
        throw InvalidArgument("row list length does not match nrows");
    }
    for (const auto& r : rows_) {
        if (!r.empty() && r.max_col() >= ncols_) {
            throw InvalidArgument("row entry beyond ncols");
        }
    }
}

const SparseRow& FinMatrix::row(std::uint64_t i) const {
    if (i >= nrows_) throw InvalidArgument("row index out of range");
    return rows_[i];
}

Rational FinMatrix::at(std::uint64_t i, std::uint64_t j) const {
    if (i >= nrows_ || j >= ncols_) throw InvalidArgument("matrix index out of range");
    return rows_[i].at(j);
}

std::vector<Rational> mat_apply(const FinMatrix& a, const std::vector<Rational>& x) {
    if (x.size() != a.ncols()) {
        throw InvalidArgument("mat_apply: vector length does not match ncols");
    }
    std::vector<Rational> image;
    image.reserve(a.nrows());
    for (const auto& row : a.rows()) {
        Rational acc(0);
        for (const auto& [col, val] : row.entries()) {
            acc += val * x[col];
        }
        image.push_back(std::move(acc));
    }
    return image;
}

std::vector<Rational> row_profile(const FinMatrix& a, std::uint64_t i, std::uint64_t l) {
    return row_slice(a, i, 0, l + 1);
}

std::vector<Rational> row_slice(const FinMatrix& a, std::uint64_t i, std::uint64_t lo,
                                std::uint64_t hi) {
    if (i >= a.nrows()) throw InvalidArgument("row index out of range");
    if (lo > hi) throw InvalidArgument("row_slice: lo > hi");
    std::vector<Rational> out(hi - lo, Rational(0));
    for (const auto& [col, val] : a.row(i).entries()) {
        if (col >= lo && col < hi) out[col - lo] = val;
    }
    return out;
}

FinMatrix materialize(const InfMatrixSpec& spec, std::uint64_t n) {
    if (n < 1) throw InvalidArgument("materialize: need at least one row");
    if (!spec.row_generator) throw InvalidArgument("materialize: spec has no row generator");

    std::vector<SparseRow> rows;
    rows.reserve(n);
    std::uint64_t ncols = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        SparseRow row = spec.row_generator(i);
        if (!row.empty()) {
            const std::uint64_t top = row.max_col();
            if (spec.support_bound && top >= spec.support_bound(i)) {
                throw InvalidArgument("materialize: row " + std::to_string(i) +
                                      " violates its declared support bound");
            }
            ncols = std::max(ncols, top + 1);
        }
        if (spec.support_bound) {
            ncols = std::max(ncols, spec.support_bound(i));
        }
        rows.push_back(std::move(row));
    }
    return FinMatrix(n, ncols, std::move(rows));
}

namespace {

Rational rational_from_json_value(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) {
        // Route through the decimal string so arbitrary 64-bit values survive.
        if (v.is_number_unsigned()) return Rational::parse(std::to_string(v.get<std::uint64_t>()));
        return Rational::parse(std::to_string(v.get<std::int64_t>()));
    }
    throw ParseError("matrix value must be an integer or a \"num/den\" string");
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

} // namespace

std::string matrix_to_json(const FinMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.rows()) {
        json row = json::array();
        for (const auto& [col, val] : r.entries()) {
            row.push_back(json::array({col, val.str()}));
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["nrows"] = m.nrows();
    doc["ncols"] = m.ncols();
    doc["rows"] = std::move(rows);
    return doc.dump();
}

FinMatrix matrix_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("nrows") || !doc.contains("ncols") ||
        !doc.contains("rows")) {
        throw ParseError("matrix document needs nrows, ncols and rows");
    }
    if (!doc["nrows"].is_number_unsigned() || !doc["ncols"].is_number_unsigned() ||
        !doc["rows"].is_array()) {
        throw ParseError("matrix document has wrongly typed fields");
    }
    const auto nrows = doc["nrows"].get<std::uint64_t>();
    const auto ncols = doc["ncols"].get<std::uint64_t>();
    const json& rows_doc = doc["rows"];
    if (rows_doc.size() != nrows) {
        throw ParseError("matrix rows array length does not match nrows");
    }

    std::vector<SparseRow> rows;
    rows.reserve(nrows);
    for (const json& row_doc : rows_doc) {
        if (!row_doc.is_array()) throw ParseError("matrix row must be an array of entries");
        std::vector<SparseRow::Entry> entries;
        entries.reserve(row_doc.size());
        for (const json& entry : row_doc) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned()) {
                throw ParseError("matrix entry must be [column, value]");
            }
            const auto col = entry[0].get<std::uint64_t>();
            Rational val = rational_from_json_value(entry[1]);
            if (val.is_zero()) throw ParseError("matrix entry stores an explicit zero");
            if (col >= ncols) throw ParseError("matrix entry column beyond ncols");
            entries.emplace_back(col, std::move(val));
        }
        try {
            rows.emplace_back(std::move(entries));
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what());
        }
    }
    return FinMatrix(nrows, ncols, std::move(rows));
}

} // namespace ipr
