#pragma once

#include "ipr/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ipr {

/// First-entries certificate: the positive value t_j forced for every column
/// that is first-nonzero for some row.
struct FirstEntriesCert {
    std::map<std::uint64_t, Rational> t;
};

enum class BlockClass { Empty, FirstEntries, Unverified };

struct SegmentBlock {
    BlockClass kind = BlockClass::Empty;
    std::optional<FirstEntriesCert> fe; // present when kind == FirstEntries
};

/// Column cut points 0 = alphas[0] < ... < alphas.back() = ncols, plus the
/// class recomputed for each block of columns [alphas[k], alphas[k+1]).
struct SegmentationCert {
    std::vector<std::uint64_t> alphas;
    std::vector<SegmentBlock> blocks;
};

/// Restricted-triangular certificate: pivot column j(i) per row (strictly
/// increasing), pivot values in {1..d}, zeros right of the pivot, and every
/// t in {1..d} dividing each later row's entry in column j(i).
struct TriCert {
    std::uint64_t d = 1;
    std::vector<std::uint64_t> pivots;
};

std::optional<FirstEntriesCert> is_first_entries(const FinMatrix& a);

bool is_monic_first_entries(const FinMatrix& a);

/// Searches for cut points making every block's nonzero profile set empty or
/// first-entries. Smallest-first with backtracking, so the greedy chain is
/// found first when it covers all columns. Throws InvalidArgument on zero rows.
std::optional<SegmentationCert> detect_segmentation(const FinMatrix& a);

/// Smallest d <= d_max with an increasing pivot map satisfying the three
/// restricted-triangular conditions. Throws InvalidArgument on non-integer
/// entries.
std::optional<TriCert> is_restricted_triangular(const FinMatrix& a, std::uint64_t d_max);

/// Number of the first n_probe generated rows supported inside columns [0, k).
std::uint64_t finite_support_count(const InfMatrixSpec& spec, std::uint64_t k,
                                   std::uint64_t n_probe);

// Definition re-scans. These validate a certificate against the matrix from
// scratch and share no state with the detectors above.
bool check_first_entries_cert(const FinMatrix& a, const FirstEntriesCert& cert);
bool check_segmentation_cert(const FinMatrix& a, const SegmentationCert& cert);
bool check_tri_cert(const FinMatrix& a, const TriCert& cert, std::uint64_t d_max);

/// All predicate results for one matrix as a JSON object (the `classify`
/// document).
std::string classify_to_json(const FinMatrix& a, std::uint64_t tri_d_max);

/// True iff every entry of the matrix is an integer.
bool has_integer_entries(const FinMatrix& a);

} // namespace ipr
