#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace tilecount::cli {

/// Known tile and edge counts for the regular 2n-gon, with V and the
/// rotational decomposition derived from them.
struct ReferenceRow {
    int n;
    int sides;
    std::int64_t faces;
    std::int64_t edges;
    std::int64_t vertices;  // edges - faces + 1
    std::int64_t per_ray;   // (faces - central) / sides
    int central;            // 1 iff n is even
};

inline constexpr int kReferenceMinN = 2;
inline constexpr int kReferenceMaxN = 39;

/// Rows for n = 2..39, ascending.
std::span<const ReferenceRow> reference_table();

std::optional<ReferenceRow> find_reference(int n);

}  // namespace tilecount::cli
