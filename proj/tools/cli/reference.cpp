#include "cli/reference.hpp"

#include <array>

namespace tilecount::cli {

namespace {

struct ReferenceCounts {
    int n;
    std::int64_t faces;
    std::int64_t edges;
};

// N = 28: 5265 = 28 * 188 + 1.
constexpr std::array<ReferenceCounts, 38> kReferenceCounts{{
    {2, 1, 4},           {3, 6, 12},          {4, 25, 48},         {5, 50, 80},
    {6, 145, 276},       {7, 224, 378},       {8, 497, 960},       {9, 630, 1062},
    {10, 1281, 2500},    {11, 1606, 2860},    {12, 2761, 5424},    {13, 3302, 5980},
    {14, 5265, 10388},   {15, 5940, 10770},   {16, 9185, 18176},   {17, 10472, 19482},
    {18, 14977, 29700},  {19, 16834, 31616},  {20, 23161, 46000},  {21, 25284, 47460},
    {22, 34321, 68244},  {23, 37720, 71714},  {24, 49105, 97728},  {25, 53500, 102150},
    {26, 68225, 135876}, {27, 73278, 140076}, {28, 92457, 184240}, {29, 99470, 191284},
    {30, 122641, 244500}, {31, 131316, 253270}, {32, 159681, 318464}, {33, 169158, 326238},
    {34, 204545, 408068}, {35, 217210, 420840}, {36, 258265, 515376}, {37, 273282, 530432},
    {38, 321937, 642580}, {39, 338208, 656526},
}};

constexpr std::array<ReferenceRow, kReferenceCounts.size()> build() {
    std::array<ReferenceRow, kReferenceCounts.size()> rows{};
    for (std::size_t i = 0; i < kReferenceCounts.size(); ++i) {
        const auto& p = kReferenceCounts[i];
        const int central = p.n % 2 == 0 ? 1 : 0;
        rows[i] = ReferenceRow{
            .n = p.n,
            .sides = 2 * p.n,
            .faces = p.faces,
            .edges = p.edges,
            .vertices = p.edges - p.faces + 1,
            .per_ray = (p.faces - central) / (2 * p.n),
            .central = central,
        };
    }
    return rows;
}

constexpr auto kRows = build();

static_assert(kRows.front().n == kReferenceMinN && kRows.back().n == kReferenceMaxN);

}  // namespace

std::span<const ReferenceRow> reference_table() { return kRows; }

std::optional<ReferenceRow> find_reference(int n) {
    if (n < kReferenceMinN || n > kReferenceMaxN) return std::nullopt;
    return kRows[static_cast<std::size_t>(n - kReferenceMinN)];
}

}  // namespace tilecount::cli
