#pragma once

#include "commeval/cover.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace commeval {

enum class CompareMetric { fb3, onmi };

inline constexpr std::array<CompareMetric, 2> all_compare_metrics{CompareMetric::onmi,
                                                                  CompareMetric::fb3};

std::string_view to_string(CompareMetric m) noexcept;
std::optional<CompareMetric> parse_compare_metric(std::string_view name) noexcept;

struct ComparisonResult {
    CompareMetric metric{};
    double value = 0.0;
    /// Set for fb3 only.
    std::optional<double> precision;
    std::optional<double> recall;
};

/// Overlapping BCubed precision of `c` against `l`: for every element, the
/// mean over its associates e' (sharing at least one cluster in c, e itself
/// included) of min(|C(e)∩C(e')|, |L(e)∩L(e')|) / |C(e)∩C(e')|, then
/// averaged over elements.
double bcubed_precision(const Cover& c, const Cover& l);

/// F-BCubed: harmonic mean of precision(c, l) and recall(c, l) = precision(l, c).
/// Throws MismatchError when the covers range over different node counts.
ComparisonResult fb3(const Cover& c, const Cover& l);

/// Overlapping normalized mutual information (Lancichinetti, Fortunato and
/// Kertész), entropies in bits. Throws MismatchError on different node counts.
ComparisonResult onmi(const Cover& c, const Cover& l);

ComparisonResult compare(const Cover& c, const Cover& l, CompareMetric metric);

} // namespace commeval
