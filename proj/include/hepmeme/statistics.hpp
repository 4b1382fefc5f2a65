#pragma once

#include <span>
#include <vector>

namespace hepmeme::stats {

// Pearson correlation coefficient. Throws InsufficientData for fewer than
// two points or mismatched lengths, DegenerateVariance when either series
// is constant.
double pearson(std::span<const double> x, std::span<const double> y);

// Ranks with ties averaged (1-based).
std::vector<double> average_ranks(std::span<const double> x);

double spearman(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> x);

}  // namespace hepmeme::stats
