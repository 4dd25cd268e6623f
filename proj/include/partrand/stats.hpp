#pragma once

#include <cstdint>
#include <vector>

namespace partrand {

// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
double gamma_q(double a, double x);

// Upper-tail p-value of the chi-square statistic with df degrees of freedom.
double chi_square_pvalue(double stat, double df);

// Pearson statistic for observed counts against expected probabilities.
double chi_square_stat(const std::vector<std::uint64_t>& observed,
                       const std::vector<double>& expected_probs);

} // namespace partrand
