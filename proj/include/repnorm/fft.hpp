#pragma once

#include <vector>

#include "repnorm/specfun.hpp"

namespace repnorm {

// Unnormalised DFT: out_j = sum_k in_k exp(sign * 2 pi i j k / N), sign = +-1.
std::vector<cplx> dft(const std::vector<cplx>& in, int sign);

}  // namespace repnorm
