#pragma once
// File formats used by the command line tool, all UTF-8 JSON:
//   matrix     {"n": int, "B": [[int]], "rows": {"label": ["p/q", ...]}}
//   relation   {"coeffs": ["p/q", ...], "vectors": [[rational, ...], ...]}
//   wall dump  [{"seq": [int], "j": int, "pieces": [{"normal": ["p/q"],
//               "cell": [["p/q"], ...]}, ...]}, ...]
// Rationals serialize as "p/q" with q > 0 and gcd(p, q) = 1; parsing also
// accepts bare integers (JSON numbers or "p" strings). The "rows" object
// is omitted when a matrix has no coefficient rows, and row order is
// preserved exactly on a read/write round trip.
//
// Readers throw std::runtime_error with a message naming the problem;
// the command line maps that to a usage error.

#include <string>

#include "mutfan/exchange.hpp"
#include "mutfan/fanviz.hpp"
#include "mutfan/mutmap.hpp"

namespace mutfan {

ExtendedExchangeMatrix readMatrixText(const std::string& text);
ExtendedExchangeMatrix readMatrixFile(const std::string& path);
std::string writeMatrixText(const ExtendedExchangeMatrix& m);
std::string writeMatrixText(const ExchangeMatrix& b);

LinearRelation readRelationText(const std::string& text);
LinearRelation readRelationFile(const std::string& path);
std::string writeRelationText(const LinearRelation& r);

std::string writeWallsText(const FanApproximation& fan);

}  // namespace mutfan
