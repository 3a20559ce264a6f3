#ifndef QES_FIXTURES_HPP
#define QES_FIXTURES_HPP

#include "qes/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qes {

// One printed entry of the factored AIM coefficient table:
// C_nd = content * L^l_power * prod_k (E+L-k) * Y_{y_index}.
struct PrintedCoefficient {
  unsigned n = 0;
  unsigned d = 0;
  Int content;
  unsigned l_power = 0;
  std::vector<unsigned> ks;
  std::optional<unsigned> y_index;
};

// Printed value that the exact computation contradicts.
struct Erratum {
  unsigned n = 0;
  unsigned d = 0;
  Int printed;
  Int corrected;
  std::string note;
};

// Transcription, n = 1..5, d = n+1 down to 0.
const std::vector<PrintedCoefficient>& printed_aim_table();
const std::vector<Erratum>& aim_table_errata();

// Y_0 in canonical parser syntax.
const std::string& printed_y0();

// Constraint polynomial rows N = 1..5 (index 0 is N = 1).
const std::vector<std::string>& printed_juddian_rows();

}  // namespace qes

#endif
