#include "qes/fixtures.hpp"

namespace qes {

namespace {

PrintedCoefficient entry(unsigned n, unsigned d, long content, unsigned lp, std::vector<unsigned> ks,
                         std::optional<unsigned> y) {
  return {n, d, Int(content), lp, std::move(ks), y};
}

}  // namespace

const std::vector<PrintedCoefficient>& printed_aim_table() {
  static const std::vector<PrintedCoefficient> table = {
      entry(1, 2, 16, 2, {0, 1}, std::nullopt),
      entry(1, 1, 8, 1, {1}, 0),
      entry(1, 0, 1, 0, {}, 1),

      entry(2, 3, 64, 3, {0, 1, 2}, std::nullopt),
      entry(2, 2, 48, 2, {1, 2}, 0),
      entry(2, 1, 12, 1, {2}, 1),
      entry(2, 0, 1, 0, {}, 2),

      entry(3, 4, 256, 4, {0, 1, 2, 3}, std::nullopt),
      entry(3, 3, 256, 3, {1, 2, 3}, 0),
      entry(3, 2, 96, 2, {2, 3}, 1),
      entry(3, 1, 16, 1, {3}, 2),
      entry(3, 0, 1, 0, {}, 3),

      entry(4, 5, 1024, 5, {0, 1, 2, 3, 4}, std::nullopt),
      entry(4, 4, 1280, 4, {1, 2, 3, 4}, 0),
      entry(4, 3, 640, 3, {2, 3, 4}, 1),
      entry(4, 2, 160, 2, {3, 4}, 2),
      entry(4, 1, 20, 1, {4}, 3),
      entry(4, 0, 1, 0, {}, 4),

      entry(5, 6, 4096, 6, {0, 1, 2, 3, 4, 5}, std::nullopt),
      entry(5, 5, 1280, 5, {1, 2, 3, 4, 5}, 0),
      entry(5, 4, 3840, 4, {2, 3, 4, 5}, 1),
      entry(5, 3, 1280, 3, {3, 4, 5}, 2),
      entry(5, 2, 240, 2, {4, 5}, 3),
      entry(5, 1, 24, 1, {5}, 4),
      entry(5, 0, 1, 0, {}, 5),
  };
  return table;
}

const std::vector<Erratum>& aim_table_errata() {
  static const std::vector<Erratum> errata = {
      {5, 5, Int(1280), Int(6144),
       "printed content 1280 breaks the 4^d*C(n+1,d) pattern of every other entry; computed 6144 = 4^5*6"},
  };
  return errata;
}

const std::string& printed_y0() {
  static const std::string y0 = "E^2-2*L*E-B-3*L^2";
  return y0;
}

const std::vector<std::string>& printed_juddian_rows() {
  static const std::vector<std::string> rows = {
      "4*L+B-1",
      "32*L^2+4*(3*B-8)*L+(B-1)*(B-4)",
      "384*L^3+16*(11*B-54)*L^2+8*(3*B^2-29*B+54)*L+(B-1)*(B-4)*(B-9)",
      "6144*L^4+128*(25*B-192)*L^3+16*(35*B^2-542*B+1728)*L^2+8*(5*B^3-115*B^2+722*B-1152)*L"
      "+(B-1)*(B-4)*(B-9)*(B-16)",
      "122880*L^5+512*(137*B-1500)*L^4+64*(225*B^2-5036*B+24000)*L^3+16*(85*B^3-2867*B^2+27518*B-72000)*L^2"
      "+4*(15*B^4-670*B^3+9551*B^2-49216*B+72000)*L+(B-1)*(B-4)*(B-9)*(B-16)*(B-25)",
  };
  return rows;
}

}  // namespace qes
