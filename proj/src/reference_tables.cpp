#include "plateau/reference_tables.hpp"

namespace plateau::reference {

const std::vector<PrintedRow>& column_convex_table() {
  static const std::vector<PrintedRow> rows = {
      {1, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {2, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {3, {1, 4, 1, 0, 0, 0, 0, 0, 0, 0}},
      {4, {1, 9, 8, 1, 0, 0, 0, 0, 0, 0}},
      {5, {1, 16, 31, 12, 1, 0, 0, 0, 0, 0}},
      {6, {1, 25, 85, 68, 16, 1, 0, 0, 0, 0}},
      {7, {1, 36, 190, 260, 121, 20, 1, 0, 0, 0}},
      {8, {1, 49, 371, 777, 604, 190, 24, 1, 0, 0}},
      {9, {1, 64, 658, 1960, 2299, 1180, 275, 28, 1, 0}},
      {10, {1, 81, 1086, 4368, 7221, 5509, 2052, 376, 32, 1}},
  };
  return rows;
}

const std::vector<PrintedRow>& plateau_table() {
  static const std::vector<PrintedRow> rows = {
      {2, {1, 0, 0, 0, 0, 0, 0}},
      {3, {2, 0, 0, 0, 0, 0, 0}},
      {4, {3, 1, 0, 0, 0, 0, 0}},
      {5, {4, 8, 0, 0, 0, 0, 0}},
      {6, {5, 34, 1, 0, 0, 0, 0}},
      {7, {6, 104, 16, 0, 0, 0, 0}},
      {8, {7, 259, 126, 1, 0, 0, 0}},
      {9, {8, 560, 666, 24, 0, 0, 0}},
      {10, {9, 1092, 2701, 280, 1, 0, 0}},
      {11, {10, 1968, 9052, 2152, 32, 0, 0}},
      {12, {11, 3333, 26257, 12418, 498, 1, 0}},
      {13, {12, 5368, 68002, 57922, 5080, 40, 0}},
      {14, {13, 8294, 160732, 229048, 38567, 780, 1}},
      {15, {14, 12376, 352352, 793144, 234178, 9960, 48}},
      {16, {15, 17927, 725153, 2462851, 1191540, 94318, 1126}},
      {17, {16, 25312, 1414348, 6980624, 5249012, 710584, 17304}},
      {16, {17, 34952, 2633878, 18309136, 20506003, 4457930, 196953}},
      {17, {18, 47328, 4711448, 44921072, 72354830, 24048920, 1778848}},
      {18, {19, 62985, 8135078, 103994372, 233915707, 114248221, 13331808}},
      {19, {20, 82536, 13613804, 228782192, 7008599688, 486806272, 85565538}},
      {20, {21, 106666, 22155539, 48109488, 1964393375, 1887595700, 481457252}},
      {21, {22, 136136, 35165504, 971764880, 5190268342, 6738878720, 2418499500}},
      {22, {23, 171787, 54569064, 1893273221, 13010791823, 22364636385, 11003497968}},
      {23, {24, 214544, 82963254, 3570426344, 31111765764, 69550800504, 45877909970}},
  };
  return rows;
}

const std::vector<std::vector<std::uint64_t>>& delannoy_triangle() {
  static const std::vector<std::vector<std::uint64_t>> rows = {
      {1},
      {1, 1},
      {1, 3, 1},
      {1, 5, 5, 1},
      {1, 7, 13, 7, 1},
      {1, 9, 25, 25, 9, 1},
      {1, 11, 41, 63, 41, 11, 1},
      {1, 13, 61, 129, 129, 61, 13, 1},
      {1, 15, 85, 231, 321, 231, 85, 15, 1},
      {1, 17, 113, 377, 681, 681, 377, 113, 17, 1},
  };
  return rows;
}

}  // namespace plateau::reference
