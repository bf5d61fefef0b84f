#include "jaco/published.hpp"

namespace jaco::published {

std::span<const Table1Row> table1() {
  static const std::vector<Table1Row> rows = {
      {1, 0, 1, {1}, 0, 0},
      {2, 1, 3, {1, 2}, 1, 1},
      {3, 1, 8, {2}, 2, 2},
      {4, 2, 14, {2}, 3, 2},
      {5, 3, 22, {2}, 4, 2},
      {6, 3, 33, {2, 3, 4, 5}, 4, 3},
      {7, 4, 45, {3, 4, 5}, 5, 3},
      {8, 5, 59, {3, 4, 5}, 6, 3},
      {9, 6, 73, {3, 4, 5}, 7, 3},
      {10, 7, 93, {3, 4, 5}, 8, 3},
      {11, 8, 113, {3, 4, 5}, 9, 3},
      {12, 8, 136, {4, 5}, 10, 4},
      {13, 9, 160, {4, 5}, 11, 4},
      {14, 10, 186, {4, 5}, 12, 4},
      {15, 11, 214, {4, 5}, 13, 4},
      {16, 12, 244, {4, 5}, 14, 4},
      {17, 13, 276, {4, 5}, 15, 4},
      {18, 14, 310, {4, 5}, 16, 4},
      {19, 14, 347, {5}, 17, 5},
      {20, 15, 385, {5}, 18, 5},
      {21, 16, 425, {5}, 19, 5},
      {22, 17, 467, {5}, 20, 5},
      {23, 18, 511, {5}, 21, 5},
      {24, 19, 557, {5}, 22, 5},
      {25, 20, 605, {5}, 23, 5},
      {26, 21, 655, {5}, 24, 5},
      {27, 22, 707, {5}, 25, 5},
      {28, 22, 762, {5, 6, 7, 8, 9, 10, 11}, 25, 6},
      {29, 23, 818, {6, 7, 8, 9, 10, 11}, 26, 6},
      {30, 24, 876, {6, 7, 8, 9, 10, 11}, 27, 6},
      {31, 25, 939, {6, 7, 8, 9, 10, 11}, 28, 6},
      {32, 26, 998, {6, 7, 8, 9, 10, 11}, 29, 6},
      {33, 27, 1062, {6, 7, 8, 9, 10, 11}, 30, 6},
      {34, 28, 1128, {6, 7, 8, 9, 10, 11}, 31, 6},
      {35, 29, 1196, {6, 7, 8, 9, 10, 11}, 32, 6},
  };
  return rows;
}

std::span<const Table3Row> table3() {
  static const std::vector<Table3Row> rows = {
      {1, 1, 1, {1, 1}, {1, 1}, {0, 1}, {0, 1}},
      {2, 3, 3, {3, 2}, {3, 2}, {1, 4}, {1, 4}},
      {3, 4, 5, {4, 3}, {5, 3}, {2, 9}, {2, 9}},
      {4, 7, 9, {7, 4}, {9, 4}, {11, 16}, {11, 16}},
      {5, 11, 14, {11, 5}, {14, 5}, {34, 25}, {34, 25}},
      {6, 13, 17, {13, 6}, {17, 6}, {41, 36}, {41, 36}},
      {7, 18, 24, {18, 7}, {24, 7}, {96, 49}, {96, 49}},
      {8, 24, 32, {24, 8}, {32, 8}, {192, 64}, {192, 64}},
      {9, 31, 41, {31, 9}, {41, 9}, {344, 81}, {344, 81}},
      {10, 39, 51, {39, 10}, {51, 10}, {469, 100}, {469, 100}},
      {11, 48, 62, {48, 11}, {62, 11}, {886, 121}, {886, 121}},
      {12, 49, 71, {49, 12}, {71, 12}, {1091, 144}, {1091, 144}},
      {13, 59, 84, {59, 13}, {84, 13}, {1602, 169}, {1602, 169}},
      {14, 70, 98, {70, 14}, {98, 14}, {2268, 196}, {2268, 196}},
      {15, 82, 113, {82, 15}, {113, 15}, {3116, 225}, {3116, 225}},
      {16, 95, 129, {95, 16}, {129, 16}, {4175, 256}, {4175, 256}},
      {17, 104, 146, {109, 17}, {146, 17}, {5476, 289}, {5476, 289}},
      {18, 119, 164, {124, 18}, {164, 18}, {7852, 324}, {7852, 324}},
      {19, 122, 177, {127, 19}, {177, 19}, {7716, 361}, {7716, 361}},
      {20, 138, 197, {143, 20}, {197, 20}, {9771, 20}, {9771, 20}},
  };
  return rows;
}

}  // namespace jaco::published
