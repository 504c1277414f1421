#include "hcms/hcms.hpp"

namespace hcms {

// Sum-zero partition of the 6-bit Hamming matrix for n = 21, M = 27, and
// the 6 x 6 matrix K relating the leading 12 columns of the first two
// blocks. Transcribed by hand; check_base_partition() guards the copy.
const BaseData& base_data() {
  static const BaseData data{
      BitMatrix::from_strings({
          "100000100001110110000",
          "010000110000100000111",
          "001000011000011101011",
          "000100001100010011110",
          "000010000110101101111",
          "000001000011001001101",
      }),
      BitMatrix::from_strings({
          "000101101111010001111",
          "100010110111101111000",
          "010001111011100000101",
          "101000111101011100111",
          "010100111110001011011",
          "001010011111110101110",
      }),
      BitMatrix::from_strings({
          "100101001110100111111",
          "110010000111001111111",
          "011001100011111101110",
          "101100110001001111001",
          "010110111000100110100",
          "001011011100111100011",
      }),
      BitMatrix::from_strings({
          "000101",
          "100010",
          "010001",
          "101000",
          "010100",
          "001010",
      }),
  };
  return data;
}

}  // namespace hcms
