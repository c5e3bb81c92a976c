// Frozen expected values shared by the unit and acceptance tests.
#pragma once

namespace fixtures {

// order-6 sequence used throughout the discrepancy examples
inline constexpr const char* kSeq64 =
    "0000001111110111100111010111000110110100110010110000101010001001";

// co-necklace concatenations, order 5
inline constexpr const char* kCcr2n5 = "00000111110010011011000101110101";
inline constexpr const char* kCcr3n5 = "10011011001010111010001111100000";

// weight-bounded concatenations, order 6
inline constexpr const char* kMinWeight63 = "000111001011001101001111010101110110111111";
inline constexpr const char* kMinWeight64 = "0011110101110110111111";
inline constexpr const char* kMaxWeight64 = "1100001010001001000000";
inline constexpr const char* kWeightRange6 =
    "1100001010001001000000110001110010110011010011110101011101101111";

// m-sequence of the width-5 register with taps a1^a4 from seed 00001
inline constexpr const char* kMseq5 = "0000101011101100011111001101001";

}  // namespace fixtures
