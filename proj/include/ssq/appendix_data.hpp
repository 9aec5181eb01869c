#pragma once

// Transcription of the published table of Gorenstein algebras of dimension 2k, k <= 5.
// Kept byte-identical to data/appendix.csv (checked by the test suite).

namespace ssq {

inline constexpr const char* kAppendixCsv = R"csv(k,h,gens
1,"[1,1]",
2,"[1,4,1]",
2,"[1,5,1]","3,4"
2,"[1,6,1]","4,4"
3,"[1,9,9,1]",
3,"[1,10,10,1]","4,5"
3,"[1,10,10,1]","3,6"
3,"[1,12,12,1]","4,6"
3,"[1,11,11,1]","5,5"
3,"[1,15,15,1]","6,6"
4,"[1,16,36,16,1]",
4,"[1,17,39,17,1]","5,6"
4,"[1,17,38,17,1]","4,7"
4,"[1,17,40,17,1]","3,8"
4,"[1,18,44,18,1]","5,6;3,8"
4,"[1,19,43,19,1]","5,7"
4,"[1,19,44,19,1]","4,8"
4,"[1,18,42,18,1]","6,6"
4,"[1,19,48,19,1]","6,6;3,8"
4,"[1,22,50,22,1]","7,7"
4,"[1,28,70,28,1]","8,8"
5,"[1,25,100,100,25,1]",
5,"[1,26,106,106,26,1]","6,7"
5,"[1,26,104,104,26,1]","5,8"
5,"[1,26,105,105,26,1]","4,9"
5,"[1,26,109,109,26,1]","3,10"
5,"[1,27,112,112,27,1]","6,7;4,9"
5,"[1,27,116,116,27,1]","6,7;3,10"
5,"[1,27,114,114,27,1]","5,8;3,10"
5,"[1,28,114,114,28,1]","6,8"
5,"[1,29,126,126,29,1]","6,8;3,10"
5,"[1,29,128,128,29,1]","4,8"
5,"[1,28,119,119,28,1]","4,10;6,7"
5,"[1,31,127,127,31,1]","6,9"
5,"[1,31,131,131,31,1]","5,10"
5,"[1,35,135,135,35,1]","6,10"
5,"[1,27,112,112,27,1]","7,7"
5,"[1,28,119,119,28,1]","7,7;4,9"
5,"[1,28,123,123,28,1]","7,7;3,10"
5,"[1,30,137,137,30,1]","7,7;4,10"
5,"[1,31,128,128,31,1]","8,8"
5,"[1,32,143,143,32,1]","8,8;3,10"
5,"[1,37,154,154,37,1]","9,9"
5,"[1,45,210,210,45,1]","10,10"
)csv";

}  // namespace ssq
