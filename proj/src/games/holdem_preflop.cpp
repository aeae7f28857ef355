#include "arena/games/holdem.hpp"

namespace arena::holdem {

// Win probability (percent tenths) of each canonical preflop class
// against a uniformly random hand with all five community cards
// dealt out; ties are not counted as wins.  Index = row*13 + col
// over ranks 2..A: diagonal = pairs, upper triangle = suited,
// lower = offsuit.  Generated by tools/gen_preflop_table.
const std::array<int16_t, 169> kPreflopWinTenths = {
     494,  332,  340,  350,  348,  354,  377,  400,  426,  452,  481,  512,  555,  // 2 row
     293,  529,  357,  367,  367,  373,  383,  408,  434,  460,  489,  521,  563,  // 3 row
     302,  321,  563,  386,  385,  392,  401,  414,  442,  469,  498,  529,  572,  // 4 row
     312,  332,  352,  597,  404,  410,  420,  434,  450,  478,  507,  538,  581,  // 5 row
     311,  331,  350,  370,  627,  428,  438,  451,  468,  486,  517,  548,  581,  // 6 row
     317,  337,  356,  377,  397,  657,  457,  470,  486,  505,  525,  558,  594,  // 7 row
     341,  348,  367,  388,  407,  427,  687,  489,  505,  523,  545,  568,  606,  // 8 row
     365,  375,  381,  401,  421,  441,  460,  716,  525,  542,  562,  586,  615,  // 9 row
     392,  402,  410,  418,  438,  458,  479,  498,  747,  562,  582,  606,  635,  // T row
     420,  429,  439,  449,  457,  478,  497,  517,  538,  771,  592,  615,  644,  // J row
     451,  459,  470,  479,  490,  499,  519,  539,  559,  569,  796,  624,  653,  // Q row
     485,  494,  502,  512,  522,  535,  544,  564,  585,  594,  604,  821,  662,  // K row
     529,  538,  547,  557,  559,  571,  584,  595,  616,  625,  635,  644,  849,  // A row
};

}  // namespace arena::holdem
