#include "presets.hpp"

#include <stdexcept>
#include <string>

namespace descm::cli {

const SpectrumTable& spectrum_table(int id) {
  static const SpectrumTable table1{
      1,
      {-1.0, 3.0, -2.0, 0.0, 0.1},
      {5, 10, 15, 20, 25, 30, 35, 40, 45, 50},
      {
          {-0.183054938746611, 0.441479870018253, 2.620487757023682},
          {-0.0976947154532108, 0.670920848438211, 3.112803149372351},
          {-0.0962838618463357, 0.672983395806946, 3.110900059783247},
          {-0.0962939179110841, 0.672989564944146, 3.111020042497232},
          {-0.0962917320927764, 0.672993682058299, 3.111022843861247},
          {-0.0962919468261398, 0.672993241672601, 3.111022328272051},
          {-0.0962919458832259, 0.672993243476173, 3.111022329656410},
          {-0.0962919462260392, 0.672993242754209, 3.111022328736961},
          {-0.0962919462302011, 0.672993242746560, 3.111022328725989},
          {-0.0962919462309655, 0.672993242745170, 3.111022328724715},
      }};
  static const SpectrumTable table2{
      2,
      {1.0, 0.0, 0.0, 100.0},
      {3, 6, 9, 12, 15, 18, 21, 24, 27, 30},
      {
          {3.18583889990311, 12.1774056576440, 25.9667305118017},
          {3.18865215097014, 12.1950090976147, 26.0334131709351},
          {3.18865434610824, 12.1950219328947, 26.0334583310462},
          {3.18865434649856, 12.1950219336715, 26.0334583214430},
          {3.18865434649231, 12.1950219336306, 26.0334583212540},
          {3.18865434649241, 12.1950219336298, 26.0334583212524},
          {3.18865434649213, 12.1950219336305, 26.0334583212523},
          {3.18865434649426, 12.1950219336305, 26.0334583212539},
          {3.18865434649200, 12.1950219336299, 26.0334583212526},
          {3.18865434649236, 12.1950219336314, 26.0334583212516},
      }};
  switch (id) {
    case 1: return table1;
    case 2: return table2;
  }
  throw std::invalid_argument("no spectrum table " + std::to_string(id));
}

const GroundStateTable& ground_state_table(int id) {
  static const GroundStateTable table3{3, {
      {{0.1, 0.1}, 20, 5.6694532770815997e-1, 1.6e-12},
      {{0.1, 1}, 18, 1.0962243662319233, 2.3e-12},
      {{1, 1}, 17, 1.3923516415352821, 2.5e-12},
      {{1, 10}, 17, 2.4491740721179220, 8.8e-14},
      {{10, 10}, 15, 3.7029004216662731, 4.0e-13},
      {{-0.1, 0.1}, 21, 4.1046961591503783e-1, 2.6e-12},
      {{-0.1, 1}, 18, 1.0238094432848113, 4.7e-13},
      {{-1, 1}, 19, 6.5765300518294945e-1, 5.4e-14},
      {{-1, 10}, 17, 2.1128778980507850, 7.1e-13},
      {{-10, 10}, 19, 9.0479065692642441e-2, 1.7e-12},
  }};
  static const GroundStateTable table4{4, {
      {{0.1, 0.1, 0.1}, 23, 7.6469531499643029e-1, 4.2e-13},
      {{1, 1, 1}, 20, 1.6148940820343036, 1.6e-12},
      {{0.1, 1, 10}, 19, 2.1277742176946535, 3.7e-12},
      {{1, 10, 10}, 17, 2.7940871778594101, 3.3e-12},
      {{10, 10, 10}, 16, 3.8948206179865981, 2.5e-12},
      {{-0.1, 0.1, 0.1}, 23, 6.6383017274207901e-1, 2.0e-12},
      {{1, -1, 1}, 23, 1.2022669303165900, 8.0e-13},
      {{-0.1, -1, 10}, 20, 1.9385567907196897, 2.7e-13},
      {{-1, 10, 10}, 17, 2.5157308558338656, 2.3e-12},
      {{10, -10, 10}, 20, 2.9588710692969618, 1.9e-12},
  }};
  static const GroundStateTable table5{5, {
      {{0.1, 0.1, 0.1, 0.1}, 23, 9.2287072386834434e-1, 3.0e-13},
      {{0.1, 1, 10, 10}, 21, 2.3988345516957166, 2.2e-12},
      {{1, 1, 10, 10}, 21, 2.5285749972092857, 2.2e-12},
      {{1, 10, 10, 10}, 20, 2.9458972541841404, 9.8e-13},
      {{10, 10, 10, 10}, 19, 3.9840271957255702, 3.1e-12},
      {{-0.1, 0.1, -0.1, 0.1}, 27, 6.9423980434904176e-1, 1.6e-12},
      {{0.1, -1, 10, 10}, 22, 2.2867765902246440, 1.0e-12},
      {{-1, -1, 10, 10}, 22, 2.1181378732419969, 1.4e-12},
      {{1, 10, -10, 10}, 23, 2.3756889547019138, 3.9e-12},
      {{-10, -10, -10, 10}, 35, -9.7139097706403668, 4.8e-12},
  }};
  static const GroundStateTable table6{6, {
      {{0.1, 0.1, 0.1, 0.1, 0.1}, 27, 1.0520482472987258, 4.9e-12},
      {{0.1, 0.1, 1, 1, 1}, 24, 1.5773348519927783, 2.6e-12},
      {{1, 1, 1, 10, 10}, 23, 2.4237300030396556, 3.1e-12},
      {{1, 10, 10, 10, 10}, 21, 3.0275420892666491, 7.4e-13},
      {{10, 10, 10, 10, 10}, 21, 4.0329202866021152, 1.6e-12},
      {{-0.1, -0.1, 0.1, 0.1, 0.1}, 29, 9.2562395524222385e-1, 2.4e-12},
      {{0.1, 0.1, -1, -1, 1}, 33, 8.6187455263857027e-1, 4.4e-12},
      {{-1, 1, 1, -10, 10}, 35, 1.3353894631528094, 4.6e-12},
      {{1, -10, -10, 10, 10}, 28, 1.0275704201029547, 2.8e-12},
      {{-10, -10, -10, -10, 10}, 52, -2.2446238129792420e1, 2.7e-12},
  }};
  switch (id) {
    case 3: return table3;
    case 4: return table4;
    case 5: return table5;
    case 6: return table6;
  }
  throw std::invalid_argument("no ground-state table " + std::to_string(id));
}

}  // namespace descm::cli
