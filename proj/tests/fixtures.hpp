// Copyright 2026 The bcfd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Shared scenarios: folders of documents bought at a price, plus relations
// that let some folders be reconstructed from others.

#include <string>
#include <vector>

#include "bcfd/formula.hpp"
#include "bcfd/infomodel.hpp"
#include "bcfd/premises.hpp"

namespace fixture {

/// Two independent folders priced 3 and 5.
inline const char* kTwoFolders =
    "attrs: a, b\n"
    "buy_a: {} |3 {a}\n"
    "buy_b: {} |5 {b}\n";

/// a holds x xor pad, b holds x, c holds pad; any two determine the third.
inline const char* kPadFolders =
    "attrs: a, b, c\n"
    "buy_a: {} |3 {a}\n"
    "buy_b: {} |5 {b}\n"
    "buy_c: {} |4 {c}\n"
    "rel_ac: {a,c} |0 {b}\n"
    "rel_bc: {b,c} |0 {a}\n";

/// Cheap key c unlocks b from a; key d unlocks a from b.
inline const char* kFourFolders =
    "attrs: a, b, c, d\n"
    "buy_c: {} |1 {c}\n"
    "buy_d: {} |5 {d}\n"
    "buy_a: {} |100 {a}\n"
    "buy_b: {} |100 {b}\n"
    "rel_acb: {a,c} |0 {b}\n"
    "rel_bda: {b,d} |0 {a}\n";

inline const char* kFourFolderFormula =
    "{a} |1 {b} & {b} |5 {a} => ({} |5 {a} | {} |1 {b} | {b} |4 {a})";

inline bcfd::PremiseSet premises(const char* text) { return bcfd::parse_premises(text); }

/// a is a constant folder priced 3, b a free bit priced 5.
inline bcfd::InfoModel two_folder_model() {
  return bcfd::InfoModel(bcfd::AttributeUniverse{"a", "b"}, {bcfd::Budget(3), bcfd::Budget(5)},
                         {{"-", "0"}, {"-", "1"}});
}

/// (x xor pad, x, pad) for every x and pad, priced 3, 5, 4.
inline bcfd::InfoModel pad_model() {
  std::vector<std::vector<std::string>> rows;
  for (int x = 0; x < 2; ++x)
    for (int pad = 0; pad < 2; ++pad)
      rows.push_back({std::to_string(x ^ pad), std::to_string(x), std::to_string(pad)});
  return bcfd::InfoModel(bcfd::AttributeUniverse{"a", "b", "c"},
                         {bcfd::Budget(3), bcfd::Budget(5), bcfd::Budget(4)}, rows);
}

/// A four-tuple model of the four-folder scenario priced 100, 100, 1, 5, in
/// which a |1 b and b |5 a hold while {} |5 a, {} |1 b and b |4 a fail.
inline bcfd::InfoModel four_folder_model() {
  return bcfd::InfoModel(
      bcfd::AttributeUniverse{"a", "b", "c", "d"},
      {bcfd::Budget(100), bcfd::Budget(100), bcfd::Budget(1), bcfd::Budget(5)},
      {{"0", "0", "0", "0"}, {"1", "0", "0", "1"}, {"1", "1", "1", "0"}, {"2", "1", "0", "1"}});
}

}  // namespace fixture
