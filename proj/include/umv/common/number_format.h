// Copyright 2026 The UMV Design Toolkit Authors
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

#ifndef UMV_COMMON_NUMBER_FORMAT_H_
#define UMV_COMMON_NUMBER_FORMAT_H_

#include <string>
#include <string_view>

namespace umv {

// Shortest decimal that reads back to the same double. Locale independent.
// Non-finite values print as "nan", "inf" and "-inf".
std::string FormatShortest(double v);

// Shortest round-trip decimal of v rounded to `digits` significant digits.
std::string FormatSignificant(double v, int digits);

// Parses the whole of `text` as a double (accepting the non-finite
// spellings above). Returns false on any leftover character.
bool ParseDouble(std::string_view text, double& out);

}  // namespace umv

#endif  // UMV_COMMON_NUMBER_FORMAT_H_
