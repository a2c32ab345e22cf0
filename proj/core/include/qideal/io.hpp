//  Copyright 2026 The qideal Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef QIDEAL_IO_HPP_
#define QIDEAL_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qideal/fuzzy.hpp"
#include "qideal/ideal.hpp"
#include "qideal/qorder.hpp"
#include "qideal/quantale.hpp"

namespace qideal {

/// Malformed or inconsistent instance file. The message names the file and field.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// JSON instance files. Nested structures ("quantale" in a Q-order, "base" in
// a fuzzy set or sequence) are either inline objects or paths relative to
// the referring file.

/// {"kind":"finite","elements","leq","tensor","unit"} or
/// {"kind":"catalog","name","params":{...},"pieces":[[lo,hi,kind]...]}.
AnyQuantale parse_quantale(std::string_view json_text, const std::filesystem::path& base_dir = {});
AnyQuantale load_quantale(const std::filesystem::path& file);

/// {"quantale", "elements", "hom":[[label]]}, or {"quantale", "standard":
/// "dL"|"dR"|"discrete"|"power", "n", "x"} with an optional "opposite": true.
/// Only finite quantales.
QOrder parse_qorder(std::string_view json_text, const std::filesystem::path& base_dir = {});
QOrder load_qorder(const std::filesystem::path& file);

/// {"mapping": {src: tgt}} between two loaded orders.
QMap parse_map(std::string_view json_text, const QOrder& source, const QOrder& target);
QMap load_map(const std::filesystem::path& file, const QOrder& source, const QOrder& target);

struct LoadedFuzzySet {
  QOrder base;
  FuzzySet values;
};

/// {"base", "values": {label: "p/q" | label | number}}. Missing labels are
/// an error; numbers must match a chain value within 1e-9.
LoadedFuzzySet parse_fuzzy_set(std::string_view json_text, const std::filesystem::path& base_dir = {});
LoadedFuzzySet load_fuzzy_set(const std::filesystem::path& file);
/// Values only, resolved against an already loaded base (the file's own
/// "base" entry is ignored).
FuzzySet load_fuzzy_values(const std::filesystem::path& file, const QOrder& base);

struct LoadedSequence {
  QOrder base;
  EventuallyPeriodicSequence sequence;
};

/// {"base", "prefix":[labels], "cycle":[labels]}.
LoadedSequence parse_sequence(std::string_view json_text, const std::filesystem::path& base_dir = {});
LoadedSequence load_sequence(const std::filesystem::path& file);

/// Self-contained serializations (all references inlined), pretty printed.
std::string quantale_to_json(const FiniteQuantale& q);
std::string qorder_to_json(const QOrder& a);
std::string fuzzy_set_to_json(const QOrder& base, const FuzzySet& phi);
std::string map_to_json(const QOrder& source, const QOrder& target, const QMap& f);

/// Writes text to a file, creating parent directories.
void write_text(const std::filesystem::path& file, const std::string& text);

}  // namespace qideal

#endif  // QIDEAL_IO_HPP_
