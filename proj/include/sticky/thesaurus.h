// Copyright 2026 The Stickyword Authors.
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

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace sticky {

// Directional synonym map: an entry end -> {death} does not imply the
// reverse. Keys and values are lowercase normal forms.
class Thesaurus {
 public:
  // Self-synonyms are dropped. Words are lowercased.
  void Add(std::string_view word, std::string_view synonym);

  // Empty set for unknown words.
  const std::set<std::string>& SynonymsOf(std::string_view word) const;

  std::size_t size() const { return synonyms_.size(); }
  bool empty() const { return synonyms_.empty(); }

 private:
  std::map<std::string, std::set<std::string>, std::less<>> synonyms_;
};

}  // namespace sticky
