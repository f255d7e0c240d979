// Copyright 2026 The Halinkit Authors
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

#include "halinkit/subgroup_chain.h"

#include <algorithm>
#include <array>
#include <bitset>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include "halinkit/errors.h"

namespace halinkit {
namespace {

constexpr int kMaxElements = 120;  // 5!
using ElementSet = std::bitset<kMaxElements>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    return std::hash<std::string>()(s.to_string());
  }
};

class SymmetricGroupTable {
 public:
  explicit SymmetricGroupTable(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elements_.size(); ++i) index[elements_[i]] = static_cast<int>(i);
    const int m = size();
    product_.assign(m * m, 0);
    std::vector<int> c(n);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int x = 0; x < n; ++x) c[x] = elements_[a][elements_[b][x]];
        product_[a * m + b] = index[c];
      }
    }
  }

  int size() const { return static_cast<int>(elements_.size()); }
  // next_permutation starts from the identity.
  int identity() const { return 0; }
  int multiply(int a, int b) const { return product_[a * size() + b]; }

  // Subgroup generated by `base` and g.
  ElementSet Closure(const ElementSet& base, int g) const {
    std::vector<int> gens{g};
    for (int a = 0; a < size(); ++a) {
      if (base[a]) gens.push_back(a);
    }
    ElementSet out;
    out[identity()] = true;
    std::vector<int> frontier{identity()};
    while (!frontier.empty()) {
      const int a = frontier.back();
      frontier.pop_back();
      for (int s : gens) {
        const int b = multiply(a, s);
        if (!out[b]) {
          out[b] = true;
          frontier.push_back(b);
        }
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> elements_;
  std::vector<int> product_;
};

}  // namespace

SubgroupChainResult LongestSubgroupChain(int n) {
  if (n < 1 || n > kMaxLatticeDegree) {
    throw PreconditionError("subgroup lattice enumeration supports 1 <= n <= " +
                            std::to_string(kMaxLatticeDegree) + ", got " +
                            std::to_string(n));
  }
  const SymmetricGroupTable table(n);

  // Every subgroup arises from the trivial one by adjoining elements one at
  // a time, so closing the list under "adjoin one element" finds them all.
  std::vector<ElementSet> subgroups;
  std::unordered_set<ElementSet, ElementSetHash> known;
  ElementSet trivial;
  trivial[table.identity()] = true;
  subgroups.push_back(trivial);
  known.insert(trivial);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (int g = 0; g < table.size(); ++g) {
      if (subgroups[i][g]) continue;
      ElementSet next = table.Closure(subgroups[i], g);
      if (known.insert(next).second) subgroups.push_back(next);
    }
  }

  std::sort(subgroups.begin(), subgroups.end(),
            [](const ElementSet& a, const ElementSet& b) {
              return a.count() < b.count();
            });
  // longest[i]: longest chain from subgroups[i] down to the trivial group.
  std::vector<int> longest(subgroups.size(), 0);
  std::vector<int> next_in_chain(subgroups.size(), -1);
  for (std::size_t i = 1; i < subgroups.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool proper_subgroup =
          subgroups[j].count() < subgroups[i].count() &&
          (subgroups[j] & ~subgroups[i]).none();
      if (proper_subgroup && longest[j] + 1 > longest[i]) {
        longest[i] = longest[j] + 1;
        next_in_chain[i] = static_cast<int>(j);
      }
    }
  }

  SubgroupChainResult result;
  result.degree = n;
  result.num_subgroups = static_cast<int>(subgroups.size());
  const int top = static_cast<int>(subgroups.size()) - 1;
  result.length = longest[top];
  for (int k = top; k >= 0; k = next_in_chain[k]) {
    result.orders.push_back(static_cast<int>(subgroups[k].count()));
  }
  return result;
}

}  // namespace halinkit
