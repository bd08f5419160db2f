// Copyright (c) 2026 the qclone authors.
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

#include "qclone/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qclone {

namespace {
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> canonical(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return blocks;
}
}  // namespace

Diagram::Diagram(int k, std::vector<std::vector<int>> blocks) : k_(k) {
  blocks_ = canonical(std::move(blocks));
  std::vector<bool> seen(2 * k + 1, false);
  int count = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw DimensionError("diagram: empty block");
    for (int v : b) {
      if (v < 1 || v > 2 * k || seen[v])
        throw DimensionError("diagram: vertices must partition {1..2k}");
      seen[v] = true;
      ++count;
    }
  }
  if (count != 2 * k)
    throw DimensionError("diagram: vertices must partition {1..2k}");
}

Diagram Diagram::identity(int k) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= k; ++i) blocks.push_back({i, k + i});
  return Diagram(k, blocks);
}

Diagram Diagram::from_permutation(const Perm& sigma) {
  int k = static_cast<int>(sigma.size());
  Perm check = sigma;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < k; ++i)
    if (check[i] != i) throw DimensionError("from_permutation: not a bijection");
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < k; ++i) blocks.push_back({i + 1, k + sigma[i] + 1});
  return Diagram(k, blocks);
}

Diagram Diagram::partial_transpose_rows(const std::set<int>& rows) const {
  std::vector<int> map(2 * k_ + 1);
  std::iota(map.begin(), map.end(), 0);
  for (int i : rows) {
    if (i < 1 || i > k_) throw DimensionError("partial_transpose_rows: row");
    std::swap(map[i], map[k_ + i]);
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    for (int v : b) nb.push_back(map[v]);
    blocks.push_back(nb);
  }
  return Diagram(k_, blocks);
}

int Diagram::closure_loop_count() const {
  Dsu dsu(2 * k_);
  for (const auto& b : blocks_)
    for (size_t i = 1; i < b.size(); ++i) dsu.unite(b[0] - 1, b[i] - 1);
  for (int i = 0; i < k_; ++i) dsu.unite(i, k_ + i);
  std::set<int> roots;
  for (int v = 0; v < 2 * k_; ++v) roots.insert(dsu.find(v));
  return static_cast<int>(roots.size());
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << '|';
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) os << ',';
      os << blocks_[b][i];
    }
  }
  return os.str();
}

std::string Diagram::to_string_full() const {
  return to_string() + "@k=" + std::to_string(k_);
}

Diagram Diagram::parse(const std::string& text) {
  std::string body = text;
  int k = -1;
  if (auto at = text.find('@'); at != std::string::npos) {
    body = text.substr(0, at);
    std::string suffix = text.substr(at + 1);
    if (suffix.rfind("k=", 0) != 0)
      throw ParseError("diagram parse: expected @k=<int> at position " +
                       std::to_string(at));
    k = std::stoi(suffix.substr(2));
  }
  std::vector<std::vector<int>> blocks;
  int maxVertex = 0;
  std::stringstream ss(body);
  std::string blockText;
  size_t pos = 0;
  while (std::getline(ss, blockText, '|')) {
    std::vector<int> block;
    std::stringstream bs(blockText);
    std::string item;
    while (std::getline(bs, item, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 1) throw std::invalid_argument(item);
        block.push_back(v);
        maxVertex = std::max(maxVertex, v);
      } catch (const std::exception&) {
        throw ParseError("diagram parse: bad vertex '" + item +
                         "' at position " + std::to_string(pos));
      }
    }
    if (block.empty())
      throw ParseError("diagram parse: empty block at position " +
                       std::to_string(pos));
    blocks.push_back(block);
    pos += blockText.size() + 1;
  }
  if (k < 0) {
    if (maxVertex % 2 != 0) throw ParseError("diagram parse: odd vertex count");
    k = maxVertex / 2;
  }
  try {
    return Diagram(k, blocks);
  } catch (const DimensionError& e) {
    throw ParseError(std::string("diagram parse: ") + e.what());
  }
}

std::string Family::name() const {
  switch (kind) {
    case Symmetric:
      return "symmetric";
    case PartitionMonoid:
      return "partition";
    case Brauer:
      return "brauer";
    case WalledBrauer:
      return "walled-brauer(" + std::to_string(wall) + ")";
    case UniformBlock:
      return "uniform-block";
  }
  return "?";
}

std::pair<Diagram, int> compose(const Diagram& p, const Diagram& q) {
  if (p.k() != q.k()) throw DimensionError("compose: mismatched k");
  int k = p.k();
  // vertex ids: p's 1..2k -> 0..2k-1, q's 1..2k -> 2k..4k-1
  Dsu dsu(4 * k);
  for (const auto& b : p.blocks())
    for (size_t i = 1; i < b.size(); ++i) dsu.unite(b[0] - 1, b[i] - 1);
  for (const auto& b : q.blocks())
    for (size_t i = 1; i < b.size(); ++i)
      dsu.unite(2 * k + b[0] - 1, 2 * k + b[i] - 1);
  // glue p's right column to q's left column
  for (int i = 1; i <= k; ++i) dsu.unite(i - 1, 2 * k + k + i - 1);
  // surviving vertices: new right column from q's right, new left from p's
  std::map<int, std::vector<int>> comps;
  for (int i = 1; i <= k; ++i) {
    comps[dsu.find(2 * k + i - 1)].push_back(i);
    comps[dsu.find(k + i - 1)].push_back(k + i);
  }
  int loops = 0;
  std::set<int> roots;
  for (int v = 0; v < 4 * k; ++v) roots.insert(dsu.find(v));
  for (int r : roots)
    if (!comps.count(r)) ++loops;
  std::vector<std::vector<int>> blocks;
  for (auto& [root, verts] : comps) blocks.push_back(verts);
  return {Diagram(k, blocks), loops};
}

namespace {
bool is_brauer(const Diagram& p) {
  for (const auto& b : p.blocks())
    if (b.size() != 2) return false;
  return true;
}

bool is_uniform(const Diagram& p) {
  int k = p.k();
  for (const auto& b : p.blocks()) {
    long right = std::count_if(b.begin(), b.end(),
                               [k](int v) { return v <= k; });
    if (2 * right != static_cast<long>(b.size())) return false;
  }
  return true;
}

// Walled rule: within-column pairs must cross the wall, cross-column pairs
// must stay on one side of it.
bool is_walled(const Diagram& p, int wall) {
  if (!is_brauer(p)) return false;
  int k = p.k();
  for (const auto& b : p.blocks()) {
    int u = b[0], v = b[1];
    bool colU = u > k, colV = v > k;
    int rowU = colU ? u - k : u, rowV = colV ? v - k : v;
    bool sideU = rowU <= wall, sideV = rowV <= wall;
    if (colU == colV) {
      if (sideU == sideV) return false;
    } else {
      if (sideU != sideV) return false;
    }
  }
  return true;
}
}  // namespace

bool is_member(const Diagram& p, const Family& family) {
  switch (family.kind) {
    case Family::Symmetric: {
      if (!is_brauer(p)) return false;
      int k = p.k();
      for (const auto& b : p.blocks())
        if ((b[0] <= k) == (b[1] <= k)) return false;
      return true;
    }
    case Family::PartitionMonoid:
      return true;
    case Family::Brauer:
      return is_brauer(p);
    case Family::WalledBrauer:
      return is_walled(p, family.wall);
    case Family::UniformBlock:
      return is_uniform(p);
  }
  return false;
}

namespace {
void set_partitions_rec(int v, int maxV,
                        std::vector<std::vector<int>>& blocks,
                        std::vector<Diagram>& out, int k,
                        const Family& family) {
  if (v > maxV) {
    Diagram d(k, blocks);
    if (is_member(d, family)) out.push_back(d);
    return;
  }
  const size_t existing = blocks.size();
  for (size_t i = 0; i < existing; ++i) {
    blocks[i].push_back(v);
    set_partitions_rec(v + 1, maxV, blocks, out, k, family);
    blocks[i].pop_back();
  }
  blocks.push_back({v});
  set_partitions_rec(v + 1, maxV, blocks, out, k, family);
  blocks.pop_back();
}

void matchings_rec(std::vector<int>& left,
                   std::vector<std::vector<int>>& blocks,
                   std::vector<Diagram>& out, int k, const Family& family) {
  if (left.empty()) {
    Diagram d(k, blocks);
    if (is_member(d, family)) out.push_back(d);
    return;
  }
  int a = left.front();
  for (size_t i = 1; i < left.size(); ++i) {
    int b = left[i];
    std::vector<int> rest;
    for (size_t j = 1; j < left.size(); ++j)
      if (j != i) rest.push_back(left[j]);
    blocks.push_back({a, b});
    matchings_rec(rest, blocks, out, k, family);
    blocks.pop_back();
  }
}
}  // namespace

std::vector<Diagram> enumerate_family(const Family& family, int k) {
  std::vector<Diagram> out;
  switch (family.kind) {
    case Family::Symmetric:
      for (const auto& sigma : all_perms(k))
        out.push_back(Diagram::from_permutation(sigma));
      break;
    case Family::Brauer:
    case Family::WalledBrauer: {
      if (k > 6) throw CapExceeded("enumerate: Brauer cap k <= 6");
      std::vector<int> verts(2 * k);
      std::iota(verts.begin(), verts.end(), 1);
      std::vector<std::vector<int>> blocks;
      matchings_rec(verts, blocks, out, k, family);
      break;
    }
    case Family::PartitionMonoid:
    case Family::UniformBlock: {
      if (k > 5) throw CapExceeded("enumerate: partition cap k <= 5");
      std::vector<std::vector<int>> blocks;
      set_partitions_rec(1, 2 * k, blocks, out, k, family);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qclone
