// Copyright 2026 The natinterp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "natinterp/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "natinterp/error.hpp"

namespace natinterp {

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels,
                  std::unordered_map<std::string, Poset::Index>& index) {
  index.clear();
  for (Poset::Index i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate label \"" + labels[i] + "\"");
    }
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::vector<std::pair<Index, Index>> covers) {
  Poset p;
  p.labels_ = std::move(labels);
  check_labels(p.labels_, p.index_);
  const std::size_t n = p.labels_.size();

  std::sort(covers.begin(), covers.end());
  for (std::size_t c = 0; c < covers.size(); ++c) {
    auto [lo, up] = covers[c];
    if (lo >= n || up >= n) {
      throw Error(ErrorCode::kUnknownLabel, "cover references an unknown element");
    }
    if (lo == up) {
      throw Error(ErrorCode::kCycleDetected,
                  "element \"" + p.labels_[lo] + "\" covers itself");
    }
    if (c > 0 && covers[c - 1] == covers[c]) {
      throw Error(ErrorCode::kRedundantCover, "cover (" + p.labels_[lo] + ", " +
                                                  p.labels_[up] + ") listed twice");
    }
  }

  std::vector<std::vector<Index>> lower(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [lo, up] : covers) {
    lower[up].push_back(lo);
    ++indegree[up];
  }
  std::vector<std::vector<Index>> upper(n);
  for (auto [lo, up] : covers) upper[lo].push_back(up);

  // Kahn's algorithm; leftover nodes sit on a cycle.
  std::vector<Index> topo;
  topo.reserve(n);
  std::queue<Index> ready;
  for (Index i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    Index v = ready.front();
    ready.pop();
    topo.push_back(v);
    for (Index w : upper[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (topo.size() != n) {
    for (Index i = 0; i < n; ++i) {
      if (indegree[i] != 0) {
        throw Error(ErrorCode::kCycleDetected,
                    "cover relation has a cycle through \"" + p.labels_[i] + "\"");
      }
    }
  }

  p.down_.assign(n, Bits(n));
  for (Index v : topo) {
    p.down_[v].set(v);
    for (Index c : lower[v]) p.down_[v] |= p.down_[c];
  }
  for (Index v = 0; v < n; ++v) {
    for (Index a : lower[v]) {
      for (Index c : lower[v]) {
        if (c != a && p.down_[c].test(a)) {
          throw Error(ErrorCode::kRedundantCover,
                      "cover (" + p.labels_[a] + ", " + p.labels_[v] +
                          ") is implied through \"" + p.labels_[c] + "\"");
        }
      }
    }
  }
  p.covers_ = std::move(covers);
  p.finish();
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels,
                        const std::function<bool(Index, Index)>& leq) {
  Poset p;
  p.labels_ = std::move(labels);
  check_labels(p.labels_, p.index_);
  const std::size_t n = p.labels_.size();
  p.down_.assign(n, Bits(n));
  p.up_.assign(n, Bits(n));
  for (Index x = 0; x < n; ++x) {
    if (!leq(x, x)) {
      throw Error(ErrorCode::kInvalidInput, "order relation is not reflexive");
    }
    for (Index y = 0; y < n; ++y) {
      if (leq(y, x)) {
        if (y != x && leq(x, y)) {
          throw Error(ErrorCode::kCycleDetected, "order relation is not antisymmetric at \"" +
                                                     p.labels_[x] + "\"");
        }
        p.down_[x].set(y);
        p.up_[y].set(x);
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    Bits strictly_below = p.down_[x];
    strictly_below.reset(x);
    for (Index y = strictly_below.find_first(); y != Bits::npos;
         y = strictly_below.find_next(y)) {
      Bits between = p.up_[y] & strictly_below;
      if (between.count() == 1) p.covers_.emplace_back(y, x);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  up_.assign(n, Bits(n));
  for (Index x = 0; x < n; ++x) {
    for (Index y = down_[x].find_first(); y != Bits::npos; y = down_[x].find_next(y)) {
      up_[y].set(x);
    }
  }
  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  for (auto [lo, up] : covers_) {
    lower_covers_[up].push_back(lo);
    upper_covers_[lo].push_back(up);
  }

  std::vector<Index> by_label(n);
  std::iota(by_label.begin(), by_label.end(), Index{0});
  std::sort(by_label.begin(), by_label.end(),
            [&](Index a, Index b) { return labels_[a] < labels_[b]; });
  label_rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) label_rank_[by_label[r]] = r;

  // Topological sort always picking the lexicographically smallest label.
  std::vector<std::size_t> pending(n);
  using Entry = std::pair<std::size_t, Index>;  // (label rank, index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (Index i = 0; i < n; ++i) {
    pending[i] = lower_covers_[i].size();
    if (pending[i] == 0) ready.emplace(label_rank_[i], i);
  }
  linear_extension_.clear();
  while (!ready.empty()) {
    Index v = ready.top().second;
    ready.pop();
    linear_extension_.push_back(v);
    for (Index w : upper_covers_[v]) {
      if (--pending[w] == 0) ready.emplace(label_rank_[w], w);
    }
  }
  linear_position_.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) linear_position_[linear_extension_[pos]] = pos;

  down_words_.clear();
  if (n <= kMaxBaseSize) {
    down_words_.resize(n);
    for (Index x = 0; x < n; ++x) {
      std::uint64_t w = 0;
      for (Index y = down_[x].find_first(); y != Bits::npos; y = down_[x].find_next(y)) {
        w |= std::uint64_t{1} << y;
      }
      down_words_[x] = w;
    }
  }
}

std::optional<Poset::Index> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Poset::Index Poset::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) {
    throw Error(ErrorCode::kUnknownLabel, "unknown label \"" + std::string(label) + "\"");
  }
  return *i;
}

std::vector<Poset::Index> Poset::minimal_elements() const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i) {
    if (lower_covers_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<Poset::Index> Poset::maximal_elements() const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i) {
    if (upper_covers_[i].empty()) out.push_back(i);
  }
  return out;
}

ElementSet Poset::principal_downset(Index i) const { return ElementSet(down_words_.at(i)); }

bool Poset::is_downset(ElementSet s) const {
  if (!s.is_subset_of(all())) return false;
  for (std::size_t i : s.members()) {
    if (!ElementSet(down_words_[i]).is_subset_of(s)) return false;
  }
  return true;
}

bool Poset::is_upset(ElementSet s) const {
  return s.is_subset_of(all()) && is_downset(all().minus(s));
}

bool Poset::is_antichain(ElementSet s) const {
  for (std::size_t i : s.members()) {
    if ((ElementSet(down_words_[i]) & s) != ElementSet::singleton(i)) return false;
  }
  return true;
}

ElementSet Poset::maximal_in(ElementSet s) const {
  ElementSet out;
  for (std::size_t i : s.members()) {
    bool top = true;
    for (Index u : upper_covers_[i]) {
      if (s.contains(u)) {
        top = false;
        break;
      }
    }
    if (top) out |= ElementSet::singleton(i);
  }
  return out;
}

std::vector<std::string> Poset::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : s.members()) out.push_back(labels_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Poset validate_poset(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, Poset::Index> index;
  check_labels(elements, index);
  std::vector<std::pair<Poset::Index, Poset::Index>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, up] : covers) {
    auto a = index.find(lo);
    auto b = index.find(up);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorCode::kUnknownLabel,
                  "cover (" + lo + ", " + up + ") references an unknown label");
    }
    pairs.emplace_back(a->second, b->second);
  }
  return Poset::from_covers(std::move(elements), std::move(pairs));
}

namespace {

// Walks elements in linear-extension order deciding membership; an element may
// join only when all of its lower covers are in, so each downset is produced
// exactly once.
template <typename Visit>
void enumerate_downsets(const Poset& poset, std::size_t cap, Visit&& visit) {
  if (!poset.fits_in_word()) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "base poset has " + std::to_string(poset.size()) + " elements; at most " +
                    std::to_string(kMaxBaseSize) + " are supported");
  }
  const auto& order = poset.linear_extension();
  std::vector<std::uint64_t> lower_mask(poset.size(), 0);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (auto c : poset.lower_covers(i)) lower_mask[i] |= std::uint64_t{1} << c;
  }
  std::size_t count = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos,
                                                             std::uint64_t current) {
    if (pos == order.size()) {
      if (++count > cap) {
        throw Error(ErrorCode::kSizeLimitExceeded,
                    "more than " + std::to_string(cap) + " downsets");
      }
      visit(ElementSet(current));
      return;
    }
    rec(pos + 1, current);
    const std::size_t e = order[pos];
    if ((lower_mask[e] & ~current) == 0) rec(pos + 1, current | (std::uint64_t{1} << e));
  };
  rec(0, 0);
}

}  // namespace

std::vector<Downset> all_downsets(const Poset& poset, std::size_t cap) {
  std::vector<Downset> out;
  enumerate_downsets(poset, cap, [&](ElementSet s) { out.push_back(s); });

  const auto& rank = poset.label_rank();
  auto key = [&](ElementSet s) {
    std::vector<std::size_t> k;
    for (std::size_t i : s.members()) k.push_back(rank[i]);
    std::sort(k.begin(), k.end());
    return k;
  };
  std::vector<std::pair<std::vector<std::size_t>, ElementSet>> keyed;
  keyed.reserve(out.size());
  for (ElementSet s : out) keyed.emplace_back(key(s), s);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) out[i] = keyed[i].second;
  return out;
}

std::size_t count_downsets(const Poset& poset, std::size_t cap) {
  std::size_t count = 0;
  enumerate_downsets(poset, cap, [&](ElementSet) { ++count; });
  return count;
}

std::vector<Component> connected_components(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [lo, up] : poset.covers()) parent[root(lo)] = root(up);

  const auto& rank = poset.label_rank();
  auto by_label = [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), by_label);

  std::vector<Component> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t v : order) {
    auto [it, inserted] = slot.emplace(root(v), out.size());
    if (inserted) out.emplace_back();
    Component& c = out[it->second];
    c.members.push_back(v);
    if (poset.lower_covers(v).empty()) c.minimal.push_back(v);
  }
  return out;
}

std::vector<Poset::Index> linear_extension(const Poset& poset) {
  return poset.linear_extension();
}

std::string to_dot(const Poset& poset, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << quote(std::string(graph_name)) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (auto i : poset.linear_extension()) os << "  " << quote(poset.label(i)) << ";\n";
  for (auto [lo, up] : poset.covers()) {
    os << "  " << quote(poset.label(lo)) << " -> " << quote(poset.label(up)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace natinterp
