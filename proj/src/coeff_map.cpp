#include "markoff/coeff_map.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <unordered_map>

namespace markoff {

namespace {

bool entry_less(const CoeffMap::Entry& a, const CoeffMap::Entry& b) { return a.first < b.first; }

std::vector<CoeffMap::Entry> merge(const std::vector<CoeffMap::Entry>& a,
                                   const std::vector<CoeffMap::Entry>& b, int sign) {
  std::vector<CoeffMap::Entry> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? BigInt(j->second) : BigInt(-j->second));
      ++j;
    } else {
      BigInt v = sign > 0 ? BigInt(i->second + j->second) : BigInt(i->second - j->second);
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CoeffMap::CoeffMap(std::initializer_list<std::pair<LatticePoint, long>> entries) {
  std::vector<Entry> raw;
  for (const auto& [pt, v] : entries) raw.emplace_back(pt, BigInt(v));
  *this = from_entries(std::move(raw));
}

CoeffMap CoeffMap::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), entry_less);
  CoeffMap m;
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == e.first) {
      m.entries_.back().second += e.second;
    } else {
      if (!m.entries_.empty() && m.entries_.back().second == 0) m.entries_.pop_back();
      m.entries_.push_back(std::move(e));
    }
  }
  if (!m.entries_.empty() && m.entries_.back().second == 0) m.entries_.pop_back();
  return m;
}

CoeffMap CoeffMap::indicator(const PointSet& pts) {
  std::vector<Entry> raw;
  PointSet unique = pts;
  canonicalize(unique);
  for (const auto& pt : unique) raw.emplace_back(pt, BigInt(1));
  CoeffMap m;
  m.entries_ = std::move(raw);
  return m;
}

BigInt CoeffMap::at(LatticePoint pt) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), pt,
                             [](const Entry& e, LatticePoint x) { return e.first < x; });
  if (it != entries_.end() && it->first == pt) return it->second;
  return 0;
}

bool CoeffMap::contains(LatticePoint pt) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{pt, 0}, entry_less);
}

PointSet CoeffMap::support() const {
  PointSet out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

BigInt CoeffMap::sum() const {
  BigInt total = 0;
  for (const auto& e : entries_) total += e.second;
  return total;
}

BigInt CoeffMap::min_value() const {
  if (entries_.empty()) return 0;
  BigInt m = entries_.front().second;
  for (const auto& e : entries_) m = std::min(m, e.second);
  return m;
}

CoeffMap CoeffMap::pullback(Transform t) const {
  std::vector<Entry> raw;
  raw.reserve(entries_.size());
  for (const auto& [pt, v] : entries_) raw.emplace_back(preimage(t, pt), v);
  std::sort(raw.begin(), raw.end(), entry_less);
  CoeffMap m;
  m.entries_ = std::move(raw);
  return m;
}

CoeffMap CoeffMap::translated(LatticePoint shift) const {
  CoeffMap m = *this;
  for (auto& e : m.entries_) e.first = e.first + shift;
  return m;
}

CoeffMap operator+(const CoeffMap& a, const CoeffMap& b) {
  CoeffMap m;
  m.entries_ = merge(a.entries_, b.entries_, +1);
  return m;
}

CoeffMap operator-(const CoeffMap& a, const CoeffMap& b) {
  CoeffMap m;
  m.entries_ = merge(a.entries_, b.entries_, -1);
  return m;
}

std::string CoeffMap::str() const {
  std::string out = "{";
  for (const auto& [pt, v] : entries_) {
    if (out.size() > 1) out += ", ";
    out += pt.str() + ":" + decimal(v);
  }
  return out + "}";
}

std::size_t CoeffMap::hash() const {
  std::size_t h = entries_.size();
  for (const auto& [pt, v] : entries_) {
    h = h * 1000003 ^ std::hash<LatticePoint>{}(pt);
    h = h * 1000003 ^ std::hash<std::string>{}(v.get_str(16));
  }
  return h;
}

CoeffMap convolve(const CoeffMap& f, const CoeffMap& g, std::size_t dense_threshold) {
  if (f.empty() || g.empty()) return {};
  std::vector<CoeffMap::Entry> raw;

  if (f.size() > dense_threshold && g.size() > dense_threshold) {
    auto box = [](const CoeffMap& m) {
      std::int64_t a0 = m.begin()->first.alpha, a1 = a0;
      for (const auto& e : m) {
        a0 = std::min(a0, e.first.alpha);
        a1 = std::max(a1, e.first.alpha);
      }
      return std::array<std::int64_t, 4>{a0, a1, m.begin()->first.beta,
                                         std::prev(m.end())->first.beta};
    };
    const auto bf = box(f), bg = box(g);
    const std::int64_t a0 = bf[0] + bg[0], b0 = bf[2] + bg[2];
    const auto width = static_cast<std::size_t>(bf[1] + bg[1] - a0 + 1);
    const auto height = static_cast<std::size_t>(bf[3] + bg[3] - b0 + 1);
    std::vector<BigInt> block(width * height);
    for (const auto& [x, fx] : f) {
      for (const auto& [y, gy] : g) {
        const auto col = static_cast<std::size_t>(x.alpha + y.alpha - a0);
        const auto row = static_cast<std::size_t>(x.beta + y.beta - b0);
        mpz_addmul(block[row * width + col].get_mpz_t(), fx.get_mpz_t(), gy.get_mpz_t());
      }
    }
    for (std::size_t row = 0; row < height; ++row) {
      for (std::size_t col = 0; col < width; ++col) {
        auto& v = block[row * width + col];
        if (v != 0)
          raw.emplace_back(LatticePoint{a0 + static_cast<std::int64_t>(col),
                                        b0 + static_cast<std::int64_t>(row)},
                           std::move(v));
      }
    }
    return CoeffMap::from_entries(std::move(raw));
  }

  std::unordered_map<LatticePoint, BigInt> acc;
  acc.reserve(f.size() * 4 + g.size() * 4);
  for (const auto& [x, fx] : f) {
    for (const auto& [y, gy] : g) {
      mpz_addmul(acc[x + y].get_mpz_t(), fx.get_mpz_t(), gy.get_mpz_t());
    }
  }
  raw.reserve(acc.size());
  for (auto& [pt, v] : acc) raw.emplace_back(pt, std::move(v));
  return CoeffMap::from_entries(std::move(raw));
}

}  // namespace markoff
