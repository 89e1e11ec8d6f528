// Copyright 2026 The mmdim Authors
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

#include "mmdim/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mmdim/error.hpp"

namespace mmdim {

std::int64_t sup_norm(const Site& a) {
  std::int64_t m = 0;
  for (auto v : a) m = std::max(m, v < 0 ? -v : v);
  return m;
}

Site operator+(const Site& a, const Site& b) {
  if (a.size() != b.size()) throw UsageError("lattice dimension mismatch");
  Site r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Site operator-(const Site& a, const Site& b) {
  if (a.size() != b.size()) throw UsageError("lattice dimension mismatch");
  Site r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Site operator-(const Site& a) {
  Site r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::string to_string(const Site& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::vector<Site> box_sites(const Site& lo, const Site& hi) {
  std::vector<Site> out;
  const std::size_t d = lo.size();
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;
  if (d == 0) return out;
  Site cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == hi[i - 1]) {
      cur[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

std::vector<Site> site_union(std::vector<Site> a, const std::vector<Site>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Site> site_difference(const std::vector<Site>& a,
                                  const std::vector<Site>& b) {
  std::vector<Site> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Window Window::box(Site lo, Site hi) {
  if (lo.empty() || lo.size() != hi.size())
    throw UsageError("box window needs corners of equal positive dimension");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i])
      throw UsageError("box window corners must satisfy lo <= hi");
  Window w;
  w.kind_ = Kind::box;
  w.sites_ = box_sites(lo, hi);
  w.lo_ = std::move(lo);
  w.hi_ = std::move(hi);
  return w;
}

Window Window::interval(std::int64_t first, std::int64_t last) {
  return box({first}, {last});
}

Window Window::cube(std::int64_t side, int dim) {
  if (side < 1 || dim < 1) throw UsageError("cube window needs side >= 1");
  return box(Site(dim, 0), Site(dim, side - 1));
}

Window Window::centered(std::int64_t radius, int dim) {
  if (radius < 0 || dim < 1) throw UsageError("centered window needs radius >= 0");
  return box(Site(dim, -radius), Site(dim, radius));
}

Window Window::from_sites(std::vector<Site> sites) {
  if (sites.empty()) throw UsageError("window must be nonempty");
  Window w;
  w.kind_ = Kind::explicit_set;
  w.sites_ = std::move(sites);
  w.finish_explicit();
  return w;
}

void Window::finish_explicit() {
  const std::size_t d = sites_.front().size();
  if (d == 0) throw UsageError("window sites must have positive dimension");
  for (const auto& s : sites_)
    if (s.size() != d) throw UsageError("window sites of mixed dimension");
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
  lo_ = sites_.front();
  hi_ = sites_.front();
  for (const auto& s : sites_)
    for (std::size_t i = 0; i < d; ++i) {
      lo_[i] = std::min(lo_[i], s[i]);
      hi_[i] = std::max(hi_[i], s[i]);
    }
  // An explicit set filling its bounding box is a box.
  std::size_t volume = 1;
  for (std::size_t i = 0; i < d; ++i)
    volume *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
  if (volume == sites_.size()) kind_ = Kind::box;
}

bool Window::contains(const Site& n) const {
  if (n.size() != lo_.size()) return false;
  if (kind_ == Kind::box) {
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i] < lo_[i] || n[i] > hi_[i]) return false;
    return true;
  }
  return std::binary_search(sites_.begin(), sites_.end(), n);
}

std::int64_t Window::distance(const Site& n) const {
  if (n.size() != lo_.size()) throw UsageError("lattice dimension mismatch");
  if (kind_ == Kind::box) {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
      m = std::max({m, lo_[i] - n[i], n[i] - hi_[i]});
    return m;
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& s : sites_) best = std::min(best, sup_norm(n - s));
  return best;
}

Window Window::translated(const Site& a) const {
  if (kind_ == Kind::box) return box(lo_ + a, hi_ + a);
  std::vector<Site> moved;
  moved.reserve(sites_.size());
  for (const auto& s : sites_) moved.push_back(s + a);
  return from_sites(std::move(moved));
}

std::vector<Site> Window::dilated_sites(std::int64_t r) const {
  if (r < 0) return {};
  if (kind_ == Kind::box) {
    Site lo = lo_, hi = hi_;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] -= r;
      hi[i] += r;
    }
    return box_sites(lo, hi);
  }
  std::vector<Site> out;
  const Site delta_lo(lo_.size(), -r), delta_hi(lo_.size(), r);
  for (const auto& s : sites_) {
    auto block = box_sites(s + delta_lo, s + delta_hi);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Window Window::dilated(std::int64_t r) const {
  if (r < 0) throw UsageError("dilation radius must be nonnegative");
  if (kind_ == Kind::box) {
    Site lo = lo_, hi = hi_;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] -= r;
      hi[i] += r;
    }
    return box(lo, hi);
  }
  return from_sites(dilated_sites(r));
}

bool Window::is_subset_of(const Window& other) const {
  for (const auto& s : sites_)
    if (!other.contains(s)) return false;
  return true;
}

std::string Window::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::box) {
    for (std::size_t i = 0; i < lo_.size(); ++i)
      os << (i ? "x" : "") << '[' << lo_[i] << ".." << hi_[i] << ']';
    return os.str();
  }
  os << '{';
  for (std::size_t i = 0; i < sites_.size(); ++i)
    os << (i ? " " : "") << mmdim::to_string(sites_[i]);
  os << '}';
  return os.str();
}

bool Window::operator==(const Window& other) const {
  return sites_ == other.sites_;
}

}  // namespace mmdim
