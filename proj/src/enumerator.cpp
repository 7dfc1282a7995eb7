#include "enumerator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace wbr::detail {

namespace {

class Enumerator {
 public:
  Enumerator(int G, const std::vector<IndexPoly>& rels, long cap) : G_(G), rels_(rels), cap_(cap) {}

  EnumResult run() {
    new_vector();
    bool changed = true;
    while (changed) {
      for (int v = 0; v < static_cast<int>(alive_.size()); ++v) {
        if (!alive_[v] || done_[v]) continue;
        for (const auto& rel : rels_) {
          if (!alive_[v]) break;
          scan(v, rel);
        }
        if (!alive_[v]) continue;
        for (int g = 0; g < G_; ++g) image(v, g);
        done_[v] = 1;
      }
      changed = false;
      // Confirmation pass: every relation at every live vector, no new definitions expected.
      for (int v = 0; v < static_cast<int>(alive_.size()); ++v) {
        if (!alive_[v]) continue;
        for (const auto& rel : rels_) {
          if (!alive_[v]) break;
          size_t before = alive_.size();
          if (scan(v, rel) || alive_.size() != before) changed = true;
        }
      }
    }
    return compact();
  }

 private:
  int new_vector() {
    if (static_cast<long>(alive_.size()) >= cap_) throw std::runtime_error("vector enumeration exceeded its size cap");
    alive_.push_back(1);
    done_.push_back(0);
    repl_.emplace_back();
    img_.resize(img_.size() + G_);
    has_.resize(has_.size() + G_, 0);
    return static_cast<int>(alive_.size()) - 1;
  }

  SparseVec image(int v, int g) {
    size_t k = static_cast<size_t>(v) * G_ + g;
    if (!has_[k]) {
      int n = new_vector();
      img_[k] = sv_unit(n);
      has_[k] = 1;
    }
    return img_[k];
  }

  const SparseVec& repl(int b) {
    bool clean = true;
    for (const auto& [i, c] : repl_[b])
      if (!alive_[i]) {
        clean = false;
        break;
      }
    if (!clean) repl_[b] = resolve(repl_[b]);
    return repl_[b];
  }

  SparseVec resolve(const SparseVec& x) {
    bool clean = true;
    for (const auto& [i, c] : x)
      if (!alive_[i]) {
        clean = false;
        break;
      }
    if (clean) return x;
    std::map<int, Q, std::greater<int>> acc;
    for (const auto& [i, c] : x) acc[i] += c;
    for (auto it = acc.begin(); it != acc.end();) {
      if (alive_[it->first] || it->second == 0) {
        ++it;
        continue;
      }
      int b = it->first;
      Q c = it->second;
      acc.erase(it);
      SparseVec rb = repl(b);  // copy: recursion may touch repl_
      for (const auto& [j, d] : rb) acc[j] += c * d;
      it = acc.upper_bound(b);  // first key below b
    }
    SparseVec out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (it->second != 0) out.emplace_back(it->first, it->second);
    return out;
  }

  SparseVec act(const SparseVec& x, int g) {
    SparseVec out;
    for (const auto& [i, c] : x) out = sv_axpy(out, c, image(i, g));
    return out;
  }

  // Returns true if a coincidence was found.
  bool scan(int v, const IndexPoly& rel) {
    SparseVec total;
    for (const auto& [word, coeff] : rel) {
      SparseVec x = sv_unit(v);
      for (int g : word) x = act(resolve(x), g);
      total = sv_axpy(resolve(total), coeff, resolve(x));
    }
    total = resolve(total);
    if (total.empty()) return false;
    coincidence(std::move(total));
    return true;
  }

  void coincidence(SparseVec z0) {
    std::deque<SparseVec> q;
    q.push_back(std::move(z0));
    while (!q.empty()) {
      SparseVec z = resolve(q.front());
      q.pop_front();
      if (z.empty()) continue;
      int b = z.back().first;
      Q cb = z.back().second;
      z.pop_back();
      SparseVec rep = sv_scale(z, -1 / cb);
      alive_[b] = 0;
      repl_[b] = rep;
      for (int g = 0; g < G_; ++g) {
        size_t k = static_cast<size_t>(b) * G_ + g;
        if (!has_[k]) continue;
        SparseVec y = std::move(img_[k]);
        img_[k].clear();
        has_[k] = 0;
        SparseVec lhs = act(resolve(rep), g);
        q.push_back(sv_axpy(resolve(lhs), -1, resolve(y)));
      }
    }
  }

  EnumResult compact() {
    std::vector<int> idx(alive_.size(), -1);
    int d = 0;
    for (size_t v = 0; v < alive_.size(); ++v)
      if (alive_[v]) idx[v] = d++;
    EnumResult res;
    res.dim = d;
    res.defined = static_cast<long>(alive_.size());
    res.mats.assign(G_, SparseMat(d));
    for (size_t v = 0; v < alive_.size(); ++v) {
      if (!alive_[v]) continue;
      for (int g = 0; g < G_; ++g) {
        size_t k = v * G_ + g;
        if (!has_[k]) throw std::logic_error("enumeration incomplete");
        SparseVec y = resolve(img_[k]);
        SparseVec m;
        for (const auto& [i, c] : y) m.emplace_back(idx[i], c);
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        res.mats[g][idx[v]] = std::move(m);
      }
    }
    return res;
  }

  int G_;
  const std::vector<IndexPoly>& rels_;
  long cap_;
  std::vector<char> alive_, done_;
  std::vector<SparseVec> repl_;
  std::vector<SparseVec> img_;
  std::vector<char> has_;
};

}  // namespace

EnumResult enumerate_regular_module(int num_gens, const std::vector<IndexPoly>& relations, long max_vectors) {
  Enumerator e(num_gens, relations, max_vectors);
  return e.run();
}

}  // namespace wbr::detail
