#include <sstream>
#include <stdexcept>

#include "wbr/algebra.hpp"

namespace wbr {

Poly poly_one() { return {{Word{}, Q(1)}}; }

Poly poly_scalar(const Q& c) {
  if (c == 0) return {};
  return {{Word{}, c}};
}

Poly poly_word(const Word& w, const Q& c) {
  if (c == 0) return {};
  return {{w, c}};
}

Poly poly_gen(const Gen& g) { return poly_word(Word{g}); }

Poly poly_add(const Poly& a, const Poly& b, const Q& c) {
  Poly out = a;
  for (const auto& [w, x] : b) {
    Q& y = out[w];
    y += c * x;
    if (y == 0) out.erase(w);
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [w1, c1] : a)
    for (const auto& [w2, c2] : b) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      Q& y = out[w];
      y += c1 * c2;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly poly_pow(const Poly& a, int e) {
  Poly out = poly_one();
  for (int i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

Poly poly_reverse(const Poly& a) {
  Poly out;
  for (const auto& [w, c] : a) out[reversed(w)] = c;
  return out;
}

Poly poly_x(int i) {
  Poly x = poly_gen(gen_x());
  for (int j = 1; j < i; ++j) {
    Poly s = poly_gen(gen_s(j));
    x = poly_add(poly_mul(poly_mul(s, x), s), s, -1);
  }
  return x;
}

Poly poly_xb(int j) {
  Poly x = poly_gen(gen_xb());
  for (int i = 1; i < j; ++i) {
    Poly s = poly_gen(gen_sb(i));
    x = poly_add(poly_mul(poly_mul(s, x), s), s, -1);
  }
  return x;
}

Poly poly_perm(const Perm& top, const Perm& bar) { return poly_word(word_perm(top, bar)); }

Poly poly_linear_product(const std::vector<int>& strands, bool barred, const Q& root) {
  Poly out = poly_one();
  for (int i : strands) {
    Poly z = barred ? poly_xb(i) : poly_x(i);
    out = poly_mul(out, poly_add(z, poly_scalar(root), -1));
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p) {
    if (!first) s += " + ";
    first = false;
    s += "(" + qstr(c) + ")";
    if (!w.empty()) s += "*" + to_string(w);
  }
  return s;
}

// ------------------------------------------------------------ parameters

std::vector<Q> Parameters::f_coeffs() const {
  // ascending coefficients of prod (x - u_i)
  std::vector<Q> c{Q(1)};
  for (const auto& ui : u) {
    std::vector<Q> n(c.size() + 1);
    for (size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= ui * c[i];
    }
    c = std::move(n);
  }
  std::vector<Q> a(k);
  for (int i = 1; i <= k; ++i) a[i - 1] = c[k - i];
  return a;
}

std::vector<Q> omega_sequence(const Parameters& p, int lmax) {
  if (static_cast<int>(p.omega_seed.size()) != p.k) throw std::invalid_argument("omega seeds must have length k");
  auto a = p.f_coeffs();
  std::vector<Q> w;
  for (int l = 0; l <= lmax; ++l) {
    if (l < p.k) {
      w.push_back(p.omega_seed[l]);
      continue;
    }
    Q s = 0;
    for (int i = 1; i <= p.k; ++i) s -= a[i - 1] * w[l - i];
    w.push_back(s);
  }
  return w;
}

std::vector<std::vector<Q>> bar_transfer_polys(const Parameters& p, int amax) {
  auto om = omega_sequence(p, amax + 1);
  std::vector<std::vector<Q>> P{{Q(1)}};
  for (int a = 0; a < amax; ++a) {
    const auto& cur = P.back();
    std::vector<Q> nxt(cur.size() + 1);
    for (size_t i = 0; i < cur.size(); ++i) {
      const Q& c = cur[i];
      if (c == 0) continue;
      nxt[i + 1] -= c;
      for (size_t j = 0; j < i; ++j) {
        nxt[j + 1] += c * om[i - 1 - j];
        nxt[j] -= c * om[i - j];
      }
    }
    P.push_back(std::move(nxt));
  }
  return P;
}

std::vector<Q> bar_omega_sequence(const Parameters& p, int lmax) {
  auto P = bar_transfer_polys(p, lmax);
  auto om = omega_sequence(p, lmax + 1);
  std::vector<Q> out;
  for (const auto& poly : P) {
    Q s = 0;
    for (size_t i = 0; i < poly.size(); ++i) s += poly[i] * om[i];
    out.push_back(s);
  }
  return out;
}

std::vector<Q> Parameters::g_coeffs() const {
  auto P = bar_transfer_polys(*this, k);
  auto a = f_coeffs();
  // target (-1)^k f, ascending
  std::vector<Q> target(k + 1);
  target[k] = 1;
  for (int i = 1; i <= k; ++i) target[k - i] = a[i - 1];
  if (k % 2)
    for (auto& x : target) x = -x;
  std::vector<Q> g(k + 1);
  g[k] = 1;
  for (int d = k - 1; d >= 0; --d) {
    Q rest = target[d];
    for (int b = d + 1; b <= k; ++b)
      if (d < static_cast<int>(P[b].size())) rest -= g[b] * P[b][d];
    // P_d has leading coefficient (-1)^d
    g[d] = d % 2 ? -rest : rest;
  }
  return g;
}

std::optional<int> Parameters::admissibility_failure() const {
  if (omega_explicit.empty()) return std::nullopt;
  auto a = f_coeffs();
  for (int l = k; l < static_cast<int>(omega_explicit.size()); ++l) {
    Q s = omega_explicit[l];
    for (int i = 1; i <= k; ++i) s += a[i - 1] * omega_explicit[l - i];
    if (s != 0) return l;
  }
  return std::nullopt;
}

std::string Parameters::describe() const {
  std::ostringstream o;
  o << "k=" << k << " u=[";
  for (size_t i = 0; i < u.size(); ++i) o << (i ? "," : "") << qstr(u[i]);
  o << "] ubar=[";
  for (size_t i = 0; i < ubar.size(); ++i) o << (i ? "," : "") << qstr(ubar[i]);
  o << "] omega=[";
  for (size_t i = 0; i < omega_seed.size(); ++i) o << (i ? "," : "") << qstr(omega_seed[i]);
  o << "]";
  return o.str();
}

Parameters Parameters::schur_weyl(const Q& m, const Q& n, const Q& p, const Q& q) {
  Parameters P;
  P.k = 2;
  P.u = {-p, m - q};
  P.ubar = {q, p - n};
  P.omega_seed = {m - n, n * q - m * p};
  return P;
}

Parameters Parameters::from_roots2(const Q& u1, const Q& u2, const Q& ub1, const Q& ub2) {
  Parameters P;
  P.k = 2;
  P.u = {u1, u2};
  P.ubar = {ub1, ub2};
  P.omega_seed = {u1 + u2 + ub1 + ub2, u1 * u2 - ub1 * ub2};
  return P;
}

Parameters Parameters::level1(const Q& u1, const Q& omega0) {
  Parameters P;
  P.k = 1;
  P.u = {u1};
  P.ubar = {-u1};
  P.omega_seed = {omega0};
  return P;
}

// ---------------------------------------------------------- presentation

std::vector<Gen> generators(int r, int t) {
  std::vector<Gen> g;
  for (int i = 1; i < r; ++i) g.push_back(gen_s(i));
  for (int j = 1; j < t; ++j) g.push_back(gen_sb(j));
  if (r >= 1 && t >= 1) g.push_back(gen_e());
  if (r >= 1) g.push_back(gen_x());
  if (t >= 1) g.push_back(gen_xb());
  return g;
}

namespace {

Poly W(std::initializer_list<Gen> g) { return poly_word(Word(g)); }
Poly comm(const Poly& a, const Poly& b) { return poly_add(poly_mul(a, b), poly_mul(b, a), -1); }

}  // namespace

std::vector<Relation> defining_relations(const Parameters& p, int r, int t) {
  std::vector<Relation> R;
  auto add = [&](std::string name, Poly poly) { R.push_back({std::move(name), std::move(poly)}); };
  const Poly one = poly_one();
  Poly e = poly_gen(gen_e()), x = poly_gen(gen_x()), xb = poly_gen(gen_xb());

  for (int i = 1; i < r; ++i) add("s" + std::to_string(i) + "^2=1", poly_add(W({gen_s(i), gen_s(i)}), one, -1));
  for (int j = 1; j < t; ++j) add("sb" + std::to_string(j) + "^2=1", poly_add(W({gen_sb(j), gen_sb(j)}), one, -1));
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < t; ++j)
      add("s" + std::to_string(i) + " sb" + std::to_string(j) + " commute", comm(poly_gen(gen_s(i)), poly_gen(gen_sb(j))));
  for (int i = 1; i < r; ++i)
    for (int j = i + 2; j < r; ++j) add("s" + std::to_string(i) + " s" + std::to_string(j) + " commute", comm(poly_gen(gen_s(i)), poly_gen(gen_s(j))));
  for (int i = 1; i < t; ++i)
    for (int j = i + 2; j < t; ++j)
      add("sb" + std::to_string(i) + " sb" + std::to_string(j) + " commute", comm(poly_gen(gen_sb(i)), poly_gen(gen_sb(j))));
  for (int i = 1; i + 1 < r; ++i)
    add("braid s" + std::to_string(i),
        poly_add(W({gen_s(i), gen_s(i + 1), gen_s(i)}), W({gen_s(i + 1), gen_s(i), gen_s(i + 1)}), -1));
  for (int i = 1; i + 1 < t; ++i)
    add("braid sb" + std::to_string(i),
        poly_add(W({gen_sb(i), gen_sb(i + 1), gen_sb(i)}), W({gen_sb(i + 1), gen_sb(i), gen_sb(i + 1)}), -1));

  if (r >= 1) {
    for (int i = 2; i < r; ++i) add("x1 s" + std::to_string(i) + " commute", comm(x, poly_gen(gen_s(i))));
    for (int j = 1; j < t; ++j) add("x1 sb" + std::to_string(j) + " commute", comm(x, poly_gen(gen_sb(j))));
    if (r >= 2) add("x1 x2 commute", comm(x, poly_x(2)));
  }
  if (t >= 1) {
    for (int j = 2; j < t; ++j) add("xb1 sb" + std::to_string(j) + " commute", comm(xb, poly_gen(gen_sb(j))));
    for (int i = 1; i < r; ++i) add("xb1 s" + std::to_string(i) + " commute", comm(xb, poly_gen(gen_s(i))));
    if (t >= 2) add("xb1 xb2 commute", comm(xb, poly_xb(2)));
  }

  auto om = omega_sequence(p, p.k);
  auto omb = bar_omega_sequence(p, p.k);
  if (r >= 1 && t >= 1) {
    add("e1^2=w0 e1", poly_add(W({gen_e(), gen_e()}), e, -om[0]));
    if (r >= 2) add("e1 s1 e1=e1", poly_add(W({gen_e(), gen_s(1), gen_e()}), e, -1));
    if (t >= 2) add("e1 sb1 e1=e1", poly_add(W({gen_e(), gen_sb(1), gen_e()}), e, -1));
    for (int i = 2; i < r; ++i) add("s" + std::to_string(i) + " e1 commute", comm(poly_gen(gen_s(i)), e));
    for (int j = 2; j < t; ++j) add("sb" + std::to_string(j) + " e1 commute", comm(poly_gen(gen_sb(j)), e));
    if (r >= 2 && t >= 2) {
      add("e1 s1 sb1 e1 s1 = e1 s1 sb1 e1 sb1",
          poly_add(W({gen_e(), gen_s(1), gen_sb(1), gen_e(), gen_s(1)}), W({gen_e(), gen_s(1), gen_sb(1), gen_e(), gen_sb(1)}), -1));
      add("s1 e1 s1 sb1 e1 = sb1 e1 s1 sb1 e1",
          poly_add(W({gen_s(1), gen_e(), gen_s(1), gen_sb(1), gen_e()}), W({gen_sb(1), gen_e(), gen_s(1), gen_sb(1), gen_e()}), -1));
    }
    Poly xs = poly_add(x, xb);
    add("e1(x1+xb1)=0", poly_mul(e, xs));
    add("(x1+xb1)e1=0", poly_mul(xs, e));
    if (r >= 2) {
      Poly ses = W({gen_s(1), gen_e(), gen_s(1)});
      add("s1 e1 s1 x1 = x1 s1 e1 s1", comm(ses, x));
    }
    if (t >= 2) {
      Poly ses = W({gen_sb(1), gen_e(), gen_sb(1)});
      add("sb1 e1 sb1 xb1 = xb1 sb1 e1 sb1", comm(ses, xb));
    }
    add("x1(e1+xb1)=(e1+xb1)x1", comm(x, poly_add(e, xb)));
    for (int a = 1; a < p.k; ++a) {
      add("e1 x1^" + std::to_string(a) + " e1 = w" + std::to_string(a) + " e1",
          poly_add(poly_mul(poly_mul(e, poly_pow(x, a)), e), e, -om[a]));
      add("e1 xb1^" + std::to_string(a) + " e1 = wb" + std::to_string(a) + " e1",
          poly_add(poly_mul(poly_mul(e, poly_pow(xb, a)), e), e, -omb[a]));
    }
  }
  if (r >= 1) {
    Poly f = poly_one();
    for (const auto& ui : p.u) f = poly_mul(f, poly_add(x, poly_scalar(ui), -1));
    add("f(x1)=0", f);
  }
  if (t >= 1) {
    auto g = p.g_coeffs();
    Poly gp;
    for (int a = 0; a <= p.k; ++a) gp = poly_add(gp, poly_pow(xb, a), g[a]);
    add("g(xb1)=0", gp);
  }
  return R;
}

}  // namespace wbr
