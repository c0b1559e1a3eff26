#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace loopforge::oracle {

namespace {

Element identity_of(const Rows& t) {
  for (Element e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (Element y = 0; y < t.size(); ++y) ok = ok && t[e][y] == y && t[y][e] == y;
    if (ok) return e;
  }
  return 0;
}

Perm right(const Rows& t, Element g) {
  std::vector<Element> p(t.size());
  for (Element y = 0; y < t.size(); ++y) p[y] = t[y][g];
  return Perm(p);
}

Perm left(const Rows& t, Element f) { return Perm(t[f]); }

}  // namespace

Rows cyclic_rows(std::size_t n) {
  Rows t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  }
  return t;
}

Rows klein_rows() {
  Rows t(4, std::vector<Element>(4));
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return t;
}

Rows n5_rows() {
  return {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}};
}

LoopTable cyclic(std::size_t n) { return validate_table(cyclic_rows(n)); }
LoopTable klein() { return validate_table(klein_rows()); }
LoopTable n5() { return validate_table(n5_rows()); }

bool group_axioms(const Rows& t, const std::vector<Element>& s) {
  const auto in = [&](Element x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  const Element e = identity_of(t);
  if (!in(e)) return false;
  for (Element a : s) {
    for (Element b : s) {
      if (!in(t[a][b])) return false;
      for (Element c : s) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
      }
    }
    bool inverse = false;
    for (Element b : s) inverse = inverse || (t[a][b] == e && t[b][a] == e);
    if (!inverse) return false;
  }
  return true;
}

std::vector<std::vector<Element>> subgroups(const Rows& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Element>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x) {
      if (mask >> x & 1u) s.push_back(x);
    }
    if (group_axioms(t, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Element> middle_nucleus(const Rows& t) {
  const std::size_t n = t.size();
  std::vector<Element> out;
  for (Element g = 0; g < n; ++g) {
    bool ok = true;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) ok = ok && t[t[x][g]][y] == t[x][t[g][y]];
    }
    if (ok) out.push_back(g);
  }
  return out;
}

bool law(const Rows& t, const Perm& u, const Perm& v, const Perm& w) {
  for (Element x = 0; x < t.size(); ++x) {
    for (Element y = 0; y < t.size(); ++y) {
      if (t[u[x]][v[y]] != w[t[x][y]]) return false;
    }
  }
  return true;
}

std::vector<Triple> autotopisms(const Rows& t) {
  const std::size_t n = t.size();
  const auto perms = all_perms(n);
  std::vector<Triple> out;
  if (n <= 4) {
    for (const auto& u : perms)
      for (const auto& v : perms)
        for (const auto& w : perms)
          if (law(t, u, v, w)) out.push_back({u, v, w});
  } else {
    const Element e = identity_of(t);
    for (const auto& u : perms) {
      for (const auto& v : perms) {
        std::vector<Element> w(n);
        for (Element x = 0; x < n; ++x) w[x] = t[u[x]][v[e]];
        std::vector<Element> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        Perm wp(w);
        if (law(t, u, v, wp)) out.push_back({u, v, wp});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> isomorphisms(const Rows& from, const Rows& to) {
  std::vector<Perm> out;
  if (from.size() != to.size()) return out;
  for (const auto& a : all_perms(from.size())) {
    bool ok = true;
    for (Element x = 0; x < from.size() && ok; ++x) {
      for (Element y = 0; y < from.size() && ok; ++y) ok = to[a[x]][a[y]] == a[from[x][y]];
    }
    if (ok) out.push_back(a);
  }
  return out;
}

Rows principal_isotope(const Rows& t, Element f, Element g) {
  const std::size_t n = t.size();
  const Perm ri = inverse(right(t, g));
  const Perm li = inverse(left(t, f));
  Rows out(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) out[x][y] = t[ri[x]][li[y]];
  }
  return out;
}

std::vector<std::pair<Element, Element>> witnesses(const Rows& t, const Perm& theta,
                                                   const std::vector<Element>& pool) {
  std::vector<std::pair<Element, Element>> out;
  for (Element f : pool) {
    for (Element g : pool) {
      const Perm u = compose(theta, inverse(right(t, g)));
      const Perm v = compose(theta, inverse(left(t, f)));
      if (law(t, u, v, theta)) out.emplace_back(f, g);
    }
  }
  return out;
}

std::vector<Perm> bs(const Rows& t) {
  std::vector<Element> all(t.size());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<Perm> out;
  for (const auto& p : all_perms(t.size())) {
    if (!witnesses(t, p, all).empty()) out.push_back(p);
  }
  return out;
}

bool stabilizes(const Perm& p, const std::vector<Element>& h) {
  return std::all_of(h.begin(), h.end(), [&](Element x) {
    return std::find(h.begin(), h.end(), p[x]) != h.end();
  });
}

std::vector<Perm> sbs(const Rows& t, const std::vector<Element>& h) {
  std::vector<Perm> out;
  for (const auto& p : all_perms(t.size())) {
    if (stabilizes(p, h) && !witnesses(t, p, h).empty()) out.push_back(p);
  }
  return out;
}

std::size_t count_reduced_latin_squares(std::size_t n) {
  Rows t(n, std::vector<Element>(n, 0));
  for (Element i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::size_t count = 0;
  // Column-major over the free cells.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t c, std::size_t r) {
    if (c == n) {
      ++count;
      return;
    }
    if (r == n) return fill(c + 1, 1);
    for (Element v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t k = 0; k < r && ok; ++k) ok = t[k][c] != v;
      for (std::size_t k = 0; k < c && ok; ++k) ok = t[r][k] != v;
      if (!ok) continue;
      t[r][c] = v;
      fill(c, r + 1);
    }
  };
  if (n == 1) return 1;
  fill(1, 1);
  return count;
}

}  // namespace loopforge::oracle
