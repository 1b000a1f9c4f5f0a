#include "kpack/design.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "kpack/rational.hpp"

namespace kpack {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.map[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map.assign(map.size(), 0);
  for (std::size_t i = 0; i < map.size(); ++i)
    inv.map[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  return inv;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.map.resize(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    out.map[i] = next.map[static_cast<std::size_t>(map[i])];
  return out;
}

bool Permutation::is_bijection() const {
  std::vector<char> seen(map.size(), 0);
  for (int v : map) {
    if (v < 0 || v >= static_cast<int>(map.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Permutation random_permutation(int n, Rng& rng) {
  Permutation p = Permutation::identity(n);
  rng.shuffle(p.map);
  return p;
}

namespace {

// Field tables for GF(2), GF(3), GF(4). GF(4) elements are encoded 0,1,w,w+1
// as 0..3; addition in characteristic 2 is xor.
struct FieldTables {
  int q;
  std::array<std::array<int, 4>, 4> add{};
  std::array<std::array<int, 4>, 4> mul{};
};

FieldTables field_tables(int q) {
  FieldTables f;
  f.q = q;
  if (q == 2 || q == 3) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % q;
        f.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a * b) % q;
      }
  } else if (q == 4) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        f.add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    constexpr std::array<std::array<int, 4>, 4> m = {{
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    }};
    f.mul = m;
  } else {
    throw ParamError("unsupported field order q=" + std::to_string(q) +
                     " (built-in tables cover 2, 3, 4)");
  }
  return f;
}

using Triple = std::array<int, 3>;

// Normalize a projective triple so its first nonzero coordinate is 1.
Triple normalize(const FieldTables& f, Triple v) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) {
      lead = i;
      break;
    }
  const int a = v[static_cast<std::size_t>(lead)];
  int ainv = -1;
  for (int x = 1; x < f.q; ++x)
    if (f.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] == 1) ainv = x;
  for (auto& c : v) c = f.mul[static_cast<std::size_t>(c)][static_cast<std::size_t>(ainv)];
  return v;
}

}  // namespace

Design projective_plane_design(int q) {
  const FieldTables f = field_tables(q);
  std::vector<Triple> points;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        Triple t = normalize(f, {x, y, z});
        if (std::find(points.begin(), points.end(), t) == points.end()) points.push_back(t);
      }
  std::sort(points.begin(), points.end());

  auto dot_is_zero = [&](const Triple& a, const Triple& b) {
    int s = 0;
    for (int i = 0; i < 3; ++i)
      s = f.add[static_cast<std::size_t>(s)][static_cast<std::size_t>(
          f.mul[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])]
               [static_cast<std::size_t>(b[static_cast<std::size_t>(i)])])];
    return s == 0;
  };

  Design d;
  d.n = static_cast<int>(points.size());
  d.t = q + 1;
  for (const auto& line : points) {
    std::vector<int> block;
    for (std::size_t p = 0; p < points.size(); ++p)
      if (dot_is_zero(line, points[p])) block.push_back(static_cast<int>(p));
    d.blocks.push_back(std::move(block));
  }
  std::sort(d.blocks.begin(), d.blocks.end());
  if (const auto rep = validate_design(d); !rep.ok())
    throw SolverError("projective plane construction failed validation: " +
                      rep.violations.front());
  return d;
}

ValidityReport validate_design(const Design& d) {
  ValidityReport rep;
  if (d.n < 0 || d.t < 2) {
    rep.fail("degenerate parameters");
    return rep;
  }
  const mpz_class np = binomial(d.n, 2);
  const mpz_class tp = binomial(d.t, 2);
  if (np % tp != 0) {
    rep.fail("C(n,2) not divisible by C(t,2)");
  } else if (mpz_class(static_cast<long>(d.blocks.size())) != np / tp) {
    rep.fail("block count " + std::to_string(d.blocks.size()) + " != C(n,2)/C(t,2) = " +
             mpz_class(np / tp).get_str());
  }
  std::vector<std::vector<int>> pair_cover(static_cast<std::size_t>(d.n),
                                           std::vector<int>(static_cast<std::size_t>(d.n), 0));
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const auto& b = d.blocks[bi];
    if (static_cast<int>(b.size()) != d.t) {
      rep.fail("block " + std::to_string(bi) + " has size " + std::to_string(b.size()));
      continue;
    }
    bool in_range = true;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 0 || b[i] >= d.n) {
        rep.fail("block " + std::to_string(bi) + " point out of range");
        in_range = false;
      }
      if (i + 1 < b.size() && b[i] >= b[i + 1]) {
        rep.fail("block " + std::to_string(bi) + " not strictly sorted");
        in_range = false;
      }
    }
    if (!in_range) continue;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        ++pair_cover[static_cast<std::size_t>(b[i])][static_cast<std::size_t>(b[j])];
  }
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v) {
      const int c = pair_cover[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (c != 1)
        rep.fail("pair (" + std::to_string(u) + "," + std::to_string(v) + ") covered " +
                 std::to_string(c) + " times");
    }
  return rep;
}

namespace {

struct DesignSearch {
  int n, t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<char>> covered;
  std::vector<std::vector<int>> blocks;
  bool budget_hit = false;

  DesignSearch(int n_, int t_, std::uint64_t budget_)
      : n(n_), t(t_), budget(budget_),
        covered(static_cast<std::size_t>(n),
                std::vector<char>(static_cast<std::size_t>(n), 0)) {}

  bool pair_covered(int a, int b) const {
    return covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
  }
  void set_pair(int a, int b, char v) {
    covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
  }

  bool place(std::vector<int>& block) {
    if (++nodes > budget) {
      budget_hit = true;
      return false;
    }
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) set_pair(block[i], block[j], 1);
    blocks.push_back(block);
    if (solve()) return true;
    blocks.pop_back();
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) set_pair(block[i], block[j], 0);
    return false;
  }

  bool solve() {
    int a = -1, b = -1;
    for (int u = 0; u < n && a < 0; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!pair_covered(u, v)) {
          a = u;
          b = v;
          break;
        }
      }
    if (a < 0) return true;  // every pair covered
    // Candidate blocks: the uncovered pair plus t-2 further vertices. Every
    // vertex below a is fully covered already, so additions come from a+1 up.
    std::vector<int> block = {a, b};
    return extend_sorted(block, a + 1);
  }

  bool extend_sorted(std::vector<int>& block, int from) {
    if (static_cast<int>(block.size()) == t) return place(block);
    for (int v = from; v < n; ++v) {
      if (std::find(block.begin(), block.end(), v) != block.end()) continue;
      bool ok = true;
      for (int u : block) {
        if (u == v) continue;
        if (pair_covered(std::min(u, v), std::max(u, v))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      auto pos = std::lower_bound(block.begin(), block.end(), v);
      block.insert(pos, v);
      if (extend_sorted(block, v + 1)) return true;
      block.erase(std::find(block.begin(), block.end(), v));
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

DesignSearchResult search_design(int n, int t, std::uint64_t node_budget) {
  if (n < 1 || t < 2) throw ParamError("need n >= 1 and t >= 2");
  DesignSearchResult res;
  const mpz_class np = binomial(n, 2);
  const mpz_class tp = binomial(t, 2);
  if (np % tp != 0) {
    res.status = DesignSearchStatus::divisibility;
    return res;
  }
  if (t > n) {
    // No t-set fits; only vacuously fine when there are no pairs at all.
    if (np == 0) {
      res.status = DesignSearchStatus::found;
      res.design = Design{n, t, {}};
      return res;
    }
    res.status = DesignSearchStatus::none_exists;
    return res;
  }
  DesignSearch s(n, t, node_budget);
  const bool found = s.solve();
  res.nodes = s.nodes;
  if (found) {
    Design d{n, t, s.blocks};
    std::sort(d.blocks.begin(), d.blocks.end());
    if (const auto rep = validate_design(d); !rep.ok())
      throw SolverError("design search produced invalid design: " + rep.violations.front());
    res.status = DesignSearchStatus::found;
    res.design = std::move(d);
  } else if (s.budget_hit) {
    res.status = DesignSearchStatus::budget_exceeded;
  } else {
    res.status = DesignSearchStatus::none_exists;
  }
  return res;
}

Design permute_design(const Design& d, const Permutation& p) {
  if (p.size() != d.n) throw ParamError("permutation size does not match design");
  if (!p.is_bijection()) throw ParamError("mapping is not a bijection");
  Design out;
  out.n = d.n;
  out.t = d.t;
  for (const auto& b : d.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(p(v));
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(std::move(nb));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

Design parse_design(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Design d;
  long announced = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (announced < 0) {
      std::string word;
      if (!(ls >> word >> d.n >> d.t >> announced) || word != "design" || d.n < 0 ||
          d.t < 2 || announced < 0)
        throw ParseError("malformed header, expected \"design <n> <t> <b>\"", lineno);
      continue;
    }
    std::vector<int> block;
    long v;
    while (ls >> v) {
      if (v < 1 || v > d.n) throw ParseError("point out of range [1," + std::to_string(d.n) + "]", lineno);
      block.push_back(static_cast<int>(v - 1));
    }
    if (static_cast<int>(block.size()) != d.t)
      throw ParseError("block has " + std::to_string(block.size()) + " points, expected " +
                           std::to_string(d.t),
                       lineno);
    if (!std::is_sorted(block.begin(), block.end()) ||
        std::adjacent_find(block.begin(), block.end()) != block.end())
      throw ParseError("block points must be strictly increasing", lineno);
    d.blocks.push_back(std::move(block));
  }
  if (announced < 0) throw ParseError("missing design header", lineno == 0 ? 1 : lineno);
  if (static_cast<long>(d.blocks.size()) != announced)
    throw ParseError("header announced " + std::to_string(announced) + " blocks, found " +
                         std::to_string(d.blocks.size()),
                     lineno);
  if (const auto rep = validate_design(d); !rep.ok())
    throw ParamError("design file fails validation: " + rep.violations.front());
  return d;
}

std::string serialize_design(const Design& d) {
  std::ostringstream out;
  out << "design " << d.n << ' ' << d.t << ' ' << d.blocks.size() << '\n';
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i] + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace kpack
