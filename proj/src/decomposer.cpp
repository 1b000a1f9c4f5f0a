#include "kpack/decomposer.hpp"

#include <algorithm>
#include <optional>

#include "kpack/rational.hpp"

namespace kpack {

int DecomposerConfig::resolved_maxdeg_cap(int n) const {
  if (maxdeg_cap) {
    if (*maxdeg_cap < 0) throw ParamError("maxdeg_cap must be nonnegative");
    return *maxdeg_cap;
  }
  long k7 = 1;
  for (int i = 0; i < 7; ++i) k7 *= k;
  return static_cast<int>(std::max(1L, 6L * n / k7));
}

int DecomposerConfig::resolved_saturation_cap(int n) const {
  if (saturation_cap) {
    if (*saturation_cap < 0) throw ParamError("saturation_cap must be nonnegative");
    return *saturation_cap;
  }
  return static_cast<int>(std::max(1L, static_cast<long>(n) / (2L * k)));
}

std::string_view tag_name(CertificatePart::Tag tag) {
  switch (tag) {
    case CertificatePart::Tag::Kk: return "Kk";
    case CertificatePart::Tag::Kt: return "Kt";
    case CertificatePart::Tag::KtMinus: return "KtMinus";
  }
  return "?";
}

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::vector<Edge> all_pairs(const std::vector<int>& verts) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      out.push_back(make_edge(verts[i], verts[j]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> all_pairs_minus(const std::vector<int>& verts, const Edge& missing) {
  auto out = all_pairs(verts);
  out.erase(std::find(out.begin(), out.end(), missing));
  return out;
}

// Partitions a neighborhood into cliques of the two admissible sizes,
// smallest unassigned vertex first, smaller groups tried first.
struct NeighborhoodTiler {
  const Graph& g;
  int small, large;
  std::vector<int> pool;  // sorted vertex list to tile
  std::vector<char> used;
  std::vector<std::vector<int>> groups;
  std::vector<char> expressible;

  NeighborhoodTiler(const Graph& g_, std::vector<int> pool_, int small_, int large_)
      : g(g_), small(small_), large(large_), pool(std::move(pool_)) {
    used.assign(pool.size(), 0);
    expressible.assign(pool.size() + 1, 0);
    expressible[0] = 1;
    for (std::size_t m = 1; m <= pool.size(); ++m)
      expressible[m] = (m >= static_cast<std::size_t>(small) &&
                        expressible[m - static_cast<std::size_t>(small)]) ||
                       (m >= static_cast<std::size_t>(large) &&
                        expressible[m - static_cast<std::size_t>(large)]);
  }

  bool run() { return tile(static_cast<int>(pool.size())); }

  bool tile(int remaining) {
    if (remaining == 0) return true;
    if (!expressible[static_cast<std::size_t>(remaining)]) return false;
    std::size_t anchor = 0;
    while (anchor < pool.size() && used[anchor]) ++anchor;
    std::vector<int> group = {pool[anchor]};
    used[anchor] = 1;
    for (int size : {small, large}) {
      if (remaining < size || !expressible[static_cast<std::size_t>(remaining - size)])
        continue;
      if (grow(group, anchor + 1, size, remaining)) {
        used[anchor] = 0;
        return true;
      }
    }
    used[anchor] = 0;
    return false;
  }

  bool grow(std::vector<int>& group, std::size_t from, int target, int remaining) {
    if (static_cast<int>(group.size()) == target) {
      groups.push_back(group);
      if (tile(remaining - target)) return true;
      groups.pop_back();
      return false;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (used[i]) continue;
      const int v = pool[i];
      bool adj = true;
      for (int u : group) {
        if (!g.has_edge(u, v)) {
          adj = false;
          break;
        }
      }
      if (!adj) continue;
      used[i] = 1;
      group.push_back(v);
      if (grow(group, i + 1, target, remaining)) return true;
      group.pop_back();
      used[i] = 0;
    }
    return false;
  }
};

}  // namespace

PreprocessResult preprocess(const Graph& g, const DecomposerConfig& cfg) {
  if (cfg.k < 3) throw ParamError("need k >= 3");
  const int t = cfg.t();
  const int mod = t * (t - 1);
  const int small = cfg.k - 1;
  const int large = 3 * cfg.k - 4;

  PreprocessResult res;
  res.reduced = g;
  res.reduced_to_original.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int i = 0; i < g.num_vertices(); ++i)
    res.reduced_to_original[static_cast<std::size_t>(i)] = i;

  for (int round = 0; round < mod; ++round) {
    const Graph& cur = res.reduced;
    const int n = cur.num_vertices();
    if (n % mod == 1 % mod) return res;
    if (n == 0)
      throw DecomposeError("preprocess", "graph exhausted before reaching the congruence");

    int v = 0;
    for (int u = 1; u < n; ++u)
      if (cur.degree(u) < cur.degree(v)) v = u;

    std::vector<int> nbrs;
    cur.neighbors(v).for_each([&](int u) { nbrs.push_back(u); });

    NeighborhoodTiler tiler(cur, nbrs, small, large);
    if (!tiler.run())
      throw DecomposeError("preprocess",
                           "cannot tile N(" + std::to_string(res.reduced_to_original[static_cast<std::size_t>(v)]) +
                               ") with K_" + std::to_string(small) + " / K_" +
                               std::to_string(large) + " cliques");

    auto orig = [&](int u) { return res.reduced_to_original[static_cast<std::size_t>(u)]; };
    const std::string src = "preprocess v=" + std::to_string(orig(v));
    Bitset absorbed_inner(cur.num_edges());
    for (const auto& group : tiler.groups) {
      if (static_cast<int>(group.size()) == small) {
        std::vector<int> verts;
        verts.push_back(orig(v));
        for (int h : group) verts.push_back(orig(h));
        std::sort(verts.begin(), verts.end());
        res.absorbed.push_back(
            {CertificatePart::Tag::Kk, verts, all_pairs(verts), src});
        for (std::size_t i = 0; i < group.size(); ++i)
          for (std::size_t j = i + 1; j < group.size(); ++j)
            absorbed_inner.set(cur.edge_index(group[i], group[j]));
      } else {
        // K_{3k-4} component h_1..h_{3k-4}: a K_k on {v, h_1..h_{k-1}} and a
        // K_t-minus on {v, h_1, h_k..h_{3k-4}} missing the pair (v, h_1).
        std::vector<int> kk;
        kk.push_back(orig(v));
        for (int i = 0; i < cfg.k - 1; ++i) kk.push_back(orig(group[static_cast<std::size_t>(i)]));
        std::sort(kk.begin(), kk.end());
        res.absorbed.push_back({CertificatePart::Tag::Kk, kk, all_pairs(kk), src});

        std::vector<int> km;
        km.push_back(orig(v));
        km.push_back(orig(group[0]));
        for (int i = cfg.k - 1; i < large; ++i) km.push_back(orig(group[static_cast<std::size_t>(i)]));
        std::sort(km.begin(), km.end());
        res.absorbed.push_back({CertificatePart::Tag::KtMinus, km,
                                all_pairs_minus(km, make_edge(orig(v), orig(group[0]))), src});

        for (std::size_t i = 0; i < group.size(); ++i)
          for (std::size_t j = i + 1; j < group.size(); ++j) {
            const bool in_kk = static_cast<int>(i) < cfg.k - 1 && static_cast<int>(j) < cfg.k - 1;
            const bool in_km = (i == 0 || static_cast<int>(i) >= cfg.k - 1) &&
                               (j == 0 || static_cast<int>(j) >= cfg.k - 1);
            if (in_kk || in_km)
              absorbed_inner.set(cur.edge_index(group[i], group[j]));
          }
      }
    }

    // Delete v and all absorbed edges, then compact labels.
    std::vector<Edge> kept;
    for (int i = 0; i < cur.num_edges(); ++i) {
      const Edge e = cur.edges()[static_cast<std::size_t>(i)];
      if (e.u == v || e.v == v || absorbed_inner.test(i)) continue;
      kept.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
    }
    res.removed_vertices.push_back(orig(v));
    res.reduced_to_original.erase(res.reduced_to_original.begin() + v);
    res.reduced = Graph(n - 1, std::move(kept));
  }
  if (res.reduced.num_vertices() % mod != 1 % mod)
    throw DecomposeError("preprocess", "congruence unreachable");
  return res;
}

Partition partition_graph(const Graph& g, const Design& d, const Permutation& p,
                          bool keep_near_kt) {
  const int n = g.num_vertices();
  if (d.n != n) throw ParamError("design point count does not match graph");
  if (p.size() != n || !p.is_bijection()) throw ParamError("invalid permutation");
  const long full = static_cast<long>(d.t) * (d.t - 1) / 2;

  Partition part;
  part.permutation = p;
  part.keep_near_kt = keep_near_kt;
  part.n_ = static_cast<std::size_t>(n);
  part.pair_element_.assign(part.n_ * part.n_, -1);

  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    PartitionElement el;
    for (int x : d.blocks[bi]) el.vertices.push_back(p(x));
    std::sort(el.vertices.begin(), el.vertices.end());
    for (std::size_t i = 0; i < el.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < el.vertices.size(); ++j) {
        const int u = el.vertices[i], v = el.vertices[j];
        auto& slot = part.pair_element_[static_cast<std::size_t>(u) * part.n_ +
                                        static_cast<std::size_t>(v)];
        if (slot != -1) throw ParamError("design covers a pair twice");
        slot = static_cast<int>(bi);
        part.pair_element_[static_cast<std::size_t>(v) * part.n_ +
                           static_cast<std::size_t>(u)] = static_cast<int>(bi);
        if (g.has_edge(u, v)) el.edges.push_back({u, v});
      }
    std::sort(el.edges.begin(), el.edges.end());
    el.is_complete = static_cast<long>(el.edges.size()) == full;
    el.is_near_kt = static_cast<long>(el.edges.size()) == full - 1;
    part.elements.push_back(std::move(el));
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part.element_of(u, v) < 0) throw ParamError("design misses a pair");

  for (const auto& el : part.elements) {
    if (el.is_complete || (keep_near_kt && el.is_near_kt)) continue;
    part.bad_edges.insert(part.bad_edges.end(), el.edges.begin(), el.edges.end());
  }
  std::sort(part.bad_edges.begin(), part.bad_edges.end());

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : part.bad_edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  part.bad_max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  return part;
}

Partition sample_partition(const Graph& g, const Design& d, const DecomposerConfig& cfg) {
  const int cap = cfg.resolved_maxdeg_cap(g.num_vertices());
  if (cfg.sample_attempts <= 0) {
    Partition part =
        partition_graph(g, d, Permutation::identity(g.num_vertices()), cfg.keep_near_kt);
    part.above_cap = part.bad_max_degree > cap;
    part.attempts_used = 0;
    return part;
  }
  Rng rng(cfg.rng_seed);
  std::optional<Partition> best;
  for (int attempt = 1; attempt <= cfg.sample_attempts; ++attempt) {
    Permutation p = random_permutation(g.num_vertices(), rng);
    Partition part = partition_graph(g, d, p, cfg.keep_near_kt);
    part.attempts_used = attempt;
    if (part.bad_max_degree <= cap) {
      part.above_cap = false;
      return part;
    }
    if (!best || part.bad_max_degree < best->bad_max_degree) best = std::move(part);
  }
  best->above_cap = true;
  return *std::move(best);
}

GoodSetAssignment select_good_sets(const Graph& g, const Partition& part,
                                   const DecomposerConfig& cfg) {
  const int k = cfg.k;
  const int r = cfg.r();
  const int cap = cfg.resolved_saturation_cap(g.num_vertices());

  GoodSetAssignment out;
  out.saturation_cap_used = cap;
  out.absorbed_count.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> element_used(part.elements.size(), 0);

  for (const Edge& e : part.bad_edges) {
    const auto candidates = cliques_containing_edge(g, e, k);
    out.diag.a1 += candidates.size();
    RejectionDiagnostics local;
    bool accepted = false;
    for (const auto& cand : candidates) {
      // The r edges of the candidate besides e, with their host elements.
      std::vector<std::pair<int, Edge>> picks;
      bool dup = false, external = false, reused = false;
      for (std::size_t i = 0; i < cand.size() && !dup; ++i) {
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
          const Edge f = make_edge(cand[i], cand[j]);
          if (f == e) continue;
          const int el = part.element_of(f.u, f.v);
          for (const auto& [seen, unused] : picks) {
            if (seen == el) {
              dup = true;
              break;
            }
          }
          if (dup) break;
          if (!part.elements[static_cast<std::size_t>(el)].is_complete) external = true;
          if (element_used[static_cast<std::size_t>(el)]) reused = true;
          picks.emplace_back(el, f);
        }
      }
      if (dup) {
        ++out.diag.a2;
        ++local.a2;
        continue;
      }
      if (external) {
        ++out.diag.a3;
        ++local.a3;
        continue;
      }
      if (reused) {
        ++out.diag.a4;
        ++local.a4;
        continue;
      }
      bool saturated = false;
      for (int x : cand) {
        if (x == e.u || x == e.v) continue;
        if (out.absorbed_count[static_cast<std::size_t>(x)] + (k - 1) > cap) {
          saturated = true;
          break;
        }
      }
      if (saturated) {
        ++out.diag.a5;
        ++local.a5;
        continue;
      }

      for (const auto& [el, f] : picks) element_used[static_cast<std::size_t>(el)] = 1;
      for (int x : cand)
        if (x != e.u && x != e.v)
          out.absorbed_count[static_cast<std::size_t>(x)] += k - 1;
      out.choices.push_back({e, cand, std::move(picks)});
      accepted = true;
      break;
    }
    if (!accepted) {
      throw DecomposeError(
          "select", "no good set for bad edge " + edge_str(e) + " (candidates " +
                        std::to_string(candidates.size()) + ", same-element " +
                        std::to_string(local.a2) + ", bad-edge " + std::to_string(local.a3) +
                        ", element-reuse " + std::to_string(local.a4) + ", saturation " +
                        std::to_string(local.a5) + ")");
    }
    if (static_cast<int>(out.choices.back().picks.size()) != r)
      throw SolverError("good set has wrong size");
  }
  return out;
}

DecompositionCertificate assemble(const Graph& g, const Partition& part,
                                  const GoodSetAssignment& sel,
                                  const std::vector<CertificatePart>& absorbed,
                                  const DecomposerConfig& cfg) {
  DecompositionCertificate cert;
  cert.k = cfg.k;
  cert.keep_near_kt = part.keep_near_kt;

  std::vector<std::optional<Edge>> taken(part.elements.size());
  for (const auto& choice : sel.choices) {
    for (const auto& [el, f] : choice.picks) {
      if (taken[static_cast<std::size_t>(el)])
        throw SolverError("assembly: element drawn from twice");
      taken[static_cast<std::size_t>(el)] = f;
    }
    CertificatePart p;
    p.tag = CertificatePart::Tag::Kk;
    p.vertices = choice.clique;
    p.edges = all_pairs(choice.clique);
    p.source = "bad edge " + edge_str(choice.bad_edge);
    cert.parts.push_back(std::move(p));
  }

  for (std::size_t i = 0; i < part.elements.size(); ++i) {
    const auto& el = part.elements[i];
    if (el.is_complete) {
      CertificatePart p;
      p.vertices = el.vertices;
      if (taken[i]) {
        p.tag = CertificatePart::Tag::KtMinus;
        p.edges = el.edges;
        p.edges.erase(std::find(p.edges.begin(), p.edges.end(), *taken[i]));
        p.source = "element " + std::to_string(i) + " minus " + edge_str(*taken[i]);
      } else {
        p.tag = CertificatePart::Tag::Kt;
        p.edges = el.edges;
        p.source = "element " + std::to_string(i);
      }
      cert.parts.push_back(std::move(p));
    } else if (part.keep_near_kt && el.is_near_kt) {
      cert.parts.push_back({CertificatePart::Tag::KtMinus, el.vertices, el.edges,
                            "element " + std::to_string(i) + " kept as K_t-minus"});
    }
    // Remaining incomplete elements: their edges are exactly the bad edges,
    // each absorbed by its own K_k part above.
  }

  cert.parts.insert(cert.parts.end(), absorbed.begin(), absorbed.end());

  // Assembly invariant: the parts' edge sets partition E(g).
  std::vector<int> cover(static_cast<std::size_t>(g.num_edges()), 0);
  for (const auto& p : cert.parts)
    for (const auto& e : p.edges) {
      const int idx = g.edge_index(e.u, e.v);
      if (idx < 0) throw SolverError("assembly: part uses a non-edge " + edge_str(e));
      ++cover[static_cast<std::size_t>(idx)];
    }
  for (int i = 0; i < g.num_edges(); ++i)
    if (cover[static_cast<std::size_t>(i)] != 1)
      throw SolverError("assembly: edge " + edge_str(g.edges()[static_cast<std::size_t>(i)]) +
                        " covered " + std::to_string(cover[static_cast<std::size_t>(i)]) +
                        " times");
  return cert;
}

ValidityReport verify_certificate(const Graph& g, const DecompositionCertificate& cert,
                                  const DecomposerConfig& cfg) {
  ValidityReport rep;
  const int k = cfg.k;
  const int t = 2 * k - 1;
  if (cert.k != k) rep.fail("certificate k does not match configuration");

  std::vector<int> cover(static_cast<std::size_t>(g.num_edges()), 0);
  for (std::size_t pi = 0; pi < cert.parts.size(); ++pi) {
    const auto& p = cert.parts[pi];
    const std::string id = "part " + std::to_string(pi);

    bool verts_ok = !p.vertices.empty();
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (p.vertices[i] < 0 || p.vertices[i] >= g.num_vertices()) verts_ok = false;
      if (i + 1 < p.vertices.size() && p.vertices[i] >= p.vertices[i + 1]) verts_ok = false;
    }
    if (!verts_ok) {
      rep.fail(id + ": vertex list not sorted/in-range");
      continue;
    }

    // Every listed edge must be an edge of g inside the part's vertex set.
    bool edges_ok = true;
    for (const auto& e : p.edges) {
      if (e.u >= e.v) edges_ok = false;
      if (!std::binary_search(p.vertices.begin(), p.vertices.end(), e.u) ||
          !std::binary_search(p.vertices.begin(), p.vertices.end(), e.v))
        edges_ok = false;
      const int idx = g.edge_index(e.u, e.v);
      if (idx < 0) {
        rep.fail(id + ": " + edge_str(e) + " is not an edge of the graph");
        edges_ok = false;
        continue;
      }
      ++cover[static_cast<std::size_t>(idx)];
    }
    if (!edges_ok) rep.fail(id + ": malformed edge list");
    auto sorted_unique = [&] {
      for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
        if (!(p.edges[i] < p.edges[i + 1])) return false;
      return true;
    }();
    if (!sorted_unique) rep.fail(id + ": edges not sorted/duplicate-free");

    // Tag structure: count how many vertex pairs are present as edges.
    const long nv = static_cast<long>(p.vertices.size());
    const long pairs = nv * (nv - 1) / 2;
    long missing = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
        const Edge e = make_edge(p.vertices[i], p.vertices[j]);
        if (!std::binary_search(p.edges.begin(), p.edges.end(), e)) ++missing;
      }
    const bool spans_all = static_cast<long>(p.edges.size()) == pairs - missing;
    if (!spans_all) rep.fail(id + ": edges outside the vertex-pair set");
    switch (p.tag) {
      case CertificatePart::Tag::Kk:
        if (nv != k || missing != 0)
          rep.fail(id + ": tag Kk needs " + std::to_string(k) + " vertices and all pairs");
        break;
      case CertificatePart::Tag::Kt:
        if (nv != t || missing != 0)
          rep.fail(id + ": tag Kt needs " + std::to_string(t) + " vertices and all pairs");
        break;
      case CertificatePart::Tag::KtMinus:
        if (nv != t || missing != 1)
          rep.fail(id + ": tag KtMinus needs " + std::to_string(t) +
                   " vertices and exactly one absent pair");
        break;
    }
  }

  for (int i = 0; i < g.num_edges(); ++i) {
    const int c = cover[static_cast<std::size_t>(i)];
    if (c != 1)
      rep.fail("edge " + edge_str(g.edges()[static_cast<std::size_t>(i)]) + " covered " +
               std::to_string(c) + " times");
  }
  return rep;
}

DesignSource DesignSource::pg(int q) {
  DesignSource s;
  s.kind = Kind::builtin_pg;
  s.q = q;
  return s;
}

DesignSource DesignSource::searched(std::uint64_t budget) {
  DesignSource s;
  s.kind = Kind::search;
  s.search_budget = budget;
  return s;
}

DesignSource DesignSource::from_design(Design d) {
  DesignSource s;
  s.kind = Kind::file;
  s.design = std::move(d);
  return s;
}

DecompositionCertificate decompose(const Graph& g, const DecomposerConfig& cfg,
                                   const DesignSource& source) {
  const int t = cfg.t();

  PreprocessResult pre = preprocess(g, cfg);
  const int np = pre.reduced.num_vertices();

  Design design;
  switch (source.kind) {
    case DesignSource::Kind::builtin_pg: {
      design = projective_plane_design(source.q);
      if (design.n != np || design.t != t)
        throw DecomposeError("design", "PG(2," + std::to_string(source.q) + ") is S(2," +
                                           std::to_string(design.t) + "," +
                                           std::to_string(design.n) + "), need S(2," +
                                           std::to_string(t) + "," + std::to_string(np) + ")");
      break;
    }
    case DesignSource::Kind::search: {
      const auto res = search_design(np, t, source.search_budget);
      switch (res.status) {
        case DesignSearchStatus::found:
          design = *res.design;
          break;
        case DesignSearchStatus::divisibility:
          throw DecomposeError("design", "no S(2," + std::to_string(t) + "," +
                                             std::to_string(np) + "): divisibility");
        case DesignSearchStatus::none_exists:
          throw DecomposeError("design", "no S(2," + std::to_string(t) + "," +
                                             std::to_string(np) + ") exists (exhaustive search)");
        case DesignSearchStatus::budget_exceeded:
          throw DecomposeError("design", "design search budget exhausted");
      }
      break;
    }
    case DesignSource::Kind::file: {
      if (!source.design) throw DecomposeError("design", "no design supplied");
      design = *source.design;
      if (design.n != np || design.t != t)
        throw DecomposeError("design", "supplied design is S(2," + std::to_string(design.t) +
                                           "," + std::to_string(design.n) + "), need S(2," +
                                           std::to_string(t) + "," + std::to_string(np) + ")");
      break;
    }
  }

  Partition part = sample_partition(pre.reduced, design, cfg);
  GoodSetAssignment sel = select_good_sets(pre.reduced, part, cfg);
  DecompositionCertificate cert = assemble(pre.reduced, part, sel, {}, cfg);

  // Back to the input labeling, then append the preprocessing parts.
  for (auto& p : cert.parts) {
    for (auto& v : p.vertices) v = pre.reduced_to_original[static_cast<std::size_t>(v)];
    for (auto& e : p.edges)
      e = make_edge(pre.reduced_to_original[static_cast<std::size_t>(e.u)],
                    pre.reduced_to_original[static_cast<std::size_t>(e.v)]);
  }
  cert.parts.insert(cert.parts.end(), pre.absorbed.begin(), pre.absorbed.end());

  cert.seed = cfg.rng_seed;
  cert.maxdeg_cap = cfg.resolved_maxdeg_cap(np);
  cert.saturation_cap = sel.saturation_cap_used;
  cert.keep_near_kt = cfg.keep_near_kt;
  cert.partition_above_cap = part.above_cap;
  cert.diag = sel.diag;
  if (g.num_vertices() > 0) {
    mpz_class k10 = 1;
    for (int i = 0; i < 10; ++i) k10 *= cfg.k;
    const mpz_class denom = 9 * k10;
    const Rational threshold =
        Rational(mpz_class(g.num_vertices())) * Rational(denom - 1, denom);
    cert.below_paper_threshold = Rational(min_degree(g)) < threshold;
  }

  if (const auto rep = verify_certificate(g, cert, cfg); !rep.ok())
    throw DecomposeError("verify", rep.violations.front() + " (and " +
                                       std::to_string(rep.violations.size() - 1) + " more)");
  return cert;
}

}  // namespace kpack
