#include "hwp/composer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "hwp/building_blocks.hpp"
#include "hwp/constructions.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/search.hpp"
#include "hwp/verifier.hpp"

namespace hwp {
namespace {

using Counts = std::map<int, int>;  // cycle length → number of factors

std::string pair_name(KindPair p) { return kind_name(p.first) + "/" + kind_name(p.second); }

std::string menu_text(const std::set<int>& s) {
  std::string out;
  for (int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

// A digraph with a fixed number of factors whose factorizations are indexed
// by the kind pair and the number r of first-kind factors.
class Block {
 public:
  Block(std::string name, int order, int factors)
      : name_(std::move(name)), order_(order), factors_(factors) {}
  virtual ~Block() = default;

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int factor_count() const { return factors_; }

  std::set<int> menu(KindPair p) const {
    {
      std::lock_guard lock(mu_);
      auto it = menus_.find(p);
      if (it != menus_.end()) return it->second;
    }
    std::set<int> m = compute_menu(p);
    std::lock_guard lock(mu_);
    return menus_.emplace(p, std::move(m)).first->second;
  }

  PlanNode plan(KindPair p, int r) const {
    require_in_menu(p, r);
    return compute_plan(p, r);
  }

  std::shared_ptr<const Certificate> build(KindPair p, int r) const {
    const auto key = std::make_pair(p, r);
    {
      std::lock_guard lock(mu_);
      auto it = built_.find(key);
      if (it != built_.end()) return it->second;
    }
    require_in_menu(p, r);
    auto c = std::make_shared<const Certificate>(compute_build(p, r));
    if (static_cast<int>(c->factors.size()) != factors_ || c->count_kind(p.first) != r ||
        c->count_kind(p.second) != factors_ - r)
      throw ComposerFault(fmt::format("{}: built factor kinds do not match r={}", name_, r),
                          fmt::format("block={} kinds={} factors={}", name_, pair_name(p),
                                      c->factors.size()));
    std::lock_guard lock(mu_);
    return built_.emplace(key, std::move(c)).first->second;
  }

 protected:
  virtual std::set<int> compute_menu(KindPair p) const = 0;
  virtual PlanNode compute_plan(KindPair p, int r) const = 0;
  virtual Certificate compute_build(KindPair p, int r) const = 0;

 private:
  void require_in_menu(KindPair p, int r) const {
    const auto m = menu(p);
    if (!m.count(r))
      throw ComposerFault(fmt::format("{}: r={} outside its supported set", name_, r),
                          fmt::format("block={} kinds={} supported={}", name_, pair_name(p),
                                      menu_text(m)));
  }

  std::string name_;
  int order_;
  int factors_;
  mutable std::mutex mu_;
  mutable std::map<KindPair, std::set<int>> menus_;
  mutable std::map<std::pair<KindPair, int>, std::shared_ptr<const Certificate>> built_;
};

using BlockPtr = std::shared_ptr<const Block>;

// One way to factorize a fixed digraph, described by its kind counts.
struct Option {
  Counts counts;
  std::function<Certificate()> make;
};

bool fits(const Counts& counts, KindPair p) {
  for (auto [len, n] : counts)
    if (n > 0 && len != p.first && len != p.second) return false;
  return true;
}

int first_count(const Counts& counts, KindPair p) {
  auto it = counts.find(p.first);
  return it == counts.end() ? 0 : it->second;
}

class LeafBlock : public Block {
 public:
  LeafBlock(std::string name, int order, int factors, std::vector<Option> options)
      : Block(std::move(name), order, factors), options_(std::move(options)) {}

 protected:
  std::set<int> compute_menu(KindPair p) const override {
    std::set<int> out;
    for (const Option& o : options_)
      if (fits(o.counts, p)) out.insert(first_count(o.counts, p));
    return out;
  }

  PlanNode compute_plan(KindPair, int r) const override {
    PlanNode n;
    n.block = name();
    n.factors = factor_count();
    n.r = r;
    return n;
  }

  Certificate compute_build(KindPair p, int r) const override {
    for (const Option& o : options_)
      if (fits(o.counts, p) && first_count(o.counts, p) == r) {
        try {
          return o.make();
        } catch (const UnsupportedParameters& e) {
          throw ComposerFault(fmt::format("{}: sub-construction failed: {}", name(), e.what()),
                              fmt::format("block={} kinds={} r={}", name(), pair_name(p), r));
        }
      }
    throw ComposerFault(fmt::format("{}: no option for r={}", name(), r), name());
  }

 private:
  std::vector<Option> options_;
};

// `maps[c][t]` is the host vertex of block vertex t in copy c. Every copy
// uses the same factorization, so group factor j is the union of the copies'
// factor j and stays homogeneous.
struct Group {
  BlockPtr block;
  std::vector<std::vector<Vertex>> maps;
};

struct Variant {
  std::string name;
  std::vector<Group> groups;
};

// sums[i] holds the first-kind totals reachable by groups i, i+1, ...
std::vector<std::set<int>> suffix_sums(const Variant& v, KindPair p) {
  std::vector<std::set<int>> sums(v.groups.size() + 1);
  sums.back() = {0};
  for (std::size_t i = v.groups.size(); i-- > 0;) {
    for (int a : v.groups[i].block->menu(p))
      for (int b : sums[i + 1]) sums[i].insert(a + b);
  }
  return sums;
}

// K_n* assembled from groups of smaller blocks; the variant list may depend
// on the kind pair.
class CompositeBlock : public Block {
 public:
  using VariantFn = std::function<std::vector<Variant>(KindPair)>;

  CompositeBlock(std::string name, int order, VariantFn fn)
      : Block(std::move(name), order, order - 1), fn_(std::move(fn)) {}

 protected:
  std::set<int> compute_menu(KindPair p) const override {
    std::set<int> out;
    for (const Variant& v : variants(p)) {
      const auto sums = suffix_sums(v, p);
      out.insert(sums[0].begin(), sums[0].end());
    }
    return out;
  }

  PlanNode compute_plan(KindPair p, int r) const override {
    const auto [variant, coeffs] = choose(p, r);
    PlanNode n;
    n.block = name();
    n.variant = variant->name;
    n.factors = factor_count();
    n.r = r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      PlanNode child = variant->groups[i].block->plan(p, coeffs[i]);
      child.copies = static_cast<int>(variant->groups[i].maps.size());
      n.children.push_back(std::move(child));
    }
    return n;
  }

  Certificate compute_build(KindPair p, int r) const override {
    const auto [variant, coeffs] = choose(p, r);
    Certificate c;
    c.host = complete_symmetric(order());
    c.host_desc = complete_host(order());
    c.trace.step = name();
    c.trace.param("variant", variant->name).param("r", r).param("kinds", pair_name(p));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const Group& g = variant->groups[i];
      auto sub = g.block->build(p, coeffs[i]);
      for (const Factor& f : sub->factors) {
        Factor out;
        out.cycle_length = f.cycle_length;
        out.symmetric = f.symmetric;
        for (const auto& map : g.maps)
          for (const Arc& a : f.arcs) out.arcs.push_back({map[a.tail], map[a.head]});
        std::sort(out.arcs.begin(), out.arcs.end());
        c.factors.push_back(std::move(out));
      }
      Trace t;
      t.step = "group";
      t.param("block", g.block->name()).param("copies", static_cast<long long>(g.maps.size()));
      t.param("r", coeffs[i]);
      t.children.push_back(sub->trace);
      c.trace.children.push_back(std::move(t));
    }
    return c;
  }

 private:
  const std::vector<Variant>& variants(KindPair p) const {
    std::lock_guard lock(mu_);
    auto it = variants_.find(p);
    if (it == variants_.end()) it = variants_.emplace(p, fn_(p)).first;
    return it->second;
  }

  // First variant reaching r; smallest coefficient per group, in order.
  std::pair<const Variant*, std::vector<int>> choose(KindPair p, int r) const {
    std::string state;
    for (const Variant& v : variants(p)) {
      const auto sums = suffix_sums(v, p);
      state += fmt::format("{}: reach {}; ", v.name, menu_text(sums[0]));
      if (!sums[0].count(r)) continue;
      std::vector<int> coeffs;
      int left = r;
      for (std::size_t i = 0; i < v.groups.size(); ++i) {
        for (int c : v.groups[i].block->menu(p))
          if (sums[i + 1].count(left - c)) {
            coeffs.push_back(c);
            left -= c;
            break;
          }
      }
      if (left != 0 || coeffs.size() != v.groups.size())
        throw ComposerFault(fmt::format("{}: coefficient enumeration failed for r={}", name(), r),
                            state);
      return {&v, coeffs};
    }
    throw ComposerFault(fmt::format("{}: no variant reaches r={}", name(), r), state);
  }

  VariantFn fn_;
  mutable std::mutex mu_;
  mutable std::map<KindPair, std::vector<Variant>> variants_;
};

// Interned blocks, so menus and certificates are shared across requests.
BlockPtr intern(const std::string& name, const std::function<std::shared_ptr<Block>()>& make) {
  static std::mutex mu;
  static std::map<std::string, BlockPtr> registry;
  std::lock_guard lock(mu);
  auto it = registry.find(name);
  if (it == registry.end()) it = registry.emplace(name, make()).first;
  return it->second;
}

std::vector<Vertex> iota_map(int n, int offset = 0) {
  std::vector<Vertex> out(n);
  for (int i = 0; i < n; ++i) out[i] = offset + i;
  return out;
}

// ---- leaf blocks ----

Certificate leaf_cert(Digraph host, HostDescriptor desc, std::vector<Factor> factors, Trace trace) {
  Certificate c;
  c.host = std::move(host);
  c.host_desc = std::move(desc);
  c.factors = std::move(factors);
  c.trace = std::move(trace);
  return c;
}

Trace named_step(const std::string& step) {
  Trace t;
  t.step = step;
  return t;
}

Certificate lifted(const UndirectedFactorization& f, Digraph host, HostDescriptor desc,
                   const std::string& step) {
  Certificate c = symmetric_lift(f);
  c.host = std::move(host);
  c.host_desc = std::move(desc);
  Trace t = named_step(step);
  t.children.push_back(std::move(c.trace));
  c.trace = std::move(t);
  return c;
}

BlockPtr k2_block() {
  return intern("K2*", [] {
    Option o{{{kK2, 1}}, [] {
               return leaf_cert(complete_symmetric(2), complete_host(2), {matching_factor({{0, 1}})},
                                named_step("double_arc"));
             }};
    return std::make_shared<LeafBlock>("K2*", 2, 1, std::vector<Option>{o});
  });
}

// C_ℓ*: both orientations of the cycle, or two K₂*-factors when ℓ is even.
BlockPtr cycle_block(int len) {
  const std::string name = fmt::format("C{}*", len);
  return intern(name, [=] {
    auto host = [=] { return symmetric_cycle(len); };
    std::vector<Option> opts;
    opts.push_back({{{len, 2}}, [=] {
                      std::vector<Vertex> c = iota_map(len);
                      Factor f = cycles_factor(len, {c});
                      std::reverse(c.begin(), c.end());
                      return leaf_cert(host(), explicit_host(len, name), {f, cycles_factor(len, {c})},
                                       named_step("orientations"));
                    }});
    if (len % 2 == 0)
      opts.push_back({{{kK2, 2}}, [=] {
                        std::vector<std::pair<Vertex, Vertex>> even, odd;
                        for (int i = 0; i < len; i += 2) {
                          even.push_back({i, i + 1});
                          odd.push_back({i + 1, (i + 2) % len});
                        }
                        return leaf_cert(host(), explicit_host(len, name),
                                         {matching_factor(even), matching_factor(odd)},
                                         named_step("alternate_matchings"));
                      }});
    return std::make_shared<LeafBlock>(name, len, 2, std::move(opts));
  });
}

// F_p*[2]: one K₂,₂* per edge of F_p, as two 1-factors or two C⃗₄-factors.
BlockPtr fm2_block(int p) {
  const std::string name = fmt::format("F{}*[2]", p);
  return intern(name, [=] {
    auto parts = [=] {
      std::vector<std::pair<Vertex, Vertex>> same, cross;
      std::vector<std::vector<Vertex>> fwd, back;
      for (auto [a, b] : f_matching(p)) {
        const Vertex a0 = layered(0, a, p), a1 = layered(1, a, p);
        const Vertex b0 = layered(0, b, p), b1 = layered(1, b, p);
        same.push_back({a0, b0});
        same.push_back({a1, b1});
        cross.push_back({a0, b1});
        cross.push_back({a1, b0});
        fwd.push_back({a0, b0, a1, b1});
        back.push_back({b1, a1, b0, a0});
      }
      return std::make_tuple(matching_factor(same), matching_factor(cross), cycles_factor(4, fwd),
                             cycles_factor(4, back));
    };
    auto host = [=] {
      auto [s, c, f, b] = parts();
      std::vector<Arc> arcs = s.arcs;
      arcs.insert(arcs.end(), c.arcs.begin(), c.arcs.end());
      return Digraph::from_arcs(2 * p, std::move(arcs));
    };
    std::vector<Option> opts;
    opts.push_back({{{kK2, 2}}, [=] {
                      auto [s, c, f, b] = parts();
                      return leaf_cert(host(), explicit_host(2 * p, name), {s, c},
                                       named_step("layer_matchings"));
                    }});
    opts.push_back({{{4, 2}}, [=] {
                      auto [s, c, f, b] = parts();
                      return leaf_cert(host(), explicit_host(2 * p, name), {f, b},
                                       named_step("four_cycle_orientations"));
                    }});
    return std::make_shared<LeafBlock>(name, 2 * p, 2, std::move(opts));
  });
}

std::string spec_label(const std::string& host, const std::vector<SearchKind>& kinds) {
  std::string out;
  for (const SearchKind& k : kinds)
    out += fmt::format("{}{}x{}", out.empty() ? "" : "+", kind_name(k.cycle_length), k.count);
  return host + " into " + out;
}

Option searched_option(std::function<Digraph()> host, HostDescriptor desc, std::string host_name,
                       std::vector<SearchKind> kinds) {
  Counts counts;
  for (const SearchKind& k : kinds) counts[k.cycle_length] += k.paired ? 2 * k.count : k.count;
  return {counts, [=] {
            return searched_factorization(host(), desc, kinds, spec_label(host_name, kinds));
          }};
}


Option made(Counts counts, std::function<Certificate()> make) { return {std::move(counts), std::move(make)}; }

// C_p*[2] on Z₂ × Z_p.
BlockPtr cm2_block(int p) {
  const std::string name = fmt::format("C{}*[2]", p);
  return intern(name, [=] {
    std::vector<Option> opts;
    for (int r : {0, 2, 4}) opts.push_back(made({{kK2, r}, {2 * p, 4 - r}}, [=] { return cm2_k2_vs_c2m(p, r); }));
    if (p % 2 == 0) {
      for (int r : {2, 4}) opts.push_back(made({{kK2, r}, {p, 4 - r}}, [=] { return cm2_k2_vs_cm(p, r); }));
      opts.push_back(made({{p, 4}}, [=] { return cm2_cm_vs_c2m(p, 4); }));
      opts.push_back(made({{p, 2}, {2 * p, 2}}, [=] { return cm2_cm_vs_c2m(p, 2); }));
    }
    return std::make_shared<LeafBlock>(name, 2 * p, 4, std::move(opts));
  });
}

// C_p*[2] ⊕ I*₂ₚ.
BlockPtr cm2i_block(int p) {
  const std::string name = fmt::format("C{}*[2]+I", p);
  return intern(name, [=] {
    std::vector<Option> opts;
    for (int r : {1, 3, 5})
      opts.push_back(made({{kK2, r}, {2 * p, 5 - r}}, [=] { return cm2_plus_I_k2_vs_c2m(p, r); }));
    if (p >= 5) opts.push_back(made({{2 * p, 5}}, [=] { return cm2_plus_I_k2_vs_c2m(p, 0); }));
    if (p == 4)
      for (int r : {0, 2}) opts.push_back(made({{kK2, r}, {4, 5 - r}}, [=] { return c42_plus_I8(r); }));
    if (p % 2 == 0) {
      for (int r : {1, 3, 5})
        opts.push_back(made({{kK2, r}, {p, 5 - r}}, [=] { return cm2_plus_I_k2_vs_cm(p, r); }));
      for (int r : {1, 3})
        opts.push_back(made({{p, r}, {2 * p, 5 - r}}, [=] { return cm2_plus_I_cm_vs_c2m(p, r); }));
    }
    // All-C⃗ₚ factorizations have no explicit family; small orders are searched.
    if (p == 6 || p == 8 || p == 10)
      opts.push_back(searched_option([=] { return cm_star_blowup_plus_I(p); },
                                     explicit_host(2 * p, fmt::format("C{}*[2]+I{}*", p, 2 * p)), name,
                                     {{p, 5}}));
    return std::make_shared<LeafBlock>(name, 2 * p, 5, std::move(opts));
  });
}

// Γ*ₚ = C*[2] ⊕ F_p*[2], C = (0, 1, ..., p−1).
BlockPtr gamma_block(int p) {
  const std::string name = fmt::format("Gamma{}*", p);
  return intern(name, [=] {
    std::vector<Option> opts;
    for (int r : {0, 2, 4, 6})
      opts.push_back(made({{kK2, r}, {2 * p, 6 - r}}, [=] { return gamma_k2_vs_c2m(p, r); }));
    std::vector<int> rs{2, 4, 6};
    if (p % 4 == 2) rs = {1, 2, 3, 4, 6};
    for (int r : rs) opts.push_back(made({{kK2, r}, {p, 6 - r}}, [=] { return gamma_k2_vs_cm(p, r); }));
    opts.push_back(made({{p, 6}}, [=] { return gamma_cm_vs_c2m(p, 6); }));
    if (p == 6)
      for (int r : {2, 4})
        opts.push_back(searched_option([] { return named_graph_Gamma(6); }, explicit_host(12, "Gamma6*"),
                                       name, {{6, r}, {12, 6 - r}}));
    return std::make_shared<LeafBlock>(name, 2 * p, 6, std::move(opts));
  });
}

// K*₍q:2₎ with parts [0, q) and [q, 2q).
BlockPtr kp2_block(int q) {
  const std::string name = fmt::format("K({}:2)*", q);
  return intern(name, [=] {
    auto host = [=] { return complete_symmetric_equipartite(q, 2).graph; };
    std::vector<Option> opts;
    opts.push_back(made({{kK2, q}}, [=] {
      return lifted(equipartite_one_factorization(q, 2), host(), equipartite_host(q, 2),
                    "equipartite_one_factorization");
    }));
    for (int len = 4; len <= 2 * q; len += 2)
      if ((2 * q) % len == 0)
        opts.push_back(made({{len, q}}, [=] {
          Trace t = named_step("directed_bipartite_factorization");
          t.param("length", len);
          return leaf_cert(host(), equipartite_host(q, 2), directed_bipartite_factorization(q, len), t);
        }));
    return std::make_shared<LeafBlock>(name, 2 * q, q, std::move(opts));
  });
}

BlockPtr k43_block() {
  return intern("K(4:3)*", [] {
    std::vector<Option> opts;
    for (int r : {0, 1, 2, 4, 6, 8}) opts.push_back(made({{kK2, r}, {4, 8 - r}}, [=] { return k43_factorization(r); }));
    return std::make_shared<LeafBlock>("K(4:3)*", 12, 8, std::move(opts));
  });
}

// Whole-K_n* leaves: the round robin, the printed K₁₂* tables, and searched
// factorizations for small orders where no route applies.
BlockPtr round_robin_block(int n) {
  const std::string name = fmt::format("K{}*/round-robin", n);
  return intern(name, [=] {
    std::vector<Option> opts{made({{kK2, n - 1}}, [=] {
      return lifted(one_factorization_complete(n), complete_symmetric(n), complete_host(n), "round_robin");
    })};
    return std::make_shared<LeafBlock>(name, n, n - 1, std::move(opts));
  });
}

BlockPtr k12_table_block() {
  return intern("K12*/tables", [] {
    std::vector<Option> opts;
    for (int r : {0, 1, 2, 3, 4, 5, 7, 9, 11})
      opts.push_back(made({{kK2, r}, {4, 11 - r}}, [=] { return k12_factorization(r); }));
    return std::make_shared<LeafBlock>("K12*/tables", 12, 11, std::move(opts));
  });
}

std::vector<std::vector<SearchKind>> searched_complete_kinds(int n) {
  switch (n) {
    case 8: return {{{8, 7}}, {{4, 1}, {8, 6}}, {{4, 2}, {8, 5}}, {{kK2, 2}, {8, 5}}};
    case 10: return {{{10, 9}}};
    case 12: return {{{6, 11}}};
    default: return {};
  }
}

BlockPtr search_block(int n) {
  const auto kinds = searched_complete_kinds(n);
  if (kinds.empty()) return nullptr;
  const std::string name = fmt::format("K{}*/search", n);
  return intern(name, [=] {
    std::vector<Option> opts;
    for (const auto& k : kinds)
      opts.push_back(searched_option([=] { return complete_symmetric(n); }, complete_host(n),
                                     fmt::format("K{}*", n), k));
    return std::make_shared<LeafBlock>(name, n, n - 1, std::move(opts));
  });
}

// ---- composite routes ----

BlockPtr complete_block(int n);

Group single(BlockPtr b, std::vector<Vertex> map) { return {std::move(b), {std::move(map)}}; }

// Block vertex l·p + i of a C_p*[2]-type block ↦ host vertex l·p + c[i].
std::vector<Vertex> layered_map(const std::vector<Vertex>& c, int p) {
  std::vector<Vertex> out(2 * p);
  for (int l = 0; l < 2; ++l)
    for (int i = 0; i < p; ++i) out[l * p + i] = l * p + c[i];
  return out;
}

std::vector<std::vector<Vertex>> cycles_of(const UndirectedFactorization& f) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& uf : f.factors) out.push_back(factor_cycles(uf, f.host.order()).at(0));
  return out;
}

// K_n* = F_n* ⊕ C₁* ⊕ ... (n even) or C₁* ⊕ ... (n odd), Hamilton cycles.
Variant walecki_variant(int n) {
  Variant v;
  v.name = "walecki";
  std::vector<std::vector<Vertex>> cycles;
  if (n % 2 == 0) {
    const WaleckiDecomposition w = walecki_even(n);
    Group f{k2_block(), {}};
    for (auto [a, b] : w.f) f.maps.push_back({a, b});
    v.groups.push_back(std::move(f));
    cycles = w.cycles;
  } else {
    cycles = cycles_of(walecki_odd(n));
  }
  for (const auto& c : cycles) v.groups.push_back(single(cycle_block(n), c));
  return v;
}

Group i_group(int p) {
  Group g{k2_block(), {}};
  for (int u = 0; u < p; ++u) g.maps.push_back({u, p + u});
  return g;
}

// K_2p* = K_p*[2] ⊕ I*₂ₚ with K_p decomposed by Walecki.
std::vector<Variant> half_variants(int p) {
  std::vector<Variant> out;
  if (p % 2 == 1) {
    const auto cycles = cycles_of(walecki_odd(p));
    Variant a{"half-odd", {single(cm2i_block(p), layered_map(cycles[0], p))}};
    Variant b{"half-odd-I", {i_group(p)}};
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      if (k > 0) a.groups.push_back(single(cm2_block(p), layered_map(cycles[k], p)));
      b.groups.push_back(single(cm2_block(p), layered_map(cycles[k], p)));
    }
    out.push_back(std::move(a));
    out.push_back(std::move(b));
    return out;
  }
  const WaleckiDecomposition w = walecki_even(p);
  if (w.cycles[0] != iota_map(p))
    throw ComposerFault("walecki_even: first cycle is not the starter", fmt::format("p={}", p));
  auto rest = [&](Variant v, std::size_t from) {
    for (std::size_t k = from; k < w.cycles.size(); ++k)
      v.groups.push_back(single(cm2_block(p), layered_map(w.cycles[k], p)));
    return v;
  };
  if (w.cycles.size() >= 2)
    out.push_back(rest({"half-gamma",
                        {single(gamma_block(p), iota_map(2 * p)),
                         single(cm2i_block(p), layered_map(w.cycles[1], p))}},
                       2));
  out.push_back(rest({"half-matching",
                      {single(cm2i_block(p), iota_map(2 * p)), single(fm2_block(p), iota_map(2 * p))}},
                     1));
  out.push_back(rest({"half-gamma-I", {single(gamma_block(p), iota_map(2 * p)), i_group(p)}}, 1));
  return out;
}

// Parts of size q joined along a round-robin 1-factorization of K_P: the
// first 1-factor inflates to copies of K_2q*, the others to K*₍q:2₎.
Variant quotient_variant(int n, int q) {
  const int parts = n / q;
  const auto rr = one_factorization_complete(parts);
  auto edge_maps = [&](const UndirectedFactor& f) {
    std::vector<std::vector<Vertex>> maps;
    for (const Edge& e : f.edges) {
      std::vector<Vertex> m(2 * q);
      for (int t = 0; t < 2 * q; ++t) m[t] = t < q ? e.a * q + t : e.b * q + (t - q);
      maps.push_back(std::move(m));
    }
    return maps;
  };
  Variant v;
  v.name = fmt::format("quotient(q={},parts={})", q, parts);
  v.groups.push_back({complete_block(2 * q), edge_maps(rr.factors[0])});
  for (std::size_t i = 1; i < rr.factors.size(); ++i)
    v.groups.push_back({kp2_block(q), edge_maps(rr.factors[i])});
  return v;
}

// K_8k* = K_4k*[2] ⊕ I with K_4k = K_2k[2] ⊕ I'; each 1-factor M_j of K_2k
// blows up to a C₄-factor of K_4k. Vertex (l, l', w) has id l·4k + l'·2k + w.
Variant double_half_variant(int n) {
  const int k = n / 8;
  const auto rr = one_factorization_complete(2 * k);
  Variant v;
  v.name = "double-half";
  for (std::size_t j = 0; j < rr.factors.size(); ++j) {
    Group g{j == 0 ? cm2i_block(4) : cm2_block(4), {}};
    for (const Edge& e : rr.factors[j].edges) {
      const std::vector<Vertex> c{e.a, e.b, 2 * k + e.a, 2 * k + e.b};
      std::vector<Vertex> m(8);
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 4; ++i) m[l * 4 + i] = l * 4 * k + c[i];
      g.maps.push_back(std::move(m));
    }
    v.groups.push_back(std::move(g));
  }
  Group g{cycle_block(4), {}};
  for (int w = 0; w < 2 * k; ++w) g.maps.push_back({w, 2 * k + w, 4 * k + w, 6 * k + w});
  v.groups.push_back(std::move(g));
  return v;
}

// Parts of size 4 joined along a Kirkman triple system on n/4 points: the
// first parallel class inflates to K₁₂* copies, the others to K*₍₄:₃₎.
Variant kirkman_variant(int n) {
  const auto kts = kirkman_triple_system(n / 4);
  Variant v;
  v.name = fmt::format("kirkman(parts={})", n / 4);
  for (std::size_t c = 0; c < kts.factors.size(); ++c) {
    Group g{c == 0 ? complete_block(12) : k43_block(), {}};
    for (const auto& tri : factor_cycles(kts.factors[c], n / 4)) {
      std::vector<Vertex> m(12);
      for (int t = 0; t < 12; ++t) m[t] = tri[t / 4] * 4 + t % 4;
      g.maps.push_back(std::move(m));
    }
    v.groups.push_back(std::move(g));
  }
  return v;
}

std::vector<int> part_sizes(int n, KindPair p) {
  std::vector<int> out;
  for (int len : {p.first, p.second}) {
    if (len < 3) continue;
    for (int q : {len / 2, len})
      if (q >= 2 && n % q == 0 && (n / q) % 2 == 0 && n / q >= 4 &&
          std::find(out.begin(), out.end(), q) == out.end())
        out.push_back(q);
  }
  return out;
}

std::vector<Variant> complete_variants(int n, KindPair p) {
  std::vector<Variant> out;
  auto leaf = [&](const std::string& name, BlockPtr b) {
    if (b) out.push_back({name, {single(b, iota_map(n))}});
  };
  if (n % 2 == 0) leaf("round-robin", round_robin_block(n));
  if (n == 12) leaf("tables", k12_table_block());
  if (n >= 3) out.push_back(walecki_variant(n));
  if (n % 2 == 0 && n >= 6) {
    auto h = half_variants(n / 2);
    out.insert(out.end(), h.begin(), h.end());
  }
  for (int q : part_sizes(n, p)) out.push_back(quotient_variant(n, q));
  const bool c4 = p.first == 4 || p.second == 4;
  if (c4 && n % 8 == 0) out.push_back(double_half_variant(n));
  if (c4 && p.first == kK2 && n % 24 == 12 && n >= 36) out.push_back(kirkman_variant(n));
  leaf("search", search_block(n));
  return out;
}

BlockPtr complete_block(int n) {
  const std::string name = fmt::format("K{}*", n);
  return intern(name, [=] {
    return std::make_shared<CompositeBlock>(name, n, [=](KindPair p) { return complete_variants(n, p); });
  });
}

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Solvable: return "solvable";
    case VerdictKind::ProvenImpossible: return "impossible";
    case VerdictKind::OpenException: return "open";
    case VerdictKind::OutOfPaperScope: return "out-of-scope";
  }
  return "unknown";
}

NotSolvable::NotSolvable(FeasibilityVerdict v)
    : std::invalid_argument(to_string(v.kind) + ": " + v.detail), verdict_(std::move(v)) {}

namespace {

FeasibilityVerdict verdict(VerdictKind k, std::string detail) { return {k, std::move(detail)}; }

std::optional<std::string> impossibility(const ParamRequest& q) {
  const KindPair p = q.kinds();
  if (q.v < 2) return "v must be at least 2";
  if (q.r < 0 || q.s < 0) return "r and s must be nonnegative";
  if (q.r + q.s != q.v - 1) return fmt::format("r + s = {} but v − 1 = {}", q.r + q.s, q.v - 1);
  if (q.m < 2) return "m must be at least 2";
  for (auto [len, count] : {std::pair{p.first, q.r}, std::pair{p.second, q.s}})
    if (count > 0 && q.v % len != 0) return fmt::format("{} does not divide v = {}", len, q.v);
  if (q.family == Family::K2VsCm) {
    if (q.s == 1) return "s = 1: the factor left after v − 2 K2*-factors is a K2*-factor";
    if (q.m == 6 && q.v == 6 && q.r == 0) return "K6* has no directed 6-cycle factorization";
    if (q.m == 4 && q.v == 4 && q.r == 0) return "K4* has no directed 4-cycle factorization";
  } else if (q.s == 0) {
    if (q.m == 4 && q.v == 4) return "K4* has no directed 4-cycle factorization";
    if (q.m == 3 && q.v == 6) return "K6* has no directed 3-cycle factorization";
    if (q.m == 6 && q.v == 6) return "K6* has no directed 6-cycle factorization";
  }
  return std::nullopt;
}

std::optional<std::string> open_clause(const ParamRequest& q) {
  if (q.family == Family::CmVsC2m) {
    if (q.s == 1 || q.s == 3) return "s in {1,3} is a possible exception";
    return std::nullopt;
  }
  if (q.m >= 6 && q.s == 3) return "s = 3 is a possible exception";
  if (q.m == 4) {
    const int c = q.v % 24;
    if ((c == 4 || c == 20) && q.r >= 2 && q.r % 2 == 0)
      return "even r >= 2 with v = 4, 20 (mod 24) is a possible exception";
    if (c == 12 && (q.s == 3 || q.s == 5)) return "s in {3,5} with v = 12 (mod 24) is a possible exception";
  }
  if (q.m % 4 == 2 && q.m > 4 && (q.v / q.m) % 2 == 1 && q.r >= 2 && q.r % 2 == 0)
    return "even r >= 2 with m = 2 (mod 4) and odd v/m is not covered";
  return std::nullopt;
}

// Points the existence statements claim outright (no exception clause).
// All-m-cycle points (OP*) rest on cited existence results and count only
// when a route reaches them.
bool claimed(const ParamRequest& q) {
  if (q.m < 4 || q.m % 2 != 0) return false;
  if ((q.family == Family::K2VsCm ? q.r : q.s) == 0) return false;
  if (q.family == Family::CmVsC2m) return q.v >= 4;
  if (q.m == 4) return true;
  return q.m % 4 == 0 || (q.v / q.m) % 2 == 0;
}

PlanNode root_plan(const ParamRequest& q) { return complete_block(q.v)->plan(q.kinds(), q.r); }

}  // namespace

std::vector<int> reachable_counts(Family family, int m, int v) {
  if (v < 2 || m < 2) return {};
  ParamRequest q;
  q.family = family;
  q.m = m;
  const auto menu = complete_block(v)->menu(q.kinds());
  return {menu.begin(), menu.end()};
}

FeasibilityVerdict feasibility(const ParamRequest& q) {
  if (auto why = impossibility(q)) return verdict(VerdictKind::ProvenImpossible, *why);
  const auto reach = reachable_counts(q.family, q.m, q.v);
  if (std::binary_search(reach.begin(), reach.end(), q.r))
    return verdict(VerdictKind::Solvable, fmt::format("K{}*: {}", q.v, root_plan(q).variant));
  if (auto clause = open_clause(q)) return verdict(VerdictKind::OpenException, *clause);
  if (claimed(q)) return verdict(VerdictKind::Solvable, "claimed; no construction route reaches r");
  if (q.m >= 4 && q.m % 2 == 0 && (q.family == Family::K2VsCm ? q.r : q.s) == 0)
    return verdict(VerdictKind::OutOfPaperScope, "all-m-cycle factorization: cited existence, no route");
  return verdict(VerdictKind::OutOfPaperScope, "outside the even-m existence statements");
}

CompositionPlan plan(const ParamRequest& req) {
  const FeasibilityVerdict v = feasibility(req);
  if (v.kind != VerdictKind::Solvable) throw NotSolvable(v);
  return {req, root_plan(req)};
}

Certificate solve(const ParamRequest& req) {
  const CompositionPlan p = plan(req);
  Certificate c = *complete_block(req.v)->build(req.kinds(), req.r);
  c.request = req;
  Trace t;
  t.step = "solve";
  t.param("family", family_tag(req.family)).param("v", req.v).param("m", req.m);
  t.param("r", req.r).param("s", req.s);
  t.children.push_back(std::move(c.trace));
  c.trace = std::move(t);
  const VerificationReport report = check_certificate(c);
  if (!report.accepted())
    throw ComposerFault(fmt::format("{}: assembled certificate rejected", to_string(req)),
                        describe(report));
  return c;
}

std::vector<SurveyRow> survey(Family family, int m, int v_max, int threads) {
  std::vector<SurveyRow> rows;
  for (int v = 2; v <= v_max; ++v) {
    if (m <= 0 || v % m != 0) continue;
    for (int r = 0; r < v; ++r) {
      SurveyRow row;
      row.v = v;
      row.r = r;
      row.s = v - 1 - r;
      rows.push_back(std::move(row));
    }
  }
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SurveyRow& row = rows[i];
      const ParamRequest q{family, row.v, m, row.r, row.s};
      const auto start = std::chrono::steady_clock::now();
      try {
        row.verdict = feasibility(q);
        if (row.verdict.kind == VerdictKind::Solvable) {
          const Certificate c = solve(q);
          row.solved = true;
          row.verified = check_certificate(c).accepted();
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

namespace {

void describe_node(const PlanNode& n, int depth, std::string& out) {
  out += fmt::format("{:{}}{}{} r={}/{}", "", 2 * depth, n.copies > 1 ? fmt::format("{} x ", n.copies) : "",
                     n.block, n.r, n.factors);
  if (!n.variant.empty()) out += " via " + n.variant;
  out += "\n";
  for (const PlanNode& c : n.children) describe_node(c, depth + 1, out);
}

}  // namespace

std::string describe(const CompositionPlan& p) {
  std::string out = to_string(p.request) + "\n";
  describe_node(p.root, 1, out);
  return out;
}

}  // namespace hwp
