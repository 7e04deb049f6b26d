#include "precompact/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

namespace precompact {

Subgroup closure_by_definition(const PrecompactTopology& topo, const Subgroup& h, Int bound) {
  const FiniteAbelianGroup& g = topo.group;
  if (g.order() > bound) throw CapacityError(g.order(), bound);
  if (h.parent != g) throw std::invalid_argument("closure_by_definition: foreign subgroup");
  std::vector<Vec> h_elems = subgroup_elements(h);
  std::vector<Vec> annihilating;
  for (const Vec& chi : subgroup_elements(topo.s.sub)) {
    bool kills = true;
    for (const Vec& x : h_elems)
      if (!evaluate(g, chi, x).is_zero()) {
        kills = false;
        break;
      }
    if (kills) annihilating.push_back(chi);
  }
  std::vector<Vec> closure_elems;
  for (const Vec& x : all_elements(g)) {
    bool in = true;
    for (const Vec& chi : annihilating)
      if (!evaluate(g, chi, x).is_zero()) {
        in = false;
        break;
      }
    if (in) closure_elems.push_back(x);
  }
  return canonicalize_subgroup(g, closure_elems);
}

bool dense_by_definition(const PrecompactTopology& topo, const Subgroup& h, Int bound) {
  const FiniteAbelianGroup& g = topo.group;
  if (g.order() > bound) throw CapacityError(g.order(), bound);
  if (h.parent != g) throw std::invalid_argument("dense_by_definition: foreign subgroup");
  std::vector<Vec> h_elems = subgroup_elements(h);
  std::vector<Vec> g_elems = all_elements(g);
  for (const Vec& chi : subgroup_elements(topo.s.sub)) {
    std::set<std::pair<Int, Int>> img_h, img_g;
    for (const Vec& x : h_elems) {
      TorusValue v = evaluate(g, chi, x);
      img_h.emplace(v.num, v.den);
    }
    for (const Vec& x : g_elems) {
      TorusValue v = evaluate(g, chi, x);
      img_g.emplace(v.num, v.den);
    }
    if (img_h != img_g) return false;
  }
  return true;
}

namespace {

constexpr Int kTableLimit = 256;
using Bits = std::bitset<256>;

struct Sink {
  Int checked = 0;
  std::optional<SuiteFailure> failure;

  void fail(const std::string& g, const std::string& h, const std::string& s,
            const std::string& detail) {
    if (!failure) failure = SuiteFailure{g, h, s, detail};
  }
};

// Tabulated evaluation pairing for one group: element lists, character
// values, per-character zero sets, subgroup lists with element masks.
struct GroupTable {
  FiniteAbelianGroup g, dg;
  Int n = 1;
  Int exp = 1;
  std::string gstr;
  std::vector<Vec> elems;
  std::vector<std::vector<int>> val;  // val[c][x] = numerator of chi_c(x) over exp
  std::vector<Bits> kill;             // kill[c] = {x : chi_c(x) = 0}
  std::vector<Int> add;               // add[x*n + y] = index of x + y
  std::vector<Subgroup> subs, dsubs;
  std::vector<Bits> sub_mask, dsub_mask;
  std::unordered_map<std::string, std::size_t> sub_index, dsub_index;
  Bits full, trivial;

  explicit GroupTable(const FiniteAbelianGroup& group) : g(group), dg(dual_group(group)) {
    n = g.order();
    exp = g.exponent();
    gstr = format_group(g);
    elems = all_elements(g);
    val.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    kill.assign(static_cast<std::size_t>(n), Bits());
    for (Int c = 0; c < n; ++c) {
      for (Int x = 0; x < n; ++x) {
        TorusValue v = evaluate(g, elems[static_cast<std::size_t>(c)],
                                elems[static_cast<std::size_t>(x)]);
        val[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] =
            static_cast<int>(v.num * (exp / v.den));
        if (v.is_zero()) kill[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(x));
      }
    }
    add.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (Int x = 0; x < n; ++x)
      for (Int y = 0; y < n; ++y)
        add[static_cast<std::size_t>(x * n + y)] = element_index(
            g, add_elements(g, elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]));
    subs = enumerate_subgroups(g, kTableLimit);
    dsubs = enumerate_subgroups(dg, kTableLimit);
    auto masks = [&](const std::vector<Subgroup>& list, std::vector<Bits>& out,
                     std::unordered_map<std::string, std::size_t>& index) {
      out.reserve(list.size());
      for (std::size_t i = 0; i < list.size(); ++i) {
        Bits m;
        for (const Vec& x : subgroup_elements(list[i]))
          m.set(static_cast<std::size_t>(element_index(g, x)));
        out.push_back(m);
        index.emplace(subgroup_key(list[i]), i);
      }
    };
    masks(subs, sub_mask, sub_index);
    masks(dsubs, dsub_mask, dsub_index);
    for (Int x = 0; x < n; ++x) full.set(static_cast<std::size_t>(x));
    trivial.set(0);
  }

  Bits annihilator(const Bits& s, const Bits& h) const {
    Bits out;
    for (Int c = 0; c < n; ++c) {
      if (!s.test(static_cast<std::size_t>(c))) continue;
      if ((h & ~kill[static_cast<std::size_t>(c)]).none()) out.set(static_cast<std::size_t>(c));
    }
    return out;
  }

  Bits closure_def(const Bits& s, const Bits& h) const {
    Bits ann = annihilator(s, h);
    Bits cl = full;
    for (Int c = 0; c < n; ++c)
      if (ann.test(static_cast<std::size_t>(c))) cl &= kill[static_cast<std::size_t>(c)];
    return cl;
  }

  Bits image(Int c, const Bits& h) const {
    Bits img;
    for (Int x = 0; x < n; ++x)
      if (h.test(static_cast<std::size_t>(x)))
        img.set(static_cast<std::size_t>(val[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]));
    return img;
  }

  bool dense_def(const Bits& s, const Bits& h) const {
    for (Int c = 0; c < n; ++c) {
      if (!s.test(static_cast<std::size_t>(c))) continue;
      if (image(c, h) != image(c, full)) return false;
    }
    return true;
  }

  Bits sum(const Bits& a, const Bits& b) const {
    Bits out;
    for (Int x = 0; x < n; ++x) {
      if (!a.test(static_cast<std::size_t>(x))) continue;
      for (Int y = 0; y < n; ++y)
        if (b.test(static_cast<std::size_t>(y)))
          out.set(static_cast<std::size_t>(add[static_cast<std::size_t>(x * n + y)]));
    }
    return out;
  }

  Bits mask_of(const Subgroup& sub) const {
    auto& index = sub.parent.dual_marker ? dsub_index : sub_index;
    auto& mask = sub.parent.dual_marker ? dsub_mask : sub_mask;
    return mask[index.at(subgroup_key(sub))];
  }

  Subgroup to_subgroup(const Bits& mask, bool dual) const {
    std::vector<Vec> gens;
    for (Int x = 0; x < n; ++x)
      if (mask.test(static_cast<std::size_t>(x))) gens.push_back(elems[static_cast<std::size_t>(x)]);
    return canonicalize_subgroup(dual ? dg : g, gens);
  }

  std::string substr(const Bits& mask, bool dual) const {
    Subgroup sub = to_subgroup(mask, dual);
    return dual ? "dual:" + format_subgroup(sub) : format_subgroup(sub);
  }

  // Index of m*x through the addition table (binary chain, no allocation).
  Int scaled_index(Int m, Int x) const {
    Int result = 0, base = x, e = m;
    while (e > 0) {
      if (e & 1) result = add[static_cast<std::size_t>(result * n + base)];
      base = add[static_cast<std::size_t>(base * n + base)];
      e >>= 1;
    }
    return result;
  }

  DualSubgroup dual_of(std::size_t idx) const { return DualSubgroup{dsubs[idx]}; }
};

Int power_log(Int value, Int p) {
  Int e = 0;
  while (value % p == 0) {
    value /= p;
    ++e;
  }
  if (value != 1) throw std::logic_error("power_log: count is not a prime power");
  return e;
}

// Invariant factors of a finite abelian group recovered purely from the
// counting function m -> #{x : m x = 0}.
std::vector<Int> invfac_from_counts(Int total, const std::function<Int(Int)>& killed_by) {
  std::map<Int, std::vector<Int>> ge_counts;  // prime -> (count of factors with exponent >= j)
  for (auto [p, unused] : factorize(total)) {
    (void)unused;
    std::vector<Int> counts;
    Int prev = 0;
    Int m = p;
    while (true) {
      Int f = power_log(killed_by(m), p);
      Int ge = f - prev;
      if (ge <= 0) break;
      counts.push_back(ge);
      prev = f;
      if (m > total) throw std::logic_error("invfac_from_counts: runaway exponent");
      m *= p;
    }
    ge_counts[p] = std::move(counts);
  }
  std::size_t rank = 0;
  for (auto& [p, counts] : ge_counts)
    if (!counts.empty()) rank = std::max(rank, static_cast<std::size_t>(counts.front()));
  std::vector<Int> factors;
  for (std::size_t t = 0; t < rank; ++t) {  // t-th largest factor
    Wide d = 1;
    for (auto& [p, counts] : ge_counts) {
      Int e = 0;
      for (Int ge : counts)
        if (ge > static_cast<Int>(t)) ++e;
      for (Int i = 0; i < e; ++i) d *= p;
    }
    factors.push_back(static_cast<Int>(d));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::string factors_str(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Group suites. Instance counts: one per (S, H) pair unless noted.

void suite_closure_formula(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    Bits kernel_def = t.closure_def(t.dsub_mask[si], t.trivial);
    if (t.mask_of(topo.kernel) != kernel_def)
      sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                "kernel differs from the definitional closure of {0}");
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      ++sink.checked;
      Bits def = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]);
      Bits lib = t.mask_of(closure(topo, t.subs[hi]));
      if (def != lib)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "closure formula " + t.substr(lib, false) + " != definition " +
                      t.substr(def, false));
    }
  }
}

void suite_closure_corollary(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      ++sink.checked;
      Bits by_annihilator = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]);
      // Membership route: phi(g) lands inside phi[H] for every phi in S.
      Bits by_images = t.full;
      for (Int c = 0; c < t.n; ++c) {
        if (!t.dsub_mask[si].test(static_cast<std::size_t>(c))) continue;
        Bits img = t.image(c, t.sub_mask[hi]);
        Bits keep;
        for (Int x = 0; x < t.n; ++x)
          if (img.test(static_cast<std::size_t>(
                  t.val[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)])))
            keep.set(static_cast<std::size_t>(x));
        by_images &= keep;
      }
      Bits lib = t.mask_of(closure(topo, t.subs[hi]));
      if (by_annihilator != by_images || by_annihilator != lib)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "the three closure characterizations disagree");
    }
  }
}

void suite_density_criterion(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      ++sink.checked;
      bool by_images = t.dense_def(t.dsub_mask[si], t.sub_mask[hi]);
      Bits meet = t.annihilator(t.full, t.sub_mask[hi]) & t.dsub_mask[si];
      bool by_annihilator = meet == t.trivial;
      bool by_closure = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]) == t.full;
      bool lib = is_dense(topo, t.subs[hi]);
      if (by_images != by_annihilator || by_images != by_closure || by_images != lib)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "density routes disagree");
    }
  }
}

void suite_finite_index_converse(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      ++sink.checked;
      bool closed_def = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]) == t.sub_mask[hi];
      Bits ann = t.annihilator(t.full, t.sub_mask[hi]);
      bool criterion = (ann & ~t.dsub_mask[si]).none();
      bool lib = is_closed(topo, t.subs[hi]);
      if (closed_def != criterion || closed_def != lib)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "closedness and the annihilator-containment criterion disagree");
    }
  }
}

void suite_coset_closure(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    Bits kernel_def = t.closure_def(t.dsub_mask[si], t.trivial);
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      ++sink.checked;
      Bits def = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]);
      Bits coset = t.sum(t.sub_mask[hi], kernel_def);
      Bits lib = t.mask_of(subgroup_sum(t.subs[hi], topo.kernel));
      if (def != coset || def != lib)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "closure differs from H + A(G,S)");
    }
  }
}

void suite_same_family_criterion(const GroupTable& t, Sink& sink) {
  const std::size_t count = t.dsubs.size();
  // Definitional closed family of each S, recorded through its kernel after
  // verifying the family is exactly the kernel's up-set.
  std::vector<Bits> kernel_def(count);
  for (std::size_t si = 0; si < count; ++si) {
    kernel_def[si] = t.closure_def(t.dsub_mask[si], t.trivial);
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      bool closed = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]) == t.sub_mask[hi];
      bool upset = (kernel_def[si] & ~t.sub_mask[hi]).none();
      if (closed != upset)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "closed family is not the up-set of the closure of {0}");
    }
  }
  for (std::size_t s1 = 0; s1 < count; ++s1) {
    for (std::size_t s2 = 0; s2 < count; ++s2) {
      ++sink.checked;
      bool families_equal = kernel_def[s1] == kernel_def[s2];
      bool criterion = true;
      std::size_t witness_l = count;
      for (std::size_t li = 0; li < count; ++li) {
        if ((t.dsub_mask[li] & t.dsub_mask[s1]) != (t.dsub_mask[li] & t.dsub_mask[s2])) {
          criterion = false;
          witness_l = li;
          break;
        }
      }
      if (families_equal != criterion) {
        std::string detail = "family comparison and the intersection criterion disagree";
        if (witness_l < count) detail += "; L = " + t.substr(t.dsub_mask[witness_l], true);
        sink.fail(t.gstr, t.substr(t.dsub_mask[s1], true), t.substr(t.dsub_mask[s2], true), detail);
      }
      if (t.n <= 8) {
        PrecompactTopology t1 = make_topology(t.g, t.dual_of(s1));
        PrecompactTopology t2 = make_topology(t.g, t.dual_of(s2));
        if (same_closed_family(t1, t2).same != families_equal)
          sink.fail(t.gstr, t.substr(t.dsub_mask[s1], true), t.substr(t.dsub_mask[s2], true),
                    "library same_closed_family disagrees with the definition");
      }
    }
  }
}

void suite_dense_in_relative(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    Int lib_budget = t.n <= 16 ? INT64_MAX : 200;
    for (std::size_t ni = 0; ni < t.subs.size(); ++ni) {
      for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
        if ((t.sub_mask[hi] & ~t.sub_mask[ni]).any()) continue;  // need H <= N
        ++sink.checked;
        Bits cl_h = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]);
        bool contained = (t.sub_mask[ni] & ~cl_h).none();
        bool closures_equal = cl_h == t.closure_def(t.dsub_mask[si], t.sub_mask[ni]);
        // Relative route: the subspace topology on N is induced by the
        // restrictions of S, so density means equal images.
        bool rel_images = true;
        for (Int c = 0; c < t.n && rel_images; ++c) {
          if (!t.dsub_mask[si].test(static_cast<std::size_t>(c))) continue;
          if (t.image(c, t.sub_mask[hi]) != t.image(c, t.sub_mask[ni])) rel_images = false;
        }
        bool agree = contained == closures_equal && contained == rel_images;
        if (agree && lib_budget > 0) {
          --lib_budget;
          if (is_dense_in(topo, t.subs[hi], t.subs[ni]) != contained) agree = false;
        }
        if (!agree)
          sink.fail(t.gstr, format_subgroup(t.subs[hi]) + " in " + format_subgroup(t.subs[ni]),
                    t.substr(t.dsub_mask[si], true), "relative density routes disagree");
      }
    }
  }
}

void suite_lemma_2_1_isomorphisms(const GroupTable& t, Sink& sink) {
  std::vector<std::vector<Int>> h_factors(t.subs.size());
  std::vector<Bits> ann_of(t.subs.size());
  for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
    const Bits h = t.sub_mask[hi];
    const Int h_order = static_cast<Int>(h.count());
    ann_of[hi] = t.annihilator(t.full, h);
    const Bits ann = ann_of[hi];
    const Int ann_order = static_cast<Int>(ann.count());

    if (ann_order * h_order != t.n)
      sink.fail(t.gstr, format_subgroup(t.subs[hi]), "dual:full",
                "|A(G^,H)|*|H| = " + std::to_string(ann_order * h_order) +
                    " != " + std::to_string(t.n));

    h_factors[hi] = invfac_from_counts(h_order, [&](Int m) {
      Int cnt = 0;
      for (Int x = 0; x < t.n; ++x)
        if (h.test(static_cast<std::size_t>(x)) && t.scaled_index(m, x) == 0) ++cnt;
      return cnt;
    });
    std::vector<Int> ann_factors = invfac_from_counts(ann_order, [&](Int m) {
      Int cnt = 0;
      for (Int c = 0; c < t.n; ++c)
        if (ann.test(static_cast<std::size_t>(c)) && t.scaled_index(m, c) == 0) ++cnt;
      return cnt;
    });
    std::vector<Int> quot_factors = invfac_from_counts(t.n / h_order, [&](Int m) {
      Int cnt = 0;
      for (Int x = 0; x < t.n; ++x)
        if (h.test(static_cast<std::size_t>(t.scaled_index(m, x)))) ++cnt;
      return cnt / h_order;
    });
    if (ann_factors != quot_factors)
      sink.fail(t.gstr, format_subgroup(t.subs[hi]), "dual:full",
                "A(G^,H) " + factors_str(ann_factors) + " != G/H " + factors_str(quot_factors));

    std::vector<Int> codual_factors = invfac_from_counts(t.n / ann_order, [&](Int m) {
      Int cnt = 0;
      for (Int c = 0; c < t.n; ++c)
        if (ann.test(static_cast<std::size_t>(t.scaled_index(m, c)))) ++cnt;
      return cnt / ann_order;
    });
    if (codual_factors != h_factors[hi])
      sink.fail(t.gstr, format_subgroup(t.subs[hi]), "dual:full",
                "G^/A(G^,H) " + factors_str(codual_factors) + " != H " +
                    factors_str(h_factors[hi]));

    // Library routes for the same identities.
    DualSubgroup lib_ann = annihilator_full(t.g, t.subs[hi]);
    if (subgroup_invariant_factors(lib_ann.sub) != quotient_group(t.g, t.subs[hi]).quotient.factors ||
        quotient_group(t.dg, lib_ann.sub).quotient.factors != h_factors[hi])
      sink.fail(t.gstr, format_subgroup(t.subs[hi]), "dual:full",
                "library invariant-factor identities fail");
  }

  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    DualSubgroup s = t.dual_of(si);
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      ++sink.checked;
      Bits ann_s = ann_of[hi] & t.dsub_mask[si];
      const Int ann_s_order = static_cast<Int>(ann_s.count());
      const Int s_order = static_cast<Int>(t.dsub_mask[si].count());
      std::vector<Int> rel = invfac_from_counts(s_order / ann_s_order, [&](Int m) {
        Int cnt = 0;
        for (Int c = 0; c < t.n; ++c)
          if (t.dsub_mask[si].test(static_cast<std::size_t>(c)) &&
              ann_s.test(static_cast<std::size_t>(t.scaled_index(m, c))))
            ++cnt;
        return cnt / ann_s_order;
      });
      if (!embeds_in(rel, h_factors[hi]))
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "S/A(S,H) " + factors_str(rel) + " does not embed in H^");
      if (!check_duality_invariants(t.g, t.subs[hi], s).pass)
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "library duality report fails");
    }
  }
}

void suite_sc_totally_dense(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    ++sink.checked;
    bool def_sc = true;
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi)
      if (t.closure_def(t.dsub_mask[si], t.sub_mask[hi]) != t.sub_mask[hi]) {
        def_sc = false;
        break;
      }
    bool def_td = true;
    for (std::size_t ki = 0; ki < t.dsubs.size(); ++ki)
      if ((t.dsub_mask[si] & t.dsub_mask[ki]) != t.dsub_mask[ki]) {
        def_td = false;
        break;
      }
    bool lib = is_sc(make_topology(t.g, t.dual_of(si))).value;
    if (def_sc != def_td || def_sc != lib)
      sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                "SC and total-density verdicts disagree");
  }
}

void suite_bounded_order_bohr(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    ++sink.checked;
    bool def_sc = true;
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi)
      if (t.closure_def(t.dsub_mask[si], t.sub_mask[hi]) != t.sub_mask[hi]) {
        def_sc = false;
        break;
      }
    if (def_sc != (t.dsub_mask[si] == t.full))
      sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                "SC verdict differs from S being the whole dual");
  }
}

void suite_simple_equivalences(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    ++sink.checked;
    bool by_family = true;
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      const Bits& h = t.sub_mask[hi];
      if (h == t.trivial || h == t.full) continue;
      if (t.closure_def(t.dsub_mask[si], h) == h) {
        by_family = false;
        break;
      }
    }
    bool by_meets = true;
    for (std::size_t li = 0; li < t.dsubs.size(); ++li) {
      if (t.dsub_mask[li] == t.full) continue;
      if ((t.dsub_mask[li] & t.dsub_mask[si]) != t.trivial) {
        by_meets = false;
        break;
      }
    }
    bool by_injectivity = true;
    for (Int c = 1; c < t.n && by_injectivity; ++c)
      if (t.dsub_mask[si].test(static_cast<std::size_t>(c)) && t.kill[static_cast<std::size_t>(c)] != t.trivial)
        by_injectivity = false;
    bool lib = is_topologically_simple(make_topology(t.g, t.dual_of(si))).value;
    if (by_family != by_meets || by_family != by_injectivity || by_family != lib)
      sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                "topological-simplicity routes disagree");
  }
}

void suite_essential_no_dense(const GroupTable& t, Sink& sink) {
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    ++sink.checked;
    bool essential = true;
    for (std::size_t bi = 0; bi < t.dsubs.size(); ++bi) {
      if (t.dsub_mask[bi] == t.trivial) continue;
      if ((t.dsub_mask[si] & t.dsub_mask[bi]) == t.trivial) {
        essential = false;
        break;
      }
    }
    bool proper_dense = false;
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      if (t.sub_mask[hi] == t.full) continue;
      if (t.dense_def(t.dsub_mask[si], t.sub_mask[hi])) {
        proper_dense = true;
        break;
      }
    }
    EssentialResult lib = is_topologically_essential(make_topology(t.g, t.dual_of(si)));
    if (essential == proper_dense || lib.essential != essential || !lib.equivalence_holds)
      sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                "essentiality and the dense-subgroup scan disagree");
  }
}

void suite_bohr_all_closed(const GroupTable& t, Sink& sink) {
  PrecompactTopology bohr = make_topology(t.g, DualSubgroup{full_subgroup(t.dg)});
  for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
    ++sink.checked;
    bool def_closed = t.closure_def(t.full, t.sub_mask[hi]) == t.sub_mask[hi];
    if (!def_closed || !is_closed(bohr, t.subs[hi]))
      sink.fail(t.gstr, format_subgroup(t.subs[hi]), "dual:full",
                "subgroup is not closed in the finest precompact topology");
  }
}

void suite_annihilator_reflexivity(const GroupTable& t, Sink& sink) {
  for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
    ++sink.checked;
    Bits ann = t.annihilator(t.full, t.sub_mask[hi]);
    Bits back = t.full;
    for (Int c = 0; c < t.n; ++c)
      if (ann.test(static_cast<std::size_t>(c))) back &= t.kill[static_cast<std::size_t>(c)];
    if (back != t.sub_mask[hi] || !reflexivity_check(t.g, t.subs[hi]))
      sink.fail(t.gstr, format_subgroup(t.subs[hi]), "dual:full",
                "H != A(G, A(G^, H))");
  }
  for (std::size_t si = 0; si < t.dsubs.size(); ++si) {
    ++sink.checked;
    Bits kernel = t.closure_def(t.dsub_mask[si], t.trivial);
    Bits back;
    for (Int c = 0; c < t.n; ++c)
      if ((kernel & ~t.kill[static_cast<std::size_t>(c)]).none()) back.set(static_cast<std::size_t>(c));
    PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
    DualSubgroup lib_back = annihilator_full(t.g, topo.kernel);
    if (back != t.dsub_mask[si] || lib_back.sub != t.dsubs[si])
      sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                "S != A(G^, A(G, S))");
  }
}

void suite_greatest_exists(const GroupTable& t, Sink& sink) {
  const std::size_t count = t.dsubs.size();
  std::vector<Bits> kernel_def(count);
  for (std::size_t si = 0; si < count; ++si) {
    kernel_def[si] = t.closure_def(t.dsub_mask[si], t.trivial);
    for (std::size_t hi = 0; hi < t.subs.size(); ++hi) {
      bool closed = t.closure_def(t.dsub_mask[si], t.sub_mask[hi]) == t.sub_mask[hi];
      if (closed != (kernel_def[si] & ~t.sub_mask[hi]).none())
        sink.fail(t.gstr, format_subgroup(t.subs[hi]), t.substr(t.dsub_mask[si], true),
                  "closed family is not the up-set of the closure of {0}");
    }
  }
  Int lib_budget = t.n <= 16 ? INT64_MAX : 25;
  for (std::size_t si = 0; si < count; ++si) {
    ++sink.checked;
    for (std::size_t ti = 0; ti < count; ++ti) {
      if (ti == si) continue;
      if (kernel_def[ti] == kernel_def[si])
        sink.fail(t.gstr, t.substr(t.dsub_mask[ti], true), t.substr(t.dsub_mask[si], true),
                  "distinct dual subgroups share a closed family");
    }
    if (lib_budget > 0) {
      --lib_budget;
      PrecompactTopology topo = make_topology(t.g, t.dual_of(si));
      DualSubgroup greatest = greatest_same_family(topo);
      std::vector<DualSubgroup> minimals = minimal_same_family(topo);
      if (greatest.sub != t.dsubs[si] || minimals.size() != 1 || minimals[0].sub != t.dsubs[si])
        sink.fail(t.gstr, "gens=", t.substr(t.dsub_mask[si], true),
                  "greatest/minimal same-family subgroup differs from S");
    }
  }
}

// ---------------------------------------------------------------------------
// Zee suites.

std::vector<SupernaturalNumber> descriptor_grid() {
  const std::vector<Int> primes = {2, 3, 5, 7, 11, 13};
  const std::vector<Int> exps = {0, 1, 2, 3, SupernaturalNumber::kInfinity};
  std::vector<SupernaturalNumber> out;
  for (Int def : {Int(0), SupernaturalNumber::kInfinity}) {
    std::vector<std::size_t> pick(primes.size(), 0);
    while (true) {
      std::map<Int, Int> m;
      for (std::size_t i = 0; i < primes.size(); ++i) m[primes[i]] = exps[pick[i]];
      out.push_back(SupernaturalNumber::make(def, std::move(m)));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < exps.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  return out;
}

constexpr Int kZeeProbeLimit = 1000;

// Divisors (descending) and factorizations of 1..kZeeProbeLimit, shared
// across workers.
const std::vector<std::vector<Int>>& descending_divisor_table() {
  static const std::vector<std::vector<Int>> table = [] {
    std::vector<std::vector<Int>> t(kZeeProbeLimit + 1);
    for (Int k = 1; k <= kZeeProbeLimit; ++k) {
      t[static_cast<std::size_t>(k)] = divisors(k);
      std::reverse(t[static_cast<std::size_t>(k)].begin(), t[static_cast<std::size_t>(k)].end());
    }
    return t;
  }();
  return table;
}

const std::vector<std::vector<std::pair<Int, Int>>>& factor_table() {
  static const std::vector<std::vector<std::pair<Int, Int>>> table = [] {
    std::vector<std::vector<std::pair<Int, Int>>> t(kZeeProbeLimit + 1);
    for (Int k = 1; k <= kZeeProbeLimit; ++k) t[static_cast<std::size_t>(k)] = factorize(k);
    return t;
  }();
  return table;
}

bool divides_factored(const SupernaturalNumber& s, Int d) {
  for (auto [p, e] : factor_table()[static_cast<std::size_t>(d)]) {
    Int a = s.exponent_of(p);
    if (a != SupernaturalNumber::kInfinity && e > a) return false;
  }
  return true;
}

void zee_divisor_oracle_chunk(const std::vector<SupernaturalNumber>& grid, std::size_t index,
                              Sink& sink) {
  const SupernaturalNumber& torsion = grid[index];
  TorusSubgroupDesc desc{torsion, 0};
  for (Int k = 1; k <= kZeeProbeLimit; ++k) {
    ++sink.checked;
    Int formula = closure_int(desc, IntSubgroup{k}).k;
    Int scan = 0;
    for (Int d : descending_divisor_table()[static_cast<std::size_t>(k)])
      if (divides_factored(torsion, d)) {
        scan = d;
        break;
      }
    if (formula != scan) {
      sink.fail("Z", std::to_string(k) + "Z", "tors=" + format_supernatural(torsion) + ",free=0",
                "closure " + std::to_string(formula) + "Z != divisor scan " + std::to_string(scan) +
                    "Z");
      continue;
    }
    if (k >= 2) {
      bool dense = is_dense_int(desc, IntSubgroup{k});  // asserts its two routes internally
      if (dense != (scan == 1))
        sink.fail("Z", std::to_string(k) + "Z", "tors=" + format_supernatural(torsion) + ",free=0",
                  "density disagrees with the divisor scan");
    }
  }
}

void zee_torsion_determinism_chunk(const std::vector<SupernaturalNumber>& grid, std::size_t index,
                                   Sink& sink) {
  const SupernaturalNumber& torsion = grid[index];
  const std::vector<Int> ranks = {0, 1, kContinuum};
  std::vector<TorusSubgroupDesc> descs;
  for (Int r : ranks) descs.push_back(TorusSubgroupDesc{torsion, r});
  std::string sstr = "tors=" + format_supernatural(torsion);

  ZClassification base = classify_int(descs[0]);
  for (const TorusSubgroupDesc& d : descs) {
    ZClassification c = classify_int(d);
    if (c.sc != base.sc || c.topologically_simple != base.topologically_simple ||
        c.has_nontrivial_closed != base.has_nontrivial_closed ||
        c.family_descriptor != base.family_descriptor || m_s(d) != m_s(descs[0]))
      sink.fail("Z", "-", sstr, "classification depends on the free rank");
  }
  for (Int k = 1; k <= kZeeProbeLimit; ++k) {
    ++sink.checked;
    Int cl = closure_int(descs[0], IntSubgroup{k}).k;
    bool dense = is_dense_int(descs[0], IntSubgroup{k});
    for (std::size_t i = 1; i < descs.size(); ++i) {
      // Closure equality carries closedness with it; density is re-evaluated
      // so that the rank-dependent descriptors run the asserted double route.
      if (closure_int(descs[i], IntSubgroup{k}).k != cl ||
          is_dense_int(descs[i], IntSubgroup{k}) != dense)
        sink.fail("Z", std::to_string(k) + "Z", sstr, "verdict depends on the free rank");
    }
  }
}

constexpr Int kLcmMaxBase = 60;
constexpr Int kLcmMaxMembers = 5;
constexpr Int kLcmProbeLimit = 3600;
using DivMask = std::bitset<kLcmProbeLimit + 1>;

struct LcmScan {
  std::unordered_map<Int, DivMask> memo;

  const DivMask& divisor_mask(Int v) {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    if (memo.size() > 250000) memo.clear();
    DivMask m;
    for (Int n = 1; n <= kLcmProbeLimit; ++n)
      if (v % n == 0) m.set(static_cast<std::size_t>(n));
    return memo.emplace(v, m).first->second;
  }
};

void zee_lcm_closure_subsets(Sink& sink) {
  LcmScan scan;
  std::vector<Int> members;
  std::vector<Int> subset_lcms;  // lcms of all subsets of `members`, duplicates kept

  auto current_set = [&members] {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i)
      s += (i ? "," : "") + std::to_string(members[i]);
    return s + "}";
  };

  std::function<void(Int)> recurse = [&](Int next) {
    // Verify the current subset.
    ++sink.checked;
    SupernaturalNumber closed = lcm_closure(members);
    Int expected = members.empty() ? 1 : lcm_set(members);
    if (!closed.is_finite() || closed.value() != expected) {
      sink.fail("Z", current_set(), "-", "lcm_closure is not lcm(C) = " + std::to_string(expected));
    } else {
      DivMask oracle;
      for (Int v : subset_lcms) oracle |= scan.divisor_mask(v);
      const DivMask& impl = scan.divisor_mask(closed.value());
      if (impl != oracle) {
        for (Int n = 1; n <= kLcmProbeLimit; ++n)
          if (impl.test(static_cast<std::size_t>(n)) != oracle.test(static_cast<std::size_t>(n))) {
            sink.fail("Z", current_set(), "-",
                      "divisor-set mismatch at n = " + std::to_string(n));
            break;
          }
      } else if (sink.checked % 997 == 0) {
        // Direct probe through the supernatural divides() route.
        for (Int n = 1; n <= kLcmProbeLimit; n += 97) {
          bool direct = false;
          for (Int v : subset_lcms)
            if (v % n == 0) {
              direct = true;
              break;
            }
          if (closed.divides(n) != direct) {
            sink.fail("Z", current_set(), "-",
                      "divides() mismatch at n = " + std::to_string(n));
            break;
          }
        }
      }
    }
    if (static_cast<Int>(members.size()) == kLcmMaxMembers) return;
    for (Int c = next; c <= kLcmMaxBase; ++c) {
      std::size_t added = subset_lcms.size();
      for (std::size_t i = 0; i < added; ++i)
        subset_lcms.push_back(lcm_pair(subset_lcms[i], c));
      members.push_back(c);
      recurse(c + 1);
      members.pop_back();
      subset_lcms.resize(added);
    }
  };
  subset_lcms.push_back(1);  // lcm of the empty subset
  recurse(1);
}

void zee_lcm_random_identities(Sink& sink) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<Int> dist(1, 1000000);
  auto lcm_by_exponents = [](std::vector<Int> values) {
    std::map<Int, Int> exps;
    for (Int v : values)
      for (auto [p, e] : factorize(v)) {
        auto [it, fresh] = exps.emplace(p, e);
        if (!fresh && e > it->second) it->second = e;
      }
    Wide out = 1;
    for (auto [p, e] : exps)
      for (Int i = 0; i < e; ++i) out *= p;
    return static_cast<Int>(out);
  };
  for (int i = 0; i < 10000; ++i) {
    ++sink.checked;
    Int a = dist(rng), b = dist(rng);
    Int l = lcm_pair(a, b);
    if (l != lcm_by_exponents({a, b}))
      sink.fail("Z", std::to_string(a) + "," + std::to_string(b), "-",
                "lcm_pair disagrees with prime-exponent maxima");
    // Intersection law: x in aZ ∩ bZ iff x in lcm(a,b)Z, on sampled points.
    for (Int probe : {l, l / 2 + 1, a, b, a + b, Int(7919) * a % (l + 1) + 1})
      if (((probe % a == 0) && (probe % b == 0)) != (probe % l == 0))
        sink.fail("Z", std::to_string(a) + "," + std::to_string(b), "-",
                  "aZ ∩ bZ != lcm(a,b)Z at x = " + std::to_string(probe));
  }
  for (int i = 0; i < 10000; ++i) {
    ++sink.checked;
    Int a = dist(rng), b = dist(rng), c = dist(rng);
    Int folded = lcm_set({a, b, c});
    if (folded != lcm_pair(lcm_pair(a, b), c) || folded != lcm_pair(a, lcm_pair(b, c)) ||
        folded != lcm_by_exponents({a, b, c}))
      sink.fail("Z", std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c), "-",
                "lcm fold identities fail");
  }
}

// ---------------------------------------------------------------------------
// Driver.

using GroupSuite = void (*)(const GroupTable&, Sink&);

const std::map<std::string, GroupSuite>& group_suites() {
  static const std::map<std::string, GroupSuite> table = {
      {"closure_formula", suite_closure_formula},
      {"closure_corollary", suite_closure_corollary},
      {"density_criterion", suite_density_criterion},
      {"finite_index_converse", suite_finite_index_converse},
      {"coset_closure", suite_coset_closure},
      {"same_family_criterion", suite_same_family_criterion},
      {"dense_in_relative", suite_dense_in_relative},
      {"lemma_2_1_isomorphisms", suite_lemma_2_1_isomorphisms},
      {"sc_totally_dense", suite_sc_totally_dense},
      {"bounded_order_bohr", suite_bounded_order_bohr},
      {"simple_equivalences", suite_simple_equivalences},
      {"essential_no_dense", suite_essential_no_dense},
      {"bohr_all_closed", suite_bohr_all_closed},
      {"annihilator_reflexivity", suite_annihilator_reflexivity},
      {"greatest_exists", suite_greatest_exists},
  };
  return table;
}

template <typename Fn>
std::vector<Sink> run_indexed(std::size_t count, int jobs, Fn&& body) {
  std::vector<Sink> sinks(count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, sinks[i]);
    return sinks;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i, sinks[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return sinks;
}

TheoremReport merge(const std::string& id, const std::vector<Sink>& sinks) {
  TheoremReport report;
  report.theorem_id = id;
  for (const Sink& sink : sinks) {
    report.instances_checked += sink.checked;
    if (report.failures.empty() && sink.failure) report.failures.push_back(*sink.failure);
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "closure_formula",       "closure_corollary",   "density_criterion",
      "finite_index_converse", "coset_closure",       "same_family_criterion",
      "dense_in_relative",     "lemma_2_1_isomorphisms", "sc_totally_dense",
      "bounded_order_bohr",    "simple_equivalences", "essential_no_dense",
      "bohr_all_closed",       "annihilator_reflexivity", "greatest_exists",
      "zee_divisor_oracle",    "zee_lcm_closure",     "zee_torsion_determinism",
  };
  return ids;
}

TheoremReport run_suite(const std::string& theorem_id, Int max_order, int jobs) {
  if (max_order < 1) throw std::invalid_argument("run_suite: max_order must be positive");
  if (max_order > kTableLimit) throw CapacityError(max_order, kTableLimit);

  auto group_it = group_suites().find(theorem_id);
  if (group_it != group_suites().end()) {
    std::vector<FiniteAbelianGroup> corpus = groups_up_to_order(max_order);
    GroupSuite fn = group_it->second;
    std::vector<Sink> sinks = run_indexed(corpus.size(), jobs, [&](std::size_t i, Sink& sink) {
      GroupTable table(corpus[i]);
      fn(table, sink);
    });
    return merge(theorem_id, sinks);
  }
  if (theorem_id == "zee_divisor_oracle" || theorem_id == "zee_torsion_determinism") {
    std::vector<SupernaturalNumber> grid = descriptor_grid();
    bool determinism = theorem_id == "zee_torsion_determinism";
    std::vector<Sink> sinks = run_indexed(grid.size(), jobs, [&](std::size_t i, Sink& sink) {
      if (determinism)
        zee_torsion_determinism_chunk(grid, i, sink);
      else
        zee_divisor_oracle_chunk(grid, i, sink);
    });
    return merge(theorem_id, sinks);
  }
  if (theorem_id == "zee_lcm_closure") {
    std::vector<Sink> sinks(2);
    zee_lcm_closure_subsets(sinks[0]);
    zee_lcm_random_identities(sinks[1]);
    return merge(theorem_id, sinks);
  }
  throw std::invalid_argument("unknown theorem_id: " + theorem_id);
}

std::string format_report(const TheoremReport& report) {
  std::string out = "SUITE " + report.theorem_id + " CHECKED " +
                    std::to_string(report.instances_checked) + " FAILURES " +
                    std::to_string(report.failures.size()) + "\n";
  for (const SuiteFailure& f : report.failures) {
    out += "  group=" + f.group + " H=" + f.h + " S=" + f.s + "\n";
    out += "  detail=" + f.detail + "\n";
  }
  return out;
}

}  // namespace precompact
