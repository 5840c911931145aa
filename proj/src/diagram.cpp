#include "abelcat/diagram.hpp"

#include <algorithm>
#include <set>

namespace abelcat {

namespace {

const Diagram::Arrow& arrow_at(const Diagram& d, const std::string& name) {
  auto it = d.arrows.find(name);
  if (it == d.arrows.end())
    throw AbelError(ErrKind::invalid_input, "unknown arrow " + name);
  return it->second;
}

/* Start and end object names, with the chain checked link by link.  The
   named graph is the source of truth; two objects may intern to the same
   handle and still be distinct nodes of the diagram. */
std::pair<std::string, std::string> path_ends(const Diagram& d,
                                              const std::vector<std::string>& path) {
  if (path.empty()) throw AbelError(ErrKind::invalid_input, "empty path");
  const Diagram::Arrow* prev = nullptr;
  for (const auto& name : path) {
    const auto& arr = arrow_at(d, name);
    if (prev && prev->cod != arr.dom)
      throw AbelError(ErrKind::invalid_input, "path breaks before arrow " + name);
    prev = &arr;
  }
  return {arrow_at(d, path.front()).dom, prev->cod};
}

void validate_arrows(const Diagram& d) {
  for (const auto& [name, arr] : d.arrows) {
    auto di = d.objects.find(arr.dom);
    auto ci = d.objects.find(arr.cod);
    if (di == d.objects.end() || ci == d.objects.end())
      throw AbelError(ErrKind::invalid_input,
                      "arrow " + name + " references an unknown object");
    if (!(arr.mor.dom == di->second) || !(arr.mor.cod == ci->second))
      throw AbelError(ErrKind::invalid_input,
                      "arrow " + name + " does not match its labelled endpoints");
  }
}

}  // namespace

Mor compose_path(Category& c, const Diagram& d, const std::vector<std::string>& path) {
  path_ends(d, path);
  Mor acc = arrow_at(d, path.front()).mor;
  for (std::size_t i = 1; i < path.size(); ++i)
    acc = c.compose(arrow_at(d, path[i]).mor, acc);
  return acc;
}

namespace {

constexpr std::size_t kMaxPaths = 20000;

void walk(const Diagram& d, const std::string& at, std::vector<std::string>& trail,
          const std::string& start,
          std::map<std::pair<std::string, std::string>,
                   std::vector<std::vector<std::string>>>& paths,
          std::size_t& count) {
  for (const auto& [name, arr] : d.arrows) {
    if (arr.dom != at) continue;
    trail.push_back(name);
    auto& bucket = paths[{start, arr.cod}];
    bucket.push_back(trail);
    if (++count > kMaxPaths)
      throw AbelError(ErrKind::cap_exceeded, "too many paths in all-paths mode");
    walk(d, arr.cod, trail, start, paths, count);
    trail.pop_back();
  }
}

bool has_cycle(const Diagram& d) {
  // Kahn peeling on the object graph induced by the arrows.
  std::map<std::string, std::size_t> indeg;
  for (const auto& [name, h] : d.objects) indeg[name] = 0;
  for (const auto& [name, arr] : d.arrows) ++indeg[arr.cod];
  std::vector<std::string> queue;
  for (const auto& [name, deg] : indeg)
    if (deg == 0) queue.push_back(name);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::string u = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& [name, arr] : d.arrows)
      if (arr.dom == u && --indeg[arr.cod] == 0) queue.push_back(arr.cod);
  }
  return seen != d.objects.size();
}

}  // namespace

CommuteReport check_commutes(Category& c, const Diagram& d) {
  validate_arrows(d);
  CommuteReport rep;
  if (d.mode == Diagram::CommuteMode::asserted_pairs) {
    for (const auto& pp : d.path_pairs) {
      if (path_ends(d, pp.lhs) != path_ends(d, pp.rhs))
        throw AbelError(ErrKind::invalid_input, "asserted paths are not parallel");
      Mor a = compose_path(c, d, pp.lhs);
      Mor b = compose_path(c, d, pp.rhs);
      if (!c.mor_equal(a, b)) {
        rep.ok = false;
        rep.failures.push_back({pp.lhs, pp.rhs});
      }
    }
    return rep;
  }
  if (has_cycle(d))
    throw AbelError(ErrKind::invalid_input, "arrow graph has a cycle in all-paths mode");
  std::map<std::pair<std::string, std::string>, std::vector<std::vector<std::string>>> paths;
  std::size_t count = 0;
  for (const auto& [name, h] : d.objects) {
    std::vector<std::string> trail;
    walk(d, name, trail, name, paths, count);
  }
  for (const auto& [ends, list] : paths) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        Mor a = compose_path(c, d, list[i]);
        Mor b = compose_path(c, d, list[j]);
        if (!c.mor_equal(a, b)) {
          rep.ok = false;
          rep.failures.push_back({list[i], list[j]});
        }
      }
  }
  return rep;
}

ExactClaimReport check_exact_claims(Category& c, const Diagram& d) {
  validate_arrows(d);
  ExactClaimReport rep;
  for (std::size_t i = 0; i < d.exact_claims.size(); ++i) {
    const auto& cl = d.exact_claims[i];
    path_ends(d, cl.arrows);
    SequenceSpec s;
    s.left_zero = cl.left_zero;
    s.right_zero = cl.right_zero;
    for (const auto& name : cl.arrows) s.arrows.push_back(arrow_at(d, name).mor);
    if (!is_exact_seq(c, s)) {
      rep.ok = false;
      rep.failed.push_back(i);
    }
  }
  return rep;
}

PairConditions exactness_conditions(Category& c, const Mor& f, const Mor& g) {
  if (!(f.cod == g.dom))
    throw AbelError(ErrKind::mismatch, "exactness_conditions: maps are not composable");
  PairConditions pc;
  pc.image_eq_kernel = sub_equal(c, image(c, f).sub, SubObject{c.kernel(g).map});
  pc.cokernel_eq_coimage =
      quot_equal(c, QuotientObject{c.cokernel(f).map}, coimage(c, g).quot);
  pc.composites_zero =
      is_zero_mor(c, c.compose(g, f)) &&
      is_zero_mor(c, c.compose(c.cokernel(f).map, c.kernel(g).map));
  return pc;
}

NineReport nine_lemma(Category& c, const Grid3x3& g, NineDirection dir) {
  NineReport rep;
  rep.squares_commute = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mor right_down = c.compose(g.col[i][j + 1], g.row[i][j]);
      Mor down_right = c.compose(g.row[i + 1][j], g.col[i][j]);
      if (!c.mor_equal(right_down, down_right)) rep.squares_commute = false;
    }
  rep.columns_exact = true;
  for (int j = 0; j < 3; ++j) {
    SequenceSpec s{{g.col[0][j], g.col[1][j]}, true, true};
    if (!is_exact_seq(c, s)) rep.columns_exact = false;
  }
  auto row_exact = [&](int i) {
    SequenceSpec s{{g.row[i][0], g.row[i][1]}, true, true};
    return is_exact_seq(c, s);
  };
  rep.middle_row_exact = row_exact(1);
  const int assumed = dir == NineDirection::top_from_bottom ? 2 : 0;
  const int concluded = 2 - assumed;
  rep.assumed_row_exact = row_exact(assumed);
  rep.concluded_row_exact = row_exact(concluded);
  return rep;
}

}  // namespace abelcat
