#include "bicyclic/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "bicyclic/division.hpp"

namespace bicyclic {

std::string_view relation_name(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::R:
      return "R";
    case GreenRelation::L:
      return "L";
    case GreenRelation::J:
      return "J";
    case GreenRelation::D:
      return "D";
    case GreenRelation::H:
      return "H";
  }
  return "?";
}

namespace {

using Pair = std::pair<BicyclicElem, BicyclicElem>;

bool within(BicyclicElem x, Exp bound) { return x.i <= bound && x.j <= bound; }

// u*x = v and v*y = u, smallest solutions.
std::optional<Pair> r_witness(BicyclicElem u, BicyclicElem v, Carrier c) {
  auto const xs = solve_right_div(u, v, c);
  auto const ys = solve_right_div(v, u, c);
  if (xs.empty() || ys.empty()) {
    return std::nullopt;
  }
  return Pair{xs.front(), ys.front()};
}

// x*u = v and y*v = u.
std::optional<Pair> l_witness(BicyclicElem u, BicyclicElem v, Carrier c) {
  auto const xs = solve_left_div(u, v, c);
  auto const ys = solve_left_div(v, u, c);
  if (xs.empty() || ys.empty()) {
    return std::nullopt;
  }
  return Pair{xs.front(), ys.front()};
}

// x*u*y = v with both x and y below the bound. x is enumerated; y comes
// from the exact right-division solver.
std::optional<Pair> two_sided_factor(BicyclicElem u, BicyclicElem v,
                                     Carrier c, std::vector<BicyclicElem> const& xs,
                                     Exp bound) {
  for (auto const& x : xs) {
    auto const xu = mul(x, u);
    for (auto const& y : solve_right_div(xu, v, c)) {
      if (within(y, bound)) {
        return Pair{x, y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GreenVerdict green_related(GreenRelation rel, BicyclicElem u, BicyclicElem v,
                           Carrier c, Exp bound) {
  if (c != Carrier::CPlus && c != Carrier::CMinus) {
    throw std::invalid_argument("green_related: carrier must be CPLUS or CMINUS");
  }
  if (!in_carrier(u, c) || !in_carrier(v, c)) {
    throw std::invalid_argument("green_related: element outside carrier");
  }

  GreenVerdict out;
  out.relation = rel;
  out.bound = bound;
  auto relate = [&out](std::initializer_list<BicyclicElem> ws) {
    out.kind = GreenVerdict::Kind::Related;
    out.witnesses.assign(ws);
  };

  switch (rel) {
    case GreenRelation::R:
    case GreenRelation::L: {
      out.exact = true;
      auto const w = rel == GreenRelation::R ? r_witness(u, v, c)
                                             : l_witness(u, v, c);
      if (w) {
        relate({w->first, w->second});
      }
      break;
    }
    case GreenRelation::H: {
      out.exact = true;
      auto const r = r_witness(u, v, c);
      auto const l = l_witness(u, v, c);
      if (r && l) {
        relate({r->first, r->second, l->first, l->second});
      }
      break;
    }
    case GreenRelation::J: {
      auto const xs = box(c, bound);
      auto const forward = two_sided_factor(u, v, c, xs, bound);
      if (!forward) {
        break;
      }
      auto const backward = two_sided_factor(v, u, c, xs, bound);
      if (backward) {
        relate({forward->first, forward->second, backward->first,
                backward->second});
      }
      break;
    }
    case GreenRelation::D: {
      std::optional<BicyclicElem> via_lr;
      std::optional<BicyclicElem> via_rl;
      for (auto const& w : box(c, bound)) {
        if (!via_lr && l_witness(u, w, c) && r_witness(w, v, c)) {
          via_lr = w;
        }
        if (!via_rl && r_witness(u, w, c) && l_witness(w, v, c)) {
          via_rl = w;
        }
        if (via_lr && via_rl) {
          break;
        }
      }
      out.compositions_agree = via_lr.has_value() == via_rl.has_value();
      if (via_lr && via_rl) {
        relate({*via_lr, *via_rl});
      }
      break;
    }
  }
  return out;
}

std::vector<std::vector<BicyclicElem>> green_classes(GreenRelation rel,
                                                     Carrier c, Exp elem_bound,
                                                     Exp witness_bound) {
  auto const elems = box(c, elem_bound);
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t k) {
    while (parent[k] != k) {
      parent[k] = parent[parent[k]];
      k = parent[k];
    }
    return k;
  };
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (green_related(rel, elems[a], elems[b], c, witness_bound).related()) {
        parent[find(b)] = find(a);
      }
    }
  }
  std::map<std::size_t, std::vector<BicyclicElem>> by_root;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    by_root[find(k)].push_back(elems[k]);
  }
  std::vector<std::vector<BicyclicElem>> classes;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace bicyclic
