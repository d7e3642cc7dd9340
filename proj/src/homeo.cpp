#include "cantor/homeo.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "cantor/index_maps.hpp"

namespace cantor {

bool tuple_shape::same_carriers(const tuple_shape& other) const {
  if (carriers.size() != other.carriers.size()) return false;
  for (std::size_t i = 0; i < carriers.size(); ++i)
    if (!(carriers[i] == other.carriers[i])) return false;
  return true;
}

std::string tuple_shape::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    if (i) out += ", ";
    out += carriers[i].carrier().to_string();
  }
  for (const auto& [i, j] : disjoint)
    out += "; disj(" + std::to_string(i) + "," + std::to_string(j) + ")";
  out += "]";
  return out;
}

tuple_shape shape_of(std::vector<ground_set> carriers,
                     std::vector<std::pair<std::size_t, std::size_t>> disjoint) {
  return tuple_shape{std::move(carriers), std::move(disjoint)};
}

void validate_tuple(const tuple_shape& shape, const exact_tuple& t,
                    const std::string& who) {
  if (t.size() != shape.arity())
    throw shape_error(who + ": expected " + std::to_string(shape.arity()) +
                      " coordinates, got " + std::to_string(t.size()));
  static const ev_periodic_set whole = ev_periodic_set::universe();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& carrier = shape.carriers[i].carrier();
    if (carrier == whole) continue;
    if (!is_subset(t[i], carrier))
      throw std::domain_error(who + ": coordinate " + std::to_string(i) + " = " +
                              t[i].to_string() + " is not within carrier " +
                              carrier.to_string());
  }
  for (const auto& [i, j] : shape.disjoint) {
    if (!is_disjoint(t[i], t[j]))
      throw std::domain_error(who + ": coordinates " + std::to_string(i) + " and " +
                              std::to_string(j) + " are not disjoint");
  }
}

exact_tuple homeo::forward(const exact_tuple& x) const {
  validate_tuple(dom, x, name);
  return fwd(x);
}

exact_tuple homeo::backward(const exact_tuple& y) const {
  validate_tuple(cod, y, name + " (inverse)");
  return bwd(y);
}

lazy_tuple homeo::forward_lazy(const lazy_tuple& x) const {
  if (x.size() != dom.arity())
    throw shape_error(name + ": expected " + std::to_string(dom.arity()) +
                      " lazy coordinates, got " + std::to_string(x.size()));
  return lfwd(x);
}

lazy_tuple homeo::backward_lazy(const lazy_tuple& y) const {
  if (y.size() != cod.arity())
    throw shape_error(name + " (inverse): expected " + std::to_string(cod.arity()) +
                      " lazy coordinates, got " + std::to_string(y.size()));
  return lbwd(y);
}

homeo compose(const homeo& a, const homeo& b) {
  if (!a.cod.same_carriers(b.dom))
    throw shape_error("compose: codomain " + a.cod.to_string() + " of " + a.name +
                      " does not match domain " + b.dom.to_string() + " of " + b.name);
  homeo h;
  h.name = a.name + ">>" + b.name;
  h.dom = a.dom;
  h.cod = b.cod;
  h.fwd = [a, b](const exact_tuple& x) { return b.forward(a.fwd(x)); };
  h.bwd = [a, b](const exact_tuple& y) { return a.backward(b.bwd(y)); };
  h.lfwd = [a, b](const lazy_tuple& x) { return b.lfwd(a.lfwd(x)); };
  h.lbwd = [a, b](const lazy_tuple& y) { return a.lbwd(b.lbwd(y)); };
  return h;
}

homeo invert(const homeo& h) {
  homeo r;
  r.name = "inv(" + h.name + ")";
  r.dom = h.cod;
  r.cod = h.dom;
  r.fwd = h.bwd;
  r.bwd = h.fwd;
  r.lfwd = h.lbwd;
  r.lbwd = h.lfwd;
  return r;
}

namespace {

tuple_shape concat_shapes(const tuple_shape& a, const tuple_shape& b) {
  tuple_shape s;
  s.carriers = a.carriers;
  s.carriers.insert(s.carriers.end(), b.carriers.begin(), b.carriers.end());
  s.disjoint = a.disjoint;
  for (const auto& [i, j] : b.disjoint)
    s.disjoint.emplace_back(i + a.arity(), j + a.arity());
  return s;
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> split_at(const std::vector<T>& t,
                                                   std::size_t n) {
  return {std::vector<T>(t.begin(), t.begin() + n),
          std::vector<T>(t.begin() + n, t.end())};
}

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

homeo parallel(const homeo& a, const homeo& b) {
  homeo h;
  h.name = a.name + "||" + b.name;
  h.dom = concat_shapes(a.dom, b.dom);
  h.cod = concat_shapes(a.cod, b.cod);
  const std::size_t nd = a.dom.arity();
  const std::size_t nc = a.cod.arity();
  h.fwd = [a, b, nd](const exact_tuple& x) {
    auto [xa, xb] = split_at(x, nd);
    return concat(a.fwd(xa), b.fwd(xb));
  };
  h.bwd = [a, b, nc](const exact_tuple& y) {
    auto [ya, yb] = split_at(y, nc);
    return concat(a.bwd(ya), b.bwd(yb));
  };
  h.lfwd = [a, b, nd](const lazy_tuple& x) {
    auto [xa, xb] = split_at(x, nd);
    return concat(a.lfwd(xa), b.lfwd(xb));
  };
  h.lbwd = [a, b, nc](const lazy_tuple& y) {
    auto [ya, yb] = split_at(y, nc);
    return concat(a.lbwd(ya), b.lbwd(yb));
  };
  return h;
}

homeo reorder(const tuple_shape& dom, const std::vector<std::size_t>& perm) {
  const std::size_t n = dom.arity();
  if (perm.size() != n)
    throw shape_error("reorder: permutation size does not match shape " +
                      dom.to_string());
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || inv[perm[i]] != n)
      throw shape_error("reorder: not a permutation");
    inv[perm[i]] = i;
  }
  homeo h;
  h.name = "reorder";
  h.dom = dom;
  h.cod.carriers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) h.cod.carriers.push_back(dom.carriers[perm[i]]);
  for (const auto& [i, j] : dom.disjoint) h.cod.disjoint.emplace_back(inv[i], inv[j]);
  h.fwd = [perm, n](const exact_tuple& x) {
    exact_tuple out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(x[perm[i]]);
    return out;
  };
  h.bwd = [perm, n](const exact_tuple& y) {
    exact_tuple out(n);
    for (std::size_t i = 0; i < n; ++i) out[perm[i]] = y[i];
    return out;
  };
  h.lfwd = [perm, n](const lazy_tuple& x) {
    lazy_tuple out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(x[perm[i]]);
    return out;
  };
  h.lbwd = [perm, n](const lazy_tuple& y) {
    lazy_tuple out(n, y[0]);
    for (std::size_t i = 0; i < n; ++i) out[perm[i]] = y[i];
    return out;
  };
  return h;
}

homeo identity_homeo(const tuple_shape& s) {
  homeo h;
  h.name = "id";
  h.dom = s;
  h.cod = s;
  auto pass = [](const exact_tuple& x) { return x; };
  auto lpass = [](const lazy_tuple& x) { return x; };
  h.fwd = pass;
  h.bwd = pass;
  h.lfwd = lpass;
  h.lbwd = lpass;
  return h;
}

namespace {

ground_set whole_line() { return ground_set(ev_periodic_set::universe()); }

// Lazily enumerates the complement of a membership stream.
struct complement_enum {
  lazy_point members;
  std::vector<std::uint64_t> elems;
  std::uint64_t scanned = 0;

  explicit complement_enum(lazy_point m) : members(std::move(m)) {}

  std::uint64_t at(std::size_t k) {
    while (elems.size() <= k) {
      if (!members.bit(scanned)) elems.push_back(scanned);
      ++scanned;
    }
    return elems[k];
  }

  // Index of n within the complement; n must be a complement element.
  std::uint64_t rank_of(std::uint64_t n) {
    while (scanned <= n) {
      if (!members.bit(scanned)) elems.push_back(scanned);
      ++scanned;
    }
    return std::lower_bound(elems.begin(), elems.end(), n) - elems.begin();
  }
};

}  // namespace

homeo restriction_homeo(const ground_set& omega, const ground_set& omega_star) {
  // Fail fast on bad witnesses; pi_map re-checks on each application.
  pi_map(omega, omega_star, ev_periodic_set::empty_set());
  const ground_set outside(set_complement(omega_star.carrier()));
  const ground_set target(set_diff(omega.carrier(), omega_star.carrier()));
  homeo h;
  h.name = "restriction";
  h.dom = shape_of({whole_line()});
  h.cod = shape_of({omega});
  h.fwd = [omega, omega_star](const exact_tuple& x) {
    return exact_tuple{pi_map(omega, omega_star, x[0])};
  };
  h.bwd = [omega, omega_star](const exact_tuple& y) {
    return exact_tuple{pi_map_inv(omega, omega_star, y[0])};
  };
  h.lfwd = [omega_star, outside, target](const lazy_tuple& x) {
    const lazy_point in = x[0];
    return lazy_tuple{lazy_point([omega_star, outside, target, in](std::uint64_t m) {
      if (omega_star.contains(m)) return in.bit(m);
      if (target.contains(m)) return in.bit(outside.select(target.rank(m)));
      return false;
    })};
  };
  h.lbwd = [omega_star, outside, target](const lazy_tuple& y) {
    const lazy_point in = y[0];
    return lazy_tuple{lazy_point([omega_star, outside, target, in](std::uint64_t n) {
      if (omega_star.contains(n)) return in.bit(n);
      return in.bit(target.select(outside.rank(n)));
    })};
  };
  return h;
}

homeo product_homeo(const ground_set& omega) {
  const ground_set comp = complement_ground(omega.carrier());
  homeo h;
  h.name = "product";
  h.dom = shape_of({omega, comp});
  h.cod = shape_of({whole_line()});
  const auto carrier = omega.carrier();
  h.fwd = [](const exact_tuple& x) { return exact_tuple{set_union(x[0], x[1])}; };
  h.bwd = [carrier](const exact_tuple& y) {
    return exact_tuple{set_intersect(y[0], carrier), set_diff(y[0], carrier)};
  };
  h.lfwd = [omega](const lazy_tuple& x) {
    const lazy_point f = x[0], rest = x[1];
    return lazy_tuple{lazy_point([omega, f, rest](std::uint64_t n) {
      return omega.contains(n) ? f.bit(n) : rest.bit(n);
    })};
  };
  h.lbwd = [omega](const lazy_tuple& y) {
    const lazy_point z = y[0];
    return lazy_tuple{
        lazy_point([omega, z](std::uint64_t n) { return omega.contains(n) && z.bit(n); }),
        lazy_point([omega, z](std::uint64_t n) { return !omega.contains(n) && z.bit(n); })};
  };
  return h;
}

homeo main_pair_homeo(const ground_set& omega) {
  const ground_set comp = complement_ground(omega.carrier());
  homeo h;
  h.name = "main";
  h.dom = shape_of({omega, omega, comp, comp}, {{2, 3}});
  h.cod = shape_of({omega, whole_line(), whole_line()}, {{1, 2}});
  h.fwd = [](const exact_tuple& t) {
    const auto& f = t[0];
    const auto& g = t[1];
    const auto core = set_intersect(f, g);
    const ground_set rest = complement_ground(core);
    auto z = rank_map(rest, set_union(set_diff(f, g), t[2]));
    auto w = rank_map(rest, set_union(set_diff(g, f), t[3]));
    return exact_tuple{core, std::move(z), std::move(w)};
  };
  h.bwd = [omega](const exact_tuple& t) {
    const auto& core = t[0];
    const ground_set rest = complement_ground(core);
    const auto p = select_map(rest, t[1]);
    const auto q = select_map(rest, t[2]);
    const auto& carrier = omega.carrier();
    return exact_tuple{set_union(core, set_intersect(p, carrier)),
                       set_union(core, set_intersect(q, carrier)),
                       set_diff(p, carrier), set_diff(q, carrier)};
  };
  h.lfwd = [omega](const lazy_tuple& t) {
    const lazy_point f = t[0], g = t[1], x = t[2], y = t[3];
    lazy_point core([omega, f, g](std::uint64_t n) {
      return omega.contains(n) && f.bit(n) && g.bit(n);
    });
    auto en = std::make_shared<complement_enum>(core);
    auto image = [omega, en](lazy_point lhs, lazy_point rhs, lazy_point extra) {
      return lazy_point([omega, en, lhs, rhs, extra](std::uint64_t k) {
        const std::uint64_t m = en->at(k);
        if (omega.contains(m)) return lhs.bit(m) && !rhs.bit(m);
        return extra.bit(m);
      });
    };
    return lazy_tuple{core, image(f, g, x), image(g, f, y)};
  };
  h.lbwd = [omega](const lazy_tuple& t) {
    lazy_point raw_core = t[0];
    const lazy_point z = t[1], w = t[2];
    lazy_point core([omega, raw_core](std::uint64_t n) {
      return omega.contains(n) && raw_core.bit(n);
    });
    auto en = std::make_shared<complement_enum>(core);
    auto member = [omega, en, core](lazy_point src) {
      return lazy_point([omega, en, core, src](std::uint64_t n) {
        if (!omega.contains(n)) return false;
        if (core.bit(n)) return true;
        return src.bit(en->rank_of(n));
      });
    };
    auto spill = [omega, en](lazy_point src) {
      return lazy_point([omega, en, src](std::uint64_t m) {
        if (omega.contains(m)) return false;
        return src.bit(en->rank_of(m));
      });
    };
    return lazy_tuple{member(z), member(w), spill(z), spill(w)};
  };
  return h;
}

namespace {

// Incremental parser of a binary stream along the prefix code
// 0 -> 0, 1 -> 10, 2 -> 11.
struct code_parser {
  lazy_point in;
  std::vector<std::uint8_t> syms;
  std::uint64_t pos = 0;

  explicit code_parser(lazy_point p) : in(std::move(p)) {}

  std::uint8_t sym(std::size_t i) {
    while (syms.size() <= i) {
      if (!in.bit(pos)) {
        syms.push_back(0);
        pos += 1;
      } else {
        syms.push_back(in.bit(pos + 1) ? 2 : 1);
        pos += 2;
      }
    }
    return syms[i];
  }
};

// Incremental writer of the codeword stream of a ternary sequence.
struct code_writer {
  lazy_point ones, twos;
  std::vector<std::uint64_t> offsets{0};  // bit offset of each symbol
  std::vector<std::uint8_t> syms;

  code_writer(lazy_point x, lazy_point y) : ones(std::move(x)), twos(std::move(y)) {}

  bool bit(std::uint64_t j) {
    while (offsets.back() <= j) {
      const std::size_t i = syms.size();
      const std::uint8_t t = ones.bit(i) ? 1 : (twos.bit(i) ? 2 : 0);
      syms.push_back(t);
      offsets.push_back(offsets.back() + (t == 0 ? 1 : 2));
    }
    const auto it = std::upper_bound(offsets.begin(), offsets.end(), j);
    const std::size_t i = static_cast<std::size_t>(it - offsets.begin()) - 1;
    const std::uint8_t t = syms[i];
    if (t == 0) return false;
    return j == offsets[i] ? true : t == 2;
  }
};

}  // namespace

homeo code_homeo() {
  homeo h;
  h.name = "code";
  h.dom = shape_of({whole_line()});
  h.cod = shape_of({whole_line(), whole_line()}, {{0, 1}});
  h.fwd = [](const exact_tuple& t) {
    const auto& b = t[0];
    const std::uint64_t plen = b.prefix().size();
    const std::uint64_t period = b.block().size();
    // Parse symbols until a decoder state (bit position modulo the
    // block, past the prefix) repeats; the symbols in between form the
    // ternary period. Bounded by |prefix| + |block| + 1 symbols.
    std::vector<std::uint8_t> syms;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::uint64_t pos = 0;
    std::size_t head = 0, cycle = 0;
    for (;;) {
      if (pos >= plen) {
        const std::uint64_t r = (pos - plen) % period;
        const auto it = seen.find(r);
        if (it != seen.end()) {
          head = it->second;
          cycle = syms.size() - head;
          break;
        }
        seen.emplace(r, syms.size());
      }
      if (!b.bit(pos)) {
        syms.push_back(0);
        pos += 1;
      } else {
        syms.push_back(b.bit(pos + 1) ? 2 : 1);
        pos += 2;
      }
    }
    bitvec xp(head), xb(cycle), yp(head), yb(cycle);
    for (std::size_t i = 0; i < head; ++i) {
      xp[i] = syms[i] == 1;
      yp[i] = syms[i] == 2;
    }
    for (std::size_t i = 0; i < cycle; ++i) {
      xb[i] = syms[head + i] == 1;
      yb[i] = syms[head + i] == 2;
    }
    return exact_tuple{ev_periodic_set::make(std::move(xp), std::move(xb)),
                       ev_periodic_set::make(std::move(yp), std::move(yb))};
  };
  h.bwd = [](const exact_tuple& t) {
    const auto& x = t[0];
    const auto& y = t[1];
    const std::size_t plen = std::max(x.prefix().size(), y.prefix().size());
    const std::uint64_t window = lcm_checked(x.block().size(), y.block().size());
    auto push_code = [](bitvec& out, std::uint8_t s) {
      if (s == 0) {
        out.push_back(0);
      } else {
        out.push_back(1);
        out.push_back(s == 2 ? 1 : 0);
      }
    };
    auto sym_at = [&x, &y](std::uint64_t i) -> std::uint8_t {
      return x.bit(i) ? 1 : (y.bit(i) ? 2 : 0);
    };
    bitvec pb, bb;
    for (std::size_t i = 0; i < plen; ++i) push_code(pb, sym_at(i));
    for (std::uint64_t j = 0; j < window; ++j) push_code(bb, sym_at(plen + j));
    return exact_tuple{ev_periodic_set::make(std::move(pb), std::move(bb))};
  };
  h.lfwd = [](const lazy_tuple& t) {
    auto parser = std::make_shared<code_parser>(t[0]);
    return lazy_tuple{
        lazy_point([parser](std::uint64_t k) { return parser->sym(k) == 1; }),
        lazy_point([parser](std::uint64_t k) { return parser->sym(k) == 2; })};
  };
  h.lbwd = [](const lazy_tuple& t) {
    auto writer = std::make_shared<code_writer>(t[0], t[1]);
    return lazy_tuple{lazy_point([writer](std::uint64_t j) { return writer->bit(j); })};
  };
  return h;
}

homeo reindex_homeo(const ground_set& a, const ground_set& b) {
  homeo h;
  h.name = "reindex";
  h.dom = shape_of({a});
  h.cod = shape_of({b});
  h.fwd = [a, b](const exact_tuple& x) {
    return exact_tuple{order_iso_image(a, b, x[0])};
  };
  h.bwd = [a, b](const exact_tuple& y) {
    return exact_tuple{order_iso_image(b, a, y[0])};
  };
  h.lfwd = [a, b](const lazy_tuple& x) {
    const lazy_point in = x[0];
    return lazy_tuple{lazy_point([a, b, in](std::uint64_t m) {
      return b.contains(m) && in.bit(a.select(b.rank(m)));
    })};
  };
  h.lbwd = [a, b](const lazy_tuple& y) {
    const lazy_point in = y[0];
    return lazy_tuple{lazy_point([a, b, in](std::uint64_t n) {
      return a.contains(n) && in.bit(b.select(a.rank(n)));
    })};
  };
  return h;
}

homeo interleave_homeo(const ground_set& a, const ground_set& b) {
  if (!is_disjoint(a.carrier(), b.carrier()))
    throw std::domain_error("interleave: carriers " + a.carrier().to_string() +
                            " and " + b.carrier().to_string() + " are not disjoint");
  const ground_set both(set_union(a.carrier(), b.carrier()));
  homeo h;
  h.name = "interleave";
  h.dom = shape_of({a, b});
  h.cod = shape_of({both});
  const auto ca = a.carrier();
  const auto cb = b.carrier();
  h.fwd = [](const exact_tuple& x) { return exact_tuple{set_union(x[0], x[1])}; };
  h.bwd = [ca, cb](const exact_tuple& y) {
    return exact_tuple{set_intersect(y[0], ca), set_intersect(y[0], cb)};
  };
  h.lfwd = [a, b](const lazy_tuple& x) {
    const lazy_point xa = x[0], xb = x[1];
    return lazy_tuple{lazy_point([a, b, xa, xb](std::uint64_t n) {
      if (a.contains(n)) return xa.bit(n);
      if (b.contains(n)) return xb.bit(n);
      return false;
    })};
  };
  h.lbwd = [a, b](const lazy_tuple& y) {
    const lazy_point z = y[0];
    return lazy_tuple{
        lazy_point([a, z](std::uint64_t n) { return a.contains(n) && z.bit(n); }),
        lazy_point([b, z](std::uint64_t n) { return b.contains(n) && z.bit(n); })};
  };
  return h;
}

homeo disjoint_encode_homeo(const ground_set& omega) {
  const ground_set whole = whole_line();
  homeo h = compose(
      compose(parallel(reindex_homeo(omega, whole), reindex_homeo(omega, whole)),
              invert(code_homeo())),
      reindex_homeo(whole, omega));
  h.name = "disjoint-encode";
  h.dom.disjoint = {{0, 1}};
  return h;
}

homeo square_homeo(const filter_spec& f) {
  if (f.principal)
    throw unsupported_error("square: " + f.name +
                            " is principal; see principal_classify and "
                            "principal_decompose");
  if (!f.omega.has_value() || !f.omega_star.has_value())
    throw witness_error("square: " + f.name + " lacks carrier witnesses");
  const ground_set om = *f.omega;
  const ground_set oms = *f.omega_star;
  if (!f.decide(om.carrier()))
    throw witness_error("square: omega witness " + om.carrier().to_string() +
                        " is not a member of " + f.name);
  if (classify_finiteness(om.carrier()) != finiteness::bi_infinite)
    throw witness_error("square: omega witness must be co-infinite");
  if (!is_subset(oms.carrier(), om.carrier()))
    throw witness_error("square: omega_star witness is not within omega");
  if (!f.decide(oms.carrier()))
    throw witness_error("square: omega_star witness is not a member of " + f.name);
  if (classify_finiteness(set_diff(om.carrier(), oms.carrier())) == finiteness::finite)
    throw witness_error("square: omega minus omega_star is finite");

  const ground_set comp = complement_ground(om.carrier());
  const ground_set evens(ev_periodic_set::multiples(2));
  const ground_set odds(set_complement(evens.carrier()));
  const ground_set whole = whole_line();

  // Split both factors along omega, group the omega halves, fold the two
  // free halves into one disjoint pair via the prefix code, collapse with
  // the rank-reindexing map, then pack the output pair back onto the
  // complement and take the union with the omega half.
  const homeo split = invert(product_homeo(om));
  const homeo c1 = parallel(split, split);
  const homeo c2 = reorder(c1.cod, {0, 2, 1, 3});
  const homeo merge =
      compose(compose(parallel(reindex_homeo(comp, evens), reindex_homeo(comp, odds)),
                      interleave_homeo(evens, odds)),
              compose(code_homeo(),
                      parallel(reindex_homeo(whole, comp), reindex_homeo(whole, comp))));
  const homeo c3 = parallel(identity_homeo(shape_of({om, om})), merge);
  const homeo c4 = main_pair_homeo(om);
  const homeo pack = compose(invert(code_homeo()), reindex_homeo(whole, comp));
  const homeo c5 = parallel(identity_homeo(shape_of({om})), pack);
  const homeo c6 = product_homeo(om);

  homeo h = compose(compose(compose(c1, c2), compose(c3, c4)), compose(c5, c6));
  h.name = "square(" + f.name + ")";
  return h;
}

homeo power_homeo(const filter_spec& f, std::uint32_t m, std::uint32_t n) {
  if (m == 0 || n == 0)
    throw std::domain_error("power: exponents must be >= 1");
  const homeo s = square_homeo(f);
  const ground_set whole = whole_line();
  auto contract = [&](std::uint32_t k) {
    homeo res = identity_homeo(shape_of(std::vector<ground_set>(k, whole)));
    for (std::uint32_t width = k; width >= 2; --width) {
      homeo step = s;
      if (width > 2) {
        step = parallel(s, identity_homeo(shape_of(std::vector<ground_set>(
                               width - 2, whole))));
      }
      res = compose(res, step);
    }
    return res;
  };
  homeo h = compose(contract(m), invert(contract(n)));
  h.name = "power(" + f.name + "," + std::to_string(m) + "," + std::to_string(n) + ")";
  return h;
}

principal_class principal_classify(const filter_spec& f) {
  if (!f.principal || !f.generator.has_value())
    throw std::domain_error("principal_classify: " + f.name + " is not principal");
  return classify_finiteness(*f.generator) == finiteness::cofinite
             ? principal_class::q_tag
             : principal_class::q_times_cantor_tag;
}

homeo principal_decompose(const filter_spec& f) {
  if (principal_classify(f) == principal_class::q_tag)
    throw std::domain_error("principal_decompose: generator of " + f.name +
                            " is cofinite; nothing to split off");
  return invert(product_homeo(ground_set(*f.generator)));
}

normalize_result prefilter_normalize(const prefilter_spec& g) {
  const auto core = g.core.canonical();
  const auto beyond = set_complement(core);
  if (classify_finiteness(beyond) == finiteness::finite)
    throw std::domain_error("prefilter_normalize: " + g.name + " is finite");
  if (g.decide(core)) return cantor_tag{core};
  const ground_set carrier(beyond);
  filter_spec f;
  f.name = g.name + ":restricted";
  f.decide = [g, carrier, core](const ev_periodic_set& x) {
    return g.decide(set_union(select_map(carrier, x), core));
  };
  f.principal = false;
  return f;
}

}  // namespace cantor
