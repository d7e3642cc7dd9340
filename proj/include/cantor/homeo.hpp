#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cantor/evp.hpp"
#include "cantor/filters.hpp"
#include "cantor/ground.hpp"
#include "cantor/oracle.hpp"

namespace cantor {

using exact_tuple = std::vector<ev_periodic_set>;
using lazy_tuple = std::vector<lazy_point>;

struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct witness_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct unsupported_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Signature of a point tuple: one carrier per coordinate, plus index
/// pairs that must be disjoint (the disjoint-pair coordinates).
struct tuple_shape {
  std::vector<ground_set> carriers;
  std::vector<std::pair<std::size_t, std::size_t>> disjoint;

  std::size_t arity() const { return carriers.size(); }
  bool same_carriers(const tuple_shape& other) const;
  std::string to_string() const;
};

tuple_shape shape_of(std::vector<ground_set> carriers,
                     std::vector<std::pair<std::size_t, std::size_t>> disjoint = {});

/// A pair of mutually inverse point-tuple transformers with declared
/// domain and codomain shapes. Exact application validates containments
/// and disjointness constraints; lazy application evaluates output bits
/// on demand, querying finitely many input positions per bit.
/// Immutable; applications on distinct inputs may run concurrently.
struct homeo {
  std::string name;
  tuple_shape dom;
  tuple_shape cod;
  std::function<exact_tuple(const exact_tuple&)> fwd;
  std::function<exact_tuple(const exact_tuple&)> bwd;
  std::function<lazy_tuple(const lazy_tuple&)> lfwd;
  std::function<lazy_tuple(const lazy_tuple&)> lbwd;

  exact_tuple forward(const exact_tuple& x) const;
  exact_tuple backward(const exact_tuple& y) const;
  lazy_tuple forward_lazy(const lazy_tuple& x) const;
  lazy_tuple backward_lazy(const lazy_tuple& y) const;
};

void validate_tuple(const tuple_shape& shape, const exact_tuple& t,
                    const std::string& who);

// Combinators. compose applies a then b; invert swaps directions;
// parallel runs two maps on adjacent coordinate groups; reorder permutes
// coordinates, output i taking input perm[i].
homeo compose(const homeo& a, const homeo& b);
homeo invert(const homeo& h);
homeo parallel(const homeo& a, const homeo& b);
homeo reorder(const tuple_shape& dom, const std::vector<std::size_t>& perm);
homeo identity_homeo(const tuple_shape& s);

/// Bijection of the full point space onto the points of omega: the
/// identity on omega_star and the order isomorphism elsewhere.
homeo restriction_homeo(const ground_set& omega, const ground_set& omega_star);

/// (F, X) -> F union X, from points of omega times points of its
/// complement onto all points.
homeo product_homeo(const ground_set& omega);

/// The rank-reindexing bijection from pairs over omega with a disjoint
/// pair over the complement onto a point over omega with a disjoint
/// pair over the whole line:
///   (F, G, X, Y) -> (F^G, ranks[(F\G) u X], ranks[(G\F) u Y])
/// where ranks are taken within the complement of F^G.
homeo main_pair_homeo(const ground_set& omega);

/// Transcoding along the complete prefix code {0, 10, 11}: forward
/// parses a binary stream into a ternary stream represented as the
/// disjoint pair (positions of 1s, positions of 2s); backward
/// concatenates codewords.
homeo code_homeo();

/// Disjoint pairs over omega onto single points over omega, by reading
/// the pair as a ternary stream along omega and writing its prefix-code
/// encoding back along omega.
homeo disjoint_encode_homeo(const ground_set& omega);

/// Points over a onto points over b along the order isomorphism.
homeo reindex_homeo(const ground_set& a, const ground_set& b);

/// (X, Y) -> X union Y for disjoint carriers a, b.
homeo interleave_homeo(const ground_set& a, const ground_set& b);

/// The pair-collapsing homeomorphism for a non-principal filter: pairs
/// of points map to single points, with the pair lying in F x F exactly
/// when the image lies in F. Witnesses are validated at construction.
homeo square_homeo(const filter_spec& f);

/// m-tuples onto n-tuples by iterating square_homeo; m, n >= 1.
homeo power_homeo(const filter_spec& f, std::uint32_t m, std::uint32_t n);

enum class principal_class { q_tag, q_times_cantor_tag };

/// Classification of a principal filter by its generator: q_tag when
/// the generator is cofinite, q_times_cantor_tag otherwise.
principal_class principal_classify(const filter_spec& f);

/// The explicit factorization of a principal filter with non-cofinite
/// generator: the inverse of product_homeo over the generator.
homeo principal_decompose(const filter_spec& f);

struct cantor_tag {
  ev_periodic_set core;
};

using normalize_result = std::variant<cantor_tag, filter_spec>;

/// Collapses a prefilter: when its core is itself a member the space is
/// the full cone above the core (cantor_tag); otherwise the restriction
/// beyond the core is a filter, returned re-coordinatized to the whole
/// line. Throws std::domain_error when the prefilter is finite (core
/// cofinite).
normalize_result prefilter_normalize(const prefilter_spec& g);

}  // namespace cantor
