#ifndef TANGENCY_EXTREMAL_HPP
#define TANGENCY_EXTREMAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tangency/bipartite.hpp"
#include "tangency/curves.hpp"

namespace tangency {

enum class Side { A, B };

/// 2|E|/|V|. Throws std::invalid_argument on an empty vertex set.
Rational avg_degree(const BipartiteGraph& g);

/// Graph plus the original id of every vertex.
struct Mapped {
    BipartiteGraph graph;
    std::vector<int> origin_a;
    std::vector<int> origin_b;
};

/// Splits every vertex of degree > d into copies of degree d and at most one
/// copy of smaller degree. Neighbors go to copies in ascending-id chunks.
/// Throws std::invalid_argument for d < 1.
Mapped near_regularize(const BipartiteGraph& g, int d);

/// Largest subgraph with all degrees >= t. With an order seed, violators are
/// removed one at a time in a random order; the result is the same.
Mapped prune_min_degree(const BipartiteGraph& g, const Rational& t,
                        std::optional<std::uint64_t> order_seed = std::nullopt);

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Paths of length two whose end vertices lie on `side`. Computed both from
/// pairwise common neighborhoods and from center degrees; throws
/// InternalInconsistency if they differ.
std::uint64_t count_k21(const BipartiteGraph& g, Side side);

enum class K22Method { pairs, edges };

/// Number of K_{2,2} subgraphs.
std::uint64_t count_k22(const BipartiteGraph& g, K22Method method);

/// f(x) = q x^e with q >= 0 and e >= 0.
struct SparsenessBudget {
    Rational q;
    Rational e;

    /// floor(f(s)), exact.
    mpz_class floor_at(std::uint64_t s) const;
    long double at(std::uint64_t s) const;
};

enum class ScanMode { exhaustive, sampled };

std::string to_string(ScanMode m);

struct ScanOptions {
    std::size_t limit = 16;       ///< exhaustive when the smaller restricted neighborhood fits
    std::size_t samples = 100000;  ///< subset pairs drawn otherwise
    std::uint64_t seed = 0;
    bool certify = true;  ///< bad_4tuple_scan: skip pairs the density bound already rules out
};

struct SubsetPair {
    std::vector<int> a_side;  ///< subset of N(v) minus u
    std::vector<int> b_side;  ///< subset of N(u) minus v
};

/// Worst |E(U,V)| - f(|U|+|V|) over nonempty U in N(u)\{v}, V in N(v)\{u}.
struct PairSlack {
    std::optional<long double> slack;  ///< nullopt when no admissible pair exists
    bool violated = false;             ///< some examined pair has |E| > f, decided exactly
    ScanMode mode = ScanMode::exhaustive;
    std::optional<SubsetPair> witness;  ///< maximizer among the examined pairs
};

/// `u` is a vertex of side A and `v` a vertex of side B.
PairSlack sub_bineighborhood_violation(const BipartiteGraph& g, int u, int v, const SparsenessBudget& f,
                                       const ScanOptions& opt = {});

enum class Scope { all_pairs, adjacent };
enum class Verdict { holds, violated, no_violation_found };

std::string to_string(Verdict v);

struct SparsityReport {
    Scope scope = Scope::all_pairs;
    std::map<std::pair<int, int>, PairSlack> pairs;  ///< keyed by (a, b)
    std::size_t exhaustive = 0;
    std::size_t sampled = 0;
    Verdict verdict = Verdict::holds;
    std::optional<long double> worst_slack;
};

SparsityReport check_f_sparse(const BipartiteGraph& g, const SparsenessBudget& f, Scope scope,
                              const ScanOptions& opt = {});

struct BadTupleScan {
    std::size_t bad_pairs = 0;  ///< (a, b) admitting at least one bad 4-tuple
    std::size_t certified = 0;  ///< pairs ruled out by the density bound alone
    std::size_t exhaustive = 0;
    std::size_t sampled = 0;
    std::size_t examined = 0;
    std::optional<std::pair<int, int>> first_bad;

    /// Exact only when no pair was sampled.
    bool exact() const { return sampled == 0; }
};

/// Scans all a in A, b in B for A' in N(b)\{a}, B' in N(a)\{b}, both nonempty,
/// with |E(A',B')| > q (|A'|+|B'|)^c. `max_pairs` caps the scan (0 = all).
/// Throws std::invalid_argument unless q > 0 and c > 1.
BadTupleScan bad_4tuple_scan(const BipartiteGraph& g, const Rational& q, const Rational& c,
                             const ScanOptions& opt = {}, std::size_t max_pairs = 0);

/// H plus adjacent a', b' with a' joined to all of B and b' to all of A.
/// Throws std::invalid_argument when H has no edge.
BipartiteGraph h_plus(const BipartiteGraph& h);

/// Embedding of H into G as a subgraph, sides preserved or swapped.
/// Throws std::invalid_argument when H has more than 10 vertices.
bool contains_subgraph(const BipartiteGraph& g, const BipartiteGraph& h);

struct ReverseViolation {
    std::size_t i;
    std::size_t j;
    std::tuple<int, int, int> triple;
};

/// nullopt when no two lists share three symbols in the same order. Throws
/// std::invalid_argument on a list with a repeated symbol.
std::optional<ReverseViolation> intersection_reverse_check(const std::vector<std::vector<int>>& lists);

using OrderLists = std::map<CurveId, std::vector<CurveId>>;

/// For each b in B, the A-curves touching b with type t (a first, b second),
/// ordered along b. Tangencies of undefined type are skipped.
OrderLists tangency_order_lists(const CurveFamily& a, const CurveFamily& b, TangencyType t);

}  // namespace tangency

#endif
