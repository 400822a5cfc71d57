#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/garside.hpp"

namespace braidkit {

/// s^-1 x s for a simple s, returned in normal form.
///
/// With s* = s^-1 Delta we have s^-1 = Delta^-1 tau(s*), and moving
/// Delta^inf to the front twists s* once more by tau^inf.
inline NormalForm conjugate_by_simple(const NormalForm& x, const PermutationBraid& s) {
  NormalFormBuilder builder(x.strands, x.inf - 1);
  builder.append(s.right_complement().tau_power(x.inf + 1));
  for (const auto& f : x.factors) builder.append(f);
  builder.append(s);
  return std::move(builder).finish();
}

/// A normal form together with the word c such that c^-1 (original) c
/// equals it.
struct ConjugateRepresentative {
  NormalForm form;
  BraidWord conjugator;
};

/// Cycling: conjugation by tau^inf(A_1), which rotates the first factor
/// to the back.
inline ConjugateRepresentative cycle(const NormalForm& x) {
  if (x.factors.empty()) return {x, BraidWord(x.strands)};
  const PermutationBraid head = x.factors.front().tau_power(x.inf);
  std::vector<PermutationBraid> rest(x.factors.begin() + 1, x.factors.end());
  rest.push_back(head);
  return {normalize(x.strands, x.inf, rest), head.to_word()};
}

/// Decycling: conjugation by the inverse of the final factor.
inline ConjugateRepresentative decycle(const NormalForm& x) {
  if (x.factors.empty()) return {x, BraidWord(x.strands)};
  const PermutationBraid& tail = x.factors.back();
  std::vector<PermutationBraid> simples;
  simples.reserve(x.factors.size());
  simples.push_back(tail.tau_power(x.inf));
  simples.insert(simples.end(), x.factors.begin(), x.factors.end() - 1);
  return {normalize(x.strands, x.inf, simples), invert(tail.to_word())};
}

/// Drives x into its super summit set: cycle until inf is maximal, then
/// decycle until sup is minimal. A run of |Delta| = n(n-1)/2 operations
/// without improvement certifies maximality.
///
/// Throws std::logic_error if cycling lowers inf or decycling raises sup.
inline ConjugateRepresentative super_summit(const NormalForm& x) {
  ConjugateRepresentative cur{x, BraidWord(x.strands)};
  const long patience = static_cast<long>(x.strands) * (x.strands - 1) / 2;
  for (long idle = 0; idle < patience && !cur.form.factors.empty();) {
    auto next = cycle(cur.form);
    if (next.form.inf < cur.form.inf) throw std::logic_error("cycling decreased inf");
    if (next.form.sup() > cur.form.sup()) throw std::logic_error("cycling increased sup");
    idle = next.form.inf > cur.form.inf ? 0 : idle + 1;
    cur.conjugator *= next.conjugator;
    cur.form = std::move(next.form);
  }
  for (long idle = 0; idle < patience && !cur.form.factors.empty();) {
    auto next = decycle(cur.form);
    if (next.form.sup() > cur.form.sup()) throw std::logic_error("decycling increased sup");
    if (next.form.inf < cur.form.inf) throw std::logic_error("decycling decreased inf");
    idle = next.form.sup() < cur.form.sup() ? 0 : idle + 1;
    cur.conjugator *= next.conjugator;
    cur.form = std::move(next.form);
  }
  return cur;
}

struct ConjugacyOptions {
  // Maximum number of super summit elements visited by the orbit search.
  std::size_t node_budget = 100000;
  // The orbit search enumerates all n! simple elements per node; refuse
  // beyond this strand count.
  int strands_cap = 8;
};

enum class ConjugacyVerdict { conjugate, not_conjugate, inconclusive };

struct ConjugacyResult {
  ConjugacyVerdict verdict = ConjugacyVerdict::inconclusive;
  // For `conjugate`: c with c^-1 a c == b.
  std::optional<BraidWord> witness;
  std::size_t nodes_visited = 0;
  const char* reason = "";
};

inline const char* to_string(ConjugacyVerdict v) {
  switch (v) {
    case ConjugacyVerdict::conjugate: return "conjugate";
    case ConjugacyVerdict::not_conjugate: return "not_conjugate";
    case ConjugacyVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// General conjugacy decision in B_n.
///
/// Both words are brought into their super summit sets; then the set
/// containing the first is explored breadth first under conjugation by
/// simple elements. Super summit sets are connected under such moves, so
/// exhausting the orbit proves non-conjugacy. Cost is exponential in the
/// worst case; the budget and strand cap bound it and yield
/// `inconclusive` when hit.
inline ConjugacyResult are_conjugate(const BraidWord& a, const BraidWord& b,
                                     const ConjugacyOptions& options = {}) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  const int n = a.strands();
  ConjugacyResult result;

  if (exponent_sum(a) != exponent_sum(b)) {
    result.verdict = ConjugacyVerdict::not_conjugate;
    result.reason = "exponent sums differ";
    return result;
  }
  if (permutation(a).cycle_type() != permutation(b).cycle_type()) {
    result.verdict = ConjugacyVerdict::not_conjugate;
    result.reason = "permutation cycle types differ";
    return result;
  }
  if (equals(a, b)) {
    result.verdict = ConjugacyVerdict::conjugate;
    result.witness = BraidWord(n);
    result.reason = "equal";
    return result;
  }

  const auto sa = super_summit(to_normal_form(a));
  const auto sb = super_summit(to_normal_form(b));
  const auto finish_with = [&](const BraidWord& path) {
    BraidWord witness = concat({sa.conjugator, path, invert(sb.conjugator)});
    if (!is_conjugate_by(a, b, witness)) throw std::logic_error("conjugacy witness failed to verify");
    result.verdict = ConjugacyVerdict::conjugate;
    result.witness = free_reduce(witness);
    return result;
  };

  if (sa.form.inf != sb.form.inf || sa.form.sup() != sb.form.sup()) {
    result.verdict = ConjugacyVerdict::not_conjugate;
    result.reason = "super summit inf/sup differ";
    return result;
  }
  if (sa.form == sb.form) {
    result.reason = "same super summit representative";
    return finish_with(BraidWord(n));
  }
  if (n > options.strands_cap) {
    result.reason = "strand count above orbit-search cap";
    return result;
  }

  std::vector<PermutationBraid> simples;
  {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    do {
      PermutationBraid s{Permutation(images)};
      if (!s.is_identity() && !s.is_delta()) simples.push_back(std::move(s));
    } while (std::next_permutation(images.begin(), images.end()));
  }

  struct Node {
    NormalForm form;
    std::size_t parent;
    std::size_t via;  // index into simples
  };
  std::vector<Node> nodes;
  std::unordered_map<NormalForm, std::size_t, NormalFormHash> index;
  nodes.push_back({sa.form, 0, 0});
  index.emplace(sa.form, 0);
  std::deque<std::size_t> queue{0};

  const auto path_to = [&](std::size_t node) {
    std::vector<std::size_t> steps;
    for (std::size_t k = node; k != 0; k = nodes[k].parent) steps.push_back(nodes[k].via);
    BraidWord path(n);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) path *= simples[*it].to_word();
    return path;
  };

  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t si = 0; si < simples.size(); ++si) {
      NormalForm next = conjugate_by_simple(nodes[cur].form, simples[si]);
      if (next.inf != sa.form.inf || next.sup() != sa.form.sup()) continue;
      if (index.contains(next)) continue;
      if (nodes.size() >= options.node_budget) {
        result.nodes_visited = nodes.size();
        result.reason = "node budget exhausted";
        return result;
      }
      const bool hit = next == sb.form;
      index.emplace(next, nodes.size());
      nodes.push_back({std::move(next), cur, si});
      if (hit) {
        result.nodes_visited = nodes.size();
        result.reason = "found in super summit orbit";
        return finish_with(path_to(nodes.size() - 1));
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  result.nodes_visited = nodes.size();
  result.verdict = ConjugacyVerdict::not_conjugate;
  result.reason = "super summit set exhausted";
  return result;
}

}  // namespace braidkit
