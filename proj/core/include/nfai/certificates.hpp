#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nfai/automaton.hpp"
#include "nfai/bool_matrix.hpp"
#include "nfai/bundle.hpp"
#include "nfai/decision.hpp"

namespace nfai {

// ---------------------------------------------------------------------------
// Non-emptiness: short pathsets

/// One accepting run per component, all spelling `word`.
struct ShortPathset {
  Word word;
  std::vector<Run> runs;
  bool operator==(const ShortPathset&) const = default;
};

struct PathsetVerdict {
  enum class Reason {
    ok,
    shape,             // wrong number of runs or a letter outside the alphabet
    too_long,          // |word| > n^k
    wrong_start,       // run does not start at the initial state
    not_a_transition,  // a step is not in the transition relation
    discontinuity,     // a step does not start where the previous one ended
    label_mismatch,    // the run does not spell the word
    not_accepting,     // the run ends outside the final set
  };
  Reason reason = Reason::ok;
  std::size_t run = 0;
  std::size_t step = 0;

  [[nodiscard]] bool accepted() const noexcept { return reason == Reason::ok; }
  [[nodiscard]] std::string describe() const;
  bool operator==(const PathsetVerdict&) const = default;
};

std::string_view to_string(PathsetVerdict::Reason reason) noexcept;

/// Splits the nodding witness of `decision` into one run per component.
/// Throws InputError when the decision has no witness.
ShortPathset extract_short_pathset(const Bundle& bundle, const Decision& decision);

/// Checks the runs against per-letter adjacency matrices.
PathsetVerdict verify_short_pathset(const Bundle& bundle, const ShortPathset& ps);

// ---------------------------------------------------------------------------
// Emptiness: staggered cuts

/// k * l sets of base tuples, R(i, a) at index i * l + a. Tuples are encoded
/// as in ProductLayout (q_0 least significant).
struct StaggeredCut {
  std::vector<std::size_t> state_counts;
  std::size_t alphabet = 0;
  std::vector<BitVector> sets;

  /// An all-empty cut shaped for `bundle`.
  static StaggeredCut empty_for(const Bundle& bundle);

  [[nodiscard]] std::size_t k() const noexcept { return state_counts.size(); }
  [[nodiscard]] BitVector& at(std::size_t i, Letter a) { return sets.at(i * alphabet + a); }
  [[nodiscard]] const BitVector& at(std::size_t i, Letter a) const {
    return sets.at(i * alphabet + a);
  }
  bool operator==(const StaggeredCut&) const = default;
};

struct CutVerdict {
  enum class Condition {
    none = 0,
    shape = 1,         // sets do not match the bundle
    uniform_base = 2,  // R(0, a) differs from R(0, 0)
    initial = 3,       // initial tuple missing from R(0, a)
    final = 4,         // a final tuple lies in R(0, a)
    closure = 5,       // a transition leaves the cut
  };
  Condition violated = Condition::none;
  std::size_t component = 0;
  Letter letter = 0;
  /// Offending tuple: the member of R(component, letter) for conditions 2-5
  /// (for condition 2 the tuple on which the sets differ).
  std::vector<State> tuple;
  /// For condition 5, the successor tuple missing from the next set.
  std::vector<State> successor;

  [[nodiscard]] bool accepted() const noexcept { return violated == Condition::none; }
  [[nodiscard]] std::string describe() const;
};

/// Reachable base tuples and reachable petal copies of the nodding product.
/// Throws InputError when the intersection is non-empty.
StaggeredCut extract_staggered_cut(const Bundle& bundle);

/// In(p, a) exposes component (p - 1) mod k as the column; Out(p, a)
/// exposes component p. Rows enumerate the other components, q_0 least
/// significant.
struct InOutMatrices {
  std::size_t alphabet = 0;
  std::vector<BoolMatrix> in;   // index p * l + a
  std::vector<BoolMatrix> out;  // index p * l + a

  [[nodiscard]] const BoolMatrix& in_at(std::size_t p, Letter a) const {
    return in.at(p * alphabet + a);
  }
  [[nodiscard]] const BoolMatrix& out_at(std::size_t p, Letter a) const {
    return out.at(p * alphabet + a);
  }
};

/// Throws InputError on a shape mismatch.
InOutMatrices build_in_out(const Bundle& bundle, const StaggeredCut& cut);

/// Conditions 1-4 by scanning, condition 5 as Out(p, a) * Delta_p(a) <=
/// In(p + 1, a) evaluated in row blocks of n_p rows.
CutVerdict verify_staggered_cut(const Bundle& bundle, const StaggeredCut& cut);

/// Conditions 1-4 as above, condition 5 by walking every nodding transition
/// that starts inside the cut.
CutVerdict verify_staggered_cut_naive(const Bundle& bundle, const StaggeredCut& cut);

// ---------------------------------------------------------------------------
// Certificate files
//
//   nfa-cert v1
//   cut | pathset
//   k <k>
//   alphabet <l>
//   states <n_0> ... <n_{k-1}>
//   set <i> <a> <hex>            (cut, one line per (i, a))
//   word <letters...>            (pathset)
//   run <i> <steps>              (pathset, followed by <steps> lines)
//   step <src> <letter> <dst>

using Certificate = std::variant<ShortPathset, StaggeredCut>;

struct CertificateFile {
  std::size_t k = 0;
  std::size_t alphabet = 0;
  std::vector<std::size_t> state_counts;
  Certificate certificate;
};

std::string serialize_certificate(const Bundle& bundle, const Certificate& cert);
/// Throws ParseError on malformed input.
CertificateFile parse_certificate(std::string_view text);

struct CertificateCheck {
  bool accepted = false;
  std::string kind;
  std::string message;
};

/// Verifies a parsed certificate file against a bundle. A header that does
/// not match the bundle is rejected as a shape violation.
CertificateCheck check_certificate(const Bundle& bundle, const CertificateFile& file);

/// Decides the instance and produces the matching certificate.
Certificate certify(const Bundle& bundle);

}  // namespace nfai
