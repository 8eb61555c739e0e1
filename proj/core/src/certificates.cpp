#include "nfai/certificates.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "nfai/product_space.hpp"
#include "nfai/text_format.hpp"

namespace nfai {

namespace {

std::string tuple_string(const std::vector<State>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::vector<State> decode(const ProductLayout& layout, std::uint64_t tuple) {
  std::vector<State> out(layout.k());
  layout.decode_tuple(tuple, out);
  return out;
}

// Row index of a tuple once component `c` is exposed as the column.
std::uint64_t row_without(const ProductLayout& layout, std::span<const State> t, std::size_t c) {
  std::uint64_t row = 0;
  std::uint64_t scale = 1;
  for (std::size_t j = 0; j < layout.k(); ++j) {
    if (j == c) continue;
    row += t[j] * scale;
    scale *= layout.component_size(j);
  }
  return row;
}

std::vector<State> tuple_from_row(const ProductLayout& layout, std::uint64_t row, std::size_t c,
                                  State column) {
  std::vector<State> t(layout.k());
  for (std::size_t j = 0; j < layout.k(); ++j) {
    if (j == c) continue;
    t[j] = static_cast<State>(row % layout.component_size(j));
    row /= layout.component_size(j);
  }
  t[c] = column;
  return t;
}

bool tuple_final(const Bundle& bundle, std::span<const State> t) {
  for (std::size_t i = 0; i < bundle.k(); ++i) {
    if (!bundle[i].is_final(t[i])) return false;
  }
  return true;
}

CutVerdict fail(CutVerdict::Condition c, std::size_t component, Letter letter,
                std::vector<State> tuple = {}, std::vector<State> successor = {}) {
  CutVerdict v;
  v.violated = c;
  v.component = component;
  v.letter = letter;
  v.tuple = std::move(tuple);
  v.successor = std::move(successor);
  return v;
}

bool shape_matches(const Bundle& bundle, const StaggeredCut& cut) {
  if (cut.state_counts != bundle.state_counts() || cut.alphabet != bundle.alphabet_size()) {
    return false;
  }
  if (cut.sets.size() != bundle.k() * bundle.alphabet_size()) return false;
  const std::uint64_t tuples = bundle.tuple_count();
  return std::all_of(cut.sets.begin(), cut.sets.end(),
                     [&](const BitVector& s) { return s.size() == tuples; });
}

// Conditions 1-4, shared by both verifiers.
std::optional<CutVerdict> check_scan_conditions(const Bundle& bundle, const StaggeredCut& cut,
                                                const ProductLayout& layout) {
  if (!shape_matches(bundle, cut)) return fail(CutVerdict::Condition::shape, 0, 0);
  const std::size_t ell = bundle.alphabet_size();
  std::vector<State> init(bundle.k());
  for (std::size_t i = 0; i < bundle.k(); ++i) init[i] = bundle[i].initial();
  const std::uint64_t init_tuple = layout.tuple_index(init);

  if (ell == 0) {
    // No sets at all: the only base tuple the product can occupy is the
    // initial one.
    if (tuple_final(bundle, init)) return fail(CutVerdict::Condition::final, 0, 0, init);
    return std::nullopt;
  }

  const BitVector& base = cut.at(0, 0);
  for (Letter a = 1; a < ell; ++a) {
    const BitVector& other = cut.at(0, a);
    if (other == base) continue;
    const auto lhs = base.words();
    const auto rhs = other.words();
    for (std::size_t w = 0; w < lhs.size(); ++w) {
      if (const auto diff = lhs[w] ^ rhs[w]; diff != 0) {
        const std::uint64_t t = w * BitVector::kWordBits + std::countr_zero(diff);
        return fail(CutVerdict::Condition::uniform_base, 0, a, decode(layout, t));
      }
    }
  }
  for (Letter a = 0; a < ell; ++a) {
    if (!cut.at(0, a).test(init_tuple)) return fail(CutVerdict::Condition::initial, 0, a, init);
  }
  for (Letter a = 0; a < ell; ++a) {
    const BitVector& set = cut.at(0, a);
    for (auto t = set.find_next(0); t; t = set.find_next(*t + 1)) {
      auto tuple = decode(layout, *t);
      if (tuple_final(bundle, tuple)) {
        return fail(CutVerdict::Condition::final, 0, a, std::move(tuple));
      }
    }
  }
  return std::nullopt;
}

BoolMatrix expose(const ProductLayout& layout, const BitVector& set, std::size_t c) {
  const std::size_t n = layout.component_size(c);
  BoolMatrix m(static_cast<std::size_t>(layout.tuple_count() / n), n);
  std::vector<State> tuple(layout.k());
  for (auto t = set.find_next(0); t; t = set.find_next(*t + 1)) {
    layout.decode_tuple(*t, tuple);
    m.set(static_cast<std::size_t>(row_without(layout, tuple, c)), tuple[c]);
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pathsets

std::string_view to_string(PathsetVerdict::Reason reason) noexcept {
  using R = PathsetVerdict::Reason;
  switch (reason) {
    case R::ok:
      return "ok";
    case R::shape:
      return "shape";
    case R::too_long:
      return "too-long";
    case R::wrong_start:
      return "wrong-start";
    case R::not_a_transition:
      return "not-a-transition";
    case R::discontinuity:
      return "discontinuity";
    case R::label_mismatch:
      return "label-mismatch";
    case R::not_accepting:
      return "not-accepting";
  }
  return "unknown";
}

std::string PathsetVerdict::describe() const {
  if (accepted()) return "pathset accepted";
  return "pathset rejected: " + std::string(to_string(reason)) + " (run " + std::to_string(run) +
         ", step " + std::to_string(step) + ")";
}

ShortPathset extract_short_pathset(const Bundle& bundle, const Decision& decision) {
  if (!decision.witness_run) throw InputError("no witness: the intersection is empty");
  const NoddingSpace space(bundle, false);
  const ProductLayout& layout = space.layout();
  const ProductRun& run = *decision.witness_run;
  ShortPathset ps;
  ps.word = run.word();
  ps.runs.resize(bundle.k());
  for (std::size_t s = 0; s < run.labels.size(); ++s) {
    const std::uint64_t tag = layout.tag_of(run.codes[s]);
    const std::size_t i = space.volley_of(tag);
    const Letter a = tag == 0 ? run.labels[s] : space.letter_of(tag);
    ps.runs[i].steps.push_back({layout.component_of(run.codes[s], i), a,
                                layout.component_of(run.codes[s + 1], i)});
  }
  return ps;
}

PathsetVerdict verify_short_pathset(const Bundle& bundle, const ShortPathset& ps) {
  using R = PathsetVerdict::Reason;
  const std::size_t ell = bundle.alphabet_size();
  if (ps.runs.size() != bundle.k()) return {R::shape, ps.runs.size(), 0};
  for (std::size_t j = 0; j < ps.word.size(); ++j) {
    if (ps.word[j] >= ell) return {R::shape, 0, j};
  }
  const std::uint64_t bound = saturating_pow(bundle.max_states(), bundle.k());
  if (ps.word.size() > bound) return {R::too_long, 0, ps.word.size()};

  for (std::size_t i = 0; i < bundle.k(); ++i) {
    const Nfa& a = bundle[i];
    std::vector<BoolMatrix> adjacency;
    adjacency.reserve(ell);
    for (Letter x = 0; x < ell; ++x) adjacency.push_back(adjacency_matrix(a, x));

    const auto& steps = ps.runs[i].steps;
    State at = a.initial();
    for (std::size_t j = 0; j < steps.size(); ++j) {
      const Transition& t = steps[j];
      if (t.src != at) return {j == 0 ? R::wrong_start : R::discontinuity, i, j};
      if (t.src >= a.n_states() || t.dst >= a.n_states() || t.label >= ell ||
          !adjacency[t.label].get(t.src, t.dst)) {
        return {R::not_a_transition, i, j};
      }
      if (j >= ps.word.size() || t.label != ps.word[j]) return {R::label_mismatch, i, j};
      at = t.dst;
    }
    if (steps.size() != ps.word.size()) return {R::label_mismatch, i, steps.size()};
    if (!a.is_final(at)) return {R::not_accepting, i, steps.size()};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Staggered cuts

StaggeredCut StaggeredCut::empty_for(const Bundle& bundle) {
  StaggeredCut cut;
  cut.state_counts = bundle.state_counts();
  cut.alphabet = bundle.alphabet_size();
  cut.sets.assign(bundle.k() * bundle.alphabet_size(), BitVector(bundle.tuple_count()));
  return cut;
}

std::string CutVerdict::describe() const {
  if (accepted()) return "cut accepted";
  std::string s = "cut rejected: condition " + std::to_string(static_cast<int>(violated));
  switch (violated) {
    case Condition::shape:
      return s + " (shape does not match the bundle)";
    case Condition::uniform_base:
      return s + " (R(0," + std::to_string(letter) + ") differs from R(0,0) at " +
             tuple_string(tuple) + ")";
    case Condition::initial:
      return s + " (initial tuple missing from R(0," + std::to_string(letter) + "))";
    case Condition::final:
      return s + " (final tuple " + tuple_string(tuple) + " in R(0," + std::to_string(letter) +
             "))";
    case Condition::closure:
      return s + " (transition from " + tuple_string(tuple) + " in R(" +
             std::to_string(component) + "," + std::to_string(letter) + ") to " +
             tuple_string(successor) + " leaves the cut)";
    case Condition::none:
      break;
  }
  return s;
}

StaggeredCut extract_staggered_cut(const Bundle& bundle) {
  const NoddingSpace space(bundle, false);
  const ProductLayout& layout = space.layout();
  StaggeredCut cut = StaggeredCut::empty_for(bundle);

  std::unordered_set<std::uint64_t> seen{space.initial()};
  std::vector<std::uint64_t> queue{space.initial()};
  std::vector<ProductEdge> edges;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t code = queue[head];
    if (space.is_final(code)) throw InputError("no staggered cut: the intersection is non-empty");
    const std::uint64_t tag = layout.tag_of(code);
    const std::uint64_t tuple = layout.tuple_of(code);
    if (tag == 0) {
      for (Letter a = 0; a < cut.alphabet; ++a) cut.at(0, a).set(tuple);
    } else {
      cut.at(space.volley_of(tag), space.letter_of(tag)).set(tuple);
    }
    space.successors(code, edges);
    for (const auto& e : edges) {
      if (seen.insert(e.dst).second) queue.push_back(e.dst);
    }
  }
  return cut;
}

InOutMatrices build_in_out(const Bundle& bundle, const StaggeredCut& cut) {
  if (!shape_matches(bundle, cut)) throw InputError("cut shape does not match the bundle");
  const ProductLayout layout(bundle.state_counts(), 1);
  const std::size_t k = bundle.k();
  InOutMatrices m;
  m.alphabet = bundle.alphabet_size();
  for (std::size_t p = 0; p < k; ++p) {
    for (Letter a = 0; a < m.alphabet; ++a) {
      m.in.push_back(expose(layout, cut.at(p, a), (p + k - 1) % k));
      m.out.push_back(expose(layout, cut.at(p, a), p));
    }
  }
  return m;
}

CutVerdict verify_staggered_cut(const Bundle& bundle, const StaggeredCut& cut) {
  const ProductLayout layout(bundle.state_counts(), 1);
  if (auto v = check_scan_conditions(bundle, cut, layout)) return *v;

  const std::size_t k = bundle.k();
  const InOutMatrices m = build_in_out(bundle, cut);
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t n = layout.component_size(p);
    for (Letter a = 0; a < m.alphabet; ++a) {
      const BoolMatrix& out = m.out_at(p, a);
      const BoolMatrix& in = m.in_at((p + 1) % k, a);
      const BoolMatrix delta = adjacency_matrix(bundle[p], a);
      for (std::size_t begin = 0; begin < out.rows(); begin += n) {
        const std::size_t end = std::min(out.rows(), begin + n);
        const BoolMatrix block = multiply_rows(out, begin, end, delta);
        for (std::size_t r = 0; r < block.rows(); ++r) {
          const auto lhs = block.row(r);
          const auto rhs = in.row(begin + r);
          for (std::size_t w = 0; w < lhs.size(); ++w) {
            const auto excess = lhs[w] & ~rhs[w];
            if (excess == 0) continue;
            const auto target =
                static_cast<State>(w * BoolMatrix::kWordBits + std::countr_zero(excess));
            State source = 0;
            while (!(out.get(begin + r, source) && delta.get(source, target))) ++source;
            return fail(CutVerdict::Condition::closure, p, a,
                        tuple_from_row(layout, begin + r, p, source),
                        tuple_from_row(layout, begin + r, p, target));
          }
        }
      }
    }
  }
  return {};
}

CutVerdict verify_staggered_cut_naive(const Bundle& bundle, const StaggeredCut& cut) {
  const NoddingSpace space(bundle, false);
  const ProductLayout& layout = space.layout();
  if (auto v = check_scan_conditions(bundle, cut, layout)) return *v;

  std::vector<ProductEdge> edges;
  for (std::size_t p = 0; p < bundle.k(); ++p) {
    for (Letter a = 0; a < cut.alphabet; ++a) {
      const BitVector& set = cut.at(p, a);
      const std::uint64_t tag = p == 0 ? 0 : space.petal_tag(p, a);
      for (auto t = set.find_next(0); t; t = set.find_next(*t + 1)) {
        space.successors(layout.compose(tag, *t), edges);
        for (const auto& e : edges) {
          if (p == 0 && e.label != a) continue;
          const std::uint64_t dst_tag = layout.tag_of(e.dst);
          const std::uint64_t dst_tuple = layout.tuple_of(e.dst);
          const BitVector& next =
              dst_tag == 0 ? cut.at(0, a) : cut.at(space.volley_of(dst_tag), space.letter_of(dst_tag));
          if (!next.test(dst_tuple)) {
            return fail(CutVerdict::Condition::closure, p, a, decode(layout, *t),
                        decode(layout, dst_tuple));
          }
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Files

std::string serialize_certificate(const Bundle& bundle, const Certificate& cert) {
  std::ostringstream out;
  out << "nfa-cert v1\n";
  out << (std::holds_alternative<StaggeredCut>(cert) ? "cut" : "pathset") << '\n';
  out << "k " << bundle.k() << '\n';
  out << "alphabet " << bundle.alphabet_size() << '\n';
  out << "states";
  for (const auto n : bundle.state_counts()) out << ' ' << n;
  out << '\n';
  if (const auto* cut = std::get_if<StaggeredCut>(&cert)) {
    for (std::size_t i = 0; i < cut->k(); ++i) {
      for (Letter a = 0; a < cut->alphabet; ++a) {
        out << "set " << i << ' ' << a << ' ' << cut->at(i, a).to_hex() << '\n';
      }
    }
  } else {
    const auto& ps = std::get<ShortPathset>(cert);
    out << "word";
    for (const Letter a : ps.word) out << ' ' << a;
    out << '\n';
    for (std::size_t i = 0; i < ps.runs.size(); ++i) {
      out << "run " << i << ' ' << ps.runs[i].steps.size() << '\n';
      for (const auto& t : ps.runs[i].steps) {
        out << "step " << t.src << ' ' << t.label << ' ' << t.dst << '\n';
      }
    }
  }
  return out.str();
}

CertificateFile parse_certificate(std::string_view source) {
  const auto lines = text::tokenize(source);
  std::size_t pos = 0;
  auto next = [&](std::string_view key, std::size_t min_tokens) -> const text::Line& {
    if (pos >= lines.size()) {
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "expected '" + std::string(key) + "'");
    }
    const auto& line = lines[pos++];
    if (line.tokens[0] != key || line.tokens.size() < min_tokens) {
      throw ParseError(line.number, "expected '" + std::string(key) + "'");
    }
    return line;
  };

  const auto& magic = next("nfa-cert", 2);
  if (magic.tokens.size() != 2 || magic.tokens[1] != "v1") {
    throw ParseError(magic.number, "unsupported certificate version");
  }
  if (pos >= lines.size()) throw ParseError(magic.number, "missing certificate kind");
  const auto& kind_line = lines[pos++];
  const std::string kind = kind_line.tokens[0];
  if (kind != "cut" && kind != "pathset") {
    throw ParseError(kind_line.number, "unknown certificate kind '" + kind + "'");
  }

  CertificateFile file;
  const auto& k_line = next("k", 2);
  file.k = text::parse_index(k_line, k_line.tokens[1]);
  const auto& a_line = next("alphabet", 2);
  file.alphabet = text::parse_index(a_line, a_line.tokens[1]);
  const auto& s_line = next("states", 1);
  for (std::size_t t = 1; t < s_line.tokens.size(); ++t) {
    file.state_counts.push_back(text::parse_index(s_line, s_line.tokens[t]));
  }
  if (file.state_counts.size() != file.k) {
    throw ParseError(s_line.number, "expected " + std::to_string(file.k) + " state counts");
  }

  if (kind == "cut") {
    StaggeredCut cut;
    cut.state_counts = file.state_counts;
    cut.alphabet = file.alphabet;
    std::uint64_t tuples = 1;
    for (const auto n : file.state_counts) tuples = saturating_mul(tuples, n);
    if (tuples > (std::uint64_t{1} << 40)) throw ParseError(s_line.number, "cut too large");
    cut.sets.assign(file.k * file.alphabet, BitVector(tuples));
    std::vector<char> present(cut.sets.size(), 0);
    while (pos < lines.size()) {
      const auto& line = next("set", 3);
      const std::size_t i = text::parse_index(line, line.tokens[1]);
      const std::size_t a = text::parse_index(line, line.tokens[2]);
      if (i >= file.k || a >= file.alphabet) throw ParseError(line.number, "set index out of range");
      const std::string hex = line.tokens.size() > 3 ? line.tokens[3] : "";
      if (line.tokens.size() > 4) throw ParseError(line.number, "trailing tokens");
      auto bits = BitVector::from_hex(hex, tuples);
      if (!bits) throw ParseError(line.number, "malformed hex bit vector");
      const std::size_t slot = i * file.alphabet + a;
      if (present[slot] != 0) throw ParseError(line.number, "duplicate set");
      present[slot] = 1;
      cut.sets[slot] = std::move(*bits);
    }
    if (std::find(present.begin(), present.end(), 0) != present.end()) {
      throw ParseError(lines.back().number, "cut is missing a set");
    }
    file.certificate = std::move(cut);
    return file;
  }

  ShortPathset ps;
  const auto& w_line = next("word", 1);
  for (std::size_t t = 1; t < w_line.tokens.size(); ++t) {
    ps.word.push_back(static_cast<Letter>(text::parse_index(w_line, w_line.tokens[t])));
  }
  while (pos < lines.size()) {
    const auto& r_line = next("run", 3);
    const std::size_t index = text::parse_index(r_line, r_line.tokens[1]);
    if (index != ps.runs.size()) throw ParseError(r_line.number, "runs must appear in order");
    const std::size_t steps = text::parse_index(r_line, r_line.tokens[2]);
    Run run;
    for (std::size_t s = 0; s < steps; ++s) {
      const auto& line = next("step", 4);
      if (line.tokens.size() != 4) throw ParseError(line.number, "'step' expects 3 arguments");
      run.steps.push_back({static_cast<State>(text::parse_index(line, line.tokens[1])),
                           static_cast<Label>(text::parse_index(line, line.tokens[2])),
                           static_cast<State>(text::parse_index(line, line.tokens[3]))});
    }
    ps.runs.push_back(std::move(run));
  }
  file.certificate = std::move(ps);
  return file;
}

CertificateCheck check_certificate(const Bundle& bundle, const CertificateFile& file) {
  if (const auto* cut = std::get_if<StaggeredCut>(&file.certificate)) {
    const CutVerdict v = verify_staggered_cut(bundle, *cut);
    return {v.accepted(), "cut", v.describe()};
  }
  const bool header_ok = file.k == bundle.k() && file.alphabet == bundle.alphabet_size() &&
                         file.state_counts == bundle.state_counts();
  if (!header_ok) {
    return {false, "pathset", PathsetVerdict{PathsetVerdict::Reason::shape, 0, 0}.describe()};
  }
  const PathsetVerdict v = verify_short_pathset(bundle, std::get<ShortPathset>(file.certificate));
  return {v.accepted(), "pathset", v.describe()};
}

Certificate certify(const Bundle& bundle) {
  const Decision d = decide_empty(bundle);
  if (!d.empty) return extract_short_pathset(bundle, d);
  return extract_staggered_cut(bundle);
}

}  // namespace nfai
