#include "mkw/commands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mkw/cointeraction.hpp"
#include "mkw/embedding.hpp"
#include "mkw/expression.hpp"
#include "mkw/growth.hpp"
#include "mkw/mkw_hopf.hpp"
#include "mkw/postlie.hpp"
#include "mkw/suites.hpp"

namespace mkw {

namespace {

using Json = nlohmann::json;

template <class Key, class Render>
Json terms_json(const BasicLinComb<Key>& x, Render render) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.sorted()) {
    Json entry = render(k);
    entry["coeff"] = to_string(c);
    terms.push_back(std::move(entry));
  }
  return {{"terms", terms}};
}

Json bck_json(const BckLinComb& x) {
  return terms_json(x, [](const NonplanarForest& f) { return Json{{"forest", f.text()}}; });
}
Json bck_json(const BckTensor& t) {
  return terms_json(t, [](const NonplanarPair& p) { return Json{{"legs", {p.first.text(), p.second.text()}}}; });
}
Json reg_json(const RegTensor& t) {
  const auto show = [](const RegTree& r) { return r.is_unit() ? std::string("1") : r.text(); };
  return terms_json(t, [&](const RegPair& p) { return Json{{"legs", {show(p.first), show(p.second)}}}; });
}

CommandOutput output(LinComb x) {
  Json j = to_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput output(TensorElem x) {
  Json j = to_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput output(MultiTensor x) {
  Json j = to_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput output(BckLinComb x) {
  Json j = bck_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput output(BckTensor x) {
  Json j = bck_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput output(RegLinComb x) {
  Json j = to_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput output(RegTensor x) {
  Json j = reg_json(x);
  return {std::move(x), std::move(j)};
}
CommandOutput report(std::string text, Json j, bool success = true) { return {std::move(text), std::move(j), success}; }

// Collapses an evaluated expression to the narrowest value type.
CommandOutput output_any(const MultiTensor& t) {
  switch (arity(t)) {
    case 0:
    case 1:
      return output(as_single(t));
    case 2:
      return output(as_pair(t));
    default:
      return output(t);
  }
}

class Invocation {
 public:
  Invocation(const std::string& name, const std::vector<std::string>& args, const CommandOptions& options,
             const Session& session)
      : name_(name), args_(args), options_(options), session_(session) {}

  void arity(std::size_t min, std::size_t max) const {
    if (args_.size() < min || args_.size() > max) {
      std::string want = min == max ? std::to_string(min) : std::to_string(min) + ".." + std::to_string(max);
      if (max == std::size_t(-1)) want = "at least " + std::to_string(min);
      throw std::invalid_argument(name_ + ": expected " + want + " argument(s), got " + std::to_string(args_.size()));
    }
  }
  const std::string& arg(std::size_t i) const { return args_.at(i); }
  const std::vector<std::string>& args() const { return args_; }

  std::optional<std::string> option(const std::string& key) const {
    auto it = options_.find(key);
    if (it == options_.end()) return std::nullopt;
    return it->second;
  }
  std::string option_or(const std::string& key, const std::string& fallback) const {
    return option(key).value_or(fallback);
  }
  std::size_t number(const std::string& key, std::size_t fallback) const {
    auto v = option(key);
    if (!v) return fallback;
    std::size_t used = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v->size()) throw std::invalid_argument("--" + key + " expects a non-negative integer, got '" + *v + "'");
    return n;
  }

  // Alphabet from the session, otherwise every token named in the arguments.
  Alphabet alphabet() const {
    if (session_.alphabet) return *session_.alphabet;
    std::vector<std::string> texts = args_;
    if (auto v = option("v")) texts.push_back(*v);
    return infer_alphabet(texts);
  }

  void cap(std::size_t degree, const std::string& what) const {
    if (degree > session_.degree_cap)
      throw DegreeCapError(what + " has degree " + std::to_string(degree) + ", above the degree cap " +
                           std::to_string(session_.degree_cap) + " (set MKW_DEGREE_CAP to raise it)");
  }

  LinComb lin(std::size_t i) const {
    LinComb x = parse_lincomb(arg(i), alphabet());
    cap(max_degree(x), "argument " + std::to_string(i + 1));
    return x;
  }
  std::vector<LinComb> lins() const {
    std::vector<LinComb> out;
    std::size_t total = 0;
    for (std::size_t i = 0; i < args_.size(); ++i) {
      out.push_back(lin(i));
      total += max_degree(out.back());
    }
    cap(total, "the combined input");
    return out;
  }

  BckLinComb bck(std::size_t i) const {
    BckLinComb x = parse_bck_lincomb(arg(i), alphabet());
    std::size_t d = 0;
    for (const auto& [f, c] : x) d = std::max(d, f.degree());
    cap(d, "argument " + std::to_string(i + 1));
    return x;
  }

  RegLinComb reg(std::size_t i) const {
    RegLinComb x = parse_reg_lincomb(arg(i), session_.dimension);
    cap(reg_degree(x), "argument " + std::to_string(i + 1));
    return x;
  }
  static std::size_t reg_degree(const RegLinComb& x) {
    std::size_t d = 0;
    for (const auto& [t, c] : x) d = std::max(d, t.degree());
    return d;
  }
  MultiIndex index(const std::string& key) const {
    auto v = option(key);
    if (!v) throw std::invalid_argument(name_ + ": --" + key + " is required");
    // Parsed through the tree grammar so "1" and "1,0" follow the same rules as decorations.
    const RegTree probe = parse_reg_tree("[o{" + *v + "}]", session_.dimension);
    return probe.root();
  }

  std::map<std::string, Rational> increments(const std::string& spec) const {
    std::map<std::string, Rational> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("increment '" + item + "' is not of the form letter=value");
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
      };
      out[trim(item.substr(0, eq))] += parse_rational(trim(item.substr(eq + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty increment list");
    return out;
  }
  Alphabet increment_alphabet(const std::vector<std::map<std::string, Rational>>& specs) const {
    if (session_.alphabet) return *session_.alphabet;
    std::vector<std::string> letters;
    for (const auto& m : specs)
      for (const auto& [k, v] : m) letters.push_back(k);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return Alphabet(letters);
  }

  std::size_t truncation() const {
    const std::size_t N = number("N", session_.truncation);
    cap(N, "truncation");
    return N;
  }

  const Session& session() const { return session_; }
  const std::string& name() const { return name_; }

 private:
  const std::string& name_;
  const std::vector<std::string>& args_;
  const CommandOptions& options_;
  const Session& session_;
};

template <class Op>
LinComb fold(const std::vector<LinComb>& xs, Op op) {
  LinComb acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = op(acc, xs[i]);
  return acc;
}

std::map<Decoration, LinComb> parse_shifts(const std::string& spec, const Alphabet& alphabet) {
  std::map<Decoration, LinComb> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("shift '" + item + "' is not of the form letter=expression");
    std::string letter = item.substr(0, eq);
    letter.erase(0, letter.find_first_not_of(" \t"));
    letter.erase(letter.find_last_not_of(" \t") + 1);
    const Decoration d = intern_token(letter);
    if (!alphabet.contains(d)) throw std::invalid_argument("shift for '" + letter + "', which is not in " + alphabet.describe());
    out[d] += parse_lincomb(item.substr(eq + 1), alphabet);
  }
  return out;
}

std::string levels_text(const std::vector<DecompositionLevel>& levels) {
  std::string s;
  for (const auto& l : levels) s += "F_" + std::to_string(l.level) + ": " + to_text(l.component) + "\n";
  return s.empty() ? "0\n" : s;
}

Json char_json(const TruncChar& x) { return x.to_json(); }

using Handler = CommandOutput (*)(const Invocation&);

CommandOutput cmd_graft(const Invocation& in) {
  in.arity(2, 2);
  auto xs = in.lins();
  return output(left_graft(xs[0], xs[1]));
}
CommandOutput cmd_gl_product(const Invocation& in) {
  in.arity(2, -1);
  return output(fold(in.lins(), [](const LinComb& a, const LinComb& b) { return gl_product(a, b); }));
}
CommandOutput cmd_shuffle(const Invocation& in) {
  in.arity(2, -1);
  return output(fold(in.lins(), [](const LinComb& a, const LinComb& b) { return shuffle(a, b); }));
}
CommandOutput cmd_concat(const Invocation& in) {
  in.arity(2, -1);
  return output(fold(in.lins(), [](const LinComb& a, const LinComb& b) { return concat(a, b); }));
}
CommandOutput cmd_eval(const Invocation& in) {
  in.arity(1, 1);
  const MultiTensor t = parse_expression(in.arg(0), in.alphabet());
  std::size_t d = 0;
  for (const auto& [k, c] : t) {
    std::size_t s = 0;
    for (const auto& f : k) s += f.degree();
    d = std::max(d, s);
  }
  in.cap(d, "the result");
  return output_any(t);
}
CommandOutput cmd_mkw_coproduct(const Invocation& in) {
  in.arity(1, 1);
  return output(mkw_coproduct(in.lin(0)));
}
CommandOutput cmd_reduced_coproduct(const Invocation& in) {
  in.arity(1, 1);
  return output(reduced_coproduct(in.lin(0)));
}
CommandOutput cmd_deshuffle(const Invocation& in) {
  in.arity(1, 1);
  return output(deshuffle(in.lin(0)));
}
CommandOutput cmd_antipode(const Invocation& in) {
  in.arity(1, 1);
  const std::string which = in.option_or("which", "mkw");
  const LinComb x = in.lin(0);
  if (which == "mkw") return output(mkw_antipode(x));
  if (which == "gl") return output(gl_antipode(x));
  if (which == "concat") return output(concat_antipode(x));
  throw std::invalid_argument("--which must be mkw, gl or concat, got '" + which + "'");
}
CommandOutput cmd_natural_growth(const Invocation& in) {
  in.arity(2, 2);
  auto xs = in.lins();
  return output(natural_growth(xs[0], xs[1]));
}
CommandOutput cmd_pi(const Invocation& in) {
  in.arity(1, 1);
  return output(primitive_projection(in.lin(0)));
}
CommandOutput cmd_f_decompose(const Invocation& in) {
  in.arity(1, 1);
  const auto levels = f_decompose(in.lin(0));
  Json j = Json::array();
  for (const auto& l : levels) j.push_back({{"level", l.level}, {"component", to_json(l.component)}});
  return report(levels_text(levels), {{"levels", j}});
}
CommandOutput cmd_phi(const Invocation& in) {
  in.arity(1, 1);
  return output(phi(in.lin(0)));
}
CommandOutput cmd_phi_inverse(const Invocation& in) {
  in.arity(1, 1);
  return output(phi_inverse(in.lin(0)));
}
CommandOutput cmd_rho_graft(const Invocation& in) {
  in.arity(1, 1);
  return output(rho_graft(in.lin(0)));
}
CommandOutput cmd_translate(const Invocation& in) {
  in.arity(1, 1);
  const auto spec = in.option("v");
  if (!spec) throw std::invalid_argument("translate: --v letter=expression;… is required");
  const Alphabet alphabet = in.alphabet();
  const std::size_t N = in.number("N", in.session().degree_cap);
  in.cap(N, "truncation");
  const Translation T(parse_shifts(*spec, alphabet), N);
  return output(T(in.lin(0)));
}
CommandOutput cmd_basis(const Invocation& in) {
  in.arity(0, 0);
  const std::size_t n = in.number("degree", 1);
  in.cap(n, "requested basis");
  const Alphabet alphabet = in.session().alphabet.value_or(Alphabet::singleton());
  std::string text;
  Json j = Json::array();
  for (const auto& w : enumerate_forests(n, alphabet)) {
    text += w.text() + "\n";
    j.push_back(w.text());
  }
  return report(text, {{"degree", n}, {"alphabet", alphabet.describe()}, {"forests", j}});
}
CommandOutput cmd_primitives(const Invocation& in) {
  in.arity(0, 0);
  const std::size_t n = in.number("degree", 1);
  in.cap(n, "requested basis");
  const Alphabet alphabet = in.session().alphabet.value_or(Alphabet::singleton());
  std::string text;
  Json j = Json::array();
  for (const auto& p : primitive_basis(n, alphabet)) {
    text += to_text(p) + "\n";
    j.push_back(to_json(p));
  }
  return report(text, {{"degree", n}, {"alphabet", alphabet.describe()}, {"primitives", j}});
}
CommandOutput char_output(const TruncChar& x) {
  CommandOutput out = output(x.series());
  out.json = char_json(x);
  return out;
}
std::string increments_arg(const Invocation& in) {
  if (auto v = in.option("increments")) {
    in.arity(0, 0);
    return *v;
  }
  in.arity(1, 1);
  return in.arg(0);
}
CommandOutput cmd_lift(const Invocation& in) {
  const auto inc = in.increments(increments_arg(in));
  return char_output(canonical_lift(inc, in.truncation(), in.increment_alphabet({inc})));
}
CommandOutput cmd_chen(const Invocation& in) {
  in.arity(2, 2);
  const auto x = in.increments(in.arg(0));
  const auto y = in.increments(in.arg(1));
  const Alphabet alphabet = in.increment_alphabet({x, y});
  const std::size_t N = in.truncation();
  return char_output(char_convolve(canonical_lift(x, N, alphabet), canonical_lift(y, N, alphabet)));
}
CommandOutput cmd_embed(const Invocation& in) {
  const auto inc = in.increments(increments_arg(in));
  return char_output(embed_rough_path(canonical_lift(inc, in.truncation(), in.increment_alphabet({inc}))));
}
CommandOutput cmd_disjointness(const Invocation& in) {
  in.arity(1, 1);
  const Alphabet alphabet = in.alphabet();
  const std::size_t N = in.truncation();
  const LinComb exponent = in.lin(0);
  const LinComb xi = exponent.is_zero() ? unit() : gl_exp(exponent, N);
  const DisjointnessResult r = disjointness_witness(xi, alphabet, N);
  std::string text = r.equal ? "equal: ξ ⊲ · agrees with T_v on every [i[j]]\n" : "differs at " + r.witness + "\n";
  if (!r.equal) {
    text += "  ξ ⊲ " + r.witness + " = " + to_text(r.grafted) + "\n";
    text += "  T_v(" + r.witness + ") = " + to_text(r.translated) + "\n";
  }
  Json shifts = Json::object();
  for (const auto& [d, v] : r.forced_shifts) shifts[token_name(d)] = to_json(v);
  Json j{{"equal", r.equal}, {"forced_shifts", shifts}};
  if (!r.equal) j.update({{"witness", r.witness}, {"grafted", to_json(r.grafted)}, {"translated", to_json(r.translated)}});
  return report(text, j);
}

CommandOutput cmd_bck_eval(const Invocation& in) {
  in.arity(1, 1);
  return output(in.bck(0));
}
CommandOutput cmd_bck_pi(const Invocation& in) {
  in.arity(1, 1);
  return output(bck_primitive_projection(in.bck(0)));
}
CommandOutput cmd_bck_coproduct(const Invocation& in) {
  in.arity(1, 1);
  return output(bck_coproduct(in.bck(0)));
}
CommandOutput cmd_bck_antipode(const Invocation& in) {
  in.arity(1, 1);
  return output(bck_antipode(in.bck(0)));
}
CommandOutput cmd_bck_natural_growth(const Invocation& in) {
  in.arity(2, 2);
  return output(bck_natural_growth(in.bck(0), in.bck(1)));
}

CommandOutput cmd_reg_eval(const Invocation& in) {
  in.arity(1, 1);
  const std::string& text = in.arg(0);
  if (text.find("⊗") == std::string::npos && text.find("(x)") == std::string::npos) return output(in.reg(0));
  return output(parse_reg_tensor(text, in.session().dimension));
}
CommandOutput cmd_reg_graft(const Invocation& in) {
  in.arity(2, 2);
  const RegLinComb a = in.reg(0), b = in.reg(1);
  in.cap(Invocation::reg_degree(a) + Invocation::reg_degree(b), "the combined input");
  return output(reg_graft(a, b));
}
CommandOutput cmd_reg_bracket(const Invocation& in) {
  in.arity(2, 2);
  return output(bracket0(in.reg(0), in.reg(1)));
}
CommandOutput cmd_reg_odot(const Invocation& in) {
  in.arity(2, -1);
  RegLinComb acc = in.reg(0);
  for (std::size_t i = 1; i < in.args().size(); ++i) acc = reg_assoc_product(acc, in.reg(i));
  return output(acc);
}
CommandOutput cmd_reg_gl_product(const Invocation& in) {
  in.arity(2, -1);
  RegLinComb acc = in.reg(0);
  std::size_t total = Invocation::reg_degree(acc);
  for (std::size_t i = 1; i < in.args().size(); ++i) {
    const RegLinComb next = in.reg(i);
    total += Invocation::reg_degree(next);
    in.cap(total, "the combined input");
    acc = reg_gl_product(acc, next);
  }
  return output(acc);
}
CommandOutput cmd_reg_raise(const Invocation& in) {
  in.arity(1, 1);
  return output(raise(in.reg(0), in.index("by")));
}
CommandOutput cmd_reg_lower(const Invocation& in) {
  in.arity(1, 1);
  return output(lower_root_adjacent(in.reg(0), in.index("by")));
}
CommandOutput cmd_reg_deshuffle(const Invocation& in) {
  in.arity(1, 1);
  RegTensor out;
  for (const auto& [t, c] : in.reg(0)) out.add_scaled(reg_deshuffle(t), c);
  return output(out);
}
CommandOutput cmd_reg_coproduct(const Invocation& in) {
  in.arity(1, 1);
  const RegLinComb x = in.reg(0);
  const std::size_t n = in.number("max-degree", std::max(Invocation::reg_degree(x), in.session().truncation));
  in.cap(n, "--max-degree");
  const DeformedCoproduct cop(RegBasis{in.session().dimension, in.session().max_norm, n});
  return output(cop(x));
}
CommandOutput cmd_reg_phi(const Invocation& in) {
  in.arity(1, 1);
  const RegLinComb x = in.reg(0);
  return output(phi_reg(x, Invocation::reg_degree(x)));
}
CommandOutput cmd_reg_phi_inverse(const Invocation& in) {
  in.arity(1, 1);
  const RegLinComb x = in.reg(0);
  return output(phi_reg_inverse(x, Invocation::reg_degree(x)));
}
CommandOutput cmd_reg_basis(const Invocation& in) {
  in.arity(0, 0);
  const std::size_t n = in.number("degree", 1);
  in.cap(n, "requested basis");
  std::string text;
  Json j = Json::array();
  for (const auto& t : enumerate_reg_trees(n, in.session().dimension, in.session().max_norm)) {
    const std::string s = t.is_unit() ? "1" : t.text();
    text += s + "\n";
    j.push_back(s);
  }
  return report(text, {{"degree", n}, {"dimension", in.session().dimension}, {"max_norm", in.session().max_norm}, {"trees", j}});
}

CommandOutput cmd_verify(const Invocation& in) {
  in.arity(0, 0);
  const auto suite = in.option("suite");
  if (!suite) throw std::invalid_argument("verify: --suite is required");
  const std::size_t n = in.number("max-degree", default_max_degree(*suite));
  SuiteOptions options;
  options.alphabet = in.session().alphabet;
  options.degree_cap = in.session().degree_cap;
  options.fixture_path = in.session().fixture_path;
  SuiteReport r;
  try {
    r = run_suite(*suite, n, options);
  } catch (const std::out_of_range& e) {
    throw DegreeCapError(e.what());
  }
  return report(r.to_text(), r.to_json(), r.passed());
}

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"graft", cmd_graft},
      {"gl-product", cmd_gl_product},
      {"shuffle", cmd_shuffle},
      {"concat", cmd_concat},
      {"eval", cmd_eval},
      {"mkw-coproduct", cmd_mkw_coproduct},
      {"reduced-coproduct", cmd_reduced_coproduct},
      {"deshuffle", cmd_deshuffle},
      {"antipode", cmd_antipode},
      {"natural-growth", cmd_natural_growth},
      {"pi", cmd_pi},
      {"f-decompose", cmd_f_decompose},
      {"phi", cmd_phi},
      {"phi-inv", cmd_phi_inverse},
      {"rho-graft", cmd_rho_graft},
      {"translate", cmd_translate},
      {"basis", cmd_basis},
      {"primitives", cmd_primitives},
      {"lift", cmd_lift},
      {"chen", cmd_chen},
      {"embed", cmd_embed},
      {"disjointness", cmd_disjointness},
      {"bck-eval", cmd_bck_eval},
      {"bck-pi", cmd_bck_pi},
      {"bck-coproduct", cmd_bck_coproduct},
      {"bck-antipode", cmd_bck_antipode},
      {"bck-natural-growth", cmd_bck_natural_growth},
      {"reg-eval", cmd_reg_eval},
      {"reg-graft", cmd_reg_graft},
      {"reg-bracket", cmd_reg_bracket},
      {"reg-odot", cmd_reg_odot},
      {"reg-gl-product", cmd_reg_gl_product},
      {"reg-raise", cmd_reg_raise},
      {"reg-lower", cmd_reg_lower},
      {"reg-deshuffle", cmd_reg_deshuffle},
      {"reg-coproduct", cmd_reg_coproduct},
      {"reg-phi", cmd_reg_phi},
      {"reg-phi-inv", cmd_reg_phi_inverse},
      {"reg-basis", cmd_reg_basis},
      {"verify", cmd_verify},
  };
  return table;
}

// The expected side of a fixture, parsed in the domain of the actual value.
CommandValue parse_like(const CommandValue& actual, const std::string& text, const Alphabet& alphabet, std::size_t d) {
  return std::visit(
      [&](const auto& v) -> CommandValue {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, LinComb>) {
          return parse_lincomb(text, alphabet);
        } else if constexpr (std::is_same_v<V, TensorElem>) {
          return parse_tensor(text, alphabet);
        } else if constexpr (std::is_same_v<V, MultiTensor>) {
          return parse_expression(text, alphabet);
        } else if constexpr (std::is_same_v<V, BckLinComb>) {
          return parse_bck_lincomb(text, alphabet);
        } else if constexpr (std::is_same_v<V, BckTensor>) {
          return parse_bck_tensor(text, alphabet);
        } else if constexpr (std::is_same_v<V, RegLinComb>) {
          return parse_reg_lincomb(text, d);
        } else if constexpr (std::is_same_v<V, RegTensor>) {
          return parse_reg_tensor(text, d);
        } else {
          std::string s = text;
          s.erase(0, s.find_first_not_of(" \t"));
          s.erase(s.find_last_not_of(" \t") + 1);
          return s;
        }
      },
      actual);
}

std::string value_text(const CommandValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>) {
          std::string s = x;
          while (!s.empty() && s.back() == '\n') s.pop_back();
          return s;
        } else {
          return to_text(x);
        }
      },
      v);
}

}  // namespace

std::string CommandOutput::text() const { return value_text(value); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, h] : handlers()) out.push_back(n);
    return out;
  }();
  return names;
}

CommandOutput run_command(const std::string& name, const std::vector<std::string>& args, const CommandOptions& options,
                          const Session& session) {
  for (const auto& [n, handler] : handlers())
    if (n == name) return handler(Invocation(name, args, options, session));
  throw std::invalid_argument("unknown command '" + name + "'");
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  bool quoted = false, pending = false;
  for (char c : text) {
    if (c == '"') {
      quoted = !quoted;
      pending = true;
    } else if (!quoted && (c == ' ' || c == '\t')) {
      if (pending) out.push_back(std::move(current));
      current.clear();
      pending = false;
    } else {
      current += c;
      pending = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in '" + text + "'");
  if (pending) out.push_back(std::move(current));
  return out;
}

FixtureCase parse_fixture_line(const std::string& line) {
  FixtureCase fc;
  std::string body = line;
  // An optional label in front: "label: command …".
  const auto arrow = body.find("=>");
  if (arrow == std::string::npos) throw std::invalid_argument("fixture line without '=>': " + line);
  fc.expected = body.substr(arrow + 2);
  fc.expected.erase(0, fc.expected.find_first_not_of(" \t"));
  fc.expected.erase(fc.expected.find_last_not_of(" \t\r") + 1);
  body = body.substr(0, arrow);
  if (const auto colon = body.find(": "); colon != std::string::npos && body.find('"') > colon) {
    fc.label = body.substr(0, colon);
    body = body.substr(colon + 2);
  }
  const auto words = split_words(body);
  if (words.empty()) throw std::invalid_argument("fixture line without a command: " + line);
  fc.command = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i].rfind("--", 0) == 0 && words[i].size() > 2) {
      if (i + 1 >= words.size()) throw std::invalid_argument("option " + words[i] + " has no value");
      fc.options[words[i].substr(2)] = words[i + 1];
      ++i;
    } else {
      fc.args.push_back(words[i]);
    }
  }
  if (fc.label.empty()) {
    fc.label = fc.command;
    for (const auto& a : fc.args) fc.label += " " + a;
  }
  return fc;
}

ReplayOutcome replay(const FixtureCase& fixture, std::size_t degree_cap) {
  Session session;
  session.degree_cap = degree_cap;
  if (auto it = fixture.options.find("alphabet"); it != fixture.options.end()) {
    std::vector<std::string> letters;
    std::stringstream in(it->second);
    for (std::string t; std::getline(in, t, ',');) letters.push_back(t);
    session.alphabet = Alphabet(letters);
  }
  if (auto it = fixture.options.find("dimension"); it != fixture.options.end()) session.dimension = std::stoul(it->second);
  CommandOptions options = fixture.options;
  options.erase("alphabet");
  options.erase("dimension");
  const CommandOutput out = run_command(fixture.command, fixture.args, options, session);

  std::vector<std::string> texts = fixture.args;
  texts.push_back(fixture.expected);
  const Alphabet alphabet = session.alphabet.value_or(infer_alphabet(texts));
  const CommandValue expected = parse_like(out.value, fixture.expected, alphabet, session.dimension);
  return {out.value == expected, out.text(), value_text(expected)};
}

}  // namespace mkw
