#include "mkw/forest.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

namespace mkw {

namespace {

struct TokenTable {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, Decoration> ids;
};

TokenTable& tokens() {
  static TokenTable table;
  return table;
}

struct NodeKey {
  Decoration root;
  std::vector<const detail::TreeNode*> children;
  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = std::hash<Decoration>{}(k.root);
    for (auto* c : k.children) h = hash_combine(h, std::hash<const void*>{}(c));
    return h;
  }
};

struct InternTable {
  std::mutex mutex;
  std::unordered_map<NodeKey, std::unique_ptr<detail::TreeNode>, NodeKeyHash> nodes;
};

InternTable& interned() {
  static InternTable table;
  return table;
}

bool is_token_char(char c) {
  return !(c == '[' || c == ']' || c == '{' || c == '}' || c == '(' || c == ')' ||
           std::isspace(static_cast<unsigned char>(c)));
}

}  // namespace

Decoration intern_token(std::string_view token) {
  auto& t = tokens();
  std::lock_guard lock(t.mutex);
  auto it = t.ids.find(std::string(token));
  if (it != t.ids.end()) return it->second;
  auto id = static_cast<Decoration>(t.names.size());
  t.names.emplace_back(token);
  t.ids.emplace(std::string(token), id);
  return id;
}

const std::string& token_name(Decoration d) {
  auto& t = tokens();
  std::lock_guard lock(t.mutex);
  return t.names.at(d);
}

Decoration reserved_root() {
  static const Decoration id = intern_token("#");
  return id;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

Alphabet::Alphabet(std::initializer_list<std::string_view> tokens)
    : Alphabet(std::vector<std::string>(tokens.begin(), tokens.end())) {}

Alphabet::Alphabet(const std::vector<std::string>& tokens) {
  std::set<std::string> sorted;
  for (const auto& t : tokens) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), is_token_char) || t == "#")
      throw std::invalid_argument("invalid alphabet token '" + t + "'");
    sorted.insert(t);
  }
  for (const auto& t : sorted) letters_.push_back(intern_token(t));
}

bool Alphabet::contains(Decoration d) const {
  return std::find(letters_.begin(), letters_.end(), d) != letters_.end();
}

std::string Alphabet::describe() const {
  std::string s = "{";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ",";
    s += token_name(letters_[i]);
  }
  return s + "}";
}

Tree::Tree(Decoration root, std::span<const Tree> children) {
  NodeKey key{root, {}};
  key.children.reserve(children.size());
  for (const auto& c : children) key.children.push_back(c.node_);

  auto& table = interned();
  std::lock_guard lock(table.mutex);
  auto it = table.nodes.find(key);
  if (it != table.nodes.end()) {
    node_ = it->second.get();
    return;
  }
  auto node = std::make_unique<detail::TreeNode>();
  node->root = root;
  node->children.assign(children.begin(), children.end());
  node->degree = 1;
  node->hash = NodeKeyHash{}(key);
  node->text = "[" + token_name(root);
  for (const auto& c : children) {
    node->degree += c.degree();
    node->text += c.text();
  }
  node->text += "]";
  node_ = node.get();
  table.nodes.emplace(std::move(key), std::move(node));
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  for (const auto& t : trees_) degree_ += t.degree();
}

std::string Forest::text() const {
  std::string s;
  for (const auto& t : trees_) s += t.text();
  return s;
}

std::size_t Forest::hash() const {
  std::size_t h = 0x51ed27;
  for (const auto& t : trees_) h = hash_combine(h, t.hash());
  return h;
}

Forest concat(const Forest& a, const Forest& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Tree> trees(a.trees());
  trees.insert(trees.end(), b.begin(), b.end());
  return Forest(std::move(trees));
}

Forest subword(const Forest& f, std::size_t first, std::size_t count) {
  return Forest(std::vector<Tree>(f.begin() + static_cast<std::ptrdiff_t>(first),
                                  f.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::strong_ordering compare(Tree a, Tree b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.text().compare(b.text()) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare(const Forest& a, const Forest& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Tree encodings are prefix-free, so comparing tree by tree agrees with
  // comparing the concatenated encodings.
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    int c = a[i].text().compare(b[i].text());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Tree b_plus(const Forest& f, Decoration root) { return Tree(root, f.trees()); }

Forest b_minus(Tree t) { return Forest(std::vector<Tree>(t.children().begin(), t.children().end())); }

namespace {

class BracketParser {
 public:
  BracketParser(std::string_view text, const Alphabet& alphabet) : s_(text), alphabet_(alphabet) {}

  Forest forest() {
    std::vector<Tree> trees;
    skip_space();
    while (pos_ < s_.size()) {
      if (s_[pos_] != '[') throw ParseError("expected '['", pos_);
      trees.push_back(tree());
      skip_space();
    }
    return Forest(std::move(trees));
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Tree tree() {
    std::size_t open = pos_++;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_token_char(s_[pos_])) ++pos_;
    std::string_view token = s_.substr(start, pos_ - start);
    Decoration d;
    if (token.empty()) {
      if (alphabet_.size() != 1) throw ParseError("missing decoration token", start);
      d = alphabet_.letters().front();
    } else {
      d = intern_token(token);
      if (!alphabet_.contains(d))
        throw ParseError("unknown token '" + std::string(token) + "' (alphabet " + alphabet_.describe() + ")",
                         start);
    }
    std::vector<Tree> children;
    for (;;) {
      skip_space();
      if (pos_ >= s_.size()) throw ParseError("unbalanced brackets: '[' never closed", open);
      if (s_[pos_] == ']') {
        ++pos_;
        break;
      }
      if (s_[pos_] != '[') throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
      children.push_back(tree());
    }
    return Tree(d, children);
  }

  std::string_view s_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view text, const Alphabet& alphabet) {
  return BracketParser(text, alphabet).forest();
}

Tree parse_tree(std::string_view text, const Alphabet& alphabet) {
  Forest f = parse_forest(text, alphabet);
  if (f.size() != 1) throw ParseError("expected exactly one tree", 0);
  return f[0];
}

std::string render(const Forest& f) { return f.text(); }

std::vector<std::string> tokens_in(std::string_view text) {
  std::set<std::string> found;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '[') continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_token_char(text[j])) ++j;
    if (j > i + 1) found.emplace(text.substr(i + 1, j - i - 1));
  }
  return {found.begin(), found.end()};
}

namespace {

struct EnumCache {
  std::map<std::pair<std::vector<Decoration>, std::size_t>, std::vector<Tree>> trees;
  std::map<std::pair<std::vector<Decoration>, std::size_t>, std::vector<Forest>> forests;
};

EnumCache& enum_cache() {
  thread_local EnumCache cache;
  return cache;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t degree, const Alphabet& alphabet) {
  if (degree == 0) return {};
  auto key = std::make_pair(alphabet.letters(), degree);
  auto& cache = enum_cache().trees;
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Tree> out;
  for (const auto& f : enumerate_forests(degree - 1, alphabet))
    for (Decoration d : alphabet.letters()) out.push_back(b_plus(f, d));
  std::sort(out.begin(), out.end(), [](Tree a, Tree b) { return compare(a, b) < 0; });
  return cache[key] = out;
}

std::vector<Forest> enumerate_forests(std::size_t degree, const Alphabet& alphabet) {
  if (degree == 0) return {Forest{}};
  auto key = std::make_pair(alphabet.letters(), degree);
  auto& cache = enum_cache().forests;
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Forest> out;
  for (std::size_t first = 1; first <= degree; ++first) {
    auto heads = enumerate_trees(first, alphabet);
    auto tails = enumerate_forests(degree - first, alphabet);
    for (const auto& h : heads)
      for (const auto& t : tails) out.push_back(concat(Forest(h), t));
  }
  std::sort(out.begin(), out.end(), ForestLess{});
  return enum_cache().forests[key] = out;
}

std::vector<Forest> enumerate_forests_upto(std::size_t max_degree, const Alphabet& alphabet) {
  std::vector<Forest> out;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto part = enumerate_forests(n, alphabet);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t vertex_count(const Forest& f) { return f.degree(); }

namespace {

Tree rebuild(Tree t, std::size_t& counter, std::size_t target, const std::vector<Tree>& replacement) {
  std::size_t here = counter++;
  if (here == target) {
    counter += t.degree() - 1;
    return Tree(t.root(), replacement);
  }
  if (target < here || target >= here + t.degree()) {
    counter += t.degree() - 1;
    return t;
  }
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(rebuild(c, counter, target, replacement));
  return Tree(t.root(), kids);
}

}  // namespace

Forest replace_children(const Forest& f, std::size_t index, const std::vector<Tree>& children) {
  if (index >= f.degree()) throw std::out_of_range("vertex index out of range");
  std::size_t counter = 0;
  std::vector<Tree> trees;
  trees.reserve(f.size());
  for (const auto& t : f) trees.push_back(rebuild(t, counter, index, children));
  return Forest(std::move(trees));
}

}  // namespace mkw
