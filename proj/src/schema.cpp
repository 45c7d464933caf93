#include "genusgrid/schema.hpp"

#include "genusgrid/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace genusgrid {

namespace {

using Sides = std::vector<Side>;

Sides rotated(const Sides& w, std::size_t r) {
  Sides out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + r) % w.size()];
  return out;
}

Sides slice(const Sides& w, std::size_t from, std::size_t to) {
  if (from >= to) return {};
  return Sides(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

Sides reverse_complement(Sides w) {
  std::reverse(w.begin(), w.end());
  for (auto& s : w) s.exp = -s.exp;
  return w;
}

void append(Sides& out, const Sides& part) { out.insert(out.end(), part.begin(), part.end()); }

std::vector<std::size_t> mates(const Sides& w) {
  std::map<int, std::size_t> first;
  std::vector<std::size_t> m(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [it, inserted] = first.emplace(w[i].label, i);
    if (!inserted) {
      m[i] = it->second;
      m[it->second] = i;
    }
  }
  return m;
}

// Positions p, p+1 (cyclic) hold the same label with equal exponents.
bool pair_at(const Sides& w, std::size_t p) {
  const Side& a = w[p % w.size()];
  const Side& b = w[(p + 1) % w.size()];
  return a.label == b.label && a.exp == b.exp;
}

// Positions p..p+3 (cyclic) read a b a- b- for distinct labels a, b.
bool cluster_at(const Sides& w, std::size_t p) {
  if (w.size() < 4) return false;
  const Side& a = w[p % w.size()];
  const Side& b = w[(p + 1) % w.size()];
  const Side& c = w[(p + 2) % w.size()];
  const Side& d = w[(p + 3) % w.size()];
  return a.label != b.label && c.label == a.label && c.exp == -a.exp && d.label == b.label && d.exp == -b.exp;
}

bool clustered(const Sides& w, int label) {
  for (std::size_t p = 0; p < w.size(); ++p)
    if (cluster_at(w, p) && (w[p].label == label || w[(p + 1) % w.size()].label == label)) return true;
  return false;
}

bool paired(const Sides& w, int label) {
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p].label == label && pair_at(w, p)) return true;
  return false;
}

bool is_twisted(const Sides& w, const std::vector<std::size_t>& m, std::size_t pos) {
  return w[pos].exp == w[m[pos]].exp;
}

[[noreturn]] void not_found(const char* rule) {
  throw Error(ErrorKind::PatternNotFound, std::string("no pattern for reduction ") + rule);
}

// -- rewrites on a word rotated so the pattern starts at position 0

// w = s t X t- Y  ->  r X r- s Y
SchemaWord apply_B(SchemaWord s, const Sides& w) {
  auto m = mates(w);
  const std::size_t j = m[1];
  int r = s.fresh();
  Sides out{{r, 1}};
  append(out, slice(w, 2, j));
  out.push_back({r, -1});
  out.push_back(w[0]);
  append(out, slice(w, j + 1, w.size()));
  return SchemaWord(std::move(out), s.names());
}

// w = s t X t Y  ->  r X s- r Y
SchemaWord apply_B_twisted(SchemaWord s, const Sides& w) {
  auto m = mates(w);
  const std::size_t j = m[1];
  int r = s.fresh();
  Sides out{{r, 1}};
  append(out, slice(w, 2, j));
  out.push_back({w[0].label, -w[0].exp});
  out.push_back({r, 1});
  append(out, slice(w, j + 1, w.size()));
  return SchemaWord(std::move(out), s.names());
}

// w = s X s Y  ->  t t Y* X
SchemaWord apply_C(SchemaWord s, const Sides& w) {
  auto m = mates(w);
  const std::size_t j = m[0];
  int t = s.fresh();
  Sides out{{t, 1}, {t, 1}};
  append(out, reverse_complement(slice(w, j + 1, w.size())));
  append(out, slice(w, 1, j));
  return SchemaWord(std::move(out), s.names());
}

// w = s X t Y s- U t- V  ->  r p r- p- U Y X V, t at position t1
SchemaWord apply_D(SchemaWord s, const Sides& w, std::size_t t1) {
  auto m = mates(w);
  const std::size_t k = m[0], t2 = m[t1];
  int r = s.fresh(), p = s.fresh();
  Sides out{{r, 1}, {p, 1}, {r, -1}, {p, -1}};
  append(out, slice(w, k + 1, t2));   // U
  append(out, slice(w, t1 + 1, k));   // Y
  append(out, slice(w, 1, t1));       // X
  append(out, slice(w, t2 + 1, w.size()));  // V
  return SchemaWord(std::move(out), s.names());
}

// w = s1 s1 X s2 s3 s2- s3- Y, cluster at c  ->  t1 t1 t2 t2 t3 t3 X Y
SchemaWord apply_E_forward(SchemaWord s, const Sides& w, std::size_t c) {
  int t1 = s.fresh(), t2 = s.fresh(), t3 = s.fresh();
  Sides out{{t1, 1}, {t1, 1}, {t2, 1}, {t2, 1}, {t3, 1}, {t3, 1}};
  append(out, slice(w, 2, c));
  append(out, slice(w, c + 4, w.size()));
  return SchemaWord(std::move(out), s.names());
}

// w = t1 t1 t2 t2 t3 t3 Y  ->  s1 s1 s2 s3 s2- s3- Y
SchemaWord apply_E_reverse(SchemaWord s, const Sides& w) {
  int s1 = s.fresh(), s2 = s.fresh(), s3 = s.fresh();
  Sides out{{s1, 1}, {s1, 1}, {s2, 1}, {s3, 1}, {s2, -1}, {s3, -1}};
  append(out, slice(w, 6, w.size()));
  return SchemaWord(std::move(out), s.names());
}

// w = s s t t X  ->  s r s- r X
SchemaWord apply_F(SchemaWord s, const Sides& w) {
  int r = s.fresh();
  Sides out{w[0], {r, 1}, {w[0].label, -w[0].exp}, {r, 1}};
  append(out, slice(w, 4, w.size()));
  return SchemaWord(std::move(out), s.names());
}

// Finds the B or twisted-B site with s at position `at`; returns the
// rotated word when t = w[at+1] has a distinct label.
std::optional<Sides> b_site(const Sides& sides, std::size_t at) {
  Sides w = rotated(sides, at);
  if (w[0].label == w[1].label) return std::nullopt;
  return w;
}

}  // namespace

// ------------------------------------------------------------ SchemaWord

SchemaWord::SchemaWord(std::vector<Side> sides, std::vector<std::string> names)
    : sides_(std::move(sides)), names_(std::move(names)) {
  if (sides_.empty()) throw Error(ErrorKind::InvalidWord, "empty word");
  std::map<int, int> count;
  for (const Side& s : sides_) {
    if (s.exp != 1 && s.exp != -1) throw Error(ErrorKind::InvalidWord, "exponent must be +1 or -1");
    if (s.label < 0 || static_cast<std::size_t>(s.label) >= names_.size())
      throw Error(ErrorKind::InvalidWord, "label without a name");
    ++count[s.label];
  }
  for (const auto& [label, n] : count)
    if (n != 2)
      throw Error(ErrorKind::InvalidWord,
                  "label '" + names_[static_cast<std::size_t>(label)] + "' occurs " + std::to_string(n) + " times");
}

SchemaWord SchemaWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Side> sides;
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::string token;
  while (in >> token) {
    int exp = 1;
    if (token.size() > 1 && token.back() == '-') {
      exp = -1;
      token.pop_back();
    }
    if (token.empty() || token.find('-') != std::string::npos)
      throw Error(ErrorKind::InvalidWord, "bad side '" + token + "'");
    auto [it, inserted] = ids.emplace(token, static_cast<int>(names.size()));
    if (inserted) names.push_back(token);
    sides.push_back({it->second, exp});
  }
  return SchemaWord(std::move(sides), std::move(names));
}

std::size_t SchemaWord::mate(std::size_t pos) const {
  for (std::size_t i = 0; i < sides_.size(); ++i)
    if (i != pos && sides_[i].label == sides_[pos].label) return i;
  return pos;
}

bool SchemaWord::twisted(int label) const {
  int sum = 0;
  for (const Side& s : sides_)
    if (s.label == label) sum += s.exp;
  return sum != 0;
}

int SchemaWord::fresh() {
  std::set<std::string> taken(names_.begin(), names_.end());
  std::string name;
  do {
    name = "x" + std::to_string(++counter_);
  } while (taken.contains(name));
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

std::string SchemaWord::str() const {
  std::string out;
  for (const Side& s : sides_) {
    if (!out.empty()) out += ' ';
    out += name(s.label);
    if (s.exp < 0) out += '-';
  }
  return out;
}

// ------------------------------------------------------------ invariants

namespace {

struct Corners {
  std::vector<int> parent;

  explicit Corners(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Side k runs from corner k to corner k+1; a barred side runs backwards.
Corners trace_corners(const Sides& w) {
  const std::size_t n = w.size();
  Corners c(n);
  auto m = mates(w);
  auto tail = [&](std::size_t k) { return static_cast<int>(w[k].exp > 0 ? k : (k + 1) % n); };
  auto head = [&](std::size_t k) { return static_cast<int>(w[k].exp > 0 ? (k + 1) % n : k); };
  for (std::size_t k = 0; k < n; ++k) {
    c.unite(tail(k), tail(m[k]));
    c.unite(head(k), head(m[k]));
  }
  return c;
}

}  // namespace

int corner_classes(const SchemaWord& s) {
  Corners c = trace_corners(s.sides());
  std::set<int> roots;
  for (std::size_t k = 0; k < s.size(); ++k) roots.insert(c.find(static_cast<int>(k)));
  return static_cast<int>(roots.size());
}

SurfaceInvariants invariants(const SchemaWord& s) {
  SurfaceInvariants inv;
  for (const Side& side : s.sides())
    if (s.twisted(side.label)) inv.orientable = false;
  inv.euler_char = corner_classes(s) - s.num_labels() + 1;
  inv.genus = inv.orientable ? (2 - inv.euler_char) / 2 : 2 - inv.euler_char;
  return inv;
}

// ------------------------------------------------------------ normal forms

namespace {

// Relabel by first occurrence with the first occurrence unbarred.
Sides canonical_labels(const Sides& w) {
  std::map<int, std::pair<int, int>> seen;  // label -> (new label, sign)
  Sides out;
  for (const Side& s : w) {
    auto it = seen.find(s.label);
    if (it == seen.end()) it = seen.emplace(s.label, std::pair{static_cast<int>(seen.size()), s.exp}).first;
    out.push_back({it->second.first, s.exp * it->second.second});
  }
  return out;
}

bool handles_from(const Sides& w, std::size_t from, int label) {
  const std::size_t rest = w.size() - from;
  if (rest == 0) return true;
  if (rest == 2) return w[from] == Side{label, 1} && w[from + 1] == Side{label, -1};
  if (rest % 4 != 0) return false;
  for (std::size_t b = from; b < w.size(); b += 4, label += 2) {
    if (!(w[b] == Side{label, 1} && w[b + 1] == Side{label + 1, 1} && w[b + 2] == Side{label, -1} &&
          w[b + 3] == Side{label + 1, -1}))
      return false;
  }
  return true;
}

std::optional<int> form_of(const Sides& w) {
  const std::size_t n = w.size();
  if (n == 2 && w[0] == Side{0, 1} && w[1] == Side{0, -1}) return 2;
  if (n >= 4 && n % 4 == 0 && handles_from(w, 0, 0)) return 1;
  if (n >= 2 && w[0] == Side{0, 1} && w[1] == Side{0, 1} && handles_from(w, 2, 1)) return 3;
  if (n >= 4 && w[0] == Side{0, 1} && w[1] == Side{1, 1} && w[2] == Side{0, -1} && w[3] == Side{1, 1} &&
      handles_from(w, 4, 2))
    return 4;
  return std::nullopt;
}

}  // namespace

std::optional<int> is_normal_form(const SchemaWord& s) {
  Sides reversed(s.sides().rbegin(), s.sides().rend());
  for (const Sides* base : std::array<const Sides*, 2>{&s.sides(), &reversed}) {
    for (std::size_t r = 0; r < base->size(); ++r) {
      if (auto f = form_of(canonical_labels(rotated(*base, r)))) return f;
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ reductions

SchemaWord reduce_A(const SchemaWord& s) {
  const Sides& w = s.sides();
  if (w.size() == 2) not_found("A");
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Side& a = w[p];
    const Side& b = w[(p + 1) % w.size()];
    if (a.label != b.label || a.exp != -b.exp) continue;
    Sides r = rotated(w, (p + 2) % w.size());
    r.resize(r.size() - 2);
    return SchemaWord(std::move(r), s.names());
  }
  not_found("A");
}

SchemaWord reduce_B(const SchemaWord& s) {
  const Sides& w = s.sides();
  auto m = mates(w);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const std::size_t t = (p + 1) % w.size();
    if (w[p].label == w[t].label || is_twisted(w, m, t)) continue;
    return apply_B(s, rotated(w, p));
  }
  not_found("B");
}

SchemaWord reduce_B_twisted(const SchemaWord& s) {
  const Sides& w = s.sides();
  auto m = mates(w);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const std::size_t t = (p + 1) % w.size();
    if (w[p].label == w[t].label || !is_twisted(w, m, t)) continue;
    return apply_B_twisted(s, rotated(w, p));
  }
  not_found("B twisted");
}

SchemaWord reduce_C(const SchemaWord& s) {
  const Sides& w = s.sides();
  auto m = mates(w);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (!is_twisted(w, m, p) || pair_at(w, p)) continue;
    return apply_C(s, rotated(w, p));
  }
  // Only pairs remain; C still applies with X empty.
  for (std::size_t p = 0; p < w.size(); ++p)
    if (is_twisted(w, m, p)) return apply_C(s, rotated(w, p));
  not_found("C");
}

namespace {

// Linked orientable label for the orientable side at position 0 of w.
std::optional<std::size_t> linked_partner(const Sides& w) {
  auto m = mates(w);
  const std::size_t k = m[0];
  for (std::size_t t = 1; t < k; ++t)
    if (m[t] > k && !is_twisted(w, m, t)) return t;
  return std::nullopt;
}

}  // namespace

SchemaWord reduce_D(const SchemaWord& s) {
  const Sides& w = s.sides();
  auto m = mates(w);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (is_twisted(w, m, p)) continue;
    Sides r = rotated(w, p);
    if (auto t = linked_partner(r)) return apply_D(s, r, *t);
  }
  not_found("D");
}

SchemaWord reduce_E(const SchemaWord& s, Direction direction) {
  const Sides& w = s.sides();
  const std::size_t n = w.size();
  if (direction == Direction::Forward) {
    for (std::size_t p = 0; p < n; ++p) {
      if (!pair_at(w, p)) continue;
      Sides r = rotated(w, p);
      for (std::size_t c = 2; c + 4 <= n; ++c)
        if (cluster_at(r, c)) return apply_E_forward(s, r, c);
    }
    not_found("E");
  }
  if (n < 6) not_found("E reverse");
  std::optional<std::size_t> first;
  for (std::size_t p = 0; p < n; ++p) {
    const bool three = pair_at(w, p) && pair_at(w, p + 2) && pair_at(w, p + 4) &&
                       std::set<int>{w[p].label, w[(p + 2) % n].label, w[(p + 4) % n].label}.size() == 3;
    if (!three) continue;
    if (!first) first = p;
    if (n == 6 || !pair_at(w, p + 6)) return apply_E_reverse(s, rotated(w, p));
  }
  if (first) return apply_E_reverse(s, rotated(w, *first));
  not_found("E reverse");
}

SchemaWord reduce_F(const SchemaWord& s) {
  const Sides& w = s.sides();
  const std::size_t n = w.size();
  if (n < 4) not_found("F");
  for (std::size_t p = 0; p < n; ++p)
    if (pair_at(w, p) && pair_at(w, p + 2) && w[p].label != w[(p + 2) % n].label) return apply_F(s, rotated(w, p));
  not_found("F");
}

// ------------------------------------------------------------ driver

namespace {

class Driver {
 public:
  explicit Driver(const SchemaWord& s) : word_(s) {}

  Normalization run() {
    one_corner_class();
    if (is_sphere()) return finish();
    if (invariants(word_).orientable) {
      cluster_orientable();
    } else {
      pair_twisted();
      cluster_orientable();
      while (has_pair() && has_cluster()) step("E", reduce_E(word_, Direction::Forward));
      while (count_pairs() >= 3) step("E reverse", reduce_E(word_, Direction::Reverse));
      if (count_pairs() == 2) step("F", reduce_F(word_));
    }
    return finish();
  }

 private:
  bool is_sphere() const { return word_.size() == 2 && !word_.twisted(word_.sides()[0].label); }

  void step(const char* rule, SchemaWord next) {
    word_ = std::move(next);
    trace_.push_back({rule, word_});
  }

  // Massey step 1: A when possible, else shrink the smallest corner class by
  // a B rewrite at one of its corners.
  void one_corner_class() {
    while (!is_sphere() && corner_classes(word_) > 1) {
      try {
        step("A", reduce_A(word_));
        continue;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PatternNotFound) throw;
      }
      const Sides& w = word_.sides();
      const std::size_t n = w.size();
      Corners c = trace_corners(w);
      std::map<int, int> size;
      for (std::size_t k = 0; k < n; ++k) ++size[c.find(static_cast<int>(k))];
      int target = -1;
      for (const auto& [root, count] : size)
        if (target < 0 || count < size[target]) target = root;
      std::size_t corner = n;
      for (std::size_t k = 0; k < n && corner == n; ++k)
        if (c.find(static_cast<int>(k)) == target && c.find(static_cast<int>((k + n - 1) % n)) != target) corner = k;
      // Corner k sits between side k-1 (sigma) and side k (tau).
      auto site = b_site(w, (corner + n - 1) % n);
      if (!site) throw Error(ErrorKind::PatternNotFound, "corner class without a B site");
      auto m = mates(*site);
      if (is_twisted(*site, m, 1))
        step("B twisted", apply_B_twisted(word_, *site));
      else
        step("B", apply_B(word_, *site));
    }
  }

  void pair_twisted() {
    for (;;) {
      const Sides& w = word_.sides();
      auto m = mates(w);
      std::optional<std::size_t> p;
      for (std::size_t i = 0; i < w.size() && !p; ++i)
        if (is_twisted(w, m, i) && !paired(w, w[i].label)) p = i;
      if (!p) return;
      step("C", apply_C(word_, rotated(w, *p)));
    }
  }

  void cluster_orientable() {
    for (;;) {
      const Sides& w = word_.sides();
      auto m = mates(w);
      std::optional<std::size_t> site;
      std::size_t partner = 0;
      for (std::size_t i = 0; i < w.size() && !site; ++i) {
        if (is_twisted(w, m, i) || clustered(w, w[i].label)) continue;
        Sides r = rotated(w, i);
        if (auto t = linked_partner(r)) {
          site = i;
          partner = *t;
        }
      }
      if (!site) return;
      step("D", apply_D(word_, rotated(w, *site), partner));
    }
  }

  bool has_pair() const {
    for (std::size_t p = 0; p < word_.size(); ++p)
      if (pair_at(word_.sides(), p)) return true;
    return false;
  }
  bool has_cluster() const {
    for (std::size_t p = 0; p < word_.size(); ++p)
      if (cluster_at(word_.sides(), p)) return true;
    return false;
  }
  int count_pairs() const {
    std::set<int> labels;
    for (std::size_t p = 0; p < word_.size(); ++p)
      if (pair_at(word_.sides(), p)) labels.insert(word_.sides()[p].label);
    return static_cast<int>(labels.size());
  }

  Normalization finish() { return {word_, std::move(trace_)}; }

  SchemaWord word_;
  std::vector<RewriteStep> trace_;
};

}  // namespace

Normalization normalize(const SchemaWord& s) { return Driver(s).run(); }

}  // namespace genusgrid
