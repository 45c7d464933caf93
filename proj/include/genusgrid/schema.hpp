#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genusgrid {

/// One polygon side: a label and an exponent, +1 for sigma, -1 for its bar.
struct Side {
  int label = 0;
  int exp = 1;

  friend bool operator==(const Side&, const Side&) = default;
};

/// A cyclic word over signed labels in which every label occurs exactly
/// twice. Labels index a name table; rewrites append fresh names.
class SchemaWord {
 public:
  SchemaWord() = default;
  /// Throws InvalidWord unless every label occurs exactly twice with
  /// exponent +-1 and the word is nonempty.
  SchemaWord(std::vector<Side> sides, std::vector<std::string> names);

  /// Whitespace-separated labels, a trailing '-' marks the bar, e.g.
  /// "a b a- b-". Throws InvalidWord.
  static SchemaWord parse(std::string_view text);

  const std::vector<Side>& sides() const { return sides_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return sides_.size(); }
  int num_labels() const { return static_cast<int>(sides_.size() / 2); }
  const std::string& name(int label) const { return names_[static_cast<std::size_t>(label)]; }

  /// Position of the other occurrence of the label at `pos`.
  std::size_t mate(std::size_t pos) const;
  bool twisted(int label) const;  // both occurrences carry the same exponent

  /// Appends a fresh name and returns its label.
  int fresh();

  std::string str() const;

  /// Same sides; fresh-name counters are not compared.
  friend bool operator==(const SchemaWord& a, const SchemaWord& b) { return a.sides_ == b.sides_; }

 private:
  std::vector<Side> sides_;
  std::vector<std::string> names_;
  int counter_ = 0;
};

/// Equivalence classes of polygon corners under the side identifications.
int corner_classes(const SchemaWord& s);

struct SurfaceInvariants {
  bool orientable = true;
  int euler_char = 2;
  int genus = 0;  // handles if orientable, crosscaps otherwise

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

SurfaceInvariants invariants(const SchemaWord& s);

/// Normal form id up to rotation, reversal and complementation:
/// 1 handles, 2 sphere, 3 crosscap + X, 4 Klein bottle + X, with X empty or
/// of form 1 or 2.
std::optional<int> is_normal_form(const SchemaWord& s);

// Rewrites. Each applies at the least cyclic offset where its pattern
// occurs and throws PatternNotFound otherwise.

/// X s s- -> X. Not applicable to a word that is exactly s s-.
SchemaWord reduce_A(const SchemaWord& s);
/// s t X t- Y -> r X r- s Y.
SchemaWord reduce_B(const SchemaWord& s);
/// s t X t Y -> r X s- r Y: the cut-and-paste of B when t is twisted.
SchemaWord reduce_B_twisted(const SchemaWord& s);
/// s X s Y -> t t Y* X, Y* the reverse complement of Y.
SchemaWord reduce_C(const SchemaWord& s);
/// s X t Y s- U t- V -> r p r- p- U Y X V.
SchemaWord reduce_D(const SchemaWord& s);

enum class Direction { Forward, Reverse };

/// Forward: s1 s1 X s2 s3 s2- s3- Y -> t1 t1 t2 t2 t3 t3 X Y.
/// Reverse (X empty): t1 t1 t2 t2 t3 t3 Y -> s1 s1 s2 s3 s2- s3- Y,
/// preferring three pairs followed by a non-pair.
SchemaWord reduce_E(const SchemaWord& s, Direction direction);
/// s s t t X -> s r s- r X.
SchemaWord reduce_F(const SchemaWord& s);

struct RewriteStep {
  std::string rule;
  SchemaWord word;  // word after the rewrite
};

struct Normalization {
  SchemaWord word;
  std::vector<RewriteStep> trace;
};

/// Step 1 reduces to one corner class with A and (twisted) B; step 2 uses D
/// for orientable words and C, D, E, E reverse, F otherwise.
Normalization normalize(const SchemaWord& s);

}  // namespace genusgrid
