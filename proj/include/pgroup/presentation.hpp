#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgroup {

/// Largest number of pc-generators a presentation may carry.
inline constexpr int kMaxRank = 12;

/// One letter of a word: generator index (0-based) raised to an exponent in [0, p).
struct Letter {
  int gen = 0;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Error raised while reading presentation text. Line and column are 1-based;
/// column is 0 when the problem concerns a whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// A refined power-commutator presentation of a p-group of order p^rank.
///
/// Generators are numbered 0..rank-1 internally and g1..g<rank> in text.
/// power[i] is the value of g_i^p, a word in generators after i.
/// conj[i][j] (i < j) is the value of g_j^{g_i}, a word in generators >= j.
/// Omitted relations hold their defaults: g_i^p = 1 and g_j^{g_i} = g_j.
struct PcPresentation {
  std::string name;
  int prime = 2;
  int rank = 0;
  std::vector<Word> power;
  std::vector<std::vector<Word>> conj;

  /// Presentation of the elementary abelian group of the given rank.
  static PcPresentation trivial_relations(std::string name, int prime, int rank);

  const Word& power_rel(int i) const { return power.at(i); }
  const Word& conj_rel(int i, int j) const { return conj.at(i).at(j); }
  void set_power(int i, Word w);
  void set_conj(int i, int j, Word w);

  bool is_default_power(int i) const { return power[i].empty(); }
  bool is_default_conj(int i, int j) const;

  friend bool operator==(const PcPresentation&, const PcPresentation&) = default;
};

bool is_prime(std::int64_t n);

/// Checks every structural invariant; throws std::invalid_argument on violation.
void validate(const PcPresentation& pres);

/// Parses a single presentation. Throws ParseError.
PcPresentation parse_presentation(std::string_view text);

/// Parses a file holding one or more presentations separated by blank lines.
std::vector<PcPresentation> parse_presentations(std::string_view text);

/// Reads and parses a presentation file from disk.
std::vector<PcPresentation> load_presentations(const std::string& path);

/// Canonical text; default relations are omitted.
std::string serialize(const PcPresentation& pres);
std::string serialize(const std::vector<PcPresentation>& list);

std::string format_word(const Word& w);

/// Direct product of two presentations over the same prime. Generators of
/// the left factor come first.
PcPresentation direct_product(const PcPresentation& a, const PcPresentation& b,
                              std::string name = {});

}  // namespace pgroup
