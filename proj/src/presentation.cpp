#include "pgroup/presentation.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace pgroup {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                         ": " + what),
      line_(line),
      column_(column),
      message_(what) {}

PcPresentation PcPresentation::trivial_relations(std::string name, int prime, int rank) {
  PcPresentation pres;
  pres.name = std::move(name);
  pres.prime = prime;
  pres.rank = rank;
  pres.power.assign(rank, Word{});
  pres.conj.assign(rank, std::vector<Word>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) pres.conj[i][j] = Word{{j, 1}};
  return pres;
}

void PcPresentation::set_power(int i, Word w) { power.at(i) = std::move(w); }

void PcPresentation::set_conj(int i, int j, Word w) { conj.at(i).at(j) = std::move(w); }

bool PcPresentation::is_default_conj(int i, int j) const {
  const Word& w = conj[i][j];
  return w.size() == 1 && w[0].gen == j && w[0].exp == 1;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_word(const Word& w, int prime, int rank, int min_gen, const std::string& what) {
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= rank)
      throw std::invalid_argument(what + ": generator g" + std::to_string(l.gen + 1) +
                                  " out of range");
    if (l.gen < min_gen)
      throw std::invalid_argument(what + ": generator g" + std::to_string(l.gen + 1) +
                                  " must come after g" + std::to_string(min_gen));
    if (l.exp < 0 || l.exp >= prime)
      throw std::invalid_argument(what + ": exponent " + std::to_string(l.exp) +
                                  " outside [0," + std::to_string(prime) + ")");
  }
}

}  // namespace

void validate(const PcPresentation& pres) {
  if (!is_prime(pres.prime))
    throw std::invalid_argument("modulus " + std::to_string(pres.prime) + " is not prime");
  // Rank 0 (the trivial group) only arises internally, e.g. for G/G.
  if (pres.rank < 0 || pres.rank > kMaxRank)
    throw std::invalid_argument("rank " + std::to_string(pres.rank) + " outside [0," +
                                std::to_string(kMaxRank) + "]");
  if (static_cast<int>(pres.power.size()) != pres.rank ||
      static_cast<int>(pres.conj.size()) != pres.rank)
    throw std::invalid_argument("relation tables do not match rank");
  for (int i = 0; i < pres.rank; ++i) {
    check_word(pres.power[i], pres.prime, pres.rank, i + 1,
               "pow g" + std::to_string(i + 1));
    if (static_cast<int>(pres.conj[i].size()) != pres.rank)
      throw std::invalid_argument("relation tables do not match rank");
    for (int j = i + 1; j < pres.rank; ++j)
      check_word(pres.conj[i][j], pres.prime, pres.rank, j,
                 "conj g" + std::to_string(j + 1) + " ^ g" + std::to_string(i + 1));
  }
}

namespace {

struct Token {
  enum Kind { kEnd, kIdent, kNumber, kSymbol } kind = kEnd;
  std::string text;
  int column = 0;
};

class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  Token peek() {
    if (!peeked_) peeked_ = scan();
    return *peeked_;
  }

  Token next() {
    Token t = peek();
    peeked_.reset();
    return t;
  }

  Token expect_symbol(char c) {
    Token t = next();
    if (t.kind != Token::kSymbol || t.text[0] != c)
      fail(t, std::string("expected '") + c + "'");
    return t;
  }

  // g<k> reference, returned 0-based.
  int expect_generator(int rank, Token* where = nullptr) {
    Token t = next();
    if (t.kind != Token::kIdent || t.text.size() < 2 || t.text[0] != 'g')
      fail(t, "expected generator g<k>");
    for (size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        fail(t, "expected generator g<k>");
    const long k = std::stol(t.text.substr(1));
    if (k < 1 || k > rank) fail(t, "generator " + t.text + " out of range 1.." + std::to_string(rank));
    if (where) *where = t;
    return static_cast<int>(k - 1);
  }

  long expect_integer() {
    Token t = next();
    if (t.kind != Token::kNumber) fail(t, "expected integer");
    if (t.text.size() > 9) fail(t, "integer too large");
    return std::stol(t.text);
  }

  void expect_end() {
    Token t = next();
    if (t.kind != Token::kEnd) fail(t, "unexpected '" + t.text + "'");
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(line_no_, t.column, what);
  }

  int line_no() const { return line_no_; }

 private:
  Token scan() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    Token t;
    t.column = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size()) return t;
    const char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_' ||
              line_[pos_] == '-' || line_[pos_] == '.'))
        ++pos_;
      t.kind = Token::kIdent;
      t.text = std::string(line_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      t.kind = Token::kNumber;
      t.text = std::string(line_.substr(start, pos_ - start));
    } else {
      t.kind = Token::kSymbol;
      t.text = std::string(1, c);
      ++pos_;
    }
    return t;
  }

  std::string_view line_;
  int line_no_;
  size_t pos_ = 0;
  std::optional<Token> peeked_;
};

struct Block {
  int first_line = 0;
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)
};

Word parse_word(LineScanner& sc, int prime, int rank, int min_gen) {
  Word w;
  Token first = sc.peek();
  if (first.kind == Token::kNumber && first.text == "1") {
    sc.next();
    return w;
  }
  while (true) {
    Token where;
    const int gen = sc.expect_generator(rank, &where);
    if (gen < min_gen)
      sc.fail(where, "relation may only use g" + std::to_string(min_gen + 1) + " and later");
    long exp = 1;
    Token t = sc.peek();
    if (t.kind == Token::kSymbol && t.text == "^") {
      sc.next();
      Token et = sc.peek();
      exp = sc.expect_integer();
      if (exp < 0 || exp >= prime)
        sc.fail(et, "exponent " + std::to_string(exp) + " outside [0," + std::to_string(prime) + ")");
    }
    if (exp != 0) w.push_back({gen, static_cast<int>(exp)});
    t = sc.peek();
    if (t.kind == Token::kSymbol && t.text == "*") {
      sc.next();
      continue;
    }
    break;
  }
  return w;
}

PcPresentation parse_block(const Block& block, int ordinal) {
  PcPresentation pres;
  std::optional<int> prime;
  std::optional<int> rank;
  bool named = false;
  std::vector<bool> power_seen;
  std::vector<std::vector<bool>> conj_seen;

  auto ensure_header = [&](LineScanner& sc, const Token& kw) {
    if (!prime || !rank) sc.fail(kw, "'prime' and 'rank' must precede relations");
  };
  auto start_relations = [&] {
    if (pres.rank != 0) return;
    pres = PcPresentation::trivial_relations(pres.name, *prime, *rank);
    power_seen.assign(*rank, false);
    conj_seen.assign(*rank, std::vector<bool>(*rank, false));
  };

  for (const auto& [line_no, content] : block.lines) {
    LineScanner sc(content, line_no);
    Token kw = sc.next();
    if (kw.kind != Token::kIdent) sc.fail(kw, "expected keyword");
    if (kw.text == "group") {
      if (named) sc.fail(kw, "duplicate 'group' line");
      Token name = sc.next();
      if (name.kind != Token::kIdent && name.kind != Token::kNumber)
        sc.fail(name, "expected group identifier");
      pres.name = name.text;
      named = true;
      sc.expect_end();
    } else if (kw.text == "prime") {
      if (prime) sc.fail(kw, "duplicate 'prime' line");
      Token t = sc.peek();
      const long p = sc.expect_integer();
      if (!is_prime(p)) sc.fail(t, "modulus " + std::to_string(p) + " is not prime");
      prime = static_cast<int>(p);
      sc.expect_end();
    } else if (kw.text == "rank") {
      if (rank) sc.fail(kw, "duplicate 'rank' line");
      Token t = sc.peek();
      const long n = sc.expect_integer();
      if (n < 1 || n > kMaxRank)
        sc.fail(t, "rank " + std::to_string(n) + " outside [1," + std::to_string(kMaxRank) + "]");
      rank = static_cast<int>(n);
      sc.expect_end();
    } else if (kw.text == "pow") {
      ensure_header(sc, kw);
      start_relations();
      Token gt;
      const int i = sc.expect_generator(*rank, &gt);
      if (power_seen[i]) sc.fail(gt, "duplicate power relation for g" + std::to_string(i + 1));
      power_seen[i] = true;
      sc.expect_symbol('=');
      pres.power[i] = parse_word(sc, *prime, *rank, i + 1);
      sc.expect_end();
    } else if (kw.text == "conj") {
      ensure_header(sc, kw);
      start_relations();
      Token jt;
      const int j = sc.expect_generator(*rank, &jt);
      sc.expect_symbol('^');
      Token it;
      const int i = sc.expect_generator(*rank, &it);
      if (i >= j) sc.fail(it, "conjugating generator must precede the conjugated one");
      if (conj_seen[i][j])
        sc.fail(jt, "duplicate conjugate relation for g" + std::to_string(j + 1) + " ^ g" +
                        std::to_string(i + 1));
      conj_seen[i][j] = true;
      sc.expect_symbol('=');
      pres.conj[i][j] = parse_word(sc, *prime, *rank, j);
      sc.expect_end();
    } else {
      sc.fail(kw, "unknown keyword '" + kw.text + "'");
    }
  }

  if (!prime) throw ParseError(block.first_line, 0, "missing 'prime' line");
  if (!rank) throw ParseError(block.first_line, 0, "missing 'rank' line");
  if (pres.rank == 0) {
    std::string name = pres.name;
    pres = PcPresentation::trivial_relations(name, *prime, *rank);
  }
  if (!named) pres.name = "G" + std::to_string(ordinal + 1);
  return pres;
}

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks;
  Block current;
  bool has_group_line = false;
  int line_no = 0;
  size_t pos = 0;
  auto flush = [&] {
    if (!current.lines.empty()) blocks.push_back(std::move(current));
    current = Block{};
    has_group_line = false;
  };
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) {
      flush();
      if (end == text.size()) break;
      continue;
    }
    const auto first = line.find_first_not_of(" \t");
    const bool is_group = line.compare(first, 5, "group") == 0 &&
                          (line.size() == first + 5 || std::isspace(static_cast<unsigned char>(line[first + 5])));
    if (is_group && (has_group_line || !current.lines.empty())) flush();
    if (is_group) has_group_line = true;
    if (current.lines.empty()) current.first_line = line_no;
    current.lines.emplace_back(line_no, line);
    if (end == text.size()) break;
  }
  flush();
  return blocks;
}

}  // namespace

std::vector<PcPresentation> parse_presentations(std::string_view text) {
  std::vector<PcPresentation> out;
  const auto blocks = split_blocks(text);
  for (size_t k = 0; k < blocks.size(); ++k)
    out.push_back(parse_block(blocks[k], static_cast<int>(k)));
  return out;
}

PcPresentation parse_presentation(std::string_view text) {
  auto list = parse_presentations(text);
  if (list.empty()) throw ParseError(1, 0, "no presentation found");
  if (list.size() > 1) throw ParseError(1, 0, "expected a single presentation, found " +
                                                   std::to_string(list.size()));
  return std::move(list.front());
}

std::vector<PcPresentation> load_presentations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentations(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.message());
  }
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += '*';
    s += 'g' + std::to_string(w[k].gen + 1);
    if (w[k].exp != 1) s += '^' + std::to_string(w[k].exp);
  }
  return s;
}

std::string serialize(const PcPresentation& pres) {
  std::string s;
  s += "group " + pres.name + "\n";
  s += "prime " + std::to_string(pres.prime) + "\n";
  s += "rank " + std::to_string(pres.rank) + "\n";
  for (int i = 0; i < pres.rank; ++i)
    if (!pres.is_default_power(i))
      s += "pow g" + std::to_string(i + 1) + " = " + format_word(pres.power[i]) + "\n";
  for (int i = 0; i < pres.rank; ++i)
    for (int j = i + 1; j < pres.rank; ++j)
      if (!pres.is_default_conj(i, j))
        s += "conj g" + std::to_string(j + 1) + " ^ g" + std::to_string(i + 1) + " = " +
             format_word(pres.conj[i][j]) + "\n";
  return s;
}

std::string serialize(const std::vector<PcPresentation>& list) {
  std::string s;
  for (size_t k = 0; k < list.size(); ++k) {
    if (k) s += "\n";
    s += serialize(list[k]);
  }
  return s;
}

PcPresentation direct_product(const PcPresentation& a, const PcPresentation& b,
                              std::string name) {
  if (a.prime != b.prime) throw std::invalid_argument("direct product needs a common prime");
  if (a.rank + b.rank > kMaxRank) throw std::invalid_argument("direct product exceeds rank cap");
  if (name.empty()) name = a.name + "x" + b.name;
  PcPresentation out = PcPresentation::trivial_relations(std::move(name), a.prime, a.rank + b.rank);
  auto shift = [](const Word& w, int by) {
    Word s = w;
    for (Letter& l : s) l.gen += by;
    return s;
  };
  for (int i = 0; i < a.rank; ++i) {
    out.power[i] = a.power[i];
    for (int j = i + 1; j < a.rank; ++j) out.conj[i][j] = a.conj[i][j];
  }
  for (int i = 0; i < b.rank; ++i) {
    out.power[a.rank + i] = shift(b.power[i], a.rank);
    for (int j = i + 1; j < b.rank; ++j) out.conj[a.rank + i][a.rank + j] = shift(b.conj[i][j], a.rank);
  }
  return out;
}

}  // namespace pgroup
