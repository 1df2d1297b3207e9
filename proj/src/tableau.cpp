#include "walign/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace walign {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParseError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int mx) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rem, mx); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  int n = 0;
  for (auto& r : rows_) n += static_cast<int>(r.size());
  std::vector<int> seen(n + 1, 0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.empty()) throw ParseError("tableau has an empty interior row");
    if (i > 0 && r.size() > rows_[i - 1].size())
      throw ParseError("tableau shape is not a partition");
    for (size_t j = 0; j < r.size(); ++j) {
      int x = r[j];
      if (x < 1 || x > n) throw ParseError("tableau entry out of range: " + std::to_string(x));
      if (++seen[x] > 1) throw ParseError("tableau entry repeated: " + std::to_string(x));
      if (j > 0 && r[j - 1] >= x) throw ParseError("tableau row not increasing");
      if (i > 0 && rows_[i - 1][j] >= x) throw ParseError("tableau column not increasing");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int StandardTableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

bool is_L_slide(const HolePath& path) {
  bool seen_right = false;
  for (size_t t = 1; t < path.cells.size(); ++t) {
    bool down = path.cells[t].first > path.cells[t - 1].first;
    if (down && seen_right) return false;
    if (!down) seen_right = true;
  }
  return true;
}

SlideResult evacuation_slide(const StandardTableau& t) {
  if (t.empty()) throw DomainError("evacuation_slide on empty tableau");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& r : rows)
    for (auto& x : r) --x;
  HolePath path;
  int r = 0, c = 0;
  path.cells.emplace_back(1, 1);
  for (;;) {
    const bool has_right = c + 1 < static_cast<int>(rows[r].size());
    const bool has_below =
        r + 1 < static_cast<int>(rows.size()) && c < static_cast<int>(rows[r + 1].size());
    if (!has_right && !has_below) break;
    int right = has_right ? rows[r][c + 1] : 0;
    int below = has_below ? rows[r + 1][c] : 0;
    internal_check(!(has_right && has_below) || right != below,
                   "tie in evacuation slide; entries must be distinct");
    if (!has_below || (has_right && right < below)) {
      rows[r][c] = right;
      ++c;
    } else {
      rows[r][c] = below;
      ++r;
    }
    path.cells.emplace_back(r + 1, c + 1);
  }
  std::pair<int, int> corner{r + 1, c + 1};
  rows[r].pop_back();
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return SlideResult{StandardTableau(std::move(rows)), corner, std::move(path)};
}

StandardTableau evacuate(const StandardTableau& t) {
  const int n = t.size();
  std::vector<std::vector<int>> out;
  for (const auto& r : t.rows()) out.emplace_back(r.size(), 0);
  StandardTableau cur = t;
  for (int k = 1; k <= n; ++k) {
    SlideResult s = evacuation_slide(cur);
    out[s.corner.first - 1][s.corner.second - 1] = n - k + 1;
    cur = std::move(s.tableau);
  }
  return StandardTableau(std::move(out));
}

std::vector<HolePath> evacuation_paths(const StandardTableau& t) {
  std::vector<HolePath> paths;
  StandardTableau cur = t;
  const int n = t.size();
  for (int k = 0; k < n; ++k) {
    SlideResult s = evacuation_slide(cur);
    paths.push_back(std::move(s.path));
    cur = std::move(s.tableau);
  }
  return paths;
}

Permutation reading_word(const StandardTableau& t) {
  std::vector<int> word;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return word.empty() ? Permutation() : Permutation(std::move(word));
}

Permutation top_down_reading_word(const StandardTableau& t) {
  std::vector<int> word;
  for (const auto& r : t.rows()) word.insert(word.end(), r.begin(), r.end());
  return word.empty() ? Permutation() : Permutation(std::move(word));
}

StandardTableau crop(const StandardTableau& t) {
  if (t.rows().size() <= 1) return StandardTableau();
  std::vector<int> vals;
  for (size_t i = 1; i < t.rows().size(); ++i)
    vals.insert(vals.end(), t.rows()[i].begin(), t.rows()[i].end());
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> rank;
  for (size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> rows;
  for (size_t i = 1; i < t.rows().size(); ++i) {
    std::vector<int> r;
    for (int x : t.rows()[i]) r.push_back(rank[x]);
    rows.push_back(std::move(r));
  }
  return StandardTableau(std::move(rows));
}

bool is_richardson(const StandardTableau& t) {
  if (t.rows().size() <= 1) return true;
  const auto& first = t.rows()[0];
  for (int j : t.rows()[1])
    if (!std::binary_search(first.begin(), first.end(), j - 1)) return false;
  return is_richardson(crop(t));
}

ColumnStripDecomposition column_strip_decomposition(const StandardTableau& t) {
  if (!is_richardson(t)) throw DomainError("column_strip_decomposition: tableau not Richardson");
  ColumnStripDecomposition out;
  const int n = t.size();
  std::vector<int> first = t.rows().empty() ? std::vector<int>{} : t.rows()[0];
  first.push_back(n + 1);
  for (size_t i = 0; i + 1 < first.size(); ++i) {
    std::vector<int> block;
    for (int x = first[i]; x < first[i + 1]; ++x) block.push_back(x);
    out.blocks.push_back(std::move(block));
  }
  // verify the column-strip property: within a block, at most one entry per row
  std::map<int, int> row_of;
  for (size_t i = 0; i < t.rows().size(); ++i)
    for (int x : t.rows()[i]) row_of[x] = static_cast<int>(i);
  for (const auto& block : out.blocks) {
    std::set<int> rows_used;
    for (int x : block)
      internal_check(rows_used.insert(row_of[x]).second,
                     "column-strip property violated in a Richardson tableau");
  }
  return out;
}

std::pair<Permutation, Permutation> richardson_pair(const StandardTableau& t) {
  if (t.empty()) return {Permutation(), Permutation()};
  const int n = t.size();
  Permutation v = inverse(top_down_reading_word(evacuate(t)));
  Permutation wo = Permutation::longest(n);
  Permutation w = compose(wo, compose(inverse(reading_word(t)), wo));
  return {std::move(v), std::move(w)};
}

std::vector<StandardTableau> generate_syt(const Partition& shape) {
  const int n = shape.size();
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, 0);
  std::vector<int> fill(rows.size(), 0);  // boxes filled per row
  std::vector<StandardTableau> out;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (fill[i] == static_cast<int>(rows[i].size())) continue;
      if (i > 0 && fill[i - 1] <= fill[i]) continue;
      rows[i][fill[i]++] = k;
      self(self, k + 1);
      rows[i][--fill[i]] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<StandardTableau> generate_richardson(const Partition& shape) {
  std::vector<StandardTableau> out;
  for (auto& t : generate_syt(shape))
    if (is_richardson(t)) out.push_back(std::move(t));
  return out;
}

StandardTableau parse_tableau(const std::string& text) {
  // structured form first
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("rows"))
      throw ParseError("bad structured tableau: expected {\"shape\":..., \"rows\":...}");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j["rows"]) rows.push_back(r.get<std::vector<int>>());
    StandardTableau t(std::move(rows));
    if (j.contains("shape")) {
      Partition declared(j["shape"].get<std::vector<int>>());
      if (declared != t.shape()) throw ParseError("declared shape disagrees with rows");
    }
    return t;
  }
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> r;
    int x;
    while (ls >> x) r.push_back(x);
    if (!ls.eof()) throw ParseError("bad tableau entry in line: " + line);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return StandardTableau(std::move(rows));
}

std::string to_string(const StandardTableau& t) {
  std::string out;
  for (const auto& r : t.rows()) {
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(r[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace walign
