#ifndef WALIGN_TABLEAU_HPP
#define WALIGN_TABLEAU_HPP

#include <string>
#include <utility>
#include <vector>

#include "walign/perm.hpp"

namespace walign {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int rows() const { return static_cast<int>(parts_.size()); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);

// Standard Young tableau: entries 1..n, rows and columns strictly increasing.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }

  auto operator<=>(const StandardTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Cells (row, column), 1-indexed, visited by the hole in one slide.
struct HolePath {
  std::vector<std::pair<int, int>> cells;
};

// Step directions change from all-down to all-right at most once
// (equivalently: every down-step precedes every right-step, per the
// shape of the letter L).
bool is_L_slide(const HolePath& path);

struct SlideResult {
  StandardTableau tableau;          // one box smaller
  std::pair<int, int> corner;       // vacated cell
  HolePath path;
};
SlideResult evacuation_slide(const StandardTableau& t);

StandardTableau evacuate(const StandardTableau& t);

// All hole paths encountered while evacuating t, in slide order.
std::vector<HolePath> evacuation_paths(const StandardTableau& t);

Permutation reading_word(const StandardTableau& t);           // bottom row first
Permutation top_down_reading_word(const StandardTableau& t);  // top row first

// Every second-row entry j has j-1 in the first row, recursively after crop.
bool is_richardson(const StandardTableau& t);

// Rows 2..end, entries standardized to 1..|crop|.
StandardTableau crop(const StandardTableau& t);

struct ColumnStripDecomposition {
  std::vector<std::vector<int>> blocks;  // consecutive runs, one per first-row entry
};
ColumnStripDecomposition column_strip_decomposition(const StandardTableau& t);

// (v_T, w_T): v_T = (top-down reading word of evac(T))^{-1},
// w_T = w_o (reading word of T)^{-1} w_o.
std::pair<Permutation, Permutation> richardson_pair(const StandardTableau& t);

std::vector<StandardTableau> generate_syt(const Partition& shape);
std::vector<StandardTableau> generate_richardson(const Partition& shape);

// Plain format: one row per line, entries space-separated. The structured
// format is a JSON object {"shape": [...], "rows": [[...], ...]}.
StandardTableau parse_tableau(const std::string& text);

std::string to_string(const StandardTableau& t);

}  // namespace walign

#endif
