#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "csf/symfunc.hpp"

namespace csf {

// A filling of a left-justified row diagram with the labels 1..n, each
// used exactly once; rows listed top to bottom.
struct FTableau {
  std::vector<std::vector<int>> rows;

  auto operator<=>(const FTableau&) const = default;

  Composition shape() const;
  int size() const;
  std::string to_string() const;               // "2,1,5,6;4,3;8,7"
  static FTableau parse(const std::string&);   // inverse of to_string
};

// Columns strictly increase downwards in the order of f, and no entry
// strictly precedes its left neighbour.
bool is_f_tableau(const HessenbergFunction& f, const FTableau& t);

// All f-tableaux of the given shape (shape entries may be any non-negative
// composition; non-partition shapes yield the empty list), canonically
// sorted by row contents.
std::vector<FTableau> enumerate_tableaux(const HessenbergFunction& f, const Composition& shape);

Int count_d(const HessenbergFunction& f, const Composition& shape);

// Schur expansion of omega X_{G(f)}: sum over partitions of d_lam s_lam.
SymExpansion schur_expansion(const HessenbergFunction& f);

// Moves the rightmost `width` entries of row `from_row` to the end of row
// `to_row` (rows are 1-based); a row emptied by the move is dropped.
FTableau sigma_move(const FTableau& t, int from_row, int to_row, int width);

// Splits columns 1..m off every row as a left block.
std::pair<FTableau, FTableau> split_left(const FTableau& t, int m);
// Glues S to the right of the rectangle block R, row by row.
FTableau concat_tableaux(const FTableau& r, const FTableau& s);

// Memoised per-function tableau sets, keyed by shape.
class TableauCache {
 public:
  explicit TableauCache(const HessenbergFunction& f) : f_(f) {}
  const std::vector<FTableau>& set_of(const Composition& shape);
  Int count(const Composition& shape) { return (Int)set_of(shape).size(); }
  const HessenbergFunction& function() const { return f_; }

 private:
  HessenbergFunction f_;
  std::map<Composition, std::vector<FTableau>> cache_;
};

}  // namespace csf
