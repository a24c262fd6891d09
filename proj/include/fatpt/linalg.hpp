#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fatpt/rational.hpp"

namespace fatpt {

/// Incremental exact row echelon form over Q. Rows are sparse vectors
/// sorted by a "greater first" column comparator; the pivot of a row is its
/// first entry. Pivot rows are kept monic.
template <class Column, class Greater>
class EchelonBasis {
 public:
  using Entry = std::pair<Column, Rational>;
  using Row = std::vector<Entry>;

  explicit EchelonBasis(Greater greater = Greater()) : greater_(greater), pivots_(greater) {}

  std::size_t rank() const { return pivots_.size(); }

  bool hasPivot(const Column& c) const { return pivots_.count(c) != 0; }

  /// Reduces `row` by the pivots until its lead is not a pivot column.
  /// Returns the reduced row (empty iff row lies in the span).
  Row reduceLead(Row row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      row = axpy(row, Rational(-row.front().second), it->second);
    }
    return row;
  }

  /// Fully reduces every entry against the pivots.
  Row reduceFully(Row row) const {
    Row out;
    while (!row.empty()) {
      row = reduceLead(std::move(row));
      if (row.empty()) break;
      out.push_back(row.front());
      row.erase(row.begin());
    }
    return out;
  }

  bool contains(const Row& row) const { return reduceLead(row).empty(); }

  /// Inserts the row; returns true when it enlarged the span.
  bool insert(Row row) {
    row = reduceLead(std::move(row));
    if (row.empty()) return false;
    Rational inv = 1 / row.front().second;
    for (auto& e : row) e.second *= inv;
    Column lead = row.front().first;
    pivots_.emplace(std::move(lead), std::move(row));
    return true;
  }

  /// Reduced row echelon basis, rows ordered by descending pivot.
  std::vector<Row> reducedRows() const {
    std::vector<Row> out;
    out.reserve(pivots_.size());
    EchelonBasis done(greater_);
    // Processing from the smallest pivot upward lets each row be reduced
    // against already reduced rows.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Row row = it->second;
      Row tail(row.begin() + 1, row.end());
      Row reduced;
      reduced.push_back(row.front());
      Row t = done.reduceFully(std::move(tail));
      reduced.insert(reduced.end(), t.begin(), t.end());
      done.pivots_.emplace(reduced.front().first, reduced);
    }
    for (auto& [c, row] : done.pivots_) out.push_back(row);
    return out;
  }

 private:
  /// a + s*b for sparse sorted rows.
  Row axpy(const Row& a, const Rational& s, const Row& b) const {
    Row r;
    r.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (greater_(i->first, j->first)) {
        r.push_back(*i++);
      } else if (greater_(j->first, i->first)) {
        r.emplace_back(j->first, s * j->second);
        ++j;
      } else {
        Rational v = i->second + s * j->second;
        if (v != 0) r.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    for (; i != a.end(); ++i) r.push_back(*i);
    for (; j != b.end(); ++j) r.emplace_back(j->first, s * j->second);
    return r;
  }

  Greater greater_;
  std::map<Column, Row, Greater> pivots_;
};

}  // namespace fatpt
