#pragma once

// Oscillating tableaux and their bijection with complete matchings.
//
// Edges are labelled 1, 2, ... by decreasing right endpoint. Reading the
// matching left to right, a left endpoint row-inserts its label and a right
// endpoint deletes its label, which is then the largest entry and sits in a
// corner. Only the sequence of shapes is kept; the fillings are recovered by
// running the procedure backwards with reverse bumping.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"

namespace hermite {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  bool is_valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }
  bool empty() const { return parts.empty(); }
  auto operator<=>(const Partition&) const = default;
};

/// Row index where `big` has one more box than `small`, or -1.
inline int added_box_row(const Partition& small, const Partition& big) {
  if (big.size() != small.size() + 1) return -1;
  int row = -1;
  for (std::size_t i = 0; i < big.parts.size(); ++i) {
    int s = i < small.parts.size() ? small.parts[i] : 0;
    if (big.parts[i] == s) continue;
    if (big.parts[i] != s + 1 || row != -1) return -1;
    row = static_cast<int>(i);
  }
  if (small.parts.size() > big.parts.size()) return -1;
  return row;
}

class OscillatingTableau {
 public:
  OscillatingTableau() : shapes_{Partition{}} {}
  explicit OscillatingTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty()) throw std::domain_error("OscillatingTableau: no shapes");
    if (!shapes_.front().empty() || !shapes_.back().empty())
      throw std::domain_error("OscillatingTableau: must begin and end with the empty shape");
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
      if (!shapes_[i].is_valid()) throw std::domain_error("OscillatingTableau: invalid partition");
      if (i == 0) continue;
      const auto& a = shapes_[i - 1];
      const auto& b = shapes_[i];
      if (added_box_row(a, b) < 0 && added_box_row(b, a) < 0)
        throw std::domain_error("OscillatingTableau: consecutive shapes must differ by one box");
    }
  }

  const std::vector<Partition>& shapes() const { return shapes_; }
  /// Number of steps in the walk.
  int length() const { return static_cast<int>(shapes_.size()) - 1; }

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;

 private:
  std::vector<Partition> shapes_;
};

/// Rows of a standard filling; rows strictly increase, as do columns.
using Filling = std::vector<std::vector<int>>;

inline Partition shape_of(const Filling& f) {
  Partition p;
  for (const auto& row : f)
    if (!row.empty()) p.parts.push_back(static_cast<int>(row.size()));
  return p;
}

/// Row insertion; returns the row that grew.
inline int rsk_insert(Filling& f, int value) {
  int row = 0;
  while (true) {
    if (row == static_cast<int>(f.size())) f.emplace_back();
    auto& r = f[row];
    auto it = std::upper_bound(r.begin(), r.end(), value);
    if (it == r.end()) {
      r.push_back(value);
      return row;
    }
    std::swap(*it, value);
    ++row;
  }
}

/// Removes the last cell of `row` and reverse-bumps upwards; returns the
/// value ejected from the first row.
inline int rsk_reverse_bump(Filling& f, int row) {
  if (row < 0 || row >= static_cast<int>(f.size()) || f[row].empty())
    throw std::domain_error("rsk_reverse_bump: no cell in that row");
  if (row + 1 < static_cast<int>(f.size()) && f[row + 1].size() >= f[row].size())
    throw std::domain_error("rsk_reverse_bump: cell is not a corner");
  int value = f[row].back();
  f[row].pop_back();
  for (int r = row - 1; r >= 0; --r) {
    auto& cur = f[r];
    auto it = std::lower_bound(cur.begin(), cur.end(), value);  // first >= value
    if (it == cur.begin()) throw std::logic_error("rsk_reverse_bump: filling is not standard");
    --it;  // largest entry below value
    std::swap(*it, value);
  }
  while (!f.empty() && f.back().empty()) f.pop_back();
  return value;
}

/// Position (row, column) of value, or (-1, -1).
inline std::pair<int, int> find_in_filling(const Filling& f, int value) {
  for (std::size_t r = 0; r < f.size(); ++r)
    for (std::size_t col = 0; col < f[r].size(); ++col)
      if (f[r][col] == value) return {static_cast<int>(r), static_cast<int>(col)};
  return {-1, -1};
}

/// Label of each edge, indexed by left endpoint: edges by decreasing right
/// endpoint receive 1, 2, ...
inline std::vector<int> tableau_edge_labels(const Matching& m) {
  auto edges = m.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.right > b.right; });
  std::vector<int> label(static_cast<std::size_t>(m.size()) + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) label[edges[i].left] = static_cast<int>(i) + 1;
  return label;
}

/// The filled tableaux after each vertex, beginning with the empty filling.
inline std::vector<Filling> matching_to_fillings(const Matching& m) {
  if (!m.is_complete()) throw std::domain_error("matching_to_tableau: matching is not complete");
  auto label = tableau_edge_labels(m);
  std::vector<Filling> out{Filling{}};
  Filling f;
  for (int v = 1; v <= m.size(); ++v) {
    int w = m.mate(v);
    if (w > v) {
      rsk_insert(f, label[v]);
    } else {
      int j = label[w];
      auto [r, col] = find_in_filling(f, j);
      if (r < 0 || col + 1 != static_cast<int>(f[r].size()) ||
          (r + 1 < static_cast<int>(f.size()) && static_cast<int>(f[r + 1].size()) > col))
        throw std::logic_error("matching_to_tableau: closing label is not in a corner");
      f[r].pop_back();
      while (!f.empty() && f.back().empty()) f.pop_back();
    }
    out.push_back(f);
  }
  return out;
}

inline OscillatingTableau matching_to_tableau(const Matching& m) {
  std::vector<Partition> shapes;
  for (const auto& f : matching_to_fillings(m)) shapes.push_back(shape_of(f));
  return OscillatingTableau(std::move(shapes));
}

struct TableauDecoding {
  Matching matching;
  /// Filling after each step, index 0 is the start.
  std::vector<Filling> fillings;
};

/// Reads the shapes right to left: a growing shape places the next label in
/// the new box (an edge closes there), a shrinking shape unbumps the label of
/// the edge that opens there.
inline TableauDecoding decode_tableau(const OscillatingTableau& t) {
  const auto& shapes = t.shapes();
  const int len = t.length();
  if (len % 2 != 0) throw std::domain_error("tableau_to_matching: odd length");
  std::vector<Filling> fillings(static_cast<std::size_t>(len) + 1);
  std::vector<int> right_end(static_cast<std::size_t>(len) / 2 + 2, 0);
  Matching m(len);
  Filling f;
  int next_label = 0;
  for (int i = len; i >= 1; --i) {
    fillings[i] = f;
    const Partition& before = shapes[i - 1];
    const Partition& after = shapes[i];
    if (int row = added_box_row(after, before); row >= 0) {
      ++next_label;
      if (row == static_cast<int>(f.size())) f.emplace_back();
      f[row].push_back(next_label);
      right_end.at(next_label) = i;
    } else if (int row2 = added_box_row(before, after); row2 >= 0) {
      int j = rsk_reverse_bump(f, row2);
      m.add_edge({i, right_end.at(j)});
    } else {
      throw std::domain_error("tableau_to_matching: malformed shape sequence");
    }
    if (shape_of(f) != before) throw std::logic_error("tableau_to_matching: filling drifted from shape");
  }
  fillings[0] = f;
  return {std::move(m), std::move(fillings)};
}

inline Matching tableau_to_matching(const OscillatingTableau& t) { return decode_tableau(t).matching; }

enum class TableauStatistic {
  /// Labels that never leave the first column (pairs with nonnested edges).
  FirstColumn,
  /// Labels that never leave the first row. Agrees with the no-right-crossing
  /// weighting up to four vertices only; (1,5)(2,4)(3,6) is the first exception.
  FirstRow,
};

/// c to the number of labels satisfying the statistic over the recovered fillings.
inline Poly tableau_weight(const OscillatingTableau& t,
                           TableauStatistic stat = TableauStatistic::FirstColumn) {
  auto dec = decode_tableau(t);
  const int labels = t.length() / 2;
  std::vector<char> left_home(static_cast<std::size_t>(labels) + 1, 0);
  for (const auto& f : dec.fillings)
    for (std::size_t r = 0; r < f.size(); ++r)
      for (std::size_t col = 0; col < f[r].size(); ++col) {
        bool away = stat == TableauStatistic::FirstColumn ? col > 0 : r > 0;
        if (away) left_home[f[r][col]] = 1;
      }
  int count = 0;
  for (int j = 1; j <= labels; ++j)
    if (!left_home[j]) ++count;
  return Poly::c(count);
}

/// Every oscillating tableau of the given length.
template <class Fn>
void for_each_oscillating_tableau(int length, Fn&& fn) {
  if (length < 0 || length % 2 != 0) return;
  std::vector<Partition> walk{Partition{}};
  auto rec = [&](auto& self) -> void {
    const Partition cur = walk.back();
    int remaining = length - (static_cast<int>(walk.size()) - 1);
    if (remaining == 0) {
      if (cur.empty()) fn(OscillatingTableau(walk));
      return;
    }
    if (cur.size() < remaining) {
      for (std::size_t r = 0; r <= cur.parts.size(); ++r) {
        Partition next = cur;
        if (r == next.parts.size()) next.parts.push_back(1);
        else if (r == 0 || next.parts[r - 1] > next.parts[r]) ++next.parts[r];
        else continue;
        walk.push_back(std::move(next));
        self(self);
        walk.pop_back();
      }
    }
    for (std::size_t r = 0; r < cur.parts.size(); ++r) {
      if (r + 1 < cur.parts.size() && cur.parts[r + 1] == cur.parts[r]) continue;
      Partition next = cur;
      if (--next.parts[r] == 0) next.parts.pop_back();
      walk.push_back(std::move(next));
      self(self);
      walk.pop_back();
    }
  };
  rec(rec);
}

// ---------------------------------------------------------------------------
// Text form "-;1;11;1;-": dash for the empty shape, parts as digits, or
// comma-separated when a part exceeds 9.

inline std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  bool wide = std::any_of(p.parts.begin(), p.parts.end(), [](int v) { return v > 9; });
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (wide && i > 0) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s;
}

inline std::string format_tableau(const OscillatingTableau& t) {
  std::string s;
  for (std::size_t i = 0; i < t.shapes().size(); ++i) {
    if (i > 0) s += ";";
    s += format_partition(t.shapes()[i]);
  }
  return s;
}

inline Partition parse_partition(std::string_view text) {
  Partition p;
  if (text == "-") return p;
  if (text.empty()) throw std::invalid_argument("parse_partition: empty field");
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string part(text.substr(start, end - start));
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_partition: bad part '" + part + "'");
      p.parts.push_back(std::stoi(part));
      start = end + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("parse_partition: bad character");
      p.parts.push_back(ch - '0');
    }
  }
  if (!p.is_valid()) throw std::invalid_argument("parse_partition: parts must be positive and weakly decreasing");
  return p;
}

inline OscillatingTableau parse_tableau(std::string_view text) {
  std::vector<Partition> shapes;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    shapes.push_back(parse_partition(text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  try {
    return OscillatingTableau(std::move(shapes));
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace hermite
