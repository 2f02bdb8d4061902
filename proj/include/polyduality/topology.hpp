#ifndef POLYDUALITY_TOPOLOGY_HPP
#define POLYDUALITY_TOPOLOGY_HPP

// Homology of the fibers C_{pi,a} (fixed perimeter and area) by two routes:
// a closed-form evaluator and a Mayer-Vietoris rank solver over the cell
// structures of the sublevel set A, the superlevel set B and A u B = CP^{n-2}.
// All groups are free; only ranks are tracked.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polyduality/error.hpp"
#include "polyduality/stratification.hpp"

namespace polyduality {

/// Dimensions of the cells of a CW complex (even, one cell each here).
struct CellComplexDescriptor {
  std::vector<int> cell_dims;  // ascending

  bool contains(int d) const {
    return std::binary_search(cell_dims.begin(), cell_dims.end(), d);
  }
  int max_dim() const { return cell_dims.empty() ? -1 : cell_dims.back(); }

  friend bool operator==(const CellComplexDescriptor&, const CellComplexDescriptor&) = default;
};

/// One cell in each even dimension 0, 2, ..., top (empty when top < 0).
inline CellComplexDescriptor even_cells_up_to(int top) {
  CellComplexDescriptor d;
  for (int j = 0; j <= top; j += 2) d.cell_dims.push_back(j);
  return d;
}

struct HomologyTable {
  std::map<int, int> ranks;  // every degree in [0, top_degree]
  int top_degree = 0;

  int rank(int j) const {
    const auto it = ranks.find(j);
    return it == ranks.end() ? 0 : it->second;
  }

  /// Degrees with nonzero rank.
  std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& [j, r] : ranks)
      if (r != 0) out.push_back(j);
    return out;
  }

  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

inline HomologyTable table_from_support(const std::set<int>& degrees, int top_degree) {
  HomologyTable t;
  t.top_degree = top_degree;
  for (int j = 0; j <= top_degree; ++j) t.ranks[j] = degrees.count(j) ? 1 : 0;
  return t;
}

struct AbDescriptors {
  CellComplexDescriptor a;
  CellComplexDescriptor b;
  CellComplexDescriptor united;
};

inline void validate_label(int n, const RegionLabel& label) {
  if (n < 3) throw InvalidSpec("n must be at least 3");
  switch (label.kind) {
    case RegionLabel::Kind::Outside:
      throw OutsideRegion("the point lies outside the image of (perimeter, area)");
    case RegionLabel::Kind::Chamber:
      if (label.index < 1 || label.index > 2 * n - 5 || label.index % 2 == 0) {
        throw InvalidSpec("chamber label must be odd in [1, 2n-5], got W" +
                          std::to_string(label.index));
      }
      break;
    case RegionLabel::Kind::Curve:
      if (label.index < 0 || label.index > 2 * n - 4 || label.index % 2 != 0) {
        throw InvalidSpec("curve label must be even in [0, 2n-4], got D" +
                          std::to_string(label.index));
      }
      break;
    case RegionLabel::Kind::ZeroArea:
      break;
  }
}

/// Cell structures of A (sublevel), B (superlevel) and their union CP^{n-2}.
inline AbDescriptors ab_descriptors(int n, const RegionLabel& label) {
  validate_label(n, label);
  AbDescriptors d;
  d.united = even_cells_up_to(2 * n - 4);
  RegionLabel l = label.kind == RegionLabel::Kind::ZeroArea ? resolve_zero_area(n) : label;
  if (l.kind == RegionLabel::Kind::Chamber) {
    d.a = even_cells_up_to(l.index - 1);
    d.b = even_cells_up_to(2 * n - 5 - l.index);
  } else {
    d.a = even_cells_up_to(l.index);
    d.b = even_cells_up_to(2 * n - 4 - l.index);
  }
  return d;
}

/// One even degree j of the Mayer-Vietoris sequence, kept for display.
struct MayerVietorisRow {
  int degree = 0;
  int a = 0;
  int b = 0;
  int united = 0;
};

struct MayerVietorisSolution {
  HomologyTable intersection;
  std::vector<MayerVietorisRow> rows;  // every degree 0..max(united), ascending
};

/// Solve 0 -> H_j(A n B) -> H_j(A) + H_j(B) -> H_j(A u B) -> H_{j-1}(A n B) -> 0
/// for each even j, with the middle map surjective whenever its source is
/// nonzero (each cell of A or B carries the generator of H_j(A u B)).
inline MayerVietorisSolution mv_solve_detailed(const CellComplexDescriptor& a,
                                               const CellComplexDescriptor& b,
                                               const CellComplexDescriptor& united) {
  auto check = [](const CellComplexDescriptor& d, const char* name) {
    for (std::size_t k = 0; k < d.cell_dims.size(); ++k) {
      const int dim = d.cell_dims[k];
      if (dim < 0 || dim % 2 != 0) {
        throw MalformedDescriptors(std::string(name) + " has a cell of non-even dimension");
      }
      if (k > 0 && d.cell_dims[k - 1] >= dim) {
        throw MalformedDescriptors(std::string(name) + " cell dimensions must strictly increase");
      }
    }
  };
  check(a, "A");
  check(b, "B");
  check(united, "A u B");
  if (united.cell_dims.empty()) throw MalformedDescriptors("A u B has no cells");
  for (int d : a.cell_dims)
    if (!united.contains(d)) throw MalformedDescriptors("A is not contained in A u B");
  for (int d : b.cell_dims)
    if (!united.contains(d)) throw MalformedDescriptors("B is not contained in A u B");

  const int top = united.max_dim();
  std::map<int, int> h;
  MayerVietorisSolution sol;
  for (int j = 0; j <= top; ++j) {
    MayerVietorisRow row{j, a.contains(j) ? 1 : 0, b.contains(j) ? 1 : 0, united.contains(j) ? 1 : 0};
    sol.rows.push_back(row);
    if (j % 2 != 0) continue;
    const int source = row.a + row.b;
    if (row.united == 1 && source >= 1) {
      h[j] = source - 1;
      if (j > 0) h[j - 1] = 0;
    } else if (row.united == 1) {
      h[j] = 0;
      if (j > 0) h[j - 1] = 1;
    } else {
      h[j] = source;
      if (j > 0) h[j - 1] = 0;
    }
  }

  sol.intersection.top_degree = top - 1;
  for (const auto& [j, r] : h) {
    if (r != 0) sol.intersection.top_degree = std::max(sol.intersection.top_degree, j);
  }
  for (int j = 0; j <= sol.intersection.top_degree; ++j) {
    const auto it = h.find(j);
    sol.intersection.ranks[j] = it == h.end() ? 0 : it->second;
  }
  return sol;
}

inline HomologyTable mv_solve(const CellComplexDescriptor& a, const CellComplexDescriptor& b,
                              const CellComplexDescriptor& united) {
  return mv_solve_detailed(a, b, united).intersection;
}

/// Ranks of H_j(C_{pi,a}) from the closed-form description.
///
/// Labels above n-2 are first reflected i -> 2n-4-i (area sign flip). For
/// singular fibers D_i, 0 < i, the odd ranks start at 2n-3-i; for the
/// zero-area fiber of odd n they start at n-2.
inline HomologyTable homology_closed_form(int n, const RegionLabel& label) {
  validate_label(n, label);
  const int dim = 2 * n - 5;
  std::set<int> degrees;
  auto add_even_upto = [&](int top) {
    for (int j = 0; j <= top; j += 2) degrees.insert(j);
  };
  auto add_odd_between = [&](int lo, int hi) {
    for (int j = lo; j <= hi; ++j)
      if (j % 2 != 0) degrees.insert(j);
  };

  if (label.kind == RegionLabel::Kind::ZeroArea) {
    if (n % 2 == 0) {
      add_even_upto(n - 2);
      add_odd_between(n - 1, dim);
    } else {
      add_even_upto(n - 3);
      add_odd_between(n - 2, dim);
    }
    return table_from_support(degrees, dim);
  }

  int i = label.index;
  if (i > n - 2) i = 2 * n - 4 - i;
  if (label.kind == RegionLabel::Kind::Chamber) {
    add_even_upto(i);
    add_odd_between(2 * n - 4 - i, dim);
  } else if (i == 0) {
    degrees.insert(0);
  } else {
    add_even_upto(i);
    add_odd_between(2 * n - 3 - i, dim);
  }
  return table_from_support(degrees, dim);
}

inline int euler_characteristic(const HomologyTable& t) {
  int chi = 0;
  for (const auto& [j, r] : t.ranks) chi += (j % 2 == 0 ? r : -r);
  return chi;
}

/// rank(j) == rank(dim - j) for every j in [0, dim].
inline bool poincare_check(const HomologyTable& t, int dim) {
  for (int j = 0; j <= dim; ++j) {
    if (t.rank(j) != t.rank(dim - j)) return false;
  }
  for (const auto& [j, r] : t.ranks) {
    if (r != 0 && (j < 0 || j > dim)) return false;
  }
  return true;
}

/// Betti numbers of the space of polygons with fixed nonzero area: one even
/// cell in each dimension 0..2*floor((n+1)/2)-4.
inline HomologyTable c_a_betti(int n, int sign) {
  if (n < 3) throw InvalidSpec("n must be at least 3");
  if (sign != 1 && sign != -1) throw InvalidSpec("sign must be +1 or -1");
  const int top = 2 * ((n + 1) / 2) - 4;
  std::set<int> degrees;
  for (int j = 0; j <= top; j += 2) degrees.insert(j);
  return table_from_support(degrees, top);
}

/// The zero-area polygons are C_{pi,0} x R_{>0}.
inline HomologyTable c_zero_area_betti(int n) {
  return homology_closed_form(n, RegionLabel::zero_area());
}

}  // namespace polyduality

#endif  // POLYDUALITY_TOPOLOGY_HPP
