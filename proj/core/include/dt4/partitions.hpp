#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dt4/vars.hpp"

namespace dt4 {

using Box = std::array<int16_t, 4>;

// Finite downward-closed subset of Z^4_{>=0}; boxes kept sorted
// lexicographically, which is the canonical enumeration order throughout.
class SolidPartition {
 public:
  SolidPartition() = default;
  explicit SolidPartition(std::vector<Box> boxes);

  std::size_t size() const { return boxes_.size(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool contains(const Box& b) const;
  bool downward_closed() const;

  // |{(a,a,a,d) in pi : a < d}|
  int diagonal_pairs() const;

  std::string str() const;  // "i,j,k,l;i,j,k,l;..."
  static SolidPartition parse(const std::string& line);

  bool operator==(const SolidPartition&) const = default;
  auto operator<=>(const SolidPartition&) const = default;

 private:
  std::vector<Box> boxes_;
};

// Diagonal abelian subgroup of the Calabi-Yau torus: generator a of order
// orders[a] acts on coordinate i by the character exponent weights[a][i].
class GroupAction {
 public:
  GroupAction() = default;
  GroupAction(std::string spec, std::vector<int> orders, std::vector<std::array<int, 4>> weights);

  static GroupAction trivial();
  static GroupAction zr(int r);
  static GroupAction z2z2();
  static GroupAction z3age2();
  // trivial | zr:R | z2z2 | z3age2 | custom:orders=..,..;W=a,b,c,d;e,f,g,h
  static GroupAction parse(const std::string& spec);

  const std::string& spec() const { return spec_; }
  const std::vector<int>& orders() const { return orders_; }
  const std::vector<std::array<int, 4>>& weights() const { return weights_; }
  bool is_trivial() const { return orders_.empty(); }

  int num_chars() const { return nchars_; }
  const std::string& char_name(int c) const { return char_names_[static_cast<std::size_t>(c)]; }
  const std::vector<std::string>& char_names() const { return char_names_; }
  int char_index_by_name(const std::string& nm) const;

  // mixed-radix index of a character tuple and back
  int char_index(const std::vector<int>& tuple) const;
  std::vector<int> char_tuple(int index) const;

  int color_of(const Box& b) const;
  // G-weight of an integral monomial exponent over (t1..t4), y ignored
  int color_of_texp(const std::array<int64_t, 4>& e) const;

  // series variable names: q for the trivial group, q<label> otherwise
  std::vector<std::string> series_var_names() const;

  bool su4_condition_holds() const;

 private:
  std::string spec_;
  std::vector<int> orders_;
  std::vector<std::array<int, 4>> weights_;
  std::vector<std::string> char_names_;
  int nchars_ = 1;
};

using ColorProfile = std::vector<int32_t>;

ColorProfile color_counts(const SolidPartition& pi, const GroupAction& g);

// sigma_pi = |pi| + diag, or |pi|_{R_0} + diag with the group
int sign_exponent(const SolidPartition& pi, const GroupAction* g);

// every solid partition of size n, canonical lexicographic order
void for_each_partition(int n, const std::function<void(const SolidPartition&)>& fn);
std::vector<SolidPartition> enumerate_solid_partitions(int n, const std::string& cache_dir = "");

// size determined by the profile total; DFS prunes on colour-count overflow
std::vector<SolidPartition> enumerate_colored(const ColorProfile& profile, const GroupAction& g);

// cache files partitions/n{N}.txt, one partition per line, header with count
std::string cache_file(const std::string& dir, int n);
void write_cache(const std::string& dir, int n, const std::vector<SolidPartition>& ps);
std::optional<std::vector<SolidPartition>> read_cache(const std::string& dir, int n);

}  // namespace dt4
