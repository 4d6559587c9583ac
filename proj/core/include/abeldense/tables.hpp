#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abeldense {

enum class GroupClass {
  gl_complex,
  diag_complex_to_gl,
  gl_real_even,
  gl_real_odd,
  toeplitz_complex,
  toeplitz_real,
  triangular_real,
  triangular_complex,
  diagonal_real,
};

struct GroupCount {
  std::size_t m = 0;
  std::size_t dim_v = 0;  // real dimension of the space acted on
  std::size_t dim_t = 0;  // dimension of the maximal torus
  std::string torus;
  std::string h;
};

// m(G) = 1 + dim V - dim T for matrices of size n. Throws InputError on
// parity mismatch or unsupported size.
GroupCount m_of_G(GroupClass c, std::size_t n);

std::string to_string(GroupClass c);
std::optional<GroupClass> parse_group_class(std::string_view name);
const std::vector<GroupClass>& all_group_classes();
bool size_supported(GroupClass c, std::size_t n);

struct TableRow {
  std::string label;
  GroupClass group_class;
};

struct TableCell {
  std::string label;
  std::size_t n = 0;
  std::optional<std::size_t> value;  // empty where the size is not applicable
};

// Rows of table 1 (real), 2 (complex) or 3 (by group, with T and H).
std::vector<TableRow> table_rows(int which);
std::vector<TableCell> compute_table(int which, std::size_t n_min, std::size_t n_max);

}  // namespace abeldense
