#include "abeldense/tables.hpp"

#include <array>
#include <stdexcept>

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

struct ClassInfo {
  GroupClass c;
  const char* name;
  // Closed-form counts as tabulated; checked against 1 + dim V - dim T.
  std::size_t (*stored)(std::size_t n);
  std::size_t (*dim_v)(std::size_t n);
  std::size_t (*dim_t)(std::size_t n);
  const char* torus;
  const char* h;
  bool (*supported)(std::size_t n);
};

bool any_size(std::size_t n) { return n >= 1; }
bool even_size(std::size_t n) { return n >= 2 && n % 2 == 0; }
bool odd_size(std::size_t n) { return n % 2 == 1; }
bool at_least_two(std::size_t n) { return n >= 2; }

const std::array<ClassInfo, 9>& registry() {
  static const std::array<ClassInfo, 9> r{{
      {GroupClass::gl_complex, "GL_C", [](std::size_t n) { return n + 1; }, [](std::size_t n) { return 2 * n; },
       [](std::size_t n) { return n; }, "(S^1)^n", "(C*)^n", any_size},
      {GroupClass::diag_complex_to_gl, "DiagC_to_GLC", [](std::size_t n) { return n + 1; },
       [](std::size_t n) { return 2 * n; }, [](std::size_t n) { return n; }, "(S^1)^n", "(C*)^n", any_size},
      {GroupClass::gl_real_even, "GL_R_even", [](std::size_t n) { return (n + 2) / 2; },
       [](std::size_t n) { return n; }, [](std::size_t n) { return n / 2; }, "SO(2)^m",
       "(R*>0 . SO(2))^m", even_size},
      {GroupClass::gl_real_odd, "GL_R_odd", [](std::size_t n) { return (n + 3) / 2; }, [](std::size_t n) { return n; },
       [](std::size_t n) { return (n - 1) / 2; }, "SO(2)^m", "(R*>0 . SO(2))^m x R*>0", odd_size},
      {GroupClass::toeplitz_complex, "ToeplitzC", [](std::size_t n) { return 2 * n; },
       [](std::size_t n) { return 2 * n; }, [](std::size_t) -> std::size_t { return 1; }, "S^1", "G", any_size},
      {GroupClass::toeplitz_real, "ToeplitzR", [](std::size_t n) { return n + 1; }, [](std::size_t n) { return n; },
       [](std::size_t) -> std::size_t { return 0; }, "1", "G^0", any_size},
      {GroupClass::triangular_real, "TriangularR", [](std::size_t n) { return n + 1; },
       [](std::size_t n) { return n; }, [](std::size_t) -> std::size_t { return 0; }, "1", "real Toeplitz", any_size},
      {GroupClass::triangular_complex, "TriangularC", [](std::size_t n) { return n + 2; },
       [](std::size_t n) { return 2 * n; }, [](std::size_t n) { return n - 1; }, "(S^1)^(n-1)",
       "(C*)^(n-2) x complex Toeplitz(2)", at_least_two},
      {GroupClass::diagonal_real, "DiagR", [](std::size_t n) { return n + 1; }, [](std::size_t n) { return n; },
       [](std::size_t) -> std::size_t { return 0; }, "1", "(R*>0)^n", any_size},
  }};
  return r;
}

const ClassInfo& info(GroupClass c) {
  for (const auto& i : registry())
    if (i.c == c) return i;
  throw std::logic_error("unregistered group class");
}

// Double-entry check over the sizes the tables cover, run once.
void self_check() {
  static const bool ok = [] {
    for (const auto& i : registry())
      for (std::size_t n = 1; n <= 64; ++n) {
        if (!i.supported(n)) continue;
        if (1 + i.dim_v(n) - i.dim_t(n) != i.stored(n))
          throw std::logic_error(std::string("generator count table mismatch for ") + i.name + " at n=" +
                                 std::to_string(n));
      }
    return true;
  }();
  (void)ok;
}

}  // namespace

const std::vector<GroupClass>& all_group_classes() {
  static const std::vector<GroupClass> v = [] {
    std::vector<GroupClass> out;
    for (const auto& i : registry()) out.push_back(i.c);
    return out;
  }();
  return v;
}

std::string to_string(GroupClass c) { return info(c).name; }

std::optional<GroupClass> parse_group_class(std::string_view name) {
  for (const auto& i : registry())
    if (name == i.name) return i.c;
  return std::nullopt;
}

bool size_supported(GroupClass c, std::size_t n) { return info(c).supported(n); }

GroupCount m_of_G(GroupClass c, std::size_t n) {
  self_check();
  const ClassInfo& i = info(c);
  if (!i.supported(n)) throw InputError("size " + std::to_string(n) + " is not valid for class " + i.name);
  GroupCount g;
  g.dim_v = i.dim_v(n);
  g.dim_t = i.dim_t(n);
  g.m = 1 + g.dim_v - g.dim_t;
  g.torus = i.torus;
  g.h = i.h;
  return g;
}

std::vector<TableRow> table_rows(int which) {
  switch (which) {
    case 1:
      return {{"Commuting", GroupClass::gl_real_even},
              {"Diagonal", GroupClass::diagonal_real},
              {"Triangular non-diagonalizable", GroupClass::triangular_real},
              {"Triangular Toeplitz non-diagonalizable", GroupClass::toeplitz_real}};
    case 2:
      return {{"Commuting", GroupClass::gl_complex},
              {"Diagonal", GroupClass::diag_complex_to_gl},
              {"Triangular non-diagonalizable", GroupClass::triangular_complex},
              {"Triangular Toeplitz non-diagonalizable", GroupClass::toeplitz_complex}};
    case 3:
      return {{"GL(n,C)", GroupClass::gl_complex},
              {"(C*)^n in G in GL(n,C)", GroupClass::diag_complex_to_gl},
              {"GL(2m,R)", GroupClass::gl_real_even},
              {"GL(2m+1,R)", GroupClass::gl_real_odd},
              {"complex n x n Toeplitz", GroupClass::toeplitz_complex},
              {"real n x n Toeplitz", GroupClass::toeplitz_real},
              {"real triangular", GroupClass::triangular_real}};
    default:
      throw InputError("table must be 1, 2 or 3");
  }
}

std::vector<TableCell> compute_table(int which, std::size_t n_min, std::size_t n_max) {
  std::vector<TableCell> out;
  for (const auto& row : table_rows(which)) {
    for (std::size_t n = n_min; n <= n_max; ++n) {
      GroupClass c = row.group_class;
      // Table 1 "Commuting" switches class with the parity of n.
      if (which == 1 && c == GroupClass::gl_real_even && n % 2 == 1) c = GroupClass::gl_real_odd;
      TableCell cell{row.label, n, std::nullopt};
      if (size_supported(c, n)) cell.value = m_of_G(c, n).m;
      out.push_back(cell);
    }
  }
  return out;
}

}  // namespace abeldense
