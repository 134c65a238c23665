#include "dav/registry.hpp"

#include <functional>

#include "dav/constructors.hpp"
#include "dav/errors.hpp"

namespace dav {

namespace {

Group k4_rtimes_c4() {
  // C4 acts on C2xC2 by swapping the coordinates
  Group k4 = direct_product(cyclic(2), cyclic(2));
  Automorphism swap{{0, 2, 1, 3}};
  Automorphism id{{0, 1, 2, 3}};
  return semidirect_general(k4, cyclic(4), {id, swap, id, swap});
}

Group pauli_group() {
  // (C4 x C2) x|_phi C2 with phi fixing a and sending b to a^2 b; this is the
  // action with a central C4, which pins down the Pauli group among the
  // order-16 candidates.
  Group a = direct_product(cyclic(4), cyclic(2));
  std::vector<std::uint8_t> phi(8), id(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      id[static_cast<std::size_t>(i * 2 + j)] = static_cast<std::uint8_t>(i * 2 + j);
      phi[static_cast<std::size_t>(i * 2 + j)] = static_cast<std::uint8_t>(((i + 2 * j) % 4) * 2 + j);
    }
  return semidirect_general(a, cyclic(2), {Automorphism{id}, Automorphism{phi}});
}

Group c3_rtimes_dih8() {
  // Dih8 acts on C3 through its quotient by the Klein subgroup <r^2, s>:
  // elements with odd rotation part invert.
  Group dih8 = dihedral(8);
  std::vector<std::uint8_t> id{0, 1, 2}, inv{0, 2, 1};
  std::vector<Automorphism> action;
  for (int h = 0; h < 8; ++h) action.push_back(Automorphism{(h / 2) % 2 ? inv : id});
  return semidirect_general(cyclic(3), dih8, action);
}

Group a4() { return perm_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}); }  // (123), (234)
Group s4() { return perm_group(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}); }  // (1234), (12)

using Builder = std::function<Group()>;

struct Entry {
  TableRow row;
  Builder build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto add = [&t](int m, int n, const char* name, int d, int beta, int big_d, const char* src,
                    Builder b) { t.push_back({{{m, n}, name, d, beta, big_d, src}, std::move(b)}); };
    add(6, 1, "S3", 3, 4, 6, "index-two", [] { return dihedral(6); });
    add(8, 3, "Dih8", 4, 5, 6, "index-two", [] { return dihedral(8); });
    add(8, 4, "Q8", 4, 6, 6, "index-two", [] { return dicyclic(8); });
    add(10, 1, "Dih10", 5, 6, 10, "index-two", [] { return dihedral(10); });
    add(12, 1, "Dic12", 6, 8, 9, "index-two", [] { return dicyclic(12); });
    add(12, 3, "A4", 4, 6, 7, "tabulated", a4);
    add(12, 4, "Dih12", 6, 7, 9, "index-two", [] { return dihedral(12); });
    add(14, 1, "Dih14", 7, 8, 14, "index-two", [] { return dihedral(14); });
    add(16, 3, "(C2xC2):C4", 5, 6, 7, "reduction-bounds", k4_rtimes_c4);
    add(16, 4, "C4:C4", 6, 7, 8, "reduction-bounds", [] { return semidirect_cyclic(4, 4, 3); });
    add(16, 6, "M16", 8, 9, 10, "index-two", [] { return modular(2, 4); });
    add(16, 7, "Dih16", 8, 9, 12, "index-two", [] { return dihedral(16); });
    add(16, 8, "SD16", 8, 9, 12, "index-two", [] { return semidihedral(16); });
    add(16, 9, "Dic16", 8, 10, 12, "index-two", [] { return dicyclic(16); });
    add(16, 11, "Dih8xC2", 5, 6, 7, "generalized-dihedral",
        [] { return direct_product(dihedral(8), cyclic(2)); });
    add(16, 12, "Q8xC2", 5, 7, 7, "reduction-bounds",
        [] { return direct_product(dicyclic(8), cyclic(2)); });
    add(16, 13, "Pauli", 5, 7, 7, "tabulated", pauli_group);
    add(18, 1, "Dih18", 9, 10, 18, "index-two", [] { return dihedral(18); });
    add(18, 3, "S3xC3", 7, 8, 10, "reduction-bounds",
        [] { return direct_product(dihedral(6), cyclic(3)); });
    add(18, 4, "Dih(C3xC3)", 5, 6, 10, "generalized-dihedral",
        [] { return generalized_dihedral(direct_product(cyclic(3), cyclic(3))); });
    add(20, 1, "Dic20", 10, 12, 15, "index-two", [] { return dicyclic(20); });
    add(20, 3, "C5:C4", 7, 8, 10, "tabulated", [] { return semidirect_cyclic(5, 4, 2); });
    add(20, 4, "Dih20", 10, 11, 15, "index-two", [] { return dihedral(20); });
    add(21, 1, "C7:C3", 8, 9, 14, "tabulated", [] { return semidirect_cyclic(7, 3, 2); });
    add(22, 1, "Dih22", 11, 12, 22, "index-two", [] { return dihedral(22); });
    add(24, 1, "C3:C8", 12, 13, 15, "index-two", [] { return semidirect_cyclic(3, 8, 2); });
    add(24, 3, "SL(2,3)", 7, 12, 13, "tabulated", sl2_f3);
    add(24, 4, "Dic24", 12, 14, 18, "index-two", [] { return dicyclic(24); });
    add(24, 5, "Dih6xC4", 12, 13, 15, "index-two",
        [] { return direct_product(dihedral(6), cyclic(4)); });
    add(24, 6, "Dih24", 12, 13, 18, "index-two", [] { return dihedral(24); });
    add(24, 7, "Dic12xC2", 8, 9, 11, "reduction-bounds",
        [] { return direct_product(dicyclic(12), cyclic(2)); });
    add(24, 8, "C3:Dih8", 7, 9, 14, "reduction-bounds", c3_rtimes_dih8);
    add(24, 10, "Dih8xC3", 12, 13, 14, "index-two",
        [] { return direct_product(dihedral(8), cyclic(3)); });
    add(24, 11, "Q8xC3", 12, 13, 14, "index-two",
        [] { return direct_product(dicyclic(8), cyclic(3)); });
    add(24, 12, "S4", 6, 9, 12, "tabulated", s4);
    add(24, 13, "A4xC2", 7, 8, 10, "reduction-bounds",
        [] { return direct_product(a4(), cyclic(2)); });
    add(24, 14, "Dih12xC2", 7, 8, 10, "generalized-dihedral",
        [] { return direct_product(dihedral(12), cyclic(2)); });
    add(26, 1, "Dih26", 13, 14, 26, "index-two", [] { return dihedral(26); });
    add(27, 3, "H27", 6, 9, 8, "tabulated", [] { return heisenberg(3); });
    add(27, 4, "M27", 10, 11, 12, "tabulated", [] { return modular(3, 3); });
    add(28, 1, "Dic28", 14, 16, 21, "index-two", [] { return dicyclic(28); });
    add(28, 3, "Dih28", 14, 15, 21, "index-two", [] { return dihedral(28); });
    add(30, 1, "Dih6xC5", 15, 16, 18, "index-two",
        [] { return direct_product(dihedral(6), cyclic(5)); });
    add(30, 2, "Dih10xC3", 15, 16, 20, "index-two",
        [] { return direct_product(dihedral(10), cyclic(3)); });
    add(30, 3, "Dih30", 15, 16, 30, "index-two", [] { return dihedral(30); });
    return t;
  }();
  return table;
}

}  // namespace

std::span<const TableRow> table_rows() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> out;
    for (const auto& e : entries()) out.push_back(e.row);
    return out;
  }();
  return rows;
}

const TableRow* find_row(GapId id) {
  for (const auto& row : table_rows())
    if (row.id == id) return &row;
  return nullptr;
}

Group registry(GapId id) {
  for (const auto& e : entries()) {
    if (e.row.id == id) {
      Group g = e.build();
      g.name = e.row.display;
      g.gap_id = id;
      return g;
    }
  }
  fail(Err::UnknownGroup, "no table row for gap" + id.str());
}

}  // namespace dav
