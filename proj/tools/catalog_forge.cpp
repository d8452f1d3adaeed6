// tpp-forge: regenerates the shipped catalog payloads (data/catalog/*).
//
// Constructive rows are plain recipe expressions. Rows whose published
// structure description is ambiguous (or not expressible with the recipe
// kinds) are built here from explicit presentations, converted to their
// regular permutation representation, and shipped as perm-gens files.
//
//   tpp-forge explore          print invariant profiles of the candidates
//   tpp-forge emit [DIR]       write manifest.jsonl, *.pgens, tables.export
//   tpp-forge selfcheck [DIR]  rebuild every row and verify fingerprints
//   tpp-forge rho0 NAME        exhaustive beta0 search of one candidate

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tpplab/catalog.hpp"
#include "tpplab/classifier.hpp"
#include "tpplab/props.hpp"
#include "tpplab/search.hpp"

using namespace tpplab;
using nlohmann::json;

namespace {

// --- construction helpers ---------------------------------------------------

// A x| C_m with the action given as one automorphism of A (alpha) applied
// j times for the C_m coordinate j. Index = a * m + j.
GroupTable semidirect_cyclic(const GroupTable& a, unsigned m,
                             const std::function<unsigned(unsigned)>& alpha) {
  const unsigned na = a.order();
  std::vector<std::vector<unsigned>> alpha_pow(m, std::vector<unsigned>(na));
  for (unsigned x = 0; x < na; ++x) alpha_pow[0][x] = x;
  for (unsigned j = 1; j < m; ++j)
    for (unsigned x = 0; x < na; ++x) alpha_pow[j][x] = alpha(alpha_pow[j - 1][x]);
  return table_from_rule(na * m, [&](unsigned x, unsigned y) {
    unsigned a1 = x / m, j1 = x % m, a2 = y / m, j2 = y % m;
    return a.mul(a1, alpha_pow[j1][a2]) * m + (j1 + j2) % m;
  });
}

// (C4 x C4) x| C2 by an involutory matrix over Z4 (column action).
GroupTable c4c4_by_matrix(int m00, int m01, int m10, int m11) {
  return table_from_rule(32, [&](unsigned x, unsigned y) {
    unsigned v1 = x >> 1, k1 = x & 1, v2 = y >> 1, k2 = y & 1;
    unsigned a1 = v1 >> 2, b1 = v1 & 3, a2 = v2 >> 2, b2 = v2 & 3;
    if (k1) {
      unsigned na = (unsigned(m00 * int(a2) + m01 * int(b2)) % 4 + 4) % 4;
      unsigned nb = (unsigned(m10 * int(a2) + m11 * int(b2)) % 4 + 4) % 4;
      a2 = na;
      b2 = nb;
    }
    unsigned va = (a1 + a2) & 3, vb = (b1 + b2) & 3;
    return ((va << 2 | vb) << 1) | (k1 ^ k2);
  });
}

// Non-split (C4 x C4).C2: c^2 = a^2, conjugation by c inverts.
GroupTable c4c4_nonsplit() {
  return table_from_rule(32, [](unsigned x, unsigned y) {
    unsigned v1 = x >> 1, k1 = x & 1, v2 = y >> 1, k2 = y & 1;
    unsigned a1 = v1 >> 2, b1 = v1 & 3, a2 = v2 >> 2, b2 = v2 & 3;
    if (k1) {
      a2 = (4 - a2) & 3;
      b2 = (4 - b2) & 3;
    }
    unsigned va = (a1 + a2) & 3, vb = (b1 + b2) & 3;
    if (k1 & k2) va = (va + 2) & 3;  // c^2 = a^2
    return ((va << 2 | vb) << 1) | (k1 ^ k2);
  });
}

// (Q8 x C2) x| C2 and (D8 x C2) x| C2 through a parity twist t -> t + f(x);
// f must be a homomorphism onto Z2.
GroupTable parity_twist_sd(const GroupTable& base,
                           const std::function<unsigned(unsigned)>& f) {
  GroupTable a = direct_product(base, construct_named(GroupRecipe::cyclic(2)));
  auto alpha = [&](unsigned idx) {
    unsigned q = idx >> 1, t = idx & 1;
    return (q << 1) | (t ^ f(q));
  };
  return semidirect_cyclic(a, 2, alpha);
}

// C4 x| Q8, with +-i and +-j inverting C4. Index = m * 8 + q.
GroupTable c4_by_q8() {
  GroupTable q8 = construct_named(GroupRecipe::quaternion8());
  return table_from_rule(32, [&](unsigned x, unsigned y) {
    unsigned m1 = x >> 3, q1 = x & 7, m2 = y >> 3, q2 = y & 7;
    unsigned axis = q1 >> 1;
    bool invert = axis == 1 || axis == 2;
    unsigned m = (m1 + (invert ? (4 - m2) & 3 : m2)) & 3;
    return (m << 3) | q8.mul(q1, q2);
  });
}

// Index-2 subgroup of D8 x D8: pairs with equal rotation/reflection parity.
GroupTable parity_sub_d8d8() {
  GroupTable d8d8 = direct_product(construct_named(GroupRecipe::dihedral(8)),
                                   construct_named(GroupRecipe::dihedral(8)));
  ElementSet h;
  h.parent = &d8d8;
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y)
      if ((x >= 4) == (y >= 4)) h.members.set(x * 8 + y);
  h.is_subgroup = true;
  return subgroup_as_group(d8d8, h).table;
}

// (C4 x C2 x C2) x| C2 variants. Index of A: i*4 + u*2 + v.
GroupTable c4c2c2_sd(bool invert_a) {
  GroupTable a = direct_product(construct_named(GroupRecipe::cyclic(4)),
                                construct_named(GroupRecipe::elementary_abelian(2, 2)));
  // A-index = i*4 + (u*2 + v); alpha: a -> a(u) or a^-1(u), v -> a^2 v.
  auto alpha = [&](unsigned idx) {
    unsigned i = idx >> 2, u = (idx >> 1) & 1, v = idx & 1;
    unsigned ni = invert_a ? (4 - i) & 3 : i;
    ni = (ni + 2 * v) & 3;
    unsigned nu = u ^ (i & 1);
    return (ni << 2) | (nu << 1) | v;
  };
  return semidirect_cyclic(a, 2, alpha);
}

// (C4 x C2) x| C4, c: a -> ab. A-index = m*2 + u.
GroupTable g32_2() {
  GroupTable a = direct_product(construct_named(GroupRecipe::cyclic(4)),
                                construct_named(GroupRecipe::cyclic(2)));
  auto alpha = [](unsigned idx) {
    unsigned m = idx >> 1, u = idx & 1;
    return (m << 1) | (u ^ (m & 1));
  };
  return semidirect_cyclic(a, 4, alpha);
}

// Cn x| Ck with a -> a^s.
GroupTable cyclic_sd(unsigned n, unsigned k, unsigned s) {
  GroupTable a = construct_named(GroupRecipe::cyclic(n));
  auto alpha = [&](unsigned idx) { return unsigned((std::uint64_t(idx) * s) % n); };
  return semidirect_cyclic(a, k, alpha);
}

// (C8 x C2) x| C2, c: a -> ab. A-index = i*2 + u.
GroupTable g32_5() {
  GroupTable a = direct_product(construct_named(GroupRecipe::cyclic(8)),
                                construct_named(GroupRecipe::cyclic(2)));
  auto alpha = [](unsigned idx) {
    unsigned i = idx >> 1, u = idx & 1;
    return (i << 1) | (u ^ (i & 1));
  };
  return semidirect_cyclic(a, 2, alpha);
}

// (C4 x C2) x| C2, c: a -> ab  (order 16).
GroupTable g16_3() {
  GroupTable a = direct_product(construct_named(GroupRecipe::cyclic(4)),
                                construct_named(GroupRecipe::cyclic(2)));
  auto alpha = [](unsigned idx) {
    unsigned m = idx >> 1, u = idx & 1;
    return (m << 1) | (u ^ (m & 1));
  };
  return semidirect_cyclic(a, 2, alpha);
}

GroupTable heisenberg3() {
  // strictly upper triangular 3x3 over Z3: (a, b, c), index = (a*3+b)*3+c
  return table_from_rule(27, [](unsigned x, unsigned y) {
    unsigned a1 = x / 9, b1 = (x / 3) % 3, c1 = x % 3;
    unsigned a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
    unsigned a = (a1 + a2) % 3, b = (b1 + b2) % 3, c = (c1 + c2 + a1 * b2) % 3;
    return (a * 3 + b) * 3 + c;
  });
}

GroupTable g27_4() { return cyclic_sd(9, 3, 4); }

// --- profiles ----------------------------------------------------------------

struct Profile {
  Fingerprint fp;
  unsigned conj_classes = 0;
  std::vector<std::pair<unsigned, unsigned>> center_hist;  // orders within Z
  std::vector<std::pair<unsigned, unsigned>> comm_hist;    // orders within G'
  std::map<unsigned, unsigned> subgroups_by_order;
  std::map<unsigned, unsigned> abelian_subgroups_by_order;

  bool operator==(const Profile& o) const = default;

  std::string str() const {
    std::ostringstream os;
    os << fp.str() << " cc=" << conj_classes << " Z[";
    for (auto [o, c] : center_hist) os << o << ":" << c << " ";
    os << "] G'[";
    for (auto [o, c] : comm_hist) os << o << ":" << c << " ";
    os << "] subs[";
    for (auto [o, c] : subgroups_by_order) os << o << ":" << c << " ";
    os << "] ab[";
    for (auto [o, c] : abelian_subgroups_by_order) os << o << ":" << c << " ";
    os << "]";
    return os.str();
  }
};

Profile profile_of(const GroupTable& g) {
  Profile p;
  p.fp = fingerprint_of(g);
  std::vector<char> seen(g.order(), 0);
  for (unsigned x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++p.conj_classes;
    for (unsigned c = 0; c < g.order(); ++c) seen[g.mul(g.mul(g.inverse(c), x), c)] = 1;
  }
  auto hist_of = [&](const ElemMask& m) {
    std::map<unsigned, unsigned> h;
    m.for_each([&](unsigned e) { ++h[g.element_order(e)]; });
    return std::vector<std::pair<unsigned, unsigned>>(h.begin(), h.end());
  };
  p.center_hist = hist_of(center(g).members);
  p.comm_hist = hist_of(commutator_subgroup(g).members);
  for (const auto& h : all_subgroups(g)) {
    ++p.subgroups_by_order[unsigned(h.size())];
    if (is_abelian_set(g, h.members)) ++p.abelian_subgroups_by_order[unsigned(h.size())];
  }
  return p;
}

// --- candidates ---------------------------------------------------------------

struct Candidate {
  std::string name;
  std::function<GroupTable()> build;
};

std::vector<Candidate> special32_candidates() {
  return {
      {"A-inv", [] { return c4c4_by_matrix(-1, 0, 0, -1); }},
      {"B-sympl", [] { return c4c4_by_matrix(1, 2, 2, 1); }},
      {"B2-mixed", [] { return c4c4_by_matrix(1, 2, 2, 3); }},
      {"C-c4q8", [] { return c4_by_q8(); }},
      {"D-q8c2", [] {
         return parity_twist_sd(construct_named(GroupRecipe::quaternion8()), [](unsigned q) {
           unsigned axis = q >> 1;
           return (axis == 1 || axis == 3) ? 1u : 0u;  // f(i) = f(k) = 1, f(j) = 0
         });
       }},
      {"D2-q8c2", [] {
         return parity_twist_sd(construct_named(GroupRecipe::quaternion8()), [](unsigned q) {
           unsigned axis = q >> 1;
           return (axis == 1 || axis == 2) ? 1u : 0u;  // f(i) = f(j) = 1, f(k) = 0
         });
       }},
      {"E-d8c2", [] {
         return parity_twist_sd(construct_named(GroupRecipe::dihedral(8)),
                                [](unsigned d) { return d & 1u; });  // f = rotation parity
       }},
      {"E2-d8c2", [] {
         return parity_twist_sd(construct_named(GroupRecipe::dihedral(8)),
                                [](unsigned d) { return d >= 4 ? 1u : 0u; });  // f = reflection
       }},
      {"F-c4c2c2", [] { return c4c2c2_sd(false); }},
      {"F2-c4c2c2", [] { return c4c2c2_sd(true); }},
      {"K32-sub", [] { return parity_sub_d8d8(); }},
      {"H1-nonsplit", [] { return c4c4_nonsplit(); }},
      {"H3-nonsplit", [] {
         // c^2 = a^2 with the symplectic action
         return table_from_rule(32, [](unsigned x, unsigned y) {
           unsigned v1 = x >> 1, k1 = x & 1, v2 = y >> 1, k2 = y & 1;
           unsigned a1 = v1 >> 2, b1 = v1 & 3, a2 = v2 >> 2, b2 = v2 & 3;
           if (k1) {
             unsigned na = (a2 + 2 * b2) & 3, nb = (2 * a2 + b2) & 3;
             a2 = na;
             b2 = nb;
           }
           unsigned va = (a1 + a2) & 3, vb = (b1 + b2) & 3;
           if (k1 & k2) va = (va + 2) & 3;
           return ((va << 2 | vb) << 1) | (k1 ^ k2);
         });
       }},
  };
}

std::vector<Candidate> deep128_candidates() {
  auto d8 = [] { return construct_named(GroupRecipe::dihedral(8)); };
  return {
      {"c2xd8xd8", [=] { return direct_product(construct_named(GroupRecipe::cyclic(2)),
                                               direct_product(d8(), d8())); }},
      {"d8d8-circ-c4", [=] {
         // central product over the diagonal central involution (r^2, r^2)
         return central_product(direct_product(d8(), d8()),
                                construct_named(GroupRecipe::cyclic(4)), 18, 2);
       }},
      {"d8x16_3", [=] { return direct_product(d8(), g16_3()); }},
      {"d8x16_4", [=] { return direct_product(d8(), cyclic_sd(4, 4, 3)); }},
      {"d8x16_6", [=] { return direct_product(d8(), cyclic_sd(8, 2, 5)); }},
      {"d8xpauli", [=] {
         return direct_product(d8(), central_product(d8(), construct_named(GroupRecipe::cyclic(4)),
                                                     2, 2));
       }},
      {"c4xe32p", [=] {
         return direct_product(construct_named(GroupRecipe::cyclic(4)),
                               central_product(d8(), d8(), 2, 2));
       }},
      {"q8xpauli", [=] {
         return direct_product(construct_named(GroupRecipe::quaternion8()),
                               central_product(d8(), construct_named(GroupRecipe::cyclic(4)), 2,
                                               2));
       }},
      {"c2xd8xq8", [=] {
         return direct_product(construct_named(GroupRecipe::cyclic(2)),
                               direct_product(d8(), construct_named(GroupRecipe::quaternion8())));
       }},
      {"d8xq8", [=] { return direct_product(d8(), construct_named(GroupRecipe::quaternion8())); }},
      {"q8xq8", [=] {
         return direct_product(construct_named(GroupRecipe::quaternion8()),
                               construct_named(GroupRecipe::quaternion8()));
       }},
      {"c2c2xe32p", [=] {
         return direct_product(construct_named(GroupRecipe::elementary_abelian(2, 2)),
                               central_product(d8(), d8(), 2, 2));
       }},
      {"g128a", [=] {
         // (C2^3 x D8) x| C2: [S,c] = t1, [t2,c] = R^2
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 3, dd = idx & 7;  // t = t1 + 2 t2 + 4 t3, D8 index dd
           bool refl = dd >= 4;
           unsigned nd = dd;
           unsigned nt = t;
           if (refl) nt ^= 1;              // S -> t1 S
           if (t & 2) nd = refl ? ((dd - 4 + 2) % 4) + 4 : (dd + 2) % 4;  // t2 -> t2 R^2
           return (nt << 3) | nd;
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
      {"g128b", [=] {
         // (C2^3 x D8) x| C2: [S,c] = t1, R -> R^-1, t2 -> t2 R^2
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 3, dd = idx & 7;
           bool refl = dd >= 4;
           unsigned rot = dd & 3;
           unsigned nrot = refl ? rot : (4 - rot) % 4;  // R -> R^-1 fixes reflections' rot? no:
           // alpha(R^k) = R^-k, alpha(R^k S) = alpha(R^k) alpha(S) = R^-k t1 S
           unsigned nt = t;
           if (refl) nt ^= 1;
           nrot = (4 - rot) % 4;
           if (t & 2) nrot = (nrot + 2) % 4;  // t2 -> t2 R^2
           return (nt << 3) | (refl ? nrot + 4 : nrot);
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
      {"g128d", [=] {
         // (C2^3 x D8) x| C2: [R,d] = t1, [t2,d] = R^2, the D8 analog of g128c
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 3, dd = idx & 7;
           bool refl = dd >= 4;
           unsigned rot = dd & 3;
           unsigned nt = t;
           if (rot & 1) nt ^= 1;             // R -> R t1 (odd rotation part picks up t1)
           unsigned nrot = rot;
           if (t & 2) nrot = (nrot + 2) % 4;  // t2 -> t2 R^2
           return (nt << 3) | (refl ? nrot + 4 : nrot);
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
      {"g128f", [=] {
         // (C2^3 x D8) x| C2: [R,d] = t1, [S,d] = R^2, [t2,d] = R^2
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 3, dd = idx & 7;
           bool refl = dd >= 4;
           unsigned rot = dd & 3;
           unsigned nt = t;
           if (rot & 1) nt ^= 1;  // R -> R t1
           unsigned nrot = rot;
           if (refl) nrot = (nrot + 2) % 4;   // S -> S R^2
           if (t & 2) nrot = (nrot + 2) % 4;  // t2 -> t2 R^2
           return (nt << 3) | (refl ? nrot + 4 : nrot);
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
      {"g128h", [=] {
         // non-split (C2^3 x D8).C2 over the g128d action: d^2 = t3
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         const unsigned na = a.order();
         std::vector<unsigned> alpha(na);
         for (unsigned idx = 0; idx < na; ++idx) {
           unsigned t = idx >> 3, dd = idx & 7;
           bool refl = dd >= 4;
           unsigned rot = dd & 3;
           unsigned nt = t;
           if (rot & 1) nt ^= 1;
           unsigned nrot = rot;
           if (t & 2) nrot = (nrot + 2) % 4;
           alpha[idx] = (nt << 3) | (refl ? nrot + 4 : nrot);
         }
         const unsigned dsq = (4u << 3) | 0u;  // t3
         return table_from_rule(na * 2, [&, dsq](unsigned x, unsigned y) {
           unsigned a1 = x >> 1, k1 = x & 1, a2 = y >> 1, k2 = y & 1;
           unsigned prod = a.mul(a1, k1 ? alpha[a2] : a2);
           if (k1 & k2) prod = a.mul(prod, dsq);
           return (prod << 1) | (k1 ^ k2);
         });
       }},
      {"g128i", [=] {
         // (C2^3 x D8) x| C2: [R,d] = t1, [S,d] = R^2 t1, [t2,d] = R^2
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 3, dd = idx & 7;
           bool refl = dd >= 4;
           unsigned rot = dd & 3;
           unsigned nt = t;
           if (rot & 1) nt ^= 1;
           if (refl) nt ^= 1;  // S picks up t1 as well
           unsigned nrot = rot;
           if (refl) nrot = (nrot + 2) % 4;
           if (t & 2) nrot = (nrot + 2) % 4;
           return (nt << 3) | (refl ? nrot + 4 : nrot);
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
      {"g128e", [=] {
         // (C2^3 x D8) x| C2: [R,d] = t1, [S,d] = t2, [t3,d] = R^2
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 3)),
                                       d8());
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 3, dd = idx & 7;
           bool refl = dd >= 4;
           unsigned rot = dd & 3;
           unsigned nt = t;
           if (rot & 1) nt ^= 1;   // R -> R t1
           if (refl) nt ^= 2;      // S -> S t2
           unsigned nrot = rot;
           if (t & 4) nrot = (nrot + 2) % 4;  // t3 -> t3 R^2
           return (nt << 3) | (refl ? nrot + 4 : nrot);
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
      {"g128c", [=] {
         // (C2^2 x [16,3]) x| C2: [a,d] = t1, [t2,d] = b
         GroupTable k16 = g16_3();  // (i, j, k): a^i b^j c^k, index ((i*2+j)*2+k)
         GroupTable a = direct_product(construct_named(GroupRecipe::elementary_abelian(2, 2)),
                                       k16);
         auto alpha = [](unsigned idx) {
           unsigned t = idx >> 4, kk = idx & 15;
           unsigned i = kk >> 2, j = (kk >> 1) & 1, k2 = kk & 1;
           unsigned nt = t, ni = i, nj = j;
           if (i & 1) nt ^= 1;   // a -> a t1
           if (t & 2) nj ^= 1;   // t2 -> t2 b
           return (nt << 4) | ((ni << 2) | (nj << 1) | k2);
         };
         return semidirect_cyclic(a, 2, alpha);
       }},
  };
}

GroupTable build_named_candidate(const std::string& name) {
  for (auto& c : special32_candidates())
    if (c.name == name) return c.build();
  for (auto& c : deep128_candidates())
    if (c.name == name) return c.build();
  throw GroupError(Err::UnknownLabel, "no candidate " + name);
}

// --- generator export -----------------------------------------------------------

std::vector<unsigned> minimal_generators(const GroupTable& g) {
  std::vector<unsigned> gens;
  ElemMask have;
  have.set(0);
  for (unsigned x = 1; x < g.order() && have.count() < g.order(); ++x) {
    if (have.test(x)) continue;
    gens.push_back(x);
    have = generated_subgroup(g, gens).members;
  }
  return gens;
}

std::string regular_pgens(const GroupTable& g) {
  std::vector<std::vector<unsigned>> perms;
  for (unsigned gen : minimal_generators(g)) {
    std::vector<unsigned> p(g.order());
    for (unsigned x = 0; x < g.order(); ++x) p[x] = g.mul(x, gen);
    perms.push_back(std::move(p));
  }
  return serialize_permutation_generators(g.order(), perms);
}

// --- the declared tables -----------------------------------------------------------

struct RowSpec {
  std::string label;
  int table_no;
  unsigned order;
  unsigned z;
  std::vector<unsigned> cd;
  std::string rho0;
  std::string structure;       // verbatim from the published tables
  std::string recipe;          // expression; "pgens:<name>" for forged rows
  bool deep = false;
  bool cd_discrepancy = false;
};

std::vector<RowSpec> catalog_rows() {
  std::vector<RowSpec> rows;
  auto add = [&](RowSpec r) { rows.push_back(std::move(r)); };

  // Table 2: 2-groups with a cyclic commutator subgroup of order 2.
  add({"[8, 3]", 2, 8, 2, {1, 2}, "1", "D8", "dihedral(8)"});
  add({"[8, 4]", 2, 8, 2, {1, 2}, "1", "Q8", "quaternion8"});
  add({"[16, 3]", 2, 16, 4, {1, 2}, "1", "(C4 x C2) : C2", "pgens:g16_3"});
  add({"[16, 4]", 2, 16, 4, {1, 2}, "1", "C4 x C4", "pgens:g16_4"});
  add({"[16, 6]", 2, 16, 4, {1, 2}, "1", "C8 : C2", "pgens:g16_6"});
  add({"[16, 11]", 2, 16, 4, {1, 2}, "1", "C2 x D8", "direct(cyclic(2),dihedral(8))"});
  add({"[16, 12]", 2, 16, 4, {1, 2}, "1", "C2 x Q8", "direct(cyclic(2),quaternion8)"});
  add({"[16, 13]", 2, 16, 4, {1, 2}, "1", "(C4 x C2) : C2",
       "central(dihedral(8),cyclic(4),2,2)"});
  add({"[32, 2]", 2, 32, 8, {1, 2}, "1", "(C4 x C2) : C4", "pgens:g32_2"});
  add({"[32, 4]", 2, 32, 8, {1, 2}, "1", "C8 : C4", "pgens:g32_4"});
  add({"[32, 5]", 2, 32, 8, {1, 2}, "1", "(C8 x C2) : C2", "pgens:g32_5"});
  add({"[32, 12]", 2, 32, 8, {1, 2}, "1", "C4 x C8", "pgens:g32_12"});
  add({"[32, 17]", 2, 32, 8, {1, 2}, "1", "C16 : C2", "pgens:g32_17"});
  add({"[32, 22]", 2, 32, 8, {1, 2}, "1", "C2 x ((C4 x C2) : C2)",
       "direct(cyclic(2),gens(g16_3.pgens))"});
  add({"[32, 23]", 2, 32, 8, {1, 2}, "1", "C2 x (C4 : C4)",
       "direct(cyclic(2),gens(g16_4.pgens))"});
  add({"[32, 24]", 2, 32, 8, {1, 2}, "1", "(C4 x C4) : C2", "pgens:g32_24"});
  add({"[32, 25]", 2, 32, 8, {1, 2}, "1", "C4 x D8", "direct(cyclic(4),dihedral(8))"});
  add({"[32, 26]", 2, 32, 8, {1, 2}, "1", "C4 x Q8", "direct(cyclic(4),quaternion8)"});
  add({"[32, 37]", 2, 32, 8, {1, 2}, "1", "C2 x (C8 : C2)",
       "direct(cyclic(2),gens(g16_6.pgens))"});
  add({"[32, 38]", 2, 32, 8, {1, 2}, "1", "(C8 x C2) : C2",
       "central(cyclic(8),dihedral(8),4,2)"});
  add({"[32, 46]", 2, 32, 8, {1, 2}, "1", "C2 x C2 x D8", "direct(elemab(2,2),dihedral(8))"});
  add({"[32, 47]", 2, 32, 8, {1, 2}, "1", "C2 x C2 x Q8", "direct(elemab(2,2),quaternion8)"});
  add({"[32, 48]", 2, 32, 8, {1, 2}, "1", "C2 x ((C4 x C2) x C2)",
       "direct(cyclic(2),central(dihedral(8),cyclic(4),2,2))"});
  add({"[32, 49]", 2, 32, 2, {1, 4}, "2", "(C2 x C2 x C2) : (C2 x C2)",
       "central(dihedral(8),dihedral(8),2,2)"});
  add({"[32, 50]", 2, 32, 2, {1, 2}, "1", "(C2 x Q8) : C2",
       "central(dihedral(8),quaternion8,2,1)", false, true});

  // Table 3: 3-groups with a cyclic commutator subgroup of order 3.
  add({"[27, 3]", 3, 27, 3, {1, 3}, "1", "(C3 x C3) : C3", "pgens:g27_3"});
  add({"[27, 4]", 3, 27, 3, {1, 3}, "1", "C9 : C3", "pgens:g27_4"});

  // Table 1: class 2 without a cyclic commutator subgroup of order p.
  add({"[24, 10]", 1, 24, 6, {1, 2}, "1", "C3 x D8", "direct(cyclic(3),dihedral(8))"});
  add({"[24, 11]", 1, 24, 6, {1, 2}, "1", "C3 x Q8", "direct(cyclic(3),quaternion8)"});
  add({"[32, 28]", 1, 32, 4, {1, 2}, "1", "(C4 x C2 x C2) : C2", "pgens:g32_28"});
  add({"[32, 29]", 1, 32, 4, {1, 2}, "1", "(C2 x Q8) : C2", "pgens:g32_29"});
  add({"[32, 30]", 1, 32, 4, {1, 2}, "1", "(C4 x C2 x C2) : C2", "pgens:g32_30"});
  add({"[32, 31]", 1, 32, 4, {1, 2}, "1", "(C4 x C4) : C2", "pgens:g32_31"});
  add({"[32, 32]", 1, 32, 4, {1, 2}, "1", "(C2 x C2) . (C2 x C2 x C2)", "pgens:g32_32"});
  add({"[32, 33]", 1, 32, 4, {1, 2}, "1", "(C4 x C4) : C2", "pgens:g32_33"});
  add({"[32, 34]", 1, 32, 4, {1, 2}, "1", "(C4 x C4) : C2", "pgens:g32_34"});
  add({"[32, 35]", 1, 32, 4, {1, 2}, "1", "C4 : Q8", "pgens:g32_35"});
  add({"[64, 226]", 1, 64, 4, {1, 2, 4}, "2", "D8 : D8", "direct(dihedral(8),dihedral(8))"});
  add({"[128, 1135]", 1, 128, 8, {1, 2, 4}, "2", "(C2 x C2 x C2 x D8) : C2", "pgens:g128_1135",
       true});
  add({"[128, 1142]", 1, 128, 8, {1, 2, 4}, "2", "(C2 x C2 x ((C4 x C2) : C2)", "pgens:g128_1142",
       true});
  add({"[128, 1165]", 1, 128, 8, {1, 2, 4}, "2", "(C2 x C2 x C2 x D8) : C2",
       "direct(elemab(2,2),central(dihedral(8),dihedral(8),2,2))", true});
  add({"[128, 2194]", 1, 128, 8, {1, 2, 4}, "2", "C2 x D8 x D8",
       "direct(cyclic(2),direct(dihedral(8),dihedral(8)))", true});
  add({"[128, 2213]", 1, 128, 8, {1, 2, 4}, "2", "((C4 x D8) : C2) : C2",
       "central(direct(dihedral(8),dihedral(8)),cyclic(4),18,2)", true});
  return rows;
}

// The forged builds behind pgens:<name> recipes. Assignments of the eight
// order-32 rows and four order-128 rows to concrete constructions are
// pinned here; `explore` prints the full candidate profiles.
GroupTable build_pgens_source(const std::string& name) {
  static const std::map<std::string, std::string> assignment = {
      {"g16_3", "@g16_3"},
      {"g16_4", "@c4:c4"},
      {"g16_6", "@mod16"},
      {"g27_3", "@he3"},
      {"g27_4", "@g27_4"},
      {"g32_2", "@g32_2"},
      {"g32_4", "@c8:c4"},
      {"g32_5", "@g32_5"},
      {"g32_12", "@c4:c8"},
      {"g32_17", "@mod32"},
      {"g32_24", "@g32_24"},
      {"g32_28", "F-c4c2c2"},
      {"g32_29", "D-q8c2"},
      {"g32_30", "F2-c4c2c2"},
      {"g32_31", "A-inv"},
      {"g32_32", "K32-sub"},
      {"g32_33", "B-sympl"},
      {"g32_34", "B2-mixed"},
      {"g32_35", "C-c4q8"},
      {"g128_1135", "g128d"},
      {"g128_1142", "g128c"},
  };
  auto it = assignment.find(name);
  if (it == assignment.end()) throw GroupError(Err::UnknownLabel, "no pgens source " + name);
  const std::string& src = it->second;
  if (src == "@g16_3") return g16_3();
  if (src == "@c4:c4") return cyclic_sd(4, 4, 3);
  if (src == "@mod16") return cyclic_sd(8, 2, 5);
  if (src == "@he3") return heisenberg3();
  if (src == "@g27_4") return g27_4();
  if (src == "@g32_2") return g32_2();
  if (src == "@c8:c4") return cyclic_sd(8, 4, 5);
  if (src == "@g32_5") return g32_5();
  if (src == "@c4:c8") return cyclic_sd(4, 8, 3);
  if (src == "@mod32") return cyclic_sd(16, 2, 9);
  if (src == "@g32_24") return c4c4_by_matrix(1, 0, 2, 1);
  return build_named_candidate(src);
}

// Enumerate central-twist C2-actions on C2^3 x D8: alpha(x) = x z(x) with
// z a homomorphism into <R^2, t1> that kills t1. Prints profile-distinct
// groups with |Z| = 8, |G'| = 4 and their exact rho0.
int cmd_scan128() {
  // A-index = t * 8 + dd with t = t1 + 2 t2 + 4 t3 and dd the D8 index
  // (rotations 0..3, reflections 4..7). Twist targets: R^2 (dd = 2) and t1.
  auto mulA = [](unsigned x, unsigned y) {
    unsigned tx = x >> 3, dx = x & 7, ty = y >> 3, dy = y & 7;
    bool rx = dx >= 4, ry = dy >= 4;
    unsigned ax = dx & 3, ay = dy & 3;
    unsigned rot = rx ? (ax + 4 - ay) % 4 : (ax + ay) % 4;
    unsigned dd = (rx != ry) ? rot + 4 : rot;
    return ((tx ^ ty) << 3) | dd;
  };
  auto twist = [&](unsigned x, unsigned which) {
    unsigned out = x;
    if (which & 1) out = mulA(out, 2);        // multiply by R^2
    if (which & 2) out = mulA(out, 1u << 3);  // multiply by t1
    return out;
  };

  std::vector<Profile> seen;
  std::vector<std::string> names;
  unsigned built = 0;
  // z(R), z(S), z(t2), z(t3) each in {1, R^2, t1, R^2 t1}
  for (unsigned zr = 0; zr < 4; ++zr)
    for (unsigned zs = 0; zs < 4; ++zs)
      for (unsigned z2 = 0; z2 < 4; ++z2)
        for (unsigned z3 = 0; z3 < 4; ++z3) {
          auto alpha = [&](unsigned x) {
            unsigned t = x >> 3, dd = x & 7;
            unsigned out = x;
            if (dd & 1) out = twist(out, zr);            // odd rotation power
            if (dd >= 4) out = twist(out, zs);           // reflection part
            if (t & 2) out = twist(out, z2);
            if (t & 4) out = twist(out, z3);
            return out;
          };
          GroupTable g;
          try {
            std::vector<std::uint16_t> flat(128 * 128);
            for (unsigned x = 0; x < 128; ++x)
              for (unsigned y = 0; y < 128; ++y) {
                unsigned a1 = x >> 1, k1 = x & 1, a2 = y >> 1, k2 = y & 1;
                unsigned prod = mulA(a1, k1 ? alpha(a2) : a2);
                flat[x * 128 + y] = std::uint16_t((prod << 1) | (k1 ^ k2));
              }
            g = GroupTable::validate_flat(128, std::move(flat));
          } catch (const GroupError&) {
            continue;  // not an automorphism / inconsistent twist
          }
          ++built;
          Fingerprint fp = fingerprint_of(g);
          if (fp.center_order != 8 || fp.commutator_order != 4 || fp.nilpotency_class != 2)
            continue;
          Profile p = profile_of(g);
          bool dup = false;
          for (const auto& q : seen)
            if (q == p) dup = true;
          if (dup) continue;
          TppReport rep = search_beta0(g, all_subgroups(g));
          std::string name = "zr" + std::to_string(zr) + "zs" + std::to_string(zs) + "z2" +
                             std::to_string(z2) + "z3" + std::to_string(z3);
          std::cout << name << " rho0 = " << rep.rho0.str() << "\n  " << p.str() << "\n";
          seen.push_back(std::move(p));
          names.push_back(name);
        }
  std::cout << built << " groups built, " << seen.size() << " distinct profiles\n";
  return 0;
}

// --- commands -------------------------------------------------------------------------

int cmd_explore() {
  std::cout << "order-32 class-2 candidates with Z = G' of order 4:\n";
  std::vector<std::pair<std::string, Profile>> profiles;
  for (auto& c : special32_candidates()) {
    GroupTable g = c.build();
    Profile p = profile_of(g);
    std::cout << c.name << "\n  " << p.str() << "\n";
    profiles.emplace_back(c.name, std::move(p));
  }
  std::cout << "\nduplicate profiles:\n";
  bool any = false;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    for (std::size_t j = i + 1; j < profiles.size(); ++j)
      if (profiles[i].second == profiles[j].second) {
        std::cout << "  " << profiles[i].first << " == " << profiles[j].first << "\n";
        any = true;
      }
  if (!any) std::cout << "  none\n";

  std::cout << "\norder-128 candidates:\n";
  std::vector<std::pair<std::string, Profile>> deep_profiles;
  for (auto& c : deep128_candidates()) {
    GroupTable g = c.build();
    Profile p = profile_of(g);
    std::cout << c.name << "\n  " << p.str() << "\n";
    deep_profiles.emplace_back(c.name, std::move(p));
  }
  std::cout << "\nduplicate deep profiles:\n";
  bool any_deep = false;
  for (std::size_t i = 0; i < deep_profiles.size(); ++i)
    for (std::size_t j = i + 1; j < deep_profiles.size(); ++j)
      if (deep_profiles[i].second == deep_profiles[j].second) {
        std::cout << "  " << deep_profiles[i].first << " == " << deep_profiles[j].first << "\n";
        any_deep = true;
      }
  if (!any_deep) std::cout << "  none\n";
  return 0;
}

int cmd_rho0(const std::string& name) {
  GroupTable g = build_named_candidate(name);
  std::cout << name << ": " << fingerprint_of(g).str() << "\n";
  auto lattice = all_subgroups(g);
  std::cout << "subgroups: " << lattice.size() << "\n";
  TppReport rep = search_beta0(g, lattice);
  std::cout << "beta0 = " << rep.beta0 << " rho0 = " << rep.rho0.str() << " ("
            << rep.maximal_subgroup_triples.size() << " maximal triples, "
            << rep.stats.candidates_examined << " candidates, " << rep.stats.wall_seconds
            << "s)\n";
  return 0;
}

int cmd_emit(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<RowSpec> rows = catalog_rows();

  // perm-gens payloads
  std::map<std::string, std::string> pgens_files;
  for (const auto& row : rows) {
    if (row.recipe.rfind("pgens:", 0) != 0) continue;
    std::string name = row.recipe.substr(6);
    GroupTable g = build_pgens_source(name);
    pgens_files[name + ".pgens"] = regular_pgens(g);
  }
  for (const auto& [file, content] : pgens_files) {
    std::ofstream out(dir + "/" + file, std::ios::binary);
    out << content;
  }

  // manifest
  std::ostringstream manifest;
  manifest << R"({"catalog_version": "tpp-catalog v1"})" << "\n";
  std::ostringstream bundle;
  for (const auto& row : rows) {
    std::string recipe_text = row.recipe;
    if (recipe_text.rfind("pgens:", 0) == 0)
      recipe_text = "gens(" + recipe_text.substr(6) + ".pgens)";
    GroupRecipe recipe = parse_recipe(recipe_text);
    GroupTable g = build_recipe(recipe, dir);
    Fingerprint fp = fingerprint_of(g);
    if (fp.order != row.order)
      throw GroupError(Err::FingerprintMismatch, row.label + ": wrong order");
    if (fp.center_order != row.z)
      throw GroupError(Err::FingerprintMismatch,
                       row.label + ": |Z| = " + std::to_string(fp.center_order) + ", declared " +
                           std::to_string(row.z));
    std::string hist;
    for (auto [o, c] : fp.order_histogram) {
      if (!hist.empty()) hist += ' ';
      hist += std::to_string(o) + ":" + std::to_string(c);
    }
    json j = {{"label", row.label},
              {"table", row.table_no},
              {"order", row.order},
              {"z", row.z},
              {"cd", row.cd},
              {"rho0", row.rho0},
              {"structure", row.structure},
              {"recipe", recipe_text},
              {"fingerprint",
               {{"z", fp.center_order},
                {"comm", fp.commutator_order},
                {"class", fp.nilpotency_class},
                {"orders", hist}}}};
    if (row.deep) j["deep"] = true;
    if (row.cd_discrepancy) j["cd_discrepancy"] = true;
    manifest << j.dump() << "\n";

    bundle << "@group " << row.label << "\n" << regular_pgens(g) << "\n";
  }
  {
    std::ofstream out(dir + "/manifest.jsonl", std::ios::binary);
    out << manifest.str();
  }
  {
    std::ofstream out(dir + "/tables.export", std::ios::binary);
    out << bundle.str();
  }
  std::cout << "wrote " << rows.size() << " rows, " << pgens_files.size()
            << " pgens payloads to " << dir << "\n";
  return 0;
}

int cmd_selfcheck(const std::string& dir) {
  Catalog cat = Catalog::load(dir);
  unsigned ok = 0;
  for (const auto& e : cat.entries()) {
    GroupTable g = cat.build(e);  // throws on fingerprint mismatch
    (void)g;
    ++ok;
  }
  // the ingest bundle must re-validate too
  auto groups = ingest_export(read_text_file(dir + "/tables.export"));
  for (const auto& [label, g] : groups) {
    Fingerprint fp = fingerprint_of(g);
    const CatalogEntry& e = cat.find(label);
    if (fp.center_order != e.fingerprint.center_order ||
        fp.commutator_order != e.fingerprint.commutator_order ||
        fp.order_histogram != e.fingerprint.order_histogram)
      throw GroupError(Err::FingerprintMismatch, "export bundle mismatch at " + label);
  }
  std::cout << ok << " rows verified, " << groups.size() << " bundle groups verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (!args.empty() && args[0] == "explore") return cmd_explore();
    if (!args.empty() && args[0] == "scan128") return cmd_scan128();
    if (!args.empty() && args[0] == "rho0" && args.size() == 2) return cmd_rho0(args[1]);
    if (!args.empty() && args[0] == "emit")
      return cmd_emit(args.size() > 1 ? args[1] : Catalog::default_dir());
    if (!args.empty() && args[0] == "selfcheck")
      return cmd_selfcheck(args.size() > 1 ? args[1] : Catalog::default_dir());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "usage: tpp-forge explore | rho0 NAME | emit [DIR] | selfcheck [DIR]\n";
  return 2;
}
