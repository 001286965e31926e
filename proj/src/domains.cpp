#include "hf/domains.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace hf {

namespace {

// jump across a segment: multiplicity on its left (forward-slot) side minus
// the right side.
void add_jump(const Validated& v, std::vector<Int>& row, const ArcKey& key, Int sign) {
  const auto& pair = v.slots.at(key);
  row[pair[0].region] += sign;
  row[pair[1].region] -= sign;
}

bool contains(const Generator& g, int p) {
  return std::find(g.pts.begin(), g.pts.end(), p) != g.pts.end();
}

Int rat_to_int(const Rat& r, const char* what) {
  check_internal(boost::multiprecision::denominator(r) == 1,
                 std::string(what) + " must be an integer");
  return boost::multiprecision::numerator(r);
}

}  // namespace

IntMatrix corner_equations(const Validated& v) {
  int P = v.points(), R = v.regions();
  IntMatrix a(2 * P, R);
  for (int p = 0; p < P; ++p) {
    std::vector<Int> row(R, 0);
    add_jump(v, row, v.incoming(CurveKind::Alpha, p), 1);
    add_jump(v, row, v.outgoing(CurveKind::Alpha, p), -1);
    for (int r = 0; r < R; ++r) a.at(p, r) = row[r];
    std::vector<Int> brow(R, 0);
    add_jump(v, brow, v.incoming(CurveKind::Beta, p), 1);
    add_jump(v, brow, v.outgoing(CurveKind::Beta, p), -1);
    for (int r = 0; r < R; ++r) a.at(P + p, r) = brow[r];
  }
  return a;
}

std::vector<Int> corner_rhs(const Validated& v, const Generator& from, const Generator& to) {
  int P = v.points();
  std::vector<Int> b(2 * P, 0);
  for (int p = 0; p < P; ++p) {
    Int d = Int(contains(from, p) ? 1 : 0) - Int(contains(to, p) ? 1 : 0);
    b[p] = d;
    b[P + p] = -d;
  }
  return b;
}

namespace {

IntMatrix pinned_system(const Validated& v, const std::vector<int>& pinned_regions) {
  IntMatrix eqs = corner_equations(v);
  IntMatrix a(eqs.rows + int(pinned_regions.size()), v.regions());
  for (int r = 0; r < eqs.rows; ++r)
    for (int c = 0; c < eqs.cols; ++c) a.at(r, c) = eqs.at(r, c);
  for (int i = 0; i < int(pinned_regions.size()); ++i)
    a.at(eqs.rows + i, pinned_regions[i]) = 1;
  return a;
}

}  // namespace

DomainSolution connecting_domains(const Validated& v, const Generator& x, const Generator& y,
                                  const std::vector<int>& pinned_regions) {
  IntMatrix a = pinned_system(v, pinned_regions);
  std::vector<Int> b = corner_rhs(v, x, y);
  b.resize(a.rows, 0);
  IntSolveResult r = solve_integer_system(a, b);
  DomainSolution out;
  out.exists = r.solvable;
  if (r.solvable) {
    out.particular = std::move(r.particular);
    out.lattice = std::move(r.kernel);
  }
  return out;
}

std::vector<std::vector<Int>> domain_lattice(const Validated& v,
                                             const std::vector<int>& pinned_regions) {
  IntMatrix a = pinned_system(v, pinned_regions);
  IntSolveResult r = solve_integer_system(a, std::vector<Int>(a.rows, 0));
  check_internal(r.solvable, "homogeneous system must be solvable");
  return r.kernel;
}

Rat euler_measure(const Validated& v, const std::vector<Int>& mult) {
  Rat e = 0;
  for (int r = 0; r < v.regions(); ++r) {
    const Region& reg = v.d.regions[r];
    int chi = 2 - 2 * reg.genus - int(reg.boundary.size());
    e += Rat(mult[r]) * (Rat(chi) - Rat(v.corner_count[r], 4));
  }
  return e;
}

Rat point_measure(const Validated& v, const std::vector<Int>& mult, const Generator& g) {
  Rat total = 0;
  for (int p : g.pts) {
    Int s = 0;
    for (int q = 0; q < 4; ++q) s += mult[v.quadrant[p][q]];
    total += Rat(s, 4);
  }
  return total;
}

Rat maslov_index(const Validated& v, const Generator& x, const Generator& y,
                 const std::vector<Int>& mult) {
  return euler_measure(v, mult) + point_measure(v, mult, x) + point_measure(v, mult, y);
}

std::optional<Int> periodic_pairing(const Validated& v, const std::optional<Generator>& base,
                                    const std::vector<Int>& mult) {
  if (base) {
    Int value = rat_to_int(maslov_index(v, *base, *base, mult), "periodic pairing");
    check_internal(value % 2 == 0, "periodic pairing must be even");
    return value;
  }
  // Without a base generator only the euler measure is available; the
  // pairing is undefined when it fails to be an even integer.
  Rat mu = euler_measure(v, mult);
  if (boost::multiprecision::denominator(mu) != 1) return std::nullopt;
  Int value = boost::multiprecision::numerator(mu);
  if (value % 2 != 0) return std::nullopt;
  return value;
}

Int grading_divisor(const Validated& v, const Generator& base) {
  Int g = 0;
  for (const auto& P : domain_lattice(v, {v.z_region}))
    g = boost::multiprecision::gcd(g, *periodic_pairing(v, base, P));
  return boost::multiprecision::abs(g);
}

WeakAdmissibility check_weak_admissibility(const Validated& v,
                                           const std::optional<Generator>& base, bool pin_w) {
  std::vector<int> pins = {v.z_region};
  if (pin_w) {
    require(v.w_region >= 0, Code::MissingBasepoint,
            "second basepoint required for this admissibility check");
    if (v.w_region != v.z_region) pins.push_back(v.w_region);
  }
  std::vector<std::vector<Int>> lattice = domain_lattice(v, pins);
  int k = int(lattice.size()), R = v.regions();

  // Zero-pairing sublattice, as integer combinations of the lattice basis;
  // without a base generator the whole lattice is examined.
  std::vector<std::vector<Int>> sub;
  if (base) {
    IntMatrix pairing_row(1, k);
    for (int j = 0; j < k; ++j) pairing_row.at(0, j) = *periodic_pairing(v, base, lattice[j]);
    IntSolveResult zero = solve_integer_system(pairing_row, {Int(0)});
    check_internal(zero.solvable, "homogeneous system must be solvable");
    for (const auto& c : zero.kernel) {
      std::vector<Int> q(R, 0);
      for (int j = 0; j < k; ++j)
        for (int r = 0; r < R; ++r) q[r] += c[j] * lattice[j][r];
      sub.push_back(std::move(q));
    }
  } else {
    sub = lattice;
  }

  WeakAdmissibility out;
  if (sub.empty()) return out;

  // A strictly positive area functional vanishing on the sublattice exists
  // exactly when no nonzero element is sign-definite. Write it as 1 + u with
  // u >= 0 and test feasibility of the resulting equalities.
  int m = int(sub.size());
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(R));
  std::vector<Rat> b(m);
  for (int j = 0; j < m; ++j) {
    Rat s = 0;
    for (int r = 0; r < R; ++r) {
      A[j][r] = Rat(sub[j][r]);
      s += Rat(sub[j][r]);
    }
    b[j] = -s;
  }
  FeasibilityResult fr = rational_feasible(A, b);
  if (fr.feasible) return out;

  // Infeasibility certificate -> sign-definite combination of the sublattice.
  std::vector<Rat> w(R, 0);
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < R; ++r) w[r] -= fr.farkas[j] * Rat(sub[j][r]);
  Int scale = 1;
  for (const Rat& c : w)
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
  std::vector<Int> witness(R);
  Int content = 0;
  for (int r = 0; r < R; ++r) {
    witness[r] = rat_to_int(w[r] * Rat(scale), "scaled witness");
    content = boost::multiprecision::gcd(content, witness[r]);
  }
  check_internal(content > 0, "witness must be nonzero");
  bool nonneg = true;
  for (int r = 0; r < R; ++r) {
    witness[r] /= content;
    nonneg = nonneg && witness[r] >= 0;
  }
  check_internal(nonneg, "witness must be sign-definite");
  out.admissible = false;
  out.witness = std::move(witness);
  return out;
}

StrongAdmissibility check_strong_admissibility(const Validated& v,
                                               const std::optional<Generator>& base, int bound) {
  require(bound >= 1, Code::Structure, "search bound must be positive");
  StrongAdmissibility out;
  out.bound = bound;
  std::vector<std::vector<Int>> lattice = domain_lattice(v, {v.z_region});
  int k = int(lattice.size()), R = v.regions();
  if (k == 0) return out;

  double combos = 1;
  for (int j = 0; j < k; ++j) combos *= 2.0 * bound + 1;
  if (k > 8 || combos > 2e7) {
    out.verdict = StrongVerdict::Inconclusive;
    return out;
  }

  std::vector<int> c(k, -bound);
  while (true) {
    bool all_zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (!all_zero) {
      std::vector<Int> P(R, 0);
      for (int j = 0; j < k; ++j)
        for (int r = 0; r < R; ++r) P[r] += Int(c[j]) * lattice[j][r];
      bool trivial = std::all_of(P.begin(), P.end(), [](const Int& x) { return x == 0; });
      std::optional<Int> pairing = trivial ? std::optional<Int>() : periodic_pairing(v, base, P);
      if (pairing) {
        Int two_n = *pairing;
        if (two_n >= 0) {
          Int n = two_n / 2;
          Int top = *std::max_element(P.begin(), P.end());
          if (!(top > n)) {
            out.verdict = StrongVerdict::CounterexampleFound;
            out.witness = std::move(P);
            return out;
          }
        }
      }
    }
    int j = 0;
    while (j < k && c[j] == bound) c[j++] = -bound;
    if (j == k) break;
    c[j]++;
  }
  out.verdict = StrongVerdict::Verified;
  return out;
}

}  // namespace hf
