#include "permspec/properties.hpp"

#include <random>

#include "permspec/characters.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/matrix_ops.hpp"
#include "permspec/stats.hpp"

namespace permspec {

nlohmann::json PropertyReport::to_json() const {
  nlohmann::json j;
  j["property"] = name;
  j["instances"] = instances;
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

namespace {

PropertyReport group_axioms(std::mt19937_64& rng) {
  PropertyReport rep;
  rep.name = "group_axioms";
  rep.pass = true;
  for (int n = 1; n <= 5; ++n) {
    const auto perms = enumerate_group(n);
    const Permutation iota = Permutation::identity(n);
    for (const Permutation& s : perms) {
      ++rep.instances;
      if (compose(s, iota) != s || compose(iota, s) != s ||
          compose(inverse(s), s) != iota || compose(s, inverse(s)) != iota) {
        rep.pass = false;
        rep.detail = "identity/inverse law failed at " + s.str();
        return rep;
      }
    }
    // associativity on sampled triples
    const int samples = n <= 3 ? static_cast<int>(perms.size()) : 200;
    for (int k = 0; k < samples; ++k) {
      const Permutation& a = perms[rng() % perms.size()];
      const Permutation& b = perms[rng() % perms.size()];
      const Permutation& c = perms[rng() % perms.size()];
      ++rep.instances;
      if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
        rep.pass = false;
        rep.detail = "associativity failed";
        return rep;
      }
    }
  }
  return rep;
}

GroupAlgebraElement<LinForm> random_element(int n, std::mt19937_64& rng) {
  GroupAlgebraElement<LinForm> e;
  e.n = n;
  const long long nf = factorial(n);
  for (long long i = 0; i < nf; ++i) {
    LinForm f(Rational(static_cast<long long>(rng() % 7) - 3));
    f += LinForm::variable(VarId::z(),
                           Rational(static_cast<long long>(rng() % 7) - 3));
    if (n >= 2)
      f += LinForm::variable(VarId::y(1, 2),
                             Rational(static_cast<long long>(rng() % 7) - 3));
    e.coeffs.push_back(std::move(f));
  }
  return e;
}

PropertyReport convolution_representation_compat(std::mt19937_64& rng) {
  PropertyReport rep;
  rep.name = "convolution_representation_compatibility";
  rep.pass = true;
  for (int n = 3; n <= 4; ++n) {
    const auto m = regular_matrix(StatKind::INV_Y_PLUS_FIX_Z, n);
    const auto a = element_of(StatKind::INV_Y_PLUS_FIX_Z, n);
    for (int trial = 0; trial < 3; ++trial) {
      const auto b = random_element(n, rng);
      const auto conv = convolve(a, b, /*override_cap=*/true);
      const auto& reg = conv.coeffs[0].registry();
      ++rep.instances;
      // column of coefficients of b, multiplied by the regular matrix
      for (size_t i = 0; i < m.rows(); ++i) {
        Poly acc(reg);
        for (size_t j = 0; j < m.cols(); ++j)
          acc += Poly::from_linform(m.at(i, j), reg) *
                 Poly::from_linform(b.coeffs[j], reg);
        if (!(acc == conv.coeffs[i])) {
          rep.pass = false;
          rep.detail = "matrix/convolution mismatch at n=" + std::to_string(n) +
                       " row " + std::to_string(i);
          return rep;
        }
      }
    }
  }
  return rep;
}

PropertyReport centrality(std::mt19937_64& rng) {
  PropertyReport rep;
  rep.name = "fix_element_centrality";
  rep.pass = true;
  for (int n = 3; n <= 4; ++n) {
    const auto f = element_of(StatKind::FIX_Z, n);
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_element(n, rng);
      ++rep.instances;
      const auto left = convolve(f, a, true);
      const auto right = convolve(a, f, true);
      for (size_t i = 0; i < left.coeffs.size(); ++i)
        if (!(left.coeffs[i] == right.coeffs[i])) {
          rep.pass = false;
          rep.detail = "f_z not central at n=" + std::to_string(n);
          return rep;
        }
    }
  }
  return rep;
}

Matrix<Rational> random_matrix(size_t dim, std::mt19937_64& rng) {
  Matrix<Rational> m(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      m.at(i, j) = Rational(static_cast<long long>(rng() % 199) - 99,
                            static_cast<long long>(rng() % 9) + 1);
  return m;
}

PropertyReport rank_metamorphic(std::mt19937_64& rng) {
  PropertyReport rep;
  rep.name = "rank_metamorphic";
  rep.pass = true;
  for (int trial = 0; trial < 10; ++trial) {
    const size_t dim = 6;
    Matrix<Rational> m = random_matrix(dim, rng);
    // plant rank deficiency in half the trials
    if (trial % 2 == 0) {
      for (size_t j = 0; j < dim; ++j)
        m.at(3, j) = m.at(0, j) * Rational(2) - m.at(1, j) * Rational(3);
    }
    const long long r = rank(m);
    ++rep.instances;
    if (kernel_dim(m) + r != static_cast<long long>(dim)) {
      rep.pass = false;
      rep.detail = "rank + kernel != dim";
      return rep;
    }
    // row swap
    Matrix<Rational> swapped = m;
    for (size_t j = 0; j < dim; ++j)
      std::swap(swapped.at(1, j), swapped.at(4, j));
    // row scaling by a nonzero rational
    Matrix<Rational> scaled = m;
    const Rational c(static_cast<long long>(rng() % 9) + 1,
                     static_cast<long long>(rng() % 4) + 1);
    for (size_t j = 0; j < dim; ++j) scaled.at(2, j) *= c;
    if (rank(swapped) != r || rank(scaled) != r) {
      rep.pass = false;
      rep.detail = "rank changed under row swap or scaling";
      return rep;
    }
  }
  return rep;
}

PropertyReport character_orthogonality() {
  PropertyReport rep;
  rep.name = "character_column_orthogonality";
  rep.pass = true;
  const CharacterTable t = character_table(5);
  const size_t k = t.parts.size();
  for (size_t mu = 0; mu < k; ++mu)
    for (size_t nu = 0; nu < k; ++nu) {
      long long dot = 0;
      for (size_t l = 0; l < k; ++l) dot += t.chi[l][mu] * t.chi[l][nu];
      ++rep.instances;
      const long long expect =
          mu == nu ? centralizer_order(t.parts[mu]) : 0;
      if (dot != expect) {
        rep.pass = false;
        rep.detail = "columns " + t.parts[mu].label() + ", " +
                     t.parts[nu].label() + ": " + std::to_string(dot);
        return rep;
      }
    }
  return rep;
}

}  // namespace

std::vector<PropertyReport> run_property_suites(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyReport> out;
  out.push_back(group_axioms(rng));
  out.push_back(convolution_representation_compat(rng));
  out.push_back(centrality(rng));
  out.push_back(rank_metamorphic(rng));
  out.push_back(character_orthogonality());
  return out;
}

}  // namespace permspec
