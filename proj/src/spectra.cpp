#include "permspec/spectra.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <thread>

#include "permspec/config.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/matrix_ops.hpp"
#include "permspec/specht.hpp"

namespace permspec {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

LinForm z_times(const Rational& c) { return LinForm::variable(VarId::z(), c); }

// sum over i<j of coeff(i,j) * y_{i,j}
LinForm y_sum(int n, const std::function<Rational(int, int)>& coeff) {
  LinForm f;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      f += LinForm::variable(VarId::y(i, j), coeff(i, j));
  return f;
}

LinForm x_sum(int n, const Rational& c) {
  LinForm f;
  for (int i = 1; i <= n - 1; ++i) f += LinForm::variable(VarId::x(i), c);
  return f;
}

std::vector<EigenPair> golden_if_small(int n) {
  const LinForm y12 = LinForm::variable(VarId::y(1, 2));
  const LinForm y13 = LinForm::variable(VarId::y(1, 3));
  const LinForm y23 = LinForm::variable(VarId::y(2, 3));
  switch (n) {
    case 1:
      return {{z_times(1), 1}};
    case 2:
      return {{y12 + z_times(2), 1}, {z_times(2) - y12, 1}};
    case 3:
      return {{y12 * Rational(3) + y13 * Rational(3) + y23 * Rational(3) + z_times(6), 1},
              {y13 - y12 - y23, 1},
              {z_times(3) - y12 - y13 * Rational(2) - y23, 2},
              {z_times(3), 2}};
    default:
      throw InternalError("golden_if_small: n must be 1, 2, or 3");
  }
}

long long zero_mult(int n) {
  // n! - n(3n-7)/2 - 3
  return factorial(n) - static_cast<long long>(n) * (3 * n - 7) / 2 - 3;
}

}  // namespace

std::string matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::F: return "F";
    case MatrixKind::IF: return "IF";
    case MatrixKind::DIF: return "DIF";
    case MatrixKind::MIF: return "MIF";
    case MatrixKind::SPECHT_IF: return "SPECHT_IF";
  }
  return "?";
}

MatrixKind matrix_kind_from_name(const std::string& name) {
  if (name == "F") return MatrixKind::F;
  if (name == "IF") return MatrixKind::IF;
  if (name == "DIF") return MatrixKind::DIF;
  if (name == "MIF") return MatrixKind::MIF;
  if (name == "SPECHT_IF") return MatrixKind::SPECHT_IF;
  throw UsageError("unknown matrix kind '" + name + "'");
}

long long SpectrumSpec::dimension() const {
  return kind == MatrixKind::SPECHT_IF ? n - 1 : factorial(n);
}

std::vector<LinForm> SpectrumSpec::eigenvalues() const {
  std::vector<LinForm> v;
  v.reserve(eigenpairs.size());
  for (const EigenPair& e : eigenpairs) v.push_back(e.value);
  return v;
}

SpectrumSpec predicted_spectrum(MatrixKind kind, int n) {
  SpectrumSpec spec;
  spec.kind = kind;
  spec.n = n;
  const Rational fn(factorial(n));
  const Rational fn2(n >= 2 ? factorial(n - 2) : 1);
  const Rational fn3(n >= 3 ? factorial(n - 3) : 1);
  const Rational n_fn2 = Rational(n) * fn2;

  switch (kind) {
    case MatrixKind::IF: {
      if (n >= 1 && n <= 3) {
        spec.eigenpairs = golden_if_small(n);
        spec.provenance = "golden-n" + std::to_string(n);
        return spec;
      }
      if (n < 4) break;
      spec.provenance = "inv-fix-spectrum-theorem";
      spec.eigenpairs = {
          {y_sum(n, [&](int, int) { return fn / 2; }) + z_times(fn), 1},
          {z_times(n_fn2) -
               y_sum(n, [&](int i, int j) { return fn2 * Rational(j - i); }),
           n - 1},
          {y_sum(n,
                 [&](int i, int j) {
                   return -fn3 * Rational(n - 2 * (j - i));
                 }),
           binomial(n - 1, 2)},
          {z_times(n_fn2), static_cast<long long>(n - 1) * (n - 2)},
          {LinForm{}, zero_mult(n)}};
      return spec;
    }
    case MatrixKind::DIF: {
      if (n < 4) break;
      spec.provenance = "des-inv-fix-spectrum-corollary";
      spec.eigenpairs = {
          {x_sum(n, fn / 2) + y_sum(n, [&](int, int) { return fn / 2; }) +
               z_times(fn),
           1},
          {x_sum(n, -fn2) -
               y_sum(n, [&](int i, int j) { return fn2 * Rational(j - i); }) +
               z_times(n_fn2),
           n - 1},
          {x_sum(n, -fn2) + y_sum(n,
                                  [&](int i, int j) {
                                    return -fn3 * Rational(n - 2 * (j - i));
                                  }),
           binomial(n - 1, 2)},
          {z_times(n_fn2), static_cast<long long>(n - 1) * (n - 2)},
          {LinForm{}, zero_mult(n)}};
      return spec;
    }
    case MatrixKind::MIF: {
      if (n < 4) break;
      spec.provenance = "maj-inv-fix-spectrum-corollary";
      // The third value is -2 n!/3: certification resolves the printed
      // -2n!/6 in its favor (see the errata ledger).
      spec.eigenpairs = {
          {LinForm(fn * Rational(binomial(n, 2) + 1)), 1},
          {LinForm(Rational(n * (2 - n) * (n + 5)) * fn2 / 6), n - 1},
          {LinForm(Rational(-2) * fn / 3), binomial(n - 1, 2)},
          {LinForm(n_fn2), static_cast<long long>(n - 1) * (n - 2)},
          {LinForm{}, zero_mult(n)}};
      return spec;
    }
    case MatrixKind::F: {
      if (n < 4) break;
      spec.provenance = "fix-spectrum-theorem";
      spec.eigenpairs = {
          {z_times(fn), 1},
          {z_times(n_fn2), static_cast<long long>(n - 1) * (n - 1)},
          {LinForm{},
           factorial(n) - static_cast<long long>(n - 1) * (n - 1) - 1}};
      return spec;
    }
    case MatrixKind::SPECHT_IF: {
      if (n < 4) break;
      spec.provenance = "specht-action-theorem";
      spec.eigenpairs = {
          {z_times(n_fn2) -
               y_sum(n, [&](int i, int j) { return fn2 * Rational(j - i); }),
           1},
          {z_times(n_fn2), n - 2}};
      return spec;
    }
  }
  throw UsageError("predicted_spectrum: no registered spectrum for kind " +
                   matrix_kind_name(kind) + " at n=" + std::to_string(n));
}

namespace {

// Uniform access to the certifiable matrices: dimension, variable set,
// symbolic trace / row sums, and exact specialization.
struct MatrixHandle {
  size_t dim = 0;
  std::set<VarId> vars;
  LinForm trace;
  bool row_sum_applicable = false;
  std::optional<LinForm> common_row_sum;
  std::function<Matrix<Rational>(const Assignment&)> specialize_fn;
};

MatrixHandle build_handle(MatrixKind kind, int n) {
  MatrixHandle h;
  if (kind == MatrixKind::SPECHT_IF) {
    auto m = std::make_shared<Matrix<LinForm>>(specht_action(
        add(element_of(StatKind::INV_Y, n), element_of(StatKind::FIX_Z, n))));
    h.dim = m->rows();
    h.vars = collect_vars(*m);
    h.trace = m->trace();
    h.row_sum_applicable = false;
    h.specialize_fn = [m](const Assignment& a) { return specialize(*m, a); };
    return h;
  }
  StatKind stat;
  switch (kind) {
    case MatrixKind::F: stat = StatKind::FIX_Z; break;
    case MatrixKind::IF: stat = StatKind::INV_Y_PLUS_FIX_Z; break;
    case MatrixKind::DIF: stat = StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z; break;
    case MatrixKind::MIF: stat = StatKind::MAJ_PLUS_INV_PLUS_FIX; break;
    default: throw InternalError("build_handle: unhandled kind");
  }
  auto table = std::make_shared<RegularMatrixTable>(stat, n);
  h.dim = table->dim();
  h.vars = table->vars();
  h.trace = table->trace();
  h.row_sum_applicable = true;
  LinForm first = table->row_sum(0);
  bool all_equal = true;
  for (size_t i = 1; i < table->dim(); ++i)
    if (table->row_sum(i) != first) {
      all_equal = false;
      break;
    }
  if (all_equal) h.common_row_sum = std::move(first);
  h.specialize_fn = [table](const Assignment& a) { return table->specialized(a); };
  return h;
}

// kernel_dim of shifted specializations, reusing the elimination when the
// canonical integer reduction is identical to an earlier seed's (full key
// comparison, no hashing).
class KernelMemo {
 public:
  long long kernel_dim_of(Matrix<Rational>&& shifted) {
    const long long dim = static_cast<long long>(shifted.rows());
    auto rows = canonical_integer_rows(shifted);
    for (const auto& [key, rank_val] : entries_)
      if (key == rows) return dim - rank_val;
    auto work = rows;  // elimination destroys its input
    const long long r = bareiss_rank_inplace(work);
    entries_.emplace_back(std::move(rows), r);
    return dim - r;
  }

 private:
  std::vector<std::pair<std::vector<std::vector<BigInt>>, long long>> entries_;
};

}  // namespace

CertificationReport certify(const SpectrumSpec& spec,
                            const std::vector<uint64_t>& seeds, int jobs) {
  const auto t0 = Clock::now();
  if (seeds.empty()) throw UsageError("certify: at least one seed required");
  CertificationReport rep;
  rep.spec = spec;
  rep.seeds = seeds;
  auto fail = [&rep](const std::string& what) {
    if (rep.failure.empty()) rep.failure = what;
  };

  if (spec.dimension() > default_caps().max_certify_dimension)
    throw ResourceError("certify: dimension " + std::to_string(spec.dimension()) +
                        " above cap " +
                        std::to_string(default_caps().max_certify_dimension));
  MatrixHandle handle = build_handle(spec.kind, spec.n);

  const auto eigenvalues = spec.eigenvalues();
  const size_t K = eigenvalues.size();

  rep.distinct_ok = true;
  for (size_t a = 0; a < K && rep.distinct_ok; ++a)
    for (size_t b = a + 1; b < K; ++b)
      if (eigenvalues[a] == eigenvalues[b]) {
        rep.distinct_ok = false;
        break;
      }
  if (!rep.distinct_ok) fail("eigenvalues not pairwise distinct as forms");

  long long mult_sum = 0;
  for (const EigenPair& e : spec.eigenpairs) mult_sum += e.multiplicity;
  rep.mult_sum_ok = (mult_sum == static_cast<long long>(handle.dim));
  if (!rep.mult_sum_ok) fail("multiplicities do not sum to the dimension");

  LinForm weighted;
  for (const EigenPair& e : spec.eigenpairs)
    weighted += e.value * Rational(e.multiplicity);
  rep.trace_ok = (handle.trace == weighted);
  if (!rep.trace_ok) fail("trace does not match multiplicity-weighted sum");

  rep.row_sum_applicable = handle.row_sum_applicable;
  if (handle.row_sum_applicable) {
    rep.row_sum_ok = handle.common_row_sum.has_value() &&
                     !spec.eigenpairs.empty() &&
                     *handle.common_row_sum == spec.eigenpairs[0].value &&
                     spec.eigenpairs[0].multiplicity == 1;
    if (!rep.row_sum_ok) fail("row sums do not match the top eigenvalue");
  } else {
    rep.row_sum_ok = true;
  }

  std::set<VarId> vars = handle.vars;
  for (const LinForm& f : eigenvalues) f.collect_vars(vars);

  for (uint64_t seed : seeds)
    rep.assignments.push_back(random_assignment(
        vars, seed, eigenvalues, default_caps().assignment_retries));

  std::vector<Matrix<Rational>> specialized;
  specialized.reserve(seeds.size());
  for (const Assignment& a : rep.assignments)
    specialized.push_back(handle.specialize_fn(a));

  std::vector<std::vector<Rational>> lam_at(seeds.size());
  for (size_t s = 0; s < seeds.size(); ++s)
    for (const LinForm& f : eigenvalues)
      lam_at[s].push_back(f.eval(rep.assignments[s]));

  rep.eigen.resize(K);
  for (size_t k = 0; k < K; ++k) {
    rep.eigen[k].value = spec.eigenpairs[k].value;
    rep.eigen[k].multiplicity = spec.eigenpairs[k].multiplicity;
  }

  auto run_task = [&](size_t k) {
    KernelMemo memo;
    EigenCertification& ec = rep.eigen[k];
    for (size_t s = 0; s < seeds.size(); ++s) {
      Matrix<Rational> shifted = shift_diagonal(specialized[s], lam_at[s][k]);
      ec.kernel_dims.push_back(memo.kernel_dim_of(std::move(shifted)));
    }
    ec.ok = true;
    for (long long kd : ec.kernel_dims)
      if (kd != ec.multiplicity) ec.ok = false;
  };

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(K)));
  if (workers <= 1) {
    for (size_t k = 0; k < K; ++k) run_task(k);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t k = next.fetch_add(1); k < K; k = next.fetch_add(1))
          run_task(k);
      });
    for (auto& th : pool) th.join();
  }

  for (size_t k = 0; k < K; ++k)
    if (!rep.eigen[k].ok)
      fail("eigenvalue " + rep.eigen[k].value.str() + ": kernel dims " +
           [&] {
             std::string s;
             for (long long kd : rep.eigen[k].kernel_dims)
               s += (s.empty() ? "" : ",") + std::to_string(kd);
             return s;
           }() +
           " != multiplicity " + std::to_string(rep.eigen[k].multiplicity));

  rep.diagonalizable_ok = true;
  for (size_t s = 0; s < seeds.size(); ++s) {
    long long total = 0;
    for (size_t k = 0; k < K; ++k) total += rep.eigen[k].kernel_dims[s];
    if (total != static_cast<long long>(handle.dim)) rep.diagonalizable_ok = false;
  }
  if (!rep.diagonalizable_ok) fail("kernel dimensions do not sum to the dimension");

  rep.pass = rep.distinct_ok && rep.mult_sum_ok && rep.trace_ok &&
             rep.row_sum_ok && rep.diagonalizable_ok;
  for (const EigenCertification& ec : rep.eigen) rep.pass = rep.pass && ec.ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

nlohmann::json CertificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["kind"] = matrix_kind_name(spec.kind);
  j["n"] = spec.n;
  j["provenance"] = spec.provenance;
  j["dimension"] = spec.dimension();
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (!pass) j["failure"] = failure;
  nlohmann::json eig = nlohmann::json::array();
  for (const EigenCertification& e : eigen) {
    nlohmann::json je;
    je["value"] = e.value.str();
    je["mult"] = e.multiplicity;
    je["kernel_dims"] = e.kernel_dims;
    eig.push_back(std::move(je));
  }
  j["eigen"] = std::move(eig);
  j["seeds"] = seeds;
  j["checks"] = {{"distinct", distinct_ok},
                 {"mult_sum", mult_sum_ok},
                 {"trace", trace_ok},
                 {"row_sum_applicable", row_sum_applicable},
                 {"row_sum", row_sum_ok},
                 {"diagonalizable", diagonalizable_ok}};
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

namespace {

template <class E>
struct ProductCheck {
  bool annihilates = false;
  std::vector<bool> omitted_nonzero;
};

template <class E>
ProductCheck<E> chain_products(const Matrix<E>& m, const std::vector<E>& roots) {
  const size_t K = roots.size();
  std::vector<Matrix<E>> factors;
  factors.reserve(K);
  for (const E& r : roots) factors.push_back(shift_diagonal(m, r));

  // prefix[k] = f0 ... fk, suffix[k] = fk ... f_{K-1}
  std::vector<Matrix<E>> prefix, suffix;
  prefix.reserve(K);
  suffix.reserve(K);
  prefix.push_back(factors[0]);
  for (size_t k = 1; k < K; ++k)
    prefix.push_back(mat_mul(prefix.back(), factors[k]));
  suffix.resize(K, Matrix<E>(0, 0));
  suffix[K - 1] = factors[K - 1];
  for (size_t k = K - 1; k-- > 0;)
    suffix[k] = mat_mul(factors[k], suffix[k + 1]);

  ProductCheck<E> out;
  out.annihilates = prefix[K - 1].is_zero();
  out.omitted_nonzero.resize(K, false);
  for (size_t k = 0; k < K; ++k) {
    Matrix<E> omitted(0, 0);
    if (K == 1) {
      // dropping the only factor leaves the empty product; treat as nonzero
      out.omitted_nonzero[k] = true;
      continue;
    }
    if (k == 0)
      omitted = suffix[1];
    else if (k == K - 1)
      omitted = prefix[K - 2];
    else
      omitted = mat_mul(prefix[k - 1], suffix[k + 1]);
    out.omitted_nonzero[k] = !omitted.is_zero();
  }
  return out;
}

}  // namespace

MinPolyReport minimal_polynomial_check(MatrixKind kind, int n,
                                       const std::vector<LinForm>& roots) {
  const auto t0 = Clock::now();
  if (roots.empty()) throw UsageError("minimal_polynomial_check: no roots");
  MinPolyReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.roots = roots;

  switch (kind) {
    case MatrixKind::F: {
      if (n > 6)
        throw ResourceError("minimal_polynomial_check: F capped at n <= 6");
      // F = z * F1 with F1 integer, and every root must be c * z, so the
      // product is z^K * prod (F1 - c_k I): exact over the integers.
      std::vector<Rational> consts;
      for (const LinForm& r : roots) {
        if (!r.constant().is_zero() || r.terms().size() > 1 ||
            (r.terms().size() == 1 && r.terms()[0].first != VarId::z()))
          throw UsageError("minimal_polynomial_check: F roots must be "
                           "multiples of z");
        consts.push_back(r.coeff(VarId::z()));
      }
      RegularMatrixTable table(StatKind::FIX_Z, n);
      Assignment z1;
      z1.set(VarId::z(), Rational(1));
      const Matrix<Rational> f1 = table.specialized(z1);
      auto pc = chain_products(f1, consts);
      rep.annihilates = pc.annihilates;
      rep.omitted_nonzero = std::move(pc.omitted_nonzero);
      break;
    }
    case MatrixKind::MIF: {
      if (n > 5)
        throw ResourceError("minimal_polynomial_check: MIF capped at n <= 5");
      std::vector<Rational> consts;
      for (const LinForm& r : roots) {
        if (!r.is_constant())
          throw UsageError("minimal_polynomial_check: MIF roots are scalars");
        consts.push_back(r.constant());
      }
      RegularMatrixTable table(StatKind::MAJ_PLUS_INV_PLUS_FIX, n);
      const Matrix<Rational> m = table.specialized(Assignment{});
      auto pc = chain_products(m, consts);
      rep.annihilates = pc.annihilates;
      rep.omitted_nonzero = std::move(pc.omitted_nonzero);
      break;
    }
    case MatrixKind::IF:
    case MatrixKind::DIF: {
      if (n > 4)
        throw ResourceError(
            "minimal_polynomial_check: symbolic product capped at n <= 4");
      const StatKind stat = kind == MatrixKind::IF
                                ? StatKind::INV_Y_PLUS_FIX_Z
                                : StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z;
      const Matrix<LinForm> m = regular_matrix(stat, n);
      std::set<VarId> vars = collect_vars(m);
      for (const LinForm& r : roots) r.collect_vars(vars);
      auto reg = VarRegistry::of(vars);
      const Matrix<Poly> mp = to_poly_matrix(m, reg);
      std::vector<Poly> proots;
      for (const LinForm& r : roots) proots.push_back(Poly::from_linform(r, reg));
      auto pc = chain_products(mp, proots);
      rep.annihilates = pc.annihilates;
      rep.omitted_nonzero = std::move(pc.omitted_nonzero);
      break;
    }
    case MatrixKind::SPECHT_IF: {
      if (n > 7)
        throw ResourceError("minimal_polynomial_check: SPECHT_IF capped at n <= 7");
      const Matrix<LinForm> m = specht_action(
          add(element_of(StatKind::INV_Y, n), element_of(StatKind::FIX_Z, n)));
      std::set<VarId> vars = collect_vars(m);
      for (const LinForm& r : roots) r.collect_vars(vars);
      auto reg = VarRegistry::of(vars);
      const Matrix<Poly> mp = to_poly_matrix(m, reg);
      std::vector<Poly> proots;
      for (const LinForm& r : roots) proots.push_back(Poly::from_linform(r, reg));
      auto pc = chain_products(mp, proots);
      rep.annihilates = pc.annihilates;
      rep.omitted_nonzero = std::move(pc.omitted_nonzero);
      break;
    }
  }

  rep.minimal = true;
  for (bool nz : rep.omitted_nonzero) rep.minimal = rep.minimal && nz;
  rep.pass = rep.annihilates && rep.minimal;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

nlohmann::json MinPolyReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["kind"] = matrix_kind_name(kind);
  j["n"] = n;
  nlohmann::json r = nlohmann::json::array();
  for (const LinForm& f : roots) r.push_back(f.str());
  j["roots"] = std::move(r);
  j["annihilates"] = annihilates;
  j["omitted_factor_nonzero"] = omitted_nonzero;
  j["minimal"] = minimal;
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

LejReport lej_spectrum_check(int n, const Poly& p, uint64_t seed) {
  if (p.is_zero()) throw UsageError("lej_spectrum_check: p must be nonzero");
  if (n < 1 || n > default_caps().max_symbolic_degree)
    throw ResourceError("lej_spectrum_check: n outside [1, " +
                        std::to_string(default_caps().max_symbolic_degree) +
                        "]");
  for (size_t s = 0; s < (p.registry() ? p.registry()->size() : 0); ++s) {
    bool used = false;
    for (const auto& [m, c] : p.terms())
      if (m[s] > 0) used = true;
    if (used && p.registry()->var(s) != VarId::z())
      throw UsageError("lej_spectrum_check: p must be a polynomial in z");
  }

  LejReport rep;
  rep.n = n;
  rep.p = p.str();
  const long long N = factorial(n);

  // Every entry of J equals p, so J * ones has all coordinates equal to the
  // row sum and J * (e_iota - e_sigma) is the difference of equal columns.
  Poly row_sum(p.registry());
  for (long long j = 0; j < N; ++j) row_sum += p;
  rep.ones_vector_ok = (row_sum == p * Rational(N));
  rep.differences_ok = true;  // columns are identical by construction

  // Specialization with p(a) != 0 for the kernel dimensions.
  std::set<VarId> vars;
  if (p.registry() && p.registry()->size() > 0) vars.insert(VarId::z());
  Assignment a;
  bool found = false;
  for (int attempt = 0; attempt < default_caps().assignment_retries; ++attempt) {
    a = random_assignment(vars, seed + static_cast<uint64_t>(attempt));
    if (!p.eval(a).is_zero()) {
      found = true;
      break;
    }
  }
  if (!found)
    throw SetupError("lej_spectrum_check: no assignment with p != 0 found");

  const Rational pa = p.eval(a);
  Matrix<Rational> ja(static_cast<size_t>(N), static_cast<size_t>(N),
                      pa);
  rep.kernel_zero = kernel_dim(ja);
  rep.kernel_top = kernel_dim(shift_diagonal(ja, Rational(N) * pa));
  rep.pass = rep.ones_vector_ok && rep.differences_ok && rep.kernel_top == 1 &&
             rep.kernel_zero == N - 1;
  return rep;
}

nlohmann::json LejReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["p"] = p;
  j["ones_vector"] = ones_vector_ok;
  j["differences"] = differences_ok;
  j["kernel_top"] = kernel_top;
  j["kernel_zero"] = kernel_zero;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return j;
}

}  // namespace permspec
