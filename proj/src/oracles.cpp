#include "permspec/oracles.hpp"

#include "permspec/config.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/poly.hpp"
#include "permspec/specht.hpp"
#include "permspec/stats.hpp"

namespace permspec {

nlohmann::json LemmaCheck::to_json() const {
  nlohmann::json j;
  j["lemma"] = lemma;
  j["n"] = n;
  if (item > 0) j["item"] = item;
  if (!params.empty()) j["params"] = params;
  j["closed_form"] = closed_form;
  j["brute_force"] = brute_force;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return j;
}

nlohmann::json IdentitySuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["n"] = n;
  j["instances"] = instances;
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (!pass) j["failure"] = failure;
  return j;
}

nlohmann::json LambdaReport::to_json() const {
  nlohmann::json j;
  j["suite"] = "lambda";
  j["n"] = n;
  j["coeffs_all_equal"] = coeffs_all_equal;
  j["lambda"] = lambda;
  j["lambda_reconciles"] = lambda_reconciles;
  j["iota_crosscheck"] = iota_crosscheck;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return j;
}

namespace {

void check_fix_lemma_degree(const char* name, int n) {
  if (n < 4 || n > 7)
    throw UsageError(std::string(name) + ": n outside [4, 7]");
}

LemmaCheck make_check(std::string lemma, int n, int item, std::vector<int> params,
                      long long closed, long long brute) {
  LemmaCheck c;
  c.lemma = std::move(lemma);
  c.n = n;
  c.item = item;
  c.params = std::move(params);
  c.closed_form = std::to_string(closed);
  c.brute_force = std::to_string(brute);
  c.pass = (closed == brute);
  return c;
}

}  // namespace

std::vector<LemmaCheck> leij_check(int n) {
  check_fix_lemma_degree("leij_check", n);
  const auto perms = enumerate_group(n);
  const long long f2 = factorial(n - 2);
  std::vector<LemmaCheck> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      long long s1 = 0, s2 = 0, s3 = 0, s4 = 0;
      for (const Permutation& s : perms) {
        const long long f = fix_count(s);
        if (s(i) == i && s(j) == j) s1 += f;
        if (s(i) == i && s(j) != j) s2 += f;
        if (s(i) == j && s(j) == i) s3 += f;
        if (s(i) == j && s(j) != i) s4 += f;
      }
      out.push_back(make_check("leij", n, 1, {i, j}, 3 * f2, s1));
      out.push_back(make_check("leij", n, 2, {i, j}, (2 * n - 5) * f2, s2));
      out.push_back(make_check("leij", n, 3, {i, j}, f2, s3));
      out.push_back(make_check("leij", n, 4, {i, j}, (n - 3) * f2, s4));
    }
  return out;
}

std::vector<LemmaCheck> leijk_check(int n) {
  check_fix_lemma_degree("leijk_check", n);
  const auto perms = enumerate_group(n);
  const long long f3 = factorial(n - 3);
  std::vector<LemmaCheck> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || k == i) continue;
        long long s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0, s6 = 0;
        for (const Permutation& s : perms) {
          const long long f = fix_count(s);
          if (s(i) == k && s(j) == j) s1 += f;
          if (s(i) == k && s(j) != j) s2 += f;
          if (s(i) != k && s(j) == j) s3 += f;
          if (s(i) == j && s(j) == k) s4 += f;
          if (s(i) == j && s(j) != k) s5 += f;
          if (s(i) != j && s(j) == k) s6 += f;
        }
        out.push_back(make_check("leijk", n, 1, {i, j, k}, (2 * n - 5) * f3, s1));
        out.push_back(make_check("leijk", n, 2, {i, j, k},
                                 (static_cast<long long>(n) * n - 6 * n + 9) * f3, s2));
        out.push_back(make_check("leijk", n, 3, {i, j, k},
                                 (2LL * n * n - 8 * n + 9) * f3, s3));
        out.push_back(make_check("leijk", n, 4, {i, j, k}, (n - 3) * f3, s4));
        out.push_back(make_check("leijk", n, 5, {i, j, k},
                                 (static_cast<long long>(n) * n - 5 * n + 7) * f3, s5));
        out.push_back(make_check("leijk", n, 6, {i, j, k},
                                 (static_cast<long long>(n) * n - 5 * n + 7) * f3, s6));
      }
  return out;
}

std::vector<LemmaCheck> leyij_check(int n) {
  if (n < 4 || n > 6) throw UsageError("leyij_check: n outside [4, 6]");
  std::vector<LemmaCheck> out;
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j)
      for (int which = 1; which <= 4; ++which) {
        const LinForm closed = leyij_sum_closed(n, i, j, which);
        const LinForm brute = leyij_sum_bruteforce(n, i, j, which);
        LemmaCheck c;
        c.lemma = "leyij";
        c.n = n;
        c.item = which;
        c.params = {i, j};
        c.closed_form = closed.str();
        c.brute_force = brute.str();
        c.pass = (closed == brute);
        out.push_back(std::move(c));
      }
  return out;
}

LemmaCheck leg_check(int n) {
  if (n < 4) throw UsageError("leg_check: n must be >= 4");
  const Rational f2(factorial(n - 2));
  LinForm defining;
  for (int i = 2; i <= n; ++i)
    defining += prinv_column_form(n, i) * (Rational(n - 2 * i + 1) / Rational(2) * f2);
  LinForm closed;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      closed += LinForm::variable(VarId::y(i, j), -f2 * Rational(j - i));
  LemmaCheck c;
  c.lemma = "leg";
  c.n = n;
  c.closed_form = closed.str();
  c.brute_force = defining.str();
  c.pass = (closed == defining);
  return c;
}

namespace {

// S(tau) = sum_sigma fix(sigma) fix(sigma^-1 tau) for every tau, by rank.
std::vector<long long> fix_convolution(const std::vector<Permutation>& perms) {
  const size_t N = perms.size();
  std::vector<long long> fix(N);
  for (size_t r = 0; r < N; ++r) fix[r] = fix_count(perms[r]);
  std::vector<long long> s(N, 0);
  for (size_t si = 0; si < N; ++si) {
    if (fix[si] == 0) continue;
    const Permutation sinv = inverse(perms[si]);
    for (size_t ti = 0; ti < N; ++ti) {
      const auto u = static_cast<size_t>(rank_of(compose(sinv, perms[ti])));
      s[ti] += fix[si] * fix[u];
    }
  }
  return s;
}

}  // namespace

IdentitySuiteReport prfix_check(int n) {
  if (n < 4 || n > 6) throw UsageError("prfix_check: n outside [4, 6]");
  IdentitySuiteReport rep;
  rep.name = "prfix";
  rep.n = n;
  rep.pass = true;

  const auto perms = enumerate_group(n);
  const auto s = fix_convolution(perms);
  const long long sumsq = sum_fix_sq(n);
  const long long nf2 = static_cast<long long>(n) * factorial(n - 2);

  for (size_t t = 0; t < perms.size(); ++t) {
    ++rep.instances;
    const long long rhs = sumsq - nf2 * (n - fix_count(perms[t]));
    if (s[t] != rhs && rep.pass) {
      rep.pass = false;
      rep.failure = "tau=" + perms[t].str() + ": lhs " + std::to_string(s[t]) +
                    " != rhs " + std::to_string(rhs);
    }
  }

  // Carried with its z^2 grading while symbolic work is cheap: both sides
  // as polynomials in z.
  if (n <= default_caps().max_symbolic_degree && rep.pass) {
    auto reg = VarRegistry::of({VarId::z()});
    const Poly z = Poly::variable(VarId::z(), reg);
    const Poly z2 = z * z;
    for (size_t t = 0; t < perms.size(); ++t) {
      const Poly lhs = z2 * Rational(s[t]);
      const Poly rhs =
          z2 * Rational(sumsq) -
          z * Rational(nf2) *
              (z * Rational(n) - z * Rational(fix_count(perms[t])));
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.failure = "graded check failed at tau=" + perms[t].str();
        break;
      }
    }
  }
  return rep;
}

IdentitySuiteReport transposition_recurrence_check(int n) {
  if (n < 4 || n > 5)
    throw UsageError("transposition_recurrence_check: n outside [4, 5]");
  IdentitySuiteReport rep;
  rep.name = "recurrence";
  rep.n = n;
  rep.pass = true;

  const auto perms = enumerate_group(n);
  const auto s = fix_convolution(perms);
  const long long nf2 = static_cast<long long>(n) * factorial(n - 2);

  auto check_instance = [&](const Permutation& tau, size_t tau_rank, int i,
                            int j, const char* which) {
    const Permutation tau2 = right_multiply_transposition(tau, i, j);
    const auto t2 = static_cast<size_t>(rank_of(tau2));
    ++rep.instances;
    const long long lhs = s[t2];
    const long long rhs =
        s[tau_rank] - nf2 * (fix_count(tau) - fix_count(tau2));
    if (lhs != rhs && rep.pass) {
      rep.pass = false;
      rep.failure = std::string(which) + " tau=" + tau.str() + " (i j)=(" +
                    std::to_string(i) + " " + std::to_string(j) + "): lhs " +
                    std::to_string(lhs) + " != rhs " + std::to_string(rhs);
    }
  };

  for (size_t t = 0; t < perms.size(); ++t) {
    const Permutation& tau = perms[t];
    const std::vector<int> fixed = fixed_points(tau);
    // both endpoints fixed
    for (size_t a = 0; a < fixed.size(); ++a)
      for (size_t b = a + 1; b < fixed.size(); ++b)
        check_instance(tau, t, fixed[a], fixed[b], "both-fixed");
    // cycle endpoint and a fixed point
    for (int a = 1; a <= n; ++a) {
      if (tau(a) == a) continue;
      for (int j : fixed) check_instance(tau, t, a, j, "cycle-end");
    }
  }
  return rep;
}

long long sum_fix_sq(int n) {
  if (n < 1 || n > 7) throw UsageError("sum_fix_sq: n outside [1, 7]");
  long long total = 0;
  for (const Permutation& s : enumerate_group(n)) {
    const long long f = fix_count(s);
    total += f * f;
  }
  return total;
}

LambdaReport lambda_check(int n) {
  if (n < 4 || n > 5) throw UsageError("lambda_check: n outside [4, 5]");
  LambdaReport rep;
  rep.n = n;

  const long long nf2 = static_cast<long long>(n) * factorial(n - 2);
  const auto f = element_of(StatKind::FIX_Z, n);
  const auto b = subtract_identity_multiple(
      f, LinForm::variable(VarId::z(), Rational(nf2)));
  const auto conv = convolve(f, b, /*override_cap=*/true);

  rep.coeffs_all_equal = true;
  for (const Poly& c : conv.coeffs)
    if (!(c == conv.coeffs[0])) {
      rep.coeffs_all_equal = false;
      break;
    }

  const Poly& lambda = conv.coeffs[0];
  rep.lambda = lambda.str();

  auto reg = lambda.registry() ? lambda.registry() : VarRegistry::of({VarId::z()});
  const Poly z = Poly::variable(VarId::z(), reg);
  const long long nf = factorial(n);
  // n! * Lambda = (n! z) * (n(n-2)(n-2)! z)
  const Poly lhs = lambda * Rational(nf);
  const Poly rhs = (z * Rational(nf)) *
                   (z * Rational(static_cast<long long>(n) * (n - 2) *
                                 factorial(n - 2)));
  rep.lambda_reconciles = (lhs == rhs);

  // coefficient-of-iota rearrangement: Lambda + n^2 (n-2)! z^2 = (sum fix^2) z^2
  const Poly cross = lambda + z * z *
                                  Rational(static_cast<long long>(n) * n *
                                           factorial(n - 2));
  rep.iota_crosscheck = (cross == z * z * Rational(sum_fix_sq(n)));

  rep.pass = rep.coeffs_all_equal && rep.lambda_reconciles && rep.iota_crosscheck;
  return rep;
}

}  // namespace permspec
