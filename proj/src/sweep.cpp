#include "orbit/sweep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "orbit/combinatorics.hpp"
#include "orbit/identities.hpp"
#include "orbit/parallel.hpp"
#include "orbit/rng.hpp"

namespace orbit {

namespace {

std::vector<Scalar> lambda_pool(bool with_trivial) {
  std::vector<Scalar> pool;
  if (with_trivial) {
    pool.push_back(Scalar(0));
    pool.push_back(Scalar(1));
  }
  pool.push_back(Scalar::imaginary_unit());
  pool.push_back(Scalar(-1));
  pool.push_back(Scalar(Rational(1, 2)));
  pool.push_back(Scalar(2));
  pool.push_back(Scalar(3));
  pool.push_back(Scalar(Rational(3, 5), Rational(4, 5)));
  return pool;
}

class Tally {
 public:
  Tally(std::string identity, std::string range) {
    row_.identity = std::move(identity);
    row_.range = std::move(range);
  }

  void check(bool ok, const std::function<std::string()>& where) {
    ++row_.cases;
    if (ok) return;
    ++row_.failures;
    if (!row_.first_failure) row_.first_failure = where();
  }

  // Closed forms that self-check throw IdentityViolation; count it as a miss.
  void guarded(const std::function<bool()>& test, const std::function<std::string()>& where) {
    bool ok = false;
    try {
      ok = test();
    } catch (const IdentityViolation&) {
      ok = false;
    }
    check(ok, where);
  }

  SweepRow take() { return std::move(row_); }

 private:
  SweepRow row_;
};

std::string at(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : fields) {
    out << (first ? "" : ", ") << name << "=" << value;
    first = false;
  }
  return out.str();
}

std::string num(long n) { return std::to_string(n); }

SweepRow binomial_product(const SweepOptions& o) {
  Tally tally("C(k,j)C(j,i)C(k-j,2)/C(k-i,2) = C(k,i)C(k-i-2,j-i)",
              "0<=i<=j<=" + num(o.max_j) + ", j+2<=k<=" + num(o.max_k));
  for (long j = 0; j <= o.max_j; ++j) {
    for (long i = 0; i <= j; ++i) {
      for (long k = j + 2; k <= o.max_k; ++k) {
        tally.check(binom_product_identity(k, i, j),
                    [&] { return at({{"k", num(k)}, {"i", num(i)}, {"j", num(j)}}); });
      }
    }
  }
  return tally.take();
}

SweepRow shifted_product(const SweepOptions& o) {
  Tally tally("(j+1)-recurrence of C(k,i)C(k-i-2,j-i)",
              "1<=i<=" + num(o.max_j) + ", i-1<=j<=" + num(o.max_j) + ", i+2<=k<=" +
                  num(o.max_k));
  for (long i = 1; i <= o.max_j; ++i) {
    for (long j = i - 1; j <= o.max_j; ++j) {
      for (long k = i + 2; k <= o.max_k; ++k) {
        tally.check(shifted_product_identity(k, i, j),
                    [&] { return at({{"k", num(k)}, {"i", num(i)}, {"j", num(j)}}); });
      }
    }
  }
  return tally.take();
}

SweepRow s_sums(const SweepOptions& o) {
  const long max_j = std::max(0L, o.max_j - 2);
  Tally tally("S(j,k) closed form = direct sum",
              "lambda in pool, 0<=j<=" + num(max_j) + ", j<k<=" + num(o.max_k));
  for (const auto& lambda : lambda_pool(true)) {
    for (long j = 0; j <= max_j; ++j) {
      for (long k = j + 1; k <= o.max_k; ++k) {
        tally.guarded([&] { return s_sum(j, k, lambda) == s_sum_direct(j, k, lambda); },
                      [&] {
                        return at({{"lambda", lambda.to_string()}, {"j", num(j)}, {"k", num(k)}});
                      });
      }
    }
  }
  return tally.take();
}

SweepRow t_sums(const SweepOptions& o) {
  const long max_j = std::max(0L, o.max_j - 2);
  Tally tally("T_j closed form = direct sum",
              "lambda in pool minus {0,1}, 0<=j<=" + num(max_j) + ", j+2<=k<=" + num(o.max_k));
  for (const auto& lambda : lambda_pool(false)) {
    for (long j = 0; j <= max_j; ++j) {
      for (long k = j + 2; k <= o.max_k; ++k) {
        tally.check(t_sum_closed(j, k, lambda) == t_sum_direct(j, k, lambda), [&] {
          return at({{"lambda", lambda.to_string()}, {"j", num(j)}, {"k", num(k)}});
        });
      }
    }
  }
  return tally.take();
}

SweepRow d_factors(const SweepOptions& o) {
  Tally tally("C(k,j)D(k,j,lambda) binomial expansion",
              "lambda in pool minus {0,1}, 0<=j<=" + num(o.max_j) + ", j+2<=k<=" +
                  num(o.max_k));
  for (const auto& lambda : lambda_pool(false)) {
    const Scalar one_minus = Scalar(1) - lambda;
    for (long j = 0; j <= o.max_j; ++j) {
      for (long k = j + 2; k <= o.max_k; ++k) {
        Scalar lhs = Scalar(binom(k, j)) * d_factor(k, j, lambda);
        Scalar rhs = one_minus.pow(-j) * t_numerator_poly(k, j).evaluate(lambda);
        tally.check(lhs == rhs, [&] {
          return at({{"lambda", lambda.to_string()}, {"j", num(j)}, {"k", num(k)}});
        });
      }
    }
  }
  return tally.take();
}

SweepRow tj_recurrences(const SweepOptions& o) {
  const long max_j = std::max(0L, o.max_j / 2 - 1);
  const long max_k = std::max(3L, o.max_k / 2);
  Tally tally("T_{j+1} = T_j'/(j+1) and the numerator recurrence",
              "lambda in pool minus {0,1}, 0<=j<=" + num(max_j) + ", j+3<=k<=" + num(max_k));
  for (const auto& lambda : lambda_pool(false)) {
    for (long j = 0; j <= max_j; ++j) {
      for (long k = j + 3; k <= max_k; ++k) {
        tally.guarded([&] { return tj_recurrence_check(j, lambda, k); }, [&] {
          return at({{"lambda", lambda.to_string()}, {"j", num(j)}, {"k", num(k)}});
        });
      }
    }
  }
  return tally.take();
}

SweepRow newton_round_trips(const SweepOptions& o) {
  const long polys = 5 * o.trials;
  Tally tally("Newton forward differences round trip",
              num(polys) + " random integer polynomials of degree <= 6");
  Rng rng(o.seed);
  for (long n = 0; n < polys; ++n) {
    const long degree = rng.uniform(0, 6);
    std::vector<Scalar> coeffs;
    for (long d = 0; d <= degree; ++d) coeffs.push_back(Scalar(rng.uniform(-20, 20)));
    KPolynomial f(coeffs);
    std::vector<Scalar> values;
    for (long x = 1; x <= degree + 1; ++x) values.push_back(f.evaluate(Scalar(x)));
    auto newton = newton_coeffs(values);
    bool ok = true;
    for (long x = -3; x <= degree + 6; ++x) {
      ok = ok && newton_evaluate(newton, Scalar(x)) == f.evaluate(Scalar(x));
    }
    std::vector<Scalar> more;
    for (long x = 1; x <= degree + 3; ++x) more.push_back(f.evaluate(Scalar(x)));
    ok = ok && newton_vanishing_sum(more, degree + 1).is_zero() &&
         newton_vanishing_sum(more, degree + 2).is_zero();
    tally.check(ok, [&] { return at({{"trial", num(n)}, {"degree", num(degree)}}); });
  }
  return tally.take();
}

SweepRow p_coefficients(const SweepOptions& o) {
  Tally tally("P(i,j,m): closed form = recursion = Newton coefficient of (j-x)^(m-1)",
              "1<=m<=6, 0<=j<=" + num(o.max_j) + ", 0<=i<=m");
  for (long m = 1; m <= 6; ++m) {
    for (long j = 0; j <= o.max_j; ++j) {
      std::vector<Scalar> samples;
      for (long x = 1; x <= m + 1; ++x) samples.push_back(Scalar(Integer(j - x)).pow(m - 1));
      auto newton = newton_coeffs(samples);
      for (long i = 0; i <= m; ++i) {
        Rational closed = p_coeff(i, j, m);
        bool ok = closed == p_coeff_recursive(i, j, m) &&
                  Scalar(closed) == newton[static_cast<std::size_t>(i)];
        tally.check(ok, [&] { return at({{"i", num(i)}, {"j", num(j)}, {"m", num(m)}}); });
      }
    }
  }
  return tally.take();
}

SweepRow m_cancellations(const SweepOptions& o) {
  const long max_j = std::max(0L, o.max_j - 2);
  Tally tally("M(m,j,x) cancellation against H_i", "1<=m<=5, 0<=j<=" + num(max_j));
  for (long m = 1; m <= 5; ++m) {
    for (long j = 0; j <= max_j; ++j) {
      tally.check(m_cancellation_check(m, j),
                  [&] { return at({{"m", num(m)}, {"j", num(j)}}); });
    }
  }
  return tally.take();
}

SweepRow rs_identities(const SweepOptions& o) {
  Tally tally("sum_i (-1)^i R(p+i,q-i) S(p+i-1,i) = 0",
              "1<=p<=5, 1<=q<=5, " + num(o.trials) + " random rational assignments each");
  Rng rng(o.seed + 1);
  for (long p = 1; p <= 5; ++p) {
    for (long q = 1; q <= 5; ++q) {
      for (long trial = 0; trial < o.trials; ++trial) {
        std::vector<Scalar> assignment;
        for (long n = 0; n < p + q; ++n) {
          assignment.push_back(rng.coin() ? Scalar(rng.rational())
                                          : Scalar(rng.rational(), rng.rational()));
        }
        tally.check(rs_identity_check(p, q, assignment), [&] {
          return at({{"p", num(p)}, {"q", num(q)}, {"trial", num(trial)}});
        });
      }
    }
  }
  return tally.take();
}

}  // namespace

std::vector<SweepRow> verify_identities(const SweepOptions& options) {
  using Builder = SweepRow (*)(const SweepOptions&);
  static const Builder builders[] = {
      binomial_product, shifted_product, s_sums,         t_sums,          d_factors,
      tj_recurrences,   newton_round_trips, p_coefficients, m_cancellations, rs_identities,
  };
  constexpr std::size_t count = sizeof(builders) / sizeof(builders[0]);
  return parallel_map<SweepRow>(count, [&](std::size_t i) { return builders[i](options); });
}

}  // namespace orbit
