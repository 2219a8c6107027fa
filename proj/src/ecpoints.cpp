#include "rmtorus/ecpoints.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "rmtorus/errors.hpp"

namespace rmt {

namespace {

std::int64_t reduce_mod(const Int& v, std::int64_t p) { return static_cast<std::int64_t>(mod_floor(v, p)); }

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

// Euler's criterion; p odd prime.
int legendre(std::int64_t v, std::int64_t p) {
  if (v == 0) return 0;
  return powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

void require_good(const Curve& E, std::int64_t p) {
  if (!is_good_prime(E, p)) throw ValidationError("p = " + std::to_string(p) + " is not a good prime for the curve");
}

}  // namespace

Curve make_curve(const Int& a, const Int& b) {
  Curve E{a, b};
  if (E.discriminant() == 0) throw ValidationError("singular curve: 4a^3 + 27b^2 = 0");
  return E;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_good_prime(const Curve& E, std::int64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  return p > 3 && E.discriminant() % p != 0;
}

std::int64_t count_points_naive(const Curve& E, std::int64_t p) {
  require_good(E, p);
  const std::int64_t a = reduce_mod(E.a, p), b = reduce_mod(E.b, p);
  std::int64_t count = 1;  // point at infinity
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = (mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p;
    for (std::int64_t y = 0; y < p; ++y) {
      if (mulmod(y, y, p) == rhs) ++count;
    }
  }
  return count;
}

PointCount count_points(const Curve& E, std::int64_t p) {
  require_good(E, p);
  const std::int64_t a = reduce_mod(E.a, p), b = reduce_mod(E.b, p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    sum += legendre((mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p, p);
  }
  const std::int64_t count = p + 1 + sum;
  const std::int64_t a_p = p + 1 - count;
  if (a_p * a_p > 4 * p) throw std::logic_error("Hasse bound violated");
  return {count, a_p};
}

FingerprintRow fingerprint_row(const QuadraticIrrational& theta, std::int64_t p, std::int64_t cap) {
  if (p < 2) throw ValidationError("fingerprint: primes must be >= 2");
  FingerprintRow row;
  row.p = p;
  row.pi = pi_index(theta, p, cap);
  const IMat2 A = matrix_A(cf_expand(theta).period);
  row.T = mat_trace(mat_pow(A, row.pi));
  row.Lp = build_Lp(row.T, p);
  row.detImL = mat_det(mat_sub(IMat2::identity(), row.Lp));
  if (row.detImL != 1 + p - row.T) throw std::logic_error("fingerprint: det(I - L_p) != 1 + p - T");
  row.group = cokernel_group(row.Lp);
  return row;
}

std::vector<FingerprintRow> fingerprint(const QuadraticIrrational& theta, const std::vector<std::int64_t>& primes,
                                        std::int64_t cap) {
  std::vector<FingerprintRow> rows;
  rows.reserve(primes.size());
  for (std::int64_t p : primes) rows.push_back(fingerprint_row(theta, p, cap));
  return rows;
}

MatchReport match_curve(const QuadraticIrrational& theta, const Curve& E, const std::vector<std::int64_t>& primes,
                        std::int64_t cap) {
  std::vector<std::optional<MatchRow>> slots(primes.size());
  std::vector<std::exception_ptr> errors(primes.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        const std::int64_t p = primes[i];
        MatchRow row;
        row.good_prime = is_good_prime(E, p);
        row.fp = fingerprint_row(theta, p, cap);
        if (row.good_prime) {
          row.ec_count = count_points(E, p).count;
          row.match = abs(row.fp.detImL) == *row.ec_count;
        }
        slots[i] = std::move(row);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(primes.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  MatchReport report{E, {}, {}, {}, {}};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);  // first failing prime in input order
    MatchRow& row = *slots[i];
    if (!row.good_prime) {
      report.skipped.push_back(row.fp.p);
    } else if (*row.match) {
      report.matching.push_back(row.fp.p);
    } else {
      report.mismatching.push_back(row.fp.p);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace rmt
