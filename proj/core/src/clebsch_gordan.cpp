#include "pgdd/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgdd {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// x is a doubled integer (2j); factorial argument j must be integral.
BigInt factorial_of_doubled(long long two_x) {
  if (two_x < 0 || two_x % 2 != 0) throw std::logic_error("factorial of non-integer");
  BigInt f = 1;
  for (long long i = 2; i <= two_x / 2; ++i) f *= i;
  return f;
}

long long to_doubled(double x, const char* what) {
  const double t = 2.0 * x;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9)
    throw std::invalid_argument(std::string("clebsch_gordan: ") + what +
                                " is not a half-integer");
  return static_cast<long long>(r);
}

double cg_doubled(long long tj1, long long tm1, long long tj2, long long tm2, long long tJ,
                  long long tM) {
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return 0.0;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tJ + tM) % 2 != 0) return 0.0;
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
  if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;

  // Racah's closed form.  All factorial arguments below are integers.
  const BigRat delta2 =
      BigRat(factorial_of_doubled(tj1 + tj2 - tJ) * factorial_of_doubled(tj1 - tj2 + tJ) *
                 factorial_of_doubled(-tj1 + tj2 + tJ),
             factorial_of_doubled(tj1 + tj2 + tJ + 2));

  const BigRat weight2 = BigRat(
      BigInt(tJ + 1) * factorial_of_doubled(tJ + tM) * factorial_of_doubled(tJ - tM) *
      factorial_of_doubled(tj1 - tm1) * factorial_of_doubled(tj1 + tm1) *
      factorial_of_doubled(tj2 - tm2) * factorial_of_doubled(tj2 + tm2));

  // Summation index t (doubled: runs over even values 2t).
  const long long t_min =
      std::max<long long>({0, -(tJ - tj2 + tm1), -(tJ - tj1 - tm2)});
  const long long t_max =
      std::min<long long>({tj1 + tj2 - tJ, tj1 - tm1, tj2 + tm2});

  BigRat sum = 0;
  for (long long tt = t_min; tt <= t_max; tt += 2) {
    const BigInt denom = factorial_of_doubled(tt) * factorial_of_doubled(tj1 + tj2 - tJ - tt) *
                         factorial_of_doubled(tj1 - tm1 - tt) *
                         factorial_of_doubled(tj2 + tm2 - tt) *
                         factorial_of_doubled(tJ - tj2 + tm1 + tt) *
                         factorial_of_doubled(tJ - tj1 - tm2 + tt);
    const BigRat term = BigRat(1, denom);
    if ((tt / 2) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum == 0) return 0.0;

  const double prefactor =
      std::sqrt(static_cast<double>(delta2) * static_cast<double>(weight2));
  return prefactor * static_cast<double>(sum);
}

}  // namespace

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
  const long long tj1 = to_doubled(j1, "j1"), tm1 = to_doubled(m1, "m1");
  const long long tj2 = to_doubled(j2, "j2"), tm2 = to_doubled(m2, "m2");
  const long long tJ = to_doubled(J, "J"), tM = to_doubled(M, "M");
  if (tj1 < 0 || tj2 < 0 || tJ < 0) throw std::invalid_argument("clebsch_gordan: negative j");

  using Key = std::tuple<long long, long long, long long, long long, long long, long long>;
  static std::map<Key, double> cache;
  static std::mutex mutex;
  const Key key{tj1, tm1, tj2, tm2, tJ, tM};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double value = cg_doubled(tj1, tm1, tj2, tm2, tJ, tM);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace pgdd
