#include "egz/constants.hpp"

#include <string>

namespace egz {

namespace {

void check_eval_domain(int k, int d) {
  if (k < 1) throw std::invalid_argument("eval: k must be >= 1");
  if (d < 1) throw std::invalid_argument("eval: d must be >= 1");
  if (d > 2 * k + 1)
    throw TheoremRangeError("no proven value for d > 2k+1 (d=" +
                            std::to_string(d) + ", 2k+1=" +
                            std::to_string(2 * k + 1) + ")");
}

bool s_prime_is_one_less(int k, int d) {
  return d == 2 * k - 1 || (d == 2 * k - 3 && k % 2 == 0) ||
         (d % 2 == 1 && d <= 2 * k - 5);
}

}  // namespace

int eval_s(int k, int d) {
  check_eval_domain(k, d);
  if (d < 2 * k) return 2 * k + d;
  if (d == 2 * k) return 4 * k + 1;
  return k % 2 == 0 ? 4 * k + 2 : 4 * k + 5;
}

int eval_s_prime(int k, int d) {
  check_eval_domain(k, d);
  return eval_s(k, d) - (s_prime_is_one_less(k, d) ? 1 : 0);
}

std::string_view eval_s_case(int k, int d) {
  check_eval_domain(k, d);
  if (d < 2 * k) return "d<2k";
  if (d == 2 * k) return "d=2k";
  return k % 2 == 0 ? "d=2k+1, k even" : "d=2k+1, k odd";
}

std::string_view eval_s_prime_case(int k, int d) {
  check_eval_domain(k, d);
  if (d == 2 * k - 1) return "d=2k-1";
  if (d == 2 * k - 3 && k % 2 == 0) return "d=2k-3, k even";
  if (d % 2 == 1 && d <= 2 * k - 5) return "d<=2k-5, d odd";
  return "equal to s";
}

}  // namespace egz
