#ifndef VVJACK_VERIFY_HPP
#define VVJACK_VERIFY_HPP

#include "vvjack/json_io.hpp"
#include "vvjack/symmetrize.hpp"

namespace vvjack {

struct CheckResult {
  std::string name;
  bool pass = true;
  Json counterexample;  // payload on failure, null otherwise
  double millis = 0.0;
};

// The property suites for one shape: representation identities, operator
// identities on monomial spanning sets of degree <= nmax, Jack eigenbasis
// checks for |alpha| <= nmax, the hook identity, and the minimal-label norm
// agreement (formula vs assembled vs contravariant oracle when small).
std::vector<CheckResult> run_verify_suite(const Partition& tau, int nmax,
                                          size_t memo_budget);

}  // namespace vvjack

#endif
