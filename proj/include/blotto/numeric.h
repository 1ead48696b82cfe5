// Copyright 2026 The Blotto Costs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOTTO_NUMERIC_H_
#define BLOTTO_NUMERIC_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace blotto {

// Exact rational arithmetic for oracle-scale checks. Every finite double is
// a dyadic rational, so conversion from double is exact.
using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
Scalar FromDouble(double x) {
  return Scalar(x);
}

template <class Scalar>
double ToDouble(const Scalar& x) {
  return static_cast<double>(x);
}

template <>
inline double ToDouble<Rational>(const Rational& x) {
  return x.convert_to<double>();
}

template <class Scalar>
inline constexpr bool kIsExact = false;
template <>
inline constexpr bool kIsExact<Rational> = true;

}  // namespace blotto

#endif  // BLOTTO_NUMERIC_H_
