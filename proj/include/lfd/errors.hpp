/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LFD_ERRORS_HPP
#define LFD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfd {

// Base of everything the core throws. The C API maps each subclass to an
// error code; anything else crossing the boundary is reported as unknown.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), m_offset(offset) {}
  std::size_t offset() const noexcept { return m_offset; }

private:
  std::size_t m_offset;
};

// f is not weakly quasi-homogeneous (of the required weight) for the weights.
class NotWqh : public Error {
public:
  using Error::Error;
};

// (chi + c) is not invertible on the weight-nu part: c + nu = 0.
class Resonance : public Error {
public:
  Resonance(const std::string& what, std::string weight)
      : Error(what), m_weight(std::move(weight)) {}
  const std::string& weight() const noexcept { return m_weight; }

private:
  std::string m_weight;
};

// No Saito certificate found among the weighted syzygy generators.
class NotCertified : public Error {
public:
  using Error::Error;
};

// An identity that must hold exactly did not (lift failure, violated degree
// bound, resonance where none can occur).
class Inconsistency : public Error {
public:
  using Error::Error;
};

// Operation deliberately declined for the given parameters.
class Refused : public Error {
public:
  using Error::Error;
};

} // namespace lfd

#endif
