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

#include "lfd/lfd.h"

#include "lfd/errors.hpp"
#include "lfd/parser.hpp"
#include "lfd/session.hpp"
#include "lfd/spencer.hpp"
#include "lfd/weights.hpp"

#include <cstring>
#include <new>
#include <string>
#include <vector>

struct lfd_ring_struct {
  std::vector<std::string> names;
};

struct lfd_poly_struct {
  std::vector<std::string> names;
  lfd::Polynomial value;
};

struct lfd_session_struct {
  nlohmann::json config;
  lfd::SessionConfig parsed;
};

struct lfd_report_struct {
  lfd::Report report;
  lfd::OutputFormat format;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what)
{
  g_last_error = what;
  return code;
}

// Runs fn, translating exceptions into return codes.
template <typename Fn>
int guard(Fn&& fn) noexcept
{
  try {
    g_last_error.clear();
    return fn();
  } catch (const lfd::ParseError& e) {
    return fail(LFD_ERROR_PARSE, e.what());
  } catch (const lfd::DimensionMismatch& e) {
    return fail(LFD_ERROR_DIMENSION, e.what());
  } catch (const lfd::NotWqh& e) {
    return fail(LFD_ERROR_NOT_WQH, e.what());
  } catch (const lfd::Resonance& e) {
    return fail(LFD_ERROR_RESONANCE, e.what());
  } catch (const lfd::NotCertified& e) {
    return fail(LFD_ERROR_NOT_CERTIFIED, e.what());
  } catch (const lfd::Inconsistency& e) {
    return fail(LFD_ERROR_INCONSISTENT, e.what());
  } catch (const lfd::Refused& e) {
    return fail(LFD_ERROR_REFUSED, e.what());
  } catch (const lfd::InvalidArgument& e) {
    return fail(LFD_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::parse_error& e) {
    return fail(LFD_ERROR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LFD_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LFD_ERROR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(LFD_ERROR_UNKNOWN, e.what());
  } catch (...) {
    return fail(LFD_ERROR_UNKNOWN, "unknown exception");
  }
}

int write_string(const std::string& s, char* buf, size_t* len)
{
  if (!len)
    return fail(LFD_ERROR_NULL_POINTER, "length pointer is null");
  const size_t need = s.size() + 1;
  if (!buf || *len < need) {
    *len = need;
    return fail(LFD_ERROR_INSUFFICIENT_BUFFER, "output buffer too small");
  }
  std::memcpy(buf, s.c_str(), need);
  *len = need;
  return LFD_OK;
}

lfd::WeightVector read_weights(const char* const* weights, size_t count, size_t nvars)
{
  if (!weights && count)
    throw lfd::InvalidArgument("weights array is null");
  if (count != nvars)
    throw lfd::DimensionMismatch(nvars, count);
  std::vector<lfd::Rational> w;
  for (size_t i = 0; i < count; ++i) {
    if (!weights[i])
      throw lfd::InvalidArgument("weight entry is null");
    w.push_back(lfd::parse_rational(weights[i]));
  }
  return lfd::WeightVector(std::move(w));
}

#define LFD_REQUIRE(p)                                                  \
  do {                                                                  \
    if (!(p))                                                           \
      return fail(LFD_ERROR_NULL_POINTER, #p " is null");               \
  } while (0)

} // namespace

extern "C" {

const char* lfd_version(void)
{
  return "0.1.0";
}

const char* lfd_error_description(int code)
{
  switch (code) {
  case LFD_OK: return "ok";
  case LFD_ERROR_INVALID_ARGUMENT: return "invalid argument";
  case LFD_ERROR_PARSE: return "parse error";
  case LFD_ERROR_DIMENSION: return "dimension mismatch";
  case LFD_ERROR_NOT_WQH: return "not weakly quasi-homogeneous";
  case LFD_ERROR_RESONANCE: return "resonant Euler system";
  case LFD_ERROR_NOT_CERTIFIED: return "no Saito certificate";
  case LFD_ERROR_INCONSISTENT: return "mathematical inconsistency";
  case LFD_ERROR_REFUSED: return "refused";
  case LFD_ERROR_INSUFFICIENT_BUFFER: return "insufficient buffer";
  case LFD_ERROR_NULL_POINTER: return "null pointer";
  default: return "unknown error";
  }
}

const char* lfd_last_error_message(void)
{
  return g_last_error.c_str();
}

int lfd_ring_create(lfd_ring_t** ring, const char* const* names, size_t count)
{
  return guard([&]() -> int {
    LFD_REQUIRE(ring);
    *ring = nullptr;
    LFD_REQUIRE(names);
    std::vector<std::string> v;
    for (size_t i = 0; i < count; ++i) {
      LFD_REQUIRE(names[i]);
      v.emplace_back(names[i]);
    }
    lfd::validate_variable_names(v);
    *ring = new lfd_ring_struct{std::move(v)};
    return LFD_OK;
  });
}

int lfd_ring_nvars(const lfd_ring_t* ring, size_t* count)
{
  return guard([&]() -> int {
    LFD_REQUIRE(ring);
    LFD_REQUIRE(count);
    *count = ring->names.size();
    return LFD_OK;
  });
}

int lfd_ring_destroy(lfd_ring_t* ring)
{
  delete ring;
  return LFD_OK;
}

int lfd_poly_parse(lfd_poly_t** poly, const lfd_ring_t* ring, const char* text, size_t* error_offset)
{
  return guard([&]() -> int {
    LFD_REQUIRE(poly);
    *poly = nullptr;
    LFD_REQUIRE(ring);
    LFD_REQUIRE(text);
    try {
      *poly = new lfd_poly_struct{ring->names, lfd::parse_polynomial(text, ring->names)};
    } catch (const lfd::ParseError& e) {
      if (error_offset)
        *error_offset = e.offset();
      throw;
    }
    return LFD_OK;
  });
}

int lfd_poly_to_string(const lfd_poly_t* poly, char* buf, size_t* len)
{
  return guard([&]() -> int {
    LFD_REQUIRE(poly);
    return write_string(poly->value.to_string(poly->names), buf, len);
  });
}

int lfd_poly_equal(const lfd_poly_t* a, const lfd_poly_t* b, int* equal)
{
  return guard([&]() -> int {
    LFD_REQUIRE(a);
    LFD_REQUIRE(b);
    LFD_REQUIRE(equal);
    if (a->names != b->names)
      throw lfd::DimensionMismatch("polynomials belong to different rings");
    *equal = a->value == b->value ? 1 : 0;
    return LFD_OK;
  });
}

int lfd_poly_destroy(lfd_poly_t* poly)
{
  delete poly;
  return LFD_OK;
}

int lfd_poly_w_order(const lfd_poly_t* poly, const char* const* weights, size_t count, char* buf, size_t* len)
{
  return guard([&]() -> int {
    LFD_REQUIRE(poly);
    const auto w = read_weights(weights, count, poly->names.size());
    return write_string(lfd::w_order(poly->value, w).to_string(), buf, len);
  });
}

int lfd_euler_solve(lfd_poly_t** h, const lfd_poly_t* psi, const char* c, const char* const* weights, size_t count)
{
  return guard([&]() -> int {
    LFD_REQUIRE(h);
    *h = nullptr;
    LFD_REQUIRE(psi);
    LFD_REQUIRE(c);
    const auto w = read_weights(weights, count, psi->names.size());
    *h = new lfd_poly_struct{psi->names, lfd::euler_solve(lfd::parse_rational(c), psi->value, w)};
    return LFD_OK;
  });
}

int lfd_session_create(lfd_session_t** session, const char* config_json)
{
  return guard([&]() -> int {
    LFD_REQUIRE(session);
    *session = nullptr;
    LFD_REQUIRE(config_json);
    nlohmann::json j = nlohmann::json::parse(config_json);
    lfd::SessionConfig parsed = lfd::config_from_json(j);
    *session = new lfd_session_struct{std::move(j), std::move(parsed)};
    return LFD_OK;
  });
}

int lfd_session_set(lfd_session_t* session, const char* key, const char* value_json)
{
  return guard([&]() -> int {
    LFD_REQUIRE(session);
    LFD_REQUIRE(key);
    LFD_REQUIRE(value_json);
    nlohmann::json j = session->config;
    j[key] = nlohmann::json::parse(value_json);
    lfd::SessionConfig parsed = lfd::config_from_json(j);
    session->config = std::move(j);
    session->parsed = std::move(parsed);
    return LFD_OK;
  });
}

int lfd_session_run(lfd_session_t* session, const char* command, lfd_report_t** report)
{
  return guard([&]() -> int {
    LFD_REQUIRE(report);
    *report = nullptr;
    LFD_REQUIRE(session);
    LFD_REQUIRE(command);
    *report = new lfd_report_struct{lfd::run(command, session->parsed), session->parsed.format};
    return LFD_OK;
  });
}

int lfd_session_destroy(lfd_session_t* session)
{
  delete session;
  return LFD_OK;
}

int lfd_report_exit_status(const lfd_report_t* report, int* status)
{
  return guard([&]() -> int {
    LFD_REQUIRE(report);
    LFD_REQUIRE(status);
    *status = report->report.exit_status;
    return LFD_OK;
  });
}

int lfd_report_render(const lfd_report_t* report, const char* format, char* buf, size_t* len)
{
  return guard([&]() -> int {
    LFD_REQUIRE(report);
    lfd::OutputFormat f = report->format;
    if (format) {
      if (std::strcmp(format, "text") == 0)
        f = lfd::OutputFormat::Text;
      else if (std::strcmp(format, "json") == 0)
        f = lfd::OutputFormat::Json;
      else
        throw lfd::InvalidArgument("format must be \"text\" or \"json\"");
    }
    return write_string(lfd::render(report->report, f), buf, len);
  });
}

int lfd_report_destroy(lfd_report_t* report)
{
  delete report;
  return LFD_OK;
}

} // extern "C"
