#include "soncoup/soncoup.h"

#include <cstring>
#include <variant>

#include "soncoup/coupling.hpp"
#include "soncoup/serialize.hpp"
#include "soncoup/verify.hpp"

#ifndef SONCOUP_VERSION
#define SONCOUP_VERSION "unknown"
#endif

struct soncoup_value {
  std::variant<soncoup::RatFunc, soncoup::BigRat, soncoup::SqrtRational> v;
};

namespace {

using namespace soncoup;

thread_local std::string t_last_error;

soncoup_status fail(soncoup_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
soncoup_status guarded(Body&& body) {
  t_last_error.clear();
  try {
    body();
    return SONCOUP_OK;
  } catch (const PoleError& e) {
    return fail(SONCOUP_ERR_POLE, e.what());
  } catch (const UndefinedBySelectionRules& e) {
    return fail(SONCOUP_ERR_UNDEFINED, e.what());
  } catch (const GammaResidueError& e) {
    return fail(SONCOUP_ERR_GAMMA_RESIDUE, e.what());
  } catch (const ResolutionTooLow& e) {
    return fail(SONCOUP_ERR_RESOLUTION, e.what());
  } catch (const ParseError& e) {
    return fail(SONCOUP_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SONCOUP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(SONCOUP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SONCOUP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SONCOUP_ERR_INTERNAL, "unknown error");
  }
}

Mode mode_of(long n) {
  if (n == SONCOUP_SYMBOLIC) return Mode::symbolic();
  if (n < 0) throw std::invalid_argument("n must be positive, or SONCOUP_SYMBOLIC");
  return Mode::fixed(n);
}

CouplingLabels labels_of(const int labels[6]) {
  if (!labels) throw std::invalid_argument("labels must not be null");
  CouplingLabels c;
  for (int i = 0; i < 6; ++i) {
    if (labels[i] < 0) throw std::invalid_argument("labels must be non-negative");
    c.l[i] = labels[i];
  }
  return c;
}

void require_out(const void* out) {
  if (!out) throw std::invalid_argument("output pointer must not be null");
}

soncoup_value* wrap(const CouplingValue& v) {
  return std::visit([](const auto& x) { return new soncoup_value{x}; }, v);
}

char* dup(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string rational_latex(const BigRat& q) {
  if (q.is_integer()) return q.to_string();
  const BigRat a = q.abs();
  return std::string(q.sign() < 0 ? "-" : "") + "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

std::string joined(const Poly& p) {
  std::string s;
  for (const auto& c : p.coeffs()) s += (s.empty() ? "" : ";") + c.to_string();
  return s.empty() ? "0" : s;
}

template <class F>
soncoup_status compute(soncoup_value** out, F&& f) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = wrap(f());
  });
}

} // namespace

extern "C" {

soncoup_status soncoup_i_alpha(const int labels[6], long n, soncoup_value** out) {
  return compute(out, [&] { return i_alpha(labels_of(labels), mode_of(n)); });
}

soncoup_status soncoup_c_alpha(const int labels[6], long n, soncoup_value** out) {
  return compute(out, [&] { return c_alpha(labels_of(labels), mode_of(n)); });
}

soncoup_status soncoup_sixj_squared(const int labels[6], long n, soncoup_value** out) {
  return compute(out, [&] { return sixj_squared(labels_of(labels), mode_of(n)); });
}

soncoup_status soncoup_sixj(const int labels[6], long n, soncoup_value** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    if (n <= 0) throw std::invalid_argument("the signed 6j-symbol needs a fixed n");
    *out = new soncoup_value{sixj(labels_of(labels), n)};
  });
}

soncoup_status soncoup_threej_squared(const int triad[3], int shift, long n, soncoup_value** out) {
  return compute(out, [&] {
    if (!triad) throw std::invalid_argument("triad must not be null");
    return threej_squared(Triad{triad[0], triad[1], triad[2]}, shift, mode_of(n));
  });
}

soncoup_status soncoup_g_reduced(int j1, int j2, int j3, int m, long n, soncoup_value** out) {
  return compute(out, [&] { return g_reduced(j1, j2, j3, m, mode_of(n)); });
}

soncoup_status soncoup_dim(int l, long n, soncoup_value** out) {
  return compute(out, [&] { return dim(l, mode_of(n)); });
}

soncoup_status soncoup_parse_ratfunc(const char* text, soncoup_value** out) {
  return compute(out, [&] {
    if (!text) throw std::invalid_argument("text must not be null");
    return CouplingValue(parse_ratfunc(text));
  });
}

soncoup_value_kind soncoup_value_get_kind(const soncoup_value* v) {
  return static_cast<soncoup_value_kind>(v->v.index());
}

int soncoup_value_is_zero(const soncoup_value* v) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SqrtRational>) return x.sign() == 0 ? 1 : 0;
        else return x.is_zero() ? 1 : 0;
      },
      v->v);
}

int soncoup_value_equal(const soncoup_value* a, const soncoup_value* b) {
  if (!a || !b) return 0;
  return a->v == b->v ? 1 : 0;
}

soncoup_status soncoup_value_evaluate(const soncoup_value* v, long n, soncoup_value** out) {
  return guarded([&] {
    require_out(out);
    require_out(v);
    *out = nullptr;
    if (const auto* f = std::get_if<RatFunc>(&v->v)) *out = new soncoup_value{f->eval(BigRat(n))};
    else *out = new soncoup_value{*v};
  });
}

soncoup_status soncoup_value_to_string(const soncoup_value* v, char** out) {
  return guarded([&] {
    require_out(out);
    require_out(v);
    *out = dup(std::visit([](const auto& x) { return x.to_string(); }, v->v));
  });
}

soncoup_status soncoup_value_to_json(const soncoup_value* v, char** out) {
  return guarded([&] {
    require_out(out);
    require_out(v);
    *out = dup(std::visit([](const auto& x) { return to_json(x).dump(); }, v->v));
  });
}

soncoup_status soncoup_value_to_latex(const soncoup_value* v, char** out) {
  return guarded([&] {
    require_out(out);
    require_out(v);
    std::string s;
    if (const auto* f = std::get_if<RatFunc>(&v->v)) {
      s = f->to_latex();
    } else if (const auto* q = std::get_if<BigRat>(&v->v)) {
      s = rational_latex(*q);
    } else {
      const auto& r = std::get<SqrtRational>(v->v);
      if (auto exact = r.exact()) s = rational_latex(*exact);
      else s = std::string(r.sign() < 0 ? "-" : "") + "\\sqrt{" + rational_latex(r.radicand()) + "}";
    }
    *out = dup(s);
  });
}

soncoup_status soncoup_value_coefficients(const soncoup_value* v, char** num, char** den) {
  return guarded([&] {
    require_out(num);
    require_out(den);
    require_out(v);
    if (const auto* f = std::get_if<RatFunc>(&v->v)) {
      *num = dup(joined(f->num()));
      *den = dup(joined(f->den()));
    } else if (const auto* q = std::get_if<BigRat>(&v->v)) {
      *num = dup(q->to_string());
      *den = dup("1");
    } else {
      throw std::invalid_argument("a signed square root has no coefficient form");
    }
  });
}

void soncoup_value_free(soncoup_value* v) { delete v; }
void soncoup_string_free(char* s) { delete[] s; }

int soncoup_triad_admissible(int l1, int l2, int l3) { return selection_ok(Triad{l1, l2, l3}) ? 1 : 0; }

int soncoup_labels_admissible(const int labels[6]) {
  if (!labels) return 0;
  CouplingLabels c;
  for (int i = 0; i < 6; ++i) c.l[i] = labels[i];
  return c.admissible() ? 1 : 0;
}

soncoup_status soncoup_symmetry_orbit(const int labels[6], int out[144], size_t* count) {
  return guarded([&] {
    require_out(out);
    require_out(count);
    const auto orbit = symmetry_orbit(labels_of(labels));
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int k = 0; k < 6; ++k) out[6 * i + k] = orbit[i].l[k];
    *count = orbit.size();
  });
}

soncoup_status soncoup_canonical_labels(const int labels[6], int out[6]) {
  return guarded([&] {
    require_out(out);
    const auto c = canonical_representative(labels_of(labels));
    for (int k = 0; k < 6; ++k) out[k] = c.l[k];
  });
}

soncoup_status soncoup_verify(const char* suite, int lmax, uint64_t seed, soncoup_case_callback cb, void* user,
                              size_t* passed, size_t* failed) {
  return guarded([&] {
    if (!suite) throw std::invalid_argument("suite must not be null");
    const SuiteSummary s = run_suite(suite, SuiteOptions{lmax, seed}, [&](const CaseResult& r) {
      if (cb) cb(r.suite.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
    });
    if (passed) *passed = s.passed;
    if (failed) *failed = s.failed;
  });
}

uint64_t soncoup_gamma_residue_errors(void) { return gamma_residue_error_count(); }

const char* soncoup_last_error(void) { return t_last_error.c_str(); }

const char* soncoup_version(void) { return SONCOUP_VERSION; }

} // extern "C"
