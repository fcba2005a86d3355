#include "soncoup/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "soncoup/coupling.hpp"
#include "soncoup/oracle.hpp"
#include "soncoup/reference_table.hpp"

namespace soncoup {

namespace {

class Runner {
public:
  Runner(std::string suite, const CaseSink& sink, SuiteSummary& summary)
      : suite_(std::move(suite)), sink_(sink), summary_(summary) {}

  template <class Check>
  void check(const std::string& name, Check&& body) {
    CaseResult r{suite_, name, false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    (r.passed ? summary_.passed : summary_.failed)++;
    if (sink_) sink_(r);
  }

private:
  std::string suite_;
  const CaseSink& sink_;
  SuiteSummary& summary_;
};

std::string mismatch(const std::string& expected, const std::string& actual) {
  return "expected " + expected + ", got " + actual;
}

int lmax_or(const SuiteOptions& o, int fallback) { return o.lmax < 0 ? fallback : o.lmax; }

std::vector<CouplingLabels> admissible_tuples(int lmax) {
  std::vector<CouplingLabels> out;
  CouplingLabels c;
  for (c.l[0] = 0; c.l[0] <= lmax; ++c.l[0])
    for (c.l[1] = 0; c.l[1] <= lmax; ++c.l[1])
      for (c.l[2] = 0; c.l[2] <= lmax; ++c.l[2])
        for (c.l[3] = 0; c.l[3] <= lmax; ++c.l[3])
          for (c.l[4] = 0; c.l[4] <= lmax; ++c.l[4])
            for (c.l[5] = 0; c.l[5] <= lmax; ++c.l[5])
              if (c.admissible()) out.push_back(c);
  return out;
}

void suite_table(Runner& run) {
  for (const auto& row : reference_rows()) {
    run.check("I" + row.labels.to_string(), [&] {
      const RatFunc got = std::get<RatFunc>(i_alpha(row.labels, Mode::symbolic()));
      const RatFunc want = parse_ratfunc(row.i_alpha);
      return got == want ? std::string() : mismatch(want.to_string(), got.to_string());
    });
    run.check("calpha" + row.labels.to_string(), [&] {
      const RatFunc got = std::get<RatFunc>(c_alpha(row.labels, Mode::symbolic()));
      const RatFunc want = parse_ratfunc(row.c_alpha);
      return got == want ? std::string() : mismatch(want.to_string(), got.to_string());
    });
  }
}

void suite_symmetry(Runner& run, const SuiteOptions& o) {
  constexpr int kSamples = 200;
  const int lmax = lmax_or(o, 6);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick(0, lmax);
  for (int i = 0; i < kSamples; ++i) {
    CouplingLabels c;
    do {
      for (int& x : c.l) x = pick(rng);
    } while (!c.admissible());
    run.check("orbit" + c.to_string(), [&] {
      const auto orbit = symmetry_orbit(c);
      if (24 % orbit.size() != 0) return "orbit size " + std::to_string(orbit.size()) + " does not divide 24";
      const RatFunc ref = std::get<RatFunc>(i_alpha(c, Mode::symbolic()));
      for (const auto& member : orbit) {
        const RatFunc v = std::get<RatFunc>(i_alpha(member, Mode::symbolic()));
        if (!(v == ref)) return member.to_string() + ": " + mismatch(ref.to_string(), v.to_string());
      }
      return std::string();
    });
  }
}

void suite_threej(Runner& run, const SuiteOptions& o) {
  const int lmax = lmax_or(o, 8);
  for (long n = 3; n <= 7; ++n)
    for (int a = 0; a <= lmax; ++a)
      for (int b = a; b <= lmax; ++b)
        for (int c = b; c <= lmax; ++c) {
          const Triad t{a, b, c};
          if (!selection_ok(t)) continue;
          std::ostringstream name;
          name << "threej2(" << a << "," << b << "," << c << ") n=" << n;
          run.check(name.str(), [&] {
            const BigRat want = threej_squared_by_integration(t, n);
            const BigRat got = evaluate(threej_squared(t, 0, Mode::fixed(n)), n);
            return got == want ? std::string() : mismatch(want.to_string(), got.to_string());
          });
        }
}

void suite_g(Runner& run, const SuiteOptions& o) {
  const int jmax = lmax_or(o, 8);
  for (long n : {3L, 5L, 6L})
    for (int j1 = 0; j1 <= jmax; ++j1)
      for (int j2 = 0; j2 <= jmax; ++j2)
        for (int j3 = j2; j3 <= jmax; ++j3)
          for (int m = 0; m <= 4; ++m) {
            std::ostringstream name;
            name << "G(" << j1 << "," << j2 << "," << j3 << "," << m << ") n=" << n;
            run.check(name.str(), [&] {
              const BigRat want = g_by_integration(j1, j2, j3, m, n);
              const BigRat got = evaluate(g_reduced(j1, j2, j3, m, Mode::fixed(n)), n);
              return got == want ? std::string() : mismatch(want.to_string(), got.to_string());
            });
          }
}

void suite_i3(Runner& run, const SuiteOptions& o) {
  for (const auto& c : admissible_tuples(lmax_or(o, 5))) {
    run.check("I3" + c.to_string(), [&] {
      const BigRat want = i_by_racah_n3(c);
      const BigRat got = evaluate(i_alpha(c, Mode::fixed(3)), 3);
      return got == want ? std::string() : mismatch(want.to_string(), got.to_string());
    });
  }
}

void suite_quadrature(Runner& run) {
  constexpr double kTolerance = 1e-10;
  for (const auto& row : reference_rows()) {
    run.check("quadrature" + row.labels.to_string(), [&] {
      const double exact = evaluate(i_alpha(row.labels, Mode::fixed(3)), 3).to_double();
      const QuadratureResult q = i_by_quadrature_n3(row.labels);
      if (std::abs(q.value - exact) <= kTolerance) return std::string();
      std::ostringstream msg;
      msg.precision(17);
      msg << "expected " << exact << ", got " << q.value;
      return msg.str();
    });
  }
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table1",   "symmetry",   "oracle3j", "oracleG",
                                                 "oracleI3", "quadrature", "all"};
  return names;
}

SuiteSummary run_suite(std::string_view suite, const SuiteOptions& options, const CaseSink& sink) {
  SuiteSummary summary;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      const SuiteSummary s = run_suite(name, options, sink);
      summary.passed += s.passed;
      summary.failed += s.failed;
    }
    return summary;
  }
  Runner run(std::string(suite), sink, summary);
  if (suite == "table1") suite_table(run);
  else if (suite == "symmetry") suite_symmetry(run, options);
  else if (suite == "oracle3j") suite_threej(run, options);
  else if (suite == "oracleG") suite_g(run, options);
  else if (suite == "oracleI3") suite_i3(run, options);
  else if (suite == "quadrature") suite_quadrature(run);
  else throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return summary;
}

} // namespace soncoup
