#include "srgkit/feasible.hpp"

#include "srgkit/error.hpp"

namespace srg {

namespace {

std::string power_str(const std::string& base, std::int64_t mult) {
  const bool wrap = base.find_first_of("+-/") != std::string::npos &&
                    !(base.size() > 1 && base[0] == '-' &&
                      base.find_first_of("+-/", 1) == std::string::npos);
  std::string b = (base[0] == '-' || wrap) ? "(" + base + ")" : base;
  return b + "^" + std::to_string(mult);
}

}  // namespace

std::string Spectrum::str() const {
  return "{" + power_str(std::to_string(k), 1) + ", " +
         power_str(r.str(), m_r) + ", " + power_str(s.str(), m_s) + "}";
}

bool counting_check(const SrgParams& p) {
  require_valid(p);
  return (p.n - p.k - 1) * p.mu == p.k * (p.k - p.lambda - 1);
}

Spectrum spectrum_of(const SrgParams& p) {
  if (!counting_check(p)) {
    throw SrgError("spectrum undefined: counting equation fails for " +
                   p.str());
  }
  Spectrum sp;
  sp.k = p.k;
  const std::int64_t diff = p.lambda - p.mu;
  sp.disc = diff * diff + 4 * (p.k - p.mu);
  sp.integral = is_perfect_square(sp.disc);
  sp.r = Surd(Rational(diff, 2), Rational(1, 2), sp.disc);
  sp.s = Surd(Rational(diff, 2), Rational(-1, 2), sp.disc);

  const std::int64_t bias = 2 * p.k + (p.n - 1) * diff;
  sp.conference = bias == 0;
  if (sp.conference) {
    if (p.n % 2 == 0) {
      throw SrgError("integrality failure for " + p.str() +
                     ": conference multiplicities (n-1)/2 need odd n");
    }
    sp.m_r = sp.m_s = (p.n - 1) / 2;
  } else {
    if (!sp.integral) {
      throw SrgError("integrality failure for " + p.str() +
                     ": discriminant " + std::to_string(sp.disc) +
                     " is not a perfect square");
    }
    const std::int64_t t = isqrt(sp.disc);
    if (bias % t != 0 || (p.n - 1 - bias / t) % 2 != 0) {
      throw SrgError("integrality failure for " + p.str() +
                     ": multiplicities are not integers");
    }
    sp.m_r = (p.n - 1 - bias / t) / 2;
    sp.m_s = (p.n - 1 + bias / t) / 2;
    if (sp.m_r <= 0 || sp.m_s <= 0) {
      throw SrgError("integrality failure for " + p.str() +
                     ": multiplicity is not positive");
    }
  }

  // Cross-check against the display in terms of r and s, and the trace.
  const Surd n1(p.n - 1);
  const Surd kk(p.k);
  const Surd ms_alt = (n1 * sp.r + kk) / (sp.r - sp.s);
  const Surd mr_alt = (n1 * sp.s + kk) / (sp.s - sp.r);
  if (ms_alt != Surd(sp.m_s) || mr_alt != Surd(sp.m_r)) {
    throw SrgError("internal error: multiplicity displays disagree for " +
                   p.str());
  }
  if (Surd(sp.m_r) * sp.r + Surd(sp.m_s) * sp.s + kk != Surd(0)) {
    throw SrgError("internal error: trace condition fails for " + p.str());
  }
  return sp;
}

KreinReport krein_check(const SrgParams& p) {
  const Spectrum sp = spectrum_of(p);
  const Surd k(p.k), one(1), two(2);
  const Surd rs = sp.r * sp.s;

  KreinReport rep;
  const Surd lhs1 = (sp.r + one) * (k + sp.r + two * rs);
  const Surd rhs1 = (k + sp.r) * (sp.s + one) * (sp.s + one);
  rep.first_slack = rhs1 - lhs1;
  rep.first_ok = rep.first_slack.sign() >= 0;

  const Surd lhs2 = (sp.s + one) * (k + sp.s + two * rs);
  const Surd rhs2 = (k + sp.s) * (sp.r + one) * (sp.r + one);
  rep.second_slack = rhs2 - lhs2;
  rep.second_ok = rep.second_slack.sign() >= 0;
  return rep;
}

FeasibilityReport feasibility_report(const SrgParams& p) {
  FeasibilityReport rep;
  rep.params = p;
  rep.counting_ok = counting_check(p);
  if (!rep.counting_ok) {
    rep.reason = "counting equation fails: (n-k-1)*mu != k*(k-lambda-1)";
    return rep;
  }
  try {
    rep.spectrum = spectrum_of(p);
  } catch (const SrgError& e) {
    rep.reason = e.what();
    return rep;
  }
  rep.integrality_ok = true;
  rep.conference_case = rep.spectrum->conference;
  rep.krein = krein_check(p);
  rep.krein_ok = rep.krein->ok();
  if (!rep.krein_ok) {
    rep.reason = std::string("Krein bound fails: ") +
                 (rep.krein->first_ok ? "second" : "first") +
                 " inequality violated";
    return rep;
  }
  rep.feasible = true;
  return rep;
}

std::vector<SrgParams> enumerate_lambda1_mu2() {
  std::vector<SrgParams> out;
  for (std::int64_t t = 1; t <= 63; ++t) {
    if (63 % t != 0) continue;
    // 4k - 7 = t^2; t odd makes (t^2 + 7)/4 integral.
    const std::int64_t k = (t * t + 7) / 4;
    if (k == 2) continue;  // would be the complete graph K3
    out.push_back(SrgParams{k * k / 2 + 1, k, 1, 2});
  }
  return out;
}

}  // namespace srg
