#include "freegen/certify.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace freegen {

namespace {

void add_check(std::vector<InequalityCheck>& out, std::string name, std::string relation,
               Rational left, Rational right, bool holds) {
  out.push_back({std::move(name), std::move(relation), std::move(left), std::move(right), holds});
}

// All fourteen conditions for one role assignment, evaluated without
// short-circuiting so a refusal can list every failure.
std::vector<InequalityCheck> evaluate_assignment(const Mat2& a, const Mat2& b) {
  std::vector<InequalityCheck> checks;
  checks.reserve(14);
  const Rational zero;

  const Rational det_a = a.det();
  add_check(checks, "det(A)", "!=", det_a, zero, !det_a.is_zero());
  add_check(checks, "A[1,1]", ">=", a.e11, zero, a.e11 >= zero);
  add_check(checks, "A[1,2]", ">=", a.e12, zero, a.e12 >= zero);
  add_check(checks, "A[2,1]", ">=", a.e21, zero, a.e21 >= zero);
  add_check(checks, "A[2,2]", ">=", a.e22, zero, a.e22 >= zero);
  add_check(checks, "A[1,1] <= A[2,1]", "<=", a.e11, a.e21, a.e11 <= a.e21);
  add_check(checks, "A[1,2] <= A[2,2]", "<=", a.e12, a.e22, a.e12 <= a.e22);

  const Rational det_b = b.det();
  add_check(checks, "det(B)", "!=", det_b, zero, !det_b.is_zero());
  add_check(checks, "B[1,1]", ">=", b.e11, zero, b.e11 >= zero);
  add_check(checks, "B[1,2]", ">=", b.e12, zero, b.e12 >= zero);
  add_check(checks, "B[2,1]", ">=", b.e21, zero, b.e21 >= zero);
  add_check(checks, "B[2,2]", ">=", b.e22, zero, b.e22 >= zero);
  add_check(checks, "B[1,1] >= B[2,1]", ">=", b.e11, b.e21, b.e11 >= b.e21);
  add_check(checks, "B[1,2] >= B[2,2]", ">=", b.e12, b.e22, b.e12 >= b.e22);
  return checks;
}

bool all_hold(const std::vector<InequalityCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

}  // namespace

const Mat2& FreenessCertificate::role_a() const {
  if (!roles) throw std::logic_error("certificate has no role assignment: pair is NotCovered");
  return *roles == RoleOrder::FirstIsA ? first : second;
}

const Mat2& FreenessCertificate::role_b() const {
  if (!roles) throw std::logic_error("certificate has no role assignment: pair is NotCovered");
  return *roles == RoleOrder::FirstIsA ? second : first;
}

std::string FreenessCertificate::to_text() const {
  std::ostringstream os;
  os << "input.first: " << first.str() << "\n";
  os << "input.second: " << second.str() << "\n";
  os << "verdict: " << (certified() ? "Certified" : "NotCovered") << "\n";
  if (roles) {
    os << "role_a: " << (*roles == RoleOrder::FirstIsA ? "first" : "second") << "\n";
    os << "role_b: " << (*roles == RoleOrder::FirstIsA ? "second" : "first") << "\n";
  }
  for (const auto& c : checks) {
    os << "check: " << c.name << " [" << c.left.str() << " " << c.relation << " " << c.right.str()
       << "] " << (c.holds ? "ok" : "FAILED") << "\n";
  }
  return os.str();
}

FreenessCertificate check_free_pair(const Mat2& first, const Mat2& second) {
  FreenessCertificate cert;
  cert.first = first;
  cert.second = second;

  auto forward = evaluate_assignment(first, second);
  if (all_hold(forward)) {
    cert.verdict = Verdict::Certified;
    cert.roles = RoleOrder::FirstIsA;
    cert.checks = std::move(forward);
    return cert;
  }

  auto swapped = evaluate_assignment(second, first);
  if (all_hold(swapped)) {
    cert.verdict = Verdict::Certified;
    cert.roles = RoleOrder::SecondIsA;
    cert.checks = std::move(swapped);
    return cert;
  }

  cert.verdict = Verdict::NotCovered;
  for (auto& c : forward) {
    if (c.holds) continue;
    c.name = "(A=first,B=second) " + c.name;
    cert.checks.push_back(std::move(c));
  }
  for (auto& c : swapped) {
    if (c.holds) continue;
    c.name = "(A=second,B=first) " + c.name;
    cert.checks.push_back(std::move(c));
  }
  return cert;
}

std::vector<PingPongSample> ping_pong_witness(const FreenessCertificate& cert,
                                              std::span<const Rational> samples) {
  if (!cert.certified()) {
    throw std::invalid_argument("ping-pong witness requires a Certified pair");
  }
  const Mat2& a = cert.role_a();
  const Mat2& b = cert.role_b();
  const Rational zero;
  const Rational one = 1;

  std::vector<PingPongSample> out;
  out.reserve(samples.size());
  for (const Rational& t : samples) {
    if (t <= zero) throw std::invalid_argument("ping-pong samples must be positive, got " + t.str());
    Rational at = a.apply(t);
    Rational bt = b.apply(t);
    if (!(zero < at && at < one && one < bt)) {
      throw std::logic_error("certificate soundness failure at t = " + t.str() +
                             ": A(t) = " + at.str() + ", B(t) = " + bt.str());
    }
    out.push_back({t, std::move(at), std::move(bt)});
  }
  return out;
}

namespace {

BigInt parse_positive_integer(std::string_view text, std::string_view name) {
  if (text.empty()) {
    throw std::invalid_argument("pair name '" + std::string(name) + "': missing parameter");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("pair name '" + std::string(name) + "': '" + std::string(text) +
                                  "' is not a positive integer");
    }
  }
  BigInt value{std::string(text)};
  if (value.is_zero()) {
    throw std::invalid_argument("pair name '" + std::string(name) + "': parameters must be >= 1");
  }
  return value;
}

std::pair<Mat2, Mat2> lower_upper_pair(const BigInt& u, const BigInt& v) {
  return {Mat2(1, 0, Rational(u), 1), Mat2(1, Rational(v), 0, 1)};
}

}  // namespace

std::pair<Mat2, Mat2> named_pair(std::string_view name) {
  if (name == "calkin-wilf") return lower_upper_pair(1, 1);
  if (name == "sanov") return lower_upper_pair(2, 2);
  constexpr std::string_view prefix = "lu-rv:";
  if (name.starts_with(prefix)) {
    const std::string_view params = name.substr(prefix.size());
    const std::size_t colon = params.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("pair name '" + std::string(name) +
                                  "': expected lu-rv:<u>:<v>");
    }
    const BigInt u = parse_positive_integer(params.substr(0, colon), name);
    const BigInt v = parse_positive_integer(params.substr(colon + 1), name);
    return lower_upper_pair(u, v);
  }
  throw std::invalid_argument("unknown pair name '" + std::string(name) +
                              "' (use calkin-wilf, sanov, or lu-rv:<u>:<v>)");
}

}  // namespace freegen
