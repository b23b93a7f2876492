#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ttree/error.hpp"

namespace ttree {

using BigInt = boost::multiprecision::cpp_int;

// Number of k-connected trees of height at most p:
//   N(0,k) = 1,  N(p,k) = sum_{i=0..k} N(p-1,k)^i.
inline BigInt count_all(unsigned p, unsigned k) {
  BigInt n = 1;
  for (unsigned level = 0; level < p; ++level) {
    BigInt sum = 0, power = 1;
    for (unsigned i = 0; i <= k; ++i) {
      sum += power;
      power *= n;
    }
    n = std::move(sum);
  }
  return n;
}

inline BigInt binomial(const BigInt& n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact at every step
  return r;
}

// Number of canonical k-connected trees of height at most p:
//   M(0,k) = 1,  M(p,k) = C(M(p-1,k) + k, k).
inline BigInt count_canonical(unsigned p, unsigned k) {
  BigInt m = 1;
  for (unsigned level = 0; level < p; ++level) m = binomial(m + k, k);
  return m;
}

namespace detail {

inline double log_big(const BigInt& v) {
  unsigned bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log(v.convert_to<double>());
  unsigned shift = bits - 60;
  return std::log((v >> shift).convert_to<double>()) + shift * std::numbers::ln2;
}

}  // namespace detail

// Natural log of the Stirling estimate of M(p,k), from the exact M(p-1,k):
//   M ~ (m+k)^(m+k+1/2) / (sqrt(2 pi) m^(m+1/2) k^(k+1/2)),  m = M(p-1,k).
inline double log_approx_canonical(unsigned p, unsigned k) {
  if (p < 1 || k < 1) throw PreconditionError("approx_canonical needs p >= 1 and k >= 1");
  BigInt mb = count_canonical(p - 1, k);
  double log_m = detail::log_big(mb);
  double log_mk = detail::log_big(mb + k);
  double kk = k;
  // (m+k+1/2) log(m+k) - (m+1/2) log m  ==  (m+1/2) log((m+k)/m) + k log(m+k)
  double m = mb.convert_to<double>();
  double head = (m + 0.5) * std::log1p(kk / m) + kk * log_mk;
  if (!std::isfinite(head)) head = (m + 0.5) * (log_mk - log_m) + kk * log_mk;
  return head - (kk + 0.5) * std::log(kk) - 0.5 * std::log(2 * std::numbers::pi);
}

inline double approx_canonical(unsigned p, unsigned k) { return std::exp(log_approx_canonical(p, k)); }

// Reference table for the k-connected chain counts, p = 1..3 and k = 1..4, as
// commonly quoted. Values with an exponent are rounded to the given digits.
struct ReferenceCell {
  unsigned p, k;
  const char* n;
  const char* m;
};

inline constexpr ReferenceCell kReferenceCounts[] = {
    {1, 1, "2", "2"},      {1, 2, "3", "3"},       {1, 3, "4", "4"},           {1, 4, "5", "5"},
    {2, 1, "3", "3"},      {2, 2, "13", "10"},     {2, 3, "85", "35"},         {2, 4, "775", "126"},
    {3, 1, "4", "4"},      {3, 2, "183", "66"},    {3, 3, "221436", "8436"},   {3, 4, "3.61e11", "1.13e7"},
};

// True iff `value` matches the reference text: exactly, or, for a "d.dde<exp>"
// reference, after rounding or truncating to its significant digits.
inline bool matches_reference(const BigInt& value, const std::string& ref) {
  auto e = ref.find('e');
  if (e == std::string::npos) return value.str() == ref;
  std::string mantissa;
  for (char c : ref.substr(0, e))
    if (c != '.') mantissa += c;
  int exponent = std::stoi(ref.substr(e + 1));
  std::string digits = value.str();
  if (static_cast<int>(digits.size()) - 1 != exponent) return false;
  std::size_t keep = mantissa.size();
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits.size() - keep));
  BigInt rounded = (value + scale / 2) / scale;
  BigInt truncated = value / scale;
  return rounded.str() == mantissa || truncated.str() == mantissa;
}

struct CountDiscrepancy {
  unsigned p, k;
  char column;  // 'N' or 'M'
  std::string reference;
  BigInt computed;
};

// Exact N and M for p = 1..p_max and k = 1..k_max.
class CountTable {
 public:
  CountTable(unsigned p_max, unsigned k_max) : p_max_(p_max), k_max_(k_max) {
    if (p_max < 1 || k_max < 1) throw PreconditionError("comparison table needs p_max, k_max >= 1");
    for (unsigned p = 1; p <= p_max; ++p)
      for (unsigned k = 1; k <= k_max; ++k) {
        n_.push_back(count_all(p, k));
        m_.push_back(count_canonical(p, k));
      }
  }

  unsigned p_max() const noexcept { return p_max_; }
  unsigned k_max() const noexcept { return k_max_; }
  const BigInt& n(unsigned p, unsigned k) const { return n_.at(index(p, k)); }
  const BigInt& m(unsigned p, unsigned k) const { return m_.at(index(p, k)); }

  // Cells within the table's range where the reference disagrees with the recurrence.
  std::vector<CountDiscrepancy> discrepancies() const {
    std::vector<CountDiscrepancy> out;
    for (const auto& c : kReferenceCounts) {
      if (c.p > p_max_ || c.k > k_max_) continue;
      if (!matches_reference(n(c.p, c.k), c.n)) out.push_back({c.p, c.k, 'N', c.n, n(c.p, c.k)});
      if (!matches_reference(m(c.p, c.k), c.m)) out.push_back({c.p, c.k, 'M', c.m, m(c.p, c.k)});
    }
    return out;
  }

  std::string to_csv() const {
    std::string out = "p,k,N,M\n";
    for (unsigned p = 1; p <= p_max_; ++p)
      for (unsigned k = 1; k <= k_max_; ++k)
        out += std::to_string(p) + "," + std::to_string(k) + "," + n(p, k).str() + "," + m(p, k).str() + "\n";
    return out;
  }

  // Aligned "N / M" grid. Cells that disagree with the reference are starred
  // and listed below the grid.
  std::string to_text() const {
    auto flags = discrepancies();
    auto flagged = [&](unsigned p, unsigned k) {
      for (const auto& d : flags)
        if (d.p == p && d.k == k) return true;
      return false;
    };
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"N / M"});
    for (unsigned k = 1; k <= k_max_; ++k) rows[0].push_back("k=" + std::to_string(k));
    for (unsigned p = 1; p <= p_max_; ++p) {
      std::vector<std::string> row{"p=" + std::to_string(p)};
      for (unsigned k = 1; k <= k_max_; ++k)
        row.push_back(n(p, k).str() + " / " + m(p, k).str() + (flagged(p, k) ? " *" : ""));
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(k_max_ + 1, 0);
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::string out;
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) out += "  ";
        out += std::string(width[c] - r[c].size(), ' ') + r[c];
      }
      out += "\n";
    }
    for (const auto& d : flags) {
      out += "* " + std::string(1, d.column) + "(" + std::to_string(d.p) + "," + std::to_string(d.k) +
             "): recurrence gives " + d.computed.str() + ", reference table lists " + d.reference + "\n";
    }
    return out;
  }

 private:
  std::size_t index(unsigned p, unsigned k) const {
    if (p < 1 || p > p_max_ || k < 1 || k > k_max_) throw PreconditionError("cell outside the table");
    return (p - 1) * k_max_ + (k - 1);
  }

  unsigned p_max_, k_max_;
  std::vector<BigInt> n_, m_;
};

inline CountTable comparison_table(unsigned p_max, unsigned k_max) { return CountTable(p_max, k_max); }

}  // namespace ttree
