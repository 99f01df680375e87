#include "skcf/state.hpp"

#include <cctype>
#include <sstream>

namespace skcf {

Pencil::Pencil(ScalarMatrix r_, ScalarMatrix s_) : r(std::move(r_)), s(std::move(s_)) {
  if (r.rows() != s.rows() || r.cols() != s.cols())
    throw InputError("pencil slices R and S differ in shape");
}

State::State(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0) throw InputError("state dimensions must be positive");
}

void State::set(const Index& idx, const Scalar& amp) {
  if (idx[0] > 1 || idx[1] >= m_ || idx[2] >= n_)
    throw InputError("amplitude index out of range");
  if (amp.is_zero()) {
    amps_.erase(idx);
  } else {
    amps_[idx] = amp;
  }
}

Scalar State::get(const Index& idx) const {
  auto it = amps_.find(idx);
  return it == amps_.end() ? Scalar(0) : it->second;
}

bool State::is_exact() const {
  for (const auto& [idx, a] : amps_)
    if (!a.is_exact()) return false;
  return true;
}

namespace {

Scalar parse_coefficient(std::string t) {
  if (t.empty()) return Scalar(1);
  if (t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  // Split into signed summands, each real or ending in 'i'.
  GaussRational acc;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    if (i == t.size() || ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e')) {
      std::string part = t.substr(start, i - start);
      start = i;
      if (part.empty()) throw InputError("malformed coefficient '" + t + "'");
      if (part.back() == 'i') {
        part.pop_back();
        if (part.empty() || part == "+") part = "1";
        if (part == "-") part = "-1";
        acc += GaussRational(0, Scalar::parse_rational(part));
      } else {
        acc += GaussRational(Scalar::parse_rational(part));
      }
    }
  }
  return acc;
}

std::string coefficient_prefix(const Scalar& c, bool* negative) {
  *negative = false;
  if (c.is_exact() && c.exact().is_real()) {
    mpq_class v = c.exact().re;
    if (sgn(v) < 0) {
      *negative = true;
      v = -v;
    }
    return v == 1 ? "" : v.get_str();
  }
  auto z = c.to_complex();
  if (!c.is_exact() && z.imag() == 0.0) {
    if (z.real() < 0) {
      *negative = true;
      return Scalar(-c).to_string();
    }
    return c.to_string();
  }
  return "(" + c.to_string() + ")";
}

}  // namespace

State State::from_ket(const std::string& ket, std::size_t m, std::size_t n) {
  State st(m, n);
  std::string s;
  for (char ch : ket)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  // Normalize the unicode right angle bracket to '>'.
  for (std::size_t pos; (pos = s.find("\xE2\x9F\xA9")) != std::string::npos;) s.replace(pos, 3, ">");
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    }
    std::size_t bar = s.find('|', i);
    if (bar == std::string::npos) throw InputError("malformed ket '" + ket + "'");
    Scalar coeff = parse_coefficient(s.substr(i, bar - i));
    std::size_t close = s.find('>', bar);
    if (close == std::string::npos || close - bar != 4)
      throw InputError("ket terms must look like |ijk>: '" + ket + "'");
    Index idx{};
    for (int d = 0; d < 3; ++d) {
      char ch = s[bar + 1 + d];
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw InputError("bad ket digit");
      idx[d] = static_cast<std::size_t>(ch - '0');
    }
    st.add(idx, neg ? -coeff : coeff);
    i = close + 1;
  }
  return st;
}

Pencil pencil_of_state(const State& s) {
  Pencil p = Pencil::zero(s.m(), s.n());
  for (const auto& [idx, a] : s.amplitudes()) {
    (idx[0] == 0 ? p.r : p.s)(idx[1], idx[2]) = a;
  }
  return p;
}

State state_of_pencil(const Pencil& p) {
  State st(p.rows(), p.cols());
  for (std::size_t j = 0; j < p.rows(); ++j)
    for (std::size_t k = 0; k < p.cols(); ++k) {
      st.set({0, j, k}, p.r(j, k));
      st.set({1, j, k}, p.s(j, k));
    }
  return st;
}

namespace {

bool invertible(const ScalarMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return rank(m, tol) == m.rows();
}

}  // namespace

State apply_local_ops(const State& s, const LocalOps& ops, double tol) {
  if (ops.a.rows() != 2 || ops.b.rows() != s.m() || ops.c.rows() != s.n())
    throw InputError("local operator shape does not match state dimensions");
  if (!invertible(ops.a, tol) || !invertible(ops.b, tol) || !invertible(ops.c, tol))
    throw InputError("local operator is not invertible");
  Pencil p = pencil_of_state(s);
  ScalarMatrix ct = ops.c.transpose();
  ScalarMatrix r = ops.b * p.r * ct;
  ScalarMatrix q = ops.b * p.s * ct;
  Pencil out(ops.a(0, 0) * r + ops.a(0, 1) * q, ops.a(1, 0) * r + ops.a(1, 1) * q);
  return state_of_pencil(out);
}

std::tuple<std::size_t, std::size_t, std::size_t> local_ranks(const State& s, double tol) {
  const std::size_t m = s.m(), n = s.n();
  ScalarMatrix ma(2, m * n), mb(m, 2 * n), mc(n, 2 * m);
  for (const auto& [idx, a] : s.amplitudes()) {
    auto [i, j, k] = idx;
    ma(i, j * n + k) = a;
    mb(j, i * n + k) = a;
    mc(k, i * m + j) = a;
  }
  return {rank(ma, tol), rank(mb, tol), rank(mc, tol)};
}

Pencil transpose_pencil(const Pencil& p) { return {p.r.transpose(), p.s.transpose()}; }

State pad_state(const State& s, std::size_t n) {
  if (n < s.n()) throw InputError("padding cannot remove columns");
  State out(s.m(), n);
  for (const auto& [idx, a] : s.amplitudes()) out.set(idx, a);
  return out;
}

std::string to_ket(const State& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, a] : s.amplitudes()) {
    bool neg = false;
    std::string coeff = coefficient_prefix(a, &neg);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    os << coeff << "|" << idx[0] << idx[1] << idx[2] << ">";
    first = false;
  }
  return os.str();
}

std::string to_pencil_text(const Pencil& p) {
  std::ostringstream os;
  for (std::size_t j = 0; j < p.rows(); ++j) {
    os << "[";
    for (std::size_t k = 0; k < p.cols(); ++k) {
      if (k > 0) os << ", ";
      std::string entry;
      const std::pair<const Scalar*, const char*> terms[] = {{&p.r(j, k), "μ"}, {&p.s(j, k), "λ"}};
      for (const auto& [c, sym] : terms) {
        if (c->is_zero()) continue;
        bool neg = false;
        std::string pre = coefficient_prefix(*c, &neg);
        if (entry.empty()) {
          entry += neg ? "-" : "";
        } else {
          entry += neg ? "-" : "+";
        }
        entry += pre + sym;
      }
      os << (entry.empty() ? "·" : entry);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace skcf
