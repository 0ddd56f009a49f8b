#pragma once

// Quantum integers, factorials and binomials in both flavours.
// `vexp` and `sexp` give the substitution v -> v^vexp, t -> s^sexp used for
// the per-index parameters v_i, t_i; (1, D) gives the plain v and t.

#include "scalar.hpp"

#include <stdexcept>

namespace vtc {

/// [n]_v = (v^n - v^{-n}) / (v - v^{-1}), with v replaced by v^vexp.
inline Scalar qint(int n, int vexp = 1) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  return (vpow(n * vexp) - vpow(-n * vexp)) / (vpow(vexp) - vpow(-vexp));
}

/// [n]_{v,t} = ((vt)^n - (vt^{-1})^{-n}) / (vt - (vt^{-1})^{-1}).
inline Scalar qint_vt(int n, int vexp, int sexp) {
  if (n < 0) throw std::invalid_argument("qint_vt: negative argument");
  const Scalar vt = vpow(vexp) * spow(sexp);
  const Scalar vtinv = vpow(vexp) * spow(-sexp);
  return (vt.pow(n) - vtinv.pow(-n)) / (vt - vtinv.inverse());
}

inline Scalar qfact(int n, int vexp = 1) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k, vexp);
  return r;
}

inline Scalar qfact_vt(int n, int vexp, int sexp) {
  if (n < 0) throw std::invalid_argument("qfact_vt: negative argument");
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= qint_vt(k, vexp, sexp);
  return r;
}

inline Scalar qbinom(int n, int k, int vexp = 1) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinom: out of range");
  return qfact(n, vexp) / (qfact(k, vexp) * qfact(n - k, vexp));
}

inline Scalar qbinom_vt(int n, int k, int vexp, int sexp) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinom_vt: out of range");
  return qfact_vt(n, vexp, sexp) / (qfact_vt(k, vexp, sexp) * qfact_vt(n - k, vexp, sexp));
}

/// Gaussian binomial [n choose k]_v for arbitrary integer n (k >= 0), via the
/// product formula; needed where the top entry can be negative.
inline Scalar qbinom_general(int n, int k, int vexp = 1) {
  if (k < 0) throw std::invalid_argument("qbinom_general: negative k");
  Scalar num(1), den(1);
  auto bracket = [&](int m) { return (vpow(m * vexp) - vpow(-m * vexp)) / (vpow(vexp) - vpow(-vexp)); };
  for (int r = 0; r < k; ++r) {
    num *= bracket(n - r);
    den *= bracket(r + 1);
  }
  return num / den;
}

}  // namespace vtc
