#pragma once

// ISA-independent bodies of the SIMD kernels. `Ops` wraps one instruction set
// (see ops_avx2.hpp, ops_neon.hpp) and provides:
//
//   V, M, kLanes, load, store, set1, add, sub, mul, fma (a*b+c),
//   fnma (c-a*b), round_nearest, floor, min, neg, eq, lor, select (m ? a : b)
//
// Trig arguments are reduced by a three-part Cody-Waite split of π/2, which
// keeps the absolute error near 1 ulp for |x| up to about 1e6 rad.

#include <array>
#include <cstddef>
#include <numbers>

#include "kernel_table.hpp"
#include "spin1bell/kernels.hpp"

namespace spin1bell::kernels::detail {

template <class Ops>
struct VecMath {
  using V = typename Ops::V;
  using M = typename Ops::M;
  static constexpr std::size_t kLanes = Ops::kLanes;

  // π/2 = kPio2Hi + kPio2Mid + kPio2Lo, first two parts 33 bits wide.
  static constexpr double kTwoOverPi = 6.36619772367581382433e-01;
  static constexpr double kPio2Hi = 1.57079632673412561417e+00;
  static constexpr double kPio2Mid = 6.07710050630396597660e-11;
  static constexpr double kPio2Lo = 2.02226624879595063154e-21;

  // Minimax coefficients on [-π/4, π/4].
  static constexpr std::array<double, 6> kSin = {
      -1.66666666666666324348e-01, 8.33333333332248946124e-03, -1.98412698298579493134e-04,
      2.75573137070700676789e-06,  -2.50507602534068634195e-08, 1.58969099521155010221e-10};
  static constexpr std::array<double, 6> kCos = {
      4.16666666666666019037e-02,  -1.38888888888741095749e-03, 2.48015872894767294178e-05,
      -2.75573143513906633035e-07, 2.08757232129817482790e-09,  -1.13596475577881948265e-11};

  static V horner(V z, const std::array<double, 6>& c) {
    V acc = Ops::set1(c[5]);
    for (std::size_t i = 5; i-- > 0;) acc = Ops::fma(acc, z, Ops::set1(c[i]));
    return acc;
  }

  static void sincos(V x, V& sin_out, V& cos_out) {
    const V k = Ops::round_nearest(Ops::mul(x, Ops::set1(kTwoOverPi)));
    V r = Ops::fnma(k, Ops::set1(kPio2Hi), x);
    r = Ops::fnma(k, Ops::set1(kPio2Mid), r);
    r = Ops::fnma(k, Ops::set1(kPio2Lo), r);

    const V z = Ops::mul(r, r);
    const V sin_r = Ops::fma(Ops::mul(r, z), horner(z, kSin), r);
    const V cos_r = Ops::fma(Ops::mul(z, z), horner(z, kCos),
                             Ops::fnma(Ops::set1(0.5), z, Ops::set1(1.0)));

    // quadrant q = k mod 4
    const V q = Ops::fnma(Ops::set1(4.0), Ops::floor(Ops::mul(k, Ops::set1(0.25))), k);
    const M q1 = Ops::eq(q, Ops::set1(1.0));
    const M q2 = Ops::eq(q, Ops::set1(2.0));
    const M q3 = Ops::eq(q, Ops::set1(3.0));

    const M swap = Ops::lor(q1, q3);
    const V a = Ops::select(swap, cos_r, sin_r);
    const V b = Ops::select(swap, sin_r, cos_r);
    sin_out = Ops::select(Ops::lor(q2, q3), Ops::neg(a), a);
    cos_out = Ops::select(Ops::lor(q1, q2), Ops::neg(b), b);
  }

  static V cos(V x) {
    V s, c;
    sincos(x, s, c);
    return c;
  }

  static V square(V v) { return Ops::mul(v, v); }

  // sin⁴(d/2) = ((1 - cos d) / 2)²
  static V sin4_half(V d) {
    return square(Ops::mul(Ops::set1(0.5), Ops::sub(Ops::set1(1.0), cos(d))));
  }

  // cos⁴(d/2) = ((1 + cos d) / 2)²
  static V cos4_half(V d) {
    return square(Ops::mul(Ops::set1(0.5), Ops::add(Ops::set1(1.0), cos(d))));
  }

  // Rotated eigenvectors along one angle, as z-basis components (+1, 0, -1).
  struct Columns {
    std::array<V, 3> plus;
    std::array<V, 3> zero;
    std::array<V, 3> minus;
  };

  static Columns columns(V beta) {
    V s, c;
    sincos(beta, s, c);
    const V half_plus = Ops::mul(Ops::set1(0.5), Ops::add(Ops::set1(1.0), c));
    const V half_minus = Ops::mul(Ops::set1(0.5), Ops::sub(Ops::set1(1.0), c));
    const V off = Ops::mul(s, Ops::set1(1.0 / std::numbers::sqrt2));
    const V neg_off = Ops::neg(off);
    return {{half_plus, off, half_minus}, {neg_off, c, off}, {half_minus, neg_off, half_plus}};
  }

  struct ComplexV {
    V re;
    V im;
  };

  struct StateV {
    std::array<V, 9> re;
    std::array<V, 9> im;
  };

  static StateV broadcast(const Complex* state) {
    StateV out;
    for (std::size_t k = 0; k < 9; ++k) {
      out.re[k] = Ops::set1(state[k].real());
      out.im[k] = Ops::set1(state[k].imag());
    }
    return out;
  }

  // w_j = Σ_k v_k ψ_jk
  static std::array<ComplexV, 3> contract_second(const StateV& psi, const std::array<V, 3>& v) {
    std::array<ComplexV, 3> w;
    for (std::size_t j = 0; j < 3; ++j) {
      V re = Ops::mul(v[0], psi.re[3 * j]);
      V im = Ops::mul(v[0], psi.im[3 * j]);
      re = Ops::fma(v[1], psi.re[3 * j + 1], re);
      im = Ops::fma(v[1], psi.im[3 * j + 1], im);
      re = Ops::fma(v[2], psi.re[3 * j + 2], re);
      im = Ops::fma(v[2], psi.im[3 * j + 2], im);
      w[j] = {re, im};
    }
    return w;
  }

  // min(|Σ_j u_j w_j|², 1)
  static V probability(const std::array<V, 3>& u, const std::array<ComplexV, 3>& w) {
    V re = Ops::mul(u[0], w[0].re);
    V im = Ops::mul(u[0], w[0].im);
    re = Ops::fma(u[1], w[1].re, re);
    im = Ops::fma(u[1], w[1].im, im);
    re = Ops::fma(u[2], w[2].re, re);
    im = Ops::fma(u[2], w[2].im, im);
    return Ops::min(Ops::fma(re, re, Ops::mul(im, im)), Ops::set1(1.0));
  }

  static V s_table(const StateV& psi, V b1, V b1p, V b2, V b2p) {
    const Columns c1 = columns(b1);
    const Columns c1p = columns(b1p);
    const Columns c2 = columns(b2);
    const Columns c2p = columns(b2p);

    const auto w_plus2 = contract_second(psi, c2.plus);
    const auto w_plus2p = contract_second(psi, c2p.plus);
    const auto w_zero2 = contract_second(psi, c2.zero);
    const auto w_minus2 = contract_second(psi, c2.minus);

    const V p11_a = probability(c1.plus, w_plus2);
    const V p11_b = probability(c1.plus, w_plus2p);
    const V p11_c = probability(c1p.plus, w_plus2p);
    V block = probability(c1p.zero, w_zero2);
    block = Ops::add(block, probability(c1p.zero, w_minus2));
    block = Ops::add(block, probability(c1p.minus, w_zero2));
    block = Ops::add(block, probability(c1p.minus, w_minus2));
    return Ops::add(Ops::add(Ops::sub(p11_a, p11_b), p11_c), block);
  }

  static V s_singlet(V b1, V b1p, V b2, V b2p) {
    const V third = Ops::set1(1.0 / 3.0);
    const V p11_a = Ops::mul(sin4_half(Ops::sub(b1, b2)), third);
    const V p11_b = Ops::mul(sin4_half(Ops::sub(b1, b2p)), third);
    const V p11_c = Ops::mul(sin4_half(Ops::sub(b1p, b2p)), third);
    const V block = Ops::mul(Ops::add(Ops::set1(1.0), sin4_half(Ops::sub(b1p, b2))), third);
    return Ops::add(Ops::add(Ops::sub(p11_a, p11_b), p11_c), block);
  }

  static V s_product(V b1, V b1p, V b2, V b2p) {
    const V one = Ops::set1(1.0);
    const V x = cos4_half(b1);
    const V xp = cos4_half(b1p);
    const V y = sin4_half(b2);
    const V yp = sin4_half(b2p);
    V acc = Ops::fnma(x, yp, Ops::mul(x, y));
    acc = Ops::fma(xp, yp, acc);
    return Ops::fma(Ops::sub(one, xp), Ops::sub(one, y), acc);
  }

  // Applies f to full vectors of the four angle columns, zero-padding the tail.
  template <class F>
  static void for_each_config(const AngleColumns& a, double* out, F&& f) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
      Ops::store(out + i, f(Ops::load(a.beta1.data() + i), Ops::load(a.beta1_prime.data() + i),
                            Ops::load(a.beta2.data() + i), Ops::load(a.beta2_prime.data() + i)));
    }
    if (i == n) return;
    std::array<std::array<double, kLanes>, 4> buf{};
    const std::size_t rem = n - i;
    for (std::size_t l = 0; l < rem; ++l) {
      buf[0][l] = a.beta1[i + l];
      buf[1][l] = a.beta1_prime[i + l];
      buf[2][l] = a.beta2[i + l];
      buf[3][l] = a.beta2_prime[i + l];
    }
    std::array<double, kLanes> res{};
    Ops::store(res.data(), f(Ops::load(buf[0].data()), Ops::load(buf[1].data()),
                             Ops::load(buf[2].data()), Ops::load(buf[3].data())));
    for (std::size_t l = 0; l < rem; ++l) out[i + l] = res[l];
  }

  static void s_batch(const Complex* state, const AngleColumns& angles, double* out) {
    const StateV psi = broadcast(state);
    for_each_config(angles, out, [&psi](V b1, V b1p, V b2, V b2p) {
      return s_table(psi, b1, b1p, b2, b2p);
    });
  }

  static void singlet_closed(const AngleColumns& angles, double* out) {
    for_each_config(angles, out, [](V b1, V b1p, V b2, V b2p) {
      return s_singlet(b1, b1p, b2, b2p);
    });
  }

  static void product_closed(const AngleColumns& angles, double* out) {
    for_each_config(angles, out, [](V b1, V b1p, V b2, V b2p) {
      return s_product(b1, b1p, b2, b2p);
    });
  }

  static void sincos_array(const double* x, std::size_t n, double* sin_out, double* cos_out) {
    std::size_t i = 0;
    V s, c;
    for (; i + kLanes <= n; i += kLanes) {
      sincos(Ops::load(x + i), s, c);
      Ops::store(sin_out + i, s);
      Ops::store(cos_out + i, c);
    }
    if (i == n) return;
    std::array<double, kLanes> in{}, so{}, co{};
    for (std::size_t l = 0; i + l < n; ++l) in[l] = x[i + l];
    sincos(Ops::load(in.data()), s, c);
    Ops::store(so.data(), s);
    Ops::store(co.data(), c);
    for (std::size_t l = 0; i + l < n; ++l) {
      sin_out[i + l] = so[l];
      cos_out[i + l] = co[l];
    }
  }

  static const KernelTable& table();
};

template <class Ops>
const KernelTable& VecMath<Ops>::table() {
  static constexpr KernelTable t{&VecMath::s_batch, &VecMath::singlet_closed,
                                 &VecMath::product_closed, &VecMath::sincos_array};
  return t;
}

}  // namespace spin1bell::kernels::detail
