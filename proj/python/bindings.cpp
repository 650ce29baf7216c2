#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "whufft/harness.hpp"

namespace py = pybind11;
using namespace whufft;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Signal to_signal(const ComplexArray& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a one-dimensional array");
  Signal x(a.size());
  auto r = a.unchecked<1>();
  for (py::ssize_t i = 0; i < a.size(); ++i) x[i] = {r(i).real(), r(i).imag()};
  return x;
}

ComplexArray from_signal(const Signal& y) {
  ComplexArray out(static_cast<py::ssize_t>(y.size()));
  auto w = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < y.size(); ++i) w(i) = {y[i].re, y[i].im};
  return out;
}

py::dict tally_dict(const OpTally& t) {
  py::dict d;
  d["add_sub"] = t.add_sub;
  d["mul"] = t.mul;
  d["div2"] = t.div2;
  d["mul_pow2"] = t.mul_pow2;
  d["total"] = t.total();
  return d;
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
}

WhtAlgo parse_wht(const std::string& name) {
  if (name == "naive") return WhtAlgo::Naive;
  if (name == "folklore") return WhtAlgo::Folklore;
  if (name == "h4") return WhtAlgo::H4;
  if (name == "h8") return WhtAlgo::H8;
  throw std::invalid_argument("unknown WHT algorithm '" + name + "'");
}

ScaledVariant parse_variant(const std::string& name) {
  for (auto v : {ScaledVariant::Plain, ScaledVariant::S, ScaledVariant::S2, ScaledVariant::S4}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown variant '" + name + "'");
}

template <class S>
CVec<S> lift(const Signal& x) {
  CVec<S> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back({S(v.re), S(v.im)});
  return out;
}

template <class S>
Signal lower(const CVec<S>& y) {
  Signal out;
  out.reserve(y.size());
  for (const auto& v : y) out.push_back({value_of(v.re), value_of(v.im)});
  return out;
}

template <class S>
CVec<S> run_fft(const std::string& algo, const CVec<S>& x, ScaledVariant v) {
  if (algo == "naive") return dft_naive(x);
  if (algo == "sr") return fft_sr(x);
  if (algo == "msr") return msr(x, v);
  if (algo == "whufft") {
    if (v == ScaledVariant::Plain) return whufft::whufft(x);
    return whufft_tw(whufft_hprime_phase(x, WhtAlgo::H8), v);
  }
  throw std::invalid_argument("unknown FFT algorithm '" + algo + "'");
}

}  // namespace

PYBIND11_MODULE(_whufft, m) {
  m.doc() = "Walsh-Hadamard transforms and split-radix FFTs with exact operation counts";

  m.def(
      "wht",
      [](const RealArray& x, const std::string& algo, int k) {
        std::vector<double> v(x.data(), x.data() + x.size());
        std::span<double> s(v);
        switch (parse_wht(algo)) {
          case WhtAlgo::Naive: wht_naive(s); break;
          case WhtAlgo::Folklore: wht_folklore(s); break;
          case WhtAlgo::H4: wht_h4(s, k); break;
          case WhtAlgo::H8: wht_h8(s, k); break;
        }
        return RealArray(static_cast<py::ssize_t>(v.size()), v.data());
      },
      py::arg("x"), py::arg("algo") = "h8", py::arg("k") = 0,
      "2^k H_N x (k applies to h4 and h8 only).");

  m.def(
      "fft",
      [](const ComplexArray& x, const std::string& algo, const std::string& variant) {
        return from_signal(lower(run_fft(algo, lift<double>(to_signal(x)), parse_variant(variant))));
      },
      py::arg("x"), py::arg("algo") = "whufft", py::arg("variant") = "plain",
      "DFT with w_N = exp(-2 pi i / N). algo: naive, sr, msr, whufft.");

  m.def(
      "hprime",
      [](const ComplexArray& x, const std::string& wht) {
        auto v = lift<double>(to_signal(x));
        apply_hprime(std::span<ComplexPair<double>>(v), parse_wht(wht));
        return from_signal(lower(v));
      },
      py::arg("x"), py::arg("wht") = "h8");

  m.def(
      "count",
      [](const std::string& algo, int log2n) {
        if (log2n < 0 || log2n > 22) throw std::out_of_range("log2n must be in [0, 22]");
        const Algo a = parse_algo(algo);
        return tally_dict(run_counted(a, make_signal(a, 1, log2n, 0, false)).second);
      },
      py::arg("algo"), py::arg("log2n"),
      "Operation tally of a CLI algorithm (e.g. 'fft-whufft') at N = 2^log2n.");

  m.def(
      "predict",
      [](const std::string& algo, int log2n) {
        const Prediction p = predict(algo, log2n);
        py::dict d;
        d["algo"] = p.algo;
        d["log2n"] = p.log2n;
        d["kind"] = std::string(to_string(p.kind));
        d["total"] = fraction(p.total);
        d["breakdown"] = p.breakdown ? py::object(tally_dict(*p.breakdown)) : py::none();
        return d;
      },
      py::arg("algo"), py::arg("log2n"));

  m.def("crossover", &crossover, py::arg("algo_a"), py::arg("algo_b"), py::arg("log2n_max") = 40);

  m.def(
      "reduction_leading_constant",
      [](py::object c) {
        py::object f = py::module_::import("fractions").attr("Fraction")(c);
        const Rational r(boost::multiprecision::cpp_int(py::str(f.attr("numerator")).cast<std::string>()),
                         boost::multiprecision::cpp_int(py::str(f.attr("denominator")).cast<std::string>()));
        return fraction(reduction_leading_constant(r));
      },
      py::arg("c"));

  m.def("partition", [](std::size_t n) { return partition(n).subsets; }, py::arg("n"));
  m.def("f_count", &f_count, py::arg("n1"), py::arg("n2"));
  m.def("split_radix_order", &split_radix_order, py::arg("n"));

  m.def(
      "lemma_checks",
      [](int log2n_max) {
        const auto rep = lemma_checks(log2n_max);
        py::dict d;
        d["identities_hold"] = rep.identities_hold;
        d["max_coeff"] = rep.max_coeff;
        d["block_mass"] = [&] {
          py::list l;
          for (const auto& r : rep.rows) l.append(r.block_mass);
          return l;
        }();
        return d;
      },
      py::arg("log2n_max"));

  m.attr("algorithms") = [] {
    py::list l;
    for (auto a : all_algos()) l.append(std::string(to_string(a)));
    return l;
  }();
}
