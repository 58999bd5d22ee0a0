#include "cusa/claims.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "cusa/bounds.hpp"
#include "cusa/constants.hpp"
#include "cusa/invtrig.hpp"
#include "cusa/kernel.hpp"
#include "cusa/means.hpp"
#include "stable.hpp"

namespace cusa {

using detail::kPi;
using detail::kPiHalf;

namespace {

using FailSide = SharpBoundary::FailSide;
using Orient = SharpBoundary::Orientation;

double sinc(double x) { return std::sin(x) / x; }

bool in_region_E(double p, double q) { return p <= 0.0 || p <= 3.0 * q; }

bool in_region_Ekq(double k, double q) {
  return (q <= 0.0 && k >= 0.0) || (q >= 0.0 && k <= 3.0);
}

void req(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// ---------------------------------------------------------------------------
// expression registry
// ---------------------------------------------------------------------------

using Eval = std::function<double(double, const ParamMap&)>;

const std::map<std::string, Eval>& expr_registry() {
  static const std::map<std::string, Eval> reg = [] {
    std::map<std::string, Eval> m;
    const auto P = [](const ParamMap& pm, const char* name) {
      auto it = pm.find(name);
      if (it == pm.end())
        throw std::invalid_argument(std::string("missing parameter: ") + name);
      return it->second;
    };

    // --- x in (0, pi/2) ---
    m["sinc"] = [](double x, const ParamMap&) { return sinc(x); };
    m["cusa"] = [](double x, const ParamMap&) {
      return (2.0 + std::cos(x)) / 3.0;
    };
    m["cos_cbrt"] = [](double x, const ParamMap&) {
      return std::cbrt(std::cos(x));
    };
    m["cos_cubed_third"] = [](double x, const ParamMap&) {
      const double c = std::cos(x / 3.0);
      return c * c * c;
    };
    m["sq_mix_cos_half"] = [](double x, const ParamMap&) {
      const double v = 2.0 / 3.0 * std::cos(0.5 * x) + 1.0 / 3.0;
      return v * v;
    };
    m["cos_inv_sqrt3"] = [](double x, const ParamMap&) {
      return std::cos(x / std::sqrt(3.0));
    };
    m["cos_half_pow43"] = [](double x, const ParamMap&) {
      return std::pow(std::cos(0.5 * x), 4.0 / 3.0);
    };
    m["cos_quarter_pow163"] = [](double x, const ParamMap&) {
      return std::pow(std::cos(0.25 * x), 16.0 / 3.0);
    };
    m["gauss_x2"] = [](double x, const ParamMap&) {
      return std::exp(-x * x / 6.0);
    };
    m["geo_mean_cos_sinc_pow14"] = [](double x, const ParamMap&) {
      return std::pow(std::cos(x) * sinc(x), 0.25);
    };
    m["artanh_ratio_sqrt"] = [](double x, const ParamMap&) {
      const double s = std::sin(x);
      return std::sqrt(s / std::atanh(s));
    };
    m["avg_cos_sinc_sqrt"] = [](double x, const ParamMap&) {
      return std::sqrt(0.5 * (std::cos(x) + sinc(x)));
    };
    m["one_plus_2cos_over3_sqrt"] = [](double x, const ParamMap&) {
      return std::sqrt((1.0 + 2.0 * std::cos(x)) / 3.0);
    };
    m["half_one_plus_cos_pow23"] = [](double x, const ParamMap&) {
      return std::pow(0.5 * (1.0 + std::cos(x)), 2.0 / 3.0);
    };
    m["bound_M"] = [P](double x, const ParamMap& pm) {
      return bound_M(std::cos(x), P(pm, "p"), P(pm, "q"));
    };
    m["bound_N"] = [P](double x, const ParamMap& pm) {
      return bound_N(std::cos(x), P(pm, "p"), P(pm, "q"));
    };
    m["bound_M_p1"] = [P](double x, const ParamMap& pm) {
      return bound_M(std::cos(x), P(pm, "p1"), P(pm, "q"));
    };
    m["bound_M_p2"] = [P](double x, const ParamMap& pm) {
      return bound_M(std::cos(x), P(pm, "p2"), P(pm, "q"));
    };
    m["cos_gap_q1"] = [P](double x, const ParamMap& pm) {
      return u_p(P(pm, "q1"), std::cos(x)) / 3.0;
    };
    m["cos_gap_q2"] = [P](double x, const ParamMap& pm) {
      return u_p(P(pm, "q2"), std::cos(x)) / 3.0;
    };
    m["sinc_gap"] = [P](double x, const ParamMap& pm) {
      return u_p(P(pm, "p"), sinc(x));
    };
    m["bound_M_kq"] = [P](double x, const ParamMap& pm) {
      return bound_M_kq(std::cos(x), P(pm, "k"), P(pm, "q"));
    };
    m["M_kq_q1"] = [P](double x, const ParamMap& pm) {
      return bound_M_kq(std::cos(x), P(pm, "k"), P(pm, "q1"));
    };
    m["M_kq_q2"] = [P](double x, const ParamMap& pm) {
      return bound_M_kq(std::cos(x), P(pm, "k"), P(pm, "q2"));
    };
    m["bound_M_line"] = [P](double x, const ParamMap& pm) {
      return bound_M_line(std::cos(x), P(pm, "q"));
    };
    m["bound_N_line"] = [P](double x, const ParamMap& pm) {
      const double q = P(pm, "q");
      return bound_N(std::cos(x), 3.0 * q - 8.0 / 5.0, q);
    };
    m["zhu_mix_eta"] = [P](double x, const ParamMap& pm) {
      const double eta = P(pm, "eta");
      return 1.0 - eta + eta * std::pow(std::cos(x), P(pm, "p"));
    };
    m["zhu_mix_xi"] = [P](double x, const ParamMap& pm) {
      const double xi = P(pm, "xi");
      return 1.0 - xi + xi * std::pow(std::cos(x), P(pm, "p"));
    };
    m["sinc_pow_p"] = [P](double x, const ParamMap& pm) {
      return std::pow(sinc(x), P(pm, "p"));
    };
    m["sinc_pow_pmq"] = [P](double x, const ParamMap& pm) {
      return std::pow(sinc(x), P(pm, "p") - P(pm, "q"));
    };
    m["huygens_N_mix"] = [P](double x, const ParamMap& pm) {
      const double q = P(pm, "q");
      const double wp = std::pow(2.0 / kPi, P(pm, "p"));
      const double over_sin = std::pow(x / std::sin(x), q);
      const double over_tan = std::pow(x * std::cos(x) / std::sin(x), q);
      return wp * over_sin + (1.0 - wp) * over_tan;
    };
    m["huygens_M_mix"] = [P](double x, const ParamMap& pm) {
      const double q = P(pm, "q");
      const double w = P(pm, "p") / (3.0 * q);
      const double over_sin = std::pow(x / std::sin(x), q);
      const double over_tan = std::pow(x * std::cos(x) / std::sin(x), q);
      return (1.0 - w) * over_sin + w * over_tan;
    };

    // --- t in (0, 1) ---
    m["arcsin_t"] = [](double t, const ParamMap&) { return std::asin(t); };
    m["arccos_t"] = [](double t, const ParamMap&) { return std::acos(t); };
    m["sf_basic_lower"] = [P](double t, const ParamMap& pm) {
      const double s = std::sqrt((1.0 - t) * (1.0 + t));
      return t / bound_M(s, P(pm, "p"), P(pm, "q"));
    };
    m["sf_basic_upper"] = [P](double t, const ParamMap& pm) {
      const double s = std::sqrt((1.0 - t) * (1.0 + t));
      return t / bound_N(s, P(pm, "p"), P(pm, "q"));
    };
    m["sf_half_3"] = [P](double t, const ParamMap& pm) {
      return halfangle_arcsin_bound(t, P(pm, "p"), P(pm, "q"), 3.0);
    };
    m["sf_half_c"] = [P](double t, const ParamMap& pm) {
      const double p = P(pm, "p"), q = P(pm, "q");
      return halfangle_arcsin_bound(t, p, q, c_pq(p, q));
    };
    m["ct_half_3"] = [P](double t, const ParamMap& pm) {
      return halfangle_arccos_bound(t, P(pm, "p"), P(pm, "q"), 3.0);
    };
    m["ct_half_c"] = [P](double t, const ParamMap& pm) {
      const double p = P(pm, "p"), q = P(pm, "q");
      return halfangle_arccos_bound(t, p, q, c_pq(p, q));
    };
    m["carlson_lower"] = [](double t, const ParamMap&) {
      return 6.0 * std::sqrt(1.0 - t) /
             (2.0 * std::sqrt(2.0) + std::sqrt(1.0 + t));
    };
    m["carlson_upper"] = [](double t, const ParamMap&) {
      return std::pow(2.0, 2.0 / 3.0) * std::sqrt(1.0 - t) *
             std::pow(1.0 + t, -1.0 / 6.0);
    };
    m["mean_SB"] = [](double t, const ParamMap&) {
      return schwab_borchardt(t, 1.0);
    };
    m["mean_P"] = [](double t, const ParamMap&) {
      return classical_mean(MeanKind::P, t, 1.0).value;
    };
    m["sb_bound_kq_t"] = [P](double t, const ParamMap& pm) {
      return bound_M_kq(t, P(pm, "k"), P(pm, "q"));
    };
    m["sb_bound_line_t"] = [P](double t, const ParamMap& pm) {
      return bound_M_line(t, P(pm, "q"));
    };
    m["p_bound_line_t"] = [P](double t, const ParamMap& pm) {
      const double am = 0.5 * (1.0 + t);
      return am * bound_M_line(std::sqrt(t) / am, P(pm, "q"));
    };
    return m;
  }();
  return reg;
}

// Tag for the one-parameter family member at a fixed q, round-trip safe.
std::string m_line_tag(double q) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "M_line:%.17g", q);
  return buf;
}

// ---------------------------------------------------------------------------
// catalog construction
// ---------------------------------------------------------------------------

Claim base_claim(std::string id, std::string anchor, char variable,
                 std::vector<std::string> exprs) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.variable = variable;
  c.lo = 0.0;
  c.hi = variable == 'x' ? kPiHalf : 1.0;
  c.exprs = std::move(exprs);
  c.instances = {ParamMap{}};
  c.validate = [](const ParamMap&) {};
  return c;
}

std::vector<Claim> build_catalog() {
  std::vector<Claim> cat;
  const double knee = kPi * kPi / 4.0 - 1.0;     // pi^2/4 - 1
  const double qstar = 34.0 / 35.0;
  const double k_split = (35.0 * kPi * kPi - 140.0) / 136.0;
  const double two_over_pi = 2.0 / kPi;

  const auto line_of = [](double q) { return 3.0 * q - 8.0 / 5.0; };

  // ----- classical and single-shot chains -----
  {
    Claim c = base_claim("C-MC", "Mitrinovic (1970)", 'x',
                         {"cos_cbrt", "sinc", "cusa"});
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-KLENYANG", "Klen, Visuri & Vuorinen (2010)", 'x',
                         {"sinc", "cos_cubed_third", "cusa"});
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-YANG1", "Yang (2013)", 'x',
                         {"sinc", "sq_mix_cos_half", "cos_cubed_third", "cusa"});
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim(
        "C-NEUMAN1", "Neuman & Sandor (2010)", 'x',
        {"cos_cbrt", "geo_mean_cos_sinc_pow14", "artanh_ratio_sqrt",
         "avg_cos_sinc_sqrt", "one_plus_2cos_over3_sqrt",
         "half_one_plus_cos_pow23", "sinc"});
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-YANG2", "Yang (2013)", 'x',
                         {"cos_cbrt", "cos_inv_sqrt3", "cos_half_pow43",
                          "sinc", "cos_cubed_third", "cos_quarter_pow163",
                          "gauss_x2", "cusa"});
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-YANG3", "Yang (2014)", 'x',
                         {"M_kq_q1", "sinc", "M_kq_q2"});
    c.params = {{"k", 1.0, "0 < k <= 23/17 (both sharp clauses apply)"},
                {"q1", 4.0 / 5.0, "q1 <= 8/(5(3-k))"},
                {"q2", q_of_k(1.0), "q2 >= q_of_k(k)"}};
    c.sharp_boundaries = {
        {"q1", "8/(5(3-k))",
         [](const ParamMap& pm) { return 8.0 / (5.0 * (3.0 - pm.at("k"))); },
         FailSide::above, Orient::primary},
        {"q2", "q_of_k(k)",
         [](const ParamMap& pm) { return q_of_k(pm.at("k")); },
         FailSide::below, Orient::primary}};
    c.instances = {{{"k", 1.0}, {"q1", 4.0 / 5.0}, {"q2", q_of_k(1.0)}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k"), q1 = pm.at("q1"), q2 = pm.at("q2");
      req(k > 0.0 && k <= 23.0 / 17.0, "C-YANG3: need 0 < k <= 23/17");
      req(in_region_Ekq(k, q1) && in_region_Ekq(k, q2),
          "C-YANG3: (k, q1) and (k, q2) must lie in the power-mean region");
    };
    cat.push_back(std::move(c));
  }
  {
    std::vector<std::string> chain = {"cos_cbrt",
                                      m_line_tag(0.0),
                                      m_line_tag(0.2),
                                      m_line_tag(8.0 / 15.0),
                                      m_line_tag(0.7),
                                      m_line_tag(0.8),
                                      m_line_tag(13.0 / 15.0),
                                      m_line_tag(qstar),
                                      "sinc",
                                      m_line_tag(1.0),
                                      m_line_tag(1.2),
                                      "cusa"};
    Claim c = base_claim("C-CHAIN-FINAL", "Yang (2013)", 'x', std::move(chain));
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-HUYGENS", "Yang (2013)", 'x',
                         {"huygens_N_mix", "sinc_pow_pmq", "huygens_M_mix"});
    c.params = {{"p", 1.0, "0 < p <= 3q - 8/5"}, {"q", 1.0, "q >= 1"}};
    c.equivalent_to = "C-MT1-i";
    c.instances = {{{"p", 1.0}, {"q", 1.0}}, {{"p", 2.0}, {"q", 2.0}}};
    c.validate = [](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q >= 1.0, "C-HUYGENS: need q >= 1");
      req(p > 0.0 && p <= 3.0 * q - 8.0 / 5.0,
          "C-HUYGENS: need 0 < p <= 3q - 8/5");
    };
    cat.push_back(std::move(c));
  }

  // ----- power-mean mixes of cos (Zhu style) -----
  {
    Claim c = base_claim("C-ZHU-i", "Zhu (2009)", 'x',
                         {"zhu_mix_xi", "sinc_pow_p", "zhu_mix_eta"});
    c.params = {{"p", 1.0, "p >= 1"},
                {"eta", 1.0 / 3.0, "eta <= 1/3 (sharp at 1/3)"},
                {"xi", 1.0 - two_over_pi, "xi >= 1 - (2/pi)^p (sharp there)"}};
    c.sharp_boundaries = {
        {"eta", "1/3", [](const ParamMap&) { return 1.0 / 3.0; },
         FailSide::above, Orient::primary},
        {"xi", "1 - (2/pi)^p",
         [two_over_pi](const ParamMap& pm) {
           return -std::expm1(pm.at("p") * std::log(two_over_pi));
         },
         FailSide::below, Orient::primary}};
    c.instances = {{{"p", 1.0}},
                   {{"p", 2.0},
                    {"eta", 1.0 / 3.0},
                    {"xi", 1.0 - 4.0 / (kPi * kPi)}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") >= 1.0, "C-ZHU-i: need p >= 1");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-ZHU-ii", "Zhu (2009)", 'x',
                         {"zhu_mix_eta", "sinc_pow_p", "zhu_mix_xi"});
    c.params = {{"p", 4.0 / 5.0, "0 <= p <= 4/5"},
                {"eta", 1.0 / 3.0, "eta >= 1/3 (sharp at 1/3)"},
                {"xi", -std::expm1(4.0 / 5.0 * std::log(two_over_pi)),
                 "xi <= 1 - (2/pi)^p (sharp there)"}};
    c.sharp_boundaries = {
        {"eta", "1/3", [](const ParamMap&) { return 1.0 / 3.0; },
         FailSide::below, Orient::primary},
        {"xi", "1 - (2/pi)^p",
         [two_over_pi](const ParamMap& pm) {
           return -std::expm1(pm.at("p") * std::log(two_over_pi));
         },
         FailSide::above, Orient::primary}};
    c.instances = {{{"p", 4.0 / 5.0}},
                   {{"p", 0.5},
                    {"xi", -std::expm1(0.5 * std::log(two_over_pi))}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") >= 0.0 && pm.at("p") <= 4.0 / 5.0,
          "C-ZHU-ii: need 0 <= p <= 4/5");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-ZHU-iii", "Zhu (2009)", 'x',
                         {"sinc_pow_p", "zhu_mix_eta"});
    c.params = {{"p", -1.0, "p < 0"},
                {"eta", 1.0 / 3.0, "eta >= 1/3 (sharp at 1/3)"}};
    c.sharp_boundaries = {{"eta", "1/3",
                           [](const ParamMap&) { return 1.0 / 3.0; },
                           FailSide::below, Orient::primary}};
    c.instances = {{{"p", -1.0}}, {{"p", -2.0}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") < 0.0, "C-ZHU-iii: need p < 0");
    };
    cat.push_back(std::move(c));
  }

  // ----- two-sided bounds by M and N at fixed (p, q) -----
  {
    Claim c = base_claim("C-MT1-i", "Yang (2013)", 'x',
                         {"bound_N", "sinc", "bound_M"});
    c.params = {{"p", 1.0, "p <= 3q - 8/5, (p, q) in E"}, {"q", 1.0, "q >= 1"}};
    c.instances = {{{"p", 7.0 / 5.0}, {"q", 1.0}}, {{"p", 2.0}, {"q", 2.0}}};
    c.validate = [line_of](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q >= 1.0, "C-MT1-i: need q >= 1");
      req(p <= line_of(q), "C-MT1-i: need p <= 3q - 8/5");
      req(in_region_E(p, q), "C-MT1-i: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT1-ii", "Yang (2013)", 'x',
                         {"bound_M", "sinc", "bound_N"});
    c.params = {{"p", knee, "p >= pi^2/4 - 1, (p, q) in E"},
                {"q", 1.0, "34/35 < q <= 1"}};
    c.instances = {{{"p", knee}, {"q", 1.0}}, {{"p", 1.6}, {"q", 0.99}}};
    c.validate = [knee, qstar](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q > qstar && q <= 1.0, "C-MT1-ii: need 34/35 < q <= 1");
      req(p >= knee, "C-MT1-ii: need p >= pi^2/4 - 1");
      req(in_region_E(p, q), "C-MT1-ii: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT1-iii", "Yang (2013)", 'x',
                         {"bound_M", "sinc", "bound_N"});
    c.params = {{"p", 46.0 / 35.0, "p >= 3q - 8/5, (p, q) in E"},
                {"q", qstar, "0 < q <= 34/35"}};
    c.instances = {{{"p", 46.0 / 35.0}, {"q", qstar}},
                   {{"p", 1.5}, {"q", 0.6}}};
    c.validate = [line_of, qstar](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q > 0.0 && q <= qstar, "C-MT1-iii: need 0 < q <= 34/35");
      req(p >= line_of(q), "C-MT1-iii: need p >= 3q - 8/5");
      req(in_region_E(p, q), "C-MT1-iii: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT1-iv", "Yang (2013)", 'x', {"bound_M", "sinc"});
    c.params = {{"p", -1.0, "3q - 8/5 <= p <= 0"}, {"q", 0.0, "q <= 0"}};
    c.instances = {{{"p", -1.0}, {"q", 0.0}}, {{"p", -0.5}, {"q", -1.0}}};
    c.validate = [line_of](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q <= 0.0, "C-MT1-iv: need q <= 0");
      req(p >= line_of(q), "C-MT1-iv: need p >= 3q - 8/5");
      req(in_region_E(p, q), "C-MT1-iv: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }

  // ----- two-sided generalized-logarithmic gap bounds -----
  {
    Claim c = base_claim("C-MT2a-i", "Yang (2013)", 'x',
                         {"cos_gap_q2", "sinc_gap", "cos_gap_q1"});
    const double q2def = knee / 3.0 + 8.0 / 15.0;
    c.params = {{"p", knee, "p >= pi^2/4 - 1"},
                {"q1", 1.0, "q1 <= 1"},
                {"q2", q2def, "q2 >= p/3 + 8/15"}};
    c.instances = {{{"p", knee}, {"q1", 1.0}, {"q2", q2def}},
                   {{"p", 2.2}, {"q1", 0.8}, {"q2", 1.5}}};
    c.validate = [knee](const ParamMap& pm) {
      const double p = pm.at("p");
      req(p >= knee, "C-MT2a-i: need p >= pi^2/4 - 1");
      req(pm.at("q1") <= 1.0, "C-MT2a-i: need q1 <= 1");
      req(pm.at("q2") >= p / 3.0 + 8.0 / 15.0,
          "C-MT2a-i: need q2 >= p/3 + 8/15");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT2a-ii", "Yang (2013)", 'x',
                         {"cos_gap_q2", "sinc_gap", "cos_gap_q1"});
    c.params = {{"p", 7.0 / 5.0, "7/5 <= p < pi^2/4 - 1"},
                {"q1", qstar, "q1 <= 34/35"},
                {"q2", 1.0, "q2 >= p/3 + 8/15"}};
    c.instances = {{{"p", 1.4}, {"q1", qstar}, {"q2", 1.0}},
                   {{"p", 1.45}, {"q1", 0.5}, {"q2", 1.1}}};
    c.validate = [knee, qstar](const ParamMap& pm) {
      const double p = pm.at("p");
      req(p >= 7.0 / 5.0 && p < knee, "C-MT2a-ii: need 7/5 <= p < pi^2/4 - 1");
      req(pm.at("q1") <= qstar, "C-MT2a-ii: need q1 <= 34/35");
      req(pm.at("q2") >= p / 3.0 + 8.0 / 15.0,
          "C-MT2a-ii: need q2 >= p/3 + 8/15");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT2a-iii", "Yang (2013)", 'x',
                         {"cos_gap_q2", "sinc_gap", "cos_gap_q1"});
    c.params = {{"p", 46.0 / 35.0, "46/35 <= p < 7/5"},
                {"q1", qstar, "q1 <= 34/35"},
                {"q2", 1.0, "q2 >= 1"}};
    c.instances = {{{"p", 46.0 / 35.0}, {"q1", qstar}, {"q2", 1.0}},
                   {{"p", 1.38}, {"q1", 0.6}, {"q2", 1.2}}};
    c.validate = [qstar](const ParamMap& pm) {
      const double p = pm.at("p");
      req(p >= 46.0 / 35.0 && p < 7.0 / 5.0,
          "C-MT2a-iii: need 46/35 <= p < 7/5");
      req(pm.at("q1") <= qstar, "C-MT2a-iii: need q1 <= 34/35");
      req(pm.at("q2") >= 1.0, "C-MT2a-iii: need q2 >= 1");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT2a-iv", "Yang (2013)", 'x',
                         {"cos_gap_q2", "sinc_gap", "cos_gap_q1"});
    c.params = {{"p", 1.0, "p < 46/35"},
                {"q1", 13.0 / 15.0, "q1 <= p/3 + 8/15"},
                {"q2", 1.0, "q2 >= 1"}};
    c.instances = {{{"p", 1.0}, {"q1", 13.0 / 15.0}, {"q2", 1.0}},
                   {{"p", -1.0}, {"q1", 0.2}, {"q2", 1.3}}};
    c.validate = [](const ParamMap& pm) {
      const double p = pm.at("p");
      req(p < 46.0 / 35.0, "C-MT2a-iv: need p < 46/35");
      req(pm.at("q1") <= p / 3.0 + 8.0 / 15.0,
          "C-MT2a-iv: need q1 <= p/3 + 8/15");
      req(pm.at("q2") >= 1.0, "C-MT2a-iv: need q2 >= 1");
    };
    cat.push_back(std::move(c));
  }

  // ----- sharp q-thresholds at fixed p -----
  {
    Claim c = base_claim("C-MT2c-i", "Yang (2013)", 'x', {"sinc", "bound_M"});
    c.params = {{"p", 2.0, "p >= 7/5"},
                {"q", 2.0 / 3.0 + 8.0 / 15.0, "sharp: q >= p/3 + 8/15"}};
    c.sharp_boundaries = {
        {"q", "p/3 + 8/15",
         [](const ParamMap& pm) { return pm.at("p") / 3.0 + 8.0 / 15.0; },
         FailSide::below, Orient::primary}};
    c.instances = {{{"p", 2.0}, {"q", 2.0 / 3.0 + 8.0 / 15.0}},
                   {{"p", 7.0 / 5.0}, {"q", 1.0}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") >= 7.0 / 5.0, "C-MT2c-i: need p >= 7/5");
      req(in_region_E(pm.at("p"), pm.at("q")),
          "C-MT2c-i: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT2c-ii", "Yang (2013)", 'x', {"bound_M", "sinc"});
    c.params = {{"p", 2.0, "p >= p0 (so the threshold exceeds 1)"},
                {"q", q_of_p(2.0), "sharp: q <= q_of_p(p)"}};
    c.sharp_boundaries = {
        {"q", "q_of_p(p)",
         [](const ParamMap& pm) { return q_of_p(pm.at("p")); },
         FailSide::above, Orient::primary}};
    c.instances = {{{"p", 2.0}, {"q", q_of_p(2.0)}},
                   {{"p", 1.5}, {"q", q_of_p(1.5)}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") >= p0(), "C-MT2c-ii: need p >= p0");
      req(in_region_E(pm.at("p"), pm.at("q")),
          "C-MT2c-ii: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT2c-iii", "Yang (2013)", 'x', {"bound_M", "sinc"});
    c.params = {{"p", 1.0, "p <= 46/35"},
                {"q", 13.0 / 15.0, "sharp: q <= p/3 + 8/15"}};
    c.sharp_boundaries = {
        {"q", "p/3 + 8/15",
         [](const ParamMap& pm) { return pm.at("p") / 3.0 + 8.0 / 15.0; },
         FailSide::above, Orient::primary}};
    c.instances = {{{"p", 1.0}, {"q", 13.0 / 15.0}},
                   {{"p", 0.0}, {"q", 8.0 / 15.0}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") <= 46.0 / 35.0, "C-MT2c-iii: need p <= 46/35");
      req(in_region_E(pm.at("p"), pm.at("q")),
          "C-MT2c-iii: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT2c-iv", "Yang (2013)", 'x', {"sinc", "bound_M"});
    c.params = {{"p", 1.0, "p <= p0star"},
                {"q", q_of_p(1.0), "sharp: q >= q_of_p(p)"}};
    c.sharp_boundaries = {
        {"q", "q_of_p(p)",
         [](const ParamMap& pm) { return q_of_p(pm.at("p")); },
         FailSide::below, Orient::primary}};
    c.instances = {{{"p", 1.0}, {"q", q_of_p(1.0)}},
                   {{"p", 0.0}, {"q", q_of_p(0.0)}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("p") <= p0star(), "C-MT2c-iv: need p <= p0star");
      req(in_region_E(pm.at("p"), pm.at("q")),
          "C-MT2c-iv: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }

  // ----- sharp p-windows at fixed q -----
  {
    Claim c = base_claim("C-MT3-i", "Yang (2013)", 'x',
                         {"bound_M_p1", "sinc", "bound_M_p2"});
    c.params = {{"q", 1.0, "q >= 1"},
                {"p1", p0(), "sharp: p1 >= p_of_q(q)"},
                {"p2", 7.0 / 5.0, "sharp: p2 <= 3q - 8/5"}};
    c.sharp_boundaries = {
        {"p1", "p_of_q(q)",
         [](const ParamMap& pm) { return p_of_q(pm.at("q")); },
         FailSide::below, Orient::primary},
        {"p2", "3q - 8/5",
         [line_of](const ParamMap& pm) { return line_of(pm.at("q")); },
         FailSide::above, Orient::primary}};
    c.instances = {{{"q", 1.0}, {"p1", p0()}, {"p2", 7.0 / 5.0}},
                   {{"q", 1.5}, {"p1", p_of_q(1.5)}, {"p2", 2.9}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("q") >= 1.0, "C-MT3-i: need q >= 1");
      req(in_region_E(pm.at("p1"), pm.at("q")) &&
              in_region_E(pm.at("p2"), pm.at("q")),
          "C-MT3-i: (p1, q) and (p2, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT3-ii", "Yang (2013)", 'x',
                         {"bound_M_p1", "sinc", "bound_M_p2"});
    c.params = {{"q", qstar, "0 < q <= 34/35"},
                {"p1", 46.0 / 35.0, "sharp: p1 >= 3q - 8/5"},
                {"p2", p0star(), "sharp: p2 <= p_of_q(q)"}};
    c.sharp_boundaries = {
        {"p1", "3q - 8/5",
         [line_of](const ParamMap& pm) { return line_of(pm.at("q")); },
         FailSide::below, Orient::primary},
        {"p2", "p_of_q(q)",
         [](const ParamMap& pm) { return p_of_q(pm.at("q")); },
         FailSide::above, Orient::primary}};
    c.instances = {{{"q", qstar}, {"p1", 46.0 / 35.0}, {"p2", p0star()}},
                   {{"q", 0.5}, {"p1", -0.1}, {"p2", p_of_q(0.5)}}};
    c.validate = [qstar](const ParamMap& pm) {
      req(pm.at("q") > 0.0 && pm.at("q") <= qstar,
          "C-MT3-ii: need 0 < q <= 34/35");
      req(in_region_E(pm.at("p1"), pm.at("q")) &&
              in_region_E(pm.at("p2"), pm.at("q")),
          "C-MT3-ii: (p1, q) and (p2, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT3-iii", "Yang (2013)", 'x',
                         {"bound_M_p1", "sinc"});
    c.params = {{"q", 0.0, "q <= 0"},
                {"p1", -8.0 / 5.0, "sharp: p1 >= 3q - 8/5"}};
    c.sharp_boundaries = {
        {"p1", "3q - 8/5",
         [line_of](const ParamMap& pm) { return line_of(pm.at("q")); },
         FailSide::below, Orient::primary}};
    c.instances = {{{"q", 0.0}, {"p1", -8.0 / 5.0}},
                   {{"q", -0.5}, {"p1", -2.0}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("q") <= 0.0, "C-MT3-iii: need q <= 0");
      req(in_region_E(pm.at("p1"), pm.at("q")),
          "C-MT3-iii: (p1, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }

  // ----- one-parameter power-mean family in k -----
  const auto mt4_two_sided = [&](const std::string& id, double k_def,
                                 double q1_def, double q2_def,
                                 std::function<void(const ParamMap&)> validate,
                                 std::vector<ParamMap> instances) {
    Claim c = base_claim(id, "Yang (2013)", 'x',
                         {"M_kq_q1", "sinc", "M_kq_q2"});
    c.params = {{"k", k_def, "clause-specific k range"},
                {"q1", q1_def, "lower-side exponent"},
                {"q2", q2_def, "upper-side exponent"}};
    c.instances = std::move(instances);
    c.validate = std::move(validate);
    cat.push_back(std::move(c));
  };
  {
    Claim c = base_claim("C-MT4-i", "Yang (2013)", 'x', {"bound_M_kq", "sinc"});
    c.params = {{"k", 4.0, "k > 3"}, {"q", -0.4, "8/(5(3-k)) <= q <= 0"}};
    c.instances = {{{"k", 4.0}, {"q", -0.4}}, {{"k", 5.0}, {"q", -0.2}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k"), q = pm.at("q");
      req(k > 3.0, "C-MT4-i: need k > 3");
      req(q >= 8.0 / (5.0 * (3.0 - k)) && q <= 0.0,
          "C-MT4-i: need 8/(5(3-k)) <= q <= 0");
    };
    cat.push_back(std::move(c));
  }
  mt4_two_sided(
      "C-MT4-ii", 2.0, 1.0, 1.6,
      [k_split](const ParamMap& pm) {
        const double k = pm.at("k");
        req(k >= k_split && k < 3.0,
            "C-MT4-ii: need (35 pi^2 - 140)/136 <= k < 3");
        req(pm.at("q1") <= 1.0, "C-MT4-ii: need q1 <= 1");
        req(pm.at("q2") >= 8.0 / (5.0 * (3.0 - k)),
            "C-MT4-ii: need q2 >= 8/(5(3-k))");
      },
      {{{"k", 2.0}, {"q1", 1.0}, {"q2", 1.6}},
       {{"k", 2.5}, {"q1", 0.8}, {"q2", 3.3}}});
  mt4_two_sided(
      "C-MT4-iii", 1.48, qstar, 1.1,
      [knee, k_split, qstar](const ParamMap& pm) {
        const double k = pm.at("k"), q1 = pm.at("q1");
        req(k >= knee && k < k_split,
            "C-MT4-iii: need pi^2/4 - 1 <= k < (35 pi^2 - 140)/136");
        req(q1 <= qstar || (q1 >= knee / k && q1 <= 1.0),
            "C-MT4-iii: need q1 <= 34/35 or (pi^2/4-1)/k <= q1 <= 1");
        req(pm.at("q2") >= 8.0 / (5.0 * (3.0 - k)),
            "C-MT4-iii: need q2 >= 8/(5(3-k))");
      },
      {{{"k", 1.48}, {"q1", qstar}, {"q2", 1.1}},
       {{"k", 1.5}, {"q1", 0.99}, {"q2", 1.07}}});
  mt4_two_sided(
      "C-MT4-iv", 1.4, qstar, 1.0,
      [knee, qstar](const ParamMap& pm) {
        const double k = pm.at("k");
        req(k >= 7.0 / 5.0 && k < knee,
            "C-MT4-iv: need 7/5 <= k < pi^2/4 - 1");
        req(pm.at("q1") <= qstar, "C-MT4-iv: need q1 <= 34/35");
        req(pm.at("q2") >= 8.0 / (5.0 * (3.0 - k)),
            "C-MT4-iv: need q2 >= 8/(5(3-k))");
      },
      {{{"k", 1.4}, {"q1", qstar}, {"q2", 1.0}},
       {{"k", 1.45}, {"q1", 0.5}, {"q2", 1.2}}});
  mt4_two_sided(
      "C-MT4-v", 23.0 / 17.0, qstar, 1.0,
      [qstar](const ParamMap& pm) {
        const double k = pm.at("k");
        req(k >= 23.0 / 17.0 && k < 7.0 / 5.0,
            "C-MT4-v: need 23/17 <= k < 7/5");
        req(pm.at("q1") <= qstar, "C-MT4-v: need q1 <= 34/35");
        req(pm.at("q2") >= 1.0, "C-MT4-v: need q2 >= 1");
      },
      {{{"k", 23.0 / 17.0}, {"q1", qstar}, {"q2", 1.0}},
       {{"k", 1.38}, {"q1", 0.7}, {"q2", 1.5}}});
  mt4_two_sided(
      "C-MT4-vi", 1.0, 4.0 / 5.0, 1.0,
      [](const ParamMap& pm) {
        const double k = pm.at("k");
        req(k >= 0.0 && k < 23.0 / 17.0, "C-MT4-vi: need 0 <= k < 23/17");
        req(pm.at("q1") <= 8.0 / (5.0 * (3.0 - k)),
            "C-MT4-vi: need q1 <= 8/(5(3-k))");
        req(pm.at("q2") >= 1.0, "C-MT4-vi: need q2 >= 1");
      },
      {{{"k", 1.0}, {"q1", 4.0 / 5.0}, {"q2", 1.0}},
       {{"k", 0.0}, {"q1", 8.0 / 15.0}, {"q2", 1.3}}});
  mt4_two_sided(
      "C-MT4-vii", -1.0, 0.4, 1.0,
      [](const ParamMap& pm) {
        const double k = pm.at("k");
        req(k < 0.0, "C-MT4-vii: need k < 0");
        req(pm.at("q1") >= 0.0 && pm.at("q1") <= 8.0 / (5.0 * (3.0 - k)),
            "C-MT4-vii: need 0 <= q1 <= 8/(5(3-k))");
        req(pm.at("q2") >= 1.0, "C-MT4-vii: need q2 >= 1");
      },
      {{{"k", -1.0}, {"q1", 0.4}, {"q2", 1.0}},
       {{"k", -2.0}, {"q1", 0.3}, {"q2", 2.0}}});

  // ----- sharp thresholds for the k-family -----
  {
    Claim c = base_claim("C-MT4sharp-i", "Yang (2013)", 'x',
                         {"sinc", "bound_M_kq"});
    c.params = {{"k", 2.0, "7/5 <= k < 3"},
                {"q", 8.0 / 5.0, "sharp: q >= 8/(5(3-k))"}};
    c.sharp_boundaries = {
        {"q", "8/(5(3-k))",
         [](const ParamMap& pm) { return 8.0 / (5.0 * (3.0 - pm.at("k"))); },
         FailSide::below, Orient::primary}};
    c.instances = {{{"k", 2.0}, {"q", 8.0 / 5.0}},
                   {{"k", 1.5}, {"q", 16.0 / 15.0}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k");
      req(k >= 7.0 / 5.0 && k < 3.0, "C-MT4sharp-i: need 7/5 <= k < 3");
      req(in_region_Ekq(k, pm.at("q")),
          "C-MT4sharp-i: (k, q) must lie in the power-mean region");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT4sharp-ii", "Yang (2013)", 'x',
                         {"bound_M_kq", "sinc"});
    c.params = {{"k", 2.0, "p0 < k < 3"},
                {"q", q_of_k(2.0), "sharp: q <= q_of_k(k)"}};
    c.sharp_boundaries = {
        {"q", "q_of_k(k)",
         [](const ParamMap& pm) { return q_of_k(pm.at("k")); },
         FailSide::above, Orient::primary}};
    c.instances = {{{"k", 2.0}, {"q", q_of_k(2.0)}},
                   {{"k", 1.5}, {"q", q_of_k(1.5)}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k");
      req(k > p0() && k < 3.0, "C-MT4sharp-ii: need p0 < k < 3");
      req(in_region_Ekq(k, pm.at("q")),
          "C-MT4sharp-ii: (k, q) must lie in the power-mean region");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT4sharp-iii", "Yang (2013)", 'x',
                         {"bound_M_kq", "sinc"});
    c.params = {{"k", 1.0, "0 < k <= 23/17"},
                {"q", 4.0 / 5.0, "sharp: q <= 8/(5(3-k))"}};
    c.sharp_boundaries = {
        {"q", "8/(5(3-k))",
         [](const ParamMap& pm) { return 8.0 / (5.0 * (3.0 - pm.at("k"))); },
         FailSide::above, Orient::primary}};
    c.instances = {{{"k", 1.0}, {"q", 4.0 / 5.0}},
                   {{"k", 23.0 / 17.0}, {"q", qstar}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k");
      req(k > 0.0 && k <= 23.0 / 17.0, "C-MT4sharp-iii: need 0 < k <= 23/17");
      req(in_region_Ekq(k, pm.at("q")),
          "C-MT4sharp-iii: (k, q) must lie in the power-mean region");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT4sharp-iv", "Yang (2013)", 'x',
                         {"sinc", "bound_M_kq"});
    c.params = {{"k", 1.0, "0 < k < p0star"},
                {"q", q_of_k(1.0), "sharp: q >= q_of_k(k)"}};
    c.sharp_boundaries = {
        {"q", "q_of_k(k)",
         [](const ParamMap& pm) { return q_of_k(pm.at("k")); },
         FailSide::below, Orient::primary}};
    c.instances = {{{"k", 1.0}, {"q", q_of_k(1.0)}},
                   {{"k", 0.5}, {"q", q_of_k(0.5)}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k");
      req(k > 0.0 && k < p0star(), "C-MT4sharp-iv: need 0 < k < p0star");
      req(in_region_Ekq(k, pm.at("q")),
          "C-MT4sharp-iv: (k, q) must lie in the power-mean region");
    };
    cat.push_back(std::move(c));
  }

  // ----- the critical line p = 3q - 8/5 -----
  {
    Claim c = base_claim("C-MT5a-i", "Yang (2013)", 'x',
                         {"bound_N_line", "sinc", "bound_M_line"});
    c.params = {{"q", 1.0, "q >= 1"}};
    c.instances = {{{"q", 1.0}}, {{"q", 2.0}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("q") >= 1.0, "C-MT5a-i: need q >= 1");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT5a-ii", "Yang (2013)", 'x',
                         {"bound_M_line", "sinc", "bound_N_line"});
    c.params = {{"q", qstar, "0 < q <= 34/35"}};
    c.instances = {{{"q", qstar}}, {{"q", 0.5}}};
    c.validate = [qstar](const ParamMap& pm) {
      req(pm.at("q") > 0.0 && pm.at("q") <= qstar,
          "C-MT5a-ii: need 0 < q <= 34/35");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT5a-iii", "Yang (2013)", 'x',
                         {"bound_M_line", "sinc"});
    c.params = {{"q", 0.0, "q <= 0"}};
    c.instances = {{{"q", 0.0}}, {{"q", -1.0}}};
    c.validate = [](const ParamMap& pm) {
      req(pm.at("q") <= 0.0, "C-MT5a-iii: need q <= 0");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MT5b", "Yang (2013)", 'x',
                         {"bound_M_line", "sinc"});
    c.params = {{"q", qstar, "holds iff q <= 34/35; reversed iff q >= q0"}};
    c.sharp_boundaries = {
        {"q", "34/35", [qstar](const ParamMap&) { return qstar; },
         FailSide::above, Orient::primary},
        {"q", "q0", [](const ParamMap&) { return q0(); },
         FailSide::below, Orient::reversed}};
    c.instances = {{{"q", qstar}}, {{"q", 0.0}}};
    cat.push_back(std::move(c));
  }

  // ----- inverse-trigonometric corollaries -----
  {
    Claim c = base_claim("C-SF-basic", "Yang (2013)", 't',
                         {"sf_basic_lower", "arcsin_t", "sf_basic_upper"});
    c.params = {{"p", 1.0, "p <= 3q - 8/5, (p, q) in E"}, {"q", 1.0, "q >= 1"}};
    c.instances = {{{"p", 1.0}, {"q", 1.0}}, {{"p", 7.0 / 5.0}, {"q", 1.0}}};
    c.validate = [line_of](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q >= 1.0, "C-SF-basic: need q >= 1");
      req(p <= line_of(q), "C-SF-basic: need p <= 3q - 8/5");
      req(in_region_E(p, q), "C-SF-basic: (p, q) must lie in E");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-SF-refined", "Yang (2013)", 't',
                         {"sf_half_3", "arcsin_t", "sf_half_c"});
    c.params = {{"p", 1.0, "p <= 3q - 8/5 and p < 3q/(1 - 2^(-q/2))"},
                {"q", 1.0, "q >= 1"}};
    c.instances = {{{"p", 1.0}, {"q", 1.0}}, {{"p", 0.0}, {"q", 1.0}}};
    c.validate = [line_of](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q >= 1.0, "C-SF-refined: need q >= 1");
      req(p <= line_of(q), "C-SF-refined: need p <= 3q - 8/5");
      req(p < 3.0 * q / -std::expm1(-0.5 * q * std::log(2.0)),
          "C-SF-refined: admissibility p < 3q/(1 - 2^(-q/2))");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-CARLSON-classic", "Carlson (1970)", 't',
                         {"carlson_lower", "arccos_t", "carlson_upper"});
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-CARLSON-refined", "Yang (2013)", 't',
                         {"ct_half_3", "arccos_t", "ct_half_c"});
    c.params = {{"p", 1.0, "p <= 3q - 8/5 and p < 3q/(1 - 2^(-q/2))"},
                {"q", 1.0, "q >= 1"}};
    c.instances = {{{"p", 1.0}, {"q", 1.0}}, {{"p", 0.0}, {"q", 1.0}}};
    c.validate = [line_of](const ParamMap& pm) {
      const double p = pm.at("p"), q = pm.at("q");
      req(q >= 1.0, "C-CARLSON-refined: need q >= 1");
      req(p <= line_of(q), "C-CARLSON-refined: need p <= 3q - 8/5");
      req(p < 3.0 * q / -std::expm1(-0.5 * q * std::log(2.0)),
          "C-CARLSON-refined: admissibility p < 3q/(1 - 2^(-q/2))");
    };
    cat.push_back(std::move(c));
  }

  // ----- bivariate-mean corollaries (normalized to b = 1, t = a/b) -----
  {
    Claim c = base_claim("C-MEAN-SB-sharp", "Yang (2013)", 't',
                         {"mean_SB", "sb_bound_kq_t"});
    c.params = {{"k", 2.0, "0 < k < 3"},
                {"q", 8.0 / 5.0, "sharp: q >= 8/(5(3-k)); reversed q <= q_of_k(k)"}};
    c.sharp_boundaries = {
        {"q", "8/(5(3-k))",
         [](const ParamMap& pm) { return 8.0 / (5.0 * (3.0 - pm.at("k"))); },
         FailSide::below, Orient::primary},
        {"q", "q_of_k(k)",
         [](const ParamMap& pm) { return q_of_k(pm.at("k")); },
         FailSide::above, Orient::reversed}};
    c.instances = {{{"k", 2.0}, {"q", 8.0 / 5.0}},
                   {{"k", 1.5}, {"q", 16.0 / 15.0}}};
    c.validate = [](const ParamMap& pm) {
      const double k = pm.at("k");
      req(k > 0.0 && k < 3.0, "C-MEAN-SB-sharp: need 0 < k < 3");
      req(in_region_Ekq(k, pm.at("q")),
          "C-MEAN-SB-sharp: (k, q) must lie in the power-mean region");
    };
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MEAN-SB-line", "Yang (2013)", 't',
                         {"sb_bound_line_t", "mean_SB"});
    c.params = {{"q", qstar, "holds iff q <= 34/35; reversed iff q >= q0"}};
    c.sharp_boundaries = {
        {"q", "34/35", [qstar](const ParamMap&) { return qstar; },
         FailSide::above, Orient::primary},
        {"q", "q0", [](const ParamMap&) { return q0(); },
         FailSide::below, Orient::reversed}};
    c.instances = {{{"q", qstar}}, {{"q", 0.5}}};
    cat.push_back(std::move(c));
  }
  {
    Claim c = base_claim("C-MEAN-P", "Yang (2013)", 't',
                         {"p_bound_line_t", "mean_P"});
    c.params = {{"q", qstar, "holds iff q <= 34/35; reversed iff q >= q0"}};
    c.sharp_boundaries = {
        {"q", "34/35", [qstar](const ParamMap&) { return qstar; },
         FailSide::above, Orient::primary},
        {"q", "q0", [](const ParamMap&) { return q0(); },
         FailSide::below, Orient::reversed}};
    c.instances = {{{"q", qstar}}, {{"q", 0.2}}};
    cat.push_back(std::move(c));
  }

  return cat;
}

}  // namespace

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> cat = build_catalog();
  return cat;
}

bool has_claim(const std::string& id) {
  for (const Claim& c : catalog())
    if (c.id == id) return true;
  return false;
}

const Claim& lookup(const std::string& id) {
  for (const Claim& c : catalog())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown claim id: " + id);
}

ParamMap resolve_params(const Claim& claim, const ParamMap& overrides) {
  ParamMap out;
  for (const ParamSpec& ps : claim.params) out[ps.name] = ps.default_value;
  for (const auto& [name, value] : overrides) {
    if (!out.count(name))
      throw std::invalid_argument("claim " + claim.id +
                                  " has no parameter named " + name);
    out[name] = value;
  }
  return out;
}

double eval_expr(const std::string& tag, double x, const ParamMap& params) {
  constexpr const char* kPrefix = "M_line:";
  if (tag.rfind(kPrefix, 0) == 0) {
    char* end = nullptr;
    const double q = std::strtod(tag.c_str() + 7, &end);
    if (end == tag.c_str() + 7 || *end != '\0')
      throw std::invalid_argument("bad parameterized tag: " + tag);
    return bound_M_line(std::cos(x), q);
  }
  const auto& reg = expr_registry();
  const auto it = reg.find(tag);
  if (it == reg.end())
    throw std::invalid_argument("unknown expression tag: " + tag);
  return it->second(x, params);
}

}  // namespace cusa
