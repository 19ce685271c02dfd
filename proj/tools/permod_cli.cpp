// permod: exact computations with finite-group permutation modules.
//
// Subcommands: verify, search, table, chebotarev, construct, fourier,
// exhaustive.  Output is canonical JSON (default), CSV (table) or text.
// Exit codes: 0 success, 1 a checked mathematical invariant was falsified,
// 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "permod/parse.hpp"
#include "permod/permod.hpp"
#include "permod/uncertainty.hpp"

using json = nlohmann::ordered_json;
using namespace permod;

namespace {

json equality_report_json(const EqualityReport& rep) {
  json j;
  j["n"] = rep.n;
  j["t"] = rep.t;
  j["d"] = rep.d;
  j["holds_B"] = rep.holds_B;
  j["holds_C"] = rep.holds_C;
  j["case"] = equality_case_name(rep.eq_case);
  j["omega_size"] = rep.omega.size();
  if (rep.conclusions) {
    const auto& c = *rep.conclusions;
    j["conclusions"] = {{"a", c.a}, {"b", c.b}, {"c", c.c},
                        {"d", c.d}, {"e", c.e}, {"f", c.f}};
  }
  return j;
}

json criterion_json(const Criterion63Report& c) {
  return json{{"p", c.p},         {"f", render_poly(c.f)},
              {"h", render_poly(c.h)}, {"t_f", c.t_f},
              {"deg_h", c.deg_h}, {"fails", c.fails},
              {"t_plus_d", c.implied_t_plus_d}};
}

std::string field_name(uint64_t q) { return "GF(" + std::to_string(q) + ")"; }

void emit(const json& j, const std::string& format) {
  if (format == "text" && j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << it.value().dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

std::vector<uint32_t> parse_point_list(const std::string& text) {
  std::vector<uint32_t> out;
  for (const auto& tok : split(text, ','))
    out.push_back(uint32_t(std::stoul(tok)));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact support/dimension computations in permutation modules"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "json|csv|text")->capture_default_str();
  int jobs = 0;
  app.add_option("--jobs", jobs, "parallel sweep width (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "inequalities and equality analysis");
  std::string v_group, v_field, v_vector;
  verify->add_option("--group", v_group, "group file")->required();
  verify->add_option("--field", v_field, "p, p^k or Q")->required();
  verify->add_option("--vector", v_vector, "comma-separated coefficients")->required();

  auto* search = app.add_subcommand("search", "counterexample search for one (p, q)");
  uint32_t s_prime = 0;
  std::string s_field, s_mode = "divisors", s_scan = "factors";
  search->add_option("--prime", s_prime, "prime degree p")->required();
  search->add_option("--field", s_field, "GF(q) spec")->required();
  search->add_option("--mode", s_mode, "divisors|multiples");
  search->add_option("--divisor-scan", s_scan, "factors|all");

  auto* table = app.add_subcommand("table", "minimal-field counterexample table");
  std::string t_primes = "7,11,13,17,19", t_scan = "factors", t_mode = "divisors";
  uint64_t t_qmax = 16;
  table->add_option("--primes", t_primes, "comma-separated primes");
  table->add_option("--q-max", t_qmax, "largest field order scanned");
  table->add_option("--mode", t_mode, "divisors|multiples");
  table->add_option("--divisor-scan", t_scan, "factors|all");

  auto* cheb = app.add_subcommand("chebotarev", "minor sweep / mod-q refutation");
  uint32_t c_prime = 0;
  int c_maxminor = -1;
  bool c_serial = false, c_refute = false;
  std::string c_field, c_poly;
  cheb->add_option("--prime", c_prime, "prime p")->required();
  cheb->add_option("--max-minor", c_maxminor, "largest minor size checked");
  cheb->add_flag("--serial", c_serial, "use the serial reference kernel");
  cheb->add_flag("--refute", c_refute, "build a singular minor mod q instead");
  cheb->add_option("--field", c_field, "GF(q) spec (refutation)");
  cheb->add_option("--poly", c_poly, "failing polynomial (refutation)");

  auto* cons = app.add_subcommand("construct", "equality-case constructions");
  cons->require_subcommand(1);
  auto* cblock = cons->add_subcommand("block", "block support-sum vector");
  std::string cb_group, cb_field, cb_block;
  cblock->add_option("--group", cb_group)->required();
  cblock->add_option("--field", cb_field)->required();
  cblock->add_option("--block", cb_block, "comma-separated block points")->required();
  auto* corbit = cons->add_subcommand("orbit", "subgroup orbit sum");
  std::string co_group, co_field;
  uint32_t co_x = 0, co_kfix = 0;
  bool co_pairs = false;
  corbit->add_option("--group", co_group)->required();
  corbit->add_option("--field", co_field)->required();
  corbit->add_option("--x", co_x, "point whose K-orbit is summed")->required();
  corbit->add_option("--k-stabilizer-of", co_kfix,
                     "K = stabilizer of this base point")->required();
  corbit->add_flag("--pairs", co_pairs, "act on unordered pairs");
  auto* caffine = cons->add_subcommand("affine", "affine two-dimensional submodule");
  std::string ca_q, ca_gen;
  caffine->add_option("--q", ca_q, "field spec for F")->required();
  caffine->add_option("--a-gen", ca_gen, "generator of A (default: all units)");
  auto* clemf = cons->add_subcommand("lemma-f", "small t+d vector in a submodule");
  std::string cl_group, cl_field, cl_vector;
  clemf->add_option("--group", cl_group)->required();
  clemf->add_option("--field", cl_field)->required();
  clemf->add_option("--vector", cl_vector, "seed vector generating M")->required();

  auto* fourier = app.add_subcommand("fourier", "character support vs d(v)");
  std::string f_group, f_vector;
  fourier->add_option("--group", f_group, "cyclic group file")->required();
  fourier->add_option("--vector", f_vector, "rational coefficients")->required();

  auto* exh = app.add_subcommand("exhaustive", "characteristic-p sweep (t+d > p)");
  uint32_t e_prime = 0;
  bool e_serial = false;
  exh->add_option("--prime", e_prime, "prime p")->required();
  exh->add_flag("--serial", e_serial, "use the serial reference kernel");

  CLI11_PARSE(app, argc, argv);

  auto scan_of = [](const std::string& s) {
    if (s == "factors") return DivisorScan::IrreducibleFactors;
    if (s == "all") return DivisorScan::AllDivisors;
    throw std::invalid_argument("bad --divisor-scan: " + s);
  };
  auto mode_of = [](const std::string& s) {
    if (s == "divisors") return SearchMode::DivisorsOnly;
    if (s == "multiples") return SearchMode::WithMultiples;
    throw std::invalid_argument("bad --mode: " + s);
  };

  if (*verify) {
    PermGroup g = load_group_file(v_group);
    FieldSpec fs = parse_field_spec(v_field);
    EqualityReport rep;
    if (fs.rational) {
      ModVector<Rational> v{&g, parse_vector_rational(v_vector, g.degree())};
      rep = verify_inequalities(v);
    } else {
      ModVector<FF> v{&g, parse_vector_ff(v_vector, fs.field, g.degree())};
      rep = verify_inequalities(v);
    }
    emit(equality_report_json(rep), format);
    return 0;
  }

  if (*search) {
    FieldSpec fs = parse_field_spec(s_field);
    if (fs.rational) throw std::invalid_argument("search needs a finite field");
    auto hit = search_counterexample(s_prime, fs.field, mode_of(s_mode),
                                     scan_of(s_scan));
    json j;
    j["p"] = s_prime;
    j["q"] = uint64_t(fs.field->order());
    j["mode"] = s_mode;
    j["divisor_scan"] = s_scan;
    j["found"] = hit.has_value();
    if (hit) {
      j["kind"] = hit->kind == TableEntry::Kind::MissingTermDivisor
                      ? "missing-term-divisor"
                      : "multiple";
      j["witness"] = render_poly(*hit->witness);
      j["criterion"] = criterion_json(criterion_6_3(*hit->witness, s_prime));
    }
    emit(j, format);
    return 0;
  }

  if (*table) {
    std::vector<uint32_t> primes;
    for (const auto& tok : split(t_primes, ','))
      primes.push_back(uint32_t(std::stoul(tok)));
    auto rows = minimal_table(primes, t_qmax, mode_of(t_mode), scan_of(t_scan));
    if (format == "csv") {
      std::cout << "p,fields\n";
      for (const auto& row : rows) {
        std::cout << row.p << ",";
        for (size_t i = 0; i < row.fields.size(); ++i)
          std::cout << (i ? " " : "") << field_name(row.fields[i].q);
        std::cout << "\n";
      }
      return 0;
    }
    json j = json::array();
    for (const auto& row : rows) {
      json fields = json::array();
      for (const auto& e : row.fields)
        fields.push_back(
            json{{"q", e.q},
                 {"kind", e.kind == TableEntry::Kind::MissingTermDivisor
                              ? "missing-term-divisor"
                              : "multiple"},
                 {"witness", render_poly(*e.witness)}});
      j.push_back(json{{"p", row.p}, {"fields", std::move(fields)}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*cheb) {
    if (c_refute) {
      if (c_field.empty() || c_poly.empty())
        throw std::invalid_argument("--refute needs --field and --poly");
      FieldSpec fs = parse_field_spec(c_field);
      if (fs.rational) throw std::invalid_argument("refutation needs a finite field");
      auto w = chebotarev_refute_mod_q(c_prime, fs.field,
                                       parse_poly(c_poly, fs.field));
      json j{{"p", w.p},
             {"q", w.q},
             {"ext_degree", w.ext_degree},
             {"rows", w.rows},
             {"cols", w.cols},
             {"det_zero", w.det_zero}};
      emit(j, format);
      return 0;
    }
    std::optional<uint32_t> kmax;
    if (c_maxminor >= 0) kmax = uint32_t(c_maxminor);
    ChebotarevReport rep = c_serial ? chebotarev_verify_serial(c_prime, kmax)
                                    : chebotarev_verify(c_prime, kmax, jobs);
    json fails = json::array();
    for (const auto& f : rep.failures)
      fails.push_back(json{{"size", f.size}, {"rows", f.rows}, {"cols", f.cols}});
    json j{{"p", rep.p},
           {"minors_checked", rep.minors_checked},
           {"max_size", rep.max_size},
           {"failures", std::move(fails)}};
    emit(j, format);
    return 0;
  }

  if (*cons) {
    if (*cblock) {
      PermGroup g = load_group_file(cb_group);
      FieldSpec fs = parse_field_spec(cb_field);
      auto delta = parse_point_list(cb_block);
      json j;
      if (fs.rational) {
        auto lambda = [](const Permutation&) { return Rational(1); };
        auto v = block_vector<Rational>(g, delta, lambda, Rational());
        j = equality_report_json(verify_inequalities(v));
      } else {
        auto one = fs.field->one();
        auto lambda = [one](const Permutation&) { return one; };
        auto v = block_vector<FF>(g, delta, lambda, fs.field->zero());
        j = equality_report_json(verify_inequalities(v));
      }
      emit(j, format);
      return 0;
    }
    if (*corbit) {
      PermGroup base = load_group_file(co_group);
      FieldSpec fs = parse_field_spec(co_field);
      if (fs.rational) throw std::invalid_argument("orbit construction needs GF(q)");
      PermGroup acting = co_pairs ? pairs_action(base) : base;
      std::vector<Permutation> k_elems;
      for (const auto& e : base.elements()) {
        if (e.apply(co_kfix) != co_kfix) continue;
        if (co_pairs) {
          std::vector<uint32_t> img(acting.degree());
          for (uint32_t idx = 0; idx < acting.degree(); ++idx) {
            auto [a, b] = pair_points(base.degree(), idx);
            img[idx] = pair_index(base.degree(), e.apply(a), e.apply(b));
          }
          k_elems.push_back(Permutation::from_images(std::move(img)));
        } else {
          k_elems.push_back(e);
        }
      }
      auto [v, rep] = lemma_4_1_vector<FF>(acting, co_x, k_elems, fs.field->zero());
      std::string vec;
      for (size_t i = 0; i < v.coeffs.size(); ++i)
        vec += (i ? "," : "") + v.coeffs[i].str();
      json j{{"n", acting.degree()}, {"t", rep.t},
             {"d", rep.d},           {"index_gk", rep.index_gk},
             {"a", rep.a},           {"b", rep.b},
             {"c", rep.c},           {"d_char2", rep.d_char2},
             {"vector", vec}};
      emit(j, format);
      return 0;
    }
    if (*caffine) {
      FieldSpec fs = parse_field_spec(ca_q);
      if (fs.rational) throw std::invalid_argument("affine construction needs GF(q)");
      const uint64_t q = uint64_t(fs.field->order());
      FF gen = ca_gen.empty()
                   ? (q == 2 ? fs.field->one()
                             : find_element_of_order(*fs.field, q - 1))
                   : parse_element(ca_gen, fs.field);
      auto out = affine_construction(fs.field, gen);
      json j{{"q", q},
             {"group_order", out.group->order()},
             {"primitive", out.primitive},
             {"t", out.t},
             {"d", out.d}};
      emit(j, format);
      return 0;
    }
    if (*clemf) {
      PermGroup g = load_group_file(cl_group);
      FieldSpec fs = parse_field_spec(cl_field);
      json j;
      if (fs.rational) {
        ModVector<Rational> seed{&g, parse_vector_rational(cl_vector, g.degree())};
        auto m = generated_submodule(seed);
        auto v = lemma_f_vector(m);
        j = json{{"n", g.degree()},
                 {"dim_M", m.dim()},
                 {"t", v.t()},
                 {"d", dim_generated(v)}};
      } else {
        ModVector<FF> seed{&g, parse_vector_ff(cl_vector, fs.field, g.degree())};
        auto m = generated_submodule(seed);
        auto v = lemma_f_vector(m);
        j = json{{"n", g.degree()},
                 {"dim_M", m.dim()},
                 {"t", v.t()},
                 {"d", dim_generated(v)}};
      }
      j["bound_ok"] = true;  // lemma_f_vector throws otherwise
      emit(j, format);
      return 0;
    }
  }

  if (*fourier) {
    PermGroup g = load_group_file(f_group);
    ModVector<Rational> v{&g, parse_vector_rational(f_vector, g.degree())};
    size_t fs_count = fourier_support(v);
    size_t d = dim_generated(v);
    json j{{"n", g.degree()},
           {"fourier_support", fs_count},
           {"d", d},
           {"equal", fs_count == d}};
    emit(j, format);
    if (fs_count != d)
      throw invariant_violation("fourier support differs from d(v)");
    return 0;
  }

  if (*exh) {
    Exhaustive64Report rep =
        e_serial ? exhaustive_6_4_serial(e_prime) : exhaustive_6_4(e_prime, jobs);
    json j{{"p", rep.p},
           {"vectors_checked", rep.vectors_checked},
           {"violations", rep.violations}};
    emit(j, format);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const invariant_violation& e) {
    std::cerr << "INVARIANT FALSIFIED: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
