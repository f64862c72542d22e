#include "ybe/report.hpp"

#include <fstream>
#include <sstream>

#include "ybe/actions.hpp"
#include "ybe/cancellative.hpp"

namespace ybe {

namespace {

json wrap(const std::string& command, json parameters, json result) {
  return json{{"schema", kReportSchema},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"result", std::move(result)}};
}

json table_to_json(const FiniteSolution& s, bool gamma) {
  json rows = json::array();
  for (int x = 0; x < s.n(); ++x) {
    json row = json::array();
    for (int y = 0; y < s.n(); ++y) row.push_back(gamma ? s.gamma(x, y) : s.sigma(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

json properties_to_json(const PropertyReport& p) {
  json j{{"ybe1", p.ybe1},
         {"ybe2", p.ybe2},
         {"ybe3", p.ybe3},
         {"is_ybe", p.is_ybe},
         {"left_nondegenerate", p.left_nondegenerate},
         {"right_nondegenerate", p.right_nondegenerate},
         {"involutive", p.involutive},
         {"r_bijective", p.r_bijective},
         {"irretractable_sigma", p.irretractable_sigma},
         {"irretractable_gamma", p.irretractable_gamma}};
  if (p.counterexample)
    j["counterexample"] =
        json{{"condition", p.counterexample->condition}, {"indices", p.counterexample->indices}};
  return j;
}

}  // namespace

json solution_to_json(const FiniteSolution& s, const std::string& name, const std::string& notes) {
  json j{{"n", s.n()}, {"sigma", table_to_json(s, false)}, {"gamma", table_to_json(s, true)}};
  if (!name.empty()) j["name"] = name;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

LoadedSolution solution_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("solution file: expected a JSON object");
  for (const char* key : {"n", "sigma", "gamma"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("solution file: missing field '") + key + "'");
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const json::exception&) {
    throw std::invalid_argument("solution file: field 'n' is not an integer");
  }
  auto read_table = [&](const char* key) {
    Table t;
    try {
      t = j.at(key).get<Table>();
    } catch (const json::exception&) {
      throw std::invalid_argument(std::string("solution file: field '") + key +
                                  "' is not an integer matrix");
    }
    return t;
  };
  Table sigma = read_table("sigma");
  Table gamma = read_table("gamma");
  LoadedSolution out{validate(n, sigma, gamma), j.value("name", ""), j.value("notes", "")};
  return out;
}

LoadedSolution load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return solution_from_json(j);
}

json check_report(const LoadedSolution& in) {
  const FiniteSolution& s = in.solution;
  PropertyReport props = properties(s);
  json result;
  result["n"] = s.n();
  result["properties"] = properties_to_json(props);

  json rump{{"applicable", props.right_nondegenerate}};
  if (props.right_nondegenerate) {
    auto [r1, r2, r3] = rump_conditions(s);
    rump["r1"] = r1;
    rump["r2"] = r2;
    rump["r3"] = r3;
    rump["all"] = r1 && r2 && r3;
  }
  result["rump"] = std::move(rump);

  json h{{"applicable", props.left_nondegenerate}};
  if (props.left_nondegenerate) {
    Transformation hm = h_map(s);
    h["image"] = hm.image;
    h["bijective"] = is_permutation(hm);
  }
  result["h_map"] = std::move(h);

  json fixed = json::array();
  std::vector<int> per_x(s.n(), 0);
  for (auto [x, y] : fixed_pairs(s)) {
    fixed.push_back(json::array({x, y}));
    ++per_x[x];
  }
  result["fixed_pairs"] = std::move(fixed);
  bool unique = true;
  for (int c : per_x) unique = unique && c == 1;
  result["fixed_pair_unique_per_x"] = unique;

  json params{{"input", in.name.empty() ? json() : json(in.name)}};
  return wrap("check", std::move(params), std::move(result));
}

json monoid_report(const LoadedSolution& in, PresentationKind kind, int max_degree,
                   bool list_classes) {
  const FiniteSolution& s = in.solution;
  GradedQuotient q(kind, s, max_degree);
  RelationSet rel = relations(kind, s);

  json rel_json = json::array();
  for (const auto& [u, v] : rel.pairs)
    rel_json.push_back(json{{"lhs", json::array({u[0], u[1]})}, {"rhs", json::array({v[0], v[1]})}});

  json result{{"kind", to_string(kind)},
              {"relation_count", rel.pairs.size()},
              {"relations", std::move(rel_json)},
              {"growth", q.growth()}};
  if (list_classes) {
    json degrees = json::array();
    for (int d = 0; d <= max_degree; ++d) {
      json classes = json::array();
      for (int c = 0; c < q.class_count(d); ++c) {
        json members = json::array();
        for (const Word& w : q.class_members(d, c)) members.push_back(w);
        classes.push_back(json{{"representative", q.rep(d, c)}, {"members", std::move(members)}});
      }
      degrees.push_back(json{{"degree", d}, {"classes", std::move(classes)}});
    }
    result["classes"] = std::move(degrees);
  }

  json params{{"input", in.name.empty() ? json() : json(in.name)},
              {"kind", to_string(kind)},
              {"max_degree", max_degree}};
  return wrap("monoid", std::move(params), std::move(result));
}

namespace {

json degree_status_json(const std::vector<CocycleDegreeStatus>& v) {
  json out = json::array();
  for (const auto& st : v) {
    json j{{"degree", st.degree}, {"injective", st.injective}, {"surjective", st.surjective}};
    if (st.collision) j["collision"] = json::array({st.collision->first, st.collision->second});
    if (st.missed) j["missed"] = *st.missed;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

json cocycle_report(const LoadedSolution& in, int max_degree) {
  BijectivityReport rep = bijectivity_report(in.solution, max_degree);
  json result{{"left_nondegenerate", rep.left_nondegenerate},
              {"right_nondegenerate", rep.right_nondegenerate},
              {"sigma_all_surjective", rep.sigma_all_surjective},
              {"gamma_all_surjective", rep.gamma_all_surjective},
              {"pi", degree_status_json(rep.pi_status)},
              {"pi_prime", degree_status_json(rep.pi_prime_status)},
              {"consistent", rep.consistent}};
  json params{{"input", in.name.empty() ? json() : json(in.name)}, {"max_degree", max_degree}};
  return wrap("cocycle", std::move(params), std::move(result));
}

json eta_report(const LoadedSolution& in, int max_degree, int witness_bound, std::uint64_t seed) {
  const FiniteSolution& s = in.solution;
  QuotientMonoid qm(eta_window(s, max_degree, witness_bound));
  const EtaWindow& w = qm.window();

  json merged = json::array();
  for (int d = 1; d <= max_degree; ++d) {
    auto pairs = w.merged_pairs(d);
    if (pairs.empty()) continue;
    json list = json::array();
    for (const auto& [wa, wb] : pairs) {
      json entry{{"pair", json::array({wa, wb})}};
      // Post-hoc witness: the lex-least class c with c+a = c+b modulo eta;
      // merges produced purely by saturation may have none in the window.
      bool found = false;
      for (int e = 1; e <= std::min(witness_bound, max_degree - d) && !found; ++e)
        for (int c = 0; c < w.eta_class_count(e) && !found; ++c) {
          Word wc = w.rep(e, c);
          Word ca = wc, cb = wc;
          ca.insert(ca.end(), wa.begin(), wa.end());
          cb.insert(cb.end(), wb.begin(), wb.end());
          if (w.eta_class_of(ca) == w.eta_class_of(cb)) {
            entry["witness"] = wc;
            found = true;
          }
        }
      if (!found) entry["witness"] = "saturation";
      list.push_back(std::move(entry));
    }
    merged.push_back(json{{"degree", d}, {"pairs", std::move(list)}});
  }

  json counts_a = json::array(), counts_eta = json::array();
  for (int d = 0; d <= max_degree; ++d) {
    counts_a.push_back(w.a_quotient().class_count(d));
    counts_eta.push_back(w.eta_class_count(d));
  }

  CongruenceReport cong = congruence_checks(w);
  json cong_json{{"lambda_stable", cong.lambda_stable},
                 {"action_stable", cong.action_stable},
                 {"circle_compatible", cong.circle_compatible}};
  if (cong.first_violation) cong_json["first_violation"] = *cong.first_violation;

  bool injective = injective_solution(s, w);
  json rbar = json::array();
  bool matches_r = injective;
  for (int i = 0; i < w.eta_class_count(1); ++i)
    for (int j = 0; j < w.eta_class_count(1); ++j) {
      QClass a{1, i}, b{1, j};
      json entry{{"a", w.rep(1, i)}, {"b", w.rep(1, j)}};
      try {
        auto [u, v] = r_bar(qm, a, b);
        entry["out"] = json::array({qm.rep(u), qm.rep(v)});
        if (injective) {
          int x = w.rep(1, i)[0], y = w.rep(1, j)[0];
          auto [sx, gy] = s.r(x, y);
          if (!(qm.rep(u) == Word{sx} && qm.rep(v) == Word{gy})) matches_r = false;
        }
      } catch (const WindowError& e) {
        entry["error"] = e.what();
        matches_r = false;
      }
      rbar.push_back(std::move(entry));
    }

  SemiTrussReport st = semi_truss_checks(s, qm, seed);
  json st_json{{"axiom_holds", st.axiom_holds},
               {"left_normality", st.left_normality},
               {"right_normality_checked", st.right_normality_checked},
               {"right_normality", st.right_normality},
               {"triples_checked", st.triples_checked}};
  if (st.first_violation) st_json["first_violation"] = *st.first_violation;

  json result{{"window_degree", max_degree},
              {"witness_bound", witness_bound},
              {"stable_within_window", w.stable_within_window()},
              {"a_class_counts", std::move(counts_a)},
              {"eta_class_counts", std::move(counts_eta)},
              {"merged", std::move(merged)},
              {"left_cancellative_within", is_left_cancellative_within(qm)},
              {"injective_solution", injective},
              {"congruence", std::move(cong_json)},
              {"semi_truss", std::move(st_json)},
              {"r_bar_on_generators", std::move(rbar)},
              {"r_bar_matches_r", matches_r}};
  json params{{"input", in.name.empty() ? json() : json(in.name)},
              {"max_degree", max_degree},
              {"witness_bound", witness_bound},
              {"seed", seed}};
  return wrap("eta", std::move(params), std::move(result));
}

json enumerate_report(const CampaignReport& rep) {
  json tallies = json::object();
  for (const auto& [k, v] : rep.tallies) tallies[k] = v;
  json result{{"campaign", rep.name},
              {"candidates", rep.candidates},
              {"solutions", rep.solutions},
              {"tallies", std::move(tallies)},
              {"violations", rep.violations},
              {"violation_count", rep.violations.size()}};
  json params{{"campaign", rep.name}, {"n", rep.n}};
  if (rep.max_degree > 0) params["max_degree"] = rep.max_degree;
  if (rep.name == "cocycle") params["seed"] = rep.seed;
  return wrap("enumerate", std::move(params), std::move(result));
}

json example_list_report() {
  json list = json::array();
  for (const Fixture& f : builtin_examples())
    list.push_back(json{{"name", f.name}, {"n", f.solution.n()}, {"notes", f.notes}});
  return wrap("example", json{{"list", true}}, json{{"fixtures", std::move(list)}});
}

namespace {

bool scalar_array(const json& j) {
  for (const auto& el : j)
    if (el.is_structured()) return false;
  return true;
}

void render(const json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v)) ||
          (v.is_array() && v.size() > 16)) {
        os << pad << k << ":\n";
        render(v, os, indent + 2);
      } else {
        os << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& el : j) {
      if (el.is_structured() && !(el.is_array() && scalar_array(el) && el.size() <= 16)) {
        os << pad << "-\n";
        render(el, os, indent + 2);
      } else {
        os << pad << "- " << el.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_human(const json& report) {
  std::ostringstream os;
  os << report.value("command", "?") << " report\n";
  if (report.contains("parameters")) {
    os << "parameters:\n";
    render(report["parameters"], os, 2);
  }
  if (report.contains("result")) {
    os << "result:\n";
    render(report["result"], os, 2);
  }
  if (report.contains("elapsed_ms")) os << "elapsed_ms: " << report["elapsed_ms"].dump() << "\n";
  return os.str();
}

}  // namespace ybe
