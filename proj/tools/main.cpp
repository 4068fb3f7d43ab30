// Copyright 2026 The tracemaps authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line frontend.  Exit codes: 0 success, 2 parse error,
// 3 non-unimodular input, 4 internal verification failure.

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tracemaps/classify.hpp"
#include "tracemaps/errors.hpp"
#include "tracemaps/fricke.hpp"
#include "tracemaps/orbit.hpp"
#include "tracemaps/qform.hpp"
#include "tracemaps/report.hpp"
#include "tracemaps/word.hpp"

using namespace tracemaps;

namespace {

using ojson = nlohmann::ordered_json;

Int parse_integer(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  try {
    return Int(t);
  } catch (const std::invalid_argument&) {
    throw ParseError("not an integer: \"" + text + "\"", 0);
  }
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Int num, den(1);
  if (slash == std::string::npos) {
    num = parse_integer(text);
  } else {
    num = parse_integer(text.substr(0, slash));
    den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in \"" + text + "\"", 0);
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::array<Rat, 3> parse_start(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw ParseError("start point needs three comma separated coordinates", 0);
  return {parse_rational(parts[0]), parse_rational(parts[1]),
          parse_rational(parts[2])};
}

TraceMap map_from_input(const std::string& matrix_text,
                        const std::string& subst_text) {
  if (!matrix_text.empty() && !subst_text.empty())
    throw ParseError("give either --matrix or --subst, not both", 0);
  if (!matrix_text.empty())
    return TraceMap::from_matrix(Mat2::parse(matrix_text));
  if (!subst_text.empty())
    return TraceMap::from_substitution(Substitution::parse(subst_text));
  throw ParseError("an input is required: --matrix \"a,b;c,d\" or --subst "
                   "\"a->WORD, b->WORD\"", 0);
}

// one canonical sign representative per projective class, entries bounded
std::vector<Mat2> bounded_classes(long bound) {
  std::vector<Mat2> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          long lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
          if (lead < 0) continue;
          out.emplace_back(a, b, c, d);
        }
  return out;
}

int run_classify(const std::string& matrix_text, const std::string& subst_text,
                 const std::string& format) {
  Report r;
  if (!matrix_text.empty() && !subst_text.empty())
    throw ParseError("give either --matrix or --subst, not both", 0);
  if (!matrix_text.empty()) {
    r = report_for_matrix(matrix_text);
  } else if (!subst_text.empty()) {
    r = report_for_substitution(subst_text);
  } else {
    throw ParseError("an input is required: --matrix \"a,b;c,d\" or --subst "
                     "\"a->WORD, b->WORD\"", 0);
  }
  std::cout << (format == "json" ? render_report_json(r) : render_report_text(r));
  if (!r.all_checks_pass()) {
    std::cerr << "internal verification failure: at least one report check "
                 "did not pass\n";
    return 4;
  }
  return 0;
}

int run_trace(const std::string& word_text, const std::string& format) {
  Word w = Word::parse(word_text);
  Poly3 p = half_trace(w);
  if (format == "json") {
    ojson j;
    j["word"] = word_text;
    j["half_trace"] = p.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int run_orbit(const std::string& matrix_text, const std::string& subst_text,
              const std::string& start_text, long steps, bool use_float,
              long bits) {
  TraceMap f = map_from_input(matrix_text, subst_text);
  std::array<Rat, 3> start = parse_start(start_text);
  OrbitRecord o;
  if (use_float) {
    std::array<double, 3> fstart{start[0].get_d(), start[1].get_d(),
                                 start[2].get_d()};
    o = iterate_orbit(f, fstart, steps);
  } else {
    o = iterate_orbit(f, start, steps, bits);
  }
  write_orbit_csv(std::cout, o);
  if (o.truncated)
    std::cerr << "orbit truncated after " << (o.length() - 1) << " steps ("
              << (use_float ? "floating overflow" : "bit budget") << ")\n";
  return 0;
}

struct CheckLine {
  std::string name;
  long cases = 0;
  bool pass = true;
};

// Oracle equivalence sweeps over every bounded matrix class.  Each check
// recomputes a claim along an independent route and counts exact matches.
int run_selfcheck(long bound, const std::string& format) {
  std::vector<CheckLine> lines;
  std::vector<Mat2> classes = bounded_classes(bound);
  std::vector<TraceMap> maps;
  maps.reserve(classes.size());

  CheckLine construction{"construction", 0, true};
  for (const Mat2& m : classes) {
    maps.push_back(TraceMap::from_matrix(m));  // throws on any failure
    ++construction.cases;
  }
  lines.push_back(construction);

  CheckLine anti{"anti_homomorphism", 0, true};
  std::size_t pair_cap = std::min<std::size_t>(maps.size(), 25);
  for (std::size_t i = 0; i < pair_cap; ++i)
    for (std::size_t j = 0; j < pair_cap; ++j) {
      TraceMap lhs = compose(maps[i], maps[j]);
      TraceMap rhs = TraceMap::from_matrix(classes[j] * classes[i]);
      if (!(lhs.map() == rhs.map())) anti.pass = false;
      ++anti.cases;
    }
  lines.push_back(anti);

  CheckLine pirel{"pi_relation", 0, true};
  for (const TraceMap& f : maps) {
    Permutation3 pi = pi_of(f);
    for (int i = 1; i <= 3; ++i) {
      auto s = static_cast<SigmaElement>(i);
      if (then_sigma(f.map(), s) != sigma_then(pi.apply(s), f.map()))
        pirel.pass = false;
    }
    ++pirel.cases;
  }
  lines.push_back(pirel);

  CheckLine orders{"order_tags", 0, true};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    OrderClass oc = classify_order(ProjMat(classes[i]));
    const PolyMap3& fm = maps[i].map();
    PolyMap3 f2 = map_compose(fm, fm);
    // F^3 = id rewritten as F^2 = F^-1 to stay within two compositions
    bool cubes_to_id = f2 == maps[i].inverse().map();
    bool ok = true;
    switch (oc.tag) {
      case OrderTag::Identity: ok = fm == PolyMap3::identity(); break;
      case OrderTag::Involution:
        ok = fm != PolyMap3::identity() && f2 == PolyMap3::identity();
        break;
      case OrderTag::OrderThree:
        ok = fm != PolyMap3::identity() && f2 != PolyMap3::identity() &&
             cubes_to_id;
        break;
      default:
        ok = fm != PolyMap3::identity() && f2 != PolyMap3::identity() &&
             !cubes_to_id;
    }
    if (!ok) orders.pass = false;
    ++orders.cases;
  }
  lines.push_back(orders);

  // half-trace polynomials against direct evaluation on determinant +1 pairs
  CheckLine oracle{"half_trace_oracle", 0, true};
  {
    std::vector<Word> words;
    for (const char* t : {"a", "b", "ab", "ba", "aab", "abAB", "aBab", "bbaB"})
      words.push_back(Word::parse(t));
    std::vector<std::pair<Mat2, Mat2>> pairs;
    for (const Mat2& m : classes) {
      if (m.det() != 1) continue;
      for (const Mat2& n : classes) {
        if (n.det() != 1) continue;
        pairs.emplace_back(m, n);
        break;
      }
      if (pairs.size() >= 6) break;
    }
    auto eval_word = [](const Word& w, const Mat2& a, const Mat2& b) {
      Mat2 acc = Mat2::identity();
      for (Letter l : w.letters()) {
        switch (l) {
          case Letter::a: acc = acc * a; break;
          case Letter::A: acc = acc * a.inverse(); break;
          case Letter::b: acc = acc * b; break;
          case Letter::B: acc = acc * b.inverse(); break;
        }
      }
      return acc;
    };
    for (const auto& [a, b] : pairs) {
      Rat x(a.trace(), 2), y(b.trace(), 2), z((a * b).trace(), 2);
      x.canonicalize();
      y.canonicalize();
      z.canonicalize();
      for (const Word& w : words) {
        Rat direct(eval_word(w, a, b).trace(), 2);
        direct.canonicalize();
        if (half_trace(w).eval(x, y, z) != direct) oracle.pass = false;
        ++oracle.cases;
      }
    }
  }
  lines.push_back(oracle);

  CheckLine groups{"symmetry_reversor_coherence", 0, true};
  std::size_t group_cap = std::min<std::size_t>(maps.size(), 20);
  for (std::size_t i = 0; i < group_cap; ++i) {
    const TraceMap& f = maps[i];
    PolyMap3 finv = f.inverse().map();
    GroupDescriptor sg = symmetry_group_G(f);
    for (const AElement& gen : sg.generators)
      if (map_compose(gen.g.map(), f.map()) != map_compose(f.map(), gen.g.map()))
        groups.pass = false;
    GroupDescriptor rg = reversing_symmetry_group_G(f);
    for (const AElement& gen : rg.generators) {
      // g F g^-1 = F^{+-1} in the two-composition form g F = F^{+-1} g
      PolyMap3 gf = map_compose(gen.g.map(), f.map());
      if (gf != map_compose(f.map(), gen.g.map()) &&
          gf != map_compose(finv, gen.g.map()))
        groups.pass = false;
    }
    ++groups.cases;
  }
  lines.push_back(groups);

  bool all = true;
  for (const CheckLine& l : lines) all = all && l.pass;

  if (format == "json") {
    ojson j;
    j["bound"] = bound;
    ojson arr = ojson::array();
    for (const CheckLine& l : lines) {
      ojson e;
      e["name"] = l.name;
      e["cases"] = l.cases;
      e["pass"] = l.pass;
      arr.push_back(e);
    }
    j["checks"] = arr;
    j["pass"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "selfcheck bound=" << bound << "\n";
    for (const CheckLine& l : lines)
      std::cout << "  " << l.name << ": " << l.cases << " cases "
                << (l.pass ? "pass" : "FAIL") << "\n";
    std::cout << (all ? "all checks pass" : "SELFCHECK FAILED") << "\n";
  }
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nielsen trace maps: construction, classification, certificates"};
  app.require_subcommand(1);

  std::string matrix_text, subst_text, word_text;
  std::string format = "text";
  std::string start_text = "3/2,3/2,3/2";
  long steps = 10, bits = 16384, bound = 2;
  bool use_float = false, use_exact = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--matrix", matrix_text, "matrix \"a,b;c,d\"");
    sub->add_option("--subst", subst_text, "substitution \"a->WORD, b->WORD\"");
  };

  CLI::App* classify = app.add_subcommand("classify", "full classification report");
  add_input(classify);
  add_format(classify);

  CLI::App* trace = app.add_subcommand("trace", "half-trace polynomial of a word");
  trace->add_option("--word", word_text, "word over [abAB]")->required();
  add_format(trace);

  CLI::App* orbit = app.add_subcommand("orbit", "iterate an orbit, CSV output");
  add_input(orbit);
  orbit->add_option("--start", start_text, "start point \"x,y,z\" (rationals)");
  orbit->add_option("--steps", steps, "iteration count")
      ->check(CLI::NonNegativeNumber);
  orbit->add_option("--bits", bits, "exact mode bit budget per coordinate")
      ->check(CLI::PositiveNumber);
  orbit->add_flag("--float", use_float, "floating point arithmetic");
  orbit->add_flag("--exact", use_exact, "exact rational arithmetic (default)");

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "oracle equivalence sweeps");
  selfcheck->add_option("--bound", bound, "entry bound for the matrix sweep")
      ->check(CLI::Range(1L, 3L));
  add_format(selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (use_float && use_exact)
      throw ParseError("choose one of --exact or --float", 0);
    if (classify->parsed())
      return run_classify(matrix_text, subst_text, format);
    if (trace->parsed()) return run_trace(word_text, format);
    if (orbit->parsed())
      return run_orbit(matrix_text, subst_text, start_text, steps, use_float,
                       bits);
    if (selfcheck->parsed()) return run_selfcheck(bound, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
