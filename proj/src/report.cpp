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

#include "tracemaps/report.hpp"

#include <array>
#include <sstream>

#include "json.hpp"
#include "tracemaps/errors.hpp"
#include "tracemaps/qform.hpp"
#include "tracemaps/word.hpp"

namespace tracemaps {

namespace {

using ojson = nlohmann::ordered_json;

const char* order_tag_name(OrderTag t) {
  switch (t) {
    case OrderTag::Identity: return "Identity";
    case OrderTag::Involution: return "Involution";
    case OrderTag::OrderThree: return "OrderThree";
    case OrderTag::InfiniteParabolic: return "InfiniteParabolic";
    case OrderTag::InfiniteGeneric: return "InfiniteGeneric";
  }
  return "?";
}

bool commutes(const PolyMap3& g, const PolyMap3& f) {
  if (g == f) return true;  // anything commutes with itself
  return map_compose(g, f) == map_compose(f, g);
}

// g f g^-1 lands on f (symmetry) or f^-1 (reversing symmetry).  Tested in
// the two-composition form g f = f^{+-1} g: nesting a third map squares
// the polynomial degree again and is not affordable for long words.
bool acts_on(const PolyMap3& g, const PolyMap3& f, const PolyMap3& finv) {
  if (g == f || g == finv) return true;
  PolyMap3 gf = map_compose(g, f);
  return gf == map_compose(f, g) || gf == map_compose(finv, g);
}

std::vector<std::pair<std::string, bool>> compute_checks(const Report& r) {
  const TraceMap& f = r.map;
  const PolyMap3& fm = f.map();
  PolyMap3 finv = f.inverse().map();
  std::vector<std::pair<std::string, bool>> out;

  std::array<Rat, 3> ones{Rat(1), Rat(1), Rat(1)};
  out.emplace_back("fixes_111", fm.eval(ones) == ones);
  out.emplace_back("preserves_invariant", preserves_invariant(fm));
  // second construction route through the matrix class alone
  out.emplace_back("matrix_consistent",
                   TraceMap::from_matrix(f.matrix()).map() == fm);

  bool pi_ok = true;
  for (int i = 1; i <= 3; ++i) {
    auto s = static_cast<SigmaElement>(i);
    if (then_sigma(fm, s) != sigma_then(r.pi.apply(s), fm)) pi_ok = false;
  }
  out.emplace_back("pi_conjugation", pi_ok);

  bool kernel_ok = true;
  for (SigmaElement s : r.ksigma.elements)
    if (then_sigma(fm, s) != sigma_then(s, fm)) kernel_ok = false;
  out.emplace_back("kernel_commutes", kernel_ok);

  bool order_ok = true;
  PolyMap3 f2 = map_compose(fm, fm);
  // F^3 = id exactly when F^2 = F^-1; stating it this way avoids a third
  // composition, whose degree would be cubic in deg F
  bool cubes_to_id = f2 == finv;
  switch (r.order.tag) {
    case OrderTag::Identity:
      order_ok = fm == PolyMap3::identity();
      break;
    case OrderTag::Involution:
      order_ok = fm != PolyMap3::identity() && f2 == PolyMap3::identity();
      break;
    case OrderTag::OrderThree:
      order_ok = fm != PolyMap3::identity() && f2 != PolyMap3::identity() &&
                 cubes_to_id;
      break;
    default:
      order_ok = fm != PolyMap3::identity() && f2 != PolyMap3::identity() &&
                 !cubes_to_id;
  }
  out.emplace_back("order_verified", order_ok);

  bool sg_ok = true;
  for (const AElement& gen : r.sym_g.generators)
    if (!commutes(gen.g.map(), fm)) sg_ok = false;
  out.emplace_back("symmetries_commute", sg_ok);

  if (!r.order.finite()) {
    PrimitiveRoot pr = primitive_root(f.matrix().rep());
    bool root_ok = ProjMat(pr.root.pow(pr.exponent)) == f.matrix();
    if (r.sym_g.tag == GroupTag::Cinf && !r.sym_g.generators.empty())
      root_ok = root_ok &&
                r.sym_g.generators[0].g.map() ==
                    TraceMap::from_matrix(pr.root).map();
    out.emplace_back("cyclic_generator_power", root_ok);
  }

  bool rg_ok = true;
  for (const AElement& gen : r.rev_g.generators)
    if (!acts_on(gen.g.map(), fm, finv)) rg_ok = false;
  out.emplace_back("reversing_generators_act", rg_ok);

  bool sa_ok = true;
  for (const AElement& gen : r.sym_a.generators)
    if (!commutes(gen.realization(), fm)) sa_ok = false;
  out.emplace_back("extension_symmetries_commute", sa_ok);

  bool ra_ok = true;
  for (const AElement& gen : r.rev_a.generators)
    if (!acts_on(gen.realization(), fm, finv)) ra_ok = false;
  out.emplace_back("extension_reversors_act", ra_ok);

  bool km_ok = true;
  if (r.sym_a.tag == GroupTag::SigmaExtension) km_ok = r.sym_a.kernel == r.ksigma;
  if (r.rev_a.tag == GroupTag::SigmaExtension)
    km_ok = km_ok && r.rev_a.kernel == r.ksigma;
  out.emplace_back("extension_kernel_matches", km_ok);

  // the direct-product flag claims the quotient generators fix the kernel
  bool direct_ok = true;
  for (const GroupDescriptor* d : {&r.sym_a, &r.rev_a}) {
    if (d->tag != GroupTag::SigmaExtension || !d->quotient || !d->direct)
      continue;
    bool all_fixed = true;
    for (const AElement& gen : d->quotient->generators) {
      Permutation3 pi = pi_of(gen.g);
      for (SigmaElement s : d->kernel.elements)
        if (pi.apply(s) != s) all_fixed = false;
    }
    if (all_fixed != *d->direct) direct_ok = false;
  }
  out.emplace_back("extension_direct_flag", direct_ok);

  if (r.certificate.reversible) {
    bool inv_ok = r.certificate.reversor.has_value() &&
                  compose(*r.certificate.reversor, f) ==
                      compose(f.inverse(), *r.certificate.reversor);
    out.emplace_back("reversor_inverts", inv_ok);
    bool conj_ok = r.certificate.conjugator.has_value();
    if (conj_ok) {
      Mat2 m = f.matrix().rep();
      Mat2 lhs = *r.certificate.conjugator * m;
      Mat2 rhs = m.inverse() * *r.certificate.conjugator;
      conj_ok = lhs == rhs || lhs == Int(-1) * rhs;
    }
    out.emplace_back("conjugator_relation", conj_ok);
  } else {
    bool ob_ok = !r.certificate.obstructions.empty();
    for (const NonRepresentationCertificate& ob : r.certificate.obstructions) {
      auto lat =
          commutation_lattice(f.matrix().rep(), LatticeSide::Reverse, ob.eps);
      if (ob.lattice_empty) {
        ob_ok = ob_ok && !lat.has_value();
      } else if (!ob.form.has_value() || !lat.has_value()) {
        ob_ok = false;
      } else {
        RepresentationResult rep = represents_pm1(*ob.form);
        ob_ok = ob_ok && !rep.plus_one.has_value() && !rep.minus_one.has_value();
      }
    }
    out.emplace_back("obstructions_verified", ob_ok);
  }
  return out;
}

ojson sigma_subgroup_json(const SigmaSubgroup& k) {
  if (k.is_full()) return "Sigma";
  ojson arr = ojson::array();
  for (SigmaElement s : k.elements) arr.push_back(sigma_name(s));
  return arr;
}

ojson generator_json(const AElement& gen) {
  ojson j;
  j["sigma"] = sigma_name(gen.sigma);
  j["matrix"] = gen.g.matrix().str();
  j["map"] = gen.realization().str();
  return j;
}

ojson descriptor_json(const GroupDescriptor& d) {
  ojson j;
  j["tag"] = tag_name(d.tag);
  ojson gens = ojson::array();
  for (const AElement& gen : d.generators) gens.push_back(generator_json(gen));
  j["generators"] = gens;
  j["annotation"] = d.annotation;
  if (d.tag == GroupTag::SigmaExtension) {
    j["kernel"] = sigma_subgroup_json(d.kernel);
    j["quotient"] = d.quotient ? descriptor_json(*d.quotient) : ojson(nullptr);
    j["direct"] = d.direct ? ojson(*d.direct) : ojson(nullptr);
  }
  return j;
}

ojson certificate_json(const ReversibilityCertificate& c) {
  ojson j;
  j["reversible"] = c.reversible;
  j["involutory"] = c.involutory;
  j["conjugator"] = c.conjugator ? ojson(c.conjugator->str()) : ojson(nullptr);
  if (c.reversor) {
    ojson rev;
    rev["matrix"] = c.reversor->matrix().str();
    rev["map"] = c.reversor->map().str();
    j["reversor"] = rev;
  } else {
    j["reversor"] = nullptr;
  }
  j["note"] = c.note;
  ojson obs = ojson::array();
  for (const NonRepresentationCertificate& ob : c.obstructions) {
    ojson o;
    o["eps"] = ob.eps;
    o["lattice_empty"] = ob.lattice_empty;
    o["method"] = ob.method;
    o["form"] = ob.form ? ojson(ob.form->str()) : ojson(nullptr);
    ojson cyc = ojson::array();
    for (const BinaryQF& q : ob.cycle) cyc.push_back(q.str());
    o["cycle"] = cyc;
    obs.push_back(o);
  }
  j["obstructions"] = obs;
  return j;
}

void descriptor_text(std::ostream& out, const std::string& name,
                     const GroupDescriptor& d) {
  out << name << ": " << tag_name(d.tag);
  if (d.tag == GroupTag::SigmaExtension) {
    out << "  kernel=" << d.kernel.str();
    if (d.quotient) out << "  quotient=" << tag_name(d.quotient->tag);
    if (d.direct) out << "  direct=" << (*d.direct ? "yes" : "no");
  }
  out << "\n";
  for (const AElement& gen : d.generators) {
    out << "  generator: sigma=" << sigma_name(gen.sigma)
        << "  matrix=" << gen.g.matrix().str() << "  map=" << gen.realization().str()
        << "\n";
  }
  if (!d.annotation.empty()) out << "  note: " << d.annotation << "\n";
  if (d.tag == GroupTag::SigmaExtension && d.quotient &&
      !d.quotient->annotation.empty())
    out << "  quotient note: " << d.quotient->annotation << "\n";
}

}  // namespace

bool Report::all_checks_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

Report report_for(const TraceMap& f, std::string input_kind,
                  std::string input_text) {
  Report r;
  r.input_kind = std::move(input_kind);
  r.input_text = std::move(input_text);
  r.map = f;
  r.order = classify_order(f.matrix());
  r.pi = pi_of(f);
  r.ksigma = k_sigma(f);
  r.sym_g = symmetry_group_G(f);
  r.certificate = reversibility_certificate(f);
  r.rev_g = reversing_symmetry_group_G(f, r.certificate);
  r.sym_a = symmetry_group_A(f);
  r.rev_a = reversing_symmetry_group_A(f, r.certificate);
  r.checks = compute_checks(r);
  return r;
}

Report report_for_matrix(const std::string& text) {
  Mat2 m = Mat2::parse(text);
  return report_for(TraceMap::from_matrix(m), "matrix", text);
}

Report report_for_substitution(const std::string& text) {
  Substitution s = Substitution::parse(text);
  return report_for(TraceMap::from_substitution(s), "substitution", text);
}

std::string render_report_json(const Report& r) {
  const Mat2& rep = r.map.matrix().rep();
  ojson j;
  j["input"] = ojson{{"kind", r.input_kind}, {"text", r.input_text}};
  {
    ojson m;
    m["text"] = rep.str();
    m["entries"] = ojson::array({ojson::array({rep.a.get_str(), rep.b.get_str()}),
                                 ojson::array({rep.c.get_str(), rep.d.get_str()})});
    m["determinant"] = rep.det().get_str();
    m["trace"] = rep.trace().get_str();
    j["matrix"] = m;
  }
  {
    ojson t;
    t["text"] = r.map.map().str();
    t["components"] = ojson::array({r.map.map().fx.str(), r.map.map().fy.str(),
                                    r.map.map().fz.str()});
    t["degree"] = r.map.map().degree();
    t["provenance"] = r.map.provenance();
    j["trace_map"] = t;
  }
  {
    ojson o;
    o["tag"] = order_tag_name(r.order.tag);
    o["finite"] = r.order.finite();
    auto n = r.order.order();
    o["order"] = n ? ojson(*n) : ojson(nullptr);
    j["order"] = o;
  }
  j["pi"] = ojson{{"images", ojson::array({r.pi.images[0], r.pi.images[1],
                                           r.pi.images[2]})},
                  {"order", r.pi.order()}};
  j["k_sigma"] = sigma_subgroup_json(r.ksigma);
  j["S_G"] = descriptor_json(r.sym_g);
  j["R_G"] = descriptor_json(r.rev_g);
  j["S_A"] = descriptor_json(r.sym_a);
  j["R_A"] = descriptor_json(r.rev_a);
  j["reversibility"] = certificate_json(r.certificate);
  ojson checks;
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string render_report_text(const Report& r) {
  const Mat2& rep = r.map.matrix().rep();
  std::ostringstream out;
  out << "input: " << r.input_kind << " \"" << r.input_text << "\"\n";
  out << "matrix: " << rep.str() << "  det=" << rep.det().get_str()
      << "  trace=" << rep.trace().get_str() << "\n";
  out << "trace map: " << r.map.map().str() << "\n";
  out << "order: " << order_tag_name(r.order.tag);
  if (auto n = r.order.order()) out << " (order " << *n << ")";
  out << "\n";
  out << "pi: (" << r.pi.images[0] << ", " << r.pi.images[1] << ", "
      << r.pi.images[2] << ")  order " << r.pi.order() << "\n";
  out << "k_sigma: " << r.ksigma.str() << "\n";
  descriptor_text(out, "S_G", r.sym_g);
  descriptor_text(out, "R_G", r.rev_g);
  descriptor_text(out, "S_A", r.sym_a);
  descriptor_text(out, "R_A", r.rev_a);
  const ReversibilityCertificate& c = r.certificate;
  out << "reversibility: " << (c.reversible ? "reversible" : "not reversible");
  if (c.reversible)
    out << "  involutory=" << (c.involutory ? "yes" : "no");
  out << "\n";
  if (c.conjugator) out << "  conjugator: " << c.conjugator->str() << "\n";
  if (c.reversor) out << "  reversor: " << c.reversor->map().str() << "\n";
  if (!c.note.empty()) out << "  note: " << c.note << "\n";
  for (const NonRepresentationCertificate& ob : c.obstructions) {
    out << "  obstruction eps=" << (ob.eps > 0 ? "+1" : "-1") << ": ";
    if (ob.lattice_empty) {
      out << "no candidate lattice (" << ob.method << ")\n";
    } else {
      out << "form " << (ob.form ? ob.form->str() : std::string("?"))
          << " represents neither +1 nor -1 (" << ob.method << ")\n";
    }
  }
  std::size_t passed = 0;
  for (const auto& [name, ok] : r.checks)
    if (ok) ++passed;
  out << "checks: " << passed << "/" << r.checks.size() << " pass\n";
  for (const auto& [name, ok] : r.checks)
    out << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace tracemaps
