#include "polecover/serialize.hpp"

#include <openssl/evp.h>

#include <cctype>

namespace polecover {

namespace {

std::string child(const std::string& ptr, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return ptr + "/" + escaped;
}

std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const Json& require(const Json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(ptr, key), "missing field");
  return *it;
}

const Json& require_array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

long integer_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_float()) throw SchemaError(ptr, "floating-point values are not accepted");
  if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  return j.get<long>();
}

template <class F>
auto rethrow_at(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(ptr, e.what(), e.code() == ErrorCode::GroupTooLarge ? ErrorCode::GroupTooLarge : ErrorCode::InvalidInput);
  }
}

Permutation permutation_from_json(const Json& j, const std::string& ptr, std::size_t degree) {
  if (j.is_string()) {
    // Cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
    std::vector<std::vector<std::uint32_t>> cycles;
    const std::string s = j.get<std::string>();
    std::size_t k = 0;
    while (k < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[k]))) {
        ++k;
        continue;
      }
      if (s[k] != '(') throw SchemaError(ptr, "bad cycle notation");
      const auto close = s.find(')', k);
      if (close == std::string::npos) throw SchemaError(ptr, "unterminated cycle");
      std::vector<std::uint32_t> cycle;
      std::string token;
      for (std::size_t t = k + 1; t <= close; ++t) {
        const char c = s[t];
        if (std::isdigit(static_cast<unsigned char>(c))) {
          token += c;
        } else if (c == ' ' || c == ',' || c == ')') {
          if (!token.empty()) cycle.push_back(static_cast<std::uint32_t>(std::stoul(token)));
          token.clear();
        } else {
          throw SchemaError(ptr, "bad character in cycle notation");
        }
      }
      if (!cycle.empty()) cycles.push_back(cycle);
      k = close + 1;
    }
    return rethrow_at(ptr, [&] { return Permutation::from_cycles(degree, cycles); });
  }
  require_array(j, ptr);
  if (j.size() != degree) throw SchemaError(ptr, "image array length differs from the degree");
  std::vector<std::uint32_t> images;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const long v = integer_from_json(j[k], child(ptr, k));
    if (v < 0) throw SchemaError(child(ptr, k), "negative image");
    images.push_back(static_cast<std::uint32_t>(v));
  }
  return rethrow_at(ptr, [&] { return Permutation(std::move(images)); });
}

}  // namespace

std::string_view to_string(DifferentialKind k) { return k == DifferentialKind::Second ? "second" : "third"; }
std::string_view to_string(AutStatus s) { return s == AutStatus::Exact ? "exact" : "bounded"; }

// ----------------------------------------------------------------- writers

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

Json to_json(const ProjectivePoint& p) { return p.is_infinity() ? Json("inf") : to_json(p.finite()); }

Json to_json(const MobiusMap& f) {
  return Json::array({Json::array({to_json(f.a()), to_json(f.b())}), Json::array({to_json(f.c()), to_json(f.d())})});
}

Json to_json(const SphereDifferential& xi) {
  Json factors = Json::array();
  for (const auto& f : xi.factors()) factors.push_back({{"point", to_json(f.point)}, {"exponent", f.exponent}});
  return {{"leading", to_json(xi.leading())}, {"factors", factors}};
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return {{"degree", g.degree()}, {"generators", gens}};
}

Json to_json(const CoverSpec& spec) {
  Json marks = Json::array();
  for (const auto& m : spec.marks) marks.push_back(to_json(m));
  Json monodromy = Json::array();
  for (const auto& x : spec.monodromy) monodromy.push_back(*spec.group.index_of(x));
  return {{"differential", to_json(spec.base)}, {"marks", marks}, {"group", to_json(spec.group)}, {"monodromy", monodromy}};
}

Json to_json(const PeriodLattice& lattice) {
  Json basis = Json::array();
  for (const auto& v : lattice.generators()) basis.push_back(to_json(v));
  return {{"unit", "2*pi*i"}, {"rank", lattice.lattice.rank()}, {"basis", basis}, {"zero", lattice.is_zero()}};
}

Json to_json(const BaseSymmetries& q) {
  Json maps = Json::array();
  for (const auto& f : q.maps) maps.push_back(to_json(f));
  Json out{{"infinite", q.infinite}, {"maps", maps}, {"maps_complete", q.maps_complete}};
  out["order"] = q.infinite ? Json(nullptr) : Json(std::to_string(q.order));
  return out;
}

Json to_json(const CertifiedAut& aut) {
  return {{"lower", std::to_string(aut.lower)},
          {"upper", std::to_string(aut.upper)},
          {"status", to_string(aut.status)},
          {"hurwitz_tightened", aut.hurwitz_tightened},
          {"witness", to_json(aut.witness)}};
}

Json to_json(const BranchedStructureData& data) {
  Json records = Json::array();
  for (const auto& r : data.records)
    records.push_back({{"count", std::to_string(r.count)}, {"order", r.order}, {"at_infinity", r.at_infinity}});
  return {{"genus", data.genus}, {"records", records}, {"holonomy_trivial", data.holonomy_trivial}};
}

Json to_json(const PeriodCharacter& chi) {
  auto list = [](const std::vector<GaussianRational>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
  };
  return {{"genus", chi.genus}, {"alpha", list(chi.alpha)}, {"beta", list(chi.beta)}, {"peripheral", list(chi.peripheral)}};
}

Json to_json(const HauptResult& r) {
  Json image{{"rank", r.image.rank == ImageRank::Rank0 ? "Rank0" : r.image.rank == ImageRank::Rank1 ? "Rank1" : "Lattice"}};
  if (r.image.rank == ImageRank::Lattice) image["covolume"] = to_json(r.image.covolume);
  Json out{{"verdict", to_string(r.verdict)}, {"volume", to_json(r.volume)}, {"image", image}};
  if (r.note) out["note"] = *r.note;
  return out;
}

Json to_json(const AdmissibleMaximum& m) {
  Json sigs = Json::array();
  for (const auto& s : m.attained_by)
    sigs.push_back({{"base_genus", s.base_genus}, {"local_degrees", s.local_degrees}, {"degree", std::to_string(s.degree)},
                    {"text", signature_string(s)}});
  return {{"max_degree", std::to_string(m.degree)}, {"attained_by", sigs}, {"admissibility", "arithmetic_only"}};
}

Json certificate_json(const RealizationCertificate& cert) {
  const CoveredSurface& s = cert.surface;
  Json branches = Json::array();
  for (std::size_t i = 0; i < s.branches().size(); ++i) {
    const auto& b = s.branches()[i];
    branches.push_back({{"mark", to_json(b.mark)},
                        {"monodromy_cycles", s.spec().monodromy[i].cycle_string()},
                        {"base_order", b.base_order},
                        {"base_residue", to_json(b.base_residue)},
                        {"local_degree", b.local_degree},
                        {"sheets", std::to_string(b.sheets)},
                        {"upstairs_order", b.upstairs_order},
                        {"upstairs_residue", to_json(b.upstairs_residue)}});
  }
  Json table = Json::array();
  for (const auto& [order, count] : s.singularity_table()) table.push_back({{"order", order}, {"count", std::to_string(count)}});
  Json checks = Json::object();
  for (const auto& c : cert.checks) checks[c.name] = c.passed;

  Json out{{"schema_version", kSchemaVersion},
           {"document", "realization_certificate"},
           {"spec", to_json(s.spec())},
           {"genus", s.genus()},
           {"deck_order", std::to_string(s.deck_order())},
           {"kind", to_string(s.kind())},
           {"gauss_bonnet_sum", s.gauss_bonnet_sum()},
           {"riemann_hurwitz_euler", s.riemann_hurwitz_euler()},
           {"branches", branches},
           {"singularities", table},
           {"period_lattice", to_json(cert.periods)},
           {"translation_group", to_json(cert.aut)},
           {"aut", std::to_string(cert.aut.value())},
           {"rigid_base", cert.rigid_base},
           {"checks", checks},
           {"all_checks_passed", cert.all_checks_passed()},
           {"notes", cert.notes}};
  out["large"] = is_large(s, cert.aut) == Tristate::True ? Json(true) : Json("unknown");
  if (cert.bound) {
    out["bound"] = to_string(cert.bound->status);
    out["bound_check"] = {{"status", to_string(cert.bound->status)},
                          {"bound", std::to_string(cert.bound->bound)},
                          {"non_large_bound_used", cert.bound->used_non_large_bound}};
  } else {
    out["bound"] = nullptr;
  }
  out["projective"] = cert.projective ? to_json(*cert.projective) : Json(nullptr);
  return out;
}

// ----------------------------------------------------------------- readers

Rational rational_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_float()) throw SchemaError(ptr, "floating-point values are not accepted");
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(ptr, "expected a rational string \"p/q\"");
  return rethrow_at(ptr, [&] { return parse_rational(j.get<std::string>()); });
}

GaussianRational gaussian_from_json(const Json& j, const std::string& ptr) {
  if (j.is_object()) {
    Rational re(0), im(0);
    for (const auto& [key, value] : j.items()) {
      if (key == "re")
        re = rational_from_json(value, child(ptr, key));
      else if (key == "im")
        im = rational_from_json(value, child(ptr, key));
      else
        throw SchemaError(child(ptr, key), "unknown field");
    }
    return {re, im};
  }
  if (j.is_number_float()) throw SchemaError(ptr, "floating-point values are not accepted");
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
  if (!j.is_string()) throw SchemaError(ptr, "expected a Gaussian rational");
  return rethrow_at(ptr, [&] { return parse_gaussian(j.get<std::string>()); });
}

ProjectivePoint point_from_json(const Json& j, const std::string& ptr) {
  if (j.is_string() && j.get<std::string>() == "inf") return ProjectivePoint::infinity();
  return ProjectivePoint(gaussian_from_json(j, ptr));
}

SphereDifferential differential_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected a differential object");
  GaussianRational leading(1);
  if (j.contains("leading")) leading = gaussian_from_json(j["leading"], child(ptr, "leading"));
  std::vector<DiffFactor> factors;
  if (j.contains("factors")) {
    const std::string fptr = child(ptr, "factors");
    const Json& list = require_array(j["factors"], fptr);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string p = child(fptr, k);
      const Json& point = require(list[k], p, "point");
      if (point.is_string() && point.get<std::string>() == "inf")
        throw SchemaError(child(p, "point"), "the order at infinity is derived, not given");
      const long e = integer_from_json(require(list[k], p, "exponent"), child(p, "exponent"));
      if (e == 0) throw SchemaError(child(p, "exponent"), "exponent must be nonzero");
      factors.push_back({gaussian_from_json(point, child(p, "point")), e});
    }
  }
  return rethrow_at(ptr, [&] { return SphereDifferential(leading, std::move(factors)); });
}

PermGroup group_from_json(const Json& j, const std::string& ptr, std::size_t cap) {
  const long degree = integer_from_json(require(j, ptr, "degree"), child(ptr, "degree"));
  if (degree < 1) throw SchemaError(child(ptr, "degree"), "degree must be positive");
  const std::string gptr = child(ptr, "generators");
  const Json& gens = require_array(require(j, ptr, "generators"), gptr);
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < gens.size(); ++k)
    perms.push_back(permutation_from_json(gens[k], child(gptr, k), static_cast<std::size_t>(degree)));
  try {
    return PermGroup::generate(static_cast<std::size_t>(degree), std::move(perms), cap);
  } catch (const Error& e) {
    throw SchemaError(ptr, e.what(), e.code() == ErrorCode::GroupTooLarge ? ErrorCode::GroupTooLarge : ErrorCode::InvalidInput);
  }
}

CoverSpec cover_spec_from_json(const Json& j, const std::string& ptr, std::size_t cap) {
  CoverSpec spec{differential_from_json(require(j, ptr, "differential"), child(ptr, "differential")),
                 {},
                 group_from_json(require(j, ptr, "group"), child(ptr, "group"), cap),
                 {}};
  const std::string mptr = child(ptr, "marks");
  const Json& marks = require_array(require(j, ptr, "marks"), mptr);
  for (std::size_t k = 0; k < marks.size(); ++k) spec.marks.push_back(point_from_json(marks[k], child(mptr, k)));
  const std::string optr = child(ptr, "monodromy");
  const Json& mono = require_array(require(j, ptr, "monodromy"), optr);
  const auto& gens = spec.group.generators();
  for (std::size_t k = 0; k < mono.size(); ++k) {
    const std::string p = child(optr, k);
    if (mono[k].is_array()) {
      std::vector<int> letters;
      for (std::size_t t = 0; t < mono[k].size(); ++t) {
        const long x = integer_from_json(mono[k][t], child(p, t));
        if (x == 0 || static_cast<std::size_t>(x < 0 ? -x : x) > gens.size())
          throw SchemaError(child(p, t), "letter is not a signed 1-based generator index");
        letters.push_back(static_cast<int>(x));
      }
      spec.monodromy.push_back(FreeWord(letters).evaluate(gens, spec.group.degree()));
    } else {
      const long idx = integer_from_json(mono[k], p);
      if (idx < 0 || static_cast<std::size_t>(idx) >= spec.group.order())
        throw SchemaError(p, "element index out of range");
      spec.monodromy.push_back(spec.group.elements()[static_cast<std::size_t>(idx)]);
    }
  }
  return spec;
}

std::vector<Mark> marks_from_json(const Json& j, const std::string& ptr) {
  require_array(j, ptr);
  std::vector<Mark> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = child(ptr, k);
    if (j[k].is_object() && j[k].contains("point")) {
      Mark m{point_from_json(j[k]["point"], child(p, "point")), 1};
      if (j[k].contains("label")) {
        const long label = integer_from_json(j[k]["label"], child(p, "label"));
        if (label < 1) throw SchemaError(child(p, "label"), "labels are positive");
        m.label = static_cast<std::uint64_t>(label);
      }
      out.push_back(m);
    } else {
      out.push_back({point_from_json(j[k], p), 1});
    }
  }
  return out;
}

PeriodCharacter character_from_json(const Json& j, const std::string& ptr) {
  PeriodCharacter chi;
  chi.genus = integer_from_json(require(j, ptr, "genus"), child(ptr, "genus"));
  auto list = [&](const char* key, std::vector<GaussianRational>& out) {
    if (!j.contains(key)) {
      if (std::string_view(key) == "peripheral") return;
      throw SchemaError(child(ptr, key), "missing field");
    }
    const std::string p = child(ptr, key);
    const Json& arr = require_array(j[key], p);
    for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(gaussian_from_json(arr[k], child(p, k)));
  };
  list("alpha", chi.alpha);
  list("beta", chi.beta);
  list("peripheral", chi.peripheral);
  if (chi.genus < 0) throw SchemaError(child(ptr, "genus"), "negative genus");
  if (chi.alpha.size() != static_cast<std::size_t>(chi.genus)) throw SchemaError(child(ptr, "alpha"), "needs genus entries");
  if (chi.beta.size() != static_cast<std::size_t>(chi.genus)) throw SchemaError(child(ptr, "beta"), "needs genus entries");
  rethrow_at(child(ptr, "peripheral"), [&] {
    chi.validate();
    return 0;
  });
  return chi;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalInconsistency, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2); }

bool contains_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) {
      if (contains_float(v)) return true;
    }
  return false;
}

}  // namespace polecover
