#pragma once

// JSON and plain-text renderings of braids and summit sets.

#include <sstream>
#include <string>

#include "garside/braid.hpp"
#include "garside/rigid.hpp"
#include "garside/summit.hpp"
#include "json.hpp"

namespace garside {

using Json = nlohmann::ordered_json;

/// Word plus normal form; permutations are one-indexed.
inline Json to_json(const BraidStructure& g, const Braid& x) {
  Json factors = Json::array();
  for (const auto& f : x.factors) factors.push_back(g.to_permutation(f));
  return Json{{"word", format_word(g, x)},   {"inf", x.inf()},    {"sup", x.sup()},
              {"len", x.len()},              {"delta_power", x.delta_power}, {"factors", std::move(factors)}};
}

inline Json to_json(const BraidStructure& g, const SummitSet<BraidStructure>& s) {
  Json members = Json::array(), witnesses = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    members.push_back(format_word(g, s.members[i]));
    witnesses.push_back(format_word(g, s.witnesses[i]));
  }
  Json out{{"kind", to_string(s.kind)}, {"base", format_word(g, s.base)},
           {"infs", s.infs},            {"sups", s.sups},
           {"size", s.size()},          {"members", std::move(members)},
           {"witnesses", std::move(witnesses)}};
  if (s.kind == SummitKind::star) out["trajectories"] = s.trajectory_keys.size();
  return out;
}

inline Json to_json(const BraidStructure& g, const RigidReport<BraidStructure>& r) {
  Json out{{"is_rigid", r.is_rigid}, {"n1", r.n1}, {"n2", r.n2}, {"candidate", format_word(g, r.candidate)}};
  if (r.power) {
    out["power"] = *r.power;
    out["rigid_conjugate"] = format_word(g, *r.rigid_conjugate);
    out["witness"] = format_word(g, *r.witness);
  }
  return out;
}

/// Word with an explicit marker for the identity.
inline std::string display_word(const BraidStructure& g, const Braid& x) {
  std::string w = format_word(g, x);
  return w.empty() ? "(identity)" : w;
}

inline std::string to_text(const BraidStructure& g, const Braid& x) {
  std::ostringstream out;
  out << "word     " << display_word(g, x) << "\n"
      << "inf      " << x.inf() << "\n"
      << "sup      " << x.sup() << "\n"
      << "len      " << x.len() << "\n"
      << "factors ";
  if (x.factors.empty()) out << " []";
  for (const auto& f : x.factors) {
    out << " [";
    auto perm = g.to_permutation(f);
    for (std::size_t i = 0; i < perm.size(); ++i) out << (i ? " " : "") << perm[i];
    out << "]";
  }
  out << "\n";
  return out.str();
}

inline std::string to_text(const BraidStructure& g, const SummitSet<BraidStructure>& s) {
  std::ostringstream out;
  out << "kind     " << to_string(s.kind) << "\n"
      << "infs     " << s.infs << "\n"
      << "sups     " << s.sups << "\n"
      << "size     " << s.size() << "\n";
  if (s.kind == SummitKind::star) out << "trajectories " << s.trajectory_keys.size() << "\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << "  " << display_word(g, s.members[i]) << "    <- " << display_word(g, s.witnesses[i]) << "\n";
  return out.str();
}

}  // namespace garside
