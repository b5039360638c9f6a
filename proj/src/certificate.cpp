#include "steiner/certificate.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace steiner {

namespace {

constexpr std::array<std::pair<Reason, std::string_view>, 13> reason_tags{{
  {Reason::KExceedsDegree, "K_EXCEEDS_DEGREE"},
  {Reason::CameronBound, "CAMERON_BOUND"},
  {Reason::CameronEqualityUnlisted, "CAMERON_EQUALITY_UNLISTED"},
  {Reason::TitsBound, "TITS_BOUND"},
  {Reason::DivisibilityFail, "DIVISIBILITY_FAIL"},
  {Reason::BExceedsGroupOrder, "B_EXCEEDS_GROUP_ORDER"},
  {Reason::StabilizerNotIntegral, "STABILIZER_NOT_INTEGRAL"},
  {Reason::StabilizerNotDivisor, "STABILIZER_NOT_DIVISOR"},
  {Reason::EqAFail, "EQ_A_FAIL"},
  {Reason::Eq0NoSolution, "EQ0_NO_SOLUTION"},
  {Reason::Parity16, "PARITY_16"},
  {Reason::SpanArgument, "SPAN_ARGUMENT"},
  {Reason::ExternalCitation, "EXTERNAL_CITATION"},
}};

std::string dec(std::uint64_t n) { return std::to_string(n); }

const std::string &string_field(const OrderedJson &j, const char *key)
{
  auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw std::invalid_argument(std::string("certificate: missing string field '") + key + "'");
  return it->get_ref<const std::string &>();
}

std::uint64_t nat_field(const OrderedJson &j, const char *key)
{
  return to_u64(parse_nat(string_field(j, key)));
}

} // namespace

std::string_view reason_tag(Reason r)
{
  for (const auto &[reason, tag] : reason_tags)
    if (reason == r)
      return tag;
  throw std::invalid_argument("unknown reason");
}

std::optional<Reason> reason_from_tag(std::string_view tag)
{
  for (const auto &[reason, name] : reason_tags)
    if (name == tag)
      return reason;
  return std::nullopt;
}

const Int &Certificate::witness(std::string_view name) const
{
  for (const auto &w : witnesses)
    if (w.name == name)
      return w.value;
  throw std::out_of_range("certificate has no witness '" + std::string(name) + "'");
}

OrderedJson group_params_json(const GroupSpec &g)
{
  OrderedJson p = OrderedJson::object();
  switch (g.family) {
  case Family::PSL2:
    p["q"] = dec(g.parameter);
    p["p"] = dec(g.prime);
    p["e"] = dec(g.exponent);
    break;
  case Family::AffineSL:
    p["d"] = dec(g.parameter);
    break;
  case Family::Alternating:
  case Family::Mathieu:
    p["v"] = dec(g.degree);
    break;
  default:
    break;
  }
  return p;
}

GroupSpec group_from_json(std::string_view family, const OrderedJson &params)
{
  auto f = family_from_tag(family);
  if (!f)
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  if (!params.is_object())
    throw std::invalid_argument("certificate: params must be an object");
  GroupSpec g;
  switch (*f) {
  case Family::PSL2:
    g = make_psl2(nat_field(params, "q"));
    if (nat_field(params, "p") != g.prime || nat_field(params, "e") != g.exponent || params.size() != 3)
      throw std::invalid_argument("certificate: PSL2 params inconsistent with q");
    return g;
  case Family::AffineSL:
    if (params.size() != 1)
      throw std::invalid_argument("certificate: Affine_SL takes only d");
    return make_affine_sl(static_cast<unsigned>(nat_field(params, "d")));
  case Family::Alternating:
  case Family::Mathieu:
    if (params.size() != 1)
      throw std::invalid_argument("certificate: family takes only v");
    return make_group(*f, nat_field(params, "v"));
  default:
    if (!params.empty())
      throw std::invalid_argument("certificate: fixed family takes no params");
    return make_group(*f, 0);
  }
}

OrderedJson certificate_to_json(const Certificate &c)
{
  OrderedJson j;
  j["family"] = std::string(family_tag(c.group.family));
  j["params"] = group_params_json(c.group);
  j["v"] = dec(c.group.degree);
  if (c.single_k())
    j["k"] = dec(c.k_min);
  else
    j["k"] = OrderedJson::array({dec(c.k_min), dec(c.k_max)});
  j["reason"] = std::string(reason_tag(c.reason));
  OrderedJson w = OrderedJson::object();
  for (const auto &x : c.witnesses)
    w[x.name] = to_decimal(x.value);
  j["witnesses"] = std::move(w);
  if (!c.citation.empty())
    j["citation"] = c.citation;
  return j;
}

Certificate certificate_from_json(const OrderedJson &j, unsigned t)
{
  if (!j.is_object())
    throw std::invalid_argument("certificate: not an object");
  Certificate c;
  c.t = t;
  c.group = group_from_json(string_field(j, "family"), j.value("params", OrderedJson::object()));
  if (nat_field(j, "v") != c.group.degree)
    throw std::invalid_argument("certificate: v does not match the group degree");
  const auto &k = j.at("k");
  if (k.is_string()) {
    c.k_min = c.k_max = to_u64(parse_nat(k.get_ref<const std::string &>()));
  } else if (k.is_array() && k.size() == 2 && k[0].is_string() && k[1].is_string()) {
    c.k_min = to_u64(parse_nat(k[0].get_ref<const std::string &>()));
    c.k_max = to_u64(parse_nat(k[1].get_ref<const std::string &>()));
    if (c.k_min >= c.k_max)
      throw std::invalid_argument("certificate: k-range must be increasing");
  } else {
    throw std::invalid_argument("certificate: k must be a decimal string or a two-element range");
  }
  auto reason = reason_from_tag(string_field(j, "reason"));
  if (!reason)
    throw std::invalid_argument("certificate: unknown reason");
  c.reason = *reason;
  const auto &w = j.at("witnesses");
  if (!w.is_object())
    throw std::invalid_argument("certificate: witnesses must be an object");
  for (auto it = w.begin(); it != w.end(); ++it) {
    if (!it->is_string())
      throw std::invalid_argument("certificate: witness '" + it.key() + "' is not a decimal string");
    c.add(it.key(), parse_nat(it->get_ref<const std::string &>()));
  }
  if (auto cit = j.find("citation"); cit != j.end()) {
    if (!cit->is_string())
      throw std::invalid_argument("certificate: citation must be a string");
    c.citation = cit->get<std::string>();
  }
  return c;
}

OrderedJson survivor_to_json(const Survivor &s)
{
  OrderedJson j;
  j["family"] = std::string(family_tag(s.group.family));
  j["params"] = group_params_json(s.group);
  j["v"] = dec(s.group.degree);
  j["k"] = dec(s.k);
  j["detail"] = s.detail;
  return j;
}

void write_sweep_json(std::ostream &os, const SweepResult &result)
{
  os << "{\"spec_version\":\"1\",\"t\":\"" << result.t << "\",\"v_max\":\"" << result.v_max << "\",\n";
  auto list = [&os](const char *key, const auto &items, auto to_json) {
    os << '"' << key << "\":[";
    for (std::size_t i = 0; i < items.size(); ++i)
      os << (i ? ",\n" : "\n") << to_json(items[i]).dump();
    os << (items.empty() ? "]" : "\n]");
  };
  list("certificates", result.certificates, certificate_to_json);
  os << ",\n";
  list("survivors", result.survivors, survivor_to_json);
  os << ",\n";
  list("external", result.externally_cited, certificate_to_json);
  os << "}\n";
}

std::string describe(const Certificate &c)
{
  std::ostringstream os;
  os << c.group.name() << " v=" << c.group.degree << " k=";
  if (c.single_k())
    os << c.k_min;
  else
    os << c.k_min << ".." << c.k_max;
  os << ' ' << reason_tag(c.reason);
  if (!c.witnesses.empty()) {
    os << " [";
    for (std::size_t i = 0; i < c.witnesses.size(); ++i)
      os << (i ? ", " : "") << c.witnesses[i].name << '=' << c.witnesses[i].value;
    os << ']';
  }
  if (!c.citation.empty())
    os << " (" << c.citation << ')';
  return os.str();
}

} // namespace steiner
