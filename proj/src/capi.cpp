#include "qautv.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "json.hpp"
#include "qv/bs_embed.hpp"
#include "qv/dynamics.hpp"
#include "qv/embeddings.hpp"
#include "qv/error.hpp"
#include "qv/qaut.hpp"
#include "qv/rng.hpp"
#include "qv/selfcheck.hpp"
#include "qv/serialization.hpp"
#include "qv/velement.hpp"

struct qv_velem {
  qv::VElement value;
};

struct qv_qelem {
  qv::QAutElement value;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string g_last_error;

qv_status status_from(qv::ErrorCode code) {
  switch (code) {
    case qv::ErrorCode::ParseError: return QV_EPARSE;
    case qv::ErrorCode::InvalidAntichain: return QV_EINVALID_ANTICHAIN;
    case qv::ErrorCode::IncompleteCover: return QV_EINCOMPLETE_COVER;
    case qv::ErrorCode::NotBijection: return QV_ENOT_BIJECTION;
    case qv::ErrorCode::IncompleteInput: return QV_EINCOMPLETE_INPUT;
    case qv::ErrorCode::NotAMember: return QV_ENOT_A_MEMBER;
    case qv::ErrorCode::UndefinedOnVertex: return QV_EUNDEFINED_ON_VERTEX;
    case qv::ErrorCode::MalformedDecomposition:
      return QV_EMALFORMED_DECOMPOSITION;
    case qv::ErrorCode::InvalidDepth: return QV_EINVALID_DEPTH;
    case qv::ErrorCode::IsTorsion: return QV_EIS_TORSION;
    case qv::ErrorCode::HasNontrivialFiniteOrbits:
      return QV_EHAS_NONTRIVIAL_FINITE_ORBITS;
    case qv::ErrorCode::InvalidOrder: return QV_EINVALID_ORDER;
    case qv::ErrorCode::BoundExceeded: return QV_EBOUND_EXCEEDED;
    case qv::ErrorCode::InvariantFalsified: return QV_EINVARIANT_FALSIFIED;
    case qv::ErrorCode::LimitExceeded: return QV_ELIMIT_EXCEEDED;
    case qv::ErrorCode::InvalidArgument: return QV_EINVALID_ARGUMENT;
  }
  return QV_EINTERNAL;
}

template <class F>
qv_status guarded(F&& f) {
  try {
    return f();
  } catch (const qv::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QV_EINTERNAL;
  }
}

qv_status invalid(const char* message) {
  g_last_error = message;
  return QV_EINVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ordered_json word_pairs_json(const std::vector<std::pair<qv::Word, qv::Word>>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, b] : pairs) {
    out.push_back({a.text(), b.text()});
  }
  return out;
}

ordered_json words_json(const std::vector<qv::Word>& words) {
  ordered_json out = ordered_json::array();
  for (const qv::Word& w : words) out.push_back(w.text());
  return out;
}

ordered_json germs_json(const std::set<qv::SuffixGerm>& germs) {
  ordered_json out = ordered_json::array();
  for (const qv::SuffixGerm& g : germs) {
    out.push_back({g.source.text(), g.target.text()});
  }
  return out;
}

ordered_json certificate_json(const qv::FixedPointCertificate& cert) {
  return ordered_json{{"domain", cert.domain.text()},
                      {"range", cert.range.text()},
                      {"point", {{"head", cert.point.head()},
                                 {"cycle", cert.point.cycle()}}},
                      {"exponent", cert.exponent},
                      {"attracting", cert.attracting}};
}

ordered_json pingpong_json(const qv::PingPongCertificate& cert) {
  ordered_json cones = ordered_json::array();
  for (const qv::Word& w : cert.b_cones) cones.push_back(w.text());
  return ordered_json{{"m", cert.m},
                      {"u_plus", cert.u_plus.text()},
                      {"u_minus", cert.u_minus.text()},
                      {"b_cones", cones},
                      {"disjoint_ok", cert.disjoint_ok},
                      {"order_ok", cert.order_ok},
                      {"rotation_ok", cert.rotation_ok},
                      {"forward_ok", cert.forward_ok},
                      {"backward_ok", cert.backward_ok},
                      {"passed", cert.passed()}};
}

ordered_json witness_json(const qv::BSWitness& w) {
  return ordered_json{{"m", w.m},
                      {"e", w.e},
                      {"relation_holds", w.relation_holds},
                      {"a_infinite_order", !w.a_torsion.torsion},
                      {"a_power_nontrivial", w.a_power_nontrivial},
                      {"pingpong", pingpong_json(w.pingpong)}};
}

}  // namespace

extern "C" {

const char* qv_status_name(qv_status status) {
  switch (status) {
    case QV_OK: return "QV_OK";
    case QV_EPARSE: return "QV_EPARSE";
    case QV_EINVALID_ANTICHAIN: return "QV_EINVALID_ANTICHAIN";
    case QV_EINCOMPLETE_COVER: return "QV_EINCOMPLETE_COVER";
    case QV_ENOT_BIJECTION: return "QV_ENOT_BIJECTION";
    case QV_EINCOMPLETE_INPUT: return "QV_EINCOMPLETE_INPUT";
    case QV_ENOT_A_MEMBER: return "QV_ENOT_A_MEMBER";
    case QV_EUNDEFINED_ON_VERTEX: return "QV_EUNDEFINED_ON_VERTEX";
    case QV_EMALFORMED_DECOMPOSITION: return "QV_EMALFORMED_DECOMPOSITION";
    case QV_EINVALID_DEPTH: return "QV_EINVALID_DEPTH";
    case QV_EIS_TORSION: return "QV_EIS_TORSION";
    case QV_EHAS_NONTRIVIAL_FINITE_ORBITS:
      return "QV_EHAS_NONTRIVIAL_FINITE_ORBITS";
    case QV_EINVALID_ORDER: return "QV_EINVALID_ORDER";
    case QV_EBOUND_EXCEEDED: return "QV_EBOUND_EXCEEDED";
    case QV_EINVARIANT_FALSIFIED: return "QV_EINVARIANT_FALSIFIED";
    case QV_ELIMIT_EXCEEDED: return "QV_ELIMIT_EXCEEDED";
    case QV_EINVALID_ARGUMENT: return "QV_EINVALID_ARGUMENT";
    case QV_EINTERNAL: return "QV_EINTERNAL";
  }
  return "QV_EINTERNAL";
}

const char* qv_last_error(void) { return g_last_error.c_str(); }

const char* qv_version(void) { return "0.1.0"; }

void qv_string_free(char* s) { std::free(s); }

/* ---- prefix-replacement elements ---- */

qv_status qv_velem_parse_text(const char* text, qv_velem** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::parse_v_text(text)};
    return QV_OK;
  });
}

qv_status qv_velem_parse_json(const char* text, qv_velem** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::parse_v_json(text)};
    return QV_OK;
  });
}

qv_status qv_velem_to_text(const qv_velem* v, char** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(qv::serialize_v_text(v->value));
    return QV_OK;
  });
}

qv_status qv_velem_to_json(const qv_velem* v, char** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(qv::serialize_v_json(v->value));
    return QV_OK;
  });
}

qv_status qv_velem_identity(qv_velem** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::VElement::identity()};
    return QV_OK;
  });
}

qv_status qv_velem_random(uint64_t seed, size_t carets, qv_velem** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::VElement::random_element(seed, carets)};
    return QV_OK;
  });
}

qv_status qv_velem_compose(const qv_velem* first, const qv_velem* second,
                           qv_velem** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::compose(first->value, second->value)};
    return QV_OK;
  });
}

qv_status qv_velem_inverse(const qv_velem* v, qv_velem** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{v->value.inverse()};
    return QV_OK;
  });
}

qv_status qv_velem_power(const qv_velem* v, long long k, qv_velem** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{v->value.power(k)};
    return QV_OK;
  });
}

qv_status qv_velem_equals(const qv_velem* a, const qv_velem* b, int* out) {
  if (!a || !b || !out) return invalid("null argument");
  *out = a->value == b->value ? 1 : 0;
  return QV_OK;
}

qv_status qv_velem_is_identity(const qv_velem* v, int* out) {
  if (!v || !out) return invalid("null argument");
  *out = v->value.is_identity() ? 1 : 0;
  return QV_OK;
}

qv_status qv_velem_apply(const qv_velem* v, const char* word, char** out) {
  if (!v || !word || !out) return invalid("null argument");
  return guarded([&] {
    qv::Word w = qv::Word::from_text(word);
    *out = dup_string(v->value.apply(w).text());
    return QV_OK;
  });
}

void qv_velem_free(qv_velem* v) { delete v; }

/* ---- quasi-automorphisms ---- */

qv_status qv_qelem_parse_json(const char* text, qv_qelem** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_qelem{qv::parse_qaut_json(text)};
    return QV_OK;
  });
}

qv_status qv_qelem_to_json(const qv_qelem* q, char** out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(qv::serialize_qaut_json(q->value));
    return QV_OK;
  });
}

qv_status qv_qelem_identity(qv_qelem** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_qelem{qv::QAutElement::identity()};
    return QV_OK;
  });
}

qv_status qv_qelem_random(uint64_t seed, size_t max_level, qv_qelem** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    qv::Rng rng(seed);
    *out = new qv_qelem{qv::QAutElement::random_element(rng, max_level)};
    return QV_OK;
  });
}

qv_status qv_qelem_compose(const qv_qelem* first, const qv_qelem* second,
                           qv_qelem** out) {
  if (!first || !second || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_qelem{qv::compose(first->value, second->value)};
    return QV_OK;
  });
}

qv_status qv_qelem_inverse(const qv_qelem* q, qv_qelem** out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_qelem{q->value.inverse()};
    return QV_OK;
  });
}

qv_status qv_qelem_equals(const qv_qelem* a, const qv_qelem* b, int* out) {
  if (!a || !b || !out) return invalid("null argument");
  *out = a->value == b->value ? 1 : 0;
  return QV_OK;
}

qv_status qv_qelem_is_identity(const qv_qelem* q, int* out) {
  if (!q || !out) return invalid("null argument");
  *out = q->value.is_identity() ? 1 : 0;
  return QV_OK;
}

qv_status qv_qelem_apply(const qv_qelem* q, const char* word, char** out) {
  if (!q || !word || !out) return invalid("null argument");
  return guarded([&] {
    qv::Word w = qv::Word::from_text(word);
    *out = dup_string(q->value.apply(w).text());
    return QV_OK;
  });
}

qv_status qv_qelem_cutoff_level(const qv_qelem* q, long long* out) {
  if (!q || !out) return invalid("null argument");
  *out = static_cast<long long>(q->value.cutoff_level());
  return QV_OK;
}

qv_status qv_qelem_cutoff_json(const qv_qelem* q, char** out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    ordered_json doc;
    doc["level"] = q->value.cutoff_level();
    doc["violations"] = words_json(q->value.violation_set());
    doc["cross_check"] = words_json(q->value.z_set());
    doc["cross_check_level"] = q->value.cutoff_from_z();
    doc["levels_agree"] =
        q->value.cutoff_level() == q->value.cutoff_from_z();
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

qv_status qv_qelem_decompose_json(const qv_qelem* q, char** out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    const qv::MinimalDecomposition& md = q->value.minimal_decomposition();
    ordered_json doc;
    doc["level"] = q->value.cutoff_level();
    doc["v_min"] = word_pairs_json(md.v_min.table());
    doc["b"] = word_pairs_json(md.b);
    doc["p"] = word_pairs_json(md.p);
    doc["germs"] = germs_json(q->value.gamma_germs());
    doc["essential_germs"] = germs_json(q->value.essential_germs());
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

void qv_qelem_free(qv_qelem* q) { delete q; }

/* ---- embeddings ---- */

qv_status qv_theta(const qv_velem* v, qv_qelem** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_qelem{qv::theta(v->value)};
    return QV_OK;
  });
}

qv_status qv_phi(const qv_qelem* q, qv_velem** out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::phi(q->value)};
    return QV_OK;
  });
}

qv_status qv_phi_at_level(const qv_qelem* q, size_t level, qv_velem** out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    *out = new qv_velem{qv::phi_at_level(q->value, level)};
    return QV_OK;
  });
}

qv_status qv_theta_well_defined(const qv_velem* v, size_t expansions,
                                uint64_t seed, int* out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    qv::Rng rng(seed);
    *out = qv::verify_theta_well_defined(v->value, expansions, rng) ? 1 : 0;
    return QV_OK;
  });
}

qv_status qv_phi_well_defined(const qv_qelem* q, size_t extra_levels,
                              int* out) {
  if (!q || !out) return invalid("null argument");
  return guarded([&] {
    *out = qv::verify_phi_well_defined(q->value, extra_levels) ? 1 : 0;
    return QV_OK;
  });
}

/* ---- dynamics ---- */

qv_status qv_dyn_fixed_json(const qv_velem* v, char** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    ordered_json arr = ordered_json::array();
    for (const qv::FixedPointCertificate& cert : qv::fixed_points(v->value)) {
      arr.push_back(certificate_json(cert));
    }
    ordered_json doc;
    doc["fixed_points"] = arr;
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

qv_status qv_dyn_periods_json(const qv_velem* v, char** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    ordered_json doc;
    doc["lengths"] = qv::periodic_orbit_lengths(v->value);
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

qv_status qv_dyn_torsion_json(const qv_velem* v, char** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    qv::TorsionVerdict verdict = qv::torsion_test(v->value);
    ordered_json doc;
    doc["torsion"] = verdict.torsion;
    if (verdict.torsion) {
      doc["order"] = verdict.value;
    } else {
      doc["witness_power"] = verdict.value;
      doc["certificate"] = certificate_json(*verdict.certificate);
    }
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

qv_status qv_dyn_spectrum_json(const qv_velem* v, char** out) {
  if (!v || !out) return invalid("null argument");
  return guarded([&] {
    qv::StabilizedPower sp = qv::stabilizing_power(v->value);
    qv::SlopeSpectrum spectrum = qv::slope_spectrum(sp.alpha);
    ordered_json doc;
    doc["m"] = sp.m;
    doc["s1"] = spectrum.values;
    doc["k"] = spectrum.max_abs();
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

qv_status qv_dyn_conj_check_json(const qv_velem* v, const qv_velem* w,
                                 long long r, long long s, char** out) {
  if (!v || !w || !out) return invalid("null argument");
  return guarded([&] {
    qv::ConjugatePowerResult result =
        qv::conjugate_power_check(v->value, w->value, r, s);
    ordered_json doc;
    doc["holds"] = result.holds;
    doc["r"] = r;
    doc["s"] = s;
    if (result.torsion.has_value()) {
      doc["torsion"] = *result.torsion;
      if (!*result.torsion) {
        doc["m"] = result.m;
        doc["s1"] = result.s1;
        doc["k"] = result.k;
      }
    }
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

/* ---- Baumslag-Solitar witnesses ---- */

qv_status qv_bs_gen(size_t m, int e, char** a_text, char** b_text,
                    char** report_json) {
  if (!a_text || !b_text || !report_json) return invalid("null argument");
  return guarded([&] {
    qv::BSWitness witness = qv::bs_generators(m, e);
    *a_text = dup_string(qv::serialize_v_text(witness.a));
    *b_text = dup_string(qv::serialize_v_text(witness.b));
    *report_json = dup_string(witness_json(witness).dump());
    return QV_OK;
  });
}

qv_status qv_bs_verify_json(size_t m, int e, size_t britton_length,
                            char** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    qv::BSWitness witness = qv::bs_generators(m, e);
    ordered_json doc = witness_json(witness);
    if (britton_length > 0) {
      qv::BrittonReport report =
          qv::britton_nontriviality(witness, britton_length);
      doc["britton"] = {{"max_length", report.max_length},
                        {"words_checked", report.words_checked},
                        {"all_nontrivial", report.all_nontrivial},
                        {"failing_word", report.failing_word}};
    }
    *out = dup_string(doc.dump());
    return QV_OK;
  });
}

/* ---- acceptance suite ---- */

qv_status qv_selfcheck(uint64_t seed, long long samples, int as_json,
                       char** report, int* all_passed) {
  if (!report || !all_passed) return invalid("null argument");
  return guarded([&] {
    qv::SelfCheckReport result = qv::run_acceptance(seed, samples);
    *report = dup_string(as_json ? result.to_json() : result.to_text());
    *all_passed = result.all_passed() ? 1 : 0;
    return QV_OK;
  });
}

}  // extern "C"
