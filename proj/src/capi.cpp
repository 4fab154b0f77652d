#include "qlie.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>

#include <json.hpp>

#include "qlie/catalog.hpp"
#include "qlie/classify.hpp"
#include "qlie/constructions.hpp"
#include "qlie/derivations.hpp"
#include "qlie/io.hpp"

struct qlie_algebra {
  qlie::QuadraticLieAlgebra value;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string g_last_error = "no error";

qlie_status status_of(qlie::errc c) {
  using qlie::errc;
  switch (c) {
    case errc::parse_error: return QLIE_ERR_PARSE;
    case errc::index_error: return QLIE_ERR_INDEX;
    case errc::division_by_zero: return QLIE_ERR_DIVISION_BY_ZERO;
    case errc::dimension_mismatch: return QLIE_ERR_DIMENSION_MISMATCH;
    case errc::inconsistent_system: return QLIE_ERR_INCONSISTENT;
    case errc::singular_map: return QLIE_ERR_SINGULAR_MAP;
    case errc::invalid_algebra: return QLIE_ERR_INVALID_ALGEBRA;
    case errc::not_solvable: return QLIE_ERR_NOT_SOLVABLE;
    case errc::unsupported_dimension: return QLIE_ERR_UNSUPPORTED_DIMENSION;
    case errc::not_isotropic: return QLIE_ERR_NOT_ISOTROPIC;
    case errc::degenerate_form: return QLIE_ERR_DEGENERATE_FORM;
    case errc::no_square_root: return QLIE_ERR_NO_SQUARE_ROOT;
    case errc::not_skew_derivation: return QLIE_ERR_NOT_SKEW_DERIVATION;
    case errc::not_skew: return QLIE_ERR_NOT_SKEW;
    case errc::not_inner: return QLIE_ERR_NOT_INNER;
    case errc::not_lie_algebra: return QLIE_ERR_NOT_LIE_ALGEBRA;
    case errc::no_frame: return QLIE_ERR_NO_FRAME;
    case errc::kernel_not_in_image: return QLIE_ERR_KERNEL_NOT_IN_IMAGE;
    case errc::unexpected_orbit: return QLIE_ERR_UNEXPECTED_ORBIT;
    case errc::bad_parameter: return QLIE_ERR_BAD_PARAMETER;
    case errc::resample_exhausted: return QLIE_ERR_RESAMPLE_EXHAUSTED;
  }
  return QLIE_ERR_INTERNAL;
}

template <typename F>
qlie_status guarded(F&& body) {
  try {
    body();
    return QLIE_OK;
  } catch (const qlie::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QLIE_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QLIE_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

json label_json(const qlie::ClassLabel& label) {
  json c = json::object();
  c["family"] = qlie::family_name(label.family);
  if (label.kappa) c["kappa"] = qlie::to_string(*label.kappa);
  if (label.lambda) c["lambda"] = qlie::to_string(*label.lambda);
  return c;
}

} // namespace

extern "C" {

const char* qlie_status_name(qlie_status status) {
  switch (status) {
    case QLIE_OK: return "OK";
    case QLIE_ERR_PARSE: return "ParseError";
    case QLIE_ERR_INDEX: return "IndexError";
    case QLIE_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case QLIE_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case QLIE_ERR_INCONSISTENT: return "Inconsistent";
    case QLIE_ERR_SINGULAR_MAP: return "SingularMap";
    case QLIE_ERR_INVALID_ALGEBRA: return "InvalidAlgebra";
    case QLIE_ERR_NOT_SOLVABLE: return "NotSolvable";
    case QLIE_ERR_UNSUPPORTED_DIMENSION: return "UnsupportedDimension";
    case QLIE_ERR_NOT_ISOTROPIC: return "NotIsotropic";
    case QLIE_ERR_DEGENERATE_FORM: return "DegenerateForm";
    case QLIE_ERR_NO_SQUARE_ROOT: return "NoSquareRoot";
    case QLIE_ERR_NOT_SKEW_DERIVATION: return "NotSkewDerivation";
    case QLIE_ERR_NOT_SKEW: return "NotSkew";
    case QLIE_ERR_NOT_INNER: return "NotInner";
    case QLIE_ERR_NOT_LIE_ALGEBRA: return "NotLieAlgebra";
    case QLIE_ERR_NO_FRAME: return "NoFrame";
    case QLIE_ERR_KERNEL_NOT_IN_IMAGE: return "KernelNotInImage";
    case QLIE_ERR_UNEXPECTED_ORBIT: return "UnexpectedOrbit";
    case QLIE_ERR_BAD_PARAMETER: return "BadParameter";
    case QLIE_ERR_RESAMPLE_EXHAUSTED: return "ResampleExhausted";
    case QLIE_ERR_NOMEM: return "OutOfMemory";
    case QLIE_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* qlie_last_error(void) { return g_last_error.c_str(); }

void qlie_string_free(char* s) { std::free(s); }

void qlie_algebra_free(qlie_algebra* a) { delete a; }

qlie_status qlie_algebra_parse(const char* bytes, size_t len, qlie_algebra** out) {
  return guarded([&] {
    if (!bytes || !out) qlie::fail(qlie::errc::bad_parameter, "null argument");
    std::string_view view = (len == SIZE_MAX) ? std::string_view(bytes)
                                              : std::string_view(bytes, len);
    *out = new qlie_algebra{qlie::parse_algebra(view)};
  });
}

qlie_status qlie_algebra_write(const qlie_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) qlie::fail(qlie::errc::bad_parameter, "null argument");
    *out_json = copy_out(qlie::write_algebra(a->value));
  });
}

qlie_status qlie_catalog_make(const char* name, const char* lambda, qlie_algebra** out) {
  return guarded([&] {
    if (!name || !out) qlie::fail(qlie::errc::bad_parameter, "null argument");
    std::optional<qlie::Scalar> param;
    if (lambda) param = qlie::parse_scalar(lambda);
    *out = new qlie_algebra{qlie::make_catalog(name, param)};
  });
}

size_t qlie_algebra_dim(const qlie_algebra* a) { return a ? a->value.dim() : 0; }

qlie_status qlie_validate(const qlie_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) qlie::fail(qlie::errc::bad_parameter, "null argument");
    qlie::ValidationReport rep = qlie::validate(a->value);
    json j = json::object();
    j["valid"] = rep.pass();
    json ax = json::object();
    ax["antisymmetry"] = rep.antisymmetry;
    ax["jacobi"] = rep.jacobi;
    ax["gram_symmetric"] = rep.gram_symmetric;
    ax["gram_nondegenerate"] = rep.gram_nondegenerate;
    ax["invariance"] = rep.invariance;
    j["axioms"] = std::move(ax);
    j["first_failure"] = rep.first_failure;
    *out_json = copy_out(j.dump());
  });
}

qlie_status qlie_info(const qlie_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) qlie::fail(qlie::errc::bad_parameter, "null argument");
    const auto& g = a->value;
    qlie::DerivedSeries series = qlie::derived_series(g);
    json j = json::object();
    j["dim"] = g.dim();
    j["center_dim"] = qlie::center(g).dim();
    json dims = json::array();
    for (const auto& term : series.terms) dims.push_back(term.dim());
    j["derived_series_dims"] = std::move(dims);
    j["solvable"] = series.solvable;
    j["reduced"] = qlie::is_reduced(g);
    *out_json = copy_out(j.dump());
  });
}

qlie_status qlie_classify(const qlie_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) qlie::fail(qlie::errc::bad_parameter, "null argument");
    json comps = json::array();
    for (const auto& label : qlie::classify(a->value)) comps.push_back(label_json(label));
    json j = json::object();
    j["components"] = std::move(comps);
    *out_json = copy_out(j.dump());
  });
}

qlie_status qlie_decompose(const qlie_algebra* a, qlie_algebra*** out, size_t* count) {
  return guarded([&] {
    if (!a || !out || !count) qlie::fail(qlie::errc::bad_parameter, "null argument");
    auto parts = qlie::decompose(a->value);
    qlie_algebra** list =
        static_cast<qlie_algebra**>(std::malloc(sizeof(qlie_algebra*) * std::max<size_t>(parts.size(), 1)));
    if (!list) throw std::bad_alloc();
    for (size_t k = 0; k < parts.size(); ++k) list[k] = new qlie_algebra{std::move(parts[k])};
    *out = list;
    *count = parts.size();
  });
}

void qlie_algebra_array_free(qlie_algebra** list, size_t count) {
  if (!list) return;
  for (size_t k = 0; k < count; ++k) delete list[k];
  std::free(list);
}

qlie_status qlie_skew_derivations(const qlie_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) qlie::fail(qlie::errc::bad_parameter, "null argument");
    json arr = json::array();
    for (const auto& d : qlie::skew_derivation_basis(a->value))
      arr.push_back(json::parse(qlie::write_matrix(d)));
    json j = json::object();
    j["dim"] = a->value.dim();
    j["basis"] = std::move(arr);
    *out_json = copy_out(j.dump(2) + "\n");
  });
}

qlie_status qlie_double_extension(const qlie_algebra* a, const char* matrix_json,
                                  qlie_algebra** out) {
  return guarded([&] {
    if (!a || !matrix_json || !out) qlie::fail(qlie::errc::bad_parameter, "null argument");
    qlie::Matrix c = qlie::parse_matrix(matrix_json);
    *out = new qlie_algebra{qlie::double_extension(a->value, c)};
  });
}

qlie_status qlie_conjugate(const qlie_algebra* a, uint64_t seed, qlie_algebra** out) {
  return guarded([&] {
    if (!a || !out) qlie::fail(qlie::errc::bad_parameter, "null argument");
    qlie::LinearMap iso = qlie::random_isometry(a->value, seed);
    *out = new qlie_algebra{qlie::transport(a->value, iso)};
  });
}

} // extern "C"
