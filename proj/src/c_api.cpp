#include "sagin/sagin.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "sagin/config.hpp"
#include "sagin/harness.hpp"
#include "sagin/report.hpp"

struct sagin_config {
  sagin::SystemConfig value;
};

struct sagin_sweep {
  sagin::SweepResult value;
};

namespace {

thread_local std::string g_last_error;

sagin_status fail(sagin_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps exceptions escaping the core onto status codes.
template <class F>
sagin_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sagin::ConfigError& e) {
    return fail(SAGIN_ERR_CONFIG, e.what());
  } catch (const sagin::IoError& e) {
    return fail(SAGIN_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SAGIN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SAGIN_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SAGIN_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(SAGIN_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(SAGIN_ERR_RUNTIME, "unknown error");
  }
}

sagin_status copy_out(const std::string& s, char* buf, size_t* len) {
  if (len == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "len must not be null");
  const size_t need = s.size() + 1;
  if (buf == nullptr || *len < need) {
    *len = need;
    return fail(SAGIN_ERR_BUFFER_TOO_SMALL, "buffer too small");
  }
  std::memcpy(buf, s.c_str(), need);
  *len = need;
  return SAGIN_OK;
}

sagin::FrameworkKind to_kind(sagin_framework f) {
  switch (f) {
    case SAGIN_FRAMEWORK_CUD: return sagin::FrameworkKind::kCud;
    case SAGIN_FRAMEWORK_EGC_SAGIN: return sagin::FrameworkKind::kEgcSagin;
    case SAGIN_FRAMEWORK_LEO_GBS: return sagin::FrameworkKind::kLeoGbs;
    case SAGIN_FRAMEWORK_GBS_ONLY: return sagin::FrameworkKind::kGbsOnly;
  }
  throw std::invalid_argument("unknown framework value " + std::to_string(static_cast<int>(f)));
}

sagin_framework from_kind(sagin::FrameworkKind k) {
  switch (k) {
    case sagin::FrameworkKind::kCud: return SAGIN_FRAMEWORK_CUD;
    case sagin::FrameworkKind::kEgcSagin: return SAGIN_FRAMEWORK_EGC_SAGIN;
    case sagin::FrameworkKind::kLeoGbs: return SAGIN_FRAMEWORK_LEO_GBS;
    case sagin::FrameworkKind::kGbsOnly: return SAGIN_FRAMEWORK_GBS_ONLY;
  }
  return SAGIN_FRAMEWORK_CUD;
}

}  // namespace

extern "C" {

const char* sagin_version(void) { return "1.0.0"; }

const char* sagin_last_error(void) { return g_last_error.c_str(); }

const char* sagin_status_string(sagin_status status) {
  switch (status) {
    case SAGIN_OK: return "ok";
    case SAGIN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SAGIN_ERR_CONFIG: return "configuration error";
    case SAGIN_ERR_IO: return "I/O error";
    case SAGIN_ERR_RUNTIME: return "runtime error";
    case SAGIN_ERR_OUT_OF_RANGE: return "index out of range";
    case SAGIN_ERR_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown status";
}

const char* sagin_framework_name(sagin_framework framework) {
  try {
    return sagin::framework_id(to_kind(framework));
  } catch (...) {
    return nullptr;
  }
}

sagin_status sagin_framework_parse(const char* name, sagin_framework* out) {
  if (name == nullptr || out == nullptr) {
    return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  }
  const auto kind = sagin::parse_framework(name);
  if (!kind) return fail(SAGIN_ERR_INVALID_ARGUMENT, std::string("unknown framework '") + name + "'");
  *out = from_kind(*kind);
  return SAGIN_OK;
}

sagin_status sagin_config_create_default(sagin_config** out) {
  if (out == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "out must not be null");
  return guarded([&] {
    *out = new sagin_config{sagin::load_defaults()};
    return SAGIN_OK;
  });
}

sagin_status sagin_config_load(const char* path, sagin_config** out) {
  if (path == nullptr || out == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sagin_config{sagin::load_config_file(path)};
    return SAGIN_OK;
  });
}

sagin_status sagin_config_parse(const char* text, sagin_config** out) {
  if (text == nullptr || out == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sagin_config{sagin::parse_config(text)};
    return SAGIN_OK;
  });
}

void sagin_config_destroy(sagin_config* config) { delete config; }

sagin_status sagin_config_set(sagin_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr) {
    return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    sagin::set_config_value(config->value, key, value);
    return SAGIN_OK;
  });
}

sagin_status sagin_config_get(const sagin_config* config, const char* key, char* buf,
                              size_t* len) {
  if (config == nullptr || key == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_out(sagin::get_config_value(config->value, key), buf, len); });
}

sagin_status sagin_config_serialize(const sagin_config* config, char* buf, size_t* len) {
  if (config == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_out(sagin::serialize_config(config->value), buf, len); });
}

sagin_status sagin_config_validate(const sagin_config* config, size_t* n_violations) {
  if (config == nullptr || n_violations == nullptr) {
    return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto v = sagin::validate(config->value);
    *n_violations = v.size();
    if (!v.empty()) g_last_error = v.front().message();
    return SAGIN_OK;
  });
}

sagin_status sagin_config_violation(const sagin_config* config, size_t index, char* buf,
                                    size_t* len) {
  if (config == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto v = sagin::validate(config->value);
    if (index >= v.size()) return fail(SAGIN_ERR_OUT_OF_RANGE, "violation index out of range");
    return copy_out(v[index].message(), buf, len);
  });
}

void sagin_sweep_options_init(sagin_sweep_options* options) {
  if (options == nullptr) return;
  *options = sagin_sweep_options{};
  options->use_config_seed = 1;
  options->n_workers = 1;
}

sagin_status sagin_sweep_run(const sagin_config* config, const sagin_sweep_options* options,
                             sagin_sweep** out) {
  if (config == nullptr || options == nullptr || out == nullptr) {
    return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    if (const auto v = sagin::validate(config->value); !v.empty()) {
      return fail(SAGIN_ERR_CONFIG, "invalid config: " + v.front().message());
    }
    std::vector<int> counts;
    if (options->user_counts != nullptr && options->n_user_counts > 0) {
      counts.assign(options->user_counts, options->user_counts + options->n_user_counts);
    } else {
      counts.push_back(config->value.n_users);
    }
    std::vector<sagin::FrameworkKind> frameworks;
    if (options->frameworks != nullptr && options->n_frameworks > 0) {
      for (size_t i = 0; i < options->n_frameworks; ++i) {
        frameworks.push_back(to_kind(options->frameworks[i]));
      }
    } else {
      frameworks.assign(std::begin(sagin::kAllFrameworks), std::end(sagin::kAllFrameworks));
    }
    const std::size_t trials = options->n_trials > 0
                                   ? static_cast<std::size_t>(options->n_trials)
                                   : static_cast<std::size_t>(config->value.n_trials);
    const std::uint64_t seed = options->use_config_seed ? config->value.seed : options->seed;
    sagin::RunOptions run;
    run.n_workers = options->n_workers > 0 ? options->n_workers : 1;
    *out = new sagin_sweep{
        sagin::sweep_users(config->value, counts, frameworks, trials, seed, run)};
    return SAGIN_OK;
  });
}

void sagin_sweep_destroy(sagin_sweep* sweep) { delete sweep; }

size_t sagin_sweep_point_count(const sagin_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->value.points.size();
}

uint64_t sagin_sweep_trials(const sagin_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->value.n_trials;
}

sagin_status sagin_sweep_point(const sagin_sweep* sweep, size_t index, int* users,
                               sagin_framework* framework) {
  if (sweep == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= sweep->value.points.size()) {
    return fail(SAGIN_ERR_OUT_OF_RANGE, "point index out of range");
  }
  const auto& p = sweep->value.points[index];
  if (users != nullptr) *users = p.users;
  if (framework != nullptr) *framework = from_kind(p.framework);
  return SAGIN_OK;
}

sagin_status sagin_sweep_estimate(const sagin_sweep* sweep, size_t index, sagin_metric metric,
                                  double* mean, double* ci95) {
  if (sweep == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= sweep->value.points.size()) {
    return fail(SAGIN_ERR_OUT_OF_RANGE, "point index out of range");
  }
  const auto& p = sweep->value.points[index];
  sagin::Estimate e;
  switch (metric) {
    case SAGIN_METRIC_CAPACITY_BPS: e = p.capacity_bps; break;
    case SAGIN_METRIC_EE_BPS_PER_W: e = p.ee_bps_per_w; break;
    default: return fail(SAGIN_ERR_INVALID_ARGUMENT, "unknown metric");
  }
  if (mean != nullptr) *mean = e.mean;
  if (ci95 != nullptr) *ci95 = e.ci95;
  return SAGIN_OK;
}

sagin_status sagin_sweep_write_csv(const sagin_sweep* sweep, const char* path) {
  if (sweep == nullptr || path == nullptr) return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    sagin::write_csv(sweep->value, path);
    return SAGIN_OK;
  });
}

sagin_status sagin_sweep_write_svg(const sagin_sweep* sweep, const char* path_prefix) {
  if (sweep == nullptr || path_prefix == nullptr) {
    return fail(SAGIN_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    sagin::emit_plot(sweep->value, path_prefix);
    return SAGIN_OK;
  });
}

}  // extern "C"
