#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "catwords/counters.hpp"
#include "catwords/enumerate.hpp"
#include "catwords/genfun.hpp"
#include "catwords/golden.hpp"
#include "json.hpp"

namespace catwords::cli {

namespace {

constexpr Method kAllMethods[] = {Method::Closed, Method::Recurrence, Method::Genfun,
                                  Method::Oracle};

bool applies(const VincularPattern& p, Method m) {
  switch (m) {
    case Method::Oracle: return p.length() > 0;
    case Method::Recurrence: return has_recurrence(p);
    case Method::Closed: return has_closed_form(p);
    case Method::Genfun: return has_genfun(p);
  }
  return false;
}

std::string method_list(const VincularPattern& p) {
  std::string out;
  for (Method m : applicable_methods(p)) {
    if (!out.empty()) out += ", ";
    out += method_name(m);
  }
  return out;
}

ReportRow* find_row(std::vector<ReportRow>& rows, int n) {
  for (auto& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

// Every value a pattern's rows need, computed method by method.
std::vector<ReportRow> pattern_rows(const std::string& name, const RunConfig& config) {
  const VincularPattern p = VincularPattern::parse(name);
  std::map<std::string, std::vector<BigInt>> golden;
  int top = config.max_n;
  for (const auto& rec : golden_records()) {
    if (rec.pattern != name) continue;
    golden[rec.source] = rec.values;
    top = std::max(top, static_cast<int>(rec.values.size()));
  }
  std::vector<ReportRow> rows;
  for (int n = 1; n <= top; ++n) rows.push_back({name, n, {}, true});

  auto wants = [&](Method m) {
    return applies(p, m) &&
           std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end();
  };
  if (wants(Method::Oracle)) {
    for (int n = 1; n <= config.max_n; ++n) {
      find_row(rows, n)->values["oracle"] = count_avoiders(n, p);
    }
  }
  if (wants(Method::Closed)) {
    for (auto& r : rows) r.values["closed"] = *closed_form(p, r.n);
  }
  if (wants(Method::Recurrence)) {
    const auto seq = sequence_by_recurrence(p, top);
    for (auto& r : rows) r.values["recurrence"] = seq[r.n - 1];
  }
  if (wants(Method::Genfun)) {
    const auto seq = genfun_counts(p, top);
    for (auto& r : rows) r.values["genfun"] = seq[r.n - 1];
  }
  for (const auto& [source, values] : golden) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      find_row(rows, static_cast<int>(i) + 1)->values[source] = values[i];
    }
  }
  for (auto& r : rows) {
    r.agree = std::all_of(r.values.begin(), r.values.end(), [&](const auto& kv) {
      return kv.second == r.values.begin()->second;
    });
  }
  return rows;
}

std::vector<std::string> value_columns(const std::vector<ReportRow>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows) {
    for (const auto& [k, v] : r.values) {
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    }
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

int unsupported(std::ostream& err, const std::string& what) {
  err << "error: " << what << "\n";
  return kUnsupported;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Recurrence: return "recurrence";
    case Method::Closed: return "closed";
    case Method::Genfun: return "genfun";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected oracle, recurrence, closed or genfun)");
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

RunConfig default_config() {
  RunConfig c;
  if (const char* env = std::getenv("CATWORDS_ORDER"); env && *env) {
    const int order = std::atoi(env);
    if (order >= 1) c.order = order;
  }
  return c;
}

const std::vector<std::string>& table_patterns() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& r : golden_records()) {
      if (r.source == "table1" || r.source == "table2") out.push_back(r.pattern);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return kNames;
}

std::vector<Method> applicable_methods(const VincularPattern& pattern) {
  std::vector<Method> out;
  for (Method m : kAllMethods) {
    if (applies(pattern, m)) out.push_back(m);
  }
  return out;
}

BigInt compute(const VincularPattern& pattern, int n, Method method) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!applies(pattern, method)) {
    throw UnsupportedPattern(std::string(method_name(method)) + " does not apply to " +
                             pattern.to_string());
  }
  switch (method) {
    case Method::Oracle: return count_avoiders(n, pattern);
    case Method::Recurrence: return count_by_recurrence(pattern, n);
    case Method::Closed: return *closed_form(pattern, n);
    case Method::Genfun: return genfun_counts(pattern, n).back();
  }
  return 0;
}

std::vector<BigInt> fastest_sequence(const VincularPattern& pattern, int max_n) {
  if (has_closed_form(pattern)) {
    std::vector<BigInt> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(*closed_form(pattern, n));
    return out;
  }
  if (has_recurrence(pattern)) return sequence_by_recurrence(pattern, max_n);
  if (has_genfun(pattern)) return genfun_counts(pattern, max_n);
  std::vector<BigInt> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(count_avoiders(n, pattern));
  return out;
}

std::vector<ReportRow> verify_rows(const RunConfig& config) {
  if (config.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  const auto& names = table_patterns();
  std::vector<std::vector<ReportRow>> parts(names.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) {
      try {
        parts[i] = pattern_rows(names[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads > 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, names.size());
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<ReportRow> rows;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(rows));
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.pattern, a.n) < std::tie(b.pattern, b.n);
  });
  return rows;
}

void write_report(const std::vector<ReportRow>& rows, Format format, std::ostream& out) {
  const auto cols = value_columns(rows);
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json values = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.values) values[k] = v.get_str();
        doc.push_back({{"pattern", r.pattern}, {"n", r.n}, {"values", values}, {"agree", r.agree}});
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << "pattern,n";
      for (const auto& c : cols) out << "," << c;
      out << ",agree\n";
      for (const auto& r : rows) {
        out << r.pattern << "," << r.n;
        for (const auto& c : cols) {
          const auto it = r.values.find(c);
          out << "," << (it == r.values.end() ? "" : it->second.get_str());
        }
        out << "," << (r.agree ? "true" : "false") << "\n";
      }
      break;
    }
    case Format::Text: {
      for (const auto& r : rows) {
        out << r.pattern << " " << r.n;
        for (const auto& [k, v] : r.values) out << " " << k << "=" << v;
        out << (r.agree ? " ok" : " MISMATCH") << "\n";
      }
      break;
    }
  }
}

int cmd_count(std::string_view pattern, int n, std::optional<Method> method, std::ostream& out,
              std::ostream& err) {
  const VincularPattern p = VincularPattern::parse(pattern);
  if (n < 1) {
    err << "error: n must be at least 1\n";
    return kUnsupported;
  }
  const auto methods = applicable_methods(p);
  const Method m = method.value_or(methods.front());
  if (!applies(p, m)) {
    return unsupported(err, std::string(method_name(m)) + " does not apply to " +
                                p.to_string() + "; applicable: " + method_list(p));
  }
  out << compute(p, n, m) << "\n";
  return kOk;
}

int cmd_series(std::string_view pattern, int order, std::ostream& out, std::ostream& err) {
  const VincularPattern p = VincularPattern::parse(pattern);
  if (order < 1) {
    err << "error: order must be at least 1\n";
    return kUnsupported;
  }
  if (!has_genfun(p) && !has_closed_form(p) && !has_recurrence(p)) {
    return unsupported(err, "no series route for " + p.to_string() +
                                "; applicable: " + method_list(p));
  }
  const auto seq = has_genfun(p) ? genfun_counts(p, order) : fastest_sequence(p, order);
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
  out << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto rows = verify_rows(config);
  write_report(rows, config.format, out);
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.agree; });
  err << rows.size() << " rows, " << table_patterns().size() << " patterns, " << bad
      << " mismatches\n";
  return bad == 0 ? kOk : kMismatch;
}

int cmd_bfile(std::string_view pattern, int max_n, const std::string& path, std::ostream& out,
              std::ostream& err) {
  const VincularPattern p = VincularPattern::parse(pattern);
  if (max_n < 1) {
    err << "error: max-n must be at least 1\n";
    return kUnsupported;
  }
  const auto seq = fastest_sequence(p, max_n);
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kIoError;
  }
  for (int n = 1; n <= max_n; ++n) file << n << " " << seq[n - 1] << "\n";
  file.close();
  if (!file) {
    err << "error: write to " << path << " failed\n";
    return kIoError;
  }
  out << "wrote " << max_n << " terms to " << path << "\n";
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Counts Catalan words avoiding vincular patterns"};
  app.require_subcommand(1);
  RunConfig config = default_config();

  std::string pattern, method_text, format_text = "text", path;
  std::vector<std::string> method_texts;
  int n = 0, order = config.order, max_n = 0;

  auto* count = app.add_subcommand("count", "Print c_n for one pattern");
  count->add_option("--pattern,-p", pattern, "Pattern such as 2-21")->required();
  count->add_option("--n,-n", n, "Word length")->required();
  count->add_option("--method,-m", method_text, "oracle, recurrence, closed or genfun");

  auto* series = app.add_subcommand("series", "Print c_1..c_order");
  series->add_option("--pattern,-p", pattern)->required();
  series->add_option("--order,-o", order, "Truncation order (default from CATWORDS_ORDER or 24)");

  auto* verify = app.add_subcommand("verify", "Cross-check every method on both tables");
  verify->add_option("--max-n", config.max_n, "Oracle ceiling");
  verify->add_option("--methods", method_texts, "Subset of methods to run");
  verify->add_option("--format,-f", format_text, "text, json or csv");
  verify->add_option("--threads", config.threads, "Worker threads (0: all cores)");

  auto* bfile = app.add_subcommand("bfile", "Write an OEIS b-file");
  bfile->add_option("--pattern,-p", pattern)->required();
  bfile->add_option("--max-n", max_n)->required();
  bfile->add_option("--output,-o", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*count) {
      std::optional<Method> m;
      if (!method_text.empty()) m = parse_method(method_text);
      return cmd_count(pattern, n, m, std::cout, std::cerr);
    }
    if (*series) return cmd_series(pattern, order, std::cout, std::cerr);
    if (*verify) {
      config.format = parse_format(format_text);
      if (!method_texts.empty()) {
        config.methods.clear();
        for (const auto& t : method_texts) config.methods.push_back(parse_method(t));
      }
      return cmd_verify(config, std::cout, std::cerr);
    }
    if (*bfile) return cmd_bfile(pattern, max_n, path, std::cout, std::cerr);
  } catch (const UnsupportedPattern& e) {
    return unsupported(std::cerr, e.what());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupported;
  }
  return kOk;
}

}  // namespace catwords::cli
