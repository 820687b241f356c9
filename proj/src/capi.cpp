// Copyright 2026 The sidom Authors.
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

#include "sidom/sidom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sidom/bounds.hpp"
#include "sidom/critical.hpp"
#include "sidom/domination.hpp"
#include "sidom/error.hpp"
#include "sidom/families.hpp"
#include "sidom/io.hpp"
#include "sidom/laws.hpp"
#include "sidom/oracle.hpp"
#include "sidom/solver.hpp"
#include "sidom/transforms.hpp"
#include "sidom/ugraph.hpp"

struct sidom_digraph {
  sidom::Digraph graph;
};

struct sidom_partition {
  sidom::VertexPartition partition;
};

namespace {

thread_local std::string last_error;

sidom_status to_status(sidom::ErrorCode code) {
  switch (code) {
    case sidom::ErrorCode::kInvalidArgument:
      return SIDOM_ERR_INVALID_ARGUMENT;
    case sidom::ErrorCode::kParse:
      return SIDOM_ERR_PARSE;
    case sidom::ErrorCode::kNotStrong:
      return SIDOM_ERR_NOT_STRONG;
    case sidom::ErrorCode::kNotApplicable:
      return SIDOM_ERR_NOT_APPLICABLE;
    case sidom::ErrorCode::kSizeLimit:
      return SIDOM_ERR_SIZE_LIMIT;
  }
  return SIDOM_ERR_INTERNAL;
}

template <class Body>
sidom_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return SIDOM_OK;
  } catch (const sidom::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SIDOM_ERR_INTERNAL;
}

void require(bool condition, const char* what) {
  if (!condition) sidom::Fail(sidom::ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out != nullptr) *out = copy_string(s);
}

sidom_digraph* wrap(sidom::Digraph g) {
  return new sidom_digraph{std::move(g)};
}

sidom_partition* wrap(sidom::VertexPartition p) {
  return new sidom_partition{std::move(p)};
}

std::string show_arc(sidom::Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

std::string format_blocks(const std::vector<sidom::VertexSet>& blocks) {
  std::ostringstream out;
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      out << (i ? " " : "") << block[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* sidom_last_error(void) { return last_error.c_str(); }

void sidom_string_free(char* s) { std::free(s); }

sidom_status sidom_digraph_create(int32_t order, const int32_t* tails,
                                  const int32_t* heads, size_t arc_count,
                                  sidom_digraph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(arc_count == 0 || (tails != nullptr && heads != nullptr),
            "null arc arrays");
    std::vector<sidom::Arc> arcs(arc_count);
    for (size_t i = 0; i < arc_count; ++i) arcs[i] = {tails[i], heads[i]};
    *out = wrap(sidom::Digraph::create(order, arcs));
  });
}

sidom_status sidom_digraph_parse(const char* text, sidom_digraph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(sidom::parse_digraph(text));
  });
}

sidom_status sidom_digraph_read(const char* path, sidom_digraph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    try {
      *out = wrap(sidom::parse_digraph(sidom::read_text_file(path)));
    } catch (const sidom::Error& e) {
      if (e.code() != sidom::ErrorCode::kParse) throw;
      sidom::Fail(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

void sidom_digraph_free(sidom_digraph* d) { delete d; }

int32_t sidom_digraph_order(const sidom_digraph* d) {
  return d ? d->graph.order() : 0;
}

size_t sidom_digraph_arc_count(const sidom_digraph* d) {
  return d ? d->graph.arc_count() : 0;
}

sidom_status sidom_digraph_arc(const sidom_digraph* d, size_t index,
                               int32_t* tail, int32_t* head) {
  return guarded([&] {
    require(d != nullptr && tail != nullptr && head != nullptr,
            "null argument");
    require(index < d->graph.arc_count(), "arc index out of range");
    *tail = d->graph.arcs()[index].tail;
    *head = d->graph.arcs()[index].head;
  });
}

sidom_status sidom_digraph_is_strong(const sidom_digraph* d, int* strong) {
  return guarded([&] {
    require(d != nullptr && strong != nullptr, "null argument");
    *strong = sidom::is_strong(d->graph) ? 1 : 0;
  });
}

sidom_status sidom_digraph_format(const sidom_digraph* d, char** text) {
  return guarded([&] {
    require(d != nullptr && text != nullptr, "null argument");
    *text = copy_string(sidom::format_digraph(d->graph));
  });
}

sidom_status sidom_digraph_to_dot(const sidom_digraph* d, char** text) {
  return guarded([&] {
    require(d != nullptr && text != nullptr, "null argument");
    *text = copy_string(sidom::to_dot(d->graph));
  });
}

sidom_status sidom_partition_parse(const char* text, int32_t order,
                                   sidom_partition** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(sidom::parse_partition(text, order));
  });
}

sidom_status sidom_partition_read(const char* path, int32_t order,
                                  sidom_partition** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    try {
      *out = wrap(sidom::parse_partition(sidom::read_text_file(path), order));
    } catch (const sidom::Error& e) {
      if (e.code() != sidom::ErrorCode::kParse) throw;
      sidom::Fail(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

sidom_status sidom_partition_from_assignment(const int32_t* block_of,
                                             int32_t order,
                                             sidom_partition** out) {
  return guarded([&] {
    require(out != nullptr && order >= 0, "invalid argument");
    require(order == 0 || block_of != nullptr, "null assignment");
    *out = wrap(sidom::VertexPartition::from_assignment(
        std::vector<int>(block_of, block_of + order)));
  });
}

void sidom_partition_free(sidom_partition* p) { delete p; }

int32_t sidom_partition_order(const sidom_partition* p) {
  return p ? p->partition.order() : 0;
}

int32_t sidom_partition_block_count(const sidom_partition* p) {
  return p ? p->partition.block_count() : 0;
}

int32_t sidom_partition_block_of(const sidom_partition* p, int32_t v) {
  if (p == nullptr || v < 0 || v >= p->partition.order()) return -1;
  return p->partition.block_of(v);
}

sidom_status sidom_partition_format(const sidom_partition* p, char** text) {
  return guarded([&] {
    require(p != nullptr && text != nullptr, "null argument");
    *text = copy_string(sidom::format_partition(p->partition));
  });
}

sidom_status sidom_compute(const sidom_digraph* d, sidom_invariant which,
                           int32_t* value, char** witness) {
  if (witness != nullptr) *witness = nullptr;
  return guarded([&] {
    require(d != nullptr && value != nullptr, "null argument");
    const sidom::Digraph& g = d->graph;
    switch (which) {
      case SIDOM_DSMINUS: {
        auto r = sidom::strong_in_domatic_number(g);
        *value = r.value;
        emit(witness, sidom::format_partition(r.witness));
        break;
      }
      case SIDOM_DSPLUS: {
        auto r = sidom::strong_out_domatic_number(g);
        *value = r.value;
        emit(witness, sidom::format_partition(r.witness));
        break;
      }
      case SIDOM_LAMBDA: {
        auto r = sidom::lambda_number(g);
        *value = r.value;
        emit(witness, sidom::format_arc_partition(g, r.witness));
        break;
      }
      case SIDOM_INDOMATIC: {
        auto r = sidom::in_domatic_number(g);
        *value = r.value;
        emit(witness, sidom::format_partition(r.witness));
        break;
      }
      case SIDOM_DC: {
        auto r = sidom::connected_domatic_number(sidom::underlying_graph(g));
        *value = r.value;
        emit(witness, format_blocks(r.blocks));
        break;
      }
      case SIDOM_KAPPA:
        *value = sidom::vertex_connectivity(sidom::underlying_graph(g));
        break;
      case SIDOM_GAMMACL: {
        auto clique = sidom::minimum_dominating_clique(sidom::underlying_graph(g));
        if (!clique) {
          sidom::Fail(sidom::ErrorCode::kNotApplicable,
                      "underlying graph has no dominating clique");
        }
        *value = static_cast<int32_t>(clique->size());
        emit(witness, format_blocks({*clique}));
        break;
      }
      default:
        sidom::Fail(sidom::ErrorCode::kInvalidArgument, "unknown invariant");
    }
  });
}

sidom_status sidom_strong_in_domatic_number(const sidom_digraph* d,
                                            int32_t* value,
                                            sidom_partition** witness) {
  return guarded([&] {
    require(d != nullptr && value != nullptr, "null argument");
    auto r = sidom::strong_in_domatic_number(d->graph);
    *value = r.value;
    if (witness != nullptr) *witness = wrap(r.witness);
  });
}

sidom_status sidom_upper_bound(const sidom_digraph* d, int32_t* value) {
  return guarded([&] {
    require(d != nullptr && value != nullptr, "null argument");
    *value = sidom::upper_bound(d->graph);
  });
}

sidom_status sidom_verify(const sidom_digraph* d, const sidom_partition* p,
                          int out_mode, int* valid, char** message) {
  if (message != nullptr) *message = nullptr;
  return guarded([&] {
    require(d != nullptr && p != nullptr && valid != nullptr,
            "null argument");
    if (p->partition.order() != d->graph.order()) {
      sidom::Fail(sidom::ErrorCode::kParse,
                  "partition covers " + std::to_string(p->partition.order()) +
                      " vertices but the digraph has " +
                      std::to_string(d->graph.order()));
    }
    const auto diag =
        out_mode ? sidom::check_strong_out_domatic_partition(d->graph, p->partition)
                 : sidom::check_strong_in_domatic_partition(d->graph, p->partition);
    *valid = diag.valid ? 1 : 0;
    emit(message, diag.valid ? std::string("valid") : diag.message());
  });
}

sidom_status sidom_transform(const sidom_digraph* d, sidom_transform_op op,
                             const sidom_digraph* const* with,
                             size_t with_count, sidom_digraph** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    require(with_count == 0 || with != nullptr, "null operand list");
    const sidom::Digraph& g = d->graph;
    auto expect_operands = [&](size_t n, const char* name) {
      if (with_count != n) {
        sidom::Fail(sidom::ErrorCode::kInvalidArgument,
                    std::string(name) + " takes " + std::to_string(n) +
                        " extra digraph(s), got " + std::to_string(with_count));
      }
    };
    switch (op) {
      case SIDOM_OP_LINE:
        expect_operands(0, "line");
        *out = wrap(sidom::line_digraph(g).graph);
        break;
      case SIDOM_OP_SUBDIVISION:
        expect_operands(0, "subdivision");
        *out = wrap(sidom::subdivision(g).graph);
        break;
      case SIDOM_OP_ROOT:
        expect_operands(0, "root");
        *out = wrap(sidom::root(g).graph);
        break;
      case SIDOM_OP_MIDDLE:
        expect_operands(0, "middle");
        *out = wrap(sidom::middle(g).graph);
        break;
      case SIDOM_OP_TOTAL:
        expect_operands(0, "total");
        *out = wrap(sidom::total(g).graph);
        break;
      case SIDOM_OP_CONVERSE:
        expect_operands(0, "converse");
        *out = wrap(sidom::converse(g));
        break;
      case SIDOM_OP_PRODUCT:
        expect_operands(1, "product");
        *out = wrap(sidom::cartesian_product(g, with[0]->graph).graph);
        break;
      case SIDOM_OP_COMPOSE: {
        sidom::CompositionSpec spec{g, {}};
        if (with_count == 1) {
          spec.parts.assign(static_cast<size_t>(g.order()), with[0]->graph);
        } else if (with_count == static_cast<size_t>(g.order())) {
          for (size_t i = 0; i < with_count; ++i) {
            spec.parts.push_back(with[i]->graph);
          }
        } else {
          sidom::Fail(sidom::ErrorCode::kInvalidArgument,
                      "compose takes one part or one part per host vertex");
        }
        *out = wrap(sidom::composition(spec).graph);
        break;
      }
      default:
        sidom::Fail(sidom::ErrorCode::kInvalidArgument, "unknown transform");
    }
  });
}

sidom_status sidom_generate(const char* family, int32_t a, int32_t b,
                            sidom_digraph** digraph,
                            sidom_partition** partition, char** claims) {
  if (partition != nullptr) *partition = nullptr;
  if (claims != nullptr) *claims = nullptr;
  return guarded([&] {
    require(family != nullptr && digraph != nullptr, "null argument");
    sidom::FamilyInstance f = sidom::make_family(family, a, b);
    nlohmann::ordered_json doc;
    doc["family"] = f.family;
    if (f.family == "order-value") {
      doc["params"] = {{"p", a}, {"m", b}};
    } else if (f.family == "critical-composition") {
      doc["params"] = {{"p", a}, {"n", b}};
    } else {
      doc["params"] = {{"n", a}};
    }
    doc["order"] = f.digraph.order();
    doc["claimed_value"] = f.claimed_value ? nlohmann::ordered_json(*f.claimed_value)
                                           : nlohmann::ordered_json(nullptr);
    doc["claimed_critical"] = f.claimed_critical
                                  ? nlohmann::ordered_json(*f.claimed_critical)
                                  : nlohmann::ordered_json(nullptr);
    std::string text = doc.dump(2) + "\n";
    char* claims_text = claims != nullptr ? copy_string(text) : nullptr;
    *digraph = wrap(std::move(f.digraph));
    if (partition != nullptr && f.canonical_partition) {
      *partition = wrap(f.canonical_partition->canonical());
    }
    if (claims != nullptr) *claims = claims_text;
  });
}

sidom_status sidom_critical(const sidom_digraph* d, int* critical,
                            int* characterization, char** report) {
  if (report != nullptr) *report = nullptr;
  return guarded([&] {
    require(d != nullptr, "null argument");
    const auto profile = sidom::deletion_profile(d->graph);
    const bool is_critical = sidom::is_strong_in_domatic_critical(profile);
    const auto charac = sidom::characterization_holds(d->graph);
    std::ostringstream out;
    out << "d_s- = " << profile.base_value << "\n";
    out << "arc      still-strong  value-after\n";
    std::string first_reason;
    for (const auto& r : profile.records) {
      const std::string arc = show_arc(r.arc);
      out << arc << std::string(arc.size() < 9 ? 9 - arc.size() : 1, ' ')
          << (r.still_strong ? "yes" : "no ") << "           "
          << (r.value_after ? std::to_string(*r.value_after) : "-") << "\n";
      if (!first_reason.empty()) continue;
      if (!r.still_strong) {
        first_reason = "arc " + arc + " deletion destroys strongness";
      } else if (*r.value_after != profile.base_value - 1) {
        first_reason = "arc " + arc + " deletion leaves d_s- at " +
                       std::to_string(*r.value_after);
      }
    }
    out << "critical: " << (is_critical ? "yes" : "no");
    if (!is_critical) out << " (" << first_reason << ")";
    out << "; characterization: " << sidom::to_string(charac.status);
    if (charac.status != sidom::CharacterizationStatus::kHolds) {
      out << " (" << charac.reason << ")";
    }
    out << "\n";
    if (critical != nullptr) *critical = is_critical ? 1 : 0;
    if (characterization != nullptr) {
      *characterization = static_cast<int>(charac.status);
    }
    emit(report, out.str());
  });
}

sidom_status sidom_laws(const sidom_digraph* d, int json, int* violations,
                        char** report) {
  if (report != nullptr) *report = nullptr;
  return guarded([&] {
    require(d != nullptr, "null argument");
    const auto laws = sidom::check_all(d->graph);
    if (violations != nullptr) *violations = laws.violations();
    emit(report, json ? laws.to_json() : laws.to_text());
  });
}

sidom_status sidom_oracle_scan(int32_t max_n, uint64_t seed,
                               int32_t random_count, int32_t up_to,
                               int64_t* mismatches, char** summary) {
  if (summary != nullptr) *summary = nullptr;
  return guarded([&] {
    sidom::OracleScanOptions options;
    options.max_n = max_n;
    options.seed = seed;
    options.random_count = random_count;
    options.random_up_to = up_to;
    const auto s = sidom::run_oracle_scan(options);
    if (mismatches != nullptr) *mismatches = s.mismatches;
    std::ostringstream out;
    out << "scanned: " << s.scanned << "\n"
        << "strong: " << s.strong << "\n"
        << "random: " << s.random_checked << "\n"
        << "compared d_s-: " << s.dsminus_compared << "\n"
        << "compared d-: " << s.indomatic_compared << "\n"
        << "compared lambda: " << s.lambda_compared << "\n"
        << "mismatches: " << s.mismatches << "\n";
    for (const auto& m : s.mismatch_details) out << "  " << m << "\n";
    emit(summary, out.str());
  });
}

}  // extern "C"
