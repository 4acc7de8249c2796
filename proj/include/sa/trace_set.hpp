#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sa/digest.hpp"
#include "sa/errors.hpp"
#include "sa/matrix.hpp"

namespace sa {

// A set of activation traces: one row per input, plus the class the model
// predicted for that input. Immutable by convention once validated; all
// scoring and sampling code shares instances across threads freely.
struct TraceSet {
  Matrix traces;
  std::vector<std::int64_t> predicted_labels;
  std::int64_t num_classes = 0;
  std::string name;

  std::int64_t size() const { return traces.rows(); }
  std::int64_t dim() const { return traces.cols(); }
};

enum class SamplingStrategy { Uniform, UnsurprisingFirst, NeighborFree, Full };

inline const char* to_string(SamplingStrategy s) {
  switch (s) {
    case SamplingStrategy::Uniform: return "uniform";
    case SamplingStrategy::UnsurprisingFirst: return "unsurprising";
    case SamplingStrategy::NeighborFree: return "neighborfree";
    case SamplingStrategy::Full: return "full";
  }
  return "unknown";
}

// A subset of a parent TraceSet's rows together with how it was produced.
// parameter holds the sampling ratio s (Uniform/UnsurprisingFirst) or the
// neighborhood threshold epsilon (NeighborFree); it is absent for Full.
struct SampleSelection {
  std::vector<std::int64_t> indices;  // sorted, distinct, in [0, N)
  SamplingStrategy strategy = SamplingStrategy::Full;
  std::optional<double> parameter;
  std::uint64_t seed = 0;
  double achieved_ratio = 1.0;
};

inline void validate(const TraceSet& t) {
  if (t.traces.rows() < 1) throw ValidationError("TraceSet requires at least one trace row");
  if (t.traces.cols() < 1) throw ValidationError("TraceSet requires at least one dimension");
  if (static_cast<std::int64_t>(t.predicted_labels.size()) != t.traces.rows())
    throw LabelCountMismatchError(
        "label count mismatch: " + std::to_string(t.predicted_labels.size()) + " labels for " +
        std::to_string(t.traces.rows()) + " trace rows");
  for (std::int64_t i = 0; i < t.traces.rows(); ++i) {
    const auto row = t.traces.row(i);
    for (std::int64_t j = 0; j < t.traces.cols(); ++j) {
      if (!std::isfinite(row[static_cast<std::size_t>(j)]))
        throw NonFiniteValueError("non-finite value at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
    }
  }
  if (t.num_classes < 1) throw ValidationError("num_classes must be positive");
  for (std::size_t i = 0; i < t.predicted_labels.size(); ++i) {
    const std::int64_t l = t.predicted_labels[i];
    if (l < 0 || l >= t.num_classes)
      throw ValidationError("predicted label " + std::to_string(l) + " at row " +
                            std::to_string(i) + " outside [0, " + std::to_string(t.num_classes) +
                            ")");
  }
}

// Builds and validates a TraceSet. num_classes defaults to 1 + max label so
// that callers can override it when a subset lacks some classes.
inline TraceSet make_trace_set(Matrix traces, std::vector<std::int64_t> labels, std::string name,
                               std::optional<std::int64_t> num_classes = std::nullopt) {
  TraceSet t;
  t.traces = std::move(traces);
  t.predicted_labels = std::move(labels);
  t.name = std::move(name);
  if (num_classes) {
    t.num_classes = *num_classes;
  } else {
    std::int64_t max_label = -1;
    for (const std::int64_t l : t.predicted_labels) max_label = std::max(max_label, l);
    t.num_classes = max_label + 1;
  }
  validate(t);
  return t;
}

// Data fingerprint over traces, labels and num_classes; the name is a cache
// key, not part of the data identity.
inline std::uint64_t fingerprint(const TraceSet& t) {
  std::uint64_t h = fnv1a64(t.traces.data(), t.traces.size() * sizeof(double));
  h = fnv1a64(t.predicted_labels.data(), t.predicted_labels.size() * sizeof(std::int64_t), h);
  h = fnv1a64_u64(static_cast<std::uint64_t>(t.num_classes), h);
  return h;
}

// Partition of {0..N-1} by predicted class: entry c lists the rows predicted
// as class c, in ascending row order. Classes absent from the labels get an
// empty list.
inline std::vector<std::vector<std::int64_t>> class_partition(const TraceSet& t) {
  std::vector<std::vector<std::int64_t>> part(static_cast<std::size_t>(t.num_classes));
  for (std::int64_t i = 0; i < t.size(); ++i)
    part[static_cast<std::size_t>(t.predicted_labels[static_cast<std::size_t>(i)])].push_back(i);
  return part;
}

inline void validate_selection(const TraceSet& t, const SampleSelection& sel) {
  if (sel.indices.empty()) throw ValueError("selection is empty");
  std::int64_t prev = -1;
  for (const std::int64_t i : sel.indices) {
    if (i < 0 || i >= t.size())
      throw ValueError("selection index " + std::to_string(i) + " out of range [0, " +
                       std::to_string(t.size()) + ")");
    if (i <= prev) throw ValueError("selection indices must be sorted and distinct");
    prev = i;
  }
}

// Projects the selected rows (and labels) into a new TraceSet, preserving
// relative order and the parent's num_classes.
inline TraceSet restrict(const TraceSet& t, const SampleSelection& sel) {
  validate_selection(t, sel);
  TraceSet out;
  out.traces = Matrix(static_cast<std::int64_t>(sel.indices.size()), t.dim());
  out.predicted_labels.reserve(sel.indices.size());
  for (std::size_t i = 0; i < sel.indices.size(); ++i) {
    const auto src = t.traces.row(sel.indices[i]);
    std::copy(src.begin(), src.end(), out.traces.row(static_cast<std::int64_t>(i)).begin());
    out.predicted_labels.push_back(t.predicted_labels[static_cast<std::size_t>(sel.indices[i])]);
  }
  out.num_classes = t.num_classes;
  out.name = t.name;
  return out;
}

inline SampleSelection full_selection(const TraceSet& t) {
  SampleSelection sel;
  sel.indices.resize(static_cast<std::size_t>(t.size()));
  for (std::int64_t i = 0; i < t.size(); ++i) sel.indices[static_cast<std::size_t>(i)] = i;
  sel.strategy = SamplingStrategy::Full;
  sel.achieved_ratio = 1.0;
  return sel;
}

}  // namespace sa
