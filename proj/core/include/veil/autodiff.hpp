#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "veil/tensor.hpp"

namespace veil::ad {

// Reverse-mode automatic differentiation over Tensor values. Each op builds a
// graph node; backward() runs one reverse topological sweep from a scalar
// root. Gradients accumulate only into nodes that require them, and ops built
// while no input requires a gradient (or while a NoGradGuard is active)
// detach immediately, so inference paths hold no graph.

struct Node {
  Tensor value;
  Tensor grad;
  bool requires_grad = false;
  bool has_grad = false;
  std::vector<std::shared_ptr<Node>> inputs;
  std::function<void()> backf;
};

using NodePtr = std::shared_ptr<Node>;

Tensor& ensure_grad(Node& n);

class Var {
public:
  Var() = default;
  explicit Var(Tensor value, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Tensor& val() const { return node_->value; }
  const std::vector<int>& shape() const { return node_->value.shape(); }
  bool requires_grad() const { return node_ && node_->requires_grad; }

  // Gradient accumulated by the last backward(); zero if none reached here.
  Tensor grad() const;
  void zero_grad() const;
  void set_value(const Tensor& v) const { node_->value = v; }

  NodePtr node() const { return node_; }
  static Var wrap(NodePtr n) {
    Var v;
    v.node_ = std::move(n);
    return v;
  }

private:
  NodePtr node_;
};

bool grad_enabled();

// Scoped switch that detaches every op built while alive.
class NoGradGuard {
public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
  bool prev_;
};

Var constant(Tensor v);
Var leaf(Tensor v);  // requires_grad = true

// Elementwise (shapes must match exactly).
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var scale(const Var& a, double s);
Var add_scalar(const Var& a, double c);
Var neg(const Var& a);
Var relu(const Var& a);
Var silu(const Var& a);
Var exp(const Var& a);

// [m,k] x [k,n] -> [m,n]
Var matmul(const Var& a, const Var& b);
// x:[n,in], w:[out,in], b:[out] -> [n,out]
Var linear(const Var& x, const Var& w, const Var& b);

// x:[N,C,L], w:[Co,Ci,K], b:[Co]; zero padding.
Var conv1d(const Var& x, const Var& w, const Var& b, int stride, int pad);

// Normalize per (sample, group) over the grouped channels and time axis.
// No learned affine; compose with scale_shift_nc / affine_c.
Var group_norm(const Var& x, int groups, double eps = 1e-5);
// x:[N,C,L] * s:[N,C] + t:[N,C], broadcast over L.
Var scale_shift_nc(const Var& x, const Var& s, const Var& t);
// x:[N,C,L] * w:[C] + b:[C]
Var affine_c(const Var& x, const Var& w, const Var& b);

Var maxpool1d2(const Var& x);          // kernel 2, stride 2, floor
Var upsample_nearest2(const Var& x);   // [N,C,L] -> [N,C,2L]
Var concat_channels(const Var& a, const Var& b);  // along C of [N,C,L]
Var concat_cols(const Var& a, const Var& b);      // along F of [N,F]
Var reshape(const Var& x, std::vector<int> shape);
Var flatten2(const Var& x);  // [N,...] -> [N, rest]

Var l2_normalize_rows(const Var& x, double eps = 1e-12);

// Per-row replacement: rows where mask is true take `row` (learned vector of
// width D), others take x's row. x:[N,D], row:[D].
Var select_rows(const Var& x, const Var& row, const std::vector<char>& mask);

Var sum(const Var& a);   // -> scalar
Var mean(const Var& a);  // -> scalar
Var mse(const Var& a, const Var& b);  // mean squared error -> scalar

// Mean cross entropy of logits:[N,K] against labels. -> scalar
Var cross_entropy(const Var& logits, const std::vector<int>& labels);
// log softmax(logits)[i, labels[i]] -> [N]
Var log_softmax_pick(const Var& logits, const std::vector<int>& labels);

// Runs the reverse sweep from a scalar root.
void backward(const Var& root);

}  // namespace veil::ad
