#pragma once

#include <variant>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/group_ring.hpp"

namespace cohen {

namespace moves {

// X -> diag(X, 1)
struct Stabilize {
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};

// diag(X, 1) -> X; the last row and column must be exactly those of I.
struct Destabilize {
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};

struct SwapRows {
  std::size_t i, j;
  friend bool operator==(const SwapRows&, const SwapRows&) = default;
};

// row_i <- (sign * gamma) * row_i
struct ScaleRow {
  std::size_t i;
  int sign;
  Element gamma;
  friend bool operator==(const ScaleRow&, const ScaleRow&) = default;
};

// row_i <- row_i + lambda * row_j, i != j
struct AddRow {
  std::size_t i, j;
  GroupRingElement lambda;
  friend bool operator==(const AddRow&, const AddRow&) = default;
};

}  // namespace moves

using WhiteheadMove =
    std::variant<moves::Stabilize, moves::Destabilize, moves::SwapRows, moves::ScaleRow, moves::AddRow>;

// Sequence of elementary moves, each preserving the class in Wh(G).
struct WhiteheadCertificate {
  std::vector<WhiteheadMove> moves;
  friend bool operator==(const WhiteheadCertificate&, const WhiteheadCertificate&) = default;
};

namespace detail {

inline GroupRingMatrix apply_move(const GroupRingMatrix& x, const WhiteheadMove& move,
                                  std::size_t index) {
  const std::size_t n = x.size();
  auto need_row = [&](std::size_t r) {
    if (r >= n)
      throw IllegalMove(index, "row " + std::to_string(r) + " out of range for size " +
                                   std::to_string(n));
  };
  return std::visit(
      [&](const auto& m) -> GroupRingMatrix {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, moves::Stabilize>) {
          return x.stabilized();
        } else if constexpr (std::is_same_v<M, moves::Destabilize>) {
          if (n < 2) throw IllegalMove(index, "cannot destabilize a matrix of size < 2");
          const auto one = GroupRingElement::one(x.group());
          for (std::size_t k = 0; k < n; ++k) {
            const bool diagonal = k == n - 1;
            if (diagonal ? !(x(k, k) == one) : (!x(n - 1, k).is_zero() || !x(k, n - 1).is_zero()))
              throw IllegalMove(index, "last row and column are not those of the identity");
          }
          GroupRingMatrix out(x.group(), n - 1);
          for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) out(i, j) = x(i, j);
          return out;
        } else if constexpr (std::is_same_v<M, moves::SwapRows>) {
          need_row(m.i);
          need_row(m.j);
          GroupRingMatrix out = x;
          for (std::size_t c = 0; c < n; ++c) std::swap(out(m.i, c), out(m.j, c));
          return out;
        } else if constexpr (std::is_same_v<M, moves::ScaleRow>) {
          need_row(m.i);
          if (m.sign != 1 && m.sign != -1) throw IllegalMove(index, "sign must be +1 or -1");
          if (m.gamma >= x.group()->order()) throw IllegalMove(index, "group element out of range");
          const auto factor = GroupRingElement::basis(x.group(), m.gamma, m.sign);
          GroupRingMatrix out = x;
          for (std::size_t c = 0; c < n; ++c) out(m.i, c) = factor * x(m.i, c);
          return out;
        } else {
          need_row(m.i);
          need_row(m.j);
          if (m.i == m.j) throw IllegalMove(index, "AddRow needs distinct rows");
          if (!same_group(m.lambda.group(), x.group())) throw IllegalMove(index, "lambda from another group");
          GroupRingMatrix out = x;
          for (std::size_t c = 0; c < n; ++c) out(m.i, c) += m.lambda * x(m.j, c);
          return out;
        }
      },
      move);
}

}  // namespace detail

inline GroupRingMatrix apply_certificate(const GroupRingMatrix& x, const WhiteheadCertificate& c) {
  GroupRingMatrix out = x;
  for (std::size_t k = 0; k < c.moves.size(); ++k) out = detail::apply_move(out, c.moves[k], k);
  return out;
}

// True iff the certificate carries X to Y, after padding the smaller of the
// two with identity blocks.
inline bool verify_certificate(const GroupRingMatrix& x, const GroupRingMatrix& y,
                               const WhiteheadCertificate& c) {
  if (!detail::same_group(x.group(), y.group())) throw GroupMismatch();
  GroupRingMatrix got = apply_certificate(x, c);
  GroupRingMatrix want = y;
  while (got.size() < want.size()) got = got.stabilized();
  while (want.size() < got.size()) want = want.stabilized();
  return got == want;
}

}  // namespace cohen
