#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace fp5 {

// The five logical values: true, indeterminate, undefined, contradictory,
// false. Enumerator order is the display and truth-table row order.
enum class PentaValue : std::uint8_t {
  True = 0,
  Indeterminate = 1,
  Undefined = 2,
  Contradictory = 3,
  False = 4,
};

inline constexpr std::array<PentaValue, 5> kPentaValues = {
    PentaValue::True, PentaValue::Indeterminate, PentaValue::Undefined,
    PentaValue::Contradictory, PentaValue::False};

namespace detail {
using V = PentaValue;
constexpr V t = V::True, i = V::Indeterminate, u = V::Undefined,
            c = V::Contradictory, f = V::False;

// Disjunction. Indeterminacy absorbs everything except truth.
inline constexpr std::array<std::array<V, 5>, 5> kOrTable = {{
    //        t  i  u  c  f
    /* t */ {{t, t, t, t, t}},
    /* i */ {{t, i, i, i, i}},
    /* u */ {{t, i, u, i, i}},
    /* c */ {{t, i, i, c, i}},
    /* f */ {{t, i, i, i, f}},
}};

// Conjunction. Indeterminacy absorbs everything except falsity.
inline constexpr std::array<std::array<V, 5>, 5> kAndTable = {{
    //        t  i  u  c  f
    /* t */ {{t, i, i, i, f}},
    /* i */ {{i, i, i, i, f}},
    /* u */ {{i, i, u, i, f}},
    /* c */ {{i, i, i, c, f}},
    /* f */ {{f, f, f, f, f}},
}};

// Negation swaps t and f; i, u, c are their own negations.
inline constexpr std::array<V, 5> kNotTable = {f, i, u, c, t};
}  // namespace detail

inline constexpr PentaValue or5(PentaValue a, PentaValue b) {
  return detail::kOrTable[static_cast<std::size_t>(a)]
                         [static_cast<std::size_t>(b)];
}

inline constexpr PentaValue and5(PentaValue a, PentaValue b) {
  return detail::kAndTable[static_cast<std::size_t>(a)]
                          [static_cast<std::size_t>(b)];
}

inline constexpr PentaValue not5(PentaValue a) {
  return detail::kNotTable[static_cast<std::size_t>(a)];
}

// The I/O alphabet is the uppercase letters T, I, U, C, F.
char to_letter(PentaValue v);
std::optional<PentaValue> from_letter(char ch);

}  // namespace fp5
