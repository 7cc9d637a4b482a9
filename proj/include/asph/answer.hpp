#ifndef ASPH_ANSWER_HPP_
#define ASPH_ANSWER_HPP_

namespace asph {

  // Result of a semi-decision under a budget.
  enum class Answer { Yes, No, Unknown };

  char const* to_string(Answer a) noexcept;

}  // namespace asph

#endif  // ASPH_ANSWER_HPP_
