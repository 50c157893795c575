#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qq/progression.hpp"

namespace qq::quiz {

inline constexpr std::size_t kQuestionsPerQuiz = 10;
inline constexpr std::size_t kOptionsPerQuestion = 4;

struct Question {
  std::string id;
  std::string prompt;
  std::array<std::string, kOptionsPerQuestion> options;
  int correct_index = 0;
  bool allow_idk = false;  // adds a fifth "I don't know" option
};

enum class Kind { InGame, Assessment };

std::string_view kind_name(Kind k) noexcept;
std::optional<Kind> parse_kind(std::string_view name) noexcept;

struct Quiz {
  std::string id;
  Kind kind = Kind::InGame;
  std::string title;
  std::optional<progression::GameId> game;  // the mini-game an in-game quiz belongs to
  std::vector<Question> questions;

  bool reveal_correct() const noexcept { return kind == Kind::InGame; }
};

/// Schema-level problems: question count, option count, correct index,
/// and the idk flag matching the quiz kind.
std::vector<std::string> validate_quiz(const Quiz& quiz);

/// nullopt is "I don't know".
using Answer = std::optional<int>;

struct QuestionFeedback {
  bool correct = false;
  std::optional<int> reveal;  // only for quizzes that reveal answers
};

struct GradeResult {
  int score = 0;
  std::vector<QuestionFeedback> per_question;
};

class QuizError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws QuizError on a wrong answer count, an out-of-range index, or an
/// "I don't know" answer to a question that does not offer it.
GradeResult grade(const Quiz& quiz, const std::vector<Answer>& answers);

/// Feedback for a single question of an in-game quiz.
QuestionFeedback check_answer(const Quiz& quiz, std::size_t question, Answer answer);

/// Ten "I don't know" answers; assessment quizzes only.
std::vector<Answer> default_assessment_answers(const Quiz& quiz);

/// attempts + 1, high_score = max. Never touches points.
progression::PlayerProfile record_attempt(const progression::PlayerProfile& profile, const std::string& quiz_id,
                                          int score);

/// Same quiz with each question's options permuted by a seeded RNG; correct
/// indices follow their option.
Quiz shuffle_options(const Quiz& quiz, std::uint64_t seed);

}  // namespace qq::quiz
