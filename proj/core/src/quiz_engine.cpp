#include "qq/quiz_engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace qq::quiz {

std::string_view kind_name(Kind k) noexcept { return k == Kind::InGame ? "in_game" : "assessment"; }

std::optional<Kind> parse_kind(std::string_view name) noexcept {
  if (name == "in_game") return Kind::InGame;
  if (name == "assessment") return Kind::Assessment;
  return std::nullopt;
}

std::vector<std::string> validate_quiz(const Quiz& quiz) {
  std::vector<std::string> out;
  if (quiz.id.empty()) out.push_back("quiz id is empty");
  if (quiz.questions.size() != kQuestionsPerQuiz)
    out.push_back("quiz " + quiz.id + " has " + std::to_string(quiz.questions.size()) + " questions, expected 10");
  if (quiz.kind == Kind::InGame && !quiz.game) out.push_back("in-game quiz " + quiz.id + " names no mini-game");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < quiz.questions.size(); ++i) {
    const auto& q = quiz.questions[i];
    const std::string where = "quiz " + quiz.id + " question " + std::to_string(i + 1);
    if (!ids.insert(q.id).second) out.push_back(where + ": duplicate id " + q.id);
    if (q.prompt.empty()) out.push_back(where + ": empty prompt");
    if (q.correct_index < 0 || q.correct_index >= static_cast<int>(kOptionsPerQuestion))
      out.push_back(where + ": correct_index out of range");
    std::set<std::string> distinct(q.options.begin(), q.options.end());
    if (distinct.size() != kOptionsPerQuestion || distinct.contains(""))
      out.push_back(where + ": options must be four distinct non-empty answers");
    if (q.allow_idk != (quiz.kind == Kind::Assessment))
      out.push_back(where + ": allow_idk must match the quiz kind");
  }
  return out;
}

QuestionFeedback check_answer(const Quiz& quiz, std::size_t index, Answer answer) {
  if (index >= quiz.questions.size()) throw QuizError("question " + std::to_string(index) + " does not exist");
  const auto& q = quiz.questions[index];
  if (!answer && !q.allow_idk)
    throw QuizError("question " + std::to_string(index + 1) + " has no \"I don't know\" option");
  if (answer && (*answer < 0 || *answer >= static_cast<int>(kOptionsPerQuestion)))
    throw QuizError("answer " + std::to_string(*answer) + " to question " + std::to_string(index + 1) +
                    " is out of range");
  QuestionFeedback fb;
  fb.correct = answer && *answer == q.correct_index;
  if (quiz.reveal_correct()) fb.reveal = q.correct_index;
  return fb;
}

GradeResult grade(const Quiz& quiz, const std::vector<Answer>& answers) {
  if (answers.size() != quiz.questions.size())
    throw QuizError("expected " + std::to_string(quiz.questions.size()) + " answers, got " +
                    std::to_string(answers.size()));
  GradeResult r;
  r.per_question.reserve(answers.size());
  for (std::size_t i = 0; i < answers.size(); ++i) {
    auto fb = check_answer(quiz, i, answers[i]);
    r.score += fb.correct ? 1 : 0;
    r.per_question.push_back(fb);
  }
  return r;
}

std::vector<Answer> default_assessment_answers(const Quiz& quiz) {
  if (quiz.kind != Kind::Assessment) throw QuizError("only assessments offer \"I don't know\"");
  return std::vector<Answer>(quiz.questions.size(), std::nullopt);
}

progression::PlayerProfile record_attempt(const progression::PlayerProfile& profile, const std::string& quiz_id,
                                          int score) {
  if (score < 0 || score > static_cast<int>(kQuestionsPerQuiz))
    throw QuizError("quiz score " + std::to_string(score) + " outside 0..10");
  auto p = profile;
  auto& rec = p.quiz_records[quiz_id];
  ++rec.attempts;
  rec.high_score = std::max(rec.high_score, score);
  return p;
}

Quiz shuffle_options(const Quiz& quiz, std::uint64_t seed) {
  Quiz out = quiz;
  std::mt19937_64 rng(seed);
  for (auto& q : out.questions) {
    std::array<int, kOptionsPerQuestion> order{};
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto original = q.options;
    const int correct = q.correct_index;
    for (std::size_t i = 0; i < kOptionsPerQuestion; ++i) {
      q.options[i] = original[static_cast<std::size_t>(order[i])];
      if (order[i] == correct) q.correct_index = static_cast<int>(i);
    }
  }
  return out;
}

}  // namespace qq::quiz
