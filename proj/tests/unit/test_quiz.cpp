#include <gtest/gtest.h>

#include <algorithm>

#include "qq/quiz_engine.hpp"

using namespace qq::quiz;

namespace {

Quiz make_quiz(Kind kind) {
  Quiz q;
  q.id = kind == Kind::Assessment ? "assessment" : "bloch-quiz";
  q.kind = kind;
  q.title = "t";
  if (kind == Kind::InGame) q.game = qq::progression::GameId::Bloch;
  for (int k = 0; k < 10; ++k)
    q.questions.push_back({"q" + std::to_string(k), "prompt " + std::to_string(k),
                           {"a" + std::to_string(k), "b" + std::to_string(k), "c" + std::to_string(k),
                            "d" + std::to_string(k)},
                           k % 4, kind == Kind::Assessment});
  return q;
}

std::vector<Answer> all_correct(const Quiz& q) {
  std::vector<Answer> a;
  for (const auto& question : q.questions) a.emplace_back(question.correct_index);
  return a;
}

}  // namespace

TEST(Quiz, Validation) {
  EXPECT_TRUE(validate_quiz(make_quiz(Kind::Assessment)).empty());
  EXPECT_TRUE(validate_quiz(make_quiz(Kind::InGame)).empty());
  auto q = make_quiz(Kind::InGame);
  q.questions.pop_back();
  EXPECT_FALSE(validate_quiz(q).empty());
  q = make_quiz(Kind::InGame);
  q.questions[0].correct_index = 4;
  EXPECT_FALSE(validate_quiz(q).empty());
  q = make_quiz(Kind::Assessment);
  q.questions[3].allow_idk = false;
  EXPECT_FALSE(validate_quiz(q).empty());
}

TEST(Quiz, GradeAndReveal) {
  const auto q = make_quiz(Kind::InGame);
  auto r = grade(q, all_correct(q));
  EXPECT_EQ(r.score, 10);
  for (const auto& f : r.per_question) {
    EXPECT_TRUE(f.correct);
    EXPECT_TRUE(f.reveal.has_value());
  }
  auto wrong = all_correct(q);
  wrong[0] = (*wrong[0] + 1) % 4;
  r = grade(q, wrong);
  EXPECT_EQ(r.score, 9);
  EXPECT_EQ(r.per_question[0].reveal, q.questions[0].correct_index);
  EXPECT_THROW(grade(q, std::vector<Answer>(10, std::nullopt)), QuizError);
  EXPECT_THROW(grade(q, std::vector<Answer>(9, 0)), QuizError);
  EXPECT_THROW(grade(q, std::vector<Answer>(10, 4)), QuizError);
  EXPECT_TRUE(check_answer(q, 2, 2).correct);
  EXPECT_THROW(check_answer(q, 10, 0), QuizError);
}

TEST(Quiz, AssessmentDefaultsScoreZeroAndHideAnswers) {
  const auto q = make_quiz(Kind::Assessment);
  const auto defaults = default_assessment_answers(q);
  ASSERT_EQ(defaults.size(), 10u);
  EXPECT_TRUE(std::all_of(defaults.begin(), defaults.end(), [](const Answer& a) { return !a; }));
  const auto r = grade(q, defaults);
  EXPECT_EQ(r.score, 0);
  for (const auto& f : r.per_question) EXPECT_FALSE(f.reveal.has_value());
  EXPECT_EQ(grade(q, all_correct(q)).score, 10);
  EXPECT_THROW(default_assessment_answers(make_quiz(Kind::InGame)), QuizError);
}

TEST(Quiz, RecordAttemptKeepsHighScore) {
  auto p = qq::progression::make_profile("p1", "Ada");
  p = record_attempt(p, "bloch-quiz", 6);
  p = record_attempt(p, "bloch-quiz", 4);
  EXPECT_EQ(p.quiz_records["bloch-quiz"].attempts, 2);
  EXPECT_EQ(p.quiz_records["bloch-quiz"].high_score, 6);
  EXPECT_EQ(p.total_points, 0);
}

TEST(Quiz, ShuffleKeepsCorrectOption) {
  const auto q = make_quiz(Kind::InGame);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = shuffle_options(q, seed);
    for (std::size_t k = 0; k < q.questions.size(); ++k) {
      const auto& a = q.questions[k];
      const auto& b = s.questions[k];
      EXPECT_EQ(a.options[static_cast<std::size_t>(a.correct_index)], b.options[static_cast<std::size_t>(b.correct_index)]);
      EXPECT_TRUE(std::is_permutation(a.options.begin(), a.options.end(), b.options.begin()));
    }
  }
  EXPECT_EQ(shuffle_options(q, 3).questions[5].options, shuffle_options(q, 3).questions[5].options);
}
