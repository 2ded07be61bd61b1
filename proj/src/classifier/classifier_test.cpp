#include <doctest.h>

#include <set>

#include "classifier/classifier.hpp"

using namespace cs;

namespace {
struct Init {
  Init() {
    set_precision(64);
    set_tolerance(Real("1e-30"));
  }
} init_;

YSeptet y_of(const Sextic& p) { return y_from_sextic(p); }

Sextic monomial(int k, const Complex& c) {
  Sextic s;
  s.coeffs[k] = c;
  return s;
}
}  // namespace

TEST_CASE("generator bookkeeping") {
  CHECK(ideal_specs().size() == 16);
  for (const auto& s : ideal_specs())
    for (const auto& g : s.generators) {
      CHECK(g.degree > 0);
      CHECK(g.order >= 0);
      CHECK(generator_kappa(s.name, &g - s.generators.data()) > 0);
    }
  CHECK(ideal_spec("IJac").generators[0].degree == 10);
  CHECK(ideal_spec("IM6CR").generators[0].order == 8);
  CHECK_THROWS_AS(ideal_spec("I7"), DomainError);
  int persistent = 0;
  for (const auto& s : ideal_specs()) persistent += s.persistent;
  CHECK(persistent == 9);
}

TEST_CASE("basic verdicts") {
  YSeptet zero;
  zero.fill(Complex(0));
  CHECK(classify(zero).label == ClassLabel::O);

  YSeptet a = y_of(monomial(6, imag_unit()));
  CHECK(classify(a).label == ClassLabel::A);
  CHECK(ideal_eval("I6", a).vanishes);
  CHECK_FALSE(ideal_eval("I0", a).vanishes);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 5; ++t) {
    YSeptet y;
    for (auto& c : y) c = random_complex(rng);
    ClassVerdict v = classify(y);
    CHECK(v.label == ClassLabel::S);
    CHECK(v.roots.partition.size() == 6);
    CHECK(v.m6.has_value());
    CHECK_FALSE(*v.m6);
  }

  Sextic cr;
  cr.coeffs[6] = Complex(1);
  cr.coeffs[3] = Complex(-1);
  CHECK(ideal_eval("I3111CR", y_of(cr)).vanishes);
  ClassVerdict vi = classify(y_of(cr));
  CHECK(vi.label == ClassLabel::VI);
  REQUIRE(vi.multiratio.has_value());
  Complex lam = *vi.multiratio;
  CHECK(abs(abs(lam) - Real(1)) < Real("1e-25"));
  CHECK(abs(re(lam) - Real("0.5")) < Real("1e-25"));
}

TEST_CASE("root loci") {
  std::mt19937_64 rng(32);
  for (const auto& parts : all_partitions()) {
    std::string ideal = partition_ideal(parts);
    if (ideal.empty()) continue;
    for (int t = 0; t < 10; ++t) {
      std::string label = partition_label(parts);
      Sextic p = sample_root_locus(label, rng);
      CHECK_MESSAGE(ideal_eval(ideal, y_of(p)).vanishes, label);
      for (const auto& finer : immediate_refinements(parts)) {
        Sextic q = sample_root_locus(partition_label(finer), rng);
        CHECK_MESSAGE(!ideal_eval(ideal, y_of(q)).vanishes, label << " on " << partition_label(finer));
      }
    }
  }
  Sextic z = sample_root_locus("0", rng);
  CHECK(ideal_eval("I0", y_of(z)).vanishes);
  CHECK_FALSE(ideal_eval("I0", y_of(sample_root_locus("6", rng))).vanishes);
}

TEST_CASE("[42] point") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 5; ++t) {
    YSeptet y = y_of(sample_root_locus("42", rng));
    CHECK(ideal_eval("I42", y).vanishes);
    CHECK(ideal_eval("I411", y).vanishes);
    CHECK(ideal_eval("I3111", y).vanishes);
    CHECK_FALSE(ideal_eval("I51", y).vanishes);
    CHECK_FALSE(ideal_eval("I33", y).vanishes);
    ClassVerdict v = classify(y);
    CHECK(v.label == ClassLabel::V);
    CHECK(v.roots.label() == "[42]");
  }
}

TEST_CASE("strata classify to their classes") {
  std::mt19937_64 rng(34);
  const std::vector<std::pair<std::string, ClassLabel>> cases = {
      {"6", ClassLabel::A},      {"51", ClassLabel::VII},       {"33", ClassLabel::OO},
      {"411", ClassLabel::V},    {"3111", ClassLabel::II},      {"3111+CR", ClassLabel::VI},
      {"M6+CR", ClassLabel::IV}, {"Jac", ClassLabel::I},        {"111111", ClassLabel::S}};
  for (const auto& [locus, cls] : cases)
    for (int t = 0; t < 5; ++t) {
      Sextic p = sample_root_locus(locus, rng);
      CHECK_MESSAGE(classify(y_of(p)).label == cls, locus);
      Sextic q = mobius_apply(p, random_mobius(rng));
      CHECK_MESSAGE(classify(y_of(q)).label == cls, locus << " after Möbius");
    }
}

TEST_CASE("six distinct roots with the symmetric configuration") {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 5; ++t) {
    ClassVerdict v = classify(y_of(sample_root_locus("M6+CR", rng)));
    CHECK(v.o0_vanishes);
    REQUIRE(v.m6.has_value());
    CHECK(*v.m6);
    ClassVerdict i = classify(y_of(sample_root_locus("Jac", rng)));
    CHECK_FALSE(i.o0_vanishes);
  }
}

TEST_CASE("discriminant detects repeated roots") {
  std::mt19937_64 rng(36);
  const auto& parts = all_partitions();
  for (int t = 0; t < 40; ++t) {
    const auto& pt = parts[t % parts.size()];
    Sextic p = sample_root_locus(partition_label(pt), rng);
    bool repeated = roots_with_multiplicity(p).partition.size() < 6;
    CHECK(ideal_eval("I21111", y_of(p)).vanishes == repeated);
  }
}

TEST_CASE("inconsistent patterns are errors") {
  Pattern only_i0{};
  only_i0[0] = true;
  CHECK_THROWS_AS(match_pattern(only_i0), InconsistentPattern);
  try {
    match_pattern(only_i0);
  } catch (const InconsistentPattern& e) {
    CHECK(std::string(e.what()).find("100000000") != std::string::npos);
  }
  CHECK(match_pattern(table3_row(ClassLabel::VI)) == ClassLabel::VI);
}

TEST_CASE("Hasse order") {
  CHECK(hasse_edge(ClassLabel::VI, ClassLabel::II));
  CHECK_FALSE(hasse_edge(ClassLabel::IV, ClassLabel::II));
  CHECK(hasse_edge(ClassLabel::V, ClassLabel::IV));
  for (const auto& n : hasse_nodes()) {
    if (n.label == ClassLabel::S) CHECK(n.hilbert_dim == 7);
    if (n.label == ClassLabel::O) CHECK(n.hilbert_dim == 0);
  }
  for (const auto& [hi, lo] : hasse_edges()) {
    Pattern a = table3_row(hi), b = table3_row(lo);
    int na = 0, nb = 0;
    for (int k = 0; k < 9; ++k) {
      CHECK((!b[k] || a[k]));
      na += a[k];
      nb += b[k];
    }
    CHECK(na > nb);
  }
  std::set<Pattern> rows;
  for (ClassLabel c : all_classes()) rows.insert(table3_row(c));
  CHECK(rows.size() == 10);
  CHECK(hasse_dot().find("\"VI\" -> \"II\"") != std::string::npos);
}

TEST_CASE("ill-conditioned Möbius maps do not change the class") {
  std::mt19937_64 rng(36);
  const MobiusMap squeeze(cx(8.0), cx(1.0), cx(0.5), cx(0.2));
  for (const auto& [locus, label] : std::vector<std::pair<std::string, ClassLabel>>{
           {"Jac", ClassLabel::I}, {"111111", ClassLabel::S}, {"M6+CR", ClassLabel::IV}, {"3111", ClassLabel::II}}) {
    for (int t = 0; t < 3; ++t) {
      Sextic p = sample_root_locus(locus, rng);
      CHECK_MESSAGE(classify(y_of(mobius_apply(mobius_apply(p, squeeze), squeeze))).label == label, locus);
    }
  }
}
