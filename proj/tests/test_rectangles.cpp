#include <doctest.h>

#include <algorithm>
#include <set>

#include "plc/errors.hpp"
#include "plc/lusztig_cone.hpp"
#include "plc/rectangles.hpp"

using namespace plc;

namespace {

PositiveRoot root(int first, int last) { return PositiveRoot{first, last}; }

std::vector<PositiveRoot> sorted(std::vector<PositiveRoot> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("rectangles") {
  TEST_CASE("components") {
    const auto c = components(PartialQuiver::parse("-LLRRRLRR"));
    const std::vector<Component> want{
        {Arrow::left, 7, 10}, {Arrow::right, 4, 8}, {Arrow::left, 3, 5}, {Arrow::right, 1, 4}};
    CHECK(c == want);
    CHECK(components(PartialQuiver::parse("LLL")) == std::vector<Component>{{Arrow::left, 1, 5}});
    CHECK(components(PartialQuiver::parse("--L")) == std::vector<Component>{{Arrow::left, 1, 3}});
  }

  TEST_CASE("rectangle formulas") {
    const auto c = components(PartialQuiver::parse("-LLRRRLRR"));
    const std::vector<Rectangle> want{{0, 7, 2, 9}, {3, 7, 7, 11}, {0, 3, 7, 10}, {2, 3, 10, 11}};
    for (std::size_t t = 0; t < c.size(); ++t) CHECK(rectangle_for_component(c[t], 10) == want[t]);
    CHECK(rectangle_for_component({Arrow::left, 1, 3}, 4) == Rectangle{0, 1, 3, 4});
    CHECK(rectangle_for_component({Arrow::left, 1, 3}, 2) == Rectangle{0, 1, 1, 2});
    CHECK(Rectangle{0, 7, 2, 9}.to_string() == "(0,7,2,9)");
  }

  TEST_CASE("boxes") {
    const Rectangle r{0, 7, 2, 9};
    const auto b = box_at(r, 0);
    CHECK(b.u_hi - b.u_lo == 14);
    CHECK(b.w_hi - b.w_lo == 4);
    CHECK(rectangle_of_box(b) == r);
    CHECK(rectangle_of_box(box_at(r, 5)) == r);
  }

  TEST_CASE("roots of a rectangle") {
    const auto two = roots_of_rectangle(box_at(Rectangle{0, 2, 3, 5}, 0), 4);
    std::vector<PositiveRoot> got;
    for (const auto& c : two) got.push_back(c.root);
    CHECK(sorted(got) == sorted({root(1, 3), root(2, 4)}));
    CHECK(roots_of_rectangle(box_at(Rectangle{0, 7, 2, 9}, 0), 10).size() == 5);
  }

  TEST_CASE("rank 10 configuration") {
    const auto q = PartialQuiver::parse("-LLRRRLRR");
    const auto cfg = configuration(q);
    auto u = cfg.u_counts, w = cfg.w_counts;
    CHECK(std::multiset<std::size_t>(u.begin(), u.end()) == std::multiset<std::size_t>{1, 2, 3, 4});
    CHECK(std::multiset<std::size_t>(w.begin(), w.end()) == std::multiset<std::size_t>{1, 2, 3, 4});
    CHECK(parity_boundary(u).has_value());
    CHECK(parity_boundary(w).has_value());
    CHECK(cfg.central_x() == 4);
    CHECK(cfg.centre_level() == 7);
    CHECK_FALSE(cfg.centre_fallback);
    CHECK(cfg.corners.size() == 5);
    CHECK(cfg.columns_on_central_line == 0);

    const auto& a = cfg.corners[0];
    CHECK(a.label == 'A');
    CHECK(rectangle_of_box(a.maximal) == Rectangle{0, 7, 2, 9});
    CHECK(sorted(a.phi) == sorted({root(2, 2), root(1, 4), root(3, 6)}));
    const auto& b = cfg.corners[1];
    CHECK(rectangle_of_box(b.maximal) == Rectangle{0, 7, 4, 11});
    CHECK(sorted(b.phi) == sorted({root(7, 7), root(5, 9)}));
    CHECK(rectangle_of_box(cfg.corners[2].maximal) == Rectangle{0, 4, 7, 11});
    CHECK(rectangle_of_box(cfg.corners[3].maximal) == Rectangle{0, 3, 8, 11});
    CHECK(rectangle_of_box(cfg.corners[4].maximal) == Rectangle{2, 3, 10, 11});

    const std::vector<PositiveRoot> want{root(2, 2), root(1, 4),  root(3, 6), root(7, 7),   root(5, 9),   root(6, 8),
                                         root(4, 10), root(3, 3), root(1, 5), root(2, 7), root(10, 10), root(8, 9)};
    CHECK(phi_plus(q) == sorted(want));
  }

  TEST_CASE("parity boundary") {
    CHECK(parity_boundary({2, 4, 3, 1}) == std::optional<std::size_t>{2});
    CHECK_FALSE(parity_boundary({2, 4}).has_value());
    CHECK_THROWS_AS(parity_boundary({1, 2, 1}), InvariantError);
  }

  TEST_CASE("spanning vectors") {
    CHECK(v_generator(1, 2) == Vector{1, 0, 1});
    CHECK(v_generator(2, 2) == Vector{0, 1, 0});
    const auto order = positive_root_order(standard_words(4).first);
    const auto v = v_P(PartialQuiver::parse("--L"));
    Vector want(order.size(), Rational(0));
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (order[t] == root(1, 1) || order[t] == root(2, 3)) want[t] = 1;
    }
    CHECK(v == want);
  }

  TEST_CASE("configuration invariants over ranks <= 10") {
    for (int n = 2; n <= 10; ++n) {
      for (const auto& q : enumerate_partial_quivers(n)) {
        const auto cfg = configuration(q);
        const auto phi = phi_plus(q);
        CHECK_FALSE(phi.empty());
        Rational total = 0;
        for (const auto& x : v_P(q)) total += x;
        CHECK(total == static_cast<long>(phi.size()));
        if (components(q).size() > 1) CHECK(cfg.columns_on_central_line == 0);
      }
    }
  }

  TEST_CASE("spanning vectors are independent for every rank 4 class") {
    for (const auto& c : commutation_classes(4)) {
      const auto vs = spanning_vectors(c.representative);
      CHECK(vs.size() == 10);
      CHECK(rank(vs) == 10);
    }
  }

  TEST_CASE("rendering") {
    const auto cfg = configuration(PartialQuiver::parse("-LLRRRLRR"));
    const auto svg = render_configuration_svg(cfg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg == render_configuration_svg(cfg));
    CHECK_FALSE(render_configuration_ascii(cfg).empty());
  }
}
