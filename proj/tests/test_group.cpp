#include <gtest/gtest.h>

#include "padent/group.hpp"

using namespace padent;

TEST(FiniteGroup, CyclicTwo) {
  const FiniteGroup g(GroupDescriptor::cyclic(2));
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.mul(1, 1), g.identity());
  EXPECT_TRUE(g.is_abelian());
}

TEST(FiniteGroup, ProductOfCyclics) {
  const FiniteGroup g(GroupDescriptor::product({GroupDescriptor::cyclic(3), GroupDescriptor::cyclic(3)}));
  EXPECT_EQ(g.order(), 9u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.center_order(), 9u);
  EXPECT_EQ(g.descriptor().str(), "C3xC3");
}

TEST(FiniteGroup, HeisenbergTwo) {
  const FiniteGroup g(GroupDescriptor::heisenberg(2));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(g.center_order(), 2u);
}

TEST(FiniteGroup, HeisenbergCenterHasOrderN) {
  for (long n : {3L, 4L, 5L}) {
    const FiniteGroup g(GroupDescriptor::heisenberg(n));
    EXPECT_EQ(g.order(), static_cast<std::uint32_t>(n * n * n));
    EXPECT_EQ(g.center_order(), static_cast<std::uint32_t>(n));
  }
}

TEST(FiniteGroup, HeisenbergOneIsTrivial) {
  const FiniteGroup g(GroupDescriptor::heisenberg(1));
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(FiniteGroup, LargeGroupsUseStructuralMultiplication) {
  const FiniteGroup g(GroupDescriptor::heisenberg(17));
  EXPECT_FALSE(g.has_table());
  const FiniteGroup::element a = 1234, b = 4321;
  EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
  EXPECT_EQ(g.mul(g.mul(a, b), g.inv(b)), a);
}

TEST(FiniteGroup, OrderCap) {
  try {
    FiniteGroup g(GroupDescriptor::heisenberg(100));
    FAIL() << "expected an order overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderOverflow);
  }
}

TEST(FiniteGroup, InvalidDescriptors) {
  EXPECT_THROW(FiniteGroup(GroupDescriptor::cyclic(0)), Error);
  EXPECT_THROW(FiniteGroup(GroupDescriptor::product({})), Error);
}

TEST(HeisenbergGroup, CommutatorIsZ) {
  const HeisenbergGroup h;
  const auto x = HeisenbergGroup::x(), y = HeisenbergGroup::y();
  const auto comm = h.mul(h.mul(x, y), h.mul(h.inv(x), h.inv(y)));
  EXPECT_EQ(comm, HeisenbergGroup::z());
  for (const auto& g : {x, y, HeisenbergGroup::z(), HeisenbergGroup::element{3, -2, 5}})
    EXPECT_EQ(h.mul(g, h.inv(g)), h.identity());
}

TEST(Quotients, TorusProjectionIsAHomomorphism) {
  const TorusQuotient q({3, 4});
  const FreeAbelianGroup z2{2};
  for (std::int64_t a = -5; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b) {
      const FreeAbelianGroup::element u{a, b}, v{b - 1, 2 * a};
      EXPECT_EQ(q.project(z2.mul(u, v)), q.group().mul(q.project(u), q.project(v)));
    }
  EXPECT_EQ(q.index(), 12u);
}

TEST(Quotients, HeisenbergProjectionIsAHomomorphism) {
  const HeisenbergQuotient q(3);
  const HeisenbergGroup h;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c) {
        const HeisenbergGroup::element u{a, b, c}, v{b, c - a, a + 1};
        EXPECT_EQ(q.project(h.mul(u, v)), q.group().mul(q.project(u), q.project(v)));
      }
}
