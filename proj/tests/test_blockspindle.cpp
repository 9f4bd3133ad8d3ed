#include "shelflab/blockspindle.hpp"
#include "shelflab/golden.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace shelflab;

TEST_CASE("basic block spindles") {
  // two singleton blocks: the right projection on two elements
  BlockSpec two{{{1, {0}}, {1, {0}}}};
  CHECK(make_block_spindle(two) == FiniteMagma(2, {0, 1, 0, 1}));

  // one block with the identity function: right projection again
  BlockSpec single{{{4, {0, 1, 2, 3}}}};
  CHECK(make_block_spindle(single) == golden::t8());

  // a singleton block plus a 3-block with a constant function
  BlockSpec mixed{{{1, {0}}, {3, {0, 0, 0}}}};
  FiniteMagma m = make_block_spindle(mixed);
  AxiomReport ax = check_axioms(m);
  CHECK(ax.spindle);
  for (int x = 0; x < 4; ++x) CHECK(m.at(x, 0) == 0);  // the singleton is a right zero
  CHECK(!ax.right_zeros.empty());
}

TEST_CASE("every small spec yields a spindle") {
  // all block layouts of total size <= 4 with every possible function
  std::vector<std::vector<int>> partitions = {{1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {3, 1},
                                              {2, 2}, {1, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}};
  int built = 0;
  for (const auto& sizes : partitions) {
    std::size_t combos = 1;
    std::vector<std::size_t> weight;
    for (int s : sizes) {
      std::size_t w = 1;
      for (int i = 0; i < s; ++i) w *= static_cast<std::size_t>(s);
      weight.push_back(w);
      combos *= w;
    }
    for (std::size_t code = 0; code < combos; ++code) {
      BlockSpec spec;
      std::size_t c = code;
      for (std::size_t b = 0; b < sizes.size(); ++b) {
        std::size_t fcode = c % weight[b];
        c /= weight[b];
        BlockSpec::Block blk;
        blk.size = sizes[b];
        for (int i = 0; i < sizes[b]; ++i) {
          blk.f.push_back(static_cast<int>(fcode % sizes[b]));
          fcode /= sizes[b];
        }
        spec.blocks.push_back(std::move(blk));
      }
      AxiomReport ax = check_axioms(make_block_spindle(spec));  // asserts spindle inside
      CHECK(ax.spindle);
      if (spec.has_singleton()) CHECK_FALSE(ax.right_zeros.empty());
      ++built;
    }
  }
  CHECK(built > 300);
}

TEST_CASE("random large specs are spindles too") {
  std::mt19937 rng(88);
  std::uniform_int_distribution<int> nblocks(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    BlockSpec spec;
    int budget = 8;
    int blocks = nblocks(rng);
    for (int b = 0; b < blocks && budget > 0; ++b) {
      std::uniform_int_distribution<int> size(1, budget);
      BlockSpec::Block blk;
      blk.size = size(rng);
      budget -= blk.size;
      std::uniform_int_distribution<int> val(0, blk.size - 1);
      for (int i = 0; i < blk.size; ++i) blk.f.push_back(val(rng));
      spec.blocks.push_back(std::move(blk));
    }
    CHECK(check_axioms(make_block_spindle(spec)).spindle);
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make_block_spindle(BlockSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(make_block_spindle(BlockSpec{{{2, {0, 2}}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_block_spindle(BlockSpec{{{2, {0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_block_spindle(BlockSpec{{{0, {}}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_block_spindle(BlockSpec{{{65, std::vector<int>(65, 0)}}}),
                  std::invalid_argument);
}

TEST_CASE("spec text format") {
  std::istringstream in("1: 0\n3: 1 2 0\n");
  BlockSpec spec = parse_block_spec(in);
  REQUIRE(spec.blocks.size() == 2);
  CHECK(spec.blocks[0].size == 1);
  CHECK(spec.blocks[1].f == std::vector<int>{1, 2, 0});
  CHECK(block_spec_to_string(spec) == "1: 0\n3: 1 2 0\n");

  std::istringstream bad1("3: 1 2\n");
  CHECK_THROWS_AS(parse_block_spec(bad1), std::invalid_argument);
  std::istringstream bad2("no colon\n");
  CHECK_THROWS_AS(parse_block_spec(bad2), std::invalid_argument);
  std::istringstream bad3("");
  CHECK_THROWS_AS(parse_block_spec(bad3), std::invalid_argument);
}

TEST_CASE("torsion witness scan") {
  BlockSpec cycle{{{1, {0}}, {3, {1, 2, 0}}}};
  BlockSpec proj{{{4, {0, 1, 2, 3}}}};
  SpindleScanReport rep = torsion_witness_scan({cycle, proj});
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.all_singleton_two_term_z);
  CHECK(rep.entries[0].singleton_checked);
  CHECK_FALSE(rep.entries[1].singleton_checked);  // no singleton block
  // the right projection on four elements has free one-term H_2 of rank 48
  CHECK(rep.entries[1].one_term_h2.free_rank == 48);
  CHECK(rep.entries[1].one_term_h2.torsion.empty());

  CHECK_THROWS_AS(torsion_witness_scan({BlockSpec{{{9, std::vector<int>(9, 0)}}}}),
                  std::invalid_argument);
}

TEST_CASE("conjugacy classes of block functions") {
  CHECK(self_maps_up_to_conjugacy(1).size() == 1);
  CHECK(self_maps_up_to_conjugacy(2).size() == 3);
  CHECK(self_maps_up_to_conjugacy(3).size() == 7);
  CHECK(self_maps_up_to_conjugacy(4).size() == 19);
  CHECK(self_maps_up_to_conjugacy(5).size() == 47);
}

TEST_CASE("singleton spec generation") {
  auto specs = singleton_block_specs(3);
  // partitions with a singleton part: (1), (1,1), (2,1) x 3 maps, (1,1,1)
  CHECK(specs.size() == 6);
  for (const BlockSpec& s : specs) {
    CHECK(s.has_singleton());
    CHECK(s.total() <= 3);
  }
}
