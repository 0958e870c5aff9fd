#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fanoturan/checkpoint.hpp"
#include "fanoturan/detect.hpp"
#include "fanoturan/error.hpp"
#include "fanoturan/kernels.hpp"

using namespace fanoturan;

namespace {

void expect_same(const TransversalResult& a, const TransversalResult& b) {
  EXPECT_EQ(a.survivors, b.survivors);
  EXPECT_EQ(a.space, b.space);
  EXPECT_EQ(a.visited, a.space);
  EXPECT_EQ(b.visited, b.space);
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("fanoturan-" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(PatternMasks, Counts) {
  EXPECT_EQ(fano_copy_masks(7).size(), 30U);
  EXPECT_EQ(fano_copy_masks(8).size(), 240U);
  EXPECT_TRUE(fano_copy_masks(6).empty());
  EXPECT_EQ(clique_masks(7, 4).size(), 35U);
  EXPECT_EQ(clique_masks(8, 5).size(), 56U);
  for (auto m : clique_masks(8, 4)) EXPECT_EQ(std::popcount(m), 4);
  EXPECT_THROW(fano_copy_masks(9), ParameterError);
}

TEST(PatternMasks, FanoMasksAreFanoCopies) {
  for (auto m : fano_copy_masks(8)) {
    const auto h = Hypergraph::from_mask(8, m);
    ASSERT_EQ(h.edge_count(), 7);
    const auto copy = find_fano(h, DetectionMethod::embedding);
    ASSERT_TRUE(copy);
    EXPECT_TRUE(is_fano_copy(h, *copy));
  }
}

TEST(Transversals, PrunedParallelMatchesBruteForce) {
  const auto fano7 = fano_copy_masks(7);
  for (int size = 0; size <= 5; ++size) {
    const auto ref = transversals_serial(35, size, fano7);
    expect_same(transversals(35, size, fano7), ref);
    TransversalOptions plain;
    plain.prune = false;
    expect_same(transversals(35, size, fano7, plain), ref);
  }
  const auto fano8 = fano_copy_masks(8);
  for (int size = 0; size <= 5; ++size) expect_same(transversals(56, size, fano8), transversals_serial(56, size, fano8));
  const auto tetra = clique_masks(7, 4);
  for (int size = 4; size <= 6; ++size) expect_same(transversals(35, size, tetra), transversals_serial(35, size, tetra));
}

TEST(Transversals, FiveTriplesOnSevenVerticesLeaveFiftySixSurvivors) {
  // 35 labellings of B_7 and 21 of J_7.
  EXPECT_EQ(transversals(35, 5, fano_copy_masks(7)).survivors.size(), 56U);
  EXPECT_TRUE(transversals(35, 4, fano_copy_masks(7)).survivors.empty());
}

TEST(Transversals, PruningSkipsMostNodes) {
  const auto fano = fano_copy_masks(7);
  TransversalOptions plain;
  plain.prune = false;
  EXPECT_LT(transversals(35, 5, fano).nodes * 4, transversals(35, 5, fano, plain).nodes);
}

TEST(Transversals, RejectsBadInput) {
  const std::vector<TripleMask> patterns{0b11};
  EXPECT_THROW(transversals(10, 11, patterns), ParameterError);
  EXPECT_THROW(transversals(65, 2, patterns), ParameterError);
  const std::vector<TripleMask> outside{TripleMask{1} << 40};
  EXPECT_THROW(transversals(20, 2, outside), ParameterError);
}

TEST(Checkpoint, FramesRoundTripAndTornTailIsIgnored) {
  const auto path = temp_file("frames.ckpt");
  const CheckpointHeader header{56, 7, 0x1234};
  {
    CheckpointWriter w(path, header);
    w.append({3, 100, 7, {1, 2}});
    w.append({9, 300, 20, {1, 2, 5}});
  }
  const auto last = load_checkpoint(path, header);
  ASSERT_TRUE(last);
  EXPECT_EQ(*last, (CheckpointFrame{9, 300, 20, {1, 2, 5}}));
  {
    std::ofstream torn(path, std::ios::binary | std::ios::app);
    torn.write("\x01\x02\x03", 3);
  }
  EXPECT_EQ(*load_checkpoint(path, header), *last);
  {
    CheckpointWriter w(path, header);
    w.append({12, 400, 30, {}});
  }
  EXPECT_EQ(load_checkpoint(path, header)->frontier, 12U);
  EXPECT_THROW(load_checkpoint(path, CheckpointHeader{56, 8, 0x1234}), ParameterError);
  EXPECT_FALSE(load_checkpoint(temp_file("absent.ckpt"), header));
  std::filesystem::remove(path);
}

TEST(Checkpoint, ResumedScanMatchesFreshScan) {
  const auto fano = fano_copy_masks(7);
  const auto fresh = transversals(35, 5, fano);
  const auto path = temp_file("resume.ckpt");
  TransversalOptions o;
  o.checkpoint = path;
  o.checkpoint_interval = 1;
  const auto first = transversals(35, 5, fano, o);
  EXPECT_EQ(first.survivors, fresh.survivors);

  // Keep only the header and the first frame, then resume from it.
  const CheckpointHeader header{35, 5, pattern_digest(fano)};
  std::ifstream in(path, std::ios::binary);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const std::size_t header_bytes = 17;
  std::size_t pos = header_bytes + 8 * 3;
  std::uint32_t count = 0;
  for (int i = 0; i < 4; ++i) count |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
  std::filesystem::resize_file(path, pos + 4 + 8 * count);
  const auto partial = load_checkpoint(path, header);
  ASSERT_TRUE(partial);
  EXPECT_LT(partial->frontier, 595U);

  const auto resumed = transversals(35, 5, fano, o);
  EXPECT_EQ(resumed.survivors, fresh.survivors);
  EXPECT_EQ(resumed.visited, fresh.visited);
  EXPECT_EQ(load_checkpoint(path, header)->frontier, 595U);
  std::filesystem::remove(path);
}

TEST(LinkScan, ParallelMatchesSerial) {
  for (int threshold : {11, 10}) {
    const auto a = link_scan(threshold, 18);
    const auto b = link_scan_serial(threshold, 18);
    EXPECT_EQ(a.space, b.space);
    EXPECT_EQ(a.premise, b.premise);
    EXPECT_EQ(a.fano_free, b.fano_free);
    EXPECT_EQ(a.counterexample, b.counterexample);
    EXPECT_EQ(a.max_free_link, b.max_free_link);
    EXPECT_EQ(a.max_free_link_witness, b.max_free_link_witness);
  }
}

TEST(LinkScan, CountsAndMaximum) {
  const auto r = link_scan(11, 18);
  EXPECT_EQ(r.space, 32768U * 211U);
  EXPECT_EQ(r.max_free_link, 10);
  EXPECT_FALSE(r.counterexample);
}

TEST(FourVertexState, Unpacks) {
  const auto g = four_vertex_state(31U | 1U << 5 | 2U << 10 | 4U << 15 | 8U << 20 | 16U << 25);
  EXPECT_EQ(g.layers(0, 1), 31);
  EXPECT_EQ(g.layers(2, 3), 1);
  EXPECT_EQ(g.layers(0, 2), 2);
  EXPECT_EQ(g.layers(1, 3), 4);
  EXPECT_EQ(g.layers(0, 3), 8);
  EXPECT_EQ(g.layers(1, 2), 16);
}
