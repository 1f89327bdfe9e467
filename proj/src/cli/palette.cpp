#include <array>

#include "mixtau/cli.hpp"

namespace mixtau {

namespace {

constexpr std::array<Rgb, 16> kBase{{
    {255, 255, 255}, {31, 119, 180}, {255, 127, 14}, {44, 160, 44},  {214, 39, 40},  {148, 103, 189},
    {140, 86, 75},   {227, 119, 194}, {127, 127, 127}, {188, 189, 34}, {23, 190, 207}, {0, 0, 0},
    {255, 215, 0},   {0, 128, 128},   {128, 0, 0},     {0, 0, 128},
}};

}  // namespace

Rgb palette_color(std::size_t index) {
  const Rgb base = kBase[index % kBase.size()];
  const int shade = static_cast<int>((index / kBase.size()) % 4);
  auto dim = [shade](int c) { return c * (4 - shade) / 4 + 16 * shade; };
  return {dim(base.r), dim(base.g), dim(base.b)};
}

}  // namespace mixtau
