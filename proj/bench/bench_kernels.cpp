#include <benchmark/benchmark.h>

#include "horo/gallery.hpp"
#include "horo/kernels.hpp"

namespace {

using namespace horo;

const std::vector<Eigen::VectorXd>& sweep_samples() {
  static const auto pts = sample_points(make_example("incomplete-band"), 400);
  return pts;
}

template <auto Sweep>
void bm_sweep(benchmark::State& state) {
  const GalleryEntry band = make_example("incomplete-band");
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(*band.metric, sweep_samples(), 0.5));
}

template <auto Crossings>
void bm_segments(benchmark::State& state) {
  const auto pts = curve_ball_points(alpha_curve(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Crossings(pts, true, kAdjacencyWindow, kIntersectionEps));
  }
}

template <auto Crossings>
void bm_triangles(benchmark::State& state) {
  const GalleryEntry e = make_example("alpha-product");
  std::vector<Eigen::Vector3d> v;
  for (const auto& p : e.mesh->vertices) v.push_back(p.coords());
  for (auto _ : state) benchmark::DoNotOptimize(Crossings(v, e.mesh->faces, kIntersectionEps));
}

}  // namespace

BENCHMARK(bm_sweep<serial::curvature_sweep>)->Name("sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep<omp::curvature_sweep>)->Name("sweep/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_segments<serial::segment_crossings>)->Name("segments/serial")->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_segments<omp::segment_crossings>)->Name("segments/omp")->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_triangles<serial::triangle_crossings>)->Name("triangles/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_triangles<omp::triangle_crossings>)->Name("triangles/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
