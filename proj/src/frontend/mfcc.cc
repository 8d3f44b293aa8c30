// frontend/mfcc.cc

// Copyright 2026  Waveclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "frontend/mfcc.h"

#include <algorithm>
#include <cmath>

#include "base/error.h"
#include "base/math-util.h"
#include "frontend/dct.h"

namespace waveclass {

namespace {

int NextPow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2 complex FFT, in place.
void Fft(std::vector<double> &re, std::vector<double> &im) {
  const int n = static_cast<int>(re.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }
  for (int len = 2; len <= n; len <<= 1) {
    double angle = -2.0 * kPi / len;
    double wr = std::cos(angle), wi = std::sin(angle);
    for (int i = 0; i < n; i += len) {
      double cr = 1.0, ci = 0.0;
      for (int k = 0; k < len / 2; ++k) {
        int a = i + k, b = i + k + len / 2;
        double tr = re[b] * cr - im[b] * ci;
        double ti = re[b] * ci + im[b] * cr;
        re[b] = re[a] - tr;
        im[b] = im[a] - ti;
        re[a] += tr;
        im[a] += ti;
        double ncr = cr * wr - ci * wi;
        ci = cr * wi + ci * wr;
        cr = ncr;
      }
    }
  }
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

// Triangular filter weights over FFT bins, one row per filter.
std::vector<std::vector<double>> MelFilterbank(const MfccOptions &options,
                                               double rate, int nfft) {
  int n_bins = nfft / 2 + 1;
  double mel_lo = HzToMel(options.low_freq_hz);
  double mel_hi = HzToMel(options.high_freq_hz);
  std::vector<double> centers_mel(options.num_filters + 2);
  for (int m = 0; m < options.num_filters + 2; ++m)
    centers_mel[m] = mel_lo + (mel_hi - mel_lo) * m / (options.num_filters + 1);

  std::vector<std::vector<double>> bank(options.num_filters,
                                        std::vector<double>(n_bins, 0.0));
  for (int m = 0; m < options.num_filters; ++m) {
    double left = centers_mel[m], center = centers_mel[m + 1],
           right = centers_mel[m + 2];
    for (int k = 0; k < n_bins; ++k) {
      double mel = HzToMel(k * rate / nfft);
      if (mel <= left || mel >= right) continue;
      bank[m][k] = mel < center ? (mel - left) / (center - left)
                                : (right - mel) / (right - center);
    }
  }
  return bank;
}

}  // namespace

std::vector<double> ComputeMfcc(std::span<const double> frame, double rate,
                                const MfccOptions &options) {
  if (static_cast<int>(frame.size()) != options.frame_width)
    throw ShapeError("ComputeMfcc: expected frame of " +
                     std::to_string(options.frame_width) + " samples");
  if (options.num_ceps > options.num_filters)
    throw ValidationError("ComputeMfcc: more cepstra than filters");

  const int n = options.frame_width;
  const int nfft = NextPow2(n);
  std::vector<double> re(nfft, 0.0), im(nfft, 0.0);
  for (int i = 0; i < n; ++i) {
    double w = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (n - 1));
    re[i] = frame[i] * w;
  }
  Fft(re, im);

  // Filterbank and matrix are cheap to rebuild relative to the FFT for the
  // sizes used here; they are rebuilt per call to keep this stateless.
  static thread_local std::vector<std::vector<double>> bank;
  static thread_local double bank_rate = 0.0;
  static thread_local int bank_nfft = 0, bank_filters = 0;
  if (bank_rate != rate || bank_nfft != nfft ||
      bank_filters != options.num_filters) {
    bank = MelFilterbank(options, rate, nfft);
    bank_rate = rate;
    bank_nfft = nfft;
    bank_filters = options.num_filters;
  }

  std::vector<double> log_energies(options.num_filters);
  for (int m = 0; m < options.num_filters; ++m) {
    double e = 0.0;
    const auto &w = bank[m];
    for (int k = 0; k <= nfft / 2; ++k) {
      if (w[k] == 0.0) continue;
      e += w[k] * std::hypot(re[k], im[k]);
    }
    log_energies[m] = std::log(std::max(e, options.log_floor));
  }

  auto dct = DctMatrix::Get(options.num_filters);
  std::vector<double> all(options.num_filters);
  dct->Forward(log_energies, all);
  all.resize(options.num_ceps);
  return all;
}

FeatureMatrix MfccFeatures(const SentenceWaveform &sentence,
                           const MfccOptions &options) {
  auto frames = FrameSignal(sentence.samples, options.frame_width,
                            options.frame_hop);
  FeatureMatrix out;
  out.basis = FeatureBasis::kMfcc;
  out.num_frames = static_cast<int>(frames.size());
  out.dim = options.num_ceps;
  out.hop_seconds = options.frame_hop / sentence.rate;
  out.width_seconds = options.frame_width / sentence.rate;
  out.rate = sentence.rate;
  out.data.resize(static_cast<size_t>(out.num_frames) * out.dim);
  for (int i = 0; i < out.num_frames; ++i) {
    std::vector<double> ceps = ComputeMfcc(frames[i], sentence.rate, options);
    std::copy(ceps.begin(), ceps.end(), out.MutableFrame(i).begin());
  }
  return out;
}

}  // namespace waveclass
