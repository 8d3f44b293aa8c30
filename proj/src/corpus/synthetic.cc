// corpus/synthetic.cc

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

#include "corpus/synthetic.h"

#include <cmath>
#include <sstream>

#include "base/error.h"
#include "base/math-util.h"
#include "base/rng.h"
#include "base/text-io.h"

namespace waveclass {

std::vector<SyntheticClassSpec> DefaultSyntheticClasses() {
  std::vector<SyntheticClassSpec> classes(6);
  classes[0] = {"p0", 110.0, 500.0, 1500.0, 220.0, 0.05, false};
  classes[1] = {"p1", 135.0, 750.0, 1150.0, 220.0, 0.05, false};
  classes[2] = {"p2", 170.0, 420.0, 2200.0, 240.0, 0.08, false};
  classes[3] = {"p3", 215.0, 900.0, 2600.0, 240.0, 0.08, false};
  classes[4] = {"p4", 270.0, 1200.0, 3100.0, 260.0, 0.12, false};
  classes[5] = {"p5", 150.0, 2500.0, 4500.0, 600.0, 0.90, true};
  return classes;
}

namespace {

double Envelope(const SyntheticClassSpec &spec, double freq) {
  auto resonance = [&](double center) {
    double z = (freq - center) / spec.bandwidth_hz;
    return 1.0 / (1.0 + z * z);
  };
  double tilt = std::pow(100.0 / (freq + 100.0), 0.3);
  return (resonance(spec.formant1_hz) + resonance(spec.formant2_hz) + 0.02) *
         tilt;
}

std::vector<double> SynthesizePhone(const SyntheticClassSpec &spec,
                                    int duration, double rate, Rng &rng) {
  std::vector<double> out(duration, 0.0);
  double f0 = spec.f0_hz * (1.0 + 0.0);  // jitter applied by caller via spec copy
  if (!spec.fricative) {
    int max_harmonic = static_cast<int>(0.45 * rate / f0);
    for (int h = 1; h <= max_harmonic; ++h) {
      double freq = h * f0;
      double amp = Envelope(spec, freq);
      if (amp < 1e-4) continue;
      double phase = 2.0 * kPi * rng.Uniform();
      double omega = 2.0 * kPi * freq / rate;
      for (int t = 0; t < duration; ++t)
        out[t] += amp * std::sin(omega * t + phase);
    }
  }
  if (spec.noise_level > 0.0) {
    // Shaped noise: first difference high-passes, then the envelope at the
    // second formant sets the level.
    double prev = rng.Gaussian();
    double level = spec.noise_level * (spec.fricative ? 1.0 : 0.5);
    for (int t = 0; t < duration; ++t) {
      double cur = rng.Gaussian();
      out[t] += level * (spec.fricative ? (cur - prev) : cur);
      prev = cur;
    }
  }
  // Raised-cosine fades against clicks at the segment edges.
  int fade = std::min(duration / 4, static_cast<int>(0.005 * rate));
  for (int t = 0; t < fade; ++t) {
    double g = 0.5 * (1.0 - std::cos(kPi * t / fade));
    out[t] *= g;
    out[duration - 1 - t] *= g;
  }
  double ms = MeanSquare(out);
  if (ms > 0.0) {
    double scale = 1.0 / std::sqrt(ms);
    for (double &v : out) v *= scale;
  }
  return out;
}

LabeledSentence MakeSentence(const SyntheticCorpusOptions &options,
                             const std::vector<SyntheticClassSpec> &classes,
                             const std::string &sid, Rng &rng,
                             std::vector<double> *wave_out) {
  LabeledSentence sentence;
  sentence.sentence_id = sid;
  std::vector<double> wave;
  auto gap = [&](int64_t &cursor) {
    int len = options.min_gap_samples +
              static_cast<int>(rng.UniformInt(options.max_gap_samples -
                                              options.min_gap_samples + 1));
    if (options.label_gaps_as_sil)
      sentence.intervals.push_back({"sil", cursor, cursor + len});
    wave.resize(wave.size() + len, 0.0);
    cursor += len;
  };

  int64_t cursor = 0;
  gap(cursor);
  for (int p = 0; p < options.phones_per_sentence; ++p) {
    const SyntheticClassSpec &base =
        classes[static_cast<size_t>(rng.UniformInt(classes.size()))];
    SyntheticClassSpec spec = base;
    spec.f0_hz *= 1.0 + options.f0_jitter * (2.0 * rng.Uniform() - 1.0);
    int duration =
        options.min_phone_samples +
        static_cast<int>(rng.UniformInt(options.max_phone_samples -
                                        options.min_phone_samples + 1));
    std::vector<double> phone = SynthesizePhone(spec, duration, options.rate, rng);
    double gain_db = options.gain_jitter_db * (2.0 * rng.Uniform() - 1.0);
    double gain = std::pow(10.0, gain_db / 20.0);
    for (double &v : phone) v *= gain;
    sentence.intervals.push_back({base.name, cursor, cursor + duration});
    wave.insert(wave.end(), phone.begin(), phone.end());
    cursor += duration;
    gap(cursor);
  }
  if (options.floor_level > 0.0)
    for (double &v : wave) v += options.floor_level * rng.Gaussian();
  sentence.num_samples = static_cast<int64_t>(wave.size());
  *wave_out = std::move(wave);
  return sentence;
}

}  // namespace

SyntheticCorpus MakeSyntheticCorpus(const SyntheticCorpusOptions &options) {
  SyntheticCorpus corpus;
  std::vector<SyntheticClassSpec> classes =
      options.classes.empty() ? DefaultSyntheticClasses() : options.classes;

  std::vector<std::string> names;
  for (const auto &c : classes) names.push_back(c.name);
  if (options.label_gaps_as_sil) names.push_back("sil");
  corpus.class_map = ClassMap::Identity(names);

  auto build = [&](const std::string &prefix, int count,
                   std::vector<LabeledSentence> *labels,
                   std::map<std::string, SentenceWaveform> *waves) {
    for (int s = 0; s < count; ++s) {
      char sid[32];
      std::snprintf(sid, sizeof(sid), "%s%04d", prefix.c_str(), s);
      Rng rng(DeriveSeed(options.seed, std::string("synth/") + sid));
      std::vector<double> samples;
      LabeledSentence sentence =
          MakeSentence(options, classes, sid, rng, &samples);
      SentenceWaveform wave;
      wave.sentence_id = sid;
      wave.rate = options.rate;
      wave.samples = std::move(samples);
      (*waves)[sid] = Normalized(wave);
      labels->push_back(std::move(sentence));
    }
  };
  build("tr", options.train_sentences, &corpus.train_labels,
        &corpus.train_waves);
  build("te", options.test_sentences, &corpus.test_labels, &corpus.test_waves);
  return corpus;
}

void WriteSyntheticCorpus(const SyntheticCorpus &corpus,
                          const std::string &dir) {
  auto write_split = [&](const std::vector<LabeledSentence> &labels,
                         const std::map<std::string, SentenceWaveform> &waves,
                         const std::string &list_name) {
    std::ostringstream list;
    for (const auto &sentence : labels) {
      const SentenceWaveform &wave = waves.at(sentence.sentence_id);
      // Peak-scale for 16-bit output; energy renormalization on read undoes it.
      double peak = 1e-9;
      for (double v : wave.samples) peak = std::max(peak, std::abs(v));
      std::vector<double> scaled(wave.samples);
      for (double &v : scaled) v *= 0.9 / peak;
      WritePcm16Wave(dir + "/" + sentence.sentence_id + ".wav", scaled,
                     static_cast<int>(wave.rate));
      std::ostringstream phn;
      for (const auto &iv : sentence.intervals)
        phn << iv.start << " " << iv.end << " " << iv.label << "\n";
      WriteFile(dir + "/" + sentence.sentence_id + ".phn", phn.str());
      list << sentence.sentence_id << "\n";
    }
    WriteFile(dir + "/" + list_name, list.str());
  };
  write_split(corpus.train_labels, corpus.train_waves, "train.list");
  write_split(corpus.test_labels, corpus.test_waves, "test.list");

  std::ostringstream fold;
  fold << "# identity folding for the synthetic corpus\n";
  for (const auto &g : corpus.class_map.Groups48()) fold << g << " " << g << "\n";
  WriteFile(dir + "/fold48.txt", fold.str());
  WriteFile(dir + "/fold39.txt", fold.str());
}

}  // namespace waveclass
