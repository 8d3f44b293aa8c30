// frontend/wave-io.cc

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

#include "frontend/wave-io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "base/error.h"
#include "base/math-util.h"
#include "base/text-io.h"

namespace waveclass {

namespace {

constexpr double kInt16Scale = 32768.0;

uint32_t ReadU32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

std::vector<unsigned char> ReadBinary(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return bytes;
}

std::vector<double> DecodePcm16(const unsigned char *p, size_t n_bytes) {
  std::vector<double> samples(n_bytes / 2);
  for (size_t i = 0; i < samples.size(); ++i) {
    int16_t v = static_cast<int16_t>(p[2 * i] | (p[2 * i + 1] << 8));
    samples[i] = static_cast<double>(v) / kInt16Scale;
  }
  return samples;
}

std::string StemId(const std::string &path) {
  size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

// NIST SPHERE (TIMIT distribution format): 1024-byte ASCII header of
// "key type value" lines, then PCM samples.
SentenceWaveform ReadSphere(const std::vector<unsigned char> &bytes,
                            const std::string &path, SentenceWaveform out) {
  if (bytes.size() < 1024) throw ParseError("truncated SPHERE header: " + path);
  std::string header(reinterpret_cast<const char *>(bytes.data()), 1024);
  auto field = [&](const std::string &key) -> std::string {
    size_t pos = header.find("\n" + key + " ");
    if (pos == std::string::npos) return "";
    size_t start = header.find(' ', pos + 1);        // after key
    start = header.find(' ', start + 1);             // after type
    size_t end = header.find('\n', start + 1);
    std::string value = header.substr(start + 1, end - start - 1);
    while (!value.empty() && value.front() == ' ') value.erase(value.begin());
    return value;
  };
  std::string rate = field("sample_rate");
  std::string channels = field("channel_count");
  std::string nbytes = field("sample_n_bytes");
  std::string order = field("sample_byte_format");
  if (rate.empty()) throw ParseError("SPHERE header missing sample_rate: " + path);
  if (!channels.empty() && channels != "1")
    throw ValidationError("expected mono SPHERE file: " + path);
  if (!nbytes.empty() && nbytes != "2")
    throw ValidationError("expected 16-bit SPHERE file: " + path);
  bool big_endian = order == "10";

  out.rate = std::strtod(rate.c_str(), nullptr);
  size_t n = (bytes.size() - 1024) / 2;
  out.samples.resize(n);
  const unsigned char *p = bytes.data() + 1024;
  for (size_t i = 0; i < n; ++i) {
    int16_t v = big_endian
                    ? static_cast<int16_t>((p[2 * i] << 8) | p[2 * i + 1])
                    : static_cast<int16_t>(p[2 * i] | (p[2 * i + 1] << 8));
    out.samples[i] = static_cast<double>(v) / kInt16Scale;
  }
  return out;
}

}  // namespace

std::vector<double> NormalizeEnergy(std::span<const double> x) {
  if (x.empty()) throw ValidationError("NormalizeEnergy: empty signal");
  double ms = MeanSquare(x);
  if (ms <= 0.0) throw ValidationError("NormalizeEnergy: degenerate signal");
  double scale = 1.0 / std::sqrt(ms);
  std::vector<double> out(x.begin(), x.end());
  for (double &v : out) v *= scale;
  return out;
}

SentenceWaveform Normalized(const SentenceWaveform &s) {
  SentenceWaveform out = s;
  out.samples = NormalizeEnergy(s.samples);
  out.normalized = true;
  return out;
}

SentenceWaveform ReadWaveFile(const std::string &path) {
  SentenceWaveform out;
  out.sentence_id = StemId(path);

  if (path.size() > 4 && path.substr(path.size() - 4) == ".raw") {
    std::vector<std::string> lines = ReadFileLines(path + ".rate");
    if (lines.empty()) throw ParseError("empty rate sidecar: " + path + ".rate");
    out.rate = static_cast<double>(ParseInt(SplitTokens(lines[0]).at(0),
                                            path + ".rate"));
    std::vector<unsigned char> bytes = ReadBinary(path);
    out.samples = DecodePcm16(bytes.data(), bytes.size());
    return out;
  }

  std::vector<unsigned char> bytes = ReadBinary(path);
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), "NIST_1A", 7) == 0)
    return ReadSphere(bytes, path, out);
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw ParseError("not a RIFF/WAVE file: " + path);

  size_t pos = 12;
  bool have_fmt = false;
  uint16_t channels = 0, bits = 0;
  uint32_t rate = 0;
  while (pos + 8 <= bytes.size()) {
    const unsigned char *chunk = bytes.data() + pos;
    uint32_t chunk_size = ReadU32(chunk + 4);
    const unsigned char *body = chunk + 8;
    if (pos + 8 + chunk_size > bytes.size())
      throw ParseError("truncated chunk in " + path);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw ParseError("short fmt chunk in " + path);
      uint16_t format = ReadU16(body);
      channels = ReadU16(body + 2);
      rate = ReadU32(body + 4);
      bits = ReadU16(body + 14);
      if (format != 1 || channels != 1 || bits != 16)
        throw ValidationError("expected 16-bit PCM mono: " + path);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) throw ParseError("data chunk before fmt in " + path);
      out.rate = static_cast<double>(rate);
      out.samples = DecodePcm16(body, chunk_size);
      return out;
    }
    pos += 8 + chunk_size + (chunk_size & 1);
  }
  throw ParseError("no data chunk in " + path);
}

void WritePcm16Wave(const std::string &path, std::span<const double> samples,
                    int rate) {
  std::vector<unsigned char> bytes;
  uint32_t data_size = static_cast<uint32_t>(samples.size() * 2);
  auto push_u32 = [&](uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes.push_back((v >> (8 * i)) & 0xff);
  };
  auto push_u16 = [&](uint16_t v) {
    bytes.push_back(v & 0xff);
    bytes.push_back((v >> 8) & 0xff);
  };
  auto push_tag = [&](const char *tag) {
    bytes.insert(bytes.end(), tag, tag + 4);
  };
  push_tag("RIFF");
  push_u32(36 + data_size);
  push_tag("WAVE");
  push_tag("fmt ");
  push_u32(16);
  push_u16(1);  // PCM
  push_u16(1);  // mono
  push_u32(static_cast<uint32_t>(rate));
  push_u32(static_cast<uint32_t>(rate) * 2);
  push_u16(2);
  push_u16(16);
  push_tag("data");
  push_u32(data_size);
  for (double v : samples) {
    double clamped = std::clamp(v, -1.0, 1.0);
    int16_t s = static_cast<int16_t>(std::lround(clamped * 32767.0));
    push_u16(static_cast<uint16_t>(s));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write: " + path);
}

}  // namespace waveclass
