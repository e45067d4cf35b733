// Copyright 2026 The postsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "postsim/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace postsim {

char fault_letter(uint8_t code) {
  static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  return kLetters[code & 3];
}

uint8_t fault_code(char letter) {
  switch (letter) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
  }
  throw std::invalid_argument(std::string("bad fault letter '") + letter + "'");
}

double LocationModel::total() const {
  double t = 0;
  for (const auto &[f, p] : faults) {
    t += p;
  }
  return t;
}

namespace {

LocationModel uniform_1q(double eps) {
  LocationModel m;
  for (uint8_t p = 1; p <= 3; p++) {
    m.faults.push_back({{p, 0}, eps / 3.0});
  }
  return m;
}

LocationModel uniform_2q(double eps) {
  LocationModel m;
  for (uint8_t p0 = 0; p0 <= 3; p0++) {
    for (uint8_t p1 = 0; p1 <= 3; p1++) {
      if (p0 == 0 && p1 == 0) {
        continue;
      }
      m.faults.push_back({{p0, p1}, eps / 15.0});
    }
  }
  return m;
}

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("error parameter out of [0,1]: " + std::to_string(eps));
  }
}

}  // namespace

ErrorModel ErrorModel::depolarizing(const Circuit &c, double eps) {
  check_eps(eps);
  ErrorModel m;
  for (const auto &loc : error_locations(c)) {
    m.locations.push_back(loc.arity == 2 ? uniform_2q(eps) : uniform_1q(eps));
  }
  return m;
}

ErrorModel ErrorModel::prepy_twirled(const Circuit &c, double p) {
  check_eps(p);
  ErrorModel m;
  for (const auto &loc : error_locations(c)) {
    LocationModel lm;
    if (loc.kind == GateKind::PrepY && p > 0) {
      lm.faults.push_back({{fault_code('X'), 0}, p});
    }
    m.locations.push_back(std::move(lm));
  }
  return m;
}

ErrorModel ErrorModel::preph_twirled(const Circuit &c, double p) {
  check_eps(p);
  ErrorModel m;
  for (const auto &loc : error_locations(c)) {
    LocationModel lm;
    if (loc.kind == GateKind::PrepH && p > 0) {
      lm.faults.push_back({{fault_code('Y'), 0}, p});
    }
    m.locations.push_back(std::move(lm));
  }
  return m;
}

ErrorModel ErrorModel::noiseless(const Circuit &c) {
  ErrorModel m;
  m.locations.resize(error_locations(c).size());
  return m;
}

ErrorModel ErrorModel::from_class_table(const Circuit &c, const ClassTable &table) {
  auto build = [](const std::vector<std::pair<std::string, double>> &entries, int arity) {
    LocationModel lm;
    for (const auto &[letters, prob] : entries) {
      if (static_cast<int>(letters.size()) != arity) {
        throw std::invalid_argument("fault '" + letters + "' has wrong arity");
      }
      Fault f;
      f.p0 = fault_code(letters[0]);
      if (arity == 2) {
        f.p1 = fault_code(letters[1]);
      }
      lm.faults.push_back({f, prob});
    }
    if (lm.total() > 1.0 + 1e-12) {
      throw std::invalid_argument("location fault probabilities exceed 1");
    }
    return lm;
  };
  ErrorModel m;
  for (const auto &loc : error_locations(c)) {
    switch (loc.kind) {
      case GateKind::PrepZ:
      case GateKind::PrepX:
      case GateKind::PrepY:
      case GateKind::PrepH:
        m.locations.push_back(build(table.prep, 1));
        break;
      case GateKind::H:
        m.locations.push_back(build(table.h, 1));
        break;
      case GateKind::CNOT:
        m.locations.push_back(build(table.cnot, 2));
        break;
      case GateKind::MeasZ:
      case GateKind::MeasX:
      case GateKind::MeasZPost:
      case GateKind::MeasXPost:
        m.locations.push_back(build(table.meas, 1));
        break;
      case GateKind::Delay:
        m.locations.push_back(build(table.delay, 1));
        break;
      case GateKind::LogicalSwap:
        break;
    }
  }
  return m;
}

double FaultPattern::probability(const ErrorModel &model) const {
  double p = 1.0;
  std::vector<bool> hit(model.locations.size(), false);
  for (const auto &[id, f] : faults) {
    const auto &lm = model.locations.at(id);
    double q = 0;
    for (const auto &[mf, mp] : lm.faults) {
      if (mf == f) {
        q = mp;
        break;
      }
    }
    p *= q;
    hit[id] = true;
  }
  for (size_t id = 0; id < model.locations.size(); id++) {
    if (!hit[id]) {
      p *= 1.0 - model.locations[id].total();
    }
  }
  return p;
}

FaultPattern sample_faults(const ErrorModel &model, std::mt19937_64 &rng) {
  FaultPattern pat;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (uint32_t id = 0; id < model.locations.size(); id++) {
    double u = unif(rng);  // one draw per location, always
    double acc = 0;
    for (const auto &[f, p] : model.locations[id].faults) {
      acc += p;
      if (u < acc) {
        pat.faults.push_back({id, f});
        break;
      }
    }
  }
  return pat;
}

namespace {
size_t alphabet_size(const ErrorLocation &loc) { return loc.arity == 2 ? 15 : 3; }

Fault alphabet_at(const ErrorLocation &loc, size_t k) {
  if (loc.arity == 1) {
    return {static_cast<uint8_t>(k + 1), 0};
  }
  size_t v = k + 1;  // 1..15 over base-4 pairs
  return {static_cast<uint8_t>(v >> 2), static_cast<uint8_t>(v & 3)};
}
}  // namespace

double count_patterns(const std::vector<ErrorLocation> &locs, int max_weight) {
  // sum over weights of e_w(a_1..a_L), the elementary symmetric polynomial in
  // the per-location alphabet sizes; computed by the usual DP.
  std::vector<double> e(max_weight + 1, 0.0);
  e[0] = 1.0;
  for (const auto &loc : locs) {
    double a = double(alphabet_size(loc));
    for (int w = max_weight; w >= 1; w--) {
      e[w] += e[w - 1] * a;
    }
  }
  double total = 0;
  for (double v : e) {
    total += v;
  }
  return total;
}

void for_each_pattern(const std::vector<ErrorLocation> &locs, int max_weight,
                      const std::function<void(const FaultPattern &)> &fn, double budget) {
  double count = count_patterns(locs, max_weight);
  if (count > budget) {
    throw std::runtime_error("pattern enumeration budget exceeded: " + std::to_string(count) +
                             " > " + std::to_string(budget));
  }
  // Each node of this tree is one pattern; ordered location indices make the
  // visit unique.
  FaultPattern pat;
  std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
    fn(pat);
    if (remaining == 0) {
      return;
    }
    for (size_t i = start; i < locs.size(); i++) {
      for (size_t k = 0; k < alphabet_size(locs[i]); k++) {
        pat.faults.push_back({locs[i].id, alphabet_at(locs[i], k)});
        rec(i + 1, remaining - 1);
        pat.faults.pop_back();
      }
    }
  };
  rec(0, max_weight);
}

PauliProduct fault_operator(size_t n, const ErrorLocation &loc, const Fault &f, uint32_t col0,
                            uint32_t col1) {
  PauliProduct p = PauliProduct::identity(n);
  if (f.p0) {
    p *= PauliProduct::single(n, col0, fault_letter(f.p0));
  }
  if (loc.arity == 2 && f.p1) {
    p *= PauliProduct::single(n, col1, fault_letter(f.p1));
  }
  return p;
}

}  // namespace postsim
