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

#include "postsim/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace postsim {

bool is_measurement(GateKind k) {
  return k == GateKind::MeasZ || k == GateKind::MeasX || k == GateKind::MeasZPost ||
         k == GateKind::MeasXPost;
}

bool is_postselected(GateKind k) {
  return k == GateKind::MeasZPost || k == GateKind::MeasXPost;
}

bool is_preparation(GateKind k) {
  return k == GateKind::PrepZ || k == GateKind::PrepX || k == GateKind::PrepY ||
         k == GateKind::PrepH;
}

const char *gate_name(GateKind k) {
  switch (k) {
    case GateKind::PrepZ: return "PREPZ";
    case GateKind::PrepX: return "PREPX";
    case GateKind::PrepY: return "PREPY";
    case GateKind::PrepH: return "PREPH";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::MeasZ: return "MEASZ";
    case GateKind::MeasX: return "MEASX";
    case GateKind::MeasZPost: return "MEASZ+";
    case GateKind::MeasXPost: return "MEASX+";
    case GateKind::LogicalSwap: return "LSWAP";
    case GateKind::Delay: return "DELAY";
  }
  return "?";
}

void Circuit::append_packed(const Gate &g) {
  auto touches = [&](const Gate &o, uint32_t q) {
    return o.a == q || (o.two_qubit() && o.b == q);
  };
  if (!steps.empty()) {
    bool free_here = true;
    for (const auto &o : steps.back()) {
      if (touches(o, g.a) || (g.two_qubit() && touches(o, g.b))) {
        free_here = false;
        break;
      }
    }
    if (free_here) {
      steps.back().push_back(g);
      return;
    }
  }
  steps.push_back({g});
}

size_t Circuit::gate_count() const {
  size_t c = 0;
  for (const auto &s : steps) {
    c += s.size();
  }
  return c;
}

std::vector<Violation> validate(const Circuit &c) {
  std::vector<Violation> out;
  enum class WireState { Fresh, Active, Measured };
  std::vector<WireState> state(c.n, WireState::Fresh);

  for (size_t si = 0; si < c.steps.size(); si++) {
    std::vector<uint32_t> used;
    for (const auto &g : c.steps[si]) {
      uint32_t qs[2] = {g.a, g.b};
      size_t nq = g.two_qubit() ? 2 : 1;
      for (size_t i = 0; i < nq; i++) {
        if (qs[i] >= c.n) {
          out.push_back({si, qs[i], "label out of range"});
        }
      }
      if (g.kind == GateKind::CNOT && g.a == g.b) {
        out.push_back({si, g.a, "cnot control equals target"});
      }
      for (size_t i = 0; i < nq; i++) {
        if (std::find(used.begin(), used.end(), qs[i]) != used.end()) {
          out.push_back({si, qs[i], "two gates touch the qubit in one timestep"});
        }
        used.push_back(qs[i]);
      }
      if (qs[0] >= c.n || (nq == 2 && qs[1] >= c.n)) {
        continue;
      }
      switch (g.kind) {
        case GateKind::PrepZ:
        case GateKind::PrepX:
        case GateKind::PrepY:
        case GateKind::PrepH:
          if (state[g.a] == WireState::Active) {
            out.push_back({si, g.a, "preparation on an active unmeasured qubit"});
          }
          state[g.a] = WireState::Active;
          break;
        case GateKind::H:
        case GateKind::Delay:
          if (state[g.a] != WireState::Active) {
            out.push_back({si, g.a, "gate on an unprepared or measured qubit"});
          }
          break;
        case GateKind::CNOT:
          for (uint32_t q : {g.a, g.b}) {
            if (state[q] != WireState::Active) {
              out.push_back({si, q, "cnot on an unprepared or measured qubit"});
            }
          }
          break;
        case GateKind::MeasZ:
        case GateKind::MeasX:
        case GateKind::MeasZPost:
        case GateKind::MeasXPost:
          if (state[g.a] != WireState::Active) {
            out.push_back({si, g.a, "measurement on an unprepared or measured qubit"});
          }
          state[g.a] = WireState::Measured;
          break;
        case GateKind::LogicalSwap:
          std::swap(state[g.a], state[g.b]);
          break;
      }
    }
  }
  return out;
}

int depth(const Circuit &c) {
  int d = 0;
  for (const auto &s : c.steps) {
    for (const auto &g : s) {
      if (g.kind != GateKind::LogicalSwap) {
        d++;
        break;
      }
    }
  }
  return d;
}

std::vector<ErrorLocation> error_locations(const Circuit &c) {
  std::vector<ErrorLocation> out;
  for (size_t si = 0; si < c.steps.size(); si++) {
    // Deterministic order within a step: by first wire label.
    std::vector<uint32_t> idx(c.steps[si].size());
    for (uint32_t i = 0; i < idx.size(); i++) {
      idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(), [&](uint32_t l, uint32_t r) {
      return c.steps[si][l].a < c.steps[si][r].a;
    });
    for (uint32_t gi : idx) {
      const Gate &g = c.steps[si][gi];
      if (g.kind == GateKind::LogicalSwap) {
        continue;
      }
      ErrorLocation loc;
      loc.id = static_cast<uint32_t>(out.size());
      loc.step = static_cast<uint32_t>(si);
      loc.gate_index = gi;
      loc.kind = g.kind;
      loc.q0 = g.a;
      loc.q1 = g.kind == GateKind::CNOT ? g.b : g.a;
      loc.arity = g.kind == GateKind::CNOT ? 2 : 1;
      loc.before = is_measurement(g.kind);
      out.push_back(loc);
    }
  }
  return out;
}

std::string to_text(const Circuit &c) {
  std::ostringstream os;
  os << "qubits " << c.n << "\n";
  for (const auto &s : c.steps) {
    bool first = true;
    for (const auto &g : s) {
      if (!first) {
        os << " | ";
      }
      first = false;
      os << gate_name(g.kind) << ' ' << g.a;
      if (g.two_qubit()) {
        os << ' ' << g.b;
      }
      if (is_postselected(g.kind) && g.post_sign < 0) {
        os << " -";
      }
    }
    os << "\n";
  }
  return os.str();
}

Circuit from_text(const std::string &text) {
  std::istringstream is(text);
  std::string line;
  Circuit c;
  bool have_header = false;
  static const std::map<std::string, GateKind> kNames = {
      {"PREPZ", GateKind::PrepZ},   {"PREPX", GateKind::PrepX},
      {"PREPY", GateKind::PrepY},   {"PREPH", GateKind::PrepH},
      {"H", GateKind::H},           {"CNOT", GateKind::CNOT},
      {"MEASZ", GateKind::MeasZ},   {"MEASX", GateKind::MeasX},
      {"MEASZ+", GateKind::MeasZPost}, {"MEASX+", GateKind::MeasXPost},
      {"LSWAP", GateKind::LogicalSwap}, {"DELAY", GateKind::Delay},
  };
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (!have_header) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw >> c.n;
      if (kw != "qubits") {
        throw std::invalid_argument("circuit text must start with 'qubits N'");
      }
      have_header = true;
      continue;
    }
    std::vector<Gate> step;
    std::istringstream ls(line);
    std::string chunk;
    std::vector<std::string> tokens;
    while (ls >> chunk) {
      tokens.push_back(chunk);
    }
    size_t i = 0;
    while (i < tokens.size()) {
      if (tokens[i] == "|") {
        i++;
        continue;
      }
      auto it = kNames.find(tokens[i]);
      if (it == kNames.end()) {
        throw std::invalid_argument("unknown gate '" + tokens[i] + "'");
      }
      Gate g;
      g.kind = it->second;
      i++;
      g.a = static_cast<uint32_t>(std::stoul(tokens.at(i++)));
      if (g.two_qubit()) {
        g.b = static_cast<uint32_t>(std::stoul(tokens.at(i++)));
      }
      if (is_postselected(g.kind) && i < tokens.size() && tokens[i] == "-") {
        g.post_sign = -1;
        i++;
      }
      step.push_back(g);
    }
    c.steps.push_back(std::move(step));
  }
  return c;
}

Circuit without_logical_swaps(const Circuit &c) {
  Circuit out;
  out.n = c.n;
  std::vector<uint32_t> map(c.n);
  for (uint32_t q = 0; q < c.n; q++) {
    map[q] = q;
  }
  for (const auto &s : c.steps) {
    std::vector<Gate> step;
    for (const auto &g : s) {
      if (g.kind == GateKind::LogicalSwap) {
        std::swap(map[g.a], map[g.b]);
        continue;
      }
      Gate r = g;
      r.a = map[g.a];
      if (r.two_qubit()) {
        r.b = map[g.b];
      }
      step.push_back(r);
    }
    if (!step.empty() || s.empty()) {
      out.steps.push_back(std::move(step));
    }
  }
  return out;
}

}  // namespace postsim
