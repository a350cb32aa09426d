// Copyright 2026 The orbitdim Authors
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

// Prints D1/D2/D3 for a handful of states, including a five-qubit W state
// that has no tabulated reference.

#include <iostream>

#include "orbitdim/orbitdim.hpp"

int main() {
    using namespace orbitdim;
    const SamplingOptions sampling{5, 9, 2026};
    for (const char* name : {"Bell", "GHZ3", "W3", "chi4", "A-GHZ", "W5"}) {
        const auto state = corpus(name);
        const auto dims = class_dimensions(state.ket, sampling);
        std::cout << name << "  " << format_ket(state.ket) << "  D1=" << dims.d1 << " D2=" << dims.d2
                  << " D3=" << dims.d3 << " W1=" << witness_w1(state.ket) << '\n';
    }
}
